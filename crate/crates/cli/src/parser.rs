//! Recursive-descent parser for sessions.

use k2slot_core::funcfield::RationalFunction;
use k2slot_core::gf::{FieldSpec, Fq};
use k2slot_core::k2::{K2Element, Symbol2};
use k2slot_core::local2d::{BivariatePoly, FactoredBivariate, LocalSymbol};

use crate::ast::{Command, FieldDecl, Session, Tower};
use crate::error::{CliError, Pos};
use crate::lexer::{lex, Tok, Token};

/// Largest exponent accepted after `^`.
const MAX_EXPONENT: u64 = 4096;

pub fn parse(input: &str) -> Result<Session, CliError> {
    let tokens = lex(input)?;
    let mut p = Parser { tokens, at: 0 };
    let (decl, spec) = p.field_decl()?;
    p.expect(';')?;
    let gen = decl.gen().to_string();
    let mut commands = Vec::new();
    let mut positions = Vec::new();
    while p.peek() != &Tok::Eof {
        positions.push(p.pos());
        commands.push(p.command(&spec, &gen)?);
        p.expect(';')?;
    }
    Ok(Session {
        decl,
        spec,
        commands,
        positions,
    })
}

#[derive(Clone, Debug)]
enum Expr {
    Int(u64),
    Var(String, Pos),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, i64, Pos),
}

/// Interpretation of expressions in one of the value domains.
trait Domain {
    type V: Clone;
    fn int(&self, n: u64) -> Self::V;
    fn var(&self, name: &str, pos: Pos) -> Result<Self::V, CliError>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn sub(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn div(&self, a: &Self::V, b: &Self::V, pos: Pos) -> Result<Self::V, CliError>;
    fn pow(&self, a: &Self::V, e: i64, pos: Pos) -> Result<Self::V, CliError>;

    fn eval(&self, e: &Expr) -> Result<Self::V, CliError> {
        Ok(match e {
            Expr::Int(n) => self.int(*n),
            Expr::Var(name, pos) => self.var(name, *pos)?,
            Expr::Add(a, b) => self.add(&self.eval(a)?, &self.eval(b)?),
            Expr::Sub(a, b) => self.sub(&self.eval(a)?, &self.eval(b)?),
            Expr::Neg(a) => self.sub(&self.int(0), &self.eval(a)?),
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?),
            Expr::Div(a, b, pos) => self.div(&self.eval(a)?, &self.eval(b)?, *pos)?,
            Expr::Pow(a, n, pos) => self.pow(&self.eval(a)?, *n, *pos)?,
        })
    }
}

fn int_in(k: &FieldSpec, n: u64) -> Fq {
    k.from_int((n % k.p() as u64) as i64)
}

fn unknown_var(name: &str, pos: Pos, allowed: &[&str]) -> CliError {
    CliError::semantic(
        pos,
        format!("unknown variable `{name}`; expected one of {}", allowed.join(", ")),
    )
}

/// Elements of `F_q(t)`.
struct Rational<'a> {
    k: &'a FieldSpec,
    gen: &'a str,
}

impl Domain for Rational<'_> {
    type V = RationalFunction;
    fn int(&self, n: u64) -> RationalFunction {
        RationalFunction::constant(int_in(self.k, n))
    }
    fn var(&self, name: &str, pos: Pos) -> Result<RationalFunction, CliError> {
        if name == "t" {
            Ok(RationalFunction::t())
        } else if name == self.gen && self.k.e() > 1 {
            Ok(RationalFunction::constant(self.k.gen_u()))
        } else {
            Err(unknown_var(name, pos, &["t", self.gen]))
        }
    }
    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.add(b, self.k)
    }
    fn sub(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.sub(b, self.k)
    }
    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.mul(b, self.k)
    }
    fn div(&self, a: &RationalFunction, b: &RationalFunction, pos: Pos) -> Result<RationalFunction, CliError> {
        a.div(b, self.k).map_err(|e| CliError::semantic(pos, e.to_string()))
    }
    fn pow(&self, a: &RationalFunction, e: i64, pos: Pos) -> Result<RationalFunction, CliError> {
        a.pow(e, self.k).map_err(|e| CliError::semantic(pos, e.to_string()))
    }
}

/// Elements of `F_q`.
struct Constant<'a> {
    k: &'a FieldSpec,
    gen: &'a str,
}

impl Domain for Constant<'_> {
    type V = Fq;
    fn int(&self, n: u64) -> Fq {
        int_in(self.k, n)
    }
    fn var(&self, name: &str, pos: Pos) -> Result<Fq, CliError> {
        if name == self.gen && self.k.e() > 1 {
            Ok(self.k.gen_u())
        } else {
            Err(unknown_var(name, pos, &[self.gen]))
        }
    }
    fn add(&self, a: &Fq, b: &Fq) -> Fq {
        self.k.add(*a, *b)
    }
    fn sub(&self, a: &Fq, b: &Fq) -> Fq {
        self.k.sub(*a, *b)
    }
    fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        self.k.mul(*a, *b)
    }
    fn div(&self, a: &Fq, b: &Fq, pos: Pos) -> Result<Fq, CliError> {
        Ok(self.k.mul(
            *a,
            self.k.try_inv(*b).map_err(|e| CliError::semantic(pos, e.to_string()))?,
        ))
    }
    fn pow(&self, a: &Fq, e: i64, pos: Pos) -> Result<Fq, CliError> {
        if a.is_zero() && e < 0 {
            return Err(CliError::semantic(pos, "ZeroElement"));
        }
        Ok(self.k.pow_i(*a, e))
    }
}

/// Elements of `F_q[x, y]`.
struct Bivariate<'a> {
    k: &'a FieldSpec,
    gen: &'a str,
}

impl Domain for Bivariate<'_> {
    type V = BivariatePoly;
    fn int(&self, n: u64) -> BivariatePoly {
        BivariatePoly::constant(int_in(self.k, n))
    }
    fn var(&self, name: &str, pos: Pos) -> Result<BivariatePoly, CliError> {
        match name {
            "x" => Ok(BivariatePoly::x()),
            "y" => Ok(BivariatePoly::y()),
            g if g == self.gen && self.k.e() > 1 => Ok(BivariatePoly::constant(self.k.gen_u())),
            _ => Err(unknown_var(name, pos, &["x", "y", self.gen])),
        }
    }
    fn add(&self, a: &BivariatePoly, b: &BivariatePoly) -> BivariatePoly {
        a.add(b, self.k)
    }
    fn sub(&self, a: &BivariatePoly, b: &BivariatePoly) -> BivariatePoly {
        a.sub(b, self.k)
    }
    fn mul(&self, a: &BivariatePoly, b: &BivariatePoly) -> BivariatePoly {
        a.mul(b, self.k)
    }
    fn div(&self, a: &BivariatePoly, b: &BivariatePoly, pos: Pos) -> Result<BivariatePoly, CliError> {
        match (b.is_constant(), b.at_origin()) {
            (true, c) if !c.is_zero() => Ok(a.scale(self.k.inv(c), self.k)),
            _ => Err(CliError::semantic(
                pos,
                "only division by nonzero constants is allowed here",
            )),
        }
    }
    fn pow(&self, a: &BivariatePoly, e: i64, pos: Pos) -> Result<BivariatePoly, CliError> {
        if e < 0 {
            return Err(CliError::semantic(pos, "negative exponent in a polynomial"));
        }
        Ok(a.pow(e as u32, self.k))
    }
}

/// Polynomials over `F_p` in the tower generator, as coefficient lists.
struct Modulus<'a> {
    p: u64,
    var: &'a str,
}

impl Modulus<'_> {
    fn trim(&self, mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
}

impl Domain for Modulus<'_> {
    type V = Vec<u64>;
    fn int(&self, n: u64) -> Vec<u64> {
        self.trim(vec![n % self.p])
    }
    fn var(&self, name: &str, pos: Pos) -> Result<Vec<u64>, CliError> {
        if name == self.var {
            Ok(vec![0, 1])
        } else {
            Err(unknown_var(name, pos, &[self.var]))
        }
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let n = a.len().max(b.len());
        let get = |v: &Vec<u64>, i| v.get(i).copied().unwrap_or(0);
        self.trim((0..n).map(|i| (get(a, i) + get(b, i)) % self.p).collect())
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let n = a.len().max(b.len());
        let get = |v: &Vec<u64>, i| v.get(i).copied().unwrap_or(0);
        self.trim((0..n).map(|i| (get(a, i) + self.p - get(b, i)) % self.p).collect())
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.trim(out)
    }
    fn div(&self, _: &Vec<u64>, _: &Vec<u64>, pos: Pos) -> Result<Vec<u64>, CliError> {
        Err(CliError::semantic(
            pos,
            "division is not allowed in a defining polynomial",
        ))
    }
    fn pow(&self, a: &Vec<u64>, e: i64, pos: Pos) -> Result<Vec<u64>, CliError> {
        if e < 0 {
            return Err(CliError::semantic(pos, "negative exponent in a polynomial"));
        }
        Ok((0..e).fold(vec![1], |acc, _| self.mul(&acc, a)))
    }
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.at].tok
    }

    fn peek2(&self) -> &Tok {
        &self.tokens[(self.at + 1).min(self.tokens.len() - 1)].tok
    }

    fn pos(&self) -> Pos {
        self.tokens[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T, CliError> {
        Err(CliError::Syntax {
            pos: self.pos(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Punct(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(&[&format!("`{c}`")])
        }
    }

    fn keyword(&mut self, options: &[&'static str]) -> Result<&'static str, CliError> {
        if let Tok::Ident(s) = self.peek() {
            if let Some(k) = options.iter().find(|k| **k == s.as_str()) {
                self.bump();
                return Ok(k);
            }
        }
        let quoted: Vec<String> = options.iter().map(|k| format!("`{k}`")).collect();
        let refs: Vec<&str> = quoted.iter().map(String::as_str).collect();
        self.error(&refs)
    }

    fn int(&mut self) -> Result<(u64, Pos), CliError> {
        let pos = self.pos();
        match self.peek() {
            &Tok::Int(n) => {
                self.bump();
                Ok((n, pos))
            }
            _ => self.error(&["an integer"]),
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), CliError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok((s, pos))
            }
            _ => self.error(&["an identifier"]),
        }
    }

    /// `GF(q)`.
    fn gf(&mut self) -> Result<(u64, Pos), CliError> {
        self.keyword(&["GF"])?;
        self.expect('(')?;
        let q = self.int()?;
        self.expect(')')?;
        Ok(q)
    }

    fn field_decl(&mut self) -> Result<(FieldDecl, FieldSpec), CliError> {
        self.keyword(&["field"])?;
        let (q, qpos) = self.gf()?;
        let tower = if self.eat('=') {
            let (p, ppos) = self.gf()?;
            if !is_prime(p) {
                return Err(CliError::semantic(
                    ppos,
                    format!("GF({p}) in a tower must be a prime field"),
                ));
            }
            self.expect('[')?;
            let (gen, gpos) = self.ident()?;
            if ["t", "x", "y", "m"].contains(&gen.as_str()) {
                return Err(CliError::semantic(
                    gpos,
                    format!("`{gen}` is reserved and cannot name a generator"),
                ));
            }
            self.expect(']')?;
            self.expect('/')?;
            self.expect('(')?;
            let mpos = self.pos();
            let e = self.expr()?;
            self.expect(')')?;
            let coeffs = Modulus { p, var: &gen }.eval(&e)?;
            let deg = coeffs.len().saturating_sub(1);
            if deg == 0 || (p as u128).checked_pow(deg as u32) != Some(q as u128) {
                return Err(CliError::semantic(
                    mpos,
                    format!("a defining polynomial for GF({q}) over GF({p}) must have degree log_{p}({q})"),
                ));
            }
            if coeffs[deg] != 1 {
                return Err(CliError::semantic(mpos, "the defining polynomial must be monic"));
            }
            Some(Tower {
                p,
                gen,
                modulus: coeffs.into_iter().map(|c| c as i64).collect(),
            })
        } else {
            None
        };
        self.keyword(&["m"])?;
        self.expect('=')?;
        let (m, mpos) = self.int()?;
        let (p, e) = match &tower {
            Some(t) => (t.p, t.modulus.len() as u32 - 1),
            None if is_prime(q) => (q, 1),
            None => {
                let hint = if prime_power(q).is_some() {
                    format!("GF({q}) needs an explicit tower GF(p)[u]/(f)")
                } else {
                    format!("{q} is not a prime power")
                };
                return Err(CliError::semantic(qpos, hint));
            }
        };
        if m < 2 || (q - 1) % m != 0 {
            return Err(CliError::semantic(
                mpos,
                format!("m = {m} must be at least 2 and divide q - 1 = {}", q - 1),
            ));
        }
        let modulus = tower.as_ref().map_or(vec![0, 1], |t| t.modulus.clone());
        let spec = FieldSpec::new(p, e, &modulus, m as u32).map_err(|e| CliError::semantic(qpos, e.to_string()))?;
        Ok((FieldDecl { q, tower, m: m as u32 }, spec))
    }

    fn command(&mut self, k: &FieldSpec, gen: &str) -> Result<Command, CliError> {
        match self.keyword(&["k2", "slot", "alg", "r2d"])? {
            "k2" => {
                let kind = self.keyword(&["residues", "zero", "reciprocity"])?;
                let alpha = self.k2expr(k, gen, &[',', '+'])?;
                Ok(match kind {
                    "residues" => Command::Residues(alpha),
                    "zero" => Command::Zero(alpha),
                    _ => Command::Reciprocity(alpha),
                })
            }
            "slot" => match self.keyword(&["find", "verify"])? {
                "find" => Ok(Command::SlotFind(self.k2list(k, gen)?)),
                _ => {
                    let pos = self.pos();
                    let f = Rational { k, gen }.eval(&self.expr()?)?;
                    if f.is_zero() {
                        return Err(CliError::semantic(pos, "ZeroFunction"));
                    }
                    Ok(Command::SlotVerify(f, self.k2list(k, gen)?))
                }
            },
            "alg" => {
                let kind = self.keyword(&["build", "split"])?;
                self.expect('(')?;
                let a = self.constant(k, gen)?;
                self.expect(',')?;
                let b = self.constant(k, gen)?;
                self.expect(')')?;
                Ok(if kind == "build" {
                    Command::AlgBuild(a, b)
                } else {
                    Command::AlgSplit(a, b)
                })
            }
            _ => match self.keyword(&["mult", "reciprocity"])? {
                "mult" => {
                    self.expect('(')?;
                    let ppos = self.pos();
                    let p = Bivariate { k, gen }.eval(&self.expr()?)?;
                    if p.is_constant() || !p.vanishes_at_origin() {
                        return Err(CliError::semantic(ppos, "NotThroughOrigin"));
                    }
                    self.expect(',')?;
                    let u = self.factored(k, gen)?;
                    self.expect(')')?;
                    Ok(Command::R2dMult(p, u))
                }
                _ => {
                    let mut syms = vec![self.local_symbol(k, gen)?];
                    while self.eat(',') {
                        syms.push(self.local_symbol(k, gen)?);
                    }
                    Ok(Command::R2dReciprocity(syms))
                }
            },
        }
    }

    fn constant(&mut self, k: &FieldSpec, gen: &str) -> Result<Fq, CliError> {
        let pos = self.pos();
        let c = Constant { k, gen }.eval(&self.expr()?)?;
        if c.is_zero() {
            return Err(CliError::semantic(pos, "ZeroParameter"));
        }
        Ok(c)
    }

    /// `[-] [INT "*"]` before a brace; returns the coefficient.
    fn coefficient(&mut self) -> Result<i64, CliError> {
        let sign = if self.eat('-') { -1 } else { 1 };
        if let Tok::Int(n) = *self.peek() {
            if self.peek2() == &Tok::Punct('*') {
                self.bump();
                self.bump();
                return Ok(sign * (n as i64));
            }
        }
        Ok(sign)
    }

    fn symbol(&mut self, k: &FieldSpec, gen: &str) -> Result<Symbol2, CliError> {
        let c = self.coefficient()?;
        self.expect('{')?;
        let apos = self.pos();
        let a = Rational { k, gen }.eval(&self.expr()?)?;
        self.expect(',')?;
        let bpos = self.pos();
        let b = Rational { k, gen }.eval(&self.expr()?)?;
        self.expect('}')?;
        for (f, pos) in [(&a, apos), (&b, bpos)] {
            if f.is_zero() {
                return Err(CliError::semantic(pos, "ZeroFunction: symbol entries must be nonzero"));
            }
        }
        Ok(Symbol2::new(a, b, c, k.m())?)
    }

    fn k2expr(&mut self, k: &FieldSpec, gen: &str, joiners: &[char]) -> Result<K2Element, CliError> {
        let mut terms = vec![self.symbol(k, gen)?];
        while joiners.iter().any(|&c| self.peek() == &Tok::Punct(c)) {
            self.bump();
            terms.push(self.symbol(k, gen)?);
        }
        Ok(K2Element::from_terms(k, terms))
    }

    /// Classes separated by `,`, the symbols of one class joined by `+`.
    fn k2list(&mut self, k: &FieldSpec, gen: &str) -> Result<Vec<K2Element>, CliError> {
        let mut classes = vec![self.k2expr(k, gen, &['+'])?];
        while self.eat(',') {
            classes.push(self.k2expr(k, gen, &['+'])?);
        }
        Ok(classes)
    }

    fn local_symbol(&mut self, k: &FieldSpec, gen: &str) -> Result<LocalSymbol, CliError> {
        let c = self.coefficient()?;
        self.expect('{')?;
        let a = self.factored(k, gen)?;
        self.expect(',')?;
        let b = self.factored(k, gen)?;
        self.expect('}')?;
        Ok(LocalSymbol::new(a, b, c, k))
    }

    /// `term {"*" term}` with `term := ["-"] (INT | IDENT | "(" poly ")") ["^" exponent]`,
    /// or a bare polynomial taken as a single factor.
    fn factored(&mut self, k: &FieldSpec, gen: &str) -> Result<FactoredBivariate, CliError> {
        let start = self.at;
        let product = self.factor_product(k, gen);
        // a validation failure of the product form is the real error unless a sum follows
        let settled = matches!(product, Ok(_) | Err(CliError::Semantic { .. }));
        if settled && !matches!(self.peek(), Tok::Punct('+' | '-')) {
            return product;
        }
        self.at = start;
        let pos = self.pos();
        let f = Bivariate { k, gen }.eval(&self.expr()?)?;
        if f.is_zero() {
            return Err(CliError::semantic(pos, "ZeroFunction: factors must be nonzero"));
        }
        FactoredBivariate::new(Fq::ONE, vec![(f, 1)], k).map_err(|e| CliError::semantic(pos, e.to_string()))
    }

    fn factor_product(&mut self, k: &FieldSpec, gen: &str) -> Result<FactoredBivariate, CliError> {
        let pos = self.pos();
        let dom = Bivariate { k, gen };
        let mut unit = Fq::ONE;
        let mut factors = Vec::new();
        loop {
            if self.eat('-') {
                unit = k.neg(unit);
            }
            let tpos = self.pos();
            let base = match self.peek().clone() {
                Tok::Int(n) => {
                    self.bump();
                    dom.int(n)
                }
                Tok::Ident(s) => {
                    self.bump();
                    dom.var(&s, tpos)?
                }
                Tok::Punct('(') => {
                    self.bump();
                    let e = self.expr()?;
                    self.expect(')')?;
                    dom.eval(&e)?
                }
                _ => return self.error(&["an integer", "an identifier", "`(`"]),
            };
            let e = if self.eat('^') { self.exponent()?.0 } else { 1 };
            if base.is_zero() {
                return Err(CliError::semantic(tpos, "ZeroFunction: factors must be nonzero"));
            }
            factors.push((base, e));
            if !self.eat('*') {
                break;
            }
        }
        FactoredBivariate::new(unit, factors, k).map_err(|e| CliError::semantic(pos, e.to_string()))
    }

    /// `["-"] INT` or `"(" "-" INT ")"`.
    fn exponent(&mut self) -> Result<(i64, Pos), CliError> {
        let pos = self.pos();
        let paren = self.eat('(');
        let neg = self.eat('-');
        let (n, npos) = self.int()?;
        if paren {
            self.expect(')')?;
        }
        if n > MAX_EXPONENT {
            return Err(CliError::semantic(npos, format!("exponent exceeds {MAX_EXPONENT}")));
        }
        Ok((if neg { -(n as i64) } else { n as i64 }, pos))
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.factor()?;
        loop {
            let pos = self.pos();
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?), pos);
            } else if matches!(self.peek(), Tok::Ident(_) | Tok::Punct('(')) {
                // juxtaposition, as in `2t`
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let pos = self.pos();
        let atom = match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Expr::Int(n)
            }
            Tok::Ident(s) => {
                self.bump();
                Expr::Var(s, pos)
            }
            Tok::Punct('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                e
            }
            _ => return self.error(&["an integer", "an identifier", "`(`", "`-`"]),
        };
        if self.peek() == &Tok::Punct('^') {
            let ppos = self.pos();
            self.bump();
            let (e, _) = self.exponent()?;
            return Ok(Expr::Pow(Box::new(atom), e, ppos));
        }
        Ok(atom)
    }
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut n = q;
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    (n == 1).then_some((p, e))
}

/// A standalone rational function in `t`.
pub fn parse_ratfn(input: &str, k: &FieldSpec, gen: &str) -> Result<RationalFunction, CliError> {
    let mut p = Parser {
        tokens: lex(input)?,
        at: 0,
    };
    let e = p.expr()?;
    if p.peek() != &Tok::Eof {
        return p.error(&["end of input"]);
    }
    Rational { k, gen }.eval(&e)
}
