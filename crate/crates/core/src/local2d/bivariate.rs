//! Sparse bivariate polynomials over `F_q` and their gcd.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;

use crate::gf::{FieldSpec, Fq, Poly};

/// `Σ c_{ij} x^i y^j` with only nonzero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), Fq>,
}

impl Ord for BivariatePoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.graded_terms().cmp(&other.graded_terms()))
    }
}

impl PartialOrd for BivariatePoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Fq) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Fq::ONE, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Fq::ONE, 0, 1)
    }

    pub fn monomial(c: Fq, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BivariatePoly { terms }
    }

    /// From `(i, j, c)` triples with integer coefficients reduced into `F_p`.
    pub fn from_ints(k: &FieldSpec, terms: &[(u32, u32, i64)]) -> Self {
        let mut out = Self::zero();
        for &(i, j, c) in terms {
            out = out.add(&Self::monomial(k.from_int(c), i, j), k);
        }
        out
    }

    /// Terms from the highest total degree down, `x` before `y` within a degree.
    fn graded_terms(&self) -> Vec<(u32, Reverse<u32>, Fq)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&(i, j), &c)| (i + j, Reverse(i), c)).collect();
        v.sort_by_key(|t| std::cmp::Reverse((t.0, t.1)));
        v
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, Fq)> + '_ {
        self.terms.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Fq {
        self.terms.get(&(i, j)).copied().unwrap_or(Fq::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Value at the origin.
    pub fn at_origin(&self) -> Fq {
        self.coeff(0, 0)
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.at_origin().is_zero()
    }

    pub fn add(&self, other: &Self, k: &FieldSpec) -> Self {
        let mut terms = self.terms.clone();
        for (&key, &c) in &other.terms {
            let s = k.add(terms.get(&key).copied().unwrap_or(Fq::ZERO), c);
            if s.is_zero() {
                terms.remove(&key);
            } else {
                terms.insert(key, s);
            }
        }
        BivariatePoly { terms }
    }

    pub fn neg(&self, k: &FieldSpec) -> Self {
        BivariatePoly {
            terms: self.terms.iter().map(|(&key, &c)| (key, k.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Self, k: &FieldSpec) -> Self {
        self.add(&other.neg(k), k)
    }

    pub fn scale(&self, c: Fq, k: &FieldSpec) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePoly {
            terms: self.terms.iter().map(|(&key, &a)| (key, k.mul(a, c))).collect(),
        }
    }

    /// Multiplication by `x^a y^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        BivariatePoly {
            terms: self.terms.iter().map(|(&(i, j), &c)| ((i + a, j + b), c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self, k: &FieldSpec) -> Self {
        let mut terms: BTreeMap<(u32, u32), Fq> = BTreeMap::new();
        for (&(i, j), &a) in &self.terms {
            for (&(u, v), &b) in &other.terms {
                let e = terms.entry((i + u, j + v)).or_insert(Fq::ZERO);
                *e = k.add(*e, k.mul(a, b));
            }
        }
        terms.retain(|_, c| !c.is_zero());
        BivariatePoly { terms }
    }

    pub fn pow(&self, n: u32, k: &FieldSpec) -> Self {
        (0..n).fold(Self::constant(Fq::ONE), |acc, _| acc.mul(self, k))
    }

    pub fn partial_x(&self, k: &FieldSpec) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in &self.terms {
            if i > 0 {
                out = out.add(&Self::monomial(k.mul(c, k.from_int(i as i64)), i - 1, j), k);
            }
        }
        out
    }

    pub fn partial_y(&self, k: &FieldSpec) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in &self.terms {
            if j > 0 {
                out = out.add(&Self::monomial(k.mul(c, k.from_int(j as i64)), i, j - 1), k);
            }
        }
        out
    }

    /// `f(x, 0)` as a univariate polynomial in `x`.
    pub fn restrict_y_zero(&self) -> Poly {
        let deg = self
            .terms
            .keys()
            .filter(|&&(_, j)| j == 0)
            .map(|&(i, _)| i as usize)
            .max();
        let Some(deg) = deg else { return Poly::zero() };
        let mut coeffs = vec![Fq::ZERO; deg + 1];
        for (&(i, j), &c) in &self.terms {
            if j == 0 {
                coeffs[i as usize] = c;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// `f / y`, assuming `y | f`.
    pub fn div_y(&self) -> Self {
        debug_assert!(self.terms.keys().all(|&(_, j)| j > 0));
        BivariatePoly {
            terms: self.terms.iter().map(|(&(i, j), &c)| ((i, j - 1), c)).collect(),
        }
    }

    /// Coefficient of the last monomial in `(i, j)` order.
    pub fn leading_coeff(&self) -> Fq {
        self.terms.values().next_back().copied().unwrap_or(Fq::ZERO)
    }

    /// Associate with leading coefficient 1.
    pub fn normalized(&self, k: &FieldSpec) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(k.inv(self.leading_coeff()), k)
    }

    /// `λ` with `self = λ·other`, if the two are associates.
    pub fn scalar_ratio(&self, other: &Self, k: &FieldSpec) -> Option<Fq> {
        if self.is_zero() || other.is_zero() || self.terms.len() != other.terms.len() {
            return None;
        }
        let lambda = k.div(self.leading_coeff(), other.leading_coeff());
        (self == &other.scale(lambda, k)).then_some(lambda)
    }

    /// As a polynomial in `y` with coefficients in `F_q[x]`.
    fn to_y_major(&self) -> Vec<Poly> {
        let Some(dy) = self.deg_y() else { return Vec::new() };
        let mut rows: Vec<Vec<Fq>> = vec![Vec::new(); dy as usize + 1];
        for (&(i, j), &c) in &self.terms {
            let row = &mut rows[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, Fq::ZERO);
            }
            row[i as usize] = c;
        }
        rows.into_iter().map(Poly::from_coeffs).collect()
    }

    fn from_y_major(rows: &[Poly]) -> Self {
        let mut terms = BTreeMap::new();
        for (j, row) in rows.iter().enumerate() {
            for (i, &c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((i as u32, j as u32), c);
                }
            }
        }
        BivariatePoly { terms }
    }

    /// Quotient by `divisor`, assuming exact divisibility.
    pub fn div_exact(&self, divisor: &Self, k: &FieldSpec) -> Option<Self> {
        // lex order with y dominant
        let lead = |p: &Self| {
            p.terms
                .iter()
                .max_by_key(|(&(i, j), _)| (j, i))
                .map(|(&(i, j), &c)| (i, j, c))
        };
        let (di, dj, dc) = lead(divisor)?;
        let inv = k.inv(dc);
        let mut rest = self.clone();
        let mut quot = Self::zero();
        while let Some((i, j, c)) = lead(&rest) {
            if i < di || j < dj {
                return None;
            }
            let t = Self::monomial(k.mul(c, inv), i - di, j - dj);
            rest = rest.sub(&t.mul(divisor, k), k);
            quot = quot.add(&t, k);
        }
        Some(quot)
    }

    /// Normalized greatest common divisor.
    pub fn gcd(&self, other: &Self, k: &FieldSpec) -> Self {
        if self.is_zero() {
            return other.normalized(k);
        }
        if other.is_zero() {
            return self.normalized(k);
        }
        let a = self.to_y_major();
        let b = other.to_y_major();
        let ca = content(&a, k);
        let cb = content(&b, k);
        let c = ca.gcd(&cb, k);
        let mut a = primitive_part(&a, &ca, k);
        let mut b = primitive_part(&b, &cb, k);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b, k);
            a = b;
            b = if r.is_empty() {
                Vec::new()
            } else {
                let cr = content(&r, k);
                primitive_part(&r, &cr, k)
            };
        }
        let g = if a.len() <= 1 {
            vec![Poly::one()]
        } else {
            let ca = content(&a, k);
            primitive_part(&a, &ca, k)
        };
        let g: Vec<Poly> = g.iter().map(|p| p.mul(&c, k)).collect();
        Self::from_y_major(&g).normalized(k)
    }

    pub fn render(&self, k: &FieldSpec, gen: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        // ascending total degree, then descending power of x
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by_key(|(&(i, j), _)| (i + j, Reverse(i)));
        for (&(i, j), &c) in keys {
            let mut mono = Vec::new();
            match i {
                0 => {}
                1 => mono.push("x".to_string()),
                _ => mono.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => mono.push("y".to_string()),
                _ => mono.push(format!("y^{j}")),
            }
            let mono = mono.join("*");
            let coef = k.render(c, gen);
            terms.push(if mono.is_empty() {
                coef
            } else if c == Fq::ONE {
                mono
            } else if k.renders_atomic(c) {
                format!("{coef}*{mono}")
            } else {
                format!("({coef})*{mono}")
            });
        }
        terms.join("+")
    }
}

fn content(rows: &[Poly], k: &FieldSpec) -> Poly {
    rows.iter().fold(Poly::zero(), |acc, r| acc.gcd(r, k))
}

fn primitive_part(rows: &[Poly], c: &Poly, k: &FieldSpec) -> Vec<Poly> {
    rows.iter().map(|r| r.quot(c, k)).collect()
}

fn trim(rows: &mut Vec<Poly>) {
    while rows.last().is_some_and(|r| r.is_zero()) {
        rows.pop();
    }
}

/// A remainder of `a` by `b` in `y`, up to a factor from `F_q[x]`.
fn pseudo_rem(a: &[Poly], b: &[Poly], k: &FieldSpec) -> Vec<Poly> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let lr = r[r.len() - 1].clone();
        let mut next: Vec<Poly> = r.iter().map(|c| c.mul(lb, k)).collect();
        for (i, bc) in b.iter().enumerate() {
            next[i + shift] = next[i + shift].sub(&bc.mul(&lr, k), k);
        }
        trim(&mut next);
        r = next;
    }
    r
}
