//! Dense univariate polynomials over `F_q`.

use std::cmp::Ordering;

use crate::gf::field::{FieldSpec, Fq};

/// Polynomial with coefficients in `F_q`, least degree first, never carrying
/// trailing zero coefficients.
///
/// Arithmetic takes the coefficient field explicitly.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Fq>,
}

impl Ord for Poly {
    /// Degree first (zero polynomial smallest), then coefficients compared from
    /// the top degree down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Fq::ONE)
    }

    pub fn constant(c: Fq) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// The indeterminate `t`.
    pub fn x() -> Poly {
        Poly::monomial(Fq::ONE, 1)
    }

    pub fn monomial(c: Fq, k: usize) -> Poly {
        let mut coeffs = vec![Fq::ZERO; k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Fq>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds from integer coefficients reduced into `F_p ⊂ F_q`.
    pub fn from_ints(k: &FieldSpec, coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| k.from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Fq::ONE
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.coeffs.get(i).copied().unwrap_or(Fq::ZERO)
    }

    /// Leading coefficient, zero for the zero polynomial.
    pub fn lead(&self) -> Fq {
        self.coeffs.last().copied().unwrap_or(Fq::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Fq::ONE
    }

    pub fn add(&self, other: &Poly, k: &FieldSpec) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| k.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, k: &FieldSpec) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|&c| k.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly, k: &FieldSpec) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| k.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn scale(&self, c: Fq, k: &FieldSpec) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| k.mul(a, c)).collect())
    }

    /// Multiplication by `t^n`.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Fq::ZERO; n];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn mul(&self, other: &Poly, k: &FieldSpec) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fq::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, mut n: u64, k: &FieldSpec) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, k);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, k);
            }
        }
        acc
    }

    /// Quotient and remainder.
    ///
    /// # Panics
    /// If `divisor` is zero.
    pub fn divrem(&self, divisor: &Poly, k: &FieldSpec) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let inv_lead = k.inv(divisor.lead());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Fq::ZERO; nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = k.mul(rem[i + dd], inv_lead);
            if c.is_zero() {
                continue;
            }
            quot[i] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = k.sub(rem[i + j], k.mul(c, b));
            }
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &Poly, k: &FieldSpec) -> Poly {
        self.divrem(divisor, k).1
    }

    pub fn quot(&self, divisor: &Poly, k: &FieldSpec) -> Poly {
        self.divrem(divisor, k).0
    }

    /// Whether `divisor` divides `self` (the zero polynomial divides only zero).
    pub fn divisible_by(&self, divisor: &Poly, k: &FieldSpec) -> bool {
        if divisor.is_zero() {
            return self.is_zero();
        }
        self.rem(divisor, k).is_zero()
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self, k: &FieldSpec) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(k.inv(self.lead()), k)
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Poly, k: &FieldSpec) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, k);
            a = b;
            b = r;
        }
        a.monic(k)
    }

    /// Returns `(g, s, u)` with `g = s·self + u·other` and `g` monic.
    pub fn xgcd(&self, other: &Poly, k: &FieldSpec) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut u0, mut u1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, k);
            let s2 = s0.sub(&q.mul(&s1, k), k);
            let u2 = u0.sub(&q.mul(&u1, k), k);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            u0 = u1;
            u1 = u2;
        }
        if r0.is_zero() {
            return (r0, s0, u0);
        }
        let c = k.inv(r0.lead());
        (r0.scale(c, k), s0.scale(c, k), u0.scale(c, k))
    }

    /// Inverse of `self` modulo `modulus`, if it exists.
    pub fn inv_mod(&self, modulus: &Poly, k: &FieldSpec) -> Option<Poly> {
        let (g, s, _) = self.rem(modulus, k).xgcd(modulus, k);
        g.is_one().then(|| s.rem(modulus, k))
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly, k: &FieldSpec) -> Poly {
        self.mul(other, k).rem(modulus, k)
    }

    pub fn pow_mod(&self, mut n: u128, modulus: &Poly, k: &FieldSpec) -> Poly {
        let mut base = self.rem(modulus, k);
        let mut acc = Poly::one().rem(modulus, k);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_mod(&base, modulus, k);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_mod(&base, modulus, k);
            }
        }
        acc
    }

    pub fn derivative(&self, k: &FieldSpec) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| k.mul(c, k.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: Fq, k: &FieldSpec) -> Fq {
        self.coeffs
            .iter()
            .rev()
            .fold(Fq::ZERO, |acc, &c| k.add(k.mul(acc, x), c))
    }

    /// For `self = g(t^p)` (zero derivative), returns `h` with `h^p = self`.
    pub fn pth_root(&self, k: &FieldSpec) -> Poly {
        let p = k.p() as usize;
        Poly::from_coeffs(self.coeffs.iter().step_by(p).map(|&c| k.pth_root(c)).collect())
    }

    /// `self(t^n)`.
    pub fn compose_monomial(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Fq::ZERO; (self.coeffs.len() - 1) * n + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * n] = c;
        }
        Poly::from_coeffs(coeffs)
    }

    /// Number of terms with nonzero coefficient.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Canonical text form in ascending degree, e.g. `2*t+t^3`.
    pub fn render(&self, k: &FieldSpec, var: &str, gen: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let coef = k.render(c, gen);
            terms.push(if i == 0 {
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
