//! Finite fields `F_q = F_p[u]/(g)` with table-driven multiplication.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::factor::is_irreducible;
use crate::gf::poly::Poly;

/// Largest field order accepted by [`FieldSpec`]; log/exp tables are
/// materialized for every field.
pub const MAX_ORDER: u32 = 1 << 16;

/// Element of a finite field `F_q`.
///
/// The raw value packs the coefficient vector `(c_0, …, c_{e-1})` in the power
/// basis of the defining polynomial as the base-`p` integer `Σ c_i p^i`. The
/// derived `Ord` is therefore the canonical ordering of field elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Fq(u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    /// Wraps a raw encoding. The caller guarantees `raw < q`.
    pub const fn from_raw(raw: u32) -> Fq {
        Fq(raw)
    }

    pub const fn raw(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    m: u32,
    modulus: Vec<u32>,
    generator: Fq,
    zeta: Fq,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u16>>,
}

/// The coefficient field `F_q` together with the symbol modulus `m` and the
/// fixed primitive `m`-th root of unity ζ.
///
/// Cloning is cheap; all instances built from the same parameters compare
/// equal.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.modulus == other.inner.modulus
                && self.inner.m == other.inner.m)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FieldSpec(GF({}^{}), modulus={:?}, m={}, zeta={})",
            self.p(),
            self.e(),
            self.inner.modulus,
            self.m(),
            self.zeta().raw()
        )
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Inner {
    fn digits(p: u32, e: u32, mut raw: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(e as usize);
        for _ in 0..e {
            out.push(raw % p);
            raw /= p;
        }
        out
    }

    fn undigits(p: u32, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * p + d)
    }

    /// Multiplication straight from the polynomial representation, used only
    /// while the tables are being built.
    fn mul_slow(p: u32, e: u32, modulus: &[u32], a: u32, b: u32) -> u32 {
        let e = e as usize;
        let pa = Self::digits(p, e as u32, a);
        let pb = Self::digits(p, e as u32, b);
        let p64 = p as u64;
        let mut prod = vec![0u64; 2 * e];
        for (i, &x) in pa.iter().enumerate() {
            for (j, &y) in pb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
            }
        }
        for k in (e..2 * e).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &g) in modulus.iter().take(e).enumerate() {
                let s = k - e + i;
                prod[s] = (prod[s] + (p64 - c) * g as u64) % p64;
            }
        }
        let low: Vec<u32> = prod[..e].iter().map(|&c| c as u32).collect();
        Self::undigits(p, &low)
    }

    fn pow_slow(p: u32, e: u32, modulus: &[u32], a: u32, mut n: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while n > 0 {
            if n & 1 == 1 {
                acc = Self::mul_slow(p, e, modulus, acc, base);
            }
            base = Self::mul_slow(p, e, modulus, base, base);
            n >>= 1;
        }
        acc
    }

    /// Builds tables; assumes `modulus` is irreducible and `m | q - 1`.
    fn build(p: u32, e: u32, modulus: Vec<u32>, m: u32) -> Inner {
        let q = p.pow(e);
        let order = (q - 1) as u64;
        let primes = prime_divisors(order);
        let generator = (1..q)
            .find(|&x| {
                primes
                    .iter()
                    .all(|&r| Self::pow_slow(p, e, &modulus, x, order / r) != 1)
            })
            .expect("multiplicative group of a finite field is cyclic");
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..n {
            exp[i] = x;
            exp[i + n] = x;
            log[x as usize] = i as u32;
            x = Self::mul_slow(p, e, &modulus, x, generator);
        }
        let zeta = if n == 0 { 1 } else { exp[(n / m as usize) % n] };
        let add_table = if e > 1 && q <= 256 {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                let da = Self::digits(p, e, a);
                for b in 0..q {
                    let db = Self::digits(p, e, b);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    t[(a * q + b) as usize] = Self::undigits(p, &s) as u16;
                }
            }
            Some(t)
        } else {
            None
        };
        Inner {
            p,
            e,
            q,
            m,
            modulus,
            generator: Fq(generator),
            zeta: Fq(zeta),
            exp,
            log,
            add_table,
        }
    }
}

impl FieldSpec {
    /// Constructs `F_q = F_p[u]/(modulus)` with symbol modulus `m`.
    ///
    /// `modulus` lists coefficients over `F_p`, least degree first, and must be
    /// monic of degree `e`. ζ is `g^{(q-1)/m}` for the least generator `g` of
    /// `F_q^×` in the canonical element order.
    pub fn new(p: u64, e: u32, modulus: &[i64], m: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if q > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge(format!(
                "q = {p}^{e} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        let p = p as u32;
        let q = q as u32;
        let modulus: Vec<u32> = modulus.iter().map(|&c| c.rem_euclid(p as i64) as u32).collect();
        if modulus.len() != e as usize + 1 || modulus[e as usize] != 1 {
            return Err(Error::InvalidModulus(format!(
                "expected a monic polynomial of degree {e}"
            )));
        }
        if e > 1 {
            let prime = FieldSpec::prime_field(p);
            let g = Poly::from_coeffs(modulus.iter().map(|&c| Fq(c)).collect());
            if !is_irreducible(&g, &prime)? {
                return Err(Error::ReducibleModulus(p));
            }
        }
        if m < 2 || !(q - 1).is_multiple_of(m) {
            return Err(Error::BadModulusM { m, q });
        }
        Ok(FieldSpec {
            inner: Arc::new(Inner::build(p, e, modulus, m)),
        })
    }

    /// `F_p` with the given symbol modulus.
    pub fn prime(p: u64, m: u32) -> Result<FieldSpec> {
        FieldSpec::new(p, 1, &[0, 1], m)
    }

    /// `F_p` without a symbol modulus, used for arithmetic on defining
    /// polynomials.
    pub(crate) fn prime_field(p: u32) -> FieldSpec {
        FieldSpec {
            inner: Arc::new(Inner::build(p, 1, vec![0, 1], 1)),
        }
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn e(&self) -> u32 {
        self.inner.e
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    pub fn m(&self) -> u32 {
        self.inner.m
    }

    pub fn zeta(&self) -> Fq {
        self.inner.zeta
    }

    pub fn generator(&self) -> Fq {
        self.inner.generator
    }

    /// Coefficients of the defining polynomial over `F_p`, least degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// The class of the indeterminate `u` of the defining polynomial.
    pub fn gen_u(&self) -> Fq {
        if self.e() == 1 {
            self.from_int(-(self.inner.modulus[0] as i64))
        } else {
            Fq(self.p())
        }
    }

    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.p() as i64) as u32)
    }

    /// Element with coefficients `c_0, …` in the power basis (extra entries
    /// beyond `e` are rejected by reduction through the defining polynomial).
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Fq {
        let u = self.gen_u();
        coeffs
            .iter()
            .rev()
            .fold(Fq::ZERO, |acc, &c| self.add(self.mul(acc, u), self.from_int(c)))
    }

    pub fn coeffs(&self, a: Fq) -> Vec<u32> {
        Inner::digits(self.p(), self.e(), a.0)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q()).map(Fq)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fq> {
        (1..self.q()).map(Fq)
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let inner = &*self.inner;
        if inner.e == 1 {
            let s = a.0 + b.0;
            return Fq(if s >= inner.p { s - inner.p } else { s });
        }
        if let Some(t) = &inner.add_table {
            return Fq(t[(a.0 * inner.q + b.0) as usize] as u32);
        }
        let (p, mut x, mut y) = (inner.p, a.0, b.0);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..inner.e {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        Fq(out)
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        let inner = &*self.inner;
        if inner.e == 1 {
            return Fq(if a.0 == 0 { 0 } else { inner.p - a.0 });
        }
        let (p, mut x) = (inner.p, a.0);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..inner.e {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale *= p;
        }
        Fq(out)
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq::ZERO;
        }
        let inner = &*self.inner;
        Fq(inner.exp[(inner.log[a.0 as usize] + inner.log[b.0 as usize]) as usize])
    }

    pub fn try_inv(&self, a: Fq) -> Result<Fq> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let inner = &*self.inner;
        let n = inner.q - 1;
        Ok(Fq(inner.exp[((n - inner.log[a.0 as usize]) % n) as usize]))
    }

    /// Inverse of a nonzero element.
    ///
    /// # Panics
    /// If `a` is zero.
    pub fn inv(&self, a: Fq) -> Fq {
        self.try_inv(a).expect("inverse of zero in F_q")
    }

    pub fn div(&self, a: Fq, b: Fq) -> Fq {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fq, n: u128) -> Fq {
        if n == 0 {
            return Fq::ONE;
        }
        if a.is_zero() {
            return Fq::ZERO;
        }
        let inner = &*self.inner;
        let order = (inner.q - 1) as u128;
        let l = (inner.log[a.0 as usize] as u128 * (n % order)) % order;
        Fq(inner.exp[l as usize])
    }

    /// `a^n` for signed `n`; `a` must be nonzero when `n < 0`.
    pub fn pow_i(&self, a: Fq, n: i64) -> Fq {
        if n >= 0 {
            self.pow(a, n as u128)
        } else {
            self.pow(self.inv(a), n.unsigned_abs() as u128)
        }
    }

    /// Discrete logarithm to the base of [`FieldSpec::generator`].
    pub fn log(&self, a: Fq) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.inner.log[a.0 as usize])
    }

    /// The unique `b` with `b^p = a`.
    pub fn pth_root(&self, a: Fq) -> Fq {
        self.pow(a, (self.q() / self.p()) as u128)
    }

    /// Exponent `k` in `Z/mZ` with `y = ζ^k`, for `y ∈ μ_m`, found by
    /// enumerating the powers of ζ.
    pub fn root_of_unity_index(&self, y: Fq) -> Option<u32> {
        let mut z = Fq::ONE;
        for k in 0..self.m() {
            if z == y {
                return Some(k);
            }
            z = self.mul(z, self.zeta());
        }
        None
    }

    /// Power-residue index of a nonzero element of `F_q` itself.
    pub fn power_index(&self, a: Fq) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let y = self.pow(a, ((self.q() - 1) / self.m()) as u128);
        Ok(self
            .root_of_unity_index(y)
            .expect("(q-1)/m-th powers lie in the group generated by zeta"))
    }

    /// Canonical text form of an element, using `var` for the generator `u`.
    pub fn render(&self, a: Fq, var: &str) -> String {
        if self.e() == 1 {
            return a.0.to_string();
        }
        let coeffs = self.coeffs(a);
        let mut terms = Vec::new();
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// Whether the rendered form of `a` is a single token (no `+`).
    pub fn renders_atomic(&self, a: Fq) -> bool {
        self.e() == 1 || self.coeffs(a).iter().filter(|&&c| c != 0).count() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_examples() {
        let f3 = FieldSpec::prime(3, 2).unwrap();
        assert_eq!(f3.zeta(), Fq(2));
        let f5 = FieldSpec::prime(5, 4).unwrap();
        assert_eq!(f5.generator(), Fq(2));
        assert_eq!(f5.zeta(), Fq(2));
        assert_eq!(FieldSpec::prime(3, 3).unwrap_err(), Error::BadModulusM { m: 3, q: 3 });
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::prime(4, 3).unwrap_err(), Error::NotPrime(4));
        // u^2 + 1 = (u + 2)(u + 3) over F_5
        assert_eq!(
            FieldSpec::new(5, 2, &[1, 0, 1], 2).unwrap_err(),
            Error::ReducibleModulus(5)
        );
        assert!(matches!(
            FieldSpec::new(3, 2, &[1, 0, 2], 2).unwrap_err(),
            Error::InvalidModulus(_)
        ));
        assert!(matches!(
            FieldSpec::new(2, 17, &[1; 18], 1).unwrap_err(),
            Error::FieldTooLarge(_)
        ));
    }

    #[test]
    fn zeta_has_exact_order_m() {
        for (p, e, modulus, m) in [
            (7u64, 1u32, vec![0i64, 1], 6u32),
            (3, 2, vec![1, 0, 1], 8),
            (13, 1, vec![0, 1], 3),
            (2, 2, vec![1, 1, 1], 3),
        ] {
            let k = FieldSpec::new(p, e, &modulus, m).unwrap();
            let z = k.zeta();
            for d in 1..m {
                assert_ne!(k.pow(z, d as u128), Fq::ONE);
            }
            assert_eq!(k.pow(z, m as u128), Fq::ONE);
        }
    }

    #[test]
    fn gf9_generator_relation() {
        let k = FieldSpec::new(3, 2, &[1, 0, 1], 2).unwrap();
        let u = k.gen_u();
        assert_eq!(k.mul(u, u), k.from_int(-1));
        assert_eq!(k.render(k.add(u, Fq::ONE), "u"), "1+u");
        assert_eq!(k.from_coeffs(&[1, 1]), k.add(u, Fq::ONE));
    }

    #[test]
    fn cube_residues_in_f7() {
        let k = FieldSpec::prime(7, 3).unwrap();
        assert_eq!(k.power_index(Fq(6)).unwrap(), 0);
        assert_ne!(k.power_index(Fq(2)).unwrap(), 0);
        assert_eq!(k.power_index(Fq::ONE).unwrap(), 0);
        assert_eq!(k.power_index(Fq::ZERO).unwrap_err(), Error::ZeroElement);
    }
}
