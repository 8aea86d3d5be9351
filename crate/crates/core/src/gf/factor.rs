//! Factorization over `F_q`: squarefree decomposition, distinct-degree
//! factorization and Cantor–Zassenhaus equal-degree splitting.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::field::{prime_divisors, FieldSpec, Fq};
use crate::gf::poly::Poly;

/// `unit · ∏ factor^multiplicity`, factors monic irreducible and sorted by
/// (degree, coefficients).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Fq,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self, k: &FieldSpec) -> Poly {
        self.factors.iter().fold(Poly::constant(self.unit), |acc, (f, e)| {
            acc.mul(&f.pow(*e as u64, k), k)
        })
    }
}

/// `x^q mod modulus`.
fn frobenius(x: &Poly, modulus: &Poly, k: &FieldSpec) -> Poly {
    x.pow_mod(k.q() as u128, modulus, k)
}

fn squarefree_decomposition(f: &Poly, k: &FieldSpec) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let mut c = f.gcd(&f.derivative(k), k);
    let mut w = f.quot(&c, k);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c, k);
        let fac = w.quot(&y, k);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.quot(&w, k);
        i += 1;
    }
    if !c.is_one() {
        let root = c.pth_root(k);
        for (g, j) in squarefree_decomposition(&root, k) {
            out.push((g, j * k.p()));
        }
    }
    out
}

/// Splits a squarefree monic `f` into products of irreducibles of equal
/// degree.
fn distinct_degree(f: &Poly, k: &FieldSpec) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = Poly::x().rem(&rest, k);
    let mut d = 1;
    while rest.degree().is_some_and(|n| n >= 2 * d) {
        h = frobenius(&h, &rest, k);
        let g = rest.gcd(&h.sub(&Poly::x(), k), k);
        if !g.is_one() {
            rest = rest.quot(&g, k);
            h = h.rem(&rest, k);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(n) = rest.degree() {
        if n > 0 {
            out.push((rest, n));
        }
    }
    out
}

/// Candidate splitting polynomial for a product of degree-`d` irreducibles.
fn splitting_candidate(a: &Poly, f: &Poly, d: usize, k: &FieldSpec) -> Poly {
    if k.p() == 2 {
        // absolute trace F_{2^{ed}} -> F_2
        let mut term = a.clone();
        let mut acc = a.clone();
        for _ in 1..(k.e() as usize * d) {
            term = term.mul_mod(&term, f, k);
            acc = acc.add(&term, k);
        }
        acc
    } else {
        // a^{(q^d-1)/2} = (a^{1+q+…+q^{d-1}})^{(q-1)/2}
        let mut term = a.clone();
        let mut acc = a.clone();
        for _ in 1..d {
            term = frobenius(&term, f, k);
            acc = acc.mul_mod(&term, f, k);
        }
        acc.pow_mod(((k.q() - 1) / 2) as u128, f, k).sub(&Poly::one(), k)
    }
}

fn equal_degree(f: &Poly, d: usize, k: &FieldSpec, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = f.degree().unwrap_or(0);
    if n == d {
        out.push(f.clone());
        return;
    }
    loop {
        let a = Poly::from_coeffs((0..n).map(|_| Fq::from_raw(rng.gen_range(0..k.q()))).collect());
        if a.is_constant() {
            continue;
        }
        let g = f.gcd(&splitting_candidate(&a, f, d, k), k);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let h = f.quot(&g, k);
            equal_degree(&g, d, k, rng, out);
            equal_degree(&h, d, k, rng, out);
            return;
        }
    }
}

/// Complete factorization of a nonzero polynomial.
///
/// The result is independent of `seed`; the seed only drives the random
/// choices in equal-degree splitting.
pub fn poly_factor(f: &Poly, k: &FieldSpec, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.lead();
    let monic = f.monic(k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (block, mult) in squarefree_decomposition(&monic, k) {
        for (part, d) in distinct_degree(&block, k) {
            let mut irreducibles = Vec::new();
            equal_degree(&part, d, k, &mut rng, &mut irreducibles);
            factors.extend(irreducibles.into_iter().map(|g| (g, mult)));
        }
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &Poly, k: &FieldSpec) -> Result<bool> {
    let n = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(true);
    }
    let f = f.monic(k);
    let t = Poly::x();
    let divisors: BTreeSet<usize> = prime_divisors(n as u64).into_iter().map(|r| n / r as usize).collect();
    let mut h = t.clone();
    for i in 1..=n {
        h = frobenius(&h, &f, k);
        if divisors.contains(&i) && !f.gcd(&h.sub(&t, k), k).is_one() {
            return Ok(false);
        }
    }
    Ok(h == t.rem(&f, k))
}

/// The `n`-th monic polynomial of degree `d` in canonical order.
pub(crate) fn monic_by_index(d: usize, mut n: u128, k: &FieldSpec) -> Poly {
    let q = k.q() as u128;
    let mut coeffs = Vec::with_capacity(d + 1);
    for _ in 0..d {
        coeffs.push(Fq::from_raw((n % q) as u32));
        n /= q;
    }
    coeffs.push(Fq::ONE);
    Poly::from_coeffs(coeffs)
}

/// Least monic irreducible of degree `d` (canonical order) outside
/// `forbidden`.
pub fn irreducible_of_degree_avoiding(d: usize, forbidden: &BTreeSet<Poly>, k: &FieldSpec) -> Result<Poly> {
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let count = (k.q() as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    (0..count)
        .map(|n| monic_by_index(d, n, k))
        .filter(|g| !forbidden.contains(g))
        .find(|g| is_irreducible(g, k).unwrap_or(false))
        .ok_or(Error::Exhausted(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldSpec {
        FieldSpec::prime(3, 2).unwrap()
    }

    #[test]
    fn factor_examples_over_f3() {
        let k = f3();
        let sq = poly_factor(&Poly::from_ints(&k, &[1, 2, 1]), &k, 0).unwrap();
        assert_eq!(sq.unit, Fq::ONE);
        assert_eq!(sq.factors, vec![(Poly::from_ints(&k, &[1, 1]), 2)]);

        let irr = poly_factor(&Poly::from_ints(&k, &[1, 0, 1]), &k, 0).unwrap();
        assert_eq!(irr.factors, vec![(Poly::from_ints(&k, &[1, 0, 1]), 1)]);

        let f = Poly::from_ints(&k, &[0, -2, 0, 2]);
        let fac = poly_factor(&f, &k, 0).unwrap();
        assert_eq!(fac.unit, k.from_int(2));
        assert_eq!(
            fac.factors,
            vec![
                (Poly::x(), 1),
                (Poly::from_ints(&k, &[1, 1]), 1),
                (Poly::from_ints(&k, &[2, 1]), 1)
            ]
        );
        assert_eq!(poly_factor(&Poly::zero(), &k, 0).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn inseparable_input() {
        // (t^2+1)^3 (t+1)^6 over F_3 has zero derivative
        let k = f3();
        let a = Poly::from_ints(&k, &[1, 0, 1]);
        let b = Poly::from_ints(&k, &[1, 1]);
        let f = a.pow(3, &k).mul(&b.pow(6, &k), &k);
        let fac = poly_factor(&f, &k, 3).unwrap();
        assert_eq!(fac.factors, vec![(b, 6), (a, 3)]);
    }

    #[test]
    fn characteristic_two() {
        let k = FieldSpec::new(2, 2, &[1, 1, 1], 3).unwrap();
        // t^4 + t = t (t+1) (t^2+t+1), and t^2+t+1 splits over F_4
        let f = Poly::from_ints(&k, &[0, 1, 0, 0, 1]);
        let fac = poly_factor(&f, &k, 0).unwrap();
        assert_eq!(fac.factors.len(), 4);
        assert!(fac.factors.iter().all(|(g, e)| g.degree() == Some(1) && *e == 1));
        assert_eq!(fac.expand(&k), f);
    }

    #[test]
    fn irreducibility_examples() {
        let k = f3();
        assert!(is_irreducible(&Poly::x(), &k).unwrap());
        assert!(is_irreducible(&Poly::from_ints(&k, &[1, 0, 1]), &k).unwrap());
        let k5 = FieldSpec::prime(5, 2).unwrap();
        assert!(!is_irreducible(&Poly::from_ints(&k5, &[1, 0, 1]), &k5).unwrap());
        assert_eq!(is_irreducible(&Poly::zero(), &k).unwrap_err(), Error::ZeroPolynomial);
        assert_eq!(is_irreducible(&Poly::one(), &k).unwrap_err(), Error::ConstantPolynomial);
    }

    #[test]
    fn avoiding_examples() {
        let k = f3();
        let lin = |c: i64| Poly::from_ints(&k, &[c, 1]);
        let forbidden: BTreeSet<Poly> = [lin(0), lin(2)].into_iter().collect();
        assert_eq!(irreducible_of_degree_avoiding(1, &forbidden, &k).unwrap(), lin(1));
        let all: BTreeSet<Poly> = [lin(0), lin(1), lin(2)].into_iter().collect();
        assert_eq!(
            irreducible_of_degree_avoiding(1, &all, &k).unwrap_err(),
            Error::Exhausted(1)
        );
        assert_eq!(
            irreducible_of_degree_avoiding(2, &BTreeSet::new(), &k).unwrap(),
            Poly::from_ints(&k, &[1, 0, 1])
        );
    }
}
