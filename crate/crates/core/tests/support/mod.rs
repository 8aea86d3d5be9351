//! Random instances and independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod local2d;

use std::collections::BTreeSet;

use k2slot_core::funcfield::{Place, RationalFunction};
use k2slot_core::gf::{irreducible_of_degree_avoiding, ExtField, FieldSpec, Fq, Poly};
use k2slot_core::k2::{K2Element, Symbol2};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn field(q: u32, m: u32) -> FieldSpec {
    match q {
        4 => FieldSpec::new(2, 2, &[1, 1, 1], m).unwrap(),
        8 => FieldSpec::new(2, 3, &[1, 1, 0, 1], m).unwrap(),
        9 => FieldSpec::new(3, 2, &[1, 0, 1], m).unwrap(),
        25 => FieldSpec::new(5, 2, &[2, 1, 1], m).unwrap(),
        27 => FieldSpec::new(3, 3, &[1, 2, 0, 1], m).unwrap(),
        p => FieldSpec::prime(p as u64, m).unwrap(),
    }
}

/// The (q, m) grid used by the relation and reciprocity suites.
pub const CONFIGS: [(u32, u32); 10] = [
    (3, 2),
    (5, 2),
    (5, 4),
    (7, 2),
    (7, 3),
    (7, 6),
    (9, 2),
    (9, 4),
    (9, 8),
    (13, 3),
];

pub fn configs() -> Vec<FieldSpec> {
    CONFIGS.iter().map(|&(q, m)| field(q, m)).collect()
}

pub fn elem(k: &FieldSpec, r: &mut impl Rng) -> Fq {
    Fq::from_raw(r.gen_range(0..k.q()))
}

pub fn nonzero(k: &FieldSpec, r: &mut impl Rng) -> Fq {
    Fq::from_raw(r.gen_range(1..k.q()))
}

/// Random polynomial of degree at most `d`.
pub fn poly(k: &FieldSpec, d: usize, r: &mut impl Rng) -> Poly {
    Poly::from_coeffs((0..=d).map(|_| elem(k, r)).collect())
}

pub fn nonzero_poly(k: &FieldSpec, d: usize, r: &mut impl Rng) -> Poly {
    loop {
        let p = poly(k, d, r);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random nonzero `num/den` with both degrees at most `d`.
pub fn ratfn(k: &FieldSpec, d: usize, r: &mut impl Rng) -> RationalFunction {
    let dn = r.gen_range(0..=d);
    let dd = r.gen_range(0..=d);
    RationalFunction::new(nonzero_poly(k, dn, r), nonzero_poly(k, dd, r), k).unwrap()
}

pub fn symbol(k: &FieldSpec, d: usize, r: &mut impl Rng) -> Symbol2 {
    let c = r.gen_range(0..k.m() as i64);
    Symbol2::new(ratfn(k, d, r), ratfn(k, d, r), c, k.m()).unwrap()
}

pub fn k2(k: &FieldSpec, max_terms: usize, d: usize, r: &mut impl Rng) -> K2Element {
    let n = r.gen_range(1..=max_terms);
    K2Element::from_terms(k, (0..n).map(|_| symbol(k, d, r)).collect())
}

/// Random monic irreducible of degree at most `d`, found by rejection.
pub fn irreducible(k: &FieldSpec, d: usize, r: &mut impl Rng) -> Poly {
    let deg = r.gen_range(1..=d);
    loop {
        let mut c: Vec<Fq> = (0..deg).map(|_| elem(k, r)).collect();
        c.push(Fq::ONE);
        let p = Poly::from_coeffs(c);
        if brute_irreducible(&p, k) {
            return p;
        }
    }
}

pub fn place(k: &FieldSpec, d: usize, r: &mut impl Rng) -> Place {
    if r.gen_bool(0.2) {
        Place::Infinity
    } else {
        Place::Finite(irreducible(k, d, r))
    }
}

/// Trial division by every monic polynomial of degree up to `deg/2`.
pub fn brute_irreducible(p: &Poly, k: &FieldSpec) -> bool {
    let Some(deg) = p.degree() else { return false };
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (k.q() as u64).pow(d as u32);
        for n in 0..count {
            let mut c = Vec::with_capacity(d + 1);
            let mut x = n;
            for _ in 0..d {
                c.push(Fq::from_raw((x % k.q() as u64) as u32));
                x /= k.q() as u64;
            }
            c.push(Fq::ONE);
            if p.rem(&Poly::from_coeffs(c), k).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Residue field of a place, built without the library's place machinery.
pub fn kappa(v: &Place, k: &FieldSpec) -> ExtField {
    match v {
        Place::Infinity => ExtField::trivial(k),
        Place::Finite(p) => ExtField::new(k, p.clone()).unwrap(),
    }
}

/// Index of `x ∈ κ^×` read off `x^{(|κ|-1)/m}` against the powers of ζ.
pub fn direct_index(x: &Poly, kappa: &ExtField) -> u32 {
    let k = kappa.base();
    let order = (k.q() as u128).pow(kappa.degree() as u32);
    let y = kappa.pow(x, (order - 1) / k.m() as u128);
    (0..k.m())
        .find(|&i| kappa.from_base(k.pow(k.zeta(), i as u128)) == y)
        .expect("x^{(|κ|-1)/m} is an m-th root of unity")
}

/// `(v(f), unit part of f reduced at v)` by repeated division.
pub fn valuation_by_division(v: &Place, f: &RationalFunction, k: &FieldSpec) -> (i64, Poly) {
    match v {
        Place::Infinity => {
            let val = f.den().deg_i() - f.num().deg_i();
            let c = k.div(f.num().lead(), f.den().lead());
            (val, Poly::constant(c))
        }
        Place::Finite(p) => {
            let strip = |g: &Poly| {
                let mut g = g.clone();
                let mut n = 0i64;
                loop {
                    let (q, r) = g.divrem(p, k);
                    if !r.is_zero() {
                        return (n, g);
                    }
                    g = q;
                    n += 1;
                }
            };
            let (a, un) = strip(f.num());
            let (b, ud) = strip(f.den());
            let kap = kappa(v, k);
            let unit = kap.mul(&kap.reduce(&un), &kap.inv(&kap.reduce(&ud)));
            (a - b, unit)
        }
    }
}

/// `∂_v({a, b})` from the explicit formula, with all valuations and
/// residues computed by [`valuation_by_division`].
pub fn tame_oracle(a: &RationalFunction, b: &RationalFunction, coeff: u32, v: &Place, k: &FieldSpec) -> u32 {
    let kap = kappa(v, k);
    let (va, ua) = valuation_by_division(v, a, k);
    let (vb, ub) = valuation_by_division(v, b, k);
    let mut x = kap.mul(&kap.pow_i(&ua, -vb), &kap.pow_i(&ub, va));
    if (va * vb).rem_euclid(2) == 1 {
        x = kap.neg(&x);
    }
    (direct_index(&x, &kap) * coeff) % k.m()
}

pub fn least_irreducible(d: usize, k: &FieldSpec) -> Poly {
    irreducible_of_degree_avoiding(d, &BTreeSet::new(), k).unwrap()
}
