mod support;

use k2slot_core::cyclic_algebra::{
    build_algebra, center_dimension, split_witness, symbol_to_algebra, verify_witness, SplitWitness, SymbolAlgebra,
    DEFAULT_BUDGET,
};
use k2slot_core::funcfield::RationalFunction;
use k2slot_core::gf::{ExtField, FieldSpec, Fq, Poly};
use k2slot_core::k2::{is_zero, K2Element, Symbol2};
use support::*;

const GRID: [(u32, u32); 6] = [(3, 2), (5, 2), (7, 2), (7, 3), (9, 2), (4, 3)];

/// Normal form of the word `x^i y^j x^k y^l` by rewriting with
/// `yx = ωxy`, `x^m = a`, `y^m = b`: returns `(scalar, i', j')`.
fn rewrite(k: &FieldSpec, a: Fq, b: Fq, (i, j): (usize, usize), (kk, l): (usize, usize)) -> (Fq, usize, usize) {
    let m = k.m() as usize;
    // move each of the kk x's left past j y's, one transposition at a time
    let mut c = Fq::ONE;
    for _ in 0..j * kk {
        c = k.mul(c, k.zeta());
    }
    let (mut xi, mut yj) = (i + kk, j + l);
    while xi >= m {
        c = k.mul(c, a);
        xi -= m;
    }
    while yj >= m {
        c = k.mul(c, b);
        yj -= m;
    }
    (c, xi, yj)
}

fn check_algebra(alg: &SymbolAlgebra, k: &FieldSpec, a: Fq, b: Fq) {
    let m = k.m() as usize;
    let n = m * m;
    for s in 0..n {
        for t in 0..n {
            let (c, i2, j2) = rewrite(k, a, b, (s / m, s % m), (t / m, t % m));
            let (lc, target) = alg.basis_product(s, t);
            assert_eq!((lc.clone(), target), (Poly::constant(c), alg.basis_index(i2, j2)));
        }
    }
    for s in 0..n {
        for t in 0..n {
            for u in 0..n {
                let (es, et, eu) = (alg.basis_element(s), alg.basis_element(t), alg.basis_element(u));
                assert_eq!(
                    alg.mul(&alg.mul(&es, &et), &eu),
                    alg.mul(&es, &alg.mul(&et, &eu)),
                    "associativity at ({s},{t},{u})"
                );
            }
        }
    }
    assert_eq!(center_dimension(alg), 1);
    let w = split_witness(alg, DEFAULT_BUDGET).unwrap();
    assert!(verify_witness(alg, &w));
    if let SplitWitness::Conic { x, y, z } = &w {
        let f = alg.field();
        assert!(!(x.is_zero() && y.is_zero() && z.is_zero()));
        let lhs = f.add(&f.mul(alg.a(), &f.mul(x, x)), &f.mul(alg.b(), &f.mul(y, y)));
        assert_eq!(lhs, f.mul(z, z));
    }
}

#[test]
fn exhaustive_grid() {
    for (q, m) in GRID {
        let k = field(q, m);
        let base = ExtField::trivial(&k);
        for a in k.nonzero_elements() {
            for b in k.nonzero_elements() {
                let alg = build_algebra(&Poly::constant(a), &Poly::constant(b), &base).unwrap();
                check_algebra(&alg, &k, a, b);
            }
        }
    }
}

#[test]
fn quaternion_algebras_split_up_to_27() {
    for q in [3u32, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27] {
        let k = field(q, 2);
        let base = ExtField::trivial(&k);
        for a in k.nonzero_elements() {
            for b in k.nonzero_elements() {
                let alg = build_algebra(&Poly::constant(a), &Poly::constant(b), &base).unwrap();
                let w = split_witness(&alg, DEFAULT_BUDGET).unwrap();
                assert!(verify_witness(&alg, &w), "q={q} a={a:?} b={b:?}");
            }
        }
    }
}

#[test]
fn agrees_with_k2_on_constant_symbols() {
    for (q, m) in GRID {
        let k = field(q, m);
        for a in k.nonzero_elements() {
            for b in k.nonzero_elements() {
                for c in 1..m as i64 {
                    let s = Symbol2::new(RationalFunction::constant(a), RationalFunction::constant(b), c, m).unwrap();
                    let alpha = K2Element::from_terms(&k, vec![s.clone()]);
                    let alg = symbol_to_algebra(&s, &k).unwrap();
                    let split = split_witness(&alg, DEFAULT_BUDGET).is_ok();
                    assert_eq!(is_zero(&alpha), split);
                    assert!(split);
                }
            }
        }
    }
}

#[test]
fn algebra_over_residue_extension() {
    // (u, u+1) over F_{9}, viewed as a quadratic extension of F_3
    let k = field(3, 2);
    let ext = ExtField::new(&k, least_irreducible(2, &k)).unwrap();
    let u = Poly::x();
    let alg = build_algebra(&u, &u.add(&Poly::one(), &k), &ext).unwrap();
    assert_eq!(center_dimension(&alg), 1);
    let w = split_witness(&alg, DEFAULT_BUDGET).unwrap();
    assert!(verify_witness(&alg, &w));
}
