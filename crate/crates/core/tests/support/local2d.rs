//! Bivariate generators and the truncated-algebra oracle for intersection
//! multiplicities.

use k2slot_core::gf::{FieldSpec, Fq};
use k2slot_core::local2d::{BivariatePoly, FactoredBivariate, LocalSymbol};
use rand::Rng;

use super::{elem, nonzero};

/// `dim k[x,y]/(f, g, 𝔪^D)` for the least `D` at which it stabilizes, or
/// `None` if it has not stabilized by `max_d`.
pub fn truncated_dimension(f: &BivariatePoly, g: &BivariatePoly, k: &FieldSpec, max_d: u32) -> Option<u64> {
    let mut prev = None;
    for d in 1..=max_d {
        let dim = truncated_at(f, g, k, d);
        if prev == Some(dim) {
            return Some(dim);
        }
        prev = Some(dim);
    }
    None
}

fn truncated_at(f: &BivariatePoly, g: &BivariatePoly, k: &FieldSpec, d: u32) -> u64 {
    let monomials: Vec<(u32, u32)> = (0..d).flat_map(|s| (0..=s).map(move |i| (i, s - i))).collect();
    let col = |i: u32, j: u32| monomials.iter().position(|&mm| mm == (i, j));
    let mut rows: Vec<Vec<Fq>> = Vec::new();
    for h in [f, g] {
        for &(a, b) in &monomials {
            let mut row = vec![Fq::ZERO; monomials.len()];
            for (i, j, c) in h.terms() {
                if let Some(ix) = col(i + a, j + b) {
                    row[ix] = c;
                }
            }
            rows.push(row);
        }
    }
    (monomials.len() - rank(rows, k)) as u64
}

fn rank(mut rows: Vec<Vec<Fq>>, k: &FieldSpec) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = k.inv(rows[r][c]);
        let pivot: Vec<Fq> = rows[r].iter().map(|&x| k.mul(x, inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let s = row[c];
                for (x, &pv) in row.iter_mut().zip(&pivot) {
                    *x = k.sub(*x, k.mul(s, pv));
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

pub fn bp(k: &FieldSpec, t: &[(u32, u32, i64)]) -> BivariatePoly {
    BivariatePoly::from_ints(k, t)
}

/// Random polynomial through the origin of total degree at most `d`.
pub fn through_origin(k: &FieldSpec, d: u32, r: &mut impl Rng) -> BivariatePoly {
    loop {
        let mut f = BivariatePoly::zero();
        for s in 1..=d {
            for i in 0..=s {
                if r.gen_bool(0.4) {
                    f = f.add(&BivariatePoly::monomial(elem(k, r), i, s - i), k);
                }
            }
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// One member of the curve families in the oracle corpus.
pub fn curve(k: &FieldSpec, r: &mut impl Rng) -> BivariatePoly {
    let c = |r: &mut _| nonzero(k, r);
    let x = BivariatePoly::x();
    let y = BivariatePoly::y();
    match r.gen_range(0..5) {
        0 => x.scale(elem(k, r), k).add(&y.scale(c(r), k), k),
        1 => through_origin(k, 2, r),
        // cusp y^2 - x^3 in random linear coordinates
        2 => {
            let (u, v) = (x.add(&y.scale(elem(k, r), k), k), y.scale(c(r), k));
            v.pow(2, k).sub(&u.pow(3, k), k)
        }
        // tacnode y^2 - x^4 plus a random higher term
        3 => y
            .pow(2, k)
            .sub(&x.pow(4, k), k)
            .add(&BivariatePoly::monomial(elem(k, r), 2, 2), k),
        _ => through_origin(k, 4, r),
    }
}

/// Irreducible through the origin: lines, or graphs `y = h(x)`, `x = h(y)`.
pub fn prime(k: &FieldSpec, r: &mut impl Rng) -> BivariatePoly {
    let x = BivariatePoly::x();
    let y = BivariatePoly::y();
    fn graph(k: &FieldSpec, lead: &BivariatePoly, var: &BivariatePoly, r: &mut impl Rng) -> BivariatePoly {
        let mut h = BivariatePoly::zero();
        for e in 1..=r.gen_range(1..=3u32) {
            h = h.add(&var.pow(e, k).scale(elem(k, r), k), k);
        }
        lead.sub(&h, k)
    }
    match r.gen_range(0..3) {
        0 => loop {
            let l = x.scale(elem(k, r), k).add(&y.scale(elem(k, r), k), k);
            if !l.is_zero() {
                break l;
            }
        },
        1 => graph(k, &y, &x, r),
        _ => graph(k, &x, &y, r),
    }
}

/// An irreducible polynomial not through the origin.
pub fn unit_prime(k: &FieldSpec, r: &mut impl Rng) -> BivariatePoly {
    prime(k, r).add(&BivariatePoly::constant(nonzero(k, r)), k)
}

pub fn factored(k: &FieldSpec, r: &mut impl Rng) -> FactoredBivariate {
    loop {
        let mut factors = Vec::new();
        for _ in 0..r.gen_range(1..=3) {
            let f = if r.gen_bool(0.8) { prime(k, r) } else { unit_prime(k, r) };
            let e = [-2, -1, 1, 2][r.gen_range(0..4)];
            factors.push((f, e));
        }
        if let Ok(u) = FactoredBivariate::new(nonzero(k, r), factors, k) {
            return u;
        }
    }
}

pub fn symbol_list(k: &FieldSpec, r: &mut impl Rng) -> Vec<LocalSymbol> {
    (0..r.gen_range(1..=3))
        .map(|_| {
            let c = r.gen_range(1..k.m() as i64 + 1);
            LocalSymbol::new(factored(k, r), factored(k, r), c, k)
        })
        .collect()
}
