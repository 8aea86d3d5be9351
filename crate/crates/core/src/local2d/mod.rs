//! Reciprocity on the local ring of the plane at the origin.
//!
//! Height-one primes of `R = F_q[x,y]_(x,y)` are given by irreducible
//! polynomials vanishing at the origin. Irreducibility of the supplied
//! factors is trusted; a reducible "prime" silently invalidates results.

mod bivariate;

use std::collections::BTreeMap;

pub use bivariate::BivariatePoly;

use crate::error::{Error, Result};
use crate::gf::{FieldSpec, Fq};

/// Local intersection number at the origin; `None` stands for `∞`.
pub type Multiplicity = Option<u64>;

/// `unit · ∏ f_i^{e_i}` with squarefree, pairwise coprime, nonconstant `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredBivariate {
    unit: Fq,
    factors: Vec<(BivariatePoly, i64)>,
}

impl FactoredBivariate {
    /// Validates the factor list. Constant factors are folded into the unit
    /// and zero exponents dropped; indices in errors refer to the input list.
    pub fn new(unit: Fq, factors: Vec<(BivariatePoly, i64)>, k: &FieldSpec) -> Result<Self> {
        if unit.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let mut unit = unit;
        let mut kept: Vec<(usize, BivariatePoly, i64)> = Vec::new();
        for (idx, (f, e)) in factors.into_iter().enumerate() {
            if f.is_zero() {
                return Err(Error::ZeroFunction);
            }
            if f.is_constant() {
                unit = k.mul(unit, k.pow_i(f.at_origin(), e));
                continue;
            }
            let g = f.gcd(&f.partial_x(k), k).gcd(&f.partial_y(k), k);
            if !g.is_constant() {
                return Err(Error::NotSquarefree(idx));
            }
            if e != 0 {
                kept.push((idx, f, e));
            }
        }
        for (a, (i, f, _)) in kept.iter().enumerate() {
            for (j, g, _) in &kept[a + 1..] {
                if !f.gcd(g, k).is_constant() {
                    return Err(Error::NotCoprime(*i, *j));
                }
            }
        }
        Ok(FactoredBivariate {
            unit,
            factors: kept.into_iter().map(|(_, f, e)| (f, e)).collect(),
        })
    }

    pub fn constant(unit: Fq) -> Result<Self> {
        if unit.is_zero() {
            return Err(Error::ZeroFunction);
        }
        Ok(FactoredBivariate {
            unit,
            factors: Vec::new(),
        })
    }

    /// A single factor `f^1`.
    pub fn poly(f: BivariatePoly, k: &FieldSpec) -> Result<Self> {
        Self::new(Fq::ONE, vec![(f, 1)], k)
    }

    pub fn unit(&self) -> Fq {
        self.unit
    }

    pub fn factors(&self) -> &[(BivariatePoly, i64)] {
        &self.factors
    }

    pub fn render(&self, k: &FieldSpec, gen: &str) -> String {
        let mut parts = Vec::new();
        if self.unit != Fq::ONE || self.factors.is_empty() {
            let c = k.render(self.unit, gen);
            parts.push(if k.renders_atomic(self.unit) {
                c
            } else {
                format!("({c})")
            });
        }
        for (f, e) in &self.factors {
            let base = format!("({})", f.render(k, gen));
            parts.push(if *e == 1 { base } else { format!("{base}^{e}") });
        }
        parts.join("*")
    }
}

/// A symbol `coeff·{a, b}` with factored entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSymbol {
    pub a: FactoredBivariate,
    pub b: FactoredBivariate,
    pub coeff: u32,
    spec: FieldSpec,
}

impl LocalSymbol {
    pub fn new(a: FactoredBivariate, b: FactoredBivariate, coeff: i64, spec: &FieldSpec) -> Self {
        let m = spec.m() as i64;
        LocalSymbol {
            a,
            b,
            coeff: coeff.rem_euclid(m) as u32,
            spec: spec.clone(),
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }
}

/// Intersection number of the curves `f = 0` and `g = 0` at the origin.
pub fn intersection_multiplicity(f: &BivariatePoly, g: &BivariatePoly, k: &FieldSpec) -> Multiplicity {
    if f.is_zero() || g.is_zero() {
        return None;
    }
    if !f.vanishes_at_origin() || !g.vanishes_at_origin() {
        return Some(0);
    }
    let h = f.gcd(g, k);
    let (f, g) = if h.is_constant() {
        (f.clone(), g.clone())
    } else if h.vanishes_at_origin() {
        return None;
    } else {
        // a common component away from the origin is a unit of R
        (f.div_exact(&h, k)?, g.div_exact(&h, k)?)
    };
    Some(fulton(f, g, k))
}

/// The axiomatic recursion on coprime inputs.
fn fulton(mut f: BivariatePoly, mut g: BivariatePoly, k: &FieldSpec) -> u64 {
    let mut acc = 0u64;
    loop {
        if !f.vanishes_at_origin() || !g.vanishes_at_origin() {
            return acc;
        }
        let mut r = f.restrict_y_zero();
        let mut s = g.restrict_y_zero();
        if r.is_zero() {
            std::mem::swap(&mut f, &mut g);
            std::mem::swap(&mut r, &mut s);
        }
        if s.is_zero() {
            // g = y·g', and i(y, f) = ord_x f(x, 0)
            debug_assert!(!r.is_zero(), "coprime inputs cannot both be divisible by y");
            acc += r.coeffs().iter().take_while(|c| c.is_zero()).count() as u64;
            g = g.div_y();
            continue;
        }
        let (dr, ds) = (r.degree().unwrap_or(0), s.degree().unwrap_or(0));
        if dr > ds {
            std::mem::swap(&mut f, &mut g);
            std::mem::swap(&mut r, &mut s);
        }
        let (dr, ds) = (r.degree().unwrap_or(0), s.degree().unwrap_or(0));
        let lhs = g.scale(r.lead(), k);
        let rhs = f.shift((ds - dr) as u32, 0).scale(s.lead(), k);
        g = lhs.sub(&rhs, k);
    }
}

fn check_prime(p: &BivariatePoly) -> Result<()> {
    if p.is_constant() || !p.vanishes_at_origin() {
        return Err(Error::NotThroughOrigin);
    }
    Ok(())
}

/// Exponent of `p` in `u`, matching factors up to a scalar.
pub fn prime_valuation(p: &BivariatePoly, u: &FactoredBivariate, k: &FieldSpec) -> Result<i64> {
    check_prime(p)?;
    Ok(u.factors
        .iter()
        .find(|(f, _)| f.scalar_ratio(p, k).is_some())
        .map_or(0, |(_, e)| *e))
}

/// Representative of the tame residue of `{a, b}` at `p` in `κ_p^×`.
pub fn local_residue(s: &LocalSymbol, p: &BivariatePoly) -> Result<FactoredBivariate> {
    let k = &s.spec;
    let va = prime_valuation(p, &s.a, k)?;
    let vb = prime_valuation(p, &s.b, k)?;
    let mut unit = if (va * vb) % 2 != 0 { k.neg(Fq::ONE) } else { Fq::ONE };
    let mut merged: Vec<(BivariatePoly, i64)> = Vec::new();
    let mut absorb = |u: &FactoredBivariate, power: i64, unit: &mut Fq| {
        *unit = k.mul(*unit, k.pow_i(u.unit, power));
        for (f, e) in &u.factors {
            let e = e * power;
            if let Some(lambda) = f.scalar_ratio(p, k) {
                // f^e = λ^e p^e and the p-powers cancel overall
                *unit = k.mul(*unit, k.pow_i(lambda, e));
                continue;
            }
            match merged
                .iter_mut()
                .find_map(|(g, eg)| g.scalar_ratio(f, k).map(|l| (l, eg)))
            {
                Some((lambda, eg)) => {
                    // g = λ f, so f^e = λ^{-e} g^e
                    *unit = k.mul(*unit, k.pow_i(lambda, -e));
                    *eg += e;
                }
                None => merged.push((f.clone(), e)),
            }
        }
    };
    absorb(&s.a, -vb, &mut unit);
    absorb(&s.b, va, &mut unit);
    merged.retain(|(_, e)| *e != 0);
    Ok(FactoredBivariate { unit, factors: merged })
}

fn mult_raw(p: &BivariatePoly, u: &FactoredBivariate, k: &FieldSpec) -> Result<i64> {
    check_prime(p)?;
    let mut total = 0i64;
    for (f, e) in &u.factors {
        if !f.vanishes_at_origin() {
            continue;
        }
        if f.scalar_ratio(p, k).is_some() {
            return Err(Error::SharedComponent);
        }
        let i = intersection_multiplicity(p, f, k).ok_or(Error::InfiniteIntersection)?;
        total += e * i as i64;
    }
    Ok(total)
}

/// `Σ e_i · i(p, f_i) mod m`.
pub fn mult_index(p: &BivariatePoly, u: &FactoredBivariate, k: &FieldSpec) -> Result<u32> {
    Ok(mult_raw(p, u, k)?.rem_euclid(k.m() as i64) as u32)
}

/// One prime's share of the reciprocity sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeContribution {
    pub prime: BivariatePoly,
    /// Signed integer before reduction.
    pub raw: i64,
    pub index: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reciprocity2d {
    pub holds: bool,
    pub sum: u32,
    pub breakdown: Vec<PrimeContribution>,
}

/// Primes through the origin among all factors, one normalized
/// representative per associate class, in `BivariatePoly` order.
pub fn primes_through_origin(alpha: &[LocalSymbol]) -> Vec<BivariatePoly> {
    let mut primes: BTreeMap<BivariatePoly, ()> = BTreeMap::new();
    for s in alpha {
        for u in [&s.a, &s.b] {
            for (f, _) in &u.factors {
                if f.vanishes_at_origin() {
                    primes.insert(f.normalized(&s.spec), ());
                }
            }
        }
    }
    primes.into_keys().collect()
}

/// `Σ_p r_p(∂_p α)`, which must vanish.
pub fn reciprocity_2d(alpha: &[LocalSymbol]) -> Result<Reciprocity2d> {
    let Some(k) = alpha.first().map(|s| s.spec.clone()) else {
        return Ok(Reciprocity2d {
            holds: true,
            sum: 0,
            breakdown: Vec::new(),
        });
    };
    if alpha.iter().any(|s| s.spec != k) {
        return Err(Error::FieldMismatch);
    }
    let m = k.m() as i64;
    let mut breakdown = Vec::new();
    let mut total = 0i64;
    for p in primes_through_origin(alpha) {
        let mut raw = 0i64;
        for s in alpha {
            raw += s.coeff as i64 * mult_raw(&p, &local_residue(s, &p)?, &k)?;
        }
        total += raw;
        breakdown.push(PrimeContribution {
            prime: p,
            raw,
            index: raw.rem_euclid(m) as u32,
        });
    }
    let sum = total.rem_euclid(m) as u32;
    Ok(Reciprocity2d {
        holds: sum == 0,
        sum,
        breakdown,
    })
}
