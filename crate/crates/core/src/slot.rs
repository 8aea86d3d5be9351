//! Common slots for finite sets of `K₂/m` classes over `F_q(t)`.
//!
//! An element `f` whose valuation is prime to `m` at every ramified place of
//! `α` is a slot of `α`, i.e. `α = {f, b}` for some `b`. The joint
//! ramification support of a finite family is finite, so a single `f` with
//! `v(f) = 1` at every finite place of it (and `v_∞(f)` prime to `m` when
//! infinity is involved) serves the whole family.
//!
//! Cofactors are found by enumeration. Candidates `b = R + M·H` run over one
//! residue class modulo the radical `M` of the finite support of `f`: `R` is
//! fixed by CRT so that the residues at each place dividing `M` already match
//! those of `α`. A candidate is then accepted once each irreducible factor of
//! `b` is harmless and the full zero test of `α - {f, b}` passes.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::funcfield::{divisor, residue, valuation, Place, RationalFunction};
use crate::gf::factor::monic_by_index;
use crate::gf::field::gcd_u64;
use crate::gf::{irreducible_of_degree_avoiding, poly_factor, FieldSpec, Fq, Poly};
use crate::k2::{is_zero, ramification, tame_residue, K2Element, RamificationProfile, Symbol2};

/// Default cap on cofactor candidates examined per class.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// A finite family of classes over one field.
#[derive(Clone, Debug)]
pub struct SlotProblem {
    pub spec: FieldSpec,
    pub classes: Vec<K2Element>,
}

impl SlotProblem {
    pub fn new(spec: &FieldSpec, classes: Vec<K2Element>) -> Result<SlotProblem> {
        if classes.iter().any(|c| c.spec() != spec) {
            return Err(Error::FieldMismatch);
        }
        Ok(SlotProblem {
            spec: spec.clone(),
            classes,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotStatus {
    /// A cofactor was found and re-verified.
    Certified,
    /// The coprimality precondition holds but the bounded search found no
    /// cofactor. This is not evidence against `f` being a slot.
    PreconditionVerifiedOnly,
}

impl SlotStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SlotStatus::Certified => "certified",
            SlotStatus::PreconditionVerifiedOnly => "precondition-verified-only",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotCertificate {
    pub f: RationalFunction,
    /// Ramification support of the class.
    pub support: Vec<Place>,
    /// `v(f)` for each place of `support`.
    pub valuations: Vec<(Place, i64)>,
    /// `b` with `α - {f, b} = 0`, when found.
    pub cofactor: Option<RationalFunction>,
    pub status: SlotStatus,
    pub candidates_examined: u64,
}

/// Union of the ramification supports of all classes, sorted.
pub fn joint_support(problem: &SlotProblem) -> Vec<Place> {
    let mut out = BTreeSet::new();
    for alpha in &problem.classes {
        out.extend(ramification(alpha).places().cloned());
    }
    out.into_iter().collect()
}

/// `f` with `v(f) = 1` at every finite place of `places` and `v_∞(f)` prime
/// to `m` when infinity is among them.
///
/// `f` is the product of the finite place polynomials. If that leaves
/// `gcd(deg f, m) ≠ 1` and infinity is required, it is multiplied by the least
/// irreducible of the least degree `d` restoring coprimality that avoids the
/// given places; such an extra place is unramified for every class involved,
/// so the slot property is unaffected.
pub fn weak_approx_slot(places: &[Place], k: &FieldSpec) -> Result<RationalFunction> {
    let finite: BTreeSet<Poly> = places
        .iter()
        .filter_map(|v| match v {
            Place::Finite(p) => Some(p.clone()),
            Place::Infinity => None,
        })
        .collect();
    let mut f = finite.iter().fold(Poly::one(), |acc, p| acc.mul(p, k));
    let deg = f.degree().unwrap_or(0) as u64;
    let m = k.m() as u64;
    if places.contains(&Place::Infinity) && gcd_u64(deg, m) != 1 {
        let mut last_err = None;
        // the first admissible degree suffices unless every irreducible of
        // that degree is already in use
        for d in (1..).filter(|d| gcd_u64(deg + d, m) == 1).take(64) {
            match irreducible_of_degree_avoiding(d as usize, &finite, k) {
                Ok(g) => {
                    f = f.mul(&g, k);
                    last_err = None;
                    break;
                }
                Err(e) => last_err = Some(e),
            }
        }
        if let Some(e) = last_err {
            return Err(e);
        }
    }
    Ok(RationalFunction::from_poly(f))
}

/// Checks the coprimality precondition at each ramified place of `alpha`.
fn check_precondition(profile: &RamificationProfile, f: &RationalFunction, k: &FieldSpec) -> Result<Vec<(Place, i64)>> {
    let m = k.m() as u64;
    profile
        .places()
        .map(|v| {
            let val = valuation(v, f, k)?;
            if gcd_u64(val.unsigned_abs(), m) != 1 {
                return Err(Error::PreconditionViolated {
                    place: v.clone(),
                    valuation: val,
                });
            }
            Ok((v.clone(), val))
        })
        .collect()
}

/// Verifies that `f` satisfies the slot precondition for `alpha` and searches
/// for a cofactor `b` of degree at most `degree_bound`.
pub fn certify_slot(alpha: &K2Element, f: &RationalFunction, degree_bound: usize) -> Result<SlotCertificate> {
    certify_slot_with_budget(alpha, f, degree_bound, DEFAULT_BUDGET)
}

pub fn certify_slot_with_budget(
    alpha: &K2Element,
    f: &RationalFunction,
    degree_bound: usize,
    budget: u64,
) -> Result<SlotCertificate> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let k = alpha.spec();
    let profile = ramification(alpha);
    let valuations = check_precondition(&profile, f, k)?;
    let search = CofactorSearch::new(alpha, &profile, f)?;
    let (cofactor, examined) = search.run(degree_bound, budget);
    Ok(SlotCertificate {
        f: f.clone(),
        support: profile.places().cloned().collect(),
        valuations,
        status: if cofactor.is_some() {
            SlotStatus::Certified
        } else {
            SlotStatus::PreconditionVerifiedOnly
        },
        cofactor,
        candidates_examined: examined,
    })
}

/// Common slot for the whole family plus one certificate per class.
pub fn strong_linkage(problem: &SlotProblem, degree_bound: usize) -> Result<(RationalFunction, Vec<SlotCertificate>)> {
    strong_linkage_with(problem, |_| degree_bound, DEFAULT_BUDGET)
}

/// As [`strong_linkage`], with the degree bound computed from the constructed
/// slot (e.g. `|f| f.num().deg_i() as usize + 4`).
pub fn strong_linkage_with(
    problem: &SlotProblem,
    degree_bound: impl Fn(&RationalFunction) -> usize,
    budget: u64,
) -> Result<(RationalFunction, Vec<SlotCertificate>)> {
    let support = joint_support(problem);
    let f = weak_approx_slot(&support, &problem.spec)?;
    let bound = degree_bound(&f);
    let certs = problem
        .classes
        .iter()
        .map(|alpha| certify_slot_with_budget(alpha, &f, bound, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok((f, certs))
}

/// `F_q(t)(f^{1/m})`, the cyclic extension in which `f` becomes an `m`-th
/// power and which therefore splits every class having `f` as a slot.
pub fn splitting_field_descriptor(f: &RationalFunction, k: &FieldSpec, gen: &str) -> String {
    let base = format!("F_{}(t)", k.q());
    if f.is_one() {
        return base;
    }
    let s = f.render(k, "t", gen);
    let s = if s.chars().all(|c| c.is_alphanumeric()) {
        s
    } else {
        format!("({s})")
    };
    format!("{base}({s}^{{1/{}}})", k.m())
}

struct CofactorSearch<'a> {
    alpha: &'a K2Element,
    f: &'a RationalFunction,
    /// Radical of the finite support of `f` and the CRT residue modulo it.
    radical: Poly,
    base: Poly,
    inf_target: u32,
}

impl<'a> CofactorSearch<'a> {
    fn new(alpha: &'a K2Element, profile: &RamificationProfile, f: &'a RationalFunction) -> Result<Self> {
        let k = alpha.spec();
        let m = k.m() as i64;
        let mut radical = Poly::one();
        let mut base = Poly::zero();
        for (v, val) in divisor(f, k, 0)? {
            let Place::Finite(p) = &v else { continue };
            // at P | f with b a unit: ∂_P{f, b} = b̄^{v_P(f)}
            let target = profile.index_at(&v) as i64;
            let x = (0..m).find(|x| (val * x - target).rem_euclid(m) == 0).unwrap_or(0);
            let r = v.residue_field(k).field.least_with_index(x as u32);
            base = crt(&base, &radical, &r, p, k);
            radical = radical.mul(p, k);
        }
        Ok(CofactorSearch {
            alpha,
            f,
            radical,
            base,
            inf_target: profile.index_at(&Place::Infinity),
        })
    }

    /// Candidates in order: `H = 0`, then `H` by degree, leading coefficient
    /// (`-1`, `1`, then the rest ascending) and lower coefficients.
    fn run(&self, degree_bound: usize, budget: u64) -> (Option<RationalFunction>, u64) {
        let k = self.alpha.spec();
        let mut examined = 0u64;
        if !self.base.is_zero() && self.base.degree().unwrap_or(0) <= degree_bound {
            examined += 1;
            if let Some(b) = self.try_candidate(&self.base) {
                return (Some(b), examined);
            }
        }
        let rad_deg = self.radical.degree().unwrap_or(0);
        if rad_deg > degree_bound {
            return (None, examined);
        }
        let mut leads = vec![k.neg(Fq::ONE)];
        if !leads.contains(&Fq::ONE) {
            leads.push(Fq::ONE);
        }
        for c in k.nonzero_elements() {
            if !leads.contains(&c) {
                leads.push(c);
            }
        }
        for d in 0..=(degree_bound - rad_deg) {
            let count = (k.q() as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
            for &lead in &leads {
                for n in 0..count {
                    if examined >= budget {
                        return (None, examined);
                    }
                    examined += 1;
                    let h = monic_by_index(d, n, k).scale(lead, k);
                    let b = self.base.add(&self.radical.mul(&h, k), k);
                    if let Some(b) = self.try_candidate(&b) {
                        return (Some(b), examined);
                    }
                }
            }
        }
        (None, examined)
    }

    fn try_candidate(&self, b: &Poly) -> Option<RationalFunction> {
        let k = self.alpha.spec();
        let m = k.m();
        let b = RationalFunction::from_poly(b.clone());
        let fb = Symbol2::new(self.f.clone(), b.clone(), 1, m).ok()?;
        if tame_residue(&fb, &Place::Infinity, k).index != self.inf_target {
            return None;
        }
        let fac = poly_factor(b.num(), k, 0).ok()?;
        for (q, e) in &fac.factors {
            // q does not divide f, and α is unramified at q
            let v = Place::Finite(q.clone());
            let r = residue(&v, self.f, k).ok()?;
            let idx = v.residue_field(k).field.power_index(&r).ok()?;
            if !(*e as u64 * idx as u64).is_multiple_of(m as u64) {
                return None;
            }
        }
        let diff = self.alpha.minus_symbol(self.f, &b).ok()?;
        is_zero(&diff).then_some(b)
    }
}

/// `x ≡ a (mod ma)`, `x ≡ b (mod mb)` for coprime moduli; result reduced
/// modulo `ma·mb`.
fn crt(a: &Poly, ma: &Poly, b: &Poly, mb: &Poly, k: &FieldSpec) -> Poly {
    let inv = ma.inv_mod(mb, k).expect("coprime moduli");
    let diff = b.sub(a, k).mul_mod(&inv, mb, k);
    a.add(&ma.mul(&diff, k), k).rem(&ma.mul(mb, k), k)
}
