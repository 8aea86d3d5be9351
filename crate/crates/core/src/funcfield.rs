//! Places, valuations and residue maps of the rational function field
//! `F = F_q(t)`.
//!
//! The place at infinity uses the local coordinate `s = 1/t`, so
//! `v_∞(f) = deg(den) - deg(num)` and its residue field is `F_q`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{is_irreducible, poly_factor, ExtField, FieldSpec, Fq, Poly};

/// A closed point of `P¹` over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    /// The zero set of a monic irreducible polynomial.
    Finite(Poly),
    Infinity,
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Finite(a), Place::Finite(b)) => a.cmp(b),
            (Place::Finite(_), Place::Infinity) => Ordering::Less,
            (Place::Infinity, Place::Finite(_)) => Ordering::Greater,
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    /// Field-free rendering; coefficients of extension fields appear as raw
    /// encodings `#n`. Use [`Place::render`] when the field is at hand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Finite(p) => {
                let mut terms = Vec::new();
                for (i, c) in p.coeffs().iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mono = match i {
                        0 => String::new(),
                        1 => "t".to_string(),
                        _ => format!("t^{i}"),
                    };
                    terms.push(match (c.raw(), i) {
                        (r, 0) => r.to_string(),
                        (1, _) => mono,
                        (r, _) => format!("{r}*{mono}"),
                    });
                }
                write!(f, "({})", terms.join("+"))
            }
        }
    }
}

impl Place {
    /// Finite place of a monic irreducible polynomial.
    pub fn finite(p: Poly, k: &FieldSpec) -> Result<Place> {
        if p.is_constant() || !p.is_monic() || !is_irreducible(&p, k)? {
            return Err(Error::NotIrreducible);
        }
        Ok(Place::Finite(p))
    }

    /// Degree of the residue field over `F_q` (1 at infinity).
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(1),
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    pub fn residue_field(&self, k: &FieldSpec) -> ResidueField {
        let field = match self {
            Place::Finite(p) => ExtField::new_unchecked(k, p.clone()),
            Place::Infinity => ExtField::trivial(k),
        };
        ResidueField {
            place: self.clone(),
            field,
        }
    }

    /// `(poly)` for finite places, `inf` for the place at infinity.
    pub fn render(&self, k: &FieldSpec, gen: &str) -> String {
        match self {
            Place::Infinity => "inf".to_string(),
            Place::Finite(p) => format!("({})", p.render(k, "t", gen)),
        }
    }
}

/// The residue field κ_v of a place, of cardinality `q^deg(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    pub place: Place,
    pub field: ExtField,
}

impl ResidueField {
    pub fn degree(&self) -> usize {
        self.field.degree()
    }
}

/// Nonzero-denominator quotient `num/den`, kept reduced with monic
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly, k: &FieldSpec) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = num.gcd(&den, k);
        let (num, den) = (num.quot(&g, k), den.quot(&g, k));
        let c = k.inv(den.lead());
        Ok(RationalFunction {
            num: num.scale(c, k),
            den: den.scale(c, k),
        })
    }

    pub fn zero() -> RationalFunction {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RationalFunction {
        RationalFunction::from_poly(Poly::one())
    }

    pub fn t() -> RationalFunction {
        RationalFunction::from_poly(Poly::x())
    }

    pub fn constant(c: Fq) -> RationalFunction {
        RationalFunction::from_poly(Poly::constant(c))
    }

    pub fn from_poly(num: Poly) -> RationalFunction {
        RationalFunction { num, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The constant value, if `self ∈ F_q`.
    pub fn as_constant(&self) -> Option<Fq> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self, k: &FieldSpec) -> Self {
        let num = self.num.mul(&other.den, k).add(&other.num.mul(&self.den, k), k);
        RationalFunction::new(num, self.den.mul(&other.den, k), k).expect("nonzero denominator")
    }

    pub fn neg(&self, k: &FieldSpec) -> Self {
        RationalFunction {
            num: self.num.neg(k),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self, k: &FieldSpec) -> Self {
        self.add(&other.neg(k), k)
    }

    pub fn mul(&self, other: &Self, k: &FieldSpec) -> Self {
        RationalFunction::new(self.num.mul(&other.num, k), self.den.mul(&other.den, k), k).expect("nonzero denominator")
    }

    pub fn inv(&self, k: &FieldSpec) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RationalFunction::new(self.den.clone(), self.num.clone(), k)
    }

    pub fn div(&self, other: &Self, k: &FieldSpec) -> Result<Self> {
        Ok(self.mul(&other.inv(k)?, k))
    }

    pub fn pow(&self, n: i64, k: &FieldSpec) -> Result<Self> {
        let base = if n < 0 { self.inv(k)? } else { self.clone() };
        let e = n.unsigned_abs();
        Ok(RationalFunction {
            num: base.num.pow(e, k),
            den: base.den.pow(e, k),
        })
    }

    /// Pullback along `t ↦ t^n`.
    pub fn compose_monomial(&self, n: usize, k: &FieldSpec) -> Self {
        RationalFunction::new(self.num.compose_monomial(n), self.den.compose_monomial(n), k)
            .expect("nonzero denominator")
    }

    /// Canonical text form, `num` or `num/den` with parentheses as needed.
    pub fn render(&self, k: &FieldSpec, var: &str, gen: &str) -> String {
        let num = self.num.render(k, var, gen);
        if self.den.is_one() {
            return num;
        }
        let den = self.den.render(k, var, gen);
        let num = if self.num.term_count() > 1 {
            format!("({num})")
        } else {
            num
        };
        let den_atomic = self.den.term_count() == 1 && self.den.lead() == Fq::ONE;
        let den = if den_atomic { den } else { format!("({den})") };
        format!("{num}/{den}")
    }
}

fn multiplicity(f: &Poly, p: &Poly, k: &FieldSpec) -> (i64, Poly) {
    let mut rest = f.clone();
    let mut n = 0;
    loop {
        let (q, r) = rest.divrem(p, k);
        if !r.is_zero() {
            return (n, rest);
        }
        rest = q;
        n += 1;
    }
}

/// `v(f)`; `Z`-valuation attached to the place.
pub fn valuation(v: &Place, f: &RationalFunction, k: &FieldSpec) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    Ok(match v {
        Place::Infinity => f.den.deg_i() - f.num.deg_i(),
        Place::Finite(p) => multiplicity(&f.num, p, k).0 - multiplicity(&f.den, p, k).0,
    })
}

/// `(v(f), residue of f·π^{-v(f)})` for the uniformizer π = P at a finite
/// place and π = 1/t at infinity.
pub fn unit_residue(v: &Place, f: &RationalFunction, k: &FieldSpec) -> Result<(i64, Poly)> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    match v {
        Place::Infinity => Ok((
            f.den.deg_i() - f.num.deg_i(),
            Poly::constant(k.div(f.num.lead(), f.den.lead())),
        )),
        Place::Finite(p) => {
            let (vn, n0) = multiplicity(&f.num, p, k);
            let (vd, d0) = multiplicity(&f.den, p, k);
            let d0 = d0.rem(p, k).inv_mod(p, k).expect("unit after stripping");
            Ok((vn - vd, n0.mul_mod(&d0, p, k)))
        }
    }
}

/// `f̄ ∈ κ_v^×` for a unit `f` at `v`.
pub fn residue(v: &Place, f: &RationalFunction, k: &FieldSpec) -> Result<Poly> {
    let (valuation, r) = unit_residue(v, f, k)?;
    if valuation != 0 {
        return Err(Error::NotAUnit {
            place: v.clone(),
            valuation,
        });
    }
    Ok(r)
}

/// All places with nonzero valuation, with the valuations, sorted.
pub fn divisor(f: &RationalFunction, k: &FieldSpec, seed: u64) -> Result<Vec<(Place, i64)>> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut out: Vec<(Place, i64)> = Vec::new();
    for (poly, sign) in [(&f.num, 1i64), (&f.den, -1i64)] {
        if poly.is_constant() {
            continue;
        }
        for (g, e) in poly_factor(poly, k, seed)?.factors {
            out.push((Place::Finite(g), sign * e as i64));
        }
    }
    let v_inf = f.den.deg_i() - f.num.deg_i();
    if v_inf != 0 {
        out.push((Place::Infinity, v_inf));
    }
    out.sort();
    Ok(out)
}

/// Places where `f` has nonzero valuation: finite places by (degree,
/// coefficients) and then infinity.
pub fn support(f: &RationalFunction, k: &FieldSpec) -> Result<Vec<Place>> {
    Ok(divisor(f, k, 0)?.into_iter().map(|(v, _)| v).collect())
}
