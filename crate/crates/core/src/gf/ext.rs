//! Finite extensions `F_{q^d} = F_q[t]/(P)` presented by a monic irreducible
//! polynomial, with norms and power-residue indices.

use crate::error::{Error, Result};
use crate::gf::factor::is_irreducible;
use crate::gf::field::{FieldSpec, Fq};
use crate::gf::poly::Poly;

/// `F_q[t]/(modulus)`; elements are polynomials of degree below `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    base: FieldSpec,
    modulus: Poly,
    degree: usize,
}

impl ExtField {
    pub fn new(base: &FieldSpec, modulus: Poly) -> Result<ExtField> {
        if !modulus.is_monic() || !is_irreducible(&modulus, base)? {
            return Err(Error::NotIrreducible);
        }
        Ok(ExtField::new_unchecked(base, modulus))
    }

    pub(crate) fn new_unchecked(base: &FieldSpec, modulus: Poly) -> ExtField {
        let degree = modulus.degree().expect("nonconstant modulus");
        ExtField {
            base: base.clone(),
            modulus,
            degree,
        }
    }

    /// `F_q` itself, presented as `F_q[t]/(t)`.
    pub fn trivial(base: &FieldSpec) -> ExtField {
        ExtField::new_unchecked(base, Poly::x())
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `q^d`, if it fits.
    pub fn order(&self) -> Option<u128> {
        (self.base.q() as u128).checked_pow(self.degree as u32)
    }

    pub fn reduce(&self, x: &Poly) -> Poly {
        x.rem(&self.modulus, &self.base)
    }

    pub fn from_base(&self, c: Fq) -> Poly {
        Poly::constant(c)
    }

    /// The `n`-th element in canonical order (digits base `q`, `c_0` least
    /// significant).
    pub fn element(&self, mut n: u128) -> Poly {
        let q = self.base.q() as u128;
        let mut coeffs = Vec::with_capacity(self.degree);
        for _ in 0..self.degree {
            coeffs.push(Fq::from_raw((n % q) as u32));
            n /= q;
        }
        Poly::from_coeffs(coeffs)
    }

    /// Inverse of [`ExtField::element`].
    pub fn index_of(&self, x: &Poly) -> u128 {
        let q = self.base.q() as u128;
        x.coeffs().iter().rev().fold(0u128, |acc, c| acc * q + c.raw() as u128)
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b, &self.base)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a.sub(b, &self.base)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        a.neg(&self.base)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul_mod(b, &self.modulus, &self.base)
    }

    pub fn try_inv(&self, a: &Poly) -> Result<Poly> {
        a.inv_mod(&self.modulus, &self.base).ok_or(Error::ZeroElement)
    }

    /// # Panics
    /// If `a` is zero.
    pub fn inv(&self, a: &Poly) -> Poly {
        self.try_inv(a).expect("inverse of zero in residue field")
    }

    pub fn pow(&self, a: &Poly, n: u128) -> Poly {
        a.pow_mod(n, &self.modulus, &self.base)
    }

    /// `a^n` for signed `n`; `a` must be nonzero when `n < 0`.
    pub fn pow_i(&self, a: &Poly, n: i64) -> Poly {
        if n >= 0 {
            self.pow(a, n as u128)
        } else {
            self.pow(&self.inv(a), n.unsigned_abs() as u128)
        }
    }

    /// `a^q`, the generator of `Gal(F_{q^d}/F_q)`.
    pub fn frobenius(&self, a: &Poly) -> Poly {
        self.pow(a, self.base.q() as u128)
    }

    /// `N(a) = ∏_{i<d} a^{q^i} = a^{(q^d-1)/(q-1)}`.
    pub fn norm_to_base(&self, a: &Poly) -> Fq {
        let a = self.reduce(a);
        if a.is_zero() {
            return Fq::ZERO;
        }
        let mut term = a.clone();
        let mut acc = a;
        for _ in 1..self.degree {
            term = self.frobenius(&term);
            acc = self.mul(&acc, &term);
        }
        debug_assert!(acc.is_constant());
        acc.coeff(0)
    }

    /// Power-residue index: the `k` in `Z/mZ` with `a^{(q^d-1)/m} = ζ^k`.
    ///
    /// The exponent is evaluated as `N(a)^{(q-1)/m}`, so no integer of size
    /// `q^d` is ever formed.
    pub fn power_index(&self, a: &Poly) -> Result<u32> {
        let a = self.reduce(a);
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        self.base.power_index(self.norm_to_base(&a))
    }

    /// Whether `a` lies in `(F_{q^d}^×)^m`.
    pub fn is_mth_power(&self, a: &Poly) -> Result<bool> {
        Ok(self.power_index(a)? == 0)
    }

    /// Least nonzero element (canonical order) with the given power-residue
    /// index.
    pub fn least_with_index(&self, index: u32) -> Poly {
        let index = index % self.base.m();
        (1u128..)
            .map(|n| self.element(n))
            .find(|x| self.power_index(x).expect("nonzero") == index)
            .expect("every index class is nonempty")
    }
}

/// See [`ExtField::power_index`].
pub fn mth_power_index(x: &Poly, field: &ExtField) -> Result<u32> {
    field.power_index(x)
}

/// See [`ExtField::norm_to_base`].
pub fn norm_to_base(x: &Poly, field: &ExtField) -> Fq {
    field.norm_to_base(x)
}
