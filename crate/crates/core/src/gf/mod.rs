//! Finite-field substrate: `F_q`, polynomials over it, factorization and
//! power-residue symbols in finite extensions.

pub mod ext;
pub mod factor;
pub mod field;
pub mod poly;

pub use ext::{mth_power_index, norm_to_base, ExtField};
pub use factor::{irreducible_of_degree_avoiding, is_irreducible, poly_factor, Factorization};
pub use field::{FieldSpec, Fq, MAX_ORDER};
pub use poly::Poly;
