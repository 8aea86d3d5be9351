//! Symbol algebras `(a, b)_{K,ω}` over finite fields `K`: generated by `x, y`
//! with `x^m = a`, `y^m = b`, `yx = ωxy`, where ω is the fixed root of unity
//! of the [`FieldSpec`].

use crate::error::{Error, Result};
use crate::gf::{ExtField, FieldSpec, Poly};
use crate::k2::Symbol2;

/// Default enumeration cap for [`split_witness`].
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// `(a, b)_{K,ω}` with basis `x^i y^j`, `0 ≤ i, j < m`, indexed `i·m + j`.
#[derive(Clone, Debug)]
pub struct SymbolAlgebra {
    field: ExtField,
    a: Poly,
    b: Poly,
    m: usize,
    /// `basis[s]·basis[t] = coeff · basis[target]`, stored at `s·m² + t`.
    table: Vec<(Poly, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitWitness {
    /// `(x₀, y₀, z₀) ≠ 0` with `a·x₀² + b·y₀² = z₀²`; `m = 2` only.
    Conic { x: Poly, y: Poly, z: Poly },
    /// A nonzero element with singular left multiplication.
    ZeroDivisor(Vec<Poly>),
}

impl SymbolAlgebra {
    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b(&self) -> &Poly {
        &self.b
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    /// `m²`.
    pub fn dimension(&self) -> usize {
        self.m * self.m
    }

    pub fn basis_index(&self, i: usize, j: usize) -> usize {
        i * self.m + j
    }

    /// Structure constants of a pair of basis elements.
    pub fn basis_product(&self, s: usize, t: usize) -> (&Poly, usize) {
        let (c, target) = &self.table[s * self.dimension() + t];
        (c, *target)
    }

    /// Full multiplication table as coordinate vectors, `[s][t][coordinate]`.
    pub fn table(&self) -> Vec<Vec<Vec<Poly>>> {
        let n = self.dimension();
        (0..n)
            .map(|s| {
                (0..n)
                    .map(|t| {
                        let (c, target) = self.basis_product(s, t);
                        let mut v = vec![Poly::zero(); n];
                        v[target] = c.clone();
                        v
                    })
                    .collect()
            })
            .collect()
    }

    pub fn basis_element(&self, s: usize) -> Vec<Poly> {
        let mut v = vec![Poly::zero(); self.dimension()];
        v[s] = Poly::one();
        v
    }

    pub fn mul(&self, u: &[Poly], v: &[Poly]) -> Vec<Poly> {
        let n = self.dimension();
        let mut out = vec![Poly::zero(); n];
        for (s, us) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (t, vt) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let (c, target) = self.basis_product(s, t);
                let term = self.field.mul(&self.field.mul(us, vt), c);
                out[target] = self.field.add(&out[target], &term);
            }
        }
        out
    }

    /// Matrix of `z ↦ e·z` in the basis, rows indexed by output coordinate.
    #[allow(clippy::needless_range_loop)]
    pub fn left_multiplication(&self, e: &[Poly]) -> Vec<Vec<Poly>> {
        let n = self.dimension();
        let mut mat = vec![vec![Poly::zero(); n]; n];
        for t in 0..n {
            let col = self.mul(e, &self.basis_element(t));
            for (row, c) in col.into_iter().enumerate() {
                mat[row][t] = c;
            }
        }
        mat
    }
}

/// Builds the multiplication table
/// `(x^i y^j)(x^k y^l) = ω^{jk} a^{⌊(i+k)/m⌋} b^{⌊(j+l)/m⌋} x^{(i+k) mod m} y^{(j+l) mod m}`
/// and checks associativity on every basis triple.
pub fn build_algebra(a: &Poly, b: &Poly, field: &ExtField) -> Result<SymbolAlgebra> {
    let a = field.reduce(a);
    let b = field.reduce(b);
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let k = field.base();
    let m = k.m() as usize;
    let omega = Poly::constant(k.zeta());
    let n = m * m;
    let mut table = Vec::with_capacity(n * n);
    for s in 0..n {
        let (i, j) = (s / m, s % m);
        for t in 0..n {
            let (kk, l) = (t / m, t % m);
            let c = field.mul(
                &field.pow(&omega, (j * kk) as u128),
                &field.mul(
                    &field.pow(&a, ((i + kk) / m) as u128),
                    &field.pow(&b, ((j + l) / m) as u128),
                ),
            );
            table.push((c, ((i + kk) % m) * m + (j + l) % m));
        }
    }
    let alg = SymbolAlgebra {
        field: field.clone(),
        a,
        b,
        m,
        table,
    };
    for s in 0..n {
        for t in 0..n {
            for u in 0..n {
                let (c1, st) = alg.basis_product(s, t);
                let (c2, left) = alg.basis_product(st, u);
                let (c3, tu) = alg.basis_product(t, u);
                let (c4, right) = alg.basis_product(s, tu);
                if left != right || field.mul(c1, c2) != field.mul(c3, c4) {
                    return Err(Error::NonAssociative(s, t, u));
                }
            }
        }
    }
    Ok(alg)
}

/// The algebra attached to `coeff·{a, b}` with constant entries, realized as
/// `(a^coeff, b)` over `F_q`.
pub fn symbol_to_algebra(s: &Symbol2, k: &FieldSpec) -> Result<SymbolAlgebra> {
    let (Some(a), Some(b)) = (s.a.as_constant(), s.b.as_constant()) else {
        return Err(Error::NonConstantEntries);
    };
    let field = ExtField::trivial(k);
    build_algebra(&Poly::constant(k.pow(a, s.coeff as u128)), &Poly::constant(b), &field)
}

/// Rank of a matrix over `field` by Gaussian elimination.
pub fn rank(mut mat: Vec<Vec<Poly>>, field: &ExtField) -> usize {
    let rows = mat.len();
    let cols = mat.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pivot);
        let inv = field.inv(&mat[r][c]);
        let pivot_row: Vec<Poly> = mat[r].iter().map(|x| field.mul(x, &inv)).collect();
        for (i, row) in mat.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(x, &field.mul(&factor, p));
            }
        }
        mat[r] = pivot_row;
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Dimension of `{z : zx = xz, zy = yz}` over the base field.
#[allow(clippy::needless_range_loop)]
pub fn center_dimension(alg: &SymbolAlgebra) -> usize {
    let n = alg.dimension();
    let field = &alg.field;
    let gens = [alg.basis_index(1 % alg.m, 0), alg.basis_index(0, 1 % alg.m)];
    let mut rows = vec![vec![Poly::zero(); n]; 2 * n];
    for (g_idx, &g) in gens.iter().enumerate() {
        for s in 0..n {
            let (c1, t1) = alg.basis_product(s, g);
            let (c2, t2) = alg.basis_product(g, s);
            let r1 = &mut rows[g_idx * n + t1][s];
            *r1 = field.add(r1, c1);
            let r2 = &mut rows[g_idx * n + t2][s];
            *r2 = field.sub(r2, c2);
        }
    }
    n - rank(rows, field)
}

/// Basis order used when enumerating zero-divisor candidates: by `i + j`,
/// then `i` descending, so that mixed monomials appear early.
fn enumeration_basis(m: usize) -> Vec<usize> {
    let mut basis: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    basis.sort_by_key(|&(i, j)| (i + j, std::cmp::Reverse(i)));
    basis.into_iter().map(|(i, j)| i * m + j).collect()
}

/// A witness that the algebra is split.
///
/// For `m = 2` the conic `a x² + b y² = z²` is searched for a nontrivial
/// point; otherwise a nonzero element with `det(L_e) = 0` is searched for.
/// Every symbol algebra over a finite field is split, so exhaustion of
/// `budget` is a limit of the search, not a disproof.
pub fn split_witness(alg: &SymbolAlgebra, budget: u64) -> Result<SplitWitness> {
    let field = &alg.field;
    let size = field.order().unwrap_or(u128::MAX);
    if alg.m == 2 {
        let total = size.saturating_mul(size).saturating_mul(size);
        let mut examined = 0u64;
        for n in 1..total {
            if examined >= budget {
                break;
            }
            examined += 1;
            let (x, y, z) = (
                field.element(n / (size * size)),
                field.element((n / size) % size),
                field.element(n % size),
            );
            let lhs = field.add(
                &field.mul(&alg.a, &field.mul(&x, &x)),
                &field.mul(&alg.b, &field.mul(&y, &y)),
            );
            if lhs == field.mul(&z, &z) {
                return Ok(SplitWitness::Conic { x, y, z });
            }
        }
        return Err(Error::BudgetExhausted(examined));
    }
    let n = alg.dimension();
    let order = enumeration_basis(alg.m);
    let mut examined = 0u64;
    let mut counter = 1u128;
    while examined < budget {
        examined += 1;
        let mut e = vec![Poly::zero(); n];
        let mut rest = counter;
        for &s in &order {
            e[s] = field.element(rest % size);
            rest /= size;
        }
        if rest != 0 {
            break;
        }
        if rank(alg.left_multiplication(&e), field) < n {
            return Ok(SplitWitness::ZeroDivisor(e));
        }
        counter += 1;
    }
    Err(Error::BudgetExhausted(examined))
}

/// Independent check of a witness returned by [`split_witness`].
pub fn verify_witness(alg: &SymbolAlgebra, w: &SplitWitness) -> bool {
    let field = &alg.field;
    match w {
        SplitWitness::Conic { x, y, z } => {
            let nonzero = !(x.is_zero() && y.is_zero() && z.is_zero());
            let lhs = field.add(
                &field.mul(&alg.a, &field.mul(x, x)),
                &field.mul(&alg.b, &field.mul(y, y)),
            );
            nonzero && lhs == field.mul(z, z)
        }
        SplitWitness::ZeroDivisor(e) => {
            e.iter().any(|c| !c.is_zero()) && rank(alg.left_multiplication(e), field) < alg.dimension()
        }
    }
}
