//! Dense complex matrices and the Hilbert–Schmidt geometry of M_d(C).
//!
//! Everything downstream — MASAs, conditional expectations, Choi matrices,
//! basis completion — is built on the four types here: [`ComplexMatrix`],
//! [`Basis`], [`OperatorSubspace`], and [`EigResult`].

mod jacobi;
mod lanczos;
mod simdiag;

pub use jacobi::hermitian_eig;
pub use lanczos::min_hermitian_eigenvalue;
pub use simdiag::simultaneous_diagonalize;

use crate::error::{Error, Result};
use crate::par;
use num_complex::Complex64;
use std::fmt;

/// Complex scalar used throughout: a pair of 64-bit floats.
pub type C64 = Complex64;

/// Unitarity tolerance for [`Basis`]: `‖U*U − 1‖_HS ≤ BASIS_UNITARITY_TOL · √d`.
pub const BASIS_UNITARITY_TOL: f64 = 1e-10;

/// Gram-matrix tolerance for [`OperatorSubspace`] orthonormality.
pub const SUBSPACE_GRAM_TOL: f64 = 1e-10;

/// Internal orthonormalization tolerance (Gram–Schmidt drop threshold scale).
pub const INTERNAL_ORTHO_TOL: f64 = 1e-12;

/// Residual threshold deciding whether a complement candidate carries a
/// genuinely new direction. Candidates are unit-norm matrix units, so this
/// is an absolute cut: dependent candidates land near machine epsilon,
/// independent ones are O(1).
const COMPLEMENT_RANK_TOL: f64 = 1e-8;

/// Matrix dimension above which row loops are handed to rayon.
const PAR_DIM: usize = 32;

/// Dense square complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim.min(8) {
            write!(f, "  ")?;
            for j in 0..self.dim.min(8) {
                let z = self.get(i, j);
                write!(f, "{:+.4}{:+.4}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        if self.dim > 8 {
            writeln!(f, "  …")?;
        }
        write!(f, "]")
    }
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Matrix unit E_ij: single 1 at row `i`, column `j`.
    pub fn matrix_unit(dim: usize, i: usize, j: usize) -> Self {
        assert!(i < dim && j < dim);
        let mut m = Self::zeros(dim);
        m.data[i * dim + j] = C64::new(1.0, 0.0);
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn from_data(dim: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimError {
                left: data.len(),
                right: dim * dim,
            });
        }
        Ok(Self { dim, data })
    }

    /// Diagonal matrix from real entries.
    pub fn diag(entries: &[f64]) -> Self {
        let d = entries.len();
        let mut m = Self::zeros(d);
        for (i, &x) in entries.iter().enumerate() {
            m.data[i * d + i] = C64::new(x, 0.0);
        }
        m
    }

    /// Rank-1 projection |v⟩⟨v| onto a unit vector.
    pub fn projector(v: &[C64]) -> Self {
        let d = v.len();
        Self::from_fn(d, |i, j| v[i] * v[j].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, z: C64) {
        self.data[i * self.dim + j] = z;
    }

    #[inline]
    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.dim).map(|i| self.get(i, j)).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimError {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { dim: self.dim, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { dim: self.dim, data })
    }

    pub fn scale(&self, z: C64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|a| a * z).collect(),
        }
    }

    pub fn scale_re(&self, x: f64) -> Self {
        self.scale(C64::new(x, 0.0))
    }

    /// Matrix product. Rows are computed independently, so the parallel and
    /// sequential paths produce bit-identical results.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let d = self.dim;
        let mut out = Self::zeros(d);
        let a = &self.data;
        let b = &other.data;
        let row_task = |i: usize, row: &mut [C64]| {
            for k in 0..d {
                let aik = a[i * d + k];
                if aik.re == 0.0 && aik.im == 0.0 {
                    continue;
                }
                let brow = &b[k * d..(k + 1) * d];
                for (o, &bkj) in row.iter_mut().zip(brow) {
                    *o += aik * bkj;
                }
            }
        };
        if d >= PAR_DIM {
            par::for_each_chunk_mut(&mut out.data, d, |start, row| row_task(start / d, row));
        } else {
            for i in 0..d {
                row_task(i, &mut out.data[i * d..(i + 1) * d]);
            }
        }
        Ok(out)
    }

    /// Matrix–vector product.
    pub fn matvec(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.dim {
            return Err(Error::DimError {
                left: v.len(),
                right: self.dim,
            });
        }
        let d = self.dim;
        let a = &self.data;
        Ok(par::map_indexed(d, |i| {
            let row = &a[i * d..(i + 1) * d];
            let mut acc = C64::new(0.0, 0.0);
            for (x, y) in row.iter().zip(v) {
                acc += x * y;
            }
            acc
        }))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i))
    }

    pub fn conj_entrywise(&self) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Hilbert–Schmidt inner product ⟨A,B⟩ = Tr(A*B); conjugate-linear in
    /// `self`, linear in `other`.
    pub fn hs_inner(&self, other: &Self) -> Result<C64> {
        self.check_dim(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn hs_norm_sq(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn hs_norm(&self) -> f64 {
        self.hs_norm_sq().sqrt()
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// ‖A − A*‖_HS.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                let diff = self.get(i, j) - self.get(j, i).conj();
                let w = if i == j { 1.0 } else { 2.0 };
                acc += w * diff.norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// ‖A·A* − A*·A‖_HS, zero for normal matrices.
    pub fn normality_deviation(&self) -> Result<f64> {
        let adj = self.adjoint();
        Ok(self.mul(&adj)?.sub(&adj.mul(self)?)?.hs_norm())
    }

    /// ‖A*A − 1‖_HS.
    pub fn unitarity_deviation(&self) -> f64 {
        let gram = self.adjoint().mul(self).expect("same dim");
        gram.sub(&Self::identity(self.dim)).expect("same dim").hs_norm()
    }

    /// Hermitian part (A + A*)/2.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()) * 0.5
        })
    }

    /// Anti-Hermitian part mapped to a Hermitian matrix: (A − A*)/(2i).
    pub fn skew_part(&self) -> Self {
        let half_neg_i = C64::new(0.0, -0.5);
        Self::from_fn(self.dim, |i, j| {
            (self.get(i, j) - self.get(j, i).conj()) * half_neg_i
        })
    }

    /// Off-diagonal Hilbert–Schmidt mass.
    pub fn offdiag_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    acc += self.get(i, j).norm_sqr();
                }
            }
        }
        acc.sqrt()
    }

    /// Row-major vectorization, `vec(X)[i·d + j] = X[i][j]`.
    pub fn vectorize(&self) -> &[C64] {
        &self.data
    }
}

/// Free-function form of the Hilbert–Schmidt inner product Tr(a*·b).
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<C64> {
    a.hs_inner(b)
}

/// A unitary matrix whose columns are the vectors of an orthonormal basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Basis {
    matrix: ComplexMatrix,
}

impl Basis {
    /// Wraps a matrix, enforcing ‖U*U − 1‖_HS ≤ 1e-10·√d.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(matrix, BASIS_UNITARITY_TOL)
    }

    /// Wraps a matrix, enforcing ‖U*U − 1‖_HS ≤ tol·√d.
    pub fn with_tolerance(matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        let dev = matrix.unitarity_deviation();
        let bound = tol * (matrix.dim() as f64).sqrt();
        if !dev.is_finite() || dev > bound {
            return Err(Error::NotUnitary { deviation: dev, tol: bound });
        }
        Ok(Self { matrix })
    }

    pub fn standard(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Basis vector `j` (column `j`).
    pub fn vector(&self, j: usize) -> Vec<C64> {
        self.matrix.column(j)
    }

    /// Overlap matrix of two bases: entry (i,j) = ⟨e_i, f_j⟩.
    pub fn overlaps(&self, other: &Basis) -> Result<ComplexMatrix> {
        self.matrix.adjoint().mul(other.matrix())
    }

    /// Rank-1 projection onto basis vector `j`.
    pub fn vector_projector(&self, j: usize) -> ComplexMatrix {
        ComplexMatrix::projector(&self.vector(j))
    }
}

/// Hilbert–Schmidt-orthonormal list of matrices spanning a subspace of M_d(C).
#[derive(Clone, Debug)]
pub struct OperatorSubspace {
    dim: usize,
    onb: Vec<ComplexMatrix>,
}

impl OperatorSubspace {
    /// Validates the Gram matrix (δ_ij within 1e-10) and the size bound.
    pub fn new(dim: usize, onb: Vec<ComplexMatrix>) -> Result<Self> {
        if onb.len() > dim * dim {
            return Err(Error::InvalidSubspace {
                deviation: f64::INFINITY,
            });
        }
        for m in &onb {
            if m.dim() != dim {
                return Err(Error::DimError {
                    left: m.dim(),
                    right: dim,
                });
            }
        }
        let sub = Self { dim, onb };
        let dev = sub.gram_deviation()?;
        if dev > SUBSPACE_GRAM_TOL {
            return Err(Error::InvalidSubspace { deviation: dev });
        }
        Ok(sub)
    }

    pub(crate) fn new_unchecked(dim: usize, onb: Vec<ComplexMatrix>) -> Self {
        Self { dim, onb }
    }

    pub fn empty(dim: usize) -> Self {
        Self { dim, onb: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.onb.len()
    }

    pub fn is_empty(&self) -> bool {
        self.onb.is_empty()
    }

    pub fn onb(&self) -> &[ComplexMatrix] {
        &self.onb
    }

    /// Max |⟨B_i,B_j⟩ − δ_ij| over all pairs.
    pub fn gram_deviation(&self) -> Result<f64> {
        let k = self.onb.len();
        let devs = par::map_indexed(k, |i| {
            let mut worst: f64 = 0.0;
            for j in i..k {
                let g = self.onb[i].hs_inner(&self.onb[j]).expect("same dim");
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g - C64::new(target, 0.0)).norm());
            }
            worst
        });
        Ok(devs.into_iter().fold(0.0, f64::max))
    }

    /// Orthogonal projection of `x` onto the subspace: Σ ⟨B_i,x⟩ B_i.
    pub fn project(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.dim() != self.dim {
            return Err(Error::DimError {
                left: x.dim(),
                right: self.dim,
            });
        }
        let coeffs: Vec<C64> = par::map_indexed(self.onb.len(), |i| {
            self.onb[i].hs_inner(x).expect("same dim")
        });
        let mut out = ComplexMatrix::zeros(self.dim);
        for (c, b) in coeffs.iter().zip(&self.onb) {
            for (o, v) in out.data.iter_mut().zip(&b.data) {
                *o += c * v;
            }
        }
        Ok(out)
    }

    /// ‖x − P(x)‖_HS.
    pub fn residual_norm(&self, x: &ComplexMatrix) -> Result<f64> {
        Ok(x.sub(&self.project(x)?)?.hs_norm())
    }

    /// Distance between span projectors:
    /// ‖P_self − P_other‖_HS = √(k₁ + k₂ − 2·Σ|⟨A_i,B_j⟩|²).
    pub fn span_distance(&self, other: &Self) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimError {
                left: self.dim,
                right: other.dim,
            });
        }
        let cross: f64 = par::map_indexed(self.onb.len(), |i| {
            other
                .onb
                .iter()
                .map(|b| self.onb[i].hs_inner(b).expect("same dim").norm_sqr())
                .sum::<f64>()
        })
        .into_iter()
        .sum();
        let sq = self.onb.len() as f64 + other.onb.len() as f64 - 2.0 * cross;
        Ok(sq.max(0.0).sqrt())
    }
}

/// Orthonormalizes `vectors` in the Hilbert–Schmidt geometry, dropping
/// elements whose residual after projection falls below `tol`. Output
/// length is the numerical rank of the input.
pub fn gram_schmidt(vectors: &[ComplexMatrix], tol: f64) -> Result<OperatorSubspace> {
    if !(tol > 0.0) {
        return Err(Error::Unsupported(format!(
            "gram_schmidt tolerance must be positive, got {tol}"
        )));
    }
    let Some(first) = vectors.first() else {
        return Ok(OperatorSubspace::empty(0));
    };
    let dim = first.dim();
    let mut accepted: Vec<ComplexMatrix> = Vec::with_capacity(vectors.len());
    for v in vectors {
        if v.dim() != dim {
            return Err(Error::DimError {
                left: v.dim(),
                right: dim,
            });
        }
        if let Some(next) = orthonormalize_against(v, &accepted, &[], tol) {
            accepted.push(next);
        }
    }
    Ok(OperatorSubspace::new_unchecked(dim, accepted))
}

/// Two-pass modified Gram–Schmidt of `v` against `head` then `tail`.
/// Returns the normalized residual, or None when it falls below `tol`.
fn orthonormalize_against(
    v: &ComplexMatrix,
    head: &[ComplexMatrix],
    tail: &[ComplexMatrix],
    tol: f64,
) -> Option<ComplexMatrix> {
    let dim = v.dim();
    let mut r = v.clone();
    for _pass in 0..2 {
        let coeffs: Vec<C64> = par::map_indexed(head.len() + tail.len(), |i| {
            let b = if i < head.len() { &head[i] } else { &tail[i - head.len()] };
            b.hs_inner(&r).expect("same dim")
        });
        if coeffs.is_empty() {
            break;
        }
        let bases = || head.iter().chain(tail.iter());
        if dim >= PAR_DIM {
            let coeffs = &coeffs;
            let heads: Vec<&ComplexMatrix> = bases().collect();
            par::for_each_chunk_mut(&mut r.data, dim, |start, row| {
                for (c, b) in coeffs.iter().zip(&heads) {
                    let brow = &b.data[start..start + row.len()];
                    for (o, x) in row.iter_mut().zip(brow) {
                        *o -= c * x;
                    }
                }
            });
        } else {
            for (c, b) in coeffs.iter().zip(bases()) {
                for (o, x) in r.data.iter_mut().zip(&b.data) {
                    *o -= c * x;
                }
            }
        }
    }
    let norm = r.hs_norm();
    if norm < tol {
        return None;
    }
    Some(r.scale_re(1.0 / norm))
}

/// Orthogonal complement within M_d(C): extends the input ONB with canonical
/// matrix-unit candidates (E_00, E_01, … in row-major order) and keeps the
/// directions that survive Gram–Schmidt. Output length is exactly d² − k.
pub fn orthogonal_complement(sub: &OperatorSubspace) -> Result<OperatorSubspace> {
    let dev = sub.gram_deviation()?;
    if dev > SUBSPACE_GRAM_TOL {
        return Err(Error::InvalidSubspace { deviation: dev });
    }
    let d = sub.dim();
    let want = d * d - sub.len();
    let mut complement: Vec<ComplexMatrix> = Vec::with_capacity(want);
    for i in 0..d {
        for j in 0..d {
            let cand = ComplexMatrix::matrix_unit(d, i, j);
            if let Some(next) =
                orthonormalize_against(&cand, sub.onb(), &complement, COMPLEMENT_RANK_TOL)
            {
                complement.push(next);
            }
        }
    }
    if complement.len() != want {
        return Err(Error::Numerical(format!(
            "orthogonal complement rank mismatch: expected {want}, found {}",
            complement.len()
        )));
    }
    Ok(OperatorSubspace::new_unchecked(d, complement))
}

/// Hermitian eigendecomposition result: ascending eigenvalues and the
/// unitary of eigenvectors (column j pairs with values[j]).
#[derive(Clone, Debug)]
pub struct EigResult {
    pub values: Vec<f64>,
    pub vectors: Basis,
}

impl EigResult {
    /// ‖H·U − U·diag(values)‖_HS, the defining residual.
    pub fn residual(&self, h: &ComplexMatrix) -> Result<f64> {
        let u = self.vectors.matrix();
        let hu = h.mul(u)?;
        let ud = ComplexMatrix::from_fn(h.dim(), |i, j| u.get(i, j) * self.values[j]);
        Ok(hu.sub(&ud)?.hs_norm())
    }
}

/// Test-support samplers: seeded random matrices, Hermitian matrices, and
/// unitaries. Deterministic for a fixed RNG state.
pub mod sampling {
    use super::{C64, ComplexMatrix};
    use crate::error::Result;
    use crate::linalg::Basis;
    use rand::Rng;

    /// Standard-normal pair via Box–Muller.
    fn normal_pair<R: Rng>(rng: &mut R) -> (f64, f64) {
        let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
        let u2: f64 = rng.gen_range(0.0..1.0);
        let r = (-2.0 * u1.ln()).sqrt();
        let th = 2.0 * std::f64::consts::PI * u2;
        (r * th.cos(), r * th.sin())
    }

    pub fn random_complex<R: Rng>(dim: usize, rng: &mut R) -> ComplexMatrix {
        ComplexMatrix::from_fn(dim, |_, _| {
            let (re, im) = normal_pair(rng);
            C64::new(re, im)
        })
    }

    pub fn random_hermitian<R: Rng>(dim: usize, rng: &mut R) -> ComplexMatrix {
        random_complex(dim, rng).hermitian_part()
    }

    /// Random unitary via Gram–Schmidt on the columns of a Gaussian matrix.
    pub fn random_unitary<R: Rng>(dim: usize, rng: &mut R) -> Result<Basis> {
        let g = random_complex(dim, rng);
        let mut cols: Vec<Vec<C64>> = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut v = g.column(j);
            for _pass in 0..2 {
                for q in &cols {
                    let c: C64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                    for (x, y) in v.iter_mut().zip(q) {
                        *x -= c * y;
                    }
                }
            }
            let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            for x in v.iter_mut() {
                *x /= norm;
            }
            cols.push(v);
        }
        Basis::new(ComplexMatrix::from_fn(dim, |i, j| cols[j][i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_fn(2, |i, j| {
            if i != j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }
        })
    }

    fn sigma_y() -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(2);
        m.set(0, 1, C64::new(0.0, -1.0));
        m.set(1, 0, C64::new(0.0, 1.0));
        m
    }

    fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::diag(&[1.0, -1.0])
    }

    #[test]
    fn hs_inner_identity_gives_dimension() {
        let one = ComplexMatrix::identity(3);
        let v = one.hs_inner(&one).unwrap();
        assert!((v - C64::new(3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn hs_inner_disjoint_matrix_units_vanish() {
        let a = ComplexMatrix::matrix_unit(2, 0, 0);
        let b = ComplexMatrix::matrix_unit(2, 0, 1);
        assert_eq!(a.hs_inner(&b).unwrap(), C64::new(0.0, 0.0));
    }

    #[test]
    fn hs_inner_rank_one_projectors() {
        // e = (1,0), f = (1,1)/√2: Tr(P_e P_f) = |⟨e,f⟩|² = 1/2.
        let e = [C64::new(1.0, 0.0), C64::new(0.0, 0.0)];
        let s = 1.0 / 2f64.sqrt();
        let f = [C64::new(s, 0.0), C64::new(s, 0.0)];
        let pe = ComplexMatrix::projector(&e);
        let pf = ComplexMatrix::projector(&f);
        let v = pe.hs_inner(&pf).unwrap();
        assert!((v - C64::new(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn hs_inner_dim_mismatch() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(3);
        assert!(matches!(a.hs_inner(&b), Err(Error::DimError { .. })));
    }

    #[test]
    fn hs_inner_positive_definite() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x = sampling::random_complex(4, &mut rng);
            let v = x.hs_inner(&x).unwrap();
            assert!(v.im.abs() < 1e-12 * (1.0 + v.re.abs()));
            assert!(v.re >= 0.0);
        }
        let z = ComplexMatrix::zeros(4);
        assert!(z.hs_inner(&z).unwrap().norm() < 1e-12);
    }

    #[test]
    fn gram_schmidt_normalizes_orthogonal_inputs() {
        let out = gram_schmidt(&[ComplexMatrix::identity(2), sigma_z()], 1e-12).unwrap();
        assert_eq!(out.len(), 2);
        let s = 1.0 / 2f64.sqrt();
        assert!(out.onb()[0]
            .sub(&ComplexMatrix::identity(2).scale_re(s))
            .unwrap()
            .hs_norm()
            < 1e-12);
        assert!(out.onb()[1].sub(&sigma_z().scale_re(s)).unwrap().hs_norm() < 1e-12);
    }

    #[test]
    fn gram_schmidt_drops_dependent_elements() {
        let one = ComplexMatrix::identity(2);
        let out = gram_schmidt(&[one.clone(), one.scale_re(2.0)], 1e-12).unwrap();
        assert_eq!(out.len(), 1);
    }

    #[test]
    fn gram_schmidt_empty_input() {
        let out = gram_schmidt(&[], 1e-12).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn gram_schmidt_random_gram_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let vs: Vec<_> = (0..5).map(|_| sampling::random_complex(3, &mut rng)).collect();
        let out = gram_schmidt(&vs, 1e-12).unwrap();
        assert_eq!(out.len(), 5);
        assert!(out.gram_deviation().unwrap() < 1e-12);
    }

    #[test]
    fn complement_of_sigma_z_span() {
        let s = 1.0 / 2f64.sqrt();
        let sub = OperatorSubspace::new(2, vec![sigma_z().scale_re(s)]).unwrap();
        let comp = orthogonal_complement(&sub).unwrap();
        assert_eq!(comp.len(), 3);
        // identity lies in the complement's span
        let one = ComplexMatrix::identity(2);
        assert!(comp.residual_norm(&one).unwrap() < 1e-10);
    }

    #[test]
    fn complement_of_full_space_is_empty() {
        let mut units = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                units.push(ComplexMatrix::matrix_unit(2, i, j));
            }
        }
        let sub = OperatorSubspace::new(2, units).unwrap();
        let comp = orthogonal_complement(&sub).unwrap();
        assert!(comp.is_empty());
    }

    #[test]
    fn complement_of_xz_plane_is_one_and_y() {
        let s = 1.0 / 2f64.sqrt();
        // hand check: Tr(σ_y σ_z) = 0 and Tr(σ_y σ_x) = 0, so {1, σ_y} spans the complement
        let sub =
            OperatorSubspace::new(2, vec![sigma_z().scale_re(s), sigma_x().scale_re(s)]).unwrap();
        let comp = orthogonal_complement(&sub).unwrap();
        assert_eq!(comp.len(), 2);
        let expect = OperatorSubspace::new(
            2,
            vec![ComplexMatrix::identity(2).scale_re(s), sigma_y().scale_re(s)],
        )
        .unwrap();
        assert!(comp.span_distance(&expect).unwrap() < 1e-10);
    }

    #[test]
    fn complement_rejects_non_orthonormal_input() {
        let sub = OperatorSubspace::new_unchecked(2, vec![sigma_z()]); // not normalized
        assert!(matches!(
            orthogonal_complement(&sub),
            Err(Error::InvalidSubspace { .. })
        ));
    }

    #[test]
    fn double_complement_restores_span_and_dims_add_up() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let vs: Vec<_> = (0..4).map(|_| sampling::random_complex(3, &mut rng)).collect();
        let sub = gram_schmidt(&vs, 1e-12).unwrap();
        let comp = orthogonal_complement(&sub).unwrap();
        assert_eq!(sub.len() + comp.len(), 9);
        for a in sub.onb() {
            for b in comp.onb() {
                assert!(a.hs_inner(b).unwrap().norm() < 1e-10);
            }
        }
        let back = orthogonal_complement(&comp).unwrap();
        assert!(back.span_distance(&sub).unwrap() < 1e-9);
    }

    #[test]
    fn matmul_parallel_matches_sequential_structure() {
        // d ≥ PAR_DIM exercises the chunked path; results must be identical
        // to the scalar loop.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = sampling::random_complex(40, &mut rng);
        let b = sampling::random_complex(40, &mut rng);
        let c = a.mul(&b).unwrap();
        let mut reference = ComplexMatrix::zeros(40);
        for i in 0..40 {
            for k in 0..40 {
                let aik = a.get(i, k);
                for j in 0..40 {
                    let v = reference.get(i, j) + aik * b.get(k, j);
                    reference.set(i, j, v);
                }
            }
        }
        assert_eq!(c, reference);
    }

    #[test]
    fn basis_rejects_non_unitary() {
        let m = ComplexMatrix::diag(&[1.0, 2.0]);
        assert!(matches!(Basis::new(m), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn random_unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let u = sampling::random_unitary(6, &mut rng).unwrap();
        assert!(u.matrix().unitarity_deviation() < 1e-12);
    }
}
