//! Structure matrices, compound (minor) matrices, basis change and the
//! matrix isomorphism criterion for (n+2)-dimensional n-Lie algebras.
//!
//! Conventions used everywhere in this crate:
//!
//! * Pairs `(i, j)`, `i < j`, are ordered lexicographically: (1,2), (1,3), ..,
//!   (1,d), (2,3), .., (d-1,d). Column `(i, j)` of the structure matrix holds
//!   the coordinates of the bracket of all basis vectors except `e_i, e_j`.
//! * A basis change `T` has as column `j` the coordinates of the new basis
//!   vector `f_j`. [`change_basis`] rewrites the bracket in the basis `f`.
//! * The map `e_j -> f_j` is then an isomorphism from `change_basis(A, T)` onto
//!   `A`, and the criterion reads `T * B = Bbar * T_*` with `B` the structure
//!   matrix of `change_basis(A, T)` and `Bbar` that of `A`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::combin::{complement, subsets};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{axpy, is_zero, Matrix};

/// Lexicographic list of pairs `(i, j)`, `i < j < d` (0-based).
pub fn pairs(d: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(d * (d - 1) / 2);
    for i in 0..d {
        for j in i + 1..d {
            v.push((i, j));
        }
    }
    v
}

/// Position of `(i, j)` (0-based, `i < j`) in [`pairs`].
pub fn pair_index(d: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < d);
    i * d - i * (i + 1) / 2 + (j - i - 1)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureMatrix {
    n: usize,
    matrix: Matrix,
}

impl StructureMatrix {
    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Wraps a raw `(n+2) x (n+1)(n+2)/2` matrix.
    pub fn from_matrix(n: usize, matrix: Matrix) -> Result<StructureMatrix> {
        let d = n + 2;
        if matrix.rows() != d || matrix.cols() != d * (d - 1) / 2 {
            return Err(Error::ShapeMismatch(format!(
                "structure matrix for n={n} must be {d}x{}, got {}x{}",
                d * (d - 1) / 2,
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(StructureMatrix { n, matrix })
    }

    /// Rebuilds the algebra whose structure matrix this is.
    pub fn to_algebra(&self) -> Result<Algebra> {
        let d = self.n + 2;
        let brackets =
            pairs(d).into_iter().enumerate().map(|(c, (i, j))| (complement(d, &[i, j]), self.matrix.column(c)));
        Algebra::from_brackets(self.n, d, self.matrix.field(), brackets)
    }
}

/// The structure matrix of an algebra with `d = n + 2`.
pub fn structure_matrix(a: &Algebra) -> Result<StructureMatrix> {
    let (n, d) = (a.arity(), a.dim());
    if d != n + 2 {
        return Err(Error::WrongDimension { expected: n + 2, got: d });
    }
    let cols: Vec<Vec<u8>> = pairs(d)
        .into_iter()
        .map(|(i, j)| a.bracket_basis(&complement(d, &[i, j])).expect("complement is a valid key"))
        .collect();
    Ok(StructureMatrix { n, matrix: Matrix::from_columns(a.field(), d, &cols) })
}

/// An invertible transition matrix; column `j` is the new basis vector `f_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisChange {
    t: Matrix,
}

impl BasisChange {
    pub fn new(t: Matrix) -> Result<BasisChange> {
        if !t.is_square() {
            return Err(Error::ShapeMismatch(format!("{}x{} transition matrix", t.rows(), t.cols())));
        }
        if t.det() == 0 {
            return Err(Error::SingularMatrix);
        }
        Ok(BasisChange { t })
    }

    pub fn identity(field: Field, d: usize) -> BasisChange {
        BasisChange { t: Matrix::identity(field, d) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.t
    }

    pub fn into_matrix(self) -> Matrix {
        self.t
    }

    pub fn dim(&self) -> usize {
        self.t.rows()
    }

    pub fn inverse(&self) -> BasisChange {
        BasisChange { t: self.t.inverse().expect("basis change is invertible") }
    }

    /// `self` followed by `other`: the basis `f = eT` is replaced by `fS`, i.e. `e(TS)`.
    pub fn then(&self, other: &BasisChange) -> BasisChange {
        BasisChange { t: self.t.mul(&other.t) }
    }

    /// Uniform over `GL(d, 2^m)`, by rejection.
    pub fn random<R: Rng + ?Sized>(field: Field, d: usize, rng: &mut R) -> BasisChange {
        loop {
            let rows: Vec<Vec<u8>> =
                (0..d).map(|_| (0..d).map(|_| rng.gen_range(0..field.order()) as u8).collect()).collect();
            if let Ok(t) = BasisChange::new(Matrix::from_rows(field, d, &rows)) {
                return t;
            }
        }
    }

    /// [`BasisChange::random`] driven by a ChaCha8 stream seeded with `seed`.
    pub fn seeded(field: Field, d: usize, seed: u64) -> BasisChange {
        BasisChange::random(field, d, &mut ChaCha8Rng::seed_from_u64(seed))
    }
}

/// `T_*`: entry at row `(i, j)`, column `(k, l)` is the determinant of `T` with
/// rows `i, j` and columns `k, l` deleted.
pub fn compound_matrix(t: &BasisChange) -> Matrix {
    compound_of(t.matrix())
}

pub(crate) fn compound_of(t: &Matrix) -> Matrix {
    let d = t.rows();
    let f = t.field();
    let ps = pairs(d);
    let keep: Vec<Vec<usize>> = ps.iter().map(|&(i, j)| complement(d, &[i, j])).collect();
    let m = d - 2;
    let mut out = Matrix::zeros(f, ps.len(), ps.len());
    let mut minor = Matrix::zeros(f, m, m);
    for (r, rows) in keep.iter().enumerate() {
        for (c, cols) in keep.iter().enumerate() {
            for (a, &ri) in rows.iter().enumerate() {
                for (b, &cj) in cols.iter().enumerate() {
                    minor.set(a, b, t.get(ri, cj));
                }
            }
            out.set(r, c, minor.det());
        }
    }
    out
}

/// `T * B == Bbar * T_*`.
///
/// True exactly when `e_j -> f_j = sum_m t_mj e_m` is an isomorphism from the
/// algebra with structure matrix `b` onto the one with structure matrix `bbar`.
pub fn iso_criterion(b: &StructureMatrix, bbar: &StructureMatrix, t: &BasisChange) -> Result<bool> {
    let d = b.n + 2;
    if b.n != bbar.n || t.dim() != d {
        return Err(Error::ShapeMismatch(format!("criterion needs matching arities and a {d}x{d} transition matrix")));
    }
    if b.matrix.field() != bbar.matrix.field() || t.matrix().field() != b.matrix.field() {
        return Err(Error::ShapeMismatch("operands over different fields".into()));
    }
    let lhs = t.matrix().mul(&b.matrix);
    let rhs = bbar.matrix.mul(&compound_matrix(t));
    Ok(lhs == rhs)
}

/// Rewrites the bracket of `a` in the basis `f_j = sum_m t_mj e_m`.
///
/// Works for any `d >= n`: each new bracket `[f_S]` is expanded multilinearly,
/// the table entry on `U` picking up the minor of `T` on rows `U`, columns `S`,
/// and is then expressed in the new basis.
pub fn change_basis(a: &Algebra, t: &BasisChange) -> Result<Algebra> {
    let (n, d) = (a.arity(), a.dim());
    if t.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: t.dim() });
    }
    let f = a.field();
    let tm = t.matrix();
    let tinv = tm.inverse().ok_or(Error::SingularMatrix)?;
    let nonzero = a.brackets();
    let mut minor = Matrix::zeros(f, n, n);
    let mut out = Vec::new();
    for s in subsets(d, n) {
        let mut val = vec![0u8; d];
        for (u, cu) in &nonzero {
            for (x, &ri) in u.iter().enumerate() {
                for (y, &cj) in s.iter().enumerate() {
                    minor.set(x, y, tm.get(ri, cj));
                }
            }
            axpy(f, minor.det(), cu, &mut val);
        }
        if !is_zero(&val) {
            out.push((s, tinv.mul_vec(&val)));
        }
    }
    Algebra::from_brackets(n, d, f, out)
}
