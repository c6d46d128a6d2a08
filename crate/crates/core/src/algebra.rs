//! n-Lie algebras given by structure constants.
//!
//! Basis indices are 0-based throughout the library API; the file format and
//! all human-facing output use 1-based `e1..ed`. In characteristic 2 an
//! alternating multilinear bracket is symmetric, so a bracket is fully
//! described by its values on sorted n-subsets of the basis.

use std::fmt;

use crate::combin::{self, binomial, insert_sorted, is_strictly_increasing, subsets};
use crate::error::{Error, Result};
use crate::field::{hex, Field};
use crate::matrix::{axpy, is_zero, unit, Matrix, Subspace};

/// An n-ary bracket on `field^d`, stored densely over all sorted n-subsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    n: usize,
    d: usize,
    field: Field,
    /// `binomial(d, n)` rows of length `d`, indexed by lexicographic subset rank.
    table: Vec<u8>,
}

/// A basis pair (X, Y) on which the generalized Jacobi identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub residual: Vec<u8>,
}

impl Algebra {
    /// The abelian algebra (all brackets zero).
    pub fn abelian(n: usize, d: usize, field: Field) -> Result<Algebra> {
        if n < 2 || d < n || d > 8 {
            return Err(Error::BadShape { n, d });
        }
        Ok(Algebra { n, d, field, table: vec![0; binomial(d, n) * d] })
    }

    /// Builds an algebra from `(sorted index set, value)` pairs; unlisted brackets are zero.
    pub fn from_brackets<I, K, V>(n: usize, d: usize, field: Field, brackets: I) -> Result<Algebra>
    where
        I: IntoIterator<Item = (K, V)>,
        K: AsRef<[usize]>,
        V: AsRef<[u8]>,
    {
        let mut a = Algebra::abelian(n, d, field)?;
        let mut seen = vec![false; binomial(d, n)];
        for (k, v) in brackets {
            let k = k.as_ref();
            let r = a.check_key(k)?;
            if seen[r] {
                return Err(Error::DuplicateBracket(k.to_vec()));
            }
            seen[r] = true;
            a.store(r, v.as_ref())?;
        }
        Ok(a)
    }

    fn check_key(&self, key: &[usize]) -> Result<usize> {
        if key.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: key.len() });
        }
        if let Some(&bad) = key.iter().find(|&&i| i >= self.d) {
            return Err(Error::BadIndex { index: bad, dim: self.d });
        }
        if !is_strictly_increasing(key) {
            return Err(Error::NonIncreasingIndices(key.to_vec()));
        }
        Ok(combin::rank(self.d, key))
    }

    fn store(&mut self, rank: usize, value: &[u8]) -> Result<()> {
        if value.len() != self.d {
            return Err(Error::DimensionMismatch { expected: self.d, got: value.len() });
        }
        if let Some(&bad) = value.iter().find(|&&c| !self.field.contains(c)) {
            return Err(crate::field::FieldError::OutOfRange { bits: bad as u32, field: self.field }.into());
        }
        self.table[rank * self.d..(rank + 1) * self.d].copy_from_slice(value);
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Nonzero table entries in lexicographic key order.
    pub fn brackets(&self) -> Vec<(Vec<usize>, Vec<u8>)> {
        subsets(self.d, self.n)
            .into_iter()
            .enumerate()
            .filter_map(|(r, k)| {
                let v = self.entry(r);
                (!is_zero(v)).then(|| (k, v.to_vec()))
            })
            .collect()
    }

    #[inline]
    pub(crate) fn entry(&self, rank: usize) -> &[u8] {
        &self.table[rank * self.d..(rank + 1) * self.d]
    }

    /// Value on a sorted basis n-subset (0-based indices).
    pub fn bracket_basis(&self, key: &[usize]) -> Result<Vec<u8>> {
        let r = self.check_key(key)?;
        Ok(self.entry(r).to_vec())
    }

    /// Value on a basis tuple in any order; zero when an index repeats.
    pub fn bracket_indices(&self, idx: &[usize]) -> Vec<u8> {
        let mut s = idx.to_vec();
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            return vec![0; self.d];
        }
        self.entry(combin::rank(self.d, &s)).to_vec()
    }

    pub fn is_abelian(&self) -> bool {
        is_zero(&self.table)
    }

    fn check_vec(&self, v: &[u8]) -> Result<()> {
        if v.len() != self.d {
            return Err(Error::DimensionMismatch { expected: self.d, got: v.len() });
        }
        Ok(())
    }

    /// Bracket of n arbitrary vectors.
    ///
    /// The coefficient picked up by the table entry on subset S is the
    /// determinant of the arguments' coordinates restricted to S.
    pub fn bracket<V: AsRef<[u8]>>(&self, args: &[V]) -> Result<Vec<u8>> {
        if args.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: args.len() });
        }
        for a in args {
            self.check_vec(a.as_ref())?;
        }
        Ok(self.bracket_unchecked(args))
    }

    pub(crate) fn bracket_unchecked<V: AsRef<[u8]>>(&self, args: &[V]) -> Vec<u8> {
        let f = self.field;
        let n = self.n;
        let mut out = vec![0u8; self.d];
        let mut minor = Matrix::zeros(f, n, n);
        for (r, key) in subsets(self.d, n).iter().enumerate() {
            let val = self.entry(r);
            if is_zero(val) {
                continue;
            }
            for (i, a) in args.iter().enumerate() {
                let a = a.as_ref();
                for (j, &k) in key.iter().enumerate() {
                    minor.set(i, j, a[k]);
                }
            }
            let c = minor.det();
            axpy(f, c, val, &mut out);
        }
        out
    }

    /// `[v, e_{y_1}, ..., e_{y_{n-1}}]` for a sorted (n-1)-subset `y`.
    pub fn bracket_with_basis(&self, v: &[u8], y: &[usize]) -> Vec<u8> {
        let f = self.field;
        let mut out = vec![0u8; self.d];
        for (k, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if let Some(s) = insert_sorted(y, k) {
                axpy(f, c, self.entry(combin::rank(self.d, &s)), &mut out);
            }
        }
        out
    }

    /// Every pair (X, Y) of sorted basis subsets, |X| = n and |Y| = n-1, where
    /// `[[X], Y] != sum_i [x_1, .., [x_i, Y], .., x_n]`.
    pub fn jacobi_check(&self) -> Vec<JacobiViolation> {
        let n = self.n;
        let d = self.d;
        let ys = subsets(d, n - 1);
        // ad(Y) applied to basis vectors, cached
        let ad_cols: Vec<Vec<Vec<u8>>> =
            ys.iter().map(|y| (0..d).map(|j| self.bracket_indices(&insert_or_dup(y, j))).collect()).collect();
        let mut out = Vec::new();
        for (xr, x) in subsets(d, n).iter().enumerate() {
            let bx = self.entry(xr);
            for (yi, y) in ys.iter().enumerate() {
                let lhs = self.bracket_with_basis(bx, y);
                let mut rhs = vec![0u8; d];
                for i in 0..n {
                    let image = &ad_cols[yi][x[i]];
                    if is_zero(image) {
                        continue;
                    }
                    let rest = without(x, i);
                    let t = self.bracket_with_basis(image, &rest);
                    axpy(self.field, 1, &t, &mut rhs);
                }
                if lhs != rhs {
                    let residual = lhs.iter().zip(&rhs).map(|(a, b)| a ^ b).collect();
                    out.push(JacobiViolation { x: x.clone(), y: y.clone(), residual });
                }
            }
        }
        out
    }

    pub fn is_n_lie(&self) -> bool {
        self.jacobi_check().is_empty()
    }

    /// Left multiplication `ad(x_1, .., x_{n-1})` as a d x d matrix (column j is the image of e_j).
    pub fn ad_matrix<V: AsRef<[u8]>>(&self, xs: &[V]) -> Result<Matrix> {
        if xs.len() + 1 != self.n {
            return Err(Error::DimensionMismatch { expected: self.n - 1, got: xs.len() });
        }
        let mut cols = Vec::with_capacity(self.d);
        for j in 0..self.d {
            let mut args: Vec<Vec<u8>> = xs.iter().map(|x| x.as_ref().to_vec()).collect();
            args.push(unit(self.d, j));
            cols.push(self.bracket(&args)?);
        }
        Ok(Matrix::from_columns(self.field, self.d, &cols))
    }

    /// `ad(e_{y_1}, .., e_{y_{n-1}})` for a sorted basis (n-1)-subset.
    pub fn ad_basis(&self, y: &[usize]) -> Matrix {
        let cols: Vec<Vec<u8>> = (0..self.d).map(|j| self.bracket_indices(&insert_or_dup(y, j))).collect();
        Matrix::from_columns(self.field, self.d, &cols)
    }

    /// Checks `D[x_1..x_n] = sum_i [x_1, .., D x_i, .., x_n]` on all basis n-subsets.
    pub fn is_derivation(&self, dm: &Matrix) -> bool {
        assert_eq!((dm.rows(), dm.cols()), (self.d, self.d), "derivation must be d x d");
        let d = self.d;
        let images: Vec<Vec<u8>> = (0..d).map(|j| dm.column(j)).collect();
        subsets(d, self.n).iter().enumerate().all(|(r, x)| {
            let lhs = dm.mul_vec(self.entry(r));
            let mut rhs = vec![0u8; d];
            for i in 0..self.n {
                let t = self.bracket_with_basis(&images[x[i]], &without(x, i));
                axpy(self.field, 1, &t, &mut rhs);
            }
            lhs == rhs
        })
    }

    pub fn derived_subspace(&self) -> Subspace {
        let rows: Vec<&[u8]> = (0..binomial(self.d, self.n)).map(|r| self.entry(r)).collect();
        Subspace::span(self.field, self.d, &rows)
    }

    /// `[W, A, .., A]`: spanned by `[w, e_Y]` over a basis of W and all (n-1)-subsets Y.
    pub fn bracket_with_space(&self, w: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for wv in w.basis_vectors() {
            for y in subsets(self.d, self.n - 1) {
                let v = self.bracket_with_basis(&wv, &y);
                if !is_zero(&v) {
                    vs.push(v);
                }
            }
        }
        Subspace::span(self.field, self.d, &vs)
    }

    /// Terms A^0 = A, A^{r+1} = [A^r, A, .., A], stopping at zero or at the first repeat.
    pub fn descending_series_spaces(&self) -> Vec<Subspace> {
        let mut out = vec![Subspace::whole(self.field, self.d)];
        loop {
            let last = out.last().unwrap();
            let next = self.bracket_with_space(last);
            let done = next.dim() == 0 || next.dim() == last.dim();
            out.push(next);
            if done {
                return out;
            }
        }
    }

    /// Dimensions `[dim A^0, dim A^1, ..]`; see [`Algebra::descending_series_spaces`].
    pub fn descending_series(&self) -> Vec<usize> {
        self.descending_series_spaces().iter().map(Subspace::dim).collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.descending_series().last() == Some(&0)
    }

    /// Z(A): the common kernel of `x -> [x, e_Y]` over all (n-1)-subsets Y.
    pub fn center(&self) -> Subspace {
        let d = self.d;
        let mut rows = Vec::new();
        for y in subsets(d, self.n - 1) {
            let ad = self.ad_basis(&y);
            for i in 0..d {
                let r = ad.row(i);
                if !is_zero(r) {
                    rows.push(r.to_vec());
                }
            }
        }
        Matrix::from_rows(self.field, d, &rows).kernel_subspace()
    }

    /// Dimension of ad(A), the span of all left multiplications inside gl(A).
    pub fn inner_derivation_dim(&self) -> usize {
        let rows: Vec<Vec<u8>> =
            subsets(self.d, self.n - 1).iter().map(|y| self.ad_basis(y).as_slice().to_vec()).collect();
        Matrix::from_rows(self.field, self.d * self.d, &rows).rank()
    }

    /// Closed under the bracket: n arguments from W give a value in W.
    pub fn is_subalgebra(&self, w: &Subspace) -> bool {
        let basis = w.basis_vectors();
        if basis.len() < self.n {
            return true;
        }
        subsets(basis.len(), self.n).iter().all(|s| {
            let args: Vec<&[u8]> = s.iter().map(|&i| basis[i].as_slice()).collect();
            w.contains(&self.bracket_unchecked(&args))
        })
    }

    /// `[W, A, .., A] ⊆ W`.
    pub fn is_ideal(&self, w: &Subspace) -> bool {
        let ys = subsets(self.d, self.n - 1);
        w.basis_vectors().iter().all(|v| ys.iter().all(|y| w.contains(&self.bracket_with_basis(v, y))))
    }

    /// Brackets of n arguments from W all vanish.
    pub fn is_abelian_subspace(&self, w: &Subspace) -> bool {
        let basis = w.basis_vectors();
        if basis.len() < self.n {
            return true;
        }
        subsets(basis.len(), self.n).iter().all(|s| {
            let args: Vec<&[u8]> = s.iter().map(|&i| basis[i].as_slice()).collect();
            is_zero(&self.bracket_unchecked(&args))
        })
    }

    /// `[U, W, A, .., A] = 0`.
    pub fn cross_bracket_vanishes(&self, u: &Subspace, w: &Subspace) -> bool {
        let d = self.d;
        let rest = subsets(d, self.n - 2);
        for a in u.basis_vectors() {
            for b in w.basis_vectors() {
                for r in &rest {
                    let mut args = vec![a.clone(), b.clone()];
                    args.extend(r.iter().map(|&j| unit(d, j)));
                    if !is_zero(&self.bracket_unchecked(&args)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn without(x: &[usize], i: usize) -> Vec<usize> {
    let mut v = x.to_vec();
    v.remove(i);
    v
}

/// `y ∪ {j}` sorted, or a tuple with a repeat (which brackets to zero).
fn insert_or_dup(y: &[usize], j: usize) -> Vec<usize> {
    insert_sorted(y, j).unwrap_or_else(|| {
        let mut v = y.to_vec();
        v.push(j);
        v
    })
}

impl Matrix {
    /// Null space as a subspace.
    pub fn kernel_subspace(&self) -> Subspace {
        Subspace::from_matrix(self.kernel())
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Algebra n={} d={} over {:?}", self.n, self.d, self.field)?;
        for (k, v) in self.brackets() {
            writeln!(f, "  {}", format_bracket(&k, &v))?;
        }
        Ok(())
    }
}

/// `[e2,e3,e4] = 0x1 e1` style rendering (1-based).
pub fn format_bracket(key: &[usize], value: &[u8]) -> String {
    let args: Vec<String> = key.iter().map(|i| format!("e{}", i + 1)).collect();
    format!("[{}] = {}", args.join(","), format_vector(value))
}

pub fn format_vector(v: &[u8]) -> String {
    let terms: Vec<String> =
        v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| format!("{} e{}", hex(c), i + 1)).collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
