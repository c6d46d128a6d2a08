//! Dense matrices and subspaces over GF(2^m).
//!
//! Vectors are plain `Vec<u8>` of raw field elements. Matrices act on column
//! vectors; a subspace is stored as the row space of a matrix in reduced row
//! echelon form, so two subspaces are equal iff their stored bases are equal.

use std::fmt;

use crate::field::{hex, Field};

/// `y += c * x`.
pub fn axpy(field: Field, c: u8, x: &[u8], y: &mut [u8]) {
    if c == 0 {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi ^= field.mul(c, xi);
    }
}

pub fn scale(field: Field, c: u8, x: &mut [u8]) {
    for xi in x.iter_mut() {
        *xi = field.mul(c, *xi);
    }
}

pub fn is_zero(x: &[u8]) -> bool {
    x.iter().all(|&v| v == 0)
}

/// Standard basis vector `e_i` (0-based) of length `d`.
pub fn unit(d: usize, i: usize) -> Vec<u8> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows. Panics on ragged input.
    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<u8>]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend_from_slice(r);
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<u8>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix columns");
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn diagonal(field: Field, entries: &[u8]) -> Matrix {
        let mut m = Matrix::zeros(field, entries.len(), entries.len());
        for (i, &v) in entries.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u8] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.data)
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let src = other.row(k).to_vec();
                axpy(f, a, &src, out.row_mut(i));
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[u8]) -> Vec<u8> {
        assert_eq!(self.cols, x.len(), "matrix/vector shape mismatch");
        let f = self.field;
        (0..self.rows).map(|i| self.row(i).iter().zip(x).fold(0u8, |acc, (&a, &b)| acc ^ f.mul(a, b))).collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Brings the matrix to reduced row echelon form in place, returning the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).unwrap();
            scale(f, inv, self.row_mut(r));
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                if i != r {
                    let factor = self.get(i, c);
                    axpy(f, factor, &pivot_row, self.row_mut(i));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant; signs are irrelevant in characteristic 2.
    pub fn det(&self) -> u8 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let f = self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut acc = 1u8;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return 0;
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
            }
            let pv = m.get(c, c);
            acc = f.mul(acc, pv);
            let inv = f.inv(pv).unwrap();
            let pivot_row = m.row(c).to_vec();
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), inv);
                axpy(f, factor, &pivot_row, m.row_mut(i));
            }
        }
        acc
    }

    /// Coefficients of `det(xI - self)`, constant term first.
    ///
    /// Reduces to upper Hessenberg form by similarity, then expands along the
    /// subdiagonal.
    pub fn charpoly(&self) -> Vec<u8> {
        assert!(self.is_square(), "characteristic polynomial of a non-square matrix");
        let f = self.field;
        let n = self.rows;
        let mut h = self.clone();
        for k in 0..n.saturating_sub(2) {
            let Some(p) = (k + 1..n).find(|&i| h.get(i, k) != 0) else {
                continue;
            };
            if p != k + 1 {
                for j in 0..n {
                    h.data.swap(p * n + j, (k + 1) * n + j);
                }
                for i in 0..n {
                    h.data.swap(i * n + p, i * n + k + 1);
                }
            }
            let inv = f.inv(h.get(k + 1, k)).unwrap();
            for i in k + 2..n {
                let c = f.mul(h.get(i, k), inv);
                if c == 0 {
                    continue;
                }
                // row_i += c row_{k+1}, then col_{k+1} += c col_i
                let pivot_row = h.row(k + 1).to_vec();
                axpy(f, c, &pivot_row, h.row_mut(i));
                for r in 0..n {
                    let v = f.add(h.get(r, k + 1), f.mul(c, h.get(r, i)));
                    h.set(r, k + 1, v);
                }
            }
        }
        // p_k = (x + h_kk) p_{k-1} + sum_{i<k} h_ik (h_{i+1,i} .. h_{k,k-1}) p_{i-1}
        let mut ps: Vec<Vec<u8>> = vec![vec![1]];
        for k in 0..n {
            let prev = &ps[k];
            let mut next = vec![0u8; k + 2];
            for (j, &c) in prev.iter().enumerate() {
                next[j + 1] = f.add(next[j + 1], c);
                next[j] = f.add(next[j], f.mul(h.get(k, k), c));
            }
            let mut prod = 1u8;
            for i in (0..k).rev() {
                prod = f.mul(prod, h.get(i + 1, i));
                let c = f.mul(h.get(i, k), prod);
                if c != 0 {
                    axpy(f, c, &ps[i], &mut next[..i + 1]);
                }
            }
            ps.push(next);
        }
        ps.pop().unwrap()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Basis (as rows, in RREF) of `{x : self * x = 0}`.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u8; self.cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                // char 2: -a = a
                v[pc] = r.get(i, fc);
            }
            basis.push(v);
        }
        let mut k = Matrix::from_rows(self.field, self.cols, &basis);
        k.rref_in_place();
        k
    }

    /// Solves `self * x = b`. Returns a particular solution and a kernel basis, or `None`.
    pub fn solve(&self, b: &[u8]) -> Option<(Vec<u8>, Matrix)> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, bi);
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u8; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(i, self.cols);
        }
        Some((x, self.kernel()))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|&v| hex(v)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// A subspace of `field^ambient`, stored as an RREF basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span<V: AsRef<[u8]>>(field: Field, ambient: usize, vectors: &[V]) -> Subspace {
        let rows: Vec<Vec<u8>> = vectors.iter().map(|v| v.as_ref().to_vec()).collect();
        let m = Matrix::from_rows(field, ambient, &rows);
        Subspace::from_matrix(m)
    }

    /// Row space of `m`.
    pub fn from_matrix(mut m: Matrix) -> Subspace {
        let pivots = m.rref_in_place();
        let rows: Vec<Vec<u8>> = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        let basis = Matrix::from_rows(m.field(), m.cols(), &rows);
        Subspace { basis, pivots }
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::zeros(field, 0, ambient), pivots: vec![] }
    }

    pub fn whole(field: Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the given standard basis vectors (0-based).
    pub fn coordinate(field: Field, ambient: usize, indices: &[usize]) -> Subspace {
        let vs: Vec<Vec<u8>> = indices.iter().map(|&i| unit(ambient, i)).collect();
        Subspace::span(field, ambient, &vs)
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u8>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let f = self.field();
        let mut r = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = r[pc];
            axpy(f, c, self.basis.row(i), &mut r);
        }
        r
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.field(), self.ambient(), &rows)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let f = self.field();
        let d = self.ambient();
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Subspace::zero(f, d);
        }
        // columns: basis vectors of both; kernel gives coefficient pairs
        let mut cols = self.basis_vectors();
        cols.extend(other.basis_vectors());
        let m = Matrix::from_columns(f, d, &cols);
        let k = m.kernel();
        let mut vs = Vec::new();
        for i in 0..k.rows() {
            let mut v = vec![0u8; d];
            for j in 0..a {
                axpy(f, k.get(i, j), self.basis.row(j), &mut v);
            }
            vs.push(v);
        }
        Subspace::span(f, d, &vs)
    }

    /// Coordinates of `v` with respect to the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u8]) -> Option<Vec<u8>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Extends the stored basis to a basis of the ambient space with standard vectors.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient()).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Linear functionals vanishing on the subspace, as an RREF row basis.
    pub fn annihilator(&self) -> Subspace {
        Subspace::from_matrix(self.basis.kernel())
    }

    /// Iterates over all `q^dim` elements, in lexicographic coefficient order.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        let f = self.field();
        let q = f.order();
        let dim = self.dim();
        let total = q.checked_pow(dim as u32).expect("subspace too large to enumerate");
        (0..total).map(move |mut idx| {
            let mut v = vec![0u8; self.ambient()];
            for i in (0..dim).rev() {
                let c = (idx % q) as u8;
                idx /= q;
                axpy(f, c, self.basis.row(i), &mut v);
            }
            v
        })
    }
}

/// Enumerates every subspace of `field^d` with the given dimension via RREF profiles.
///
/// The closure receives each subspace once; returning `false` stops the scan early.
/// Returns `false` iff the scan was stopped.
pub fn for_each_subspace_of_dim(field: Field, d: usize, k: usize, mut visit: impl FnMut(Subspace) -> bool) -> bool {
    let q = field.order();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // free slots: (row i, column c) with c > pivot i, c not a pivot
        let mut slots = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for c in p + 1..d {
                if !pivots.contains(&c) {
                    slots.push((i, c));
                }
            }
        }
        let total = q.pow(slots.len() as u32);
        for mut idx in 0..total {
            let mut m = Matrix::zeros(field, k, d);
            for (i, &p) in pivots.iter().enumerate() {
                m.set(i, p, 1);
            }
            for &(i, c) in &slots {
                m.set(i, c, (idx % q) as u8);
                idx /= q;
            }
            let s = Subspace { basis: m, pivots: pivots.clone() };
            if !visit(s) {
                return false;
            }
        }
        // next k-combination of 0..d
        let mut i = k;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if pivots[i] < d - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Number of `k`-dimensional subspaces of `GF(q)^d` (Gaussian binomial).
pub fn subspace_count(q: usize, d: usize, k: usize) -> u128 {
    if k > d {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((d - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}
