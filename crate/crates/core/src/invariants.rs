//! Basis-independent invariants, decompositions, codimension-one subalgebras
//! and toral subalgebras.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::combin::subsets;
use crate::matrix::{for_each_subspace_of_dim, subspace_count, Matrix, Subspace};

/// Default number of subspaces a scan may visit before giving up.
pub const DEFAULT_SUBSPACE_BUDGET: u64 = 200_000;

/// Largest operator space whose elements [`derived_ad_spectrum`] enumerates.
pub const SPECTRUM_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub n: usize,
    pub d: usize,
    pub dim_derived: usize,
    pub derived_series: Vec<usize>,
    pub dim_center: usize,
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub derived_in_center: bool,
    pub inner_deriv_dim: usize,
    pub decomposable: TriState,
    /// See [`derived_ad_spectrum`]; `None` when the operator space is too large.
    pub derived_ad_spectrum: Option<Vec<(Vec<u8>, u32)>>,
}

impl Fingerprint {
    /// Names of the fields that certify `self` and `other` belong to different
    /// isomorphism classes. An unknown decomposability never counts.
    pub fn differences(&self, other: &Fingerprint) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut check = |name, differs: bool| {
            if differs {
                out.push(name);
            }
        };
        check("n", self.n != other.n);
        check("d", self.d != other.d);
        check("dim_derived", self.dim_derived != other.dim_derived);
        check("derived_series", self.derived_series != other.derived_series);
        check("dim_center", self.dim_center != other.dim_center);
        check("is_abelian", self.is_abelian != other.is_abelian);
        check("is_nilpotent", self.is_nilpotent != other.is_nilpotent);
        check("derived_in_center", self.derived_in_center != other.derived_in_center);
        check("inner_deriv_dim", self.inner_deriv_dim != other.inner_deriv_dim);
        let known = self.decomposable != TriState::Unknown && other.decomposable != TriState::Unknown;
        check("decomposable", known && self.decomposable != other.decomposable);
        let spectra = self.derived_ad_spectrum.as_ref().zip(other.derived_ad_spectrum.as_ref());
        check("derived_ad_spectrum", spectra.is_some_and(|(x, y)| x != y));
        out
    }

    pub fn compatible(&self, other: &Fingerprint) -> bool {
        self.differences(other).is_empty()
    }
}

/// Fingerprint without the decomposability search.
pub fn fingerprint(a: &Algebra) -> Fingerprint {
    let derived = a.derived_subspace();
    let center = a.center();
    let series = a.descending_series();
    Fingerprint {
        n: a.arity(),
        d: a.dim(),
        dim_derived: derived.dim(),
        is_nilpotent: series.last() == Some(&0),
        derived_series: series,
        dim_center: center.dim(),
        is_abelian: derived.dim() == 0,
        derived_in_center: center.contains_subspace(&derived),
        inner_deriv_dim: a.inner_derivation_dim(),
        decomposable: TriState::Unknown,
        derived_ad_spectrum: derived_ad_spectrum(a, SPECTRUM_LIMIT),
    }
}

/// Characteristic polynomials, with multiplicities, of the operators in
/// `W = span{ad(Y) restricted to A1}`, sorted.
///
/// A change of basis conjugates `W` as a whole, so the multiset is an
/// invariant. Returns `None` if `|W|` exceeds `limit`.
pub fn derived_ad_spectrum(a: &Algebra, limit: usize) -> Option<Vec<(Vec<u8>, u32)>> {
    let f = a.field();
    let derived = a.derived_subspace();
    let k = derived.dim();
    let basis = derived.basis_vectors();
    let ops: Vec<Vec<u8>> = subsets(a.dim(), a.arity() - 1)
        .iter()
        .map(|y| {
            let ad = a.ad_basis(y);
            let mut flat = vec![0u8; k * k];
            for (j, b) in basis.iter().enumerate() {
                let image = derived.coordinates(&ad.mul_vec(b)).expect("A1 is an ideal");
                for (i, c) in image.into_iter().enumerate() {
                    flat[i * k + j] = c;
                }
            }
            flat
        })
        .collect();
    let w = Subspace::span(f, k * k, &ops);
    if f.order().checked_pow(w.dim() as u32).is_none_or(|size| size > limit) {
        return None;
    }
    let mut counts = std::collections::BTreeMap::new();
    for op in w.elements() {
        let rows: Vec<Vec<u8>> = op.chunks(k.max(1)).map(<[u8]>::to_vec).collect();
        *counts.entry(Matrix::from_rows(f, k, &rows).charpoly()).or_insert(0u32) += 1;
    }
    Some(counts.into_iter().collect())
}

/// Fingerprint including [`is_decomposable`] under `budget`.
pub fn full_fingerprint(a: &Algebra, budget: u64) -> Fingerprint {
    let mut fp = fingerprint(a);
    fp.decomposable = is_decomposable(a, budget).tri_state();
    fp
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// `A = first ⊕ second` with both ideals and `[first, second, A, .., A] = 0`.
    Yes {
        first: Subspace,
        second: Subspace,
    },
    No,
    Unknown,
}

impl Decomposition {
    pub fn tri_state(&self) -> TriState {
        match self {
            Decomposition::Yes { .. } => TriState::Yes,
            Decomposition::No => TriState::No,
            Decomposition::Unknown => TriState::Unknown,
        }
    }
}

/// Kernel of a single linear functional.
fn hyperplane(field: crate::Field, phi: &[u8]) -> Subspace {
    Matrix::from_rows(field, phi.len(), &[phi.to_vec()]).kernel_subspace()
}

/// Searches for a decomposition into two nonzero ideals.
///
/// A central vector outside the derived algebra splits off immediately.
/// Otherwise all ideals are enumerated when the subspace count fits in `budget`.
pub fn is_decomposable(a: &Algebra, budget: u64) -> Decomposition {
    let f = a.field();
    let d = a.dim();
    let derived = a.derived_subspace();
    let center = a.center();
    if let Some(z) = center.basis_vectors().into_iter().find(|z| !derived.contains(z)) {
        let phi = derived
            .annihilator()
            .basis_vectors()
            .into_iter()
            .find(|phi| dot(f, phi, &z) != 0)
            .expect("z lies outside the derived algebra");
        return Decomposition::Yes { first: hyperplane(f, &phi), second: Subspace::span(f, d, &[z]) };
    }
    let total: u128 = (1..d).map(|k| subspace_count(f.order(), d, k)).sum();
    if total > budget as u128 {
        return Decomposition::Unknown;
    }
    let mut ideals: Vec<Vec<Subspace>> = vec![Vec::new(); d];
    for (k, bucket) in ideals.iter_mut().enumerate().skip(1) {
        for_each_subspace_of_dim(f, d, k, |w| {
            if a.is_ideal(&w) {
                bucket.push(w);
            }
            true
        });
    }
    for k in 1..=d / 2 {
        for i1 in &ideals[k] {
            for i2 in &ideals[d - k] {
                if i1.intersection(i2).dim() == 0 && a.cross_bracket_vanishes(i1, i2) {
                    return Decomposition::Yes { first: i2.clone(), second: i1.clone() };
                }
            }
        }
    }
    Decomposition::No
}

fn dot(f: crate::Field, x: &[u8], y: &[u8]) -> u8 {
    x.iter().zip(y).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
}

/// Hyperplanes `ker phi` for normalized functionals `phi` in `functionals`
/// (first nonzero coordinate 1), in enumeration order of the span.
fn hyperplanes_within(functionals: &Subspace, mut visit: impl FnMut(Subspace) -> bool) -> bool {
    let f = functionals.field();
    for phi in functionals.elements() {
        match phi.iter().find(|&&c| c != 0) {
            Some(&1) => {
                if !visit(hyperplane(f, &phi)) {
                    return false;
                }
            }
            _ => continue,
        }
    }
    true
}

/// A subalgebra of codimension one, if any.
///
/// Hyperplanes containing the derived algebra are tried first (each of them is
/// an ideal); then every remaining hyperplane is checked for closure.
pub fn find_codim1_subalgebra(a: &Algebra) -> Option<Subspace> {
    let f = a.field();
    let d = a.dim();
    let ann = a.derived_subspace().annihilator();
    if ann.dim() > 0 {
        let mut found = None;
        hyperplanes_within(&ann, |h| {
            found = Some(h);
            false
        });
        return found;
    }
    let mut found = None;
    hyperplanes_within(&Subspace::whole(f, d), |h| {
        if a.is_subalgebra(&h) {
            found = Some(h);
            return false;
        }
        true
    });
    found
}

/// A nonabelian subalgebra of codimension one containing the derived algebra.
///
/// Intended for `d = n + 2` with `0 < dim A^1 <= 2`; the scan runs regardless.
pub fn find_nonabelian_codim1_containing_derived(a: &Algebra) -> Option<Subspace> {
    let ann = a.derived_subspace().annihilator();
    let mut found = None;
    hyperplanes_within(&ann, |h| {
        if !a.is_abelian_subspace(&h) {
            found = Some(h);
            return false;
        }
        true
    });
    found
}

/// Eigenvalues of `m` lying in the field, ascending by bit pattern.
fn eigenvalues(m: &Matrix) -> Vec<u8> {
    let f = m.field();
    let d = m.rows();
    f.elements().filter(|&l| m.add(&Matrix::diagonal(f, &vec![l; d])).det() == 0).collect()
}

fn is_diagonalizable(m: &Matrix) -> bool {
    let f = m.field();
    let d = m.rows();
    let mut prod = Matrix::identity(f, d);
    for l in eigenvalues(m) {
        prod = prod.mul(&m.add(&Matrix::diagonal(f, &vec![l; d])));
    }
    prod.is_zero()
}

/// Joint eigenspaces of a commuting family.
fn joint_weight_spaces(field: crate::Field, d: usize, family: &[Matrix]) -> Vec<Subspace> {
    let mut spaces = vec![Subspace::whole(field, d)];
    for m in family {
        let mut next = Vec::new();
        for l in eigenvalues(m) {
            let eig = m.add(&Matrix::diagonal(field, &vec![l; d])).kernel_subspace();
            for s in &spaces {
                let w = s.intersection(&eig);
                if w.dim() > 0 {
                    next.push(w);
                }
            }
        }
        spaces = next;
    }
    spaces
}

/// Checks that `h` is abelian and that `A` splits into joint weight spaces of
/// the left multiplications by (n-1)-tuples from a basis of `h`.
pub fn verify_toral(a: &Algebra, h: &Subspace) -> bool {
    if !a.is_abelian_subspace(h) {
        return false;
    }
    let basis = h.basis_vectors();
    let n = a.arity();
    let family: Vec<Matrix> = subsets(basis.len(), n - 1)
        .iter()
        .map(|t| {
            let xs: Vec<&[u8]> = t.iter().map(|&i| basis[i].as_slice()).collect();
            a.ad_matrix(&xs).expect("tuple has n-1 entries")
        })
        .collect();
    for (i, x) in family.iter().enumerate() {
        for y in &family[i + 1..] {
            if x.mul(y) != y.mul(x) {
                return false;
            }
        }
        if !is_diagonalizable(x) {
            return false;
        }
    }
    let total: usize = joint_weight_spaces(a.field(), a.dim(), &family).iter().map(Subspace::dim).sum();
    total == a.dim()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxToral {
    /// Largest toral dimension found; a lower bound when `exhaustive` is false.
    pub dim: usize,
    pub exhaustive: bool,
    pub witness: Option<Vec<Vec<u8>>>,
}

/// Largest dimension of a toral subalgebra, scanning subspaces from the top down.
///
/// Subspaces of dimension below `n - 1` are always toral, so the scan stops
/// there. If the remaining subspace count exceeds `budget`, the best dimension
/// found by a partial scan is reported with `exhaustive = false`.
pub fn max_toral_dim(a: &Algebra, budget: u64) -> MaxToral {
    let f = a.field();
    let d = a.dim();
    let floor = a.arity() - 2;
    let mut spent: u64 = 0;
    let mut exhaustive = true;
    for k in (floor + 1..=d).rev() {
        let count = subspace_count(f.order(), d, k);
        let mut found = None;
        let complete = for_each_subspace_of_dim(f, d, k, |w| {
            if spent >= budget {
                return false;
            }
            spent += 1;
            if verify_toral(a, &w) {
                found = Some(w);
                return false;
            }
            true
        });
        if let Some(w) = found {
            return MaxToral { dim: k, exhaustive, witness: Some(w.basis_vectors()) };
        }
        if !complete || count == 0 {
            exhaustive = false;
        }
    }
    MaxToral { dim: floor, exhaustive, witness: None }
}
