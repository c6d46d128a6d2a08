//! Isomorphism testing by backtracking over basis images.
//!
//! An isomorphism `sigma: A -> B` is built one basis vector at a time. The
//! basis of `A` is first adapted to a family of characteristic subspaces, so
//! each image is confined to the matching subspace of `B`. Every bracket
//! relation `sigma([f_S]) = [sigma f_S]` is linear in whichever vector among
//! `S` and the support of `[f_S]` is assigned last, so each step solves a
//! linear system and branches only over its solution set. The step order is
//! planned from `A` alone to keep the predicted branching small.
//!
//! The search is complete: running out of candidates proves non-isomorphism
//! over the given field. Work is measured in visited nodes, so verdicts are
//! reproducible on any machine.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::combin::subsets;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::invariants::{full_fingerprint, DEFAULT_SUBSPACE_BUDGET};
use crate::matrix::{axpy, is_zero, unit, Matrix, Subspace};
use crate::structmat::{change_basis, iso_criterion, structure_matrix, BasisChange};

pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchOrder {
    /// Order chosen to minimize predicted branching.
    Planned,
    /// Adapted basis order, without planning.
    Natural,
    /// Adapted basis order reversed.
    Reversed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of search nodes (assigned candidate vectors).
    pub budget: u64,
    /// Budget for the decomposability part of the fingerprints.
    pub subspace_budget: u64,
    pub order: SearchOrder,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_NODE_BUDGET,
            subspace_budget: DEFAULT_SUBSPACE_BUDGET,
            order: SearchOrder::Planned,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions { budget, ..SearchOptions::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonIsoReason {
    /// Invariants that differ.
    Fingerprint { fields: Vec<&'static str> },
    /// The lattices of characteristic subspaces have different shapes.
    CharacteristicSubspaces,
    /// Every candidate basis image was ruled out.
    ExhaustedSearch { nodes: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub nodes: u64,
    pub budget: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// `T` with `change_basis(B, T) == A`: column `j` is the image of `e_j` in `B`.
    Isomorphic(BasisChange),
    NotIsomorphic(NonIsoReason),
    Inconclusive(SearchReport),
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }

    pub fn is_not_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::NotIsomorphic(_))
    }
}

/// Decides whether `a` and `b` are isomorphic with the default options.
pub fn are_isomorphic(a: &Algebra, b: &Algebra, budget: u64) -> Result<IsoVerdict> {
    are_isomorphic_with(a, b, &SearchOptions::with_budget(budget))
}

pub fn are_isomorphic_with(a: &Algebra, b: &Algebra, opts: &SearchOptions) -> Result<IsoVerdict> {
    if a.arity() != b.arity() || a.dim() != b.dim() {
        return Err(Error::ShapeMismatch(format!(
            "arity/dimension {}/{} vs {}/{}",
            a.arity(),
            a.dim(),
            b.arity(),
            b.dim()
        )));
    }
    if a.field() != b.field() {
        return Err(Error::ShapeMismatch(format!("fields {} and {}", a.field(), b.field())));
    }
    if a == b {
        return Ok(IsoVerdict::Isomorphic(BasisChange::identity(a.field(), a.dim())));
    }
    let fa = full_fingerprint(a, opts.subspace_budget);
    let fb = full_fingerprint(b, opts.subspace_budget);
    let diff = fa.differences(&fb);
    if !diff.is_empty() {
        return Ok(IsoVerdict::NotIsomorphic(NonIsoReason::Fingerprint { fields: diff }));
    }
    let chars_a = characteristic_subspaces(a);
    let chars_b = characteristic_subspaces(b);
    let shape = |c: &[Subspace]| c.iter().map(Subspace::dim).collect::<Vec<_>>();
    if shape(&chars_a) != shape(&chars_b) {
        return Ok(IsoVerdict::NotIsomorphic(NonIsoReason::CharacteristicSubspaces));
    }

    // Plan from both sides and search from the cheaper one.
    let pa = Plan::new(a, &chars_a, opts.order);
    let pb = Plan::new(b, &chars_b, opts.order);
    let (outcome, flipped) =
        if pb.cost < pa.cost { (pb.search(b, a, opts.budget), true) } else { (pa.search(a, b, opts.budget), false) };
    Ok(match outcome {
        Outcome::Found(t) => {
            let t = if flipped { t.inverse() } else { t };
            debug_assert!(verify_witness(a, b, &t));
            IsoVerdict::Isomorphic(t)
        }
        Outcome::Exhausted(nodes) => IsoVerdict::NotIsomorphic(NonIsoReason::ExhaustedSearch { nodes }),
        Outcome::OutOfBudget(nodes) => IsoVerdict::Inconclusive(SearchReport { nodes, budget: opts.budget }),
    })
}

/// `change_basis(b, t) == a`, and for `d = n + 2` the structure-matrix criterion.
pub fn verify_witness(a: &Algebra, b: &Algebra, t: &BasisChange) -> bool {
    let Ok(moved) = change_basis(b, t) else { return false };
    if moved != *a {
        return false;
    }
    if a.dim() == a.arity() + 2 {
        let sa = structure_matrix(a).expect("d = n + 2");
        let sb = structure_matrix(b).expect("d = n + 2");
        return iso_criterion(&sa, &sb, t).unwrap_or(false);
    }
    true
}

/// `[W, .., W]`.
fn self_bracket(a: &Algebra, w: &Subspace) -> Subspace {
    let basis = w.basis_vectors();
    let vals: Vec<Vec<u8>> = subsets(basis.len(), a.arity())
        .iter()
        .map(|s| {
            let args: Vec<&[u8]> = s.iter().map(|&i| basis[i].as_slice()).collect();
            a.bracket(&args).expect("vectors of the right length")
        })
        .collect();
    Subspace::span(a.field(), a.dim(), &vals)
}

/// `{x : [x, w, A, .., A] = 0 for all w in W}`.
fn centralizer(a: &Algebra, w: &Subspace) -> Subspace {
    let d = a.dim();
    let mut rows = Vec::new();
    for wv in w.basis_vectors() {
        for y in subsets(d, a.arity() - 2) {
            let mut xs = vec![wv.clone()];
            xs.extend(y.iter().map(|&i| unit(d, i)));
            let m = a.ad_matrix(&xs).expect("n-1 arguments");
            rows.extend(m.row_vecs());
        }
    }
    Matrix::from_rows(a.field(), d, &rows).kernel_subspace()
}

/// `{x : [x, A, .., A] ⊆ U}`.
fn preimage_under_ads(a: &Algebra, u: &Subspace) -> Subspace {
    let d = a.dim();
    let ann = u.annihilator().basis_vectors();
    let mut rows = Vec::new();
    for y in subsets(d, a.arity() - 1) {
        let ad = a.ad_basis(&y);
        for phi in &ann {
            rows.push(ad.transpose().mul_vec(phi));
        }
    }
    Matrix::from_rows(a.field(), d, &rows).kernel_subspace()
}

const MAX_CHARACTERISTIC: usize = 48;

/// A list of subspaces defined without reference to a basis, closed under
/// sums and intersections. Isomorphisms map the list of `A` term by term onto
/// the list of `B`.
pub fn characteristic_subspaces(a: &Algebra) -> Vec<Subspace> {
    let f = a.field();
    let d = a.dim();
    let mut gens: Vec<Subspace> = a.descending_series_spaces().into_iter().skip(1).collect();
    let derived = a.derived_subspace();
    let center = a.center();
    gens.push(center.clone());
    gens.push(centralizer(a, &derived));
    gens.push(preimage_under_ads(a, &center));
    let mut w = derived;
    loop {
        let next = self_bracket(a, &w);
        let done = next.dim() == 0 || next.dim() == w.dim();
        gens.push(next.clone());
        if done {
            break;
        }
        w = next;
    }
    let mut list: Vec<Subspace> = Vec::new();
    for g in gens {
        if g.dim() > 0 && g.dim() < d && !list.contains(&g) {
            list.push(g);
        }
    }
    let mut i = 0;
    while i < list.len() && list.len() < MAX_CHARACTERISTIC {
        for j in 0..i {
            for s in [list[i].intersection(&list[j]), list[i].sum(&list[j])] {
                if s.dim() > 0 && s.dim() < d && !list.contains(&s) && list.len() < MAX_CHARACTERISTIC {
                    list.push(s);
                }
            }
        }
        i += 1;
    }
    let _ = f;
    list
}

/// A basis adapted to `chars`: subspaces are filled in increasing dimension,
/// preferring standard basis vectors.
fn adapted_basis(field: Field, d: usize, chars: &[Subspace]) -> Vec<Vec<u8>> {
    let mut order: Vec<&Subspace> = chars.iter().collect();
    order.sort_by_key(|s| s.dim());
    let mut basis: Vec<Vec<u8>> = Vec::new();
    let mut span = Subspace::zero(field, d);
    let add = |v: Vec<u8>, basis: &mut Vec<Vec<u8>>, span: &mut Subspace| {
        if !span.contains(&v) {
            *span = span.sum(&Subspace::span(field, d, &[&v]));
            basis.push(v);
        }
    };
    for w in order {
        let candidates = (0..d).map(|i| unit(d, i)).filter(|e| w.contains(e)).chain(w.basis_vectors());
        for v in candidates {
            add(v, &mut basis, &mut span);
        }
    }
    for i in 0..d {
        add(unit(d, i), &mut basis, &mut span);
    }
    basis
}

/// Constraint `S`: key, value and the set of indices it involves.
struct Constraint {
    key: Vec<usize>,
    value: Vec<u8>,
    involved: Vec<usize>,
}

fn constraints(a: &Algebra) -> Vec<Constraint> {
    let d = a.dim();
    subsets(d, a.arity())
        .into_iter()
        .map(|key| {
            let value = a.bracket_basis(&key).expect("valid key");
            let mut involved = key.clone();
            involved.extend((0..d).filter(|&k| value[k] != 0));
            involved.sort_unstable();
            involved.dedup();
            Constraint { key, value, involved }
        })
        .collect()
}

/// Membership of each basis vector in each characteristic subspace.
fn membership(chars: &[Subspace], d: usize) -> Vec<Vec<bool>> {
    (0..d).map(|j| chars.iter().map(|w| w.contains(&unit(d, j))).collect()).collect()
}

struct Plan {
    /// Columns: the adapted basis of the pattern algebra, in search order.
    basis: Matrix,
    cost: f64,
}

impl Plan {
    fn new(a: &Algebra, chars: &[Subspace], order: SearchOrder) -> Plan {
        let f = a.field();
        let d = a.dim();
        let mut cols = adapted_basis(f, d, chars);
        if order == SearchOrder::Reversed {
            cols.reverse();
        }
        let basis = Matrix::from_columns(f, d, &cols);
        let t = BasisChange::new(basis.clone()).expect("adapted basis is a basis");
        let pattern = change_basis(a, &t).expect("same dimension");
        let pchars = characteristic_subspaces(&pattern);
        let memb = membership(&pchars, d);
        let cons = constraints(&pattern);
        let kdim = |prev: u32, j: usize| -> usize { branching_dim(&pattern, &pchars, &memb, &cons, prev, j) };
        let q = f.order() as f64;
        let perm: Vec<usize> = match order {
            SearchOrder::Planned => plan_order(d, q, &kdim),
            _ => (0..d).collect(),
        };
        let mut cost = 0.0;
        let mut prod = 1.0;
        let mut prev = 0u32;
        for &j in &perm {
            prod *= q.powi(kdim(prev, j) as i32);
            cost += prod;
            prev |= 1 << j;
        }
        let cols: Vec<Vec<u8>> = perm.iter().map(|&j| cols[j].clone()).collect();
        Plan { basis: Matrix::from_columns(f, d, &cols), cost }
    }

    /// Searches for `T` with `change_basis(b, T) == a`.
    ///
    /// When the predicted cost exceeds the budget, seeded random dives with
    /// growing node limits come first, spending at most half the budget. The
    /// rest goes to the complete deterministic search.
    fn search(&self, a: &Algebra, b: &Algebra, budget: u64) -> Outcome {
        let f = a.field();
        let d = a.dim();
        let adapted = BasisChange::new(self.basis.clone()).expect("basis");
        let pattern = change_basis(a, &adapted).expect("same dimension");
        let pchars = characteristic_subspaces(&pattern);
        let bchars = characteristic_subspaces(b);
        let memb = membership(&pchars, d);
        let mut cons_at: Vec<Vec<Constraint>> = (0..d).map(|_| Vec::new()).collect();
        for c in constraints(&pattern) {
            let last = *c.involved.last().expect("keys are nonempty");
            cons_at[last].push(c);
        }
        let mut inside = Vec::with_capacity(d);
        let mut outside = Vec::with_capacity(d);
        for m in &memb {
            let mut w = Subspace::whole(f, d);
            let mut out = Vec::new();
            for (i, &is_in) in m.iter().enumerate() {
                if is_in {
                    w = w.intersection(&bchars[i]);
                } else {
                    out.push(bchars[i].clone());
                }
            }
            inside.push(w.annihilator().basis().clone());
            outside.push(out);
        }
        let ads: Vec<Matrix> = subsets(d, b.arity() - 1).iter().map(|y| b.ad_basis(y)).collect();
        let pattern_sigs = {
            let pads: Vec<Matrix> = subsets(d, a.arity() - 1).iter().map(|y| pattern.ad_basis(y)).collect();
            let ys = subsets(d, a.arity() - 1);
            (0..d).map(|j| vector_signature(f, d, &ys, &pads, &pchars, &unit(d, j))).collect()
        };
        let mut ctx = Search {
            f,
            d,
            n: b.arity(),
            cons_at,
            inside,
            outside,
            ads,
            ys: subsets(d, b.arity() - 1),
            chars: bchars,
            signatures: pattern_sigs,
            nodes: 0,
            budget,
            rng: None,
            dive_nodes: 0,
            dive_limit: u64::MAX,
        };
        let mut vs = Vec::with_capacity(d);
        let mut flow = Flow::Exhausted;
        if self.cost > budget as f64 {
            ctx.rng = Some(ChaCha8Rng::seed_from_u64(RESTART_SEED));
            ctx.budget = budget / 2;
            let mut limit = 256.0f64;
            loop {
                ctx.dive_nodes = 0;
                ctx.dive_limit = limit as u64;
                vs.clear();
                flow = ctx.dfs(&mut vs);
                // a dive that finishes without hitting its limit has searched
                // its sampled tree; keep going while the budget lasts
                if matches!(flow, Flow::Found | Flow::Budget) || ctx.dive_nodes == 0 {
                    break;
                }
                limit *= 1.5;
            }
            ctx.rng = None;
            ctx.dive_limit = u64::MAX;
            ctx.budget = budget;
        }
        if !matches!(flow, Flow::Found) {
            vs.clear();
            flow = ctx.dfs(&mut vs);
        }
        match flow {
            Flow::Found => {
                let tp = BasisChange::new(Matrix::from_columns(f, d, &vs)).expect("independent images");
                // change_basis(b, tp) = pattern = change_basis(a, adapted)
                let t = tp.then(&adapted.inverse());
                Outcome::Found(t)
            }
            Flow::Exhausted => Outcome::Exhausted(ctx.nodes),
            Flow::Budget | Flow::DiveLimit => Outcome::OutOfBudget(ctx.nodes),
        }
    }
}

/// Predicted number of free dimensions when `j` is assigned after the set `prev`.
fn branching_dim(
    pattern: &Algebra,
    chars: &[Subspace],
    memb: &[Vec<bool>],
    cons: &[Constraint],
    prev: u32,
    j: usize,
) -> usize {
    let f = pattern.field();
    let d = pattern.dim();
    let known = prev | (1 << j);
    let mut w = Subspace::whole(f, d);
    for (i, &is_in) in memb[j].iter().enumerate() {
        if is_in {
            w = w.intersection(&chars[i]);
        }
    }
    let mut rows: Vec<Vec<u8>> = w.annihilator().basis_vectors();
    for c in cons {
        if !c.involved.contains(&j) || c.involved.iter().any(|&k| known & (1 << k) == 0) {
            continue;
        }
        let Ok(pos) = c.key.binary_search(&j) else { return 0 };
        let mut rest = c.key.clone();
        rest.remove(pos);
        let mut m = pattern.ad_basis(&rest);
        let cj = c.value[j];
        for i in 0..d {
            m.set(i, i, f.add(m.get(i, i), cj));
        }
        rows.extend(m.row_vecs());
    }
    d - Matrix::from_rows(f, d, &rows).rank()
}

/// Order minimizing the predicted node count, by dynamic programming over
/// assigned sets.
fn plan_order(d: usize, q: f64, kdim: &dyn Fn(u32, usize) -> usize) -> Vec<usize> {
    let full = (1u32 << d) - 1;
    // (cost, product, last, previous set)
    let mut best: Vec<Option<(f64, f64, usize)>> = vec![None; 1 << d];
    best[0] = Some((0.0, 1.0, usize::MAX));
    for set in 0..=full {
        let Some((cost, prod, _)) = best[set as usize] else { continue };
        for j in 0..d {
            if set & (1 << j) != 0 {
                continue;
            }
            let next = set | (1 << j);
            let p = prod * q.powi(kdim(set, j) as i32);
            let c = cost + p;
            let better = match best[next as usize] {
                None => true,
                Some((bc, _, bl)) => c < bc || (c == bc && j < bl),
            };
            if better {
                best[next as usize] = Some((c, p, j));
            }
        }
    }
    let mut order = Vec::with_capacity(d);
    let mut set = full;
    while set != 0 {
        let (_, _, j) = best[set as usize].expect("reachable");
        order.push(j);
        set &= !(1 << j);
    }
    order.reverse();
    order
}

enum Outcome {
    Found(BasisChange),
    Exhausted(u64),
    OutOfBudget(u64),
}

enum Flow {
    Found,
    Exhausted,
    Budget,
    DiveLimit,
}

const RESTART_SEED: u64 = 0x6e6c6965;
/// Levels with at most this many candidates are shuffled in full during
/// random dives; larger ones are sampled.
const SHUFFLE_LIMIT: u128 = 256;
const SAMPLES_PER_LEVEL: usize = 32;

struct Search {
    f: Field,
    d: usize,
    n: usize,
    cons_at: Vec<Vec<Constraint>>,
    /// Rows that cut out the allowed subspace for each position.
    inside: Vec<Matrix>,
    /// Subspaces the image must avoid.
    outside: Vec<Vec<Subspace>>,
    ads: Vec<Matrix>,
    ys: Vec<Vec<usize>>,
    /// Characteristic subspaces of the target.
    chars: Vec<Subspace>,
    /// Signatures of the pattern basis vectors.
    signatures: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
    rng: Option<ChaCha8Rng>,
    dive_nodes: u64,
    dive_limit: u64,
}

/// `ad(v_1, .., v_{n-1})` from the basis left multiplications `ads` (indexed
/// like `ys`), weighted by the (n-1)-minors of the arguments.
fn combine_ads(f: Field, d: usize, ys: &[Vec<usize>], ads: &[Matrix], args: &[&[u8]]) -> Matrix {
    let k = args.len();
    let mut out = Matrix::zeros(f, d, d);
    let mut minor = Matrix::zeros(f, k, k);
    for (y, ad) in ys.iter().zip(ads) {
        for (i, a) in args.iter().enumerate() {
            for (c, &yi) in y.iter().enumerate() {
                minor.set(i, c, a[yi]);
            }
        }
        let w = minor.det();
        if w != 0 {
            out = out.add(&scaled(ad, w));
        }
    }
    out
}

/// Basis-free data of a single vector `x`: `dim [x, W, A, .., A]` for `W = A`
/// and each characteristic subspace, then `dim ([x, A, .., A] ∩ W)`.
fn vector_signature(f: Field, d: usize, ys: &[Vec<usize>], ads: &[Matrix], chars: &[Subspace], x: &[u8]) -> Vec<usize> {
    let n = ys[0].len() + 1;
    // ad(x, e_Z) for every (n-2)-subset Z
    let maps: Vec<Matrix> = subsets(d, n - 2)
        .iter()
        .map(|z| {
            let mut args: Vec<Vec<u8>> = vec![x.to_vec()];
            args.extend(z.iter().map(|&i| unit(d, i)));
            let refs: Vec<&[u8]> = args.iter().map(Vec::as_slice).collect();
            combine_ads(f, d, ys, ads, &refs)
        })
        .collect();
    let image_of = |w: &Subspace| -> Subspace {
        let mut vs = Vec::new();
        for m in &maps {
            for b in w.basis_vectors() {
                vs.push(m.mul_vec(&b));
            }
        }
        Subspace::span(f, d, &vs)
    };
    let full = image_of(&Subspace::whole(f, d));
    let mut sig = vec![full.dim()];
    sig.extend(chars.iter().map(|w| image_of(w).dim()));
    sig.extend(chars.iter().map(|w| full.intersection(w).dim()));
    sig
}

impl Search {
    fn ad(&self, args: &[&[u8]]) -> Matrix {
        combine_ads(self.f, self.d, &self.ys, &self.ads, args)
    }

    fn signature(&self, x: &[u8]) -> Vec<usize> {
        vector_signature(self.f, self.d, &self.ys, &self.ads, &self.chars, x)
    }

    fn dfs(&mut self, vs: &mut Vec<Vec<u8>>) -> Flow {
        let j = vs.len();
        if j == self.d {
            return Flow::Found;
        }
        let (f, d) = (self.f, self.d);
        let mut rows: Vec<Vec<u8>> = self.inside[j].row_vecs();
        let mut rhs: Vec<u8> = vec![0; rows.len()];
        for c in &self.cons_at[j] {
            // known part of sum_k c_k v_k
            let mut known = vec![0u8; d];
            for (k, &ck) in c.value.iter().enumerate() {
                if ck != 0 && k != j {
                    axpy(f, ck, &vs[k], &mut known);
                }
            }
            let cj = c.value[j];
            let mut m;
            let mut target = known;
            match c.key.binary_search(&j) {
                Ok(pos) => {
                    // ad(v_rest) v_j - c_j v_j = known
                    let rest: Vec<&[u8]> =
                        c.key.iter().enumerate().filter(|&(i, _)| i != pos).map(|(_, &k)| vs[k].as_slice()).collect();
                    m = self.ad(&rest);
                }
                Err(_) => {
                    // c_j v_j = [v_S] - known
                    let args: Vec<&[u8]> = c.key.iter().map(|&k| vs[k].as_slice()).collect();
                    let lhs = self.ad(&args[..self.n - 1]).mul_vec(args[self.n - 1]);
                    axpy(f, 1, &lhs, &mut target);
                    m = Matrix::zeros(f, d, d);
                }
            }
            for i in 0..d {
                m.set(i, i, f.add(m.get(i, i), cj));
            }
            rows.extend(m.row_vecs());
            rhs.extend(target);
        }
        let system = Matrix::from_rows(f, d, &rows);
        let Some((particular, kernel)) = system.solve(&rhs) else { return Flow::Exhausted };
        let span = Subspace::span(f, d, vs);
        let kvecs = kernel.row_vecs();
        let q = f.order();
        let total = (q as u128).saturating_pow(kvecs.len() as u32);
        let point = |idx: u128| {
            let mut v = particular.clone();
            let mut rem = idx;
            for kv in &kvecs {
                let c = (rem % q as u128) as u8;
                rem /= q as u128;
                if c != 0 {
                    axpy(f, c, kv, &mut v);
                }
            }
            v
        };
        let sampled: Option<Vec<u128>> = self.rng.as_mut().map(|rng| {
            if total <= SHUFFLE_LIMIT {
                let mut all: Vec<u128> = (0..total).collect();
                all.shuffle(rng);
                all
            } else {
                (0..SAMPLES_PER_LEVEL).map(|_| rng.gen_range(0..total)).collect()
            }
        });
        let count = sampled.as_ref().map_or(total, |s| s.len() as u128);
        for i in 0..count {
            let v = point(sampled.as_ref().map_or(i, |s| s[i as usize]));
            if is_zero(&v) || span.contains(&v) || self.outside[j].iter().any(|w| w.contains(&v)) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Flow::Budget;
            }
            self.dive_nodes += 1;
            if self.dive_nodes > self.dive_limit {
                return Flow::DiveLimit;
            }
            if self.signature(&v) != self.signatures[j] {
                continue;
            }
            vs.push(v);
            match self.dfs(vs) {
                Flow::Exhausted => {}
                other => return other,
            }
            vs.pop();
        }
        Flow::Exhausted
    }
}

fn scaled(m: &Matrix, c: u8) -> Matrix {
    let f = m.field();
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(i, j, f.mul(c, m.get(i, j)));
        }
    }
    out
}
