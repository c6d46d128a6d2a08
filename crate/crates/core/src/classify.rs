//! Identification of an algebra against the catalog.
//!
//! Every family of the right dimension is instantiated at one parameter set
//! per equivalence class, candidates with a different fingerprint are dropped,
//! and the rest are decided by [`are_isomorphic`] in parallel. Candidates are
//! ordered by `(CaseId, Params)`; the smallest match wins and any further
//! matches are reported as collisions.

use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::catalog::{instantiate, list_cases, param_representatives, CaseId, Params};
use crate::error::{Error, Result};
use crate::invariants::fingerprint;
use crate::iso::{are_isomorphic_with, IsoVerdict, SearchOptions};
use crate::structmat::BasisChange;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub case: CaseId,
    pub params: Params,
    /// `change_basis(input, witness)` is the catalog instance.
    pub witness: BasisChange,
    /// Other catalog entries isomorphic to the input.
    pub collisions: Vec<(CaseId, Params)>,
    /// Candidates whose search ran out of budget.
    pub inconclusive: Vec<(CaseId, Params)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyOutcome {
    Match(Classification),
    /// No candidate matched. An empty list means every candidate was refuted.
    Unknown {
        inconclusive: Vec<(CaseId, Params)>,
    },
}

/// Catalog instances of dimension `d` and arity `n` over the field of `a`,
/// one per parameter class, that pass the Jacobi identity.
pub fn candidates(a: &Algebra) -> Vec<(CaseId, Params, Algebra)> {
    let (n, d, f) = (a.arity(), a.dim(), a.field());
    let mut out = Vec::new();
    for info in list_cases(n, d) {
        for p in param_representatives(info.case, n, f) {
            if let Ok(c) = instantiate(n, info.case, &p, f) {
                if c.is_n_lie() {
                    out.push((info.case, p, c));
                }
            }
        }
    }
    out
}

pub fn classify(a: &Algebra, budget: u64) -> Result<ClassifyOutcome> {
    classify_with(a, &SearchOptions::with_budget(budget))
}

pub fn classify_with(a: &Algebra, opts: &SearchOptions) -> Result<ClassifyOutcome> {
    let (n, d) = (a.arity(), a.dim());
    if n < 3 || (d != n + 1 && d != n + 2) {
        return Err(Error::WrongDimension { expected: n + 2, got: d });
    }
    let violations = a.jacobi_check();
    if let Some(v) = violations.first() {
        return Err(Error::NotNLie(violations.len(), v.x.clone(), v.y.clone()));
    }
    let fp = fingerprint(a);
    let pool: Vec<_> = candidates(a).into_iter().filter(|(_, _, c)| fingerprint(c).compatible(&fp)).collect();
    let verdicts: Vec<IsoVerdict> =
        pool.par_iter().map(|(_, _, c)| are_isomorphic_with(c, a, opts)).collect::<Result<_>>()?;

    let mut found: Option<(CaseId, Params, BasisChange)> = None;
    let mut collisions = Vec::new();
    let mut inconclusive = Vec::new();
    for ((case, params, _), v) in pool.into_iter().zip(verdicts) {
        match v {
            IsoVerdict::Isomorphic(t) => {
                if found.is_none() {
                    found = Some((case, params, t));
                } else {
                    collisions.push((case, params));
                }
            }
            IsoVerdict::Inconclusive(_) => inconclusive.push((case, params)),
            IsoVerdict::NotIsomorphic(_) => {}
        }
    }
    Ok(match found {
        Some((case, params, witness)) => {
            ClassifyOutcome::Match(Classification { case, params, witness, collisions, inconclusive })
        }
        None => ClassifyOutcome::Unknown { inconclusive },
    })
}
