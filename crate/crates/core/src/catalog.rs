//! The classification tables for (n+1)- and (n+2)-dimensional n-Lie algebras
//! in characteristic 2, instantiated for a given arity and field.
//!
//! Tables are written as index patterns in 1-based notation and generated
//! for each `n`. Family names use the ASCII forms `L21.c2` (dimension n+1) and
//! `T32.d9` (dimension n+2); `ebar` stands for the odd-rank e-families.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{hex, Field};

macro_rules! case_ids {
    ($($var:ident => $name:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CaseId { $($var),* }

        impl CaseId {
            pub const ALL: &'static [CaseId] = &[$(CaseId::$var),*];

            pub fn name(self) -> &'static str {
                match self { $(CaseId::$var => $name),* }
            }
        }
    };
}

case_ids! {
    L21A => "L21.a",
    L21B1 => "L21.b1",
    L21B2 => "L21.b2",
    L21C1 => "L21.c1",
    L21C2 => "L21.c2",
    L21D1 => "L21.d1",
    L21D2 => "L21.d2",
    T32A => "T32.a",
    T32B1 => "T32.b1",
    T32B2 => "T32.b2",
    T32C1 => "T32.c1",
    T32C2 => "T32.c2",
    T32C3 => "T32.c3",
    T32C4 => "T32.c4",
    T32C5 => "T32.c5",
    T32C6 => "T32.c6",
    T32D1 => "T32.d1",
    T32D2 => "T32.d2",
    T32D3 => "T32.d3",
    T32D4 => "T32.d4",
    T32D5 => "T32.d5",
    T32D6 => "T32.d6",
    T32D7 => "T32.d7",
    T32D8 => "T32.d8",
    T32D9 => "T32.d9",
    T32E1 => "T32.e1",
    T32E2 => "T32.e2",
    T32E3 => "T32.e3",
    T32Ebar1 => "T32.ebar1",
    T32Ebar2 => "T32.ebar2",
    T32Ebar3 => "T32.ebar3",
    T32Ebar4 => "T32.ebar4",
    T32Ebar5 => "T32.ebar5",
    T32Ebar6 => "T32.ebar6",
}

/// Which parameters a family takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Signature {
    None,
    /// one nonzero scalar (`beta` for L21.c2, `alpha` for T32.c3/c4, `gamma` for T32.d6)
    NonzeroScalar(&'static str),
    /// `beta` outside {0, 1}
    BetaNot01,
    /// `s != 0`, `t`, `u` arbitrary
    Stu,
    /// rank `r` only
    Rank,
    /// rank `r` and even `q`
    RankSplit,
}

impl CaseId {
    /// `true` for the (n+2)-dimensional families.
    pub fn is_codim2(self) -> bool {
        self >= CaseId::T32A
    }

    pub fn dim(self, n: usize) -> usize {
        if self.is_codim2() {
            n + 2
        } else {
            n + 1
        }
    }

    pub fn signature(self) -> Signature {
        use CaseId::*;
        match self {
            L21C2 => Signature::NonzeroScalar("beta"),
            T32C3 | T32C4 => Signature::NonzeroScalar("alpha"),
            T32D6 => Signature::NonzeroScalar("gamma"),
            T32D7 => Signature::BetaNot01,
            T32D9 => Signature::Stu,
            L21D2 | T32E2 | T32E3 | T32Ebar2 | T32Ebar3 | T32Ebar4 | T32Ebar5 | T32Ebar6 => Signature::Rank,
            L21D1 | T32E1 | T32Ebar1 => Signature::RankSplit,
            _ => Signature::None,
        }
    }

    /// Dimension of the derived algebra implied by the family letter (`r` for rank families).
    pub fn derived_dim(self, params: &Params) -> usize {
        use CaseId::*;
        match self {
            L21A | T32A => 0,
            L21B1 | L21B2 | T32B1 | T32B2 => 1,
            L21C1 | L21C2 | T32C1 | T32C2 | T32C3 | T32C4 | T32C5 | T32C6 => 2,
            T32D1 | T32D2 | T32D3 | T32D4 | T32D5 | T32D6 | T32D7 | T32D8 | T32D9 => 3,
            _ => params.r.unwrap_or(0),
        }
    }

    /// Allowed ranks `r` for rank families, ignoring `n`.
    fn rank_rule(self) -> Option<(usize, Option<bool>)> {
        use CaseId::*;
        // (minimum r, required parity: Some(true) = even)
        match self {
            L21D1 | L21D2 => Some((3, None)),
            T32E1 | T32E2 | T32E3 => Some((4, Some(true))),
            T32Ebar1 | T32Ebar2 | T32Ebar3 | T32Ebar4 | T32Ebar5 | T32Ebar6 => Some((5, Some(false))),
            _ => None,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<CaseId> {
        let norm = s.trim().replacen('_', ".", 1);
        CaseId::ALL
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::Param(format!("unknown case `{s}`")))
    }
}

impl Serialize for CaseId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Family parameters. Scalars are raw field elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub alpha: Option<u8>,
    pub beta: Option<u8>,
    pub gamma: Option<u8>,
    pub s: Option<u8>,
    pub t: Option<u8>,
    pub u: Option<u8>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub r: Option<usize>,
}

impl Params {
    pub fn none() -> Params {
        Params::default()
    }

    pub fn rank(r: usize) -> Params {
        Params { r: Some(r), ..Params::default() }
    }

    pub fn split(r: usize, q: usize) -> Params {
        Params { r: Some(r), q: Some(q), p: Some(r - q.min(r)), ..Params::default() }
    }

    pub fn stu(s: u8, t: u8, u: u8) -> Params {
        Params { s: Some(s), t: Some(t), u: Some(u), ..Params::default() }
    }

    pub fn scalar(name: &str, v: u8) -> Result<Params> {
        let mut p = Params::default();
        p.set(name, &hex(v))?;
        Ok(p)
    }

    pub fn is_empty(&self) -> bool {
        *self == Params::default()
    }

    fn scalars_mut(&mut self, name: &str) -> Option<&mut Option<u8>> {
        match name {
            "alpha" => Some(&mut self.alpha),
            "beta" => Some(&mut self.beta),
            "gamma" => Some(&mut self.gamma),
            "s" => Some(&mut self.s),
            "t" => Some(&mut self.t),
            "u" => Some(&mut self.u),
            _ => None,
        }
    }

    /// Sets a parameter from text: scalars as `0x..` hex (or decimal), integers in decimal.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = || Error::Param(format!("bad value `{value}` for `{key}`"));
        if let Some(slot) = self.scalars_mut(key) {
            let v = match value.strip_prefix("0x") {
                Some(h) => u8::from_str_radix(h, 16).map_err(|_| bad())?,
                None => value.parse::<u8>().map_err(|_| bad())?,
            };
            *slot = Some(v);
            return Ok(());
        }
        let v: usize = value.parse().map_err(|_| bad())?;
        match key {
            "p" => self.p = Some(v),
            "q" => self.q = Some(v),
            "r" => self.r = Some(v),
            _ => return Err(Error::Param(format!("unknown parameter `{key}`"))),
        }
        Ok(())
    }

    /// `(name, rendered value)` for every parameter that is set.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        for (k, v) in [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("gamma", self.gamma),
            ("s", self.s),
            ("t", self.t),
            ("u", self.u),
        ] {
            if let Some(v) = v {
                out.push((k, hex(v)));
            }
        }
        for (k, v) in [("p", self.p), ("q", self.q), ("r", self.r)] {
            if let Some(v) = v {
                out.push((k, v.to_string()));
            }
        }
        out
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().into_iter().map(|(k, v)| format!("{k}={v}")).collect();
        if parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let entries = self.entries();
        let mut map = s.serialize_map(Some(entries.len()))?;
        for (k, v) in entries {
            map.serialize_entry(k, &v)?;
        }
        map.end()
    }
}

fn param_err(case: CaseId, msg: impl fmt::Display) -> Error {
    Error::Param(format!("{case}: {msg}"))
}

/// Checks the parameters of `case` without looking at `n`, returning the
/// normalized set (with `p` filled in for split families).
pub fn validate(case: CaseId, params: &Params, field: Field) -> Result<Params> {
    let mut out = Params::default();
    let scalar = |name: &str, v: Option<u8>| -> Result<u8> {
        let v = v.ok_or_else(|| param_err(case, format!("missing `{name}`")))?;
        if !field.contains(v) {
            return Err(param_err(case, format!("{name}={} is not an element of GF({})", hex(v), field.order())));
        }
        Ok(v)
    };
    let mut allowed: Vec<&str> = Vec::new();
    match case.signature() {
        Signature::None => {}
        Signature::NonzeroScalar(name) => {
            let given = match name {
                "alpha" => params.alpha,
                "beta" => params.beta,
                _ => params.gamma,
            };
            let v = scalar(name, given)?;
            if v == 0 {
                return Err(param_err(case, format!("{name} must be nonzero")));
            }
            *out.scalars_mut(name).unwrap() = Some(v);
            allowed.push(name);
        }
        Signature::BetaNot01 => {
            let v = scalar("beta", params.beta)?;
            if v <= 1 {
                return Err(param_err(case, "beta must differ from 0 and 1"));
            }
            out.beta = Some(v);
            allowed.push("beta");
        }
        Signature::Stu => {
            let s = scalar("s", params.s)?;
            if s == 0 {
                return Err(param_err(case, "s must be nonzero"));
            }
            out.s = Some(s);
            out.t = Some(scalar("t", params.t)?);
            out.u = Some(scalar("u", params.u)?);
            allowed.extend(["s", "t", "u"]);
        }
        Signature::Rank | Signature::RankSplit => {
            let r = params.r.ok_or_else(|| param_err(case, "missing `r`"))?;
            let (min, parity) = case.rank_rule().expect("rank family");
            if r < min {
                return Err(param_err(case, format!("r must be at least {min}")));
            }
            if let Some(even) = parity {
                if (r % 2 == 0) != even {
                    return Err(param_err(case, format!("r must be {}", if even { "even" } else { "odd" })));
                }
            }
            out.r = Some(r);
            allowed.push("r");
            if case.signature() == Signature::RankSplit {
                let q = params.q.ok_or_else(|| param_err(case, "missing `q`"))?;
                if q % 2 != 0 {
                    return Err(param_err(case, "q must be even"));
                }
                let q_ok = match case {
                    CaseId::L21D1 => q > 0 && q <= r,
                    CaseId::T32E1 => (2..=r).contains(&q),
                    _ => q >= 2 && q < r,
                };
                if !q_ok {
                    return Err(param_err(case, format!("q={q} is out of range for r={r}")));
                }
                if let Some(p) = params.p {
                    if p + q != r {
                        return Err(param_err(case, "p + q must equal r"));
                    }
                }
                out.q = Some(q);
                out.p = Some(r - q);
                allowed.extend(["p", "q"]);
            }
        }
    }
    for (k, _) in params.entries() {
        if !allowed.contains(&k) {
            return Err(param_err(case, format!("does not take parameter `{k}`")));
        }
    }
    Ok(out)
}

/// `{lo..=hi}` as a 1-based index set.
fn range(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

fn omit(mut set: Vec<usize>, i: usize) -> Vec<usize> {
    set.retain(|&x| x != i);
    set
}

fn with_first(first: usize, rest: Vec<usize>) -> Vec<usize> {
    let mut v = vec![first];
    v.extend(rest);
    v
}

/// One table row: 1-based key and the value as `(coefficient, 1-based index)` terms.
type Row = (Vec<usize>, Vec<(u8, usize)>);

fn e(i: usize) -> Vec<(u8, usize)> {
    vec![(1, i)]
}

fn rows_for(case: CaseId, n: usize, p: &Params) -> Vec<Row> {
    use CaseId::*;
    let m = n + 1;
    let top = n + 2;
    // the recurring keys
    let k_2_m = range(2, m); // e2 .. e_{n+1}
    let k_1_3m = with_first(1, range(3, m)); // e1, e3 .. e_{n+1}
    let k_1_4t = with_first(1, range(4, top)); // e1, e4 .. e_{n+2}
    let k_2_4t = with_first(2, range(4, top)); // e2, e4 .. e_{n+2}
    let k_3_t = range(3, top); // e3 .. e_{n+2}
    let k_omit3 = omit(range(1, m), 3); // e1, e2, e4 .. e_{n+1}
    let r = p.r.unwrap_or(0);
    let q = p.q.unwrap_or(0);
    let pp = r.saturating_sub(q);
    // omit i from {1..n+1} -> e_i for i <= p, omit p+k -> e_{r+1-k}
    let split = || -> Vec<Row> {
        let mut v: Vec<Row> = (1..=pp).map(|i| (omit(range(1, m), i), e(i))).collect();
        v.extend((1..=q).map(|k| (omit(range(1, m), pp + k), e(r + 1 - k))));
        v
    };
    let diag = || -> Vec<Row> { (1..=r).map(|i| (omit(range(1, m), i), e(i))).collect() };
    let reversed = || -> Vec<Row> {
        let mut v: Vec<Row> = vec![(k_2_m.clone(), e(1))];
        v.extend((2..=r).map(|i| (omit(range(1, m), i), e(r - i + 2))));
        v
    };
    let shifted = |target: &dyn Fn(usize) -> usize| -> Vec<Row> {
        let mut v: Vec<Row> = vec![(k_2_m.clone(), e(1))];
        v.extend((2..=r).map(|i| (omit(range(2, top), i), e(target(i)))));
        v
    };
    match case {
        L21A | T32A => vec![],
        L21B1 | T32B1 => vec![(k_2_m.clone(), e(1))],
        L21B2 | T32B2 => vec![(range(1, n), e(1))],
        L21C1 | T32C1 => vec![(k_2_m.clone(), e(1)), (k_1_3m.clone(), e(2))],
        L21C2 => vec![(k_1_3m.clone(), e(2)), (k_2_m.clone(), vec![(1, 1), (p.beta.unwrap(), 2)])],
        L21D1 | T32E1 | T32Ebar1 => split(),
        L21D2 | T32E2 | T32Ebar2 => diag(),
        T32C2 => vec![(k_2_m.clone(), e(1)), (k_1_3m.clone(), e(2)), (k_1_4t.clone(), e(1)), (k_2_4t.clone(), e(2))],
        T32C3 => vec![(k_1_3m.clone(), e(2)), (k_2_m.clone(), vec![(1, 1), (p.alpha.unwrap(), 2)])],
        T32C4 => vec![
            (k_1_3m.clone(), e(2)),
            (k_2_m.clone(), vec![(1, 1), (p.alpha.unwrap(), 2)]),
            (k_1_4t.clone(), e(1)),
            (k_2_4t.clone(), e(2)),
        ],
        T32C5 => vec![(k_2_m.clone(), e(1)), (k_3_t.clone(), e(2))],
        T32C6 => vec![(k_2_m.clone(), e(1)), (k_1_4t.clone(), e(1)), (k_2_4t.clone(), e(2))],
        T32D1 => vec![(k_omit3.clone(), e(3)), (k_1_3m.clone(), e(2)), (k_2_m.clone(), e(1))],
        T32D2 => vec![
            (k_2_m.clone(), e(1)),
            (k_1_3m.clone(), e(3)),
            (k_omit3.clone(), e(2)),
            (k_2_4t.clone(), e(2)),
            (k_3_t.clone(), vec![(1, 3), (1, 2)]),
        ],
        T32D3 => vec![(k_2_m.clone(), e(1)), (k_1_3m.clone(), e(3)), (k_omit3.clone(), e(2))],
        T32D4 => vec![(k_2_m.clone(), e(1)), (k_2_4t.clone(), e(3)), (k_3_t.clone(), e(2))],
        T32D5 => vec![(k_2_m.clone(), e(1)), (k_2_4t.clone(), e(2)), (k_3_t.clone(), e(3))],
        T32D6 => vec![
            (k_2_m.clone(), e(1)),
            (k_1_4t.clone(), e(1)),
            (k_2_4t.clone(), vec![(1, 2), (p.gamma.unwrap(), 3)]),
            (k_3_t.clone(), e(2)),
        ],
        T32D7 => {
            let b = p.beta.unwrap();
            vec![(k_1_4t.clone(), e(1)), (k_2_4t.clone(), e(3)), (k_3_t.clone(), vec![(b, 2), (b ^ 1, 3)])]
        }
        T32D8 => vec![(k_1_4t.clone(), e(1)), (k_2_4t.clone(), e(2)), (k_3_t.clone(), e(3))],
        T32D9 => vec![
            (k_1_4t.clone(), e(2)),
            (k_2_4t.clone(), e(3)),
            (k_3_t.clone(), vec![(p.s.unwrap(), 1), (p.t.unwrap(), 2), (p.u.unwrap(), 3)]),
        ],
        T32E3 | T32Ebar5 => shifted(&|i| i),
        T32Ebar6 => shifted(&|i| if i % 2 == 0 { i + 1 } else { i - 1 }),
        T32Ebar3 => {
            let mut v = reversed();
            v.push((k_3_t.clone(), e(3)));
            v.push((k_2_4t.clone(), vec![(1, 2), (1, 3)]));
            v
        }
        T32Ebar4 => {
            let mut v = reversed();
            v.push((k_3_t.clone(), e(2)));
            v
        }
    }
}

/// Builds the algebra of `case` with arity `n` over `field`, bracket by bracket
/// as tabulated (unlisted brackets zero).
///
/// Rank families need every index of their pattern to fit in the dimension; when
/// it does not (for example `r > n + 1`) the case is reported as not realizable.
pub fn instantiate(n: usize, case: CaseId, params: &Params, field: Field) -> Result<Algebra> {
    if n < 3 {
        return Err(Error::Param(format!("arity must be at least 3, got {n}")));
    }
    let p = validate(case, params, field)?;
    let d = case.dim(n);
    if let Some(r) = p.r {
        if r > n + 1 {
            return Err(Error::CaseNotRealizable(format!("{case} with r={r} needs r <= n+1 = {}", n + 1)));
        }
    }
    let rows = rows_for(case, n, &p);
    let mut seen = std::collections::BTreeSet::new();
    let mut brackets = Vec::with_capacity(rows.len());
    for (key, terms) in rows {
        if key.iter().any(|&i| i == 0 || i > d) || key.len() != n {
            return Err(Error::CaseNotRealizable(format!("{case}: bracket {key:?} does not fit in dimension {d}")));
        }
        if !seen.insert(key.clone()) {
            return Err(Error::CaseNotRealizable(format!("{case}: bracket {key:?} listed twice for n={n}")));
        }
        let mut v = vec![0u8; d];
        for (c, i) in terms {
            v[i - 1] = field.add(v[i - 1], c);
        }
        brackets.push((key.iter().map(|i| i - 1).collect::<Vec<_>>(), v));
    }
    Algebra::from_brackets(n, d, field, brackets)
}

/// One entry of [`list_cases`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseInfo {
    pub case: CaseId,
    pub signature: Signature,
    /// Human-readable parameter ranges for this `n`.
    pub ranges: String,
    /// Valid `(r, q)` choices (q is 0 for rank-only families) realizable for this `n`.
    pub integer_params: Vec<(usize, usize)>,
}

fn integer_choices(case: CaseId, n: usize) -> Vec<(usize, usize)> {
    let Some((min, _)) = case.rank_rule() else { return vec![(0, 0)] };
    let mut out = Vec::new();
    for r in min..=n + 1 {
        let base = if case.signature() == Signature::RankSplit { Params::split(r, 0) } else { Params::rank(r) };
        if case.signature() == Signature::RankSplit {
            for q in (2..=r).step_by(2) {
                let p = Params { q: Some(q), p: None, ..base.clone() };
                if validate(case, &p, Field::gf2()).is_ok() {
                    out.push((r, q));
                }
            }
        } else if validate(case, &base, Field::gf2()).is_ok() {
            out.push((r, 0));
        }
    }
    out
}

/// All families of the given dimension (`n + 1` or `n + 2`) realizable for `n`.
pub fn list_cases(n: usize, dim: usize) -> Vec<CaseInfo> {
    let codim2 = if dim == n + 2 {
        true
    } else if dim == n + 1 {
        false
    } else {
        return Vec::new();
    };
    CaseId::ALL
        .iter()
        .copied()
        .filter(|c| c.is_codim2() == codim2)
        .filter_map(|case| {
            let ints = integer_choices(case, n);
            if ints.is_empty() {
                return None;
            }
            let ranges = match case.signature() {
                Signature::None => String::new(),
                Signature::NonzeroScalar(name) => format!("{name} != 0"),
                Signature::BetaNot01 => "beta not in {0, 1}".to_string(),
                Signature::Stu => "s != 0; t, u arbitrary".to_string(),
                Signature::Rank | Signature::RankSplit => {
                    let rs: Vec<String> = ints
                        .iter()
                        .map(|&(r, q)| if q == 0 { format!("r={r}") } else { format!("r={r},q={q}") })
                        .collect();
                    rs.join("; ")
                }
            };
            let integer_params = if case.rank_rule().is_some() { ints } else { Vec::new() };
            Some(CaseInfo { case, signature: case.signature(), ranges, integer_params })
        })
        .collect()
}

/// Every valid parameter set of `case` for arity `n` over `field`.
pub fn param_grid(case: CaseId, n: usize, field: Field) -> Vec<Params> {
    let nonzero: Vec<u8> = field.elements().filter(|&x| x != 0).collect();
    match case.signature() {
        Signature::None => vec![Params::none()],
        Signature::NonzeroScalar(name) => nonzero.iter().map(|&v| Params::scalar(name, v).unwrap()).collect(),
        Signature::BetaNot01 => {
            field.elements().filter(|&b| b > 1).map(|b| Params { beta: Some(b), ..Params::default() }).collect()
        }
        Signature::Stu => {
            let mut out = Vec::new();
            for &s in &nonzero {
                for t in field.elements() {
                    for u in field.elements() {
                        out.push(Params::stu(s, t, u));
                    }
                }
            }
            out
        }
        Signature::Rank => integer_choices(case, n).into_iter().map(|(r, _)| Params::rank(r)).collect(),
        Signature::RankSplit => integer_choices(case, n).into_iter().map(|(r, q)| Params::split(r, q)).collect(),
    }
}

/// One parameter set per equivalence class of [`param_equivalent`]: the
/// smallest member of each class.
pub fn param_representatives(case: CaseId, n: usize, field: Field) -> Vec<Params> {
    let grid = param_grid(case, n, field);
    if case != CaseId::T32D9 {
        return grid;
    }
    grid.into_iter().filter(|p| d9_orbit(field, p).iter().all(|o| o >= p)).collect()
}

fn d9_orbit(field: Field, p: &Params) -> Vec<Params> {
    let (s, t, u) = (p.s.unwrap(), p.t.unwrap(), p.u.unwrap());
    field
        .elements()
        .filter(|&x| x != 0)
        .map(|dl| Params::stu(field.mul(field.pow(dl, 3), s), field.mul(field.pow(dl, 2), t), field.mul(dl, u)))
        .collect()
}

/// Whether two parameter sets of `case` give isomorphic algebras according to
/// the classification's equivalence rules.
///
/// For `T32.d9` this asks for a nonzero `delta` with `(s', t', u') =
/// (delta^3 s, delta^2 t, delta u)`; every other family is rigid in its parameters.
pub fn param_equivalent(case: CaseId, p1: &Params, p2: &Params, field: Field) -> Result<bool> {
    let a = validate(case, p1, field)?;
    let b = validate(case, p2, field)?;
    if case.signature() == Signature::None {
        return if p1 == p2 { Ok(true) } else { Err(param_err(case, "takes no parameters")) };
    }
    if case == CaseId::T32D9 {
        return Ok(d9_orbit(field, &a).contains(&b));
    }
    Ok(a == b)
}
