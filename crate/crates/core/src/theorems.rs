//! Statements about self-extensions as executable checks, and the survey that
//! sweeps them over enumerated algebras.
//!
//! A check never errors: it returns a [`Verdict`]. Statements with a
//! hypothesis (selfinjective, Gorenstein, finite global dimension) report
//! `skipped` when the hypothesis fails instead of holding vacuously.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::homext::{
    ext1_via_lemma, ext_dims, has_infinitely_many_selfext, hom_dim, hom_syzygy_dim, is_rigid,
    nonrigidity_criterion,
};
use crate::kupisch::KupischSeries;
use crate::modrep::{
    find_nonrigid_witness, global_dimension, gorenstein, indecomposables, injective_dimension,
    projective_dimension, syzygy, Dimension, Indecomposable,
};
use crate::oracle;

/// Default horizon for "all degrees" claims.
pub const DEFAULT_HORIZON: usize = 50;

/// Highest degree compared against the oracle by [`CheckId::OracleAgreement`].
pub const ORACLE_DEGREE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Counterexample,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub algebra: KupischSeries,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
    /// A single CLI invocation that recomputes this verdict.
    pub replay: String,
}

impl Verdict {
    fn new(check: &str, a: &KupischSeries, status: Status, replay: String) -> Self {
        Self {
            check: check.to_string(),
            algebra: a.clone(),
            status,
            reason: None,
            witness: None,
            replay,
        }
    }

    pub fn holds(check: &str, a: &KupischSeries, witness: Value) -> Self {
        Self {
            witness: Some(witness),
            ..Self::new(check, a, Status::Holds, check_replay(check, a))
        }
    }

    pub fn counterexample(check: &str, a: &KupischSeries, witness: Value) -> Self {
        Self {
            witness: Some(witness),
            ..Self::new(check, a, Status::Counterexample, check_replay(check, a))
        }
    }

    pub fn skipped(check: &str, a: &KupischSeries, reason: impl Into<String>) -> Self {
        Self {
            reason: Some(reason.into()),
            ..Self::new(check, a, Status::Skipped, check_replay(check, a))
        }
    }

    fn with_replay(mut self, replay: String) -> Self {
        self.replay = replay;
        self
    }
}

fn check_replay(check: &str, a: &KupischSeries) -> String {
    format!("nakayama check --series {a} --id {check}")
}

/// Something the survey can run on one algebra.
pub trait Check: Sync {
    fn id(&self) -> &str;
    fn run(&self, a: &KupischSeries) -> Verdict;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    NonrigidityCriterion,
    Ext1Lemma,
    SyzygyPreservesNonrigid,
    NonrigidInfiniteDims,
    FiniteGldimRigid,
    LoewyBounds,
    SelfinjectiveAllDegrees,
    GorensteinInfinitelyMany,
    OracleAgreement,
}

impl CheckId {
    /// Every check selected by `--checks all`. The oracle comparison is
    /// opt-in because it dominates the running time.
    pub const ALL: [CheckId; 8] = [
        CheckId::NonrigidityCriterion,
        CheckId::Ext1Lemma,
        CheckId::SyzygyPreservesNonrigid,
        CheckId::NonrigidInfiniteDims,
        CheckId::FiniteGldimRigid,
        CheckId::LoewyBounds,
        CheckId::SelfinjectiveAllDegrees,
        CheckId::GorensteinInfinitelyMany,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::NonrigidityCriterion => "nonrigidity_criterion",
            CheckId::Ext1Lemma => "ext1_lemma",
            CheckId::SyzygyPreservesNonrigid => "syzygy_preserves_nonrigid",
            CheckId::NonrigidInfiniteDims => "nonrigid_infinite_dims",
            CheckId::FiniteGldimRigid => "finite_gldim_rigid",
            CheckId::LoewyBounds => "loewy_bounds",
            CheckId::SelfinjectiveAllDegrees => "selfinjective_all_degrees",
            CheckId::GorensteinInfinitelyMany => "gorenstein_infinitely_many",
            CheckId::OracleAgreement => "oracle_agreement",
        }
    }

    pub fn run(self, a: &KupischSeries, horizon: usize) -> Verdict {
        match self {
            CheckId::NonrigidityCriterion => check_nonrigidity_criterion(a),
            CheckId::Ext1Lemma => check_ext1_lemma(a),
            CheckId::SyzygyPreservesNonrigid => check_syzygy_preserves_nonrigid(a),
            CheckId::NonrigidInfiniteDims => check_nonrigid_infinite_dims(a),
            CheckId::FiniteGldimRigid => check_finite_gldim_rigid(a),
            CheckId::LoewyBounds => check_loewy_bounds(a),
            CheckId::SelfinjectiveAllDegrees => check_selfinjective_all_degrees(a, horizon),
            CheckId::GorensteinInfinitelyMany => check_gorenstein_infinitely_many(a),
            CheckId::OracleAgreement => check_oracle_agreement(a, ORACLE_DEGREE),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .iter()
            .chain(&[CheckId::OracleAgreement])
            .copied()
            .find(|c| c.as_str() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown check `{s}`")))
    }
}

/// A built-in check bound to its horizon.
#[derive(Debug, Clone, Copy)]
pub struct Builtin {
    pub id: CheckId,
    pub horizon: usize,
}

impl Builtin {
    pub fn new(id: CheckId) -> Self {
        Self {
            id,
            horizon: DEFAULT_HORIZON,
        }
    }
}

impl Check for Builtin {
    fn id(&self) -> &str {
        self.id.as_str()
    }

    fn run(&self, a: &KupischSeries) -> Verdict {
        let v = self.id.run(a, self.horizon);
        if self.id == CheckId::SelfinjectiveAllDegrees && self.horizon != DEFAULT_HORIZON {
            let replay = format!("{} --horizon {}", v.replay, self.horizon);
            v.with_replay(replay)
        } else {
            v
        }
    }
}

/// Compares Ext¹-rigidity with a closed-form criterion on every indecomposable.
pub fn criterion_check(
    id: &str,
    a: &KupischSeries,
    criterion: impl Fn(&KupischSeries, Indecomposable) -> bool,
) -> Verdict {
    let mut nonrigid = 0;
    for m in indecomposables(a) {
        let ext1 = ext_dims(a, m, m, 1).dims[1];
        let predicted = criterion(a, m);
        if (ext1 > 0) != predicted {
            return Verdict::counterexample(
                id,
                a,
                json!({ "module": m, "ext1": ext1, "criterion": predicted }),
            );
        }
        nonrigid += usize::from(predicted);
    }
    Verdict::holds(
        id,
        a,
        json!({ "modules": indecomposables(a).count(), "nonrigid": nonrigid }),
    )
}

/// Rigid exactly when `n <= k <= c_i - n` fails.
pub fn check_nonrigidity_criterion(a: &KupischSeries) -> Verdict {
    criterion_check(CheckId::NonrigidityCriterion.as_str(), a, nonrigidity_criterion)
}

/// `Ext^1(N, M) = Hom(ΩN, M)` whenever `N` is non-projective and at least as
/// long as `M`.
pub fn check_ext1_lemma(a: &KupischSeries) -> Verdict {
    let id = CheckId::Ext1Lemma.as_str();
    let mut pairs = 0;
    for n in indecomposables(a).filter(|n| !n.is_projective(a)) {
        for m in indecomposables(a).filter(|m| m.k <= n.k) {
            let lemma = ext1_via_lemma(a, n, m).expect("hypotheses hold by construction");
            let ext1 = ext_dims(a, n, m, 1).dims[1];
            if lemma != ext1 {
                return Verdict::counterexample(
                    id,
                    a,
                    json!({ "source": n, "target": m, "hom_syzygy": lemma, "ext1": ext1 }),
                );
            }
            pairs += 1;
        }
    }
    Verdict::holds(id, a, json!({ "pairs": pairs }))
}

fn nonrigid_modules(a: &KupischSeries) -> Vec<Indecomposable> {
    indecomposables(a).filter(|&m| !is_rigid(a, m)).collect()
}

const NO_NONRIGID: &str = "no non-rigid indecomposable";

/// Ω of a non-rigid module is non-rigid.
pub fn check_syzygy_preserves_nonrigid(a: &KupischSeries) -> Verdict {
    let id = CheckId::SyzygyPreservesNonrigid.as_str();
    let nonrigid = nonrigid_modules(a);
    if nonrigid.is_empty() {
        return Verdict::skipped(id, a, NO_NONRIGID);
    }
    for &m in &nonrigid {
        match syzygy(a, m) {
            Some(omega) if !is_rigid(a, omega) => {}
            omega => {
                return Verdict::counterexample(id, a, json!({ "module": m, "syzygy": omega }))
            }
        }
    }
    Verdict::holds(id, a, json!({ "nonrigid": nonrigid.len() }))
}

/// Non-rigid modules have infinite projective and injective dimension.
pub fn check_nonrigid_infinite_dims(a: &KupischSeries) -> Verdict {
    let id = CheckId::NonrigidInfiniteDims.as_str();
    let nonrigid = nonrigid_modules(a);
    if nonrigid.is_empty() {
        return Verdict::skipped(id, a, NO_NONRIGID);
    }
    for &m in &nonrigid {
        let pd = projective_dimension(a, m).0;
        let id_ = injective_dimension(a, m);
        if pd.is_finite() || id_.is_finite() {
            return Verdict::counterexample(
                id,
                a,
                json!({ "module": m, "pd": pd, "injdim": id_ }),
            );
        }
    }
    Verdict::holds(id, a, json!({ "nonrigid": nonrigid.len() }))
}

/// Finite global dimension forces every indecomposable to be rigid.
pub fn check_finite_gldim_rigid(a: &KupischSeries) -> Verdict {
    let id = CheckId::FiniteGldimRigid.as_str();
    let gldim = global_dimension(a);
    if !gldim.is_finite() {
        return Verdict::skipped(id, a, "infinite global dimension");
    }
    match nonrigid_modules(a).first() {
        Some(m) => Verdict::counterexample(id, a, json!({ "gldim": gldim, "module": m })),
        None => Verdict::holds(id, a, json!({ "gldim": gldim })),
    }
}

/// Loewy length at least `2n` gives the non-rigid module `M(i, n)`; finite
/// global dimension bounds the Loewy length by `2n - 1`.
pub fn check_loewy_bounds(a: &KupischSeries) -> Verdict {
    let id = CheckId::LoewyBounds.as_str();
    let n = a.n();
    let loewy = a.loewy_length();
    let gldim = global_dimension(a);
    let long = loewy >= 2 * n;
    if !long && !gldim.is_finite() {
        return Verdict::skipped(id, a, "Loewy length below 2n and infinite global dimension");
    }
    let mut witness = json!({ "loewy_length": loewy, "n": n, "gldim": gldim });
    if long {
        let m = find_nonrigid_witness(a).expect("some c_i >= 2n");
        witness["nonrigid_witness"] = json!(m);
        if is_rigid(a, m) {
            return Verdict::counterexample(id, a, witness);
        }
    }
    if gldim.is_finite() && loewy + 1 > 2 * n {
        return Verdict::counterexample(id, a, witness);
    }
    Verdict::holds(id, a, witness)
}

/// On a selfinjective algebra every non-rigid module has nonzero
/// self-extensions in every positive degree, and for `2k <= w` the Ext groups
/// are `Hom(Ω^l M, M)`.
pub fn check_selfinjective_all_degrees(a: &KupischSeries, horizon: usize) -> Verdict {
    let id = CheckId::SelfinjectiveAllDegrees.as_str();
    if !a.is_selfinjective() {
        return Verdict::skipped(id, a, "not selfinjective");
    }
    let w = a.c(0);
    let lemma_degrees = 2 * a.n() * w;
    let mut first_nonrigid = None;
    let mut nonrigid = 0;
    for m in indecomposables(a).filter(|m| !m.is_projective(a)) {
        let top_degree = horizon.max(lemma_degrees);
        let profile = ext_dims(a, m, m, top_degree);
        if profile.dims[1] > 0 {
            nonrigid += 1;
            first_nonrigid.get_or_insert(m);
            if let Some(l) = (1..=horizon).find(|&l| profile.dims[l] == 0) {
                return Verdict::counterexample(
                    id,
                    a,
                    json!({ "module": m, "vanishing_degree": l, "horizon": horizon }),
                );
            }
            let cert = has_infinitely_many_selfext(a, m);
            if !cert.infinite {
                return Verdict::counterexample(id, a, json!({ "module": m, "certificate": cert }));
            }
        }
        if 2 * m.k <= w {
            for l in 1..=lemma_degrees {
                let hom = hom_syzygy_dim(a, m, l).expect("non-projective over selfinjective");
                if hom != profile.dims[l] {
                    return Verdict::counterexample(
                        id,
                        a,
                        json!({ "module": m, "degree": l, "ext": profile.dims[l], "hom_syzygy": hom }),
                    );
                }
            }
        }
    }
    Verdict::holds(
        id,
        a,
        json!({
            "nonrigid": nonrigid,
            "module": first_nonrigid,
            "horizon": horizon,
            "hom_syzygy_degrees": lemma_degrees,
        }),
    )
}

/// On a Gorenstein algebra every non-rigid module has nonzero
/// self-extensions in infinitely many degrees.
pub fn check_gorenstein_infinitely_many(a: &KupischSeries) -> Verdict {
    let id = CheckId::GorensteinInfinitelyMany.as_str();
    let g = gorenstein(a);
    if !g.is_gorenstein {
        return Verdict::skipped(id, a, "not Gorenstein");
    }
    let nonrigid = nonrigid_modules(a);
    if nonrigid.is_empty() {
        return Verdict::skipped(id, a, NO_NONRIGID);
    }
    for &m in &nonrigid {
        let cert = has_infinitely_many_selfext(a, m);
        if !cert.infinite {
            return Verdict::counterexample(id, a, json!({ "module": m, "certificate": cert }));
        }
    }
    Verdict::holds(
        id,
        a,
        json!({ "injdim": g.right_injdim, "nonrigid": nonrigid.len() }),
    )
}

/// Closed-form Hom and Ext dimensions agree with the matrix oracle on every
/// pair of indecomposables up to `max_degree`.
pub fn check_oracle_agreement(a: &KupischSeries, max_degree: usize) -> Verdict {
    let id = CheckId::OracleAgreement.as_str();
    let mut pairs = 0;
    for n in indecomposables(a) {
        let res = oracle::Resolution::compute(a, &oracle::rep_of(a, n), max_degree + 2);
        for m in indecomposables(a) {
            let target = oracle::rep_of(a, m);
            let fast = ext_dims(a, n, m, max_degree).dims;
            let slow: Vec<usize> = (0..=max_degree).map(|l| res.ext_dim(a, &target, l)).collect();
            let hom_slow = oracle::hom_dim_oracle(a, n, m);
            if fast != slow || hom_slow != hom_dim(a, n, m) {
                return Verdict::counterexample(
                    id,
                    a,
                    json!({ "source": n, "target": m, "ext": fast, "oracle": slow, "oracle_hom": hom_slow }),
                );
            }
            pairs += 1;
        }
    }
    Verdict::holds(id, a, json!({ "pairs": pairs, "max_degree": max_degree }))
}

fn example_series(n: usize) -> KupischSeries {
    let mut c = vec![2; n];
    c[n - 1] = 3;
    KupischSeries::cyclic(&c).expect("valid series")
}

/// Reproduces the behaviour of the series `[2, ..., 2, 3]` with `n` entries:
/// global dimension `n`, a unique simple of projective dimension `n` with
/// nonzero `Ext^n`, and the module `M(n-1, 2)` with `Ext^n = 0` but
/// `Hom(Ω^n M, M)` one-dimensional.
pub fn reproduce_example_223(n: usize) -> Result<Verdict> {
    if n < 2 {
        return Err(Error::HypothesisViolated(format!("need n >= 2, got {n}")));
    }
    let id = "example_223";
    let a = example_series(n);
    let replay = format!("nakayama paper --example 1.6 --n {n}");
    let gldim = global_dimension(&a);
    let top_simples: Vec<Indecomposable> = (0..n)
        .map(Indecomposable::simple)
        .filter(|&s| projective_dimension(&a, s).0 == Dimension::Finite(n))
        .collect();
    let simple = top_simples.first().copied();
    let simple_ext = simple.map(|s| ext_dims(&a, s, s, n).dims[n]);
    let simple_ext_oracle = simple.map(|s| oracle::ext_dim_oracle(&a, s, s, n));
    let m = Indecomposable { i: n - 1, k: 2 };
    let mut dimvec = vec![0; n];
    dimvec[0] = 1;
    dimvec[n - 1] = 1;
    let m_ext = ext_dims(&a, m, m, n).dims[n];
    let m_ext_oracle = oracle::ext_dim_oracle(&a, m, m, n);
    let m_hom = hom_syzygy_dim(&a, m, n)?;
    let witness = json!({
        "gldim": gldim,
        "simples_with_pd_n": top_simples,
        "simple_ext_n": simple_ext,
        "simple_ext_n_oracle": simple_ext_oracle,
        "module": m,
        "dimension_vector": crate::modrep::dimension_vector(&a, m),
        "ext_n": m_ext,
        "ext_n_oracle": m_ext_oracle,
        "hom_syzygy_n": m_hom,
    });
    let ok = gldim == Dimension::Finite(n)
        && top_simples.len() == 1
        && simple_ext.is_some_and(|d| d > 0)
        && simple_ext == simple_ext_oracle
        && crate::modrep::dimension_vector(&a, m) == dimvec
        && m_ext == 0
        && m_ext_oracle == 0
        && m_hom == 1;
    let v = if ok {
        Verdict::holds(id, &a, witness)
    } else {
        Verdict::counterexample(id, &a, witness)
    };
    Ok(v.with_replay(replay))
}

/// Reproduces `K[x]/(x^3)` with `M = A/J^2`: `Ext^2(M, M)` is one-dimensional
/// while `Hom(Ω^2 M, M)` is two-dimensional.
pub fn reproduce_example_kx3() -> Verdict {
    let id = "example_kx3";
    let a = KupischSeries::cyclic(&[3]).expect("valid series");
    let m = Indecomposable { i: 0, k: 2 };
    let ext2 = ext_dims(&a, m, m, 2).dims[2];
    let ext2_oracle = oracle::ext_dim_oracle(&a, m, m, 2);
    let omega2 = crate::modrep::SyzygyOrbit::compute(&a, m).state(2);
    let hom = hom_syzygy_dim(&a, m, 2).expect("infinite resolution");
    let hom_oracle = omega2.map(|o| oracle::hom_dim_oracle(&a, o, m));
    let witness = json!({
        "module": m,
        "ext_2": ext2,
        "ext_2_oracle": ext2_oracle,
        "syzygy_2": omega2,
        "hom_syzygy_2": hom,
        "hom_syzygy_2_oracle": hom_oracle,
    });
    let ok = ext2 == 1
        && ext2_oracle == 1
        && omega2 == Some(m)
        && hom == 2
        && hom_oracle == Some(2);
    let v = if ok {
        Verdict::holds(id, &a, witness)
    } else {
        Verdict::counterexample(id, &a, witness)
    };
    v.with_replay("nakayama paper --example 2.2".into())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusCounts {
    pub holds: usize,
    pub counterexample: usize,
    pub skipped: usize,
}

impl StatusCounts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Holds => self.holds += 1,
            Status::Counterexample => self.counterexample += 1,
            Status::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub algebras: usize,
    pub verdicts: usize,
    #[serde(flatten)]
    pub totals: StatusCounts,
    pub per_check: BTreeMap<String, StatusCounts>,
}

impl Summary {
    pub fn record(&mut self, v: &Verdict) {
        self.verdicts += 1;
        self.totals.add(v.status);
        self.per_check.entry(v.check.clone()).or_default().add(v.status);
    }
}

/// Algebras handed to a worker pool at a time; verdicts are emitted per batch
/// in input order.
const BATCH: usize = 64;

/// Runs every check on every algebra and feeds the verdicts to `sink` in
/// canonical order (algebra-major, then check order), independent of `jobs`.
pub fn survey_each<I, E>(
    algebras: I,
    checks: &[&dyn Check],
    jobs: usize,
    mut sink: impl FnMut(&Verdict) -> std::result::Result<(), E>,
) -> std::result::Result<Summary, E>
where
    I: IntoIterator<Item = KupischSeries>,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let mut summary = Summary::default();
    let mut it = algebras.into_iter().peekable();
    while it.peek().is_some() {
        let batch: Vec<KupischSeries> = it.by_ref().take(BATCH).collect();
        let results: Vec<Vec<Verdict>> = pool.install(|| {
            batch
                .par_iter()
                .map(|a| checks.iter().map(|c| c.run(a)).collect())
                .collect()
        });
        summary.algebras += batch.len();
        for v in results.iter().flatten() {
            summary.record(v);
            sink(v)?;
        }
    }
    Ok(summary)
}

/// Collecting form of [`survey_each`].
pub fn survey<I>(algebras: I, checks: &[&dyn Check], jobs: usize) -> (Vec<Verdict>, Summary)
where
    I: IntoIterator<Item = KupischSeries>,
{
    let mut out = Vec::new();
    let summary = survey_each(algebras, checks, jobs, |v| {
        out.push(v.clone());
        Ok::<(), std::convert::Infallible>(())
    })
    .unwrap_or_else(|e| match e {});
    (out, summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kupisch::{enumerate, Kind};

    fn cyc(c: &[usize]) -> KupischSeries {
        KupischSeries::cyclic(c).unwrap()
    }

    #[test]
    fn loewy_bounds_on_boundary() {
        let v = check_loewy_bounds(&cyc(&[2, 3]));
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.witness.unwrap()["gldim"], json!(2));
    }

    #[test]
    fn selfinjective_all_degrees_example() {
        let v = check_selfinjective_all_degrees(&cyc(&[4, 4]), 50);
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.witness.unwrap()["module"], json!("0,2"));
        assert_eq!(
            check_selfinjective_all_degrees(&cyc(&[2, 3]), 50).status,
            Status::Skipped
        );
    }

    #[test]
    fn hypothesis_gates() {
        let v = check_finite_gldim_rigid(&cyc(&[2, 2]));
        assert_eq!(v.status, Status::Skipped);
        assert_eq!(v.reason.as_deref(), Some("infinite global dimension"));
        assert_eq!(
            check_gorenstein_infinitely_many(&cyc(&[2, 3, 3])).status,
            Status::Skipped
        );
        assert_eq!(check_finite_gldim_rigid(&cyc(&[2, 3])).status, Status::Holds);
    }

    #[test]
    fn example_223_small_and_large() {
        for n in [2, 3, 5] {
            let v = reproduce_example_223(n).unwrap();
            assert_eq!(v.status, Status::Holds, "{v:?}");
        }
        let w = reproduce_example_223(2).unwrap().witness.unwrap();
        assert_eq!(w["simples_with_pd_n"], json!(["0,1"]));
        assert_eq!(w["simple_ext_n"], json!(1));
        assert_eq!(w["hom_syzygy_n"], json!(1));
        assert!(reproduce_example_223(1).is_err());
    }

    #[test]
    fn example_kx3() {
        let v = reproduce_example_kx3();
        assert_eq!(v.status, Status::Holds);
        let w = v.witness.unwrap();
        assert_eq!(w["ext_2"], json!(1));
        assert_eq!(w["hom_syzygy_2"], json!(2));
    }

    #[test]
    fn survey_dedupe_count() {
        let check = Builtin::new(CheckId::LoewyBounds);
        let (verdicts, summary) = survey(enumerate(Kind::Cyclic, 2, 3, true), &[&check], 2);
        assert_eq!(summary.algebras, 3);
        assert_eq!(verdicts.len(), 3);
    }

    struct Corrupted;

    impl Check for Corrupted {
        fn id(&self) -> &str {
            "corrupted_criterion"
        }

        fn run(&self, a: &KupischSeries) -> Verdict {
            criterion_check(self.id(), a, |a, m| a.n() < m.k && m.k + a.n() <= a.c(m.i))
        }
    }

    #[test]
    fn corrupted_criterion_is_caught() {
        let (verdicts, summary) = survey(enumerate(Kind::Cyclic, 1, 4, false), &[&Corrupted], 1);
        assert!(summary.totals.counterexample > 0);
        let bad = verdicts
            .iter()
            .find(|v| v.status == Status::Counterexample)
            .unwrap();
        assert!(bad.witness.is_some());
        assert!(bad.replay.contains("--series cyclic:"));
    }

    #[test]
    fn check_ids_round_trip() {
        for id in CheckId::ALL.iter().chain(&[CheckId::OracleAgreement]) {
            assert_eq!(id.as_str().parse::<CheckId>().unwrap(), *id);
        }
        assert!("nope".parse::<CheckId>().is_err());
    }

    #[test]
    fn oracle_check_small() {
        assert_eq!(check_oracle_agreement(&cyc(&[2, 3]), 6).status, Status::Holds);
    }
}
