//! Hom and Ext dimensions between indecomposable modules.
//!
//! The minimal projective resolution of `N = M(s, t)` has a single
//! indecomposable projective `P_{a_j}` in each degree, where `(a_j, t_j)` runs
//! through the syzygy orbit of `N`. The differential `P_{a_{j+1}} -> P_{a_j}` is
//! left multiplication by the path of length `t_j`. Applying `Hom(-, M)` with
//! `M = M(i, k)` gives a cochain complex whose `j`-th term has a basis indexed
//! by path lengths `l < k` from `i` to `a_j`, and each coboundary sends basis
//! element `l` to `l + t_j`, or to zero once `l + t_j >= k`. Ranks are
//! therefore counts and no field arithmetic is needed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kupisch::KupischSeries;
use crate::modrep::{syzygy, Indecomposable, SyzygyOrbit};

/// `dim Hom(N, M)` for `N = M(s, t)`, `M = M(i, k)`: the elements of `M e_s`
/// annihilated by `J^t`, i.e. path lengths `l` from `i` to `s` with
/// `max(0, k - t) <= l < k`.
pub fn hom_dim(a: &KupischSeries, n: Indecomposable, m: Indecomposable) -> usize {
    (m.k.saturating_sub(n.k)..m.k)
        .filter(|&l| a.path_count(m.i, n.i, l) == 1)
        .count()
}

/// `dim Hom(P_v, M)`, the number of path lengths `l < k` from `i` to `v`.
fn cochain_dim(a: &KupischSeries, v: usize, m: Indecomposable) -> usize {
    (0..m.k).filter(|&l| a.path_count(m.i, v, l) == 1).count()
}

/// Rank of `Hom(P_{state.i}, M) -> Hom(P_{Ω state}, M)`, induced by the path of
/// length `state.k`.
fn coboundary_rank(a: &KupischSeries, state: Indecomposable, m: Indecomposable) -> usize {
    (0..m.k)
        .filter(|&l| a.path_count(m.i, state.i, l) == 1 && l + state.k < m.k)
        .count()
}

/// Terms of the cochain complex `Hom(P_•, M)` and its coboundary ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochains {
    /// `dims[j] = dim Hom(P_{a_j}, M)`.
    pub dims: Vec<usize>,
    /// `ranks[j]` is the rank of the coboundary leaving degree `j`; zero past
    /// the last term.
    pub ranks: Vec<usize>,
}

/// Cochain data for degrees `0..=horizon` (fewer if the resolution is shorter).
pub fn cochains(
    a: &KupischSeries,
    n: Indecomposable,
    m: Indecomposable,
    horizon: usize,
) -> Cochains {
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    let mut state = Some(n);
    for _ in 0..=horizon {
        let Some(s) = state else { break };
        dims.push(cochain_dim(a, s.i, m));
        ranks.push(if s.is_projective(a) {
            0
        } else {
            coboundary_rank(a, s, m)
        });
        state = syzygy(a, s);
    }
    Cochains { dims, ranks }
}

/// Eventual periodicity of an Ext sequence, inherited from the syzygy orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Periodicity {
    pub rho: usize,
    pub pi: usize,
}

/// Ext dimensions between two indecomposables over a range of degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtProfile {
    pub source: Indecomposable,
    pub target: Indecomposable,
    /// `dims[l] = dim Ext^l(source, target)` for `0 <= l <= horizon`.
    pub dims: Vec<usize>,
    /// Degrees `l >= 1` with a nonzero Ext group, within the horizon.
    pub support: Vec<usize>,
    /// Preperiod and period of the source's syzygy orbit, when infinite.
    pub periodic: Option<Periodicity>,
    /// Whether `Ext^l` is nonzero for infinitely many `l`.
    pub infinite: bool,
}

impl ExtProfile {
    pub fn horizon(&self) -> usize {
        self.dims.len() - 1
    }
}

/// Degree-wise Ext dimensions read off the cochain complex.
fn ext_from_cochains(c: &Cochains, horizon: usize) -> Vec<usize> {
    let len = c.dims.len();
    (0..=horizon)
        .map(|l| {
            if l >= len {
                return 0;
            }
            let incoming = if l == 0 { 0 } else { c.ranks[l - 1] };
            c.dims[l] - incoming - c.ranks[l]
        })
        .collect()
}

/// Whether the Ext support is infinite, with the first degree in one full
/// period where it is nonzero.
///
/// `dim Ext^l` depends only on `Ω^{l-1}(N)`, so the sequence is periodic with
/// period `pi` from degree `rho + 1` on and one period decides the question.
fn infinite_support(
    a: &KupischSeries,
    orbit: &SyzygyOrbit,
    m: Indecomposable,
) -> (bool, Option<usize>) {
    let Some((rho, pi)) = orbit.periodicity() else {
        return (false, None);
    };
    let c = cochains(a, orbit.states[0], m, rho + pi);
    let dims = ext_from_cochains(&c, rho + pi);
    let witness = (rho + 1..=rho + pi).find(|&l| dims[l] > 0);
    (witness.is_some(), witness)
}

/// Default horizon: at least two full periods and never below 50.
pub fn default_horizon(a: &KupischSeries, n: Indecomposable) -> usize {
    let orbit = SyzygyOrbit::compute(a, n);
    let span = orbit
        .periodicity()
        .map_or(orbit.states.len(), |(rho, pi)| rho + pi);
    (2 * span).max(50)
}

/// `dim Ext^l(N, M)` for `0 <= l <= horizon`.
pub fn ext_dims(
    a: &KupischSeries,
    n: Indecomposable,
    m: Indecomposable,
    horizon: usize,
) -> ExtProfile {
    let orbit = SyzygyOrbit::compute(a, n);
    let dims = if n.is_projective(a) {
        let mut d = vec![0; horizon + 1];
        d[0] = hom_dim(a, n, m);
        d
    } else {
        ext_from_cochains(&cochains(a, n, m, horizon), horizon)
    };
    debug_assert_eq!(dims[0], hom_dim(a, n, m));
    let support = (1..dims.len()).filter(|&l| dims[l] > 0).collect();
    let (infinite, _) = infinite_support(a, &orbit, m);
    ExtProfile {
        source: n,
        target: m,
        dims,
        support,
        periodic: orbit.periodicity().map(|(rho, pi)| Periodicity { rho, pi }),
        infinite,
    }
}

/// `dim Ext^1(N, M)` computed as `dim Hom(ΩN, M)`, valid when the length of
/// `N` is at least that of `M`.
pub fn ext1_via_lemma(a: &KupischSeries, n: Indecomposable, m: Indecomposable) -> Result<usize> {
    if n.k < m.k {
        return Err(Error::HypothesisViolated(format!(
            "source length {} < target length {}",
            n.k, m.k
        )));
    }
    let omega = syzygy(a, n).ok_or_else(|| {
        Error::HypothesisViolated(format!("source {n} is projective"))
    })?;
    Ok(hom_dim(a, omega, m))
}

/// `n <= k <= c_i - n`, the closed-form condition for `M(i, k)` to have a
/// nonzero first self-extension.
pub fn nonrigidity_criterion(a: &KupischSeries, m: Indecomposable) -> bool {
    let n = a.n();
    n <= m.k && m.k + n <= a.c(m.i)
}

/// `Ext^1(M, M) = 0`, from the resolution engine.
pub fn is_rigid(a: &KupischSeries, m: Indecomposable) -> bool {
    ext_dims(a, m, m, 1).dims[1] == 0
}

/// `dim Hom(Ω^l M, M)`.
pub fn hom_syzygy_dim(a: &KupischSeries, m: Indecomposable, l: usize) -> Result<usize> {
    let orbit = SyzygyOrbit::compute(a, m);
    let omega = orbit.state(l).ok_or(Error::OutOfRange {
        degree: l,
        pd: orbit.states.len() - 1,
    })?;
    Ok(hom_dim(a, omega, m))
}

/// Certificate that `Ext^l(M, M) != 0` for infinitely many `l`, or not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfExtCertificate {
    pub infinite: bool,
    pub periodic: Option<Periodicity>,
    /// A degree in `[rho + 1, rho + pi]` with nonzero self-extensions.
    pub witness_degree: Option<usize>,
    /// Nonzero degrees up to `horizon`.
    pub support: Vec<usize>,
    pub horizon: usize,
}

/// Decides whether `M` has nonzero self-extensions in infinitely many degrees.
pub fn has_infinitely_many_selfext(a: &KupischSeries, m: Indecomposable) -> SelfExtCertificate {
    let orbit = SyzygyOrbit::compute(a, m);
    let (infinite, witness_degree) = infinite_support(a, &orbit, m);
    let horizon = default_horizon(a, m);
    let profile = ext_dims(a, m, m, horizon);
    SelfExtCertificate {
        infinite,
        periodic: orbit.periodicity().map(|(rho, pi)| Periodicity { rho, pi }),
        witness_degree,
        support: profile.support,
        horizon,
    }
}
