//! Indecomposable modules, syzygies, duality and the homological dimensions
//! built on them.
//!
//! Every indecomposable module over a Nakayama algebra is uniserial, a quotient
//! `e_i A / e_i J^k` of an indecomposable projective. Such a module is stored as
//! its top vertex `i` and length `k`. The syzygy of `M(i, k)` is again uniserial,
//! `M(i + k, c_i - k)`, so a minimal projective resolution is a walk on the
//! finite set of `(vertex, length)` pairs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kupisch::{parse_seq, KupischSeries};

/// A homological dimension: a natural number or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

impl Dimension {
    pub fn is_finite(self) -> bool {
        matches!(self, Dimension::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Dimension::Finite(d) => Some(d),
            Dimension::Infinite => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::Infinite => f.write_str("inf"),
        }
    }
}

/// Serialized as a JSON number, or the string `"inf"`.
impl Serialize for Dimension {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dimension::Finite(d) => s.serialize_u64(*d as u64),
            Dimension::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Dimension {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Dimension::Finite(v as usize)),
            Raw::Str(s) if s == "inf" => Ok(Dimension::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad dimension `{s}`"))),
        }
    }
}

/// The uniserial module `e_i A / e_i J^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Indecomposable {
    /// Top vertex.
    pub i: usize,
    /// Length, `1 <= k <= c_i`.
    pub k: usize,
}

impl Indecomposable {
    /// Checks `1 <= k <= c_i` against the ambient algebra.
    pub fn new(a: &KupischSeries, i: usize, k: usize) -> Result<Self> {
        let m = Self { i, k };
        if i >= a.n() {
            return Err(Error::InvalidModule {
                module: m.to_string(),
                reason: format!("vertex {i} out of range for {} vertices", a.n()),
            });
        }
        if k == 0 || k > a.c(i) {
            return Err(Error::InvalidModule {
                module: m.to_string(),
                reason: format!("length must satisfy 1 <= k <= c_{i} = {}", a.c(i)),
            });
        }
        Ok(m)
    }

    pub fn simple(i: usize) -> Self {
        Self { i, k: 1 }
    }

    pub fn projective(a: &KupischSeries, i: usize) -> Self {
        Self { i, k: a.c(i) }
    }

    pub fn is_projective(&self, a: &KupischSeries) -> bool {
        self.k == a.c(self.i)
    }
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.k)
    }
}

impl FromStr for Indecomposable {
    type Err = Error;

    /// Parses `i,k`; validity against an algebra is checked separately.
    fn from_str(s: &str) -> Result<Self> {
        match parse_seq(s)?.as_slice() {
            &[i, k] => Ok(Self { i, k }),
            _ => Err(Error::Parse(format!("expected a module as `i,k`, got `{s}`"))),
        }
    }
}

impl Serialize for Indecomposable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Indecomposable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Every indecomposable module of `a`, ordered by vertex then length.
pub fn indecomposables(a: &KupischSeries) -> impl Iterator<Item = Indecomposable> + '_ {
    (0..a.n()).flat_map(move |i| (1..=a.c(i)).map(move |k| Indecomposable { i, k }))
}

/// `Ω(M(i, k)) = M(i + k, c_i - k)`, or `None` for a projective.
pub fn syzygy(a: &KupischSeries, m: Indecomposable) -> Option<Indecomposable> {
    if m.is_projective(a) {
        return None;
    }
    let i = a.shift(m.i, m.k);
    let k = a.c(m.i) - m.k;
    assert!(
        k <= a.c(i),
        "Kupisch coherence violated: c_{} - {} > c_{i} in {a}",
        m.i,
        m.k
    );
    Some(Indecomposable { i, k })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Terminal {
    /// `states[j]` is projective.
    ProjectiveReached(usize),
    /// `states[preperiod + period] == states[preperiod]`.
    Cycle { preperiod: usize, period: usize },
}

/// The syzygy sequence `M, ΩM, Ω²M, ...` up to the first projective or the
/// first repeated state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyOrbit {
    pub states: Vec<Indecomposable>,
    pub terminal: Terminal,
}

impl SyzygyOrbit {
    pub fn compute(a: &KupischSeries, m: Indecomposable) -> Self {
        let mut seen = HashMap::new();
        let mut states = Vec::new();
        let mut cur = m;
        loop {
            if let Some(&first) = seen.get(&cur) {
                let j = states.len();
                let orbit = Self {
                    states,
                    terminal: Terminal::Cycle {
                        preperiod: first,
                        period: j - first,
                    },
                };
                assert!(j <= a.n() * a.loewy_length());
                return orbit;
            }
            seen.insert(cur, states.len());
            states.push(cur);
            match syzygy(a, cur) {
                Some(next) => cur = next,
                None => {
                    let j = states.len() - 1;
                    return Self {
                        states,
                        terminal: Terminal::ProjectiveReached(j),
                    };
                }
            }
        }
    }

    pub fn projective_dimension(&self) -> Dimension {
        match self.terminal {
            Terminal::ProjectiveReached(j) => Dimension::Finite(j),
            Terminal::Cycle { .. } => Dimension::Infinite,
        }
    }

    /// `Ω^j(M)` for any `j`, following the cycle when there is one. `None` past
    /// the end of a finite resolution.
    pub fn state(&self, j: usize) -> Option<Indecomposable> {
        match self.terminal {
            Terminal::ProjectiveReached(last) => (j <= last).then(|| self.states[j]),
            Terminal::Cycle { preperiod, period } => {
                if j < self.states.len() {
                    Some(self.states[j])
                } else {
                    Some(self.states[preperiod + (j - preperiod) % period])
                }
            }
        }
    }

    /// `(preperiod, period)` when the resolution is infinite.
    pub fn periodicity(&self) -> Option<(usize, usize)> {
        match self.terminal {
            Terminal::Cycle { preperiod, period } => Some((preperiod, period)),
            Terminal::ProjectiveReached(_) => None,
        }
    }
}

/// Projective dimension together with the orbit that decides it.
pub fn projective_dimension(a: &KupischSeries, m: Indecomposable) -> (Dimension, SyzygyOrbit) {
    let orbit = SyzygyOrbit::compute(a, m);
    (orbit.projective_dimension(), orbit)
}

pub fn top(_a: &KupischSeries, m: Indecomposable) -> usize {
    m.i
}

pub fn socle(a: &KupischSeries, m: Indecomposable) -> usize {
    a.shift(m.i, m.k - 1)
}

/// `D(M)` as a module over [`KupischSeries::opposite`]. The top of `D(M)` is the
/// dual of the socle of `M`, at the reflected vertex.
pub fn dual(a: &KupischSeries, m: Indecomposable) -> Indecomposable {
    Indecomposable {
        i: a.reflect(socle(a, m)),
        k: m.k,
    }
}

/// Computed as the projective dimension of `D(M)` over the opposite algebra.
pub fn injective_dimension(a: &KupischSeries, m: Indecomposable) -> Dimension {
    let op = a.opposite();
    projective_dimension(&op, dual(a, m)).0
}

/// Largest projective dimension of a simple module.
pub fn global_dimension(a: &KupischSeries) -> Dimension {
    (0..a.n())
        .map(|i| projective_dimension(a, Indecomposable::simple(i)).0)
        .max()
        .unwrap_or(Dimension::Finite(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gorenstein {
    pub right_injdim: Dimension,
    pub left_injdim: Dimension,
    pub is_gorenstein: bool,
}

fn regular_injdim(a: &KupischSeries) -> Dimension {
    let op = a.opposite();
    (0..a.n())
        .map(|i| projective_dimension(&op, dual(a, Indecomposable::projective(a, i))).0)
        .max()
        .unwrap_or(Dimension::Finite(0))
}

/// Injective dimensions of the regular module on both sides.
///
/// Panics if both are finite but differ, which would contradict the known
/// equality for Noetherian algebras and signals a bug upstream.
pub fn gorenstein(a: &KupischSeries) -> Gorenstein {
    let right_injdim = regular_injdim(a);
    let left_injdim = regular_injdim(&a.opposite());
    let is_gorenstein = right_injdim.is_finite() && left_injdim.is_finite();
    if is_gorenstein {
        assert_eq!(right_injdim, left_injdim, "one-sided Gorenstein dimensions differ for {a}");
    }
    Gorenstein {
        right_injdim,
        left_injdim,
        is_gorenstein,
    }
}

pub fn dimension_vector(a: &KupischSeries, m: Indecomposable) -> Vec<usize> {
    (0..a.n())
        .map(|v| (0..m.k).map(|l| a.path_count(m.i, v, l)).sum())
        .collect()
}

/// Non-rigid witness for algebras of Loewy length at least `2n`: `M(i, n)` for
/// the smallest `i` with `c_i >= 2n`.
pub fn find_nonrigid_witness(a: &KupischSeries) -> Option<Indecomposable> {
    let n = a.n();
    (0..n)
        .find(|&i| a.c(i) >= 2 * n)
        .map(|i| Indecomposable { i, k: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kupisch::{enumerate, Kind};

    fn cyc(c: &[usize]) -> KupischSeries {
        KupischSeries::cyclic(c).unwrap()
    }

    fn m(i: usize, k: usize) -> Indecomposable {
        Indecomposable { i, k }
    }

    fn small_algebras() -> impl Iterator<Item = KupischSeries> {
        (1..=4)
            .flat_map(|n| enumerate(Kind::Cyclic, n, 8, false))
            .chain((2..=4).flat_map(|n| enumerate(Kind::Linear, n, 8, false)))
    }

    #[test]
    fn syzygy_examples() {
        assert_eq!(syzygy(&cyc(&[3]), m(0, 2)), Some(m(0, 1)));
        assert_eq!(syzygy(&cyc(&[2, 3]), m(1, 2)), Some(m(1, 1)));
        assert_eq!(syzygy(&cyc(&[2, 3]), m(1, 3)), None);
    }

    #[test]
    fn projective_dimension_examples() {
        let a = cyc(&[2, 3]);
        let (pd, orbit) = projective_dimension(&a, m(0, 1));
        assert_eq!(pd, Dimension::Finite(2));
        assert_eq!(orbit.states, vec![m(0, 1), m(1, 1), m(0, 2)]);
        assert_eq!(projective_dimension(&a, m(0, 2)).0, Dimension::Finite(0));
        let (pd, orbit) = projective_dimension(&cyc(&[2, 2]), m(0, 1));
        assert_eq!(pd, Dimension::Infinite);
        assert_eq!(orbit.periodicity(), Some((0, 2)));
        assert_eq!(orbit.state(5), Some(m(1, 1)));
    }

    #[test]
    fn orbit_bound_holds() {
        for a in small_algebras() {
            for x in indecomposables(&a) {
                let orbit = SyzygyOrbit::compute(&a, x);
                if let Some((rho, pi)) = orbit.periodicity() {
                    assert!(rho + pi <= a.n() * a.loewy_length());
                    let again = syzygy(&a, orbit.states[rho + pi - 1]).unwrap();
                    assert_eq!(again, orbit.states[rho]);
                }
            }
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&cyc(&[3]), m(0, 2)), m(0, 2));
        assert_eq!(dual(&cyc(&[2, 3]), m(1, 2)), m(0, 2));
    }

    #[test]
    fn dual_is_involution_and_preserves_dimension_vector() {
        for a in small_algebras() {
            let op = a.opposite();
            for x in indecomposables(&a) {
                let d = dual(&a, x);
                assert!(Indecomposable::new(&op, d.i, d.k).is_ok(), "{a} {x}");
                assert_eq!(dual(&op, d), x, "{a} {x}");
                assert_eq!(top(&op, d), a.reflect(socle(&a, x)));
                let dv = dimension_vector(&a, x);
                let dvo = dimension_vector(&op, d);
                for v in 0..a.n() {
                    assert_eq!(dvo[v], dv[a.reflect(v)]);
                }
            }
        }
    }

    #[test]
    fn injective_dimension_examples() {
        let si = cyc(&[3, 3]);
        assert_eq!(injective_dimension(&si, m(0, 3)), Dimension::Finite(0));
        assert_eq!(injective_dimension(&cyc(&[2, 3]), m(0, 1)), Dimension::Finite(2));
        assert_eq!(injective_dimension(&cyc(&[2, 2]), m(0, 1)), Dimension::Infinite);
    }

    #[test]
    fn global_dimension_examples() {
        for n in 2..=8 {
            let mut c = vec![2; n];
            c[n - 1] = 3;
            assert_eq!(global_dimension(&cyc(&c)), Dimension::Finite(n));
        }
        assert_eq!(global_dimension(&cyc(&[4, 4, 4])), Dimension::Infinite);
        assert_eq!(
            global_dimension(&KupischSeries::linear(&[2, 1]).unwrap()),
            Dimension::Finite(1)
        );
    }

    #[test]
    fn gorenstein_examples() {
        let g = gorenstein(&cyc(&[3, 3]));
        assert_eq!(
            (g.right_injdim, g.left_injdim, g.is_gorenstein),
            (Dimension::Finite(0), Dimension::Finite(0), true)
        );
        let g = gorenstein(&cyc(&[2, 3]));
        assert_eq!(
            (g.right_injdim, g.left_injdim, g.is_gorenstein),
            (Dimension::Finite(2), Dimension::Finite(2), true)
        );
        let g = gorenstein(&cyc(&[2, 3, 3]));
        assert_eq!(g.right_injdim, Dimension::Infinite);
        assert!(!g.is_gorenstein);
    }

    #[test]
    fn dimension_vector_examples() {
        assert_eq!(dimension_vector(&cyc(&[2, 3]), m(1, 2)), vec![1, 1]);
        assert_eq!(dimension_vector(&cyc(&[2, 3, 3]), m(1, 1)), vec![0, 1, 0]);
        assert_eq!(dimension_vector(&cyc(&[3]), m(0, 3)), vec![3]);
        for a in small_algebras() {
            for x in indecomposables(&a) {
                assert_eq!(dimension_vector(&a, x).iter().sum::<usize>(), x.k);
            }
        }
    }

    #[test]
    fn top_and_socle() {
        let a = cyc(&[2, 3]);
        assert_eq!((top(&a, m(0, 1)), socle(&a, m(0, 1))), (0, 0));
        assert_eq!((top(&a, m(1, 2)), socle(&a, m(1, 2))), (1, 0));
    }

    #[test]
    fn module_validation_and_parsing() {
        let a = cyc(&[2, 3]);
        assert!(Indecomposable::new(&a, 1, 3).is_ok());
        assert!(Indecomposable::new(&a, 0, 3).is_err());
        assert!(Indecomposable::new(&a, 2, 1).is_err());
        assert!(Indecomposable::new(&a, 0, 0).is_err());
        assert_eq!("1,2".parse::<Indecomposable>().unwrap(), m(1, 2));
        assert!("1".parse::<Indecomposable>().is_err());
    }

    #[test]
    fn witness_is_smallest_vertex() {
        assert_eq!(find_nonrigid_witness(&cyc(&[3, 4, 4])), None);
        assert_eq!(find_nonrigid_witness(&cyc(&[4, 5])), Some(m(0, 2)));
        assert_eq!(find_nonrigid_witness(&cyc(&[3, 4])), Some(m(1, 2)));
    }

    #[test]
    fn dimension_serializes() {
        assert_eq!(serde_json::to_string(&Dimension::Finite(3)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&Dimension::Infinite).unwrap(), "\"inf\"");
        let d: Dimension = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(d, Dimension::Infinite);
    }
}
