//! Nakayama algebras presented by their Kupisch series.
//!
//! Vertices are `0..n`. The indecomposable projective at vertex `i` has
//! composition factors `S_i, S_{i+1}, ..., S_{i+c_i-1}` from the top, so every
//! arrow goes from `v` to `v + 1` (indices reduced mod `n` for cyclic quivers).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Quiver is an oriented cycle with `n` vertices.
    Cyclic,
    /// Quiver is a linearly oriented `A_n`.
    Linear,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Cyclic => "cyclic",
            Kind::Linear => "linear",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "cyclic" => Ok(Kind::Cyclic),
            "linear" => Ok(Kind::Linear),
            other => Err(Error::Parse(format!(
                "unknown kind `{other}`, expected `cyclic` or `linear`"
            ))),
        }
    }
}

/// A validated Kupisch series. Immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KupischSeries {
    kind: Kind,
    c: Vec<usize>,
}

impl KupischSeries {
    /// Validates `seq` as the Kupisch series of a connected, non-semisimple
    /// Nakayama algebra of the given kind.
    ///
    /// ```
    /// use nakayama::{Kind, KupischSeries};
    /// assert!(KupischSeries::validate(Kind::Cyclic, &[2, 3]).is_ok());
    /// assert!(KupischSeries::validate(Kind::Cyclic, &[4, 2]).is_err());
    /// ```
    pub fn validate(kind: Kind, seq: &[usize]) -> Result<Self> {
        let invalid = |index: usize, reason: String| Err(Error::InvalidSeries { index, reason });
        if seq.is_empty() {
            return invalid(0, "series is empty".into());
        }
        if let Some(i) = seq.iter().position(|&c| c == 0) {
            return invalid(i, "Loewy lengths must be positive".into());
        }
        let n = seq.len();
        match kind {
            Kind::Cyclic => {
                for (i, &c) in seq.iter().enumerate() {
                    if c < 2 {
                        return invalid(i, format!("c_{i} = {c} < 2 on a cyclic quiver"));
                    }
                }
                for i in 0..n {
                    let next = seq[(i + 1) % n];
                    if next + 1 < seq[i] {
                        return invalid(
                            (i + 1) % n,
                            format!(
                                "c_{} = {next} < c_{i} - 1 = {}",
                                (i + 1) % n,
                                seq[i] - 1
                            ),
                        );
                    }
                }
            }
            Kind::Linear => {
                if n < 2 {
                    return invalid(0, "linear algebras need n >= 2 (n = 1 is semisimple)".into());
                }
                for i in 0..n - 1 {
                    if seq[i] < 2 {
                        return invalid(i, format!("c_{i} = {} < 2 before the sink", seq[i]));
                    }
                    if seq[i + 1] + 1 < seq[i] {
                        return invalid(
                            i + 1,
                            format!("c_{} = {} < c_{i} - 1 = {}", i + 1, seq[i + 1], seq[i] - 1),
                        );
                    }
                }
                if seq[n - 1] != 1 {
                    return invalid(n - 1, format!("sink has c_{} = {} != 1", n - 1, seq[n - 1]));
                }
            }
        }
        Ok(Self {
            kind,
            c: seq.to_vec(),
        })
    }

    pub fn cyclic(seq: &[usize]) -> Result<Self> {
        Self::validate(Kind::Cyclic, seq)
    }

    pub fn linear(seq: &[usize]) -> Result<Self> {
        Self::validate(Kind::Linear, seq)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Number of vertices (simple modules).
    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn series(&self) -> &[usize] {
        &self.c
    }

    /// Loewy length of the projective at vertex `i`.
    #[inline]
    pub fn c(&self, i: usize) -> usize {
        self.c[i]
    }

    /// Vertex reached from `v` by a path of length `len`.
    ///
    /// Panics on linear algebras if the path would leave the quiver.
    #[inline]
    pub fn shift(&self, v: usize, len: usize) -> usize {
        match self.kind {
            Kind::Cyclic => (v + len) % self.c.len(),
            Kind::Linear => {
                let w = v + len;
                assert!(w < self.c.len(), "path of length {len} from {v} leaves the quiver");
                w
            }
        }
    }

    /// Loewy length of the algebra, the largest `c_i`.
    pub fn loewy_length(&self) -> usize {
        self.c.iter().copied().max().unwrap_or(0)
    }

    /// Constant Kupisch series on a cycle.
    pub fn is_selfinjective(&self) -> bool {
        self.kind == Kind::Cyclic && self.c.windows(2).all(|w| w[0] == w[1])
    }

    /// `dim (e_i A) e_s` in path length `len`: 1 if there is a path of that length
    /// from `i` to `s`, else 0. Relations are not applied.
    #[inline]
    pub fn path_count(&self, i: usize, s: usize, len: usize) -> usize {
        let hit = match self.kind {
            Kind::Cyclic => (i + len) % self.c.len() == s,
            Kind::Linear => i + len == s,
        };
        usize::from(hit)
    }

    /// Vertex relabelling between `A` and `A^op`: vertex `m` of the opposite
    /// algebra carries the dual of the simple at vertex `reflect(m)` of `A`.
    /// The map is an involution.
    #[inline]
    pub fn reflect(&self, v: usize) -> usize {
        let n = self.c.len();
        match self.kind {
            Kind::Cyclic => (n - v % n) % n,
            Kind::Linear => n - 1 - v,
        }
    }

    /// Loewy length of the injective envelope of `S_j`: the number of `l >= 0`
    /// with `c_{j-l} > l`. These lengths form an initial segment.
    pub fn injective_length(&self, j: usize) -> usize {
        let n = self.c.len();
        let mut len = 0;
        loop {
            let src = match self.kind {
                Kind::Cyclic => (j + n * (len / n + 1) - len) % n,
                Kind::Linear => match j.checked_sub(len) {
                    Some(v) => v,
                    None => break,
                },
            };
            if self.c[src] > len {
                len += 1;
            } else {
                break;
            }
        }
        len
    }

    /// Kupisch series of the opposite algebra, with vertices relabelled by
    /// [`reflect`](Self::reflect) so that arrows again go `v -> v + 1`.
    pub fn opposite(&self) -> Self {
        let c = (0..self.n())
            .map(|m| self.injective_length(self.reflect(m)))
            .collect::<Vec<_>>();
        Self::validate(self.kind, &c).expect("opposite of a valid Kupisch series is valid")
    }

    /// Total dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.c.iter().sum()
    }

    /// Lexicographically minimal rotation of the series.
    pub fn canonical_rotation(seq: &[usize]) -> Vec<usize> {
        let n = seq.len();
        (0..n)
            .map(|r| seq[r..].iter().chain(&seq[..r]).copied().collect::<Vec<_>>())
            .min()
            .unwrap_or_default()
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind)?;
        for (i, c) in self.c.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses a comma-separated list of positive integers.
pub fn parse_seq(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("`{}` is not a non-negative integer", t.trim())))
        })
        .collect()
}

impl FromStr for KupischSeries {
    type Err = Error;

    /// Parses the canonical `kind:c0,c1,...` form.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `kind:c0,c1,...`, got `{s}`")))?;
        Self::validate(kind.parse()?, &parse_seq(rest)?)
    }
}

impl Serialize for KupischSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KupischSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Enumerates every valid series with `n` vertices and all `c_i <= max_loewy`,
/// in lexicographic order. With `dedupe_rotations` on a cyclic quiver only the
/// minimal rotation of each class is produced.
pub fn enumerate(kind: Kind, n: usize, max_loewy: usize, dedupe_rotations: bool) -> Enumerate {
    Enumerate {
        kind,
        max: max_loewy,
        dedupe: dedupe_rotations && kind == Kind::Cyclic,
        next: if n == 0 || max_loewy < 1 {
            None
        } else {
            Some(vec![1; n])
        },
    }
}

/// Iterator returned by [`enumerate`].
#[derive(Debug, Clone)]
pub struct Enumerate {
    kind: Kind,
    max: usize,
    dedupe: bool,
    next: Option<Vec<usize>>,
}

impl Enumerate {
    fn advance(&mut self) {
        let Some(cur) = self.next.as_mut() else { return };
        for slot in cur.iter_mut().rev() {
            if *slot < self.max {
                *slot += 1;
                return;
            }
            *slot = 1;
        }
        self.next = None;
    }
}

impl Iterator for Enumerate {
    type Item = KupischSeries;

    fn next(&mut self) -> Option<KupischSeries> {
        loop {
            let cand = self.next.clone()?;
            self.advance();
            if let Ok(series) = KupischSeries::validate(self.kind, &cand) {
                if !self.dedupe || KupischSeries::canonical_rotation(&cand) == cand {
                    return Some(series);
                }
            }
        }
    }
}
