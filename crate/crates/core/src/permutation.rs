use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `0..n`; `image[v]` is where `v` goes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n {
                return Err(Error::InvalidPermutation(format!("image {v} out of range 0..{n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("{v} appears twice")));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation on `0..n` from disjoint cycles; unmentioned points
    /// are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidPermutation(format!("{v} out of range 0..{n}")));
                }
                if std::mem::replace(&mut touched[v], true) {
                    return Err(Error::InvalidPermutation(format!("{v} in two cycles")));
                }
                image[v] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    /// `self` applied `k` times to `v`.
    pub fn apply_pow(&self, mut v: usize, k: usize) -> usize {
        for _ in 0..k {
            v = self.image[v];
        }
        v
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    /// `pi ∘ self ∘ pi⁻¹`, the same permutation after relabeling by `pi`.
    pub fn conjugate_by(&self, pi: &Permutation) -> Permutation {
        pi.compose(self).compose(&pi.inverse())
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        cycle_decomposition(self)
    }

    /// Every orbit including fixed points, each starting at its least member,
    /// sorted by that member.
    fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.image[start];
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.image[v];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

/// One-line cycle notation with fixed points explicit, e.g. `(0)(1 2 4 3)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.orbits() {
            f.write_str("(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses cycle notation. The size is the largest label plus one, so every
    /// point must appear (fixed points included).
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidPermutation(format!("{msg} in {s:?}"));
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let cycle = body[..close]
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad label")))
                .collect::<Result<Vec<_>>>()?;
            if cycle.is_empty() {
                return Err(bad("empty cycle"));
            }
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        let n = cycles.iter().flatten().max().map_or(0, |&m| m + 1);
        let count: usize = cycles.iter().map(Vec::len).sum();
        if count != n {
            return Err(bad("every point 0..n must appear exactly once"));
        }
        Permutation::from_cycles(n, &cycles)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(image: Vec<usize>) -> Result<Self> {
        Permutation::new(image)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.image
    }
}

/// Nontrivial cycles and fixed points of a permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDecomposition {
    /// Each cycle starts at its least label; ordered by decreasing length, then
    /// by least label.
    pub cycles: Vec<Vec<usize>>,
    pub fixed_points: Vec<usize>,
}

impl CycleDecomposition {
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }
}

pub fn cycle_decomposition(p: &Permutation) -> CycleDecomposition {
    let mut cycles = Vec::new();
    let mut fixed_points = Vec::new();
    for orbit in p.orbits() {
        if orbit.len() == 1 {
            fixed_points.push(orbit[0]);
        } else {
            cycles.push(orbit);
        }
    }
    cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    CycleDecomposition {
        cycles,
        fixed_points,
    }
}
