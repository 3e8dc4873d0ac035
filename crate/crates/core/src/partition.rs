//! Partitions, conjugates, skew shapes, and the column-block bookkeeping
//! (distinct inner parts d_i, multiplicities m_i, prefix sums M_i, column
//! intervals D_i) used throughout the path and involution machinery.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A partition: a weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored; indexing past the length yields 0, so
/// `p.part(i)` is total on all `i ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Panics if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {:?}",
            parts
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The i-th part (1-based); 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition: column heights of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Containment of Young diagrams: `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (1..=self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// All partitions fitting in an `rows × cols` box (including the empty
    /// one), in a fixed deterministic order.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = vec![(Vec::<usize>::new(), cols)];
        while let Some((cur, max)) = stack.pop() {
            out.push(Partition { parts: cur.clone() });
            if cur.len() < rows {
                for next in (1..=max).rev() {
                    let mut ext = cur.clone();
                    ext.push(next);
                    stack.push((ext, next));
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A skew shape λ/μ. The checked constructor enforces μ ⊆ λ; the unchecked
/// one exists so the vanishing of the determinant on non-nested pairs can be
/// exercised.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    /// Builds λ/μ; panics unless μ ⊆ λ.
    pub fn new(outer: Partition, inner: Partition) -> Self {
        assert!(
            inner.contained_in(&outer),
            "inner shape {:?} not contained in outer {:?}",
            inner,
            outer
        );
        SkewShape { outer, inner }
    }

    /// Builds λ/μ without the containment check.
    pub fn new_unchecked(outer: Partition, inner: Partition) -> Self {
        SkewShape { outer, inner }
    }

    pub fn is_contained(&self) -> bool {
        self.inner.contained_in(&self.outer)
    }

    /// Cells of the skew diagram, 1-based (row, column), row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.outer.len() {
            for j in (self.inner.part(i) + 1)..=self.outer.part(i) {
                out.push((i, j));
            }
        }
        out
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.cells().len()
    }

    /// The sub-diagram obtained by an index restriction (Fig. 2 style).
    pub fn restrict(&self, mode: Restrict, k: usize) -> Vec<(usize, usize)> {
        self.cells()
            .into_iter()
            .filter(|&(i, j)| match mode {
                Restrict::RowLe => i <= k,
                Restrict::RowGe => i >= k,
                Restrict::ColLe => j <= k,
                Restrict::ColGe => j >= k,
            })
            .collect()
    }
}

/// Index-restriction modes for [`SkewShape::restrict`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Restrict {
    RowLe,
    RowGe,
    ColLe,
    ColGe,
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{:?}", self.outer)
        } else {
            write!(f, "{:?}/{:?}", self.outer, self.inner)
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Parse error for the `"6,5,4,4,2/4,3,1"` shape grammar.
#[derive(Debug, thiserror::Error)]
#[error("invalid shape syntax: {0}")]
pub struct ShapeParseError(String);

impl FromStr for SkewShape {
    type Err = ShapeParseError;

    /// Parses `"outer"` or `"outer/inner"` with comma-separated parts.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        fn parse_parts(s: &str) -> Result<Vec<usize>, ShapeParseError> {
            let s = s.trim();
            if s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| ShapeParseError(format!("bad part {:?}", p)))
                })
                .collect()
        }
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (parse_parts(o)?, parse_parts(i)?),
            None => (parse_parts(s)?, Vec::new()),
        };
        let check = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]);
        if !check(&outer) || !check(&inner) {
            return Err(ShapeParseError(format!(
                "parts must be weakly decreasing in {:?}",
                s
            )));
        }
        // Containment is deliberately not enforced here: the determinant is
        // defined (and vanishes) on non-nested pairs.
        Ok(SkewShape::new_unchecked(
            Partition::new(outer),
            Partition::new(inner),
        ))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(serde::de::Error::custom(
                "partition parts must be weakly decreasing",
            ));
        }
        Ok(Partition::new(parts))
    }
}

/// Column-block bookkeeping for a skew shape with λ_1 = n columns:
/// the distinct inner parts d_1 > … > d_r (with d_0 = n, d_{r+1} = 0),
/// their multiplicities m_1..m_{r+1}, prefix sums M_0..M_{r+1}, and the
/// column intervals D_i = {d_i+1, …, d_{i−1}} that partition {1..n}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MuProfile {
    pub n: usize,
    pub r: usize,
    /// d_0..d_{r+1}: d[0] = n, d[r+1] = 0.
    pub d: Vec<usize>,
    /// m_1..m_{r+1} stored at m[1..=r+1]; m[0] is unused (0).
    pub m: Vec<usize>,
    /// M_0..M_{r+1}: prefix sums of m, M[0] = 0.
    pub big_m: Vec<usize>,
}

impl MuProfile {
    /// Builds the profile for λ/μ. Requires μ ⊆ λ and n = λ_1 ≥ 1
    /// (or both empty).
    pub fn new(outer: &Partition, inner: &Partition) -> Self {
        assert!(inner.contained_in(outer), "mu_profile requires μ ⊆ λ");
        let n = outer.part(1);
        // Run-length encode the (weakly decreasing) inner parts.
        let mut d = vec![n];
        let mut m = vec![0usize];
        for &p in inner.parts() {
            if d.len() > 1 && *d.last().unwrap() == p {
                *m.last_mut().unwrap() += 1;
            } else {
                d.push(p);
                m.push(1);
            }
        }
        let r = d.len() - 1;
        // Multiplicity of the "part 0": remaining rows of λ.
        d.push(0);
        m.push(outer.len() - inner.len());
        let mut big_m = vec![0usize];
        for i in 1..=r + 1 {
            big_m.push(big_m[i - 1] + m[i]);
        }
        debug_assert_eq!(big_m[r + 1], outer.len());
        MuProfile { n, r, d, m, big_m }
    }

    /// The column interval D_i = {d_i+1, …, d_{i−1}}, 1 ≤ i ≤ r+1.
    pub fn block(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        assert!((1..=self.r + 1).contains(&i));
        (self.d[i] + 1)..=self.d[i - 1]
    }

    /// Index of the block containing column j (1-based).
    pub fn block_of(&self, j: usize) -> usize {
        assert!(
            (1..=self.n).contains(&j),
            "column {} outside 1..={}",
            j,
            self.n
        );
        (1..=self.r + 1)
            .find(|&i| self.block(i).contains(&j))
            .expect("blocks partition 1..=n")
    }
}
