//! Lattice paths on the board ℕ×ℕ_ω, n-paths with type and sign, and the
//! Tab encoding of n-paths as vertical tableaux.
//!
//! A path runs from `(start, 0)` to `(end, 2ω)` using up steps and diagonal
//! steps. Diagonal steps end at strictly increasing heights, so a path is
//! faithfully encoded by its start abscissa plus two strictly increasing
//! height sets: `lower` (steps ending below ω, carrying x-weights) and
//! `upper` (steps ending at ω+h, carrying t-weights).

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::partition::{Partition, SkewShape};
use crate::poly::{Monomial, Var};
use crate::tableau::{Column, Entry, Tableau};

/// A height on the board: either a finite height or ω plus a finite offset.
/// The derived order (`Finite < Omega`, by value within each variant) matches
/// the board order 0<1<⋯<ω<ω+1<⋯.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Height {
    Finite(u32),
    Omega(u32),
}

/// A single path.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Path {
    /// Abscissa at height 0.
    pub start: usize,
    /// Heights of diagonal steps ending below ω, strictly increasing.
    pub lower: Vec<u32>,
    /// Offsets h of diagonal steps ending at ω+h, strictly increasing.
    pub upper: Vec<u32>,
}

fn strictly_increasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl Path {
    pub fn new(start: usize, lower: Vec<u32>, upper: Vec<u32>) -> Self {
        assert!(strictly_increasing(&lower), "lower heights must increase");
        assert!(strictly_increasing(&upper), "upper heights must increase");
        assert!(lower.first().is_none_or(|&h| h >= 1));
        assert!(upper.first().is_none_or(|&h| h >= 1));
        Path {
            start,
            lower,
            upper,
        }
    }

    /// Abscissa at height 2ω.
    pub fn end(&self) -> usize {
        self.start + self.lower.len() + self.upper.len()
    }

    /// ∏ x_h over lower heights times ∏ t_h over upper heights.
    pub fn weight(&self) -> Monomial {
        let mut m = Monomial::one();
        for &h in &self.lower {
            m.mul_var(Var::X(h), 1);
        }
        for &h in &self.upper {
            m.mul_var(Var::T(h), 1);
        }
        m
    }

    /// Abscissa after all steps up to and including height `h`.
    pub fn abscissa(&self, h: Height) -> usize {
        match h {
            Height::Finite(f) => self.start + self.lower.iter().filter(|&&x| x <= f).count(),
            Height::Omega(u) => {
                self.start + self.lower.len() + self.upper.iter().filter(|&&x| x <= u).count()
            }
        }
    }

    /// All probe heights at which `self` and `other` occupy the same lattice
    /// point, in increasing height order. The probe set — heights 0..=L and
    /// ω+0..=ω+U where L, U bound both paths' diagonal heights — is
    /// exhaustive because abscissae are constant between diagonal heights.
    pub fn common_points(&self, other: &Path) -> Vec<(usize, Height)> {
        let max_l = self
            .lower
            .iter()
            .chain(other.lower.iter())
            .copied()
            .max()
            .unwrap_or(0);
        let max_u = self
            .upper
            .iter()
            .chain(other.upper.iter())
            .copied()
            .max()
            .unwrap_or(0);
        let mut out = Vec::new();
        for h in (0..=max_l)
            .map(Height::Finite)
            .chain((0..=max_u).map(Height::Omega))
        {
            let a = self.abscissa(h);
            if a == other.abscissa(h) {
                out.push((a, h));
            }
        }
        out
    }

    pub fn intersects(&self, other: &Path) -> bool {
        !self.common_points(other).is_empty()
    }
}

/// Exchanges the parts of `p` and `q` strictly above height `h`; both paths
/// must pass through the same point at height `h`.
pub fn swap_tails(p: &Path, q: &Path, h: Height) -> (Path, Path) {
    debug_assert_eq!(
        p.abscissa(h),
        q.abscissa(h),
        "tails may only be swapped at a common point"
    );
    let split = |a: &Path, b: &Path| -> Path {
        match h {
            Height::Finite(f) => {
                let mut lower: Vec<u32> = a.lower.iter().copied().filter(|&x| x <= f).collect();
                lower.extend(b.lower.iter().copied().filter(|&x| x > f));
                Path::new(a.start, lower, b.upper.clone())
            }
            Height::Omega(u) => {
                let mut upper: Vec<u32> = a.upper.iter().copied().filter(|&x| x <= u).collect();
                upper.extend(b.upper.iter().copied().filter(|&x| x > u));
                Path::new(a.start, a.lower.clone(), upper)
            }
        }
    };
    (split(p, q), split(q, p))
}

/// An n-tuple of paths, with `paths[i-1]` the path starting at the i-th
/// starting point.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NPath {
    pub paths: Vec<Path>,
}

impl NPath {
    pub fn n(&self) -> usize {
        self.paths.len()
    }

    /// The unsigned monomial weight wt(p_1)⋯wt(p_n).
    pub fn monomial(&self) -> Monomial {
        let mut m = Monomial::one();
        for p in &self.paths {
            m = m.times(&p.weight());
        }
        m
    }
}

/// Sign of a permutation given in one-line form (1-based images).
pub fn permutation_sign(pi: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..pi.len() {
        for j in i + 1..pi.len() {
            if pi[i] > pi[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The paths from the i-th start to the j-th end for the given skew shape:
/// start `(μ'_i+n-i, 0)`, end `(λ'_j+n-j, 2ω)`, lower heights in `1..=p`,
/// upper heights in `μ'_i+1 ..= λ'_j-1`. Empty when the required number of
/// diagonal steps is negative or exceeds the available heights.
pub fn enumerate_l(i: usize, j: usize, shape: &SkewShape, n: usize, p: u32) -> Vec<Path> {
    let lam_c = shape.outer.conjugate();
    let mu_c = shape.inner.conjugate();
    assert!(i >= 1 && i <= n && j >= 1 && j <= n);
    let start = mu_c.part(i) + n - i;
    let steps = lam_c.part(j) as i64 - mu_c.part(i) as i64 - j as i64 + i as i64;
    if steps < 0 {
        return Vec::new();
    }
    let steps = steps as usize;
    let lowers: Vec<u32> = (1..=p).collect();
    let upper_lo = mu_c.part(i) as u32 + 1;
    let upper_hi = lam_c.part(j) as u32; // window is upper_lo ..= upper_hi-1
    let uppers: Vec<u32> = if upper_hi >= 1 {
        (upper_lo..upper_hi).collect()
    } else {
        Vec::new()
    };
    let mut out = Vec::new();
    for m in 0..=steps.min(lowers.len()) {
        if steps - m > uppers.len() {
            continue;
        }
        for low in lowers.iter().copied().combinations(m) {
            for up in uppers.iter().copied().combinations(steps - m) {
                out.push(Path::new(start, low.clone(), up));
            }
        }
    }
    out
}

/// The type of an n-path relative to a skew shape: the permutation π with
/// `p_i` running from the i-th start to the π(i)-th end, together with its
/// sign. Fails if the n-path does not belong to the path family of the shape.
pub fn np_type(np: &NPath, shape: &SkewShape, n: usize) -> Result<(Vec<usize>, i32), String> {
    if np.n() != n {
        return Err(format!("expected {n} paths, found {}", np.n()));
    }
    let lam_c = shape.outer.conjugate();
    let mu_c = shape.inner.conjugate();
    let mut pi = Vec::with_capacity(n);
    for (idx, p) in np.paths.iter().enumerate() {
        let i = idx + 1;
        let want_start = mu_c.part(i) + n - i;
        if p.start != want_start {
            return Err(format!(
                "path {i} starts at {}, expected {want_start}",
                p.start
            ));
        }
        let end = p.end();
        let img = (1..=n).find(|&j| lam_c.part(j) + n - j == end);
        let Some(j) = img else {
            return Err(format!("path {i} ends at {end}, matching no ending point"));
        };
        // Membership also requires the upper-height window.
        let lo = mu_c.part(i) as u32 + 1;
        let hi = lam_c.part(j) as u32; // exclusive
        if p.upper.iter().any(|&h| h < lo || h >= hi) {
            return Err(format!(
                "path {i} has an upper diagonal step outside {lo}..{}",
                hi.saturating_sub(1)
            ));
        }
        pi.push(j);
    }
    let mut seen = pi.clone();
    seen.sort_unstable();
    if seen != (1..=n).collect::<Vec<_>>() {
        return Err("ending points are not pairwise distinct".into());
    }
    let sign = permutation_sign(&pi);
    Ok((pi, sign))
}

/// Crossing classification of an n-path.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Crossing {
    /// Two paths with equal inner column height share a point.
    Crossing,
    /// No same-block crossings, but some pair of paths meets.
    SemiNoncrossing,
    /// No two paths share any point.
    Noncrossing,
}

/// Classifies an n-path: paths i and j are in the same block exactly when
/// μ'_i = μ'_j, and the semi-noncrossing condition forbids common points
/// within a block.
pub fn classify(np: &NPath, shape: &SkewShape) -> Crossing {
    let mu_c = shape.inner.conjugate();
    let mut any = false;
    for i in 1..=np.n() {
        for j in i + 1..=np.n() {
            if np.paths[i - 1].intersects(&np.paths[j - 1]) {
                if mu_c.part(i) == mu_c.part(j) {
                    return Crossing::Crossing;
                }
                any = true;
            }
        }
    }
    if any {
        Crossing::SemiNoncrossing
    } else {
        Crossing::Noncrossing
    }
}

/// All n-paths of the shape's path family, paired with type and sign.
/// Iterates over every permutation and every choice of member paths.
pub fn enumerate_npaths(shape: &SkewShape, p: u32) -> Vec<(NPath, Vec<usize>, i32)> {
    let n = shape.outer.part(1);
    let mut out = Vec::new();
    if n == 0 {
        out.push((NPath { paths: Vec::new() }, Vec::new(), 1));
        return out;
    }
    for pi in (1..=n).permutations(n) {
        let sign = permutation_sign(&pi);
        let choices: Vec<Vec<Path>> = (1..=n)
            .map(|i| enumerate_l(i, pi[i - 1], shape, n, p))
            .collect();
        if choices.iter().any(Vec::is_empty) {
            continue;
        }
        for paths in choices.into_iter().multi_cartesian_product() {
            out.push((NPath { paths }, pi.clone(), sign));
        }
    }
    out
}

/// Column heights of the permuted diagram: column j has height
/// λ'_{π_j} − π_j + j.
pub fn pi_lambda_heights(lam: &Partition, pi: &[usize]) -> Vec<i64> {
    let lam_c = lam.conjugate();
    pi.iter()
        .enumerate()
        .map(|(idx, &image)| lam_c.part(image) as i64 - image as i64 + idx as i64 + 1)
        .collect()
}

/// The Tab encoding: column i holds the diagonal-step heights of `p_i`,
/// lower heights as plain entries and upper heights as starred entries, in
/// rows `inner[i-1]+1 ..`. Requires `p_i` to start at `(inner[i-1]+n-i, 0)`.
pub fn tab(np: &NPath, inner: &[usize]) -> Result<Tableau, String> {
    let n = np.n();
    assert_eq!(inner.len(), n, "one inner height per column");
    let mut cols = Vec::with_capacity(n);
    for (idx, p) in np.paths.iter().enumerate() {
        let i = idx + 1;
        let want = inner[idx] + n - i;
        if p.start != want {
            return Err(format!("path {i} starts at {}, expected {want}", p.start));
        }
        let mut entries: Vec<Entry> = p.lower.iter().map(|&h| Entry::Plain(h)).collect();
        entries.extend(p.upper.iter().map(|&h| Entry::Star(h)));
        cols.push(Column::new(inner[idx] + 1, entries));
    }
    Ok(Tableau::from_columns(cols))
}

/// Tab with the inner cells filled by negative entries, producing a full
/// tableau whose column i is `-1..-inner[i-1]` followed by the path entries.
pub fn tab_with_negs(np: &NPath, inner: &[usize]) -> Result<Tableau, String> {
    let bare = tab(np, inner)?;
    let cols = bare
        .columns()
        .iter()
        .enumerate()
        .map(|(idx, col)| {
            let mut entries: Vec<Entry> = (1..=inner[idx] as u32).map(Entry::Neg).collect();
            entries.extend(col.entries.iter().copied());
            Column::full(entries)
        })
        .collect();
    Ok(Tableau::from_columns(cols))
}

/// Inverse of `tab`: reads each column back into a path. Negative entries
/// are treated as inner cells and must sit directly above the path entries;
/// each column must be plain entries then starred entries, each run strictly
/// increasing.
pub fn tab_inverse(t: &Tableau, inner: &[usize], n: usize) -> Result<NPath, String> {
    if t.num_cols() > n {
        return Err(format!(
            "tableau has {} columns, expected ≤ {n}",
            t.num_cols()
        ));
    }
    let mut paths = Vec::with_capacity(n);
    for i in 1..=n {
        let start = inner[i - 1] + n - i;
        let (negs, rest): (Vec<Entry>, Vec<Entry>) = if i <= t.num_cols() {
            t.col(i).entries.iter().copied().partition(|e| e.is_neg())
        } else {
            (Vec::new(), Vec::new())
        };
        if !rest.is_empty() && i <= t.num_cols() {
            let col = t.col(i);
            let first_row = col.start + negs.len();
            if first_row != inner[i - 1] + 1 {
                return Err(format!(
                    "column {i}: path entries begin at row {first_row}, expected {}",
                    inner[i - 1] + 1
                ));
            }
        }
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for e in rest {
            match e {
                Entry::Plain(h) => {
                    if !upper.is_empty() {
                        return Err(format!("column {i}: plain entry below a starred entry"));
                    }
                    lower.push(h);
                }
                Entry::Star(h) => upper.push(h),
                Entry::Neg(_) => unreachable!(),
            }
        }
        if !strictly_increasing(&lower) || !strictly_increasing(&upper) {
            return Err(format!("column {i}: entries not strictly increasing"));
        }
        paths.push(Path::new(start, lower, upper));
    }
    Ok(NPath { paths })
}

/// JSON form of an n-path with its shape context.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct NPathJson {
    pub shape: SkewShape,
    pub paths: Vec<Path>,
    #[serde(rename = "type")]
    pub type_: Vec<usize>,
    pub sign: i32,
}

impl NPathJson {
    /// Serializes `np`, recomputing type and sign from the shape.
    pub fn encode(np: &NPath, shape: &SkewShape) -> Result<NPathJson, String> {
        let n = shape.outer.part(1);
        let (type_, sign) = np_type(np, shape, n)?;
        Ok(NPathJson {
            shape: shape.clone(),
            paths: np.paths.clone(),
            type_,
            sign,
        })
    }

    /// Rebuilds the n-path and cross-checks the recorded type and sign.
    pub fn decode(&self) -> Result<(SkewShape, NPath), String> {
        let np = NPath {
            paths: self.paths.clone(),
        };
        let n = self.shape.outer.part(1);
        let (type_, sign) = np_type(&np, &self.shape, n)?;
        if type_ != self.type_ {
            return Err(format!(
                "recorded type {:?} disagrees with endpoints ({:?})",
                self.type_, type_
            ));
        }
        if sign != self.sign {
            return Err(format!("recorded sign {} disagrees ({sign})", self.sign));
        }
        Ok((self.shape.clone(), np))
    }
}
