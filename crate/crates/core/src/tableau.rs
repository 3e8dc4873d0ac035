//! Tableaux over extended integers: RPPs, SSYTs, and (skew) RSE-tableaux.
//!
//! Extended integers are totally ordered as
//! `-1 < -2 < … < 1 < 2 < … < 1* < 2* < …`.
//! Negative entries mark inner-shape cells (the cell in row `i` of the inner
//! shape holds `-i`), plain entries are ordinary values, and starred entries
//! form the elegant part of an RSE-tableau. Skew objects are always stored in
//! this "barred" form with the inner cells filled explicitly, so that
//! concatenation, the `≤` relation, and the level maps all operate on a single
//! uniform representation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::partition::SkewShape;
use crate::poly::{Monomial, Var};

/// An extended integer. The derived order is the intended total order:
/// all negative entries below all plain entries below all starred entries,
/// each kind ordered by its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entry {
    /// `-i`: a cell of the inner shape; row `i` of the inner shape holds `-i`.
    Neg(u32),
    /// An ordinary positive entry.
    Plain(u32),
    /// `i*`: an ω-entry, larger than every plain entry.
    Star(u32),
}

impl Entry {
    pub fn value(&self) -> u32 {
        match *self {
            Entry::Neg(v) | Entry::Plain(v) | Entry::Star(v) => v,
        }
    }

    pub fn is_neg(&self) -> bool {
        matches!(self, Entry::Neg(_))
    }

    pub fn is_plain(&self) -> bool {
        matches!(self, Entry::Plain(_))
    }

    pub fn is_star(&self) -> bool {
        matches!(self, Entry::Star(_))
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Entry::Neg(v) => write!(f, "-{v}"),
            Entry::Plain(v) => write!(f, "{v}"),
            Entry::Star(v) => write!(f, "{v}*"),
        }
    }
}

impl fmt::Debug for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"3"`, `"3*"`, or `"-3"`.
impl FromStr for Entry {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("invalid tableau entry {s:?}");
        if let Some(rest) = s.strip_prefix('-') {
            let v: u32 = rest.parse().map_err(|_| bad())?;
            if v == 0 {
                return Err(bad());
            }
            Ok(Entry::Neg(v))
        } else if let Some(rest) = s.strip_suffix('*') {
            let v: u32 = rest.parse().map_err(|_| bad())?;
            if v == 0 {
                return Err(bad());
            }
            Ok(Entry::Star(v))
        } else {
            let v: u32 = s.parse().map_err(|_| bad())?;
            if v == 0 {
                return Err(bad());
            }
            Ok(Entry::Plain(v))
        }
    }
}

/// One column of a tableau: a contiguous run of entries starting at `start`
/// (1-based row index). Ordinary tableaux have `start == 1`; regions cut out
/// of a larger tableau keep their absolute row positions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Column {
    pub start: usize,
    pub entries: Vec<Entry>,
}

impl Column {
    pub fn new(start: usize, entries: Vec<Entry>) -> Self {
        assert!(start >= 1, "rows are 1-based");
        Column { start, entries }
    }

    pub fn full(entries: Vec<Entry>) -> Self {
        Column { start: 1, entries }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Row index of the last cell, or `start - 1` when empty.
    pub fn end(&self) -> usize {
        self.start + self.entries.len() - 1
    }

    /// Entry at 1-based row `r`, if present.
    pub fn get(&self, r: usize) -> Option<Entry> {
        if r >= self.start && r <= self.end() && !self.is_empty() {
            Some(self.entries[r - self.start])
        } else {
            None
        }
    }
}

/// A tableau stored column by column. Columns are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Tableau {
    cols: Vec<Column>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau { cols: Vec::new() }
    }

    pub fn from_columns(cols: Vec<Column>) -> Self {
        Tableau { cols }
    }

    /// Builds a tableau whose columns all start at row 1.
    pub fn from_full_columns(cols: Vec<Vec<Entry>>) -> Self {
        Tableau {
            cols: cols.into_iter().map(Column::full).collect(),
        }
    }

    /// Builds a tableau from its rows (top to bottom, each starting at
    /// column 1). Row lengths may be ragged.
    pub fn from_rows(rows: &[Vec<Entry>]) -> Self {
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut cols = vec![Vec::new(); width];
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                assert_eq!(cols[j].len(), i, "rows must form contiguous columns");
                cols[j].push(e);
            }
        }
        Tableau::from_full_columns(cols)
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn num_cells(&self) -> usize {
        self.cols.iter().map(|c| c.entries.len()).sum()
    }

    pub fn columns(&self) -> &[Column] {
        &self.cols
    }

    pub fn col(&self, c: usize) -> &Column {
        &self.cols[c - 1]
    }

    pub fn col_mut(&mut self, c: usize) -> &mut Column {
        &mut self.cols[c - 1]
    }

    /// Entry at 1-based (row, column), if present.
    pub fn get(&self, r: usize, c: usize) -> Option<Entry> {
        self.cols.get(c - 1).and_then(|col| col.get(r))
    }

    /// Number of cells in each column (ignoring starts).
    pub fn heights(&self) -> Vec<usize> {
        self.cols.iter().map(|c| c.entries.len()).collect()
    }

    /// Largest row index used by any column.
    pub fn max_row(&self) -> usize {
        self.cols
            .iter()
            .filter(|c| !c.is_empty())
            .map(Column::end)
            .max()
            .unwrap_or(0)
    }

    /// `self` placed to the left of `right` (the ⊔ operation).
    pub fn concat(&self, right: &Tableau) -> Tableau {
        let mut cols = self.cols.clone();
        cols.extend(right.cols.iter().cloned());
        Tableau { cols }
    }

    /// The sub-tableau of columns `lo..=hi` (1-based), re-indexed from 1.
    pub fn cols_range(&self, lo: usize, hi: usize) -> Tableau {
        let lo = lo.max(1);
        if lo > hi || lo > self.cols.len() {
            return Tableau::empty();
        }
        let hi = hi.min(self.cols.len());
        Tableau {
            cols: self.cols[lo - 1..hi].to_vec(),
        }
    }

    /// Keeps only cells in rows ≥ `k`, preserving absolute row positions.
    pub fn rows_ge(&self, k: usize) -> Tableau {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                if col.start >= k {
                    col.clone()
                } else if col.end() < k || col.is_empty() {
                    Column::new(k, Vec::new())
                } else {
                    Column::new(k, col.entries[k - col.start..].to_vec())
                }
            })
            .collect();
        Tableau { cols }
    }

    /// Keeps only cells in rows ≤ `k`, preserving absolute row positions.
    pub fn rows_le(&self, k: usize) -> Tableau {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                if col.is_empty() || col.end() <= k {
                    col.clone()
                } else if col.start > k {
                    Column::new(col.start, Vec::new())
                } else {
                    Column::new(col.start, col.entries[..k + 1 - col.start].to_vec())
                }
            })
            .collect();
        Tableau { cols }
    }

    /// True if the tableau is a reverse plane partition over extended
    /// integers: every column starts at row 1, column heights weakly decrease
    /// left to right, and entries weakly increase along rows and columns.
    pub fn is_extended_rpp(&self) -> bool {
        for col in &self.cols {
            if !col.is_empty() && col.start != 1 {
                return false;
            }
        }
        let heights = self.heights();
        if heights.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        for col in &self.cols {
            if col.entries.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
        }
        for j in 1..self.cols.len() {
            let (left, right) = (&self.cols[j - 1], &self.cols[j]);
            for (i, &e) in right.entries.iter().enumerate() {
                if left.entries[i] > e {
                    return false;
                }
            }
        }
        true
    }

    /// The ≤ relation: `t1 ≤ t2` iff placing `t1` to the left of `t2` yields
    /// a reverse plane partition over extended integers.
    pub fn le(t1: &Tableau, t2: &Tableau) -> bool {
        t1.concat(t2).is_extended_rpp()
    }

    /// The monomial weight: `x_h` once per column containing the plain entry
    /// `h`, `t_i` per vertically adjacent equal pair of plain entries whose
    /// upper cell is in row `i`, and `t_a` per starred entry `a*`. Negative
    /// entries contribute nothing.
    pub fn weight(&self) -> Monomial {
        let mut m = Monomial::one();
        for col in &self.cols {
            let mut seen = BTreeSet::new();
            for (i, &e) in col.entries.iter().enumerate() {
                let row = col.start + i;
                match e {
                    Entry::Neg(_) => {}
                    Entry::Plain(h) => {
                        if seen.insert(h) {
                            m.mul_var(Var::X(h), 1);
                        }
                        if col.entries.get(i + 1) == Some(&Entry::Plain(h)) {
                            m.mul_var(Var::T(row as u32), 1);
                        }
                    }
                    Entry::Star(a) => m.mul_var(Var::T(a), 1),
                }
            }
        }
        m
    }

    /// A fixed-width grid rendering with rows top to bottom.
    pub fn pretty(&self) -> String {
        let max_row = self.max_row();
        let width = self
            .cols
            .iter()
            .flat_map(|c| c.entries.iter())
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for r in 1..=max_row {
            let mut line = String::new();
            for c in 1..=self.num_cols() {
                let cell = match self.get(r, c) {
                    Some(e) => format!("{:>width$}", e.to_string()),
                    None => " ".repeat(width),
                };
                if c > 1 {
                    line.push(' ');
                }
                line.push_str(&cell);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[\n{}]", self.pretty())
    }
}

/// A tableau together with the marked level of its plain region.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RseTableau {
    pub tableau: Tableau,
    pub level: usize,
}

impl RseTableau {
    pub fn new(tableau: Tableau, level: usize) -> Self {
        assert!(level >= 1, "levels are 1-based");
        RseTableau { tableau, level }
    }

    pub fn weight(&self) -> Monomial {
        self.tableau.weight()
    }
}

/// A single failed validation clause, with the offending cell when there is
/// one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RseViolation {
    pub clause: &'static str,
    pub cell: Option<(usize, usize)>,
    pub detail: String,
}

fn violation(
    out: &mut Vec<RseViolation>,
    clause: &'static str,
    cell: Option<(usize, usize)>,
    detail: String,
) {
    out.push(RseViolation {
        clause,
        cell,
        detail,
    });
}

/// Checks whether `t` is a valid RSE-tableau of the given skew shape and
/// level, returning an empty list when it is and one entry per failed clause
/// otherwise.
///
/// The clauses: cells cover the outer shape; each column is a run of negative
/// entries, then plain entries, then starred entries; negative cells are
/// exactly the inner shape with `-i` in row `i`; rows weakly increase; the
/// plain region has full rows down to the level and weakly decreasing column
/// heights; plain columns weakly increase, strictly from the level row down;
/// starred entries `a*` at `(i,j)` satisfy `level ≤ a`, `μ'_j < a ≤ i-1`, and
/// `a ≤ λ'_j - 1`; starred entries strictly increase down each column.
pub fn validate_rse(t: &Tableau, level: usize, shape: &SkewShape) -> Vec<RseViolation> {
    let mut out = Vec::new();
    let lam_c = shape.outer.conjugate();
    let mu_c = shape.inner.conjugate();
    let n = shape.outer.part(1);

    if t.num_cols() != n {
        violation(
            &mut out,
            "shape",
            None,
            format!("expected {n} columns, found {}", t.num_cols()),
        );
        return out;
    }
    for j in 1..=n {
        let col = t.col(j);
        if !col.is_empty() && col.start != 1 {
            violation(
                &mut out,
                "shape",
                Some((col.start, j)),
                format!("column {j} starts at row {} instead of row 1", col.start),
            );
            return out;
        }
        if col.entries.len() != lam_c.part(j) {
            violation(
                &mut out,
                "shape",
                Some((1, j)),
                format!(
                    "column {j} has {} cells, outer shape wants {}",
                    col.entries.len(),
                    lam_c.part(j)
                ),
            );
        }
    }
    if !out.is_empty() {
        return out;
    }

    // Per-column decomposition into negative / plain / starred runs.
    for j in 1..=n {
        let col = t.col(j);
        let mut stage = 0u8; // 0 = negatives, 1 = plains, 2 = stars
        for (i, e) in col.entries.iter().enumerate() {
            let kind = match e {
                Entry::Neg(_) => 0,
                Entry::Plain(_) => 1,
                Entry::Star(_) => 2,
            };
            if kind < stage {
                violation(
                    &mut out,
                    "column-order",
                    Some((i + 1, j)),
                    format!("entry {e} appears below a larger-kind entry in column {j}"),
                );
            }
            stage = stage.max(kind);
        }
    }

    // Negative cells are exactly the inner shape, holding their row index.
    for j in 1..=n {
        let col = t.col(j);
        for (i, e) in col.entries.iter().enumerate() {
            let r = i + 1;
            let inside_mu = r <= mu_c.part(j);
            match e {
                Entry::Neg(v) if !inside_mu => violation(
                    &mut out,
                    "negative-cells",
                    Some((r, j)),
                    format!("negative entry -{v} outside the inner shape"),
                ),
                Entry::Neg(v) if *v as usize != r => violation(
                    &mut out,
                    "negative-cells",
                    Some((r, j)),
                    format!("inner-shape cell holds -{v}, expected -{r}"),
                ),
                Entry::Neg(_) => {}
                _ if inside_mu => violation(
                    &mut out,
                    "negative-cells",
                    Some((r, j)),
                    format!("inner-shape cell holds {e}, expected -{r}"),
                ),
                _ => {}
            }
        }
    }

    // Rows weakly increase (this covers the plain rows, the starred rows, and
    // every seam between regions).
    for j in 2..=n {
        let (left, right) = (t.col(j - 1), t.col(j));
        for (i, &e) in right.entries.iter().enumerate() {
            if let Some(&l) = left.entries.get(i) {
                if l > e {
                    violation(
                        &mut out,
                        "row-monotone",
                        Some((i + 1, j)),
                        format!("row {}: {l} > {e}", i + 1),
                    );
                }
            }
        }
    }

    // The non-starred region: full rows down to the level, partition shape.
    let nonstar: Vec<usize> = (1..=n)
        .map(|j| t.col(j).entries.iter().filter(|e| !e.is_star()).count())
        .collect();
    for j in 1..n {
        if nonstar[j - 1] < nonstar[j] {
            violation(
                &mut out,
                "plain-shape",
                Some((nonstar[j], j + 1)),
                format!(
                    "non-starred column heights increase: {} then {}",
                    nonstar[j - 1],
                    nonstar[j]
                ),
            );
        }
    }
    for j in 1..=n {
        let need = level.min(lam_c.part(j));
        if nonstar[j - 1] < need {
            violation(
                &mut out,
                "plain-shape",
                Some((nonstar[j - 1] + 1, j)),
                format!(
                    "column {j} has {} non-starred cells but rows 1..={need} must be star-free",
                    nonstar[j - 1]
                ),
            );
        }
    }

    // Plain columns: weakly increasing, strictly from the level row down.
    for j in 1..=n {
        let col = t.col(j);
        for i in 1..col.entries.len() {
            let (a, b) = (col.entries[i - 1], col.entries[i]);
            if a.is_star() || b.is_star() {
                continue;
            }
            let strict = i >= level; // upper cell is in row i, rows ≥ level are strict
            if a > b || (strict && a == b) {
                violation(
                    &mut out,
                    "plain-columns",
                    Some((i, j)),
                    format!(
                        "column {j} rows {}/{}: {a} then {b} ({})",
                        i,
                        i + 1,
                        if strict {
                            "needs strict increase"
                        } else {
                            "needs weak increase"
                        }
                    ),
                );
            }
        }
    }

    // Starred entries: value window and strict column increase.
    for j in 1..=n {
        let col = t.col(j);
        let mut prev_star: Option<u32> = None;
        for (i, e) in col.entries.iter().enumerate() {
            let r = i + 1;
            if let Entry::Star(a) = *e {
                let lo = (level as u32).max(mu_c.part(j) as u32 + 1);
                let hi = (r as u32).saturating_sub(1).min(lam_c.part(j) as u32 - 1);
                if a < lo || a > hi {
                    violation(
                        &mut out,
                        "star-values",
                        Some((r, j)),
                        format!("{a}* at ({r},{j}) outside the allowed window {lo}..={hi}"),
                    );
                }
                if let Some(p) = prev_star {
                    if a <= p {
                        violation(
                            &mut out,
                            "star-columns",
                            Some((r, j)),
                            format!("starred entries {p}*,{a}* not strictly increasing"),
                        );
                    }
                }
                prev_star = Some(a);
            }
        }
    }

    out
}

/// All reverse plane partitions of the given skew shape with plain entries in
/// `1..=max_entry`, in lexicographic order of their column-major readings.
/// Inner-shape cells are filled with negative entries.
pub fn enumerate_rpp(shape: &SkewShape, max_entry: u32) -> Vec<Tableau> {
    let lam_c = shape.outer.conjugate();
    let mu_c = shape.inner.conjugate();
    let n = shape.outer.part(1);

    let mut cols: Vec<Vec<Entry>> = (1..=n)
        .map(|j| (1..=mu_c.part(j)).map(|i| Entry::Neg(i as u32)).collect())
        .collect();
    // Plain cells in column-major order, leftmost column first.
    let cells: Vec<(usize, usize)> = (1..=n)
        .flat_map(|j| (mu_c.part(j) + 1..=lam_c.part(j)).map(move |i| (i, j)))
        .collect();

    let mut out = Vec::new();
    fill_rpp(&cells, 0, max_entry, &mut cols, &mut out);
    out
}

fn fill_rpp(
    cells: &[(usize, usize)],
    idx: usize,
    max_entry: u32,
    cols: &mut Vec<Vec<Entry>>,
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        out.push(Tableau::from_full_columns(cols.clone()));
        return;
    }
    let (i, j) = cells[idx];
    let mut lo = 1u32;
    // Upper neighbor lives in this column and is already placed.
    if i >= 2 {
        if let Entry::Plain(v) = cols[j - 1][i - 2] {
            lo = lo.max(v);
        }
    }
    // Left neighbor's column is already complete.
    if j >= 2 {
        if let Some(&Entry::Plain(v)) = cols[j - 2].get(i - 1) {
            lo = lo.max(v);
        }
    }
    for v in lo..=max_entry {
        cols[j - 1].push(Entry::Plain(v));
        fill_rpp(cells, idx + 1, max_entry, cols, out);
        cols[j - 1].pop();
    }
}

/// All RSE-tableaux of the given skew shape and level with plain entries in
/// `1..=max_entry`. Starred values are bounded by the shape, so no separate
/// cap is needed.
pub fn enumerate_rse(shape: &SkewShape, level: usize, max_entry: u32) -> Vec<RseTableau> {
    assert!(level >= 1, "levels are 1-based");
    let lam_c = shape.outer.conjugate();
    let mu_c = shape.inner.conjugate();
    let n = shape.outer.part(1);

    // Choose the non-starred column heights: at least the inner height, full
    // down to the level row, weakly decreasing.
    let mut out = Vec::new();
    let mut heights = Vec::with_capacity(n);
    choose_heights(&lam_c, &mu_c, level, n, 1, &mut heights, &mut |h| {
        let mut plains: Vec<Vec<Vec<Entry>>> = Vec::new();
        let mut cols: Vec<Vec<Entry>> = (1..=n)
            .map(|j| (1..=mu_c.part(j)).map(|i| Entry::Neg(i as u32)).collect())
            .collect();
        let plain_cells: Vec<(usize, usize)> = (1..=n)
            .flat_map(|j| (mu_c.part(j) + 1..=h[j - 1]).map(move |i| (i, j)))
            .collect();
        fill_plains(&plain_cells, 0, max_entry, level, &mut cols, &mut plains);

        let mut stars: Vec<Vec<Vec<Entry>>> = Vec::new();
        let star_cells: Vec<(usize, usize)> = (1..=n)
            .flat_map(|j| (h[j - 1] + 1..=lam_c.part(j)).map(move |i| (i, j)))
            .collect();
        let mut star_cols: Vec<Vec<Entry>> = vec![Vec::new(); n];
        fill_stars(
            &star_cells,
            0,
            level,
            &lam_c,
            &mu_c,
            h,
            &mut star_cols,
            &mut stars,
        );

        for plain_fill in &plains {
            for star_fill in &stars {
                let cols: Vec<Vec<Entry>> = (0..n)
                    .map(|j| {
                        let mut c = plain_fill[j].clone();
                        c.extend(star_fill[j].iter().copied());
                        c
                    })
                    .collect();
                out.push(RseTableau::new(Tableau::from_full_columns(cols), level));
            }
        }
    });
    out
}

fn choose_heights(
    lam_c: &crate::partition::Partition,
    mu_c: &crate::partition::Partition,
    level: usize,
    n: usize,
    j: usize,
    acc: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if j > n {
        f(acc);
        return;
    }
    let lo = mu_c.part(j).max(level.min(lam_c.part(j)));
    let hi = if j == 1 {
        lam_c.part(1)
    } else {
        lam_c.part(j).min(acc[j - 2])
    };
    for h in lo..=hi {
        acc.push(h);
        choose_heights(lam_c, mu_c, level, n, j + 1, acc, f);
        acc.pop();
    }
}

fn fill_plains(
    cells: &[(usize, usize)],
    idx: usize,
    max_entry: u32,
    level: usize,
    cols: &mut Vec<Vec<Entry>>,
    out: &mut Vec<Vec<Vec<Entry>>>,
) {
    if idx == cells.len() {
        out.push(cols.clone());
        return;
    }
    let (i, j) = cells[idx];
    let mut lo = 1u32;
    if i >= 2 {
        if let Entry::Plain(v) = cols[j - 1][i - 2] {
            // Strict increase when the upper cell sits at or below the level.
            lo = lo.max(if i > level { v + 1 } else { v });
        }
    }
    if j >= 2 {
        if let Some(&Entry::Plain(v)) = cols[j - 2].get(i - 1) {
            lo = lo.max(v);
        }
    }
    for v in lo..=max_entry {
        cols[j - 1].push(Entry::Plain(v));
        fill_plains(cells, idx + 1, max_entry, level, cols, out);
        cols[j - 1].pop();
    }
}

#[allow(clippy::too_many_arguments)]
fn fill_stars(
    cells: &[(usize, usize)],
    idx: usize,
    level: usize,
    lam_c: &crate::partition::Partition,
    mu_c: &crate::partition::Partition,
    nonstar: &[usize],
    cols: &mut Vec<Vec<Entry>>,
    out: &mut Vec<Vec<Vec<Entry>>>,
) {
    if idx == cells.len() {
        out.push(cols.clone());
        return;
    }
    let (i, j) = cells[idx];
    let mut lo = (level as u32).max(mu_c.part(j) as u32 + 1);
    // Strict increase below the previous starred entry in this column.
    if i > nonstar[j - 1] + 1 {
        if let Entry::Star(v) = cols[j - 1][i - nonstar[j - 1] - 2] {
            lo = lo.max(v + 1);
        }
    }
    // Weak row increase past the starred cell to the left, if any.
    if j >= 2 && i > nonstar[j - 2] {
        if let Some(&Entry::Star(v)) = cols[j - 2].get(i - nonstar[j - 2] - 1) {
            lo = lo.max(v);
        }
    }
    let hi = (i as u32 - 1).min(lam_c.part(j) as u32 - 1);
    for v in lo..=hi {
        cols[j - 1].push(Entry::Star(v));
        fill_stars(cells, idx + 1, level, lam_c, mu_c, nonstar, cols, out);
        cols[j - 1].pop();
    }
}

/// JSON form of a tableau: the skew shape plus one record per cell.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TableauJson {
    pub shape: SkewShape,
    pub cells: Vec<TableauCellJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TableauCellJson {
    pub r: usize,
    pub c: usize,
    pub e: String,
}

impl TableauJson {
    /// Serializes every cell of `t`, row-major.
    pub fn encode(t: &Tableau, shape: &SkewShape) -> TableauJson {
        let mut cells = Vec::new();
        for r in 1..=t.max_row() {
            for c in 1..=t.num_cols() {
                if let Some(e) = t.get(r, c) {
                    cells.push(TableauCellJson {
                        r,
                        c,
                        e: e.to_string(),
                    });
                }
            }
        }
        TableauJson {
            shape: shape.clone(),
            cells,
        }
    }

    /// Rebuilds the tableau, checking that each column is contiguous.
    pub fn decode(&self) -> Result<(SkewShape, Tableau), String> {
        let width = self.cells.iter().map(|c| c.c).max().unwrap_or(0);
        let mut cells_by_col: Vec<Vec<(usize, Entry)>> = vec![Vec::new(); width];
        for cell in &self.cells {
            if cell.r == 0 || cell.c == 0 {
                return Err(format!("cell ({},{}) is not 1-based", cell.r, cell.c));
            }
            let e: Entry = cell.e.parse()?;
            cells_by_col[cell.c - 1].push((cell.r, e));
        }
        let mut cols = Vec::with_capacity(width);
        for (j, mut col) in cells_by_col.into_iter().enumerate() {
            col.sort_by_key(|&(r, _)| r);
            let start = col.first().map(|&(r, _)| r).unwrap_or(1);
            for (offset, &(r, _)) in col.iter().enumerate() {
                if r != start + offset {
                    return Err(format!("column {} is not contiguous at row {r}", j + 1));
                }
            }
            cols.push(Column::new(
                start,
                col.into_iter().map(|(_, e)| e).collect(),
            ));
        }
        Ok((self.shape.clone(), Tableau::from_columns(cols)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(p(outer), p(inner))
    }

    /// Rows given as strings like "-1 -2 3 4*", split on whitespace.
    fn t(rows: &[&str]) -> Tableau {
        let rows: Vec<Vec<Entry>> = rows
            .iter()
            .map(|row| row.split_whitespace().map(|s| s.parse().unwrap()).collect())
            .collect();
        Tableau::from_rows(&rows)
    }

    #[test]
    fn entry_order_and_parsing() {
        use Entry::*;
        let sorted = vec![Neg(1), Neg(2), Plain(1), Plain(2), Star(1), Star(3)];
        let mut shuffled = vec![Star(3), Plain(2), Neg(2), Star(1), Neg(1), Plain(1)];
        shuffled.sort();
        assert_eq!(shuffled, sorted);
        for e in sorted {
            let round: Entry = e.to_string().parse().unwrap();
            assert_eq!(round, e);
        }
        assert!("0".parse::<Entry>().is_err());
        assert!("x".parse::<Entry>().is_err());
        assert!("-0".parse::<Entry>().is_err());
    }

    /// Skew RPP of shape (6,5,4,4,2)/(4,3,1) with weight x1^4 x2^3 x3^2 t1 t3^2 t4.
    fn fig_rpp() -> Tableau {
        t(&[
            "-1 -1 -1 -1 3 3",
            "-2 -2 -2 1 3",
            "-3 1 1 2",
            "1 1 2 2",
            "1 2",
        ])
    }

    #[test]
    fn rpp_weight_skew() {
        let mut want = Monomial::one();
        want.mul_var(Var::X(1), 4);
        want.mul_var(Var::X(2), 3);
        want.mul_var(Var::X(3), 2);
        want.mul_var(Var::T(1), 1);
        want.mul_var(Var::T(3), 2);
        want.mul_var(Var::T(4), 1);
        assert_eq!(fig_rpp().weight(), want);
        assert!(fig_rpp().is_extended_rpp());
    }

    #[test]
    fn ssyt_weight_skew() {
        let ssyt = t(&[
            "-1 -1 -1 -1 2 2",
            "-2 -2 -2 2 4",
            "-3 1 1 4",
            "1 2 2 5",
            "2 4",
        ]);
        let mut want = Monomial::one();
        want.mul_var(Var::X(1), 3);
        want.mul_var(Var::X(2), 6);
        want.mul_var(Var::X(4), 3);
        want.mul_var(Var::X(5), 1);
        assert_eq!(ssyt.weight(), want);
        assert!(!ssyt.weight().has_t());
    }

    #[test]
    fn single_cell_weight() {
        let one = t(&["3"]);
        assert_eq!(one.weight(), Monomial::var(Var::X(3)));
    }

    /// Straight-shape RSE-tableau of level 3, λ=(5,5,5,4,4,2).
    fn rse_level3() -> Tableau {
        t(&[
            "1 1 1 2 3",
            "1 1 2 3 3",
            "1 2 2 3 4",
            "2 3 3* 3*",
            "3 4 4* 4*",
            "3* 5*",
        ])
    }

    #[test]
    fn rse_weight_straight() {
        let mut want = Monomial::one();
        want.mul_var(Var::X(1), 3);
        want.mul_var(Var::X(2), 4);
        want.mul_var(Var::X(3), 4);
        want.mul_var(Var::X(4), 2);
        want.mul_var(Var::T(1), 3);
        want.mul_var(Var::T(2), 3);
        want.mul_var(Var::T(3), 3);
        want.mul_var(Var::T(4), 2);
        want.mul_var(Var::T(5), 1);
        assert_eq!(rse_level3().weight(), want);
        let sh = shape(&[5, 5, 5, 4, 4, 2], &[]);
        assert_eq!(validate_rse(&rse_level3(), 3, &sh), vec![]);
    }

    /// Skew RSE-tableau of level 2, (6,5,4,4,2)/(4,3,1).
    fn rse_skew_level2() -> Tableau {
        t(&[
            "-1 -1 -1 -1 3 3",
            "-2 -2 -2 1 3",
            "-3 1 1 2",
            "1 2 3* 3*",
            "2 4*",
        ])
    }

    #[test]
    fn rse_weight_and_validate_skew() {
        let mut want = Monomial::one();
        want.mul_var(Var::X(1), 4);
        want.mul_var(Var::X(2), 3);
        want.mul_var(Var::X(3), 2);
        want.mul_var(Var::T(1), 1);
        want.mul_var(Var::T(3), 2);
        want.mul_var(Var::T(4), 1);
        assert_eq!(rse_skew_level2().weight(), want);
        let sh = shape(&[6, 5, 4, 4, 2], &[4, 3, 1]);
        assert_eq!(validate_rse(&rse_skew_level2(), 2, &sh), vec![]);
    }

    #[test]
    fn validate_rejects_negative_outside_inner() {
        // Level-increasing map output that leaves the valid family: a
        // negative entry ends up outside the inner shape (1).
        let bad = t(&["-1 1", "-1 2"]);
        let sh = shape(&[2, 2], &[1]);
        let violations = validate_rse(&bad, 2, &sh);
        assert!(violations
            .iter()
            .any(|v| v.clause == "negative-cells" && v.cell == Some((2, 1))));
    }

    #[test]
    fn validate_empty() {
        let sh = shape(&[], &[]);
        assert_eq!(validate_rse(&Tableau::empty(), 1, &sh), vec![]);
    }

    #[test]
    fn validate_flags_star_window_and_strictness() {
        // 1* in row 1 is impossible (needs value ≤ row-1 = 0).
        let bad = t(&["1 1*", "2"]);
        let sh = shape(&[2, 1], &[]);
        let violations = validate_rse(&bad, 1, &sh);
        assert!(violations.iter().any(|v| v.clause == "star-values"));

        // Equal plain entries below the level row break strictness.
        let bad = t(&["1", "1"]);
        let sh = shape(&[1, 1], &[]);
        let violations = validate_rse(&bad, 1, &sh);
        assert!(violations.iter().any(|v| v.clause == "plain-columns"));
        // ...but are fine when the level sits at the bottom.
        assert_eq!(validate_rse(&bad, 2, &sh), vec![]);
    }

    #[test]
    fn concat_and_le() {
        let t1 = t(&[
            "-1 -1 -1", "-2 -2 -2", "-3 -3 1", "-4 1 3", "3 4 2*", "3 1* 3*", "1*",
        ]);
        let t2 = t(&["-1 -1 1 1", "-2 1 2 1*", "1 2 2", "1* 2*", "2* 4*"]);
        assert!(Tableau::le(&t1, &t2));
        let joined = t1.concat(&t2);
        assert_eq!(joined.num_cols(), 7);
        assert_eq!(joined.get(1, 4), Some(Entry::Neg(1)));
        assert_eq!(joined.get(2, 5), Some(Entry::Plain(1)));
        assert!(joined.is_extended_rpp());

        // Seam violation: 5 in row 1 of the left piece against 4 on the right.
        let left = t(&["5"]);
        let right = t(&["4"]);
        assert!(!Tableau::le(&left, &right));
        assert!(Tableau::le(&right, &left));

        let empty = Tableau::empty();
        assert_eq!(t2.concat(&empty), t2);
        assert_eq!(empty.concat(&t2), t2);
        assert!(Tableau::le(&empty, &t1));
        assert!(Tableau::le(&t1, &empty));
    }

    #[test]
    fn row_and_column_restrictions() {
        let x = fig_rpp();
        let top = x.rows_le(2);
        assert_eq!(top.get(2, 4), Some(Entry::Plain(1)));
        assert_eq!(top.get(3, 1), None);
        let bottom = x.rows_ge(3);
        assert_eq!(bottom.get(3, 2), Some(Entry::Plain(1)));
        assert_eq!(bottom.get(2, 4), None);
        assert_eq!(bottom.col(1).start, 3);
        let mid = x.cols_range(2, 3);
        assert_eq!(mid.num_cols(), 2);
        assert_eq!(mid.get(3, 1), Some(Entry::Plain(1)));
    }

    #[test]
    fn enumerate_rpp_small() {
        let single = enumerate_rpp(&shape(&[1], &[]), 2);
        assert_eq!(single.len(), 2);
        assert_eq!(single[0], t(&["1"]));
        assert_eq!(single[1], t(&["2"]));

        let column = enumerate_rpp(&shape(&[1, 1], &[]), 1);
        assert_eq!(column.len(), 1);
        assert_eq!(column[0], t(&["1", "1"]));

        // Independent count for the hook (2,1) over {1,2}: filter all 2^3
        // fillings of the cells (1,1),(1,2),(2,1) by the two inequalities
        // (1,1)≤(1,2) and (1,1)≤(2,1).
        let mut want = 0;
        for a in 1..=2u32 {
            for b in 1..=2u32 {
                for c in 1..=2u32 {
                    if a <= b && a <= c {
                        want += 1;
                    }
                }
            }
        }
        assert_eq!(want, 5);
        let hook = enumerate_rpp(&shape(&[2, 1], &[]), 2);
        assert_eq!(hook.len(), want);
        for r in &hook {
            assert!(r.is_extended_rpp());
        }
        let mut dedup = hook.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), hook.len());

        let empty = enumerate_rpp(&shape(&[], &[]), 3);
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0], Tableau::empty());
    }

    #[test]
    fn enumerate_rpp_respects_inner_shape() {
        // (2,2)/(1): three cells; row 1 col 2 free, row 2 both free.
        let rpps = enumerate_rpp(&shape(&[2, 2], &[1]), 2);
        for r in &rpps {
            assert_eq!(r.get(1, 1), Some(Entry::Neg(1)));
            assert!(r.is_extended_rpp());
        }
        // Independent count: cells (1,2),(2,1),(2,2) with (1,2)≤(2,2),
        // (2,1)≤(2,2) over {1,2}: pairs summed -> 1+2+2+4 minus... = 9 - 2 = ?
        // Direct check instead: filter all 8 fillings.
        let mut count = 0;
        for a in 1..=2u32 {
            for b in 1..=2u32 {
                for c in 1..=2u32 {
                    // a at (1,2), b at (2,1), c at (2,2)
                    if a <= c && b <= c {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(rpps.len(), count);
    }

    #[test]
    fn enumerate_rse_top_level_matches_rpp() {
        // At the maximal level the starred region is forced empty and the
        // plain region is an unrestricted RPP of the skew shape.
        let sh = shape(&[2, 2], &[1]);
        let rses = enumerate_rse(&sh, 2, 2);
        let rpps = enumerate_rpp(&sh, 2);
        assert_eq!(rses.len(), rpps.len());
        for r in &rses {
            assert_eq!(validate_rse(&r.tableau, 2, &sh), vec![]);
        }
    }

    #[test]
    fn enumerate_rse_level_one_is_extended_ssyt() {
        // Level 1, straight shape: exactly the column-strict fillings over
        // {1..p, 1*..}. Independent count for shape (2,2), p=2:
        // plain part must be an SSYT prefix; brute-force directly over the
        // four cells with all extended values possible by the shape.
        let sh = shape(&[2, 2], &[]);
        let rses = enumerate_rse(&sh, 1, 2);
        for r in &rses {
            assert_eq!(validate_rse(&r.tableau, 1, &sh), vec![]);
        }
        // Direct enumeration: each column is a strictly increasing pair over
        // 1<2<1*, with stars only allowed in row 2 (value ≤ row-1) and star
        // value ≤ λ'_j - 1 = 1; rows weakly increase.
        let vals = [Entry::Plain(1), Entry::Plain(2), Entry::Star(1)];
        let mut count = 0;
        for &a in &vals {
            for &b in &vals {
                for &c in &vals {
                    for &d in &vals {
                        // column 1: a over b, column 2: c over d
                        let col_ok = a < b && c < d;
                        let row_ok = a <= c && b <= d;
                        let star_ok = !a.is_star() && !c.is_star();
                        if col_ok && row_ok && star_ok {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(rses.len(), count);
        assert!(rses
            .iter()
            .any(|r| r.tableau.get(2, 2).map(|e| e.is_star()).unwrap_or(false)));
    }

    #[test]
    fn enumerate_rse_levels_are_equinumerous() {
        // The level maps are bijections, so every level has the same count.
        let sh = shape(&[2, 2, 1], &[]);
        let counts: Vec<usize> = (1..=3).map(|k| enumerate_rse(&sh, k, 2).len()).collect();
        assert_eq!(counts[0], counts[1]);
        assert_eq!(counts[1], counts[2]);
        assert_eq!(counts[2], enumerate_rpp(&sh, 2).len());
    }

    #[test]
    fn json_round_trip() {
        let sh = shape(&[6, 5, 4, 4, 2], &[4, 3, 1]);
        let x = rse_skew_level2();
        let encoded = TableauJson::encode(&x, &sh);
        let json = serde_json::to_string(&encoded).unwrap();
        assert!(json.contains("\"e\":\"-1\""));
        assert!(json.contains("\"e\":\"3*\""));
        let decoded: TableauJson = serde_json::from_str(&json).unwrap();
        let (sh2, x2) = decoded.decode().unwrap();
        assert_eq!(sh2, sh);
        assert_eq!(x2, x);
    }

    #[test]
    fn json_rejects_gaps() {
        let bad = TableauJson {
            shape: shape(&[2], &[]),
            cells: vec![
                TableauCellJson {
                    r: 1,
                    c: 1,
                    e: "1".into(),
                },
                TableauCellJson {
                    r: 3,
                    c: 1,
                    e: "2".into(),
                },
            ],
        };
        assert!(bad.decode().is_err());
    }

    #[test]
    fn pretty_prints_grid() {
        let x = t(&["-1 1", "2 4*"]);
        let rendered = x.pretty();
        assert_eq!(rendered, "-1  1\n 2 4*\n");
    }

    #[test]
    fn from_rows_round_trips_through_rows() {
        let x = t(&["1 2 3", "2 3"]);
        assert_eq!(x.heights(), vec![2, 2, 1]);
        assert_eq!(x.get(1, 3), Some(Entry::Plain(3)));
        assert_eq!(x.get(2, 3), None);
    }
}
