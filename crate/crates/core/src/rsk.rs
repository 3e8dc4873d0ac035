//! The level-decreasing and level-increasing maps `pu` and `pd` on
//! RSE-tableaux.
//!
//! Both maps are row-insertion procedures: `pu` deletes the row above the
//! marked level, re-inserts its novel entries with the RSK algorithm, and
//! fills the cells left over with new starred entries; `pd` reverses this by
//! ejecting one entry from the bottom of every column that lacks the minimal
//! starred value, then rebuilding the deleted row. On straight shapes the two
//! maps are mutually inverse weight-preserving bijections between consecutive
//! levels. On skew shapes `pu` is injective and `pd` can leave the valid
//! family; [`pd_image_test`] decides membership in the image of `pu`.
//!
//! Negative entries take part in the insertions like any other value, using
//! the extended-integer order `-1 < -2 < … < 1 < 2 < …`.

use crate::partition::{Partition, SkewShape};
use crate::tableau::{validate_rse, Column, Entry, RseTableau, Tableau};

/// Per-column entry lists: the non-starred prefixes and starred suffixes.
type SplitColumns = (Vec<Vec<Entry>>, Vec<Vec<Entry>>);

/// Splits each column of a row-1-anchored tableau into its non-starred
/// prefix and its starred suffix.
fn split_columns(t: &Tableau) -> Result<SplitColumns, String> {
    let mut nonstar = Vec::with_capacity(t.num_cols());
    let mut stars = Vec::with_capacity(t.num_cols());
    for (j, col) in t.columns().iter().enumerate() {
        if !col.is_empty() && col.start != 1 {
            return Err(format!(
                "column {} starts at row {}; level maps need full columns",
                j + 1,
                col.start
            ));
        }
        let cut = col
            .entries
            .iter()
            .position(Entry::is_star)
            .unwrap_or(col.entries.len());
        if col.entries[cut..].iter().any(|e| !e.is_star()) {
            return Err(format!(
                "column {} has a non-starred entry below a starred one",
                j + 1
            ));
        }
        nonstar.push(col.entries[..cut].to_vec());
        stars.push(col.entries[cut..].to_vec());
    }
    Ok((nonstar, stars))
}

fn rebuild(nonstar: Vec<Vec<Entry>>, stars: Vec<Vec<Entry>>) -> Tableau {
    let cols = nonstar
        .into_iter()
        .zip(stars)
        .map(|(mut ns, st)| {
            ns.extend(st);
            Column::full(ns)
        })
        .collect();
    Tableau::from_columns(cols)
}

/// RSK row insertion of `a` into rows ≥ `start_row`, bumping the leftmost
/// strictly larger entry in each row. Returns the (row, column) of the cell
/// created at the end of the bumping path.
fn insert_at_row(
    cols: &mut [Vec<Entry>],
    start_row: usize,
    a: Entry,
) -> Result<(usize, usize), String> {
    let mut v = a;
    let mut r = start_row;
    loop {
        let bump = (0..cols.len()).find(|&j| cols[j].len() >= r && cols[j][r - 1] > v);
        match bump {
            Some(j) => {
                std::mem::swap(&mut v, &mut cols[j][r - 1]);
                r += 1;
            }
            None => {
                let j = (0..cols.len())
                    .find(|&j| cols[j].len() == r - 1)
                    .ok_or_else(|| format!("insertion fell outside the tableau at row {r}"))?;
                cols[j].push(v);
                return Ok((r, j + 1));
            }
        }
    }
}

/// Reverse RSK insertion starting from the bottom cell of `start_col`,
/// bumping the rightmost strictly smaller entry in each row above, down to
/// `stop_row`. Returns the ejected entry together with the column of the
/// row-`stop_row` cell it came from.
fn reverse_at_col(
    cols: &mut [Vec<Entry>],
    start_col: usize,
    stop_row: usize,
) -> Result<(Entry, usize), String> {
    let rho = cols[start_col - 1].len();
    if rho < stop_row {
        return Err(format!(
            "column {start_col} has no cell at or below row {stop_row}"
        ));
    }
    let mut v = cols[start_col - 1].pop().unwrap();
    let mut b = start_col;
    for r in (stop_row..rho).rev() {
        let j = (0..cols.len())
            .rev()
            .find(|&j| cols[j].len() >= r && cols[j][r - 1] < v)
            .ok_or_else(|| format!("reverse insertion stuck at row {r}"))?;
        std::mem::swap(&mut v, &mut cols[j][r - 1]);
        b = j + 1;
    }
    Ok((v, b))
}

fn pu_impl(t: &RseTableau) -> Result<RseTableau, String> {
    let level = t.level;
    if level < 2 {
        return Err("cannot decrease below level 1".into());
    }
    let k = level - 1;
    let (mut nonstar, mut stars) = split_columns(&t.tableau)?;
    let n = nonstar.len();
    let old_heights: Vec<usize> = nonstar.iter().map(Vec::len).collect();

    // The entry in row k of column j is novel when column j has no cell in
    // row k+1 or holds a different value there. Collecting left to right
    // lists the novel entries in weakly increasing order.
    let mut novels = Vec::new();
    let mut row_k = vec![None; n];
    for j in 0..n {
        if old_heights[j] >= k {
            let e = nonstar[j][k - 1];
            row_k[j] = Some(e);
            if old_heights[j] == k || nonstar[j][k] != e {
                novels.push(e);
            }
            nonstar[j].remove(k - 1);
        }
    }
    debug_assert!(
        novels.windows(2).all(|w| w[0] <= w[1]),
        "novel entries must weakly increase along the row"
    );

    // Insert the novel entries into rows ≥ k. Every bumping path must end in
    // the horizontal strip of cells vacated by the deleted row.
    for a in novels {
        let (r, j) = insert_at_row(&mut nonstar, k, a)?;
        if old_heights[j - 1] < k || r != old_heights[j - 1] {
            return Err(format!(
                "insertion created a cell at ({r},{j}) outside the vacated strip"
            ));
        }
    }
    for j in 0..n {
        if let Some(e) = row_k[j] {
            debug_assert_eq!(
                nonstar[j][k - 1],
                e,
                "row {k} must be restored by the insertions"
            );
        }
    }

    // The vacated cells not refilled by the insertions become starred
    // entries carrying the new level.
    for j in 0..n {
        if old_heights[j] >= k && nonstar[j].len() < old_heights[j] {
            debug_assert_eq!(nonstar[j].len(), old_heights[j] - 1);
            debug_assert!(stars[j]
                .first()
                .map(|e| e.value() > k as u32)
                .unwrap_or(true));
            stars[j].insert(0, Entry::Star(k as u32));
        }
    }
    Ok(RseTableau::new(rebuild(nonstar, stars), k))
}

fn pd_impl(t: &RseTableau) -> Result<RseTableau, String> {
    let k = t.level;
    let (mut nonstar, mut stars) = split_columns(&t.tableau)?;
    let n = nonstar.len();
    let total: Vec<usize> = (0..n).map(|j| nonstar[j].len() + stars[j].len()).collect();
    // Width of row k of the full shape.
    let width = total.iter().filter(|&&h| h >= k).count();

    // Columns of row k that carry the minimal starred value lose it; the
    // others eject an entry by reverse insertion, rightmost column first.
    let mut eject_cols = Vec::new();
    for (j, star_col) in stars.iter_mut().enumerate().take(width) {
        if star_col.first() == Some(&Entry::Star(k as u32)) {
            star_col.remove(0);
        } else {
            debug_assert!(!star_col.contains(&Entry::Star(k as u32)));
            eject_cols.push(j + 1);
        }
    }
    let mut ejected: Vec<Option<Entry>> = vec![None; width];
    for &c in eject_cols.iter().rev() {
        let (a, b) = reverse_at_col(&mut nonstar, c, k)?;
        if b > width {
            return Err(format!(
                "reverse insertion ended in column {b} past row {k}"
            ));
        }
        debug_assert!(ejected[b - 1].is_none(), "ejected cells must be distinct");
        ejected[b - 1] = Some(a);
    }

    // Rebuild row k: ejected entries return to their columns, every other
    // cell copies the value directly below it.
    for j in 0..width {
        let v = match ejected[j] {
            Some(a) => a,
            None => *nonstar[j]
                .get(k - 1)
                .ok_or_else(|| format!("column {} has no cell below row {k} to copy", j + 1))?,
        };
        nonstar[j].insert(k - 1, v);
    }
    Ok(RseTableau::new(rebuild(nonstar, stars), k + 1))
}

/// `pd` without the row-count guard: when the level already exceeds every
/// column the map degenerates to bumping the level. Used by the involution,
/// whose intermediate column blocks may be shorter than the working level.
pub(crate) fn pd_relaxed(t: &RseTableau) -> Result<RseTableau, String> {
    pd_impl(t)
}

/// The skew shape a full-column tableau spells out: the outer shape from the
/// column heights and the inner shape from the negative entries.
pub(crate) fn implied_shape(t: &Tableau) -> SkewShape {
    let outer = parts_from_heights(&t.heights());
    let neg_heights: Vec<usize> = t
        .columns()
        .iter()
        .map(|c| c.entries.iter().filter(|e| e.is_neg()).count())
        .collect();
    SkewShape::new(outer, parts_from_heights(&neg_heights))
}

fn parts_from_heights(heights: &[usize]) -> Partition {
    let rows = heights.iter().copied().max().unwrap_or(0);
    Partition::new(
        (1..=rows)
            .map(|i| heights.iter().filter(|&&h| h >= i).count())
            .collect(),
    )
}

/// The level-decreasing map: sends a level-`k` tableau to level `k-1`,
/// preserving the weight. Valid inputs always yield valid outputs.
pub fn pu(t: &RseTableau) -> Result<RseTableau, String> {
    let out = pu_impl(t)?;
    // Column-splitting identity: the first μ_{k-1} columns ride along
    // unchanged, so pu may be applied to the remaining columns alone.
    #[cfg(debug_assertions)]
    {
        let mu = implied_shape(&t.tableau).inner;
        let n = t.tableau.num_cols();
        for s in 1..=mu.part(t.level - 1) {
            let left = t.tableau.cols_range(1, s);
            let right = RseTableau::new(t.tableau.cols_range(s + 1, n), t.level);
            if let Ok(split) = pu_impl(&right) {
                debug_assert_eq!(
                    out.tableau,
                    left.concat(&split.tableau),
                    "column splitting failed for pu at s = {s}"
                );
            }
        }
    }
    Ok(out)
}

/// The level-increasing map: sends a level-`k` tableau to level `k+1`,
/// preserving the weight. The output can leave the valid family for a skew
/// shape; use [`pd_image_test`] to decide this up front.
pub fn pd(t: &RseTableau) -> Result<RseTableau, String> {
    let rows = t.tableau.max_row();
    if t.level >= rows {
        return Err(format!(
            "cannot increase the level past the number of rows ({rows})"
        ));
    }
    let out = pd_impl(t)?;
    // Column-splitting identity, valid exactly when the output stays in the
    // family for the shape the tableau spells out.
    #[cfg(debug_assertions)]
    {
        let shape = implied_shape(&t.tableau);
        if validate_rse(&out.tableau, out.level, &shape).is_empty() {
            let n = t.tableau.num_cols();
            for s in 1..=shape.inner.part(t.level) {
                let left = t.tableau.cols_range(1, s);
                let right = RseTableau::new(t.tableau.cols_range(s + 1, n), t.level);
                if let Ok(split) = pd_impl(&right) {
                    debug_assert_eq!(
                        out.tableau,
                        left.concat(&split.tableau),
                        "column splitting failed for pd at s = {s}"
                    );
                }
            }
        }
    }
    Ok(out)
}

/// `pu` applied `d` times.
pub fn pu_power(t: &RseTableau, d: usize) -> Result<RseTableau, String> {
    let mut cur = t.clone();
    for _ in 0..d {
        cur = pu(&cur)?;
    }
    // Iterated column splitting: the first μ_{b-1} columns (b the starting
    // level) are untouched by every step.
    #[cfg(debug_assertions)]
    if d >= 1 && t.level >= 2 {
        let mu = implied_shape(&t.tableau).inner;
        let n = t.tableau.num_cols();
        for j in 1..=mu.part(t.level - 1) {
            let left = t.tableau.cols_range(1, j);
            let mut split = RseTableau::new(t.tableau.cols_range(j + 1, n), t.level);
            let mut ok = true;
            for _ in 0..d {
                match pu_impl(&split) {
                    Ok(next) => split = next,
                    Err(_) => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                debug_assert_eq!(
                    cur.tableau,
                    left.concat(&split.tableau),
                    "column splitting failed for pu^{d} at j = {j}"
                );
            }
        }
    }
    Ok(cur)
}

/// `pd` applied `d` times.
pub fn pd_power(t: &RseTableau, d: usize) -> Result<RseTableau, String> {
    let mut cur = t.clone();
    for _ in 0..d {
        cur = pd(&cur)?;
    }
    // Iterated column splitting, valid when the final output stays in the
    // family: the first μ_{k+d-1} columns are untouched by every step.
    #[cfg(debug_assertions)]
    if d >= 1 {
        let shape = implied_shape(&t.tableau);
        if validate_rse(&cur.tableau, cur.level, &shape).is_empty() {
            let n = t.tableau.num_cols();
            for j in 1..=shape.inner.part(t.level + d - 1) {
                let left = t.tableau.cols_range(1, j);
                let mut split = RseTableau::new(t.tableau.cols_range(j + 1, n), t.level);
                let mut ok = true;
                for _ in 0..d {
                    match pd_impl(&split) {
                        Ok(next) => split = next,
                        Err(_) => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    debug_assert_eq!(
                        cur.tableau,
                        left.concat(&split.tableau),
                        "column splitting failed for pd^{d} at j = {j}"
                    );
                }
            }
        }
    }
    Ok(cur)
}

/// Whether `pd` keeps `t` inside the valid family for `shape` — equivalently,
/// whether `t` is in the image of `pu`. In debug builds the answer is
/// cross-checked against the column criterion: the first μ_k columns must sit
/// weakly left of `pd` applied to the rest.
pub fn pd_image_test(t: &RseTableau, shape: &SkewShape) -> bool {
    let ok = pd(t)
        .map(|u| validate_rse(&u.tableau, u.level, shape).is_empty())
        .unwrap_or(false);
    #[cfg(debug_assertions)]
    {
        let mu_k = shape.inner.part(t.level);
        if mu_k >= 1 {
            let n = t.tableau.num_cols();
            let left = t.tableau.cols_range(1, mu_k);
            let right = RseTableau::new(t.tableau.cols_range(mu_k + 1, n), t.level);
            let by_columns = pd_impl(&right)
                .map(|u| Tableau::le(&left, &u.tableau))
                .unwrap_or(false);
            debug_assert_eq!(
                ok, by_columns,
                "column criterion disagrees with direct validation"
            );
        }
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::tableau::{enumerate_rse, validate_rse};
    use std::collections::{BTreeMap, HashSet};

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()),
            Partition::new(inner.to_vec()),
        )
    }

    fn t(rows: &[&str]) -> Tableau {
        let rows: Vec<Vec<Entry>> = rows
            .iter()
            .map(|row| row.split_whitespace().map(|s| s.parse().unwrap()).collect())
            .collect();
        Tableau::from_rows(&rows)
    }

    /// Straight-shape level-3 tableau on (5,5,5,4,4,2).
    fn straight_level3() -> RseTableau {
        RseTableau::new(
            t(&[
                "1 1 1 2 3",
                "1 1 2 3 3",
                "1 2 2 3 4",
                "2 3 3* 3*",
                "3 4 4* 4*",
                "3* 5*",
            ]),
            3,
        )
    }

    /// Its image one level down: row 2 deleted, novel entries 1 and 3
    /// re-inserted, two vacated cells starred with the new level.
    fn straight_level2() -> RseTableau {
        RseTableau::new(
            t(&[
                "1 1 1 2 3",
                "1 1 2 3 3",
                "2 2 4 2* 2*",
                "3 3 3* 3*",
                "4 2* 4* 4*",
                "3* 5*",
            ]),
            2,
        )
    }

    #[test]
    fn pu_straight_worked_example() {
        let got = pu(&straight_level3()).unwrap();
        assert_eq!(got, straight_level2());
        assert_eq!(got.weight(), straight_level3().weight());
        let sh = shape(&[5, 5, 5, 4, 4, 2], &[]);
        assert_eq!(validate_rse(&got.tableau, 2, &sh), vec![]);
    }

    #[test]
    fn pd_straight_worked_example() {
        let got = pd(&straight_level2()).unwrap();
        assert_eq!(got, straight_level3());
        assert_eq!(got.weight(), straight_level2().weight());
    }

    /// Skew pair on (6,5,4,4,2)/(4,3,1): levels 2 and 1.
    fn skew_level2() -> RseTableau {
        RseTableau::new(
            t(&[
                "-1 -1 -1 -1 3 3",
                "-2 -2 -2 1 3",
                "-3 1 1 2",
                "1 2 3* 3*",
                "2 4*",
            ]),
            2,
        )
    }

    fn skew_level1() -> RseTableau {
        RseTableau::new(
            t(&[
                "-1 -1 -1 -1 3 3",
                "-2 -2 -2 1 1*",
                "-3 1 1 2",
                "1 2 3* 3*",
                "2 4*",
            ]),
            1,
        )
    }

    #[test]
    fn pu_and_pd_skew_worked_example() {
        let sh = shape(&[6, 5, 4, 4, 2], &[4, 3, 1]);
        let down = pu(&skew_level2()).unwrap();
        assert_eq!(down, skew_level1());
        assert_eq!(validate_rse(&down.tableau, 1, &sh), vec![]);
        let up = pd(&skew_level1()).unwrap();
        assert_eq!(up, skew_level2());
        assert!(pd_image_test(&skew_level1(), &sh));
    }

    #[test]
    fn pd_can_leave_the_family() {
        // Increasing the level of this tableau copies a negative entry into
        // a cell outside the inner shape.
        let sh = shape(&[2, 2], &[1]);
        let bad = RseTableau::new(t(&["-1 1", "2 1*"]), 1);
        assert_eq!(validate_rse(&bad.tableau, 1, &sh), vec![]);
        let up = pd(&bad).unwrap();
        assert_eq!(up.tableau, t(&["-1 1", "-1 2"]));
        let violations = validate_rse(&up.tableau, 2, &sh);
        assert!(violations
            .iter()
            .any(|v| v.clause == "negative-cells" && v.cell == Some((2, 1))));
        assert!(!pd_image_test(&bad, &sh));
    }

    #[test]
    fn level_bounds_are_errors() {
        assert!(pu(&RseTableau::new(t(&["1"]), 1)).is_err());
        assert!(pd(&RseTableau::new(t(&["1"]), 1)).is_err());
        assert!(pd(&RseTableau::new(t(&["1 1", "2"]), 2)).is_err());
    }

    /// On straight shapes the maps are mutually inverse weight-preserving
    /// bijections between consecutive levels.
    #[test]
    fn straight_shape_bijection_exhaustive() {
        let sh = shape(&[2, 2, 1], &[]);
        for k in 1..=2usize {
            let lower = enumerate_rse(&sh, k, 2);
            let upper = enumerate_rse(&sh, k + 1, 2);
            assert_eq!(lower.len(), upper.len());
            let mut seen = HashSet::new();
            for up in &upper {
                let down = pu(up).unwrap();
                assert_eq!(validate_rse(&down.tableau, k, &sh), vec![]);
                assert_eq!(down.weight(), up.weight());
                assert_eq!(pd(&down).unwrap(), *up);
                assert!(seen.insert(format!("{:?}", down.tableau)));
            }
            assert_eq!(seen.len(), lower.len());
            for low in &lower {
                assert!(pd_image_test(low, &sh));
                let up = pd(low).unwrap();
                assert_eq!(validate_rse(&up.tableau, k + 1, &sh), vec![]);
                assert_eq!(pu(&up).unwrap(), *low);
            }
        }
    }

    /// On skew shapes the level-decreasing map is only an injection; its
    /// image is cut out exactly by the membership test.
    #[test]
    fn skew_shape_injection_exhaustive() {
        for (sh, p) in [
            (shape(&[2, 2], &[1]), 2u32),
            (shape(&[3, 2, 1], &[1, 1]), 2),
            (shape(&[2, 2, 2], &[2, 1]), 2),
        ] {
            let ell = sh.outer.conjugate().part(1);
            for k in 1..ell {
                let lower = enumerate_rse(&sh, k, p);
                let upper = enumerate_rse(&sh, k + 1, p);
                let mut image = HashSet::new();
                for up in &upper {
                    let down = pu(up).unwrap();
                    assert_eq!(validate_rse(&down.tableau, k, &sh), vec![]);
                    assert_eq!(down.weight(), up.weight());
                    assert_eq!(pd(&down).unwrap(), *up);
                    assert!(image.insert(down.tableau.clone()), "pu is not injective");
                }
                for low in &lower {
                    let in_image = image.contains(&low.tableau);
                    assert_eq!(
                        pd_image_test(low, &sh),
                        in_image,
                        "membership test disagrees with the actual image"
                    );
                }
            }
        }
    }

    /// Iterating the level-decreasing map from the top level down to level 1
    /// preserves the weight multiset; the skew example from the worked pair
    /// descends through every level.
    #[test]
    fn power_maps_walk_all_levels() {
        let sh = shape(&[2, 2, 1], &[]);
        let top = enumerate_rse(&sh, 3, 2);
        let mut by_weight: BTreeMap<String, usize> = BTreeMap::new();
        for up in &top {
            let down = pu_power(up, 2).unwrap();
            assert_eq!(down.level, 1);
            assert_eq!(validate_rse(&down.tableau, 1, &sh), vec![]);
            assert_eq!(down.weight(), up.weight());
            assert_eq!(pd_power(&down, 2).unwrap(), *up);
            *by_weight.entry(format!("{:?}", down.weight())).or_default() += 1;
        }
        let mut top_weights: BTreeMap<String, usize> = BTreeMap::new();
        for up in &top {
            *top_weights.entry(format!("{:?}", up.weight())).or_default() += 1;
        }
        assert_eq!(by_weight, top_weights);

        // The skew worked example exercises the splitting checks en route.
        assert_eq!(pu_power(&skew_level2(), 1).unwrap(), skew_level1());
        assert_eq!(pd_power(&skew_level1(), 1).unwrap(), skew_level2());
    }
}
