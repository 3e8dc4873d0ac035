//! Both sides of every identity, assembled and checked exhaustively.
//!
//! The generating function over reverse plane partitions is the ground
//! truth. The determinant with mixed x/t entries, its binomial variant at
//! t=1, the signed path sums, and the fixed-point sum of the involution are
//! all computed independently and compared to it as exact polynomials over
//! boxes of shapes. The x alphabet is truncated to `p` variables, which
//! preserves every identity exactly.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::partition::{Partition, SkewShape};
use crate::path::{classify, enumerate_npaths, Crossing};
use crate::poly::{determinant, elementary_symmetric, Polynomial, Var};
use crate::rsk::pu_power;
use crate::tableau::{enumerate_rpp, enumerate_rse};

/// The determinant entry at (i, j): the elementary symmetric polynomial of
/// degree λ'_i − μ'_j − i + j in x_1..x_p together with t_{μ'_j+1}..t_{λ'_i−1}
/// (an empty t-list when the window is empty).
pub fn jt_entry(i: usize, j: usize, outer: &Partition, inner: &Partition, p: u32) -> Polynomial {
    let lc = outer.conjugate();
    let mc = inner.conjugate();
    let deg = lc.part(i) as i64 - mc.part(j) as i64 - i as i64 + j as i64;
    let mut vars: Vec<Var> = (1..=p).map(Var::X).collect();
    let lo = mc.part(j) as u32 + 1;
    let hi = lc.part(i) as i64 - 1;
    if (lo as i64) <= hi {
        vars.extend((lo..=hi as u32).map(Var::T));
    }
    elementary_symmetric(deg, &vars)
}

fn jt_matrix(outer: &Partition, inner: &Partition, p: u32, n: usize) -> Vec<Vec<Polynomial>> {
    (1..=n)
        .map(|i| (1..=n).map(|j| jt_entry(i, j, outer, inner, p)).collect())
        .collect()
}

/// The determinant side of the main identity. The matrix size is the number
/// of columns of the shapes; padding with further rows and columns does not
/// change the value (asserted in debug builds), and non-nested pairs give 0.
pub fn jt_determinant(outer: &Partition, inner: &Partition, p: u32) -> Polynomial {
    let n = outer.part(1).max(inner.part(1));
    let det = determinant(&jt_matrix(outer, inner, p, n));
    debug_assert_eq!(
        det,
        determinant(&jt_matrix(outer, inner, p, n + 1)),
        "padding the matrix must not change the determinant"
    );
    det
}

fn binomial(m: i64, k: i64) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if m < 0 || k < 0 || k > m {
        return BigInt::from(0);
    }
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    b
}

/// The t=1 variant of the determinant entry: a binomial-weighted sum of
/// elementary symmetric polynomials in x alone.
pub fn binomial_jt_entry(
    i: usize,
    j: usize,
    outer: &Partition,
    inner: &Partition,
    p: u32,
) -> Polynomial {
    let lc = outer.conjugate();
    let mc = inner.conjugate();
    let m = lc.part(i) as i64 - mc.part(j) as i64 - 1;
    let deg = lc.part(i) as i64 - mc.part(j) as i64 - i as i64 + j as i64;
    let xvars: Vec<Var> = (1..=p).map(Var::X).collect();
    let mut sum = Polynomial::zero();
    for k in 0..=m.max(0) {
        let coef = binomial(m, k);
        if coef == BigInt::from(0) {
            continue;
        }
        for (mono, c) in elementary_symmetric(deg - k, &xvars).terms() {
            sum.add_term(mono.clone(), &(c * &coef));
        }
    }
    sum
}

/// Determinant of the binomial entries: the unrefined (t=1) polynomial.
pub fn binomial_determinant(outer: &Partition, inner: &Partition, p: u32) -> Polynomial {
    let n = outer.part(1).max(inner.part(1));
    let matrix: Vec<Vec<Polynomial>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| binomial_jt_entry(i, j, outer, inner, p))
                .collect()
        })
        .collect();
    determinant(&matrix)
}

/// Determinant with every t-list emptied: the classical dual formula for the
/// skew Schur polynomial.
pub fn schur_determinant(outer: &Partition, inner: &Partition, p: u32) -> Polynomial {
    let lc = outer.conjugate();
    let mc = inner.conjugate();
    let n = outer.part(1).max(inner.part(1));
    let xvars: Vec<Var> = (1..=p).map(Var::X).collect();
    let matrix: Vec<Vec<Polynomial>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let deg = lc.part(i) as i64 - mc.part(j) as i64 - i as i64 + j as i64;
                    elementary_symmetric(deg, &xvars)
                })
                .collect()
        })
        .collect();
    determinant(&matrix)
}

/// The ground truth: the weight generating function over all reverse plane
/// partitions of the shape with entries ≤ p. Non-nested pairs give 0.
pub fn gpoly_by_rpp(outer: &Partition, inner: &Partition, p: u32) -> Polynomial {
    if !inner.contained_in(outer) {
        return Polynomial::zero();
    }
    let shape = SkewShape::new(outer.clone(), inner.clone());
    let mut sum = Polynomial::zero();
    for t in enumerate_rpp(&shape, p) {
        sum.add_term(t.weight(), &BigInt::one());
    }
    sum
}

/// Which families a path sum ranges over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathFilter {
    /// Every family, crossing or not.
    All,
    /// Only families with no same-block crossing.
    Snc,
}

/// Signed sum of family weights. With [`PathFilter::Snc`] the crossing
/// families are skipped; the two sums agree because crossing families cancel
/// in pairs.
pub fn path_sum(outer: &Partition, inner: &Partition, p: u32, filter: PathFilter) -> Polynomial {
    path_sum_impl(outer, inner, p, filter, false)
}

fn path_sum_impl(
    outer: &Partition,
    inner: &Partition,
    p: u32,
    filter: PathFilter,
    corrupt: bool,
) -> Polynomial {
    let shape = SkewShape::new(outer.clone(), inner.clone());
    let mut sum = Polynomial::zero();
    for (np, _, sign) in enumerate_npaths(&shape, p) {
        if filter == PathFilter::Snc && classify(&np, &shape) == Crossing::Crossing {
            continue;
        }
        // Self-test hook: dropping the signs breaks the determinant and the
        // cancellation identities, which the mutation mode must detect.
        let sign = if corrupt { 1 } else { sign };
        sum.add_term(np.monomial(), &BigInt::from(sign));
    }
    sum
}

/// Sum of weights over the level-1 image of the top-level tableaux — the
/// fixed points of the involution. The lowering map is injective, which is
/// asserted along the way.
pub fn rse_fixed_sum(outer: &Partition, inner: &Partition, p: u32) -> Polynomial {
    let shape = SkewShape::new(outer.clone(), inner.clone());
    let ell = outer.len();
    let mut sum = Polynomial::zero();
    let mut seen = HashSet::new();
    if ell == 0 {
        sum.add_term(crate::poly::Monomial::one(), &BigInt::one());
        return sum;
    }
    for rt in enumerate_rse(&shape, ell, p) {
        let img = pu_power(&rt, ell - 1).expect("lowering to level 1 is total");
        assert!(
            seen.insert(img.tableau.clone()),
            "lowering must be injective"
        );
        sum.add_term(img.weight(), &BigInt::one());
    }
    sum
}

/// The identities the box verifier can check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Identity {
    /// Generating function over fillings equals the mixed determinant.
    RppVsDeterminant,
    /// Fixed-point sum of the involution equals the generating function.
    FixedPointsVsRpp,
    /// Signed sum over all families equals the determinant.
    PathsVsDeterminant,
    /// Skipping the crossing families does not change the signed sum.
    SncCancellation,
    /// Binomial determinant equals the generating function at t=1.
    BinomialT1,
    /// At t=0 the determinant collapses to the classical Schur formula.
    ClassicalT0,
}

impl Identity {
    pub fn all() -> [Identity; 6] {
        [
            Identity::RppVsDeterminant,
            Identity::FixedPointsVsRpp,
            Identity::PathsVsDeterminant,
            Identity::SncCancellation,
            Identity::BinomialT1,
            Identity::ClassicalT0,
        ]
    }

    pub fn id(self) -> &'static str {
        match self {
            Identity::RppVsDeterminant => "rpp-det",
            Identity::FixedPointsVsRpp => "fixed-points",
            Identity::PathsVsDeterminant => "paths-det",
            Identity::SncCancellation => "snc-cancel",
            Identity::BinomialT1 => "binomial-t1",
            Identity::ClassicalT0 => "classical-t0",
        }
    }

    pub fn parse(s: &str) -> Option<Identity> {
        Identity::all().into_iter().find(|i| i.id() == s)
    }
}

/// One identity verdict on one shape.
#[derive(Clone, Serialize, Debug)]
pub struct IdentityReport {
    pub id: String,
    pub ok: bool,
    /// Both sides rendered, present only on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// All verdicts for one shape.
#[derive(Clone, Serialize, Debug)]
pub struct ShapeReport {
    pub shape: String,
    pub ok: bool,
    pub checks: Vec<IdentityReport>,
}

/// The full report over a box of shapes.
#[derive(Clone, Serialize, Debug)]
pub struct VerifyReport {
    pub box_rows: usize,
    pub box_cols: usize,
    pub xvars: u32,
    pub ok: bool,
    pub shapes: Vec<ShapeReport>,
}

/// Configuration of a box run.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub rows: usize,
    pub cols: usize,
    pub p: u32,
    /// Identities to check; empty means all.
    pub identities: Vec<Identity>,
    /// Self-test mode: corrupt the signed path sum and expect failures.
    pub mutate: bool,
}

fn check_pair(outer: &Partition, inner: &Partition, cfg: &VerifyConfig) -> ShapeReport {
    let which: Vec<Identity> = if cfg.identities.is_empty() {
        Identity::all().to_vec()
    } else {
        cfg.identities.clone()
    };
    let p = cfg.p;
    let gp = gpoly_by_rpp(outer, inner, p);
    let det = jt_determinant(outer, inner, p);
    let needs_paths = which
        .iter()
        .any(|i| matches!(i, Identity::PathsVsDeterminant | Identity::SncCancellation));
    let (all_sum, snc_sum) = if needs_paths {
        (
            path_sum_impl(outer, inner, p, PathFilter::All, cfg.mutate),
            path_sum_impl(outer, inner, p, PathFilter::Snc, false),
        )
    } else {
        (Polynomial::zero(), Polynomial::zero())
    };
    let mut checks = Vec::new();
    for ident in which {
        let (lhs, rhs) = match ident {
            Identity::RppVsDeterminant => (gp.clone(), det.clone()),
            Identity::FixedPointsVsRpp => (rse_fixed_sum(outer, inner, p), gp.clone()),
            Identity::PathsVsDeterminant => (all_sum.clone(), det.clone()),
            Identity::SncCancellation => (snc_sum.clone(), all_sum.clone()),
            Identity::BinomialT1 => (binomial_determinant(outer, inner, p), gp.specialize_t(1)),
            Identity::ClassicalT0 => (schur_determinant(outer, inner, p), gp.specialize_t(0)),
        };
        let ok = lhs == rhs;
        checks.push(IdentityReport {
            id: ident.id().to_string(),
            ok,
            detail: (!ok).then(|| format!("lhs = {lhs}, rhs = {rhs}")),
        });
    }
    ShapeReport {
        shape: format!("{outer}/{inner}"),
        ok: checks.iter().all(|c| c.ok),
        checks,
    }
}

/// Checks the configured identities for every nested pair of partitions in
/// the box. The report lists shapes in a fixed order regardless of
/// scheduling.
pub fn verify_box(cfg: &VerifyConfig) -> VerifyReport {
    let lambdas = Partition::in_box(cfg.rows, cfg.cols);
    let mut pairs = Vec::new();
    for la in &lambdas {
        for mu in &lambdas {
            if mu.contained_in(la) {
                pairs.push((la.clone(), mu.clone()));
            }
        }
    }
    pairs.sort();
    let shapes: Vec<ShapeReport> = pairs
        .par_iter()
        .map(|(la, mu)| check_pair(la, mu, cfg))
        .collect();
    VerifyReport {
        box_rows: cfg.rows,
        box_cols: cfg.cols,
        xvars: cfg.p,
        ok: shapes.iter().all(|s| s.ok),
        shapes,
    }
}
