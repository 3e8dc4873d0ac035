//! Refined dual stable Grothendieck polynomials g̃_{λ/μ}(x;t).
//!
//! The library computes the polynomials three independent ways — by
//! enumerating reverse plane partitions, by a Jacobi–Trudi style determinant
//! with mixed x/t elementary symmetric entries, and by signed sums over
//! lattice paths — and implements the tableau machinery (RSE-tableaux, the
//! level maps `pu`/`pd`, the `Tab` bijection, and the sign-reversing
//! involution on semi-noncrossing path families) that proves these agree.
//!
//! The x alphabet is truncated to x_1..x_p throughout. This is exact: both
//! sides of every identity are polynomials, and setting x_i = 0 for i > p
//! preserves equality, so desk-scale verification has full force.

pub mod involution;
pub mod partition;
pub mod path;
pub mod poly;
pub mod rsk;
pub mod tableau;
pub mod verify;

pub use involution::{
    is_fixed_point, phi, signed_weight_sum, InvolutionTrace, Outcome, StepRecord, SwapRecord,
};
pub use partition::{MuProfile, Partition, Restrict, SkewShape};
pub use path::{
    classify, enumerate_l, enumerate_npaths, np_type, pi_lambda_heights, swap_tails, tab,
    tab_inverse, tab_with_negs, Crossing, Height, NPath, NPathJson, Path,
};
pub use poly::{determinant, elementary_symmetric, Monomial, Polynomial, Var};
pub use rsk::{pd, pd_image_test, pd_power, pu, pu_power};
pub use tableau::{
    enumerate_rpp, enumerate_rse, validate_rse, Column, Entry, RseTableau, RseViolation, Tableau,
    TableauJson,
};
pub use verify::{
    binomial_determinant, binomial_jt_entry, gpoly_by_rpp, jt_determinant, jt_entry, path_sum,
    rse_fixed_sum, schur_determinant, verify_box, Identity, IdentityReport, PathFilter,
    ShapeReport, VerifyConfig, VerifyReport,
};
