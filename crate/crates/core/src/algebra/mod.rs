//! Exact arithmetic over ℤ[q] and ℚ(q) with sign semantics on `q > 1`.

pub mod linalg;
pub mod poly;
pub mod qanalog;
pub mod ratfunc;
pub mod sign;

pub use linalg::{bareiss_rank, evaluated_rank, sampled_rank};
pub use poly::IntPoly;
pub use qanalog::{frame_count, paper_nq_factorial, q_binomial, q_factorial_ratio};
pub use ratfunc::RatFunc;
pub use sign::{ratfunc_cmp_q_gt_1, ratfunc_sign_on_q_gt_1, sign_on_q_gt_1, QOrdering, SignVerdict};
