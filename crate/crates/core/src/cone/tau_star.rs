//! The extra extreme ray of the level-7 cone.

use crate::algebra::{IntPoly, RatFunc};
use crate::characters::BlockVector;

use super::eliminate::ConeBasis;

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

/// `(1+q)(1+q^2) / (1+q+q^2)`.
pub fn tau_star_a1() -> RatFunc {
    RatFunc::new(&p(&[1, 1]) * &p(&[1, 0, 1]), p(&[1, 1, 1])).expect("nonzero denominator")
}

/// `(1+q)(1+q^2)^2(1+q+q^2+q^3+q^4) / (q^2+q^4+q^5+q^6+q^7+q^8+q^10)`.
pub fn tau_star_a2() -> RatFunc {
    let num = p(&[1, 1]) * p(&[1, 0, 1]).pow(2) * p(&[1, 1, 1, 1, 1]);
    let den = p(&[0, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1]);
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// `a_1 τ_4 + a_2 τ_6 - τ_5` at level 7.
///
/// # Panics
/// If `basis` is not at level 7.
pub fn tau_star_7(basis: &ConeBasis) -> BlockVector {
    assert_eq!(basis.n(), 7, "defined at level 7 only");
    basis
        .tau(4)
        .scale(&tau_star_a1())
        .add_scaled(&tau_star_a2(), basis.tau(6))
        .sub(basis.tau(5))
}

/// `τ`-coordinates of [`tau_star_7`].
pub fn tau_star_7_coords() -> alloc::vec::Vec<RatFunc> {
    let mut y = alloc::vec![RatFunc::zero(); 8];
    y[4] = tau_star_a1();
    y[5] = -RatFunc::one();
    y[6] = tau_star_a2();
    y
}
