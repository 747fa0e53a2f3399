//! The exponential derangement functions `f_z(g) = z^{n - r(g)}`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::coeffs::CoeffTable;
use super::psi::PsiCoeffs;
use crate::algebra::{ratfunc_sign_on_q_gt_1, IntPoly, RatFunc};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `ψ`-coordinates of `f_z`: the coefficient of `ψ_j` is
/// `z^{n-j} Π_{i<j} (q^{-i} - z) / (q^{i+1} - 1)`.
pub fn fz_coeffs(n: usize, z: &RatFunc) -> PsiCoeffs {
    let mut prod = RatFunc::one();
    let mut out = alloc::vec::Vec::with_capacity(n + 1);
    for j in 0..=n {
        if j > 0 {
            let i = j - 1;
            let num = RatFunc::q_pow(-(i as i64)) - z;
            let den = RatFunc::from_poly(IntPoly::q_pow_minus_one(i + 1));
            prod = &prod * &num.checked_div(&den).expect("q^{i+1} - 1 is nonzero");
        }
        out.push(z.pow((n - j) as u32) * &prod);
    }
    PsiCoeffs::new(n, out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FzReport {
    pub is_character: bool,
    /// First block (canonical order) with a negative coefficient.
    pub first_negative_block: Option<Partition>,
    /// Whether the Steinberg block `[1^n]_n` has a negative coefficient.
    pub steinberg_negative: bool,
}

/// Sign test of every block coefficient of `f_z`.
///
/// With `q = None` signs are decided for all `q > 1`; with `Some(q)` the
/// coefficients are specialised at that value first.
pub fn fz_positivity(table: &CoeffTable, z: &RatFunc, q: Option<&BigRational>) -> Result<FzReport> {
    let n = table.n();
    let blocks = fz_coeffs(n, z).to_blocks(table);
    let steinberg = Partition::column(n);
    let mut first_negative = None;
    let mut steinberg_negative = false;
    for (l, v) in blocks.iter() {
        let negative = match q {
            Some(q) => v.eval(q).ok_or(Error::DivisionByZero)?.is_negative(),
            None => !ratfunc_sign_on_q_gt_1(v).is_character_coeff(),
        };
        if negative {
            if first_negative.is_none() {
                first_negative = Some(l.clone());
            }
            if *l == steinberg {
                steinberg_negative = true;
            }
        }
    }
    Ok(FzReport {
        is_character: first_negative.is_none(),
        first_negative_block: first_negative,
        steinberg_negative,
    })
}

/// Threshold below which the Steinberg coefficient of `f_z` turns negative
/// for negative `z`: `-1 / (q^n - q^{n-1} - 1)`; `None` when the
/// denominator vanishes.
pub fn steinberg_threshold(n: usize, q: &BigRational) -> Option<BigRational> {
    assert!(n >= 1);
    let qn = q.pow(n as i32);
    let qn1 = q.pow(n as i32 - 1);
    let d = qn - qn1 - BigRational::from_integer(1.into());
    (!d.is_zero()).then(|| -d.recip())
}
