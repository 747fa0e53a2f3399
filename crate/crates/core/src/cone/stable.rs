//! Closed-form `τ_k^(n)` in the stable range `k <= n/2`.

use crate::algebra::{q_binomial, IntPoly, RatFunc};
use crate::characters::dims::DimCache;
use crate::characters::{restrict, BlockVector, CoeffTable, DerangementValues};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

use super::eliminate::ConeBasis;

/// `Σ_j binom(k, j)_q Σ_{|μ| = j} dim μ [(n-k, μ)]_n`.
pub fn stable_tau(n: usize, k: usize) -> Result<BlockVector> {
    if 2 * k > n {
        return Err(Error::PreconditionViolation(alloc::format!(
            "stable τ needs k <= n/2, got n = {n}, k = {k}"
        )));
    }
    let mut dims = DimCache::new();
    let mut out = BlockVector::new(n);
    for j in 0..=k {
        let b = q_binomial(k, j as isize);
        for mu in partitions_of(j) {
            let lambda = if n - k == 0 {
                Partition::empty()
            } else {
                mu.with_first_row(n - k).expect("μ_1 <= j <= k <= n - k")
            };
            out.set(lambda, RatFunc::from_poly(&b * &dims.get(&mu)?));
        }
    }
    Ok(out)
}

/// Values of `τ_k`, or zero outside `0..=n`.
fn tau_values(basis: &ConeBasis, k: isize) -> DerangementValues {
    if k < 0 || k as usize > basis.n() {
        return DerangementValues::zero(basis.n());
    }
    basis.tau_psi(k as usize).values()
}

/// Restriction of `τ_k^(n)` against
/// `q^k τ_k + 2q^{k-1}(q^k - 1) τ_{k-1} + q^{k-2}(q^{k-1} - 1)(q^k - 1) τ_{k-2}`
/// at level `n - 1`; out-of-range terms are dropped.
///
/// Negative powers of `q` only occur with vanishing factors, so every term
/// stays polynomial.
pub fn branch_tau_check(upper: &ConeBasis, lower: &ConeBasis, k: usize) -> bool {
    assert_eq!(upper.n(), lower.n() + 1, "levels must differ by one");
    let lhs = restrict(&tau_values(upper, k as isize));
    let k = k as isize;
    let qk = |e: isize| RatFunc::q_pow(e as i64);
    let qm1 = |e: isize| RatFunc::q_pow(e as i64) - RatFunc::one();
    let c0 = qk(k);
    let c1 = RatFunc::from_int(2) * qk(k - 1) * qm1(k);
    let c2 = qk(k - 2) * qm1(k - 1) * qm1(k);
    let rhs = tau_values(lower, k)
        .scale(&c0)
        .add(&tau_values(lower, k - 1).scale(&c1))
        .add(&tau_values(lower, k - 2).scale(&c2));
    lhs == rhs
}

/// Check `stable_tau(n, k)` against the eliminated basis for every
/// `k <= n/2`; returns the first mismatching `k`.
pub fn stable_mismatch(table: &CoeffTable, basis: &ConeBasis) -> Result<Option<usize>> {
    let n = table.n();
    for k in 0..=n / 2 {
        if stable_tau(n, k)? != *basis.tau(k) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Coefficient of `τ_j` in `ψ_k` for the stable range: `binom(k, j)_q`.
pub fn stable_transition(k: usize, j: usize) -> IntPoly {
    q_binomial(k, j as isize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_four_column() {
        let t = stable_tau(4, 2).unwrap();
        let p = |s: &[usize]| Partition::from_slice(s);
        let poly = |c: &[i64]| RatFunc::from_poly(IntPoly::from_i64s(c));
        assert_eq!(t.get(&p(&[2, 2])), RatFunc::one());
        assert_eq!(t.get(&p(&[2, 1, 1])), poly(&[0, 1]));
        assert_eq!(t.get(&p(&[2, 1])), poly(&[1, 1]));
        assert_eq!(t.get(&p(&[2])), RatFunc::one());
        assert_eq!(t.support().len(), 4);
        assert!(stable_tau(4, 3).is_err());
        let unit = stable_tau(0, 0).unwrap();
        assert_eq!(unit.get(&Partition::empty()), RatFunc::one());
    }
}
