//! The derangement character with no unipotent part, and the Kostka–Foulkes
//! identity behind it.

use super::block::BlockVector;
use super::coeffs::CoeffTable;
use super::psi::PsiCoeffs;
use crate::algebra::{paper_nq_factorial, q_binomial, q_factorial_ratio, IntPoly, RatFunc};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `Σ_{|λ| <= n-1} binom(n-1, |λ|)_q dim λ [λ]_n`.
pub fn hat_tau_blocks(table: &CoeffTable) -> BlockVector {
    let n = table.n();
    assert!(n >= 1);
    let mut b = BlockVector::new(n);
    for (i, l) in table.partitions().iter().enumerate() {
        if l.size() == n {
            continue;
        }
        let c = q_binomial(n - 1, l.size() as isize) * table.unipotent_dim(i);
        b.set(l.clone(), RatFunc::from_poly(c));
    }
    b
}

/// `ψ_n - Σ_{k<n} ((n-1)_q! / k_q!) q^k ψ_k` with `m_q! = Π_{i<=m} (1 - q^i)`.
pub fn hat_tau_psi(n: usize) -> PsiCoeffs {
    assert!(n >= 1);
    let mut c: alloc::vec::Vec<RatFunc> = (0..n)
        .map(|k| RatFunc::from_poly(-q_factorial_ratio(n - 1, k).shift(k)))
        .collect();
    c.push(RatFunc::one());
    PsiCoeffs::new(n, c)
}

/// `c_n(λ) - Σ_{k<n} ((n-1)_q!/k_q!) q^k c_k(λ)` for `|λ| = n`; identically
/// zero.
pub fn kirillov_identity_residual(table: &CoeffTable, lambda: &Partition) -> Result<IntPoly> {
    let n = table.n();
    if lambda.size() != n {
        return Err(Error::PreconditionViolation(alloc::format!(
            "residual needs |λ| = n = {n}, got {lambda}"
        )));
    }
    let i = table.index_of(lambda).expect("partition of n is tabulated");
    let mut acc = table.coeff(n, i).clone();
    for k in 0..n {
        let c = table.coeff(k, i);
        if !c.is_zero() {
            acc -= &(q_factorial_ratio(n - 1, k).shift(k) * c);
        }
    }
    Ok(acc)
}

/// The published closed form for the values of the no-unipotent-part
/// character: `(-1)^n q^{C(n,2)} n_q! δ_{rn} - (n-1)_q! r_q!`.
///
/// Agrees with the `ψ` expansion for `r < n`; at `r = n` it does not (for
/// `n = 1` it gives `2q - 2` against the true dimension `q - 2`), so it is
/// only used as a diagnostic.
pub fn hat_tau_closed_form(n: usize, r: usize) -> IntPoly {
    assert!(n >= 1 && r <= n);
    let tail = -(paper_nq_factorial(n - 1) * paper_nq_factorial(r));
    if r < n {
        return tail;
    }
    let head = paper_nq_factorial(n).shift(n * (n - 1) / 2);
    let head = if n % 2 == 1 { -head } else { head };
    head + tail
}
