//! The `ψ` and `σ` bases of derangement functions and the transforms
//! between them.

use alloc::vec::Vec;

use super::block::BlockVector;
use super::coeffs::CoeffTable;
use super::values::DerangementValues;
use crate::algebra::{frame_count, q_binomial, IntPoly, RatFunc};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `Σ_k coeffs[k] ψ_k^(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiCoeffs {
    n: usize,
    coeffs: Vec<RatFunc>,
}

impl PsiCoeffs {
    /// # Panics
    /// If `coeffs.len() != n + 1`.
    pub fn new(n: usize, coeffs: Vec<RatFunc>) -> Self {
        assert_eq!(coeffs.len(), n + 1, "need exactly n+1 coefficients");
        PsiCoeffs { n, coeffs }
    }

    pub fn unit(n: usize, k: usize) -> Self {
        let mut c = alloc::vec![RatFunc::zero(); n + 1];
        c[k] = RatFunc::one();
        Self::new(n, c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<RatFunc> {
        self.coeffs
    }

    pub fn scale(&self, c: &RatFunc) -> PsiCoeffs {
        PsiCoeffs::new(self.n, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn to_blocks(&self, table: &CoeffTable) -> BlockVector {
        assert_eq!(table.n(), self.n, "level mismatch");
        let mut out = BlockVector::new(self.n);
        for (i, l) in table.partitions().iter().enumerate() {
            let v: RatFunc = self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(k, x)| !x.is_zero() && !table.coeff(*k, i).is_zero())
                .map(|(k, x)| x * &RatFunc::from_poly(table.coeff(k, i).clone()))
                .sum();
            out.set(l.clone(), v);
        }
        out
    }

    /// Recover `ψ`-coordinates of a block vector, or `NotDerangement` if it
    /// is outside their span.
    ///
    /// The one-row blocks `(n-k)` (and `∅` for `k = n`) give a unitriangular
    /// system: `c_j((n-k)) = binom(j, k)_q` for `j >= k` and 0 below.
    pub fn from_blocks(f: &BlockVector, table: &CoeffTable) -> Result<PsiCoeffs> {
        let n = table.n();
        assert_eq!(f.n(), n, "level mismatch");
        let mut x = alloc::vec![RatFunc::zero(); n + 1];
        for k in (0..=n).rev() {
            let row = Partition::row(n - k);
            let i = table.index_of(&row).expect("one-row diagram in table");
            let mut v = f.get(&row);
            for (j, xj) in x.iter().enumerate().skip(k + 1) {
                if !xj.is_zero() {
                    v = v - xj * &RatFunc::from_poly(table.coeff(j, i).clone());
                }
            }
            debug_assert!(table.coeff(k, i).is_one());
            x[k] = v;
        }
        let coords = PsiCoeffs::new(n, x);
        if coords.to_blocks(table) != *f {
            return Err(Error::NotDerangement);
        }
        Ok(coords)
    }

    pub fn values(&self) -> DerangementValues {
        let n = self.n;
        let values = (0..=n)
            .map(|r| {
                self.coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| x * &RatFunc::from_poly(frame_count(r, k)))
                    .sum()
            })
            .collect();
        DerangementValues::new(n, values)
    }
}

/// `σ_k^(n) = Σ_j binom(k, j)_q ψ_j^(n)`.
pub fn sigma_in_psi(n: usize, k: usize) -> PsiCoeffs {
    assert!(k <= n);
    PsiCoeffs::new(
        n,
        (0..=n).map(|j| RatFunc::from_poly(q_binomial(k, j as isize))).collect(),
    )
}

/// `ψ_k^(n) = Σ_j (-1)^{k-j} q^{C(k-j, 2)} binom(k, j)_q σ_j^(n)`;
/// returns the `n+1` coefficients over `σ_0 .. σ_n`.
pub fn psi_in_sigma(n: usize, k: usize) -> Vec<IntPoly> {
    assert!(k <= n);
    (0..=n)
        .map(|j| {
            if j > k {
                return IntPoly::zero();
            }
            let d = k - j;
            let t = q_binomial(k, j as isize).shift(d * d.saturating_sub(1) / 2);
            if d % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .collect()
}

/// Re-express `σ`-coordinates in the `ψ` basis.
pub fn sigma_coords_to_psi(n: usize, sigma: &[RatFunc]) -> PsiCoeffs {
    assert_eq!(sigma.len(), n + 1);
    let mut out = alloc::vec![RatFunc::zero(); n + 1];
    for (k, s) in sigma.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        for (j, b) in sigma_in_psi(n, k).coeffs().iter().enumerate() {
            out[j] = &out[j] + &(s * b);
        }
    }
    PsiCoeffs::new(n, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_psi_examples() {
        let s0 = sigma_in_psi(3, 0);
        assert_eq!(s0, PsiCoeffs::unit(3, 0));
        let s2 = sigma_in_psi(4, 2);
        assert_eq!(
            s2.coeffs(),
            &[
                RatFunc::one(),
                RatFunc::from_poly(IntPoly::from_i64s(&[1, 1])),
                RatFunc::one(),
                RatFunc::zero(),
                RatFunc::zero()
            ]
        );
        assert_eq!(
            psi_in_sigma(4, 2),
            alloc::vec![
                IntPoly::q(),
                IntPoly::from_i64s(&[-1, -1]),
                IntPoly::one(),
                IntPoly::zero(),
                IntPoly::zero()
            ]
        );
    }

    #[test]
    fn blocks_round_trip() {
        let t = CoeffTable::new(5).unwrap();
        for k in 0..=5 {
            let b = t.psi_block(k);
            assert_eq!(PsiCoeffs::from_blocks(&b, &t).unwrap(), PsiCoeffs::unit(5, k));
        }
        let mut bogus = BlockVector::new(5);
        bogus.set(Partition::from_slice(&[3, 2]), RatFunc::one());
        assert_eq!(PsiCoeffs::from_blocks(&bogus, &t), Err(Error::NotDerangement));
    }
}
