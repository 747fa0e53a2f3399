//! Multiplicities `c_k^(n)(λ)` of the blocks `[λ]_n` in `ψ_k^(n)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::block::BlockVector;
use super::dims::DimCache;
use crate::algebra::{q_binomial, IntPoly, RatFunc};
use crate::budget::{Budget, Unlimited};
use crate::error::{Error, Result};
use crate::partition::{all_partitions_up_to, hstrip_minus, Partition};

/// `Σ_{μ ∈ H^-_m(λ)} dim μ`, straight from the strip enumeration.
pub fn strip_sum_general(lambda: &Partition, m: usize, dims: &mut DimCache) -> Result<IntPoly> {
    hstrip_minus(lambda, m)
        .iter()
        .map(|mu| dims.get(mu))
        .sum::<Result<IntPoly>>()
}

/// The strip sum, collapsing to `binom(|λ|-m, λ_1-m)_q dim(λ minus first row)`
/// when `λ_2 <= m <= λ_1` (every strip then re-attaches to the lower rows
/// freely).
pub fn strip_sum(lambda: &Partition, m: usize, dims: &mut DimCache) -> Result<IntPoly> {
    let (l1, l2) = (lambda.first_row(), lambda.part(2));
    if m > l1 {
        return Ok(IntPoly::zero());
    }
    if l2 <= m {
        let nu = lambda.without_first_row();
        let top = lambda.size() - m;
        return Ok(q_binomial(top, (l1 - m) as isize) * dims.get(&nu)?);
    }
    strip_sum_general(lambda, m, dims)
}

fn check_args(n: usize, k: usize, lambda: &Partition) -> Result<()> {
    if k > n || lambda.size() > n {
        return Err(Error::PreconditionViolation(alloc::format!(
            "coeff_c needs k <= n and |λ| <= n (n={n}, k={k}, λ={lambda})"
        )));
    }
    Ok(())
}

pub(crate) fn coeff_c_cached(n: usize, k: usize, lambda: &Partition, dims: &mut DimCache) -> Result<IntPoly> {
    check_args(n, k, lambda)?;
    if lambda.first_row() < n - k {
        return Ok(IntPoly::zero());
    }
    let j = n - lambda.size();
    let b = q_binomial(k, j as isize);
    if b.is_zero() {
        return Ok(b);
    }
    Ok(b * strip_sum(lambda, n - k, dims)?)
}

/// `c_k^(n)(λ)`: zero when `λ_1 < n-k`, otherwise
/// `binom(k, n-|λ|)_q Σ_{μ ∈ H^-_{n-k}(λ)} dim μ`.
pub fn coeff_c(n: usize, k: usize, lambda: &Partition) -> Result<IntPoly> {
    coeff_c_cached(n, k, lambda, &mut DimCache::new())
}

/// All multiplicities at one level `n`, with rows in canonical partition order.
#[derive(Debug, Clone)]
pub struct CoeffTable {
    n: usize,
    partitions: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    dims: Vec<IntPoly>,
    /// `rows[i][k] = c_k^(n)(partitions[i])`
    rows: Vec<Vec<IntPoly>>,
}

impl CoeffTable {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_budget(n, &Unlimited)
    }

    /// As [`CoeffTable::new`], polling `budget` once per diagram.
    pub fn with_budget<B: Budget + ?Sized>(n: usize, budget: &B) -> Result<Self> {
        let partitions = all_partitions_up_to(n);
        let mut cache = DimCache::new();
        let dims = partitions.iter().map(|l| cache.get(l)).collect::<Result<Vec<_>>>()?;
        let rows = partitions
            .iter()
            .map(|l| {
                if budget.exhausted() {
                    return Err(Error::BudgetExceeded);
                }
                (0..=n)
                    .map(|k| coeff_c_cached(n, k, l, &mut cache))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(n, partitions, dims, rows))
    }

    /// Assemble from precomputed parts (e.g. a cache file). The caller is
    /// responsible for the contents; shapes are checked.
    pub fn from_parts(n: usize, partitions: Vec<Partition>, dims: Vec<IntPoly>, rows: Vec<Vec<IntPoly>>) -> Self {
        assert_eq!(partitions.len(), rows.len());
        assert_eq!(partitions.len(), dims.len());
        assert!(rows.iter().all(|r| r.len() == n + 1));
        let index = partitions.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        CoeffTable {
            n,
            partitions,
            index,
            dims,
            rows,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    /// `c_k(λ)` for the `i`-th partition.
    pub fn coeff(&self, k: usize, i: usize) -> &IntPoly {
        &self.rows[i][k]
    }

    pub fn coeff_of(&self, k: usize, lambda: &Partition) -> Option<&IntPoly> {
        self.index_of(lambda).map(|i| &self.rows[i][k])
    }

    /// `(c_0(λ), ..., c_n(λ))` for the `i`-th partition.
    pub fn row(&self, i: usize) -> &[IntPoly] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<IntPoly>] {
        &self.rows
    }

    pub fn unipotent_dim(&self, i: usize) -> &IntPoly {
        &self.dims[i]
    }

    pub fn dims(&self) -> &[IntPoly] {
        &self.dims
    }

    /// `ψ_k^(n)` in the block basis.
    pub fn psi_block(&self, k: usize) -> BlockVector {
        let mut b = BlockVector::new(self.n);
        for (i, l) in self.partitions.iter().enumerate() {
            let c = &self.rows[i][k];
            if !c.is_zero() {
                b.set(l.clone(), RatFunc::from_poly(c.clone()));
            }
        }
        b
    }
}

/// `ψ_k^(n)` in the block basis.
pub fn psi_block(n: usize, k: usize) -> Result<BlockVector> {
    Ok(CoeffTable::new(n)?.psi_block(k))
}
