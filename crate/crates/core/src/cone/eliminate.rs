use alloc::vec::Vec;

use crate::algebra::{ratfunc_cmp_q_gt_1, QOrdering, RatFunc};
use crate::budget::{Budget, Unlimited};
use crate::characters::{BlockVector, CoeffTable, PsiCoeffs};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Output of the elimination algorithm at level `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeBasis {
    n: usize,
    taus: Vec<BlockVector>,
    tau_psi: Vec<PsiCoeffs>,
    transition: Vec<Vec<RatFunc>>,
}

impl ConeBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn taus(&self) -> &[BlockVector] {
        &self.taus
    }

    pub fn tau(&self, k: usize) -> &BlockVector {
        &self.taus[k]
    }

    /// `τ_k` in `ψ`-coordinates.
    pub fn tau_psi(&self, k: usize) -> &PsiCoeffs {
        &self.tau_psi[k]
    }

    /// Lower unitriangular `a` with `ψ_k = Σ_j a[k][j] τ_j`.
    pub fn transition(&self) -> &[Vec<RatFunc>] {
        &self.transition
    }

    /// `τ`-coordinates of `Σ_k x_k ψ_k`.
    pub fn psi_to_tau(&self, x: &PsiCoeffs) -> Vec<RatFunc> {
        assert_eq!(x.n(), self.n, "level mismatch");
        (0..=self.n)
            .map(|j| {
                x.coeffs()
                    .iter()
                    .zip(&self.transition)
                    .skip(j)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, row)| c * &row[j])
                    .sum()
            })
            .collect()
    }

    /// `Σ_j y_j τ_j` in `ψ`-coordinates.
    pub fn tau_to_psi(&self, y: &[RatFunc]) -> PsiCoeffs {
        assert_eq!(y.len(), self.n + 1);
        let mut out = alloc::vec![RatFunc::zero(); self.n + 1];
        for (yj, t) in y.iter().zip(&self.tau_psi) {
            if yj.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(t.coeffs()) {
                *o = &*o + &(yj * c);
            }
        }
        PsiCoeffs::new(self.n, out)
    }
}

pub fn eliminate(table: &CoeffTable) -> Result<ConeBasis> {
    eliminate_with_budget(table, &Unlimited)
}

/// Build `τ_0, ..., τ_n`: each `τ_k` starts from `ψ_k` and subtracts the
/// largest multiple of `τ_0, τ_1, ...` in turn that keeps every block
/// coefficient nonnegative for all `q > 1`.
pub fn eliminate_with_budget<B: Budget + ?Sized>(table: &CoeffTable, budget: &B) -> Result<ConeBasis> {
    let n = table.n();
    let mut taus: Vec<BlockVector> = Vec::with_capacity(n + 1);
    let mut tau_psi: Vec<PsiCoeffs> = Vec::with_capacity(n + 1);
    let mut transition = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut cur = table.psi_block(k);
        let mut cur_psi = PsiCoeffs::unit(n, k).into_coeffs();
        let mut row = alloc::vec![RatFunc::zero(); n + 1];
        row[k] = RatFunc::one();
        for j in 0..k {
            if budget.exhausted() {
                return Err(Error::BudgetExceeded);
            }
            let a = uniform_min_ratio(&cur, &taus[j], k, j + 1, budget)?;
            if !a.is_zero() {
                cur = cur.add_scaled(&-&a, &taus[j]);
                for (c, t) in cur_psi.iter_mut().zip(tau_psi[j].coeffs()) {
                    *c = &*c - &(&a * t);
                }
            }
            row[j] = a;
        }
        if let Some((l, verdict)) = cur.first_non_character_coeff() {
            return Err(Error::PreconditionViolation(alloc::format!(
                "τ_{k} has coefficient {} at {l} with verdict {verdict:?}",
                cur.get(l)
            )));
        }
        taus.push(cur);
        tau_psi.push(PsiCoeffs::new(n, cur_psi));
        transition.push(row);
    }
    Ok(ConeBasis {
        n,
        taus,
        tau_psi,
        transition,
    })
}

/// `min_λ cur⟨λ⟩ / prev⟨λ⟩` over the support of `prev`, required to be
/// attained by one `λ` uniformly in `q > 1`.
fn uniform_min_ratio<B: Budget + ?Sized>(
    cur: &BlockVector,
    prev: &BlockVector,
    k: usize,
    j: usize,
    budget: &B,
) -> Result<RatFunc> {
    let mut ratios: Vec<(&Partition, RatFunc)> = Vec::new();
    for (l, d) in prev.iter() {
        match cur.get_ref(l) {
            None => return Ok(RatFunc::zero()),
            Some(c) => ratios.push((l, c.checked_div(d)?)),
        }
    }
    let Some(mut best) = ratios.first().map(|(_, r)| r) else {
        return Ok(RatFunc::zero());
    };
    for (_, r) in &ratios[1..] {
        if ratfunc_cmp_q_gt_1(r, best)? == QOrdering::Less {
            best = r;
        }
    }
    let is_min = |cand: &RatFunc| -> Result<bool> {
        for (_, r) in &ratios {
            if budget.exhausted() {
                return Err(Error::BudgetExceeded);
            }
            if !matches!(ratfunc_cmp_q_gt_1(cand, r)?, QOrdering::Less | QOrdering::Equal) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    if is_min(best)? {
        return Ok(best.clone());
    }
    for (_, r) in &ratios {
        if is_min(r)? {
            return Ok(r.clone());
        }
    }
    Err(Error::NoUniformMinimizer {
        k,
        j,
        candidates: ratios.into_iter().map(|(l, _)| l.clone()).collect(),
    })
}
