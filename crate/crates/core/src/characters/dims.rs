//! Dimensions: unipotent characters, the non-unipotent remainder `ρ_m`, and
//! blocks `[λ]_n`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::algebra::{frame_count, q_binomial, IntPoly};
use crate::error::Result;
use crate::partition::{all_partitions_up_to, hook_lengths, n_stat, Partition};

/// q-hook formula: `(q-1)...(q^n-1) q^{n(λ)} / Π_b (q^{h(b)} - 1)`.
pub fn unipotent_dim(lambda: &Partition) -> Result<IntPoly> {
    let n = lambda.size();
    let mut acc: IntPoly = (1..=n).map(IntPoly::q_pow_minus_one).product();
    for h in hook_lengths(lambda) {
        acc = acc.div_exact(&IntPoly::q_pow_minus_one(h))?;
    }
    Ok(acc.shift(n_stat(lambda)))
}

/// Memo for [`unipotent_dim`].
#[derive(Debug, Default, Clone)]
pub struct DimCache {
    dims: BTreeMap<Partition, IntPoly>,
}

impl DimCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, lambda: &Partition) -> Result<IntPoly> {
        if let Some(d) = self.dims.get(lambda) {
            return Ok(d.clone());
        }
        let d = unipotent_dim(lambda)?;
        self.dims.insert(lambda.clone(), d.clone());
        Ok(d)
    }
}

/// `|GL(m, q)|`.
pub fn group_order(m: usize) -> IntPoly {
    frame_count(m, m)
}

/// Dimensions of `ρ_0 .. ρ_max`.
///
/// Obtained from the decomposition of the regular character:
/// `|G_m| = Σ_{|λ| <= m} (binom(m,|λ|)_q dim λ)^2 dim ρ_{m-|λ|}`.
pub fn dim_rho_table(max: usize) -> Result<Vec<IntPoly>> {
    let mut cache = DimCache::new();
    let mut rho: Vec<IntPoly> = Vec::with_capacity(max + 1);
    for m in 0..=max {
        let mut acc = group_order(m);
        for lambda in all_partitions_up_to(m) {
            if lambda.is_empty() {
                continue;
            }
            let s = lambda.size();
            let c = q_binomial(m, s as isize) * cache.get(&lambda)?;
            acc -= &(&c * &c * &rho[m - s]);
        }
        rho.push(acc);
    }
    Ok(rho)
}

pub fn dim_rho(m: usize) -> Result<IntPoly> {
    Ok(dim_rho_table(m)?.pop().unwrap())
}

/// `dim [λ]_n = binom(n, |λ|)_q dim λ dim ρ_{n-|λ|}`.
pub fn block_dim(n: usize, lambda: &Partition) -> Result<IntPoly> {
    let s = lambda.size();
    Ok(q_binomial(n, s as isize) * unipotent_dim(lambda)? * dim_rho(n - s)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(p: &[usize]) -> Partition {
        Partition::from_slice(p)
    }

    #[test]
    fn unipotent_examples() {
        assert!(unipotent_dim(&pt(&[5])).unwrap().is_one());
        assert_eq!(unipotent_dim(&Partition::column(4)).unwrap(), IntPoly::q_pow(6));
        assert_eq!(unipotent_dim(&pt(&[2, 1])).unwrap(), IntPoly::from_i64s(&[0, 1, 1]));
        assert_eq!(
            unipotent_dim(&pt(&[2, 2])).unwrap(),
            IntPoly::from_i64s(&[0, 0, 1, 0, 1])
        );
        assert!(unipotent_dim(&Partition::empty()).unwrap().is_one());
    }

    #[test]
    fn rho_dimensions() {
        let rho = dim_rho_table(2).unwrap();
        assert!(rho[0].is_one());
        assert_eq!(rho[1], IntPoly::from_i64s(&[-2, 1]));
        assert_eq!(rho[2], IntPoly::from_i64s(&[1, 4, -2, -2, 1]));
    }

    #[test]
    fn block_dimension_examples() {
        assert!(block_dim(3, &pt(&[3])).unwrap().is_one());
        assert_eq!(
            block_dim(2, &pt(&[1])).unwrap(),
            IntPoly::from_i64s(&[1, 1]) * IntPoly::from_i64s(&[-2, 1])
        );
        assert_eq!(
            block_dim(3, &pt(&[2, 1])).unwrap(),
            unipotent_dim(&pt(&[2, 1])).unwrap()
        );
    }
}
