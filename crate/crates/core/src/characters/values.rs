use alloc::vec::Vec;

use num_rational::BigRational;

use super::block::BlockVector;
use super::dims::{dim_rho_table, DimCache};
use crate::algebra::{frame_count, q_binomial, IntPoly, RatFunc};
use crate::error::Result;

/// A derangement function by its values: `values[r]` is the value at any
/// `g` with `r(g) = dim ker(g - 1) = r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerangementValues {
    n: usize,
    values: Vec<RatFunc>,
}

impl DerangementValues {
    pub fn new(n: usize, values: Vec<RatFunc>) -> Self {
        assert_eq!(values.len(), n + 1, "need a value for every r = 0..=n");
        DerangementValues { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[RatFunc] {
        &self.values
    }

    pub fn at(&self, r: usize) -> &RatFunc {
        &self.values[r]
    }

    /// The dimension `f(1_n)`.
    pub fn dimension(&self) -> &RatFunc {
        &self.values[self.n]
    }

    pub fn constant(n: usize, c: RatFunc) -> Self {
        Self::new(n, alloc::vec![c; n + 1])
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::new(self.n, self.values.iter().map(|v| v * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "level mismatch");
        Self::new(
            self.n,
            self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        Self::constant(n, RatFunc::zero())
    }

    /// Specialise at a rational `q`; `None` if some value has a pole there.
    pub fn eval(&self, q: &BigRational) -> Option<Vec<BigRational>> {
        self.values.iter().map(|v| v.eval(q)).collect()
    }
}

/// `ψ_k^(n)(g) = (q^r - 1)(q^r - q)...(q^r - q^{k-1})`.
pub fn psi_values(n: usize, k: usize) -> DerangementValues {
    assert!(k <= n);
    DerangementValues::new(n, (0..=n).map(|r| RatFunc::from_poly(frame_count(r, k))).collect())
}

/// `σ_k^(n)(g) = q^{k r}`.
pub fn sigma_values(n: usize, k: usize) -> DerangementValues {
    assert!(k <= n);
    DerangementValues::new(n, (0..=n).map(|r| RatFunc::from_poly(IntPoly::q_pow(k * r))).collect())
}

/// Restriction along `g ↦ g ⊕ 1`, which adds one fixed vector.
///
/// # Panics
/// At level 0.
pub fn restrict(f: &DerangementValues) -> DerangementValues {
    assert!(f.n() >= 1, "cannot restrict below level 0");
    DerangementValues::new(f.n() - 1, f.values()[1..].to_vec())
}

/// Block dimensions `dim [λ]_n` for a batch of diagrams at one level.
pub fn block_dims(n: usize, lambdas: &[&crate::partition::Partition]) -> Result<Vec<IntPoly>> {
    let rho = dim_rho_table(n)?;
    let mut cache = DimCache::new();
    lambdas
        .iter()
        .map(|l| {
            let s = l.size();
            Ok(q_binomial(n, s as isize) * cache.get(l)? * &rho[n - s])
        })
        .collect()
}

/// `Σ_λ f⟨λ⟩ dim [λ]_n == v(1_n)`.
pub fn dimension_check(f: &BlockVector, v: &DerangementValues) -> Result<bool> {
    assert_eq!(f.n(), v.n(), "level mismatch");
    let support = f.support();
    let dims = block_dims(f.n(), &support)?;
    let total: RatFunc = support
        .iter()
        .zip(dims)
        .map(|(l, d)| f.get(l) * RatFunc::from_poly(d))
        .sum();
    Ok(&total == v.dimension())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_value_examples() {
        let v = psi_values(4, 0);
        assert!(v.values().iter().all(RatFunc::is_one));
        let v = psi_values(3, 2);
        assert_eq!(
            v.at(2),
            &RatFunc::from_poly(IntPoly::from_i64s(&[-1, 0, 1]) * IntPoly::from_i64s(&[0, -1, 1]))
        );
        let two = BigRational::from_integer(2.into());
        assert_eq!(v.at(2).eval(&two).unwrap(), BigRational::from_integer(6.into()));
        assert!(v.at(1).is_zero());
    }

    #[test]
    fn restriction_of_sigma() {
        for n in 1..=6 {
            for k in 0..n {
                assert_eq!(
                    restrict(&sigma_values(n, k)),
                    sigma_values(n - 1, k).scale(&RatFunc::q_pow(k as i64))
                );
            }
        }
        let unit = DerangementValues::constant(3, RatFunc::one());
        assert_eq!(restrict(&unit), DerangementValues::constant(2, RatFunc::one()));
    }
}
