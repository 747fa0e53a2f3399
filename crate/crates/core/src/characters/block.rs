use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::algebra::{ratfunc_sign_on_q_gt_1, RatFunc, SignVerdict};
use crate::partition::Partition;

/// A class function `Σ_λ f⟨λ⟩ [λ]_n`. Only nonzero coefficients are stored;
/// iteration follows the canonical partition order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockVector {
    n: usize,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl BlockVector {
    pub fn new(n: usize) -> Self {
        BlockVector {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, lambda: &Partition) -> RatFunc {
        self.coeffs.get(lambda).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn get_ref(&self, lambda: &Partition) -> Option<&RatFunc> {
        self.coeffs.get(lambda)
    }

    /// Set `f⟨λ⟩`; a zero value removes the entry.
    ///
    /// # Panics
    /// If `|λ| > n`.
    pub fn set(&mut self, lambda: Partition, value: RatFunc) {
        assert!(lambda.size() <= self.n, "block {lambda} exceeds level {}", self.n);
        if value.is_zero() {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, value);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter()
    }

    /// Diagrams with a nonzero coefficient.
    pub fn support(&self) -> Vec<&Partition> {
        self.coeffs.keys().collect()
    }

    pub fn in_support(&self, lambda: &Partition) -> bool {
        self.coeffs.contains_key(lambda)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &RatFunc) -> BlockVector {
        let mut out = BlockVector::new(self.n);
        if c.is_zero() {
            return out;
        }
        for (l, v) in &self.coeffs {
            out.coeffs.insert(l.clone(), v * c);
        }
        out
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &RatFunc, other: &BlockVector) -> BlockVector {
        assert_eq!(self.n, other.n, "level mismatch");
        let mut out = self.clone();
        if c.is_zero() {
            return out;
        }
        for (l, v) in &other.coeffs {
            let nv = out.get(l) + v * c;
            out.set(l.clone(), nv);
        }
        out
    }

    pub fn add(&self, other: &BlockVector) -> BlockVector {
        self.add_scaled(&RatFunc::one(), other)
    }

    pub fn sub(&self, other: &BlockVector) -> BlockVector {
        self.add_scaled(&-RatFunc::one(), other)
    }

    /// First coefficient (canonical order) that is neither positive on
    /// `q > 1` nor zero, with its verdict.
    pub fn first_non_character_coeff(&self) -> Option<(&Partition, SignVerdict)> {
        self.coeffs.iter().find_map(|(l, v)| {
            let s = ratfunc_sign_on_q_gt_1(v);
            (!s.is_character_coeff()).then_some((l, s))
        })
    }

    /// Every coefficient positive on `q > 1` (absent ones are zero).
    pub fn is_character(&self) -> bool {
        self.first_non_character_coeff().is_none()
    }
}
