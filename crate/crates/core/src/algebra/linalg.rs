//! Exact linear algebra: fraction-free elimination over ℤ[q] and Gaussian
//! elimination over any exact field.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use super::ratfunc::RatFunc;

/// Minimal exact-field interface used by [`rref`].
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// `rhs` is nonzero.
    fn div(&self, rhs: &Self) -> Self;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("nonzero pivot")
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = F::one().div(&m[r][c]);
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            let pivot_row = m[r].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// A basis of the right null space `{x : m x = 0}`.
pub fn nullspace<F: Field>(m: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = alloc::vec![F::zero(); cols];
            v[f] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = F::zero().sub(&work[row][f]);
            }
            v
        })
        .collect()
}

/// Rank over ℚ(q) by fraction-free (Bareiss) elimination with full pivot
/// search. All intermediate entries stay in ℤ[q].
pub fn bareiss_rank(m: &[Vec<IntPoly>]) -> usize {
    let mut a: Vec<Vec<IntPoly>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = IntPoly::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][c] = IntPoly::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    debug_assert!(sampled_rank(m) <= r, "evaluation rank exceeds symbolic rank");
    r
}

/// Numeric rank of `m` specialised at `q = x`.
pub fn evaluated_rank(m: &[Vec<IntPoly>], x: &BigRational) -> usize {
    let ev: Vec<Vec<BigRational>> = m.iter().map(|row| row.iter().map(|p| p.eval(x)).collect()).collect();
    rank(&ev)
}

/// Maximum evaluation rank over three rational points `q > 1`. Never exceeds
/// the symbolic rank; equals it unless every sample is a degenerate point.
pub fn sampled_rank(m: &[Vec<IntPoly>]) -> usize {
    [(3, 2), (7, 3), (11, 2)]
        .iter()
        .map(|&(n, d)| evaluated_rank(m, &BigRational::new(BigInt::from(n), BigInt::from(d))))
        .max()
        .unwrap_or(0)
}

/// Determinant of a square integer matrix (Bareiss).
pub fn int_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a = m.to_vec();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        let Some(pr) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if pr != k {
            a.swap(k, pr);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        sign * &a[n - 1][n - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn bareiss_examples() {
        let id: Vec<Vec<IntPoly>> = (0..3)
            .map(|i| (0..3).map(|j| IntPoly::from((i == j) as i64)).collect())
            .collect();
        assert_eq!(bareiss_rank(&id), 3);
        let singular = alloc::vec![alloc::vec![p(&[0, 1]), p(&[0, 0, 1])], alloc::vec![p(&[1]), p(&[0, 1])],];
        assert_eq!(bareiss_rank(&singular), 1);
        let regular = alloc::vec![alloc::vec![p(&[1]), p(&[1])], alloc::vec![p(&[1]), p(&[0, 1])]];
        assert_eq!(bareiss_rank(&regular), 2);
        // Degenerate at q = 1 only, which is never sampled.
        assert_eq!(sampled_rank(&regular), 2);
        assert_eq!(evaluated_rank(&regular, &BigRational::from_integer(1.into())), 1);
    }

    #[test]
    fn nullspace_of_rank_deficient_matrix() {
        let m: Vec<Vec<BigRational>> = [[1, 2, 3], [2, 4, 6]]
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &m {
                let dot: BigRational = row.iter().zip(&v).map(|(a, b)| a * b).sum();
                assert!(Zero::is_zero(&dot));
            }
        }
    }

    #[test]
    fn integer_determinant() {
        let m: Vec<Vec<BigInt>> = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(int_det(&m), BigInt::from(18));
        let swap: Vec<Vec<BigInt>> = [[0, 1], [1, 0]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(int_det(&swap), BigInt::from(-1));
    }
}
