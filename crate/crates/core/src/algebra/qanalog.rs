//! Gaussian binomials and q-factorials.

use super::poly::IntPoly;

/// Number of `j`-dimensional subspaces of `F_q^k`, as a polynomial in `q`.
/// Zero when `j < 0` or `j > k`.
pub fn q_binomial(k: usize, j: isize) -> IntPoly {
    if j < 0 || j as usize > k {
        return IntPoly::zero();
    }
    let j = (j as usize).min(k - j as usize);
    let mut acc = IntPoly::one();
    // After step i, acc = binom(k, i+1)_q, which is a polynomial.
    for i in 0..j {
        acc = (&acc * &IntPoly::q_pow_minus_one(k - i))
            .div_exact(&IntPoly::q_pow_minus_one(i + 1))
            .expect("q-binomial partial products are polynomials");
    }
    acc
}

/// `(1 - q)(1 - q^2)...(1 - q^n)`; `1` for `n = 0`.
pub fn paper_nq_factorial(n: usize) -> IntPoly {
    q_factorial_ratio(n, 0)
}

/// `n_q! / k_q! = (1 - q^{k+1}) ... (1 - q^n)` for `k <= n`.
pub fn q_factorial_ratio(n: usize, k: usize) -> IntPoly {
    (k + 1..=n).map(|i| IntPoly::one() - IntPoly::q_pow(i)).product()
}

/// `(q^r - 1)(q^r - q)...(q^r - q^{k-1})`: injective `k`-frames in `F_q^r`.
pub fn frame_count(r: usize, k: usize) -> IntPoly {
    (0..k).map(|i| IntPoly::q_pow(r) - IntPoly::q_pow(i)).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert!(q_binomial(5, 0).is_one());
        assert!(q_binomial(3, 4).is_zero());
        assert!(q_binomial(3, -1).is_zero());
        assert_eq!(q_binomial(4, 2), IntPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(2, 1), IntPoly::from_i64s(&[1, 1]));
    }

    #[test]
    fn factorials() {
        assert!(paper_nq_factorial(0).is_one());
        assert_eq!(paper_nq_factorial(1), IntPoly::from_i64s(&[1, -1]));
        assert_eq!(paper_nq_factorial(2), IntPoly::from_i64s(&[1, -1, -1, 1]));
        assert_eq!(q_factorial_ratio(4, 2) * paper_nq_factorial(2), paper_nq_factorial(4));
    }
}
