//! Brute force over `GL(n, p)` for tiny `n` and prime `p`: fixed-point
//! counts and exact positive-semidefiniteness of class functions.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::linalg::int_det;
use crate::error::{Error, Result};

pub const GROUP_GUARD: u64 = 20_000;
pub const GRAM_GUARD: u64 = 500;
pub const FIXED_POINT_GUARD: u64 = 1 << 20;

/// An `n × n` matrix over `𝔽_p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FFMatrix {
    n: usize,
    p: u32,
    entries: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::PreconditionViolation(alloc::format!("{p} is not prime")))
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let (mut b, mut e) = (a as u64 % p as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Row-reduce in place over `𝔽_p`; returns the rank.
fn rank_mod(rows: usize, cols: usize, a: &mut [u32], p: u32) -> usize {
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            a.swap(r * cols + j, pr * cols + j);
        }
        let inv = inv_mod(a[r * cols + c], p);
        for j in 0..cols {
            a[r * cols + j] = (a[r * cols + j] as u64 * inv as u64 % p as u64) as u32;
        }
        for i in 0..rows {
            if i == r || a[i * cols + c] == 0 {
                continue;
            }
            let f = a[i * cols + c] as u64;
            for j in 0..cols {
                let v = (a[i * cols + j] as u64 + p as u64 * p as u64 - f * a[r * cols + j] as u64) % p as u64;
                a[i * cols + j] = v as u32;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

impl FFMatrix {
    /// Entries are reduced mod `p`.
    pub fn new(n: usize, p: u32, entries: Vec<u32>) -> Result<Self> {
        check_prime(p)?;
        if entries.len() != n * n {
            return Err(Error::PreconditionViolation(alloc::format!(
                "{} entries for a {n}×{n} matrix",
                entries.len()
            )));
        }
        Ok(FFMatrix {
            n,
            p,
            entries: entries.into_iter().map(|x| x % p).collect(),
        })
    }

    /// Like [`FFMatrix::new`] but rejects singular matrices.
    pub fn group_element(n: usize, p: u32, entries: Vec<u32>) -> Result<Self> {
        let m = Self::new(n, p, entries)?;
        if !m.is_invertible() {
            return Err(Error::PreconditionViolation(alloc::string::String::from(
                "matrix is singular",
            )));
        }
        Ok(m)
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut e = alloc::vec![0; n * n];
        for i in 0..n {
            e[i * n + i] = 1 % p;
        }
        FFMatrix { n, p, entries: e }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn rank(&self) -> usize {
        let mut a = self.entries.clone();
        rank_mod(self.n, self.n, &mut a, self.p)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    pub fn mul(&self, other: &FFMatrix) -> FFMatrix {
        assert_eq!((self.n, self.p), (other.n, other.p));
        let n = self.n;
        let p = self.p as u64;
        let entries = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                ((0..n)
                    .map(|l| self.get(i, l) as u64 * other.get(l, j) as u64)
                    .sum::<u64>()
                    % p) as u32
            })
            .collect();
        FFMatrix { n, p: self.p, entries }
    }

    pub fn inverse(&self) -> Option<FFMatrix> {
        let n = self.n;
        let w = 2 * n;
        let mut a = alloc::vec![0u32; n * w];
        for i in 0..n {
            for j in 0..n {
                a[i * w + j] = self.get(i, j);
            }
            a[i * w + n + i] = 1 % self.p;
        }
        if rank_mod(n, w, &mut a, self.p) < n || (0..n).any(|i| a[i * w + i] != 1) {
            return None;
        }
        let entries = (0..n * n).map(|ij| a[(ij / n) * w + n + ij % n]).collect();
        Some(FFMatrix { n, p: self.p, entries })
    }

    /// `g ⊕ 1`, one size larger.
    pub fn direct_sum_one(&self) -> FFMatrix {
        let m = self.n + 1;
        let mut e = alloc::vec![0; m * m];
        for i in 0..self.n {
            for j in 0..self.n {
                e[i * m + j] = self.get(i, j);
            }
        }
        e[m * m - 1] = 1 % self.p;
        FFMatrix {
            n: m,
            p: self.p,
            entries: e,
        }
    }
}

/// `|GL(n, p)| = Π_{i<n} (p^n - p^i)`, or `None` on overflow.
pub fn gl_order(n: usize, p: u32) -> Option<u64> {
    let pn = (p as u64).checked_pow(n as u32)?;
    (0..n).try_fold(1u64, |acc, i| acc.checked_mul(pn - (p as u64).pow(i as u32)))
}

/// Every invertible `n × n` matrix over `𝔽_p`, in lexicographic order.
pub fn enumerate_gl(n: usize, p: u32) -> Result<Vec<FFMatrix>> {
    check_prime(p)?;
    let order = gl_order(n, p).unwrap_or(u64::MAX);
    if order > GROUP_GUARD {
        return Err(Error::SizeGuard {
            what: "group order",
            size: order,
            limit: GROUP_GUARD,
        });
    }
    let total = (p as u64).pow((n * n) as u32);
    let mut out = Vec::with_capacity(order as usize);
    let mut entries = alloc::vec![0u32; n * n];
    for code in 0..total {
        let mut c = code;
        for e in entries.iter_mut().rev() {
            *e = (c % p as u64) as u32;
            c /= p as u64;
        }
        let m = FFMatrix {
            n,
            p,
            entries: entries.clone(),
        };
        if m.is_invertible() {
            out.push(m);
        }
    }
    Ok(out)
}

/// `r(g) = dim ker(g - 1)`.
pub fn r_of(g: &FFMatrix) -> usize {
    let n = g.n;
    let mut a: Vec<u32> = (0..n * n)
        .map(|ij| {
            let d = if ij / n == ij % n { 1 } else { 0 };
            (g.entries[ij] + g.p - d) % g.p
        })
        .collect();
    n - rank_mod(n, n, &mut a, g.p)
}

/// Number of `n × k` matrices `x` with `g x = x`, optionally only those of
/// rank `k`.
pub fn count_fixed(g: &FFMatrix, k: usize, rank_exact: bool) -> Result<u64> {
    let (n, p) = (g.n, g.p as u64);
    let size = (n * k) as u32;
    let total = p.checked_pow(size).filter(|&t| k <= 3 && t <= FIXED_POINT_GUARD);
    let Some(total) = total else {
        return Err(Error::SizeGuard {
            what: "fixed-point enumeration",
            size: p.saturating_pow(size),
            limit: FIXED_POINT_GUARD,
        });
    };
    let mut count = 0;
    let mut x = alloc::vec![0u32; n * k];
    for code in 0..total {
        let mut c = code;
        for e in x.iter_mut() {
            *e = (c % p) as u32;
            c /= p;
        }
        let fixed = (0..n).all(|i| {
            (0..k).all(|j| {
                let gx = (0..n).map(|l| g.get(i, l) as u64 * x[l * k + j] as u64).sum::<u64>() % p;
                gx == x[i * k + j] as u64
            })
        });
        if !fixed {
            continue;
        }
        if rank_exact {
            let mut a = x.clone();
            if rank_mod(n, k, &mut a, g.p) != k {
                continue;
            }
        }
        count += 1;
    }
    Ok(count)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PsdVerdict {
    /// All pivots of the symmetric elimination were nonnegative.
    Psd { rank: usize },
    /// The principal minor on `indices` has determinant `minor < 0`.
    NotPsd { indices: Vec<usize>, minor: BigRational },
}

impl PsdVerdict {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdVerdict::Psd { .. })
    }
}

/// Gram matrix `M[g][h] = f(r(g h^{-1}))` of a derangement function given by
/// its values `f[r]`.
pub fn gram_matrix(values: &[BigRational], group: &[FFMatrix]) -> Result<Vec<Vec<BigRational>>> {
    let size = group.len() as u64;
    if size > GRAM_GUARD {
        return Err(Error::SizeGuard {
            what: "Gram matrix order",
            size,
            limit: GRAM_GUARD,
        });
    }
    let inverses: Vec<FFMatrix> = group
        .iter()
        .map(|h| h.inverse().expect("group elements are invertible"))
        .collect();
    Ok(group
        .iter()
        .map(|g| inverses.iter().map(|hi| values[r_of(&g.mul(hi))].clone()).collect())
        .collect())
}

/// Exact determinant of the principal submatrix on `indices`.
pub fn principal_minor(m: &[Vec<BigRational>], indices: &[usize]) -> BigRational {
    let l = indices
        .iter()
        .flat_map(|&i| indices.iter().map(move |&j| m[i][j].denom().clone()))
        .fold(BigInt::one(), |l, d| l.lcm(&d));
    let scaled: Vec<Vec<BigInt>> = indices
        .iter()
        .map(|&i| {
            indices
                .iter()
                .map(|&j| (&m[i][j] * BigRational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    BigRational::new(int_det(&scaled), l.pow(indices.len() as u32))
}

/// Fraction-free symmetric elimination with diagonal pivoting. After each
/// step the diagonal entry at `i` is the principal minor on the pivots and
/// `i` (up to a positive scale), so a negative entry, or a zero diagonal
/// beside a nonzero off-diagonal entry, yields a principal minor with
/// negative determinant.
pub fn certify_psd_matrix(m: &[Vec<BigRational>]) -> PsdVerdict {
    let n = m.len();
    let l = m.iter().flatten().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|x| x.numer() * (&l / x.denom())).collect())
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    loop {
        if let Some(&i) = active.iter().find(|&&i| a[i][i].is_negative()) {
            let mut idx = pivots.clone();
            idx.push(i);
            return not_psd(m, idx);
        }
        let Some(pos) = active.iter().position(|&i| a[i][i].is_positive()) else {
            // Remaining diagonal is zero; any nonzero entry breaks PSD.
            for &i in &active {
                if let Some(&j) = active.iter().find(|&&j| !a[i][j].is_zero()) {
                    let mut idx = pivots.clone();
                    idx.push(i);
                    idx.push(j);
                    return not_psd(m, idx);
                }
            }
            return PsdVerdict::Psd { rank: pivots.len() };
        };
        let k = active.remove(pos);
        let pk = a[k][k].clone();
        let row_k: Vec<BigInt> = active.iter().map(|&j| a[k][j].clone()).collect();
        for (ii, &i) in active.iter().enumerate() {
            for (jj, &j) in active.iter().enumerate() {
                let mut v = &pk * &a[i][j];
                if !row_k[ii].is_zero() && !row_k[jj].is_zero() {
                    v -= &row_k[ii] * &row_k[jj];
                }
                a[i][j] = v / &prev;
            }
        }
        prev = pk;
        pivots.push(k);
    }
}

fn not_psd(m: &[Vec<BigRational>], mut indices: Vec<usize>) -> PsdVerdict {
    indices.sort_unstable();
    let minor = principal_minor(m, &indices);
    debug_assert!(minor.is_negative());
    PsdVerdict::NotPsd { indices, minor }
}

/// Positive semidefiniteness of the derangement function with values
/// `f[r]` on `group`.
pub fn certify_psd(values: &[BigRational], group: &[FFMatrix]) -> Result<PsdVerdict> {
    Ok(certify_psd_matrix(&gram_matrix(values, group)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn small_groups() {
        assert_eq!(enumerate_gl(2, 2).unwrap().len(), 6);
        assert_eq!(enumerate_gl(2, 3).unwrap().len(), 48);
        assert_eq!(gl_order(3, 2), Some(168));
        assert!(matches!(enumerate_gl(4, 2), Err(Error::SizeGuard { .. })));
        assert!(enumerate_gl(2, 4).is_err());
    }

    #[test]
    fn order_three_element_has_no_fixed_vector() {
        let g = FFMatrix::group_element(2, 2, alloc::vec![0, 1, 1, 1]).unwrap();
        assert_eq!(r_of(&g), 0);
        assert_eq!(r_of(&FFMatrix::identity(3, 2)), 3);
        assert_eq!(count_fixed(&g, 0, true).unwrap(), 1);
    }

    #[test]
    fn inverse_round_trip() {
        for g in enumerate_gl(2, 3).unwrap() {
            let gi = g.inverse().unwrap();
            assert_eq!(g.mul(&gi), FFMatrix::identity(2, 3));
            assert_eq!(r_of(&g), r_of(&gi));
        }
    }

    #[test]
    fn corrupted_function_fails() {
        let g = enumerate_gl(2, 2).unwrap();
        let unit = certify_psd(&[q(1), q(1), q(1)], &g).unwrap();
        assert_eq!(unit, PsdVerdict::Psd { rank: 1 });
        let bad = certify_psd(&[q(1), q(1), q(-1)], &g).unwrap();
        match bad {
            PsdVerdict::NotPsd { indices, minor } => {
                assert!(minor.is_negative());
                assert_eq!(
                    principal_minor(&gram_matrix(&[q(1), q(1), q(-1)], &g).unwrap(), &indices),
                    minor
                );
            }
            PsdVerdict::Psd { .. } => panic!("corrupted function certified"),
        }
    }
}
