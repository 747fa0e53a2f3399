//! Double description method for pointed cones `{x : A x >= 0}` over ℚ,
//! with integer rays and the combinatorial adjacency test.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::linalg::{rank, rref};
use crate::budget::Budget;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(alloc::vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// An extreme ray with the constraints it makes tight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    pub vector: Vec<BigInt>,
    pub tight: Vec<usize>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Scale a rational vector to a primitive integer vector with the same
/// direction.
pub fn to_primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::from(1), |l, x| l.lcm(x.denom()));
    primitive(
        v.iter()
            .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
            .collect(),
    )
}

/// Extreme rays of `{x : A x >= 0}`, sorted; fails unless the cone is
/// pointed (`A` has full column rank).
pub fn extreme_rays<B: Budget + ?Sized>(a: &[Vec<BigInt>], budget: &B) -> Result<Vec<Ray>> {
    let d = a.first().map_or(0, Vec::len);
    let m = a.len();
    let rows: Vec<usize> = (0..m).filter(|&i| a[i].iter().any(|x| !x.is_zero())).collect();
    let to_q = |i: usize| -> Vec<BigRational> { a[i].iter().cloned().map(BigRational::from_integer).collect() };

    // Greedy choice of d independent rows for the initial simplicial cone.
    let mut basis: Vec<usize> = Vec::with_capacity(d);
    let mut basis_rows: Vec<Vec<BigRational>> = Vec::with_capacity(d);
    for &i in &rows {
        if basis.len() == d {
            break;
        }
        basis_rows.push(to_q(i));
        if rank(&basis_rows) == basis_rows.len() {
            basis.push(i);
        } else {
            basis_rows.pop();
        }
    }
    if basis.len() < d {
        return Err(Error::PreconditionViolation(alloc::format!(
            "cone is not pointed: constraint rank {} < {d}",
            basis.len()
        )));
    }

    // Columns of the inverse of the basis matrix are the initial rays.
    let mut aug: Vec<Vec<BigRational>> = basis_rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..d).map(|j| BigRational::from_integer(BigInt::from((i == j) as i32))));
            row
        })
        .collect();
    rref(&mut aug);
    let mut rays: Vec<(Vec<BigInt>, Bits)> = (0..d)
        .map(|c| {
            let col: Vec<BigRational> = (0..d).map(|r| aug[r][d + c].clone()).collect();
            let v = to_primitive_integer(&col);
            let mut z = Bits::new(m);
            for (r, &bi) in basis.iter().enumerate() {
                if r != c {
                    z.set(bi);
                }
            }
            (v, z)
        })
        .collect();

    for &i in rows.iter().filter(|i| !basis.contains(i)) {
        if budget.exhausted() {
            return Err(Error::BudgetExceeded);
        }
        let s: Vec<BigInt> = rays.iter().map(|(v, _)| dot(&a[i], v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&r| s[r].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&r| s[r].is_negative()).collect();
        if neg.is_empty() {
            for (r, (_, z)) in rays.iter_mut().enumerate() {
                if s[r].is_zero() {
                    z.set(i);
                }
            }
            continue;
        }
        let mut next: Vec<(Vec<BigInt>, Bits)> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].1.and(&rays[q].1);
                if (common.count() as usize) + 2 < d {
                    continue;
                }
                let adjacent = (0..rays.len()).all(|r| r == p || r == q || !common.subset_of(&rays[r].1));
                if !adjacent {
                    continue;
                }
                let v: Vec<BigInt> = rays[q]
                    .0
                    .iter()
                    .zip(&rays[p].0)
                    .map(|(x, y)| &s[p] * x - &s[q] * y)
                    .collect();
                let mut z = common;
                z.set(i);
                next.push((primitive(v), z));
            }
        }
        for (r, (v, mut z)) in rays.into_iter().enumerate() {
            if s[r].is_negative() {
                continue;
            }
            if s[r].is_zero() {
                z.set(i);
            }
            next.push((v, z));
        }
        rays = next;
    }

    let mut out: Vec<Ray> = rays
        .into_iter()
        .map(|(vector, _)| {
            let tight = (0..m).filter(|&i| dot(&a[i], &vector).is_zero()).collect();
            Ray { vector, tight }
        })
        .collect();
    out.sort_by(|x, y| x.vector.cmp(&y.vector));
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Unlimited;

    fn rows(r: &[&[i64]]) -> Vec<Vec<BigInt>> {
        r.iter().map(|x| x.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn orthant() {
        let a = rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let r = extreme_rays(&a, &Unlimited).unwrap();
        assert_eq!(r.len(), 3);
    }

    #[test]
    fn square_cone() {
        // Cone over the unit square [0,1]^2 at height z: four rays.
        let a = rows(&[&[1, 0, 0], &[0, 1, 0], &[-1, 0, 1], &[0, -1, 1], &[1, 1, 1]]);
        let r = extreme_rays(&a, &Unlimited).unwrap();
        let v: Vec<Vec<BigInt>> = r.iter().map(|x| x.vector.clone()).collect();
        assert_eq!(v, rows(&[&[0, 0, 1], &[0, 1, 1], &[1, 0, 1], &[1, 1, 1]]));
        assert!(r.iter().all(|x| x.tight.len() == 2));
    }

    #[test]
    fn not_pointed() {
        let a = rows(&[&[1, 0], &[2, 0]]);
        assert!(extreme_rays(&a, &Unlimited).is_err());
    }
}
