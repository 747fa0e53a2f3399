//! Exact feasibility of `G y = v, y >= 0` by phase-one simplex with Bland's
//! rule, returning a checkable certificate either way.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `y >= 0` with `Σ y_i g_i = v`.
    Combination(Vec<BigRational>),
    /// `w` with `w·g_i >= 0` for every generator and `w·v < 0`.
    Farkas(Vec<BigRational>),
}

impl Certificate {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Certificate::Combination(_))
    }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Decide whether `v` lies in the cone spanned by `gens` (each of the same
/// length as `v`).
pub fn cone_membership(gens: &[Vec<BigRational>], v: &[BigRational]) -> Certificate {
    let d = v.len();
    let m = gens.len();
    let flip: Vec<bool> = v.iter().map(Signed::is_negative).collect();
    let sgn = |r: usize, x: &BigRational| if flip[r] { -x } else { x.clone() };
    // Tableau rows: [A | I | b] with A[r][i] = ±gens[i][r].
    let width = m + d + 1;
    let mut t: Vec<Vec<BigRational>> = (0..d)
        .map(|r| {
            let mut row = Vec::with_capacity(width);
            row.extend(gens.iter().map(|g| sgn(r, &g[r])));
            row.extend((0..d).map(|c| {
                if c == r {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row.push(sgn(r, &v[r]));
            row
        })
        .collect();
    let mut basis: Vec<usize> = (m..m + d).collect();
    let cost = |c: usize| {
        if c >= m {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    };
    let reduced = |t: &Vec<Vec<BigRational>>, basis: &[usize], c: usize| -> BigRational {
        cost(c) - (0..d).map(|r| cost(basis[r]) * &t[r][c]).sum::<BigRational>()
    };

    while let Some(enter) = (0..m + d).find(|&c| reduced(&t, &basis, c).is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..d {
            if !t[r][enter].is_positive() {
                continue;
            }
            let ratio = &t[r][m + d] / &t[r][enter];
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // Phase one is bounded below by zero, so a leaving row always exists.
        let (lr, _) = leave.expect("phase-one objective is bounded");
        let piv = t[lr][enter].clone();
        for x in t[lr].iter_mut() {
            *x = &*x / &piv;
        }
        let prow = t[lr].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r == lr || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                *x = &*x - &(&f * p);
            }
        }
        basis[lr] = enter;
    }

    let objective: BigRational = (0..d).map(|r| cost(basis[r]) * &t[r][m + d]).sum();
    if objective.is_zero() {
        let mut y = alloc::vec![BigRational::zero(); m];
        for (r, &b) in basis.iter().enumerate() {
            if b < m {
                y[b] = t[r][m + d].clone();
            }
        }
        return Certificate::Combination(y);
    }
    let w: Vec<BigRational> = (0..d)
        .map(|r| {
            let pi = BigRational::one() - reduced(&t, &basis, m + r);
            -sgn(r, &pi)
        })
        .collect();
    Certificate::Farkas(w)
}

/// Independent check of a certificate against the original data.
pub fn verify_certificate(gens: &[Vec<BigRational>], v: &[BigRational], cert: &Certificate) -> bool {
    match cert {
        Certificate::Combination(y) => {
            y.len() == gens.len()
                && y.iter().all(|x| !x.is_negative())
                && (0..v.len()).all(|r| y.iter().zip(gens).map(|(yi, g)| yi * &g[r]).sum::<BigRational>() == v[r])
        }
        Certificate::Farkas(w) => gens.iter().all(|g| !dot(w, g).is_negative()) && dot(w, v).is_negative(),
    }
}
