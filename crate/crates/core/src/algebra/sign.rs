//! Sign of polynomials and rational functions on the open ray `q > 1`.
//!
//! A fast sufficient test (all coefficients of `p(1 + t)` nonnegative) is
//! tried first; otherwise the distinct roots in `(1, ∞)` are isolated with a
//! Sturm sequence and `p` is evaluated between consecutive roots, which
//! decides the sign exactly.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{sign_of, IntPoly};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignVerdict {
    PositiveOnQgt1,
    /// `>= 0` everywhere on `q > 1` with at least one zero there.
    NonNegativeOnQgt1,
    ZeroEverywhere,
    /// Carries a rational `q* > 1` with `p(q*) < 0`.
    NegativeSomewhere(BigRational),
    Undetermined,
}

impl SignVerdict {
    /// Positive or identically zero: the admissible verdicts for a character
    /// coefficient.
    pub fn is_character_coeff(&self) -> bool {
        matches!(self, SignVerdict::PositiveOnQgt1 | SignVerdict::ZeroEverywhere)
    }

    pub fn is_nonnegative(&self) -> bool {
        matches!(
            self,
            SignVerdict::PositiveOnQgt1 | SignVerdict::NonNegativeOnQgt1 | SignVerdict::ZeroEverywhere
        )
    }
}

/// Uniform comparison of two functions over `q > 1`.
///
/// `Greater` means `a(q) >= b(q)` for every `q > 1` and `a != b`; equality at
/// finitely many points is allowed. `Less` is symmetric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QOrdering {
    Less,
    Equal,
    Greater,
    Undetermined,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Points tried first when looking for a negativity witness, so that simple
/// inputs get simple witnesses.
fn preferred_witnesses() -> [BigRational; 4] {
    [rat(3, 2), rat(2, 1), rat(3, 1), rat(10, 1)]
}

pub fn sign_on_q_gt_1(p: &IntPoly) -> SignVerdict {
    if p.is_zero() {
        return SignVerdict::ZeroEverywhere;
    }
    // Tier 1: p(1+t) has nonnegative coefficients and p != 0, so p > 0 for t > 0.
    if p.taylor_shift_one().has_nonnegative_coeffs() {
        return SignVerdict::PositiveOnQgt1;
    }
    // Tier 2: exact root isolation on (1, ∞).
    for w in preferred_witnesses() {
        if p.sign_at(&w) < 0 {
            return SignVerdict::NegativeSomewhere(w);
        }
    }
    let roots = isolate_roots_above_one(p);
    if roots.is_empty() {
        let two = rat(2, 1);
        return match p.sign_at(&two) {
            1 => SignVerdict::PositiveOnQgt1,
            -1 => SignVerdict::NegativeSomewhere(two),
            _ => unreachable!("2 is not a root when no roots lie above 1"),
        };
    }
    // Every gap between consecutive roots contains one of these points.
    let mut probes: Vec<BigRational> = Vec::with_capacity(roots.len() + 1);
    probes.push(roots[0].0.clone());
    probes.extend(roots.iter().map(|(_, hi)| hi.clone()));
    for x in probes {
        if p.sign_at(&x) < 0 {
            return SignVerdict::NegativeSomewhere(x);
        }
    }
    SignVerdict::NonNegativeOnQgt1
}

/// Sign of a rational function on `q > 1`, decided through `num * den`,
/// which has the same sign wherever the function is defined.
pub fn ratfunc_sign_on_q_gt_1(r: &RatFunc) -> SignVerdict {
    if r.is_poly() {
        return sign_on_q_gt_1(r.num());
    }
    sign_on_q_gt_1(&(r.num() * r.den()))
}

pub fn ratfunc_cmp_q_gt_1(a: &RatFunc, b: &RatFunc) -> Result<QOrdering> {
    for r in [a, b] {
        if sign_on_q_gt_1(r.den()) != SignVerdict::PositiveOnQgt1 {
            return Err(Error::PreconditionViolation(alloc::format!(
                "denominator {} is not positive on q > 1",
                r.den()
            )));
        }
    }
    if a == b {
        return Ok(QOrdering::Equal);
    }
    let diff = a.num() * b.den() - b.num() * a.den();
    Ok(match sign_on_q_gt_1(&diff) {
        SignVerdict::ZeroEverywhere => QOrdering::Equal,
        SignVerdict::PositiveOnQgt1 | SignVerdict::NonNegativeOnQgt1 => QOrdering::Greater,
        _ => match sign_on_q_gt_1(&-diff) {
            SignVerdict::PositiveOnQgt1 | SignVerdict::NonNegativeOnQgt1 => QOrdering::Less,
            _ => QOrdering::Undetermined,
        },
    })
}

/// Sturm sequence of a squarefree polynomial, each term made primitive.
fn sturm_sequence(p: &IntPoly) -> Vec<IntPoly> {
    let mut seq = vec![p.clone(), p.derivative().primitive_part()];
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.is_zero() {
            seq.pop();
            break;
        }
        let r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        // prem = lc(b)^e * a mod b; the Sturm term is -rem with the sign of lc^e removed.
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let e = da - db + 1;
        let lc_neg_odd = b.leading_coeff().unwrap().is_negative() && e % 2 == 1;
        let mut next = r.primitive_part();
        if !lc_neg_odd {
            next = -next;
        }
        seq.push(next);
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(seq: &[IntPoly], x: &BigRational) -> usize {
    sign_changes(seq.iter().map(|p| p.sign_at(x)))
}

fn variations_at_infinity(seq: &[IntPoly]) -> usize {
    sign_changes(seq.iter().map(|p| sign_of(p.leading_coeff().unwrap())))
}

/// Strict integer bound on the absolute value of every root.
fn cauchy_bound(p: &IntPoly) -> BigInt {
    let lc = p.leading_coeff().unwrap().abs();
    let d = p.degree().unwrap();
    let max = p.coeffs()[..d]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    // 1 + max|a_i| / |a_d|, rounded up, plus one for strictness.
    BigInt::one() + (max + &lc - BigInt::one()) / lc + BigInt::one()
}

/// Disjoint isolating intervals `(lo, hi)` for the distinct roots of `p` in
/// `(1, ∞)`, sorted. Endpoints are never roots, `lo > 1` for the first
/// interval, and the last `hi` exceeds every root.
fn isolate_roots_above_one(p: &IntPoly) -> Vec<(BigRational, BigRational)> {
    let mut s = p.squarefree_part();
    // Roots at q = 1 do not matter on the open ray; strip them.
    let q_minus_one = IntPoly::from_i64s(&[-1, 1]);
    while s.degree().unwrap_or(0) > 0 && s.coeffs().iter().sum::<BigInt>().is_zero() {
        s = s.div_exact(&q_minus_one).expect("q = 1 is a root");
    }
    if s.is_constant() {
        return Vec::new();
    }
    let seq = sturm_sequence(&s);
    let one = BigRational::one();
    let hi = BigRational::from_integer(cauchy_bound(&s));
    let total = variations_at(&seq, &one) - variations_at_infinity(&seq);
    if total == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = vec![(one, hi)];
    while let Some((lo, hi)) = stack.pop() {
        let count = variations_at(&seq, &lo) - variations_at(&seq, &hi);
        match count {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let m = split_point(&s, &lo, &hi);
                stack.push((m.clone(), hi));
                stack.push((lo, m));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    // The first gap (1, r_1) needs a probe strictly above 1.
    if let Some(first) = out.first_mut() {
        while first.0 == BigRational::one() {
            let m = split_point(&s, &first.0, &first.1);
            if variations_at(&seq, &m) - variations_at(&seq, &first.1) == 1 {
                first.0 = m;
            } else {
                first.1 = m;
            }
        }
    }
    out
}

/// A non-root rational strictly inside `(lo, hi)`.
fn split_point(s: &IntPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let width = hi - lo;
    for (num, den) in [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5)] {
        let m = lo + &width * rat(num, den);
        if s.sign_at(&m) != 0 {
            return m;
        }
    }
    // A polynomial of degree d has at most d roots; d+1 distinct points suffice.
    let d = s.degree().unwrap() as i64 + 2;
    (1..d)
        .map(|i| lo + &width * rat(i, d + 1))
        .find(|m| s.sign_at(m) != 0)
        .expect("finitely many roots")
}
