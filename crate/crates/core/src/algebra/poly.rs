//! Dense univariate polynomials in `q` with arbitrary-precision integer
//! coefficients.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A polynomial `c_0 + c_1 q + ... + c_d q^d` over ℤ.
///
/// Coefficients are stored in ascending order with no trailing zeros; the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The formal variable `q`.
    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c q^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// `q^deg`.
    pub fn q_pow(deg: usize) -> Self {
        Self::monomial(BigInt::one(), deg)
    }

    /// `q^deg - 1`.
    pub fn q_pow_minus_one(deg: usize) -> Self {
        Self::q_pow(deg) - Self::one()
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest power of `q` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, sign preserved.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Divide every coefficient by `d`, which must divide all of them.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / d).collect(),
        }
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        // Horner on the homogenised form keeps everything integral.
        let (num, den) = (x.numer(), x.denom());
        let Some(d) = self.degree() else {
            return BigRational::zero();
        };
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        // acc = den^d * p(x) after the loop built powers up to den^d.
        let mut scale = BigInt::one();
        for _ in 0..d {
            scale *= den;
        }
        BigRational::new(acc, scale)
    }

    /// Sign of `p(x)` without forming the reduced rational.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        // den > 0 by num-rational's normalisation.
        sign_of(&acc)
    }

    /// `p(1 + t)` as a polynomial in `t`.
    pub fn taylor_shift_one(&self) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let next = a[j + 1].clone();
                a[j] += next;
            }
        }
        Self::from_coeffs(a)
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero(), "pseudo-division by zero polynomial");
        let db = b.degree().unwrap();
        let lb = b.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        let Some(da) = r.degree() else {
            return r;
        };
        if da < db {
            return r;
        }
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading_coeff().unwrap().clone();
            r = r.scale(&lb) - b.shift(dr - db).scale(&lr);
            steps -= 1;
        }
        for _ in 0..steps {
            r = r.scale(&lb);
        }
        r
    }

    /// Exact quotient `self / d`; fails if `d` does not divide `self` in ℤ[q].
    pub fn div_exact(&self, d: &IntPoly) -> Result<IntPoly, Error> {
        let (q, r) = self.div_rem_integral(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Long division in ℤ[q]; errors when a leading coefficient does not divide.
    fn div_rem_integral(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly), Error> {
        let Some(dd) = d.degree() else {
            return Err(Error::DivisionByZero);
        };
        let ld = d.leading_coeff().unwrap();
        let mut r = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let lead = r[top].clone();
            if !lead.is_zero() {
                let (qc, rem) = lead.div_rem(ld);
                if !rem.is_zero() {
                    return Err(Error::InexactDivision);
                }
                let off = top - dd;
                for (i, c) in d.coeffs.iter().enumerate() {
                    r[off + i] -= &qc * c;
                }
                quot[off] = qc;
            }
            r.pop();
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(r)))
    }

    /// Greatest common divisor in ℤ[q], normalised to a positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        // Primitive PRS.
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.normalize_sign().scale(&content)
    }

    /// `self` or `-self`, whichever has a positive leading coefficient.
    pub fn normalize_sign(&self) -> IntPoly {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Squarefree part `p / gcd(p, p')` (primitive, positive leading coefficient).
    pub fn squarefree_part(&self) -> IntPoly {
        if self.is_constant() {
            return self.normalize_sign().primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g)
            .expect("gcd divides its argument")
            .primitive_part()
            .normalize_sign()
    }

    /// Render with a chosen variable name, ascending powers: `1+2q+q^3`.
    pub fn render(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            match i {
                0 => write!(s, "{}", mag).unwrap(),
                _ => {
                    if !mag.is_one() {
                        write!(s, "{}", mag).unwrap();
                    }
                    s.push_str(var);
                    if i > 1 {
                        write!(s, "^{}", i).unwrap();
                    }
                }
            }
        }
        s
    }

    /// True when every coefficient is `>= 0`.
    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        IntPoly::constant(c)
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        IntPoly::constant(BigInt::from(c))
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<IntPoly> for &'a IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        *self = &*self - rhs;
    }
}

impl core::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |a, b| a + b)
    }
}

impl core::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |a, b| a * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!((p(&[1, 1]) - p(&[1, 1])).degree(), None);
    }

    #[test]
    fn multiplication_and_render() {
        let a = p(&[1, 1]);
        assert_eq!((&a * &a).to_string(), "1+2q+q^2");
        assert_eq!(p(&[0, -1, 3]).to_string(), "-q+3q^2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn taylor_shift() {
        // q^2 - 3q + 3 at q = 1 + t is t^2 - t + 1.
        assert_eq!(p(&[3, -3, 1]).taylor_shift_one(), p(&[1, -1, 1]));
        assert_eq!(p(&[-1, 1]).taylor_shift_one(), p(&[0, 1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 0, 1]); // q^3 - 1
        let b = p(&[-1, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), p(&[1, 1, 1]));
        assert_eq!(p(&[1, 0, 1]).div_exact(&b), Err(Error::InexactDivision));
        assert_eq!(p(&[1, 1]).div_exact(&p(&[1, 2])), Err(Error::InexactDivision));
    }

    #[test]
    fn gcd_includes_content() {
        let a = p(&[2, 2]) * p(&[1, 0, 1]);
        let b = p(&[4, 4]) * p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[2, 2]));
        assert_eq!(p(&[0, -3]).gcd(&IntPoly::zero()), p(&[0, 3]));
    }

    #[test]
    fn rational_evaluation() {
        let x = BigRational::new(3.into(), 2.into());
        assert_eq!(p(&[-2, 1]).eval(&x), BigRational::new((-1).into(), 2.into()));
        assert_eq!(p(&[-2, 1]).sign_at(&x), -1);
        assert_eq!(
            p(&[3, -3, 1]).eval(&BigRational::from_integer(2.into())),
            BigRational::one()
        );
    }

    #[test]
    fn squarefree_part_drops_repeated_factors() {
        let f = p(&[-1, 1]).pow(3) * p(&[2, 1]);
        assert_eq!(f.squarefree_part(), p(&[-1, 1]) * p(&[2, 1]));
    }
}
