use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use dashu_int::ops::Gcd;
use dashu_int::{IBig, Sign, UBig};

use crate::error::CoeffError;

/// Exact rational number, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: IBig,
    den: IBig,
}

pub fn int_gcd(a: &IBig, b: &IBig) -> IBig {
    if a.is_zero() {
        return b.clone().abs_owned();
    }
    if b.is_zero() {
        return a.clone().abs_owned();
    }
    IBig::from(a.gcd(b))
}

pub(crate) trait AbsOwned {
    fn abs_owned(self) -> IBig;
}

impl AbsOwned for IBig {
    fn abs_owned(self) -> IBig {
        if self.sign() == Sign::Negative {
            -self
        } else {
            self
        }
    }
}

impl Rational {
    pub fn zero() -> Self {
        Rational { num: IBig::ZERO, den: IBig::ONE }
    }

    pub fn one() -> Self {
        Rational { num: IBig::ONE, den: IBig::ONE }
    }

    pub fn from_int(n: impl Into<IBig>) -> Self {
        Rational { num: n.into(), den: IBig::ONE }
    }

    pub fn new(num: impl Into<IBig>, den: impl Into<IBig>) -> Result<Self, CoeffError> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(mut num: IBig, mut den: IBig) -> Self {
        if den.sign() == Sign::Negative {
            num = -num;
            den = -den;
        }
        if num.is_zero() {
            return Self::zero();
        }
        if !den.is_one() {
            let g = int_gcd(&num, &den);
            if !g.is_one() {
                num /= &g;
                den /= &g;
            }
        }
        Rational { num, den }
    }

    pub fn numer(&self) -> &IBig {
        &self.num
    }

    pub fn denom(&self) -> &IBig {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.sign() == Sign::Negative
    }

    pub fn signum(&self) -> i32 {
        if self.num.is_zero() {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Rational { num: self.num.clone().abs_owned(), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<Self, CoeffError> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        let e = e as usize;
        Ok(Rational { num: self.num.pow(e), den: self.den.pow(e) })
    }

    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        i64::try_from(&self.num).ok()
    }

    pub fn to_f64(&self) -> f64 {
        let n: f64 = self.num.to_f64().value();
        let d: f64 = self.den.to_f64().value();
        n / d
    }

    /// Residue modulo a word-sized prime, or `None` when `p` divides the denominator.
    pub fn mod_p(&self, p: u64) -> Option<u64> {
        let n = ibig_mod(&self.num, p);
        if self.den.is_one() {
            return Some(n);
        }
        let d = ibig_mod(&self.den, p);
        if d == 0 {
            return None;
        }
        Some(crate::modp::mul(n, crate::modp::inv(d, p), p))
    }
}

pub fn ibig_mod(x: &IBig, p: u64) -> u64 {
    let m = IBig::from(p);
    let r = x % &m;
    let r = if r.sign() == Sign::Negative { r + m } else { r };
    u64::try_from(&r).expect("residue fits in u64")
}

pub fn ubig_to_ibig(u: UBig) -> IBig {
    IBig::from(u)
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_int(n as i64)
    }
}

impl From<IBig> for Rational {
    fn from(n: IBig) -> Self {
        Rational::from_int(n)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        if self.den.is_one() && rhs.den.is_one() {
            return Rational { num: &self.num + &rhs.num, den: IBig::ONE };
        }
        if self.den == rhs.den {
            return Rational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        Rational::reduce(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        if self.den.is_one() && rhs.den.is_one() {
            return Rational { num: &self.num - &rhs.num, den: IBig::ONE };
        }
        if self.den == rhs.den {
            return Rational::reduce(&self.num - &rhs.num, self.den.clone());
        }
        Rational::reduce(&self.num * &rhs.den - &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        if self.den.is_one() && rhs.den.is_one() {
            return Rational { num: &self.num * &rhs.num, den: IBig::ONE };
        }
        if self.is_zero() || rhs.is_zero() {
            return Rational::zero();
        }
        let g1 = int_gcd(&self.num, &rhs.den);
        let g2 = int_gcd(&rhs.num, &self.den);
        let num = (&self.num / &g1) * (&rhs.num / &g2);
        let den = (&self.den / &g2) * (&rhs.den / &g1);
        Rational { num, den }
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self * &rhs.recip().expect("division by zero rational")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num -= &rhs.num;
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num *= &rhs.num;
        } else {
            *self = &*self * rhs;
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num.clone(), den: self.den.clone() }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = CoeffError;
    fn from_str(s: &str) -> Result<Self, CoeffError> {
        let s = s.trim();
        let bad = || CoeffError::Parse(format!("not a rational number: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n = IBig::from_str(n.trim()).map_err(|_| bad())?;
                let d = IBig::from_str(d.trim()).map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => Ok(Rational::from_int(IBig::from_str(s).map_err(|_| bad())?)),
        }
    }
}
