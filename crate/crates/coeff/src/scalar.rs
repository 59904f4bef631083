use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::error::CoeffError;
use crate::mono::VarSet;
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::rational::Rational;

/// Indeterminates `a`, `b` with `q = a^2`, `t = b^2`.
pub fn ab_vars() -> &'static VarSet {
    static VARS: OnceLock<VarSet> = OnceLock::new();
    VARS.get_or_init(|| VarSet::new(&["a", "b"]).expect("valid names"))
}

/// Canonical rational function of `a = q^{1/2}` and `b = t^{1/2}`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactScalar(RatFun);

impl ExactScalar {
    pub fn from_ratfun(r: RatFun) -> Result<Self, CoeffError> {
        if !r.vars().same(ab_vars()) {
            return Err(CoeffError::VarMismatch(r.vars().names().to_vec(), ab_vars().names().to_vec()));
        }
        Ok(ExactScalar(r))
    }

    pub fn as_ratfun(&self) -> &RatFun {
        &self.0
    }

    pub fn into_ratfun(self) -> RatFun {
        self.0
    }

    pub fn zero() -> Self {
        ExactScalar(RatFun::zero(ab_vars()))
    }

    pub fn one() -> Self {
        ExactScalar(RatFun::one(ab_vars()))
    }

    pub fn from_i64(c: i64) -> Self {
        ExactScalar(RatFun::from_i64(ab_vars(), c))
    }

    pub fn from_rational(c: Rational) -> Self {
        ExactScalar(RatFun::constant(ab_vars(), c))
    }

    /// `c * a^i * b^j` for arbitrary integer exponents.
    pub fn monomial(c: Rational, i: i64, j: i64) -> Self {
        ExactScalar(RatFun::laurent_monomial(ab_vars(), c, &[i, j]))
    }

    /// `a^i b^j`, i.e. `q^{i/2} t^{j/2}`.
    pub fn ab(i: i64, j: i64) -> Self {
        Self::monomial(Rational::one(), i, j)
    }

    pub fn a() -> Self {
        Self::ab(1, 0)
    }

    pub fn b() -> Self {
        Self::ab(0, 1)
    }

    pub fn q() -> Self {
        Self::ab(2, 0)
    }

    pub fn t() -> Self {
        Self::ab(0, 2)
    }

    /// `q^{k/2}`.
    pub fn q_half_pow(k: i64) -> Self {
        Self::ab(k, 0)
    }

    /// `t^{k/2}`.
    pub fn t_half_pow(k: i64) -> Self {
        Self::ab(0, k)
    }

    pub fn q_pow(k: i64) -> Self {
        Self::ab(2 * k, 0)
    }

    pub fn t_pow(k: i64) -> Self {
        Self::ab(0, 2 * k)
    }

    /// `1 - c a^i b^j`.
    pub fn one_minus(c: i64, i: i64, j: i64) -> Self {
        &Self::one() - &Self::monomial(Rational::from(c), i, j)
    }

    /// `sum c * a^i * b^j` over `((i, j), c)`.
    pub fn from_ab_terms(terms: &[((i64, i64), i64)]) -> Self {
        let t: Vec<(Vec<i64>, Rational)> =
            terms.iter().filter(|(_, c)| *c != 0).map(|&((i, j), c)| (vec![i, j], Rational::from(c))).collect();
        ExactScalar(RatFun::from_laurent_terms(ab_vars(), &t))
    }

    pub fn from_poly(p: Poly) -> Self {
        ExactScalar(RatFun::from_poly(ab_vars(), p))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        self.0.constant_value()
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        Ok(ExactScalar(self.0.inv()?))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, CoeffError> {
        Ok(ExactScalar(self.0.div(&o.0)?))
    }

    pub fn pow(&self, k: i64) -> Result<Self, CoeffError> {
        Ok(ExactScalar(self.0.pow(k)?))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ExactScalar(self.0.scale(c))
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a ExactScalar>) -> Self {
        ExactScalar(RatFun::sum(ab_vars(), items.into_iter().map(|x| &x.0)))
    }

    pub fn sum_of_products(pairs: &[(&ExactScalar, &ExactScalar)]) -> Self {
        let ps: Vec<(&RatFun, &RatFun)> = pairs.iter().map(|(x, y)| (&x.0, &y.0)).collect();
        ExactScalar(RatFun::sum_of_products(ab_vars(), &ps))
    }

    /// Substitutes `b -> a^k`, i.e. specializes `t = q^k`.
    pub fn at_t_equals_q_pow(&self, k: i64) -> Result<Self, CoeffError> {
        let v = ab_vars();
        let img = RatFun::laurent_monomial(v, Rational::one(), &[k, 0]);
        Ok(ExactScalar(self.0.substitute(v, &[("b", img)])?))
    }

    pub fn eval(&self, a: &Rational, b: &Rational) -> Result<Rational, CoeffError> {
        self.0.eval_rational(&[a.clone(), b.clone()])
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactScalar {
    fn from(c: i64) -> Self {
        Self::from_i64(c)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar(self.0.add(&o.0))
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar(self.0.sub(&o.0))
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar(self.0.mul(&o.0))
    }
}

/// Panics on division by zero; use [`ExactScalar::try_div`] when the divisor may vanish.
impl<'a> Div<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn div(self, o: &ExactScalar) -> ExactScalar {
        self.try_div(o).expect("division by zero scalar")
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(self.0.neg())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: ExactScalar) -> ExactScalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: &ExactScalar) -> ExactScalar {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_powers() {
        let q = ExactScalar::q();
        let a = ExactScalar::a();
        assert_eq!(&a * &a, q);
        assert_eq!(ExactScalar::q_half_pow(-3), a.pow(-3).unwrap());
        assert_eq!((&ExactScalar::q_pow(2) * &ExactScalar::q_pow(-2)), ExactScalar::one());
    }

    #[test]
    fn factorization_cancels() {
        // (1 - a^4)/(1 - a^2) - (1 + a^2) = 0
        let lhs = &ExactScalar::one_minus(1, 4, 0) / &ExactScalar::one_minus(1, 2, 0);
        let rhs = &ExactScalar::one() + &ExactScalar::q();
        assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn specialize_t_to_q_power() {
        let f = &ExactScalar::one_minus(1, 0, 2) / &ExactScalar::one_minus(1, 2, 0);
        let g = f.at_t_equals_q_pow(2).unwrap();
        assert_eq!(g, &ExactScalar::one() + &ExactScalar::q());
    }
}
