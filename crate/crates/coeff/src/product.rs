//! Products of powers of polynomials kept in factored form.
//!
//! Identity checks build every summand as a product of binomials; keeping the
//! factors apart lets common factors cancel by identity instead of by division.

use std::sync::Arc;

use crate::factor::factor_lite;
use crate::mono::{Mono, VarSet};
use crate::poly::Poly;
use crate::ratfun::{DenFactor, RatFun};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct Term {
    unit: Rational,
    mono: Vec<i64>,
    factors: Vec<(Arc<Poly>, i64, bool)>,
}

impl Term {
    pub fn constant(nvars: usize, c: Rational) -> Self {
        Term { unit: c, mono: vec![0; nvars], factors: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    pub fn unit(&self) -> &Rational {
        &self.unit
    }

    pub fn scale(&mut self, c: &Rational) {
        self.unit *= c;
    }

    /// Multiplies by `x^e` for a Laurent exponent vector.
    pub fn times_monomial(&mut self, e: &[i64]) {
        for (m, x) in self.mono.iter_mut().zip(e) {
            *m += x;
        }
    }

    fn push_factor(&mut self, p: Poly, e: i64, irreducible: bool) {
        match self.factors.binary_search_by(|f| (*f.0).cmp(&p)) {
            Ok(i) => {
                self.factors[i].1 += e;
                if self.factors[i].1 == 0 {
                    self.factors.remove(i);
                }
            }
            Err(i) => self.factors.insert(i, (Arc::new(p), e, irreducible)),
        }
    }

    /// Multiplies by `p^e`. A zero polynomial makes the term zero when `e > 0`
    /// and is rejected when `e < 0`.
    pub fn times_poly(&mut self, p: &Poly, e: i64) -> Result<(), crate::CoeffError> {
        if e == 0 {
            return Ok(());
        }
        if p.is_zero() {
            if e < 0 {
                return Err(crate::CoeffError::DivisionByZero);
            }
            self.unit = Rational::zero();
            return Ok(());
        }
        let f = factor_lite(p);
        self.unit *= &f.unit.pow(e)?;
        for i in 0..self.mono.len() {
            self.mono[i] += e * f.mono.get(i) as i64;
        }
        for pc in f.pieces {
            self.push_factor(pc.poly, e * pc.mult as i64, pc.irreducible);
        }
        Ok(())
    }

    /// Multiplies by `(sum_j c_j x^{e_j})^e` for Laurent exponents `e_j`.
    pub fn times_laurent(&mut self, terms: &[(Rational, Vec<i64>)], e: i64) -> Result<(), crate::CoeffError> {
        let n = self.mono.len();
        let mut lo = vec![0i64; n];
        for (_, ex) in terms {
            for i in 0..n {
                lo[i] = lo[i].min(ex[i]);
            }
        }
        let p = Poly::from_terms(terms.iter().map(|(c, ex)| {
            let v: Vec<u32> = (0..n).map(|i| (ex[i] - lo[i]) as u32).collect();
            (Mono::from_exps(&v).expect("exponent range"), c.clone())
        }));
        for i in 0..n {
            self.mono[i] += e * lo[i];
        }
        self.times_poly(&p, e)
    }

    /// Multiplies by `(1 - c x^e)^k`.
    pub fn times_one_minus(&mut self, c: &Rational, e: &[i64], k: i64) -> Result<(), crate::CoeffError> {
        let zero = vec![0i64; self.mono.len()];
        self.times_laurent(&[(Rational::one(), zero), (-c, e.to_vec())], k)
    }

    pub fn times(&mut self, o: &Term) {
        self.unit *= &o.unit;
        for i in 0..self.mono.len() {
            self.mono[i] += o.mono[i];
        }
        for (p, e, irr) in &o.factors {
            self.push_factor((**p).clone(), *e, *irr);
        }
    }

    pub fn to_ratfun(&self, vars: &VarSet) -> RatFun {
        if self.unit.is_zero() {
            return RatFun::zero(vars);
        }
        let mut pos = Mono::ONE;
        let mut neg = Mono::ONE;
        for (i, &x) in self.mono.iter().enumerate() {
            if x > 0 {
                pos.set(i, x as u32);
            } else if x < 0 {
                neg.set(i, (-x) as u32);
            }
        }
        let mut num_factors: Vec<&Poly> = Vec::new();
        let mut pows = Vec::new();
        let mut den = Vec::new();
        let mut all_irr = true;
        for (p, e, irr) in &self.factors {
            all_irr &= *irr;
            if *e > 0 {
                pows.push(p.pow(*e as u32));
            } else {
                den.push(DenFactor { poly: p.clone(), mult: (-*e) as u32, irreducible: *irr });
            }
        }
        num_factors.extend(pows.iter());
        let num = Poly::product(num_factors).mul_term(&pos, &self.unit);
        if all_irr {
            RatFun::from_parts_unchecked(vars, num, neg, den)
        } else {
            RatFun::from_parts(vars, num, neg, den)
        }
    }

    /// Exact value at a rational point, or `None` at a pole.
    pub fn eval_rational(&self, point: &[Rational]) -> Option<Rational> {
        let mut v = self.unit.clone();
        if v.is_zero() {
            return Some(v);
        }
        for (i, &x) in self.mono.iter().enumerate() {
            if x != 0 {
                if point[i].is_zero() {
                    return None;
                }
                v *= &point[i].pow(x).ok()?;
            }
        }
        for (p, e, _) in &self.factors {
            let x = p.eval_rational(point);
            if x.is_zero() {
                return if *e > 0 { Some(Rational::zero()) } else { None };
            }
            v *= &x.pow(*e).ok()?;
        }
        Some(v)
    }
}

/// Canonical sum of factored terms.
pub fn sum_terms(vars: &VarSet, terms: &[Term]) -> RatFun {
    let rs: Vec<RatFun> = terms.iter().filter(|t| !t.is_zero()).map(|t| t.to_ratfun(vars)).collect();
    RatFun::sum(vars, rs.iter())
}
