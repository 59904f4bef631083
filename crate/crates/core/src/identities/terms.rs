//! Laurent monomials and factored products used to assemble both sides of the identities.

use macdonald_coeff::product::sum_terms;
use macdonald_coeff::sample::PointSampler;
use macdonald_coeff::{CoeffError, RatFun, Rational, Term, VarSet};

use crate::error::{MacError, Result};

/// `c · x^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mon {
    pub c: Rational,
    pub e: Vec<i64>,
}

impl Mon {
    pub fn one(nvars: usize) -> Self {
        Mon { c: Rational::one(), e: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.e[i] = 1;
        m
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        Mon { c: Rational::from(c), e: vec![0; nvars] }
    }

    pub fn mul(&self, o: &Mon) -> Mon {
        Mon { c: &self.c * &o.c, e: self.e.iter().zip(&o.e).map(|(a, b)| a + b).collect() }
    }

    pub fn pow(&self, k: i64) -> Mon {
        Mon { c: self.c.pow(k).expect("nonzero coefficient"), e: self.e.iter().map(|x| x * k).collect() }
    }

    pub fn inv(&self) -> Mon {
        self.pow(-1)
    }

    pub fn neg(&self) -> Mon {
        Mon { c: -&self.c, e: self.e.clone() }
    }

    pub fn to_ratfun(&self, vars: &VarSet) -> RatFun {
        RatFun::laurent_monomial(vars, self.c.clone(), &self.e)
    }

    /// Reads a Laurent monomial back from a rational function.
    pub fn from_ratfun(r: &RatFun) -> Option<Mon> {
        if !r.is_laurent_monomial() {
            return None;
        }
        let n = r.vars().len();
        let (m, c) = &r.num().terms()[0];
        let top = m.exps(n);
        let bot = r.den_mono().exps(n);
        Some(Mon { c: c.clone(), e: (0..n).map(|i| top[i] as i64 - bot[i] as i64).collect() })
    }
}

fn guard_zero(e: CoeffError) -> MacError {
    match e {
        CoeffError::DivisionByZero => MacError::Invalid("a denominator factor vanishes identically".into()),
        other => other.into(),
    }
}

/// Builder over a product of binomials.
#[derive(Clone, Debug)]
pub struct Prod(pub Term);

impl Prod {
    pub fn one(nvars: usize) -> Self {
        Prod(Term::one(nvars))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `· m`.
    pub fn mon(&mut self, m: &Mon) -> &mut Self {
        self.0.scale(&m.c);
        self.0.times_monomial(&m.e);
        self
    }

    pub fn scalar(&mut self, c: &Rational) -> &mut Self {
        self.0.scale(c);
        self
    }

    /// `· (1 - m)^k`.
    pub fn bin(&mut self, m: &Mon, k: i64) -> Result<&mut Self> {
        self.0.times_one_minus(&m.c, &m.e, k).map_err(guard_zero)?;
        Ok(self)
    }

    /// `· (1 - top) / (1 - bottom)`.
    pub fn ratio(&mut self, top: &Mon, bottom: &Mon) -> Result<&mut Self> {
        self.bin(top, 1)?;
        self.bin(bottom, -1)
    }

    /// `· (base; step)_len^k`.
    pub fn poch(&mut self, base: &Mon, step: &Mon, len: i64, k: i64) -> Result<&mut Self> {
        let mut cur = base.clone();
        for _ in 0..len {
            self.bin(&cur, k)?;
            if self.is_zero() {
                break;
            }
            cur = cur.mul(step);
        }
        Ok(self)
    }

    /// `· (a - b)^k`.
    pub fn diff(&mut self, a: &Mon, b: &Mon, k: i64) -> Result<&mut Self> {
        self.0.times_laurent(&[(a.c.clone(), a.e.clone()), (-&b.c, b.e.clone())], k).map_err(guard_zero)?;
        Ok(self)
    }

    pub fn times(&mut self, o: &Prod) -> &mut Self {
        self.0.times(&o.0);
        self
    }

    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        self.0.eval_rational(point)
    }
}

pub fn sum(vars: &VarSet, terms: &[Prod]) -> RatFun {
    let ts: Vec<Term> = terms.iter().map(|p| p.0.clone()).collect();
    sum_terms(vars, &ts)
}

/// `(-m; m)_k`, read as `Π_{j=0}^{-k-1} (1 + m^{-j})^{-1}` for negative `k`.
pub fn neg_poch(p: &mut Prod, m: &Mon, k: i64) -> Result<()> {
    if k >= 0 {
        for j in 1..=k {
            p.bin(&m.pow(j).neg(), 1)?;
        }
    } else {
        for j in 0..-k {
            p.bin(&m.pow(-j).neg(), -1)?;
        }
    }
    Ok(())
}

/// Value of a sum of products at a point, or `None` if a summand has a pole there.
pub fn eval_sum(terms: &[Prod], point: &[Rational]) -> Option<Rational> {
    let mut acc = Rational::zero();
    for t in terms {
        acc += &t.eval(point)?;
    }
    Some(acc)
}

/// Compares two sums at `3 · nvars` random points that avoid the poles of both sides.
pub fn agree_at_random_points(nvars: usize, lhs: &[Prod], rhs: &[Prod], seed: u64) -> std::result::Result<usize, String> {
    let mut s = PointSampler::new(seed);
    let want = 3 * nvars.max(1);
    let mut done = 0;
    let mut tries = 0;
    while done < want {
        tries += 1;
        if tries > 50 * want {
            return Err("too many sample points hit poles".into());
        }
        let p = s.point(nvars);
        let (Some(a), Some(b)) = (eval_sum(lhs, &p), eval_sum(rhs, &p)) else { continue };
        if a != b {
            return Err(format!("sides differ at {:?}: {a} vs {b}", p.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
        }
        done += 1;
    }
    Ok(done)
}
