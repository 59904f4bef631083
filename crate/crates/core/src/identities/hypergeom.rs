use macdonald_coeff::{qpoch, RatFun, VarSet};

use super::terms::{sum, Mon, Prod};
use crate::error::{MacError, Result};

/// `_{r+1}φ_r[upper; lower; base, argument]` summed over `0 <= i <= truncation`.
#[derive(Clone, Debug)]
pub struct HypergeomSpec {
    pub upper: Vec<RatFun>,
    pub lower: Vec<RatFun>,
    pub base: RatFun,
    pub argument: RatFun,
    pub truncation: usize,
}

impl HypergeomSpec {
    pub fn new(upper: Vec<RatFun>, lower: Vec<RatFun>, base: RatFun, argument: RatFun, truncation: usize) -> Result<Self> {
        if upper.len() != lower.len() + 1 {
            return Err(MacError::Invalid(format!(
                "{} upper and {} lower parameters; need one more upper than lower",
                upper.len(),
                lower.len()
            )));
        }
        Ok(HypergeomSpec { upper, lower, base, argument, truncation })
    }

    /// Built from Laurent monomials over one variable set.
    pub fn from_monomials(vars: &VarSet, upper: &[Mon], lower: &[Mon], base: &Mon, argument: &Mon, truncation: usize) -> Result<Self> {
        let r = |m: &Mon| m.to_ratfun(vars);
        Self::new(upper.iter().map(r).collect(), lower.iter().map(r).collect(), r(base), r(argument), truncation)
    }

    pub fn vars(&self) -> &VarSet {
        self.base.vars()
    }

    /// Whether some upper parameter is `base^{-m}` with `m <= truncation`.
    pub fn is_terminating(&self) -> bool {
        (0..=self.truncation as i64).any(|m| {
            let Ok(p) = self.base.pow(-m) else { return false };
            self.upper.iter().any(|a| *a == p)
        })
    }

    fn monomials(&self) -> Option<(Vec<Mon>, Vec<Mon>, Mon, Mon)> {
        let all = |v: &[RatFun]| v.iter().map(Mon::from_ratfun).collect::<Option<Vec<_>>>();
        Some((all(&self.upper)?, all(&self.lower)?, Mon::from_ratfun(&self.base)?, Mon::from_ratfun(&self.argument)?))
    }
}

fn vanishing(i: usize) -> MacError {
    MacError::Invalid(format!("lower Pochhammer symbol vanishes at summation index {i}"))
}

/// The summands of a series with monomial parameters, as factored products.
pub(crate) fn phi_terms(upper: &[Mon], lower: &[Mon], base: &Mon, argument: &Mon, truncation: usize) -> Result<Vec<Prod>> {
    let nv = base.e.len();
    let mut out = Vec::new();
    for i in 0..=truncation {
        let k = i as i64;
        let mut p = Prod::one(nv);
        for a in upper {
            p.poch(a, base, k, 1)?;
        }
        if p.is_zero() {
            break;
        }
        for b in lower.iter().chain(std::iter::once(base)) {
            p.poch(b, base, k, -1).map_err(|_| vanishing(i))?;
        }
        p.mon(&argument.pow(k));
        out.push(p);
    }
    Ok(out)
}

/// Exact finite sum of the series.
pub fn phi_series(spec: &HypergeomSpec) -> Result<RatFun> {
    let vars = spec.vars().clone();
    if spec.argument.is_zero() {
        return Ok(RatFun::one(&vars));
    }
    if let Some((u, l, b, z)) = spec.monomials() {
        return Ok(sum(&vars, &phi_terms(&u, &l, &b, &z, spec.truncation)?));
    }
    let mut acc = RatFun::zero(&vars);
    let mut zpow = RatFun::one(&vars);
    for i in 0..=spec.truncation as i64 {
        let mut num = zpow.clone();
        for a in &spec.upper {
            num = num.mul(&qpoch(a, &spec.base, i)?);
        }
        if num.is_zero() {
            break;
        }
        let mut den = qpoch(&spec.base, &spec.base, i)?;
        for b in &spec.lower {
            den = den.mul(&qpoch(b, &spec.base, i)?);
        }
        if den.is_zero() {
            return Err(vanishing(i as usize));
        }
        acc = acc.add(&num.div(&den)?);
        zpow = zpow.mul(&spec.argument);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_binomial_theorem_terminates() {
        // 1φ0[q^{-3}; -; q, z] = (z q^{-3}; q)_3
        let vs = VarSet::new(&["q", "z"]).unwrap();
        let q = RatFun::var(&vs, "q").unwrap();
        let z = RatFun::var(&vs, "z").unwrap();
        let spec = HypergeomSpec::new(vec![q.pow(-3).unwrap()], vec![], q.clone(), z.clone(), 5).unwrap();
        assert!(spec.is_terminating());
        let want = qpoch(&z.mul(&q.pow(-3).unwrap()), &q, 3).unwrap();
        assert_eq!(phi_series(&spec).unwrap(), want);
        let w = z.add(&RatFun::one(&vs));
        let padded = HypergeomSpec::new(vec![q.pow(-3).unwrap(), w.clone()], vec![w], q.clone(), z.clone(), 5).unwrap();
        assert_eq!(phi_series(&padded).unwrap(), want);
    }

    #[test]
    fn zero_argument_and_bad_lower() {
        let vs = VarSet::new(&["q"]).unwrap();
        let q = RatFun::var(&vs, "q").unwrap();
        let spec = HypergeomSpec::new(vec![q.clone(), q.clone()], vec![q.clone()], q.clone(), RatFun::zero(&vs), 3).unwrap();
        assert!(phi_series(&spec).unwrap().is_one());
        let bad = HypergeomSpec::new(vec![q.clone(), q.clone()], vec![q.pow(-1).unwrap()], q.clone(), q.clone(), 3).unwrap();
        assert!(phi_series(&bad).is_err());
        assert!(HypergeomSpec::new(vec![q.clone()], vec![q.clone()], q.clone(), q.clone(), 1).is_err());
    }
}
