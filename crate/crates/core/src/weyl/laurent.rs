use std::collections::BTreeMap;
use std::fmt;

use macdonald_coeff::json::{scalar_from_json, scalar_to_json};
use macdonald_coeff::ExactScalar;
use serde_json::{json, Value};

use super::{Exp, SignedPerm};
use crate::error::{MacError, Result};

/// Laurent polynomial in `x_1..x_n` with coefficients in the field of `q^{1/2}, t^{1/2}`.
/// Terms iterate in lexicographic order of their exponent vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Exp, ExactScalar>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: ExactScalar) -> Self {
        let mut f = Self::zero(n);
        f.add_term(smallvec::smallvec![0; n], c);
        f
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, ExactScalar::one())
    }

    pub fn monomial(e: &[i32], c: ExactScalar) -> Self {
        let mut f = Self::zero(e.len());
        f.add_term(Exp::from_slice(e), c);
        f
    }

    /// `x_i` (zero based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e: Exp = smallvec::smallvec![0; n];
        e[i] = 1;
        Self::monomial(&e, ExactScalar::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i32]) -> ExactScalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Exp, c: ExactScalar) {
        assert_eq!(e.len(), self.n, "exponent length does not match rank");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &LaurentPoly) -> LaurentPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, s: &ExactScalar) -> LaurentPoly {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        self.map_coeffs(|c| c * s)
    }

    fn map_coeffs(&self, f: impl Fn(&ExactScalar) -> ExactScalar) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), f(c))).filter(|(_, c)| !c.is_zero()).collect();
        LaurentPoly { n: self.n, terms }
    }

    /// Product; coefficients of each output monomial are accumulated in one pass.
    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.n, o.n);
        let mut acc: BTreeMap<Exp, Vec<(&ExactScalar, &ExactScalar)>> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exp = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                acc.entry(e).or_default().push((c1, c2));
            }
        }
        let terms = acc
            .into_iter()
            .map(|(e, ps)| (e, ExactScalar::sum_of_products(&ps)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        LaurentPoly { n: self.n, terms }
    }

    /// `f(w^{-1} x)`: the term `e^μ` goes to `e^{wμ}`.
    pub fn act(&self, w: &SignedPerm) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (w.apply(e), c.clone())).collect();
        LaurentPoly { n: self.n, terms }
    }

    /// Bar involution `e^μ -> e^{-μ}`.
    pub fn bar(&self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone())).collect();
        LaurentPoly { n: self.n, terms }
    }

    pub fn constant_term(&self) -> ExactScalar {
        self.coeff(&vec![0; self.n])
    }

    /// Invariance under every signed permutation: each orbit carries a single coefficient.
    pub fn is_w_invariant(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            let n = e.len();
            (0..n).all(|i| {
                let mut f = e.clone();
                if i + 1 < n {
                    f.swap(i, i + 1);
                } else {
                    f[i] = -f[i];
                }
                self.terms.get(&f) == Some(c)
            })
        })
    }

    /// Coefficients at dominant exponents, i.e. the expansion in orbit sums of an
    /// invariant polynomial.
    pub fn dominant_terms(&self) -> impl Iterator<Item = (&Exp, &ExactScalar)> {
        self.terms.iter().filter(|(e, _)| super::Weight { coords: (*e).clone() }.is_dominant())
    }

    pub fn map_scalars(&self, f: impl Fn(&ExactScalar) -> Result<ExactScalar>) -> Result<LaurentPoly> {
        let mut r = Self::zero(self.n);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), f(c)?);
        }
        Ok(r)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.terms.iter().map(|(e, c)| json!({"exp": e.to_vec(), "coeff": scalar_to_json(c)})).collect();
        json!({"n": self.n, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| MacError::Invalid(format!("Laurent polynomial JSON: {m}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let mut f = Self::zero(n);
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let e: Exp = t["exp"]
                .as_array()
                .ok_or_else(|| bad("missing exp"))?
                .iter()
                .map(|x| x.as_i64().map(|x| x as i32).ok_or_else(|| bad("bad exponent")))
                .collect::<Result<_>>()?;
            if e.len() != n {
                return Err(bad("exponent length"));
            }
            f.add_term(e, scalar_from_json(&t["coeff"])?);
        }
        Ok(f)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("({c})*x^{:?}", e.to_vec())).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_json() {
        let x = LaurentPoly::var(2, 0);
        let y = LaurentPoly::var(2, 1).bar();
        let f = x.add(&y).scale(&ExactScalar::q());
        let g = f.mul(&f);
        assert_eq!(g.coeff(&[1, -1]), &ExactScalar::from_i64(2) * &ExactScalar::q_pow(2));
        assert_eq!(LaurentPoly::from_json(&g.to_json()).unwrap(), g);
        assert!(g.sub(&g).is_zero());
    }
}
