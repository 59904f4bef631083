use std::collections::BTreeMap;
use std::fmt;

use macdonald_coeff::json::{scalar_from_json, scalar_to_json};
use macdonald_coeff::ExactScalar;
use serde_json::{json, Value};

use crate::error::{MacError, Result};
use crate::weyl::{orbit_sum, LaurentPoly, Partition, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    M,
    P,
    Q,
    Chi,
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::P => "P",
            Basis::Q => "Q",
            Basis::Chi => "chi",
        }
    }

    fn from_tag(s: &str) -> Option<Self> {
        Some(match s {
            "m" => Basis::M,
            "P" => Basis::P,
            "Q" => Basis::Q,
            "chi" => Basis::Chi,
            _ => return None,
        })
    }
}

/// Finite linear combination of basis elements indexed by dominant weights.
#[derive(Clone, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub n: usize,
    coeffs: BTreeMap<Partition, ExactScalar>,
}

impl BasisExpansion {
    pub fn new(basis: Basis, n: usize) -> Self {
        BasisExpansion { basis, n, coeffs: BTreeMap::new() }
    }

    pub fn single(basis: Basis, n: usize, lam: Partition) -> Self {
        let mut e = Self::new(basis, n);
        e.add(lam, ExactScalar::one());
        e
    }

    pub fn add(&mut self, lam: Partition, c: ExactScalar) {
        assert!(lam.fits(self.n), "{lam:?} does not fit rank {}", self.n);
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&lam) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.coeffs.remove(&lam);
                } else {
                    *v = s;
                }
            }
            None => {
                self.coeffs.insert(lam, c);
            }
        }
    }

    pub fn get(&self, lam: &Partition) -> ExactScalar {
        self.coeffs.get(lam).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in output order: larger size first, then lexicographically larger.
    pub fn terms(&self) -> Vec<(&Partition, &ExactScalar)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by(|a, b| a.0.output_cmp(b.0));
        v
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        let mut out = Self::new(self.basis, self.n);
        for (k, v) in &self.coeffs {
            out.add(k.clone(), v * s);
        }
        out
    }

    pub fn add_expansion(&self, o: &Self) -> Self {
        assert!(self.basis == o.basis && self.n == o.n, "expansions in the same basis");
        let mut out = self.clone();
        for (k, v) in &o.coeffs {
            out.add(k.clone(), v.clone());
        }
        out
    }

    pub fn map_scalars(&self, f: impl Fn(&ExactScalar) -> Result<ExactScalar>) -> Result<Self> {
        let mut out = Self::new(self.basis, self.n);
        for (k, v) in &self.coeffs {
            out.add(k.clone(), f(v)?);
        }
        Ok(out)
    }

    /// `Σ c_λ m_λ` as a Laurent polynomial; only meaningful for the orbit-sum basis.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        if self.basis != Basis::M {
            return Err(MacError::Invalid(format!("expansion in basis {} is not in orbit sums", self.basis.tag())));
        }
        let mut f = LaurentPoly::zero(self.n);
        for (lam, c) in &self.coeffs {
            for (e, _) in orbit_sum(lam, self.n).terms() {
                f.add_term(e.clone(), c.clone());
            }
        }
        Ok(f)
    }

    /// Orbit-sum expansion of an invariant Laurent polynomial.
    pub fn from_laurent(f: &LaurentPoly) -> Result<Self> {
        if !f.is_w_invariant() {
            return Err(MacError::NotSymmetric);
        }
        let mut out = Self::new(Basis::M, f.n());
        for (e, c) in f.dominant_terms() {
            out.add(Weight { coords: e.clone() }.dominant(), c.clone());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .terms()
            .into_iter()
            .map(|(l, v)| json!({"lambda": l.coords(self.n).to_vec(), "value": scalar_to_json(v)}))
            .collect();
        json!({"basis": self.basis.tag(), "n": self.n, "coeffs": coeffs})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| MacError::Invalid(format!("basis expansion JSON: {m}"));
        let basis = v["basis"].as_str().and_then(Basis::from_tag).ok_or_else(|| bad("basis"))?;
        let n = v["n"].as_u64().ok_or_else(|| bad("n"))? as usize;
        let mut out = Self::new(basis, n);
        for c in v["coeffs"].as_array().ok_or_else(|| bad("coeffs"))? {
            let parts: Vec<i32> = c["lambda"]
                .as_array()
                .ok_or_else(|| bad("lambda"))?
                .iter()
                .map(|x| x.as_i64().map(|x| x as i32).ok_or_else(|| bad("part")))
                .collect::<Result<_>>()?;
            let lam = Partition::new(&parts)?;
            if !lam.fits(n) {
                return Err(bad("partition does not fit rank"));
            }
            out.add(lam, scalar_from_json(&c["value"])?);
        }
        Ok(out)
    }
}

impl fmt::Debug for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.terms().into_iter().map(|(l, v)| format!("({v})*{}{l}", self.basis.tag())).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
