use std::collections::BTreeMap;
use std::fmt::Write as _;

use macdonald_coeff::ExactScalar;
use serde_json::{json, Value};

use crate::error::{MacError, Result};
use crate::macdonald::{onerow_coefficient, qp, qp_inv};

fn check_pair(l1: i64, l2: i64) -> Result<()> {
    if l2 < 0 || l1 < l2 {
        return Err(MacError::Invalid(format!("need λ1 >= λ2 >= 0, got ({l1},{l2})")));
    }
    Ok(())
}

fn in_range(i: i64, j: i64, l2: i64) -> bool {
    i >= 0 && j >= 0 && i + j <= l2
}

/// Coefficient of `Q_{(λ1+i-j, λ2-i-j)}` in `Q_{(λ1)} Q_{(λ2)}`; zero outside `0 <= i+j <= λ2`.
pub fn pieri_c(i: i64, j: i64, l1: i64, l2: i64, n: usize) -> Result<ExactScalar> {
    check_pair(l1, l2)?;
    if !in_range(i, j, l2) {
        return Ok(ExactScalar::zero());
    }
    let (d, s, n2) = (l1 - l2, l1 + l2, 2 * n as i64);
    let mut c = &onerow_coefficient(i) * &onerow_coefficient(j);
    c = &c * &(&qp(d + i + 1, 0, i) / &qp(d + i, 1, i));
    c = &c * &(&qp_inv(s - j - 1, n2, j) / &qp_inv(s - j, n2 - 1, j));
    Ok(c)
}

/// Coefficient of `Q_{(λ1+i-j)} Q_{(λ2-i-j)}` in the expansion of `Q_{(λ1,λ2)}`; zero outside
/// `0 <= i+j <= λ2`. The factor `(1-q^{λ1-λ2+2i})/(1-q^{λ1-λ2+i})` is read as 1 at `i = 0`.
pub fn inverse_c(i: i64, j: i64, l1: i64, l2: i64, n: usize) -> Result<ExactScalar> {
    check_pair(l1, l2)?;
    if !in_range(i, j, l2) {
        return Ok(ExactScalar::zero());
    }
    let (d, s, n2) = (l1 - l2, l1 + l2, 2 * n as i64);
    let mut c = ExactScalar::t_pow(i + j);
    c = &c * &(&qp(0, -1, i) / &qp(1, 0, i));
    c = &c * &(&qp(0, -1, j) / &qp(1, 0, j));
    c = &c * &(&qp(d + 1, 0, i) / &qp(d + 1, 1, i));
    if i > 0 {
        c = &c * &(&ExactScalar::one_minus(1, 2 * (d + 2 * i), 0) / &ExactScalar::one_minus(1, 2 * (d + i), 0));
    }
    c = &c * &(&qp_inv(s - 1, n2, j) / &qp_inv(s - 1, n2 - 1, j));
    c = &c * &(&ExactScalar::one_minus(1, 2 * (s - 2 * j), 2 * n2) / &ExactScalar::one_minus(1, 2 * (s - j), 2 * n2));
    Ok(c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriKind {
    /// `Q_{(λ1)} Q_{(λ2)} = Σ c_ij Q_{(λ1+i-j, λ2-i-j)}`.
    Product,
    /// `Q_{(λ1,λ2)} = Σ C_ij Q_{(λ1+i-j)} Q_{(λ2-i-j)}`.
    Inverse,
}

impl PieriKind {
    pub fn tag(self) -> &'static str {
        match self {
            PieriKind::Product => "product",
            PieriKind::Inverse => "inverse",
        }
    }
}

/// A full coefficient table over `i, j >= 0`, `i + j <= λ2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriExpansion {
    pub kind: PieriKind,
    pub n: usize,
    pub source: (i64, i64),
    pub terms: BTreeMap<(i64, i64), ExactScalar>,
}

impl PieriExpansion {
    fn build(kind: PieriKind, l1: i64, l2: i64, n: usize) -> Result<Self> {
        check_pair(l1, l2)?;
        let f = match kind {
            PieriKind::Product => pieri_c,
            PieriKind::Inverse => inverse_c,
        };
        let mut terms = BTreeMap::new();
        for i in 0..=l2 {
            for j in 0..=l2 - i {
                terms.insert((i, j), f(i, j, l1, l2, n)?);
            }
        }
        Ok(PieriExpansion { kind, n, source: (l1, l2), terms })
    }

    /// Two-row partition indexed by `(i, j)`.
    pub fn target(&self, i: i64, j: i64) -> (i64, i64) {
        (self.source.0 + i - j, self.source.1 - i - j)
    }

    pub fn get(&self, i: i64, j: i64) -> ExactScalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| {
                let (a, b) = self.target(i, j);
                json!({"i": i, "j": j, "target": [a, b], "value": c.to_string()})
            })
            .collect();
        json!({
            "kind": self.kind.tag(),
            "n": self.n,
            "source": [self.source.0, self.source.1],
            "terms": terms,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# {} n={} lambda=({},{})", self.kind.tag(), self.n, self.source.0, self.source.1);
        for (&(i, j), c) in &self.terms {
            let _ = writeln!(s, "{i}\t{j}\t{c}");
        }
        s
    }
}

pub fn expand_tworow_product(l1: i64, l2: i64, n: usize) -> Result<PieriExpansion> {
    PieriExpansion::build(PieriKind::Product, l1, l2, n)
}

pub fn expand_tworow_inverse(l1: i64, l2: i64, n: usize) -> Result<PieriExpansion> {
    PieriExpansion::build(PieriKind::Inverse, l1, l2, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_entries() {
        for (l1, l2) in [(0, 0), (3, 1), (4, 4)] {
            assert!(pieri_c(0, 0, l1, l2, 2).unwrap().is_one());
            assert!(inverse_c(0, 0, l1, l2, 3).unwrap().is_one());
        }
        assert!(pieri_c(2, 0, 3, 1, 2).unwrap().is_zero());
        assert!(inverse_c(-1, 0, 3, 1, 2).unwrap().is_zero());
        assert!(pieri_c(0, 0, 1, 2, 2).is_err());
        assert!(inverse_c(0, 0, 1, -1, 2).is_err());
    }

    #[test]
    fn row_one_values() {
        let n = 3usize;
        let n2 = 2 * n as i64;
        for r in 1..5i64 {
            let c10 = &(&ExactScalar::one_minus(1, 0, 2) * &ExactScalar::one_minus(1, 2 * (r + 1), 0))
                / &(&ExactScalar::one_minus(1, 2, 0) * &ExactScalar::one_minus(1, 2 * r, 2));
            assert_eq!(pieri_c(1, 0, r, 1, n).unwrap(), c10);
            let c01 = &(&ExactScalar::one_minus(1, 0, 2) * &ExactScalar::one_minus(1, 2 * (r - 1), 2 * n2))
                / &(&ExactScalar::one_minus(1, 2, 0) * &ExactScalar::one_minus(1, 2 * r, 2 * (n2 - 1)));
            assert_eq!(pieri_c(0, 1, r, 1, n).unwrap(), c01);
        }
    }

    #[test]
    fn table_shape() {
        let e = expand_tworow_product(2, 2, 2).unwrap();
        assert_eq!(e.terms.len(), 6);
        assert_eq!(e.target(1, 1), (2, 0));
        assert_eq!(expand_tworow_inverse(5, 0, 2).unwrap().terms.len(), 1);
        let js = e.to_json();
        assert_eq!(js["terms"].as_array().unwrap().len(), 6);
        assert_eq!(e.to_text().lines().count(), 7);
    }
}
