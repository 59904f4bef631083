use std::fmt;

use macdonald_coeff::ExactScalar;

use crate::macdonald::BasisExpansion;

/// Outcome of an identity check; a failure names the first discrepancy found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub ok: bool,
    pub detail: Option<String>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { ok: true, detail: None }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Verdict { ok: false, detail: Some(detail.into()) }
    }

    pub fn from_bool(ok: bool, what: impl FnOnce() -> String) -> Self {
        if ok { Self::pass() } else { Self::fail(what()) }
    }

    /// Keeps the first failure.
    pub fn and(self, other: impl FnOnce() -> Verdict) -> Verdict {
        if self.ok { other() } else { self }
    }

    pub fn all(checks: impl IntoIterator<Item = Verdict>) -> Verdict {
        for v in checks {
            if !v.ok {
                return v;
            }
        }
        Verdict::pass()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.ok, &self.detail) {
            (true, _) => write!(f, "ok"),
            (false, Some(d)) => write!(f, "FAILED: {d}"),
            (false, None) => write!(f, "FAILED"),
        }
    }
}

fn short(s: &ExactScalar) -> String {
    let t = s.to_string();
    if t.len() > 160 { format!("{}...", &t[..160]) } else { t }
}

/// Compares two expansions coefficient by coefficient in output order.
pub fn compare_expansions(lhs: &BasisExpansion, rhs: &BasisExpansion, context: &str) -> Verdict {
    if lhs.basis != rhs.basis || lhs.n != rhs.n {
        return Verdict::fail(format!("{context}: expansions live in different spaces"));
    }
    let mut keys: Vec<_> = lhs.terms().into_iter().map(|(k, _)| k.clone()).collect();
    keys.extend(rhs.terms().into_iter().map(|(k, _)| k.clone()));
    keys.sort_by(|a, b| a.output_cmp(b));
    keys.dedup();
    for k in keys {
        let (a, b) = (lhs.get(&k), rhs.get(&k));
        if a != b {
            return Verdict::fail(format!(
                "{context}: coefficient of {}{k} differs: {} vs {}",
                lhs.basis.tag(),
                short(&a),
                short(&b)
            ));
        }
    }
    Verdict::pass()
}
