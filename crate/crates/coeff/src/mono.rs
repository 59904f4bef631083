use std::fmt;
use std::sync::Arc;

use crate::error::CoeffError;

pub const MAX_VARS: usize = 24;

/// Exponent vector of a monomial. The derived ordering is graded lexicographic
/// with the first indeterminate largest.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    deg: u32,
    e: [u16; MAX_VARS],
}

impl Mono {
    pub const ONE: Mono = Mono { deg: 0, e: [0; MAX_VARS] };

    pub fn from_exps(exps: &[u32]) -> Result<Self, CoeffError> {
        if exps.len() > MAX_VARS {
            return Err(CoeffError::TooManyVars(exps.len()));
        }
        let mut m = Mono::ONE;
        for (i, &x) in exps.iter().enumerate() {
            let x = u16::try_from(x).map_err(|_| CoeffError::Overflow)?;
            m.e[i] = x;
            m.deg += x as u32;
        }
        Ok(m)
    }

    pub fn var(i: usize, k: u32) -> Self {
        let mut m = Mono::ONE;
        m.e[i] = k as u16;
        m.deg = k;
        m
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.e[i] as u32
    }

    pub fn set(&mut self, i: usize, k: u32) {
        self.deg = self.deg - self.e[i] as u32 + k;
        self.e[i] = u16::try_from(k).expect("exponent overflow");
    }

    pub fn exps(&self, nvars: usize) -> Vec<u32> {
        self.e[..nvars].iter().map(|&x| x as u32).collect()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.e[i] = r.e[i].checked_add(o.e[i]).expect("exponent overflow");
        }
        r.deg += o.deg;
        r
    }

    pub fn pow(&self, k: u32) -> Mono {
        let mut r = Mono::ONE;
        for i in 0..MAX_VARS {
            r.e[i] = u16::try_from(self.e[i] as u32 * k).expect("exponent overflow");
        }
        r.deg = self.deg * k;
        r
    }

    #[inline]
    pub fn divides(&self, o: &Mono) -> bool {
        self.deg <= o.deg && (0..MAX_VARS).all(|i| self.e[i] <= o.e[i])
    }

    /// `o / self`, assuming `self` divides `o`.
    #[inline]
    pub fn div_of(&self, o: &Mono) -> Mono {
        let mut r = *o;
        for i in 0..MAX_VARS {
            r.e[i] -= self.e[i];
        }
        r.deg -= self.deg;
        r
    }

    pub fn try_div(&self, d: &Mono) -> Option<Mono> {
        if d.divides(self) { Some(d.div_of(self)) } else { None }
    }

    pub fn gcd(&self, o: &Mono) -> Mono {
        let mut r = Mono::ONE;
        for i in 0..MAX_VARS {
            r.e[i] = self.e[i].min(o.e[i]);
            r.deg += r.e[i] as u32;
        }
        r
    }

    pub fn lcm(&self, o: &Mono) -> Mono {
        let mut r = Mono::ONE;
        for i in 0..MAX_VARS {
            r.e[i] = self.e[i].max(o.e[i]);
            r.deg += r.e[i] as u32;
        }
        r
    }

    /// Compare by pure lexicographic order, ignoring degree.
    pub fn lex_cmp(&self, o: &Mono) -> std::cmp::Ordering {
        self.e.cmp(&o.e)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.e.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.e[..last])
    }
}

/// Ordered list of indeterminate names shared by polynomials and rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, CoeffError> {
        if names.len() > MAX_VARS {
            return Err(CoeffError::TooManyVars(names.len()));
        }
        let v: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in v.iter().enumerate() {
            if n.is_empty() || v[..i].contains(n) {
                return Err(CoeffError::Parse(format!("bad or repeated indeterminate name {n:?}")));
            }
        }
        Ok(VarSet(Arc::new(v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn same(&self, o: &VarSet) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || self.0 == o.0
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let m = |v: &[u32]| Mono::from_exps(v).unwrap();
        assert!(m(&[0, 2]) > m(&[1, 0]));
        assert!(m(&[1, 1]) > m(&[0, 2]));
        assert!(m(&[2, 0]) > m(&[1, 1]));
        assert!(m(&[0, 0, 1]) < m(&[0, 1, 0]));
    }

    #[test]
    fn divisibility() {
        let m = |v: &[u32]| Mono::from_exps(v).unwrap();
        assert!(m(&[1, 0]).divides(&m(&[2, 3])));
        assert!(!m(&[1, 4]).divides(&m(&[2, 3])));
        assert_eq!(m(&[1, 1]).div_of(&m(&[2, 3])), m(&[1, 2]));
        assert_eq!(m(&[3, 1]).gcd(&m(&[2, 3])), m(&[2, 1]));
    }
}
