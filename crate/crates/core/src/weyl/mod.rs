//! Weights, dominance, the hyperoctahedral group and invariant Laurent polynomials of C_n.

mod character;
mod inner;
mod laurent;
mod wsum;

use std::collections::VecDeque;
use std::fmt;

use rustc_hash::FxHashSet;
use smallvec::SmallVec;

use crate::error::{MacError, Result};

pub use character::{alternant, weyl_character, weyl_denominator};
pub(crate) use character::character_ints;
pub use inner::{inner_product, weight_function};
pub use laurent::LaurentPoly;
pub use wsum::verify_macdonald_wsum;

/// Integer exponent vector, one entry per coordinate `ε_i`.
pub type Exp = SmallVec<[i32; 4]>;

pub fn exp_of(v: &[i32]) -> Exp {
    Exp::from_slice(v)
}

/// A weight `Σ c_i ε_i` of rank `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Exp,
}

impl Weight {
    pub fn new(coords: &[i32]) -> Self {
        Weight { coords: exp_of(coords) }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// `ρ = Σ (n - i + 1) ε_i`.
    pub fn rho(n: usize) -> Self {
        Weight { coords: (0..n).map(|i| (n - i) as i32).collect() }
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1]) && self.coords.last().is_none_or(|&x| x >= 0)
    }

    /// Dominant element of the orbit: absolute values sorted decreasingly.
    pub fn dominant(&self) -> Partition {
        let mut v: Vec<i32> = self.coords.iter().map(|x| x.abs()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(v)
    }
}

/// A dominant weight of C_n: weakly decreasing nonnegative parts. Trailing zeros are not
/// stored, so equal partitions compare equal regardless of the rank they are used in.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<i32>);

impl Partition {
    pub fn new(parts: &[i32]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(MacError::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Self::from_sorted(parts.to_vec()))
    }

    fn from_sorted(mut v: Vec<i32>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Parses `"3,1"`; the empty string and `"0"` give the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<i32>().map_err(|_| MacError::Invalid(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&parts)
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn fits(&self, n: usize) -> bool {
        self.0.len() <= n
    }

    pub fn part(&self, i: usize) -> i32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Coordinates padded with zeros to length `n`.
    pub fn coords(&self, n: usize) -> Exp {
        assert!(self.fits(n), "partition {self:?} does not fit rank {n}");
        (0..n).map(|i| self.part(i)).collect()
    }

    pub fn weight(&self, n: usize) -> Weight {
        Weight { coords: self.coords(n) }
    }

    /// Graded order used for output: larger size first, then lexicographically larger.
    pub fn output_cmp(&self, o: &Partition) -> std::cmp::Ordering {
        o.size().cmp(&self.size()).then_with(|| o.0.cmp(&self.0))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `λ - μ` is a nonnegative combination of `ε_i - ε_{i+1}` and `2ε_n`.
pub fn dominance_leq(mu: &Partition, lam: &Partition, n: usize) -> bool {
    if !mu.fits(n) || !lam.fits(n) {
        return false;
    }
    exp_dominance_leq(&mu.coords(n), &lam.coords(n))
}

pub(crate) fn exp_dominance_leq(mu: &[i32], lam: &[i32]) -> bool {
    let mut s = 0;
    for (a, b) in lam.iter().zip(mu) {
        s += a - b;
        if s < 0 {
            return false;
        }
    }
    s % 2 == 0
}

/// All partitions with at most `n` parts, `|μ| = m` and `μ_1 <= max_part`.
pub fn partitions_of(m: i32, n: usize, max_part: i32) -> Vec<Partition> {
    fn rec(rem: i32, slots: usize, cap: i32, cur: &mut Vec<i32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, slots - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, n, max_part, &mut Vec::new(), &mut out);
    out
}

/// Every partition `μ <= λ` in dominance order, sorted by [`Partition::output_cmp`].
pub fn dominated_by(lam: &Partition, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut m = lam.size();
    while m >= 0 {
        for mu in partitions_of(m, n, lam.part(0)) {
            if dominance_leq(&mu, lam, n) {
                out.push(mu);
            }
        }
        m -= 2;
    }
    out.sort_by(|a, b| a.output_cmp(b));
    out
}

/// Signed permutation `ε_i -> signs[i] ε_{perm[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPerm {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(MacError::Invalid(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.len() != n || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(MacError::Invalid("signs must be ±1, one per coordinate".into()));
        }
        Ok(SignedPerm { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm { perm: (0..n).collect(), signs: vec![1; n] }
    }

    /// Sign flips only, no permutation.
    pub fn flips(signs: &[i8]) -> Self {
        SignedPerm { perm: (0..signs.len()).collect(), signs: signs.to_vec() }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn apply(&self, e: &[i32]) -> Exp {
        let mut out: Exp = smallvec::smallvec![0; e.len()];
        for (i, &x) in e.iter().enumerate() {
            out[self.perm[i]] = self.signs[i] as i32 * x;
        }
        out
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &SignedPerm) -> SignedPerm {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let j = o.perm[i];
            perm[i] = self.perm[j];
            signs[i] = o.signs[i] * self.signs[j];
        }
        SignedPerm { perm, signs }
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPerm { perm, signs }
    }

    /// Determinant of the action on `R^n`.
    pub fn sign(&self) -> i32 {
        let mut s: i32 = self.signs.iter().map(|&x| x as i32).product();
        let mut seen = vec![false; self.n()];
        for i in 0..self.n() {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.perm[j];
                len += 1;
            }
            if len % 2 == 0 {
                s = -s;
            }
        }
        s
    }

    /// All `2^n n!` elements in a fixed order.
    pub fn all(n: usize) -> Vec<SignedPerm> {
        let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
        for k in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for pos in 0..=k {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    next.push(q);
                }
            }
            perms = next;
        }
        perms.sort();
        let mut out = Vec::with_capacity(perms.len() << n);
        for p in perms {
            for mask in 0..(1u32 << n) {
                let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                out.push(SignedPerm { perm: p.clone(), signs });
            }
        }
        out
    }
}

pub fn weyl_group_order(n: usize) -> u64 {
    (1..=n as u64).product::<u64>() << n
}

/// Generators `s_i` (swap `i`, `i+1`) and `s_n` (negate the last coordinate) applied to `e`.
fn simple_reflections(e: &[i32]) -> impl Iterator<Item = Exp> + '_ {
    let n = e.len();
    (0..n).map(move |i| {
        let mut f = Exp::from_slice(e);
        if i + 1 < n {
            f.swap(i, i + 1);
        } else {
            f[i] = -f[i];
        }
        f
    })
}

/// Orbit of a weight, by breadth-first closure under the simple reflections.
pub fn orbit(e: &[i32]) -> Vec<Exp> {
    let start = Exp::from_slice(e);
    let mut seen: FxHashSet<Exp> = FxHashSet::default();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(cur) = queue.pop_front() {
        for f in simple_reflections(&cur) {
            if seen.insert(f.clone()) {
                queue.push_back(f);
            }
        }
        out.push(cur);
    }
    out.sort();
    out
}

/// Orbit of a regular weight together with the sign of the unique group element reaching
/// each point.
pub(crate) fn signed_orbit(e: &[i32]) -> Vec<(Exp, i32)> {
    let start = Exp::from_slice(e);
    let mut seen: rustc_hash::FxHashMap<Exp, i32> = Default::default();
    seen.insert(start.clone(), 1);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        let s = seen[&cur];
        for f in simple_reflections(&cur) {
            if let std::collections::hash_map::Entry::Vacant(v) = seen.entry(f.clone()) {
                v.insert(-s);
                queue.push_back(f);
            }
        }
    }
    let mut out: Vec<(Exp, i32)> = seen.into_iter().collect();
    out.sort();
    out
}

/// `m_λ = Σ_{μ ∈ Wλ} e^μ`.
pub fn orbit_sum(lam: &Partition, n: usize) -> LaurentPoly {
    let mut f = LaurentPoly::zero(n);
    for e in orbit(&lam.coords(n)) {
        f.add_term(e, macdonald_coeff::ExactScalar::one());
    }
    f
}

/// Positive roots of C_n: `ε_i - ε_j`, `ε_i + ε_j` (`i < j`) and `2ε_i`.
pub fn positive_roots(n: usize) -> Vec<Exp> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut a: Exp = smallvec::smallvec![0; n];
            a[i] = 1;
            a[j] = -1;
            out.push(a.clone());
            a[j] = 1;
            out.push(a);
        }
    }
    for i in 0..n {
        let mut a: Exp = smallvec::smallvec![0; n];
        a[i] = 2;
        out.push(a);
    }
    out
}

/// `⟨μ, α^∨⟩` for a root `α` of C_n.
pub fn coroot_pairing(mu: &[i32], alpha: &[i32]) -> i32 {
    let dot: i32 = mu.iter().zip(alpha).map(|(a, b)| a * b).sum();
    let norm: i32 = alpha.iter().map(|x| x * x).sum();
    2 * dot / norm
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i32]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1]), &p(&[2]), 2));
        assert!(!dominance_leq(&p(&[]), &p(&[1]), 2));
        assert!(dominance_leq(&p(&[]), &p(&[1, 1]), 2));
        assert!(!dominance_leq(&p(&[2]), &p(&[1, 1]), 2));
    }

    #[test]
    fn dominance_is_partial_order() {
        for n in 1..=3 {
            let all: Vec<Partition> = (0..=6).flat_map(|m| partitions_of(m, n, m)).collect();
            for a in &all {
                assert!(dominance_leq(a, a, n));
                for b in &all {
                    if a != b && dominance_leq(a, b, n) {
                        assert!(!dominance_leq(b, a, n));
                    }
                    for c in &all {
                        if dominance_leq(a, b, n) && dominance_leq(b, c, n) {
                            assert!(dominance_leq(a, c, n));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn group_structure() {
        for n in 1..=4 {
            let all = SignedPerm::all(n);
            assert_eq!(all.len() as u64, weyl_group_order(n));
            let x = &all[all.len() / 3];
            let y = &all[all.len() - 2];
            let e = exp_of(&[3, -1, 4, 1][..n]);
            assert_eq!(x.compose(y).apply(&e), x.apply(&y.apply(&e)));
            assert_eq!(x.inverse().apply(&x.apply(&e)), e);
            assert_eq!(x.compose(y).sign(), x.sign() * y.sign());
        }
    }

    #[test]
    fn orbit_stabilizer() {
        for n in 1..=4 {
            let w = SignedPerm::all(n);
            for m in 0..=5 {
                for lam in partitions_of(m, n, m) {
                    let c = lam.coords(n);
                    let stab = w.iter().filter(|g| g.apply(&c) == c).count();
                    assert_eq!(orbit(&c).len() * stab, w.len());
                }
            }
        }
    }

    #[test]
    fn orbit_sum_examples() {
        assert_eq!(orbit_sum(&p(&[]), 2), LaurentPoly::one(2));
        let m1 = orbit_sum(&p(&[1]), 2);
        let keys: Vec<Vec<i32>> = m1.terms().map(|(e, _)| e.to_vec()).collect();
        assert_eq!(keys, vec![vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0]]);
        assert_eq!(orbit_sum(&p(&[1, 1]), 2).len(), 4);
    }

    #[test]
    fn orbit_sums_are_invariant() {
        for n in 1..=4 {
            for lam in partitions_of(3, n, 3) {
                let f = orbit_sum(&lam, n);
                for w in SignedPerm::all(n).iter().step_by(5) {
                    assert_eq!(f.act(w), f);
                }
            }
        }
    }

    #[test]
    fn dominated_lists() {
        let d = dominated_by(&p(&[2]), 2);
        assert_eq!(d, vec![p(&[2]), p(&[1, 1]), p(&[])]);
    }
}
