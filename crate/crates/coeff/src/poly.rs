use std::collections::BTreeMap;
use std::fmt::Write as _;

use dashu_int::IBig;
use rustc_hash::FxHashMap;

use crate::modp;
use crate::mono::{Mono, MAX_VARS};
use crate::rational::{int_gcd, Rational};

/// Sparse multivariate polynomial with rational coefficients.
/// Terms are kept sorted by decreasing graded-lex monomial order with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly {
    terms: Vec<(Mono, Rational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() { Self::zero() } else { Poly { terms: vec![(Mono::ONE, c)] } }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(Rational::from_int(c))
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Mono::var(i, 1), Rational::one())
    }

    pub fn monomial(m: Mono, c: Rational) -> Self {
        if c.is_zero() { Self::zero() } else { Poly { terms: vec![(m, c)] } }
    }

    /// Builds a polynomial from arbitrary terms, merging repeated monomials.
    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, Rational)>) -> Self {
        let mut map: FxHashMap<Mono, Rational> = FxHashMap::default();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            map.entry(m).and_modify(|x| *x += &c).or_insert(c);
        }
        Self::from_map(map)
    }

    fn from_map(map: FxHashMap<Mono, Rational>) -> Self {
        let mut terms: Vec<(Mono, Rational)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn lead(&self) -> Option<&(Mono, Rational)> {
        self.terms.first()
    }

    pub fn lead_coeff(&self) -> Rational {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.0.deg())
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|t| t.0.get(i)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|t| t.0.get(i)).min().unwrap_or(0)
    }

    pub fn degrees(&self) -> [u32; MAX_VARS] {
        let mut d = [0u32; MAX_VARS];
        for (m, _) in &self.terms {
            for (i, di) in d.iter_mut().enumerate() {
                *di = (*di).max(m.get(i));
            }
        }
        d
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.0.get(i) > 0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_integer())
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_mono(&self, mono: &Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect() }
    }

    pub fn mul_term(&self, mono: &Mono, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.mul(mono), x * c)).collect() }
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        if other.is_zero() {
            return self.clone();
        }
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut map: FxHashMap<Mono, Rational> =
            FxHashMap::with_capacity_and_hasher(big.len() * 2, Default::default());
        for (ms, cs) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ms.mul(mb);
                let c = cs * cb;
                match map.get_mut(&m) {
                    Some(x) => *x += &c,
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(map)
    }

    pub fn pow(&self, k: u32) -> Poly {
        if k == 0 {
            return Poly::one();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Poly::monomial(m.pow(k), c.pow(k as i64).expect("nonzero"));
        }
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Poly>) -> Poly {
        let mut fs: Vec<&Poly> = factors.into_iter().collect();
        if fs.iter().any(|f| f.is_zero()) {
            return Poly::zero();
        }
        fs.sort_by_key(|f| f.len());
        let mut acc = Poly::one();
        for f in fs {
            acc = acc.mul(f);
        }
        acc
    }

    /// Exact quotient `self / d` when `d` divides `self`, otherwise `None`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let inv = dc.recip().expect("nonzero");
            let mut out = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                out.push((m.try_div(dm)?, c * &inv));
            }
            return Some(Poly { terms: out });
        }
        let dd = d.degrees();
        let sd = self.degrees();
        for i in 0..MAX_VARS {
            if dd[i] > sd[i] {
                return None;
            }
        }
        let (lm, lc) = &d.terms[0];
        let lc_inv = lc.recip().expect("nonzero");
        let rest = &d.terms[1..];
        let mut rem: BTreeMap<Mono, Rational> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.try_div(lm)?;
            let qc = &c * &lc_inv;
            for (dm, dc) in rest {
                let key = qm.mul(dm);
                let delta = &qc * dc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= &delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Largest monomial dividing every term.
    pub fn mono_content(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some(first) = it.next() else { return Mono::ONE };
        let mut g = first.0;
        for (m, _) in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    pub fn div_mono(&self, m: &Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(x, c)| (m.div_of(x), c.clone())).collect() }
    }

    /// Splits `self = content * primitive` where `primitive` has coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn primitive(&self) -> (Rational, Poly) {
        if self.is_zero() {
            return (Rational::zero(), Poly::zero());
        }
        let mut den_lcm = IBig::ONE;
        for (_, c) in &self.terms {
            if !c.denom().is_one() {
                let g = int_gcd(&den_lcm, c.denom());
                den_lcm = &den_lcm / &g * c.denom();
            }
        }
        let mut num_gcd = IBig::ZERO;
        for (_, c) in &self.terms {
            let v = c.numer() * (&den_lcm / c.denom());
            num_gcd = int_gcd(&num_gcd, &v);
            if num_gcd.is_one() {
                break;
            }
        }
        let neg = self.terms[0].1.is_negative();
        let content = Rational::new(if neg { -num_gcd } else { num_gcd }, den_lcm).expect("nonzero");
        if content.is_one() {
            return (content, self.clone());
        }
        let inv = content.recip().expect("nonzero");
        (content, self.scale(&inv))
    }

    pub fn is_primitive_normalized(&self) -> bool {
        let (c, _) = self.primitive();
        c.is_one()
    }

    /// Coefficients with respect to indeterminate `i`: pairs `(k, coeff of x_i^k)`, ascending in `k`.
    pub fn coeffs_in(&self, i: usize) -> Vec<(u32, Poly)> {
        let mut groups: BTreeMap<u32, Vec<(Mono, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.get(i);
            let mut r = *m;
            r.set(i, 0);
            groups.entry(k).or_default().push((r, c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, mut ts)| {
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                (k, Poly { terms: ts })
            })
            .collect()
    }

    pub fn eval_mod(&self, point: &[u64], p: u64) -> Option<u64> {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut v = c.mod_p(p)?;
            for (i, &x) in point.iter().enumerate() {
                let e = m.get(i);
                if e > 0 {
                    v = modp::mul(v, modp::pow(x, e as u64, p), p);
                }
            }
            acc = modp::add(acc, v, p);
        }
        Some(acc)
    }

    pub fn eval_rational(&self, point: &[Rational]) -> Rational {
        let nv = point.len();
        let mut pows: Vec<Vec<Rational>> = vec![vec![Rational::one()]; nv];
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in 0..nv {
                let e = m.get(i) as usize;
                if e == 0 {
                    continue;
                }
                while pows[i].len() <= e {
                    let nxt = pows[i].last().unwrap() * &point[i];
                    pows[i].push(nxt);
                }
                v *= &pows[i][e];
            }
            acc += &v;
        }
        acc
    }

    /// Renames indeterminates: index `i` goes to `map[i]`.
    pub fn remap(&self, map: &[usize]) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut r = Mono::ONE;
            for (i, &j) in map.iter().enumerate() {
                let e = m.get(i);
                if e > 0 {
                    r.set(j, r.get(j) + e);
                }
            }
            (r, c.clone())
        }))
    }

    /// Cheap one-sided divisibility filter: `false` means `self` certainly does not
    /// divide `n`; `true` is inconclusive.
    pub fn may_divide(&self, n: &Poly) -> bool {
        if n.len() < 32 || self.is_constant() {
            return true;
        }
        let p = modp::large_primes()[7];
        let degs = self.degrees();
        let Some(v) = (0..MAX_VARS).max_by_key(|&i| degs[i]) else { return true };
        let dv = degs[v] as usize;
        let nd = n.degrees();
        let mut point = [0u64; MAX_VARS];
        for (i, x) in point.iter_mut().enumerate() {
            *x = splitmix(0x9e37_79b9 ^ (i as u64) * 0x1000_0001) % (p - 2) + 2;
        }
        let image = |f: &Poly, deg: usize| -> Option<Vec<u64>> {
            let mut u = vec![0u64; deg + 1];
            for (m, c) in &f.terms {
                let mut x = c.mod_p(p)?;
                for (i, &pt) in point.iter().enumerate() {
                    if i == v {
                        continue;
                    }
                    let e = m.get(i);
                    if e > 0 {
                        x = modp::mul(x, modp::pow(pt, e as u64, p), p);
                    }
                }
                let k = m.get(v) as usize;
                u[k] = modp::add(u[k], x, p);
            }
            Some(u)
        };
        let Some(fi) = image(self, dv) else { return true };
        if fi[dv] == 0 {
            return true;
        }
        let Some(mut ni) = image(n, nd[v] as usize) else { return true };
        if ni.len() < fi.len() {
            return ni.iter().all(|&x| x == 0);
        }
        let inv = modp::inv(fi[dv], p);
        for i in (dv..ni.len()).rev() {
            let c = modp::mul(ni[i], inv, p);
            if c != 0 {
                for j in 0..=dv {
                    ni[i - dv + j] = modp::sub(ni[i - dv + j], modp::mul(c, fi[j], p), p);
                }
            }
        }
        ni[..dv].iter().all(|&x| x == 0)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut parts = Vec::new();
            for (i, n) in names.iter().enumerate() {
                match m.get(i) {
                    0 => {}
                    1 => parts.push(n.clone()),
                    e => parts.push(format!("{n}^{e}")),
                }
            }
            if parts.is_empty() {
                let _ = write!(s, "{a}");
            } else if a.is_one() {
                s.push_str(&parts.join("*"));
            } else {
                let _ = write!(s, "{a}*{}", parts.join("*"));
            }
        }
        s
    }
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = (0..MAX_VARS).map(|i| format!("v{i}")).collect();
        write!(f, "{}", self.to_string_with(&names))
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(i)
    }

    fn c(v: i64) -> Poly {
        Poly::from_i64(v)
    }

    #[test]
    fn ring_basics() {
        let p = x(0).add(&c(1));
        let q = x(0).sub(&c(1));
        let pq = p.mul(&q);
        assert_eq!(pq, x(0).pow(2).sub(&c(1)));
        assert_eq!(pq.div_exact(&p), Some(q.clone()));
        assert_eq!(pq.div_exact(&x(1)), None);
        assert_eq!(x(0).pow(2).add(&c(1)).div_exact(&p), None);
    }

    #[test]
    fn multivariate_division() {
        let a = x(0).sub(&x(1).mul(&x(2)));
        let b = x(0).mul(&x(1)).add(&c(3)).add(&x(2).pow(2));
        let ab = a.mul(&b);
        assert_eq!(ab.div_exact(&a), Some(b.clone()));
        assert_eq!(ab.div_exact(&b), Some(a.clone()));
        assert_eq!(ab.add(&c(1)).div_exact(&b), None);
    }

    #[test]
    fn primitive_part() {
        let p = x(0).scale(&Rational::new(-3, 4).unwrap()).add(&Poly::constant(Rational::new(3, 2).unwrap()));
        let (ct, pp) = p.primitive();
        assert_eq!(ct, Rational::new(-3, 4).unwrap());
        assert_eq!(pp, x(0).sub(&c(2)));
    }

    #[test]
    fn content_and_coeffs() {
        let p = x(0).pow(2).mul(&x(1)).add(&x(0).mul(&x(1)).scale(&Rational::from(5)));
        assert_eq!(p.mono_content(), Mono::from_exps(&[1, 1]).unwrap());
        let cs = p.coeffs_in(0);
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].0, 1);
        assert_eq!(cs[1].1, x(1));
    }
}
