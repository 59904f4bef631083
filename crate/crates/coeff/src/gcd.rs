//! Multivariate polynomial GCD over the rationals.
//!
//! Dense modular algorithm: images modulo word-sized primes are computed by
//! recursive evaluation/interpolation in the last active indeterminate,
//! combined by Chinese remaindering and confirmed by trial division.

use std::collections::BTreeMap;

use dashu_int::IBig;
use rustc_hash::FxHashMap;

use crate::modp;
use crate::mono::{Mono, MAX_VARS};
use crate::poly::Poly;
use crate::rational::{ibig_mod, Rational};

type PTerms = Vec<(Mono, u64)>;
type Rec = BTreeMap<Mono, Vec<u64>>;

// ---------- dense univariate helpers over F_p ----------

fn utrim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn udeg(a: &[u64]) -> usize {
    a.len().saturating_sub(1)
}

fn ueval(a: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0;
    for &c in a.iter().rev() {
        acc = modp::add(modp::mul(acc, x, p), c, p);
    }
    acc
}

fn umonic(a: &[u64], p: u64) -> Vec<u64> {
    let Some(&l) = a.last() else { return Vec::new() };
    let inv = modp::inv(l, p);
    a.iter().map(|&c| modp::mul(c, inv, p)).collect()
}

fn udivrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let inv = modp::inv(b[db], p);
    let mut q = vec![0u64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = modp::mul(r[i + db], inv, p);
        q[i] = c;
        if c != 0 {
            for j in 0..=db {
                r[i + j] = modp::sub(r[i + j], modp::mul(c, b[j], p), p);
            }
        }
    }
    r.truncate(db);
    (utrim(q), utrim(r))
}

fn ugcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = utrim(a.to_vec());
    let mut y = utrim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = udivrem(&x, &y, p);
        x = y;
        y = r;
    }
    umonic(&x, p)
}

fn umul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = modp::add(r[i + j], modp::mul(x, y, p), p);
        }
    }
    utrim(r)
}

fn uadd_scaled(a: &mut Vec<u64>, b: &[u64], s: u64, p: u64) {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (i, &y) in b.iter().enumerate() {
        a[i] = modp::add(a[i], modp::mul(y, s, p), p);
    }
    let t = std::mem::take(a);
    *a = utrim(t);
}

// ---------- sparse multivariate helpers over F_p ----------

fn lex_lead(a: &PTerms) -> Option<&(Mono, u64)> {
    a.iter().max_by(|x, y| x.0.lex_cmp(&y.0))
}

fn pmonic(a: PTerms, p: u64) -> PTerms {
    let Some(&(_, l)) = lex_lead(&a) else { return a };
    let inv = modp::inv(l, p);
    a.into_iter().map(|(m, c)| (m, modp::mul(c, inv, p))).collect()
}

fn to_rec(a: &PTerms, v: usize) -> Rec {
    let mut r: Rec = BTreeMap::new();
    for (m, c) in a {
        let k = m.get(v) as usize;
        let mut key = *m;
        key.set(v, 0);
        let u = r.entry(key).or_default();
        if u.len() <= k {
            u.resize(k + 1, 0);
        }
        u[k] = *c;
    }
    r
}

fn from_rec(r: &Rec, v: usize) -> PTerms {
    let mut out = Vec::new();
    for (key, u) in r {
        for (k, &c) in u.iter().enumerate() {
            if c != 0 {
                let mut m = *key;
                m.set(v, k as u32);
                out.push((m, c));
            }
        }
    }
    out
}

fn rec_content(r: &Rec, p: u64) -> Vec<u64> {
    let mut g: Vec<u64> = Vec::new();
    for u in r.values() {
        g = if g.is_empty() { umonic(u, p) } else { ugcd(&g, u, p) };
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn rec_div_u(r: &Rec, d: &[u64], p: u64) -> Rec {
    if d.len() <= 1 {
        return r.clone();
    }
    r.iter()
        .map(|(k, u)| {
            let (q, rem) = udivrem(u, d, p);
            debug_assert!(rem.is_empty());
            (*k, q)
        })
        .collect()
}

fn rec_lead(r: &Rec) -> &Vec<u64> {
    r.iter().max_by(|x, y| x.0.lex_cmp(y.0)).map(|x| x.1).expect("nonempty")
}

fn rec_deg(r: &Rec) -> usize {
    r.values().map(|u| udeg(u)).max().unwrap_or(0)
}

fn rec_eval(r: &Rec, x: u64, p: u64) -> PTerms {
    r.iter()
        .filter_map(|(k, u)| {
            let c = ueval(u, x, p);
            (c != 0).then_some((*k, c))
        })
        .collect()
}

fn pdegrees(a: &PTerms) -> [u32; MAX_VARS] {
    let mut d = [0u32; MAX_VARS];
    for (m, _) in a {
        for (i, di) in d.iter_mut().enumerate() {
            *di = (*di).max(m.get(i));
        }
    }
    d
}

/// Whether `d` divides `a` in F_p[x].
fn pdivides(d: &PTerms, a: &PTerms, p: u64) -> bool {
    if a.is_empty() {
        return true;
    }
    let dd = pdegrees(d);
    let ad = pdegrees(a);
    if (0..MAX_VARS).any(|i| dd[i] > ad[i]) {
        return false;
    }
    let mut ds = d.clone();
    ds.sort_unstable_by(|x, y| y.0.cmp(&x.0));
    let (lm, lc) = ds[0];
    let inv = modp::inv(lc, p);
    let mut rem: BTreeMap<Mono, u64> = a.iter().cloned().collect();
    while let Some((m, c)) = rem.pop_last() {
        let Some(qm) = m.try_div(&lm) else { return false };
        let qc = modp::mul(c, inv, p);
        for (dm, dc) in &ds[1..] {
            let key = qm.mul(dm);
            let delta = modp::mul(qc, *dc, p);
            let e = rem.entry(key).or_insert(0);
            *e = modp::sub(*e, delta, p);
            if *e == 0 {
                rem.remove(&key);
            }
        }
    }
    true
}

fn univariate_from(a: &PTerms, v: usize) -> Vec<u64> {
    let mut u = Vec::new();
    for (m, c) in a {
        let k = m.get(v) as usize;
        if u.len() <= k {
            u.resize(k + 1, 0);
        }
        u[k] = *c;
    }
    utrim(u)
}

fn univariate_to(u: &[u64], v: usize) -> PTerms {
    u.iter().enumerate().filter(|(_, c)| **c != 0).map(|(k, &c)| (Mono::var(v, k as u32), c)).collect()
}

fn pgcd(a: &PTerms, b: &PTerms, vs: &[usize], p: u64) -> PTerms {
    if a.is_empty() {
        return pmonic(b.clone(), p);
    }
    if b.is_empty() {
        return pmonic(a.clone(), p);
    }
    if vs.is_empty() {
        return vec![(Mono::ONE, 1)];
    }
    let v = *vs.last().unwrap();
    if vs.len() == 1 {
        let g = ugcd(&univariate_from(a, v), &univariate_from(b, v), p);
        return univariate_to(&g, v);
    }
    let rest = &vs[..vs.len() - 1];
    let ra = to_rec(a, v);
    let rb = to_rec(b, v);
    let ca = rec_content(&ra, p);
    let cb = rec_content(&rb, p);
    let c = ugcd(&ca, &cb, p);
    let ra = rec_div_u(&ra, &ca, p);
    let rb = rec_div_u(&rb, &cb, p);
    let la = rec_lead(&ra).clone();
    let lb = rec_lead(&rb).clone();
    let g = ugcd(&la, &lb, p);
    let bound = udeg(&g) + rec_deg(&ra).min(rec_deg(&rb));
    let a_pp = from_rec(&ra, v);
    let b_pp = from_rec(&rb, v);

    let mut h: Option<(Rec, Mono)> = None;
    let mut newton: Vec<u64> = vec![1];
    let mut npts = 0usize;
    let mut alpha = 0u64;
    loop {
        alpha += 1;
        assert!(alpha < p, "ran out of evaluation points");
        let (la_a, lb_a) = (ueval(&la, alpha, p), ueval(&lb, alpha, p));
        if la_a == 0 || lb_a == 0 {
            continue;
        }
        let img = pgcd(&rec_eval(&ra, alpha, p), &rec_eval(&rb, alpha, p), rest, p);
        let glm = lex_lead(&img).expect("nonzero gcd").0;
        if glm.is_one() {
            return pmonic(univariate_to(&c, v), p);
        }
        let ga = ueval(&g, alpha, p);
        let img: PTerms = img.into_iter().map(|(m, x)| (m, modp::mul(x, ga, p))).collect();
        let restart = match &h {
            None => true,
            Some((_, lm)) => match glm.lex_cmp(lm) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => continue,
                std::cmp::Ordering::Equal => false,
            },
        };
        let mut stable = false;
        if restart {
            let rec: Rec = img.into_iter().map(|(m, x)| (m, vec![x])).collect();
            h = Some((rec, glm));
            newton = vec![modp::neg(alpha, p), 1];
            npts = 1;
        } else {
            let (rec, _) = h.as_mut().unwrap();
            let mut diff: FxHashMap<Mono, u64> = FxHashMap::default();
            for (m, u) in rec.iter() {
                let x = ueval(u, alpha, p);
                if x != 0 {
                    diff.insert(*m, modp::neg(x, p));
                }
            }
            for (m, x) in img {
                let e = diff.entry(m).or_insert(0);
                *e = modp::add(*e, x, p);
            }
            diff.retain(|_, x| *x != 0);
            if diff.is_empty() {
                stable = true;
            } else {
                let ninv = modp::inv(ueval(&newton, alpha, p), p);
                for (m, x) in diff {
                    let s = modp::mul(x, ninv, p);
                    let u = rec.entry(m).or_default();
                    uadd_scaled(u, &newton, s, p);
                }
                rec.retain(|_, u| !u.is_empty());
            }
            newton = umul(&newton, &[modp::neg(alpha, p), 1], p);
            npts += 1;
        }
        if stable || npts > bound + 1 || bound == 0 {
            let (rec, _) = h.as_ref().unwrap();
            let hc = rec_content(rec, p);
            let cand = from_rec(&rec_div_u(rec, &hc, p), v);
            if pdivides(&cand, &a_pp, p) && pdivides(&cand, &b_pp, p) {
                let cr: Rec = to_rec(&cand, v).into_iter().map(|(k, u)| (k, umul(&u, &c, p))).collect();
                return pmonic(from_rec(&cr, v), p);
            }
            if npts > bound + 1 {
                h = None;
            }
        }
    }
}

// ---------- integer level ----------

fn lex_lead_coeff(a: &Poly) -> &Rational {
    &a.terms().iter().max_by(|x, y| x.0.lex_cmp(&y.0)).expect("nonzero").1
}

fn to_modp(a: &Poly, p: u64) -> PTerms {
    a.terms()
        .iter()
        .filter_map(|(m, c)| {
            let r = ibig_mod(c.numer(), p);
            (r != 0).then_some((*m, r))
        })
        .collect()
}

fn symmetric(h: &BTreeMap<Mono, IBig>, modulus: &IBig) -> Poly {
    let half = modulus / IBig::from(2);
    Poly::from_terms(h.iter().map(|(m, x)| {
        let v = if x > &half { x - modulus } else { x.clone() };
        (*m, Rational::from_int(v))
    }))
}

/// GCD of primitive integer polynomials sharing the same active indeterminates.
fn mgcd(a: &Poly, b: &Poly, vs: &[usize]) -> Poly {
    let la = lex_lead_coeff(a).numer().clone();
    let lb = lex_lead_coeff(b).numer().clone();
    let gamma = crate::rational::int_gcd(&la, &lb);
    let mut h: Option<(BTreeMap<Mono, IBig>, Mono)> = None;
    let mut modulus = IBig::ONE;
    let mut last: Option<Poly> = None;
    for &p in crate::modp::large_primes() {
        if ibig_mod(&la, p) == 0 || ibig_mod(&lb, p) == 0 {
            continue;
        }
        let gp = pgcd(&to_modp(a, p), &to_modp(b, p), vs, p);
        let glm = lex_lead(&gp).expect("nonzero").0;
        if glm.is_one() {
            return Poly::one();
        }
        let gm = ibig_mod(&gamma, p);
        let gp: Vec<(Mono, u64)> = gp.into_iter().map(|(m, x)| (m, modp::mul(x, gm, p))).collect();
        let restart = match &h {
            None => true,
            Some((_, lm)) => match glm.lex_cmp(lm) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => continue,
                std::cmp::Ordering::Equal => false,
            },
        };
        if restart {
            h = Some((gp.into_iter().map(|(m, x)| (m, IBig::from(x))).collect(), glm));
            modulus = IBig::from(p);
            last = None;
        } else {
            let (hm, _) = h.as_mut().unwrap();
            let minv = modp::inv(ibig_mod(&modulus, p), p);
            let img: FxHashMap<Mono, u64> = gp.into_iter().collect();
            let mut keys: Vec<Mono> = hm.keys().cloned().collect();
            for k in img.keys() {
                if !hm.contains_key(k) {
                    keys.push(*k);
                }
            }
            for k in keys {
                let cur = hm.get(&k).cloned().unwrap_or(IBig::ZERO);
                let target = img.get(&k).copied().unwrap_or(0);
                let t = modp::mul(modp::sub(target, ibig_mod(&cur, p), p), minv, p);
                let nv = cur + &modulus * IBig::from(t);
                if nv.is_zero() {
                    hm.remove(&k);
                } else {
                    hm.insert(k, nv);
                }
            }
            modulus *= IBig::from(p);
        }
        let (hm, _) = h.as_ref().unwrap();
        let cand = symmetric(hm, &modulus);
        if last.as_ref() == Some(&cand) {
            let (_, pp) = cand.primitive();
            if pp.divides(a) && pp.divides(b) {
                return pp;
            }
        }
        last = Some(cand);
    }
    panic!("modular gcd exhausted its prime list");
}

fn active_vars(a: &Poly) -> Vec<usize> {
    let d = a.degrees();
    (0..MAX_VARS).filter(|&i| d[i] > 0).collect()
}

/// Content of `a` with respect to indeterminate `v`.
fn content_in(a: &Poly, v: usize) -> Poly {
    let cs = a.coeffs_in(v);
    let mut g = Poly::zero();
    for (_, c) in cs {
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Greatest common divisor, normalized to a primitive integer polynomial with positive
/// leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.primitive().1;
    }
    if b.is_zero() {
        return a.primitive().1;
    }
    let (_, a) = a.primitive();
    let (_, b) = b.primitive();
    let ma = a.mono_content();
    let mb = b.mono_content();
    let m = ma.gcd(&mb);
    let mut a = if ma.is_one() { a } else { a.div_mono(&ma) };
    let mut b = if mb.is_one() { b } else { b.div_mono(&mb) };
    let mono = Poly::monomial(m, Rational::one());
    loop {
        if a.is_constant() || b.is_constant() {
            return mono;
        }
        if a == b {
            return a.mul(&mono);
        }
        let va = active_vars(&a);
        let vb = active_vars(&b);
        if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
            a = content_in(&a, v);
            continue;
        }
        if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
            b = content_in(&b, v);
            continue;
        }
        let (small, big) = if a.len() <= b.len() { (&a, &b) } else { (&b, &a) };
        if small.divides(big) {
            return small.mul(&mono);
        }
        return mgcd(&a, &b, &va).mul(&mono);
    }
}

pub fn gcd_many<'a>(ps: impl IntoIterator<Item = &'a Poly>) -> Poly {
    let mut g = Poly::zero();
    for p in ps {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
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
    fn univariate() {
        let f = x(0).sub(&c(1)).mul(&x(0).add(&c(2)));
        let g = x(0).sub(&c(1)).mul(&x(0).sub(&c(3)));
        assert_eq!(gcd(&f, &g), x(0).sub(&c(1)));
        assert_eq!(gcd(&f, &x(0).add(&c(5))), c(1));
    }

    #[test]
    fn multivariate_common_factor() {
        let common = x(0).mul(&x(1)).sub(&x(2).pow(2).scale(&Rational::from(3))).add(&c(7));
        let f = common.mul(&x(0).add(&x(1)).pow(2)).scale(&Rational::from(6));
        let g = common.mul(&x(2).sub(&x(0).mul(&x(1)))).mul(&common).scale(&Rational::from(-4));
        assert_eq!(gcd(&f, &g), common);
    }

    #[test]
    fn monomial_and_missing_variables() {
        let f = x(0).pow(2).mul(&x(1).add(&c(1)));
        let g = x(0).mul(&x(1).add(&c(1))).mul(&x(2).add(&c(1)));
        assert_eq!(gcd(&f, &g), x(0).mul(&x(1).add(&c(1))));
    }

    #[test]
    fn large_coefficients() {
        let big = Rational::from_int(IBig::from(10).pow(30) + IBig::from(7));
        let common = x(0).scale(&big).add(&x(1).mul(&x(0))).sub(&c(1));
        let f = common.mul(&x(1).pow(3).add(&c(2)));
        let g = common.mul(&x(0).pow(2).sub(&x(1)));
        assert_eq!(gcd(&f, &g), common);
    }
}
