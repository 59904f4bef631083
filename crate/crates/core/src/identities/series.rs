//! Specializations of the subset identity to basic hypergeometric series.

use macdonald_coeff::{RatFun, Rational, VarSet};

use super::hypergeom::phi_terms;
use super::terms::{neg_poch, Mon, Prod};
use super::subset::{compare, sigma_sum_terms};
use super::{Guard, Mode};
use crate::error::{MacError, Result};
use crate::verdict::Verdict;

/// A variable set with monomials addressed by name.
#[derive(Clone, Debug)]
pub struct NamedSpace {
    pub vars: VarSet,
}

impl NamedSpace {
    pub fn new(names: &[String]) -> Result<Self> {
        Ok(NamedSpace { vars: VarSet::new(names)? })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// `Π name^power`.
    pub fn m(&self, powers: &[(&str, i64)]) -> Mon {
        let mut out = Mon::one(self.nvars());
        for (name, k) in powers {
            let i = self.vars.index(name).unwrap_or_else(|| panic!("unknown variable {name}"));
            out.e[i] += k;
        }
        out
    }

    pub fn one(&self) -> Mon {
        Mon::one(self.nvars())
    }

    pub fn prod(&self) -> Prod {
        Prod::one(self.nvars())
    }
}

fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

fn scaled(terms: Vec<Prod>, pre: &Prod) -> Vec<Prod> {
    terms
        .into_iter()
        .map(|mut t| {
            t.times(pre);
            t
        })
        .collect()
}

fn check_guard(n: usize, r: usize, mode: Mode, guard: &Guard) -> Result<()> {
    if mode == Mode::Exact && n + r > guard.max_size {
        return Err(MacError::ResourceGuard(format!(
            "n + |k| = {} (exact-mode limit {})",
            n + r,
            guard.max_size
        )));
    }
    Ok(())
}

/// The terminating very-well-poised `6φ5` summation and its rewritten finite sum, for `i <= i_max`.
pub fn verify_65_summation(i_max: usize) -> Result<Verdict> {
    if i_max > 8 {
        return Err(MacError::ResourceGuard(format!("i_max = {i_max} exceeds 8")));
    }
    let sp = NamedSpace::new(&["s".into(), "q".into(), "t".into()])?;
    let fs = NamedSpace::new(&["a".into(), "q".into(), "t".into()])?;
    let mut checks = Vec::new();
    for i in 0..=i_max as i64 {
        let (s, q) = (sp.m(&[("s", 1)]), sp.m(&[("q", 1)]));
        let a = s.pow(2);
        let t = sp.m(&[("t", 1)]);
        let upper = [a.clone(), q.mul(&s), q.mul(&s).neg(), q.clone(), a.mul(&q.pow(i)).mul(&t), q.pow(-i)];
        let lower = [s.clone(), s.neg(), a.clone(), q.pow(1 - i).mul(&t.inv()), a.mul(&q.pow(i + 1))];
        let lhs = phi_terms(&upper, &lower, &q, &t.inv(), i as usize)?;
        let mut rhs = sp.prod();
        rhs.ratio(&a.mul(&q.pow(i)), &a)?.ratio(&q.pow(-i).mul(&t.inv()), &t.inv())?;
        checks.push(compare(&sp.vars, 3, &lhs, &[rhs], Mode::Exact, &format!("6phi5 at i={i}")));

        let (a, q, t) = (fs.m(&[("a", 1)]), fs.m(&[("q", 1)]), fs.m(&[("t", 1)]));
        let mut lhs = Vec::new();
        for k in 1..=i {
            let mut p = fs.prod();
            p.mon(&q.pow(i - k)).bin(&a.mul(&q.pow(2 * k)), 1)?;
            p.poch(&q.pow(i - k + 1), &q, k, 1)?.poch(&q.pow(i - k).mul(&t), &q, k, -1)?;
            p.poch(&a.mul(&q.pow(i)).mul(&t), &q, k, 1)?.poch(&a.mul(&q.pow(i + 1)), &q, k, -1)?;
            lhs.push(p);
        }
        let mut rhs = fs.prod();
        rhs.ratio(&q.pow(i), &t)?.bin(&a.mul(&q.pow(i)).mul(&t), 1)?;
        checks.push(compare(&fs.vars, 3, &lhs, &[rhs], Mode::Exact, &format!("finite sum at i={i}")));
    }
    Ok(Verdict::all(checks))
}

/// `u_i = z_l q^{i-1-k_{l-1}}` block by block.
fn block_specialization(sp: &NamedSpace, kvec: &[usize]) -> Vec<Mon> {
    let q = sp.m(&[("q", 1)]);
    let mut us = Vec::new();
    for (l, &k) in kvec.iter().enumerate() {
        let z = sp.m(&[(format!("z{}", l + 1).as_str(), 1)]);
        for j in 0..k as i64 {
            us.push(z.mul(&q.pow(j)));
        }
    }
    us
}

fn x_space(n: usize, s: usize) -> Result<NamedSpace> {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=s).map(|l| format!("z{l}")));
    names.push("q".into());
    NamedSpace::new(&names)
}

fn w_space(s: usize) -> Result<NamedSpace> {
    let mut names = vec!["w".to_string()];
    names.extend((1..=s).map(|l| format!("z{l}")));
    names.push("q".into());
    NamedSpace::new(&names)
}

fn zname(l: usize) -> String {
    format!("z{}", l + 1)
}

/// Left side of the block-specialized identity: the `σ`-sum at `t = q`.
pub fn block_sigma_sum(n: usize, kvec: &[usize]) -> Result<(NamedSpace, Vec<Prod>)> {
    let sp = x_space(n, kvec.len())?;
    let xs: Vec<Mon> = (1..=n).map(|i| sp.m(&[(format!("x{i}").as_str(), 1)])).collect();
    let terms = sigma_sum_terms(&xs, &sp.m(&[("q", 1)]), &block_specialization(&sp, kvec))?;
    Ok((sp, terms))
}

/// The same sum at `x_i = w q^{i-1}`.
fn block_sigma_sum_principal(n: usize, kvec: &[usize]) -> Result<(NamedSpace, Vec<Prod>)> {
    let sp = w_space(kvec.len())?;
    let (w, q) = (sp.m(&[("w", 1)]), sp.m(&[("q", 1)]));
    let xs: Vec<Mon> = (0..n as i64).map(|i| w.mul(&q.pow(i))).collect();
    let terms = sigma_sum_terms(&xs, &q, &block_specialization(&sp, kvec))?;
    Ok((sp, terms))
}

/// `(qz^2;q^2)_r / (qz^2;q)_r`.
fn well_poised_ratio(p: &mut Prod, z: &Mon, q: &Mon, r: i64) -> Result<()> {
    let base = q.mul(&z.pow(2));
    p.poch(&base, &q.pow(2), r, 1)?.poch(&base, q, r, -1)?;
    Ok(())
}

/// The single-block sum as a `(2n+4)φ(2n+3)` series times its prefactor.
fn thm8_rhs(sp: &NamedSpace, n: usize, r: usize) -> Result<Vec<Prod>> {
    let (z, q) = (sp.m(&[("z1", 1)]), sp.m(&[("q", 1)]));
    let (ni, ri) = (n as i64, r as i64);
    let mut upper = vec![z.pow(2), q.mul(&z), q.mul(&z).neg(), q.pow(-ri)];
    let mut lower = vec![z.clone(), z.neg(), q.pow(ri + 1).mul(&z.pow(2))];
    for i in 1..=n {
        let x = sp.m(&[(format!("x{i}").as_str(), 1)]);
        upper.push(q.mul(&z).mul(&x));
        upper.push(q.mul(&z).mul(&x.inv()));
        lower.push(z.mul(&x));
        lower.push(z.mul(&x.inv()));
    }
    let series = phi_terms(&upper, &lower, &q, &q.pow(ri - ni).neg(), r)?;
    let mut pre = sp.prod();
    pre.mon(&q.pow(ni * ri - binom2(ri)));
    neg_poch(&mut pre, &q, ni - ri)?;
    well_poised_ratio(&mut pre, &z, &q, ri)?;
    Ok(scaled(series, &pre))
}

pub fn verify_thm8(n: usize, r: usize, mode: Mode, guard: &Guard) -> Result<Verdict> {
    check_guard(n, r, mode, guard)?;
    let (sp, lhs) = block_sigma_sum(n, &[r])?;
    let rhs = thm8_rhs(&sp, n, r)?;
    Ok(compare(&sp.vars, sp.nvars(), &lhs, &rhs, mode, &format!("single block, n={n}, r={r}")))
}

pub fn verify_thm9(n: usize, r: usize, mode: Mode, guard: &Guard) -> Result<Verdict> {
    check_guard(n, r, mode, guard)?;
    let (sp, sigma) = block_sigma_sum_principal(n, &[r])?;
    let (w, z, q) = (sp.m(&[("w", 1)]), sp.m(&[("z1", 1)]), sp.m(&[("q", 1)]));
    let (ni, ri) = (n as i64, r as i64);

    let upper = [w.mul(&z.inv()), q.pow(ri).mul(&w).mul(&z), w.pow(2).mul(&q.inv()), q.pow(-ni)];
    let lower = [w.mul(&z), q.pow(-ri).mul(&w).mul(&z.inv()), q.pow(ni).mul(&w.pow(2))];
    let mut pre = sp.prod();
    pre.poch(&q.mul(&w.pow(2)), &q.pow(2), ni, 1)?.poch(&w.pow(2), &q, ni, -1)?;
    pre.poch(&q.pow(-ri).mul(&w).mul(&z.inv()), &q, ni, 1)?.poch(&w.mul(&z.inv()), &q, ni, -1)?;
    let lhs = scaled(phi_terms(&upper, &lower, &q, &q.pow(ni - ri + 1).neg(), n)?, &pre);

    let upper = [z.pow(2), q.mul(&z), q.mul(&z).neg(), q.pow(ni).mul(&w).mul(&z), q.mul(&z).mul(&w.inv()), q.pow(-ri)];
    let lower = [z.clone(), z.neg(), w.mul(&z), q.pow(1 - ni).mul(&z).mul(&w.inv()), q.pow(ri + 1).mul(&z.pow(2))];
    let mut pre = sp.prod();
    pre.mon(&q.pow(-binom2(ri)));
    neg_poch(&mut pre, &q, ni - ri)?;
    well_poised_ratio(&mut pre, &z, &q, ri)?;
    let rhs = scaled(phi_terms(&upper, &lower, &q, &q.pow(ri - ni).neg(), r)?, &pre);

    let mut lift = sp.prod();
    lift.mon(&q.pow(ni * ri));
    let rhs_lifted = scaled(rhs.clone(), &lift);
    let what = format!("n={n}, r={r}");
    Ok(compare(&sp.vars, sp.nvars(), &lhs, &rhs, mode, &format!("4phi3 against 6phi5, {what}"))
        .and(|| compare(&sp.vars, sp.nvars(), &sigma, &rhs_lifted, mode, &format!("sigma-sum against 6phi5, {what}"))))
}

/// All `m` with `0 <= m_l <= k_l`.
fn boxes(kvec: &[usize]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &k in kvec {
        out = out
            .into_iter()
            .flat_map(|m: Vec<i64>| {
                (0..=k as i64).map(move |x| {
                    let mut m = m.clone();
                    m.push(x);
                    m
                })
            })
            .collect();
    }
    out
}

/// `c_m` of the multiple series.
fn multi_coefficient(sp: &NamedSpace, kvec: &[usize], m: &[i64]) -> Result<Prod> {
    let q = sp.m(&[("q", 1)]);
    let z: Vec<Mon> = (0..kvec.len()).map(|l| sp.m(&[(zname(l).as_str(), 1)])).collect();
    let s = kvec.len();
    let mut p = sp.prod();
    for a in 0..s {
        for b in a + 1..s {
            p.diff(&q.pow(m[a]).mul(&z[a]), &q.pow(m[b]).mul(&z[b]), 1)?.diff(&z[a], &z[b], -1)?;
        }
        for b in a..s {
            let zz = z[a].mul(&z[b]);
            p.ratio(&q.pow(m[a] + m[b]).mul(&zz), &zz)?;
        }
    }
    for a in 0..s {
        for b in 0..s {
            let kb = kvec[b] as i64;
            let ratio = z[a].mul(&z[b].inv());
            let zz = z[a].mul(&z[b]);
            p.poch(&q.pow(-kb).mul(&ratio), &q, m[a], 1)?.poch(&q.mul(&ratio), &q, m[a], -1)?;
            p.poch(&zz, &q, m[a], 1)?.poch(&q.pow(1 + kb).mul(&zz), &q, m[a], -1)?;
        }
    }
    Ok(p)
}

/// `q^{shift} (-q;q)_{n-|k|} Π_{a<b} (q^{k_b+1} z_a z_b;q)_{k_a}/(q z_a z_b;q)_{k_a} Π_a (qz_a^2;q^2)_{k_a}/(qz_a^2;q)_{k_a}`.
fn multi_prefactor(sp: &NamedSpace, n: usize, kvec: &[usize], shift: i64) -> Result<Prod> {
    let q = sp.m(&[("q", 1)]);
    let k: i64 = kvec.iter().map(|&x| x as i64).sum();
    let z: Vec<Mon> = (0..kvec.len()).map(|l| sp.m(&[(zname(l).as_str(), 1)])).collect();
    let mut p = sp.prod();
    p.mon(&q.pow(shift));
    neg_poch(&mut p, &q, n as i64 - k)?;
    for a in 0..kvec.len() {
        for b in a + 1..kvec.len() {
            let zz = z[a].mul(&z[b]);
            p.poch(&q.pow(kvec[b] as i64 + 1).mul(&zz), &q, kvec[a] as i64, 1)?.poch(&q.mul(&zz), &q, kvec[a] as i64, -1)?;
        }
        well_poised_ratio(&mut p, &z[a], &q, kvec[a] as i64)?;
    }
    Ok(p)
}

/// `Σ_m (-1)^{|m|} c_m q^{(|k|-n)|m|} · extra(m)` times the prefactor.
fn multi_series(
    sp: &NamedSpace,
    n: usize,
    kvec: &[usize],
    shift: i64,
    extra: impl Fn(&mut Prod, &[i64]) -> Result<()>,
) -> Result<Vec<Prod>> {
    let q = sp.m(&[("q", 1)]);
    let k: i64 = kvec.iter().map(|&x| x as i64).sum();
    let pre = multi_prefactor(sp, n, kvec, shift)?;
    let mut out = Vec::new();
    for m in boxes(kvec) {
        let size: i64 = m.iter().sum();
        let mut p = multi_coefficient(sp, kvec, &m)?;
        if size % 2 == 1 {
            p.scalar(&Rational::from(-1));
        }
        p.mon(&q.pow((k - n as i64) * size));
        extra(&mut p, &m)?;
        p.times(&pre);
        out.push(p);
    }
    Ok(out)
}

fn check_kvec(kvec: &[usize]) -> Result<usize> {
    if kvec.is_empty() || kvec.contains(&0) {
        return Err(MacError::Invalid("block sizes must be positive".into()));
    }
    Ok(kvec.iter().sum())
}

/// The multiple series side of the block-specialized identity in `x_1..x_n, z_1..z_s, q`.
pub fn block_specialization_rhs(sp: &NamedSpace, n: usize, kvec: &[usize]) -> Result<Vec<Prod>> {
    let k = check_kvec(kvec)? as i64;
    let q = sp.m(&[("q", 1)]);
    multi_series(sp, n, kvec, n as i64 * k - binom2(k), |p, m| {
        for i in 1..=n {
            let x = sp.m(&[(format!("x{i}").as_str(), 1)]);
            for (l, &ml) in m.iter().enumerate() {
                let z = sp.m(&[(zname(l).as_str(), 1)]);
                let (a, b) = (x.mul(&z), z.mul(&x.inv()));
                p.poch(&q.mul(&a), &q, ml, 1)?.poch(&a, &q, ml, -1)?;
                p.poch(&q.mul(&b), &q, ml, 1)?.poch(&b, &q, ml, -1)?;
            }
        }
        Ok(())
    })
}

pub fn verify_thm10(n: usize, kvec: &[usize], mode: Mode, guard: &Guard) -> Result<Verdict> {
    let k = check_kvec(kvec)?;
    check_guard(n, k, mode, guard)?;
    let (sp, lhs) = block_sigma_sum(n, kvec)?;
    let rhs = block_specialization_rhs(&sp, n, kvec)?;
    Ok(compare(&sp.vars, sp.nvars(), &lhs, &rhs, mode, &format!("blocks {kvec:?}, n={n}")))
}

/// Both multiple-series sides for a single block against the single-block series.
pub fn single_block_agrees(n: usize, r: usize) -> Result<Verdict> {
    let sp = x_space(n, 1)?;
    let a = block_specialization_rhs(&sp, n, &[r])?;
    let b = thm8_rhs(&sp, n, r)?;
    Ok(compare(&sp.vars, sp.nvars(), &a, &b, Mode::Exact, &format!("single block n={n}, r={r}")))
}

pub fn verify_thm11(n: usize, kvec: &[usize], mode: Mode, guard: &Guard) -> Result<Verdict> {
    let k = check_kvec(kvec)?;
    check_guard(n, k, mode, guard)?;
    let (sp, sigma) = block_sigma_sum_principal(n, kvec)?;
    let (w, q) = (sp.m(&[("w", 1)]), sp.m(&[("q", 1)]));
    let (ni, ki) = (n as i64, k as i64);
    let z: Vec<Mon> = (0..kvec.len()).map(|l| sp.m(&[(zname(l).as_str(), 1)])).collect();

    let mut upper = vec![w.pow(2).mul(&q.inv()), q.pow(-ni)];
    let mut lower = vec![q.pow(ni).mul(&w.pow(2))];
    let mut pre = sp.prod();
    pre.poch(&q.mul(&w.pow(2)), &q.pow(2), ni, 1)?.poch(&w.pow(2), &q, ni, -1)?;
    for (l, &kl) in kvec.iter().enumerate() {
        let kl = kl as i64;
        let wz = w.mul(&z[l].inv());
        upper.push(wz.clone());
        upper.push(q.pow(kl).mul(&w).mul(&z[l]));
        lower.push(w.mul(&z[l]));
        lower.push(q.pow(-kl).mul(&wz));
        pre.poch(&q.pow(-kl).mul(&wz), &q, ni, 1)?.poch(&wz, &q, ni, -1)?;
    }
    let lhs = scaled(phi_terms(&upper, &lower, &q, &q.pow(ni - ki + 1).neg(), n)?, &pre);

    let rhs = multi_series(&sp, n, kvec, -binom2(ki), |p, m| {
        for (l, &ml) in m.iter().enumerate() {
            let (a, b) = (w.mul(&z[l]), z[l].mul(&w.inv()));
            p.poch(&q.pow(ni).mul(&a), &q, ml, 1)?.poch(&a, &q, ml, -1)?;
            p.poch(&q.mul(&b), &q, ml, 1)?.poch(&q.pow(1 - ni).mul(&b), &q, ml, -1)?;
        }
        Ok(())
    })?;
    let mut lift = sp.prod();
    lift.mon(&q.pow(ni * ki));
    let rhs_lifted = scaled(rhs.clone(), &lift);
    let what = format!("blocks {kvec:?}, n={n}");
    Ok(compare(&sp.vars, sp.nvars(), &lhs, &rhs, mode, &format!("series against multiple series, {what}"))
        .and(|| compare(&sp.vars, sp.nvars(), &sigma, &rhs_lifted, mode, &format!("sigma-sum against multiple series, {what}"))))
}

/// The symmetric `σ ∈ {0,1}^n` series, multiplied by `q^{n|k|}`.
pub fn rosengren_terms(sp: &NamedSpace, n: usize, kvec: &[usize]) -> Result<Vec<Prod>> {
    let k = check_kvec(kvec)? as i64;
    let q = sp.m(&[("q", 1)]);
    let x: Vec<Mon> = (1..=n).map(|i| sp.m(&[(format!("x{i}").as_str(), 1)])).collect();
    let z: Vec<Mon> = (0..kvec.len()).map(|l| sp.m(&[(zname(l).as_str(), 1)])).collect();
    let qinv = q.inv();

    let mut pre = sp.prod();
    pre.mon(&q.pow(n as i64 * k));
    for i in 0..n {
        pre.ratio(&q.mul(&x[i].pow(2)), &x[i].pow(2))?;
        for (l, &kl) in kvec.iter().enumerate() {
            let xz = x[i].mul(&z[l].inv());
            pre.ratio(&q.pow(-(kl as i64)).mul(&xz), &xz)?;
        }
        for j in i + 1..n {
            let xx = x[i].mul(&x[j]);
            pre.ratio(&q.mul(&xx), &xx)?;
        }
    }

    let mut out = Vec::new();
    for mask in 0..1u32 << n {
        let s: Vec<i64> = (0..n).map(|i| (mask >> i & 1) as i64).collect();
        let size: i64 = s.iter().sum();
        let mut p = sp.prod();
        if size % 2 == 1 {
            p.scalar(&Rational::from(-1));
        }
        p.mon(&q.pow((n as i64 - k + 1) * size));
        for a in 0..n {
            for b in a + 1..n {
                p.diff(&x[a].mul(&q.pow(s[a])), &x[b].mul(&q.pow(s[b])), 1)?.diff(&x[a], &x[b], -1)?;
            }
            for b in a..n {
                let xx = x[a].mul(&x[b]);
                p.ratio(&xx.mul(&q.pow(s[a] + s[b] - 1)), &xx.mul(&qinv))?;
            }
            let sq = x[a].pow(2);
            p.poch(&sq.mul(&qinv), &q.pow(2), s[a], 1)?.poch(&q.mul(&sq), &q.pow(2), s[a], -1)?;
            for b in 0..n {
                let (xx, ratio) = (x[a].mul(&x[b]), x[a].mul(&x[b].inv()));
                p.poch(&xx.mul(&qinv), &q, s[a], 1)?.poch(&q.mul(&ratio), &q, s[a], -1)?;
                p.poch(&ratio.mul(&qinv), &q, s[a], 1)?.poch(&q.mul(&xx), &q, s[a], -1)?;
            }
            for (l, &kl) in kvec.iter().enumerate() {
                let kl = kl as i64;
                let (xz, xoz) = (x[a].mul(&z[l]), x[a].mul(&z[l].inv()));
                p.poch(&q.pow(kl).mul(&xz), &q, s[a], 1)?.poch(&xz, &q, s[a], -1)?;
                p.poch(&xoz, &q, s[a], 1)?.poch(&q.pow(-kl).mul(&xoz), &q, s[a], -1)?;
            }
        }
        p.times(&pre);
        out.push(p);
    }
    Ok(out)
}

/// `q^{n|k|}` times the symmetric series equals the block-specialized `σ`-sum.
pub fn verify_rosengren_form(n: usize, kvec: &[usize], mode: Mode, guard: &Guard) -> Result<Verdict> {
    let k = check_kvec(kvec)?;
    check_guard(n, k, mode, guard)?;
    let (sp, lhs) = block_sigma_sum(n, kvec)?;
    let rhs = rosengren_terms(&sp, n, kvec)?;
    Ok(compare(&sp.vars, sp.nvars(), &lhs, &rhs, mode, &format!("symmetric form, blocks {kvec:?}, n={n}")))
}

/// Canonical sum of factored summands.
pub fn sum_as_ratfun(sp: &NamedSpace, terms: &[Prod]) -> RatFun {
    super::terms::sum(&sp.vars, terms)
}
