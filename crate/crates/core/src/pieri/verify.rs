use std::collections::BTreeMap;

use macdonald_coeff::ExactScalar;
use rayon::prelude::*;

use super::coeffs::{expand_tworow_inverse, expand_tworow_product, inverse_c};
use super::minuscule::{pieri_minuscule, pieri_quasiminuscule, shifted};
use crate::error::{MacError, Result};
use crate::macdonald::{onerow_q_series, specialize_principal, sym_mul, Basis, BasisExpansion, Engine};
use crate::verdict::{compare_expansions, Verdict};
use crate::weyl::{weyl_character, Partition};

/// Adds one to `c_ij` before reconstruction; used to confirm that the checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Perturbation {
    pub i: i64,
    pub j: i64,
}

fn two_row(a: i64, b: i64) -> Result<Partition> {
    Partition::new(&[a as i32, b as i32])
}

fn combine(n: usize, parts: impl IntoIterator<Item = (ExactScalar, BasisExpansion)>) -> BasisExpansion {
    parts.into_iter().fold(BasisExpansion::new(Basis::M, n), |acc, (c, f)| acc.add_expansion(&f.scale(&c)))
}

fn collect(results: Vec<Result<Verdict>>) -> Result<Verdict> {
    let mut out = Vec::with_capacity(results.len());
    for r in results {
        out.push(r?);
    }
    Ok(Verdict::all(out))
}

fn pairs(max1: i64, max2: i64) -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for l1 in 0..=max1 {
        for l2 in 0..=max2.min(l1) {
            v.push((l1, l2));
        }
    }
    v
}

fn require_rank_two(eng: &Engine) -> Result<()> {
    if eng.data().kind != crate::macdonald::RootKind::C || eng.n() < 2 {
        return Err(MacError::Invalid("two-row expansions need type C with rank at least 2".into()));
    }
    Ok(())
}

/// `Q_{(λ1)} Q_{(λ2)}` against `Σ c_ij Q_{(λ1+i-j, λ2-i-j)}`, given one-row series up to `λ1+λ2`.
pub fn check_tworow_product(
    eng: &Engine,
    onerow: &[BasisExpansion],
    l1: i64,
    l2: i64,
    perturb: Option<Perturbation>,
) -> Result<Verdict> {
    require_rank_two(eng)?;
    let n = eng.n();
    let table = expand_tworow_product(l1, l2, n)?;
    let lhs = sym_mul(&onerow[l1 as usize], &onerow[l2 as usize]);
    let mut parts = Vec::new();
    for (&(i, j), c) in &table.terms {
        let mut c = c.clone();
        if perturb == Some(Perturbation { i, j }) {
            c = &c + &ExactScalar::one();
        }
        let (a, b) = table.target(i, j);
        parts.push((c, eng.compute_q(&two_row(a, b)?)?));
    }
    let rhs = combine(n, parts);
    Ok(compare_expansions(&lhs, &rhs, &format!("Q({l1})Q({l2}) at n={n}")))
}

/// `Q_{(λ1,λ2)}` against `Σ C_ij Q_{(λ1+i-j)} Q_{(λ2-i-j)}`.
pub fn check_tworow_inverse(eng: &Engine, onerow: &[BasisExpansion], l1: i64, l2: i64) -> Result<Verdict> {
    require_rank_two(eng)?;
    let n = eng.n();
    let table = expand_tworow_inverse(l1, l2, n)?;
    let lhs = eng.compute_q(&two_row(l1, l2)?)?;
    let parts = table.terms.iter().map(|(&(i, j), c)| {
        let (a, b) = table.target(i, j);
        (c.clone(), sym_mul(&onerow[a as usize], &onerow[b as usize]))
    });
    let rhs = combine(n, parts.collect::<Vec<_>>());
    Ok(compare_expansions(&lhs, &rhs, &format!("Q({l1},{l2}) at n={n}")))
}

/// The product expansion over `λ1 <= max1`, `λ2 <= min(max2, λ1)`.
pub fn verify_thm3(eng: &Engine, max1: i64, max2: i64, perturb: Option<Perturbation>) -> Result<Verdict> {
    let onerow = onerow_q_series((max1 + max2) as usize, eng.n());
    let ps = pairs(max1, max2);
    collect(ps.par_iter().map(|&(a, b)| check_tworow_product(eng, &onerow, a, b, perturb)).collect())
}

/// The inverse expansion over the same box.
pub fn verify_thm5(eng: &Engine, max1: i64, max2: i64) -> Result<Verdict> {
    let onerow = onerow_q_series((max1 + max2) as usize, eng.n());
    let ps = pairs(max1, max2);
    collect(ps.par_iter().map(|&(a, b)| check_tworow_inverse(eng, &onerow, a, b)).collect())
}

/// Substituting the product expansion into the inverse one, with two-row `Q`'s as formal
/// symbols, returns exactly `Q_{(λ1,λ2)}`.
pub fn verify_round_trip(l1: i64, l2: i64, n: usize) -> Result<Verdict> {
    let inv = expand_tworow_inverse(l1, l2, n)?;
    let mut acc: BTreeMap<(i64, i64), ExactScalar> = BTreeMap::new();
    for (&(i, j), c) in &inv.terms {
        let (a, b) = (l1 + i - j, l2 - i - j);
        let prod = expand_tworow_product(a, b, n)?;
        for (&(k, m), d) in &prod.terms {
            let e = acc.entry(prod.target(k, m)).or_insert_with(ExactScalar::zero);
            *e = &*e + &(c * d);
        }
    }
    for (key, v) in &acc {
        let want = if *key == (l1, l2) { ExactScalar::one() } else { ExactScalar::zero() };
        if *v != want {
            return Ok(Verdict::fail(format!(
                "round trip from ({l1},{l2}) at n={n}: coefficient of Q({},{}) is {v}",
                key.0, key.1
            )));
        }
    }
    Ok(Verdict::pass())
}

pub fn verify_round_trip_box(max1: i64, max2: i64, n: usize) -> Result<Verdict> {
    let ps = pairs(max1, max2);
    collect(ps.par_iter().map(|&(a, b)| verify_round_trip(a, b, n)).collect())
}

/// At `t = q` the inverse expansion keeps four terms and rebuilds the Weyl character.
pub fn check_weyl_limit(onerow_at_q: &[BasisExpansion], l1: i64, l2: i64, n: usize) -> Result<Verdict> {
    let pattern = |i: i64, j: i64| match (i, j) {
        (0, 0) | (1, 1) => 1,
        (1, 0) | (0, 1) => -1,
        _ => 0,
    };
    for i in 0..=l2 {
        for j in 0..=l2 - i {
            let c = inverse_c(i, j, l1, l2, n)?.at_t_equals_q_pow(1)?;
            if c != ExactScalar::from_i64(pattern(i, j)) {
                return Ok(Verdict::fail(format!("C_{i}{j}({l1},{l2}) at t=q is {c}")));
            }
        }
    }
    let h = |r: i64| {
        if r < 0 { BasisExpansion::new(Basis::M, n) } else { onerow_at_q[r as usize].clone() }
    };
    let mut terms = vec![(1, l1, l2), (1, l1, l2 - 2), (-1, l1 + 1, l2 - 1), (-1, l1 - 1, l2 - 1)];
    if l2 == 0 {
        terms.truncate(1);
    }
    let sum = combine(n, terms.into_iter().map(|(c, a, b)| (ExactScalar::from_i64(c), sym_mul(&h(a), &h(b)))).collect::<Vec<_>>());
    let chi = BasisExpansion::from_laurent(&weyl_character(&two_row(l1, l2)?, n)?)?;
    Ok(compare_expansions(&sum, &chi, &format!("Weyl character ({l1},{l2}) at n={n}")))
}

pub fn verify_cor6(n: usize, max1: i64, max2: i64) -> Result<Verdict> {
    if n < 2 {
        return Err(MacError::Invalid("rank must be at least 2".into()));
    }
    let onerow: Vec<BasisExpansion> = onerow_q_series((max1 + max2 + 1) as usize, n)
        .iter()
        .map(|f| f.map_scalars(|c| Ok(c.at_t_equals_q_pow(1)?)))
        .collect::<Result<_>>()?;
    let ps = pairs(max1, max2);
    collect(ps.par_iter().map(|&(a, b)| check_weyl_limit(&onerow, a, b, n)).collect())
}

/// `P_{(1)} P_λ` against the minuscule expansion.
pub fn check_minuscule(eng: &Engine, lam: &Partition) -> Result<Verdict> {
    let n = eng.n();
    let lhs = sym_mul(&*eng.compute_p(&Partition::new(&[1])?)?, &*eng.compute_p(lam)?);
    let mut parts = Vec::new();
    for ((k, s), a) in pieri_minuscule(lam, n)? {
        let target = shifted(lam, n, k - 1, s).expect("only partitions are returned");
        parts.push((a, (*eng.compute_p(&target)?).clone()));
    }
    Ok(compare_expansions(&lhs, &combine(n, parts), &format!("P(1)P{lam} at n={n}")))
}

/// `(P_{(1,1)} - P_{(1,1)}(ρ_k^∨)) P_λ` against the quasi-minuscule expansion.
pub fn check_quasiminuscule(eng: &Engine, lam: &Partition) -> Result<Verdict> {
    let n = eng.n();
    let w = Partition::new(&[1, 1])?;
    let value = specialize_principal(&eng.p_laurent(&w)?);
    let mut left = (*eng.compute_p(&w)?).clone();
    left.add(Partition::new(&[])?, -value);
    let p_lam = eng.compute_p(lam)?;
    let lhs = sym_mul(&left, &p_lam);
    let mut parts = Vec::new();
    for (tau, (c, d)) in pieri_quasiminuscule(lam, n)? {
        let target: Vec<i32> = lam.coords(n).iter().zip(&tau).map(|(a, b)| a + b).collect();
        parts.push((c, (*eng.compute_p(&Partition::new(&target)?)?).clone()));
        parts.push((-d, (*p_lam).clone()));
    }
    Ok(compare_expansions(&lhs, &combine(n, parts), &format!("(P(1,1)-const)P{lam} at n={n}")))
}

fn partitions_up_to(max: i32, n: usize) -> Vec<Partition> {
    (0..=max).flat_map(|m| crate::weyl::partitions_of(m, n, m)).collect()
}

pub fn verify_eq43(eng: &Engine, max_size: i32) -> Result<Verdict> {
    let lams = partitions_up_to(max_size, eng.n());
    collect(lams.par_iter().map(|l| check_minuscule(eng, l)).collect())
}

pub fn verify_thm2c(eng: &Engine, max_size: i32) -> Result<Verdict> {
    let lams = partitions_up_to(max_size, eng.n());
    collect(lams.par_iter().map(|l| check_quasiminuscule(eng, l)).collect())
}

/// The one-row Pieri rule read off from `Q_{(1)} Q_{(s)}` agrees with the minuscule
/// formula at `λ = (s)` once `P` and `Q` normalizations are matched.
pub fn check_minuscule_against_tworow(s: i64, n: usize) -> Result<Verdict> {
    use crate::macdonald::q_normalization;
    let lam = Partition::new(&[s as i32])?;
    let mini = pieri_minuscule(&lam, n)?;
    let prod = expand_tworow_product(s.max(1), s.min(1), n)?;
    let b = |p: &Partition| q_normalization(p, n);
    let one = Partition::new(&[1])?;
    let scale = &b(&one) * &b(&lam);
    let mut checks = Vec::new();
    for (&(i, j), c) in &prod.terms {
        let (x, y) = prod.target(i, j);
        let target = two_row(x, y)?;
        let from_mini = mini
            .iter()
            .find(|((k, sg), _)| shifted(&lam, n, *k - 1, *sg).as_ref() == Some(&target))
            .map(|(_, a)| a.clone())
            .unwrap_or_else(ExactScalar::zero);
        let want = &(&from_mini * &scale) / &b(&target);
        checks.push(Verdict::from_bool(*c == want, || format!("(1)x({s}) -> {target}: {c} vs {want}")));
    }
    Ok(Verdict::all(checks))
}
