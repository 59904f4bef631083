use std::collections::BTreeMap;

use macdonald_coeff::ExactScalar;

use crate::error::{MacError, Result};
use crate::weyl::{coroot_pairing, orbit, positive_roots, Partition, Weight};

/// Raise or lower one part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// `1 - q^i t^j`.
fn om(i: i64, j: i64) -> ExactScalar {
    ExactScalar::one_minus(1, 2 * i, 2 * j)
}

/// `(1 - q^i t^{j-1})/(1 - q^i t^j) · (1 - q^{i-1} t^{j+1})/(1 - q^{i-1} t^j)`.
fn pair_factor(i: i64, j: i64) -> ExactScalar {
    &(&om(i, j - 1) / &om(i, j)) * &(&om(i - 1, j + 1) / &om(i - 1, j))
}

/// Moves part `k` (0-based) of `lam` up or down, if the result is still a partition.
pub fn shifted(lam: &Partition, n: usize, k: usize, sign: Sign) -> Option<Partition> {
    let mut c = lam.coords(n);
    c[k] += if sign == Sign::Plus { 1 } else { -1 };
    let ok = c[k] >= 0 && (k == 0 || c[k - 1] >= c[k]) && (k + 1 == n || c[k] >= c[k + 1]);
    if ok { Partition::new(&c).ok() } else { None }
}

/// `a_k^±` in `P_{(1)} P_λ = Σ_k (a_k^+ P_{λ^{(k)}} + a_k^- P_{λ_{(k)}})`, keyed by
/// 1-based `k`; terms whose target is not a partition are omitted.
pub fn pieri_minuscule(lam: &Partition, n: usize) -> Result<BTreeMap<(usize, Sign), ExactScalar>> {
    if !lam.fits(n) {
        return Err(MacError::Invalid(format!("{lam} has more than {n} parts")));
    }
    let l: Vec<i64> = lam.coords(n).iter().map(|&x| x as i64).collect();
    let nn = n as i64;
    let mut out = BTreeMap::new();
    for k in 0..n {
        let kk = k as i64 + 1;
        if shifted(lam, n, k, Sign::Plus).is_some() {
            let mut a = ExactScalar::one();
            for i in 0..k {
                a = &a * &pair_factor(l[i] - l[k], kk - (i as i64 + 1));
            }
            out.insert((k + 1, Sign::Plus), a);
        }
        if shifted(lam, n, k, Sign::Minus).is_some() {
            let mut a = pair_factor(l[k], nn - kk + 1);
            for i in 0..n {
                if i == k {
                    continue;
                }
                let ii = i as i64 + 1;
                a = &a * &pair_factor(l[i] + l[k], 2 * nn - ii - kk + 2);
            }
            for i in k + 1..n {
                a = &a * &pair_factor(l[k] - l[i], i as i64 + 1 - kk);
            }
            out.insert((k + 1, Sign::Minus), a);
        }
    }
    Ok(out)
}

/// `⟨λ,α^∨⟩` and `⟨ρ,α^∨⟩` for every positive root, so that
/// `q^{⟨λ+ρ_k,α^∨⟩} = q^{first} t^{second}`.
fn shifted_pairings(lam: &[i32], n: usize) -> Vec<(Vec<i32>, i64, i64)> {
    let rho = Weight::rho(n).coords;
    positive_roots(n)
        .into_iter()
        .map(|a| {
            let (x, y) = (coroot_pairing(lam, &a) as i64, coroot_pairing(&rho, &a) as i64);
            (a.to_vec(), x, y)
        })
        .collect()
}

/// `C_τ` for a minuscule or quasi-minuscule step `τ`: the product over positive roots with
/// `⟨τ,α^∨⟩ ∈ {-1,-2}` of the dual-system factors.
pub fn step_coefficient(lam: &Partition, tau: &[i32], n: usize) -> ExactScalar {
    let l = lam.coords(n);
    let mut c = ExactScalar::one();
    for (a, x, y) in shifted_pairings(&l, n) {
        match coroot_pairing(tau, &a) {
            -1 => c = &c * &pair_factor(x, y),
            -2 => {
                c = &c * &(&om(x, y - 1) / &om(x, y));
                c = &c * &(&om(x - 1, y - 1) / &om(x - 1, y));
                c = &c * &(&om(x - 1, y + 1) / &om(x - 1, y));
                c = &c * &(&om(x - 2, y + 1) / &om(x - 2, y));
            }
            _ => {}
        }
    }
    c
}

/// `q^{-⟨τ,ρ_k^∨⟩}` with `ρ^∨ = Σ (n-i+1/2) ε_i`.
fn rho_check_power(tau: &[i32], n: usize) -> ExactScalar {
    let e: i64 = tau.iter().enumerate().map(|(i, &x)| x as i64 * (2 * (n - 1 - i) as i64 + 1)).sum();
    ExactScalar::ab(0, -e)
}

/// `D_τ` of the quasi-minuscule formula.
pub fn diagonal_coefficient(lam: &Partition, tau: &[i32], n: usize) -> ExactScalar {
    let l = lam.coords(n);
    let mut d = rho_check_power(tau, n);
    for (a, x, y) in shifted_pairings(&l, n) {
        let p = coroot_pairing(tau, &a) as i64;
        if p == 0 {
            continue;
        }
        let s = p.signum();
        d = &d * &(&om(x, y + s) / &om(x, y));
        if p.abs() == 2 {
            d = &d * &(&om(x + s, y + s) / &om(x + s, y));
        }
    }
    d
}

/// `(C_τ, D_τ)` for `τ ∈ W(ε_1+ε_2)` with `λ+τ` dominant.
pub fn pieri_quasiminuscule(lam: &Partition, n: usize) -> Result<BTreeMap<Vec<i32>, (ExactScalar, ExactScalar)>> {
    if n < 2 {
        return Err(MacError::Invalid("the weight ε1+ε2 needs rank at least 2".into()));
    }
    if !lam.fits(n) {
        return Err(MacError::Invalid(format!("{lam} has more than {n} parts")));
    }
    let l = lam.coords(n);
    let mut omega = vec![0i32; n];
    omega[0] = 1;
    omega[1] = 1;
    let mut out = BTreeMap::new();
    for tau in orbit(&omega) {
        let target: Vec<i32> = l.iter().zip(tau.iter()).map(|(a, b)| a + b).collect();
        if !Weight::new(&target).is_dominant() {
            continue;
        }
        let tau = tau.to_vec();
        let c = step_coefficient(lam, &tau, n);
        let d = diagonal_coefficient(lam, &tau, n);
        out.insert(tau, (c, d));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_partition_has_one_term() {
        let m = pieri_minuscule(&Partition::new(&[]).unwrap(), 3).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m[&(1, Sign::Plus)].is_one());
    }

    #[test]
    fn rank_one_lowering() {
        for r in 1..5i64 {
            let m = pieri_minuscule(&Partition::new(&[r as i32]).unwrap(), 1).unwrap();
            let want = &(&om(r, 0) * &om(r - 1, 2)) / &(&om(r, 1) * &om(r - 1, 1));
            assert_eq!(m[&(1, Sign::Minus)], want);
        }
    }

    #[test]
    fn closed_form_matches_root_products() {
        for n in 1..=3usize {
            for m in 0..=5 {
                for lam in crate::weyl::partitions_of(m, n, m) {
                    for ((k, s), a) in pieri_minuscule(&lam, n).unwrap() {
                        let mut tau = vec![0i32; n];
                        tau[k - 1] = if s == Sign::Plus { 1 } else { -1 };
                        assert_eq!(a, step_coefficient(&lam, &tau, n), "{lam} k={k} {s:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn quasiminuscule_range() {
        let c = pieri_quasiminuscule(&Partition::new(&[]).unwrap(), 2).unwrap();
        assert_eq!(c.keys().cloned().collect::<Vec<_>>(), vec![vec![1, 1]]);
        assert_eq!(pieri_quasiminuscule(&Partition::new(&[2, 1]).unwrap(), 2).unwrap().len(), 3);
        assert!(pieri_quasiminuscule(&Partition::new(&[1]).unwrap(), 1).is_err());
    }
}
