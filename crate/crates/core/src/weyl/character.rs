use std::collections::BTreeMap;

use macdonald_coeff::ExactScalar;

use super::{signed_orbit, Exp, LaurentPoly, Partition, Weight};
use crate::error::{MacError, Result};

type IntLaurent = BTreeMap<Exp, i64>;

fn to_laurent(n: usize, f: &IntLaurent) -> LaurentPoly {
    let mut out = LaurentPoly::zero(n);
    for (e, &c) in f {
        out.add_term(e.clone(), ExactScalar::from_i64(c));
    }
    out
}

fn int_alternant(e: &[i32]) -> IntLaurent {
    signed_orbit(e).into_iter().map(|(f, s)| (f, s as i64)).collect()
}

/// `Σ_w ε(w) e^{wμ}` for a regular weight `μ`; zero when `μ` lies on a wall.
pub fn alternant(mu: &[i32]) -> LaurentPoly {
    let regular = {
        let mut a: Vec<i32> = mu.iter().map(|x| x.abs()).collect();
        a.sort_unstable();
        a[0] != 0 && a.windows(2).all(|w| w[0] != w[1])
    };
    if !regular {
        return LaurentPoly::zero(mu.len());
    }
    to_laurent(mu.len(), &int_alternant(mu))
}

/// `δ = e^{-ρ} Π_{α>0} (e^α - 1)`, equal to the alternant of `ρ`.
pub fn weyl_denominator(n: usize) -> LaurentPoly {
    alternant(&Weight::rho(n).coords)
}

/// Exact quotient `alternant(top + rho) / alternant(rho)` by long division along the
/// lexicographically largest exponent. `rho` must be strictly dominant.
pub(crate) fn character_ints(top: &[i32], rho: &[i32]) -> Result<IntLaurent> {
    let shifted: Vec<i32> = top.iter().zip(rho).map(|(a, b)| a + b).collect();
    let mut rem = int_alternant(&shifted);
    let den = int_alternant(rho);
    let (lead, lc) = den.last_key_value().map(|(e, c)| (e.clone(), *c)).expect("nonempty");
    debug_assert_eq!(lc, 1);
    let mut quot = IntLaurent::new();
    while let Some((m, c)) = rem.pop_last() {
        if c == 0 {
            continue;
        }
        let qe: Exp = m.iter().zip(&lead).map(|(a, b)| a - b).collect();
        for (de, dc) in den.iter().rev().skip(1) {
            let e: Exp = qe.iter().zip(de).map(|(a, b)| a + b).collect();
            if e >= m {
                return Err(MacError::Internal("alternant division is not exact".into()));
            }
            let v = rem.entry(e.clone()).or_insert(0);
            *v -= c * dc;
            if *v == 0 {
                rem.remove(&e);
            }
        }
        quot.insert(qe, c);
        if quot.len() > 1_000_000 {
            return Err(MacError::Internal("alternant division does not terminate".into()));
        }
    }
    Ok(quot)
}

/// `χ_λ = δ^{-1} Σ_w ε(w) e^{w(λ+ρ)}`.
pub fn weyl_character(lam: &Partition, n: usize) -> Result<LaurentPoly> {
    let q = character_ints(&lam.coords(n), &Weight::rho(n).coords)?;
    let out = to_laurent(n, &q);
    debug_assert!(out.is_w_invariant());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{orbit_sum, partitions_of};

    fn p(v: &[i32]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn small_characters() {
        assert_eq!(weyl_character(&p(&[]), 3).unwrap(), LaurentPoly::one(3));
        assert_eq!(weyl_character(&p(&[1]), 2).unwrap(), orbit_sum(&p(&[1]), 2));
        assert_eq!(weyl_character(&p(&[1, 1]), 2).unwrap(), orbit_sum(&p(&[1, 1]), 2).add(&LaurentPoly::one(2)));
    }

    #[test]
    fn denominator_is_root_product() {
        for n in 1..=3 {
            let mut prod = LaurentPoly::monomial(&Weight::rho(n).coords.iter().map(|x| -x).collect::<Vec<_>>(), ExactScalar::one());
            for a in crate::weyl::positive_roots(n) {
                prod = prod.mul(&LaurentPoly::monomial(&a, ExactScalar::one()).sub(&LaurentPoly::one(n)));
            }
            assert_eq!(prod, weyl_denominator(n));
        }
    }

    #[test]
    fn characters_multiply_back() {
        for n in 1..=3 {
            let d = weyl_denominator(n);
            for lam in partitions_of(3, n, 3) {
                let chi = weyl_character(&lam, n).unwrap();
                let shifted: Vec<i32> = lam.coords(n).iter().zip(&Weight::rho(n).coords).map(|(a, b)| a + b).collect();
                assert_eq!(chi.mul(&d), alternant(&shifted));
                assert!(chi.is_w_invariant());
            }
        }
    }

    #[test]
    fn dimension_of_vector_representation() {
        // χ_{ε_1} at x = 1 is 2n
        for n in 1..=4 {
            let chi = weyl_character(&p(&[1]), n).unwrap();
            assert_eq!(chi.len(), 2 * n);
        }
    }
}
