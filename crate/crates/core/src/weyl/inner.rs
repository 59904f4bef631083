use std::collections::BTreeMap;

use macdonald_coeff::{ExactScalar, Rational};

use super::{positive_roots, weyl_group_order, Exp, LaurentPoly};
use crate::error::{MacError, Result};

/// `Δ = Π_{α ∈ R} (e^α; q)_k`, with integer coefficients in `a = q^{1/2}`.
pub fn weight_function(n: usize, k: i64) -> Result<LaurentPoly> {
    if k <= 0 {
        return Err(MacError::Invalid(format!("multiplicity k = {k} must be positive")));
    }
    let mut roots = positive_roots(n);
    let neg: Vec<Exp> = roots.iter().map(|a| a.iter().map(|x| -x).collect()).collect();
    roots.extend(neg);
    let mut acc: BTreeMap<Exp, BTreeMap<i64, i64>> = BTreeMap::new();
    acc.insert(smallvec::smallvec![0; n], BTreeMap::from([(0, 1)]));
    for alpha in &roots {
        for j in 0..k {
            let mut next = acc.clone();
            for (e, c) in &acc {
                let f: Exp = e.iter().zip(alpha).map(|(x, y)| x + y).collect();
                let slot = next.entry(f).or_default();
                for (&ae, &v) in c {
                    *slot.entry(ae + 2 * j).or_insert(0) -= v;
                }
            }
            acc = next;
        }
    }
    let mut out = LaurentPoly::zero(n);
    for (e, c) in acc {
        let terms: Vec<((i64, i64), i64)> = c.into_iter().map(|(ae, v)| ((ae, 0), v)).collect();
        out.add_term(e, ExactScalar::from_ab_terms(&terms));
    }
    Ok(out)
}

/// `⟨f, g⟩ = |W|^{-1} [f ḡ Δ]_1` at `t = q^k`.
pub fn inner_product(f: &LaurentPoly, g: &LaurentPoly, k: i64) -> Result<ExactScalar> {
    if f.n() != g.n() {
        return Err(MacError::Invalid("inner product of polynomials of different rank".into()));
    }
    let n = f.n();
    let delta = weight_function(n, k)?;
    let fs = f.map_scalars(|c| Ok(c.at_t_equals_q_pow(k)?))?;
    let gs = g.map_scalars(|c| Ok(c.at_t_equals_q_pow(k)?))?.bar();
    let h = fs.mul(&gs);
    let mut pairs = Vec::new();
    let coeffs: Vec<(ExactScalar, ExactScalar)> = h
        .terms()
        .filter_map(|(e, c)| {
            let neg: Vec<i32> = e.iter().map(|x| -x).collect();
            let d = delta.coeff(&neg);
            (!d.is_zero()).then(|| (c.clone(), d))
        })
        .collect();
    for (c, d) in &coeffs {
        pairs.push((c, d));
    }
    let ct = ExactScalar::sum_of_products(&pairs);
    Ok(ct.scale(&Rational::new(1, weyl_group_order(n) as i64)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{orbit_sum, Partition, SignedPerm};

    fn p(v: &[i32]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn normalization() {
        let one = LaurentPoly::one(2);
        assert!(inner_product(&one, &one, 1).unwrap().is_one());
        assert!(inner_product(&orbit_sum(&p(&[1]), 2), &one, 1).unwrap().is_zero());
        assert!(inner_product(&one, &one, 0).is_err());
    }

    #[test]
    fn symmetric_and_invariant() {
        let x = LaurentPoly::var(2, 0);
        let f = x.add(&LaurentPoly::monomial(&[1, -1], ExactScalar::t()));
        let g = orbit_sum(&p(&[1]), 2).add(&LaurentPoly::monomial(&[0, 2], ExactScalar::q()));
        for k in 1..=2 {
            let fg = inner_product(&f, &g, k).unwrap();
            let gf = inner_product(&g.bar(), &f.bar(), k).unwrap();
            assert_eq!(fg, gf);
            for w in SignedPerm::all(2) {
                assert_eq!(inner_product(&f.act(&w), &g.act(&w), k).unwrap(), fg);
            }
        }
    }
}
