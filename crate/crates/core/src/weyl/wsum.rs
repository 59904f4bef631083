use macdonald_coeff::product::sum_terms;
use macdonald_coeff::{Poly, RatFun, Rational, Term, VarSet};
use rayon::prelude::*;

use super::{positive_roots, SignedPerm};
use crate::error::Result;

fn is_positive(a: &[i32]) -> bool {
    a.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// Indeterminates `x1..xn` followed by one `u_α` per positive root.
fn wsum_vars(n: usize) -> Result<VarSet> {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((0..positive_roots(n).len()).map(|i| format!("u{i}")));
    Ok(VarSet::new(&names)?)
}

/// Both sides of `Σ_w Π_{α>0} (1 - u_α e^{-wα}) / (1 - e^{-wα}) = Σ_w Π_{α ∈ R⁺ ∩ -wR⁺} u_α`.
pub fn wsum_sides(n: usize) -> Result<(RatFun, RatFun)> {
    let vars = wsum_vars(n)?;
    let nv = vars.len();
    let roots = positive_roots(n);
    let group = SignedPerm::all(n);
    let one = Rational::one();
    let lhs_terms: Vec<Term> = group
        .par_iter()
        .map(|w| {
            let mut t = Term::one(nv);
            for (k, a) in roots.iter().enumerate() {
                let wa = w.apply(a);
                let mut e = vec![0i64; nv];
                for i in 0..n {
                    e[i] = -wa[i] as i64;
                }
                t.times_one_minus(&one, &e, -1)?;
                e[n + k] = 1;
                t.times_one_minus(&one, &e, 1)?;
            }
            Ok(t)
        })
        .collect::<Result<_>>()?;
    let lhs = sum_terms(&vars, &lhs_terms);
    let mut rhs = Poly::zero();
    for w in &group {
        let winv = w.inverse();
        let mut m = vec![0u32; nv];
        for (k, a) in roots.iter().enumerate() {
            if !is_positive(&winv.apply(a)) {
                m[n + k] = 1;
            }
        }
        rhs = rhs.add(&Poly::monomial(macdonald_coeff::Mono::from_exps(&m)?, one.clone()));
    }
    Ok((lhs, RatFun::from_poly(&vars, rhs)))
}

/// Checks the W-sum consequence of the Macdonald identity as an equality of rational
/// functions in `x` and the root indeterminates `u_α`.
pub fn verify_macdonald_wsum(n: usize) -> Result<bool> {
    let (lhs, rhs) = wsum_sides(n)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_and_two() {
        assert!(verify_macdonald_wsum(1).unwrap());
        assert!(verify_macdonald_wsum(2).unwrap());
    }

    #[test]
    fn all_u_equal_one_gives_group_order() {
        let (lhs, rhs) = wsum_sides(2).unwrap();
        let vars = lhs.vars().clone();
        let binds: Vec<(&str, RatFun)> =
            vars.names()[2..].iter().map(|s| (s.as_str(), RatFun::one(&vars))).collect();
        let l = lhs.substitute(&vars, &binds).unwrap();
        let r = rhs.substitute(&vars, &binds).unwrap();
        assert_eq!(l.constant_value(), Some(Rational::from(8)));
        assert_eq!(r.constant_value(), Some(Rational::from(8)));
    }
}
