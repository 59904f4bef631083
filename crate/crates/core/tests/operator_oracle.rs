//! The operator tabulated on orbit sums against the literal sum over sign vectors,
//! evaluated as rational functions in `x`, `a`, `b`.

use macdonald_coeff::{ExactScalar, RatFun, Rational, VarSet};
use macdonald_core::macdonald::{eigenvalue, Engine};
use macdonald_core::weyl::{orbit_sum, LaurentPoly, Partition};

fn vars(n: usize) -> VarSet {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.push("a".into());
    names.push("b".into());
    VarSet::new(&names).unwrap()
}

fn laurent_to_ratfun(f: &LaurentPoly, vs: &VarSet) -> RatFun {
    let n = f.n();
    let parts: Vec<RatFun> = f
        .terms()
        .map(|(e, c)| {
            let mut ex: Vec<i64> = e.iter().map(|&x| x as i64).collect();
            ex.extend([0, 0]);
            RatFun::laurent_monomial(vs, Rational::one(), &ex).mul(&c.as_ratfun().embed(vs).unwrap())
        })
        .collect();
    let _ = n;
    RatFun::sum(vs, parts.iter())
}

/// `Σ_σ Π_i (1 - t x_i^{2σ_i})/(1 - x_i^{2σ_i}) Π_{i<j} (1 - t x_i^{σ_i} x_j^{σ_j})/(1 - x_i^{σ_i} x_j^{σ_j}) f(q^{σ/2} x)`.
fn direct_operator(f: &LaurentPoly) -> RatFun {
    let n = f.n();
    let vs = vars(n);
    let one = RatFun::one(&vs);
    let t = RatFun::laurent_monomial(&vs, Rational::one(), &[vec![0; n], vec![0, 2]].concat());
    let mono = |e: &[i64]| RatFun::laurent_monomial(&vs, Rational::one(), &[e.to_vec(), vec![0, 0]].concat());
    let mut total = Vec::new();
    for mask in 0..(1u32 << n) {
        let s: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        let mut phi = one.clone();
        let mut factor = |e: Vec<i64>| {
            let m = mono(&e);
            phi = phi.mul(&one.sub(&t.mul(&m)).div(&one.sub(&m)).unwrap());
        };
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 2 * s[i];
            factor(e);
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut e = vec![0; n];
                e[i] = s[i];
                e[j] = s[j];
                factor(e);
            }
        }
        let mut shifted = LaurentPoly::zero(n);
        for (e, c) in f.terms() {
            let d: i64 = e.iter().zip(&s).map(|(&x, &y)| x as i64 * y).sum();
            shifted.add_term(e.clone(), c * &ExactScalar::ab(d, 0));
        }
        total.push(phi.mul(&laurent_to_ratfun(&shifted, &vs)));
    }
    RatFun::sum(&vs, total.iter())
}

fn p(v: &[i32]) -> Partition {
    Partition::new(v).unwrap()
}

#[test]
fn agrees_with_direct_sum_on_orbit_sums() {
    for n in 1..=3 {
        let eng = Engine::c(n);
        let lams: Vec<Vec<i32>> = match n {
            1 => vec![vec![], vec![1], vec![2], vec![3]],
            2 => vec![vec![], vec![1], vec![1, 1], vec![2], vec![2, 1], vec![3]],
            _ => vec![vec![], vec![1], vec![1, 1], vec![1, 1, 1], vec![2]],
        };
        for l in lams {
            let f = orbit_sum(&p(&l), n);
            let ours = laurent_to_ratfun(&eng.apply_e(&f).unwrap(), &vars(n));
            assert_eq!(ours, direct_operator(&f), "n = {n}, m_{l:?}");
        }
    }
}

#[test]
fn agrees_with_direct_sum_on_mixed_input() {
    let n = 2;
    let eng = Engine::c(n);
    let f = orbit_sum(&p(&[2, 1]), n)
        .scale(&ExactScalar::one_minus(1, 2, 2))
        .add(&orbit_sum(&p(&[1]), n).scale(&ExactScalar::b()));
    let ours = laurent_to_ratfun(&eng.apply_e(&f).unwrap(), &vars(n));
    assert_eq!(ours, direct_operator(&f));
}

#[test]
fn constant_input() {
    let eng = Engine::c(2);
    let e1 = eng.apply_e(&LaurentPoly::one(2)).unwrap();
    let t = ExactScalar::t();
    let expected = &(&(&t * &t) + &ExactScalar::one()) * &(&t + &ExactScalar::one());
    assert_eq!(e1, LaurentPoly::constant(2, expected.clone()));
    assert_eq!(eigenvalue(&p(&[]), 2), expected);
}

#[test]
fn rejects_non_invariant_input() {
    let eng = Engine::c(2);
    assert!(eng.apply_e(&LaurentPoly::var(2, 0)).is_err());
}
