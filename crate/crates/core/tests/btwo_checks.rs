//! B_2 polynomials through the C_2 correspondence, with the four-term operator
//! evaluated literally as an oracle.

use macdonald_coeff::{ExactScalar, RatFun, Rational, VarSet};
use macdonald_core::btwo::{
    b2_eigenvalue, b2_from_c2, b2_operator_apply, verify_bijection, verify_generating_function, verify_thm7,
    B2Weight,
};
use macdonald_core::weyl::{orbit_sum, LaurentPoly, Partition};

fn p(v: &[i32]) -> Partition {
    Partition::new(v).unwrap()
}

fn vars() -> VarSet {
    VarSet::new(&["X1", "X2", "a", "b"]).unwrap()
}

fn to_ratfun(f: &LaurentPoly, vs: &VarSet) -> RatFun {
    let parts: Vec<RatFun> = f
        .terms()
        .map(|(e, c)| {
            let ex = [e[0] as i64, e[1] as i64, 0, 0];
            RatFun::laurent_monomial(vs, Rational::one(), &ex).mul(&c.as_ratfun().embed(vs).unwrap())
        })
        .collect();
    RatFun::sum(vs, parts.iter())
}

/// The four-term sum with `x_i = X_i^2`, so `q^{±1} x_1` multiplies `X^D` by `a^{±2 D_1 / 2}`.
fn direct_operator(f: &LaurentPoly) -> RatFun {
    let vs = vars();
    let one = RatFun::one(&vs);
    let t = RatFun::laurent_monomial(&vs, Rational::one(), &[0, 0, 0, 2]);
    let ratio = |e: [i64; 2]| {
        let m = RatFun::laurent_monomial(&vs, Rational::one(), &[e[0], e[1], 0, 0]);
        one.sub(&t.mul(&m)).div(&one.sub(&m)).unwrap()
    };
    let mut total = Vec::new();
    for s in [1i64, -1] {
        let phi1 = ratio([2 * s, 2]).mul(&ratio([2 * s, -2])).mul(&ratio([2 * s, 0]));
        let phi2 = ratio([2, 2 * s]).mul(&ratio([-2, 2 * s])).mul(&ratio([0, 2 * s]));
        for (phi, k) in [(phi1, 0usize), (phi2, 1usize)] {
            let mut shifted = LaurentPoly::zero(2);
            for (e, c) in f.terms() {
                shifted.add_term(e.clone(), c * &ExactScalar::ab(s * e[k] as i64, 0));
            }
            total.push(phi.mul(&to_ratfun(&shifted, &vs)));
        }
    }
    RatFun::sum(&vs, total.iter())
}

#[test]
fn operator_agrees_with_four_term_sum() {
    let vs = vars();
    for d in [vec![], vec![1, 1], vec![2], vec![2, 2], vec![3, 1], vec![4]] {
        let f = orbit_sum(&p(&d), 2);
        assert_eq!(to_ratfun(&b2_operator_apply(&f).unwrap(), &vs), direct_operator(&f), "m{d:?}");
    }
}

#[test]
fn images_are_eigenvectors_of_the_four_term_sum() {
    let vs = vars();
    for l in [vec![1], vec![1, 1], vec![2, 1], vec![3]] {
        let lam = p(&l);
        let f = b2_from_c2(&lam).unwrap().to_laurent().unwrap();
        let w = B2Weight::from_c2(&lam).unwrap();
        assert_eq!(direct_operator(&f), to_ratfun(&f.scale(&b2_eigenvalue(&w)), &vs), "{l:?}");
    }
}

#[test]
fn constant_eigenvalue() {
    let t = ExactScalar::t();
    let one = ExactScalar::one();
    let expected = &(&t + &one) * &(&(&t * &t) + &one);
    assert_eq!(b2_eigenvalue(&B2Weight::from_doubled(0, 0).unwrap()), expected);
}

#[test]
fn bijection_up_to_six() {
    let v = verify_bijection(6).unwrap();
    assert!(v.ok, "{v}");
}

#[test]
fn generating_function_up_to_five() {
    let v = verify_generating_function(5).unwrap();
    assert!(v.ok, "{v}");
}

#[test]
fn thm7_examples() {
    for (l1, l2) in [(0, 0), (3, 0), (1, 1), (3, 2)] {
        let v = verify_thm7(l1, l2).unwrap();
        assert!(v.ok, "({l1}, {l2}): {v}");
    }
    assert!(verify_thm7(1, 2).is_err());
}
