use macdonald_coeff::{RatFun, VarSet};
use macdonald_core::identities::*;

fn g() -> Guard {
    Guard::default()
}

#[test]
fn subset_identity_small() {
    for (n, r) in [(0, 1), (0, 2), (1, 0), (1, 1), (2, 0), (1, 2), (2, 1), (2, 2)] {
        let v = verify_thm6(n, r, Mode::Exact, &g()).unwrap();
        assert!(v.ok, "n={n} r={r}: {v}");
    }
}

#[test]
fn no_u_gives_product() {
    let l = thm6_lhs(2, 0, &g()).unwrap();
    let vs = l.vars().clone();
    let t = RatFun::var(&vs, "t").unwrap();
    let one = RatFun::one(&vs);
    assert_eq!(l, t.add(&one).mul(&t.mul(&t).add(&one)));
}

#[test]
fn sixphifive() {
    let v = verify_65_summation(4).unwrap();
    assert!(v.ok, "{v}");
}

#[test]
fn specializations_small() {
    for (n, r) in [(1, 1), (2, 1)] {
        let v = verify_thm8(n, r, Mode::Exact, &g()).unwrap();
        assert!(v.ok, "thm8 {n} {r}: {v}");
        let v = verify_thm9(n, r, Mode::Exact, &g()).unwrap();
        assert!(v.ok, "thm9 {n} {r}: {v}");
    }
    for (n, k) in [(1, vec![1]), (2, vec![1]), (1, vec![1, 1])] {
        let v = verify_thm10(n, &k, Mode::Exact, &g()).unwrap();
        assert!(v.ok, "thm10 {n} {k:?}: {v}");
        let v = verify_thm11(n, &k, Mode::Exact, &g()).unwrap();
        assert!(v.ok, "thm11 {n} {k:?}: {v}");
        let v = verify_rosengren_form(n, &k, Mode::Exact, &g()).unwrap();
        assert!(v.ok, "rosengren {n} {k:?}: {v}");
    }
}

#[test]
fn phi_examples() {
    let vs = VarSet::new(&["a", "q", "t"]).unwrap();
    let v = |n: &str| RatFun::var(&vs, n).unwrap();
    let (a, q, t) = (v("a"), v("q"), v("t"));
    let one = RatFun::one(&vs);
    let zero = RatFun::zero(&vs);
    let spec = HypergeomSpec::new(vec![a.clone(), q.clone()], vec![t.clone()], q.clone(), zero, 4).unwrap();
    assert!(phi_series(&spec).unwrap().is_one());
    // 2phi1[q^{-1}, a; t; q, z=q] has a single correction term
    let qi = q.pow(-1).unwrap();
    let spec = HypergeomSpec::new(vec![qi.clone(), a.clone()], vec![t.clone()], q.clone(), q.clone(), 3).unwrap();
    assert!(spec.is_terminating());
    let one_term = one.sub(&qi).mul(&one.sub(&a)).mul(&q).div(&one.sub(&t).mul(&one.sub(&q))).unwrap();
    assert_eq!(phi_series(&spec).unwrap(), one.add(&one_term));
}

#[test]
fn spurious_poles_cancel() {
    for n in [1, 2] {
        for pole in [SpuriousPole::Equal(0), SpuriousPole::Reciprocal(0)] {
            let r = rhs_residue(n, 2, pole).unwrap();
            assert!(r.is_zero(), "n={n} {pole:?}: {}", r.to_string_pretty());
        }
    }
}

#[test]
fn setting_last_parameter_to_zero() {
    for (n, r) in [(1, 1), (1, 2), (2, 2), (2, 3), (0, 3)] {
        let v = check_subset_recursion(n, r).unwrap();
        assert!(v.ok, "{v}");
    }
    for (n, r) in [(1, 2), (2, 2), (2, 1)] {
        let (a, b) = rhs_at_zero(n, r, &g()).unwrap();
        assert_eq!(a, b, "n={n} r={r}");
    }
}

#[test]
fn no_x_variables() {
    for r in 1..=4 {
        let (a, b) = subset_sum_without_x(r).unwrap();
        assert_eq!(a, b, "r={r}");
    }
    let (a, _) = subset_sum_without_x(1).unwrap();
    assert_eq!(a.constant_value().unwrap(), macdonald_coeff::Rational::from(2));
}

#[test]
fn subset_coefficient_example() {
    let c = subset_coefficient(2, 2, &[1]).unwrap();
    let vs = c.value.vars().clone();
    let v = |n: &str| RatFun::var(&vs, n).unwrap();
    let (u1, u2, t) = (v("u1"), v("u2"), v("t"));
    let one = RatFun::one(&vs);
    let ratio = u1.div(&t.mul(&u2)).unwrap();
    let want = t.pow(2).unwrap().mul(&one.sub(&ratio)).div(&one.sub(&u1.div(&u2).unwrap())).unwrap();
    assert_eq!(c.value, want);
    assert!(subset_coefficient(2, 2, &[3]).is_err());
}

#[test]
fn two_parameter_form() {
    for n in 1..=3 {
        let v = verify_cor7(n, Mode::Exact, &g()).unwrap();
        assert!(v.ok, "n={n}: {v}");
    }
}

#[test]
fn single_block_series_agree() {
    for (n, r) in [(1, 1), (2, 2), (2, 1)] {
        let v = single_block_agrees(n, r).unwrap();
        assert!(v.ok, "{v}");
    }
}

#[test]
fn guard_and_probabilistic_mode() {
    let small = Guard { max_size: 2 };
    assert!(matches!(verify_thm6(2, 1, Mode::Exact, &small), Err(macdonald_core::MacError::ResourceGuard(_))));
    assert!(verify_thm6(2, 1, Mode::Probabilistic { seed: 9 }, &small).unwrap().ok);
    assert!(verify_thm8(2, 1, Mode::Probabilistic { seed: 9 }, &small).unwrap().ok);
}

#[test]
fn wrong_sides_are_rejected() {
    let sp = SubsetSpace::new(2, 1).unwrap();
    let lhs = sp.lhs_terms().unwrap();
    let mut rhs = sp.rhs_terms().unwrap();
    rhs.pop();
    assert_ne!(sum_as_ratfun_subset(&sp, &lhs), sum_as_ratfun_subset(&sp, &rhs));

    // the symmetric series without its q^{n|k|} factor is not the sigma-sum
    let (ns, sigma) = block_sigma_sum(2, &[1]).unwrap();
    let sym = rosengren_terms(&ns, 2, &[1]).unwrap();
    let q = ns.m(&[("q", 1)]);
    let mut undo = ns.prod();
    undo.mon(&q.pow(-2));
    let bare: Vec<Prod> = sym
        .into_iter()
        .map(|mut p| {
            p.times(&undo);
            p
        })
        .collect();
    assert_ne!(sum_as_ratfun(&ns, &sigma), sum_as_ratfun(&ns, &bare));
}

fn sum_as_ratfun_subset(sp: &SubsetSpace, terms: &[Prod]) -> RatFun {
    let ts: Vec<macdonald_coeff::Term> = terms.iter().map(|p| p.0.clone()).collect();
    macdonald_coeff::product::sum_terms(&sp.vars, &ts)
}
