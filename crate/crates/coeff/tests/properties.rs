use macdonald_coeff::{qpoch, Poly, RatFun, Rational, VarSet};
use proptest::prelude::*;

fn vars() -> VarSet {
    VarSet::new(&["x", "y", "u"]).unwrap()
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -4i64..5), 1..5).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|((i, j, k), c)| {
            (macdonald_coeff::Mono::from_exps(&[i, j, k]).unwrap(), Rational::from(c))
        }))
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rf(p: &Poly) -> RatFun {
    RatFun::from_poly(&vars(), p.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn common_factor_cancels(p in nonzero_poly(), q in small_poly(), r in nonzero_poly()) {
        let lhs = rf(&p.mul(&q)).div(&rf(&p.mul(&r))).unwrap();
        let rhs = rf(&q).div(&rf(&r)).unwrap();
        prop_assert_eq!(lhs.num(), rhs.num());
        prop_assert_eq!(lhs.den(), rhs.den());
    }

    #[test]
    fn ring_axioms(p in small_poly(), q in nonzero_poly(), r in nonzero_poly(), s in nonzero_poly()) {
        let a = rf(&p).div(&rf(&q)).unwrap();
        let b = rf(&r).div(&rf(&s)).unwrap();
        let c = rf(&q).div(&rf(&r)).unwrap();
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn substitution_composes(p in small_poly(), r in nonzero_poly()) {
        let src = vars();
        let f = rf(&p).div(&rf(&r)).unwrap();
        let mid = VarSet::new(&["x", "y", "v"]).unwrap();
        let dst = VarSet::new(&["x", "y", "w"]).unwrap();
        let v = RatFun::var(&mid, "v").unwrap();
        let w_over_x = RatFun::var(&dst, "w").unwrap().add(&RatFun::var(&dst, "x").unwrap());
        let step1 = f.substitute(&mid, &[("u", v)]);
        let direct = f.substitute(&dst, &[("u", w_over_x.clone())]);
        if let (Ok(step1), Ok(direct)) = (step1, direct) {
            let step2 = step1.substitute(&dst, &[("v", w_over_x)]).unwrap();
            prop_assert_eq!(step2, direct);
        }
        let _ = src;
    }
}

#[test]
fn qpoch_recurrence() {
    let vs = VarSet::new(&["u", "a"]).unwrap();
    let u = RatFun::var(&vs, "u").unwrap();
    let a = RatFun::var(&vs, "a").unwrap();
    let q = a.mul(&a);
    let one = RatFun::one(&vs);
    for k in 0..=8 {
        let lhs = qpoch(&u, &q, k + 1).unwrap();
        let rhs = qpoch(&u, &q, k).unwrap().mul(&one.sub(&u.mul(&q.pow(k).unwrap())));
        assert_eq!(lhs, rhs, "k = {k}");
    }
}

#[test]
fn documented_examples() {
    let vs = VarSet::new(&["x", "a", "b", "u", "t"]).unwrap();
    let x = RatFun::var(&vs, "x").unwrap();
    let a = RatFun::var(&vs, "a").unwrap();
    let b = RatFun::var(&vs, "b").unwrap();
    let one = RatFun::one(&vs);
    // x/(1-x) + 1 = 1/(1-x)
    let lhs = x.div(&one.sub(&x)).unwrap().add(&one);
    assert_eq!(lhs, one.div(&one.sub(&x)).unwrap());
    // f * 1/f = 1
    let f = one.sub(&a.mul(&a).mul(&x)).div(&one.sub(&b.mul(&b).mul(&x))).unwrap();
    assert!(f.mul(&one.div(&f).unwrap()).is_one());
    // (1-a^4)/(1-a^2) - (1+a^2) = 0
    let a2 = a.mul(&a);
    let g = one.sub(&a2.mul(&a2)).div(&one.sub(&a2)).unwrap().sub(&one.add(&a2));
    assert!(g.is_zero());
    // 1/(1-ux) at u = 0
    let u = RatFun::var(&vs, "u").unwrap();
    let h = one.div(&one.sub(&u.mul(&x))).unwrap();
    assert!(h.substitute(&vs, &[("u", RatFun::zero(&vs))]).unwrap().is_one());
    // mismatched indeterminates and division by zero are errors
    assert!(one.div(&RatFun::zero(&vs)).is_err());
    let other = VarSet::new(&["y"]).unwrap();
    assert!(h.substitute(&vs, &[("u", RatFun::one(&other))]).is_err());
}
