use macdonald_coeff::{ExactScalar, RatFun};
use macdonald_core::macdonald::{
    eigenvalue, onerow_q_series, principal_value, q_normalization, specialize_principal, sym_mul, Basis,
    BasisExpansion, Engine,
};
use macdonald_core::weyl::{inner_product, orbit_sum, partitions_of, weyl_character, Partition};

fn p(v: &[i32]) -> Partition {
    Partition::new(v).unwrap()
}

fn all_partitions(max: i32, n: usize) -> Vec<Partition> {
    (0..=max).flat_map(|m| partitions_of(m, n, m)).collect()
}

fn only_even_powers(s: &ExactScalar) -> bool {
    let r: &RatFun = s.as_ratfun();
    let even = |m: &macdonald_coeff::Mono| m.get(0) % 2 == 0 && m.get(1) % 2 == 0;
    r.num().terms().iter().all(|(m, _)| even(m))
        && even(r.den_mono())
        && r.den().terms().iter().all(|(m, _)| even(m))
}

#[test]
fn small_polynomials() {
    let eng = Engine::c(2);
    assert_eq!(*eng.compute_p(&p(&[1])).unwrap(), BasisExpansion::single(Basis::M, 2, p(&[1])));
    let p11 = eng.compute_p(&p(&[1, 1])).unwrap();
    let expected = &(&ExactScalar::one_minus(1, 0, 4) * &ExactScalar::one_minus(-1, 2, 2)) / &ExactScalar::one_minus(1, 2, 6);
    assert_eq!(p11.get(&p(&[])), expected);
    assert_eq!(p11.len(), 2);
    let p2 = eng.compute_p(&p(&[2])).unwrap();
    assert_eq!(p2.len(), 3);
}

#[test]
fn eigen_relation_small() {
    let eng = Engine::c(2);
    for lam in all_partitions(4, 2) {
        let pl = eng.compute_p(&lam).unwrap();
        assert_eq!(eng.apply_e_m(&pl).unwrap(), pl.scale(&eigenvalue(&lam, 2)), "{lam:?}");
    }
}

#[test]
fn generic_eigenvalue_matches_product() {
    for n in 1..=4 {
        let eng = Engine::c(n);
        for lam in all_partitions(5, n) {
            assert_eq!(eng.eigenvalue(&lam), eigenvalue(&lam, n));
        }
    }
}

#[test]
fn eigenvalues_are_distinct() {
    for n in 1..=3 {
        let lams = all_partitions(6, n);
        let vals: Vec<ExactScalar> = lams.iter().map(|l| eigenvalue(l, n)).collect();
        for i in 0..vals.len() {
            for j in 0..i {
                assert_ne!(vals[i], vals[j], "{:?} {:?}", lams[i], lams[j]);
            }
        }
    }
}

#[test]
fn coefficients_are_functions_of_q_and_t() {
    for n in 2..=3 {
        let eng = Engine::c(n);
        for lam in all_partitions(5, n) {
            for (_, c) in eng.compute_p(&lam).unwrap().terms() {
                assert!(only_even_powers(c), "{lam:?}: {c}");
            }
        }
    }
}

#[test]
fn weyl_characters_at_t_equal_q() {
    let eng = Engine::c(2);
    for lam in all_partitions(4, 2) {
        let pl = eng.compute_p(&lam).unwrap().map_scalars(|c| Ok(c.at_t_equals_q_pow(1)?)).unwrap();
        assert_eq!(pl.to_laurent().unwrap(), weyl_character(&lam, 2).unwrap(), "{lam:?}");
    }
}

#[test]
fn operator_is_triangular_on_orbit_sums() {
    let eng = Engine::c(3);
    for lam in all_partitions(4, 3) {
        let col = eng.column(&lam).unwrap();
        for (mu, _) in col.iter() {
            assert!(macdonald_core::weyl::dominance_leq(mu, &lam, 3));
        }
    }
}

#[test]
fn orthogonality_small() {
    let eng = Engine::c(2);
    let lams = all_partitions(2, 2);
    let polys: Vec<_> = lams.iter().map(|l| eng.p_laurent(l).unwrap()).collect();
    for k in 1..=2 {
        for i in 0..lams.len() {
            for j in 0..lams.len() {
                let v = inner_product(&polys[i], &polys[j], k).unwrap();
                assert_eq!(v.is_zero(), i != j, "{:?} {:?} k={k}", lams[i], lams[j]);
            }
        }
    }
}

#[test]
fn onerow_series_matches_normalized_polynomials() {
    for n in 1..=3 {
        let eng = Engine::c(n);
        let series = onerow_q_series(5, n);
        assert_eq!(series[0], BasisExpansion::single(Basis::M, n, p(&[])));
        for (r, q) in series.iter().enumerate() {
            assert_eq!(*q, eng.compute_q(&p(&[r as i32])).unwrap(), "n={n} r={r}");
        }
    }
}

#[test]
fn normalization_examples() {
    let q1 = &ExactScalar::one_minus(1, 0, 2) / &ExactScalar::one_minus(1, 2, 0);
    assert_eq!(q_normalization(&p(&[1]), 2), q1);
    assert!(q_normalization(&p(&[]), 3).is_one());
    let f11 = &q1 * &(&ExactScalar::one_minus(1, 0, 4) / &ExactScalar::one_minus(1, 2, 2));
    assert_eq!(q_normalization(&p(&[1, 1]), 2), f11);
    let eng = Engine::c(2);
    let q = eng.compute_q(&p(&[1])).unwrap();
    assert_eq!(q.to_laurent().unwrap(), orbit_sum(&p(&[1]), 2).scale(&q1));
}

#[test]
fn principal_specialization() {
    let m1 = orbit_sum(&p(&[1]), 1);
    assert_eq!(specialize_principal(&m1), &ExactScalar::b() + &ExactScalar::ab(0, -1));
    for n in 1..=3 {
        let eng = Engine::c(n);
        for lam in all_partitions(3, n) {
            assert!(eng.verify_specialization(&lam).unwrap(), "n={n} {lam:?}");
        }
    }
    assert!(principal_value(&p(&[]), 2).is_one());
}

#[test]
fn action_on_products_of_one_row_polynomials() {
    let eng = Engine::c(2);
    for (l1, l2) in [(1, 0), (3, 0), (1, 1), (2, 1), (2, 2)] {
        assert!(eng.verify_thm4(l1, l2).unwrap(), "({l1},{l2})");
    }
    let (lhs, rhs) = eng.product_action_sides(2, 1).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn products_in_orbit_sums_match_laurent_products() {
    let n = 2;
    let f = BasisExpansion::single(Basis::M, n, p(&[2, 1])).scale(&ExactScalar::q());
    let mut g = BasisExpansion::single(Basis::M, n, p(&[1]));
    g.add(p(&[]), ExactScalar::t());
    let prod = sym_mul(&f, &g);
    assert_eq!(prod.to_laurent().unwrap(), f.to_laurent().unwrap().mul(&g.to_laurent().unwrap()));
}

#[test]
fn expansion_json_round_trip() {
    let eng = Engine::c(2);
    let pl = eng.compute_p(&p(&[2, 1])).unwrap();
    let js = pl.to_json();
    assert_eq!(js["basis"], "m");
    assert_eq!(BasisExpansion::from_json(&js).unwrap(), *pl);
    let first = &js["coeffs"][0]["lambda"];
    assert_eq!(first, &serde_json::json!([2, 1]));
}
