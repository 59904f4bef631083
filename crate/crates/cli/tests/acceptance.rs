//! The fifteen acceptance criteria, each checked by exact equality. Every test writes
//! one `ACCEPTANCE <nn> PASS|FAIL` line to standard error, bypassing output capture.

use std::io::Write;
use std::time::Instant;

use macdonald_core::btwo::{verify_bijection, verify_generating_function, verify_thm7_box};
use macdonald_core::identities::{
    verify_65_summation, verify_rosengren_form, verify_thm10, verify_thm11, verify_thm6, verify_thm8, verify_thm9,
    Guard, Mode,
};
use macdonald_core::macdonald::{eigenvalue, Engine};
use macdonald_core::pieri::{
    verify_cor6, verify_eq43, verify_pair_inversion, verify_round_trip_box, verify_thm2c, verify_thm3, verify_thm5,
    MatrixPair, PairKind, Perturbation,
};
use macdonald_core::verdict::compare_expansions;
use macdonald_core::weyl::{verify_macdonald_wsum, Partition};
use macdonald_core::{Result, Verdict};

fn record(id: u32, what: &str, run: impl FnOnce() -> Result<Verdict>) {
    let start = Instant::now();
    let v = run().unwrap_or_else(|e| Verdict::fail(format!("error: {e}")));
    let line = format!(
        "ACCEPTANCE {id:02} {} {what} ({} ms){}\n",
        if v.ok { "PASS" } else { "FAIL" },
        start.elapsed().as_millis(),
        v.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default()
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(v.ok, "criterion {id} ({what}) failed: {v}");
}

fn each(vs: impl IntoIterator<Item = Result<Verdict>>) -> Result<Verdict> {
    let mut out = Vec::new();
    for v in vs {
        out.push(v?);
    }
    Ok(Verdict::all(out))
}

fn ranks() -> [Engine; 2] {
    [Engine::c(2), Engine::c(3)]
}

#[test]
fn criterion_01_eigenvectors() {
    record(1, "E P = e P, n=2 |λ|<=6 and n=3 |λ|<=4", || {
        each([Engine::c(2).verify_eigen_box(6), Engine::c(3).verify_eigen_box(4)])
    });
}

#[test]
fn criterion_02_product_expansion() {
    record(2, "Q(λ1)Q(λ2) from c_ij, n=2,3, λ1<=4, λ2<=3", || {
        each(ranks().iter().map(|e| verify_thm3(e, 4, 3, None)))
    });
}

#[test]
fn criterion_03_inverse_expansion() {
    record(3, "Q(λ1,λ2) from C_ij and the round trip, n=2,3, λ1<=4, λ2<=3", || {
        each(ranks().iter().flat_map(|e| [verify_thm5(e, 4, 3), verify_round_trip_box(4, 3, e.n())]))
    });
}

#[test]
fn criterion_04_operator_on_products() {
    record(4, "E on Q(λ1)Q(λ2), n=2,3, λ1<=4, λ2<=3, and the λ2=0 eigen relation", || {
        each(ranks().iter().flat_map(|e| {
            let degenerate = (0..=4).map(move |l1| {
                let (lhs, rhs) = e.product_action_sides(l1, 0)?;
                let q = e.compute_q(&Partition::new(&[l1])?)?;
                let eig = q.scale(&eigenvalue(&Partition::new(&[l1])?, e.n()));
                let ctx = format!("λ2=0, λ1={l1}, n={}", e.n());
                Ok(compare_expansions(&lhs, &eig, &ctx).and(|| compare_expansions(&rhs, &eig, &ctx)))
            });
            std::iter::once(e.verify_thm4_box(4, 3)).chain(degenerate)
        }))
    });
}

#[test]
fn criterion_05_subset_identity() {
    record(5, "subset identity exact for n<=3 r<=2, (1,3), (0,r<=3); probabilistic (3,3)", || {
        let g = Guard::default();
        let mut cases: Vec<(usize, usize)> = (0..=3).flat_map(|n| (0..=2).map(move |r| (n, r))).collect();
        cases.extend([(1, 3), (0, 3)]);
        let exact = cases.into_iter().map(|(n, r)| verify_thm6(n, r, Mode::Exact, &g));
        each(exact.chain([verify_thm6(3, 3, Mode::Probabilistic { seed: 7 }, &g)]))
    });
}

#[test]
fn criterion_06_weyl_limit() {
    record(6, "t=q limit equals the Weyl character, n=2,3, λ1<=4, λ2<=3", || {
        each([verify_cor6(2, 4, 3), verify_cor6(3, 4, 3)])
    });
}

#[test]
fn criterion_07_minuscule_and_quasiminuscule() {
    record(7, "P(1)P_λ for |λ|<=5 and the quasi-minuscule expansion for |λ|<=4, n=2,3", || {
        each(ranks().iter().flat_map(|e| [verify_eq43(e, 5), verify_thm2c(e, 4)]))
    });
}

#[test]
fn criterion_08_principal_specialization() {
    record(8, "principal specialization, n=2,3, |λ|<=5", || {
        each(ranks().iter().map(|e| e.verify_specialization_box(5)))
    });
}

#[test]
fn criterion_09_orthogonality() {
    record(9, "orthogonality at t=q, q^2, n=2, |λ|,|μ|<=3", || {
        let e = Engine::c(2);
        each([e.verify_orthogonality(3, 1), e.verify_orthogonality(3, 2)])
    });
}

#[test]
fn criterion_10_matrix_inverses() {
    record(10, "Bressoud, (f,g) and two-dimensional pairs invert on their boxes", || {
        each([
            verify_pair_inversion(&MatrixPair::generic(PairKind::BressoudA), 4),
            verify_pair_inversion(&MatrixPair::generic(PairKind::FgPair), 4),
            verify_pair_inversion(&MatrixPair::generic(PairKind::TwoDim), 3),
        ])
    });
}

#[test]
fn criterion_11_six_phi_five() {
    record(11, "terminating very-well-poised 6phi5 summation to order 6", || verify_65_summation(6));
}

#[test]
fn criterion_12_specializations() {
    record(12, "the four specialized series identities and the symmetric form", || {
        let g = Guard::default();
        let pairs = [(1, 1), (2, 1), (2, 2), (3, 2)];
        let kvecs: [&[usize]; 4] = [&[1], &[2], &[1, 1], &[2, 1]];
        let mut vs = Vec::new();
        for (n, r) in pairs {
            vs.push(verify_thm8(n, r, Mode::Exact, &g));
            vs.push(verify_thm9(n, r, Mode::Exact, &g));
        }
        for n in 1..=3 {
            for k in kvecs {
                vs.push(verify_thm10(n, k, Mode::Exact, &g));
                vs.push(verify_thm11(n, k, Mode::Exact, &g));
                vs.push(verify_rosengren_form(n, k, Mode::Exact, &g));
            }
        }
        each(vs)
    });
}

#[test]
fn criterion_13_type_b2() {
    record(13, "B2 product and inverse expansions for λ1<=4, λ2<=3, with the bijection invariants", || {
        each([verify_thm7_box(4, 3), verify_bijection(6), verify_generating_function(5)])
    });
}

#[test]
fn criterion_14_weyl_group_sum() {
    record(14, "W-sum identity, n=2,3", || {
        each((2..=3).map(|n| Ok(Verdict::from_bool(verify_macdonald_wsum(n)?, || format!("n={n}")))))
    });
}

#[test]
fn criterion_15_negative_control() {
    record(15, "perturbed c_10 makes the product check fail at a located coefficient", || {
        let v = verify_thm3(&Engine::c(2), 4, 3, Some(Perturbation { i: 1, j: 0 }))?;
        let located = v.detail.as_deref().is_some_and(|d| d.contains("Q(1)Q(1) at n=2") && d.contains("coefficient of m"));
        Ok(Verdict::from_bool(!v.ok && located, || format!("perturbed check reported {v}")))
    });
}
