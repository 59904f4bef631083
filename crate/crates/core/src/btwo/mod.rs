//! Macdonald polynomials of type B_2 and their passage to type C_2 through
//! `y_1 = x_1 x_2`, `y_2 = x_1 / x_2`.
//!
//! B_2 weights have half-integer coordinates. They are stored doubled, so a
//! monomial `y^μ` is kept as the integer exponent `2μ`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use macdonald_coeff::ExactScalar;
use rayon::prelude::*;

use crate::macdonald::{onerow_q_series, partitions_up_to, qp, sym_mul, Basis, BasisExpansion, Engine};
use crate::pieri::{expand_tworow_inverse, expand_tworow_product};
use crate::verdict::compare_expansions;
use crate::weyl::{Exp, LaurentPoly, Partition};
use crate::{MacError, Result, Verdict};

/// `c_1 ε_1 + c_2 ε_2` with `c_1 ≥ c_2 ≥ 0`, stored as `(2c_1, 2c_2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct B2Weight {
    d1: i32,
    d2: i32,
}

impl B2Weight {
    pub fn from_doubled(d1: i32, d2: i32) -> Result<Self> {
        if d2 < 0 || d1 < d2 || (d1 - d2) % 2 != 0 {
            return Err(MacError::Invalid(format!("({d1}/2, {d2}/2) is not a dominant B2 weight")));
        }
        Ok(B2Weight { d1, d2 })
    }

    /// `λ_1 ϖ_1 + λ_2 ϖ_2` with `ϖ_1 = ε_1`, `ϖ_2 = (ε_1 + ε_2)/2`.
    pub fn from_fundamental(l1: i32, l2: i32) -> Result<Self> {
        if l1 < 0 || l2 < 0 {
            return Err(MacError::Invalid(format!("negative fundamental coordinates ({l1}, {l2})")));
        }
        Self::from_doubled(2 * l1 + l2, l2)
    }

    /// The weight whose B_2 polynomial in `y` is the C_2 polynomial of `lam` in `x`.
    pub fn from_c2(lam: &Partition) -> Result<Self> {
        if !lam.fits(2) {
            return Err(MacError::Invalid(format!("{lam:?} is not a C2 weight")));
        }
        let (c1, c2) = (lam.part(0), lam.part(1));
        Self::from_doubled(c1 + c2, c1 - c2)
    }

    pub fn doubled(&self) -> (i32, i32) {
        (self.d1, self.d2)
    }

    pub fn fundamental(&self) -> (i32, i32) {
        ((self.d1 - self.d2) / 2, self.d2)
    }

    pub fn to_c2(&self) -> Partition {
        Partition::new(&[(self.d1 + self.d2) / 2, (self.d1 - self.d2) / 2]).expect("dominant")
    }

    fn key(&self) -> Partition {
        Partition::new(&[self.d1, self.d2]).expect("dominant")
    }
}

impl fmt::Display for B2Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = |d: i32| if d % 2 == 0 { format!("{}", d / 2) } else { format!("{d}/2") };
        write!(f, "({}, {})", half(self.d1), half(self.d2))
    }
}

/// Root parameters `(t, T)` of the C_2 side. The passage to B_2 exchanges them.
#[derive(Clone, Debug, PartialEq)]
pub struct Multiplicities {
    pub t: ExactScalar,
    pub big_t: ExactScalar,
}

impl Multiplicities {
    pub fn equal() -> Self {
        Multiplicities { t: ExactScalar::t(), big_t: ExactScalar::t() }
    }

    pub fn swapped(&self) -> Self {
        Multiplicities { t: self.big_t.clone(), big_t: self.t.clone() }
    }

    pub fn is_equal(&self) -> bool {
        self.t == self.big_t
    }
}

fn b2_engine() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(Engine::b2)
}

fn c2_engine() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(|| Engine::c(2))
}

fn check_lattice(f: &LaurentPoly) -> Result<()> {
    if f.n() != 2 {
        return Err(MacError::Invalid(format!("B2 polynomials have two variables, got {}", f.n())));
    }
    if let Some((e, _)) = f.terms().find(|(e, _)| (e[0] - e[1]) % 2 != 0) {
        return Err(MacError::Invalid(format!("doubled exponent {e:?} is off the B2 weight lattice")));
    }
    Ok(())
}

/// `E f = Σ_{σ=±1} (Φ(x^σ_1) f(q^σ x_1, x_2) + Φ(x^σ_2) f(x_1, q^σ x_2))` on doubled exponents.
pub fn b2_operator_apply(f: &LaurentPoly) -> Result<LaurentPoly> {
    check_lattice(f)?;
    b2_engine().apply_e(f)
}

/// `t^3 q^{λ_1} + q^{-λ_1} + t^2 q^{λ_2} + t q^{-λ_2}`.
pub fn b2_eigenvalue(w: &B2Weight) -> ExactScalar {
    let (d1, d2) = (w.d1 as i64, w.d2 as i64);
    ExactScalar::from_ab_terms(&[((d1, 6), 1), ((-d1, 0), 1), ((d2, 4), 1), ((-d2, 2), 1)])
}

pub fn b2_compute_p(w: &B2Weight) -> Result<Arc<BasisExpansion>> {
    b2_engine().compute_p(&w.key())
}

/// `(t;q)_{λ_1}/(q;q)_{λ_1} (t;q)_{λ_2}/(q;q)_{λ_2} (q^{λ_2} t^2;q)_{λ_1}/(q^{λ_2+1} t;q)_{λ_1}`.
pub fn b2_normalization(w: &B2Weight) -> ExactScalar {
    let (l1, l2) = w.fundamental();
    let (l1, l2) = (l1 as i64, l2 as i64);
    let a = &qp(0, 1, l1) / &qp(1, 0, l1);
    let b = &qp(0, 1, l2) / &qp(1, 0, l2);
    let c = &qp(l2, 2, l1) / &qp(l2 + 1, 1, l1);
    &(&a * &b) * &c
}

pub fn b2_compute_q(w: &B2Weight) -> Result<BasisExpansion> {
    Ok(b2_compute_p(w)?.scale(&b2_normalization(w)))
}

/// `x^c -> y^{((c_1+c_2)/2, (c_1-c_2)/2)}`, in doubled exponents.
pub fn c2_to_y(f: &LaurentPoly) -> Result<LaurentPoly> {
    if f.n() != 2 {
        return Err(MacError::Invalid(format!("C2 polynomials have two variables, got {}", f.n())));
    }
    let mut out = LaurentPoly::zero(2);
    for (e, c) in f.terms() {
        out.add_term(Exp::from_slice(&[e[0] + e[1], e[0] - e[1]]), c.clone());
    }
    Ok(out)
}

/// Inverse of [`c2_to_y`].
pub fn y_to_c2(f: &LaurentPoly) -> Result<LaurentPoly> {
    check_lattice(f)?;
    let mut out = LaurentPoly::zero(2);
    for (e, c) in f.terms() {
        out.add_term(Exp::from_slice(&[(e[0] + e[1]) / 2, (e[0] - e[1]) / 2]), c.clone());
    }
    Ok(out)
}

/// The C_2 polynomial `P_λ(x)` rewritten in `y`, as a B_2 orbit-sum expansion.
pub fn b2_from_c2(lam: &Partition) -> Result<BasisExpansion> {
    let params = Multiplicities::equal().swapped();
    if !params.is_equal() {
        return Err(MacError::Invalid("only equal multiplicities are supported".into()));
    }
    let p = c2_engine().p_laurent(lam)?;
    let y = c2_to_y(&p)?;
    if check_lattice(&y).is_err() {
        return Err(MacError::Internal(format!("P{lam:?} has exponents off the B2 lattice in y")));
    }
    BasisExpansion::from_laurent(&y)
}

/// `b2_from_c2(λ)` is the B_2 polynomial of the matching weight and an eigenvector
/// of the B_2 operator with the explicit eigenvalue.
pub fn check_bijection(lam: &Partition) -> Result<Verdict> {
    let w = B2Weight::from_c2(lam)?;
    let ctx = format!("C2 {lam:?} -> B2 {w}");
    let from_c = b2_from_c2(lam)?;
    let direct = b2_compute_p(&w)?;
    let same = compare_expansions(&from_c, &direct, &format!("{ctx}, polynomial"));
    let f = from_c.to_laurent()?;
    let ef = BasisExpansion::from_laurent(&b2_operator_apply(&f)?)?;
    let lf = from_c.scale(&b2_eigenvalue(&w));
    Ok(same.and(|| compare_expansions(&ef, &lf, &format!("{ctx}, eigenvalue"))))
}

pub fn verify_bijection(max_size: i32) -> Result<Verdict> {
    let lams = partitions_up_to(max_size, 2);
    let vs: Vec<Verdict> = lams.par_iter().map(check_bijection).collect::<Result<_>>()?;
    Ok(Verdict::all(vs))
}

/// `Σ_r u^r Q_{rϖ_2}(x_1 x_2, x_1/x_2) = Π_{x ∈ {x_1^{±1}, x_2^{±1}}} (tux;q)_∞/(ux;q)_∞`, order by order.
pub fn verify_generating_function(max_r: usize) -> Result<Verdict> {
    let series = onerow_q_series(max_r, 2);
    let vs: Vec<Verdict> = (0..=max_r)
        .into_par_iter()
        .map(|r| {
            let w = B2Weight::from_fundamental(0, r as i32)?;
            let q = b2_compute_q(&w)?.to_laurent()?;
            let x = BasisExpansion::from_laurent(&y_to_c2(&q)?)?;
            Ok(compare_expansions(&x, &series[r], &format!("coefficient of u^{r}")))
        })
        .collect::<Result<_>>()?;
    Ok(Verdict::all(vs))
}

/// Both sides of the product expansion
/// `Q_{λ_1ϖ_2} Q_{λ_2ϖ_2} = Σ c_ij Q_{(λ_1+λ_2-2j)ε_1/2 + (λ_1-λ_2+2i)ε_2/2}`.
pub fn b2_product_sides(l1: i64, l2: i64) -> Result<(BasisExpansion, BasisExpansion)> {
    let q = |r: i64| b2_compute_q(&B2Weight::from_fundamental(0, r as i32)?);
    let lhs = sym_mul(&q(l1)?, &q(l2)?);
    let mut rhs = BasisExpansion::new(Basis::M, 2);
    for ((i, j), c) in &expand_tworow_product(l1, l2, 2)?.terms {
        let w = B2Weight::from_doubled((l1 + l2 - 2 * j) as i32, (l1 - l2 + 2 * i) as i32)?;
        rhs = rhs.add_expansion(&b2_compute_q(&w)?.scale(c));
    }
    Ok((lhs, rhs))
}

/// Both sides of the inverse expansion
/// `Q_{(λ_1+λ_2)ε_1/2 + (λ_1-λ_2)ε_2/2} = Σ C_ij Q_{(λ_1+i-j)ϖ_2} Q_{(λ_2-i-j)ϖ_2}`.
pub fn b2_inverse_sides(l1: i64, l2: i64) -> Result<(BasisExpansion, BasisExpansion)> {
    let q = |r: i64| b2_compute_q(&B2Weight::from_fundamental(0, r as i32)?);
    let lhs = b2_compute_q(&B2Weight::from_doubled((l1 + l2) as i32, (l1 - l2) as i32)?)?;
    let mut rhs = BasisExpansion::new(Basis::M, 2);
    for ((i, j), c) in &expand_tworow_inverse(l1, l2, 2)?.terms {
        let prod = sym_mul(&q(l1 + i - j)?, &q(l2 - i - j)?);
        rhs = rhs.add_expansion(&prod.scale(c));
    }
    Ok((lhs, rhs))
}

pub fn verify_thm7(l1: i64, l2: i64) -> Result<Verdict> {
    if l2 < 0 || l1 < l2 {
        return Err(MacError::Invalid(format!("need l1 >= l2 >= 0, got ({l1}, {l2})")));
    }
    let (a, b) = b2_product_sides(l1, l2)?;
    let forward = compare_expansions(&a, &b, &format!("B2 Q({l1}w2)Q({l2}w2)"));
    Ok(forward.and(|| {
        b2_inverse_sides(l1, l2)
            .map(|(a, b)| compare_expansions(&a, &b, &format!("B2 Q at ({l1}+{l2}, {l1}-{l2})/2")))
            .unwrap_or_else(|e| Verdict::fail(e.to_string()))
    }))
}

pub fn verify_thm7_box(max1: i64, max2: i64) -> Result<Verdict> {
    let pairs: Vec<(i64, i64)> = (0..=max2).flat_map(|l2| (l2..=max1).map(move |l1| (l1, l2))).collect();
    let vs: Vec<Verdict> = pairs.par_iter().map(|&(l1, l2)| verify_thm7(l1, l2)).collect::<Result<_>>()?;
    Ok(Verdict::all(vs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[i32]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn weights_round_trip() {
        let w = B2Weight::from_fundamental(1, 1).unwrap();
        assert_eq!(w.doubled(), (3, 1));
        assert_eq!(w.to_string(), "(3/2, 1/2)");
        assert_eq!(B2Weight::from_c2(&w.to_c2()).unwrap(), w);
        assert!(B2Weight::from_doubled(2, 1).is_err());
    }

    #[test]
    fn operator_on_one() {
        let e = b2_operator_apply(&LaurentPoly::one(2)).unwrap();
        let want = ExactScalar::from_ab_terms(&[((0, 6), 1), ((0, 0), 1), ((0, 4), 1), ((0, 2), 1)]);
        assert_eq!(e.constant_term(), want);
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn rejects_non_symmetric_and_off_lattice() {
        let f = LaurentPoly::monomial(&[2, 0], ExactScalar::one());
        assert!(b2_operator_apply(&f).is_err());
        let mut g = LaurentPoly::zero(2);
        for e in [[1, 0], [-1, 0], [0, 1], [0, -1]] {
            g.add_term(Exp::from_slice(&e), ExactScalar::one());
        }
        assert!(b2_operator_apply(&g).is_err());
    }

    #[test]
    fn small_images() {
        assert_eq!(b2_from_c2(&part(&[])).unwrap(), BasisExpansion::single(Basis::M, 2, part(&[])));
        let p11 = b2_from_c2(&part(&[1, 1])).unwrap();
        assert!(p11.get(&part(&[2])).is_one());
        let p10 = b2_from_c2(&part(&[1])).unwrap();
        assert_eq!(p10, BasisExpansion::single(Basis::M, 2, part(&[1, 1])));
    }

    #[test]
    fn bijection_small() {
        assert!(verify_bijection(3).unwrap().ok);
    }

    #[test]
    fn thm7_small() {
        assert!(verify_thm7(2, 0).unwrap().ok);
        let v = verify_thm7(1, 1).unwrap();
        assert!(v.ok, "{v}");
    }
}
