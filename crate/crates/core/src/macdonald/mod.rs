//! Macdonald polynomials of type C_n (and B_2) as eigenvectors of the minuscule operator.

mod basis;
mod operator;
mod symmetric;

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use macdonald_coeff::{qpoch_ab, ExactScalar};
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{MacError, Result};
use crate::verdict::compare_expansions;
use crate::weyl::{coroot_pairing, inner_product, orbit_sum, positive_roots, LaurentPoly, Partition};
use crate::Verdict;

pub use basis::{Basis, BasisExpansion};
pub use operator::{RootData, RootKind};
pub use symmetric::sym_mul;

type Column = Arc<Vec<(Partition, ExactScalar)>>;

/// `(q^i t^j; q)_k`.
pub(crate) fn qp(i: i64, j: i64, k: i64) -> ExactScalar {
    qpoch_ab(1, 2 * i, 2 * j, 2, 0, k).expect("nonnegative length")
}

/// `(q^i t^j; 1/q)_k`.
pub(crate) fn qp_inv(i: i64, j: i64, k: i64) -> ExactScalar {
    qpoch_ab(1, 2 * i, 2 * j, -2, 0, k).expect("nonnegative length")
}

/// `(t;q)_k / (q;q)_k`, the coefficients of the one-variable generating function.
pub fn onerow_coefficient(k: i64) -> ExactScalar {
    &qp(0, 1, k) / &qp(1, 0, k)
}

/// `e_λ = Π_i (q^{λ_i/2} t^{n-i+1} + q^{-λ_i/2})`.
pub fn eigenvalue(lam: &Partition, n: usize) -> ExactScalar {
    let mut acc = ExactScalar::one();
    for i in 0..n {
        let l = lam.part(i) as i64;
        let f = ExactScalar::from_ab_terms(&[((l, 2 * (n - i) as i64), 1), ((-l, 0), 1)]);
        acc = &acc * &f;
    }
    acc
}

/// Caches the operator on orbit sums, Weyl characters and computed `P_λ` for one root datum.
/// All caches are write-once per key and safe to share between threads.
pub struct Engine {
    builder: operator::ColumnBuilder,
    columns: RwLock<FxHashMap<Partition, Column>>,
    characters: RwLock<FxHashMap<Vec<i32>, Arc<Vec<(Partition, i64)>>>>,
    polys: RwLock<FxHashMap<Partition, Arc<BasisExpansion>>>,
}

impl Engine {
    pub fn new(data: RootData) -> Self {
        Engine {
            builder: operator::ColumnBuilder::new(data),
            columns: Default::default(),
            characters: Default::default(),
            polys: Default::default(),
        }
    }

    /// Type C_n.
    pub fn c(n: usize) -> Self {
        Self::new(RootData::c(n))
    }

    /// Type B_2 in doubled coordinates.
    pub fn b2() -> Self {
        Self::new(RootData::b2())
    }

    pub fn data(&self) -> &RootData {
        &self.builder.data
    }

    pub fn n(&self) -> usize {
        self.data().n
    }

    fn check(&self, lam: &Partition) -> Result<()> {
        if !lam.fits(self.n()) || !self.data().in_lattice(&lam.coords(self.n())) {
            return Err(MacError::Invalid(format!("{lam:?} is not a dominant weight of rank {}", self.n())));
        }
        Ok(())
    }

    pub fn eigenvalue(&self, lam: &Partition) -> ExactScalar {
        self.data().eigenvalue(lam)
    }

    fn character(&self, top: &[i32]) -> Result<Arc<Vec<(Partition, i64)>>> {
        if let Some(c) = self.characters.read().expect("lock").get(top) {
            return Ok(c.clone());
        }
        let c = Arc::new(self.data().character(top)?);
        Ok(self.characters.write().expect("lock").entry(top.to_vec()).or_insert(c).clone())
    }

    /// `E_π m_ν` in the orbit-sum basis.
    pub fn column(&self, nu: &Partition) -> Result<Column> {
        if let Some(c) = self.columns.read().expect("lock").get(nu) {
            return Ok(c.clone());
        }
        self.check(nu)?;
        let col = self.builder.column(nu, |top| self.character(top))?;
        let diag = col.iter().find(|(mu, _)| mu == nu).map(|(_, c)| c.clone()).unwrap_or_default();
        if diag != self.eigenvalue(nu) {
            return Err(MacError::Internal(format!("diagonal of the operator at {nu:?} is not the eigenvalue")));
        }
        if let Some((mu, _)) = col.iter().find(|(mu, _)| !self.data().dominance_leq(&mu.coords(self.n()), &nu.coords(self.n()))) {
            return Err(MacError::Internal(format!("operator is not triangular: m{mu:?} in E m{nu:?}")));
        }
        let col = Arc::new(col);
        Ok(self.columns.write().expect("lock").entry(nu.clone()).or_insert(col).clone())
    }

    fn prefetch(&self, nus: &[Partition]) -> Result<()> {
        let missing: Vec<&Partition> = {
            let cache = self.columns.read().expect("lock");
            nus.iter().filter(|nu| !cache.contains_key(*nu)).collect()
        };
        missing.par_iter().map(|nu| self.column(nu).map(|_| ())).collect::<Result<Vec<()>>>()?;
        Ok(())
    }

    /// Applies the operator to an orbit-sum expansion.
    pub fn apply_e_m(&self, f: &BasisExpansion) -> Result<BasisExpansion> {
        if f.basis != Basis::M || f.n != self.n() {
            return Err(MacError::Invalid("operator input must be an orbit-sum expansion of matching rank".into()));
        }
        let support: Vec<Partition> = f.terms().into_iter().map(|(l, _)| l.clone()).collect();
        self.prefetch(&support)?;
        let mut acc: BTreeMap<Partition, Vec<(ExactScalar, ExactScalar)>> = BTreeMap::new();
        for nu in &support {
            let c = f.get(nu);
            for (mu, v) in self.column(nu)?.iter() {
                acc.entry(mu.clone()).or_default().push((c.clone(), v.clone()));
            }
        }
        let mut out = BasisExpansion::new(Basis::M, self.n());
        for (mu, pairs) in acc {
            let refs: Vec<(&ExactScalar, &ExactScalar)> = pairs.iter().map(|(a, b)| (a, b)).collect();
            out.add(mu, ExactScalar::sum_of_products(&refs));
        }
        Ok(out)
    }

    /// `E_π f` for an invariant Laurent polynomial.
    pub fn apply_e(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        let m = BasisExpansion::from_laurent(f)?;
        let out = self.apply_e_m(&m)?.to_laurent()?;
        debug_assert!(out.is_w_invariant());
        Ok(out)
    }

    /// `P_λ = m_λ + Σ_{μ<λ} a_{λμ} m_μ`, solved downward from `(E_π - e_λ) P_λ = 0`.
    pub fn compute_p(&self, lam: &Partition) -> Result<Arc<BasisExpansion>> {
        if let Some(p) = self.polys.read().expect("lock").get(lam) {
            return Ok(p.clone());
        }
        self.check(lam)?;
        let below = self.data().dominated(lam);
        self.prefetch(&below)?;
        let e_lam = self.eigenvalue(lam);
        let n = self.n();
        let cols: Vec<Column> = below.iter().map(|nu| self.column(nu)).collect::<Result<_>>()?;
        let mut coeffs: Vec<(Partition, ExactScalar)> = vec![(lam.clone(), ExactScalar::one())];
        for mu in below.iter().skip(1) {
            let mut pairs = Vec::new();
            for ((_, a_nu), col) in coeffs.iter().zip(&cols) {
                if let Some((_, m)) = col.iter().find(|(k, _)| k == mu) {
                    pairs.push((a_nu, m));
                }
            }
            let num = ExactScalar::sum_of_products(&pairs);
            let gap = &e_lam - &self.eigenvalue(mu);
            if gap.is_zero() {
                return Err(MacError::Internal(format!("eigenvalues of {lam:?} and {mu:?} coincide")));
            }
            coeffs.push((mu.clone(), num.try_div(&gap)?));
        }
        let mut p = BasisExpansion::new(Basis::M, n);
        for (mu, a) in coeffs {
            p.add(mu, a);
        }
        let p = Arc::new(p);
        Ok(self.polys.write().expect("lock").entry(lam.clone()).or_insert(p).clone())
    }

    pub fn p_laurent(&self, lam: &Partition) -> Result<LaurentPoly> {
        self.compute_p(lam)?.to_laurent()
    }
}

fn require_c(e: &Engine) -> Result<()> {
    if e.data().kind != RootKind::C {
        return Err(MacError::Invalid("operation is defined for type C only".into()));
    }
    Ok(())
}

/// `Q_λ / P_λ = Π_{i ≤ j} (q^{λ_i-λ_j} t^{j-i+1}; q)_{λ_j-λ_{j+1}} / (q^{λ_i-λ_j+1} t^{j-i}; q)_{λ_j-λ_{j+1}}`.
pub fn q_normalization(lam: &Partition, n: usize) -> ExactScalar {
    let l = |i: usize| lam.part(i) as i64;
    let mut acc = ExactScalar::one();
    for i in 0..n {
        for j in i..n {
            let len = l(j) - l(j + 1);
            if len == 0 {
                continue;
            }
            let d = l(i) - l(j);
            let w = (j - i) as i64;
            acc = &acc * &(&qp(d, w + 1, len) / &qp(d + 1, w, len));
        }
    }
    acc
}

impl Engine {
    /// `Q_λ = b_λ P_λ` in orbit sums.
    pub fn compute_q(&self, lam: &Partition) -> Result<BasisExpansion> {
        require_c(self)?;
        Ok(self.compute_p(lam)?.scale(&q_normalization(lam, self.n())))
    }
}

/// `Q_{(r)}` for `r = 0..=max`, read off from `Π_i H(u x_i) H(u / x_i)` with
/// `H(z) = Σ_k (t;q)_k/(q;q)_k z^k`.
pub fn onerow_q_series(max: usize, n: usize) -> Vec<BasisExpansion> {
    let g: Vec<ExactScalar> = (0..=max as i64).map(onerow_coefficient).collect();
    (0..=max as i32)
        .into_par_iter()
        .map(|r| {
            let mut out = BasisExpansion::new(Basis::M, n);
            let mut m = r;
            while m >= 0 {
                for kappa in crate::weyl::partitions_of(m, n, m) {
                    let k = kappa.coords(n);
                    let half = (r - m) / 2;
                    let mut terms = Vec::new();
                    for l in compositions(half, n) {
                        let mut prod = ExactScalar::one();
                        for i in 0..n {
                            prod = &prod * &(&g[(k[i] + l[i]) as usize] * &g[l[i] as usize]);
                        }
                        terms.push(prod);
                    }
                    out.add(kappa, ExactScalar::sum(terms.iter()));
                }
                m -= 2;
            }
            out
        })
        .collect()
}

/// Weak compositions of `m` into `k` parts.
pub(crate) fn compositions(m: i32, k: usize) -> Vec<Vec<i32>> {
    if k == 0 {
        return if m == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=m).rev() {
        for mut rest in compositions(m - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `x_i -> q^{k(n-i+1/2)} = t^{n-i+1/2}`.
pub fn specialize_principal(f: &LaurentPoly) -> ExactScalar {
    let n = f.n();
    let mut parts = Vec::new();
    for (e, c) in f.terms() {
        let be: i64 = e.iter().enumerate().map(|(i, &x)| x as i64 * (2 * (n - 1 - i) as i64 + 1)).sum();
        parts.push(c * &ExactScalar::ab(0, be));
    }
    ExactScalar::sum(parts.iter())
}

/// `q^{-⟨λ,ρ_k^∨⟩} Π_{α>0} (q^{⟨ρ_k,α^∨⟩} t; q)_{⟨λ,α^∨⟩} / (q^{⟨ρ_k,α^∨⟩}; q)_{⟨λ,α^∨⟩}`.
pub fn principal_value(lam: &Partition, n: usize) -> ExactScalar {
    let l = lam.coords(n);
    let rho = crate::weyl::Weight::rho(n).coords;
    let shift: i64 = (0..n).map(|i| l[i] as i64 * (2 * (n - 1 - i) as i64 + 1)).sum();
    let mut acc = ExactScalar::ab(0, -shift);
    for a in positive_roots(n) {
        let h = coroot_pairing(&rho, &a) as i64;
        let k = coroot_pairing(&l, &a) as i64;
        acc = &acc * &(&qp(0, h + 1, k) / &qp(0, h, k));
    }
    acc
}

impl Engine {
    pub fn verify_specialization(&self, lam: &Partition) -> Result<bool> {
        require_c(self)?;
        Ok(specialize_principal(&self.p_laurent(lam)?) == principal_value(lam, self.n()))
    }

    /// Both sides of the action of `E_π` on `Q_{(λ_1)} Q_{(λ_2)}`.
    pub fn product_action_sides(&self, l1: i32, l2: i32) -> Result<(BasisExpansion, BasisExpansion)> {
        require_c(self)?;
        if l1 < l2 || l2 < 0 {
            return Err(MacError::Invalid(format!("need λ1 >= λ2 >= 0, got ({l1},{l2})")));
        }
        let n = self.n();
        if n < 2 {
            return Err(MacError::Invalid("rank must be at least 2".into()));
        }
        let qs = onerow_q_series((l1 + l2) as usize, n);
        let prod = |a: i32, b: i32| sym_mul(&qs[a as usize], &qs[b as usize]);
        let base = prod(l1, l2);
        let lhs = self.apply_e_m(&base)?;
        let lam = Partition::new(&[l1, l2])?;
        let mut rhs = base.scale(&eigenvalue(&lam, n));
        let mut pref = ExactScalar::one_minus(1, 0, 2);
        for i in 1..=(n as i64 - 2) {
            pref = &pref * &ExactScalar::from_ab_terms(&[((0, 2 * i), 1), ((0, 0), 1)]);
        }
        let (l1, l2) = (l1 as i64, l2 as i64);
        let up = &pref * &ExactScalar::ab(-(l1 - l2), 2 * (n as i64 - 1));
        let down = -(&pref * &ExactScalar::ab(-(l1 + l2), 0));
        for k in 1..=l2 {
            let c = &up * &(&ExactScalar::q_pow(-k) * &ExactScalar::one_minus(1, 2 * (2 * k + l1 - l2), 0));
            rhs = rhs.add_expansion(&prod((l1 + k) as i32, (l2 - k) as i32).scale(&c));
            let d = &down * &(&ExactScalar::t_pow(k - 1) * &ExactScalar::one_minus(1, 2 * (l1 + l2 - 2 * k), 4 * n as i64));
            rhs = rhs.add_expansion(&prod((l1 - k) as i32, (l2 - k) as i32).scale(&d));
        }
        Ok((lhs, rhs))
    }

    pub fn verify_thm4(&self, l1: i32, l2: i32) -> Result<bool> {
        let (l, r) = self.product_action_sides(l1, l2)?;
        Ok(l == r)
    }

    /// `E_π P_λ = e_λ P_λ` for one `λ`.
    pub fn check_eigen(&self, lam: &Partition) -> Result<Verdict> {
        let p = self.compute_p(lam)?;
        let lhs = self.apply_e_m(&p)?;
        let rhs = p.scale(&self.eigenvalue(lam));
        Ok(compare_expansions(&lhs, &rhs, &format!("E P{lam:?} at n={}", self.n())))
    }

    pub fn verify_eigen_box(&self, max_size: i32) -> Result<Verdict> {
        let lams = partitions_up_to(max_size, self.n());
        self.prefetch(&lams)?;
        let vs: Vec<Verdict> = lams.par_iter().map(|l| self.check_eigen(l)).collect::<Result<_>>()?;
        Ok(Verdict::all(vs))
    }

    pub fn verify_specialization_box(&self, max_size: i32) -> Result<Verdict> {
        let lams = partitions_up_to(max_size, self.n());
        let vs: Vec<Verdict> = lams
            .par_iter()
            .map(|l| {
                let ok = self.verify_specialization(l)?;
                Ok(Verdict::from_bool(ok, || format!("principal specialization of P{l:?} at n={}", self.n())))
            })
            .collect::<Result<_>>()?;
        Ok(Verdict::all(vs))
    }

    /// Every pair with `λ_1 ≤ max1`, `λ_2 ≤ min(max2, λ_1)`.
    pub fn verify_thm4_box(&self, max1: i32, max2: i32) -> Result<Verdict> {
        let pairs: Vec<(i32, i32)> = (0..=max1).flat_map(|l1| (0..=max2.min(l1)).map(move |l2| (l1, l2))).collect();
        let vs: Vec<Verdict> = pairs
            .par_iter()
            .map(|&(l1, l2)| {
                let (l, r) = self.product_action_sides(l1, l2)?;
                Ok(compare_expansions(&l, &r, &format!("E Q({l1})Q({l2}) at n={}", self.n())))
            })
            .collect::<Result<_>>()?;
        Ok(Verdict::all(vs))
    }

    /// `⟨P_λ, P_μ⟩ = 0` exactly when `λ ≠ μ`, at `t = q^k`, over `|λ|, |μ| ≤ max_size`.
    pub fn verify_orthogonality(&self, max_size: i32, k: i64) -> Result<Verdict> {
        require_c(self)?;
        let lams = partitions_up_to(max_size, self.n());
        let polys: Vec<LaurentPoly> = lams.par_iter().map(|l| self.p_laurent(l)).collect::<Result<_>>()?;
        let pairs: Vec<(usize, usize)> = (0..lams.len()).flat_map(|i| (i..lams.len()).map(move |j| (i, j))).collect();
        let vs: Vec<Verdict> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let v = inner_product(&polys[i], &polys[j], k)?;
                let (a, b) = (&lams[i], &lams[j]);
                Ok(Verdict::from_bool(v.is_zero() == (i != j), || {
                    if i == j {
                        format!("<P{a:?}, P{a:?}> vanishes at t=q^{k}")
                    } else {
                        format!("<P{a:?}, P{b:?}> = {v} at t=q^{k}")
                    }
                }))
            })
            .collect::<Result<_>>()?;
        Ok(Verdict::all(vs))
    }
}

/// Partitions with at most `n` parts and size at most `max_size`, smallest first.
pub fn partitions_up_to(max_size: i32, n: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|s| crate::weyl::partitions_of(s, n, s)).collect()
}

/// `m_λ` as an expansion.
pub fn m_basis(lam: &Partition, n: usize) -> BasisExpansion {
    BasisExpansion::single(Basis::M, n, lam.clone())
}

/// `m_λ` as a Laurent polynomial (re-exported for convenience).
pub fn m_laurent(lam: &Partition, n: usize) -> LaurentPoly {
    orbit_sum(lam, n)
}
