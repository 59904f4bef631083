//! The minuscule operator `E_π f = Σ_{w ∈ W/W_π} w(Φ_π T_π f)` tabulated on orbit sums.
//!
//! Multiplying by the Weyl denominator `δ` turns every summand into a Laurent polynomial:
//! `δ E_π f = Σ_w ε(w) w(L T_π f)` with `L = δ Φ_π`. The antisymmetric result is read off
//! at strictly dominant exponents and converted back through Weyl characters.

use std::collections::BTreeMap;

use macdonald_coeff::ExactScalar;
use rustc_hash::FxHashMap;

use crate::error::{MacError, Result};
use crate::weyl::{character_ints, orbit, Exp, Partition, SignedPerm, Weight};

/// Integer Laurent polynomial in `a = q^{1/2}`, `b = t^{1/2}`.
pub(crate) type AbPoly = BTreeMap<(i32, i32), i64>;

fn ab_add(acc: &mut AbPoly, c: &AbPoly, shift_a: i32, sign: i64) {
    for (&(i, j), &v) in c {
        let slot = acc.entry((i + shift_a, j)).or_insert(0);
        *slot = slot.checked_add(sign * v).expect("coefficient overflow");
        if *slot == 0 {
            acc.remove(&(i + shift_a, j));
        }
    }
}

pub(crate) fn ab_to_scalar(c: &AbPoly) -> ExactScalar {
    let terms: Vec<((i64, i64), i64)> = c.iter().map(|(&(i, j), &v)| ((i as i64, j as i64), v)).collect();
    ExactScalar::from_ab_terms(&terms)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    /// Type C_n in the coordinates `ε_i`.
    C,
    /// Type B_2 in doubled coordinates `2ε_i`, so that `½(ε_1 + ε_2)` is integral.
    B2,
}

/// A reduced root system together with the minuscule coweight defining its operator.
#[derive(Clone, Debug)]
pub struct RootData {
    pub kind: RootKind,
    pub n: usize,
    /// Half sum of positive roots, in stored coordinates.
    pub rho: Exp,
    pub positive_roots: Vec<Exp>,
    /// `T_π e^μ = a^{⟨shift, μ⟩} e^μ`.
    pub shift: Exp,
    /// Representatives of `W / W_π` with their signs.
    pub cosets: Vec<(SignedPerm, i32)>,
}

impl RootData {
    pub fn c(n: usize) -> Self {
        Self::build(RootKind::C, n, Weight::rho(n).coords, crate::weyl::positive_roots(n), smallvec::smallvec![1; n])
    }

    pub fn b2() -> Self {
        let roots = vec![exp(&[2, 2]), exp(&[2, -2]), exp(&[2, 0]), exp(&[0, 2])];
        Self::build(RootKind::B2, 2, exp(&[3, 1]), roots, exp(&[1, 0]))
    }

    fn build(kind: RootKind, n: usize, rho: Exp, positive_roots: Vec<Exp>, shift: Exp) -> Self {
        let mut seen = FxHashMap::default();
        let mut cosets = Vec::new();
        for w in SignedPerm::all(n) {
            let img = w.apply(&shift);
            if seen.insert(img, ()).is_none() {
                let s = w.sign();
                cosets.push((w, s));
            }
        }
        RootData { kind, n, rho, positive_roots, shift, cosets }
    }

    fn is_minuscule_root(&self, a: &[i32]) -> bool {
        dot(&self.shift, a) > 0
    }

    /// Whether a dominant vector of stored coordinates is a weight of the lattice.
    pub fn in_lattice(&self, mu: &[i32]) -> bool {
        match self.kind {
            RootKind::C => true,
            RootKind::B2 => (mu[0] - mu[1]) % 2 == 0,
        }
    }

    /// `λ - μ` is a nonnegative integer combination of simple roots.
    pub fn dominance_leq(&self, mu: &[i32], lam: &[i32]) -> bool {
        match self.kind {
            RootKind::C => crate::weyl::exp_dominance_leq(mu, lam),
            RootKind::B2 => {
                let d1 = lam[0] - mu[0];
                let d2 = lam[1] - mu[1];
                d1 >= 0 && d1 % 2 == 0 && d1 + d2 >= 0 && (d1 + d2) % 2 == 0
            }
        }
    }

    /// A linear functional strictly positive on simple roots, used to order recursions.
    pub fn height(&self, mu: &[i32]) -> i32 {
        dot(&self.rho, mu)
    }

    /// Dominant weights below `λ`, highest first.
    pub fn dominated(&self, lam: &Partition) -> Vec<Partition> {
        let top = lam.coords(self.n);
        let bound = top.first().copied().unwrap_or(0);
        let mut out = Vec::new();
        let mut cur = vec![0i32; self.n];
        fn rec(rd: &RootData, i: usize, cap: i32, cur: &mut Vec<i32>, top: &[i32], out: &mut Vec<Partition>) {
            if i == cur.len() {
                if rd.in_lattice(cur) && rd.dominance_leq(cur, top) {
                    out.push(Partition::new(cur).expect("decreasing"));
                }
                return;
            }
            for v in 0..=cap {
                cur[i] = v;
                rec(rd, i + 1, v, cur, top, out);
            }
        }
        rec(self, 0, bound, &mut cur, &top, &mut out);
        out.sort_by(|a, b| {
            let (ca, cb) = (a.coords(self.n), b.coords(self.n));
            self.height(&cb).cmp(&self.height(&ca)).then_with(|| cb.cmp(&ca))
        });
        out
    }

    /// `c_λ = Σ_{w ∈ W/W_π} q^{⟨wπ, λ⟩} t^{⟨π, ρ⟩ + ⟨wπ, ρ⟩}`.
    pub fn eigenvalue(&self, lam: &Partition) -> ExactScalar {
        let l = lam.coords(self.n);
        let base = dot(&self.shift, &self.rho);
        let terms: Vec<((i64, i64), i64)> = self
            .cosets
            .iter()
            .map(|(w, _)| {
                let wp = w.apply(&self.shift);
                ((dot(&wp, &l) as i64, (base + dot(&wp, &self.rho)) as i64), 1)
            })
            .collect();
        ExactScalar::from_ab_terms(&terms)
    }

    /// `L = δ Φ_π = e^{-ρ} Π_{α ∉ π} (e^α - 1) Π_{α ∈ π} (t e^α - 1)`.
    fn delta_phi(&self) -> Vec<(Exp, AbPoly)> {
        let mut acc: BTreeMap<Exp, AbPoly> = BTreeMap::new();
        acc.insert(self.rho.iter().map(|x| -x).collect(), AbPoly::from([((0, 0), 1)]));
        for a in &self.positive_roots {
            let tpow = if self.is_minuscule_root(a) { 2 } else { 0 };
            let mut next: BTreeMap<Exp, AbPoly> = BTreeMap::new();
            for (e, c) in &acc {
                ab_add(next.entry(e.clone()).or_default(), c, 0, -1);
                let f: Exp = e.iter().zip(a).map(|(x, y)| x + y).collect();
                let slot = next.entry(f).or_default();
                for (&(i, j), &v) in c {
                    let s = slot.entry((i, j + tpow)).or_insert(0);
                    *s += v;
                }
            }
            for c in next.values_mut() {
                c.retain(|_, v| *v != 0);
            }
            next.retain(|_, c| !c.is_empty());
            acc = next;
        }
        acc.into_iter().collect()
    }

    /// Dominant multiplicities of the Weyl character `χ_μ`.
    pub(crate) fn character(&self, mu: &[i32]) -> Result<Vec<(Partition, i64)>> {
        let q = character_ints(mu, &self.rho)?;
        Ok(q.into_iter()
            .filter(|(e, _)| Weight { coords: e.clone() }.is_dominant())
            .map(|(e, c)| (Partition::new(&e).expect("dominant"), c))
            .collect())
    }
}

fn exp(v: &[i32]) -> Exp {
    Exp::from_slice(v)
}

fn dot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn strictly_dominant(e: &[i32]) -> bool {
    e.windows(2).all(|w| w[0] > w[1]) && e.last().is_none_or(|&x| x > 0)
}

/// Builds `δ Φ_π` once per root datum and evaluates `E_π m_ν`.
pub(crate) struct ColumnBuilder {
    pub data: RootData,
    l: Vec<(Exp, AbPoly)>,
}

impl ColumnBuilder {
    pub fn new(data: RootData) -> Self {
        let l = data.delta_phi();
        ColumnBuilder { data, l }
    }

    /// Returns `δ E_π m_ν` at strictly dominant exponents.
    pub fn antisymmetric_part(&self, nu: &Partition) -> BTreeMap<Exp, AbPoly> {
        let rd = &self.data;
        let tf: Vec<(Exp, i32)> = orbit(&nu.coords(rd.n)).into_iter().map(|e| { let s = dot(&rd.shift, &e); (e, s) }).collect();
        let mut g: FxHashMap<Exp, AbPoly> = FxHashMap::default();
        for (el, cl) in &self.l {
            for (mu, sa) in &tf {
                let e: Exp = el.iter().zip(mu).map(|(x, y)| x + y).collect();
                ab_add(g.entry(e).or_default(), cl, *sa, 1);
            }
        }
        let mut out: BTreeMap<Exp, AbPoly> = BTreeMap::new();
        for (w, s) in &rd.cosets {
            for (e, c) in &g {
                let k = w.apply(e);
                if strictly_dominant(&k) {
                    ab_add(out.entry(k).or_default(), c, 0, *s as i64);
                }
            }
        }
        out.retain(|_, c| !c.is_empty());
        out
    }

    /// `E_π m_ν` in orbit sums, given a character lookup.
    pub fn column(
        &self,
        nu: &Partition,
        character: impl Fn(&[i32]) -> Result<std::sync::Arc<Vec<(Partition, i64)>>>,
    ) -> Result<Vec<(Partition, ExactScalar)>> {
        let rd = &self.data;
        let anti = self.antisymmetric_part(nu);
        let mut col: BTreeMap<Partition, AbPoly> = BTreeMap::new();
        for (k, c) in &anti {
            let top: Vec<i32> = k.iter().zip(&rd.rho).map(|(x, y)| x - y).collect();
            if !Weight::new(&top).is_dominant() {
                return Err(MacError::Internal(format!("antisymmetric term at {k:?} below ρ")));
            }
            for (mu, mult) in character(&top)?.iter() {
                ab_add(col.entry(mu.clone()).or_default(), &c.iter().map(|(&k2, &v)| (k2, v * mult)).collect(), 0, 1);
            }
        }
        Ok(col.into_iter().filter(|(_, c)| !c.is_empty()).map(|(mu, c)| (mu, ab_to_scalar(&c))).collect())
    }
}
