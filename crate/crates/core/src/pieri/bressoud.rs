use std::collections::BTreeMap;

use macdonald_coeff::{qpoch, RatFun, VarSet};

use crate::error::{MacError, Result};
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// `A(u,v)` and `A(v,u)`.
    BressoudA,
    /// `f` and `g` built from `A` by diagonal rescaling.
    FgPair,
    /// Two-fold product of the `f, g` pair at `u/v = t`, with parameters `u1, u2`.
    TwoDim,
}

impl PairKind {
    pub fn tag(self) -> &'static str {
        match self {
            PairKind::BressoudA => "bressoud_A",
            PairKind::FgPair => "fg_pair",
            PairKind::TwoDim => "two_dim",
        }
    }

    pub fn from_tag(s: &str) -> Result<Self> {
        match s {
            "bressoud_A" => Ok(PairKind::BressoudA),
            "fg_pair" => Ok(PairKind::FgPair),
            "two_dim" => Ok(PairKind::TwoDim),
            _ => Err(MacError::Invalid(format!("unknown matrix pair '{s}'"))),
        }
    }

    pub fn dim(self) -> usize {
        if self == PairKind::TwoDim { 2 } else { 1 }
    }

    fn param_names(self) -> &'static [&'static str] {
        match self {
            PairKind::TwoDim => &["q", "t", "u1", "u2"],
            _ => &["q", "u", "v"],
        }
    }
}

/// Which matrix of the pair: `A(u,v)` / `f` on the left, `A(v,u)` / `g` on the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A pair of mutually inverse lower-triangular matrices with its parameters as rational
/// functions over a common variable set.
#[derive(Clone, Debug)]
pub struct MatrixPair {
    pub kind: PairKind,
    pub vars: VarSet,
    pub params: BTreeMap<String, RatFun>,
}

impl MatrixPair {
    pub fn new(kind: PairKind, vars: VarSet, params: BTreeMap<String, RatFun>) -> Result<Self> {
        for name in kind.param_names() {
            if !params.contains_key(*name) {
                return Err(MacError::Invalid(format!("{} needs parameter '{name}'", kind.tag())));
            }
        }
        Ok(MatrixPair { kind, vars, params })
    }

    /// All parameters independent indeterminates.
    pub fn generic(kind: PairKind) -> Self {
        let names = kind.param_names();
        let vars = VarSet::new(names).expect("small variable set");
        let params = names.iter().map(|&s| (s.to_string(), RatFun::var(&vars, s).expect("declared"))).collect();
        MatrixPair { kind, vars, params }
    }

    fn p(&self, name: &str) -> &RatFun {
        &self.params[name]
    }

    fn int(&self, c: i64) -> RatFun {
        RatFun::from_i64(&self.vars, c)
    }

    fn qpow(&self, k: i64) -> RatFun {
        self.p("q").pow(k).expect("q is nonzero")
    }

    fn poch(&self, base: &RatFun, k: i64) -> Result<RatFun> {
        Ok(qpoch(base, self.p("q"), k)?)
    }

    fn ratio(&self, num: &RatFun, den: &RatFun, k: i64) -> Result<RatFun> {
        Ok(self.poch(num, k)?.div(&self.poch(den, k)?)?)
    }

    fn one_minus(&self, x: &RatFun) -> RatFun {
        self.int(1).sub(x)
    }

    /// `A_ij(u,v)`.
    fn a_entry(&self, i: i64, j: i64, u: &RatFun, v: &RatFun) -> Result<RatFun> {
        let q = self.p("q");
        let uv = u.div(v)?;
        let mut e = uv.pow(j)?;
        e = e.mul(&self.ratio(&uv, q, i - j)?);
        e = e.mul(&self.ratio(u, &v.mul(q), i + j)?);
        e = e.mul(&self.one_minus(&v.mul(&self.qpow(2 * j))).div(&self.one_minus(v))?);
        Ok(e)
    }

    /// `f_ij` for a pair `(u, v)`.
    fn f_entry(&self, i: i64, j: i64, u: &RatFun, v: &RatFun) -> Result<RatFun> {
        let q = self.p("q");
        let d = i - j;
        let mut e = u.div(v)?.pow(d)?;
        e = e.mul(&self.ratio(&v.div(u)?, q, d)?);
        e = e.mul(&self.ratio(&v.mul(&self.qpow(2 * j)), &u.mul(&self.qpow(2 * j + 1)), d)?);
        e = e.mul(&self.one_minus(&v.mul(&self.qpow(2 * i))).div(&self.one_minus(&v.mul(&self.qpow(2 * j))))?);
        Ok(e)
    }

    /// `g_kl` for a pair `(u, v)`.
    fn g_entry(&self, k: i64, l: i64, u: &RatFun, v: &RatFun) -> Result<RatFun> {
        let q = self.p("q");
        let d = k - l;
        let mut e = self.ratio(&u.div(v)?, q, d)?;
        e = e.mul(&self.ratio(&v.mul(&self.qpow(k + l + 1)), &u.mul(&self.qpow(k + l)), d)?);
        Ok(e)
    }

    /// Entry at `(row, col)`; zero unless `row >= col` componentwise.
    pub fn entry(&self, side: Side, row: &[i64], col: &[i64]) -> Result<RatFun> {
        let dim = self.kind.dim();
        if row.len() != dim || col.len() != dim {
            return Err(MacError::Invalid(format!("{} takes {dim}-dimensional indices", self.kind.tag())));
        }
        if row.iter().zip(col).any(|(r, c)| r < c) {
            return Ok(RatFun::zero(&self.vars));
        }
        match self.kind {
            PairKind::BressoudA => {
                let (u, v) = (self.p("u"), self.p("v"));
                match side {
                    Side::Left => self.a_entry(row[0], col[0], u, v),
                    Side::Right => self.a_entry(row[0], col[0], v, u),
                }
            }
            PairKind::FgPair => {
                let (u, v) = (self.p("u"), self.p("v"));
                match side {
                    Side::Left => self.f_entry(row[0], col[0], u, v),
                    Side::Right => self.g_entry(row[0], col[0], u, v),
                }
            }
            PairKind::TwoDim => {
                let t = self.p("t");
                let mut e = self.int(1);
                for (x, name) in ["u1", "u2"].iter().enumerate() {
                    let v = self.p(name);
                    let u = t.mul(v);
                    let f = match side {
                        Side::Left => self.f_entry(row[x], col[x], &u, v)?,
                        Side::Right => self.g_entry(row[x], col[x], &u, v)?,
                    };
                    e = e.mul(&f);
                }
                Ok(e)
            }
        }
    }
}

/// One entry of a named pair.
pub fn bressoud_entry(pair: &MatrixPair, side: Side, row: &[i64], col: &[i64]) -> Result<RatFun> {
    pair.entry(side, row, col)
}

fn index_box(dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=bound).map(move |x| {
                    let mut p = p.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

/// `Σ_{i >= j >= k} L_ij R_jk = δ_ik` for all indices in `[0, bound]^dim`.
pub fn verify_pair_inversion(pair: &MatrixPair, bound: i64) -> Result<Verdict> {
    use rayon::prelude::*;
    let cells = index_box(pair.kind.dim(), bound);
    let mut jobs = Vec::new();
    for i in &cells {
        for k in &cells {
            if i.iter().zip(k).all(|(a, b)| a >= b) {
                jobs.push((i.clone(), k.clone()));
            }
        }
    }
    let results: Vec<Result<Verdict>> = jobs
        .par_iter()
        .map(|(i, k)| {
            let mut acc = RatFun::zero(&pair.vars);
            for j in &cells {
                let between = i.iter().zip(j).all(|(a, b)| a >= b) && j.iter().zip(k).all(|(a, b)| a >= b);
                if between {
                    let l = pair.entry(Side::Left, i, j)?;
                    let r = pair.entry(Side::Right, j, k)?;
                    acc = acc.add(&l.mul(&r));
                }
            }
            let want = if i == k { RatFun::one(&pair.vars) } else { RatFun::zero(&pair.vars) };
            Ok(Verdict::from_bool(acc == want, || {
                format!("{}: row {i:?} times column {k:?} gives {}", pair.kind.tag(), acc.to_string_pretty())
            }))
        })
        .collect();
    let mut vs = Vec::new();
    for r in results {
        vs.push(r?);
    }
    Ok(Verdict::all(vs))
}
