use macdonald_coeff::{RatFun, VarSet};
use rayon::prelude::*;

use super::terms::{agree_at_random_points, neg_poch, sum, Mon, Prod};
use super::{Guard, Mode};
use crate::error::{MacError, Result};
use crate::verdict::Verdict;

/// `Σ_σ Φ(x^σ) Π_k Π_i (1 - t u_k x_i^{-σ_i}) / (1 - u_k x_i^{-σ_i})` over `σ ∈ {±1}^n`,
/// where `Φ(x) = Π_i (1 - t x_i^2)/(1 - x_i^2) Π_{i<j} (1 - t x_i x_j)/(1 - x_i x_j)`.
/// Every argument is a Laurent monomial, so specializations are plain substitutions.
pub fn sigma_sum_terms(xs: &[Mon], t: &Mon, us: &[Mon]) -> Result<Vec<Prod>> {
    let n = xs.len();
    let nv = t.e.len();
    (0..1u32 << n)
        .into_par_iter()
        .map(|mask| {
            let xs: Vec<Mon> = (0..n).map(|i| if mask >> i & 1 == 1 { xs[i].inv() } else { xs[i].clone() }).collect();
            let mut p = Prod::one(nv);
            for i in 0..n {
                let sq = xs[i].pow(2);
                p.ratio(&t.mul(&sq), &sq)?;
                for j in i + 1..n {
                    let xx = xs[i].mul(&xs[j]);
                    p.ratio(&t.mul(&xx), &xx)?;
                }
                let inv = xs[i].inv();
                for u in us {
                    let ux = u.mul(&inv);
                    p.ratio(&t.mul(&ux), &ux)?;
                }
            }
            Ok(p)
        })
        .collect()
}

/// Variables `x1..xn, u1..ur, t`.
#[derive(Clone, Debug)]
pub struct SubsetSpace {
    pub n: usize,
    pub r: usize,
    pub vars: VarSet,
}

impl SubsetSpace {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        names.extend((1..=r).map(|k| format!("u{k}")));
        names.push("t".into());
        Ok(SubsetSpace { n, r, vars: VarSet::new(&names)? })
    }

    pub fn nvars(&self) -> usize {
        self.n + self.r + 1
    }

    pub fn x(&self, i: usize) -> Mon {
        Mon::var(self.nvars(), i)
    }

    pub fn u(&self, k: usize) -> Mon {
        Mon::var(self.nvars(), self.n + k)
    }

    pub fn t(&self) -> Mon {
        Mon::var(self.nvars(), self.n + self.r)
    }

    /// `R(u) = Π_i (1 - t u x_i)/(1 - u x_i) · (1 - t u/x_i)/(1 - u/x_i)`.
    pub fn r_factor(&self, p: &mut Prod, u: &Mon) -> Result<()> {
        let t = self.t();
        for i in 0..self.n {
            let x = self.x(i);
            for ux in [u.mul(&x), u.mul(&x.inv())] {
                p.ratio(&t.mul(&ux), &ux)?;
            }
        }
        Ok(())
    }

    /// `c_I = t^{n(r-|I|)} Π_{i<j} (1 - v_i v_j)/(1 - t v_i v_j)`, `v_i = u_i` on `I`, `1/(t u_i)` off it.
    pub fn subset_product(&self, subset: &[usize]) -> Result<Prod> {
        let t = self.t();
        let v: Vec<Mon> = (0..self.r)
            .map(|i| if subset.contains(&i) { self.u(i) } else { t.mul(&self.u(i)).inv() })
            .collect();
        let mut p = Prod::one(self.nvars());
        p.mon(&t.pow((self.n * (self.r - subset.len())) as i64));
        for i in 0..self.r {
            for j in i + 1..self.r {
                let vv = v[i].mul(&v[j]);
                p.ratio(&vv, &t.mul(&vv))?;
            }
        }
        Ok(p)
    }

    pub fn lhs_terms(&self) -> Result<Vec<Prod>> {
        let xs: Vec<Mon> = (0..self.n).map(|i| self.x(i)).collect();
        let us: Vec<Mon> = (0..self.r).map(|k| self.u(k)).collect();
        sigma_sum_terms(&xs, &self.t(), &us)
    }

    /// One summand per subset `I`, indexed by bitmask.
    pub fn rhs_terms(&self) -> Result<Vec<Prod>> {
        (0..1u32 << self.r)
            .into_par_iter()
            .map(|mask| {
                let subset: Vec<usize> = (0..self.r).filter(|i| mask >> i & 1 == 1).collect();
                let mut p = self.subset_product(&subset)?;
                neg_poch(&mut p, &self.t(), self.n as i64 - self.r as i64)?;
                for &i in &subset {
                    self.r_factor(&mut p, &self.u(i))?;
                }
                Ok(p)
            })
            .collect()
    }
}

/// One coefficient of the subset expansion.
#[derive(Clone, Debug)]
pub struct SubsetCoefficient {
    pub subset: Vec<usize>,
    pub value: RatFun,
}

/// `c_I` for `I ⊆ {1..r}` given 1-based.
pub fn subset_coefficient(n: usize, r: usize, subset: &[usize]) -> Result<SubsetCoefficient> {
    let sp = SubsetSpace::new(n, r)?;
    if subset.iter().any(|&i| i == 0 || i > r) {
        return Err(MacError::Invalid(format!("subset {subset:?} is not inside 1..{r}")));
    }
    let zero_based: Vec<usize> = subset.iter().map(|i| i - 1).collect();
    let value = sp.subset_product(&zero_based)?.0.to_ratfun(&sp.vars);
    Ok(SubsetCoefficient { subset: subset.to_vec(), value })
}

fn guarded(n: usize, r: usize, guard: &Guard) -> Result<SubsetSpace> {
    if n + r > guard.max_size {
        return Err(MacError::ResourceGuard(format!(
            "n + r = {} (exact-mode limit {})",
            n + r,
            guard.max_size
        )));
    }
    SubsetSpace::new(n, r)
}

/// The symmetrized left side as one canonical rational function.
pub fn thm6_lhs(n: usize, r: usize, guard: &Guard) -> Result<RatFun> {
    let sp = guarded(n, r, guard)?;
    Ok(sum(&sp.vars, &sp.lhs_terms()?))
}

/// The subset expansion as one canonical rational function.
pub fn thm6_rhs(n: usize, r: usize, guard: &Guard) -> Result<RatFun> {
    let sp = guarded(n, r, guard)?;
    Ok(sum(&sp.vars, &sp.rhs_terms()?))
}

pub(crate) fn compare(vars: &VarSet, nvars: usize, lhs: &[Prod], rhs: &[Prod], mode: Mode, what: &str) -> Verdict {
    match mode {
        Mode::Exact => {
            let (a, b) = rayon::join(|| sum(vars, lhs), || sum(vars, rhs));
            Verdict::from_bool(a == b, || format!("{what}: sides differ, difference {}", a.sub(&b).to_string_pretty()))
        }
        Mode::Probabilistic { seed } => match agree_at_random_points(nvars, lhs, rhs, seed) {
            Ok(_) => Verdict::pass(),
            Err(e) => Verdict::fail(format!("{what}: {e}")),
        },
    }
}

pub fn verify_thm6(n: usize, r: usize, mode: Mode, guard: &Guard) -> Result<Verdict> {
    let sp = match mode {
        Mode::Exact => guarded(n, r, guard)?,
        Mode::Probabilistic { .. } => SubsetSpace::new(n, r)?,
    };
    let (l, rh) = (sp.lhs_terms()?, sp.rhs_terms()?);
    Ok(compare(&sp.vars, sp.nvars(), &l, &rh, mode, &format!("n={n}, r={r}")))
}

/// The two-parameter case written out with its four terms.
pub fn two_parameter_rhs_terms(sp: &SubsetSpace) -> Result<Vec<Prod>> {
    if sp.r != 2 {
        return Err(MacError::Invalid("the two-parameter form needs r = 2".into()));
    }
    let n = sp.n as i64;
    let (t, u, v) = (sp.t(), sp.u(0), sp.u(1));
    let uv = u.mul(&v);
    let mut out = Vec::new();

    let mut a = Prod::one(sp.nvars());
    a.mon(&t.pow(2 * n - 1)).ratio(&t.pow(2).mul(&uv), &t.mul(&uv))?;
    out.push(a);

    for (x, y) in [(&u, &v), (&v, &u)] {
        let mut b = Prod::one(sp.nvars());
        b.mon(&t.pow(n - 1)).diff(x, &t.mul(y), 1)?.diff(x, y, -1)?;
        sp.r_factor(&mut b, x)?;
        out.push(b);
    }

    let mut d = Prod::one(sp.nvars());
    d.ratio(&uv, &t.mul(&uv))?;
    sp.r_factor(&mut d, &u)?;
    sp.r_factor(&mut d, &v)?;
    out.push(d);

    for p in &mut out {
        neg_poch(p, &t, n - 2)?;
    }
    Ok(out)
}

pub fn verify_cor7(n: usize, mode: Mode, guard: &Guard) -> Result<Verdict> {
    let sp = match mode {
        Mode::Exact => guarded(n, 2, guard)?,
        Mode::Probabilistic { .. } => SubsetSpace::new(n, 2)?,
    };
    let (l, r) = (sp.lhs_terms()?, two_parameter_rhs_terms(&sp)?);
    Ok(compare(&sp.vars, sp.nvars(), &l, &r, mode, &format!("two-parameter form, n={n}")))
}

/// Where the right side has apparent poles in `u_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpuriousPole {
    /// `u_r = u_i`.
    Equal(usize),
    /// `u_r = 1/(t u_i)`.
    Reciprocal(usize),
}

/// Sum over subsets of the residue of each summand of the right side at a spurious pole.
/// Each summand is multiplied by the vanishing binomial and then evaluated on the pole.
pub fn rhs_residue(n: usize, r: usize, pole: SpuriousPole) -> Result<RatFun> {
    let sp = SubsetSpace::new(n, r)?;
    if r < 2 {
        return Err(MacError::Invalid("spurious poles need r >= 2".into()));
    }
    let last = sp.u(r - 1);
    let (i, binomial, image) = match pole {
        SpuriousPole::Equal(i) => (i, sp.u(i).mul(&last.inv()), sp.u(i)),
        SpuriousPole::Reciprocal(i) => (i, sp.t().mul(&sp.u(i)).mul(&last), sp.t().mul(&sp.u(i)).inv()),
    };
    if i + 1 >= r {
        return Err(MacError::Invalid(format!("pole index {i} must be below {}", r - 1)));
    }
    let name = format!("u{r}");
    let img = image.to_ratfun(&sp.vars);
    let mut acc = RatFun::zero(&sp.vars);
    for mut p in sp.rhs_terms()? {
        p.bin(&binomial, 1)?;
        let f = p.0.to_ratfun(&sp.vars);
        acc = acc.add(&f.substitute(&sp.vars, &[(name.as_str(), img.clone())])?);
    }
    Ok(acc)
}

/// `(c_I + c_{I∪{r}})|_{u_r=0} = (t^{n-r+1} + 1) c_I` with the right side taken at `r - 1`.
pub fn check_subset_recursion(n: usize, r: usize) -> Result<Verdict> {
    if r == 0 {
        return Err(MacError::Invalid("need r >= 1".into()));
    }
    let big = SubsetSpace::new(n, r)?;
    let small = SubsetSpace::new(n, r - 1)?;
    let name = format!("u{r}");
    let zero = RatFun::zero(&big.vars);
    let t = RatFun::var(&big.vars, "t")?;
    let factor = t.pow(n as i64 - r as i64 + 1)?.add(&RatFun::one(&big.vars));
    let mut checks = Vec::new();
    for mask in 0..1u32 << (r - 1) {
        let subset: Vec<usize> = (0..r - 1).filter(|i| mask >> i & 1 == 1).collect();
        let mut with_r = subset.clone();
        with_r.push(r - 1);
        let a = big.subset_product(&subset)?.0.to_ratfun(&big.vars);
        let b = big.subset_product(&with_r)?.0.to_ratfun(&big.vars);
        let at_zero = a.add(&b).substitute(&big.vars, &[(name.as_str(), zero.clone())])?;
        let want = small.subset_product(&subset)?.0.to_ratfun(&small.vars).embed(&big.vars)?.mul(&factor);
        checks.push(Verdict::from_bool(at_zero == want, || format!("n={n}, r={r}, subset {subset:?}")));
    }
    Ok(Verdict::all(checks))
}

/// Value of the right side at `u_r = 0`.
pub fn rhs_at_zero(n: usize, r: usize, guard: &Guard) -> Result<(RatFun, RatFun)> {
    let big = thm6_rhs(n, r, guard)?;
    let name = format!("u{r}");
    let at = big.substitute(big.vars(), &[(name.as_str(), RatFun::zero(big.vars()))])?;
    let small = thm6_rhs(n, r - 1, guard)?.embed(big.vars())?;
    Ok((at, small))
}

/// The base identity `Σ_I c_I = Π_{k<r} (1 + t^{-k})` with no `x` variables.
pub fn subset_sum_without_x(r: usize) -> Result<(RatFun, RatFun)> {
    let sp = SubsetSpace::new(0, r)?;
    let mut terms = Vec::new();
    for mask in 0..1u32 << r {
        let subset: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
        terms.push(sp.subset_product(&subset)?);
    }
    let lhs = sum(&sp.vars, &terms);
    let mut p = Prod::one(sp.nvars());
    for k in 0..r as i64 {
        p.bin(&sp.t().pow(-k).neg(), 1)?;
    }
    Ok((lhs, p.0.to_ratfun(&sp.vars)))
}
