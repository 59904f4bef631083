use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::CoeffError;
use crate::factor::{factor_lite, Factorization};
use crate::gcd::gcd;
use crate::mono::{Mono, VarSet, MAX_VARS};
use crate::poly::Poly;
use crate::rational::Rational;

/// A denominator factor: primitive integer polynomial with positive leading
/// coefficient and no monomial content, raised to `mult`.
#[derive(Clone, Debug)]
pub struct DenFactor {
    pub poly: Arc<Poly>,
    pub mult: u32,
    pub irreducible: bool,
}

/// Canonical rational function in a fixed list of indeterminates.
///
/// The numerator carries every rational constant; the denominator is a monomial
/// times a product of normalized factors, coprime to the numerator. Binomial
/// factors are always split into their cyclotomic pieces, so denominators built
/// from q-shifted factorials stay fully factored.
#[derive(Clone)]
pub struct RatFun {
    vars: VarSet,
    num: Poly,
    den_mono: Mono,
    den: Vec<DenFactor>,
    den_cache: OnceLock<Poly>,
}

fn insert_factor(den: &mut Vec<DenFactor>, poly: Poly, mult: u32, irreducible: bool) {
    if mult == 0 {
        return;
    }
    match den.binary_search_by(|f| (*f.poly).cmp(&poly)) {
        Ok(i) => den[i].mult += mult,
        Err(i) => den.insert(i, DenFactor { poly: Arc::new(poly), mult, irreducible }),
    }
}

/// Adds `p^mult` to a denominator; returns the unit that must divide the numerator.
fn push_poly(den_mono: &mut Mono, den: &mut Vec<DenFactor>, f: Factorization, mult: u32) -> Rational {
    *den_mono = den_mono.mul(&f.mono.pow(mult));
    for pc in f.pieces {
        insert_factor(den, pc.poly, pc.mult * mult, pc.irreducible);
    }
    f.unit.pow(mult as i64).expect("nonzero unit")
}

/// Removes from `num` and the denominator everything they share.
fn cancel(num: &mut Poly, den_mono: &mut Mono, den: &mut Vec<DenFactor>) {
    if num.is_zero() {
        *den_mono = Mono::ONE;
        den.clear();
        return;
    }
    if !den_mono.is_one() {
        let g = num.mono_content().gcd(den_mono);
        if !g.is_one() {
            *num = num.div_mono(&g);
            *den_mono = g.div_of(den_mono);
        }
    }
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < den.len() {
            if den[i].irreducible {
                let f = den[i].poly.clone();
                while den[i].mult > 0 && f.may_divide(num) {
                    match num.div_exact(&f) {
                        Some(q) => {
                            *num = q;
                            den[i].mult -= 1;
                        }
                        None => break,
                    }
                }
                i += 1;
            } else {
                let g = gcd(num, &den[i].poly);
                if g.is_constant() {
                    i += 1;
                    continue;
                }
                *num = num.div_exact(&g).expect("gcd divides");
                let rest = den[i].poly.div_exact(&g).expect("gcd divides");
                den[i].mult -= 1;
                if !rest.is_constant() {
                    let f = factor_lite(&rest);
                    let unit = push_poly(den_mono, den, f, 1);
                    *num = num.scale(&unit);
                }
                changed = true;
                den.retain(|f| f.mult > 0);
                break;
            }
        }
        den.retain(|f| f.mult > 0);
        if !changed {
            break;
        }
    }
}

impl RatFun {
    fn raw(vars: VarSet, num: Poly, den_mono: Mono, den: Vec<DenFactor>) -> Self {
        RatFun { vars, num, den_mono, den, den_cache: OnceLock::new() }
    }

    pub fn zero(vars: &VarSet) -> Self {
        Self::raw(vars.clone(), Poly::zero(), Mono::ONE, Vec::new())
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        Self::raw(vars.clone(), Poly::constant(c), Mono::ONE, Vec::new())
    }

    pub fn from_i64(vars: &VarSet, c: i64) -> Self {
        Self::constant(vars, Rational::from(c))
    }

    pub fn from_poly(vars: &VarSet, p: Poly) -> Self {
        Self::raw(vars.clone(), p, Mono::ONE, Vec::new())
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self, CoeffError> {
        let i = vars.index(name).ok_or_else(|| CoeffError::UnknownVar(name.to_string()))?;
        Ok(Self::from_poly(vars, Poly::var(i)))
    }

    /// `c * x^e` for a Laurent exponent vector `e`.
    pub fn laurent_monomial(vars: &VarSet, c: Rational, e: &[i64]) -> Self {
        let mut pos = Mono::ONE;
        let mut neg = Mono::ONE;
        for (i, &x) in e.iter().enumerate() {
            if x > 0 {
                pos.set(i, x as u32);
            } else if x < 0 {
                neg.set(i, (-x) as u32);
            }
        }
        Self::raw(vars.clone(), Poly::monomial(pos, c), if e.is_empty() { Mono::ONE } else { neg }, Vec::new())
            .normalize_zero()
    }

    /// Laurent polynomial `sum c * x^e` given as exponent vectors with coefficients.
    pub fn from_laurent_terms(vars: &VarSet, terms: &[(Vec<i64>, Rational)]) -> Self {
        let nv = vars.len();
        let mut low = vec![0i64; nv];
        for (e, _) in terms {
            for (l, &x) in low.iter_mut().zip(e) {
                *l = (*l).min(x);
            }
        }
        let shifted = terms.iter().map(|(e, c)| {
            let ex: Vec<u32> = (0..nv).map(|i| (e.get(i).copied().unwrap_or(0) - low[i]) as u32).collect();
            (Mono::from_exps(&ex).expect("exponent fits"), c.clone())
        });
        let num = Poly::from_terms(shifted);
        let dm: Vec<u32> = low.iter().map(|&l| (-l) as u32).collect();
        Self::from_parts(vars, num, Mono::from_exps(&dm).expect("exponent fits"), Vec::new()).normalize_zero()
    }

    fn normalize_zero(mut self) -> Self {
        if self.num.is_zero() {
            self.den_mono = Mono::ONE;
            self.den.clear();
        }
        self
    }

    /// `num / den` for arbitrary polynomials.
    pub fn from_num_den(vars: &VarSet, num: Poly, den: &Poly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        let mut dm = Mono::ONE;
        let mut fs = Vec::new();
        let unit = push_poly(&mut dm, &mut fs, factor_lite(den), 1);
        let mut num = num.scale(&unit.recip()?);
        cancel(&mut num, &mut dm, &mut fs);
        Ok(Self::raw(vars.clone(), num, dm, fs))
    }

    /// Builds `num / (den_mono * prod f^m)` from already-normalized pieces, cancelling
    /// common factors.
    pub fn from_parts(vars: &VarSet, num: Poly, den_mono: Mono, den: Vec<DenFactor>) -> Self {
        let mut sorted: Vec<DenFactor> = Vec::with_capacity(den.len());
        for f in den {
            insert_factor(&mut sorted, (*f.poly).clone(), f.mult, f.irreducible);
        }
        let mut num = num;
        let mut dm = den_mono;
        cancel(&mut num, &mut dm, &mut sorted);
        Self::raw(vars.clone(), num, dm, sorted)
    }

    /// Like `from_parts` but trusts the caller that numerator and denominator are coprime
    /// and the factors are sorted, distinct, and normalized.
    pub(crate) fn from_parts_unchecked(vars: &VarSet, num: Poly, den_mono: Mono, den: Vec<DenFactor>) -> Self {
        Self::raw(vars.clone(), num, den_mono, den).normalize_zero()
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den_mono(&self) -> &Mono {
        &self.den_mono
    }

    pub fn den_factors(&self) -> &[DenFactor] {
        &self.den
    }

    /// Expanded denominator: primitive integer polynomial with positive leading coefficient.
    pub fn den(&self) -> &Poly {
        self.den_cache.get_or_init(|| {
            let mut acc = Poly::monomial(self.den_mono, Rational::one());
            for f in &self.den {
                acc = acc.mul(&f.poly.pow(f.mult));
            }
            acc
        })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.den_mono.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty() && self.den_mono.is_one()
    }

    /// Numerator is a single term and the denominator is a monomial.
    pub fn is_laurent_monomial(&self) -> bool {
        self.den.is_empty() && self.num.len() == 1
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_polynomial() { self.num.constant_value() } else { None }
    }

    fn check_vars(&self, o: &RatFun) {
        assert!(
            self.vars.same(&o.vars),
            "rational functions over different indeterminates: {:?} vs {:?}",
            self.vars,
            o.vars
        );
    }

    pub fn neg(&self) -> RatFun {
        Self::raw(self.vars.clone(), self.num.neg(), self.den_mono, self.den.clone())
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        Self::raw(self.vars.clone(), self.num.scale(c), self.den_mono, self.den.clone()).normalize_zero()
    }

    pub fn add(&self, o: &RatFun) -> RatFun {
        self.check_vars(o);
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.is_polynomial() && o.is_polynomial() {
            return Self::from_poly(&self.vars, self.num.add(&o.num));
        }
        Self::sum(&self.vars, [self, o])
    }

    pub fn sub(&self, o: &RatFun) -> RatFun {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFun) -> RatFun {
        self.check_vars(o);
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut an = self.num.clone();
        let mut bn = o.num.clone();
        let mut adm = self.den_mono;
        let mut bdm = o.den_mono;
        let mut aden = self.den.clone();
        let mut bden = o.den.clone();
        if !bden.is_empty() || !bdm.is_one() {
            cancel(&mut an, &mut bdm, &mut bden);
        }
        if !aden.is_empty() || !adm.is_one() {
            cancel(&mut bn, &mut adm, &mut aden);
        }
        let num = an.mul(&bn);
        let dm = adm.mul(&bdm);
        for f in bden {
            let p = Arc::try_unwrap(f.poly).unwrap_or_else(|a| (*a).clone());
            insert_factor(&mut aden, p, f.mult, f.irreducible);
        }
        let mut r = Self::raw(self.vars.clone(), num, dm, aden);
        if r.den.iter().any(|f| !f.irreducible) && !r.is_polynomial() {
            cancel(&mut r.num, &mut r.den_mono, &mut r.den);
        }
        r
    }

    pub fn inv(&self) -> Result<RatFun, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        let mut dm = Mono::ONE;
        let mut fs = Vec::new();
        let unit = push_poly(&mut dm, &mut fs, factor_lite(&self.num), 1);
        let num = self.den().scale(&unit.recip()?);
        let mut r = Self::raw(self.vars.clone(), num, dm, fs);
        if r.den.iter().any(|f| !f.irreducible) {
            cancel(&mut r.num, &mut r.den_mono, &mut r.den);
        }
        Ok(r)
    }

    pub fn div(&self, o: &RatFun) -> Result<RatFun, CoeffError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<RatFun, CoeffError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let k = k as u32;
        if k == 0 {
            return Ok(Self::one(&self.vars));
        }
        let den = self.den.iter().map(|f| DenFactor { poly: f.poly.clone(), mult: f.mult * k, irreducible: f.irreducible }).collect();
        Ok(Self::raw(self.vars.clone(), self.num.pow(k), self.den_mono.pow(k), den))
    }

    /// Sum of many rational functions with a single final cancellation.
    pub fn sum<'a>(vars: &VarSet, items: impl IntoIterator<Item = &'a RatFun>) -> RatFun {
        let items: Vec<&RatFun> = items.into_iter().filter(|x| !x.is_zero()).collect();
        for it in &items {
            assert!(it.vars.same(vars), "rational functions over different indeterminates");
        }
        if items.len() == 1 {
            return items[0].clone();
        }
        Self::combine(vars, items.iter().map(|r| (r.num.clone(), r.den_mono, r.den.as_slice())).collect())
    }

    /// `sum_i x_i * y_i` with a single final cancellation.
    pub fn sum_of_products(vars: &VarSet, pairs: &[(&RatFun, &RatFun)]) -> RatFun {
        let mut owned: Vec<(Poly, Mono, Vec<DenFactor>)> = Vec::with_capacity(pairs.len());
        for (x, y) in pairs {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            let mut den = x.den.clone();
            for f in &y.den {
                insert_factor(&mut den, (*f.poly).clone(), f.mult, f.irreducible);
            }
            owned.push((x.num.mul(&y.num), x.den_mono.mul(&y.den_mono), den));
        }
        Self::combine(vars, owned.iter().map(|(n, m, d)| (n.clone(), *m, d.as_slice())).collect())
    }

    fn combine(vars: &VarSet, items: Vec<(Poly, Mono, &[DenFactor])>) -> RatFun {
        if items.is_empty() {
            return Self::zero(vars);
        }
        if items.len() == 1 {
            let (mut n, mut m, d) = items.into_iter().next().unwrap();
            let mut d = d.to_vec();
            cancel(&mut n, &mut m, &mut d);
            return Self::raw(vars.clone(), n, m, d);
        }
        // Group terms sharing a denominator.
        let mut groups: Vec<(Mono, &[DenFactor], Poly)> = Vec::new();
        let mut index: HashMap<(Mono, Vec<(*const Poly, u32)>), usize> = HashMap::new();
        for (n, m, d) in items {
            let key = (m, d.iter().map(|f| (Arc::as_ptr(&f.poly), f.mult)).collect::<Vec<_>>());
            match index.get(&key) {
                Some(&i) => groups[i].2 = groups[i].2.add(&n),
                None => {
                    index.insert(key, groups.len());
                    groups.push((m, d, n));
                }
            }
        }
        let mut lmono = Mono::ONE;
        let mut lden: Vec<DenFactor> = Vec::new();
        for (m, d, _) in &groups {
            lmono = lmono.lcm(m);
            for f in d.iter() {
                match lden.binary_search_by(|g| (*g.poly).cmp(&f.poly)) {
                    Ok(i) => lden[i].mult = lden[i].mult.max(f.mult),
                    Err(i) => lden.insert(i, f.clone()),
                }
            }
        }
        let mut num = Poly::zero();
        for (m, d, n) in &groups {
            if n.is_zero() {
                continue;
            }
            let mut t = n.mul_mono(&m.div_of(&lmono));
            let mut j = 0;
            for f in &lden {
                while j < d.len() && *d[j].poly < *f.poly {
                    j += 1;
                }
                let have = if j < d.len() && *d[j].poly == *f.poly { d[j].mult } else { 0 };
                for _ in have..f.mult {
                    t = t.mul(&f.poly);
                }
            }
            num = num.add(&t);
        }
        cancel(&mut num, &mut lmono, &mut lden);
        Self::raw(vars.clone(), num, lmono, lden)
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, point: &[Rational]) -> Result<Rational, CoeffError> {
        let d = self.den().eval_rational(point);
        if d.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(&self.num.eval_rational(point) / &d)
    }

    /// Value modulo `p`, or `None` when the denominator vanishes there.
    pub fn eval_mod(&self, point: &[u64], p: u64) -> Option<u64> {
        let mut d = 1u64;
        for (i, &x) in point.iter().enumerate() {
            let e = self.den_mono.get(i);
            if e > 0 {
                d = crate::modp::mul(d, crate::modp::pow(x, e as u64, p), p);
            }
        }
        for f in &self.den {
            let v = f.poly.eval_mod(point, p)?;
            d = crate::modp::mul(d, crate::modp::pow(v, f.mult as u64, p), p);
        }
        if d == 0 {
            return None;
        }
        let n = self.num.eval_mod(point, p)?;
        Some(crate::modp::mul(n, crate::modp::inv(d, p), p))
    }

    /// Re-expresses `self` over a larger list of indeterminates containing all of its own.
    pub fn embed(&self, target: &VarSet) -> Result<RatFun, CoeffError> {
        if self.vars.same(target) {
            return Ok(self.clone());
        }
        let map = self.var_map(target)?;
        let remap_mono = |m: &Mono| -> Mono {
            let mut r = Mono::ONE;
            for (i, &j) in map.iter().enumerate() {
                r.set(j, m.get(i));
            }
            r
        };
        let den = self
            .den
            .iter()
            .map(|f| DenFactor { poly: Arc::new(f.poly.remap(&map)), mult: f.mult, irreducible: f.irreducible })
            .collect();
        Ok(Self::from_parts(target, self.num.remap(&map), remap_mono(&self.den_mono), den))
    }

    fn var_map(&self, target: &VarSet) -> Result<Vec<usize>, CoeffError> {
        self.vars
            .names()
            .iter()
            .map(|n| target.index(n).ok_or_else(|| CoeffError::UnknownVar(n.clone())))
            .collect()
    }

    /// Simultaneous substitution of indeterminates by rational functions over `target`.
    /// Indeterminates without a binding are mapped to the same-named indeterminate of `target`.
    pub fn substitute(&self, target: &VarSet, bindings: &[(&str, RatFun)]) -> Result<RatFun, CoeffError> {
        for (name, v) in bindings {
            if self.vars.index(name).is_none() {
                return Err(CoeffError::UnknownVar(name.to_string()));
            }
            if !v.vars.same(target) {
                return Err(CoeffError::VarMismatch(v.vars.names().to_vec(), target.names().to_vec()));
            }
        }
        let mut images = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            match bindings.iter().find(|(n, _)| n == name) {
                Some((_, v)) => images.push(v.clone()),
                None => images.push(RatFun::var(target, name)?),
            }
        }
        let describe = || {
            bindings.iter().map(|(n, v)| format!("{n} -> {v}")).collect::<Vec<_>>().join(", ")
        };
        let mut result = eval_poly_at(&self.num, &images, target);
        let mut den_val = eval_poly_at(&Poly::monomial(self.den_mono, Rational::one()), &images, target);
        if den_val.is_zero() {
            return Err(CoeffError::Pole {
                binding: describe(),
                factor: Poly::monomial(self.den_mono, Rational::one()).to_string_with(self.vars.names()),
            });
        }
        for f in &self.den {
            let v = eval_poly_at(&f.poly, &images, target);
            if v.is_zero() {
                return Err(CoeffError::Pole { binding: describe(), factor: f.poly.to_string_with(self.vars.names()) });
            }
            den_val = den_val.mul(&v.pow(f.mult as i64)?);
        }
        result = result.div(&den_val)?;
        Ok(result)
    }

    pub fn to_string_pretty(&self) -> String {
        let n = self.num.to_string_with(self.vars.names());
        if self.is_polynomial() {
            return n;
        }
        let mut parts = Vec::new();
        let m = Poly::monomial(self.den_mono, Rational::one());
        if !self.den_mono.is_one() {
            parts.push(m.to_string_with(self.vars.names()));
        }
        for f in &self.den {
            let s = f.poly.to_string_with(self.vars.names());
            if f.mult == 1 {
                parts.push(format!("({s})"));
            } else {
                parts.push(format!("({s})^{}", f.mult));
            }
        }
        format!("({n})/({})", parts.join("*"))
    }
}

/// Evaluates a polynomial at rational-function arguments.
fn eval_poly_at(p: &Poly, images: &[RatFun], target: &VarSet) -> RatFun {
    if p.is_zero() {
        return RatFun::zero(target);
    }
    if images.iter().all(|x| x.is_laurent_monomial()) {
        // Every term maps to a single Laurent monomial.
        let k = target.len();
        let data: Vec<(Rational, Vec<i64>)> = images
            .iter()
            .map(|x| {
                let (m, c) = &x.num.terms()[0];
                let e = (0..k).map(|i| m.get(i) as i64 - x.den_mono.get(i) as i64).collect();
                (c.clone(), e)
            })
            .collect();
        let mut terms: Vec<(Vec<i64>, Rational)> = Vec::with_capacity(p.len());
        let mut lo = vec![0i64; k];
        for (m, c) in p.terms() {
            let mut coeff = c.clone();
            let mut e = vec![0i64; k];
            for (i, (ci, ei)) in data.iter().enumerate() {
                let d = m.get(i);
                if d == 0 {
                    continue;
                }
                coeff *= &ci.pow(d as i64).expect("nonzero image");
                for j in 0..k {
                    e[j] += ei[j] * d as i64;
                }
            }
            for j in 0..k {
                lo[j] = lo[j].min(e[j]);
            }
            terms.push((e, coeff));
        }
        let num = Poly::from_terms(terms.into_iter().map(|(e, c)| {
            let ex: Vec<u32> = e.iter().zip(&lo).map(|(x, l)| (x - l) as u32).collect();
            (Mono::from_exps(&ex).expect("exponent range"), c)
        }));
        let neg: Vec<u32> = lo.iter().map(|l| (-l) as u32).collect();
        return RatFun::from_parts(target, num, Mono::from_exps(&neg).expect("exponent range"), Vec::new());
    }
    let mut powers: Vec<Vec<RatFun>> = images.iter().map(|_| vec![RatFun::one(target)]).collect();
    let mut terms = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let mut t = RatFun::constant(target, c.clone());
        for (i, img) in images.iter().enumerate() {
            let d = m.get(i) as usize;
            if d == 0 {
                continue;
            }
            while powers[i].len() <= d {
                let nxt = powers[i].last().unwrap().mul(img);
                powers[i].push(nxt);
            }
            t = t.mul(&powers[i][d]);
        }
        terms.push(t);
    }
    RatFun::sum(target, terms.iter())
}

impl PartialEq for RatFun {
    fn eq(&self, o: &RatFun) -> bool {
        if !self.vars.same(&o.vars) {
            return false;
        }
        if self.num != o.num || self.den_mono != o.den_mono {
            return false;
        }
        let all_irr = self.den.iter().chain(o.den.iter()).all(|f| f.irreducible);
        if all_irr {
            self.den.len() == o.den.len()
                && self.den.iter().zip(&o.den).all(|(a, b)| a.mult == b.mult && *a.poly == *b.poly)
        } else {
            self.den() == o.den()
        }
    }
}

impl Eq for RatFun {}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_pretty())
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_pretty())
    }
}

#[allow(dead_code)]
fn _assert_send_sync() {
    fn ok<T: Send + Sync>() {}
    ok::<RatFun>();
    let _ = MAX_VARS;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs() -> VarSet {
        VarSet::new(&["x", "y", "t"]).unwrap()
    }

    fn v(name: &str) -> RatFun {
        RatFun::var(&vs(), name).unwrap()
    }

    fn k(c: i64) -> RatFun {
        RatFun::from_i64(&vs(), c)
    }

    #[test]
    fn telescoping_sum() {
        // 1/(1-x) - 1/(1+x) = 2x/(1-x^2)
        let x = v("x");
        let a = k(1).sub(&x).inv().unwrap();
        let b = k(1).add(&x).inv().unwrap();
        let lhs = a.sub(&b);
        let rhs = x.scale(&Rational::from(2)).div(&k(1).sub(&x.mul(&x))).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.den().to_string_with(vs().names()), "x^2 - 1");
    }

    #[test]
    fn cancels_to_polynomial() {
        let x = v("x");
        let y = v("y");
        let f = x.mul(&x).sub(&y.mul(&y)).div(&x.sub(&y)).unwrap();
        assert_eq!(f, x.add(&y));
        assert!(f.is_polynomial());
    }

    #[test]
    fn composite_denominators_cancel() {
        let x = v("x");
        let y = v("y");
        let t = v("t");
        let p = x.mul(&y).add(&t).add(&k(1));
        let q = x.add(&y.mul(&y)).add(&t.mul(&x));
        let f = p.mul(&q).div(&p.mul(&x.add(&k(3)))).unwrap();
        let g = q.div(&x.add(&k(3))).unwrap();
        assert_eq!(f, g);
        let h = k(1).div(&p).unwrap().add(&k(1).div(&q).unwrap());
        let expect = p.add(&q).div(&p.mul(&q)).unwrap();
        assert_eq!(h, expect);
        assert!(h.sub(&expect).is_zero());
    }

    #[test]
    fn substitution_renames_and_detects_poles() {
        let target = VarSet::new(&["x", "z", "q"]).unwrap();
        let src = VarSet::new(&["x", "u", "t"]).unwrap();
        let x = RatFun::var(&src, "x").unwrap();
        let u = RatFun::var(&src, "u").unwrap();
        let t = RatFun::var(&src, "t").unwrap();
        let one = RatFun::one(&src);
        let f = one.sub(&t.mul(&u).div(&x).unwrap()).mul(&one.sub(&t.mul(&u).mul(&x)));
        let z = RatFun::var(&target, "z").unwrap();
        let q = RatFun::var(&target, "q").unwrap();
        let g = f.substitute(&target, &[("u", z.clone()), ("t", q.clone())]).unwrap();
        let tx = RatFun::var(&target, "x").unwrap();
        let tone = RatFun::one(&target);
        let expect = tone.sub(&q.mul(&z).div(&tx).unwrap()).mul(&tone.sub(&q.mul(&z).mul(&tx)));
        assert_eq!(g, expect);

        let r = one.sub(&t.mul(&u).mul(&x)).div(&one.sub(&u.mul(&x))).unwrap();
        let tx_inv = tone.div(&tx).unwrap();
        let err = r.substitute(&target, &[("u", tx_inv), ("t", q.clone())]).unwrap_err();
        match err {
            CoeffError::Pole { binding, .. } => assert!(binding.contains("u ->")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn evaluation() {
        let x = v("x");
        let f = k(1).div(&k(1).sub(&x)).unwrap();
        let p = [Rational::from(3), Rational::from(5), Rational::from(7)];
        assert_eq!(f.eval_rational(&p).unwrap(), Rational::new(-1, 2).unwrap());
        let p1 = [Rational::from(1), Rational::from(5), Rational::from(7)];
        assert!(f.eval_rational(&p1).is_err());
    }
}
