//! JSON forms: `{"vars": [...], "num": [{"exp": [...], "coeff": "p/q"}], "den": [...]}`
//! with terms in decreasing graded-lex order.

use serde_json::{json, Value};

use crate::error::CoeffError;
use crate::mono::{Mono, VarSet};
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::rational::Rational;
use crate::scalar::{ab_vars, ExactScalar};

pub fn poly_terms_to_json(p: &Poly, nvars: usize) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(m, c)| json!({"exp": m.exps(nvars), "coeff": c.to_string()}))
            .collect(),
    )
}

pub fn poly_terms_from_json(v: &Value, nvars: usize) -> Result<Poly, CoeffError> {
    let arr = v.as_array().ok_or_else(|| CoeffError::Parse("term list must be an array".into()))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let exp = t
            .get("exp")
            .and_then(Value::as_array)
            .ok_or_else(|| CoeffError::Parse("term without \"exp\" array".into()))?;
        if exp.len() != nvars {
            return Err(CoeffError::Parse(format!("exponent vector of length {} for {nvars} indeterminates", exp.len())));
        }
        let e: Vec<u32> = exp
            .iter()
            .map(|x| x.as_u64().and_then(|x| u32::try_from(x).ok()))
            .collect::<Option<_>>()
            .ok_or_else(|| CoeffError::Parse("exponents must be nonnegative integers".into()))?;
        let c: Rational = t
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or_else(|| CoeffError::Parse("term without \"coeff\" string".into()))?
            .parse()?;
        terms.push((Mono::from_exps(&e)?, c));
    }
    Ok(Poly::from_terms(terms))
}

pub fn ratfun_to_json(r: &RatFun) -> Value {
    let n = r.vars().len();
    json!({
        "vars": r.vars().names(),
        "num": poly_terms_to_json(r.num(), n),
        "den": poly_terms_to_json(r.den(), n),
    })
}

pub fn ratfun_from_json(v: &Value) -> Result<RatFun, CoeffError> {
    let names: Vec<String> = v
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| CoeffError::Parse("missing \"vars\"".into()))?
        .iter()
        .map(|x| x.as_str().map(str::to_string))
        .collect::<Option<_>>()
        .ok_or_else(|| CoeffError::Parse("\"vars\" must hold strings".into()))?;
    let vars = VarSet::new(&names)?;
    ratfun_from_json_in(v, &vars)
}

fn ratfun_from_json_in(v: &Value, vars: &VarSet) -> Result<RatFun, CoeffError> {
    let n = vars.len();
    let num = poly_terms_from_json(v.get("num").ok_or_else(|| CoeffError::Parse("missing \"num\"".into()))?, n)?;
    let den = poly_terms_from_json(v.get("den").ok_or_else(|| CoeffError::Parse("missing \"den\"".into()))?, n)?;
    RatFun::from_num_den(vars, num, &den)
}

pub fn scalar_to_json(s: &ExactScalar) -> Value {
    ratfun_to_json(s.as_ratfun())
}

pub fn scalar_from_json(v: &Value) -> Result<ExactScalar, CoeffError> {
    let r = ratfun_from_json(v)?;
    if r.vars().names() != ab_vars().names() {
        return Err(CoeffError::VarMismatch(r.vars().names().to_vec(), ab_vars().names().to_vec()));
    }
    ExactScalar::from_ratfun(ratfun_from_json_in(v, ab_vars())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let vs = VarSet::new(&["x", "a"]).unwrap();
        let x = RatFun::var(&vs, "x").unwrap();
        let a = RatFun::var(&vs, "a").unwrap();
        let one = RatFun::one(&vs);
        let f = one.sub(&a.mul(&a).mul(&x)).div(&one.sub(&x).scale(&Rational::new(3, 2).unwrap())).unwrap();
        let j = ratfun_to_json(&f);
        let back = ratfun_from_json(&j).unwrap();
        assert_eq!(back, f);
        assert_eq!(serde_json::to_string(&ratfun_to_json(&back)).unwrap(), serde_json::to_string(&j).unwrap());
        let den = j["den"].as_array().unwrap();
        assert_eq!(den[0]["coeff"], "1");
    }

    #[test]
    fn scalar_roundtrip() {
        let s = &ExactScalar::one_minus(1, 3, 2) / &ExactScalar::one_minus(-1, 0, 4);
        assert_eq!(scalar_from_json(&scalar_to_json(&s)).unwrap(), s);
        assert!(ratfun_from_json(&json!({"vars": ["x"], "num": [], "den": []})).is_err());
    }
}
