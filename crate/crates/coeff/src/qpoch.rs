use crate::error::CoeffError;
use crate::ratfun::RatFun;
use crate::scalar::ExactScalar;

/// `(base; step)_k = prod_{j<k} (1 - base * step^j)`.
pub fn qpoch(base: &RatFun, step: &RatFun, k: i64) -> Result<RatFun, CoeffError> {
    if k < 0 {
        return Err(CoeffError::Domain(format!("q-shifted factorial needs k >= 0, got {k}")));
    }
    let vars = base.vars();
    let one = RatFun::one(vars);
    let mut acc = one.clone();
    let mut cur = base.clone();
    for j in 0..k {
        acc = acc.mul(&one.sub(&cur));
        if j + 1 < k {
            cur = cur.mul(step);
        }
    }
    Ok(acc)
}

/// `(c a^i b^j; a^si b^sj)_k` over the scalar field.
pub fn qpoch_ab(c: i64, i: i64, j: i64, si: i64, sj: i64, k: i64) -> Result<ExactScalar, CoeffError> {
    if k < 0 {
        return Err(CoeffError::Domain(format!("q-shifted factorial needs k >= 0, got {k}")));
    }
    let mut acc = ExactScalar::one();
    for s in 0..k {
        acc = &acc * &ExactScalar::one_minus(c, i + s * si, j + s * sj);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mono::VarSet;

    #[test]
    fn small_cases() {
        let vs = VarSet::new(&["u", "a", "b"]).unwrap();
        let u = RatFun::var(&vs, "u").unwrap();
        let a = RatFun::var(&vs, "a").unwrap();
        let q = a.mul(&a);
        let one = RatFun::one(&vs);
        assert!(qpoch(&u, &q, 0).unwrap().is_one());
        assert_eq!(qpoch(&u, &q, 2).unwrap(), one.sub(&u).mul(&one.sub(&u.mul(&q))));
        assert!(qpoch(&u, &q, -1).is_err());
        assert_eq!(qpoch_ab(1, 0, 2, 2, 0, 1).unwrap(), ExactScalar::one_minus(1, 0, 2));
    }
}
