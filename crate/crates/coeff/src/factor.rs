//! Cheap partial factorization: unit, monomial content, and the complete
//! splitting of binomials `c1*M1 + c2*M2` with `c1/c2 = ±1` into cyclotomic pieces.

use crate::mono::{Mono, MAX_VARS};
use crate::poly::Poly;
use crate::rational::Rational;

/// One factor: primitive integer coefficients, positive leading coefficient,
/// no monomial content, not constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub poly: Poly,
    pub mult: u32,
    pub irreducible: bool,
}

#[derive(Clone, Debug)]
pub struct Factorization {
    pub unit: Rational,
    pub mono: Mono,
    pub pieces: Vec<Piece>,
}

fn mobius(mut n: u32) -> i32 {
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            r = -r;
        }
        p += 1;
    }
    if n > 1 { -r } else { r }
}

/// Coefficients of the d-th cyclotomic polynomial, lowest degree first.
fn cyclotomic(d: u32) -> Vec<i64> {
    // Φ_d = ∏_{k | d} (x^k - 1)^μ(d/k)
    let mut num = vec![1i64];
    let mut dens = Vec::new();
    for k in divisors(d) {
        let mut f = vec![0i64; k as usize + 1];
        f[0] = -1;
        f[k as usize] = 1;
        match mobius(d / k) {
            1 => num = mul_int(&num, &f),
            -1 => dens.push(f),
            _ => {}
        }
    }
    for f in dens {
        num = div_monic_int(&num, &f);
    }
    num
}

fn mul_int(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    r
}

fn div_monic_int(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for j in 0..=db {
            r[i + j] -= c * b[j];
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd_u32(b, a % b) }
}

/// `Y^phi(d) * Φ_d(X/Y)` with `X = x^xp`, `Y = x^yp`.
fn homogenized_cyclotomic(d: u32, xp: &Mono, yp: &Mono) -> Poly {
    let c = cyclotomic(d);
    let deg = c.len() as u32 - 1;
    let terms = c.iter().enumerate().filter(|(_, &v)| v != 0).map(|(j, &v)| {
        let j = j as u32;
        (xp.pow(j).mul(&yp.pow(deg - j)), Rational::from(v))
    });
    Poly::from_terms(terms).primitive().1
}

/// Factor `p` as far as binomial splitting allows.
pub fn factor_lite(p: &Poly) -> Factorization {
    assert!(!p.is_zero(), "cannot factor zero");
    let (unit, prim) = p.primitive();
    let mono = prim.mono_content();
    let rest = if mono.is_one() { prim } else { prim.div_mono(&mono) };
    let mut pieces = Vec::new();
    if !rest.is_constant() {
        pieces = split_primitive(&rest);
    }
    // Normalizing each piece can move signs into the unit.
    let mut prod_lc = Rational::one();
    for pc in &pieces {
        prod_lc = &prod_lc * &pc.poly.lead_coeff().pow(pc.mult as i64).unwrap();
    }
    let unit = &(&unit * &rest.lead_coeff()) / &prod_lc;
    Factorization { unit, mono, pieces }
}

fn split_primitive(p: &Poly) -> Vec<Piece> {
    if p.total_degree() == 1 {
        return vec![Piece { poly: p.clone(), mult: 1, irreducible: true }];
    }
    if p.len() != 2 {
        return vec![Piece { poly: p.clone(), mult: 1, irreducible: false }];
    }
    let (m1, c1) = &p.terms()[0];
    let (m2, c2) = &p.terms()[1];
    let mut g = 0u32;
    for i in 0..MAX_VARS {
        g = gcd_u32(g, m1.get(i).max(m2.get(i)));
    }
    let ratio = c1 / c2;
    let plus = if ratio == Rational::one() {
        true
    } else if ratio == Rational::from(-1) {
        false
    } else {
        return vec![Piece { poly: p.clone(), mult: 1, irreducible: g == 1 }];
    };
    let mut xp = Mono::ONE;
    let mut yp = Mono::ONE;
    for i in 0..MAX_VARS {
        xp.set(i, m1.get(i) / g);
        yp.set(i, m2.get(i) / g);
    }
    let ds: Vec<u32> = if plus {
        divisors(2 * g).into_iter().filter(|d| g % d != 0).collect()
    } else {
        divisors(g)
    };
    ds.into_iter()
        .map(|d| Piece { poly: homogenized_cyclotomic(d, &xp, &yp), mult: 1, irreducible: true })
        .collect()
}

/// Normalize a nonconstant polynomial into factor form (primitive, positive leading
/// coefficient) without further splitting.
pub fn normalize_piece(p: &Poly) -> Poly {
    p.primitive().1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(i)
    }
    fn c(v: i64) -> Poly {
        Poly::from_i64(v)
    }

    fn expand(f: &Factorization) -> Poly {
        let mut acc = Poly::monomial(f.mono, f.unit.clone());
        for pc in &f.pieces {
            acc = acc.mul(&pc.poly.pow(pc.mult));
        }
        acc
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn splits_power_binomials() {
        // 1 - x^6 y^2 = (1 - x^3 y)(1 + x^3 y)
        let p = c(1).sub(&x(0).pow(6).mul(&x(1).pow(2)));
        let f = factor_lite(&p);
        assert_eq!(f.pieces.len(), 2);
        assert_eq!(expand(&f), p);
        // 2*x^2*(y^4 - 1)
        let p = x(0).pow(2).mul(&x(1).pow(4).sub(&c(1))).scale(&Rational::from(2));
        let f = factor_lite(&p);
        assert_eq!(f.pieces.len(), 3);
        assert!(f.pieces.iter().all(|pc| pc.irreducible));
        assert_eq!(expand(&f), p);
    }

    #[test]
    fn mixed_binomial() {
        // x^2 - y^4 z^2 = (x - y^2 z)(x + y^2 z)
        let p = x(0).pow(2).sub(&x(1).pow(4).mul(&x(2).pow(2)));
        let f = factor_lite(&p);
        assert_eq!(f.pieces.len(), 2);
        assert_eq!(expand(&f), p);
    }

    #[test]
    fn general_polys_stay_whole() {
        let p = x(0).add(&x(1)).add(&c(1)).mul(&x(0));
        let f = factor_lite(&p);
        assert_eq!(f.pieces.len(), 1);
        assert_eq!(expand(&f), p);
        let q = x(0).pow(2).add(&x(1)).add(&c(1));
        assert!(!factor_lite(&q).pieces[0].irreducible);
    }
}
