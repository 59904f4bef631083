use std::collections::BTreeMap;

use macdonald_coeff::ExactScalar;
use rayon::prelude::*;

use super::{Basis, BasisExpansion};
use crate::weyl::{orbit, Exp, Partition, Weight};

/// Product of two orbit-sum expansions. Only dominant exponents of the product are
/// accumulated, since they determine an invariant polynomial.
pub fn sym_mul(f: &BasisExpansion, g: &BasisExpansion) -> BasisExpansion {
    assert!(f.basis == Basis::M && g.basis == Basis::M && f.n == g.n, "orbit-sum expansions of equal rank");
    let n = f.n;
    let full_f: Vec<(Exp, &ExactScalar)> =
        f.terms().into_iter().flat_map(|(l, c)| orbit(&l.coords(n)).into_iter().map(move |e| (e, c))).collect();
    let gs: Vec<(Vec<Exp>, &ExactScalar)> = g.terms().into_iter().map(|(l, c)| (orbit(&l.coords(n)), c)).collect();
    let partial: Vec<BTreeMap<Partition, Vec<(&ExactScalar, &ExactScalar)>>> = full_f
        .par_iter()
        .map(|(e, c)| {
            let mut acc: BTreeMap<Partition, Vec<(&ExactScalar, &ExactScalar)>> = BTreeMap::new();
            for (orb, d) in &gs {
                for e2 in orb {
                    let s: Exp = e.iter().zip(e2).map(|(x, y)| x + y).collect();
                    let w = Weight { coords: s };
                    if w.is_dominant() {
                        acc.entry(w.dominant()).or_default().push((*c, *d));
                    }
                }
            }
            acc
        })
        .collect();
    let mut merged: BTreeMap<Partition, Vec<(&ExactScalar, &ExactScalar)>> = BTreeMap::new();
    for p in partial {
        for (k, v) in p {
            merged.entry(k).or_default().extend(v);
        }
    }
    let sums: Vec<(Partition, ExactScalar)> =
        merged.into_par_iter().map(|(k, v)| (k, ExactScalar::sum_of_products(&v))).collect();
    let mut out = BasisExpansion::new(Basis::M, n);
    for (k, v) in sums {
        out.add(k, v);
    }
    out
}
