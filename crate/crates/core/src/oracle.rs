//! Brute-force ground truth by literal enumeration.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::face::FaceElement;
use crate::linalg::Rational;
use crate::modules::InducedModule;
use crate::perm::{PermGroup, Permutation};

/// Largest module dimension [`trace_oracle`] will materialize.
pub const TRACE_ORACLE_DIM_CAP: usize = 512;

fn power_is(c: &Permutation, r: u32, a: &Permutation) -> bool {
    let pts = c.degree();
    (0..pts).all(|i| {
        let mut p = i;
        for _ in 0..r {
            p = c.apply(p);
        }
        p == a.apply(i)
    })
}

/// `|{c ∈ bH | c^r = a}|`.
pub fn count_roots_in_coset(h: &PermGroup, b: &Permutation, r: u32, a: &Permutation) -> u64 {
    h.elements()
        .par_iter()
        .filter(|hh| power_is(&b.mul(hh), r, a))
        .count() as u64
}

/// `|{c ∈ G | c^r = 1}|`.
pub fn root_count_group(g: &PermGroup, r: u32) -> u64 {
    let id = Permutation::identity(g.degree());
    g.elements().par_iter().filter(|c| power_is(c, r, &id)).count() as u64
}

/// `R^r_{G,bH}` tabulated on the classes of `K ⊆ H`, class index as in
/// `K.conjugacy_classes()`. Each class is checked to be constant.
pub fn class_function_r(h: &PermGroup, k: &PermGroup, b: &Permutation, r: u32) -> Result<Vec<u64>> {
    if !k.is_subgroup_of(h) {
        return Err(Error::NotSubgroup);
    }
    let mut tally = vec![0u64; k.order()];
    for hh in h.elements() {
        let c = b.mul(hh);
        if let Some(idx) = k.index_of(&c.pow(r as i64)) {
            tally[idx] += 1;
        }
    }
    let classes = k.conjugacy_classes();
    let mut out = Vec::with_capacity(classes.classes.len());
    for (ci, members) in classes.classes.iter().enumerate() {
        let v = tally[members[0]];
        if let Some(&bad) = members.iter().find(|&&m| tally[m] != v) {
            return Err(Error::NotClassConstant(format!(
                "class {} takes {} at {} and {} at {}",
                ci,
                v,
                k.element(members[0]),
                tally[bad],
                k.element(bad)
            )));
        }
        out.push(v);
    }
    Ok(out)
}

/// `Tr_M(e)` from the dense action matrix.
pub fn trace_oracle(m: &InducedModule, e: &FaceElement) -> Result<Rational> {
    if m.dim() > TRACE_ORACLE_DIM_CAP {
        return Err(Error::CapExceeded {
            what: "trace oracle dimension",
            size: m.dim(),
            cap: TRACE_ORACLE_DIM_CAP,
        });
    }
    Ok(m.action_matrix(e)?.trace())
}
