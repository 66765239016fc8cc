//! Verification suites: every closed formula against an independent route,
//! over exhaustive ranges of small instances.

use std::collections::{HashMap, HashSet};
use std::fmt::Debug;
use std::sync::Arc;

use num::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{
    product_characters_on, stab_total, twist_by_psi, ClassFunction, PartitionMatrix,
};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::face::{FaceAlgebra, FaceElement, Symbol};
use crate::gset::GSet;
use crate::indicators::{
    coset_root_expansion_in, coset_roots_sn, fs2_young, fs_formula, fs_r_divisor_sum, involutions_bs,
    involutions_bss, involutions_in_young_coset, recurrence_rr, root_number_function, stab_identity_rhs,
    sum_over_double_cosets, twisted_fs2,
};
use crate::linalg::{q, Matrix};
use crate::modules::{
    is_twisted_invariant, pairing_transpose, twisted_forms, young_representation, InducedModule,
};
use crate::oracle::{class_function_r, count_roots_in_coset, root_count_group, trace_oracle};
use crate::perm::{Composition, CosetSide, PermGroup, Permutation};
use crate::repr::Representation;

pub const SUITES: [&str; 11] = [
    "involutions",
    "special-cases",
    "indicator-triple",
    "divisor-sum",
    "recurrence",
    "double-coset",
    "stab-identity",
    "expansion",
    "induced-identity",
    "forms",
    "integrals",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: usize,
    pub failures: usize,
    /// The first failing instance in enumeration order.
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub max_n: Option<usize>,
    pub r: Option<u32>,
    pub m: Option<usize>,
    pub caps: Caps,
}

impl SuiteParams {
    pub fn new(caps: Caps) -> Self {
        SuiteParams {
            caps,
            ..Default::default()
        }
    }
}

type Outcome = std::result::Result<(), String>;

fn check<T: PartialEq + Debug>(what: &str, lhs: T, rhs: T) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: {:?} != {:?}", what, lhs, rhs))
    }
}

fn ensure(what: &str, cond: bool) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn report(suite: &str, results: Vec<(String, Outcome)>) -> SuiteReport {
    let failures = results.iter().filter(|(_, o)| o.is_err()).count();
    let first_failure = results
        .iter()
        .find_map(|(k, o)| o.as_ref().err().map(|e| format!("{}: {}", k, e)));
    SuiteReport {
        suite: suite.to_string(),
        instances: results.len(),
        failures,
        first_failure,
    }
}

/// Runs one named suite, or all of them for `"all"`.
pub fn run(name: &str, params: &SuiteParams) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, params)).collect();
    }
    Ok(vec![run_one(name, params)?])
}

pub fn run_one(name: &str, p: &SuiteParams) -> Result<SuiteReport> {
    let results = match name {
        "involutions" => involutions(p)?,
        "special-cases" => special_cases(p)?,
        "indicator-triple" => indicator_triple(p)?,
        "divisor-sum" => divisor_sum(p)?,
        "recurrence" => recurrence(p)?,
        "double-coset" => double_coset(p)?,
        "stab-identity" => stab_identity(p)?,
        "expansion" => expansion(p)?,
        "induced-identity" => induced_identity(p)?,
        "forms" => forms(p)?,
        "integrals" => integrals(p)?,
        other => {
            return Err(Error::Invalid(format!(
                "unknown suite `{}`; expected one of {} or all",
                other,
                SUITES.join(", ")
            )))
        }
    };
    Ok(report(name, results))
}

fn symmetric(n: usize, caps: &Caps) -> Result<Arc<PermGroup>> {
    let g = PermGroup::symmetric(n)?;
    if g.order() > caps.elements {
        return Err(Error::CapExceeded {
            what: "group order",
            size: g.order(),
            cap: caps.elements,
        });
    }
    Ok(Arc::new(g))
}

fn leading(n: usize, m: usize) -> Result<Arc<PermGroup>> {
    Ok(Arc::new(PermGroup::symmetric_on(n, &(0..m).collect::<Vec<_>>())?))
}

fn identity_of(n: usize) -> Permutation {
    Permutation::identity(n)
}

fn involutions(p: &SuiteParams) -> Result<Vec<(String, Outcome)>> {
    let max_n = p.max_n.unwrap_or(6);
    let mut tasks = Vec::new();
    for n in 1..=max_n {
        let g = symmetric(n, &p.caps)?;
        for alpha in Composition::all(n) {
            let h = Arc::new(PermGroup::young(&alpha)?);
            for b in g.elements() {
                tasks.push((alpha.clone(), h.clone(), b.clone()));
            }
        }
    }
    tasks
        .par_iter()
        .map(|(alpha, h, b)| {
            let key = format!("n={} alpha={} b={}", alpha.total(), alpha, b);
            let formula = involutions_in_young_coset(alpha, b)?;
            let oracle = count_roots_in_coset(h, b, 2, &identity_of(alpha.total())) as u128;
            Ok((key, check("formula vs oracle", formula, oracle)))
        })
        .collect()
}

fn special_cases(p: &SuiteParams) -> Result<Vec<(String, Outcome)>> {
    let mut out = Vec::new();
    let b = Permutation::parse(4, "(3 4)")?;
    let v = involutions_bs(4, 3, &b)?;
    let o = count_roots_in_coset(&*leading(4, 3)?, &b, 2, &identity_of(4)) as u128;
    out.push((
        "bS n=4 m=3 b=(3 4)".to_string(),
        check("pinned", (v, o), (2, 2)),
    ));
    let b = Permutation::parse(4, "(2 3)")?;
    let v = involutions_bss(4, 2, &b)?;
    let o = count_roots_in_coset(&PermGroup::young(&Composition::new(vec![2, 2])?)?, &b, 2, &identity_of(4))
        as u128;
    out.push((
        "bSS n=4 m=2 b=(2 3)".to_string(),
        check("pinned", (v, o), (1, 1)),
    ));

    let max_n = p.max_n.unwrap_or(6);
    let mut tasks = Vec::new();
    for n in 2..=max_n {
        let g = symmetric(n, &p.caps)?;
        for m in 1..n {
            let sm = leading(n, m)?;
            let smm = Arc::new(PermGroup::young(&Composition::new(vec![m, n - m])?)?);
            for b in g.elements() {
                tasks.push((n, m, sm.clone(), smm.clone(), b.clone()));
            }
        }
    }
    let swept: Vec<(String, Outcome)> = tasks
        .par_iter()
        .map(|(n, m, sm, smm, b)| {
            let key = format!("n={} m={} b={}", n, m, b);
            let id = identity_of(*n);
            let bs = involutions_bs(*n, *m, b)?;
            let bss = involutions_bss(*n, *m, b)?;
            let o1 = count_roots_in_coset(sm, b, 2, &id) as u128;
            let o2 = count_roots_in_coset(smm, b, 2, &id) as u128;
            Ok((key, check("bS", bs, o1).and_then(|_| check("bSS", bss, o2))))
        })
        .collect::<Result<_>>()?;
    out.extend(swept);
    Ok(out)
}

fn integral_powers(alg: &Arc<FaceAlgebra>, max_r: u32) -> Vec<FaceElement> {
    (0..=max_r)
        .map(|r| if r == 0 { alg.unit() } else { alg.integral_r_closed(r) })
        .collect()
}

fn indicator_triple(p: &SuiteParams) -> Result<Vec<(String, Outcome)>> {
    let max_n = p.max_n.unwrap_or(5);
    let mut out = Vec::new();
    for n in 1..=max_n {
        let g = symmetric(n, &p.caps)?;
        for alpha in Composition::all(n) {
            let gset = Arc::new(GSet::ordered_set_partitions(g.clone(), &alpha)?);
            let alg = FaceAlgebra::with_cap(gset.clone(), p.caps.ambient)?;
            let ints = integral_powers(&alg, 4);
            let mut tasks = Vec::new();
            for o in gset.orbitals() {
                let (x, y) = o.base;
                let data = gset.two_point_stabilizer(x, y)?;
                let young = Arc::new(data.young.expect("base point of a set-partition space"));
                for lm in PartitionMatrix::all(&young.gamma) {
                    tasks.push((x, y, data.k.clone(), young.clone(), lm));
                }
            }
            let part: Vec<(String, Outcome)> = tasks
                .par_iter()
                .map(|(x, y, k, young, lm)| {
                    let key = format!(
                        "n={} alpha={} B={} Lambda={}",
                        n,
                        alpha,
                        gset.label(*y),
                        lm
                    );
                    let closed = q(fs2_young(&young.gamma, lm)?);
                    let chi = twist_by_psi(lm.character_on(&young.intervals)?, young);
                    let formula = fs_formula(&gset, *x, *y, &chi, 2);
                    let m = InducedModule::induce(alg.clone(), *x, *y, young_representation(k.clone(), young, lm)?)?;
                    let direct = m.trace(&ints[2])?;
                    let mut outcome = check("closed vs formula", &closed, &formula)
                        .and_then(|_| check("formula vs direct", &formula, &direct));
                    for r in 1..=4u32 {
                        if outcome.is_err() {
                            break;
                        }
                        if (m.dim() as u128).pow(r) > p.caps.tensor as u128 {
                            continue;
                        }
                        let dr = m.trace(&ints[r as usize])?;
                        let nu = m.nu_r(r, p.caps.tensor)?;
                        outcome = check(&format!("nu_{} vs direct", r), nu, dr);
                    }
                    Ok((key, outcome))
                })
                .collect::<Result<_>>()?;
            out.extend(part);
        }
    }
    Ok(out)
}

fn divisor_sum(p: &SuiteParams) -> Result<Vec<(String, Outcome)>> {
    let max_n = p.max_n.unwrap_or(6);
    let rs: Vec<u32> = p.r.map(|r| vec![r]).unwrap_or_else(|| (1..=6).collect());
    let mut out = Vec::new();
    for n in 2..=max_n {
        let g = symmetric(n, &p.caps)?;
        let gset = GSet::ordered_set_partitions(g, &Composition::new(vec![n - 1, 1])?)?;
        let x = gset.base_point();
        let y = gset.image_of_base(&Permutation::transposition(n, n - 2, n - 1))?;
        let k = gset.pair_stabilizer(x, y);
        if !k.same_elements(&*leading(n, n - 2)?) {
            out.push((format!("n={}", n), Err("stabilizer of (n, n-1) is not S_(n-2)".into())));
            continue;
        }
        let chis = product_characters_on(&[(0..n - 2).collect()]);
        let tasks: Vec<_> = chis
            .iter()
            .flat_map(|c| rs.iter().map(move |&r| (c, r)))
            .collect();
        let part: Vec<(String, Outcome)> = tasks
            .par_iter()
            .map(|(chi, r)| {
                let key = format!("n={} chi={} r={}", n, chi.parts[0], r);
                let lhs = fs_r_divisor_sum(n, *chi, *r)?;
                let rhs = fs_formula(&gset, x, y, *chi, *r);
                Ok((key, check("divisor sum vs formula", lhs, rhs)))
            })
            .collect::<Result<_>>()?;
        out.extend(part);
    }
    Ok(out)
}

const TELEPHONE: [u128; 9] = [1, 1, 2, 4, 10, 26, 76, 232, 764];

fn recurrence(p: &SuiteParams) -> Result<Vec<(String, Outcome)>> {
    let max_n = p.max_n.unwrap_or(8);
    let rs: Vec<u32> = p.r.map(|r| vec![r]).unwrap_or_else(|| vec![2, 3, 4, 6]);
    let groups: Vec<Option<Arc<PermGroup>>> = (0..=max_n)
        .map(|n| if n == 0 { Ok(None) } else { symmetric(n, &p.caps).map(Some) })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for &r in &rs {
        for (n, g) in groups.iter().enumerate() {
            let key = format!("n={} r={}", n, r);
            let rec = recurrence_rr(n, r)?;
            // the empty permutation is the only element of 𝔖₀
            let brute = g.as_ref().map_or(1, |g| root_count_group(g, r) as u128);
            let mut outcome = check("recurrence vs enumeration", rec, brute);
            if r == 2 && n < TELEPHONE.len() {
                outcome = outcome.and_then(|_| check("telephone number", rec, TELEPHONE[n]));
            }
            out.push((key, outcome));
        }
    }
    Ok(out)
}

fn double_coset(p: &SuiteParams) -> Result<Vec<(String, Outcome)>> {
    let max_n = p.max_n.unwrap_or(7);
    let rs: Vec<u32> = p.r.map(|r| vec![r]).unwrap_or_else(|| vec![2, 3]);
    let mut out = Vec::new();
    for n in 2..=max_n {
        let g = symmetric(n, &p.caps)?;
        let mut subgroups: Vec<(String, Arc<PermGroup>, Option<usize>)> =
            vec![(format!("S_{}", n - 1), leading(n, n - 1)?, None)];
        for m in 1..n {
            let alpha = Composition::new(vec![m, n - m])?;
            subgroups.push((format!("S_{}", alpha), Arc::new(PermGroup::young(&alpha)?), Some(m)));
        }
        for &r in &rs {
            let total = root_count_group(&g, r) as u128;
            for (name, h, m) in &subgroups {
                let key = format!("n={} H={} r={}", n, name, r);
                let id = identity_of(n);
                let s = sum_over_double_cosets(&g, h, |b| Ok(count_roots_in_coset(h, b, r, &id) as u128))?;
                let mut outcome = check("double-coset sum vs R_G(1)", s.total, total);
                if let (Some(m), 2) = (m, r) {
                    let alpha = Composition::new(vec![*m, n - m])?;
                    let f = sum_over_double_cosets(&g, h, |b| involutions_in_young_coset(&alpha, b))?;
                    outcome = outcome
                        .and_then(|_| check("formula counts vs R_G(1)", f.total, total))
                        .and_then(|_| check("STab(n)", f.total, stab_total(n)));
                }
                out.push((key, outcome));
            }
        }
    }
    Ok(out)
}

fn stab_identity(p: &SuiteParams) -> Result<Vec<(String, Outcome)>> {
    let max_n = p.max_n.unwrap_or(10);
    let mut out = Vec::new();
    for n in 0..=max_n {
        let ms: Vec<usize> = match p.m {
            Some(m) if m <= n => vec![m],
            Some(_) => vec![],
            None => (0..=n).collect(),
        };
        for m in ms {
            let key = format!("n={} m={}", n, m);
            out.push((key, check("sum vs STab(n)", stab_identity_rhs(n, m)?, stab_total(n))));
        }
    }
    Ok(out)
}

fn expansion(p: &SuiteParams) -> Result<Vec<(String, Outcome)>> {
    let max_n = p.max_n.unwrap_or(6);
    let rs: Vec<u32> = p.r.map(|r| vec![r]).unwrap_or_else(|| vec![2, 3, 4]);
    let mut out = Vec::new();
    for n in 2..=max_n {
        let g = symmetric(n, &p.caps)?;
        let mut subgroups: Vec<(String, Arc<PermGroup>)> = vec![(format!("S_{}", n - 1), leading(n, n - 1)?)];
        for alpha in Composition::all(n) {
            subgroups.push((format!("S_{}", alpha), Arc::new(PermGroup::young(&alpha)?)));
        }
        for (name, h) in subgroups {
            let gset = GSet::coset_space(g.clone(), h.clone())?;
            let reps = g.coset_decomposition(&h, CosetSide::Double)?.reps;
            let tasks: Vec<(usize, u32)> = reps.iter().flat_map(|&b| rs.iter().map(move |&r| (b, r))).collect();
            let part: Vec<(String, Outcome)> = tasks
                .par_iter()
                .map(|&(bi, r)| {
                    let b = g.element(bi);
                    let key = format!("n={} H={} b={} r={}", n, name, b, r);
                    let e = coset_root_expansion_in(&gset, h.clone(), b, r)?;
                    let mut outcome = Ok(());
                    for a in h.elements() {
                        let oracle = q(count_roots_in_coset(&h, b, r, a) as i64);
                        outcome = check(&format!("value at {}", a), e.evaluate(a), oracle);
                        if outcome.is_err() {
                            break;
                        }
                    }
                    if outcome.is_ok() {
                        let table = class_function_r(&h, &e.k, b, r);
                        outcome = match table {
                            Ok(vals) => {
                                let predicted: Vec<_> = e.class_function.values().to_vec();
                                let oracle: Vec<_> = vals.iter().map(|&v| q(v as i64)).collect();
                                check("class table", predicted, oracle)
                            }
                            Err(err) => Err(err.to_string()),
                        };
                    }
                    Ok((key, outcome))
                })
                .collect::<Result<_>>()?;
            out.extend(part);
        }
    }
    Ok(out)
}

fn induced_identity(p: &SuiteParams) -> Result<Vec<(String, Outcome)>> {
    let max_n = p.max_n.unwrap_or(7);
    let rs: Vec<u32> = p.r.map(|r| vec![r]).unwrap_or_else(|| (1..=6).collect());
    let mut tasks = Vec::new();
    for n in 2..=max_n {
        for &r in &rs {
            tasks.push((n, r));
        }
    }
    tasks
        .par_iter()
        .map(|&(n, r)| {
            let key = format!("n={} r={}", n, r);
            let c = coset_roots_sn(n, r)?;
            let id = identity_of(n);
            let oracle = count_roots_in_coset(&*leading(n, n - 1)?, &Permutation::transposition(n, n - 2, n - 1), r, &id)
                as u128;
            let outcome = ensure("class functions differ", c.identity_holds())
                .and_then(|_| ensure("multiplicities not in Z>=0", c.is_character()))
                .and_then(|_| check("count vs enumeration", c.count, oracle))
                .and_then(|_| check("count vs lhs(1)", q(c.count as i64), c.lhs.value_at(&id)));
            Ok((key, outcome))
        })
        .collect()
}

/// `C₄ = ⟨(1 2 3 4)⟩` on two cosets of `K = ⟨(1 3)(2 4)⟩`, with `V` the
/// faithful character of `K` and `t = (1 2 3 4)`.
pub fn quaternionic_instance() -> Result<(InducedModule, Permutation)> {
    let t = Permutation::parse(4, "(1 2 3 4)")?;
    let t2 = t.mul(&t);
    let g = Arc::new(PermGroup::close(4, vec![t.clone()])?);
    let k = Arc::new(PermGroup::close(4, vec![t2.clone()])?);
    let x = Arc::new(GSet::coset_space(g, k)?);
    let alg = FaceAlgebra::new(x.clone())?;
    let y = x.act_perm(&t, 0)?;
    let kk = Arc::new(x.pair_stabilizer(0, y));
    let v = Representation::from_generators(kk, &[t2], &[Matrix::from_vec(1, 1, vec![q(-1)])])?;
    Ok((InducedModule::induce(alg, 0, y, v)?, t))
}

fn forms_outcome(m: &InducedModule, t: Option<&Permutation>) -> Result<Outcome> {
    if !m.is_simple() {
        return Ok(Err("module is not simple".into()));
    }
    let forms = m.invariant_forms();
    let fs2 = m.fs_direct(2);
    let Some(sign) = forms.sign() else {
        return Ok(Err(format!("dim B(M) = {}", forms.dim())));
    };
    let mut o = check("sign vs FS2", q(sign), fs2.clone());
    for c in &forms.basis {
        o = o.and_then(|_| ensure("form not invariant", m.is_invariant_form(c)));
    }
    let Some(t) = t else {
        return Ok(o.and_then(|_| check("dim B(M) off symmetric orbitals", forms.dim(), 0)));
    };
    let v = m.representation();
    let tw = twisted_forms(v, t)?;
    o = o
        .and_then(|_| check("twisted sign", tw.sign(), Some(sign)))
        .and_then(|_| check("twisted FS2", twisted_fs2(v.group(), &v.character(), t).ok(), Some(fs2)));
    for (c, nd) in forms.basis.iter().zip(&forms.nondegenerate) {
        let b = m.res_form(c, t)?;
        o = o
            .and_then(|_| ensure("Res(C) not in B(V,t)", is_twisted_invariant(v, t, &b).unwrap_or(false)))
            .and_then(|_| check("Ind(Res(C))", &m.ind_form(&b, t).unwrap(), c))
            .and_then(|_| check("Res(C^T)", m.res_form(&c.transpose(), t).unwrap(), pairing_transpose(v, t, &b)))
            .and_then(|_| check("non-degeneracy", b.is_invertible(), *nd));
    }
    for b in &tw.basis {
        let c = m.ind_form(b, t)?;
        o = o
            .and_then(|_| ensure("Ind(B) not invariant", m.is_invariant_form(&c)))
            .and_then(|_| check("Res(Ind(B))", &m.res_form(&c, t).unwrap(), b));
    }
    let zero = Matrix::zeros(v.dim(), v.dim());
    o = o.and_then(|_| ensure("Ind(0) != 0", m.ind_form(&zero, t).map(|c| c.is_zero()).unwrap_or(false)));
    Ok(o)
}

const FORM_AMBIENTS: [(usize, &[usize]); 6] = [
    (3, &[2, 1]),
    (3, &[1, 1, 1]),
    (4, &[2, 2]),
    (4, &[3, 1]),
    (4, &[2, 1, 1]),
    (4, &[1, 2, 1]),
];

fn forms(p: &SuiteParams) -> Result<Vec<(String, Outcome)>> {
    let mut tasks = Vec::new();
    for (n, parts) in FORM_AMBIENTS {
        let g = symmetric(n, &p.caps)?;
        let alpha = Composition::new(parts.to_vec())?;
        let gset = Arc::new(GSet::ordered_set_partitions(g, &alpha)?);
        let alg = FaceAlgebra::with_cap(gset.clone(), p.caps.ambient)?;
        for o in gset.orbitals() {
            let (x, y) = o.base;
            let data = gset.two_point_stabilizer(x, y)?;
            let young = Arc::new(data.young.expect("base point"));
            for lm in PartitionMatrix::all(&young.gamma) {
                tasks.push((alg.clone(), alpha.clone(), x, y, data.k.clone(), young.clone(), lm));
            }
        }
    }
    let mut out: Vec<(String, Outcome)> = tasks
        .par_iter()
        .map(|(alg, alpha, x, y, k, young, lm)| {
            let key = format!("alpha={} B={} Lambda={}", alpha, alg.gset().label(*y), lm);
            let rep = young_representation(k.clone(), young, lm)?;
            let m = InducedModule::induce(alg.clone(), *x, *y, rep.clone())?;
            let t = young.transposer.as_ref().map(|(_, t)| t.clone());
            let mut o = forms_outcome(&m, t.as_ref())?;
            if o.is_ok() && t.is_some() {
                let single = m.invariant_forms().dim();
                let doubled = InducedModule::induce(alg.clone(), *x, *y, rep.direct_sum(&rep)?)?;
                o = check("dim B(M+M)", doubled.invariant_forms().dim(), 4 * single);
            }
            Ok((key, o))
        })
        .collect::<Result<_>>()?;
    let (m, t) = quaternionic_instance()?;
    let o = forms_outcome(&m, Some(&t))?.and_then(|_| check("FS2", m.fs_direct(2), q(-1)));
    out.push(("C4 on C4/C2, faithful V".to_string(), o));
    Ok(out)
}

/// Largest `|X|²|G|` the integral suite builds.
pub const INTEGRAL_AMBIENT_LIMIT: usize = 100_000;

fn integral_ambients(p: &SuiteParams) -> Result<Vec<(String, Arc<FaceAlgebra>)>> {
    let max_n = p.max_n.unwrap_or(7);
    let mut out = Vec::new();
    for n in 1..=max_n {
        let g = symmetric(n, &p.caps)?;
        for alpha in Composition::all(n) {
            let size = crate::perm::factorial(n).unwrap_or(u128::MAX)
                / alpha.parts().iter().map(|&a| crate::perm::factorial(a).unwrap()).product::<u128>();
            let dim = size.saturating_mul(size).saturating_mul(g.order() as u128);
            if dim > INTEGRAL_AMBIENT_LIMIT as u128 {
                continue;
            }
            let gset = Arc::new(GSet::ordered_set_partitions(g.clone(), &alpha)?);
            out.push((format!("S_{}/S_{}", n, alpha), FaceAlgebra::with_cap(gset, p.caps.ambient)?));
        }
    }
    let (m, _) = quaternionic_instance()?;
    out.push(("C4/C2".to_string(), m.algebra().clone()));
    Ok(out)
}

fn integral_checks(name: &str, alg: &Arc<FaceAlgebra>) -> Vec<(String, Outcome)> {
    let mut out = Vec::new();
    let int = alg.integral();
    out.push((
        format!("{} integral idempotent", name),
        check("int^2", int.mul(&int).unwrap(), int.clone()),
    ));
    let g = alg.gset().group().clone();
    for r in 1..=8u32 {
        let closed = alg.integral_r_closed(r);
        let mut o = check("closed vs composed", &closed, &alg.integral_r_composed(r));
        if r > 1 {
            o = o.and_then(|_| check("closed vs left form", &closed, &alg.integral_r_closed_left(r)));
        }
        out.push((format!("{} r={} closed form", name, r), o));

        let s = alg.integral_r_formula(r);
        let mut c = Ok(());
        for gen in g.generators() {
            let e = alg.group_element(g.index_of(gen).expect("generator"));
            c = c.and_then(|_| check(&format!("commutes with {}", gen), s.mul(&e).unwrap(), e.mul(&s).unwrap()));
        }
        for y in 0..alg.points() {
            for z in 0..alg.points() {
                if c.is_err() {
                    break;
                }
                let e = alg.idempotent(y, z);
                c = check(&format!("commutes with e^{}_{}", y, z), s.mul(&e).unwrap(), e.mul(&s).unwrap());
            }
        }
        out.push((format!("{} r={} central", name, r), c));
    }
    let n = alg.points();
    let symbols: Vec<FaceElement> = (0..alg.group_order())
        .flat_map(|a| (0..n).flat_map(move |x| (0..n).map(move |y| Symbol::new(x, y, a))))
        .map(|s| alg.element([(s, q(1))]))
        .collect();
    let distinct = |f: fn(&FaceElement) -> FaceElement| -> Vec<FaceElement> {
        let set: HashSet<FaceElement> = symbols.iter().map(f).collect();
        set.into_iter().collect()
    };
    let left: HashMap<FaceElement, FaceElement> = distinct(FaceElement::epsilon_l)
        .into_par_iter()
        .map(|k| {
            let v = k.mul(&int).unwrap();
            (k, v)
        })
        .collect();
    let right: HashMap<FaceElement, FaceElement> = distinct(FaceElement::epsilon_r)
        .into_par_iter()
        .map(|k| {
            let v = int.mul(&k).unwrap();
            (k, v)
        })
        .collect();
    let d = symbols
        .par_iter()
        .map(|e| {
            check("e int = eL(e) int", &e.mul(&int).unwrap(), &left[&e.epsilon_l()])
                .and_then(|_| check("int e = int eR(e)", &int.mul(e).unwrap(), &right[&e.epsilon_r()]))
                .map_err(|m| format!("{} at {:?}", m, e))
        })
        .find_first(|o| o.is_err())
        .unwrap_or(Ok(()));
    out.push((format!("{} defining identity", name), d));
    out
}

fn integrals(p: &SuiteParams) -> Result<Vec<(String, Outcome)>> {
    let ambients = integral_ambients(p)?;
    Ok(ambients
        .par_iter()
        .flat_map_iter(|(name, alg)| integral_checks(name, alg))
        .collect())
}

/// `Tr_M(∫)` on a module, kept for spot checks against the dense trace.
pub fn integral_trace_agrees(m: &InducedModule) -> Result<bool> {
    let int = m.algebra().integral();
    Ok(trace_oracle(m, &int)? == m.trace(&int)?)
}

/// `R^r` on the classes of `𝔖_m` equals the pointwise root count.
pub fn root_function_agrees(m: usize, r: u32) -> Result<bool> {
    let h = leading(m.max(1), m)?;
    let f: ClassFunction = root_number_function(h.clone(), r);
    let id = identity_of(m.max(1));
    Ok(h.elements()
        .iter()
        .all(|a| f.value_at(a) == q(count_roots_in_coset(&h, &id, r, a) as i64))
        && !f.values().iter().all(|v| v.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(max_n: usize) -> SuiteParams {
        SuiteParams {
            max_n: Some(max_n),
            ..SuiteParams::new(Caps::for_suites())
        }
    }

    #[test]
    fn small_suites_pass() {
        for name in SUITES {
            let n = match name {
                "recurrence" | "stab-identity" => 6,
                "forms" => 0,
                _ => 4,
            };
            let r = run_one(name, &small(n)).unwrap();
            assert!(r.passed(), "{:?}", r);
            assert!(r.instances > 0, "{}", name);
        }
    }

    #[test]
    fn recurrence_example_counts() {
        let p = SuiteParams {
            max_n: Some(8),
            r: Some(2),
            ..SuiteParams::new(Caps::default())
        };
        let r = run_one("recurrence", &p).unwrap();
        assert_eq!((r.instances, r.failures), (9, 0));
    }

    #[test]
    fn stab_identity_with_fixed_m() {
        let p = SuiteParams {
            max_n: Some(10),
            m: Some(4),
            ..SuiteParams::new(Caps::default())
        };
        let r = run_one("stab-identity", &p).unwrap();
        assert_eq!((r.instances, r.failures), (7, 0));
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run("bogus", &SuiteParams::default()).is_err());
    }

    #[test]
    fn spot_helpers() {
        let (m, _) = quaternionic_instance().unwrap();
        assert!(integral_trace_agrees(&m).unwrap());
        for k in 0..=4 {
            assert!(root_function_agrees(k, 2).unwrap());
        }
    }
}
