use std::process::ExitCode;
use std::time::Instant;

use coset_indicator::indicators::{
    involutions_bs, involutions_bss, involutions_in_young_coset, recurrence_rr, stab_identity_rhs,
    sum_over_double_cosets,
};
use coset_indicator::characters::stab_total;
use coset_indicator::linalg::q;
use coset_indicator::oracle::count_roots_in_coset;
use coset_indicator::perm::{Composition, PermGroup, Permutation};
use coset_indicator::suites::{quaternionic_instance, run_one, SuiteParams, SuiteReport};
use coset_indicator::Caps;

const INVOLUTION_MAX_N: usize = 6;
const TRIPLE_MAX_N: usize = 5;
const DIVISOR_MAX_N: usize = 6;
const DIVISOR_R: [u32; 6] = [1, 2, 3, 4, 5, 6];
const TELEPHONE: [u128; 9] = [1, 1, 2, 4, 10, 26, 76, 232, 764];
const RECURRENCE_MAX_N: usize = 8;
const RECURRENCE_R: [u32; 3] = [3, 4, 6];
const DOUBLE_COSET_MAX_N: usize = 7;
const DOUBLE_COSET_R: [u32; 2] = [2, 3];
const STAB_IDENTITY_MAX_N: usize = 10;
const EXPANSION_MAX_N: usize = 6;
const EXPANSION_R: [u32; 3] = [2, 3, 4];
const INDUCED_MAX_N: usize = 7;
const INDUCED_R: [u32; 6] = [1, 2, 3, 4, 5, 6];
const FORMS_MIN_MODULES: usize = 20;
const INTEGRAL_MAX_N: usize = 7;

struct Verdict {
    ok: bool,
    detail: String,
}

fn params(max_n: usize, r: Option<u32>) -> SuiteParams {
    SuiteParams {
        max_n: Some(max_n),
        r,
        m: None,
        caps: Caps::for_suites(),
    }
}

fn suite(name: &str, max_n: usize, r: Option<u32>) -> SuiteReport {
    run_one(name, &params(max_n, r)).unwrap_or_else(|e| panic!("suite {} failed to run: {}", name, e))
}

fn summarize(reports: &[SuiteReport]) -> Verdict {
    let instances: usize = reports.iter().map(|r| r.instances).sum();
    let failures: usize = reports.iter().map(|r| r.failures).sum();
    let first = reports.iter().find_map(|r| r.first_failure.clone());
    Verdict {
        ok: failures == 0 && instances > 0,
        detail: match first {
            Some(f) => format!("{} instances, {} failures; first: {}", instances, failures, f),
            None => format!("{} instances, 0 failures", instances),
        },
    }
}

fn and(mut v: Verdict, ok: bool, note: &str) -> Verdict {
    if !ok {
        v.ok = false;
        v.detail.push_str(&format!("; {}", note));
    }
    v
}

fn perm(n: usize, s: &str) -> Permutation {
    Permutation::parse(n, s).unwrap()
}

fn young_coset_involutions() -> Verdict {
    summarize(&[suite("involutions", INVOLUTION_MAX_N, None)])
}

fn special_cases() -> Verdict {
    let id = Permutation::identity(4);
    let b = perm(4, "(3 4)");
    let s3 = PermGroup::symmetric_on(4, &[0, 1, 2]).unwrap();
    let bs = (involutions_bs(4, 3, &b).unwrap(), count_roots_in_coset(&s3, &b, 2, &id));
    let b = perm(4, "(2 3)");
    let y22 = PermGroup::young(&Composition::new(vec![2, 2]).unwrap()).unwrap();
    let bss = (involutions_bss(4, 2, &b).unwrap(), count_roots_in_coset(&y22, &b, 2, &id));
    let v = summarize(&[suite("special-cases", INVOLUTION_MAX_N, None)]);
    let v = and(v, bs == (2, 2), &format!("bS (4,3,(3 4)) gave {:?}", bs));
    and(v, bss == (1, 1), &format!("bSS (4,2,(2 3)) gave {:?}", bss))
}

fn indicator_triple() -> Verdict {
    summarize(&[suite("indicator-triple", TRIPLE_MAX_N, None)])
}

fn divisor_sum() -> Verdict {
    let reports: Vec<SuiteReport> = DIVISOR_R
        .iter()
        .map(|&r| suite("divisor-sum", DIVISOR_MAX_N, Some(r)))
        .collect();
    summarize(&reports)
}

fn recurrence() -> Verdict {
    let mut reports = vec![suite("recurrence", RECURRENCE_MAX_N, Some(2))];
    for r in RECURRENCE_R {
        reports.push(suite("recurrence", RECURRENCE_MAX_N, Some(r)));
    }
    let tel: Vec<u128> = (0..=8).map(|n| recurrence_rr(n, 2).unwrap()).collect();
    and(summarize(&reports), tel == TELEPHONE, &format!("r=2 sequence {:?}", tel))
}

fn double_coset() -> Verdict {
    let mut reports: Vec<SuiteReport> = DOUBLE_COSET_R
        .iter()
        .map(|&r| suite("double-coset", DOUBLE_COSET_MAX_N, Some(r)))
        .collect();
    reports.push(suite("stab-identity", STAB_IDENTITY_MAX_N, None));
    let g = PermGroup::symmetric(4).unwrap();
    let alpha = Composition::new(vec![2, 2]).unwrap();
    let h = PermGroup::young(&alpha).unwrap();
    let s = sum_over_double_cosets(&g, &h, |b| involutions_in_young_coset(&alpha, b)).unwrap();
    let mut parts: Vec<u128> = s.terms.iter().map(|t| t.multiplicity * t.count).collect();
    parts.sort();
    let v = and(
        summarize(&reports),
        parts == [2, 4, 4] && s.total == 10 && stab_identity_rhs(4, 2).unwrap() == 10,
        &format!("n=4 m=2 terms {:?}", parts),
    );
    and(v, stab_total(4) == 10, "STab(4)")
}

fn expansion() -> Verdict {
    let reports: Vec<SuiteReport> = EXPANSION_R
        .iter()
        .map(|&r| suite("expansion", EXPANSION_MAX_N, Some(r)))
        .collect();
    summarize(&reports)
}

fn induced_identity() -> Verdict {
    let reports: Vec<SuiteReport> = INDUCED_R
        .iter()
        .map(|&r| suite("induced-identity", INDUCED_MAX_N, Some(r)))
        .collect();
    summarize(&reports)
}

fn bilinear_forms() -> Verdict {
    let r = suite("forms", 0, None);
    let (m, _) = quaternionic_instance().unwrap();
    let v = and(
        summarize(std::slice::from_ref(&r)),
        r.instances > FORMS_MIN_MODULES,
        &format!("only {} modules", r.instances),
    );
    and(v, m.fs_direct(2) == q(-1), "engineered instance lost its FS2 = -1")
}

fn integral_laws() -> Verdict {
    summarize(&[suite("integrals", INTEGRAL_MAX_N, None)])
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("young-coset involution counts", young_coset_involutions),
        ("special cases bS and bSS", special_cases),
        ("indicator triple agreement", indicator_triple),
        ("divisor-sum formula", divisor_sum),
        ("root-number recurrence", recurrence),
        ("double-coset sum", double_coset),
        ("class-function expansion", expansion),
        ("induced class-function identity", induced_identity),
        ("bilinear-form laws", bilinear_forms),
        ("integral laws", integral_laws),
    ];
    let mut all_ok = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = f();
        let secs = start.elapsed().as_secs_f64();
        println!(
            "{} criterion {:>2} {}: {} ({:.1}s)",
            if v.ok { "PASS" } else { "FAIL" },
            i + 1,
            name,
            v.detail,
            secs
        );
        all_ok &= v.ok;
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
