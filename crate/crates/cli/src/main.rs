use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coset_indicator::characters::{
    irreducibles_of, stab_total, twist_by_psi, CharacterTable, PartitionMatrix, ProductCharacter,
};
use coset_indicator::config::parse_cap;
use coset_indicator::face::FaceAlgebra;
use coset_indicator::gset::GSet;
use coset_indicator::indicators::{
    coset_root_expansion, fs2_young, fs_formula, fs_r_divisor_sum, involutions_in_young_coset, recurrence_table,
    young_gamma, Method,
};
use coset_indicator::linalg::{format_rational, q, Rational};
use coset_indicator::modules::{young_representation, InducedModule};
use coset_indicator::oracle::{count_roots_in_coset, root_count_group};
use coset_indicator::perm::{factorial, Composition, PermGroup, Permutation};
use coset_indicator::report::{to_csv, Record};
use coset_indicator::suites::{self, SuiteParams, SuiteReport};
use coset_indicator::{Caps, Error};

const EXIT_USAGE: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "coset-indicator",
    version,
    about = "Exact Frobenius-Schur indicators and root counts for cosets of Young subgroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Ambient cap on |X|^2|G|, e.g. 2e6. Overrides COSET_INDICATOR_CAP.
    #[arg(long, global = true)]
    cap: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Args)]
struct Coset {
    #[arg(long)]
    n: usize,
    /// Composition of n, e.g. 2,2.
    #[arg(long)]
    alpha: String,
    /// Coset representative in cycle form "(1 2)(3 4)" or one-line form "[2,1,3,4]".
    #[arg(long, default_value = "()")]
    b: String,
}

#[derive(Subcommand)]
enum Command {
    /// Involutions in the coset bS_alpha.
    Involutions {
        #[command(flatten)]
        coset: Coset,
        /// Also count by enumeration and fail on disagreement.
        #[arg(long)]
        check: bool,
    },
    /// Solutions of c^r = 1 in S_n, or in the coset bS_alpha when --alpha is given.
    Roots {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value = "()")]
        b: String,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long)]
        check: bool,
    },
    /// FS_r of every simple module on the orbital of (S_alpha, bS_alpha), by every applicable method.
    Indicator {
        #[command(flatten)]
        coset: Coset,
        #[arg(long, default_value_t = 2)]
        r: u32,
    },
    /// Coefficients of the root-count class function of bS_alpha in the irreducibles of K.
    Expansion {
        #[arg(long)]
        n: usize,
        /// Young subgroup; defaults to n-1,1.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value = "()")]
        b: String,
        #[arg(long, default_value_t = 2)]
        r: u32,
        /// Compare against enumeration at every element of the subgroup.
        #[arg(long)]
        check: bool,
    },
    /// Run verification suites; exits nonzero on any failure.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Batch tables: character tables, root numbers, involution counts.
    Tables {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        r: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Characters,
    Recurrence,
    Involutions,
}

struct Output {
    records: Vec<Record>,
    notes: Vec<String>,
    failed: bool,
}

impl Output {
    fn new() -> Self {
        Output {
            records: Vec::new(),
            notes: Vec::new(),
            failed: false,
        }
    }

    fn print(&self, format: Format) {
        match format {
            Format::Json => {
                let rs: Vec<&Record> = self.records.iter().collect();
                println!("{}", serde_json::to_string_pretty(&rs).expect("records serialize"));
            }
            Format::Csv => print!("{}", to_csv(&self.records)),
            Format::Plain => {
                for n in &self.notes {
                    println!("{}", n);
                }
                for r in &self.records {
                    println!("{}", r.to_plain());
                }
            }
        }
        if self.failed && format != Format::Plain {
            for n in self.notes.iter().filter(|n| n.starts_with("MISMATCH")) {
                eprintln!("{}", n);
            }
        }
    }
}

enum Failure {
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult<T> = std::result::Result<T, Failure>;

fn symmetric(n: usize, caps: &Caps) -> CmdResult<Arc<PermGroup>> {
    let order = factorial(n).unwrap_or(u128::MAX);
    if order > caps.elements as u128 {
        return Err(Failure::Cap(format!(
            "group order {} of S_{} is above the element cap {}",
            order, n, caps.elements
        )));
    }
    Ok(Arc::new(PermGroup::symmetric(n)?))
}

fn parse_alpha(n: usize, text: &str) -> CmdResult<Composition> {
    let alpha = Composition::parse(text)?;
    if alpha.total() != n {
        return Err(Failure::Usage(format!("alpha {} is not a composition of {}", alpha, n)));
    }
    Ok(alpha)
}

fn character_label(c: &ProductCharacter) -> String {
    let parts: Vec<String> = c.parts.iter().map(|p| p.to_string()).collect();
    parts.join("x")
}

fn involutions(coset: &Coset, check: bool) -> CmdResult<Output> {
    let alpha = parse_alpha(coset.n, &coset.alpha)?;
    let b = Permutation::parse(coset.n, &coset.b)?;
    let gamma = young_gamma(&alpha, &b)?;
    let value = involutions_in_young_coset(&alpha, &b)?;
    let mut out = Output::new();
    out.notes.push(format!("Gamma = {}", gamma));
    out.notes.push(format!(
        "Gamma is {}",
        if gamma.is_symmetric() { "symmetric" } else { "not symmetric" }
    ));
    let query = [
        ("n", coset.n.to_string()),
        ("alpha", alpha.to_string()),
        ("b", b.to_cycle_string()),
    ];
    let mut rec = Record::new(&query, value.to_string(), Method::ClosedFormYoung.to_string());
    if check {
        let h = PermGroup::young(&alpha)?;
        let oracle = count_roots_in_coset(&h, &b, 2, &Permutation::identity(coset.n)) as u128;
        out.notes.push(format!("oracle = {}", oracle));
        rec = rec.certified(format!("oracle={}", oracle));
        if oracle != value {
            out.failed = true;
            out.notes.push(format!("MISMATCH: formula {} but enumeration {}", value, oracle));
        }
    }
    out.records.push(rec);
    Ok(out)
}

fn roots(n: usize, alpha: Option<&str>, b: &str, r: u32, check: bool, caps: &Caps) -> CmdResult<Output> {
    if r == 0 {
        return Err(Failure::Usage("r must be positive".into()));
    }
    let mut out = Output::new();
    let id = Permutation::identity(n);
    let (query, value, method, oracle): (Vec<(&str, String)>, Rational, &str, Option<u128>) = match alpha {
        None => {
            let value = q(recurrence_table(n, r)?[n] as i64);
            let oracle = if check {
                Some(root_count_group(&*symmetric(n, caps)?, r) as u128)
            } else {
                None
            };
            (vec![("n", n.to_string()), ("r", r.to_string())], value, "recurrence", oracle)
        }
        Some(text) => {
            let alpha = parse_alpha(n, text)?;
            let b = Permutation::parse(n, b)?;
            let g = symmetric(n, caps)?;
            let h = Arc::new(PermGroup::young(&alpha)?);
            let e = coset_root_expansion(g, h.clone(), &b, r)?;
            let oracle = check.then(|| count_roots_in_coset(&h, &b, r, &id) as u128);
            (
                vec![
                    ("n", n.to_string()),
                    ("alpha", alpha.to_string()),
                    ("b", b.to_cycle_string()),
                    ("r", r.to_string()),
                ],
                e.evaluate(&id),
                "formula",
                oracle,
            )
        }
    };
    let mut rec = Record::rational(&query, &value, method);
    if let Some(o) = oracle {
        rec = rec.certified(format!("oracle={}", o));
        if value != q(o as i64) {
            out.failed = true;
            out.notes
                .push(format!("MISMATCH: {} gives {} but enumeration {}", method, format_rational(&value), o));
        }
    }
    out.records.push(rec);
    Ok(out)
}

fn indicator(coset: &Coset, r: u32, caps: &Caps) -> CmdResult<Output> {
    if r == 0 {
        return Err(Failure::Usage("r must be positive".into()));
    }
    let n = coset.n;
    let alpha = parse_alpha(n, &coset.alpha)?;
    let b = Permutation::parse(n, &coset.b)?;
    let g = symmetric(n, caps)?;
    let gset = Arc::new(GSet::ordered_set_partitions(g, &alpha)?);
    let alg = FaceAlgebra::with_cap(gset.clone(), caps.ambient)?;
    let x = gset.base_point();
    let y = gset.image_of_base(&b)?;
    let data = gset.two_point_stabilizer(x, y)?;
    let young = data.young.expect("base point of a set-partition space");
    let integral = alg.integral_r_closed(r);
    let divisor_case = alpha.parts() == [n - 1, 1] && x != y && n >= 2;

    let mut out = Output::new();
    out.notes.push(format!("Gamma = {}", young.gamma));
    out.notes.push(format!(
        "orbital is {}",
        if young.gamma.is_symmetric() { "symmetric" } else { "not symmetric" }
    ));
    for lm in PartitionMatrix::all(&young.gamma) {
        let query = [
            ("n", n.to_string()),
            ("alpha", alpha.to_string()),
            ("b", b.to_cycle_string()),
            ("r", r.to_string()),
            ("lambda", lm.to_string()),
        ];
        let chi = twist_by_psi(lm.character_on(&young.intervals)?, &young);
        let m = InducedModule::induce(alg.clone(), x, y, young_representation(data.k.clone(), &young, &lm)?)?;
        let mut values = vec![
            (Method::Formula, fs_formula(&gset, x, y, &chi, r)),
            (Method::DirectTrace, m.trace(&integral)?),
        ];
        if (m.dim() as u128).pow(r) <= caps.tensor as u128 {
            values.push((Method::NuR, m.nu_r(r, caps.tensor)?));
        }
        if r == 2 {
            values.push((Method::ClosedFormYoung, q(fs2_young(&young.gamma, &lm)?)));
        }
        if divisor_case {
            values.push((Method::DivisorSum, fs_r_divisor_sum(n, &chi, r)?));
        }
        if values.iter().any(|(_, v)| *v != values[0].1) {
            out.failed = true;
            let all: Vec<String> = values
                .iter()
                .map(|(meth, v)| format!("{}={}", meth, format_rational(v)))
                .collect();
            out.notes.push(format!("MISMATCH at Lambda = {}: {}", lm, all.join(", ")));
        }
        for (meth, v) in &values {
            out.records.push(Record::rational(&query, v, meth.to_string()));
        }
    }
    Ok(out)
}

fn expansion(n: usize, alpha: Option<&str>, b: &str, r: u32, check: bool, caps: &Caps) -> CmdResult<Output> {
    if r == 0 || n == 0 {
        return Err(Failure::Usage("need n ≥ 1 and r ≥ 1".into()));
    }
    let alpha = match alpha {
        Some(t) => parse_alpha(n, t)?,
        None if n >= 2 => Composition::new(vec![n - 1, 1])?,
        None => Composition::new(vec![1])?,
    };
    let b = Permutation::parse(n, b)?;
    let g = symmetric(n, caps)?;
    let h = Arc::new(PermGroup::young(&alpha)?);
    let e = coset_root_expansion(g, h.clone(), &b, r)?;
    let irr = irreducibles_of(&e.k).expect("expansion found the irreducibles of K");
    let support = if e.support_is_all_of_k {
        "support=K".to_string()
    } else {
        format!("support={} of {} classes", e.support_classes.len(), e.k.conjugacy_classes().classes.len())
    };
    let mut out = Output::new();
    out.notes.push(format!("|K| = {}, {}", e.k.order(), support));
    for (chi, c) in irr.iter().zip(&e.coefficients) {
        let query = [
            ("n", n.to_string()),
            ("alpha", alpha.to_string()),
            ("b", b.to_cycle_string()),
            ("r", r.to_string()),
            ("chi", character_label(chi)),
        ];
        out.records
            .push(Record::rational(&query, c, Method::Formula.to_string()).certified(support.clone()));
    }
    if check {
        for a in h.elements() {
            let oracle = count_roots_in_coset(&h, &b, r, a);
            let predicted = e.evaluate(a);
            if predicted != q(oracle as i64) {
                out.failed = true;
                out.notes.push(format!(
                    "MISMATCH at a = {}: expansion {} but enumeration {}",
                    a,
                    format_rational(&predicted),
                    oracle
                ));
                break;
            }
        }
        if !out.failed {
            out.notes.push(format!("checked against enumeration on all {} elements of H", h.order()));
        }
    }
    Ok(out)
}

fn verify(suite: &str, max_n: Option<usize>, r: Option<u32>, m: Option<usize>, caps: Caps, format: Format) -> CmdResult<bool> {
    if suite != "all" && !suites::SUITES.contains(&suite) {
        return Err(Failure::Usage(format!(
            "unknown suite {}; expected all or one of {}",
            suite,
            suites::SUITES.join(", ")
        )));
    }
    let params = SuiteParams { max_n, r, m, caps };
    let reports: Vec<SuiteReport> = suites::run(suite, &params)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize")),
        Format::Csv => {
            let rs: Vec<Record> = reports
                .iter()
                .map(|s| {
                    Record::new(
                        &[("suite", s.suite.clone()), ("instances", s.instances.to_string())],
                        s.failures.to_string(),
                        "verify",
                    )
                    .certified(s.first_failure.clone().unwrap_or_else(|| "none".into()))
                })
                .collect();
            print!("{}", to_csv(&rs));
        }
        Format::Plain => {
            for s in &reports {
                println!(
                    "{} {}: {} instances, {} failures",
                    if s.passed() { "PASS" } else { "FAIL" },
                    s.suite,
                    s.instances,
                    s.failures
                );
            }
        }
    }
    let mut ok = true;
    for s in &reports {
        if let Some(f) = &s.first_failure {
            eprintln!("{}: first failure: {}", s.suite, f);
        }
        ok &= s.passed();
    }
    Ok(ok)
}

fn tables(kind: TableKind, max_n: usize, r: u32) -> CmdResult<Output> {
    let mut out = Output::new();
    match kind {
        TableKind::Characters => {
            let t = CharacterTable::symmetric(max_n);
            for (lam, row) in t.irreducibles.iter().zip(&t.values) {
                for (mu, v) in t.classes.iter().zip(row) {
                    let query = [
                        ("lambda", lam.to_string()),
                        ("class", CharacterTable::class_representative(mu).to_cycle_string()),
                    ];
                    out.records.push(Record::new(&query, v.to_string(), "murnaghan-nakayama"));
                }
            }
        }
        TableKind::Recurrence => {
            if r == 0 {
                return Err(Failure::Usage("r must be positive".into()));
            }
            for (n, v) in recurrence_table(max_n, r)?.iter().enumerate() {
                let query = [("n", n.to_string()), ("r", r.to_string())];
                out.records.push(Record::new(&query, v.to_string(), "recurrence"));
            }
        }
        TableKind::Involutions => {
            for m in 0..=max_n {
                let query = [("n", m.to_string())];
                out.records.push(Record::new(&query, stab_total(m).to_string(), "formula"));
            }
        }
    }
    Ok(out)
}

fn caps_for(cli: &Cli, base: Caps) -> CmdResult<Caps> {
    let mut caps = base.with_env()?;
    if let Some(c) = &cli.cap {
        caps.ambient = parse_cap(c)?;
    }
    Ok(caps)
}

fn run(cli: &Cli) -> CmdResult<bool> {
    let output = match &cli.command {
        Command::Involutions { coset, check } => involutions(coset, *check)?,
        Command::Roots { n, alpha, b, r, check } => {
            roots(*n, alpha.as_deref(), b, *r, *check, &caps_for(cli, Caps::default())?)?
        }
        Command::Indicator { coset, r } => indicator(coset, *r, &caps_for(cli, Caps::default())?)?,
        Command::Expansion { n, alpha, b, r, check } => {
            expansion(*n, alpha.as_deref(), b, *r, *check, &caps_for(cli, Caps::default())?)?
        }
        Command::Verify { suite, max_n, r, m } => {
            return verify(suite, *max_n, *r, *m, caps_for(cli, Caps::for_suites())?, cli.format);
        }
        Command::Tables { kind, max_n, r } => tables(*kind, *max_n, *r)?,
    };
    output.print(cli.format);
    Ok(!output.failed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error: cannot start {} workers: {}", w, e);
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFY),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Cap(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(EXIT_CAP)
        }
    }
}
