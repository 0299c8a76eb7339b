use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use brauer_core::algebra::verify_relations;
use brauer_core::combinatorics::{double_factorial_odd, standard_tableaux, Partition};
use brauer_core::duality::{
    base_change_report, commutant_dim, kernel_dim_formula, kernel_report, verify_annihilator_theorem, Budget,
    KernelReport,
};
use brauer_core::exact_linalg::{IntPolys, Integers, PrimeField, Rationals, Ring};
use brauer_core::specht::{
    filtration_quotient_rank, jm_eigencheck, m_lambda_basis, m_lambda_strict, submodule_closure_check,
};
use brauer_core::tensor_rep::FormKind;
use brauer_core::Error;

const VERIFIED: u8 = 0;
const CHECK_FAILED: u8 = 1;
const INVALID: u8 = 2;

/// Exact checks of the Brauer algebra action on tensor space.
#[derive(Parser, Debug)]
#[command(name = "brauer", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the defining relations on generator diagrams.
    VerifyRelations {
        #[arg(long)]
        n: usize,
        /// An integer, or `x` for the generic parameter.
        #[arg(long, default_value = "x", allow_hyphen_values = true)]
        delta: String,
        /// Defaults to `zx` for `--delta x` and `z` otherwise.
        #[arg(long)]
        ring: Option<RingArg>,
        #[command(flatten)]
        out: Output,
    },
    /// Diagram count, and with `--m` the predicted kernel dimension.
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// The kernel of the action on `V^⊗n`.
    Kernel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "q")]
        ring: RingArg,
        #[arg(long, default_value = "split")]
        form: FormKind,
        /// Compare the kernel with the hook module, or check it is zero when m >= n.
        #[arg(long)]
        check_theorem: bool,
        /// Include the basis vectors in the report.
        #[arg(long)]
        export_basis: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Build `M^λ` and run the optional certifications.
    Specht {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "q")]
        ring: RingArg,
        #[arg(long)]
        filtration: bool,
        #[arg(long)]
        jm_check: bool,
        #[arg(long)]
        closure: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Dimension of the commutant of the Brauer action.
    Commutant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "q")]
        ring: RingArg,
        #[arg(long, default_value = "split")]
        form: FormKind,
        /// Also compare kernel and commutant dimensions over these primes.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Print the `{Y_{ν,t}}` basis of `M^λ` in diagram coordinates.
    Basis {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "z")]
        ring: RingArg,
        /// Only `ν` strictly dominating `λ`.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Sweep kernel checks over a grid of `(n, m)` and rings.
    Report {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_m: usize,
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        no_timings: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args, Debug)]
struct Output {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Leave wall-clock times out so reports are byte-stable.
    #[arg(long)]
    no_timings: bool,
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    #[arg(long)]
    max_diagrams: Option<u128>,
    #[arg(long)]
    max_support: Option<u128>,
    #[arg(long)]
    max_unknowns: Option<u128>,
    #[arg(long)]
    max_module_rows: Option<u128>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            max_diagrams: self.max_diagrams.unwrap_or(d.max_diagrams),
            max_support_entries: self.max_support.unwrap_or(d.max_support_entries),
            max_commutant_unknowns: self.max_unknowns.unwrap_or(d.max_commutant_unknowns),
            max_module_rows: self.max_module_rows.unwrap_or(d.max_module_rows),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RingArg {
    Q,
    Z,
    Zp(u64),
    Zx,
}

impl FromStr for RingArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q" => Ok(RingArg::Q),
            "z" => Ok(RingArg::Z),
            "zx" => Ok(RingArg::Zx),
            other => other
                .strip_prefix("zp:")
                .and_then(|p| p.parse().ok())
                .map(RingArg::Zp)
                .ok_or_else(|| format!("unknown ring {s:?} (expected q, z, zp:P or zx)")),
        }
    }
}

/// Runs `$body` with `$r` bound to the concrete ring. `Z[x]` is refused,
/// since elimination is not available over it.
macro_rules! with_elimination_ring {
    ($arg:expr, |$r:ident| $body:expr) => {
        match $arg {
            RingArg::Q => {
                let $r = Rationals;
                $body
            }
            RingArg::Z => {
                let $r = Integers;
                $body
            }
            RingArg::Zp(p) => {
                let $r = PrimeField::new(p)?;
                $body
            }
            RingArg::Zx => Err(Error::Precondition(
                "this command needs q, z or zp:P; elimination over Z[x] is not supported".into(),
            )),
        }
    };
}

/// Anything that makes the request itself invalid; exits with code 2.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

struct Outcome {
    report: Value,
    passed: bool,
}

fn emit(out: &Output, report: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(report).expect("report serializes") + "\n";
    match &out.json {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check_weight(lambda: &Partition, n: usize) -> Result<(), Failure> {
    if lambda.weight() != n {
        return Err(Failure(format!(
            "--lambda {lambda} is a partition of {}, not of {n}",
            lambda.weight()
        )));
    }
    Ok(())
}

fn verify_relations_cmd(n: usize, delta: &str, ring: Option<RingArg>) -> Result<Outcome, Failure> {
    let generic = delta.trim() == "x";
    let ring = ring.unwrap_or(if generic { RingArg::Zx } else { RingArg::Z });
    let report = match ring {
        RingArg::Zx => serde_json::to_value(verify_relations(IntPolys, n, IntPolys.parse(delta)?)?),
        RingArg::Z => serde_json::to_value(verify_relations(Integers, n, Integers.parse(delta)?)?),
        RingArg::Q => serde_json::to_value(verify_relations(Rationals, n, Rationals.parse(delta)?)?),
        RingArg::Zp(p) => {
            let f = PrimeField::new(p)?;
            let d = f.parse(delta)?;
            serde_json::to_value(verify_relations(f, n, d)?)
        }
    }
    .expect("report serializes");
    let passed = report["all_passed"].as_bool() == Some(true);
    Ok(Outcome { report, passed })
}

fn dim_cmd(n: usize, m: Option<usize>) -> Result<Outcome, Failure> {
    if n == 0 {
        return Err(Failure("n must be at least 1".into()));
    }
    let mut report = json!({"n": n, "diagrams": double_factorial_odd(n)});
    if let Some(m) = m {
        let terms: Vec<Value> = Partition::all(n)
            .into_iter()
            .filter(|nu| nu.first() > m)
            .map(|nu| json!({"nu": nu.to_string(), "tilde": nu.tilde().to_string(), "dim": nu.tilde().hook_dim()}))
            .collect();
        report["m"] = json!(m);
        report["kernel_dim_formula"] = json!(kernel_dim_formula(n, m));
        report["terms"] = Value::Array(terms);
    }
    Ok(Outcome { report, passed: true })
}

#[allow(clippy::too_many_arguments)]
fn kernel_run(
    n: usize,
    m: usize,
    ring: RingArg,
    form: FormKind,
    check_theorem: bool,
    export_basis: bool,
    budget: &Budget,
) -> Result<KernelReport, Error> {
    if let RingArg::Zp(2) = ring {
        return Err(Error::EvenCharacteristic);
    }
    with_elimination_ring!(ring, |r| {
        if check_theorem && n > m {
            verify_annihilator_theorem(n, m, r, form, budget, export_basis)
        } else {
            kernel_report(n, m, r, form, budget, export_basis)
        }
    })
}

/// With `--check-theorem` and `m >= n` the claim is that the kernel is zero.
fn kernel_passed(r: &KernelReport, check_theorem: bool) -> bool {
    r.theorem_verified && (!check_theorem || r.n > r.m || r.kernel_dim == 0)
}

#[allow(clippy::too_many_arguments)]
fn kernel_cmd(
    n: usize,
    m: usize,
    ring: RingArg,
    form: FormKind,
    check_theorem: bool,
    export_basis: bool,
    budget: &Budget,
    no_timings: bool,
) -> Result<Outcome, Failure> {
    let mut report = kernel_run(n, m, ring, form, check_theorem, export_basis, budget)?;
    if no_timings {
        report = report.without_timing();
    }
    Ok(Outcome {
        passed: kernel_passed(&report, check_theorem),
        report: serde_json::to_value(&report).expect("report serializes"),
    })
}

fn specht_cmd(
    lambda: &Partition,
    n: usize,
    ring: RingArg,
    filtration: bool,
    jm: bool,
    closure: bool,
) -> Result<Outcome, Failure> {
    check_weight(lambda, n)?;
    let basis = m_lambda_basis(Integers, 0.into(), lambda)?;
    let expected: usize = Partition::all(n)
        .into_iter()
        .filter(|nu| nu.dominates(lambda).unwrap_or(false))
        .map(|nu| standard_tableaux(&nu.tilde()).len())
        .sum();
    let mut passed = basis.len() == expected;
    let mut report = json!({"lambda": lambda.to_string(), "n": n, "basis_size": basis.len()});
    if filtration {
        let rank: Result<usize, Error> = with_elimination_ring!(ring, |r| filtration_quotient_rank(r, lambda));
        let rank = rank?;
        let hook = lambda.tilde().hook_dim();
        passed &= rank as u128 == hook;
        report["filtration"] = json!({"ring": ring_name(ring), "quotient_rank": rank, "specht_dim": hook});
    }
    if jm {
        let r = jm_eigencheck(lambda)?;
        passed &= r.passed;
        report["jm"] = serde_json::to_value(r).expect("report serializes");
    }
    if closure {
        let r = submodule_closure_check(lambda)?;
        passed &= r.passed;
        report["closure"] = serde_json::to_value(r).expect("report serializes");
    }
    report["passed"] = json!(passed);
    Ok(Outcome { report, passed })
}

fn ring_name(ring: RingArg) -> String {
    match ring {
        RingArg::Q => Rationals.descriptor(),
        RingArg::Z => Integers.descriptor(),
        RingArg::Zp(p) => format!("Fp:{p}"),
        RingArg::Zx => IntPolys.descriptor(),
    }
}

fn commutant_cmd(
    n: usize,
    m: usize,
    ring: RingArg,
    form: FormKind,
    primes: &[u64],
    budget: &Budget,
) -> Result<Outcome, Failure> {
    if let RingArg::Zp(2) = ring {
        return Err(Error::EvenCharacteristic.into());
    }
    if primes.contains(&2) {
        return Err(Error::EvenCharacteristic.into());
    }
    if !primes.is_empty() {
        let r = base_change_report(n, m, primes, form, budget)?;
        let passed = r.agree;
        return Ok(Outcome {
            report: serde_json::to_value(r).expect("report serializes"),
            passed,
        });
    }
    let dim: Result<usize, Error> = with_elimination_ring!(ring, |r| commutant_dim(n, m, r, form, budget));
    Ok(Outcome {
        report: json!({"n": n, "m": m, "ring": ring_name(ring), "form": form, "commutant_dim": dim?}),
        passed: true,
    })
}

fn basis_cmd(lambda: &Partition, n: usize, ring: RingArg, strict: bool) -> Result<Outcome, Failure> {
    check_weight(lambda, n)?;
    let report: Result<Value, Error> = match ring {
        RingArg::Q => family(Rationals, Rationals.zero(), lambda, strict),
        RingArg::Z => family(Integers, 0.into(), lambda, strict),
        RingArg::Zp(p) => family(PrimeField::new(p)?, 0, lambda, strict),
        RingArg::Zx => family(IntPolys, IntPolys.zero(), lambda, strict),
    };
    Ok(Outcome {
        report: report?,
        passed: true,
    })
}

fn family<R: Ring>(ring: R, delta: R::Elem, lambda: &Partition, strict: bool) -> Result<Value, Error> {
    let b = if strict {
        m_lambda_strict(ring, delta, lambda)?
    } else {
        m_lambda_basis(ring, delta, lambda)?
    };
    Ok(b.to_json())
}

struct Cell {
    n: usize,
    m: usize,
    ring: String,
    status: CellStatus,
}

enum CellStatus {
    Done { report: KernelReport, ms: u64 },
    Skipped(String),
}

fn report_cmd(
    max_n: usize,
    max_m: usize,
    primes: &[u64],
    out: Option<&PathBuf>,
    csv: Option<&PathBuf>,
    no_timings: bool,
    budget: &Budget,
) -> Result<Outcome, Failure> {
    if let Some(p) = primes.iter().find(|&&p| p == 2) {
        return Err(Failure(format!(
            "prime {p}: even characteristic is outside the scope of the sweep"
        )));
    }
    let mut rings = vec![RingArg::Q];
    for &p in primes {
        PrimeField::new(p)?;
        rings.push(RingArg::Zp(p));
    }
    let mut cells = Vec::new();
    for n in 1..=max_n {
        for m in 1..=max_m {
            for &ring in &rings {
                let start = Instant::now();
                let status = match kernel_run(n, m, ring, FormKind::Split, true, false, budget) {
                    Ok(report) => CellStatus::Done {
                        report: report.without_timing(),
                        ms: start.elapsed().as_millis() as u64,
                    },
                    Err(e @ Error::BudgetExceeded(_)) => CellStatus::Skipped(e.to_string()),
                    Err(e) => return Err(e.into()),
                };
                cells.push(Cell {
                    n,
                    m,
                    ring: ring_name(ring),
                    status,
                });
            }
        }
    }
    let mut failing = Vec::new();
    let mut rows = Vec::new();
    let mut table = String::from("n,m,ring,kernel_dim,formula_dim,verified,ms\n");
    for c in &cells {
        match &c.status {
            CellStatus::Done { report, ms } => {
                let ok = kernel_passed(report, true);
                if !ok {
                    failing.push(json!({"n": c.n, "m": c.m, "ring": c.ring}));
                }
                let mut row = serde_json::to_value(report).expect("report serializes");
                row["status"] = json!(if ok { "verified" } else { "failed" });
                if !no_timings {
                    row["elapsed_ms"] = json!(ms);
                }
                rows.push(row);
                let ms = if no_timings { String::new() } else { ms.to_string() };
                let _ = writeln!(
                    table,
                    "{},{},{},{},{},{},{}",
                    c.n, c.m, c.ring, report.kernel_dim, report.formula_dim, ok, ms
                );
            }
            CellStatus::Skipped(reason) => {
                rows.push(json!({"n": c.n, "m": c.m, "ring": c.ring, "status": "skipped", "reason": reason}));
                let _ = writeln!(table, "{},{},{},,,skipped,", c.n, c.m, c.ring);
            }
        }
    }
    let passed = failing.is_empty();
    let report = json!({
        "max_n": max_n,
        "max_m": max_m,
        "rings": rings.iter().map(|&r| ring_name(r)).collect::<Vec<_>>(),
        "cells": rows,
        "failing": failing,
        "all_verified": passed,
    });
    if let Some(path) = csv {
        fs::write(path, table).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
    }
    emit(
        &Output {
            json: out.cloned(),
            no_timings,
        },
        &report,
    )?;
    Ok(Outcome {
        report: Value::Null,
        passed,
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let (outcome, out) = match cli.command {
        Command::VerifyRelations { n, delta, ring, out } => (verify_relations_cmd(n, &delta, ring)?, out),
        Command::Dim { n, m, out } => (dim_cmd(n, m)?, out),
        Command::Kernel {
            n,
            m,
            ring,
            form,
            check_theorem,
            export_basis,
            budget,
            out,
        } => (
            kernel_cmd(
                n,
                m,
                ring,
                form,
                check_theorem,
                export_basis,
                &budget.budget(),
                out.no_timings,
            )?,
            out,
        ),
        Command::Specht {
            lambda,
            n,
            ring,
            filtration,
            jm_check,
            closure,
            out,
        } => (specht_cmd(&lambda, n, ring, filtration, jm_check, closure)?, out),
        Command::Commutant {
            n,
            m,
            ring,
            form,
            primes,
            budget,
            out,
        } => (commutant_cmd(n, m, ring, form, &primes, &budget.budget())?, out),
        Command::Basis {
            lambda,
            n,
            ring,
            strict,
            out,
        } => (basis_cmd(&lambda, n, ring, strict)?, out),
        Command::Report {
            max_n,
            max_m,
            primes,
            out,
            csv,
            no_timings,
            budget,
        } => {
            let o = report_cmd(
                max_n,
                max_m,
                &primes,
                out.as_ref(),
                csv.as_ref(),
                no_timings,
                &budget.budget(),
            )?;
            return Ok(if o.passed { VERIFIED } else { CHECK_FAILED });
        }
    };
    emit(&out, &outcome.report)?;
    Ok(if outcome.passed { VERIFIED } else { CHECK_FAILED })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INVALID } else { VERIFIED });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(INVALID)
        }
    }
}
