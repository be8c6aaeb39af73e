//! Argument parsing and the subcommands.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use sergeev_core::fusion::{fusion_constant, fusion_evaluate_in};
use sergeev_core::idempotents::idempotent_in;
use sergeev_core::repmodules::{module, Flavor, Representation};
use sergeev_core::suites::Suite;
use sergeev_core::tableaux::{enumerate_standard_tableaux, enumerate_strict_partitions};
use sergeev_core::{Sergeev, ShiftedTableau, StrictPartition};

use crate::json::{element_to_json, rep_to_json, to_pretty};
use crate::report::run_parallel;

const ALGEBRA_BOUND: usize = 5;
const MODULE_BOUND: usize = 7;
const ENUMERATE_BOUND: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "sergeev",
    version,
    about = "Exact computation in the Sergeev superalgebra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Strict partitions of n with g_lambda and tableau counts.
    Enumerate(EnumerateArgs),
    /// Run verification suites; exit code 0 iff every check passes.
    Verify(VerifyArgs),
    /// The idempotent e_U as element JSON.
    Idempotent(IdempotentArgs),
    /// Generator matrices of a module.
    Rep(RepArgs),
    /// The fusion-procedure value for a tableau.
    Fusion(FusionArgs),
    /// Write one of the JSON outputs to a file.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Count barred tableaux.
    #[arg(long)]
    pub barred: bool,
    /// Also list the tableaux.
    #[arg(long)]
    pub list: bool,
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub unsafe_max_n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A suite name or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Largest n; defaults to the suite's safety bound.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Raise the safety bound.
    #[arg(long)]
    pub unsafe_max_n: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct IdempotentArgs {
    /// Optional; must agree with the tableau.
    #[arg(long)]
    pub n: Option<usize>,
    /// Rows separated by `/`, entries by `,`, bars as a `b` suffix: `1,2,4b/3`.
    #[arg(long)]
    pub tableau: String,
    #[arg(long)]
    pub unsafe_max_n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RepArgs {
    /// Parts separated by commas: `3,1`.
    #[arg(long)]
    pub lambda: String,
    /// `uhat`, `seminormal` or `spin`.
    #[arg(long, default_value = "spin")]
    pub flavor: String,
    /// `text` or `json`.
    #[arg(long, default_value = "text")]
    pub format: String,
    #[arg(long)]
    pub unsafe_max_n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FusionArgs {
    #[arg(long)]
    pub tableau: String,
    /// Compare with (n!/g_lambda) e_U; exit code 1 on mismatch.
    #[arg(long)]
    pub check_against_jm: bool,
    #[arg(long)]
    pub unsafe_max_n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(subcommand)]
    pub kind: ExportKind,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ExportKind {
    Idempotent(IdempotentArgs),
    Rep(RepArgs),
    Fusion(FusionArgs),
}

fn check_bound(what: &str, n: usize, bound: usize, raised: Option<usize>) -> Result<()> {
    let cap = raised.unwrap_or(bound);
    if n > cap {
        bail!(
            "{} with n = {} exceeds the safety bound {}; pass --unsafe-max-n to raise it",
            what,
            n,
            cap
        );
    }
    Ok(())
}

fn parse_tableau(text: &str) -> Result<ShiftedTableau> {
    let t: ShiftedTableau = text
        .parse()
        .with_context(|| format!("reading tableau {:?}", text))?;
    if !t.is_standard() {
        bail!("tableau {} is not standard", t);
    }
    Ok(t)
}

/// Runs a parsed command line. `Ok(false)` means a check failed.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<bool> {
    match cli.command {
        Command::Enumerate(a) => enumerate(&a, out),
        Command::Verify(a) => verify(&a, out),
        Command::Idempotent(a) => {
            out.write_all(to_pretty(&idempotent_json(&a)?).as_bytes())?;
            Ok(true)
        }
        Command::Rep(a) => {
            let rep = build_rep(&a)?;
            match a.format.as_str() {
                "json" => out.write_all(to_pretty(&rep_to_json(&rep)).as_bytes())?,
                "text" => write_rep_text(&rep, out)?,
                f => bail!("unknown format {:?}", f),
            }
            Ok(true)
        }
        Command::Fusion(a) => {
            let (v, ok) = fusion_json(&a)?;
            out.write_all(to_pretty(&v).as_bytes())?;
            Ok(ok)
        }
        Command::Export(a) => export(a, out),
    }
}

fn enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<bool> {
    if a.n == 0 {
        bail!("n must be at least 1");
    }
    check_bound("enumerate", a.n, ENUMERATE_BOUND, a.unsafe_max_n)?;
    let mut rows = Vec::new();
    let (mut total, mut sum_sq) = (0u128, 0u128);
    let mut formula_ok = true;
    for shape in enumerate_strict_partitions(a.n) {
        let tableaux = enumerate_standard_tableaux(&shape, a.barred);
        let g = if a.barred {
            enumerate_standard_tableaux(&shape, false).len()
        } else {
            tableaux.len()
        } as u128;
        formula_ok &= shape.g_lambda_formula()? as u128 == g;
        total += tableaux.len() as u128;
        sum_sq += (1u128 << (a.n - shape.len())) * g * g;
        rows.push((shape, g, tableaux));
    }
    let factorial: u128 = (1..=a.n as u128).product();
    let ok = formula_ok && sum_sq == factorial;
    if a.json {
        let parts: Vec<Value> = rows
            .iter()
            .map(|(shape, g, ts)| {
                let mut v = json!({"lambda": shape.parts(), "g": *g as u64, "count": ts.len()});
                if a.list {
                    v["tableaux"] = json!(ts.iter().map(|t| t.to_string()).collect::<Vec<_>>());
                }
                v
            })
            .collect();
        let v = json!({
            "n": a.n,
            "barred": a.barred,
            "partitions": parts,
            "total": total.to_string(),
            "sum_2^(n-l)_g^2": sum_sq.to_string(),
            "n!": factorial.to_string(),
            "consistent": ok,
        });
        out.write_all(to_pretty(&v).as_bytes())?;
    } else {
        writeln!(out, "n = {}", a.n)?;
        writeln!(
            out,
            "lambda\tg\t{}",
            if a.barred {
                "barred tableaux"
            } else {
                "tableaux"
            }
        )?;
        for (shape, g, ts) in &rows {
            writeln!(out, "{}\t{}\t{}", shape, g, ts.len())?;
            if a.list {
                for t in ts {
                    writeln!(out, "  {}", t)?;
                }
            }
        }
        writeln!(out, "total {}", total)?;
        writeln!(
            out,
            "sum 2^(n-l) g^2 = {}, n! = {}: {}",
            sum_sq,
            factorial,
            if ok { "ok" } else { "MISMATCH" }
        )?;
    }
    Ok(ok)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<bool> {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse().map_err(|e| anyhow!("{}", e))?]
    };
    let max_n = a
        .max_n
        .unwrap_or_else(|| suites.iter().map(|s| s.default_bound()).min().unwrap_or(1));
    for s in &suites {
        check_bound(
            &format!("suite {}", s.name()),
            max_n,
            s.default_bound(),
            a.unsafe_max_n,
        )?;
    }
    let reports = run_parallel(&suites, max_n)?;
    let passed = reports.iter().all(|r| r.passed());
    if a.json {
        let v = json!({
            "passed": passed,
            "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        });
        out.write_all(to_pretty(&v).as_bytes())?;
    } else {
        for r in &reports {
            writeln!(out, "{}", r.summary())?;
            write!(out, "{}", r.report)?;
        }
        writeln!(
            out,
            "{}",
            if passed {
                "all checks passed"
            } else {
                "some checks FAILED"
            }
        )?;
    }
    for r in &reports {
        eprintln!("suite {} took {:.3?}", r.suite.name(), r.duration);
    }
    Ok(passed)
}

fn idempotent_json(a: &IdempotentArgs) -> Result<Value> {
    let t = parse_tableau(&a.tableau)?;
    if let Some(n) = a.n {
        if n != t.n() {
            bail!("--n {} does not match a tableau with {} boxes", n, t.n());
        }
    }
    check_bound("idempotent", t.n(), ALGEBRA_BOUND, a.unsafe_max_n)?;
    let g = Sergeev::new(t.n())?;
    Ok(element_to_json(&idempotent_in(&g, &t)?))
}

fn build_rep(a: &RepArgs) -> Result<Representation> {
    let shape: StrictPartition = a
        .lambda
        .parse()
        .with_context(|| format!("reading --lambda {:?}", a.lambda))?;
    let flavor: Flavor = a.flavor.parse()?;
    check_bound("rep", shape.n(), MODULE_BOUND, a.unsafe_max_n)?;
    Ok(module(&shape, flavor)?)
}

fn write_rep_text(rep: &Representation, out: &mut dyn Write) -> Result<()> {
    writeln!(
        out,
        "{} module for lambda = ({}), dim {}",
        rep.flavor.name(),
        rep.shape,
        rep.dim()
    )?;
    writeln!(out, "basis:")?;
    for (k, b) in rep.basis.iter().enumerate() {
        match &b.spin {
            Some(l) => writeln!(out, "  {}: {} [{}]", k, b.tableau, l)?,
            None => writeln!(out, "  {}: {} c^{:b}", k, b.tableau, b.clifford)?,
        }
    }
    for g in &rep.generators {
        writeln!(out, "{} = {:?}", g.label, g.matrix)?;
    }
    Ok(())
}

fn fusion_json(a: &FusionArgs) -> Result<(Value, bool)> {
    let t = parse_tableau(&a.tableau)?;
    check_bound("fusion", t.n(), ALGEBRA_BOUND, a.unsafe_max_n)?;
    let g = Sergeev::new(t.n())?;
    let value = fusion_evaluate_in(&g, &t)?;
    let constant = fusion_constant(&t)?;
    let mut v = json!({
        "tableau": t.to_string(),
        "constant": crate::json::scalar_to_json(&constant),
        "value": element_to_json(&value),
    });
    let mut ok = true;
    if a.check_against_jm {
        ok = value == idempotent_in(&g, &t)?.scale(&constant);
        v["matches_jm"] = json!(ok);
    }
    Ok((v, ok))
}

fn export(a: ExportArgs, out: &mut dyn Write) -> Result<bool> {
    let path = a.out.ok_or_else(|| anyhow!("export needs --out <path>"))?;
    let (v, ok) = match &a.kind {
        ExportKind::Idempotent(x) => (idempotent_json(x)?, true),
        ExportKind::Rep(x) => (rep_to_json(&build_rep(x)?), true),
        ExportKind::Fusion(x) => fusion_json(x)?,
    };
    fs::write(&path, to_pretty(&v)).with_context(|| format!("writing {}", path.display()))?;
    writeln!(out, "wrote {}", path.display())?;
    Ok(ok)
}
