//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use sergeev_core::idempotents::{
    verify_idempotent_system_with, verify_intertwiner_relations, verify_intertwining_property,
    verify_spectral_identity, zeta_basis_rank, IdempotentTree, Intertwiners,
};
use sergeev_core::repmodules::{seminormal_module, spin_module, verify_module_relations};
use sergeev_core::suites::{
    example_fusion_two_one, example_one_row_fusion, example_spin_three_one,
    example_three_box_idempotents, fusion_identities, fusion_spot, fusion_sweep,
    refined_ideal_dimensions, spin_commutants, suite_dimensions,
};
use sergeev_core::tableaux::enumerate_strict_partitions;
use sergeev_core::{Report, Result};

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Result<Outcome> + 'a>);

struct Outcome {
    passed: bool,
    note: String,
}

fn from_report(r: &Report, extra: &str) -> Outcome {
    let note = match r.failures().next() {
        Some(c) => format!(
            "{} checks; first failure: {}{}",
            r.len(),
            c.name,
            c.detail
                .as_deref()
                .map(|d| format!(" [{}]", d))
                .unwrap_or_default()
        ),
        None => format!("{} checks{}", r.len(), extra),
    };
    Outcome {
        passed: r.passed(),
        note,
    }
}

fn timed(r: Report, took: Duration, limit: Duration) -> Outcome {
    let mut out = from_report(&r, &format!(", {:.2?}", took));
    if took >= limit {
        out.passed = false;
        out.note = format!("{}; took {:.2?}, limit {:.0?}", out.note, took, limit);
    }
    out
}

fn criterion_1() -> Result<Outcome> {
    let start = Instant::now();
    let r = example_three_box_idempotents()?;
    Ok(timed(r, start.elapsed(), Duration::from_secs(1)))
}

fn criterion_2(trees: &[IdempotentTree]) -> Result<Outcome> {
    let mut r = Report::new();
    for tree in trees {
        r.extend(verify_idempotent_system_with(tree)?);
    }
    Ok(from_report(&r, ", n = 1..5"))
}

fn criterion_3() -> Result<Outcome> {
    let start = Instant::now();
    let r = suite_dimensions(10)?;
    Ok(timed(r, start.elapsed(), Duration::from_secs(10)))
}

fn criterion_4() -> Result<Outcome> {
    let mut r = Report::new();
    for n in 1..=4 {
        r.extend(fusion_sweep(n)?);
    }
    r.extend(fusion_spot(&[
        "1,2,3,4,5",
        "1,2b,4/3,5",
        "1,2,3b/4,5b",
        "1,2b,3,4b/5",
    ])?);
    r.extend(example_fusion_two_one()?);
    for n in 1..=5 {
        r.extend(example_one_row_fusion(n)?);
    }
    Ok(from_report(&r, ""))
}

fn criterion_5(trees: &[IdempotentTree]) -> Result<Outcome> {
    let mut r = Report::new();
    for tree in &trees[1..4] {
        let phis = Intertwiners::new(tree.sergeev())?;
        r.extend(verify_intertwiner_relations(&phis)?);
        r.extend(verify_intertwining_property(tree, &phis)?);
    }
    Ok(from_report(&r, ", n = 2..4"))
}

fn criterion_6() -> Result<Outcome> {
    let mut r = Report::new();
    for (n, want) in [(2usize, 8usize), (3, 48), (4, 384)] {
        let (rank, _) = zeta_basis_rank(n)?;
        r.check_with(format!("n={}: rank {}", n, want), rank == want, || {
            format!("rank {}", rank)
        });
    }
    Ok(from_report(&r, ", ranks 8, 48, 384"))
}

fn criterion_7(trees: &[IdempotentTree]) -> Result<Outcome> {
    let mut r = Report::new();
    for n in 1..=5 {
        for shape in enumerate_strict_partitions(n) {
            r.merge(
                &format!("J^{}", shape),
                verify_module_relations(&seminormal_module(&shape)?)?,
            );
        }
    }
    for (k, tree) in trees[..4].iter().enumerate() {
        r.extend(refined_ideal_dimensions(tree, k < 3)?);
    }
    Ok(from_report(&r, ""))
}

fn criterion_8() -> Result<Outcome> {
    let mut r = Report::new();
    for n in 1..=5 {
        for shape in enumerate_strict_partitions(n) {
            r.merge(
                &format!("V^{}", shape),
                verify_module_relations(&spin_module(&shape)?)?,
            );
        }
    }
    r.extend(example_spin_three_one()?);
    let mut observed = Vec::new();
    for (shape, c) in spin_commutants(4)? {
        let want = if shape.len() % 2 == 1 { 2 } else { 1 };
        observed.push(format!("({}):{}", shape, c));
        r.check_with(
            format!("V^{}: commutant {} by l parity", shape, want),
            c == want,
            || format!("got {}", c),
        );
    }
    let mut out = from_report(&r, "");
    if !out.passed {
        out.note = format!("{}; commutants {}", out.note, observed.join(" "));
    }
    Ok(out)
}

fn criterion_9() -> Result<Outcome> {
    let mut r = Report::new();
    for n in 2..=4 {
        r.extend(fusion_identities(n)?);
    }
    Ok(from_report(&r, ", n = 2..4"))
}

fn criterion_10(trees: &[IdempotentTree]) -> Result<Outcome> {
    let mut r = Report::new();
    for tree in trees {
        r.record(format!("n={}", tree.n()), verify_spectral_identity(tree)?);
    }
    Ok(from_report(&r, ", n = 1..5"))
}

fn main() -> ExitCode {
    let trees: Vec<IdempotentTree> = (1..=5)
        .map(|n| IdempotentTree::new(n).expect("idempotent tree"))
        .collect();
    let criteria: [Criterion; 10] = [
        ("n = 3 idempotents", Box::new(criterion_1)),
        (
            "idempotent system, n <= 5",
            Box::new(|| criterion_2(&trees)),
        ),
        ("dimension identities, n <= 10", Box::new(criterion_3)),
        (
            "fusion equals Jucys-Murphy idempotents",
            Box::new(criterion_4),
        ),
        ("intertwiners, n <= 4", Box::new(|| criterion_5(&trees))),
        ("zeta basis rank", Box::new(criterion_6)),
        (
            "seminormal modules, n <= 5",
            Box::new(|| criterion_7(&trees)),
        ),
        ("spin modules, n <= 5", Box::new(criterion_8)),
        (
            "fusion projection and resolvent identities, n <= 4",
            Box::new(criterion_9),
        ),
        (
            "spectral identity for x_n, n <= 5",
            Box::new(|| criterion_10(&trees)),
        ),
    ];
    let mut all = true;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = f().unwrap_or_else(|e| Outcome {
            passed: false,
            note: format!("error: {}", e),
        });
        all &= outcome.passed;
        println!(
            "criterion {:>2}: {} {} ({})",
            k + 1,
            if outcome.passed { "PASS" } else { "FAIL" },
            name,
            outcome.note
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
