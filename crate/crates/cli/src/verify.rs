//! The cross-check matrix behind `verify`.

use std::io::Write;

use ratapprox::cf::{first_kind_from_cf, rcf_convergents_up_to, second_kind_convergents};
use ratapprox::dirichlet::{
    census_meets_consecutive_pairs, half_square_census_from_records, hurwitz_scan_from_records,
    legendre_check_from_records, pigeonhole_witness,
};
use ratapprox::fib::{binet_round_check, fib_via_train};
use ratapprox::scan::{
    brain_sequence_from_records, inclusion_from_sequences, scan_records_parallel, ApproxRecord, BrainSequence, Kind,
};
use ratapprox::{AlphaSpec, BigRational, Fraction, Side};

use crate::golden::{compare, golden_tables, waivers, GOLDEN_N};
use crate::{CliError, RunConfig, Table, EXIT_FAILED, EXIT_OK};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub alpha: String,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn find(&self, alpha: &str, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.alpha == alpha && c.name == name)
    }

    fn push(&mut self, alpha: &AlphaSpec, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { alpha: alpha.to_string(), name: name.into(), pass, detail: detail.into() });
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(["alpha", "check", "result", "detail"]);
        for c in &self.checks {
            t.push([c.alpha.clone(), c.name.clone(), if c.pass { "PASS" } else { "FAIL" }.into(), c.detail.clone()]);
        }
        t
    }
}

fn join(fs: &[Fraction]) -> String {
    fs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn fractions_equal(a: &[Fraction], b: &[Fraction]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.same_value(y))
}

fn alternates(seq: &BrainSequence) -> bool {
    seq.items.windows(2).all(|w| w[0].record.side != w[1].record.side)
}

/// Largest `N` used for the pigeonhole sweep.
const PIGEONHOLE_MAX: u64 = 50;
const FIB_TERMS: usize = 90;

fn verify_alpha(report: &mut VerifyReport, alpha: &AlphaSpec, n: u64, records: Vec<ApproxRecord>) -> ratapprox::Result<()> {
    let seq = |kind| brain_sequence_from_records(alpha, n, kind, records.iter().cloned().map(Ok));
    let (first, second, third) = (seq(Kind::I)?, seq(Kind::II)?, seq(Kind::III)?);

    let inc = inclusion_from_sequences(&first, &second, &third);
    let missing = |rel| {
        let w: Vec<Fraction> = inc.witnesses.iter().filter(|w| w.relation == rel).map(|w| w.fraction.clone()).collect();
        if w.is_empty() {
            String::new()
        } else {
            format!("missing {}", join(&w))
        }
    };
    report.push(alpha, "kind II in kind III", inc.second_in_third, missing(ratapprox::scan::Inclusion::SecondInThird));
    report.push(alpha, "kind III in kind I", inc.third_in_first, missing(ratapprox::scan::Inclusion::ThirdInFirst));

    let conv = second_kind_convergents(&rcf_convergents_up_to(alpha, n)?);
    let ok = fractions_equal(&conv, &second.fractions());
    report.push(alpha, "convergents = kind II", ok, format!("{} fractions", conv.len()));

    let semi = first_kind_from_cf(alpha, n)?;
    let ok = fractions_equal(&semi, &first.fractions());
    report.push(alpha, "semiconvergents = kind I", ok, format!("{} fractions", semi.len()));

    report.push(alpha, "kind II alternates", alternates(&second), second.signed_labels().join(" "));

    let legendre = legendre_check_from_records(alpha, &records)?;
    let detail = if legendre.ok() {
        format!("{} fractions checked", legendre.checked.len())
    } else {
        format!("not convergents: {}", join(&legendre.violations))
    };
    report.push(alpha, "legendre criterion", legendre.ok(), detail);

    let census = half_square_census_from_records(alpha, &records)?;
    let ok = census_meets_consecutive_pairs(&second.denominators(), &census);
    report.push(alpha, "census meets kind II pairs", ok, format!("{} denominators", census.len()));

    let mut bad = Vec::new();
    for m in 1..=n.min(PIGEONHOLE_MAX) {
        let w = pigeonhole_witness(alpha, m)?;
        if !(w.bound_ok && (1..=m).contains(&w.q)) {
            bad.push(m.to_string());
        }
    }
    let detail = if bad.is_empty() { format!("N = 1..{}", n.min(PIGEONHOLE_MAX)) } else { format!("N = {}", bad.join(",")) };
    report.push(alpha, "pigeonhole witness", bad.is_empty(), detail);

    if *alpha == AlphaSpec::phi() {
        verify_golden_ratio(report, alpha, &records, &third)?;
    }
    if n == GOLDEN_N {
        let waivers = waivers();
        for golden in golden_tables().into_iter().filter(|g| &g.alpha == alpha) {
            let cmp = compare(&golden, records.clone(), &waivers)?;
            let mut detail = format!("{}/{} cells", cmp.matched, cmp.rows);
            if !cmp.waived.is_empty() {
                let qs: Vec<String> = cmp.waived.iter().map(|w| w.q.to_string()).collect();
                detail.push_str(&format!(", waived q = {}", qs.join(",")));
            }
            if !cmp.ok() {
                detail.push_str(&format!("; {}", cmp.mismatches.join("; ")));
            }
            report.push(alpha, &format!("table {}", golden.number), cmp.ok(), detail);
        }
    }
    Ok(())
}

fn verify_golden_ratio(
    report: &mut VerifyReport,
    alpha: &AlphaSpec,
    records: &[ApproxRecord],
    third: &BrainSequence,
) -> ratapprox::Result<()> {
    let h = hurwitz_scan_from_records(alpha, records)?;
    let half = BigRational::new(1.into(), 2.into());
    let all_below_half = h.rows.iter().all(|r| r.record.key3.hi() < &half);
    let split = h.rows.iter().all(|r| r.below == (r.record.side == Side::Over));
    report.push(
        alpha,
        "hurwitz structure",
        h.monotone() && all_below_half && split,
        format!(
            "{} rows, overestimates increasing: {}, underestimates decreasing: {}, below 1/sqrt5: {}",
            h.rows.len(),
            h.over_increasing,
            h.under_decreasing,
            h.below.len()
        ),
    );
    let census = half_square_census_from_records(alpha, records)?;
    report.push(alpha, "census = kind III", census == third.denominators(), format!("{} denominators", census.len()));

    let fib = fib_via_train(FIB_TERMS)?;
    report.push(alpha, "fibonacci recurrence", fib.satisfies_additive_recurrence(), format!("{FIB_TERMS} terms"));
    let binet = binet_round_check(FIB_TERMS)?;
    report.push(alpha, "fibonacci rounding", binet.all_ok(), format!("{FIB_TERMS} terms"));
    Ok(())
}

pub fn verify(config: &RunConfig) -> Result<VerifyReport, CliError> {
    if config.alphas.is_empty() {
        return Err(CliError::Usage("--alpha is required".into()));
    }
    let n = config.limit()?;
    let mut report = VerifyReport::default();
    for alpha in &config.alphas {
        let records = scan_records_parallel(alpha, n, config.threads)
            .map_err(|e| CliError::Precision(format!("{alpha}: {e}")))?;
        verify_alpha(&mut report, alpha, n, records).map_err(|e| match e {
            ratapprox::Error::PrecisionExhausted(_) => CliError::Precision(format!("{alpha}: {e}")),
            other => CliError::from(other),
        })?;
    }
    Ok(report)
}

/// Prints the matrix and a summary line; exit code 1 if anything failed.
pub fn cmd_verify(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = verify(config)?;
    report.table().write(config.format, out)?;
    let failed = report.failures().count();
    writeln!(out, "# {} checks, {} passed, {} failed", report.checks.len(), report.checks.len() - failed, failed)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
}
