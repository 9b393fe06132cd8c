use std::io::Write;
use std::time::{Duration, Instant};

use ratapprox::cf::{expand, rcf_convergents_up_to};
use ratapprox::scan::{
    brain_sequence, brain_sequence_from_records, render_key, scan_records_parallel, table_from_records, Kind, TableSelect,
};


use crate::{CliError, RunConfig, StyleChoice, Table, EXIT_OK};

/// Rows `k, q, p, sign, key` for the best approximations of one kind.
pub fn cmd_scan(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let alpha = config.alpha()?;
    let n = config.limit()?;
    let style = config.render_style(StyleChoice::Pretty);
    let records = scan_records_parallel(alpha, n, config.threads)?;
    let seq = brain_sequence_from_records(alpha, n, config.kind, records.into_iter().map(Ok))?;
    let mut table = Table::new(["k", "q", "p", "sign", "key"]);
    for item in &seq.items {
        let r = &item.record;
        table.push([
            item.k.to_string(),
            r.q.to_string(),
            r.p.to_string(),
            r.side.to_string(),
            render_key(alpha, r, config.kind, style)?,
        ]);
    }
    table.write(config.format, out)?;
    Ok(EXIT_OK)
}

/// The spreadsheet view: every denominator sorted by the kind's key.
pub fn cmd_table(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let alpha = config.alpha()?;
    let n = config.limit()?;
    let style = config.render_style(StyleChoice::Paper);
    let select = config.select.clone().unwrap_or_else(|| TableSelect::default_for(config.kind));
    let records = scan_records_parallel(alpha, n, config.threads)?;
    let rows = table_from_records(alpha, records, config.kind, &select)?;
    let mut table = Table::new(["q", "p", "sign", "key"]);
    for r in &rows {
        table.push([r.q.to_string(), r.p.to_string(), r.side.to_string(), render_key(alpha, r, config.kind, style)?]);
    }
    table.write(config.format, out)?;
    Ok(EXIT_OK)
}

/// Quotients on the first line as `a0; s1 a1, ...`, then one convergent
/// per line.
pub fn cmd_cf(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let alpha = config.alpha()?;
    let e = expand(alpha, config.algorithm, config.terms)?;
    writeln!(out, "{e}")?;
    for c in &e.convergents {
        writeln!(out, "{c}")?;
    }
    Ok(EXIT_OK)
}

fn millis(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e3)
}

/// Wall time of the kind-II scan against the continued fraction reaching
/// the same denominators.
pub fn cmd_bench(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let alpha = config.alpha()?;
    if config.limits.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage("--max-q values must be strictly ascending".into()));
    }
    let mut table = Table::new(["N", "t_scan_ms", "t_cf_ms", "ratio"]);
    let mut times = Vec::new();
    for &n in &config.limits {
        let start = Instant::now();
        let seq = brain_sequence(alpha, n, Kind::II)?;
        let t_scan = start.elapsed();
        let start = Instant::now();
        let conv = rcf_convergents_up_to(alpha, n)?;
        let t_cf = start.elapsed();
        debug_assert!(conv.len() >= seq.len());
        let ratio = t_scan.as_secs_f64() / t_cf.as_secs_f64().max(1e-9);
        table.push([n.to_string(), millis(t_scan), millis(t_cf), format!("{ratio:.1}")]);
        times.push((n, t_scan, t_cf));
    }
    table.write(config.format, out)?;
    if let [(n0, s0, c0), .., (n1, s1, c1)] = times.as_slice() {
        let growth = n1 / n0;
        let scan_factor = s1.as_secs_f64() / s0.as_secs_f64().max(1e-9);
        let cf_factor = c1.as_secs_f64() / c0.as_secs_f64().max(1e-9);
        let looks_right = scan_factor >= growth as f64 && cf_factor < growth as f64;
        writeln!(
            out,
            "# N grew x{growth}: scan time x{scan_factor:.1}, cf time x{cf_factor:.1} ({})",
            if looks_right { "scan superlinear, cf near flat" } else { "unexpected scaling; timings are noisy" }
        )?;
    }
    Ok(EXIT_OK)
}
