//! Reference tables for `N = 1000` and their comparison with computed
//! tables.

use num_bigint::BigInt;
use ratapprox::render::Style;
use ratapprox::scan::{keys_equal, render_key, table_from_records, ApproxRecord, Kind, TableSelect};
use ratapprox::{AlphaSpec, BigRational, Result};

const SOURCES: [(u8, &str, Kind, &str); 6] = [
    (1, "pi", Kind::I, include_str!("../golden/table1.tsv")),
    (2, "pi", Kind::II, include_str!("../golden/table2.tsv")),
    (3, "pi", Kind::III, include_str!("../golden/table3.tsv")),
    (4, "phi", Kind::I, include_str!("../golden/table4.tsv")),
    (5, "phi", Kind::II, include_str!("../golden/table5.tsv")),
    (6, "phi", Kind::III, include_str!("../golden/table6.tsv")),
];

const WAIVERS: &str = include_str!("../golden/waivers.tsv");

/// The denominator bound the reference tables were computed for.
pub const GOLDEN_N: u64 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub q: u64,
    pub p: BigInt,
    pub sign: char,
    pub key: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenTable {
    pub number: u8,
    pub alpha: AlphaSpec,
    pub kind: Kind,
    pub rows: Vec<GoldenRow>,
}

impl GoldenTable {
    /// Top 20 for kinds I and II, everything below 1 for kind III.
    pub fn select(&self) -> TableSelect {
        TableSelect::default_for(self.kind)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Waiver {
    pub table: u8,
    pub q: u64,
    pub published: String,
    pub exact: String,
}

fn data_lines(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split('\t').collect())
}

pub fn golden_tables() -> Vec<GoldenTable> {
    SOURCES
        .iter()
        .map(|&(number, alpha, kind, text)| GoldenTable {
            number,
            alpha: AlphaSpec::parse(alpha).expect("built-in constant"),
            kind,
            rows: data_lines(text)
                .map(|c| GoldenRow {
                    q: c[0].parse().expect("golden q"),
                    p: c[1].parse().expect("golden p"),
                    sign: c[2].chars().next().expect("golden sign"),
                    key: c[3].to_string(),
                })
                .collect(),
        })
        .collect()
}

pub fn golden_table(number: u8) -> Option<GoldenTable> {
    golden_tables().into_iter().find(|t| t.number == number)
}

pub fn waivers() -> Vec<Waiver> {
    data_lines(WAIVERS)
        .map(|c| Waiver {
            table: c[0].parse().expect("waiver table"),
            q: c[1].parse().expect("waiver q"),
            published: c[2].to_string(),
            exact: c[3].to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Comparison {
    pub table: u8,
    pub rows: usize,
    pub matched: usize,
    pub waived: Vec<Waiver>,
    pub mismatches: Vec<String>,
}

impl Comparison {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Also requires that no waiver was needed.
    pub fn exact(&self) -> bool {
        self.ok() && self.waived.is_empty()
    }
}

/// Compares a reference table against the computed spreadsheet order.
///
/// `records` must be the full scan for `q = 1..=N`. Runs of exactly equal
/// keys have no defined order, so each run is matched against the same
/// number of reference rows as a set.
pub fn compare(golden: &GoldenTable, records: Vec<ApproxRecord>, waivers: &[Waiver]) -> Result<Comparison> {
    let alpha = &golden.alpha;
    let everything = match golden.kind {
        Kind::III => TableSelect::Below(BigRational::from_integer(1.into())),
        _ => TableSelect::Top(records.len()),
    };
    let sorted = table_from_records(alpha, records, golden.kind, &everything)?;
    let mut cmp = Comparison { table: golden.number, rows: golden.rows.len(), ..Default::default() };

    let mut start = 0;
    let mut gi = 0;
    while gi < golden.rows.len() && start < sorted.len() {
        let mut end = start + 1;
        while end < sorted.len() && keys_equal(&sorted[start], &sorted[end], golden.kind) {
            end += 1;
        }
        let group = &sorted[start..end];
        let take = group.len().min(golden.rows.len() - gi);
        for (offset, want) in golden.rows[gi..gi + take].iter().enumerate() {
            let row = gi + offset + 1;
            let Some(got) = group.iter().find(|r| r.q == want.q) else {
                let qs: Vec<String> = group.iter().map(|r| r.q.to_string()).collect();
                cmp.mismatches.push(format!("row {row}: q = {} expected, computed {}", want.q, qs.join("/")));
                continue;
            };
            if got.p != want.p || got.side.symbol() != want.sign {
                cmp.mismatches.push(format!(
                    "row {row}: q = {}: computed {}{}, published {}{}",
                    want.q,
                    got.p,
                    got.side,
                    want.p,
                    want.sign
                ));
                continue;
            }
            let key = render_key(alpha, got, golden.kind, Style::Paper)?;
            if key == want.key {
                cmp.matched += 1;
            } else if let Some(w) = waivers
                .iter()
                .find(|w| w.table == golden.number && w.q == want.q && w.published == want.key && w.exact == key)
            {
                cmp.waived.push(w.clone());
            } else {
                cmp.mismatches.push(format!("row {row}: q = {}: computed {key}, published {}", want.q, want.key));
            }
        }
        gi += take;
        start = end;
    }
    if gi < golden.rows.len() {
        cmp.mismatches.push(format!("only {} computed rows, {} published", sorted.len(), golden.rows.len()));
    }
    if golden.kind == Kind::III && sorted.len() != golden.rows.len() {
        cmp.mismatches.push(format!("{} rows below 1, {} published", sorted.len(), golden.rows.len()));
    }
    Ok(cmp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_files_parse() {
        let t = golden_tables();
        let sizes: Vec<usize> = t.iter().map(|t| t.rows.len()).collect();
        assert_eq!(sizes, [20, 20, 16, 20, 20, 15]);
        assert_eq!(t[0].rows[0], GoldenRow { q: 339, p: 1065.into(), sign: '-', key: "2.66764E-07".into() });
        assert_eq!(waivers().len(), 6);
    }
}
