use std::io::{self, Write};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Tsv,
    Csv,
    Pretty,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "csv" => Ok(Format::Csv),
            "pretty" => Ok(Format::Pretty),
            _ => Err(format!("unknown format {s:?}, expected tsv, csv or pretty")),
        }
    }
}

/// A header plus string cells, written in one of the output formats.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(Into::into).collect();
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Tsv => self.write_delimited(out, '\t', |s| s.to_string()),
            Format::Csv => self.write_delimited(out, ',', csv_field),
            Format::Pretty => self.write_pretty(out),
        }
    }

    fn write_delimited(&self, out: &mut dyn Write, sep: char, cell: impl Fn(&str) -> String) -> io::Result<()> {
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let line: Vec<String> = row.iter().map(|c| cell(c)).collect();
            writeln!(out, "{}", line.join(&sep.to_string()))?;
        }
        Ok(())
    }

    fn write_pretty(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            writeln!(out, "{}", cells.join("  ").trim_end())?;
        }
        Ok(())
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(["q", "p"]);
        t.push(["7", "22"]);
        t.push(["113", "355, x"]);
        t
    }

    fn written(t: &Table, f: Format) -> String {
        let mut buf = Vec::new();
        t.write(f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn delimited() {
        assert_eq!(written(&sample(), Format::Tsv), "q\tp\n7\t22\n113\t355, x\n");
        assert_eq!(written(&sample(), Format::Csv), "q,p\n7,22\n113,\"355, x\"\n");
    }

    #[test]
    fn pretty_aligns_right() {
        assert_eq!(written(&sample(), Format::Pretty), "  q       p\n  7      22\n113  355, x\n");
    }
}
