//! Text formats read and written by the tool. See `docs/formats.md`.

use std::fs;
use std::path::Path;

use primpoints_core::arith::text::{parse_coeff_list, parse_literal};
use primpoints_core::arith::UniPoly;
use primpoints_core::hyperell::text::parse_divisor;
use primpoints_core::pipeline::{classify_row, Cover, MWSpec, TableRow, TableVerdict};

use crate::error::{CliError, CliResult};

pub fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Lines with `#` comments and blanks removed, with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_err(what: &str, line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("{what} line {line}: {msg}"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFile {
    pub label: Option<String>,
    pub f: UniPoly,
}

/// `label: <text>` (optional) and exactly one of `f: <literal>` or
/// `coeffs: <c0 c1 ...>` (lowest degree first).
pub fn parse_curve_file(text: &str) -> CliResult<CurveFile> {
    let mut label = None;
    let mut f = None;
    for (n, line) in content_lines(text) {
        let (key, value) = line.split_once(':').ok_or_else(|| parse_err("curve", n, "expected `key: value`"))?;
        let value = value.trim();
        let poly = match key.trim() {
            "label" => {
                label = Some(value.to_string());
                continue;
            }
            "f" => parse_literal(value),
            "coeffs" => parse_coeff_list(value),
            other => return Err(parse_err("curve", n, format!("unknown key `{other}`"))),
        };
        if f.is_some() {
            return Err(parse_err("curve", n, "polynomial given twice"));
        }
        f = Some(poly.map_err(|e| parse_err("curve", n, e))?);
    }
    let f = f.ok_or_else(|| CliError::Parse("curve file has no `f:` or `coeffs:` line".into()))?;
    Ok(CurveFile { label, f })
}

/// `order <n>` followed by `gen <divisor>` for each cyclic factor, and one
/// `base <divisor>` line.
pub fn parse_mw_file(text: &str) -> CliResult<MWSpec> {
    let mut factors = Vec::new();
    let mut pending: Option<(usize, u64)> = None;
    let mut base = None;
    for (n, line) in content_lines(text) {
        let (key, value) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let value = value.trim();
        match key {
            "order" => {
                if let Some((m, _)) = pending {
                    return Err(parse_err("mw", m, "`order` without `gen`"));
                }
                let k: u64 = value.parse().map_err(|_| parse_err("mw", n, format!("invalid order `{value}`")))?;
                if k == 0 {
                    return Err(parse_err("mw", n, "order must be positive"));
                }
                pending = Some((n, k));
            }
            "gen" => {
                let (_, k) = pending.take().ok_or_else(|| parse_err("mw", n, "`gen` without preceding `order`"))?;
                factors.push((k, parse_divisor(value).map_err(|e| parse_err("mw", n, e))?));
            }
            "base" => {
                if base.is_some() {
                    return Err(parse_err("mw", n, "`base` given twice"));
                }
                base = Some(parse_divisor(value).map_err(|e| parse_err("mw", n, e))?);
            }
            other => return Err(parse_err("mw", n, format!("unknown key `{other}`"))),
        }
    }
    if let Some((m, _)) = pending {
        return Err(parse_err("mw", m, "`order` without `gen`"));
    }
    let base_point_divisor = base.ok_or_else(|| CliError::Parse("mw file has no `base` line".into()))?;
    Ok(MWSpec { cyclic_factors: factors, base_point_divisor })
}

pub const TABLE_HEADER: [&str; 8] = ["label", "g", "cover_kind", "m", "gprime", "jq_finite", "j_simple", "d_range"];

fn parse_bool(s: &str) -> Option<bool> {
    match s.trim().to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Some(true),
        "false" | "no" | "0" => Some(false),
        _ => None,
    }
}

/// `a..b` or `a-b`, inclusive.
fn parse_range(s: &str) -> Option<(u64, u64)> {
    let s = s.trim();
    let (a, b) = s.split_once("..").or_else(|| s.split_once('-'))?;
    let (a, b) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
    (a <= b).then_some((a, b))
}

fn parse_row(rec: &csv::StringRecord, line: usize) -> CliResult<TableRow> {
    let field = |i: usize| rec.get(i).unwrap_or("").trim();
    let err = |msg: String| parse_err("csv", line, msg);
    let int = |i: usize| -> CliResult<u64> {
        field(i).parse().map_err(|_| err(format!("column `{}`: invalid integer `{}`", TABLE_HEADER[i], field(i))))
    };
    let boolean = |i: usize| -> CliResult<bool> {
        parse_bool(field(i)).ok_or_else(|| err(format!("column `{}`: invalid boolean `{}`", TABLE_HEADER[i], field(i))))
    };
    if rec.len() != TABLE_HEADER.len() {
        return Err(err(format!("expected {} columns, found {}", TABLE_HEADER.len(), rec.len())));
    }
    let m = int(3)?;
    if m < 2 {
        return Err(err(format!("cover degree m = {m} must be at least 2")));
    }
    let cover = match field(2).to_ascii_lowercase().as_str() {
        "gonal" => Cover::Gonal { m },
        "relative" => {
            let gprime = int(4)?;
            if gprime == 0 {
                return Err(err("relative cover needs gprime >= 1".into()));
            }
            Cover::Relative { m, gprime }
        }
        other => return Err(err(format!("unknown cover_kind `{other}`"))),
    };
    let (d_min, d_max) =
        parse_range(field(7)).ok_or_else(|| err(format!("invalid d_range `{}`", field(7))))?;
    if d_min < 2 {
        return Err(err("d_range must start at 2 or above".into()));
    }
    Ok(TableRow {
        label: field(0).to_string(),
        g: int(1)?,
        cover,
        jq_finite: boolean(5)?,
        j_simple: boolean(6)?,
        d_min,
        d_max,
    })
}

/// Parses a finiteness table.
pub fn parse_table(text: &str) -> CliResult<Vec<TableRow>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).flexible(true).from_reader(text.as_bytes());
    let header = rdr.headers().map_err(|e| CliError::Parse(format!("csv header: {e}")))?.clone();
    let names: Vec<&str> = header.iter().map(str::trim).collect();
    if names != TABLE_HEADER {
        return Err(CliError::Parse(format!("csv line 1: expected header `{}`", TABLE_HEADER.join(","))));
    }
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err("csv", line as usize, e)
        })?;
        let line = rec.position().map_or(0, |p| p.line()) as usize;
        rows.push(parse_row(&rec, line)?);
    }
    Ok(rows)
}

pub fn format_degrees(ds: &[u64]) -> String {
    ds.iter().map(u64::to_string).collect::<Vec<_>>().join(";")
}

pub const VERDICT_HEADER: [&str; 3] = ["label", "finite_degrees", "primitive_only_degrees"];

pub fn classify_table(rows: &[TableRow]) -> Vec<TableVerdict> {
    rows.iter().map(classify_row).collect()
}

/// Verdict CSV: degree lists are `;`-separated.
pub fn write_verdicts(verdicts: &[TableVerdict]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(VERDICT_HEADER).expect("in-memory write");
    for v in verdicts {
        w.write_record([v.label.as_str(), &format_degrees(&v.finite), &format_degrees(&v.primitive_only)])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_file_forms() {
        let a = parse_curve_file("label: demo\nf: x^6+1\n").unwrap();
        let b = parse_curve_file("# comment\ncoeffs: 1 0 0 0 0 0 1\n").unwrap();
        assert_eq!(a.f, b.f);
        assert_eq!(a.label.as_deref(), Some("demo"));
        assert!(parse_curve_file("f: x^6+1\ncoeffs: 1 1").is_err());
        assert!(parse_curve_file("g: x").is_err());
    }

    #[test]
    fn mw_file() {
        let mw = parse_mw_file("order 35\ngen oo+ - oo-\nbase oo+ + oo-\n").unwrap();
        assert_eq!(mw.order(), 35);
        assert!(parse_mw_file("order 3\nbase oo+").is_err());
        assert!(parse_mw_file("gen oo+ - oo-\nbase oo+").is_err());
        assert_eq!(parse_mw_file("base oo").unwrap().order(), 1);
    }

    #[test]
    fn table_round() {
        let text = "label,g,cover_kind,m,gprime,jq_finite,j_simple,d_range\n45,41,relative,3,9,true,false,2..12\n";
        let rows = parse_table(text).unwrap();
        let out = write_verdicts(&classify_table(&rows));
        assert_eq!(out, "label,finite_degrees,primitive_only_degrees\n45,2;3;4;5;7,6\n");
    }

    #[test]
    fn table_errors_carry_line_numbers() {
        let text = "label,g,cover_kind,m,gprime,jq_finite,j_simple,d_range\n1,10,gonal,2,,true,true,2..5\n2,10,gonal,1,,true,true,2..5\n";
        let e = parse_table(text).unwrap_err().to_string();
        assert!(e.contains("line 3"), "{e}");
    }
}
