//! Batch interface: deterministic tables and verdicts in JSON, CSV or
//! Markdown. The binary in `main.rs` is a thin argument-parsing wrapper
//! around the `cmd_*` functions here, which keeps every output byte
//! testable from library code.
//!
//! Output contracts:
//! - identical invocations produce byte-identical output (fixed ordering,
//!   no timestamps);
//! - CSV columns are fixed as `n,k,I,J,length,t_twice,mu,self_dual,family`,
//!   with `mu` a semicolon-joined list of twice-values (exact rationals
//!   when a coordinate leaves the half-integers);
//! - table rows are sorted by (t descending, length ascending, I, J).

use std::fmt::Write as _;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::classify::{self, ClassifiedRep, Family};
use crate::degrees;
use crate::error::{Error, Result};
use crate::oracle::{self, SuiteReport};
use crate::reps::{self, HighestWeight, KostantPair};
use crate::rootsys::{dim_nilradical, HalfInt, RankContext, Weight};
use crate::spectral::{self, CuspidalDatum, Verdict};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Markdown,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            other => Err(Error::Parse(format!(
                "unknown format {other:?} (expected json, csv or markdown)"
            ))),
        }
    }
}

/// One rendered row: the representative with its evaluation data. JSON
/// output of a table is a list of these and re-parses losslessly.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TableRow {
    #[serde(rename = "I")]
    pub i_set: Vec<usize>,
    #[serde(rename = "J")]
    pub j_set: Vec<usize>,
    pub n: usize,
    pub k: usize,
    pub length: usize,
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
    pub t: HalfInt,
    pub mu: Weight,
    pub self_dual: bool,
    pub families: Vec<Family>,
}

impl TableRow {
    fn from_classified(c: &ClassifiedRep) -> TableRow {
        TableRow {
            i_set: c.rep.pair().i_set().to_vec(),
            j_set: c.rep.pair().j_set().to_vec(),
            n: c.rep.ctx().n(),
            k: c.rep.ctx().k(),
            length: c.rep.length(),
            perm: c.rep.w().targets_1based(),
            signs: c.rep.w().signs().to_vec(),
            t: c.t,
            mu: c.mu.clone(),
            self_dual: c.self_dual,
            families: c.families.clone(),
        }
    }
}

/// One row per Kostant representative, sorted by (t desc, length asc, I, J).
pub fn table_rows(ctx: RankContext, lam: &HighestWeight) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for rep in reps::enumerate_kostant(ctx) {
        rows.push(TableRow::from_classified(&classify::classify_rep(rep, lam)?));
    }
    rows.sort_by(|a, b| {
        b.t.cmp(&a.t)
            .then(a.length.cmp(&b.length))
            .then(a.i_set.cmp(&b.i_set))
            .then(a.j_set.cmp(&b.j_set))
    });
    Ok(rows)
}

pub fn cmd_table(ctx: RankContext, lam: &HighestWeight, format: OutputFormat) -> Result<String> {
    render_rows(&table_rows(ctx, lam)?, format)
}

/// Self-dual representatives at the requested evaluation point, in
/// enumeration order, with family tags.
pub fn cmd_classify(
    ctx: RankContext,
    lam: &HighestWeight,
    target: Rational64,
    format: OutputFormat,
) -> Result<String> {
    let rows: Vec<TableRow> = classify::scan_t(ctx, lam, target)?
        .iter()
        .map(TableRow::from_classified)
        .collect();
    render_rows(&rows, format)
}

pub fn cmd_verdict(
    datum: &CuspidalDatum,
    lam: &HighestWeight,
    pair: &KostantPair,
    local_kernel: bool,
    format: OutputFormat,
) -> Result<String> {
    let verdict = spectral::verdict(datum, lam, pair, local_kernel)?;
    render_verdict(&verdict, format)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DegreeLine {
    pub quantity: String,
    pub lo: i64,
    pub hi: i64,
}

fn degree_line(quantity: &str, range: degrees::DegreeRange) -> DegreeLine {
    DegreeLine {
        quantity: quantity.to_string(),
        lo: range.lo(),
        hi: range.hi(),
    }
}

fn degree_point(quantity: &str, value: i64) -> DegreeLine {
    DegreeLine {
        quantity: quantity.to_string(),
        lo: value,
        hi: value,
    }
}

/// All degree quantities for the context; the optional arguments switch on
/// the window and shift operations that need them.
pub fn cmd_degrees(
    ctx: RankContext,
    t: Option<HalfInt>,
    lw: Option<i64>,
    q: Option<i64>,
    format: OutputFormat,
) -> Result<String> {
    let mut lines = vec![
        degree_line("gl_cusp_range", degrees::gl_cusp_range(ctx.k())?),
        degree_point("so_cusp_degree", degrees::so_cusp_degree(ctx.l())),
        degree_line("levi_cusp_range", degrees::levi_cusp_range(ctx)?),
        degree_point("dim_nilradical", dim_nilradical(ctx) as i64),
    ];
    if let Some(t) = t {
        lines.push(degree_line("residual_window", degrees::residual_window(ctx, t)?));
    }
    if let Some(lw) = lw {
        lines.push(degree_line("regular_window", degrees::regular_window(ctx, lw)?));
        if let Some(q) = q {
            lines.push(degree_point(
                "residual_degree",
                degrees::residual_degree(q, ctx, lw)?,
            ));
        }
    } else if q.is_some() {
        return Err(Error::Precondition(
            "residual_degree needs both --q and --lw".to_string(),
        ));
    }
    render_degree_lines(&lines, format)
}

/// Runs the full oracle suite and renders its report as JSON (the report
/// format is JSON regardless of --format; the exit-status contract carries
/// the pass/fail bit).
pub fn cmd_verify(
    n_max: usize,
    k_max: usize,
    lambda_cap: i64,
    weyl_cap: usize,
) -> Result<(SuiteReport, String)> {
    let report = oracle::run_suite_capped(n_max, k_max, lambda_cap, weyl_cap)?;
    let mut rendered = serde_json::to_string_pretty(&report).expect("report serializes");
    rendered.push('\n');
    Ok((report, rendered))
}

fn render_rows(rows: &[TableRow], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            Ok(s)
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,k,I,J,length,t_twice,mu,self_dual,family\n");
            for row in rows {
                writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{}",
                    row.n,
                    row.k,
                    join_semicolon(&row.i_set),
                    join_semicolon(&row.j_set),
                    row.length,
                    row.t.twice(),
                    mu_twice_values(&row.mu),
                    row.self_dual,
                    family_list(&row.families),
                )
                .expect("writing to String cannot fail");
            }
            Ok(s)
        }
        OutputFormat::Markdown => {
            let mut s = String::new();
            s.push_str("| n | k | I | J | length | t | mu | self_dual | family |\n");
            s.push_str("|---|---|---|---|--------|---|----|-----------|--------|\n");
            for row in rows {
                writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    row.n,
                    row.k,
                    brace_set(&row.i_set),
                    brace_set(&row.j_set),
                    row.length,
                    row.t,
                    row.mu,
                    row.self_dual,
                    family_list(&row.families),
                )
                .expect("writing to String cannot fail");
            }
            Ok(s)
        }
    }
}

fn render_verdict(verdict: &Verdict, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(verdict).expect("verdict serializes");
            s.push('\n');
            Ok(s)
        }
        OutputFormat::Csv => {
            let mut s = String::from("kind,t_twice,lo,hi,notes\n");
            writeln!(
                s,
                "{:?},{},{},{},{}",
                verdict.kind,
                verdict.t.map_or(String::new(), |t| t.twice().to_string()),
                verdict.window.map_or(String::new(), |w| w.lo().to_string()),
                verdict.window.map_or(String::new(), |w| w.hi().to_string()),
                verdict.notes.join("; "),
            )
            .expect("writing to String cannot fail");
            Ok(s)
        }
        OutputFormat::Markdown => {
            let mut s = String::new();
            s.push_str("| kind | t | window | notes |\n");
            s.push_str("|------|---|--------|-------|\n");
            writeln!(
                s,
                "| {:?} | {} | {} | {} |",
                verdict.kind,
                verdict.t.map_or("-".to_string(), |t| t.to_string()),
                verdict.window.map_or("-".to_string(), |w| w.to_string()),
                verdict.notes.join("; "),
            )
            .expect("writing to String cannot fail");
            Ok(s)
        }
    }
}

fn render_degree_lines(lines: &[DegreeLine], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(lines).expect("lines serialize");
            s.push('\n');
            Ok(s)
        }
        OutputFormat::Csv => {
            let mut s = String::from("quantity,lo,hi\n");
            for line in lines {
                writeln!(s, "{},{},{}", line.quantity, line.lo, line.hi)
                    .expect("writing to String cannot fail");
            }
            Ok(s)
        }
        OutputFormat::Markdown => {
            let mut s = String::new();
            s.push_str("| quantity | lo | hi |\n");
            s.push_str("|----------|----|----|\n");
            for line in lines {
                writeln!(s, "| {} | {} | {} |", line.quantity, line.lo, line.hi)
                    .expect("writing to String cannot fail");
            }
            Ok(s)
        }
    }
}

fn join_semicolon(set: &[usize]) -> String {
    set.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn brace_set(set: &[usize]) -> String {
    format!("{{{}}}", set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
}

/// Twice-values of the coordinates, semicolon-joined; integral entries print
/// bare, coordinates outside the half-integers degrade to exact rationals.
fn mu_twice_values(mu: &Weight) -> String {
    mu.coords()
        .iter()
        .map(|c| {
            let doubled = c * 2;
            if doubled.is_integer() {
                doubled.to_integer().to_string()
            } else {
                doubled.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn family_list(families: &[Family]) -> String {
    families
        .iter()
        .map(|f| f.as_str().to_string())
        .collect::<Vec<_>>()
        .join(";")
}

/// Comma-separated 1-based index list; empty string means the empty set.
pub fn parse_index_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad index {part:?}")))
        })
        .collect()
}

/// Exact rational from "p" or "p/q".
pub fn parse_rational(s: &str) -> Result<Rational64> {
    let s = s.trim();
    match s.split_once('/') {
        None => s
            .parse::<i64>()
            .map(Rational64::from_integer)
            .map_err(|_| Error::Parse(format!("bad rational literal {s:?}"))),
        Some((num, den)) => {
            let num: i64 = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational literal {s:?}")))?;
            let den: i64 = den
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational literal {s:?}")))?;
            if den == 0 {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational64::new(num, den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, k: usize) -> RankContext {
        RankContext::new(n, k).unwrap()
    }

    #[test]
    fn table_row_counts_and_sort() {
        let lam = HighestWeight::zero(3);
        let rows = table_rows(ctx(3, 1), &lam).unwrap();
        assert_eq!(rows.len(), 6);
        // strictly descending t for (3,1), lambda = 0
        let ts: Vec<i64> = rows.iter().map(|r| r.t.twice()).collect();
        assert_eq!(ts, vec![5, 3, 1, -1, -3, -5]);
        let rows = table_rows(ctx(3, 3), &lam).unwrap();
        assert_eq!(rows.len(), 8);
    }

    #[test]
    fn table_contains_the_worked_row() {
        let lam = HighestWeight::zero(3);
        let rows = table_rows(ctx(3, 1), &lam).unwrap();
        let row = rows
            .iter()
            .find(|r| r.i_set == vec![3] && r.j_set.is_empty())
            .unwrap();
        assert_eq!(row.t, HalfInt::from_twice(1));
        assert_eq!(row.mu, Weight::from_ints(&[0, 1, 1]));
        assert!(row.self_dual);
        assert_eq!(row.families, vec![Family::Half]);
    }

    #[test]
    fn json_round_trip() {
        let lam = HighestWeight::new(vec![1, 0, 0]).unwrap();
        let rows = table_rows(ctx(3, 2), &lam).unwrap();
        let json = cmd_table(ctx(3, 2), &lam, OutputFormat::Json).unwrap();
        let back: Vec<TableRow> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rows);
    }

    #[test]
    fn csv_columns_are_fixed() {
        let lam = HighestWeight::zero(3);
        let csv = cmd_table(ctx(3, 1), &lam, OutputFormat::Csv).unwrap();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "n,k,I,J,length,t_twice,mu,self_dual,family"
        );
        // first row is ({1},{}) with t = 5/2, mu = 0
        assert_eq!(lines.next().unwrap(), "3,1,1,,5,5,0;0;0,true,");
    }

    #[test]
    fn csv_mu_degrades_to_exact_rationals() {
        let lam = HighestWeight::zero(3);
        let csv = cmd_table(ctx(3, 3), &lam, OutputFormat::Csv).unwrap();
        // ({1,2},{3}) has mu = (2/3, -1/3, -1/3); twice-values 4/3, -2/3.
        let row = csv
            .lines()
            .find(|l| l.starts_with("3,3,1;2,3,"))
            .unwrap();
        assert!(row.contains("4/3;-2/3;-2/3"), "row was {row}");
    }

    #[test]
    fn classify_formats() {
        let lam = HighestWeight::zero(3);
        let json = cmd_classify(ctx(3, 1), &lam, Rational64::new(1, 2), OutputFormat::Json)
            .unwrap();
        let rows: Vec<TableRow> = serde_json::from_str(&json).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].families, vec![Family::Half]);

        let empty = cmd_classify(ctx(3, 1), &lam, Rational64::new(1, 4), OutputFormat::Json)
            .unwrap();
        let rows: Vec<TableRow> = serde_json::from_str(&empty).unwrap();
        assert!(rows.is_empty());
    }

    #[test]
    fn degrees_lines() {
        let json = cmd_degrees(
            ctx(3, 1),
            Some(HalfInt::from_twice(1)),
            Some(3),
            Some(6),
            OutputFormat::Json,
        )
        .unwrap();
        let lines: Vec<DegreeLine> = serde_json::from_str(&json).unwrap();
        let get = |name: &str| lines.iter().find(|l| l.quantity == name).unwrap();
        assert_eq!((get("levi_cusp_range").lo, get("levi_cusp_range").hi), (3, 3));
        assert_eq!((get("residual_window").lo, get("residual_window").hi), (5, 5));
        assert_eq!((get("regular_window").lo, get("regular_window").hi), (6, 6));
        assert_eq!(get("residual_degree").lo, 5);
        assert_eq!(get("dim_nilradical").lo, 5);
    }

    #[test]
    fn verdict_formats() {
        let ctx31 = ctx(3, 1);
        let datum =
            CuspidalDatum::new(ctx31, true, true, Some(true), Some(false), false).unwrap();
        let lam = HighestWeight::zero(3);
        let pair = KostantPair::new(vec![3], vec![], ctx31).unwrap();

        let csv = cmd_verdict(&datum, &lam, &pair, false, OutputFormat::Csv).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "kind,t_twice,lo,hi,notes");
        assert!(lines.next().unwrap().starts_with("Residual,1,5,5,"));

        let md = cmd_verdict(&datum, &lam, &pair, true, OutputFormat::Markdown).unwrap();
        assert!(md.contains("| Regular | - | [6, 6] |"));

        let md = cmd_degrees(ctx31, None, None, None, OutputFormat::Markdown).unwrap();
        assert!(md.starts_with("| quantity | lo | hi |\n"));
        assert!(md.contains("| levi_cusp_range | 3 | 3 |"));
    }

    #[test]
    fn parsing_helpers() {
        assert_eq!(parse_index_list("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_index_list("1,3").unwrap(), vec![1, 3]);
        assert!(parse_index_list("1,x").is_err());
        assert_eq!(parse_rational("2").unwrap(), Rational64::from_integer(2));
        assert_eq!(parse_rational("1/2").unwrap(), Rational64::new(1, 2));
        assert_eq!(parse_rational("1/4").unwrap(), Rational64::new(1, 4));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn determinism() {
        let lam = HighestWeight::zero(4);
        for format in [OutputFormat::Json, OutputFormat::Csv, OutputFormat::Markdown] {
            let a = cmd_table(ctx(4, 2), &lam, format).unwrap();
            let b = cmd_table(ctx(4, 2), &lam, format).unwrap();
            assert_eq!(a, b);
        }
    }
}
