//! Enumeration of feasible triangle-free parameter sets, table rendering and
//! comparison against the published table.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::{feasibility, SrgEigenData, SrgParams, Tier};
use crate::error::{Error, Result};
use crate::surd::Surd;

/// Hard cap on the enumeration range.
pub const N_MAX_CAP: u32 = 10_000;

const PUBLISHED_TABLE: &str = include_str!("../../data/published_table.csv");
const EXISTENCE: &str = include_str!("../../data/existence.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Existence {
    Yes,
    No,
    Unknown,
}

impl Existence {
    pub fn label(self) -> &'static str {
        match self {
            Existence::Yes => "Yes",
            Existence::No => "No",
            Existence::Unknown => "?",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "yes" => Some(Existence::Yes),
            "no" => Some(Existence::No),
            "?" | "unknown" => Some(Existence::Unknown),
            _ => None,
        }
    }
}

fn parse_tuple(s: &str) -> Option<SrgParams> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
    let v: Vec<u32> = inner.split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>()?;
    match v[..] {
        [n, k, a, b] => Some(SrgParams::new(n, k, a, b)),
        _ => None,
    }
}

fn existence_map() -> &'static BTreeMap<SrgParams, (Existence, String)> {
    static MAP: std::sync::OnceLock<BTreeMap<SrgParams, (Existence, String)>> = std::sync::OnceLock::new();
    MAP.get_or_init(|| {
        EXISTENCE
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                let close = l.find(')').expect("existence line has a tuple");
                let params = parse_tuple(&l[..=close]).expect("existence tuple");
                let mut rest = l[close + 1..].trim().splitn(2, ' ');
                let ex = Existence::parse(rest.next().unwrap_or("")).expect("existence label");
                (params, (ex, rest.next().unwrap_or("").to_string()))
            })
            .collect()
    })
}

/// Curated existence status and its source note.
pub fn existence_of(p: SrgParams) -> (Existence, Option<&'static str>) {
    match existence_map().get(&p) {
        Some((e, note)) => (*e, Some(note.as_str())),
        None => (Existence::Unknown, None),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub params: SrgParams,
    pub eigen: SrgEigenData,
    pub ratio: Surd,
    pub ratio_approx: f64,
    pub existence: Existence,
    pub annotation: Option<String>,
}

impl TableRow {
    fn new(params: SrgParams, eigen: SrgEigenData) -> Self {
        let ratio = eigen.ratio(params);
        Self {
            params,
            eigen,
            ratio,
            ratio_approx: ratio.to_f64(),
            existence: existence_of(params).0,
            annotation: None,
        }
    }

    /// `(k + theta2)/n` with the unreduced numerator when rational, as in
    /// `14/100`.
    pub fn ratio_text(&self) -> String {
        match (Surd::int(self.params.k as i128) + self.eigen.theta2).as_integer() {
            Some(num) => format!("{num}/{}", self.params.n),
            None => self.ratio.to_string(),
        }
    }
}

fn milli_text(milli: i128) -> String {
    let sign = if milli < 0 { "-" } else { "" };
    let m = milli.abs();
    let frac = format!("{:03}", m % 1000);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        format!("{sign}{}", m / 1000)
    } else {
        format!("{sign}{}.{frac}", m / 1000)
    }
}

/// Three-decimal rounding (half up), trailing zeros dropped.
pub fn appr_rounded(x: Surd) -> String {
    milli_text((x * Surd::int(1000) + Surd::ratio(1, 2)).floor())
}

/// Three-decimal truncation, trailing zeros dropped.
pub fn appr_truncated(x: Surd) -> String {
    milli_text((x * Surd::int(1000)).floor())
}

fn rows_for_n(n: u32, tier: Tier) -> Vec<TableRow> {
    let mut out = Vec::new();
    for k in 1..n {
        let rest = (n - k - 1) as u64;
        if rest == 0 {
            continue;
        }
        let num = k as u64 * (k as u64 - 1);
        if !num.is_multiple_of(rest) {
            continue;
        }
        let b = (num / rest) as u32;
        let p = SrgParams::new(n, k, 0, b);
        let report = feasibility(p, tier);
        if report.passed() {
            out.push(TableRow::new(p, report.eigen.expect("passed reports carry eigen data")));
        }
    }
    out
}

/// All `(n, k, 0, b)` with `n <= n_max` passing `tier`, sorted by `(n, k)`.
/// `b` is solved from the counting identity for each `(n, k)`.
pub fn enumerate_feasible(n_max: u32, tier: Tier) -> Result<Vec<TableRow>> {
    if !(5..=N_MAX_CAP).contains(&n_max) {
        return Err(Error::Domain(format!("n_max must lie in 5..={N_MAX_CAP}, got {n_max}")));
    }
    #[cfg(feature = "parallel")]
    let chunks: Vec<Vec<TableRow>> = {
        use rayon::prelude::*;
        (5..=n_max).into_par_iter().map(|n| rows_for_n(n, tier)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let chunks: Vec<Vec<TableRow>> = (5..=n_max).map(|n| rows_for_n(n, tier)).collect();
    let mut rows: Vec<TableRow> = chunks.into_iter().flatten().collect();
    rows.sort_by_key(|r| (r.params.n, r.params.k));
    Ok(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

impl std::str::FromStr for TableFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            _ => Err(Error::Domain(format!("unknown format '{s}'"))),
        }
    }
}

#[derive(Serialize)]
struct RowRecord {
    n: u32,
    k: u32,
    a: u32,
    b: u32,
    theta1: String,
    theta2: String,
    m1: u64,
    m2: u64,
    ratio: String,
    appr: String,
    existence: &'static str,
    ratio_exact: String,
    ratio_approx: f64,
    appr_truncated: String,
    annotation: Option<String>,
}

impl From<&TableRow> for RowRecord {
    fn from(r: &TableRow) -> Self {
        RowRecord {
            n: r.params.n,
            k: r.params.k,
            a: r.params.a,
            b: r.params.b,
            theta1: r.eigen.theta1.to_string(),
            theta2: r.eigen.theta2.to_string(),
            m1: r.eigen.m1,
            m2: r.eigen.m2,
            ratio: r.ratio_text(),
            appr: appr_rounded(r.ratio),
            existence: r.existence.label(),
            ratio_exact: r.ratio.to_string(),
            ratio_approx: r.ratio_approx,
            appr_truncated: appr_truncated(r.ratio),
            annotation: r.annotation.clone(),
        }
    }
}

const CSV_HEADER: &str = "n,k,a,b,theta1,theta2,m1,m2,ratio,appr,existence,ratio_exact,appr_truncated,annotation";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Deterministic rendering. The text layout mirrors the published table;
/// rows whose 3-decimal rounding differs from truncation are starred and
/// listed in footnotes.
pub fn render_table(rows: &[TableRow], format: TableFormat) -> String {
    let records: Vec<RowRecord> = rows.iter().map(RowRecord::from).collect();
    let footnotes: Vec<String> = records
        .iter()
        .filter(|r| r.appr != r.appr_truncated)
        .map(|r| {
            format!(
                "({},{},{},{}) {}: rounded {}, truncated {}",
                r.n, r.k, r.a, r.b, r.ratio, r.appr, r.appr_truncated
            )
        })
        .collect();
    match format {
        TableFormat::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                rows: &'a [RowRecord],
                footnotes: &'a [String],
            }
            let mut s = serde_json::to_string_pretty(&Doc {
                rows: &records,
                footnotes: &footnotes,
            })
            .expect("table serialises");
            s.push('\n');
            s
        }
        TableFormat::Csv => {
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for r in &records {
                let fields = [
                    r.n.to_string(),
                    r.k.to_string(),
                    r.a.to_string(),
                    r.b.to_string(),
                    r.theta1.clone(),
                    r.theta2.clone(),
                    r.m1.to_string(),
                    r.m2.to_string(),
                    r.ratio.clone(),
                    r.appr.clone(),
                    r.existence.to_string(),
                    r.ratio_exact.clone(),
                    r.appr_truncated.clone(),
                    r.annotation.clone().unwrap_or_default(),
                ];
                let line: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
                s.push_str(&line.join(","));
                s.push('\n');
            }
            s
        }
        TableFormat::Text => {
            let mut s = format!(
                "{:>5} {:>4} {:>2} {:>3}  {:<10} {:<10} {:>4} {:>4}  {:<12} {:<7} {}\n",
                "n", "k", "a", "b", "theta1", "theta2", "m1", "m2", "(k+theta2)/n", "Appr.", "Existence"
            );
            for r in &records {
                let star = if r.appr != r.appr_truncated { "*" } else { "" };
                let mut line = format!(
                    "{:>5} {:>4} {:>2} {:>3}  {:<10} {:<10} {:>4} {:>4}  {:<12} {:<7} {}",
                    r.n,
                    r.k,
                    r.a,
                    r.b,
                    r.theta1,
                    r.theta2,
                    r.m1,
                    r.m2,
                    r.ratio,
                    format!("{}{star}", r.appr),
                    r.existence
                );
                if let Some(a) = &r.annotation {
                    let _ = write!(line, "  [{a}]");
                }
                s.push_str(line.trim_end());
                s.push('\n');
            }
            for f in &footnotes {
                let _ = writeln!(s, "* {f}");
            }
            s
        }
    }
}

/// Parses `7`, `-8`, `14/100`, `(√5-1)/2`, `(-√5-1)/2`, `(3-√5)/10` and
/// similar forms. `−` is accepted for minus and `sqrt` for `√`.
pub fn parse_surd(text: &str) -> Result<Surd> {
    let bad = || Error::Domain(format!("cannot parse number '{text}'"));
    let t: String = text
        .replace('−', "-")
        .replace("sqrt", "√")
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    let (num, den) = match t.rfind('/') {
        Some(i) => (&t[..i], t[i + 1..].parse::<i128>().map_err(|_| bad())?),
        None => (t.as_str(), 1),
    };
    if den == 0 {
        return Err(bad());
    }
    let num = num.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(num);
    if num.is_empty() {
        return Err(bad());
    }
    let mut total = Surd::int(0);
    let mut rest = num;
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map_or(body.len(), |(i, _)| i);
        let term = &body[..end];
        rest = &body[end..];
        let value = match term.split_once('√') {
            Some((coef, rad)) => {
                let c = if coef.is_empty() {
                    1
                } else {
                    coef.parse::<i128>().map_err(|_| bad())?
                };
                let r = rad.parse::<i128>().map_err(|_| bad())?;
                Surd::new(0, c, r, 1)
            }
            None => Surd::int(term.parse::<i128>().map_err(|_| bad())?),
        };
        total = total + Surd::int(sign) * value;
    }
    Ok(total.div_int(den))
}

/// A row of the published table, as transcribed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PublishedRow {
    pub params: SrgParams,
    pub theta1: Surd,
    pub theta2: Surd,
    pub m1: u64,
    pub m2: u64,
    pub ratio: Surd,
    pub ratio_text: String,
    pub appr: String,
    pub existence: Existence,
}

/// Parses the checked-in transcription of the published table.
pub fn published_table() -> Vec<PublishedRow> {
    parse_published_table(PUBLISHED_TABLE).expect("bundled published table parses")
}

pub fn parse_published_table(csv: &str) -> Result<Vec<PublishedRow>> {
    let mut rows = Vec::new();
    for (i, line) in csv.lines().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let bad = |m: &str| Error::Domain(format!("published table line {}: {m}", i + 1));
        let f: Vec<&str> = line.split(',').map(str::trim).collect();
        if f.len() != 11 {
            return Err(bad("expected 11 columns"));
        }
        let int = |s: &str| s.parse::<u32>().map_err(|_| bad("bad integer"));
        rows.push(PublishedRow {
            params: SrgParams::new(int(f[0])?, int(f[1])?, int(f[2])?, int(f[3])?),
            theta1: parse_surd(f[4])?,
            theta2: parse_surd(f[5])?,
            m1: int(f[6])? as u64,
            m2: int(f[7])? as u64,
            ratio: parse_surd(f[8])?,
            ratio_text: f[8].to_string(),
            appr: f[9].to_string(),
            existence: Existence::parse(f[10]).ok_or_else(|| bad("bad existence"))?,
        });
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FieldMismatch {
    pub params: SrgParams,
    pub field: String,
    pub published: String,
    pub computed: String,
    pub note: String,
    /// False when the printed row contradicts itself, e.g. its
    /// multiplicities or ratio do not follow from its own eigenvalues.
    pub published_self_consistent: bool,
}

/// A computed row that the published table does not list.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtraRow {
    pub params: SrgParams,
    /// Extended conditions that fail; empty when the row stays open.
    pub eliminated_by: Vec<String>,
    pub open: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ApprNote {
    pub params: SrgParams,
    pub published: String,
    pub rounded: String,
    pub truncated: String,
    /// `rounded`, `truncated`, `both` or `neither`.
    pub published_matches: &'static str,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PublishedDiff {
    pub published_rows: usize,
    pub computed_rows: usize,
    /// Published rows whose `n, k, b, theta1, theta2` agree exactly.
    pub matched: usize,
    pub missing: Vec<SrgParams>,
    pub mismatches: Vec<FieldMismatch>,
    pub extras: Vec<ExtraRow>,
    pub appr_notes: Vec<ApprNote>,
}

impl PublishedDiff {
    /// Every published row is reproduced in its identifying columns.
    pub fn all_rows_reproduced(&self) -> bool {
        self.missing.is_empty() && self.matched == self.published_rows
    }

    /// Mismatches where the printed row is internally consistent and still
    /// disagrees with the computation.
    pub fn unexplained(&self) -> impl Iterator<Item = &FieldMismatch> {
        self.mismatches.iter().filter(|m| m.published_self_consistent)
    }
}

pub fn compare_with_published(computed: &[TableRow], published: &[PublishedRow]) -> PublishedDiff {
    let by_params: BTreeMap<SrgParams, &TableRow> = computed.iter().map(|r| (r.params, r)).collect();
    let mut diff = PublishedDiff {
        published_rows: published.len(),
        computed_rows: computed.len(),
        matched: 0,
        missing: Vec::new(),
        mismatches: Vec::new(),
        extras: Vec::new(),
        appr_notes: Vec::new(),
    };
    for pr in published {
        let Some(row) = by_params.get(&pr.params) else {
            diff.missing.push(pr.params);
            continue;
        };
        let mut identifying_ok = true;
        let mut mismatch = |field: &str, published: String, computed: String, note: String, consistent: bool| {
            diff.mismatches.push(FieldMismatch {
                params: pr.params,
                field: field.into(),
                published,
                computed,
                note,
                published_self_consistent: consistent,
            });
        };
        let (_, k, a, b) = pr.params.wide();
        for (field, p, c) in [
            ("theta1", pr.theta1, row.eigen.theta1),
            ("theta2", pr.theta2, row.eigen.theta2),
        ] {
            if p != c {
                identifying_ok = false;
                // A printed eigenvalue must be a root of x^2 - (a-b)x - (k-b).
                let residual = p * p - Surd::int(a - b) * p - Surd::int(k - b);
                let note = format!("printed value gives x^2 - (a-b)x - (k-b) = {residual}");
                mismatch(field, p.to_string(), c.to_string(), note, residual.is_zero());
            }
        }
        let k_surd = Surd::int(k);
        if pr.ratio != row.ratio {
            let implied = (k_surd + pr.theta2).div_int(pr.params.n as i128);
            mismatch(
                "ratio",
                pr.ratio_text.clone(),
                row.ratio_text(),
                format!("printed theta2 gives (k+theta2)/n = {implied}"),
                implied == pr.ratio,
            );
        }
        if (pr.m1, pr.m2) != (row.eigen.m1, row.eigen.m2) {
            let printed_trace = k_surd + Surd::int(pr.m1 as i128) * pr.theta1 + Surd::int(pr.m2 as i128) * pr.theta2;
            let transposed = (pr.m1, pr.m2) == (row.eigen.m2, row.eigen.m1);
            mismatch(
                "multiplicities",
                format!("{},{}", pr.m1, pr.m2),
                format!("{},{}", row.eigen.m1, row.eigen.m2),
                format!(
                    "{}printed values give k + m1*theta1 + m2*theta2 = {printed_trace}, computed give 0",
                    if transposed { "transposed; " } else { "" }
                ),
                printed_trace.is_zero(),
            );
        }
        if pr.existence != row.existence {
            mismatch(
                "existence",
                pr.existence.label().into(),
                row.existence.label().into(),
                "curated annotation differs from the printed column".into(),
                true,
            );
        }
        if identifying_ok {
            diff.matched += 1;
        }
        let rounded = appr_rounded(row.ratio);
        let truncated = appr_truncated(row.ratio);
        if pr.appr != rounded || rounded != truncated {
            let published_matches = match (pr.appr == rounded, pr.appr == truncated) {
                (true, true) => "both",
                (true, false) => "rounded",
                (false, true) => "truncated",
                (false, false) => "neither",
            };
            diff.appr_notes.push(ApprNote {
                params: pr.params,
                published: pr.appr.clone(),
                rounded,
                truncated,
                published_matches,
            });
        }
    }
    let listed: std::collections::BTreeSet<SrgParams> = published.iter().map(|p| p.params).collect();
    for row in computed.iter().filter(|r| !listed.contains(&r.params)) {
        let report = feasibility(row.params, Tier::Extended);
        let eliminated_by: Vec<String> = report.failed().map(|c| c.name.to_string()).collect();
        diff.extras.push(ExtraRow {
            params: row.params,
            open: eliminated_by.is_empty(),
            eliminated_by,
        });
    }
    diff
}

/// Copies diff findings into the per-row annotation field.
pub fn annotate(rows: &mut [TableRow], diff: &PublishedDiff) {
    let mut notes: BTreeMap<SrgParams, Vec<String>> = BTreeMap::new();
    for m in &diff.mismatches {
        notes
            .entry(m.params)
            .or_default()
            .push(format!("published {}: {}", m.field, m.published));
    }
    for a in &diff.appr_notes {
        if a.published != a.rounded {
            notes
                .entry(a.params)
                .or_default()
                .push(format!("published Appr. {} ({})", a.published, a.published_matches));
        }
    }
    for e in &diff.extras {
        let what = if e.open {
            "not in the published table; open".to_string()
        } else {
            format!("not in the published table; fails {}", e.eliminated_by.join(" "))
        };
        notes.entry(e.params).or_default().push(what);
    }
    for r in rows.iter_mut() {
        if let Some(n) = notes.get(&r.params) {
            r.annotation = Some(n.join("; "));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_surd_forms() {
        assert_eq!(parse_surd("7").unwrap(), Surd::int(7));
        assert_eq!(parse_surd("-8").unwrap(), Surd::int(-8));
        assert_eq!(parse_surd("14/100").unwrap(), Surd::ratio(7, 50));
        assert_eq!(parse_surd("(√5-1)/2").unwrap(), Surd::new(-1, 1, 5, 2));
        assert_eq!(parse_surd("(−√5−1)/2").unwrap(), Surd::new(-1, -1, 5, 2));
        assert_eq!(parse_surd("(3-sqrt5)/10").unwrap(), Surd::new(3, -1, 5, 10));
        assert_eq!(parse_surd("3+2√2").unwrap(), Surd::new(3, 2, 2, 1));
        assert!(parse_surd("").is_err());
        assert!(parse_surd("1/0").is_err());
        assert!(parse_surd("x").is_err());
    }

    #[test]
    fn display_and_parse_agree() {
        for s in [
            Surd::new(-1, 1, 5, 2),
            Surd::new(3, -1, 5, 10),
            Surd::ratio(-7, 3),
            Surd::new(0, 3, 7, 4),
        ] {
            assert_eq!(parse_surd(&s.to_string()).unwrap(), s);
        }
    }

    #[test]
    fn appr_rounding_and_truncation() {
        assert_eq!(appr_rounded(Surd::ratio(1, 7)), "0.143");
        assert_eq!(appr_truncated(Surd::ratio(1, 7)), "0.142");
        assert_eq!(appr_rounded(Surd::ratio(10, 64)), "0.156");
        assert_eq!(appr_rounded(Surd::ratio(14, 100)), "0.14");
        assert_eq!(appr_rounded(Surd::ratio(1, 10)), "0.1");
        assert_eq!(appr_rounded(Surd::ratio(4, 50)), "0.08");
        assert_eq!(appr_rounded(Surd::new(3, -1, 5, 10)), "0.076");
        assert_eq!(appr_rounded(Surd::int(0)), "0");
    }

    #[test]
    fn existence_store() {
        assert_eq!(existence_of(SrgParams::new(100, 22, 0, 6)).0, Existence::Yes);
        assert_eq!(existence_of(SrgParams::new(324, 57, 0, 12)).0, Existence::No);
        assert_eq!(existence_of(SrgParams::new(162, 21, 0, 3)), (Existence::Unknown, None));
        assert_eq!(
            existence_map().values().filter(|(e, _)| *e == Existence::Yes).count(),
            7
        );
    }

    #[test]
    fn enumeration_key_rows() {
        let rows = enumerate_feasible(816, Tier::Basic).unwrap();
        let hs = rows.iter().find(|r| r.params.n == 100).unwrap();
        assert_eq!(hs.ratio, Surd::ratio(14, 100));
        assert_eq!(hs.ratio_text(), "14/100");
        assert_eq!(appr_rounded(hs.ratio), "0.14");
        let r64 = rows.iter().find(|r| r.params.n == 64).unwrap();
        assert_eq!(r64.ratio_text(), "10/64");
        assert_eq!(appr_rounded(r64.ratio), "0.156");
        assert!(rows
            .windows(2)
            .all(|w| (w[0].params.n, w[0].params.k) < (w[1].params.n, w[1].params.k)));
        assert!(enumerate_feasible(4, Tier::Basic).is_err());
        assert!(enumerate_feasible(N_MAX_CAP + 1, Tier::Basic).is_err());
    }

    #[test]
    fn render_empty_and_surd_row() {
        let empty = render_table(&[], TableFormat::Text);
        assert_eq!(empty.lines().count(), 1);
        assert_eq!(render_table(&[], TableFormat::Csv), format!("{CSV_HEADER}\n"));
        let rows = enumerate_feasible(5, Tier::Basic).unwrap();
        let text = render_table(&rows, TableFormat::Text);
        assert!(text.contains("(√5-1)/2"));
        assert!(text.contains("(-√5-1)/2"));
        assert!(text.contains("(3-√5)/10"));
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("x\"y"), "\"x\"\"y\"");
        assert_eq!(csv_field("plain"), "plain");
    }

    #[test]
    fn published_table_transcription() {
        let rows = published_table();
        assert_eq!(rows.len(), 24);
        assert_eq!(rows[0].ratio, Surd::new(3, -1, 5, 10));
        assert_eq!(rows[1].params, SrgParams::new(10, 3, 0, 1));
        assert_eq!((rows[1].m1, rows[1].m2), (4, 5));
        assert!(parse_published_table("h\n1,2,3\n").is_err());
    }
}
