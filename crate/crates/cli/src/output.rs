use std::collections::BTreeMap;
use std::io::{self, Write};

use clap::ValueEnum;
use selfpower::counts::{CountBreakdown, Kind, Regime};
use selfpower::oracle::SolutionRecord;
use selfpower::verify::{CountReport, IdentityCheck, PropertySummary, RatioReport};
use selfpower::ModulusContext;
use serde::Serialize;

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Human,
}

/// A closed-form count as printed by `count-fixed` and `count-two-cycles`.
#[derive(Debug, Serialize)]
pub struct CountOutput<K: Ord> {
    pub total: u64,
    pub nonsingular_total: u64,
    pub per_class: BTreeMap<K, u64>,
    pub regime: Regime,
    pub kind: Kind,
    pub p: u64,
    pub e: u32,
    pub n: u32,
}

impl<K: Ord + Clone> CountOutput<K> {
    pub fn new(kind: Kind, ctx: &ModulusContext, n: u32, b: &CountBreakdown<K>) -> Self {
        Self {
            total: b.total,
            nonsingular_total: b.nonsingular_total,
            per_class: b.per_class.clone(),
            regime: b.regime,
            kind,
            p: ctx.p(),
            e: ctx.e(),
            n,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SelfTestOutput {
    pub identities: Vec<IdentityCheck>,
    pub properties: PropertySummary,
}

#[derive(Debug, Serialize)]
pub struct SweepOutput {
    pub reports: Vec<CountReport>,
    pub self_test: Option<SelfTestOutput>,
}

impl SweepOutput {
    pub fn new(
        reports: Vec<CountReport>,
        self_test: Option<(Vec<IdentityCheck>, PropertySummary)>,
    ) -> Self {
        Self {
            reports,
            self_test: self_test.map(|(identities, properties)| SelfTestOutput {
                identities,
                properties,
            }),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.matched)
            && self
                .self_test
                .as_ref()
                .is_none_or(|t| t.identities.iter().all(|c| c.holds) && t.properties.passed())
    }
}

fn json<T: Serialize + ?Sized>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn csv_rows<T: Serialize>(
    out: &mut impl Write,
    rows: impl IntoIterator<Item = T>,
    header: &[&str],
) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.serialize(row).map_err(io::Error::other)?;
    }
    w.flush()
}

const REPORT_HEADER: [&str; 8] = [
    "kind",
    "p",
    "e",
    "n",
    "formula_total",
    "oracle_total",
    "match",
    "elapsed_ms",
];
const CLASS_HEADER: [&str; 7] = ["kind", "p", "e", "n", "class", "formula", "oracle"];

pub fn write_count<K>(
    out: &mut impl Write,
    format: Format,
    c: &CountOutput<K>,
    per_class: bool,
) -> io::Result<()>
where
    K: Ord + Serialize + std::fmt::Display,
{
    match format {
        Format::Json => json(out, c),
        Format::Csv if per_class => {
            let rows = c
                .per_class
                .iter()
                .map(|(class, count)| (c.kind, c.p, c.e, c.n, class.to_string(), count));
            csv_rows(out, rows, &["kind", "p", "e", "n", "class", "count"])
        }
        Format::Csv => csv_rows(
            out,
            [(
                c.kind,
                c.p,
                c.e,
                c.n,
                c.regime,
                c.total,
                c.nonsingular_total,
            )],
            &[
                "kind",
                "p",
                "e",
                "n",
                "regime",
                "total",
                "nonsingular_total",
            ],
        ),
        Format::Human => {
            let what = match c.kind {
                Kind::Fixed => "fixed points",
                Kind::TwoCycle => "two-cycles",
            };
            writeln!(
                out,
                "{what} of x^(x^{}) mod {}^{}: {}",
                c.n, c.p, c.e, c.total
            )?;
            writeln!(out, "regime: {}", c.regime)?;
            writeln!(out, "nonsingular: {}", c.nonsingular_total)?;
            for (class, count) in &c.per_class {
                writeln!(out, "  class {class}: {count}")?;
            }
            Ok(())
        }
    }
}

pub fn write_records(
    out: &mut impl Write,
    format: Format,
    records: &[SolutionRecord],
) -> io::Result<()> {
    match format {
        Format::Json => json(out, records),
        Format::Csv => csv_rows(
            out,
            records.iter().map(|r| (r.x, r.y, r.x0, r.x1)),
            &["x", "y", "x0", "x1"],
        ),
        Format::Human => {
            for r in records {
                match r.y {
                    Some(y) => writeln!(out, "{} {}", r.x, y)?,
                    None => writeln!(out, "{}", r.x)?,
                }
            }
            Ok(())
        }
    }
}

fn human_report(out: &mut impl Write, r: &CountReport) -> io::Result<()> {
    let show = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
    let verdict = if r.matched { "match" } else { "MISMATCH" };
    write!(
        out,
        "{} p={} e={} n={}: formula {} oracle {} {verdict}",
        r.kind,
        r.p,
        r.e,
        r.n,
        show(r.formula_total),
        show(r.oracle_total)
    )?;
    if let Some(regime) = r.regime {
        write!(out, " [{regime}]")?;
    }
    if let Some(err) = &r.error {
        write!(out, " error: {err}")?;
    }
    writeln!(out)?;
    for c in &r.per_class {
        let mark = if c.formula == c.oracle {
            ""
        } else {
            "  <-- differs"
        };
        writeln!(
            out,
            "  class {}: formula {} oracle {}{mark}",
            c.class, c.formula, c.oracle
        )?;
    }
    Ok(())
}

fn csv_reports(out: &mut impl Write, reports: &[CountReport], per_class: bool) -> io::Result<()> {
    if per_class {
        csv_rows(
            out,
            reports.iter().flat_map(CountReport::class_rows),
            &CLASS_HEADER,
        )
    } else {
        csv_rows(out, reports.iter().map(CountReport::row), &REPORT_HEADER)
    }
}

pub fn write_reports(
    out: &mut impl Write,
    format: Format,
    reports: &[CountReport],
    per_class: bool,
) -> io::Result<()> {
    match format {
        Format::Json => json(out, reports),
        Format::Csv => csv_reports(out, reports, per_class),
        Format::Human => reports.iter().try_for_each(|r| human_report(out, r)),
    }
}

pub fn write_sweep(
    out: &mut impl Write,
    format: Format,
    s: &SweepOutput,
    per_class: bool,
) -> io::Result<()> {
    match format {
        Format::Json => json(out, s),
        Format::Csv => {
            csv_reports(out, &s.reports, per_class)?;
            if let Some(t) = &s.self_test {
                summarize_self_test(&mut io::stderr(), t)?;
            }
            Ok(())
        }
        Format::Human => {
            s.reports.iter().try_for_each(|r| human_report(out, r))?;
            let matched = s.reports.iter().filter(|r| r.matched).count();
            writeln!(out, "{matched}/{} reports match", s.reports.len())?;
            if let Some(t) = &s.self_test {
                summarize_self_test(out, t)?;
            }
            Ok(())
        }
    }
}

fn summarize_self_test(out: &mut impl Write, t: &SelfTestOutput) -> io::Result<()> {
    let held = t.identities.iter().filter(|c| c.holds).count();
    writeln!(out, "{held}/{} identities hold", t.identities.len())?;
    for c in t.identities.iter().filter(|c| !c.holds) {
        writeln!(
            out,
            "  FAILED {} p={} e={:?} n={}: {} != {}",
            c.name, c.p, c.e, c.n, c.lhs, c.rhs
        )?;
    }
    writeln!(
        out,
        "{}/{} p-adic property cases pass",
        t.properties
            .cases
            .saturating_sub(t.properties.failures.len() as u64),
        t.properties.cases
    )?;
    for f in &t.properties.failures {
        writeln!(out, "  FAILED {f}")?;
    }
    Ok(())
}

pub fn write_ratios(
    out: &mut impl Write,
    format: Format,
    reports: &[RatioReport],
) -> io::Result<()> {
    match format {
        Format::Json => json(out, reports),
        Format::Csv => csv_rows(
            out,
            reports.iter().map(|r| {
                (
                    r.kind,
                    r.p,
                    r.e,
                    r.n,
                    r.full_count,
                    r.reduced_count,
                    &r.ratio,
                    r.ratio_value,
                    &r.reference,
                )
            }),
            &[
                "kind",
                "p",
                "e",
                "n",
                "full_count",
                "reduced_count",
                "ratio",
                "ratio_value",
                "reference",
            ],
        ),
        Format::Human => {
            for r in reports {
                writeln!(
                    out,
                    "{} p={} e={} n={}: {} of {} in 1..=p^e, ratio {} ({:.4}), reference {}",
                    r.kind,
                    r.p,
                    r.e,
                    r.n,
                    r.reduced_count,
                    r.full_count,
                    r.ratio,
                    r.ratio_value,
                    r.reference
                )?;
            }
            Ok(())
        }
    }
}
