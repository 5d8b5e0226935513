//! Report records and their three encodings: aligned text tables, JSON,
//! and `;`-separated CSV. Every integer is emitted as a decimal string so
//! arbitrarily large values survive any JSON parser.

use std::collections::BTreeMap;
use std::fmt::Display;

use clap::ValueEnum;
use serde::Serialize;
use stcore::report::{Comparison, Report};
use stcore::statistics::CoreStats;
use stcore::{GapPoset, OrderIdeal, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
    Csv,
}

fn dec(v: impl Display) -> String {
    v.to_string()
}

fn decs<T: Display>(vs: &[T]) -> Vec<String> {
    vs.iter().map(dec).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct CoreRecord {
    /// Elements in decreasing order.
    pub ideal: Vec<String>,
    pub partition: String,
    pub size: String,
}

impl CoreRecord {
    pub fn new(elements: &[u64], partition: &Partition) -> Self {
        let mut ideal = decs(elements);
        ideal.reverse();
        CoreRecord { ideal, partition: partition.to_string(), size: dec(partition.size()) }
    }

    fn ideal_text(&self) -> String {
        format!("{{{}}}", self.ideal.join(","))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StatsRecord {
    pub s: String,
    pub t: String,
    pub count: String,
    pub sum_sizes: String,
    pub max_size: String,
    /// Reduced fraction `p/q`, or an integer when `q = 1`.
    pub average: String,
}

impl From<&CoreStats> for StatsRecord {
    fn from(st: &CoreStats) -> Self {
        StatsRecord {
            s: dec(st.s),
            t: dec(st.t),
            count: dec(&st.count),
            sum_sizes: dec(&st.sum_sizes),
            max_size: dec(&st.max_size),
            average: dec(&st.average),
        }
    }
}

impl StatsRecord {
    fn fields(&self) -> [(&'static str, &str); 6] {
        [
            ("s", &self.s),
            ("t", &self.t),
            ("count", &self.count),
            ("sum_sizes", &self.sum_sizes),
            ("max_size", &self.max_size),
            ("average", &self.average),
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Listing {
    pub s: String,
    pub t: String,
    pub cores: Vec<CoreRecord>,
    pub stats: StatsRecord,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonRecord {
    pub claim: String,
    pub index: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

impl From<&Comparison> for ComparisonRecord {
    fn from(c: &Comparison) -> Self {
        ComparisonRecord {
            claim: c.claim.to_string(),
            index: c.index.clone(),
            lhs: dec(&c.lhs),
            rhs: dec(&c.rhs),
            equal: c.equal(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRecord {
    pub target: String,
    pub passed: bool,
    pub comparisons: Vec<ComparisonRecord>,
}

impl VerifyRecord {
    pub fn new(target: &str, report: &Report) -> Self {
        VerifyRecord {
            target: target.to_string(),
            passed: report.passed(),
            comparisons: report.rows.iter().map(ComparisonRecord::from).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BijectionRecord {
    pub s: String,
    pub t: String,
    #[serde(flatten)]
    pub core: CoreRecord,
}

impl BijectionRecord {
    pub fn new(ideal: &OrderIdeal, partition: &Partition) -> Self {
        let (s, t) = ideal.generators();
        BijectionRecord { s: dec(s), t: dec(t), core: CoreRecord::new(ideal.elements(), partition) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PosetRecord {
    pub s: String,
    pub t: String,
    pub gaps: Vec<String>,
    /// Each gap mapped to the gaps it covers.
    pub covers: BTreeMap<String, Vec<String>>,
}

impl From<&GapPoset> for PosetRecord {
    fn from(p: &GapPoset) -> Self {
        let covers = p
            .gaps()
            .iter()
            .map(|&a| (dec(a), decs(&p.covers_down(a).expect("gap"))))
            .collect();
        PosetRecord { s: dec(p.s()), t: dec(p.t()), gaps: decs(p.gaps()), covers }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct YoungRecord {
    pub partition: String,
    pub size: String,
    pub hooks: Vec<Vec<String>>,
}

impl From<&Partition> for YoungRecord {
    fn from(p: &Partition) -> Self {
        YoungRecord {
            partition: p.to_string(),
            size: dec(p.size()),
            hooks: p.hook_lengths().rows().iter().map(|r| decs(r)).collect(),
        }
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("records serialize");
    text.push('\n');
    text
}

/// Writes `rows` as `;`-separated CSV with an optional header.
pub fn csv<I, R>(header: Option<&[&str]>, rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::WriterBuilder::new().delimiter(b';').flexible(true).from_writer(Vec::new());
    if let Some(h) = header {
        w.write_record(h).expect("write to memory");
    }
    for row in rows {
        w.write_record(row).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
}

/// Left-aligned columns separated by two spaces, with a dashed rule under
/// the header.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut out = String::new();
        for (k, (cell, w)) in cells.zip(&widths).enumerate() {
            if k > 0 {
                out.push_str("  ");
            }
            out.push_str(&format!("{cell:<w$}"));
        }
        out.trim_end().to_string() + "\n"
    };
    let mut out = line(&mut header.iter().copied());
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out += &line(&mut rule.iter().map(String::as_str));
    for row in rows {
        out += &line(&mut row.iter().map(String::as_str));
    }
    out
}

const CORE_HEADER: [&str; 3] = ["ideal", "partition", "size"];

fn core_rows(cores: &[CoreRecord]) -> Vec<Vec<String>> {
    cores.iter().map(|c| vec![c.ideal_text(), c.partition.clone(), c.size.clone()]).collect()
}

fn stats_line(st: &StatsRecord) -> String {
    format!("count {}  sum {}  max {}  average {}\n", st.count, st.sum_sizes, st.max_size, st.average)
}

pub fn listing(format: Format, l: &Listing) -> String {
    match format {
        Format::Json => json(l),
        Format::Csv => csv(Some(&CORE_HEADER), core_rows(&l.cores)),
        Format::Ascii => table(&CORE_HEADER, &core_rows(&l.cores)) + &stats_line(&l.stats),
    }
}

pub fn stats(format: Format, st: &StatsRecord) -> String {
    let fields = st.fields();
    match format {
        Format::Json => json(st),
        Format::Csv => csv(Some(&fields.map(|f| f.0)), [fields.map(|f| f.1)]),
        Format::Ascii => fields.iter().map(|(k, v)| format!("{k:<10} {v}\n")).collect(),
    }
}

const VERIFY_HEADER: [&str; 5] = ["claim", "index", "lhs", "rhs", "equal"];

pub fn verify(format: Format, v: &VerifyRecord) -> String {
    let rows: Vec<Vec<String>> = v
        .comparisons
        .iter()
        .map(|c| vec![c.claim.clone(), c.index.clone(), c.lhs.clone(), c.rhs.clone(), c.equal.to_string()])
        .collect();
    match format {
        Format::Json => json(v),
        Format::Csv => csv(Some(&VERIFY_HEADER), rows),
        Format::Ascii => {
            let failed = v.comparisons.iter().filter(|c| !c.equal).count();
            let verdict = if failed == 0 {
                format!("{}: all {} comparisons equal\n", v.target, rows.len())
            } else {
                format!("{}: {failed} of {} comparisons differ\n", v.target, rows.len())
            };
            table(&VERIFY_HEADER, &rows) + &verdict
        }
    }
}

pub fn bijection(format: Format, b: &BijectionRecord) -> String {
    match format {
        Format::Json => json(b),
        Format::Csv => csv(Some(&CORE_HEADER), core_rows(std::slice::from_ref(&b.core))),
        Format::Ascii => format!(
            "ideal      {}\npartition  {}\nsize       {}\n",
            b.core.ideal_text(),
            b.core.partition,
            b.core.size
        ),
    }
}

pub fn young(format: Format, p: &Partition) -> String {
    match format {
        Format::Json => json(&YoungRecord::from(p)),
        Format::Csv => csv(None, YoungRecord::from(p).hooks),
        Format::Ascii => lines(crate::render::young(p)),
    }
}

pub fn hasse(format: Format, p: &GapPoset) -> String {
    match format {
        Format::Json => json(&PosetRecord::from(p)),
        Format::Csv => {
            let edges = p.gaps().iter().flat_map(|&a| {
                p.covers_down(a).expect("gap").into_iter().map(move |b| [dec(a), dec(b)])
            });
            csv(Some(&["upper", "lower"]), edges)
        }
        Format::Ascii => lines(crate::render::hasse(p)),
    }
}

fn lines(ls: Vec<String>) -> String {
    ls.into_iter().map(|l| l + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment() {
        let rows = vec![vec!["{7,4}".to_string(), "6,3".to_string(), "9".to_string()]];
        assert_eq!(
            table(&CORE_HEADER, &rows),
            "ideal  partition  size\n-----  ---------  ----\n{7,4}  6,3        9\n"
        );
    }

    #[test]
    fn csv_uses_semicolons() {
        let out = csv(Some(&CORE_HEADER), [["{4,1}", "3,1", "4"]]);
        assert_eq!(out, "ideal;partition;size\n{4,1};3,1;4\n");
    }

    #[test]
    fn core_record_orders_ideal_downward() {
        let p: Partition = "4,2,1,1".parse().unwrap();
        let r = CoreRecord::new(&[1, 2, 4, 7], &p);
        assert_eq!(r.ideal, ["7", "4", "2", "1"]);
        assert_eq!(r.ideal_text(), "{7,4,2,1}");
        assert_eq!(CoreRecord::new(&[], &Partition::empty()).ideal_text(), "{}");
    }

    #[test]
    fn poset_record_covers() {
        let r = PosetRecord::from(&GapPoset::new(3, 5).unwrap());
        assert_eq!(r.gaps, ["1", "2", "4", "7"]);
        assert_eq!(r.covers["7"], ["4", "2"]);
        assert_eq!(r.covers["4"], ["1"]);
        assert!(r.covers["1"].is_empty());
    }
}
