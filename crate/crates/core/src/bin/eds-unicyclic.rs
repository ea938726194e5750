use std::fs;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use eds_unicyclic::audit::{
    check_degree_bounds, check_lemma, check_theorem, formula_audit, matching_oracle_check, oracle_fingerprints,
    reproduce_tables, AuditedFormula, CellStatus, CheckReport, FormulaStatus, LemmaId, TheoremId,
};
use eds_unicyclic::enumeration::{unicyclic_canonical_code, ClassFilter, UnicyclicEnumerator};
use eds_unicyclic::families::parse_family_spec;
use eds_unicyclic::formulas::Rank;
use eds_unicyclic::graph::{eds, parse_edge_list, wiener, Graph, InvariantReport};
use eds_unicyclic::graph6;

#[derive(Parser)]
#[command(
    name = "eds-unicyclic",
    version,
    about = "Eccentric distance sum toolkit for unicyclic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance invariants of one graph.
    Invariants(InvariantsArgs),
    /// List unicyclic graphs of one order up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Recompute the tabulated minimal and second minimal values.
    Tables(TablesArgs),
    /// Sweep a theorem, lemma or auxiliary property over small orders.
    Check(CheckArgs),
    /// Compare printed closed forms with direct computation.
    Formulas(FormulasArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "family"])))]
#[command(group(ArgGroup::new("out").args(["json", "csv"])))]
struct InvariantsArgs {
    /// Edge-list file (`n <order>` header then `u v` lines) or a graph6 line.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Family expression such as `U(10,5)` or `H(9,5;[1^1],[1^2],[1^1])`.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    csv: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Codes,
    Graph6,
    Csv,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Keep only graphs with this matching number.
    #[arg(long)]
    m: Option<usize>,
    /// Keep only graphs with this cycle length.
    #[arg(long)]
    girth: Option<usize>,
    /// Keep only graphs with exactly this maximum degree.
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long, value_enum, default_value = "codes")]
    format: ListFormat,
}

#[derive(Args)]
struct TablesArgs {
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    /// 1 for minimal values, 2 for second minimal values.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    rank: Option<u8>,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["theorem", "lemma", "degree_bounds", "oracle"])))]
struct CheckArgs {
    /// One of 3.1 to 3.7.
    #[arg(long)]
    theorem: Option<String>,
    /// One of 2.1, 2.3, 2.4, 2.5, 2.6.
    #[arg(long)]
    lemma: Option<String>,
    /// Maximum-degree bounds and their equality cases.
    #[arg(long)]
    degree_bounds: bool,
    /// Enumeration and matching algorithms against brute-force oracles.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    m_max: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FormulasArgs {
    /// 2.1 for H_{n,k}, 2.2 for U_n(k), 2.3 for the cycle formulas.
    #[arg(long)]
    which: String,
    /// Order range `A..B` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    /// Cycle-length range `A..B` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    k: Option<RangeInclusive<usize>>,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    json: bool,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected `A..B` or a number, found `{s}`");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok(a..=b)
}

enum Failure {
    Usage(String),
    Violation,
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Invariants(a) => invariants(a, &mut out),
        Command::Enumerate(a) => enumerate(a, &mut out),
        Command::Tables(a) => tables(a, &mut out),
        Command::Check(a) => check(a, &mut out),
        Command::Formulas(a) => formulas(a, &mut out),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Violation), _) => ExitCode::from(1),
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let trimmed = text.trim();
    let looks_graph6 = trimmed.lines().count() == 1 && !trimmed.contains(char::is_whitespace);
    if looks_graph6 {
        return Ok(graph6::decode(trimmed.strip_prefix(">>graph6<<").unwrap_or(trimmed))?);
    }
    Ok(parse_edge_list(&text)?)
}

fn json<T: Serialize>(out: &mut impl Write, value: &T) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct InvariantsOutput {
    code: Option<String>,
    #[serde(flatten)]
    report: InvariantReport,
}

fn invariants(a: InvariantsArgs, out: &mut impl Write) -> Outcome {
    let g = match (&a.input, &a.family) {
        (Some(path), _) => read_graph(path)?,
        (None, Some(spec)) => parse_family_spec(spec)?.build()?,
        (None, None) => unreachable!("clap enforces one source"),
    };
    let report = InvariantReport::compute(&g)?;
    let code = unicyclic_canonical_code(&g).ok().map(|c| c.to_string());
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    if a.json {
        return json(out, &InvariantsOutput { code, report });
    }
    if a.csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        w.write_record([
            "order",
            "size",
            "eds",
            "wiener",
            "degree_distance",
            "matching_number",
            "girth",
            "max_degree",
            "radius",
            "diameter",
            "code",
        ])?;
        w.write_record([
            report.order.to_string(),
            report.size.to_string(),
            report.eds.to_string(),
            report.wiener.to_string(),
            report.degree_distance.to_string(),
            report.matching_number.to_string(),
            report.girth.to_string(),
            report.max_degree.to_string(),
            report.radius.to_string(),
            report.diameter.to_string(),
            code.unwrap_or_default(),
        ])?;
        w.flush()?;
        return Ok(());
    }
    writeln!(out, "order            {}", report.order)?;
    writeln!(out, "size             {}", report.size)?;
    if let Some(code) = &code {
        writeln!(out, "code             {code}")?;
    }
    writeln!(out, "eds              {}", report.eds)?;
    writeln!(out, "wiener           {}", report.wiener)?;
    writeln!(out, "degree_distance  {}", report.degree_distance)?;
    writeln!(out, "matching_number  {}", report.matching_number)?;
    writeln!(out, "girth            {}", report.girth)?;
    writeln!(out, "max_degree       {}", report.max_degree)?;
    writeln!(out, "radius           {}", report.radius)?;
    writeln!(out, "diameter         {}", report.diameter)?;
    writeln!(out, "eccentricities   {}", join(&report.eccentricities))?;
    writeln!(out, "transmissions    {}", join(&report.transmissions))?;
    Ok(())
}

fn enumerate(a: EnumerateArgs, out: &mut impl Write) -> Outcome {
    let e = UnicyclicEnumerator::new(a.n)?;
    let filter = ClassFilter {
        girth: a.girth,
        matching_number: a.m,
        max_degree: a.max_degree,
    };
    match a.format {
        ListFormat::Codes => {
            for c in e.classes(filter) {
                writeln!(out, "{}", c.code)?;
            }
        }
        ListFormat::Graph6 => {
            for c in e.classes(filter) {
                writeln!(out, "{}", graph6::encode(&c.graph))?;
            }
        }
        ListFormat::Csv => {
            let rows = e.par_map(filter, |c| {
                Some([
                    c.code.to_string(),
                    a.n.to_string(),
                    c.code.cycle_len().to_string(),
                    c.matching_number.to_string(),
                    c.graph.max_degree().to_string(),
                    eds(&c.graph).ok()?.to_string(),
                    wiener(&c.graph).ok()?.to_string(),
                ])
            });
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["code", "n", "k", "m", "max_degree", "eds", "wiener"])?;
            for r in rows {
                w.write_record(&r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn status_text(s: CellStatus) -> &'static str {
    match s {
        CellStatus::Match => "match",
        CellStatus::ValueMismatch => "value-mismatch",
        CellStatus::GraphMismatch => "graph-mismatch",
        CellStatus::ErratumKnown => "erratum-known",
    }
}

fn tables(a: TablesArgs, out: &mut impl Write) -> Outcome {
    let rank = a
        .rank
        .map(|r| Rank::from_index(r as usize).expect("clap restricts the range"));
    let cells = reproduce_tables(a.n_max, rank)?;
    let codes = |c: &eds_unicyclic::audit::CellReport| {
        c.computed_codes
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    if a.csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        w.write_record([
            "rank",
            "n",
            "m",
            "printed",
            "computed",
            "status",
            "printed_graph",
            "computed_codes",
        ])?;
        for c in &cells {
            w.write_record([
                (c.rank as u8).to_string(),
                c.n.to_string(),
                c.m.to_string(),
                c.printed.to_string(),
                c.computed.map(|v| v.to_string()).unwrap_or_default(),
                status_text(c.status).to_string(),
                c.printed_graph.to_string(),
                codes(c),
            ])?;
        }
        w.flush()?;
    } else {
        writeln!(out, "rank  n  m  printed  computed  status          graph")?;
        for c in &cells {
            writeln!(
                out,
                "{:>4} {:>2} {:>2} {:>8} {:>9}  {:<15} {}",
                c.rank as u8,
                c.n,
                c.m,
                c.printed,
                c.computed.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
                status_text(c.status),
                c.printed_graph
            )?;
        }
    }
    let ok = cells
        .iter()
        .all(|c| matches!(c.status, CellStatus::Match | CellStatus::ErratumKnown));
    if ok {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn print_report(out: &mut impl Write, r: &CheckReport) -> io::Result<()> {
    writeln!(
        out,
        "{}: {} ({} checked, {} violations, {} errata)",
        r.id,
        if r.passed { "pass" } else { "FAIL" },
        r.checked,
        r.violations.len(),
        r.errata.len()
    )?;
    for f in &r.violations {
        writeln!(out, "  violation  {}  {}", f.subject, f.detail)?;
    }
    for f in &r.errata {
        writeln!(out, "  erratum    {}  {}", f.subject, f.detail)?;
    }
    for f in &r.notes {
        writeln!(out, "  note       {}  {}", f.subject, f.detail)?;
    }
    Ok(())
}

fn check(a: CheckArgs, out: &mut impl Write) -> Outcome {
    let report = if let Some(id) = &a.theorem {
        check_theorem(id.parse::<TheoremId>()?, a.n_max, a.m_max)?
    } else if let Some(id) = &a.lemma {
        check_lemma(id.parse::<LemmaId>()?, a.n_max, a.m_max)?
    } else if a.degree_bounds {
        check_degree_bounds(a.n_max.unwrap_or(10))?
    } else {
        let mut r = oracle_fingerprints(a.n_max.unwrap_or(7).min(7))?;
        let m = matching_oracle_check(a.n_max.unwrap_or(10))?;
        r.id = "oracles".into();
        r.checked += m.checked;
        r.passed &= m.passed;
        r.violations.extend(m.violations);
        r
    };
    if a.json {
        json(out, &report)?;
    } else {
        print_report(out, &report)?;
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn formulas(a: FormulasArgs, out: &mut impl Write) -> Outcome {
    let which = AuditedFormula::parse(&a.which)
        .ok_or_else(|| Failure::Usage(format!("--which must be 2.1, 2.2 or 2.3, found `{}`", a.which)))?;
    let rows = formula_audit(which, a.n, a.k)?;
    let status = |s: FormulaStatus| match s {
        FormulaStatus::Agree => "agree",
        FormulaStatus::DocumentedDelta => "documented-delta",
        FormulaStatus::Mismatch => "mismatch",
        FormulaStatus::Rejected => "rejected",
    };
    let frac = |num: Option<i64>, den: Option<i64>| match (num, den) {
        (Some(n), Some(1)) => n.to_string(),
        (Some(n), Some(d)) => format!("{n}/{d}"),
        _ => "-".into(),
    };
    if a.json {
        json(out, &rows)?;
    } else if a.csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        w.write_record(["formula", "n", "k", "printed", "computed", "delta", "status"])?;
        for r in &rows {
            w.write_record([
                r.id.map(|i| i.to_string()).unwrap_or_default(),
                r.n.map(|n| n.to_string()).unwrap_or_default(),
                r.k.to_string(),
                frac(r.printed_num, r.printed_den),
                r.computed.to_string(),
                frac(r.delta_num, r.delta_den),
                status(r.status).to_string(),
            ])?;
        }
        w.flush()?;
    } else {
        writeln!(out, "formula      n   k   printed  computed    delta  status")?;
        for r in &rows {
            writeln!(
                out,
                "{:<10} {:>3} {:>3} {:>9} {:>9} {:>8}  {}",
                r.id.map(|i| i.to_string()).unwrap_or_else(|| "-".into()),
                r.n.map(|n| n.to_string()).unwrap_or_else(|| "-".into()),
                r.k,
                frac(r.printed_num, r.printed_den),
                r.computed,
                frac(r.delta_num, r.delta_den),
                status(r.status)
            )?;
        }
    }
    if rows.iter().any(|r| r.status == FormulaStatus::Mismatch) {
        Err(Failure::Violation)
    } else {
        Ok(())
    }
}
