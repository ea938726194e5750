use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enumeration::{
    labeled_oracle_enumerate, unicyclic_canonical_code, ClassFilter, UnicyclicClass, UnicyclicCode, UnicyclicEnumerator,
};
use crate::families::{make_hnk, make_sun, make_unk, FamilySpec, NamedTag};
use crate::formulas::{eval, predicted_extremal, sun, FormulaId, Prediction, Rank};
use crate::graph::{eds, unique_cycle, wiener, Graph};
use crate::matching::{matching_number_oracle, matching_number_unicyclic, pendant_unsaturated_witness};

use super::bounds::all_bound_reports;
use super::ranking::{rank_order, RankingRecord};
use super::AuditError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub subject: String,
    pub detail: String,
}

impl Finding {
    fn new(subject: impl fmt::Display, detail: impl Into<String>) -> Self {
        Finding {
            subject: subject.to_string(),
            detail: detail.into(),
        }
    }
}

/// Outcome of a sweep. `errata` holds documented discrepancies that do not
/// fail the check; `notes` holds cells the sweep skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub checked: usize,
    pub passed: bool,
    pub violations: Vec<Finding>,
    pub errata: Vec<Finding>,
    pub notes: Vec<Finding>,
}

impl CheckReport {
    fn new(id: impl Into<String>) -> Self {
        CheckReport {
            id: id.into(),
            checked: 0,
            passed: true,
            violations: Vec::new(),
            errata: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn violation(&mut self, f: Finding) {
        self.passed = false;
        self.violations.push(f);
    }
}

macro_rules! id_enum {
    ($name:ident { $($variant:ident = $text:literal),* $(,)? }) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
        pub enum $name {
            $(#[serde(rename = $text)] $variant,)*
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text,)*
                }
            }
        }

        impl FromStr for $name {
            type Err = AuditError;

            fn from_str(s: &str) -> Result<Self, AuditError> {
                match s {
                    $($text => Ok($name::$variant),)*
                    _ => Err(AuditError::UnknownId(s.to_string())),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    };
}

id_enum!(TheoremId { T3_1 = "3.1", T3_2 = "3.2", T3_3 = "3.3", T3_4 = "3.4", T3_5 = "3.5", T3_6 = "3.6", T3_7 = "3.7" });
id_enum!(LemmaId { L2_1 = "2.1", L2_3 = "2.3", L2_4 = "2.4", L2_5 = "2.5", L2_6 = "2.6" });

fn code_of(spec: &FamilySpec) -> Result<UnicyclicCode, AuditError> {
    Ok(unicyclic_canonical_code(&spec.build()?)?)
}

impl TheoremId {
    /// The `(n, m, rank)` cells the theorem is checked on. Without overrides
    /// the ranges are the ones exercised by the acceptance suite.
    pub fn cells(self, n_max: Option<usize>, m_max: Option<usize>) -> Vec<(usize, usize, Rank)> {
        use TheoremId::*;
        let perfect = |from: usize, default_m: usize, rank| -> Vec<(usize, usize, Rank)> {
            let top = m_max.unwrap_or(default_m).min(n_max.map_or(usize::MAX, |n| n / 2));
            (from..=top).map(|m| (2 * m, m, rank)).collect()
        };
        let fixed_m = |m: usize, from: usize, default_n: usize| -> Vec<(usize, usize, Rank)> {
            (from..=n_max.unwrap_or(default_n))
                .map(|n| (n, m, Rank::Second))
                .collect()
        };
        match self {
            T3_1 => perfect(4, 6, Rank::Minimum),
            T3_2 => perfect(5, 6, Rank::Second),
            T3_3 => {
                let mut out = Vec::new();
                for n in 4..=n_max.unwrap_or(13) {
                    for m in 2..=(n / 2).min(m_max.unwrap_or(usize::MAX)) {
                        if m <= 3 || n >= 9 {
                            out.push((n, m, Rank::Minimum));
                        }
                    }
                }
                out
            }
            T3_4 => fixed_m(2, 5, 12),
            T3_5 => fixed_m(3, 6, 12),
            T3_6 => fixed_m(4, 9, 16),
            T3_7 => {
                let mut out = Vec::new();
                for m in 5..=m_max.unwrap_or(5) {
                    for n in 2 * m..=n_max.unwrap_or(13) {
                        out.push((n, m, Rank::Second));
                    }
                }
                out
            }
        }
    }
}

/// Compares a ranking with a prediction on value and on the exact set of
/// extremal classes.
pub fn compare_prediction(
    record: &RankingRecord,
    rank: Rank,
    prediction: &Prediction,
) -> Result<Option<String>, AuditError> {
    let Prediction::Covered { value, graphs, .. } = prediction else {
        return Ok(Some("no prediction for this cell".into()));
    };
    let (computed, codes) = match rank {
        Rank::Minimum => (Some(record.min), &record.min_codes),
        Rank::Second => (record.second, &record.second_codes),
    };
    let mut expected: Vec<UnicyclicCode> = graphs.iter().map(code_of).collect::<Result<_, _>>()?;
    expected.sort();
    expected.dedup();
    if computed.map(|v| v as i64) != Some(*value) {
        return Ok(Some(format!("predicted {value}, computed {computed:?}")));
    }
    if *codes != expected {
        let show = |c: &[UnicyclicCode]| c.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
        return Ok(Some(format!(
            "extremal classes differ: predicted [{}], computed [{}]",
            show(&expected),
            show(codes)
        )));
    }
    Ok(None)
}

/// Checks an extremal theorem against exhaustive rankings.
pub fn check_theorem(id: TheoremId, n_max: Option<usize>, m_max: Option<usize>) -> Result<CheckReport, AuditError> {
    let mut report = CheckReport::new(format!("theorem {id}"));
    let mut rankings: BTreeMap<usize, BTreeMap<usize, RankingRecord>> = BTreeMap::new();
    for (n, m, rank) in id.cells(n_max, m_max) {
        let subject = format!("n={n} m={m} rank={}", rank as u8);
        let prediction = predicted_extremal(n, m, rank);
        if prediction == Prediction::Uncovered {
            report.notes.push(Finding::new(subject, "uncovered regime"));
            continue;
        }
        if let std::collections::btree_map::Entry::Vacant(e) = rankings.entry(n) {
            e.insert(rank_order(n)?);
        }
        let record = rankings[&n].get(&m).ok_or(AuditError::EmptyClass { n, m })?;
        report.checked += 1;
        if let Some(problem) = compare_prediction(record, rank, &prediction)? {
            report.violation(Finding::new(subject, problem));
        }
    }
    Ok(report)
}

fn classes(n: usize, filter: ClassFilter) -> Result<Vec<UnicyclicClass>, AuditError> {
    let e = UnicyclicEnumerator::new(n)?;
    Ok(e.par_map(filter, Some))
}

/// Vertices of the pendant tree hanging at cycle vertex `root`, with their
/// distance from `root`.
fn pendant_tree(g: &Graph, root: usize, on_cycle: &[bool]) -> Vec<(usize, usize)> {
    let mut dist = vec![usize::MAX; g.order()];
    let mut out = Vec::new();
    let mut queue = VecDeque::from([root]);
    dist[root] = 0;
    while let Some(x) = queue.pop_front() {
        out.push((x, dist[x]));
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX && !on_cycle[y] {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    out
}

fn lemma_2_1(report: &mut CheckReport, ms: std::ops::RangeInclusive<usize>) -> Result<(), AuditError> {
    for m in ms {
        for c in classes(2 * m, ClassFilter::with_matching(m))? {
            let g = &c.graph;
            let cycle = unique_cycle(g)?.expect("unicyclic");
            let mut on_cycle = vec![false; g.order()];
            for &x in &cycle {
                on_cycle[x] = true;
            }
            for &r in &cycle {
                let tree = pendant_tree(g, r, &on_cycle);
                let far = tree
                    .iter()
                    .filter(|&&(x, _)| x != r && g.degree(x) == 1)
                    .map(|&(_, d)| d)
                    .max();
                let Some(far) = far.filter(|&d| d >= 2) else { continue };
                for &(u, _) in tree.iter().filter(|&&(x, d)| d == far && g.degree(x) == 1) {
                    report.checked += 1;
                    let v = g.neighbors(u)[0];
                    if g.degree(v) != 2 {
                        report.violation(Finding::new(
                            &c.code,
                            format!("furthest pendant {u} has neighbour {v} of degree {}", g.degree(v)),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn lemma_2_3(report: &mut CheckReport, n_max: usize) -> Result<(), AuditError> {
    for n in 4..=n_max {
        for c in classes(n, ClassFilter::default())? {
            if n <= 2 * c.matching_number || c.graph.max_degree() == 2 {
                continue;
            }
            report.checked += 1;
            if pendant_unsaturated_witness(&c.graph)?.is_none() {
                report.violation(Finding::new(
                    &c.code,
                    "every maximum matching saturates every pendant vertex",
                ));
            }
        }
    }
    Ok(())
}

fn lemma_2_4(report: &mut CheckReport, n_max: usize) -> Result<(), AuditError> {
    for n in 4..=n_max {
        let per_class: Vec<_> =
            UnicyclicEnumerator::new(n)?.par_map(ClassFilter::default(), |c| Some(all_bound_reports(&c.graph)));
        for reports in per_class {
            for r in reports? {
                report.checked += 1;
                let subject = format!("{} u={} {:?}", r.code, r.u, r.kind);
                let detail = format!(
                    "lhs {} rhs {} equality {} predicted {}",
                    r.lhs, r.rhs, r.equality, r.predicted_equality
                );
                if r.precondition_gap {
                    if !r.holds {
                        report
                            .errata
                            .push(Finding::new(subject, format!("precondition gap: {detail}")));
                    }
                } else if r.is_violation() {
                    report.violation(Finding::new(subject, detail));
                }
            }
        }
    }
    Ok(())
}

fn lemma_2_5(report: &mut CheckReport, ms: std::ops::RangeInclusive<usize>) -> Result<(), AuditError> {
    for m in ms {
        let threshold = eval(FormulaId::LEMMA25_THRESHOLD, &[m as i64])?.value.to_integer();
        for k in m + 1..=2 * m - 2 {
            report.checked += 1;
            let value = eds(&make_unk(2 * m, k)?)? as i64;
            if value <= threshold {
                report.violation(Finding::new(
                    format!("U_{}({k})", 2 * m),
                    format!("eds {value} <= threshold {threshold}"),
                ));
            }
        }
    }
    Ok(())
}

/// Perfect-matching unicyclic graphs without a pendant vertex whose
/// neighbour has degree two.
fn is_double_prime(g: &Graph) -> bool {
    g.pendant_vertices().iter().all(|&u| g.degree(g.neighbors(u)[0]) != 2)
}

fn lemma_2_6(
    report: &mut CheckReport,
    suns: std::ops::RangeInclusive<usize>,
    near: std::ops::RangeInclusive<usize>,
    sweep: std::ops::RangeInclusive<usize>,
) -> Result<(), AuditError> {
    for m in suns {
        report.checked += 1;
        let value = eds(&make_sun(m)?)? as i64;
        let printed = sun(m as i64)?.value;
        if printed != value.into() {
            report.violation(Finding::new(
                format!("sun m={m}"),
                format!("eds {value}, formula {printed}"),
            ));
        }
    }
    for m in near {
        report.checked += 1;
        let value = eds(&make_hnk(2 * m, 2 * m - 1)?)? as i64;
        let printed = eval(FormulaId::NEAR_HAMILTONIAN, &[m as i64])?.value;
        if printed != value.into() {
            report.violation(Finding::new(
                format!("C_{} plus pendant", 2 * m - 1),
                format!("eds {value}, formula {printed}"),
            ));
        }
    }
    for m in sweep {
        let threshold = eval(FormulaId::LEMMA25_THRESHOLD, &[m as i64])?.value.to_integer();
        for c in classes(2 * m, ClassFilter::with_matching(m))? {
            if !is_double_prime(&c.graph) {
                continue;
            }
            report.checked += 1;
            let value = eds(&c.graph)? as i64;
            if value <= threshold {
                report.violation(Finding::new(&c.code, format!("eds {value} <= threshold {threshold}")));
            }
        }
    }
    Ok(())
}

/// Runs a lemma sweep. `n_max` bounds the order for 2.3 and 2.4 (default
/// 10); `m_max` bounds the matching number for 2.1 (default 5), 2.5
/// (default 8) and 2.6 (defaults: sun graphs to 10, the rest to 8).
pub fn check_lemma(id: LemmaId, n_max: Option<usize>, m_max: Option<usize>) -> Result<CheckReport, AuditError> {
    let mut report = CheckReport::new(format!("lemma {id}"));
    match id {
        LemmaId::L2_1 => lemma_2_1(&mut report, 3..=m_max.unwrap_or(5))?,
        LemmaId::L2_3 => lemma_2_3(&mut report, n_max.unwrap_or(10))?,
        LemmaId::L2_4 => lemma_2_4(&mut report, n_max.unwrap_or(10))?,
        LemmaId::L2_5 => lemma_2_5(&mut report, 5..=m_max.unwrap_or(8))?,
        LemmaId::L2_6 => lemma_2_6(
            &mut report,
            5..=m_max.unwrap_or(10),
            5..=m_max.unwrap_or(8),
            5..=m_max.unwrap_or(8),
        )?,
    }
    Ok(report)
}

/// Sweeps the maximum-degree bounds `Δ <= n - m + 1` (equality exactly on
/// `U_{n,m}`) and, away from `U_{n,m}`, `Δ <= n - m` (equality claimed
/// exactly on the five siblings). Equality cases of the second bound
/// outside the sibling set are reported as errata.
pub fn check_degree_bounds(n_max: usize) -> Result<CheckReport, AuditError> {
    let mut report = CheckReport::new("degree bounds");
    for n in 4..=n_max {
        let mut named: BTreeMap<usize, (Option<UnicyclicCode>, BTreeSet<UnicyclicCode>)> = BTreeMap::new();
        for m in 2..=n / 2 {
            let u = NamedTag::U.expand(n, m).ok().map(|s| code_of(&s)).transpose()?;
            let mut siblings = BTreeSet::new();
            for tag in NamedTag::SIBLINGS {
                if let Ok(spec) = tag.expand(n, m) {
                    siblings.insert(code_of(&spec)?);
                }
            }
            if let Some(u) = &u {
                siblings.remove(u);
            }
            named.insert(m, (u, siblings));
        }
        for c in classes(n, ClassFilter::default())? {
            let m = c.matching_number;
            let delta = c.graph.max_degree();
            report.checked += 1;
            let (u, siblings) = match named.get(&m) {
                Some(entry) => (entry.0.as_ref(), Some(&entry.1)),
                None => (None, None),
            };
            let is_u = u == Some(&c.code);
            if delta + m > n + 1 {
                report.violation(Finding::new(&c.code, format!("Δ = {delta} exceeds n - m + 1")));
            } else if (delta + m == n + 1) != is_u {
                report.violation(Finding::new(
                    &c.code,
                    format!("Δ = {delta}, equality with n - m + 1 iff U fails"),
                ));
            } else if !is_u {
                let sibling = siblings.is_some_and(|s| s.contains(&c.code));
                if delta + m > n {
                    report.violation(Finding::new(&c.code, format!("Δ = {delta} exceeds n - m")));
                } else if sibling && delta + m != n {
                    report.violation(Finding::new(&c.code, format!("sibling with Δ = {delta} below n - m")));
                } else if !sibling && delta + m == n {
                    report.errata.push(Finding::new(
                        &c.code,
                        format!("m = {m}, Δ = n - m = {delta} but not one of the five siblings"),
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// Compares enumeration with the labeled brute-force oracle: class counts
/// and sorted `(eds, wiener, matching number)` fingerprints.
pub fn oracle_fingerprints(n_max: usize) -> Result<CheckReport, AuditError> {
    let mut report = CheckReport::new("enumeration oracle");
    for n in 3..=n_max {
        let mut ours: Vec<(u64, u64, usize)> = classes(n, ClassFilter::default())?
            .iter()
            .map(|c| Ok((eds(&c.graph)?, wiener(&c.graph)?, c.matching_number)))
            .collect::<Result<_, AuditError>>()?;
        let mut theirs: Vec<(u64, u64, usize)> = labeled_oracle_enumerate(n)?
            .iter()
            .map(|g| Ok((eds(g)?, wiener(g)?, matching_number_oracle(g)?)))
            .collect::<Result<_, AuditError>>()?;
        ours.sort_unstable();
        theirs.sort_unstable();
        report.checked += ours.len();
        if ours.len() != theirs.len() {
            report.violation(Finding::new(
                format!("n={n}"),
                format!("{} classes vs oracle {}", ours.len(), theirs.len()),
            ));
        } else if ours != theirs {
            report.violation(Finding::new(format!("n={n}"), "fingerprint multisets differ"));
        }
    }
    Ok(report)
}

/// Compares the cycle-splitting matching algorithm with the exhaustive
/// oracle on every class of order `3..=n_max`.
pub fn matching_oracle_check(n_max: usize) -> Result<CheckReport, AuditError> {
    let mut report = CheckReport::new("matching oracle");
    for n in 3..=n_max {
        let rows: Vec<_> = UnicyclicEnumerator::new(n)?.par_map(ClassFilter::default(), |c| {
            let fast = matching_number_unicyclic(&c.graph);
            let slow = matching_number_oracle(&c.graph);
            Some((c.code, fast, slow))
        });
        for (code, fast, slow) in rows {
            report.checked += 1;
            if fast? != slow? {
                report.violation(Finding::new(code, "matching numbers differ"));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), *t);
        }
        assert!("2.2".parse::<LemmaId>().is_err());
    }

    #[test]
    fn default_cells() {
        assert_eq!(
            TheoremId::T3_1.cells(None, None),
            vec![(8, 4, Rank::Minimum), (10, 5, Rank::Minimum), (12, 6, Rank::Minimum)]
        );
        assert_eq!(TheoremId::T3_7.cells(None, None).len(), 4);
        assert!(!TheoremId::T3_3.cells(None, None).contains(&(8, 4, Rank::Minimum)));
    }

    #[test]
    fn small_theorems_pass() {
        let r = check_theorem(TheoremId::T3_4, Some(9), None).unwrap();
        assert!(r.passed, "{:?}", r.violations);
        assert_eq!(r.checked, 5);
    }

    #[test]
    fn small_oracles() {
        assert!(oracle_fingerprints(6).unwrap().passed);
        assert!(matching_oracle_check(8).unwrap().passed);
    }
}
