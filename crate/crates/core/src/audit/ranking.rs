use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumeration::{ClassFilter, UnicyclicCode, UnicyclicEnumerator};
use crate::graph::eds;

use super::AuditError;

/// Smallest and second smallest distinct `eds` values over the unicyclic
/// classes with a given order and matching number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankingRecord {
    pub n: usize,
    pub m: usize,
    pub min: u64,
    pub min_codes: Vec<UnicyclicCode>,
    pub second: Option<u64>,
    pub second_codes: Vec<UnicyclicCode>,
    /// Value of the second class in `eds` order when it differs from
    /// `second`, i.e. when several classes share the minimum.
    pub second_by_class: Option<u64>,
    pub classes: usize,
}

#[derive(Debug, Default)]
struct Top2 {
    best: Option<(u64, Vec<UnicyclicCode>)>,
    next: Option<(u64, Vec<UnicyclicCode>)>,
    classes: usize,
}

fn offer(
    slot: &mut Option<(u64, Vec<UnicyclicCode>)>,
    value: u64,
    codes: Vec<UnicyclicCode>,
) -> Option<(u64, Vec<UnicyclicCode>)> {
    match slot {
        None => {
            *slot = Some((value, codes));
            None
        }
        Some((v, list)) if *v == value => {
            list.extend(codes);
            None
        }
        Some((v, _)) if value < *v => slot.replace((value, codes)),
        Some(_) => Some((value, codes)),
    }
}

impl Top2 {
    fn push(&mut self, value: u64, codes: Vec<UnicyclicCode>) {
        if let Some((v, c)) = offer(&mut self.best, value, codes) {
            offer(&mut self.next, v, c);
        }
    }

    fn finish(self, n: usize, m: usize) -> Option<RankingRecord> {
        let (min, mut min_codes) = self.best?;
        min_codes.sort();
        let (second, second_codes) = match self.next {
            Some((v, mut c)) => {
                c.sort();
                (Some(v), c)
            }
            None => (None, Vec::new()),
        };
        Some(RankingRecord {
            n,
            m,
            min,
            second_by_class: (min_codes.len() > 1).then_some(min),
            min_codes,
            second,
            second_codes,
            classes: self.classes,
        })
    }
}

/// Ranks every matching number of order `n` in a single enumeration pass.
pub fn rank_order(n: usize) -> Result<BTreeMap<usize, RankingRecord>, AuditError> {
    rank_filtered(n, ClassFilter::default())
}

fn rank_filtered(n: usize, filter: ClassFilter) -> Result<BTreeMap<usize, RankingRecord>, AuditError> {
    let e = UnicyclicEnumerator::new(n)?;
    let rows = e.par_map(filter, |c| Some((c.matching_number, eds(&c.graph).ok()?, c.code)));
    let mut per_m: BTreeMap<usize, Top2> = BTreeMap::new();
    for (m, value, code) in rows {
        let t = per_m.entry(m).or_default();
        t.classes += 1;
        t.push(value, vec![code]);
    }
    Ok(per_m
        .into_iter()
        .filter_map(|(m, t)| Some((m, t.finish(n, m)?)))
        .collect())
}

/// Ranks the classes of order `n` with matching number `m`.
pub fn rank_classes(n: usize, m: usize) -> Result<RankingRecord, AuditError> {
    if n < 4 || m < 2 || 2 * m > n {
        return Err(AuditError::Range(format!("no ranking for n = {n}, m = {m}")));
    }
    rank_filtered(n, ClassFilter::with_matching(m))?
        .remove(&m)
        .ok_or(AuditError::EmptyClass { n, m })
}

/// Ranks several orders, sharing enumeration work per order.
pub fn rank_many(
    orders: impl IntoIterator<Item = usize>,
) -> Result<BTreeMap<usize, BTreeMap<usize, RankingRecord>>, AuditError> {
    orders.into_iter().map(|n| Ok((n, rank_order(n)?))).collect()
}
