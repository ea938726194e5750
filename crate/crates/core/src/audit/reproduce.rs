use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumeration::{unicyclic_canonical_code, UnicyclicCode};
use crate::formulas::Rank;
use crate::tables::{self, TableCell};

use super::ranking::{rank_order, RankingRecord};
use super::AuditError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellStatus {
    Match,
    ValueMismatch,
    GraphMismatch,
    ErratumKnown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellReport {
    pub rank: Rank,
    pub n: usize,
    pub m: usize,
    pub printed: i64,
    pub printed_graph: &'static str,
    pub printed_code: UnicyclicCode,
    pub computed: Option<u64>,
    pub computed_codes: Vec<UnicyclicCode>,
    pub status: CellStatus,
}

/// Compares one fixture cell against a ranking of its `(n, m)` class.
pub fn compare_cell(cell: &TableCell, record: &RankingRecord) -> Result<CellReport, AuditError> {
    let printed_code = unicyclic_canonical_code(&cell.graph().build()?)?;
    let (computed, codes) = match cell.rank {
        Rank::Minimum => (Some(record.min), record.min_codes.clone()),
        Rank::Second => (record.second, record.second_codes.clone()),
    };
    let value = computed.map(|v| v as i64);
    let graph_ok = codes.len() == 1 && codes[0] == printed_code;
    let status = match cell.erratum {
        Some(truth) if value == Some(truth) && graph_ok => CellStatus::ErratumKnown,
        None if value == Some(cell.printed) && graph_ok => CellStatus::Match,
        _ if value != Some(cell.erratum.unwrap_or(cell.printed)) => CellStatus::ValueMismatch,
        _ => CellStatus::GraphMismatch,
    };
    Ok(CellReport {
        rank: cell.rank,
        n: cell.n,
        m: cell.m,
        printed: cell.printed,
        printed_graph: cell.graph_text(),
        printed_code,
        computed,
        computed_codes: codes,
        status,
    })
}

/// Recomputes every fixture cell with `n <= n_max`, optionally restricted to
/// one rank. Each order is enumerated once.
pub fn reproduce_tables(n_max: usize, rank: Option<Rank>) -> Result<Vec<CellReport>, AuditError> {
    let cells: Vec<&TableCell> = tables::CELLS
        .iter()
        .filter(|c| c.n <= n_max && rank.is_none_or(|r| r == c.rank))
        .collect();
    let mut rankings: BTreeMap<usize, BTreeMap<usize, RankingRecord>> = BTreeMap::new();
    let mut out = Vec::with_capacity(cells.len());
    for cell in cells {
        if let std::collections::btree_map::Entry::Vacant(e) = rankings.entry(cell.n) {
            e.insert(rank_order(cell.n)?);
        }
        let record = rankings[&cell.n]
            .get(&cell.m)
            .ok_or(AuditError::EmptyClass { n: cell.n, m: cell.m })?;
        out.push(compare_cell(cell, record)?);
    }
    Ok(out)
}
