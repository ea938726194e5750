//! Closed-form expressions for extremal eccentric distance sums, evaluated
//! exactly as printed in the source literature.
//!
//! Expressions are kept verbatim, including ones known to disagree with
//! direct computation, so the audit can report the disagreement. Every
//! polynomial is evaluated as an integer multiple of `1/8` (or `1/4`, `1/2`)
//! and reduced to an exact fraction.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::families::{Attachment, FamilySpec, NamedTag};
use crate::tables;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{id} takes {expected} parameter(s), got {got}")]
    Arity { id: FormulaId, expected: usize, got: usize },
    #[error("{id}: {msg}")]
    Range { id: FormulaId, msg: String },
}

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FormulaId {
    /// `eds(H_{n,k})`, even `k`; parameters `(n, k)`.
    EQ21_EVEN,
    /// `eds(H_{n,k})`, odd `k`; parameters `(n, k)`.
    EQ21_ODD,
    /// `eds(U_n(k))`, even `k`; parameters `(n, k)`.
    EQ22_EVEN,
    /// `eds(U_n(3))`; parameter `n`.
    EQ22_K3,
    /// `eds(U_n(k))`, odd `k >= 5`; parameters `(n, k)`.
    EQ22_ODD,
    /// Wiener index of `C_k`; parameter `k`.
    EQ23_W,
    /// Transmission of any vertex of `C_k`; parameter `k`.
    EQ23_D,
    G1,
    G2,
    G3,
    G4,
    F1,
    F2,
    M2_MIN,
    M2_SECOND,
    M3_MIN_SMALL,
    M3_MIN_LARGE,
    M4_SECOND_SMALL,
    /// `eds` of the sun graph on `C_m`, even `m`.
    SUN_EVEN,
    SUN_ODD,
    /// `eds` of `C_{2m-1}` with one pendant vertex; parameter `m`.
    NEAR_HAMILTONIAN,
    LEMMA25_THRESHOLD,
    /// `n - m + 1`; parameters `(n, m)`.
    DELTA_BOUND_1,
    /// `n - m`; parameters `(n, m)`.
    DELTA_BOUND_2,
}

impl FormulaId {
    pub const ALL: [FormulaId; 24] = [
        FormulaId::EQ21_EVEN,
        FormulaId::EQ21_ODD,
        FormulaId::EQ22_EVEN,
        FormulaId::EQ22_K3,
        FormulaId::EQ22_ODD,
        FormulaId::EQ23_W,
        FormulaId::EQ23_D,
        FormulaId::G1,
        FormulaId::G2,
        FormulaId::G3,
        FormulaId::G4,
        FormulaId::F1,
        FormulaId::F2,
        FormulaId::M2_MIN,
        FormulaId::M2_SECOND,
        FormulaId::M3_MIN_SMALL,
        FormulaId::M3_MIN_LARGE,
        FormulaId::M4_SECOND_SMALL,
        FormulaId::SUN_EVEN,
        FormulaId::SUN_ODD,
        FormulaId::NEAR_HAMILTONIAN,
        FormulaId::LEMMA25_THRESHOLD,
        FormulaId::DELTA_BOUND_1,
        FormulaId::DELTA_BOUND_2,
    ];

    pub fn arity(self) -> usize {
        use FormulaId::*;
        match self {
            EQ21_EVEN | EQ21_ODD | EQ22_EVEN | EQ22_ODD | F1 | F2 | DELTA_BOUND_1 | DELTA_BOUND_2 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An exact formula value. `non_integral` flags a fractional result, which
/// for these integer-valued invariants indicates a misprinted expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evaluation {
    pub value: Ratio<i64>,
    pub non_integral: bool,
}

impl Evaluation {
    fn scaled(numerator: i64, scale: i64) -> Self {
        let value = Ratio::new(numerator, scale);
        Evaluation {
            value,
            non_integral: !value.is_integer(),
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.value.is_integer().then(|| self.value.to_integer())
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Evaluates a formula. Only structural preconditions are enforced (parity of
/// the case, at least one pendant vertex for `H_{n,k}`, `n >= k + 2` for
/// `U_n(k)`, non-negative parameters); whether a
/// theorem applies to given parameters is decided by [`predicted_extremal`].
pub fn eval(id: FormulaId, params: &[i64]) -> Result<Evaluation, FormulaError> {
    use FormulaId::*;
    if params.len() != id.arity() {
        return Err(FormulaError::Arity {
            id,
            expected: id.arity(),
            got: params.len(),
        });
    }
    let range = |msg: &str| FormulaError::Range {
        id,
        msg: msg.to_string(),
    };
    if params.iter().any(|&p| p < 0) {
        return Err(range("parameters must be non-negative"));
    }
    let a = params[0];
    let b = params.get(1).copied().unwrap_or(0);
    let ev = match id {
        EQ21_EVEN | EQ21_ODD | EQ22_EVEN | EQ22_ODD => {
            let (n, k) = (a, b);
            let even = k % 2 == 0;
            if matches!(id, EQ21_EVEN | EQ22_EVEN) != even {
                return Err(range("parity of k does not match this case"));
            }
            if k < 3 {
                return Err(range("requires k >= 3"));
            }
            match id {
                EQ21_EVEN | EQ21_ODD if n < k + 1 => return Err(range("requires n >= k + 1")),
                EQ22_EVEN | EQ22_ODD if n < k + 2 => return Err(range("requires n >= k + 2")),
                EQ22_ODD if k < 5 => return Err(range("requires k >= 5")),
                _ => {}
            }
            let (k2, k3, k4) = (k * k, k * k * k, k * k * k * k);
            let eight_times = match id {
                EQ21_EVEN => {
                    -k4 + 2 * (n - 1) * k3
                        + 2 * (7 - 3 * n) * k2
                        + (8 * n * n - 28 * n + 8) * k
                        + 8 * (2 * n * n + n - n)
                }
                EQ21_ODD => -k4 + (2 * n - 1) * k3 + (13 - 8 * n) * k2 + (8 * n * n - 18 * n + 1) * k + 8 * n * n + 4,
                EQ22_EVEN => {
                    -k4 + 2 * (n - 1) * k3
                        + 2 * (2 - 3 * n) * k2
                        + 8 * (n * n - 2 * n - 2) * k
                        + 8 * (2 * n * n + n - 2)
                }
                _ => -k4 + (2 * n - 1) * k3 + (3 - 8 * n) * k2 + (8 * n * n - 6 * n - 1) * k + 8 * n * n + 4 * n - 14,
            };
            Evaluation::scaled(eight_times, 8)
        }
        EQ22_K3 => {
            if a < 5 {
                return Err(range("requires n >= 5"));
            }
            Evaluation::scaled(6 * a * a - 11 * a - 15, 1)
        }
        EQ23_W | EQ23_D => {
            let k = a;
            if k < 3 {
                return Err(range("requires k >= 3"));
            }
            match (id, k % 2 == 0) {
                (EQ23_W, true) => Evaluation::scaled(k * k * k, 8),
                (EQ23_W, false) => Evaluation::scaled(k * (k * k - 1), 8),
                (_, true) => Evaluation::scaled(k * k, 4),
                (_, false) => Evaluation::scaled(k * k - 1, 4),
            }
        }
        SUN_EVEN | SUN_ODD => {
            let m = a;
            if (id == SUN_EVEN) != (m % 2 == 0) {
                return Err(range("parity of m does not match this case"));
            }
            if m < 3 {
                return Err(range("requires m >= 3"));
            }
            let twice = if id == SUN_EVEN {
                m.pow(4) + 7 * m.pow(3) + 12 * m * m - 8 * m
            } else {
                m.pow(4) + 6 * m.pow(3) + 7 * m * m - 8 * m
            };
            Evaluation::scaled(twice, 2)
        }
        DELTA_BOUND_1 | DELTA_BOUND_2 => {
            let (n, m) = (a, b);
            if m > n {
                return Err(range("requires m <= n"));
            }
            Evaluation::scaled(if id == DELTA_BOUND_1 { n - m + 1 } else { n - m }, 1)
        }
        _ => {
            let poly = match id {
                G1 => 43 * a * a - 92 * a + 57,
                G2 => 43 * a * a - 72 * a - 4,
                G3 => 6 * a * a - 5 * a - 53,
                G4 => 6 * a * a + 14 * a - 100,
                F1 => 6 * a * a + b * b + 9 * b * a - 30 * b - 31 * a + 57,
                F2 => 6 * a * a + b * b + 9 * b * a - 28 * b - 22 * a - 4,
                M2_MIN => 4 * a * a - 9 * a + 1,
                M2_SECOND => 6 * a * a - 11 * a - 16,
                M3_MIN_SMALL => 6 * a * a - 5 * a - 53,
                M3_MIN_LARGE => 6 * a * a - 9 * a - 14,
                M4_SECOND_SMALL => 6 * a * a + 17 * a - 147,
                NEAR_HAMILTONIAN => 2 * a.pow(4) - 3 * a.pow(3) + 7 * a * a - 4 * a + 1,
                LEMMA25_THRESHOLD => 43 * a * a - 72 * a + 6,
                _ => unreachable!("handled above"),
            };
            Evaluation::scaled(poly, 1)
        }
    };
    Ok(ev)
}

fn int(id: FormulaId, params: &[i64]) -> Result<i64, FormulaError> {
    let e = eval(id, params)?;
    e.as_integer().ok_or(FormulaError::Range {
        id,
        msg: format!("non-integral value {}", e.value),
    })
}

/// Printed `eds(H_{n,k})`, choosing the case by the parity of `k`.
pub fn eq21(n: i64, k: i64) -> Result<Evaluation, FormulaError> {
    eval(
        if k % 2 == 0 {
            FormulaId::EQ21_EVEN
        } else {
            FormulaId::EQ21_ODD
        },
        &[n, k],
    )
}

/// Printed `eds(U_n(k))`, choosing the case by `k`.
pub fn eq22(n: i64, k: i64) -> Result<Evaluation, FormulaError> {
    match k {
        3 => {
            if n < 5 {
                return Err(FormulaError::Range {
                    id: FormulaId::EQ22_K3,
                    msg: "requires n >= k + 2".into(),
                });
            }
            eval(FormulaId::EQ22_K3, &[n])
        }
        k if k % 2 == 0 => eval(FormulaId::EQ22_EVEN, &[n, k]),
        k => eval(FormulaId::EQ22_ODD, &[n, k]),
    }
}

pub fn sun(m: i64) -> Result<Evaluation, FormulaError> {
    eval(
        if m % 2 == 0 {
            FormulaId::SUN_EVEN
        } else {
            FormulaId::SUN_ODD
        },
        &[m],
    )
}

/// Which extremal value a prediction is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rank {
    Minimum = 1,
    Second = 2,
}

impl Rank {
    pub fn from_index(i: usize) -> Option<Self> {
        match i {
            1 => Some(Rank::Minimum),
            2 => Some(Rank::Second),
            _ => None,
        }
    }
}

/// Where a predicted value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Source {
    Formula(FormulaId),
    /// A value only given in the small-order tables.
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prediction {
    Covered {
        value: i64,
        graphs: Vec<FamilySpec>,
        source: Source,
    },
    Uncovered,
}

fn c5_three(n: usize) -> FamilySpec {
    FamilySpec::Broom {
        n,
        cycle: 5,
        attachments: [
            Attachment::pendants(1),
            Attachment::pendants(n - 7),
            Attachment::pendants(1),
        ],
    }
}

/// The predicted minimal (or second minimal) `eds` over unicyclic graphs of
/// order `n` and matching number `m`, with the predicted extremal graph.
///
/// Regimes: `m = 3` splits at `n <= 9` / `n >= 10` for the minimum; `m = 4`
/// second minimum splits at `n <= 15` / `n >= 16`; `m = 2` second minimum
/// splits at `n = 5` / `n >= 6`. Small cells without a closed form take the
/// tabulated value.
pub fn predicted_extremal(n: usize, m: usize, rank: Rank) -> Prediction {
    use FormulaId::*;
    if n < 4 || m < 2 || 2 * m > n {
        return Prediction::Uncovered;
    }
    let named = |tag, n, m| FamilySpec::Named { tag, n, m };
    let (ni, mi) = (n as i64, m as i64);
    let formula = |id: FormulaId, params: &[i64], graph: FamilySpec| Prediction::Covered {
        value: int(id, params).expect("regime parameters are in range"),
        graphs: vec![graph],
        source: Source::Formula(id),
    };
    let table = |graph: FamilySpec| match tables::lookup(n, m, rank) {
        Some(cell) => Prediction::Covered {
            value: cell.printed,
            graphs: vec![graph],
            source: Source::Table,
        },
        None => Prediction::Uncovered,
    };
    match (rank, m) {
        (Rank::Minimum, 2) => formula(M2_MIN, &[ni], named(NamedTag::U, n, 2)),
        (Rank::Minimum, 3) if n <= 9 => formula(M3_MIN_SMALL, &[ni], named(NamedTag::UPrime, n, 3)),
        (Rank::Minimum, 3) => formula(M3_MIN_LARGE, &[ni], named(NamedTag::U, n, 3)),
        (Rank::Minimum, 4) if n == 8 => table(c5_three(8)),
        (Rank::Minimum, _) if n == 2 * m => formula(G1, &[mi], named(NamedTag::U, n, m)),
        (Rank::Minimum, _) => formula(F1, &[ni, mi], named(NamedTag::U, n, m)),

        (Rank::Second, 2) if n == 4 => table(FamilySpec::Cycle(4)),
        (Rank::Second, 2) if n == 5 => Prediction::Covered {
            value: 60,
            graphs: vec![FamilySpec::Cycle(5)],
            source: Source::Table,
        },
        (Rank::Second, 2) => formula(M2_SECOND, &[ni], FamilySpec::Hnk { n, k: 4 }),
        (Rank::Second, 3) if n <= 7 => table(named(NamedTag::UStar, n, 3)),
        (Rank::Second, 3) if n <= 9 => table(named(NamedTag::U, n, 3)),
        (Rank::Second, 3) => formula(G3, &[ni], named(NamedTag::UPrime, n, 3)),
        (Rank::Second, 4) if n == 8 => table(named(NamedTag::U, 8, 4)),
        (Rank::Second, 4) if n <= 15 => formula(M4_SECOND_SMALL, &[ni], c5_three(n)),
        (Rank::Second, 4) => formula(G4, &[ni], named(NamedTag::UPrime, n, 4)),
        (Rank::Second, _) if n == 2 * m => formula(G2, &[mi], named(NamedTag::UPrime, n, m)),
        (Rank::Second, _) => formula(F2, &[ni, mi], named(NamedTag::UPrime, n, m)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(id: FormulaId, p: &[i64]) -> i64 {
        eval(id, p).unwrap().as_integer().unwrap()
    }

    #[test]
    fn printed_values() {
        assert_eq!(v(FormulaId::G1, &[5]), 672);
        assert_eq!(v(FormulaId::F1, &[9, 4]), 484);
        assert_eq!(v(FormulaId::EQ22_K3, &[5]), 80);
        assert_eq!(v(FormulaId::EQ21_EVEN, &[6, 4]), 140);
        assert_eq!(v(FormulaId::EQ21_ODD, &[5, 3]), 57);
        assert_eq!(v(FormulaId::EQ22_EVEN, &[6, 4]), 148);
        assert_eq!(v(FormulaId::EQ23_W, &[4]), 8);
        assert_eq!(v(FormulaId::EQ23_W, &[5]), 15);
        assert_eq!(v(FormulaId::EQ23_D, &[6]), 9);
        assert_eq!(v(FormulaId::EQ23_D, &[5]), 6);
        assert_eq!(v(FormulaId::SUN_EVEN, &[6]), 1596);
        assert_eq!(v(FormulaId::SUN_ODD, &[5]), 755);
        assert_eq!(v(FormulaId::NEAR_HAMILTONIAN, &[5]), 1031);
        assert_eq!(v(FormulaId::M2_MIN, &[5]), 56);
        assert_eq!(v(FormulaId::DELTA_BOUND_1, &[10, 4]), 7);
    }

    #[test]
    fn range_and_arity_errors() {
        assert!(matches!(
            eval(FormulaId::EQ22_EVEN, &[5, 4]),
            Err(FormulaError::Range { .. })
        ));
        assert!(matches!(eq22(4, 3), Err(FormulaError::Range { .. })));
        assert!(matches!(
            eval(FormulaId::G1, &[1, 2]),
            Err(FormulaError::Arity {
                expected: 1,
                got: 2,
                ..
            })
        ));
        assert!(matches!(
            eval(FormulaId::EQ21_ODD, &[6, 4]),
            Err(FormulaError::Range { .. })
        ));
        assert!(matches!(
            eval(FormulaId::EQ22_ODD, &[8, 3]),
            Err(FormulaError::Range { .. })
        ));
        assert!(matches!(eval(FormulaId::EQ23_W, &[2]), Err(FormulaError::Range { .. })));
        assert!(matches!(eval(FormulaId::F1, &[-1, 2]), Err(FormulaError::Range { .. })));
    }

    #[test]
    fn fractional_values_are_flagged() {
        let e = Evaluation::scaled(3, 2);
        assert!(e.non_integral);
        assert_eq!(e.as_integer(), None);
        let e = Evaluation::scaled(16, 8);
        assert!(!e.non_integral);
        assert_eq!(e.as_integer(), Some(2));
    }

    #[test]
    fn predictions() {
        let p = predicted_extremal(10, 3, Rank::Minimum);
        assert_eq!(
            p,
            Prediction::Covered {
                value: 496,
                graphs: vec![FamilySpec::Named {
                    tag: NamedTag::U,
                    n: 10,
                    m: 3
                }],
                source: Source::Formula(FormulaId::M3_MIN_LARGE)
            }
        );
        match predicted_extremal(13, 4, Rank::Second) {
            Prediction::Covered { value, graphs, .. } => {
                assert_eq!(value, 1088);
                assert_eq!(graphs[0].to_string(), "H(13,5;[1^1],[1^6],[1^1])");
            }
            other => panic!("{other:?}"),
        }
        match predicted_extremal(5, 2, Rank::Second) {
            Prediction::Covered { value, graphs, .. } => {
                assert_eq!(value, 60);
                assert_eq!(graphs, vec![FamilySpec::Cycle(5)]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(predicted_extremal(7, 4, Rank::Minimum), Prediction::Uncovered);
        assert_eq!(predicted_extremal(3, 1, Rank::Minimum), Prediction::Uncovered);
    }
}
