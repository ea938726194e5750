//! Named unicyclic constructions and a small text language for them.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! spec := "C(" n ")" | "Hnk(" n "," k ")" | "Unk(" n "," k ")" | "Sun(" m ")"
//!       | tag "(" n "," m ")"
//!       | "H(" n "," c ";" att "," att "," att ")"
//! tag  := "U" | "U1" | "U2" | "Ustar" | "U2star" | "U3star"
//! att  := "[" "1^" int { "2^" int | "S{" int { "," int } "}" } "]"
//! ```
//!
//! `H(n,c;a1,a2,a3)` is the cycle `C_c` with attachment `ai` on cycle vertex
//! `i-1`. An attachment carries `k` pendant vertices and a list of brooms; a
//! broom with parameter `t` is a middle vertex joined to the cycle vertex and
//! carrying `t` leaves (so `2^r` is `r` brooms with `t = 1`, i.e. hanging
//! paths of length two). Brooms are only allowed on vertex 0 when `c = 3`
//! and on vertex 1 when `c = 4, 5`.
//!
//! Vertex numbering is deterministic: cycle vertices `0..c` first, then for
//! each cycle vertex in order its pendants followed by each broom's middle
//! vertex and leaves.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::matching::matching_number_unicyclic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("vertex budget mismatch: declared {declared} vertices, construction uses {actual}")]
    Budget { declared: usize, actual: usize },
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("brooms are only allowed on cycle vertex {allowed} for c = {cycle}")]
    BroomPosition { cycle: usize, allowed: usize },
    #[error("{spec} has matching number {actual}, expected {expected}")]
    MatchingMismatch {
        spec: String,
        expected: usize,
        actual: usize,
    },
}

/// Pendant vertices and brooms hung on one cycle vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Attachment {
    pub pendants: usize,
    pub brooms: Vec<usize>,
}

impl Attachment {
    pub fn pendants(k: usize) -> Self {
        Attachment {
            pendants: k,
            brooms: Vec::new(),
        }
    }

    /// `k` pendants plus `r` hanging paths of length two.
    pub fn with_paths(k: usize, r: usize) -> Self {
        Attachment {
            pendants: k,
            brooms: vec![1; r],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.pendants + self.brooms.iter().map(|t| t + 1).sum::<usize>()
    }
}

impl fmt::Display for Attachment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[1^{}", self.pendants)?;
        if !self.brooms.is_empty() {
            if self.brooms.iter().all(|&t| t == 1) {
                write!(f, " 2^{}", self.brooms.len())?;
            } else {
                let list: Vec<String> = self.brooms.iter().map(|t| t.to_string()).collect();
                write!(f, " S{{{}}}", list.join(","))?;
            }
        }
        f.write_str("]")
    }
}

/// The six named extremal graphs `U`, `U'`, `U''`, `U*`, `U**`, `U3*`.
///
/// Two distinct graphs share the printed label `U**`; the one on a triangle is
/// tagged [`NamedTag::UStar`] and the one on a 4-cycle [`NamedTag::UDoubleStar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedTag {
    U,
    UPrime,
    UDoublePrime,
    UStar,
    UDoubleStar,
    UTripleStar,
}

impl NamedTag {
    pub const ALL: [NamedTag; 6] = [
        NamedTag::U,
        NamedTag::UPrime,
        NamedTag::UDoublePrime,
        NamedTag::UStar,
        NamedTag::UDoubleStar,
        NamedTag::UTripleStar,
    ];

    /// The five graphs of maximum degree `n - m` other than `U`.
    pub const SIBLINGS: [NamedTag; 5] = [
        NamedTag::UPrime,
        NamedTag::UDoublePrime,
        NamedTag::UStar,
        NamedTag::UDoubleStar,
        NamedTag::UTripleStar,
    ];

    pub fn ascii(self) -> &'static str {
        match self {
            NamedTag::U => "U",
            NamedTag::UPrime => "U1",
            NamedTag::UDoublePrime => "U2",
            NamedTag::UStar => "Ustar",
            NamedTag::UDoubleStar => "U2star",
            NamedTag::UTripleStar => "U3star",
        }
    }

    fn from_ascii(s: &str) -> Option<Self> {
        NamedTag::ALL.into_iter().find(|t| t.ascii() == s)
    }

    /// Expands to the underlying `H(n, c; ...)` construction.
    pub fn expand(self, n: usize, m: usize) -> Result<FamilySpec, FamilyError> {
        let range = |msg: &str| FamilyError::Range(format!("{}({n},{m}): {msg}", self.ascii()));
        let min_m = match self {
            NamedTag::U | NamedTag::UDoubleStar | NamedTag::UTripleStar => 2,
            _ => 3,
        };
        if m < min_m {
            return Err(range(&format!("requires m >= {min_m}")));
        }
        if 2 * m > n {
            return Err(range("requires 2m <= n"));
        }
        let free = n - 2 * m;
        let (c, atts) = match self {
            NamedTag::U => (
                3,
                [
                    Attachment::with_paths(free + 1, m - 2),
                    Attachment::default(),
                    Attachment::default(),
                ],
            ),
            NamedTag::UPrime => (
                5,
                [
                    Attachment::default(),
                    Attachment::with_paths(free + 1, m - 3),
                    Attachment::default(),
                ],
            ),
            NamedTag::UDoublePrime => (
                4,
                [
                    Attachment::pendants(1),
                    Attachment::with_paths(free + 1, m - 3),
                    Attachment::default(),
                ],
            ),
            NamedTag::UStar => (
                3,
                [
                    Attachment::with_paths(free + 1, m - 3),
                    Attachment::pendants(1),
                    Attachment::pendants(1),
                ],
            ),
            NamedTag::UDoubleStar => (
                4,
                [
                    Attachment::default(),
                    Attachment::with_paths(free, m - 2),
                    Attachment::default(),
                ],
            ),
            NamedTag::UTripleStar => (
                3,
                [
                    Attachment::with_paths(free, m - 2),
                    Attachment::pendants(1),
                    Attachment::default(),
                ],
            ),
        };
        Ok(FamilySpec::Broom {
            n,
            cycle: c,
            attachments: atts,
        })
    }
}

/// A named construction, parsed from or printed as the text language.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle(usize),
    Hnk {
        n: usize,
        k: usize,
    },
    Unk {
        n: usize,
        k: usize,
    },
    Broom {
        n: usize,
        cycle: usize,
        attachments: [Attachment; 3],
    },
    Named {
        tag: NamedTag,
        n: usize,
        m: usize,
    },
    Sun(usize),
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Cycle(n) => n,
            FamilySpec::Hnk { n, .. } | FamilySpec::Unk { n, .. } => n,
            FamilySpec::Broom { n, .. } | FamilySpec::Named { n, .. } => n,
            FamilySpec::Sun(m) => 2 * m,
        }
    }

    /// Checks ranges and the vertex budget without building the graph.
    pub fn validate(&self) -> Result<(), FamilyError> {
        match self {
            &FamilySpec::Cycle(n) if n < 3 => Err(FamilyError::Range(format!("C({n}): requires n >= 3"))),
            &FamilySpec::Hnk { n, k } if !(3 <= k && k <= n) => {
                Err(FamilyError::Range(format!("Hnk({n},{k}): requires 3 <= k <= n")))
            }
            &FamilySpec::Unk { n, k } if !(3 <= k && k + 2 <= n) => {
                Err(FamilyError::Range(format!("Unk({n},{k}): requires 3 <= k <= n - 2")))
            }
            &FamilySpec::Sun(m) if m < 3 => Err(FamilyError::Range(format!("Sun({m}): requires m >= 3"))),
            FamilySpec::Broom { n, cycle, attachments } => {
                if !(3..=5).contains(cycle) {
                    return Err(FamilyError::Range(format!("H: cycle length {cycle} not in 3..=5")));
                }
                let allowed = if *cycle == 3 { 0 } else { 1 };
                for (i, a) in attachments.iter().enumerate() {
                    if i != allowed && !a.brooms.is_empty() {
                        return Err(FamilyError::BroomPosition { cycle: *cycle, allowed });
                    }
                    if a.brooms.contains(&0) {
                        return Err(FamilyError::Range("broom parameters must be positive".into()));
                    }
                }
                let actual = cycle + attachments.iter().map(Attachment::vertex_count).sum::<usize>();
                if actual != *n {
                    return Err(FamilyError::Budget { declared: *n, actual });
                }
                Ok(())
            }
            &FamilySpec::Named { tag, n, m } => tag.expand(n, m).map(|_| ()),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let g = match self {
            &FamilySpec::Cycle(n) => cycle_with(n, &[]),
            &FamilySpec::Hnk { n, k } => cycle_with(k, &[Attachment::pendants(n - k)]),
            &FamilySpec::Unk { n, k } => cycle_with(k, &[Attachment::pendants(1), Attachment::pendants(n - k - 1)]),
            &FamilySpec::Sun(m) => cycle_with(m, &vec![Attachment::pendants(1); m]),
            FamilySpec::Broom { cycle, attachments, .. } => cycle_with(*cycle, attachments),
            &FamilySpec::Named { tag, n, m } => {
                let g = tag.expand(n, m)?.build()?;
                let actual = matching_number_unicyclic(&g).expect("constructions are unicyclic");
                if actual != m {
                    return Err(FamilyError::MatchingMismatch {
                        spec: self.to_string(),
                        expected: m,
                        actual,
                    });
                }
                g
            }
        };
        debug_assert_eq!(g.order(), self.order());
        Ok(g)
    }
}

fn cycle_with(c: usize, attachments: &[Attachment]) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    let mut next = c;
    for (root, att) in attachments.iter().enumerate() {
        for _ in 0..att.pendants {
            edges.push((root, next));
            next += 1;
        }
        for &t in &att.brooms {
            let middle = next;
            edges.push((root, middle));
            next += 1;
            for _ in 0..t {
                edges.push((middle, next));
                next += 1;
            }
        }
    }
    Graph::new(next, &edges).expect("constructions are simple")
}

pub fn make_cycle(n: usize) -> Result<Graph, FamilyError> {
    FamilySpec::Cycle(n).build()
}

/// `C_k` with `n - k` pendant vertices on one cycle vertex.
pub fn make_hnk(n: usize, k: usize) -> Result<Graph, FamilyError> {
    FamilySpec::Hnk { n, k }.build()
}

/// `C_k` with one pendant on vertex 0 and `n - k - 1` pendants on vertex 1.
pub fn make_unk(n: usize, k: usize) -> Result<Graph, FamilyError> {
    FamilySpec::Unk { n, k }.build()
}

pub fn make_broom_graph(n: usize, cycle: usize, attachments: [Attachment; 3]) -> Result<Graph, FamilyError> {
    FamilySpec::Broom { n, cycle, attachments }.build()
}

pub fn make_named(tag: NamedTag, n: usize, m: usize) -> Result<Graph, FamilyError> {
    FamilySpec::Named { tag, n, m }.build()
}

pub fn make_sun(m: usize) -> Result<Graph, FamilyError> {
    FamilySpec::Sun(m).build()
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "C({n})"),
            FamilySpec::Hnk { n, k } => write!(f, "Hnk({n},{k})"),
            FamilySpec::Unk { n, k } => write!(f, "Unk({n},{k})"),
            FamilySpec::Sun(m) => write!(f, "Sun({m})"),
            FamilySpec::Named { tag, n, m } => write!(f, "{}({n},{m})", tag.ascii()),
            FamilySpec::Broom {
                n,
                cycle,
                attachments: [a, b, c],
            } => write!(f, "H({n},{cycle};{a},{b},{c})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_family_spec(s)
    }
}

/// Parses and validates a family description.
pub fn parse_family_spec(text: &str) -> Result<FamilySpec, FamilyError> {
    let mut p = Parser { src: text, pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input"));
    }
    spec.validate()?;
    Ok(spec)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> FamilyError {
        FamilyError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), FamilyError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    fn ident(&mut self) -> Result<&str, FamilyError> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a family name"));
        }
        let start = self.pos;
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn int(&mut self) -> Result<usize, FamilyError> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected an integer"));
        }
        let value = self.rest()[..len]
            .parse()
            .map_err(|_| self.error("integer too large"))?;
        self.pos += len;
        Ok(value)
    }

    fn spec(&mut self) -> Result<FamilySpec, FamilyError> {
        let name_pos = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident()?.to_string();
        self.expect("(")?;
        let spec = match name.as_str() {
            "C" => FamilySpec::Cycle(self.int()?),
            "Sun" => FamilySpec::Sun(self.int()?),
            "Hnk" | "Unk" => {
                let n = self.int()?;
                self.expect(",")?;
                let k = self.int()?;
                if name == "Hnk" {
                    FamilySpec::Hnk { n, k }
                } else {
                    FamilySpec::Unk { n, k }
                }
            }
            "H" => {
                let n = self.int()?;
                self.expect(",")?;
                let cycle = self.int()?;
                self.expect(";")?;
                let a = self.attachment()?;
                self.expect(",")?;
                let b = self.attachment()?;
                self.expect(",")?;
                let c = self.attachment()?;
                FamilySpec::Broom {
                    n,
                    cycle,
                    attachments: [a, b, c],
                }
            }
            other => {
                let tag = NamedTag::from_ascii(other).ok_or(FamilyError::Syntax {
                    pos: name_pos,
                    msg: format!("unknown family `{other}`"),
                })?;
                let n = self.int()?;
                self.expect(",")?;
                let m = self.int()?;
                FamilySpec::Named { tag, n, m }
            }
        };
        self.expect(")")?;
        Ok(spec)
    }

    fn attachment(&mut self) -> Result<Attachment, FamilyError> {
        self.expect("[")?;
        self.expect("1^")?;
        let mut att = Attachment::pendants(self.int()?);
        loop {
            match self.peek() {
                Some(']') => {
                    self.pos += 1;
                    return Ok(att);
                }
                _ if self.eat("2^") => {
                    let r = self.int()?;
                    att.brooms.extend(std::iter::repeat_n(1, r));
                }
                _ if self.eat("S{") => {
                    att.brooms.push(self.int()?);
                    while self.eat(",") {
                        att.brooms.push(self.int()?);
                    }
                    self.expect("}")?;
                }
                _ => return Err(self.error("expected `2^`, `S{` or `]`")),
            }
        }
    }
}
