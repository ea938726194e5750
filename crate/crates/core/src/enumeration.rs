//! Canonical codes and isomorphism-free generation of unicyclic graphs.
//!
//! A unicyclic graph is its unique cycle `C_k` with a rooted tree hanging on
//! each cycle vertex, so its isomorphism class is the cyclic sequence of
//! rooted-tree codes up to the dihedral group of order `2k`. Generation lists
//! every `k`-tuple of rooted trees with the right total size and keeps the
//! tuples that are already the dihedral minimum.
//!
//! Rooted-tree codes are parenthesis strings: a leaf is `()`, an internal node
//! is `(` + its children's codes in ascending byte order + `)`. No code is a
//! proper prefix of another, so comparing concatenated tuples agrees with
//! comparing tuples element by element.
//!
//! The reflection of `(t_0, t_1, ..., t_{k-1})` is `(t_0, t_{k-1}, ..., t_1)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{unique_cycle, Graph, GraphError, Vertex};
use crate::matching::matching_number_unicyclic;

/// Largest order accepted by [`labeled_oracle_enumerate`].
pub const LABELED_ORACLE_MAX_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("component of vertex {0} contains a cycle")]
    CycleInTree(Vertex),
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("order {order} outside the supported range {min}..={max}")]
    OrderOutOfRange { order: usize, min: usize, max: usize },
    #[error("malformed code: {0}")]
    MalformedCode(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Canonical parenthesis code of a rooted tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootedTreeCode(String);

impl RootedTreeCode {
    pub fn leaf() -> Self {
        RootedTreeCode("()".to_string())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of vertices, root included.
    pub fn size(&self) -> usize {
        self.0.len() / 2
    }

    fn from_children(mut children: Vec<String>) -> Self {
        children.sort_unstable();
        let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        s.push('(');
        for c in &children {
            s.push_str(c);
        }
        s.push(')');
        RootedTreeCode(s)
    }
}

impl fmt::Display for RootedTreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for RootedTreeCode {
    type Err = EnumerationError;

    /// Accepts any balanced single-rooted parenthesis string and canonicalizes it.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parents = parse_parens(s)?;
        let n = parents.len();
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (v, p) in parents.iter().enumerate().skip(1) {
            children[p.unwrap()].push(v);
        }
        // preorder numbering means children have larger indices than parents
        let mut codes: Vec<Option<String>> = vec![None; n];
        for v in (0..n).rev() {
            let kids = children[v].iter().map(|&c| codes[c].take().unwrap()).collect();
            codes[v] = Some(RootedTreeCode::from_children(kids).0);
        }
        Ok(RootedTreeCode(codes[0].take().unwrap()))
    }
}

/// Parent array (preorder numbering, root first) of a parenthesis string.
fn parse_parens(s: &str) -> Result<Vec<Option<usize>>, EnumerationError> {
    let bad = || EnumerationError::MalformedCode(s.to_string());
    let mut parents = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '(' => {
                if stack.is_empty() && i > 0 {
                    return Err(bad());
                }
                parents.push(stack.last().copied());
                stack.push(parents.len() - 1);
            }
            ')' => {
                stack.pop().ok_or_else(bad)?;
            }
            _ => return Err(bad()),
        }
    }
    if !stack.is_empty() || parents.is_empty() {
        return Err(bad());
    }
    Ok(parents)
}

/// Code of the tree hanging from `root`, never entering `blocked` vertices.
fn tree_code_avoiding(g: &Graph, root: Vertex, blocked: &[bool]) -> Result<RootedTreeCode, EnumerationError> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::new();
    let mut seen = vec![false; n];
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in g.neighbors(v) {
            if w == parent[v] || (blocked[w] && w != root) {
                continue;
            }
            if seen[w] {
                return Err(EnumerationError::CycleInTree(root));
            }
            seen[w] = true;
            parent[w] = v;
            stack.push(w);
        }
    }
    let mut codes: HashMap<Vertex, Vec<String>> = HashMap::new();
    let mut result = None;
    for &v in order.iter().rev() {
        let code = RootedTreeCode::from_children(codes.remove(&v).unwrap_or_default());
        if v == root {
            result = Some(code);
        } else {
            codes.entry(parent[v]).or_default().push(code.0);
        }
    }
    Ok(result.unwrap())
}

/// Canonical code of the rooted tree containing `root`.
pub fn rooted_tree_code(g: &Graph, root: Vertex) -> Result<RootedTreeCode, EnumerationError> {
    if root >= g.order() {
        return Err(GraphError::VertexOutOfRange {
            vertex: root,
            order: g.order(),
        }
        .into());
    }
    tree_code_avoiding(g, root, &vec![false; g.order()])
}

/// Canonical isomorphism-class label of a unicyclic graph.
///
/// Ordered by cycle length, then lexicographically by tree codes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnicyclicCode {
    cycle_len: usize,
    trees: Vec<RootedTreeCode>,
}

impl UnicyclicCode {
    /// Builds the code of the dihedral minimum of the given cyclic sequence.
    pub fn from_cycle_trees(trees: Vec<RootedTreeCode>) -> Result<Self, EnumerationError> {
        if trees.len() < 3 {
            return Err(EnumerationError::MalformedCode(format!(
                "cycle of length {}",
                trees.len()
            )));
        }
        let best = dihedral_min(&trees);
        Ok(UnicyclicCode {
            cycle_len: best.len(),
            trees: best,
        })
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle_len
    }

    pub fn trees(&self) -> &[RootedTreeCode] {
        &self.trees
    }

    pub fn order(&self) -> usize {
        self.trees.iter().map(RootedTreeCode::size).sum()
    }

    /// Cycle on `0..k`, then each tree's non-root vertices in preorder.
    pub fn to_graph(&self) -> Graph {
        let k = self.cycle_len;
        let mut edges: Vec<(Vertex, Vertex)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        let mut next = k;
        for (root, tree) in self.trees.iter().enumerate() {
            let parents = parse_parens(tree.as_str()).expect("stored codes are well formed");
            let base = next - 1;
            for p in parents.iter().skip(1) {
                let p = p.unwrap();
                let parent = if p == 0 { root } else { base + p };
                edges.push((parent, next));
                next += 1;
            }
        }
        Graph::new(next, &edges).expect("codes describe simple graphs")
    }
}

fn dihedral_min<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let k = seq.len();
    let mut best: Option<Vec<T>> = None;
    for start in 0..k {
        for reflect in [false, true] {
            let cand: Vec<T> = (0..k)
                .map(|i| {
                    let j = if reflect { (start + k - i) % k } else { (start + i) % k };
                    seq[j].clone()
                })
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// Whether no rotation or reflection of `seq` is lexicographically smaller.
fn is_dihedral_min(seq: &[u32]) -> bool {
    let k = seq.len();
    for start in 0..k {
        for reflect in [false, true] {
            if start == 0 && !reflect {
                continue;
            }
            for i in 0..k {
                let j = if reflect { (start + k - i) % k } else { (start + i) % k };
                match seq[j].cmp(&seq[i]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    true
}

impl fmt::Display for UnicyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.cycle_len)?;
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(t.as_str())?;
        }
        Ok(())
    }
}

impl serde::Serialize for UnicyclicCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for UnicyclicCode {
    type Err = EnumerationError;

    /// Parses `k:t0,t1,...` and canonicalizes it.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EnumerationError::MalformedCode(s.to_string());
        let (k, rest) = s.split_once(':').ok_or_else(bad)?;
        let k: usize = k.trim().parse().map_err(|_| bad())?;
        let trees = rest
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<Vec<RootedTreeCode>, _>>()?;
        if trees.len() != k {
            return Err(bad());
        }
        UnicyclicCode::from_cycle_trees(trees)
    }
}

/// Canonical code of a connected unicyclic graph.
pub fn unicyclic_canonical_code(g: &Graph) -> Result<UnicyclicCode, EnumerationError> {
    if !g.is_unicyclic() {
        return Err(EnumerationError::NotUnicyclic);
    }
    let cycle = unique_cycle(g)?.ok_or(EnumerationError::NotUnicyclic)?;
    let mut blocked = vec![false; g.order()];
    for &v in &cycle {
        blocked[v] = true;
    }
    let trees = cycle
        .iter()
        .map(|&r| tree_code_avoiding(g, r, &blocked))
        .collect::<Result<Vec<_>, _>>()?;
    UnicyclicCode::from_cycle_trees(trees)
}

/// All rooted trees up to a size bound, ranked in code order.
#[derive(Debug, Clone)]
pub struct TreeCatalog {
    /// `codes[r]` is the code of rank `r`.
    codes: Vec<RootedTreeCode>,
    /// `by_size[s]` holds the ranks of trees with `s` vertices, ascending.
    by_size: Vec<Vec<u32>>,
}

impl TreeCatalog {
    pub fn new(max_size: usize) -> Self {
        // by_size_codes[s]: codes of size s, sorted
        let mut by_size_codes: Vec<Vec<String>> = vec![Vec::new(); max_size + 1];
        if max_size >= 1 {
            by_size_codes[1].push("()".into());
        }
        for s in 2..=max_size {
            let mut out = Vec::new();
            let mut chosen: Vec<(usize, usize)> = Vec::new();
            child_multisets(&by_size_codes, s - 1, (1, 0), &mut chosen, &mut out);
            out.sort_unstable();
            by_size_codes[s] = out;
        }
        let mut all: Vec<(String, usize)> = by_size_codes
            .iter()
            .enumerate()
            .flat_map(|(s, v)| v.iter().map(move |c| (c.clone(), s)))
            .collect();
        all.sort_unstable();
        let mut by_size = vec![Vec::new(); max_size + 1];
        let mut codes = Vec::with_capacity(all.len());
        for (rank, (code, s)) in all.into_iter().enumerate() {
            by_size[s].push(rank as u32);
            codes.push(RootedTreeCode(code));
        }
        TreeCatalog { codes, by_size }
    }

    pub fn max_size(&self) -> usize {
        self.by_size.len().saturating_sub(1)
    }

    pub fn code(&self, rank: u32) -> &RootedTreeCode {
        &self.codes[rank as usize]
    }

    pub fn ranks_of_size(&self, s: usize) -> &[u32] {
        self.by_size.get(s).map_or(&[], Vec::as_slice)
    }
}

/// Emits every multiset of child trees with total size `budget`, listed in
/// non-decreasing `(size, index)` order starting from `from`.
fn child_multisets(
    by_size: &[Vec<String>],
    budget: usize,
    from: (usize, usize),
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<String>,
) {
    if budget == 0 {
        let kids = chosen.iter().map(|&(s, i)| by_size[s][i].clone()).collect();
        out.push(RootedTreeCode::from_children(kids).0);
        return;
    }
    for s in from.0..=budget {
        let start = if s == from.0 { from.1 } else { 0 };
        for i in start..by_size[s].len() {
            chosen.push((s, i));
            child_multisets(by_size, budget - s, (s, i), chosen, out);
            chosen.pop();
        }
    }
}

/// One code per isomorphism class of rooted trees on `size` vertices, ascending.
pub fn enumerate_rooted_trees(size: usize) -> Vec<RootedTreeCode> {
    let cat = TreeCatalog::new(size);
    cat.ranks_of_size(size).iter().map(|&r| cat.code(r).clone()).collect()
}

/// Predicates applied to enumerated classes. `None` means unconstrained.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassFilter {
    pub girth: Option<usize>,
    pub matching_number: Option<usize>,
    pub max_degree: Option<usize>,
}

impl ClassFilter {
    pub fn with_matching(m: usize) -> Self {
        ClassFilter {
            matching_number: Some(m),
            ..Default::default()
        }
    }
}

/// One enumerated isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclicClass {
    pub code: UnicyclicCode,
    pub graph: Graph,
    pub matching_number: usize,
}

/// Isomorphism-free generator of unicyclic graphs of one order.
pub struct UnicyclicEnumerator {
    n: usize,
    catalog: TreeCatalog,
}

impl UnicyclicEnumerator {
    pub fn new(n: usize) -> Result<Self, EnumerationError> {
        if n < 3 {
            return Err(EnumerationError::OrderOutOfRange {
                order: n,
                min: 3,
                max: usize::MAX,
            });
        }
        Ok(UnicyclicEnumerator {
            n,
            catalog: TreeCatalog::new(n - 2),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn cycle_lengths(&self, filter: &ClassFilter) -> Vec<usize> {
        (3..=self.n).filter(|&k| filter.girth.is_none_or(|g| g == k)).collect()
    }

    /// Dihedral-minimal rank tuples for cycle length `k`, sorted ascending.
    fn partition(&self, k: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        let extra = self.n - k;
        // the first slot holds the minimum rank, so every later slot is >= it
        for s0 in 1..=extra + 1 {
            for &r0 in self.catalog.ranks_of_size(s0) {
                current.push(r0);
                self.fill(k, extra + k - s0, r0, &mut current, &mut out);
                current.pop();
            }
        }
        out.sort_unstable();
        out
    }

    fn fill(&self, k: usize, budget: usize, min: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let slots_left = k - current.len();
        if slots_left == 0 {
            if is_dihedral_min(current) {
                out.push(current.clone());
            }
            return;
        }
        let sizes = if slots_left == 1 {
            budget..=budget
        } else {
            1..=budget - (slots_left - 1)
        };
        for s in sizes {
            let ranks = self.catalog.ranks_of_size(s);
            let from = ranks.partition_point(|&r| r < min);
            for &r in &ranks[from..] {
                current.push(r);
                self.fill(k, budget - s, min, current, out);
                current.pop();
            }
        }
    }

    fn materialize(&self, k: usize, ranks: &[u32], filter: &ClassFilter) -> Option<UnicyclicClass> {
        let code = UnicyclicCode {
            cycle_len: k,
            trees: ranks.iter().map(|&r| self.catalog.code(r).clone()).collect(),
        };
        let graph = code.to_graph();
        if filter.max_degree.is_some_and(|d| graph.max_degree() != d) {
            return None;
        }
        let matching_number = matching_number_unicyclic(&graph).expect("enumerated graphs are unicyclic");
        if filter.matching_number.is_some_and(|m| m != matching_number) {
            return None;
        }
        Some(UnicyclicClass {
            code,
            graph,
            matching_number,
        })
    }

    /// Sequential stream: ascending cycle length, then ascending code.
    pub fn classes<'a>(&'a self, filter: ClassFilter) -> impl Iterator<Item = UnicyclicClass> + 'a {
        self.cycle_lengths(&filter).into_iter().flat_map(move |k| {
            self.partition(k)
                .into_iter()
                .filter_map(move |ranks| self.materialize(k, &ranks, &filter))
        })
    }

    /// Maps every class in parallel, partitioned by cycle length. The result
    /// is in the same order as [`Self::classes`].
    pub fn par_map<T, F>(&self, filter: ClassFilter, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(UnicyclicClass) -> Option<T> + Sync + Send,
    {
        let ks = self.cycle_lengths(&filter);
        let parts: Vec<Vec<T>> = ks
            .into_par_iter()
            .map(|k| {
                self.partition(k)
                    .into_par_iter()
                    .filter_map(|ranks| self.materialize(k, &ranks, &filter).and_then(&f))
                    .collect()
            })
            .collect();
        parts.into_iter().flatten().collect()
    }

    /// Number of classes, ignoring the matching-number and degree filters.
    pub fn count(&self) -> usize {
        (3..=self.n).map(|k| self.partition(k).len()).sum()
    }
}

/// All unicyclic classes of order `n` passing `filter`, in canonical order.
pub fn enumerate_unicyclic(n: usize, filter: ClassFilter) -> Result<Vec<UnicyclicClass>, EnumerationError> {
    let e = UnicyclicEnumerator::new(n)?;
    Ok(e.classes(filter).collect())
}

/// Brute-force isomorphism test by degree-respecting backtracking over
/// vertex bijections.
pub fn brute_force_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], w)) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(g, h, map, used) {
                return true;
            }
            used[w] = false;
            map.pop();
        }
        false
    }
    extend(g, h, &mut Vec::with_capacity(n), &mut vec![false; n])
}

/// Every connected simple graph with `n` vertices and `n` edges, one per
/// isomorphism class, found by scanning all edge subsets.
pub fn labeled_oracle_enumerate(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    if !(3..=LABELED_ORACLE_MAX_ORDER).contains(&n) {
        return Err(EnumerationError::OrderOutOfRange {
            order: n,
            min: 3,
            max: LABELED_ORACLE_MAX_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut reps: Vec<(Vec<usize>, Graph)> = Vec::new();
    let mut chosen = Vec::with_capacity(n);
    let mut visit = |edges: &[(usize, usize)]| {
        let g = Graph::new(n, edges).unwrap();
        if !g.is_connected() {
            return;
        }
        let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        if !reps.iter().any(|(d, h)| *d == degrees && brute_force_isomorphic(&g, h)) {
            reps.push((degrees, g));
        }
    };
    type Edge = (usize, usize);
    fn combos(pairs: &[Edge], need: usize, chosen: &mut Vec<Edge>, visit: &mut dyn FnMut(&[Edge])) {
        if need == 0 {
            visit(chosen);
            return;
        }
        for i in 0..pairs.len() {
            if pairs.len() - i < need {
                break;
            }
            chosen.push(pairs[i]);
            combos(&pairs[i + 1..], need - 1, chosen, visit);
            chosen.pop();
        }
    }
    combos(&pairs, n, &mut chosen, &mut visit);
    Ok(reps.into_iter().map(|(_, g)| g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_broom_graph, make_cycle, make_hnk, Attachment};

    #[test]
    fn rooted_codes() {
        let single = Graph::new(1, &[]).unwrap();
        assert_eq!(rooted_tree_code(&single, 0).unwrap().as_str(), "()");
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(rooted_tree_code(&path, 0).unwrap().as_str(), "((()))");
        assert_eq!(rooted_tree_code(&path, 1).unwrap().as_str(), "(()())");
        let tri = make_cycle(3).unwrap();
        assert_eq!(rooted_tree_code(&tri, 0), Err(EnumerationError::CycleInTree(0)));
    }

    #[test]
    fn rooted_tree_counts() {
        let counts: Vec<usize> = (1..=8).map(|s| enumerate_rooted_trees(s).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115]);
        assert_eq!(
            enumerate_rooted_trees(3).iter().map(|c| c.as_str()).collect::<Vec<_>>(),
            vec!["((()))", "(()())"]
        );
    }

    #[test]
    fn code_parsing_canonicalizes() {
        let c: RootedTreeCode = "((())())".parse().unwrap();
        assert_eq!(c.as_str(), "((())())");
        let c: RootedTreeCode = "(()(()))".parse().unwrap();
        assert_eq!(c.as_str(), "((())())");
        assert!("(()".parse::<RootedTreeCode>().is_err());
        assert!("()()".parse::<RootedTreeCode>().is_err());
        let u: UnicyclicCode = "3:(),(()),()".parse().unwrap();
        assert_eq!(u.to_string(), "3:(()),(),()");
        assert_eq!(unicyclic_canonical_code(&u.to_graph()).unwrap(), u);
    }

    #[test]
    fn canonical_codes() {
        let c5 = unicyclic_canonical_code(&make_cycle(5).unwrap()).unwrap();
        assert_eq!(c5.to_string(), "5:(),(),(),(),()");
        let h = make_hnk(6, 3).unwrap();
        let perm = [4, 2, 0, 5, 1, 3];
        assert_eq!(
            unicyclic_canonical_code(&h).unwrap(),
            unicyclic_canonical_code(&h.permuted(&perm)).unwrap()
        );
        let u63 = make_broom_graph(
            6,
            3,
            [
                Attachment::with_paths(1, 1),
                Attachment::default(),
                Attachment::default(),
            ],
        )
        .unwrap();
        let other = make_broom_graph(
            6,
            4,
            [Attachment::pendants(1), Attachment::pendants(1), Attachment::default()],
        )
        .unwrap();
        assert_ne!(
            unicyclic_canonical_code(&u63).unwrap(),
            unicyclic_canonical_code(&other).unwrap()
        );
    }

    #[test]
    fn dihedral_check_agrees_with_minimum() {
        let seqs: [&[u32]; 5] = [&[0, 1, 2], &[0, 2, 1], &[1, 0, 0], &[0, 1, 0, 2], &[0, 2, 0, 1]];
        for s in seqs {
            assert_eq!(is_dihedral_min(s), dihedral_min(s) == s, "{s:?}");
        }
    }

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (3..=9).map(|n| UnicyclicEnumerator::new(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 2, 5, 13, 33, 89, 240]);
        assert!(UnicyclicEnumerator::new(2).is_err());
    }

    #[test]
    fn enumerated_codes_round_trip() {
        for class in enumerate_unicyclic(7, ClassFilter::default()).unwrap() {
            assert_eq!(unicyclic_canonical_code(&class.graph).unwrap(), class.code);
            assert_eq!(class.graph.order(), 7);
        }
    }

    #[test]
    fn filters() {
        let f = ClassFilter {
            girth: Some(3),
            ..Default::default()
        };
        assert!(enumerate_unicyclic(6, f)
            .unwrap()
            .iter()
            .all(|c| c.code.cycle_len() == 3));
        let m2 = enumerate_unicyclic(5, ClassFilter::with_matching(2)).unwrap();
        assert_eq!(m2.len(), 5);
        let star = ClassFilter {
            max_degree: Some(5),
            ..Default::default()
        };
        assert_eq!(enumerate_unicyclic(6, star).unwrap().len(), 1);
    }

    #[test]
    fn labeled_oracle_small() {
        assert_eq!(labeled_oracle_enumerate(3).unwrap().len(), 1);
        assert_eq!(labeled_oracle_enumerate(4).unwrap().len(), 2);
        assert_eq!(labeled_oracle_enumerate(5).unwrap().len(), 5);
        assert!(labeled_oracle_enumerate(8).is_err());
    }
}
