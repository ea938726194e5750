//! Maximum matchings on trees and unicyclic graphs.
//!
//! Forests use greedy leaf matching. A unicyclic graph is reduced to two forest
//! problems by splitting on one cycle edge `xy`: a maximum matching either
//! avoids `xy` or contains it. There is no general blossom algorithm; the
//! exhaustive oracle below covers other small graphs.

use thiserror::Error;

use crate::graph::{unique_cycle, Graph, GraphError, Vertex};

/// Largest order accepted by the exhaustive routines.
pub const ORACLE_MAX_ORDER: usize = 16;
/// Largest order for which all maximum matchings are listed.
pub const ENUMERATION_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("graph contains a cycle")]
    NotAForest,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph of order {order} exceeds the exhaustive limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(Vertex, Vertex),
    #[error("vertex {0} is covered by two matching edges")]
    SharedVertex(Vertex),
    #[error("lemma preconditions violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A set of pairwise vertex-disjoint edges, each stored as `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    /// Checks that every edge is in `g` and no vertex is covered twice.
    pub fn new(g: &Graph, edges: &[(Vertex, Vertex)]) -> Result<Self, MatchingError> {
        let mut covered = vec![false; g.order()];
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(MatchingError::MissingEdge(u, v));
            }
            for w in [u, v] {
                if covered[w] {
                    return Err(MatchingError::SharedVertex(w));
                }
                covered[w] = true;
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `mate[v]` is the vertex matched to `v`, if any.
    pub fn mates(&self, order: usize) -> Vec<Option<Vertex>> {
        let mut mate = vec![None; order];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    pub fn saturates(&self, v: Vertex) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }
}

/// Greedy leaf matching on a forest.
pub fn maximum_matching_tree(g: &Graph) -> Result<Matching, MatchingError> {
    if !g.is_forest() {
        return Err(MatchingError::NotAForest);
    }
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut leaves: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut edges = Vec::new();
    while let Some(leaf) = leaves.pop() {
        if !alive[leaf] || deg[leaf] != 1 {
            continue;
        }
        let partner = *g.neighbors(leaf).iter().find(|&&w| alive[w]).unwrap();
        edges.push((leaf.min(partner), leaf.max(partner)));
        alive[leaf] = false;
        alive[partner] = false;
        for &w in g.neighbors(partner) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    leaves.push(w);
                }
            }
        }
    }
    Ok(Matching::new(g, &edges).expect("greedy leaf matching is valid"))
}

pub fn matching_number_tree(g: &Graph) -> Result<usize, MatchingError> {
    Ok(maximum_matching_tree(g)?.len())
}

pub fn maximum_matching_unicyclic(g: &Graph) -> Result<Matching, MatchingError> {
    if !g.is_unicyclic() {
        return Err(MatchingError::NotUnicyclic);
    }
    let cycle = unique_cycle(g)?.ok_or(MatchingError::NotUnicyclic)?;
    let (x, y) = (cycle[0], cycle[1]);

    let without = maximum_matching_tree(&g.without_edge(x, y))?;

    let (rest, map) = g.without_vertices(&[x, y]);
    let inner = maximum_matching_tree(&rest)?;
    if inner.len() + 1 > without.len() {
        let mut back = vec![0; rest.order()];
        for (old, new) in map.iter().enumerate() {
            if let Some(new) = new {
                back[*new] = old;
            }
        }
        let mut edges: Vec<_> = inner.edges().iter().map(|&(a, b)| (back[a], back[b])).collect();
        edges.push((x, y));
        Ok(Matching::new(g, &edges).expect("lifted matching is valid"))
    } else {
        Ok(without)
    }
}

pub fn matching_number_unicyclic(g: &Graph) -> Result<usize, MatchingError> {
    Ok(maximum_matching_unicyclic(g)?.len())
}

/// Matching number of a forest or unicyclic graph, falling back to the
/// exhaustive oracle for other small graphs.
pub fn matching_number(g: &Graph) -> Result<usize, MatchingError> {
    if g.is_forest() {
        matching_number_tree(g)
    } else if g.is_unicyclic() {
        matching_number_unicyclic(g)
    } else {
        matching_number_oracle(g)
    }
}

fn guard(g: &Graph, limit: usize) -> Result<(), MatchingError> {
    if g.order() > limit {
        return Err(MatchingError::TooLarge {
            order: g.order(),
            limit,
        });
    }
    Ok(())
}

/// Exhaustive include/exclude search over edges with a `free / 2` bound.
pub fn matching_number_oracle(g: &Graph) -> Result<usize, MatchingError> {
    guard(g, ORACLE_MAX_ORDER)?;
    fn search(edges: &[(Vertex, Vertex)], used: u32, free: usize, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        let Some((&(u, v), rest)) = edges.split_first() else {
            return;
        };
        if size + (free / 2).min(edges.len()) <= *best {
            return;
        }
        if used & (1 << u) == 0 && used & (1 << v) == 0 {
            search(rest, used | (1 << u) | (1 << v), free - 2, size + 1, best);
        }
        search(rest, used, free, size, best);
    }
    let mut best = 0;
    search(g.edges(), 0, g.order(), 0, &mut best);
    Ok(best)
}

/// Every maximum matching of `g`, each sorted, in lexicographic order.
pub fn all_maximum_matchings(g: &Graph) -> Result<Vec<Matching>, MatchingError> {
    guard(g, ENUMERATION_MAX_ORDER)?;
    let target = matching_number(g)?;
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    fn walk(
        edges: &[(Vertex, Vertex)],
        used: u32,
        current: &mut Vec<(Vertex, Vertex)>,
        target: usize,
        out: &mut Vec<Vec<(Vertex, Vertex)>>,
    ) {
        if current.len() == target {
            out.push(current.clone());
            return;
        }
        if current.len() + edges.len() < target {
            return;
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if used & (1 << u) == 0 && used & (1 << v) == 0 {
                current.push((u, v));
                walk(&edges[i + 1..], used | (1 << u) | (1 << v), current, target, out);
                current.pop();
            }
        }
    }
    let mut raw = Vec::new();
    walk(&edges, 0, &mut Vec::new(), target, &mut raw);
    Ok(raw
        .into_iter()
        .map(|e| Matching::new(g, &e).expect("enumerated matchings are valid"))
        .collect())
}

/// Whether `m` admits no augmenting path in `g`.
///
/// Searches every simple alternating path from every unsaturated vertex with
/// backtracking, so odd cycles cannot hide an augmenting path.
pub fn is_maximum_matching(g: &Graph, m: &Matching) -> Result<bool, MatchingError> {
    Matching::new(g, m.edges())?;
    Ok(find_augmenting_path(g, m).is_none())
}

/// Some augmenting path for `m`, as a vertex sequence.
pub fn find_augmenting_path(g: &Graph, m: &Matching) -> Option<Vec<Vertex>> {
    let n = g.order();
    let mate = m.mates(n);

    // `path` ends at a vertex reached by a matched edge (or the start).
    fn extend(g: &Graph, mate: &[Option<Vertex>], path: &mut Vec<Vertex>, on_path: &mut [bool]) -> bool {
        let tip = *path.last().unwrap();
        for &w in g.neighbors(tip) {
            if on_path[w] || mate[tip] == Some(w) {
                continue;
            }
            match mate[w] {
                None => {
                    path.push(w);
                    return true;
                }
                Some(z) if !on_path[z] => {
                    path.extend([w, z]);
                    on_path[w] = true;
                    on_path[z] = true;
                    if extend(g, mate, path, on_path) {
                        return true;
                    }
                    on_path[w] = false;
                    on_path[z] = false;
                    path.truncate(path.len() - 2);
                }
                Some(_) => {}
            }
        }
        false
    }

    for start in (0..n).filter(|&v| mate[v].is_none()) {
        let mut path = vec![start];
        let mut on_path = vec![false; n];
        on_path[start] = true;
        if extend(g, &mate, &mut path, &mut on_path) {
            return Some(path);
        }
    }
    None
}

/// A maximum matching together with a pendant vertex it leaves unsaturated.
///
/// Requires a unicyclic `g` that is not a cycle and has `n > 2 * nu(g)`.
pub fn pendant_unsaturated_witness(g: &Graph) -> Result<Option<(Matching, Vertex)>, MatchingError> {
    if !g.is_unicyclic() {
        return Err(MatchingError::NotUnicyclic);
    }
    let nu = matching_number_unicyclic(g)?;
    if g.order() <= 2 * nu {
        return Err(MatchingError::Precondition(format!(
            "order {} is not greater than twice the matching number {nu}",
            g.order()
        )));
    }
    if g.max_degree() == 2 {
        return Err(MatchingError::Precondition("graph is a cycle".into()));
    }
    let pendants = g.pendant_vertices();
    for m in all_maximum_matchings(g)? {
        if let Some(&v) = pendants.iter().find(|&&v| !m.saturates(v)) {
            return Ok(Some((m, v)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn tree_matching() {
        assert_eq!(matching_number_tree(&path(4)).unwrap(), 2);
        let star = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(matching_number_tree(&star).unwrap(), 1);
        assert_eq!(matching_number_tree(&cycle(4)), Err(MatchingError::NotAForest));
        // forests with isolated vertices
        let forest = Graph::new(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(matching_number_tree(&forest).unwrap(), 2);
    }

    #[test]
    fn unicyclic_matching() {
        assert_eq!(matching_number_unicyclic(&cycle(7)).unwrap(), 3);
        assert_eq!(matching_number_unicyclic(&cycle(6)).unwrap(), 3);
        assert_eq!(matching_number_unicyclic(&path(4)), Err(MatchingError::NotUnicyclic));
        let m = maximum_matching_unicyclic(&cycle(6)).unwrap();
        assert!(is_maximum_matching(&cycle(6), &m).unwrap());
    }

    #[test]
    fn oracle_small() {
        assert_eq!(matching_number_oracle(&cycle(4)).unwrap(), 2);
        assert_eq!(matching_number_oracle(&cycle(9)).unwrap(), 4);
        let big = path(17);
        assert!(matches!(
            matching_number_oracle(&big),
            Err(MatchingError::TooLarge { .. })
        ));
    }

    #[test]
    fn berge_check() {
        let c4 = cycle(4);
        let partial = Matching::new(&c4, &[(0, 1)]).unwrap();
        assert!(!is_maximum_matching(&c4, &partial).unwrap());
        let path = find_augmenting_path(&c4, &partial).unwrap();
        assert_eq!(path.len() % 2, 0);
        let perfect = Matching::new(&c4, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_maximum_matching(&c4, &perfect).unwrap());
        assert_eq!(
            Matching::new(&c4, &[(0, 1), (1, 2)]),
            Err(MatchingError::SharedVertex(1))
        );
        assert_eq!(Matching::new(&c4, &[(0, 2)]), Err(MatchingError::MissingEdge(0, 2)));
    }

    #[test]
    fn augmenting_path_through_odd_cycle() {
        // Triangle 0-1-2 with tails 0-3 and 2-4; M = {01}. The augmenting path
        // 3-0-1-2-4 has to pass the matched edge inside the triangle.
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (2, 4)]).unwrap();
        let m = Matching::new(&g, &[(1, 2)]).unwrap();
        let p = find_augmenting_path(&g, &m).unwrap();
        assert_eq!(p.len() % 2, 0);
        assert!(!is_maximum_matching(&g, &m).unwrap());
    }

    #[test]
    fn witness_preconditions() {
        assert!(matches!(
            pendant_unsaturated_witness(&cycle(7)),
            Err(MatchingError::Precondition(_))
        ));
        // triangle with three pendants on one vertex: n = 6, m = 2
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (0, 5)]).unwrap();
        let (m, v) = pendant_unsaturated_witness(&g).unwrap().unwrap();
        assert_eq!(m.len(), 2);
        assert!(!m.saturates(v));
        assert_eq!(g.degree(v), 1);
    }

    #[test]
    fn all_maximum_matchings_of_c4() {
        let all = all_maximum_matchings(&cycle(4)).unwrap();
        assert_eq!(all.len(), 2);
        for m in &all {
            assert!(is_maximum_matching(&cycle(4), m).unwrap());
        }
    }
}
