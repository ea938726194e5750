//! Simple undirected graphs and exact distance-based invariants.
//!
//! Every invariant here is an exact integer computed from `n` breadth-first
//! searches. Disconnected input is rejected instead of producing a sentinel.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {edges} edges on {order} vertices; expected a tree or a unicyclic graph")]
    TooManyEdges { order: usize, edges: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An immutable simple undirected graph on vertices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range indices.
    ///
    /// Edges are stored normalized as `(min, max)` in insertion order.
    pub fn new(order: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); order];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = (u.min(v), u.max(v));
            if adjacency[a].contains(&b) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
            normalized.push((a, b));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            edges: normalized,
        })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn pendant_vertices(&self) -> Vec<Vertex> {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return false;
        }
        bfs_raw(self, 0).iter().all(Option::is_some)
    }

    /// Connected with exactly as many edges as vertices.
    pub fn is_unicyclic(&self) -> bool {
        self.size() == self.order() && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        let mut dsu = DisjointSets::new(self.order());
        self.edges.iter().all(|&(u, v)| dsu.union(u, v))
    }

    /// The subgraph induced by deleting `removed`, with the surviving vertices
    /// renumbered in increasing order. Returns the new graph and the map from
    /// old index to new index.
    pub fn without_vertices(&self, removed: &[Vertex]) -> (Graph, Vec<Option<Vertex>>) {
        let mut map = vec![None; self.order()];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        let g = Graph::new(next, &edges).expect("induced subgraph of a simple graph is simple");
        (g, map)
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let (a, b) = (u.min(v), u.max(v));
        let edges: Vec<_> = self.edges.iter().copied().filter(|&e| e != (a, b)).collect();
        Graph::new(self.order(), &edges).expect("edge deletion preserves simplicity")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length must equal order");
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.order(), &edges).expect("relabeling preserves simplicity")
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

fn bfs_raw(g: &Graph, source: Vertex) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.order()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn check_vertex(g: &Graph, v: Vertex) -> Result<(), GraphError> {
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(())
}

/// Unweighted shortest-path distances from `source`.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Result<Vec<u32>, GraphError> {
    check_vertex(g, source)?;
    bfs_raw(g, source)
        .into_iter()
        .map(|d| d.ok_or(GraphError::Disconnected))
        .collect()
}

/// Row-major `n x n` distance matrix from `n` BFS runs.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Result<Self, GraphError> {
        let n = g.order();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut dist = Vec::with_capacity(n * n);
        for v in 0..n {
            dist.extend(bfs_distances(g, v)?);
        }
        Ok(DistanceMatrix { n, dist })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, v: Vertex) -> &[u32] {
        &self.dist[v * self.n..(v + 1) * self.n]
    }

    pub fn eccentricities(&self) -> Vec<u64> {
        (0..self.n)
            .map(|v| self.row(v).iter().copied().max().unwrap_or(0) as u64)
            .collect()
    }

    pub fn transmissions(&self) -> Vec<u64> {
        (0..self.n)
            .map(|v| self.row(v).iter().map(|&d| d as u64).sum())
            .collect()
    }
}

pub fn eccentricity(g: &Graph, v: Vertex) -> Result<u64, GraphError> {
    Ok(bfs_distances(g, v)?.into_iter().max().unwrap_or(0) as u64)
}

pub fn transmission(g: &Graph, v: Vertex) -> Result<u64, GraphError> {
    Ok(bfs_distances(g, v)?.into_iter().map(u64::from).sum())
}

/// Eccentric distance sum, `sum_v ecc(v) * D(v)`.
pub fn eds(g: &Graph) -> Result<u64, GraphError> {
    let dm = DistanceMatrix::new(g)?;
    Ok(eds_from(&dm))
}

pub(crate) fn eds_from(dm: &DistanceMatrix) -> u64 {
    dm.eccentricities()
        .iter()
        .zip(dm.transmissions())
        .map(|(e, d)| e * d)
        .sum()
}

/// Eccentric distance sum in pair form, `sum_{u<v} (ecc(u) + ecc(v)) d(u,v)`.
pub fn eds_pair_form(g: &Graph) -> Result<u64, GraphError> {
    let dm = DistanceMatrix::new(g)?;
    let ecc = dm.eccentricities();
    let n = dm.order();
    let mut total = 0;
    for u in 0..n {
        for v in u + 1..n {
            total += (ecc[u] + ecc[v]) * dm.get(u, v) as u64;
        }
    }
    Ok(total)
}

pub fn wiener(g: &Graph) -> Result<u64, GraphError> {
    let dm = DistanceMatrix::new(g)?;
    let n = dm.order();
    Ok((0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| dm.get(u, v) as u64)
        .sum())
}

/// Degree distance, `sum_{u<v} (deg(u) + deg(v)) d(u,v)`.
pub fn degree_distance(g: &Graph) -> Result<u64, GraphError> {
    let dm = DistanceMatrix::new(g)?;
    Ok(degree_distance_from(g, &dm))
}

fn degree_distance_from(g: &Graph, dm: &DistanceMatrix) -> u64 {
    let n = dm.order();
    let mut total = 0;
    for u in 0..n {
        for v in u + 1..n {
            total += (g.degree(u) + g.degree(v)) as u64 * dm.get(u, v) as u64;
        }
    }
    total
}

/// Length of a shortest cycle, or 0 for a forest.
pub fn girth(g: &Graph) -> usize {
    let n = g.order();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        0
    } else {
        best
    }
}

/// The unique cycle of a connected unicyclic graph, oriented to start at its
/// lowest vertex and continue through the lower of that vertex's two cycle
/// neighbours. Returns `None` for a tree.
pub fn unique_cycle(g: &Graph) -> Result<Option<Vec<Vertex>>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if g.size() + 1 == g.order() {
        return Ok(None);
    }
    if g.size() != g.order() {
        return Err(GraphError::TooManyEdges {
            order: g.order(),
            edges: g.size(),
        });
    }
    // Peel leaves; what survives is the cycle.
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let start = (0..n).find(|&v| alive[v]).expect("unicyclic graph has a cycle");
    let on_cycle = |v: &Vertex| alive[*v];
    let second = *g.neighbors(start).iter().find(|v| on_cycle(v)).unwrap();
    let mut cycle = vec![start, second];
    loop {
        let cur = cycle[cycle.len() - 1];
        let prev = cycle[cycle.len() - 2];
        let next = *g.neighbors(cur).iter().find(|&&w| alive[w] && w != prev).unwrap();
        if next == start {
            break;
        }
        cycle.push(next);
    }
    Ok(Some(cycle))
}

/// Per-vertex eccentricities and transmissions plus every scalar invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub order: usize,
    pub size: usize,
    pub eccentricities: Vec<u64>,
    pub transmissions: Vec<u64>,
    pub eds: u64,
    pub wiener: u64,
    pub degree_distance: u64,
    pub matching_number: usize,
    pub girth: usize,
    pub max_degree: usize,
    pub radius: u64,
    pub diameter: u64,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Result<Self, crate::Error> {
        let dm = DistanceMatrix::new(g)?;
        let eccentricities = dm.eccentricities();
        let transmissions = dm.transmissions();
        let eds = eds_from(&dm);
        let wiener = transmissions.iter().sum::<u64>() / 2;
        Ok(InvariantReport {
            order: g.order(),
            size: g.size(),
            radius: *eccentricities.iter().min().unwrap(),
            diameter: *eccentricities.iter().max().unwrap(),
            eccentricities,
            transmissions,
            eds,
            wiener,
            degree_distance: degree_distance_from(g, &dm),
            matching_number: crate::matching::matching_number(g)?,
            girth: girth(g),
            max_degree: g.max_degree(),
        })
    }
}

/// Parses the edge-list text format: `#` comments, a header line `n <order>`,
/// then one `<u> <v>` pair per line.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut order = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| GraphError::Parse { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match order {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(err(format!("expected header `n <order>`, found `{line}`")));
                }
                let n = fields[1]
                    .parse::<usize>()
                    .map_err(|_| err(format!("invalid order `{}`", fields[1])))?;
                order = Some(n);
            }
            Some(n) => {
                if fields.len() != 2 {
                    return Err(err(format!("expected `<u> <v>`, found `{line}`")));
                }
                let mut ends = [0usize; 2];
                for (slot, f) in ends.iter_mut().zip(&fields) {
                    *slot = f.parse().map_err(|_| err(format!("invalid vertex index `{f}`")))?;
                }
                let (u, v) = (ends[0], ends[1]);
                if u >= n || v >= n {
                    return Err(err(format!("vertex {} out of range for order {n}", u.max(v))));
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                if edges.iter().any(|&e| e == (u.min(v), u.max(v))) {
                    return Err(err(format!("duplicate edge {u}-{v}")));
                }
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    let n = order.ok_or(GraphError::Parse {
        line: text.lines().count().max(1),
        msg: "missing header `n <order>`".into(),
    })?;
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_edge_list(self))
    }
}
