//! Immutable simple graphs and the surgeries used by domination-polynomial
//! recurrences: vertex/edge deletion, vertex contraction, closed-neighborhood
//! removal, disjoint union, corona with `K_1`, and the Cartesian product.
//!
//! Vertices are labelled `0..order`. Deleting vertices compacts the labels
//! while preserving the ascending order of the survivors, so surgery outputs
//! are deterministic and directly comparable. The null graph (order 0) is a
//! legal value; recurrence operands such as `G - N[u]` produce it.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
}

/// Errors from the edge-list text format, each carrying the 1-based line.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected header `n <order>`")]
    BadHeader { line: usize },
    #[error("line {line}: malformed edge line `{text}`")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        order: usize,
    },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: loop {u} {u}")]
    Loop { line: usize, u: usize },
}

/// Set of vertex indices of some graph.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VertexSet {
    members: BTreeSet<usize>,
}

impl VertexSet {
    pub fn new() -> VertexSet {
        VertexSet::default()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.members.insert(v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            members: self.members.union(&other.members).copied().collect(),
        }
    }

    /// Complement within `{0..order-1}`.
    pub fn complement(&self, order: usize) -> VertexSet {
        (0..order).filter(|v| !self.contains(*v)).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        VertexSet {
            members: iter.into_iter().collect(),
        }
    }
}

/// Undirected simple graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Edgeless graph of the given order.
    pub fn empty(order: usize) -> Graph {
        Graph {
            adjacency: vec![BTreeSet::new(); order],
        }
    }

    /// The graph with no vertices.
    pub fn null() -> Graph {
        Graph::empty(0)
    }

    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if !g.adjacency[u].insert(v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            g.adjacency[v].insert(u);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|n| n.contains(&v))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[u].iter().copied()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in &self.adjacency[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertex(&self, u: usize) -> Result<(), GraphError> {
        if u < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: u,
                order: self.order(),
            })
        }
    }

    /// `N[u] = N(u) ∪ {u}`.
    pub fn closed_neighborhood(&self, u: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(u)?;
        let mut s: VertexSet = self.neighbors(u).collect();
        s.insert(u);
        Ok(s)
    }

    /// Induced subgraph on the survivors, which keep their ascending order.
    pub fn delete_vertices(&self, removed: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(v) = removed.iter().find(|&v| v >= self.order()) {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        let mut relabel = vec![usize::MAX; self.order()];
        let mut next = 0;
        for v in self.vertices() {
            if !removed.contains(v) {
                relabel[v] = next;
                next += 1;
            }
        }
        let mut g = Graph::empty(next);
        for u in self.vertices() {
            if removed.contains(u) {
                continue;
            }
            for &v in &self.adjacency[u] {
                if u < v && !removed.contains(v) {
                    g.adjacency[relabel[u]].insert(relabel[v]);
                    g.adjacency[relabel[v]].insert(relabel[u]);
                }
            }
        }
        Ok(g)
    }

    /// `G - u`.
    pub fn delete_vertex(&self, u: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.delete_vertices(&std::iter::once(u).collect())
    }

    /// `G - N[u]`; may be the null graph.
    pub fn delete_closed_neighborhood(&self, u: usize) -> Result<Graph, GraphError> {
        let nbhd = self.closed_neighborhood(u)?;
        self.delete_vertices(&nbhd)
    }

    /// `G / u`: joins all vertices of `N(u)` pairwise, then deletes `u`.
    pub fn contract_vertex(&self, u: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        let nbrs: Vec<usize> = self.neighbors(u).collect();
        let mut g = self.clone();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                g.adjacency[a].insert(b);
                g.adjacency[b].insert(a);
            }
        }
        g.delete_vertex(u)
    }

    /// `G - e` for the edge `e = {u, v}`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        let mut g = self.clone();
        g.adjacency[u].remove(&v);
        g.adjacency[v].remove(&u);
        Ok(g)
    }

    /// Disjoint union; the labels of `other` are offset by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.order();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|n| n.iter().map(|&v| v + offset).collect()),
        );
        Graph { adjacency }
    }

    /// `G ∘ K_1`: vertex `i` gains the pendant neighbor `order + i`.
    pub fn corona_k1(&self) -> Graph {
        let n = self.order();
        let mut g = self.disjoint_union(&Graph::empty(n));
        for i in 0..n {
            g.adjacency[i].insert(n + i);
            g.adjacency[n + i].insert(i);
        }
        g
    }

    /// Cartesian product `G □ H`; vertex `(i, j)` gets label `i * h.order() + j`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.order();
        let mut g = Graph::empty(self.order() * m);
        for i in self.vertices() {
            for j in other.vertices() {
                let a = i * m + j;
                for &j2 in &other.adjacency[j] {
                    if j < j2 {
                        g.adjacency[a].insert(i * m + j2);
                        g.adjacency[i * m + j2].insert(a);
                    }
                }
                for &i2 in &self.adjacency[i] {
                    if i < i2 {
                        g.adjacency[a].insert(i2 * m + j);
                        g.adjacency[i2 * m + j].insert(a);
                    }
                }
            }
        }
        g
    }

    /// Parses the edge-list text format: header `n <order>`, then one edge
    /// `u v` per non-empty line.
    pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (hline, header) = lines
            .by_ref()
            .find(|(_, l)| !l.is_empty())
            .ok_or(EdgeListError::BadHeader { line: 1 })?;
        let order: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["n", num] => num
                .parse()
                .map_err(|_| EdgeListError::BadHeader { line: hline })?,
            _ => return Err(EdgeListError::BadHeader { line: hline }),
        };
        let mut g = Graph::empty(order);
        for (line, l) in lines {
            if l.is_empty() {
                continue;
            }
            let parts: Vec<&str> = l.split_whitespace().collect();
            let (u, v) = match parts[..] {
                [a, b] => match (a.parse::<usize>(), b.parse::<usize>()) {
                    (Ok(u), Ok(v)) => (u, v),
                    _ => {
                        return Err(EdgeListError::MalformedEdge {
                            line,
                            text: l.to_string(),
                        })
                    }
                },
                _ => {
                    return Err(EdgeListError::MalformedEdge {
                        line,
                        text: l.to_string(),
                    })
                }
            };
            for w in [u, v] {
                if w >= order {
                    return Err(EdgeListError::VertexOutOfRange {
                        line,
                        vertex: w,
                        order,
                    });
                }
            }
            if u == v {
                return Err(EdgeListError::Loop { line, u });
            }
            if !g.adjacency[u].insert(v) {
                return Err(EdgeListError::DuplicateEdge { line, u, v });
            }
            g.adjacency[v].insert(u);
        }
        Ok(g)
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("n {}\n", self.order());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order(), self.edges())
    }
}

/// All labelled graphs of the given order, by edge-subset mask.
/// Intended for exhaustive sweeps of small orders.
pub fn all_graphs(order: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .collect();
    let count: u64 = 1 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(order, edges).expect("pair list is duplicate-free")
    })
}

/// Erdős–Rényi `G(order, edge_prob)` draw.
pub fn random_graph(order: usize, edge_prob: f64, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(edge_prob))
        .collect();
    Graph::from_edges(order, edges).expect("pair list is duplicate-free")
}
