use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::GraphError;

pub const MAX_VERTICES: usize = 128;

/// Simple undirected graph on at most 128 vertices, adjacency as bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    adj: Vec<u128>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl SmallGraph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(SmallGraph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::Vertex(u.max(v)));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint.
    pub fn petersen() -> Self {
        let pairs = five_pairs();
        let mut g = Self::empty(10).expect("10 vertices");
        for i in 0..10 {
            for j in i + 1..10 {
                if pairs[i] & pairs[j] == 0 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Complement of the Petersen graph: 2-subsets adjacent when they meet.
    pub fn pentagram_graph() -> Self {
        Self::petersen().complement()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> u128 {
        self.adj[u]
    }

    pub fn all_vertices(&self) -> u128 {
        if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        }
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|u| self.degree(u) == d).then_some(d)
    }

    pub fn complement(&self) -> SmallGraph {
        let all = self.all_vertices();
        SmallGraph {
            n: self.n,
            adj: (0..self.n).map(|u| !self.adj[u] & all & !(1 << u)).collect(),
        }
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Line graph: one vertex per edge, adjacent when the edges share an end.
    pub fn line_graph(&self) -> Result<SmallGraph, GraphError> {
        let edges = self.edges();
        let mut g = Self::empty(edges.len())?;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn adjacency_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| if self.has_edge(u, v) { 1.0 } else { 0.0 }).collect())
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        })
        .expect("graph serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, GraphError> {
        let raw: GraphJson =
            serde_json::from_value(value.clone()).map_err(|e| GraphError::Json(e.to_string()))?;
        let edges: Vec<(usize, usize)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::from_edges(raw.n, &edges)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "graph {name} {{").unwrap();
        for u in 0..self.n {
            writeln!(s, "  v{u};").unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(s, "  v{u} -- v{v};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

impl std::fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SmallGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Bitmasks of the ten 2-subsets of `{0..5}` in lexicographic order.
pub(crate) fn five_pairs() -> Vec<u8> {
    let mut out = Vec::with_capacity(10);
    for a in 0..5 {
        for b in a + 1..5 {
            out.push(1u8 << a | 1u8 << b);
        }
    }
    out
}

/// Strong product: pairs adjacent when each coordinate is equal or adjacent
/// and the pairs differ. Vertex `(a, b)` has index `a·|h| + b`.
pub fn strong_product(g: &SmallGraph, h: &SmallGraph) -> Result<SmallGraph, GraphError> {
    let n = g.n * h.n;
    let mut p = SmallGraph::empty(n)?;
    let close = |graph: &SmallGraph, a: usize, b: usize| a == b || graph.has_edge(a, b);
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (u / h.n, u % h.n);
            let (c, d) = (v / h.n, v % h.n);
            if close(g, a, c) && close(h, b, d) {
                p.add_edge(u, v);
            }
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_and_complement() {
        let p = SmallGraph::petersen();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.regular_degree(), Some(3));
        let q = SmallGraph::pentagram_graph();
        assert_eq!(q.edge_count(), 30);
        assert_eq!(q.regular_degree(), Some(6));
    }

    #[test]
    fn strong_product_size() {
        let c5 = SmallGraph::cycle(5).unwrap();
        let k2 = SmallGraph::complete(2).unwrap();
        let p = strong_product(&c5, &k2).unwrap();
        assert_eq!(p.vertex_count(), 10);
        // (2 + 1)·(1 + 1) − 1 neighbours each
        assert_eq!(p.regular_degree(), Some(5));
        let big = SmallGraph::empty(12).unwrap();
        assert!(matches!(strong_product(&big, &big), Err(GraphError::TooLarge(144))));
    }

    #[test]
    fn json_and_errors() {
        let c5 = SmallGraph::cycle(5).unwrap();
        assert_eq!(SmallGraph::from_json(&c5.to_json()).unwrap(), c5);
        assert!(matches!(SmallGraph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(1))));
        assert!(matches!(SmallGraph::from_edges(3, &[(0, 3)]), Err(GraphError::Vertex(3))));
        assert!(c5.to_dot("c5").contains("v4 -- v0") || c5.to_dot("c5").contains("v0 -- v4"));
    }
}
