//! Labeled simple graphs with lexicographic edge indexing.
//!
//! Vertices are `0..n` internally and `1..=n` in every text format. Edge `i`
//! is the `i`-th pair `(u, v)`, `u < v`, in lexicographic order; faces of the
//! complexes built on a graph are subsets of these indices.

use std::fmt;

use crate::error::{capacity, invalid, Result};
use crate::face::{Face, MAX_GROUND};

/// Largest vertex count accepted by the constructors.
pub const MAX_VERTICES: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Labels {
    Plain,
    /// `a_1..a_left` occupy vertices `0..left`, `b_1..b_right` the rest.
    Bipartite { left: usize, right: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Labels,
}

/// Degrees of every vertex in a spanning subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexDegreeVector(pub Vec<usize>);

impl VertexDegreeVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl std::ops::Index<usize> for VertexDegreeVector {
    type Output = usize;
    fn index(&self, v: usize) -> &usize {
        &self.0[v]
    }
}

impl Graph {
    fn build(n: usize, mut edges: Vec<(usize, usize)>, labels: Labels) -> Result<Self> {
        if n == 0 {
            return invalid("a graph needs at least one vertex");
        }
        if n > MAX_VERTICES {
            return capacity(format!("{n} vertices exceeds the limit of {MAX_VERTICES}"));
        }
        edges.sort_unstable();
        edges.dedup();
        if edges.len() > MAX_GROUND {
            return capacity(format!(
                "{} edges exceeds the {MAX_GROUND}-bit face width",
                edges.len()
            ));
        }
        Ok(Graph { n, edges, labels })
    }

    /// `K_n` on vertices `1..=n`.
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return invalid("complete graph needs n >= 1");
        }
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::build(n, edges, Labels::Plain)
    }

    /// `K_{m,n}` with vertices `a_1..a_m, b_1..b_n`; edge `{a_i, b_j}` has index `(i-1)·n + (j-1)`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return invalid("complete bipartite graph needs both sides nonempty");
        }
        let edges = (0..m)
            .flat_map(|i| (0..n).map(move |j| (i, m + j)))
            .collect();
        Self::build(m + n, edges, Labels::Bipartite { left: m, right: n })
    }

    /// Builds a graph from 1-based vertex pairs in any order and orientation.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u == 0 || v == 0 || u > n || v > n {
                return invalid(format!("edge ({u},{v}) has an endpoint outside 1..={n}"));
            }
            if u == v {
                return invalid(format!("loop at vertex {u}"));
            }
            edges.push((u.min(v) - 1, u.max(v) - 1));
        }
        Self::build(n, edges, Labels::Plain)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as 0-based `(u, v)` with `u < v`, in index order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// Index of the edge joining 0-based vertices `u` and `v`.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    /// The face containing every edge.
    pub fn all_edges(&self) -> Face {
        Face::full(self.edges.len())
    }

    /// Index of `{a_i, b_j}` (1-based `i`, `j`) in a bipartite graph.
    pub fn bipartite_edge(&self, i: usize, j: usize) -> Option<usize> {
        match self.labels {
            Labels::Bipartite { left, right } if (1..=left).contains(&i) && (1..=right).contains(&j) => {
                self.edge_index(i - 1, left + j - 1)
            }
            _ => None,
        }
    }

    /// Human-readable vertex label (`3`, or `a2`/`b1` for bipartite graphs).
    pub fn vertex_label(&self, v: usize) -> String {
        match self.labels {
            Labels::Bipartite { left, .. } if v < left => format!("a{}", v + 1),
            Labels::Bipartite { left, .. } => format!("b{}", v - left + 1),
            Labels::Plain => (v + 1).to_string(),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Degrees in the spanning subgraph whose edge set is `h`.
    pub fn subgraph_degrees(&self, h: Face) -> VertexDegreeVector {
        let mut deg = vec![0; self.n];
        for i in h.iter() {
            let (u, v) = self.edges[i];
            deg[u] += 1;
            deg[v] += 1;
        }
        VertexDegreeVector(deg)
    }

    /// Closed neighbourhoods in the spanning subgraph `h`, as vertex bitmasks.
    fn closed_neighbourhoods(&self, h: Face) -> Vec<u128> {
        let mut nb: Vec<u128> = (0..self.n).map(|v| 1u128 << v).collect();
        for i in h.iter() {
            let (u, v) = self.edges[i];
            nb[u] |= 1 << v;
            nb[v] |= 1 << u;
        }
        nb
    }

    /// Minimum size of a dominating set of the spanning subgraph `([n], h)`.
    ///
    /// Candidate sets are tried in increasing cardinality; the first hit is the answer.
    pub fn domination_number(&self, h: Face) -> usize {
        let nb = self.closed_neighbourhoods(h);
        let all = if self.n == 128 { u128::MAX } else { (1u128 << self.n) - 1 };
        // Isolated vertices must be in every dominating set.
        let forced: Vec<usize> = (0..self.n).filter(|&v| nb[v] == 1 << v).collect();
        let forced_cover = forced.iter().fold(0u128, |acc, &v| acc | nb[v]);
        if forced_cover == all {
            return forced.len();
        }
        let rest: Vec<usize> = (0..self.n).filter(|&v| nb[v] != 1 << v).collect();
        for k in 1..=rest.len() {
            if covers_with(&nb, &rest, k, forced_cover, all) {
                return forced.len() + k;
            }
        }
        unreachable!("the whole vertex set dominates")
    }
}

/// Whether some `k`-subset of `pool` together with `covered` dominates `all`.
fn covers_with(nb: &[u128], pool: &[usize], k: usize, covered: u128, all: u128) -> bool {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let cover = idx.iter().fold(covered, |acc, &i| acc | nb[pool[i]]);
        if cover == all {
            return true;
        }
        // next k-combination of 0..pool.len()
        let mut pos = k;
        loop {
            if pos == 0 {
                return false;
            }
            pos -= 1;
            if idx[pos] < pool.len() - k + pos {
                break;
            }
        }
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph on {} vertices: ", self.n)?;
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", self.vertex_label(u), self.vertex_label(v))?;
        }
        Ok(())
    }
}
