//! Membership predicates for the intermediate residual sets of the `K_n` and
//! `K_{n,n}` schedules, written directly from their set-builder definitions.
//!
//! Vertices are 1-based here to match those definitions. Every predicate
//! assumes its argument is a face of the relevant matching complex.

use crate::face::Face;
use crate::graph::Graph;

/// Predicates on faces of `M_{n-2}(K_n)`.
pub struct KnSets {
    n: usize,
    graph: Graph,
}

impl KnSets {
    pub fn new(n: usize) -> crate::Result<Self> {
        Ok(KnSets {
            n,
            graph: Graph::complete(n)?,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn has(&self, g: Face, u: usize, v: usize) -> bool {
        g.contains(self.graph.edge_index(u - 1, v - 1).expect("K_n edge"))
    }

    fn deg(&self, g: Face) -> impl Fn(usize) -> usize {
        let d = self.graph.subgraph_degrees(g);
        move |v| d[v - 1]
    }

    /// Required degree of vertex `k` in `B_{k,k+1}`: `n-2` for `k = 1`, `n-3` after.
    fn pivot_degree(&self, k: usize) -> usize {
        if k == 1 {
            self.n - 2
        } else {
            self.n - 3
        }
    }

    /// `A_{k,k}`: the whole complex for `k = 1`, `B_{k-1,k}` afterwards.
    pub fn in_a_kk(&self, k: usize, g: Face) -> bool {
        k == 1 || self.in_b_prev(k, g)
    }

    /// `B_{k-1,k}` for `k ≥ 2`: no edge `{i,i+1}` with `i < k`, `deg(1) = n-2`,
    /// `deg(i) = n-3` for `2 ≤ i ≤ k-1`, `deg(k) < n-2`.
    pub fn in_b_prev(&self, k: usize, g: Face) -> bool {
        assert!(k >= 2);
        let n = self.n;
        let deg = self.deg(g);
        (1..k).all(|i| !self.has(g, i, i + 1))
            && deg(1) == n - 2
            && (2..k).all(|i| deg(i) == n - 3)
            && deg(k) < n - 2
    }

    /// `B_{k,k+1} = {G ∈ A_{k,k} : {k,k+1} ∉ G, deg(k+1) < n-2, deg(k) = pivot}`.
    pub fn in_b_next(&self, k: usize, g: Face) -> bool {
        let deg = self.deg(g);
        self.in_a_kk(k, g) && !self.has(g, k, k + 1) && deg(k + 1) < self.n - 2 && deg(k) == self.pivot_degree(k)
    }

    /// `C_{k,k+1} = {G ∈ A_{k,k} : {k,k+1} ∉ G, deg(k+1) = n-2}`.
    pub fn in_c_next(&self, k: usize, g: Face) -> bool {
        let deg = self.deg(g);
        self.in_a_kk(k, g) && !self.has(g, k, k + 1) && deg(k + 1) == self.n - 2
    }

    /// `C_k = {G ∈ A_{k,k} : {k,i} ∉ G and deg(i) = n-2 for every i > k}`.
    pub fn in_c(&self, k: usize, g: Face) -> bool {
        let deg = self.deg(g);
        self.in_a_kk(k, g) && (k + 1..=self.n).all(|i| !self.has(g, k, i) && deg(i) == self.n - 2)
    }

    /// Residual expected after the first `i` labels of step `k` (`1 ≤ i ≤ n-k`):
    /// the earlier `C_j`, plus `B_{k,k+1} ⊔ C_{k,k+1}` after one label or
    /// `B_{k,k+1} ⊔ C_k` after the whole step.
    pub fn expected_residual(&self, k: usize, labels_done: usize, g: Face) -> bool {
        if (1..k).any(|j| self.in_c(j, g)) {
            return true;
        }
        if labels_done == 1 {
            self.in_b_next(k, g) || self.in_c_next(k, g)
        } else {
            assert_eq!(labels_done, self.n - k, "only the displayed residuals have closed forms");
            self.in_b_next(k, g) || self.in_c(k, g)
        }
    }

    pub fn toggle(&self, g: Face, u: usize, v: usize) -> (Face, Face) {
        let e = self.graph.edge_index(u - 1, v - 1).expect("K_n edge");
        (g.with(e), g.without(e))
    }
}

/// Predicates on faces of `M_{n-1}(K_{n,n})`.
pub struct KnnSets {
    n: usize,
    graph: Graph,
}

impl KnnSets {
    pub fn new(n: usize) -> crate::Result<Self> {
        Ok(KnnSets {
            n,
            graph: Graph::complete_bipartite(n, n)?,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `H_{k,n}`: `{a_i,b_1} ∉ G` and `deg(a_i) = n-1` for all `i ≤ k`, and `deg(b_1) < n-k`.
    pub fn in_h(&self, k: usize, g: Face) -> bool {
        let n = self.n;
        let d = self.graph.subgraph_degrees(g);
        let a = |i: usize| d[i - 1];
        let b1 = d[n];
        (1..=k).all(|i| !g.contains(self.graph.bipartite_edge(i, 1).expect("edge")) && a(i) == n - 1) && b1 < n - k
    }
}
