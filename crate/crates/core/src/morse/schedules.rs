//! The explicit schedules for `M_{n-2}(K_n)` and `M_{n-1}(K_{n,n})` and the
//! critical cells they leave behind.

use super::Schedule;
use crate::error::{invalid, Result};
use crate::face::Face;
use crate::graph::Graph;

/// Edges `{k,i}` for `k = 1..n-1`, `i = k+1..n`, as indices of `K_n`.
pub fn kn_schedule(n: usize) -> Result<Schedule> {
    if n < 3 {
        return invalid(format!("K_n schedule needs n >= 3, got {n}"));
    }
    let g = Graph::complete(n)?;
    let steps = (0..n - 1)
        .flat_map(|k| (k + 1..n).map(move |i| (k, i)))
        .map(|(k, i)| g.edge_index(k, i).expect("complete graph edge"))
        .collect();
    Schedule::new(steps, g.n_edges())
}

/// Edges `{a_k,b_j}` for `k = 1..n-1`, `j = 1..n`, as indices of `K_{n,n}`.
pub fn knn_schedule(n: usize) -> Result<Schedule> {
    if n < 2 {
        return invalid(format!("K_n,n schedule needs n >= 2, got {n}"));
    }
    let g = Graph::complete_bipartite(n, n)?;
    let steps = (1..n)
        .flat_map(|k| (1..=n).map(move |j| (k, j)))
        .map(|(k, j)| g.bipartite_edge(k, j).expect("complete bipartite edge"))
        .collect();
    Schedule::new(steps, g.n_edges())
}

/// The `n-1` cells `E(K_n) \ F_k`, where
/// `F_k = {{i,i+1} : i < k} ∪ {{k,j} : j > k}`, in order of `k`.
pub fn predicted_critical_cells_kn(n: usize) -> Result<Vec<Face>> {
    if n < 3 {
        return invalid(format!("K_n critical cells need n >= 3, got {n}"));
    }
    let g = Graph::complete(n)?;
    let idx = |u: usize, v: usize| g.edge_index(u - 1, v - 1).expect("complete graph edge");
    Ok((1..n)
        .map(|k| {
            let removed: Face = (1..k)
                .map(|i| idx(i, i + 1))
                .chain((k + 1..=n).map(|j| idx(k, j)))
                .collect();
            g.all_edges().difference(removed)
        })
        .collect())
}

/// `{{a_i,b_j} : i ≤ n-1, 2 ≤ j ≤ n}`: a copy of `K_{n-1,n-1}` with `a_n`, `b_1` isolated.
pub fn predicted_critical_cell_knn(n: usize) -> Result<Face> {
    if n < 2 {
        return invalid(format!("K_n,n critical cell needs n >= 2, got {n}"));
    }
    let g = Graph::complete_bipartite(n, n)?;
    Ok((1..n)
        .flat_map(|i| (2..=n).map(move |j| (i, j)))
        .map(|(i, j)| g.bipartite_edge(i, j).expect("complete bipartite edge"))
        .collect())
}
