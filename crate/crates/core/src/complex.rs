//! Explicit simplicial complexes on the edge set of a graph.
//!
//! Every face is stored, grouped by size and sorted by bitset value, so
//! membership is a binary search and the Morse and homology code can walk a
//! dimension as a slice.

use std::sync::Arc;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{capacity, invalid, Result};
use crate::face::{Face, MAX_GROUND};
use crate::graph::Graph;

/// Upper bound on stored faces per complex.
pub const MAX_FACES: usize = 1 << 24;

/// Largest edge count for which domination complexes are enumerated (all `2^m` subsets are tested).
pub const MAX_DOMINATION_EDGES: usize = 20;

/// Per-vertex degree bounds `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBoundVector(pub Vec<usize>);

impl DegreeBoundVector {
    pub fn uniform(n: usize, r: usize) -> Self {
        DegreeBoundVector(vec![r; n])
    }
}

#[derive(Clone, Debug)]
pub struct Complex {
    ground: usize,
    /// `by_size[k]` holds the faces with `k` elements, sorted and duplicate-free.
    by_size: Vec<Vec<Face>>,
    parent: Option<Arc<Graph>>,
}

/// Two complexes are equal when they have the same ground set and the same faces.
impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.by_size == other.by_size
    }
}

impl Eq for Complex {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexStats {
    /// Face counts for dimensions `0..=dim`.
    pub f_vector: Vec<usize>,
    pub euler: i64,
    pub dim: isize,
    /// Facet dimensions, ascending.
    pub facet_dims: Vec<isize>,
    pub is_pure: bool,
}

impl Complex {
    /// Sorts, dedups and trims trailing empty dimensions. Caller guarantees closure.
    fn assemble(ground: usize, mut by_size: Vec<Vec<Face>>, parent: Option<Arc<Graph>>) -> Self {
        for layer in &mut by_size {
            layer.sort_unstable();
            layer.dedup();
        }
        while by_size.last().is_some_and(|l| l.is_empty()) {
            by_size.pop();
        }
        Complex {
            ground,
            by_size,
            parent,
        }
    }

    fn bucket(ground: usize, faces: impl IntoIterator<Item = Face>, parent: Option<Arc<Graph>>) -> Result<Self> {
        let mut by_size: Vec<Vec<Face>> = Vec::new();
        let mut total = 0usize;
        for f in faces {
            let k = f.len();
            if by_size.len() <= k {
                by_size.resize_with(k + 1, Vec::new);
            }
            by_size[k].push(f);
            total += 1;
            if total > MAX_FACES {
                return capacity(format!("more than {MAX_FACES} faces"));
            }
        }
        Ok(Self::assemble(ground, by_size, parent))
    }

    /// Builds a complex from an explicit face list, checking the ground set and downward closure.
    pub fn from_faces(ground: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        if ground > MAX_GROUND {
            return capacity(format!("ground set of {ground} exceeds {MAX_GROUND}"));
        }
        let k = Self::bucket(ground, faces, None)?;
        let limit = Face::full(ground);
        for f in k.faces() {
            if !f.is_subset(limit) {
                return invalid(format!("face {f} uses elements outside 0..{ground}"));
            }
            if let Some(g) = f.facets().find(|g| !k.contains(*g)) {
                return invalid(format!("face {f} is present but its subface {g} is not"));
            }
        }
        Ok(k)
    }

    /// The complex with no faces at all.
    pub fn void(ground: usize) -> Self {
        Complex {
            ground,
            by_size: Vec::new(),
            parent: None,
        }
    }

    /// `{∅}`: the identity for joins.
    pub fn empty(ground: usize) -> Self {
        Complex {
            ground,
            by_size: vec![vec![Face::EMPTY]],
            parent: None,
        }
    }

    /// The full simplex on `ground` vertices.
    pub fn simplex(ground: usize) -> Result<Self> {
        Self::simplex_skeleton(ground, ground as isize - 1)
    }

    /// The `s`-skeleton of the simplex on `ground` vertices.
    pub fn simplex_skeleton(ground: usize, s: isize) -> Result<Self> {
        if ground > MAX_GROUND {
            return capacity(format!("ground set of {ground} exceeds {MAX_GROUND}"));
        }
        let max_size = (s + 1).clamp(0, ground as isize) as usize;
        let mut by_size = vec![Vec::new(); max_size + 1];
        let mut total = 0usize;
        for (k, layer) in by_size.iter_mut().enumerate() {
            total = total.saturating_add(binomial(ground, k));
            if total > MAX_FACES {
                return capacity(format!("more than {MAX_FACES} faces"));
            }
            for_each_k_subset(ground, k, |f| layer.push(f));
        }
        Ok(Self::assemble(ground, by_size, None))
    }

    /// Discrete complex with `k` vertices.
    pub fn points(k: usize) -> Result<Self> {
        Self::simplex_skeleton(k, 0)
    }

    /// `BD^λ(G)`: edge sets in which vertex `i` has degree at most `λ_i`.
    pub fn bounded_degree(graph: &Graph, bounds: &DegreeBoundVector) -> Result<Self> {
        if bounds.0.len() != graph.n_vertices() {
            return invalid(format!(
                "degree bound vector has length {}, graph has {} vertices",
                bounds.0.len(),
                graph.n_vertices()
            ));
        }
        let mut faces = Vec::new();
        let mut deg = vec![0usize; graph.n_vertices()];
        extend_bounded(graph.edges(), &bounds.0, &mut deg, Face::EMPTY, 0, &mut faces)?;
        Self::bucket(graph.n_edges(), faces, Some(Arc::new(graph.clone())))
    }

    /// `M_r(G)`: edge sets whose induced maximum degree is at most `r`.
    pub fn matching(graph: &Graph, r: usize) -> Result<Self> {
        if r == 0 {
            return invalid("matching complex needs r >= 1");
        }
        Self::bounded_degree(graph, &DegreeBoundVector::uniform(graph.n_vertices(), r))
    }

    /// `D_{n,γ}`: edge sets of `K_n` whose spanning graph has domination number at least `γ`.
    pub fn domination(n: usize, gamma: usize) -> Result<Self> {
        if n == 0 || gamma == 0 || gamma > n {
            return invalid(format!("domination complex needs 1 <= gamma <= n, got n={n}, gamma={gamma}"));
        }
        let kn = Graph::complete(n)?;
        let m = kn.n_edges();
        if m > MAX_DOMINATION_EDGES {
            return capacity(format!(
                "K_{n} has {m} edges; domination complexes are enumerated up to {MAX_DOMINATION_EDGES}"
            ));
        }
        let faces: Vec<Face> = (0u128..1 << m)
            .map(Face::from_bits)
            .filter(|&h| kn.domination_number(h) >= gamma)
            .collect();
        Self::bucket(m, faces, Some(Arc::new(kn)))
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn parent(&self) -> Option<&Graph> {
        self.parent.as_deref()
    }

    pub fn is_void(&self) -> bool {
        self.by_size.is_empty()
    }

    /// Largest face dimension; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> isize {
        self.by_size.len().max(1) as isize - 2
    }

    /// Faces of dimension `d` (`d = -1` is the empty face).
    pub fn faces_of_dim(&self, d: isize) -> &[Face] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.by_size.get(k))
            .map_or(&[], Vec::as_slice)
    }

    pub fn faces_of_size(&self, k: usize) -> &[Face] {
        self.by_size.get(k).map_or(&[], Vec::as_slice)
    }

    /// All faces in increasing dimension, each dimension sorted.
    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.by_size.iter().flatten().copied()
    }

    /// Number of faces including the empty face.
    pub fn n_faces(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.faces_of_size(f.len()).binary_search(&f).is_ok()
    }

    /// Position of `f` within its dimension.
    pub fn index_of(&self, f: Face) -> Option<usize> {
        self.faces_of_size(f.len()).binary_search(&f).ok()
    }

    /// Face counts for dimensions `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_size.iter().skip(1).map(Vec::len).collect()
    }

    /// `Σ_d (−1)^d f_d` over nonempty faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Faces of dimension at most `s`.
    pub fn skeleton(&self, s: isize) -> Complex {
        let keep = usize::try_from(s + 2).unwrap_or(0).min(self.by_size.len());
        Complex::assemble(self.ground, self.by_size[..keep].to_vec(), self.parent.clone())
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`.
    pub fn link(&self, sigma: Face) -> Result<Complex> {
        if !self.contains(sigma) {
            return invalid(format!("face {sigma} is not in the complex"));
        }
        let k = sigma.len();
        let by_size = self.by_size[k..]
            .iter()
            .map(|layer| {
                layer
                    .iter()
                    .filter(|f| sigma.is_subset(**f))
                    .map(|f| f.difference(sigma))
                    .collect()
            })
            .collect();
        Ok(Complex::assemble(self.ground, by_size, self.parent.clone()))
    }

    /// `K1 * K2`; the second complex's elements are shifted by `K1`'s ground size.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        let ground = self.ground + other.ground;
        if ground > MAX_GROUND {
            return capacity(format!("join ground set of {ground} exceeds {MAX_GROUND}"));
        }
        let total = self.n_faces().saturating_mul(other.n_faces());
        if total > MAX_FACES {
            return capacity(format!("join would have {total} faces"));
        }
        let shift = self.ground;
        let mut by_size = vec![Vec::new(); (self.by_size.len() + other.by_size.len()).saturating_sub(1)];
        for a in self.faces() {
            for b in other.faces() {
                let f = a.union(Face::from_bits(b.bits() << shift));
                by_size[f.len()].push(f);
            }
        }
        Ok(Complex::assemble(ground, by_size, None))
    }

    /// Inclusion-maximal faces, ordered by dimension then bitset value.
    pub fn facets(&self) -> Vec<Face> {
        let mut covered: FxHashSet<Face> = FxHashSet::default();
        for layer in self.by_size.iter().skip(1) {
            for f in layer {
                covered.extend(f.facets());
            }
        }
        self.faces().filter(|f| !covered.contains(f)).collect()
    }

    /// Whether `f` has no proper coface; `f` must be a face.
    pub fn is_facet(&self, f: Face) -> bool {
        (0..self.ground).all(|e| f.contains(e) || !self.contains(f.with(e)))
    }

    pub fn stats(&self) -> ComplexStats {
        let facet_dims: Vec<isize> = self.facets().iter().map(|f| f.dim()).collect();
        let is_pure = facet_dims.windows(2).all(|w| w[0] == w[1]);
        ComplexStats {
            f_vector: self.f_vector(),
            euler: self.euler_characteristic(),
            dim: self.dim(),
            facet_dims,
            is_pure,
        }
    }

    /// Same faces with element `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Complex> {
        if perm.len() != self.ground {
            return invalid("relabelling must cover the ground set");
        }
        let mut seen = vec![false; self.ground];
        for &p in perm {
            if p >= self.ground || std::mem::replace(&mut seen[p], true) {
                return invalid("relabelling is not a permutation");
            }
        }
        let faces = self.faces().map(|f| f.iter().map(|i| perm[i]).collect::<Face>());
        Self::bucket(self.ground, faces, None)
    }
}

fn extend_bounded(
    edges: &[(usize, usize)],
    bounds: &[usize],
    deg: &mut [usize],
    face: Face,
    next: usize,
    out: &mut Vec<Face>,
) -> Result<()> {
    out.push(face);
    if out.len() > MAX_FACES {
        return capacity(format!("more than {MAX_FACES} faces"));
    }
    for (e, &(u, v)) in edges.iter().enumerate().skip(next) {
        if deg[u] < bounds[u] && deg[v] < bounds[v] {
            deg[u] += 1;
            deg[v] += 1;
            extend_bounded(edges, bounds, deg, face.with(e), e + 1, out)?;
            deg[u] -= 1;
            deg[v] -= 1;
        }
    }
    Ok(())
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Calls `f` on every `k`-subset of `0..n` in increasing bitset order.
pub(crate) fn for_each_k_subset(n: usize, k: usize, mut f: impl FnMut(Face)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(Face::EMPTY);
        return;
    }
    // Gosper's hack over u128.
    let mut x: u128 = if k == 128 { u128::MAX } else { (1u128 << k) - 1 };
    loop {
        f(Face::from_bits(x));
        if k == n {
            return;
        }
        let c = x & x.wrapping_neg();
        let r = x.wrapping_add(c);
        if r == 0 {
            return;
        }
        x = (((r ^ x) >> 2) / c) | r;
        if n < 128 && x >> n != 0 {
            return;
        }
    }
}
