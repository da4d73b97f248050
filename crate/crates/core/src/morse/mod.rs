//! Discrete Morse matchings on face posets.
//!
//! A matching is produced by running a [`Schedule`] of ground elements: each
//! step pairs `σ \ {x}` with `σ ∪ {x}` whenever both are still unmatched, and
//! the residual set shrinks. The union of the steps is always acyclic; the
//! residual after the last step is the set of critical cells.

pub mod claims;
mod schedules;

use std::collections::BTreeMap;

use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{invalid, Result};
use crate::face::Face;

pub use schedules::{kn_schedule, knn_schedule, predicted_critical_cell_knn, predicted_critical_cells_kn};

/// Ordered list of distinct ground elements to match on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    steps: Vec<usize>,
}

impl Schedule {
    /// Rejects labels outside `0..ground` and repeated labels.
    pub fn new(steps: Vec<usize>, ground: usize) -> Result<Self> {
        let mut seen = FxHashSet::default();
        for &x in &steps {
            if x >= ground {
                return invalid(format!("schedule label {x} is outside 0..{ground}"));
            }
            if !seen.insert(x) {
                return invalid(format!("schedule label {x} repeats"));
            }
        }
        Ok(Schedule { steps })
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The first `len` steps.
    pub fn prefix(&self, len: usize) -> Schedule {
        Schedule {
            steps: self.steps[..len.min(self.steps.len())].to_vec(),
        }
    }
}

/// Result of one element matching on a face set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ElementMatching {
    /// `(σ \ {x}, σ ∪ {x})`, ordered by the lower face.
    pub pairs: Vec<(Face, Face)>,
    /// Faces of the input not covered by a pair, in input order.
    pub residual: Vec<Face>,
}

/// Pairs `σ \ {x}` with `σ ∪ {x}` for every `σ` with both members in `faces`.
///
/// `faces` need not be downward closed.
pub fn element_matching(faces: &[Face], x: usize, ground: usize) -> Result<ElementMatching> {
    if x >= ground {
        return invalid(format!("matching element {x} is outside 0..{ground}"));
    }
    let set: FxHashSet<Face> = faces.iter().copied().collect();
    Ok(element_matching_in(faces, &set, x))
}

fn element_matching_in(faces: &[Face], set: &FxHashSet<Face>, x: usize) -> ElementMatching {
    let mut pairs = Vec::new();
    let mut residual = Vec::new();
    for &f in faces {
        let partner = f.toggle(x);
        if set.contains(&partner) {
            if !f.contains(x) {
                pairs.push((f, partner));
            }
        } else {
            residual.push(f);
        }
    }
    pairs.sort_unstable();
    ElementMatching { pairs, residual }
}

/// A partial matching on the face poset of a complex together with its unmatched faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseMatching {
    ground: usize,
    pairs: Vec<(Face, Face)>,
    critical: Vec<Face>,
}

impl MorseMatching {
    /// Assembles a matching from raw parts; validity is checked by [`is_acyclic`].
    pub fn from_parts(ground: usize, mut pairs: Vec<(Face, Face)>, mut critical: Vec<Face>) -> Self {
        pairs.sort_unstable();
        critical.sort_unstable_by_key(|f| (f.len(), *f));
        MorseMatching {
            ground,
            pairs,
            critical,
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    /// Matched `(lower, upper)` pairs sorted by the lower face.
    pub fn pairs(&self) -> &[(Face, Face)] {
        &self.pairs
    }

    /// Unmatched faces sorted by dimension, then bitset value.
    pub fn critical(&self) -> &[Face] {
        &self.critical
    }

    pub fn empty_face_paired(&self) -> bool {
        self.pairs.first().is_some_and(|p| p.0.is_empty())
    }

    pub fn summary(&self) -> MorseSummary {
        summary(self)
    }
}

/// Runs each step's element matching on the residual of the previous one,
/// starting from every face of `complex`.
pub fn run_schedule(complex: &Complex, schedule: &Schedule) -> Result<MorseMatching> {
    let ground = complex.ground();
    if let Some(&x) = schedule.steps().iter().find(|&&x| x >= ground) {
        return invalid(format!("schedule label {x} is outside 0..{ground}"));
    }
    let mut residual: Vec<Face> = complex.faces().collect();
    let mut set: FxHashSet<Face> = residual.iter().copied().collect();
    let mut pairs = Vec::new();
    for &x in schedule.steps() {
        let step = element_matching_in(&residual, &set, x);
        if step.pairs.is_empty() {
            continue;
        }
        for &(lo, hi) in &step.pairs {
            set.remove(&lo);
            set.remove(&hi);
        }
        pairs.extend(step.pairs);
        residual = step.residual;
    }
    Ok(MorseMatching::from_parts(ground, pairs, residual))
}

/// Outcome of an acyclicity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Acyclicity {
    Acyclic,
    /// `a_1, μ(a_1), a_2, μ(a_2), …` with `a_{i+1} ⊂ μ(a_i)` and `a_1 ⊂ μ(a_t)`.
    Cycle(Vec<Face>),
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic)
    }
}

/// Checks that `matching` is a partial matching on `complex` and that no
/// alternating cycle `μ(a_1) ≻ a_1 ≺ μ(a_2) ≻ … ≺ μ(a_1)` exists.
///
/// Cycles stay within one pair of consecutive dimensions, so each layer is
/// checked separately: nodes are matched upper faces and `b → b'` whenever the
/// lower face of `b'` is a facet of `b` other than `b`'s own partner.
pub fn is_acyclic(complex: &Complex, matching: &MorseMatching) -> Result<Acyclicity> {
    let mut seen = FxHashSet::default();
    for &(lo, hi) in matching.pairs() {
        if !(lo.is_subset(hi) && hi.len() == lo.len() + 1) {
            return invalid(format!("pair ({lo}, {hi}) is not a covering relation"));
        }
        for f in [lo, hi] {
            if !complex.contains(f) {
                return invalid(format!("matched face {f} is not in the complex"));
            }
            if !seen.insert(f) {
                return invalid(format!("face {f} appears in two pairs"));
            }
        }
    }

    let mut layers: BTreeMap<usize, Vec<(Face, Face)>> = BTreeMap::new();
    for &p in matching.pairs() {
        layers.entry(p.0.len()).or_default().push(p);
    }
    for pairs in layers.values() {
        if let Some(cycle) = layer_cycle(pairs) {
            return Ok(Acyclicity::Cycle(cycle));
        }
    }
    Ok(Acyclicity::Acyclic)
}

fn layer_cycle(pairs: &[(Face, Face)]) -> Option<Vec<Face>> {
    let by_lower: FxHashMap<Face, usize> = pairs.iter().enumerate().map(|(i, p)| (p.0, i)).collect();
    let succ = |i: usize| -> Vec<usize> {
        let (lo, hi) = pairs[i];
        hi.facets()
            .filter(|&f| f != lo)
            .filter_map(|f| by_lower.get(&f).copied())
            .collect()
    };

    const WHITE: u8 = 0;
    const GREY: u8 = 1;
    const BLACK: u8 = 2;
    let mut colour = vec![WHITE; pairs.len()];
    for root in 0..pairs.len() {
        if colour[root] != WHITE {
            continue;
        }
        // (node, successors, next successor to visit)
        let mut stack: Vec<(usize, Vec<usize>, usize)> = vec![(root, succ(root), 0)];
        colour[root] = GREY;
        while let Some(top) = stack.last_mut() {
            let node = top.0;
            if top.2 == top.1.len() {
                colour[node] = BLACK;
                stack.pop();
                continue;
            }
            let next = top.1[top.2];
            top.2 += 1;
            match colour[next] {
                WHITE => {
                    colour[next] = GREY;
                    let s = succ(next);
                    stack.push((next, s, 0));
                }
                GREY => {
                    let start = stack.iter().position(|e| e.0 == next).expect("grey node is on the stack");
                    return Some(
                        stack[start..]
                            .iter()
                            .flat_map(|e| [pairs[e.0].0, pairs[e.0].1])
                            .collect(),
                    );
                }
                _ => {}
            }
        }
    }
    None
}

/// Critical-cell counts and the homotopy information they certify.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorseSummary {
    /// Raw counts of unmatched faces by dimension; `-1` appears when `∅` is critical.
    pub critical_by_dim: BTreeMap<isize, usize>,
    pub empty_face_paired: bool,
    /// Cells of the homotopy-equivalent CW model: the raw counts in dimensions
    /// `≥ 0`, plus one extra 0-cell when `∅` is paired.
    pub cw_cells: BTreeMap<usize, usize>,
    /// Set when `∅` is paired and every critical cell has this dimension.
    pub single_dim: Option<usize>,
    /// Number of spheres in the wedge when `single_dim` is set.
    pub wedge_count: Option<usize>,
    /// `∅` paired and nothing critical: the CW model is a point.
    pub contractible: bool,
}

impl MorseSummary {
    /// `Σ_d (−1)^d` over the CW model's cells.
    pub fn euler_characteristic(&self) -> i64 {
        self.cw_cells
            .iter()
            .map(|(&d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn total_critical(&self) -> usize {
        self.critical_by_dim.values().sum()
    }
}

pub fn summary(matching: &MorseMatching) -> MorseSummary {
    let mut critical_by_dim = BTreeMap::new();
    for f in matching.critical() {
        *critical_by_dim.entry(f.dim()).or_insert(0) += 1;
    }
    let empty_face_paired = matching.empty_face_paired();
    let mut cw_cells: BTreeMap<usize, usize> = critical_by_dim
        .iter()
        .filter(|(&d, _)| d >= 0)
        .map(|(&d, &c)| (d as usize, c))
        .collect();
    if empty_face_paired {
        *cw_cells.entry(0).or_insert(0) += 1;
    }
    let (single_dim, wedge_count) = match (empty_face_paired, critical_by_dim.len()) {
        (true, 1) => {
            let (&d, &c) = critical_by_dim.iter().next().expect("one entry");
            (Some(d as usize), Some(c))
        }
        _ => (None, None),
    };
    MorseSummary {
        contractible: empty_face_paired && critical_by_dim.is_empty(),
        critical_by_dim,
        empty_face_paired,
        cw_cells,
        single_dim,
        wedge_count,
    }
}
