//! Executable checks for the homotopy types of higher matching complexes,
//! Jonsson's connectivity bound, and the domination-complex filtration.
//!
//! Every check builds an `expected` and an `observed` JSON value of the same
//! shape; a report passes exactly when the two are equal. Connectivity claims
//! are checked through their homology consequences only.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complex::{binomial, Complex};
use crate::error::{capacity, invalid, Result};
use crate::face::Face;
use crate::graph::Graph;
use crate::homology::{betti_over_rationals, reduced_homology, HomologyProfile};
use crate::morse::{
    is_acyclic, kn_schedule, knn_schedule, predicted_critical_cell_knn, predicted_critical_cells_kn, run_schedule,
};

/// Largest `n` for which `M_{n-2}(K_n)` is built.
pub const KN_CAP: usize = 6;
/// Largest `n` for which `M_{n-1}(K_{n,n})` is built.
pub const KNN_CAP: usize = 4;
/// Largest `n` for which domination complexes `D_{n,γ}` are built.
pub const DOMINATION_CAP: usize = 6;

/// Jonsson's connectivity bound for `M_d(K_n)`: the complex is `(⌈ν⌉ − 1)`-connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityBound {
    pub n: usize,
    pub d: usize,
    /// `n = (d + 4)k + r` with `d + 1 ≤ r ≤ 2d + 4`.
    pub k: usize,
    pub r: usize,
    pub epsilon: BigRational,
    pub nu: BigRational,
    /// `⌈ν⌉`.
    pub shifted_conn_bound: BigInt,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `ε_d(r) = 3r/(d+4) − c` with `c` = 1, 2, 3 or 4 depending on where `r` falls.
pub fn jonsson_epsilon(d: usize, r: usize) -> Result<BigRational> {
    if d < 2 {
        return invalid(format!("epsilon needs d >= 2, got {d}"));
    }
    let c = match r {
        _ if r == d + 1 => 1,
        _ if (d + 2..=d + 3).contains(&r) => 2,
        _ if (d + 4..=2 * d + 3).contains(&r) => 3,
        _ if r == 2 * d + 4 => 4,
        _ => return invalid(format!("r = {r} is outside {}..={} for d = {d}", d + 1, 2 * d + 4)),
    };
    Ok(ratio(3 * r as i64, d as i64 + 4) - ratio(c, 1))
}

/// `ν_n^d = (d² + 3d − 1)n / (2(d+4)) − ε_d(r)/2 − 1`, exactly.
pub fn jonsson_nu(n: usize, d: usize) -> Result<ConnectivityBound> {
    if d < 2 || n < d + 1 {
        return invalid(format!("connectivity bound needs d >= 2 and n >= d + 1, got n={n}, d={d}"));
    }
    if n > i64::MAX as usize / (d * d + 3 * d) {
        return capacity(format!("n = {n} is too large"));
    }
    let k = (n - d - 1) / (d + 4);
    let r = n - (d + 4) * k;
    let epsilon = jonsson_epsilon(d, r)?;
    let (n_, d_) = (n as i64, d as i64);
    let nu = ratio((d_ * d_ + 3 * d_ - 1) * n_, 2 * (d_ + 4)) - &epsilon / ratio(2, 1) - ratio(1, 1);
    let shifted_conn_bound = nu.ceil().to_integer();
    Ok(ConnectivityBound {
        n,
        d,
        k,
        r,
        epsilon,
        nu,
        shifted_conn_bound,
    })
}

impl ConnectivityBound {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "d": self.d,
            "k": self.k,
            "r": self.r,
            "epsilon": self.epsilon.to_string(),
            "nu": self.nu.to_string(),
            "shifted_conn_bound": self.shifted_conn_bound.to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: Value,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
    /// Wall-clock time of the check.
    pub millis: u64,
}

impl VerificationReport {
    fn new(theorem: &str, params: Value, expected: Value, observed: Value, start: Instant) -> Self {
        VerificationReport {
            theorem: theorem.to_string(),
            params,
            pass: expected == observed,
            expected,
            observed,
            millis: start.elapsed().as_millis() as u64,
        }
    }
}

fn hexes(faces: &[Face]) -> Vec<String> {
    faces.iter().map(|f| f.to_hex()).collect()
}

fn sorted_cells(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by_key(|f| (f.len(), *f));
    faces
}

/// `(dim, betti)` pairs for nonzero reduced Betti numbers over `Q`.
fn rational_support(k: &Complex) -> Result<Vec<(isize, usize)>> {
    Ok(betti_over_rationals(k)?
        .into_iter()
        .enumerate()
        .filter(|e| e.1 > 0)
        .map(|(d, b)| (d as isize, b))
        .collect())
}

fn homology_json(h: &HomologyProfile, rational: &[(isize, usize)]) -> Value {
    json!({
        "betti": h.betti_support(),
        "torsion_free": h.is_torsion_free(),
        "rational_betti": rational,
    })
}

fn wedge_json(dim: usize, count: usize) -> Value {
    json!({
        "betti": [[dim, count]],
        "torsion_free": true,
        "rational_betti": [[dim, count]],
    })
}

fn check_range(what: &str, n: usize, lo: usize, cap: usize) -> Result<()> {
    if n < lo {
        return invalid(format!("{what} needs n >= {lo}, got {n}"));
    }
    if n > cap {
        return capacity(format!("{what} is built only for n <= {cap}, got {n}"));
    }
    Ok(())
}

/// `M_{n−2}(K_n)` is a wedge of `n − 1` spheres of dimension `C(n−1, 2) − 1`.
///
/// The Morse route runs the lexicographic edge schedule and compares the
/// critical cells with their closed forms; the homology route computes
/// reduced integral homology and the rational Betti numbers separately.
pub fn verify_theorem_kn(n: usize) -> Result<VerificationReport> {
    check_range("the K_n theorem", n, 3, KN_CAP)?;
    let start = Instant::now();
    let t = binomial(n - 1, 2) - 1;
    let k = Complex::matching(&Graph::complete(n)?, n - 2)?;
    let m = run_schedule(&k, &kn_schedule(n)?)?;
    let s = m.summary();
    let h = reduced_homology(&k)?;
    let expected = json!({
        "morse": {
            "acyclic": true,
            "empty_face_paired": true,
            "critical_by_dim": [[t, n - 1]],
            "critical_cells": hexes(&sorted_cells(predicted_critical_cells_kn(n)?)),
        },
        "homology": wedge_json(t, n - 1),
    });
    let observed = json!({
        "morse": {
            "acyclic": is_acyclic(&k, &m)?.is_acyclic(),
            "empty_face_paired": s.empty_face_paired,
            "critical_by_dim": s.critical_by_dim.iter().collect::<Vec<_>>(),
            "critical_cells": hexes(m.critical()),
        },
        "homology": homology_json(&h, &rational_support(&k)?),
    });
    Ok(VerificationReport::new("matching-complex-kn", json!({ "n": n, "r": n - 2 }), expected, observed, start))
}

/// `M_{n−1}(K_{n,n})` is a sphere of dimension `(n−1)² − 1`.
pub fn verify_theorem_knn(n: usize) -> Result<VerificationReport> {
    check_range("the K_{n,n} theorem", n, 2, KNN_CAP)?;
    let start = Instant::now();
    let t = (n - 1) * (n - 1) - 1;
    let k = Complex::matching(&Graph::complete_bipartite(n, n)?, n - 1)?;
    let m = run_schedule(&k, &knn_schedule(n)?)?;
    let s = m.summary();
    let h = reduced_homology(&k)?;
    let expected = json!({
        "morse": {
            "acyclic": true,
            "empty_face_paired": true,
            "critical_by_dim": [[t, 1]],
            "critical_cells": hexes(&[predicted_critical_cell_knn(n)?]),
        },
        "homology": wedge_json(t, 1),
    });
    let observed = json!({
        "morse": {
            "acyclic": is_acyclic(&k, &m)?.is_acyclic(),
            "empty_face_paired": s.empty_face_paired,
            "critical_by_dim": s.critical_by_dim.iter().collect::<Vec<_>>(),
            "critical_cells": hexes(m.critical()),
        },
        "homology": homology_json(&h, &rational_support(&k)?),
    });
    Ok(VerificationReport::new("matching-complex-knn", json!({ "n": n, "r": n - 1 }), expected, observed, start))
}

/// The bound `⌈ν_n^{n−2}⌉ = C(n−1, 2) − 1` and, for `n ≤ KN_CAP`, its
/// homology-level sharpness: `H̃_i = 0` for `i` below the bound and `H̃ ≠ 0` at it.
/// Larger `n` check the formula alone.
pub fn verify_sharpness(n: usize) -> Result<VerificationReport> {
    if n < 4 {
        return invalid(format!("sharpness check needs n >= 4, got {n}"));
    }
    let start = Instant::now();
    let t = binomial(n - 1, 2) - 1;
    let bound = jonsson_nu(n, n - 2)?;
    let with_homology = n <= KN_CAP;
    let mut expected = json!({ "nu": t.to_string(), "shifted_conn_bound": t.to_string() });
    let mut observed = json!({
        "nu": bound.nu.to_string(),
        "shifted_conn_bound": bound.shifted_conn_bound.to_string(),
    });
    if with_homology {
        let h = reduced_homology(&Complex::matching(&Graph::complete(n)?, n - 2)?)?;
        let below: Vec<isize> = h.nonzero().map(|g| g.dim).filter(|&d| d < t as isize).collect();
        expected["nonzero_below_bound"] = json!([]);
        expected["nonzero_at_bound"] = json!(true);
        observed["nonzero_below_bound"] = json!(below);
        observed["nonzero_at_bound"] = json!(h.nonzero().any(|g| g.dim == t as isize));
    }
    let params = json!({ "n": n, "d": n - 2, "homology_checked": with_homology });
    Ok(VerificationReport::new("connectivity-sharpness", params, expected, observed, start))
}

/// Jonsson's bound evaluated for arbitrary `(n, d)`; `expected` is whatever
/// the caller supplies for `⌈ν⌉`.
pub fn verify_bound(n: usize, d: usize, expected_ceiling: Option<i64>) -> Result<VerificationReport> {
    let start = Instant::now();
    let b = jonsson_nu(n, d)?;
    let observed = b.to_json();
    let expected = match expected_ceiling {
        Some(c) => {
            let mut e = observed.clone();
            e["shifted_conn_bound"] = json!(c.to_string());
            e
        }
        None => observed.clone(),
    };
    Ok(VerificationReport::new("connectivity-bound", json!({ "n": n, "d": d }), expected, observed, start))
}

/// Homology of `D_{6,3}`: `Z^115` in degree 4, `Z^24` in degree 5, zero elsewhere.
pub fn verify_domination_table() -> Result<VerificationReport> {
    verify_domination(6, 3, &[(4, 115), (5, 24)])
}

/// Reduced homology of `D_{n,γ}` against expected `(dim, betti)` pairs, torsion-free.
pub fn verify_domination(n: usize, gamma: usize, betti: &[(isize, usize)]) -> Result<VerificationReport> {
    check_range("domination complexes", n, 1, DOMINATION_CAP)?;
    let start = Instant::now();
    let k = Complex::domination(n, gamma)?;
    let h = reduced_homology(&k)?;
    let expected = json!({ "betti": betti, "torsion_free": true, "rational_betti": betti });
    let observed = homology_json(&h, &rational_support(&k)?);
    Ok(VerificationReport::new("domination-homology", json!({ "n": n, "gamma": gamma }), expected, observed, start))
}

/// `D_{n,1}` is the full simplex on the edges of `K_n`, `D_{n,n−1}` is `C(n,2)`
/// points, `D_{n,2} = M_{n−2}(K_n)`, `D_{n,n} = {∅}` and `D_{n,γ+1} ⊆ D_{n,γ}`.
pub fn verify_filtration(n: usize) -> Result<VerificationReport> {
    check_range("the domination filtration", n, 3, DOMINATION_CAP)?;
    let start = Instant::now();
    let m = binomial(n, 2);
    let levels: Vec<Complex> = (1..=n).map(|g| Complex::domination(n, g)).collect::<Result<_>>()?;
    let points = &levels[n - 2];
    let nested = levels
        .windows(2)
        .all(|w| w[1].faces().all(|f| w[0].contains(f)));
    let expected = json!({
        "first_is_simplex": true,
        "second_is_matching_complex": true,
        "next_to_last_f_vector": [m],
        "next_to_last_betti": [[0, m - 1]],
        "last_is_empty_face": true,
        "nested": true,
    });
    let observed = json!({
        "first_is_simplex": levels[0] == Complex::simplex(m)?,
        "second_is_matching_complex": levels[1] == Complex::matching(&Graph::complete(n)?, n - 2)?,
        "next_to_last_f_vector": points.f_vector(),
        "next_to_last_betti": reduced_homology(points)?.betti_support(),
        "last_is_empty_face": levels[n - 1] == Complex::empty(m),
        "nested": nested,
    });
    Ok(VerificationReport::new("domination-filtration", json!({ "n": n }), expected, observed, start))
}

fn min_facet_size(k: &Complex) -> usize {
    k.facets().iter().map(|f| f.len()).min().unwrap_or(0)
}

/// Facets of `M_{n−2}(K_n)` have at least `C(n−1, 2)` edges, the bound is met
/// by a critical cell, and the `(C(n−1,2) − 1)`-skeleton is pure.
pub fn verify_facet_bounds_kn(n: usize) -> Result<VerificationReport> {
    check_range("facet bounds for K_n", n, 3, KN_CAP)?;
    let start = Instant::now();
    let t = binomial(n - 1, 2);
    let k = Complex::matching(&Graph::complete(n)?, n - 2)?;
    let min = min_facet_size(&k);
    let cells = predicted_critical_cells_kn(n)?;
    let expected = json!({
        "min_facet_size": t,
        "skeleton_pure": true,
        "minimum_attained_by_critical_cell": true,
    });
    let observed = json!({
        "min_facet_size": min,
        "skeleton_pure": k.skeleton(t as isize - 1).stats().is_pure,
        "minimum_attained_by_critical_cell": cells.iter().any(|&c| k.is_facet(c) && c.len() == min),
    });
    Ok(VerificationReport::new("facet-bound-kn", json!({ "n": n, "r": n - 2 }), expected, observed, start))
}

/// Facets of `M_{n−1}(K_{n,n})` have at least `(n−1)²` edges and the
/// `((n−1)² − 1)`-skeleton is pure. The bound is not attained: the smallest
/// facets have `(n−1)² + 1` edges, and the critical cell is not a facet.
///
/// Also replays the counting argument on every facet `H`: with `C ⊆ A` and
/// `D ⊆ B` the vertices of degree below `n − 1`, maximality forces every
/// `C`–`D` pair to be an edge, and when both are nonempty
/// `|E(H)| ≥ (n−1)(n−c) + cd + (c−1)(n−d) = n² − 2n + c + d`.
pub fn verify_facet_bounds_knn(n: usize) -> Result<VerificationReport> {
    check_range("facet bounds for K_{n,n}", n, 2, KNN_CAP)?;
    let start = Instant::now();
    let t = (n - 1) * (n - 1);
    let g = Graph::complete_bipartite(n, n)?;
    let k = Complex::matching(&g, n - 1)?;
    let facets = k.facets();
    let min = facets.iter().map(|f| f.len()).min().unwrap_or(0);
    let counting = facets.iter().all(|&h| {
        let deg = g.subgraph_degrees(h);
        let low_a: Vec<usize> = (1..=n).filter(|&i| deg[i - 1] < n - 1).collect();
        let low_b: Vec<usize> = (1..=n).filter(|&j| deg[n + j - 1] < n - 1).collect();
        let joined = low_a
            .iter()
            .all(|&i| low_b.iter().all(|&j| g.bipartite_edge(i, j).is_some_and(|e| h.contains(e))));
        let (c, d) = (low_a.len() as i64, low_b.len() as i64);
        let n_ = n as i64;
        let identity = (n_ - 1) * (n_ - c) + c * d + (c - 1) * (n_ - d) == n_ * n_ - 2 * n_ + c + d;
        let bound = c == 0 || d == 0 || h.len() as i64 >= n_ * n_ - 2 * n_ + c + d;
        joined && identity && bound
    });
    let expected = json!({
        "facets_meet_bound": true,
        "skeleton_pure": true,
        "counting_argument_holds": true,
    });
    let observed = json!({
        "facets_meet_bound": min >= t,
        "skeleton_pure": k.skeleton(t as isize - 1).stats().is_pure,
        "counting_argument_holds": counting,
    });
    Ok(VerificationReport::new("facet-bound-knn", json!({ "n": n, "r": n - 1 }), expected, observed, start))
}

/// `M_r(K_{m,n})` for `m > r ≥ n` equals the `n`-fold join of the
/// `(r−1)`-skeleton of the simplex on `m` vertices, once edges are grouped by
/// their `B` endpoint.
pub fn verify_join_identity(m: usize, n: usize, r: usize) -> Result<VerificationReport> {
    if !(m > r && r >= n && n >= 1) {
        return invalid(format!("join identity needs m > r >= n >= 1, got m={m}, n={n}, r={r}"));
    }
    let start = Instant::now();
    let g = Graph::complete_bipartite(m, n)?;
    let k = Complex::matching(&g, r)?;
    // edge {a_i, b_j} sits at (i−1)n + (j−1); the join lists b_1's star first
    let perm: Vec<usize> = (0..m * n).map(|e| (e % n) * m + e / n).collect();
    let relabelled = k.relabel(&perm)?;
    let piece = Complex::simplex_skeleton(m, r as isize - 1)?;
    let mut joined = Complex::empty(0);
    for _ in 0..n {
        joined = joined.join(&piece)?;
    }
    let expected = json!({ "equal": true, "f_vector": joined.f_vector() });
    let observed = json!({ "equal": relabelled == joined, "f_vector": k.f_vector() });
    Ok(VerificationReport::new("join-identity", json!({ "m": m, "n": n, "r": r }), expected, observed, start))
}

/// Homology-level necessary condition for the `k`-skeleton of `complex` to be
/// homotopically Cohen–Macaulay: the skeleton is pure and every link `lk(σ)`
/// has `H̃_i = 0` for all `i < dim lk(σ)`.
///
/// Passing does not prove the property; failing disproves it.
pub fn cm_proxy_check(complex: &Complex, k: isize) -> Result<VerificationReport> {
    if complex.is_void() || k > complex.dim() || k < 0 {
        return invalid(format!("skeleton dimension {k} is outside 0..={}", complex.dim()));
    }
    let start = Instant::now();
    let skeleton = complex.skeleton(k);
    let faces: Vec<Face> = skeleton.faces().collect();
    let failing: Vec<Face> = faces
        .par_iter()
        .map(|&s| -> Result<Option<Face>> {
            let lk = skeleton.link(s)?;
            let top = lk.dim();
            let low = reduced_homology(&lk)?.nonzero().any(|g| g.dim < top);
            Ok(low.then_some(s))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let expected = json!({ "skeleton_pure": true, "failing_links": [] });
    let observed = json!({ "skeleton_pure": skeleton.stats().is_pure, "failing_links": hexes(&failing) });
    let params = json!({ "k": k, "f_vector": complex.f_vector(), "links_checked": faces.len() });
    Ok(VerificationReport::new("cm-proxy", params, expected, observed, start))
}

/// Largest `k` whose skeleton passes [`cm_proxy_check`], an upper bound for the homotopical depth.
pub fn depth_upper_bound(complex: &Complex) -> Result<Option<isize>> {
    for k in (0..=complex.dim()).rev() {
        if cm_proxy_check(complex, k)?.pass {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Parameter sets of the full suite, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Kn(usize),
    Knn(usize),
    Sharpness(usize),
    DominationTable,
    Filtration(usize),
    FacetsKn(usize),
    FacetsKnn(usize),
    Join(usize, usize, usize),
}

impl Check {
    pub fn run(self) -> Result<VerificationReport> {
        match self {
            Check::Kn(n) => verify_theorem_kn(n),
            Check::Knn(n) => verify_theorem_knn(n),
            Check::Sharpness(n) => verify_sharpness(n),
            Check::DominationTable => verify_domination_table(),
            Check::Filtration(n) => verify_filtration(n),
            Check::FacetsKn(n) => verify_facet_bounds_kn(n),
            Check::FacetsKnn(n) => verify_facet_bounds_knn(n),
            Check::Join(m, n, r) => verify_join_identity(m, n, r),
        }
    }
}

pub fn full_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    checks.extend((3..=KN_CAP).map(Check::Kn));
    checks.extend((2..=KNN_CAP).map(Check::Knn));
    checks.extend((4..=30).map(Check::Sharpness));
    checks.push(Check::DominationTable);
    checks.extend((3..=DOMINATION_CAP).map(Check::Filtration));
    checks.extend((3..=KN_CAP).map(Check::FacetsKn));
    checks.extend((2..=KNN_CAP).map(Check::FacetsKnn));
    checks.extend([(3, 1, 2), (4, 1, 2), (4, 2, 3), (5, 2, 3)].map(|(m, n, r)| Check::Join(m, n, r)));
    checks
}

/// Runs [`full_suite`] on the rayon pool; reports come back in suite order.
pub fn verify_all() -> Result<Vec<VerificationReport>> {
    full_suite().into_par_iter().map(Check::run).collect()
}
