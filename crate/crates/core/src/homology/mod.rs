//! Reduced simplicial homology with integer coefficients.

mod boundary;
mod rational;
mod scalar;
mod snf;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{invalid, Result};

pub use boundary::{boundary_basis, boundary_matrix, BoundaryMatrix};
pub use rational::rank_over_rationals;
pub use snf::{smith_normal_form, IntMatrix, SnfResult};

/// `H̃_dim ≅ Z^betti ⊕ Z/t_1 ⊕ … ⊕ Z/t_k` with `t_1 | … | t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub dim: isize,
    pub betti: usize,
    #[serde(with = "torsion_serde")]
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Reduced homology in every dimension `0..=dim K` (just `-1` for `{∅}`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyProfile {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    fn group(&self, d: isize) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.dim == d)
    }

    /// Betti number in dimension `d`; zero outside the computed range.
    pub fn betti(&self, d: isize) -> usize {
        self.group(d).map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, d: isize) -> &[BigUint] {
        self.group(d).map_or(&[], |g| g.torsion.as_slice())
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(|g| g.torsion.is_empty())
    }

    /// Groups that are not trivial.
    pub fn nonzero(&self) -> impl Iterator<Item = &HomologyGroup> {
        self.groups.iter().filter(|g| !g.is_zero())
    }

    /// `(dim, betti)` for every nonzero Betti number.
    pub fn betti_support(&self) -> Vec<(isize, usize)> {
        self.groups.iter().filter(|g| g.betti > 0).map(|g| (g.dim, g.betti)).collect()
    }

    /// Betti numbers for dimensions `0..=dim`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().filter(|g| g.dim >= 0).map(|g| g.betti).collect()
    }

    /// `Σ (−1)^i betti_i`, which equals `χ(K) − 1`.
    pub fn reduced_euler(&self) -> i64 {
        self.groups
            .iter()
            .map(|g| if g.dim.rem_euclid(2) == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }

    /// True when every group is trivial, as for a contractible complex.
    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }
}

/// Integral reduced homology via Smith normal forms of the boundary maps.
///
/// `betti_i = f_i − rank ∂_i − rank ∂_{i+1}` and the torsion of `H̃_i` is the
/// list of invariant factors of `∂_{i+1}` exceeding 1. Each `∂_d` is reduced
/// independently on the rayon pool.
pub fn reduced_homology(complex: &Complex) -> Result<HomologyProfile> {
    if complex.is_void() {
        return invalid("the void complex has no reduced homology");
    }
    let top = complex.dim();
    if top < 0 {
        return Ok(HomologyProfile {
            groups: vec![HomologyGroup {
                dim: -1,
                betti: 1,
                torsion: Vec::new(),
            }],
        });
    }
    let top = top as usize;
    // snfs[d] is the Smith form of ∂_d for d = 0..=top
    let snfs: Vec<SnfResult> = (0..=top)
        .into_par_iter()
        .map(|d| smith_normal_form(&IntMatrix::from(&boundary_matrix(complex, d))))
        .collect();
    let groups = (0..=top)
        .map(|d| {
            let f = complex.faces_of_dim(d as isize).len();
            let rank_out = snfs[d].rank();
            let (rank_in, torsion) = match snfs.get(d + 1) {
                Some(s) => (
                    s.rank(),
                    s.torsion().map(|t| t.magnitude().clone()).collect(),
                ),
                None => (0, Vec::new()),
            };
            HomologyGroup {
                dim: d as isize,
                betti: f - rank_out - rank_in,
                torsion,
            }
        })
        .collect();
    Ok(HomologyProfile { groups })
}

/// Reduced Betti numbers for dimensions `0..=dim K` from ranks over `Q` only.
pub fn betti_over_rationals(complex: &Complex) -> Result<Vec<usize>> {
    if complex.is_void() {
        return invalid("the void complex has no reduced homology");
    }
    let top = complex.dim();
    if top < 0 {
        return Ok(Vec::new());
    }
    let top = top as usize;
    let ranks: Vec<usize> = (0..=top)
        .into_par_iter()
        .map(|d| rank_over_rationals(&IntMatrix::from(&boundary_matrix(complex, d))))
        .collect();
    Ok((0..=top)
        .map(|d| complex.faces_of_dim(d as isize).len() - ranks[d] - ranks.get(d + 1).copied().unwrap_or(0))
        .collect())
}

mod torsion_serde {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Coeff {
        Small(u64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<Coeff> = v
            .iter()
            .map(|t| t.to_u64().map_or_else(|| Coeff::Big(t.to_string()), Coeff::Small))
            .collect();
        coeffs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<Coeff>::deserialize(d)?
            .into_iter()
            .map(|c| match c {
                Coeff::Small(v) => Ok(BigUint::from(v)),
                Coeff::Big(s) => s.parse().map_err(serde::de::Error::custom),
            })
            .collect()
    }
}
