use crate::complex::Complex;
use crate::face::Face;

/// Sparse simplicial boundary `∂_d : C_d → C_{d-1}` of the augmented chain complex.
///
/// Rows index the `(d-1)`-faces and columns the `d`-faces, each in the
/// complex's sorted order; `∂_0` maps every vertex to the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub dim: isize,
    pub rows: usize,
    pub cols: usize,
    /// Column `j` lists `(row, sign)` sorted by row.
    pub columns: Vec<Vec<(u32, i8)>>,
}

impl BoundaryMatrix {
    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// `(row, col, sign)` triples in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i8)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |&(i, s)| (i as usize, j, s)))
    }
}

/// Boundary in dimension `d ≥ 0`; the sign of dropping the element at
/// position `p` (in increasing index order) is `(−1)^p`.
pub fn boundary_matrix(complex: &Complex, d: usize) -> BoundaryMatrix {
    let d = d as isize;
    let lower = complex.faces_of_dim(d - 1);
    let upper = complex.faces_of_dim(d);
    let columns = upper
        .iter()
        .map(|&f| {
            let mut col: Vec<(u32, i8)> = f
                .iter()
                .enumerate()
                .map(|(p, e)| {
                    let row = lower
                        .binary_search(&f.without(e))
                        .expect("complex is downward closed");
                    (row as u32, if p % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect();
    BoundaryMatrix {
        dim: d,
        rows: lower.len(),
        cols: upper.len(),
        columns,
    }
}

/// Faces indexing the rows and columns of [`boundary_matrix`].
pub fn boundary_basis(complex: &Complex, d: usize) -> (&[Face], &[Face]) {
    let d = d as isize;
    (complex.faces_of_dim(d - 1), complex.faces_of_dim(d))
}
