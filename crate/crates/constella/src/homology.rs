//! Reduced simplicial homology over GF(2) and Q.
//!
//! The chain complex is augmented: the empty face is a real generator in
//! degree -1, so the complex `{ {} }` has `b_{-1} = 1`. Cohomology
//! dimensions over a field equal homology dimensions, and that is how the
//! Hochster sums in [`crate::betti`] consume these numbers.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{GF2Matrix, RationalMatrix};
use crate::rational::Rational;

/// Coefficient field for homology computations.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub enum Field {
    GF2,
    Q,
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::GF2 => write!(f, "gf2"),
            Field::Q => write!(f, "q"),
        }
    }
}

/// Reduced Betti numbers `b_p` for `p = -1, 0, ..`; index 0 holds `b_{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    pub field: Field,
    b: Vec<usize>,
}

impl BettiVector {
    pub fn new(field: Field, b: Vec<usize>) -> Self {
        Self { field, b }
    }

    pub fn get(&self, p: isize) -> usize {
        if p < -1 {
            return 0;
        }
        self.b.get((p + 1) as usize).copied().unwrap_or(0)
    }

    /// Largest degree with a (possibly zero) stored entry.
    pub fn max_degree(&self) -> isize {
        self.b.len() as isize - 2
    }

    pub fn is_zero(&self) -> bool {
        self.b.iter().all(|&x| x == 0)
    }

    /// True iff this is the Betti vector of the sphere `S^r`:
    /// `b_r = 1` and every other entry zero. `r = -1` is the empty complex.
    pub fn is_sphere(&self, r: isize) -> bool {
        self.get(r) == 1
            && (-1..=self.max_degree()).all(|p| p == r || self.get(p) == 0)
    }
}

/// Faces grouped by cardinality: `levels[c]` lists the masks of the
/// c-element faces, sorted; `levels[0] = [0]` for the empty face.
pub(crate) fn face_levels(k: &SimplicialComplex) -> Vec<Vec<u64>> {
    levels_from_masks(k.all_faces())
}

pub(crate) fn levels_from_masks(faces: Vec<u64>) -> Vec<Vec<u64>> {
    let top = faces
        .iter()
        .map(|f| f.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let mut levels = vec![Vec::new(); top + 1];
    for f in faces {
        levels[f.count_ones() as usize].push(f);
    }
    for l in &mut levels {
        l.sort_unstable();
    }
    levels
}

/// Rank over GF(2) of the boundary map from level `c` to level `c-1`,
/// with columns packed into word vectors.
fn boundary_rank_gf2(rows: &[u64], cols_faces: &[u64]) -> usize {
    let words = rows.len().div_ceil(64).max(1);
    let mut pivots: Vec<Vec<u64>> = Vec::new();
    let mut pivot_bit: Vec<usize> = Vec::new();
    let mut rank = 0;
    let mut col = vec![0u64; words];
    for &f in cols_faces {
        col.iter_mut().for_each(|w| *w = 0);
        let mut rest = f;
        while rest != 0 {
            let v = rest & rest.wrapping_neg();
            let sub = f & !v;
            let idx = rows.binary_search(&sub).expect("faces are downward closed");
            col[idx / 64] ^= 1 << (idx % 64);
            rest &= rest - 1;
        }
        // reduce against the basis
        loop {
            let Some(lead) = col
                .iter()
                .enumerate()
                .find_map(|(w, &x)| (x != 0).then(|| w * 64 + x.trailing_zeros() as usize))
            else {
                break;
            };
            if let Some(pi) = pivot_bit.iter().position(|&b| b == lead) {
                for (x, y) in col.iter_mut().zip(&pivots[pi]) {
                    *x ^= y;
                }
            } else {
                pivots.push(col.clone());
                pivot_bit.push(lead);
                rank += 1;
                break;
            }
        }
    }
    rank
}

/// Rank over Q of the boundary map between consecutive levels; entries
/// are the ascending-vertex orientation signs.
fn boundary_rank_q(rows: &[u64], cols_faces: &[u64]) -> usize {
    let mut m = RationalMatrix::zeros(rows.len(), cols_faces.len());
    for (j, &f) in cols_faces.iter().enumerate() {
        let mut sign = 1i64;
        let mut rest = f;
        while rest != 0 {
            let v = rest & rest.wrapping_neg();
            let sub = f & !v;
            let i = rows.binary_search(&sub).expect("faces are downward closed");
            m.set(i, j, Rational::from_integer(sign.into()));
            sign = -sign;
            rest &= rest - 1;
        }
    }
    m.rank()
}

/// Betti numbers from the level structure of a face set.
pub(crate) fn betti_from_levels(levels: &[Vec<u64>], field: Field) -> BettiVector {
    let top = levels.len();
    let mut ranks = vec![0usize; top + 1];
    for c in 1..top {
        if levels[c].is_empty() {
            continue;
        }
        ranks[c] = match field {
            Field::GF2 => boundary_rank_gf2(&levels[c - 1], &levels[c]),
            Field::Q => boundary_rank_q(&levels[c - 1], &levels[c]),
        };
    }
    let b = (0..top)
        .map(|c| levels[c].len() - ranks[c] - ranks[c + 1])
        .collect();
    BettiVector::new(field, b)
}

/// Matrix of the boundary map from p-faces to (p-1)-faces of the
/// augmented chain complex, over GF(2).
pub fn boundary_matrix_gf2(k: &SimplicialComplex, p: isize) -> Result<GF2Matrix> {
    let levels = face_levels(k);
    check_degree(&levels, p)?;
    if p == -1 {
        return Ok(GF2Matrix::new(0, 1));
    }
    let c = (p + 1) as usize;
    let rows = &levels[c - 1];
    let cols = &levels[c];
    let mut m = GF2Matrix::new(rows.len(), cols.len());
    for (j, &f) in cols.iter().enumerate() {
        let mut rest = f;
        while rest != 0 {
            let v = rest & rest.wrapping_neg();
            let i = rows.binary_search(&(f & !v)).expect("closed under subsets");
            m.set(i, j, true);
            rest &= rest - 1;
        }
    }
    Ok(m)
}

/// Same boundary map over Q with ascending-vertex orientation signs.
pub fn boundary_matrix_rational(k: &SimplicialComplex, p: isize) -> Result<RationalMatrix> {
    let levels = face_levels(k);
    check_degree(&levels, p)?;
    if p == -1 {
        return Ok(RationalMatrix::zeros(0, 1));
    }
    let c = (p + 1) as usize;
    let rows = &levels[c - 1];
    let cols = &levels[c];
    let mut m = RationalMatrix::zeros(rows.len(), cols.len());
    for (j, &f) in cols.iter().enumerate() {
        let mut sign = 1i64;
        let mut rest = f;
        while rest != 0 {
            let v = rest & rest.wrapping_neg();
            let i = rows.binary_search(&(f & !v)).expect("closed under subsets");
            m.set(i, j, Rational::from_integer(sign.into()));
            sign = -sign;
            rest &= rest - 1;
        }
    }
    Ok(m)
}

fn check_degree(levels: &[Vec<u64>], p: isize) -> Result<()> {
    let dim = levels.len() as isize - 2;
    if p < -1 || p > dim {
        return Err(Error::DegreeOutOfRange { p, dim });
    }
    Ok(())
}

/// Reduced Betti numbers of a complex over the chosen field.
pub fn reduced_betti(k: &SimplicialComplex, field: Field) -> BettiVector {
    betti_from_levels(&face_levels(k), field)
}

/// True iff the reduced Betti vector equals that of `S^r`.
pub fn is_homology_sphere_like(k: &SimplicialComplex, field: Field, r: isize) -> bool {
    reduced_betti(k, field).is_sphere(r)
}
