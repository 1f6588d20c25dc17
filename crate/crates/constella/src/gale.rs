//! Gale diagrams, spherical point configurations and their constellation
//! complexes, and the duality `K(P)^ = Delta(G(P))` that ties the nerve
//! complex of a polytope to its Gale diagram.
//!
//! Points are never normalized onto the unit sphere: a nonzero vector
//! stands for its ray, and every predicate is scale-invariant (sign tests
//! and homogeneous dependences only). Zero vectors are allowed and turn
//! into ghost vertices of the constellation complex.

use num_traits::{Signed, Zero};

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::linalg::{
    next_combination, rank_rational, solve_unique, strictly_positive_dependence,
    RationalMatrix,
};
use crate::polytope::Polytope;
use crate::rational::Rational;

/// Multiset of points in `R^{r+1}`, each nonzero point read as a ray
/// (a point of `S^r`), zero points allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    /// Ambient dimension r+1; the sphere of rays is S^r.
    pub dim: usize,
    pub points: Vec<Vec<Rational>>,
}

impl PointConfiguration {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
        }
        Ok(Self { dim, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Sphere dimension r (None when the ambient space is R^0).
    pub fn sphere_dim(&self) -> Option<usize> {
        self.dim.checked_sub(1)
    }

    pub fn point(&self, i: usize) -> &[Rational] {
        &self.points[i]
    }

    pub fn subset(&self, idx: &[usize]) -> Vec<Vec<Rational>> {
        idx.iter().map(|&i| self.points[i].clone()).collect()
    }
}

/// Gale diagram of a polytope with m vertices and dimension d: an
/// m-point configuration in `R^{m-d-1}`, computed from a canonical
/// (echelonized) kernel basis of the affine vertex relations. The output
/// is well defined up to a linear automorphism of the ambient space, and
/// every downstream predicate is invariant under that.
pub fn gale_diagram(p: &Polytope) -> PointConfiguration {
    let m = p.vertex_count();
    let d = p.dim();
    let coords = p.affine_coords();
    // rows: one per affine coordinate, plus the all-ones row
    let mut rows: Vec<Vec<Rational>> = (0..d)
        .map(|c| (0..m).map(|i| coords[i][c].clone()).collect())
        .collect();
    rows.push(vec![Rational::from_integer(1.into()); m]);
    let mat = RationalMatrix::from_rows(rows).expect("consistent row lengths");
    let kernel = mat.kernel_basis(); // m x (m - d - 1)
    let dim = kernel.cols();
    let points = (0..m)
        .map(|i| (0..dim).map(|j| kernel.get(i, j).clone()).collect())
        .collect();
    PointConfiguration { dim, points }
}

/// Minimal nonfaces of the constellation complex: the minimal index sets
/// whose points admit a nonnegative nonzero dependence (equivalently,
/// contain 0 in the convex hull of the rays). By Caratheodory the search
/// stops at size r+2, and a minimal witness has a unique, strictly
/// positive dependence on an affinely independent support.
fn constellation_nonfaces(x: &PointConfiguration) -> Vec<VertexSet> {
    let m = x.len();
    let max_size = (x.dim + 2).min(m.max(1));
    let mut nonfaces: Vec<VertexSet> = Vec::new();
    for k in 1..=max_size {
        if k > m {
            break;
        }
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            let set = VertexSet::from_indices(&comb);
            if !nonfaces.iter().any(|nf| nf.is_subset_of(set)) {
                if is_minimal_zero_capture(x, &comb) {
                    nonfaces.push(set);
                }
            }
            if !next_combination(&mut comb, m) {
                break;
            }
        }
    }
    nonfaces
}

/// For a subset whose proper subsets capture nothing: it captures zero
/// iff the convex-combination system on exactly this support has a
/// (then unique and strictly positive) solution.
fn is_minimal_zero_capture(x: &PointConfiguration, idx: &[usize]) -> bool {
    let n = x.dim;
    let k = idx.len();
    let mut a = RationalMatrix::zeros(n + 1, k);
    for (col, &i) in idx.iter().enumerate() {
        for row in 0..n {
            a.set(row, col, x.points[i][row].clone());
        }
        a.set(n, col, Rational::from_integer(1.into()));
    }
    let mut b = vec![Rational::zero(); n + 1];
    b[n] = Rational::from_integer(1.into());
    match solve_unique(&a, &b) {
        Some(sol) => sol.iter().all(|c| c.is_positive()),
        None => false,
    }
}

/// The nerve of the open-hemisphere cover: `I` is a face iff the rays
/// `X(I)` fit in a common open hemisphere. Zero points are ghosts.
pub fn constellation_complex(x: &PointConfiguration) -> Result<SimplicialComplex> {
    let m = x.len();
    if m > crate::MAX_VERTICES {
        return Err(Error::UniverseTooLarge {
            m,
            cap: crate::MAX_VERTICES,
        });
    }
    let nonfaces = constellation_nonfaces(x);
    SimplicialComplex::from_minimal_nonfaces(m, &nonfaces)
}

/// True iff the hemispheres cover the whole sphere, i.e. the nonzero
/// points positively span `R^{r+1}` (full rank plus a strictly positive
/// dependence). `R^0` has the empty sphere, covered vacuously.
pub fn covers_sphere(x: &PointConfiguration) -> Result<bool> {
    if x.dim == 0 {
        return Ok(true);
    }
    let nonzero: Vec<Vec<Rational>> = x
        .points
        .iter()
        .filter(|p| !p.iter().all(|c| c.is_zero()))
        .cloned()
        .collect();
    if nonzero.is_empty() {
        return Ok(false);
    }
    let mat = RationalMatrix::from_rows(nonzero.clone())?;
    if rank_rational(&mat) != x.dim {
        return Ok(false);
    }
    strictly_positive_dependence(&nonzero)
}

/// Good configurations wrap the sphere at least twice: removing any one
/// point still leaves a cover. Exactly the configurations that arise as
/// Gale diagrams.
pub fn is_good(x: &PointConfiguration) -> Result<bool> {
    if x.dim == 0 {
        return Ok(true);
    }
    if !covers_sphere(x)? {
        return Ok(false);
    }
    for i in 0..x.len() {
        let mut rest = x.clone();
        rest.points.remove(i);
        if !covers_sphere(&rest)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Nondegenerate: every minimal zero-capturing subset has cardinality
/// exactly r+2 = dim+1 (equivalently spans the whole ambient space).
pub fn is_nondegenerate(x: &PointConfiguration) -> Result<bool> {
    Ok(constellation_nonfaces(x)
        .iter()
        .all(|nf| nf.len() == x.dim + 1))
}

/// Repeats point i `multiplicities[i]` times; returns the new
/// configuration and the label map (new index -> original index).
pub fn with_multiplicities(
    x: &PointConfiguration,
    multiplicities: &[usize],
) -> Result<(PointConfiguration, Vec<usize>)> {
    if multiplicities.len() != x.len() {
        return Err(Error::BadInput(format!(
            "expected {} multiplicities, found {}",
            x.len(),
            multiplicities.len()
        )));
    }
    if let Some(i) = multiplicities.iter().position(|&j| j == 0) {
        return Err(Error::ZeroMultiplicity { index: i });
    }
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for (i, &j) in multiplicities.iter().enumerate() {
        for _ in 0..j {
            points.push(x.points[i].clone());
            labels.push(i);
        }
    }
    Ok((
        PointConfiguration {
            dim: x.dim,
            points,
        },
        labels,
    ))
}

/// Block-diagonal direct sum: each factor keeps its own coordinate
/// block. The constellation complex of the sum is the join of the
/// factors' complexes.
pub fn direct_sum(x1: &PointConfiguration, x2: &PointConfiguration) -> PointConfiguration {
    let dim = x1.dim + x2.dim;
    let mut points = Vec::with_capacity(x1.len() + x2.len());
    for p in &x1.points {
        let mut q = p.clone();
        q.extend(std::iter::repeat_with(Rational::zero).take(x2.dim));
        points.push(q);
    }
    for p in &x2.points {
        let mut q: Vec<Rational> = std::iter::repeat_with(Rational::zero)
            .take(x1.dim)
            .collect();
        q.extend(p.iter().cloned());
        points.push(q);
    }
    PointConfiguration { dim, points }
}

/// The central duality check: computes `K(P)^` and `Delta(G(P))`
/// independently and compares the maximal-face antichains.
pub fn verify_gale_alexander(p: &Polytope) -> Result<bool> {
    let nerve = p.nerve_complex();
    let dual = nerve.alexander_dual()?;
    let constellation = constellation_complex(&gale_diagram(p))?;
    Ok(dual == constellation)
}
