//! Convex polytopes from exact rational V-representations: facet
//! enumeration by exhaustive supporting-hyperplane search, the face
//! lattice, nerve complexes and the refined face counts `f_{n,l}`.
//!
//! Facet enumeration is O(C(m,d) * m) brute force over affinely
//! independent d-subsets, which is fine at desk scale (m <= 12, d <= 6)
//! and keeps every decision exact.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::linalg::{next_combination, solve_unique, zero_hull_certificate, RationalMatrix};
use crate::rational::{format_rational, Rational};

/// Polytope given by its vertices, with facets and the face lattice
/// computed at construction. Immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<Vec<Rational>>,
    /// coordinates inside the affine hull (length = dim per vertex)
    affine_coords: Vec<Vec<Rational>>,
    dim: usize,
    facets: Vec<VertexSet>,
    lattice: Vec<(VertexSet, isize)>,
}

impl Polytope {
    /// Validates and builds: every input point must be an extreme point
    /// (witnessed rejection otherwise) and duplicates are errors.
    pub fn from_vertices(vertices: Vec<Vec<Rational>>) -> Result<Self> {
        let m = vertices.len();
        if m == 0 {
            return Err(Error::TooFewPoints {
                needed: 1,
                found: 0,
            });
        }
        let n = vertices[0].len();
        for v in &vertices {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                if vertices[i] == vertices[j] {
                    return Err(Error::DuplicatePoint { first: i, second: j });
                }
            }
        }
        if m > crate::MAX_VERTICES {
            return Err(Error::UniverseTooLarge {
                m,
                cap: crate::MAX_VERTICES,
            });
        }

        let affine_coords = affine_coordinates(&vertices)?;
        let dim = affine_coords[0].len();

        // extremality: no vertex is a convex combination of the others
        for i in 0..m {
            let shifted: Vec<Vec<Rational>> = (0..m)
                .filter(|&j| j != i)
                .map(|j| {
                    (0..dim)
                        .map(|c| affine_coords[j][c].clone() - affine_coords[i][c].clone())
                        .collect()
                })
                .collect();
            if let Some(cert) = zero_hull_certificate(&shifted)? {
                let witness = cert
                    .iter()
                    .map(|(pos, coeff)| {
                        let j = if *pos < i { *pos } else { *pos + 1 };
                        format!("{} * v{}", format_rational(coeff), j)
                    })
                    .collect::<Vec<_>>()
                    .join(" + ");
                return Err(Error::NotExtreme { index: i, witness });
            }
        }

        let facets = enumerate_facets(&affine_coords, dim)?;
        let lattice = build_lattice(&affine_coords, &facets, m, dim);
        Ok(Self {
            ambient_dim: n,
            vertices,
            affine_coords,
            dim,
            facets,
            lattice,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Affine dimension d.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub(crate) fn affine_coords(&self) -> &[Vec<Rational>] {
        &self.affine_coords
    }

    /// Vertex sets of the facets, sorted.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// All faces as (vertex set, dimension), including the empty face
    /// (dim -1) and the polytope itself (dim d).
    pub fn face_lattice(&self) -> &[(VertexSet, isize)] {
        &self.lattice
    }

    /// Nerve complex K(P) on the vertex labels: a set is a face iff it
    /// lies in a common facet.
    pub fn nerve_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_maximal_faces(self.vertex_count(), &self.facets)
            .expect("facet sets live in the vertex universe")
    }

    /// Nerve of the facet cover, K_Q, on the facet labels: a set of
    /// facets is a face iff they share a vertex. Equals K(P*) without
    /// constructing the polar dual.
    pub fn facet_nerve(&self) -> SimplicialComplex {
        let m = self.vertex_count();
        let sets: Vec<VertexSet> = (0..m)
            .map(|v| {
                let mut s = VertexSet::EMPTY;
                for (fi, f) in self.facets.iter().enumerate() {
                    if f.contains(v) {
                        s = s.with(fi);
                    }
                }
                s
            })
            .collect();
        SimplicialComplex::from_maximal_faces(self.facets.len(), &sets)
            .expect("facet labels in range")
    }

    /// `f_{n,l}`: number of n-dimensional proper faces with l vertices,
    /// including `f_{-1,0} = 1`, excluding the polytope itself.
    pub fn f_nl(&self) -> BTreeMap<(isize, usize), usize> {
        let mut out = BTreeMap::new();
        for &(vs, d) in &self.lattice {
            if d == self.dim as isize {
                continue;
            }
            *out.entry((d, vs.len())).or_insert(0) += 1;
        }
        out
    }

    /// Every apex: vertex i such that the remaining vertices form a
    /// facet.
    pub fn pyramid_apexes(&self) -> Vec<usize> {
        let m = self.vertex_count();
        (0..m)
            .filter(|&i| {
                let rest = VertexSet::singleton(i).complement_in(m);
                self.facets.contains(&rest)
            })
            .collect()
    }

    /// First apex if the polytope is a pyramid.
    pub fn is_pyramid(&self) -> Option<usize> {
        self.pyramid_apexes().first().copied()
    }

    /// True iff every k vertices lie in a common proper face.
    pub fn is_k_neighborly(&self, k: usize) -> bool {
        let m = self.vertex_count();
        if k == 0 || k > m {
            return k == 0;
        }
        let nerve = self.nerve_complex();
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            if !nerve.is_face(VertexSet::from_indices(&comb)) {
                return false;
            }
            if !next_combination(&mut comb, m) {
                return true;
            }
        }
    }
}

/// Coordinates of each point inside the affine hull of the whole set:
/// the output vectors have length = affine dimension.
fn affine_coordinates(vertices: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let m = vertices.len();
    let n = vertices[0].len();
    let origin = &vertices[0];
    let shifted: Vec<Vec<Rational>> = vertices
        .iter()
        .map(|v| (0..n).map(|c| v[c].clone() - origin[c].clone()).collect())
        .collect();
    // greedy affine basis
    let mut basis_idx: Vec<usize> = Vec::new();
    let mut basis_rows: Vec<Vec<Rational>> = Vec::new();
    for i in 1..m {
        let mut candidate = basis_rows.clone();
        candidate.push(shifted[i].clone());
        let rank = RationalMatrix::from_rows(candidate.clone())?.rank();
        if rank == basis_rows.len() + 1 {
            basis_rows = candidate;
            basis_idx.push(i);
        }
    }
    let d = basis_rows.len();
    if d == 0 {
        // a single point (m = 1): zero-dimensional polytope
        return Ok(vec![Vec::new(); m]);
    }
    // solve B^T lambda = shifted_i for each point
    let bt = RationalMatrix::from_rows(basis_rows)?.transpose();
    let coords = shifted
        .iter()
        .map(|s| {
            solve_unique(&bt, s).ok_or_else(|| {
                Error::BadInput("affine coordinate solve failed".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(coords)
}

/// All facets by supporting-hyperplane search over affinely independent
/// d-subsets, in the affine-hull coordinates (full dimension d).
fn enumerate_facets(coords: &[Vec<Rational>], d: usize) -> Result<Vec<VertexSet>> {
    let m = coords.len();
    if m < d + 1 {
        return Err(Error::TooFewPoints {
            needed: d + 1,
            found: m,
        });
    }
    if d == 0 {
        return Err(Error::BadInput(
            "a single point has no facets; need dimension >= 1".into(),
        ));
    }
    let mut facets: BTreeSet<VertexSet> = BTreeSet::new();
    let mut comb: Vec<usize> = (0..d).collect();
    loop {
        if let Some(functional) = hyperplane_through(coords, &comb, d) {
            // evaluate the affine functional on every point
            let mut pos = false;
            let mut neg = false;
            let mut zero_set = VertexSet::EMPTY;
            for (i, c) in coords.iter().enumerate() {
                let mut val = functional[d].clone();
                for (j, x) in c.iter().enumerate() {
                    val += functional[j].clone() * x.clone();
                }
                if val.is_zero() {
                    zero_set = zero_set.with(i);
                } else if val.is_positive() {
                    pos = true;
                } else {
                    neg = true;
                }
                if pos && neg {
                    break;
                }
            }
            if !(pos && neg) {
                facets.insert(zero_set);
            }
        }
        if !next_combination(&mut comb, m) {
            break;
        }
    }
    Ok(facets.into_iter().collect())
}

/// The affine functional (a_1..a_d, a_0) vanishing on the given point
/// subset, when the subset is affinely independent (unique hyperplane).
fn hyperplane_through(
    coords: &[Vec<Rational>],
    subset: &[usize],
    d: usize,
) -> Option<Vec<Rational>> {
    // rows: (x_1 .. x_d, 1) per chosen point; kernel = functionals
    let rows: Vec<Vec<Rational>> = subset
        .iter()
        .map(|&i| {
            let mut r = coords[i].clone();
            r.push(Rational::one());
            r
        })
        .collect();
    let mat = RationalMatrix::from_rows(rows).expect("consistent lengths");
    let kernel = mat.kernel_basis();
    if kernel.cols() != 1 {
        return None; // affinely dependent subset: no unique hyperplane
    }
    Some((0..=d).map(|i| kernel.get(i, 0).clone()).collect())
}

/// Closure of the facet vertex sets under intersection, plus the full
/// set and the empty face, with dimensions from affine ranks.
fn build_lattice(
    coords: &[Vec<Rational>],
    facets: &[VertexSet],
    m: usize,
    d: usize,
) -> Vec<(VertexSet, isize)> {
    let mut sets: BTreeSet<VertexSet> = facets.iter().copied().collect();
    sets.insert(VertexSet::full(m));
    sets.insert(VertexSet::EMPTY);
    loop {
        let current: Vec<VertexSet> = sets.iter().copied().collect();
        let mut added = false;
        for a in 0..current.len() {
            for b in a + 1..current.len() {
                let inter = current[a].intersect(current[b]);
                if sets.insert(inter) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    sets.into_iter()
        .map(|vs| {
            let dim = if vs.is_empty() {
                -1
            } else if vs == VertexSet::full(m) {
                d as isize
            } else {
                affine_rank(coords, &vs.indices()) as isize
            };
            (vs, dim)
        })
        .collect()
}

/// Affine dimension of a point subset (rank of differences).
fn affine_rank(coords: &[Vec<Rational>], idx: &[usize]) -> usize {
    if idx.len() <= 1 {
        return 0;
    }
    let base = &coords[idx[0]];
    let rows: Vec<Vec<Rational>> = idx[1..]
        .iter()
        .map(|&i| {
            coords[i]
                .iter()
                .zip(base)
                .map(|(a, b)| a.clone() - b.clone())
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(rows).expect("equal lengths").rank()
}
