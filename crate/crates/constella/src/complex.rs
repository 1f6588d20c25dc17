//! Abstract simplicial complexes on `[m]` (m <= 64) with ghost vertices.
//!
//! A complex is stored as the antichain of its maximal faces; the
//! antichain of minimal nonfaces is computed once on demand and cached.
//! Both generators are linked by complementation under Alexander duality,
//! which is what most of this crate runs on.

pub mod dense;

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::MAX_VERTICES;

/// Subset of `{0..m-1}` as a one-word bitmask.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(i: usize) -> Self {
        VertexSet(1 << i)
    }

    pub fn full(m: usize) -> Self {
        if m == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << m) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        VertexSet(indices.iter().fold(0, |acc, &i| acc | (1 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn complement_in(self, m: usize) -> Self {
        Self::full(m).minus(self)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Relabels this set into the compact universe obtained by deleting
    /// the vertices of `removed` and renumbering the rest in order.
    pub fn compact_outside(self, removed: Self) -> Self {
        debug_assert!(self.intersect(removed).is_empty());
        let mut out = 0u64;
        for (new, old) in removed.complement_in(64).iter().enumerate() {
            if self.contains(old) {
                out |= 1 << new;
            }
        }
        VertexSet(out)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Keeps only the maximal sets (drops every set contained in another).
pub(crate) fn antichain_max(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable();
    sets.dedup();
    let kept: Vec<VertexSet> = sets
        .iter()
        .filter(|&&s| !sets.iter().any(|&t| s != t && s.is_subset_of(t)))
        .copied()
        .collect();
    kept
}

/// Keeps only the minimal sets (drops every set containing another).
pub(crate) fn antichain_min(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable();
    sets.dedup();
    let kept: Vec<VertexSet> = sets
        .iter()
        .filter(|&&s| !sets.iter().any(|&t| s != t && t.is_subset_of(s)))
        .copied()
        .collect();
    kept
}

/// All minimal transversals of a family of nonempty sets (Berge's
/// incremental algorithm). A transversal meets every set of the family.
/// If some family member is empty there are no transversals.
pub(crate) fn minimal_transversals(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut trans = vec![VertexSet::EMPTY];
    for &e in family {
        if e.is_empty() {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(trans.len());
        let mut extended = Vec::new();
        for &t in &trans {
            if !t.intersect(e).is_empty() {
                next.push(t);
            } else {
                for v in e.iter() {
                    extended.push(t.with(v));
                }
            }
        }
        // an extension survives only if it contains no already-hitting set
        for x in extended {
            if !next.iter().any(|&t| t.is_subset_of(x) && t != x) {
                next.push(x);
            }
        }
        trans = antichain_min(next);
    }
    trans
}

/// Simplicial complex on the vertex universe `{0..m-1}`. The empty set is
/// always a face; vertices outside every face are ghost vertices.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    m: usize,
    maximal: Vec<VertexSet>,
    nonfaces: OnceLock<Vec<VertexSet>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.maximal == other.maximal
    }
}

impl Eq for SimplicialComplex {}

impl std::hash::Hash for SimplicialComplex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.m.hash(state);
        self.maximal.hash(state);
    }
}

/// A link or full subcomplex: the complex on its compacted universe plus
/// the map from new labels back to labels of the parent complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub complex: SimplicialComplex,
    /// `labels[new] = old`
    pub labels: Vec<usize>,
}

impl SimplicialComplex {
    fn check_universe(m: usize, sets: &[VertexSet]) -> Result<()> {
        if m > MAX_VERTICES {
            return Err(Error::UniverseTooLarge {
                m,
                cap: MAX_VERTICES,
            });
        }
        for s in sets {
            if !s.is_subset_of(VertexSet::full(m)) {
                let bad = s.minus(VertexSet::full(m)).iter().next().unwrap();
                return Err(Error::VertexOutOfRange { index: bad, m });
            }
        }
        Ok(())
    }

    fn new_raw(m: usize, maximal: Vec<VertexSet>, nonfaces: Option<Vec<VertexSet>>) -> Self {
        let mut maximal = antichain_max(maximal);
        if maximal.is_empty() {
            maximal.push(VertexSet::EMPTY);
        }
        let cache = OnceLock::new();
        if let Some(mut nf) = nonfaces {
            nf.sort_unstable();
            let _ = cache.set(nf);
        }
        Self {
            m,
            maximal,
            nonfaces: cache,
        }
    }

    pub fn from_maximal_faces(m: usize, faces: &[VertexSet]) -> Result<Self> {
        Self::check_universe(m, faces)?;
        Ok(Self::new_raw(m, faces.to_vec(), None))
    }

    /// Builds the complex whose faces are exactly the sets containing no
    /// given nonface. The input must be the minimal-nonface antichain (it
    /// is reduced here); the empty set cannot be a nonface.
    pub fn from_minimal_nonfaces(m: usize, nonfaces: &[VertexSet]) -> Result<Self> {
        Self::check_universe(m, nonfaces)?;
        if nonfaces.iter().any(|s| s.is_empty()) {
            return Err(Error::BadInput(
                "the empty set is a face of every complex".into(),
            ));
        }
        let nf = antichain_min(nonfaces.to_vec());
        // maximal faces = complements of minimal transversals of the nonfaces
        let maximal: Vec<VertexSet> = minimal_transversals(&nf)
            .into_iter()
            .map(|t| t.complement_in(m))
            .collect();
        Ok(Self::new_raw(m, maximal, Some(nf)))
    }

    /// The full simplex on `m` vertices.
    pub fn simplex(m: usize) -> Self {
        Self::new_raw(m, vec![VertexSet::full(m)], Some(Vec::new()))
    }

    /// The boundary of the simplex on `m` vertices.
    pub fn simplex_boundary(m: usize) -> Self {
        Self::from_minimal_nonfaces(m, &[VertexSet::full(m)]).expect("valid")
    }

    /// The complex `{ {} }` with `m` ghost vertices.
    pub fn empty_complex(m: usize) -> Self {
        Self::new_raw(m, vec![VertexSet::EMPTY], None)
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn maximal_faces(&self) -> &[VertexSet] {
        &self.maximal
    }

    /// Dimension: -1 for the complex `{ {} }`.
    pub fn dim(&self) -> isize {
        self.maximal.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1
    }

    pub fn is_full_simplex(&self) -> bool {
        self.maximal.len() == 1 && self.maximal[0] == VertexSet::full(self.m)
    }

    pub fn is_face(&self, i: VertexSet) -> bool {
        self.maximal.iter().any(|&f| i.is_subset_of(f))
    }

    /// Vertices of the universe that are not faces.
    pub fn ghost_vertices(&self) -> VertexSet {
        let support = self
            .maximal
            .iter()
            .fold(VertexSet::EMPTY, |acc, &f| acc.union(f));
        support.complement_in(self.m)
    }

    /// The minimal-nonface antichain `N(K)`, cached after first use.
    pub fn minimal_nonfaces(&self) -> &[VertexSet] {
        self.nonfaces.get_or_init(|| {
            let complements: Vec<VertexSet> = self
                .maximal
                .iter()
                .map(|&f| f.complement_in(self.m))
                .collect();
            let mut nf = minimal_transversals(&complements);
            nf.sort_unstable();
            nf
        })
    }

    /// Combinatorial Alexander dual on the same universe. Undefined for
    /// the full simplex.
    pub fn alexander_dual(&self) -> Result<Self> {
        if self.is_full_simplex() {
            return Err(Error::DualOfFullSimplex);
        }
        let dual_max: Vec<VertexSet> = self
            .minimal_nonfaces()
            .iter()
            .map(|&s| s.complement_in(self.m))
            .collect();
        let dual_nf: Vec<VertexSet> = self
            .maximal
            .iter()
            .map(|&f| f.complement_in(self.m))
            .collect();
        Ok(Self::new_raw(self.m, dual_max, Some(antichain_min(dual_nf))))
    }

    /// Link of a face, on the compacted universe `[m] \ I` (ghosts kept).
    pub fn link(&self, i: VertexSet) -> Result<Restriction> {
        if !self.is_face(i) {
            return Err(Error::LinkOfNonFace {
                face: i.to_string(),
            });
        }
        let faces: Vec<VertexSet> = self
            .maximal
            .iter()
            .filter(|f| i.is_subset_of(**f))
            .map(|&f| f.minus(i).compact_outside(i))
            .collect();
        let labels = i.complement_in(self.m).indices();
        Ok(Restriction {
            complex: Self::new_raw(self.m - i.len(), faces, None),
            labels,
        })
    }

    /// Full subcomplex on `J`, compacted to a universe of size `|J|`.
    pub fn full_subcomplex(&self, j: VertexSet) -> Restriction {
        let removed = j.complement_in(self.m);
        let faces: Vec<VertexSet> = self
            .maximal
            .iter()
            .map(|&f| f.intersect(j).compact_outside(removed))
            .collect();
        Restriction {
            complex: Self::new_raw(j.len(), faces, None),
            labels: j.indices(),
        }
    }

    /// The `l`-dimensional skeleton (faces of dimension at most `l`).
    pub fn skeleton(&self, l: isize) -> Result<Self> {
        if l < -1 {
            return Err(Error::BadInput(format!("skeleton dimension {l} < -1")));
        }
        let cap = (l + 1) as usize;
        let mut faces = Vec::new();
        for &f in &self.maximal {
            if f.len() <= cap {
                faces.push(f);
            } else {
                let idx = f.indices();
                let mut comb: Vec<usize> = (0..cap).collect();
                loop {
                    faces.push(VertexSet::from_indices(
                        &comb.iter().map(|&c| idx[c]).collect::<Vec<_>>(),
                    ));
                    if !crate::linalg::next_combination(&mut comb, idx.len()) {
                        break;
                    }
                }
            }
        }
        Ok(Self::new_raw(self.m, faces, None))
    }

    /// Join on the disjoint union of the universes; the second factor is
    /// shifted by `self.m`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let m = self.m + other.m;
        if m > MAX_VERTICES {
            return Err(Error::UniverseTooLarge {
                m,
                cap: MAX_VERTICES,
            });
        }
        let mut faces = Vec::with_capacity(self.maximal.len() * other.maximal.len());
        for &f in &self.maximal {
            for &g in &other.maximal {
                faces.push(f.union(VertexSet::from_bits(g.bits() << self.m)));
            }
        }
        Ok(Self::new_raw(m, faces, None))
    }

    /// Iterated simplicial wedge: vertex `i` becomes a block of
    /// `multiplicities[i]` copies, and every minimal nonface blows up to
    /// the union of the blocks of its vertices.
    pub fn wedge_multiply(&self, multiplicities: &[usize]) -> Result<Self> {
        if multiplicities.len() != self.m {
            return Err(Error::BadInput(format!(
                "expected {} multiplicities, found {}",
                self.m,
                multiplicities.len()
            )));
        }
        if let Some(i) = multiplicities.iter().position(|&l| l == 0) {
            return Err(Error::ZeroMultiplicity { index: i });
        }
        let total: usize = multiplicities.iter().sum();
        if total > MAX_VERTICES {
            return Err(Error::UniverseTooLarge {
                m: total,
                cap: MAX_VERTICES,
            });
        }
        let mut block = Vec::with_capacity(self.m);
        let mut start = 0;
        for &l in multiplicities {
            let mut b = VertexSet::EMPTY;
            for v in start..start + l {
                b = b.with(v);
            }
            block.push(b);
            start += l;
        }
        let nonfaces: Vec<VertexSet> = self
            .minimal_nonfaces()
            .iter()
            .map(|nf| {
                nf.iter()
                    .fold(VertexSet::EMPTY, |acc, v| acc.union(block[v]))
            })
            .collect();
        Self::from_minimal_nonfaces(total, &nonfaces)
    }

    /// Flag complexes are exactly those whose minimal nonfaces are edges.
    pub fn is_flag(&self) -> bool {
        self.minimal_nonfaces().iter().all(|nf| nf.len() == 2)
    }

    /// All faces as bitmasks, sorted ascending. Includes the empty face.
    pub fn all_faces(&self) -> Vec<u64> {
        let mut seen: HashSet<u64> = HashSet::new();
        for &f in &self.maximal {
            // enumerate submasks of f
            let bits = f.bits();
            let mut s = bits;
            loop {
                seen.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & bits;
            }
        }
        let mut v: Vec<u64> = seen.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// `f_vector()[k]` counts faces of cardinality `k`, so the vector
    /// starts `(f_{-1}, f_0, ...) = (1, #vertices, #edges, ...)`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dim() + 2) as usize];
        for f in self.all_faces() {
            counts[f.count_ones() as usize] += 1;
        }
        counts
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex on [{}] with maximal faces", self.m)?;
        for face in &self.maximal {
            write!(f, " {face}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(idx: &[usize]) -> VertexSet {
        VertexSet::from_indices(idx)
    }

    fn four_cycle() -> SimplicialComplex {
        SimplicialComplex::from_minimal_nonfaces(4, &[vs(&[0, 2]), vs(&[1, 3])]).unwrap()
    }

    #[test]
    fn four_cycle_from_nonfaces() {
        let k = four_cycle();
        let expect = vec![vs(&[0, 1]), vs(&[1, 2]), vs(&[2, 3]), vs(&[0, 3])];
        assert_eq!(k.maximal_faces(), antichain_max(expect).as_slice());
        assert!(k.is_face(vs(&[0, 1])));
        assert!(!k.is_face(vs(&[0, 2])));
        assert!(k.is_face(VertexSet::EMPTY));
    }

    #[test]
    fn simplex_and_ghosts() {
        let d = SimplicialComplex::simplex(5);
        assert!(d.is_full_simplex());
        assert!(d.is_face(vs(&[0, 2, 4])));
        assert!(d.minimal_nonfaces().is_empty());

        let e = SimplicialComplex::from_maximal_faces(3, &[]).unwrap();
        assert_eq!(e.maximal_faces(), &[VertexSet::EMPTY]);
        assert_eq!(e.ghost_vertices(), vs(&[0, 1, 2]));
        assert_eq!(e.dim(), -1);
        assert_eq!(
            e.minimal_nonfaces(),
            &[vs(&[0]), vs(&[1]), vs(&[2])]
        );
    }

    #[test]
    fn vertex_out_of_range_rejected() {
        assert!(SimplicialComplex::from_maximal_faces(3, &[vs(&[3])]).is_err());
        assert!(SimplicialComplex::from_minimal_nonfaces(2, &[vs(&[5])]).is_err());
    }

    #[test]
    fn dual_of_boundary_is_empty_complex() {
        for m in 2..6 {
            let b = SimplicialComplex::simplex_boundary(m);
            let d = b.alexander_dual().unwrap();
            assert_eq!(d, SimplicialComplex::empty_complex(m));
        }
    }

    #[test]
    fn dual_of_four_cycle() {
        let d = four_cycle().alexander_dual().unwrap();
        // two disjoint edges {0,2} and {1,3}
        assert_eq!(d.maximal_faces(), &[vs(&[0, 2]), vs(&[1, 3])]);
        // brute force over all 16 subsets: I in dual iff complement not a face
        let k = four_cycle();
        for bits in 0..16u64 {
            let i = VertexSet::from_bits(bits);
            let in_dual = d.is_face(i);
            let comp_in_k = k.is_face(i.complement_in(4));
            assert_eq!(in_dual, !comp_in_k, "subset {i}");
        }
    }

    #[test]
    fn dual_of_full_simplex_fails() {
        assert!(matches!(
            SimplicialComplex::simplex(4).alexander_dual(),
            Err(Error::DualOfFullSimplex)
        ));
    }

    #[test]
    fn double_dual_small() {
        let k = four_cycle();
        assert_eq!(k.alexander_dual().unwrap().alexander_dual().unwrap(), k);
    }

    #[test]
    fn link_in_four_cycle() {
        let r = four_cycle().link(vs(&[0])).unwrap();
        // universe {1,2,3} -> {0,1,2}; faces are old {1} and {3}
        assert_eq!(r.labels, vec![1, 2, 3]);
        assert_eq!(r.complex.maximal_faces(), &[vs(&[0]), vs(&[2])]);
        assert_eq!(r.complex.ghost_vertices(), vs(&[1]));
    }

    #[test]
    fn link_of_nonface_fails() {
        assert!(four_cycle().link(vs(&[0, 2])).is_err());
    }

    #[test]
    fn full_subcomplex_on_everything_is_identity() {
        let k = four_cycle();
        let r = k.full_subcomplex(VertexSet::full(4));
        assert_eq!(r.complex, k);
        assert_eq!(r.labels, vec![0, 1, 2, 3]);
    }

    #[test]
    fn skeleton_of_simplex_is_boundary() {
        for m in 2..6 {
            let s = SimplicialComplex::simplex(m)
                .skeleton(m as isize - 2)
                .unwrap();
            assert_eq!(s, SimplicialComplex::simplex_boundary(m));
        }
    }

    #[test]
    fn minimal_nonfaces_examples() {
        assert_eq!(
            SimplicialComplex::simplex_boundary(4).minimal_nonfaces(),
            &[VertexSet::full(4)]
        );
        assert_eq!(
            four_cycle().minimal_nonfaces(),
            &[vs(&[0, 2]), vs(&[1, 3])]
        );
        assert!(SimplicialComplex::simplex(4).minimal_nonfaces().is_empty());
    }

    #[test]
    fn join_examples() {
        // cone = join with a point
        let pt = SimplicialComplex::simplex(1);
        let cone = pt.join(&four_cycle()).unwrap();
        assert_eq!(cone.dim(), 2);
        assert!(cone.is_face(vs(&[0, 1, 2]))); // apex 0 + edge {0,1} shifted
        // join of boundaries: minimal nonfaces are the two factor universes
        let a = SimplicialComplex::simplex_boundary(2);
        let b = SimplicialComplex::simplex_boundary(3);
        let j = a.join(&b).unwrap();
        assert_eq!(
            j.minimal_nonfaces(),
            &[vs(&[0, 1]), vs(&[2, 3, 4])]
        );
        // S^0 * S^0 = 4-cycle (as the cycle 0-2-1-3)
        let s0 = SimplicialComplex::simplex_boundary(2);
        let c = s0.join(&s0).unwrap();
        assert_eq!(
            c.minimal_nonfaces(),
            &[vs(&[0, 1]), vs(&[2, 3])]
        );
        assert_eq!(c.maximal_faces().len(), 4);
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn wedge_identity_and_blowup() {
        let k = four_cycle();
        assert_eq!(k.wedge_multiply(&[1, 1, 1, 1]).unwrap(), k);

        // doubling both vertices of S^0 gives the boundary pattern on 4
        let s0 = SimplicialComplex::simplex_boundary(2);
        let w = s0.wedge_multiply(&[2, 2]).unwrap();
        assert_eq!(w.minimal_nonfaces(), &[VertexSet::full(4)]);
        assert_eq!(w, SimplicialComplex::simplex_boundary(4));

        assert!(k.wedge_multiply(&[1, 0, 1, 1]).is_err());
    }

    #[test]
    fn wedge_stage_composition() {
        // wedging in two stages equals wedging once with composed counts
        let k = four_cycle();
        let once = k.wedge_multiply(&[2, 1, 2, 1]).unwrap();
        let staged = k
            .wedge_multiply(&[2, 1, 1, 1])
            .unwrap()
            // universe now 0a,0b,1,2,3; double old vertex 2 (now index 3)
            .wedge_multiply(&[1, 1, 1, 2, 1])
            .unwrap();
        assert_eq!(staged, once);
    }

    #[test]
    fn flagness() {
        assert!(four_cycle().is_flag());
        assert!(!SimplicialComplex::simplex_boundary(3).is_flag());
        // pentagon boundary: nonfaces are the five diagonals
        let pent = SimplicialComplex::from_maximal_faces(
            5,
            &[
                vs(&[0, 1]),
                vs(&[1, 2]),
                vs(&[2, 3]),
                vs(&[3, 4]),
                vs(&[0, 4]),
            ],
        )
        .unwrap();
        assert!(pent.is_flag());
        assert_eq!(pent.minimal_nonfaces().len(), 5);
    }

    #[test]
    fn f_vectors() {
        let pent = SimplicialComplex::from_maximal_faces(
            5,
            &[
                vs(&[0, 1]),
                vs(&[1, 2]),
                vs(&[2, 3]),
                vs(&[3, 4]),
                vs(&[0, 4]),
            ],
        )
        .unwrap();
        assert_eq!(pent.f_vector(), vec![1, 5, 5]);
        assert_eq!(SimplicialComplex::simplex(3).f_vector(), vec![1, 3, 3, 1]);
        assert_eq!(SimplicialComplex::empty_complex(7).f_vector(), vec![1]);
    }

    #[test]
    fn max_faces_and_nonfaces_determine_each_other() {
        let k = four_cycle();
        let rebuilt =
            SimplicialComplex::from_minimal_nonfaces(4, k.minimal_nonfaces()).unwrap();
        assert_eq!(rebuilt, k);
        let d = k.alexander_dual().unwrap();
        let dual_nf: Vec<VertexSet> = k
            .maximal_faces()
            .iter()
            .map(|f| f.complement_in(4))
            .collect();
        assert_eq!(d.minimal_nonfaces(), antichain_min(dual_nf).as_slice());
    }

    #[test]
    fn compact_relabeling() {
        let s = vs(&[1, 4, 6]);
        let removed = vs(&[0, 5]);
        assert_eq!(s.compact_outside(removed), vs(&[0, 3, 4]));
    }
}
