//! Dense face-bitmap representation for tiny universes (m <= 7).
//!
//! A complex on [m] is one u128 whose bit `s` says whether the subset
//! with mask `s` is a face. Links, full subcomplexes, Alexander duals and
//! GF(2) Betti numbers become short bit loops, which is what makes the
//! exhaustive duality sweeps over all complexes on six vertices feasible.
//! Cross-checked against the antichain representation in the tests.

use super::{SimplicialComplex, VertexSet};

pub const MAX_DENSE_M: usize = 7;

/// Complex on at most 7 vertices as a face-indicator bitmap.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct DenseComplex {
    pub m: u8,
    pub faces: u128,
}

#[inline]
fn compact_mask(mut s: u32, keep: u32) -> u32 {
    // software pext: pack the bits of s at the positions of keep
    let mut out = 0u32;
    let mut k = keep;
    let mut pos = 0;
    while k != 0 {
        let low = k & k.wrapping_neg();
        if s & low != 0 {
            out |= 1 << pos;
        }
        s &= !low;
        k &= k - 1;
        pos += 1;
    }
    out
}

impl DenseComplex {
    pub fn new(m: usize, faces: u128) -> Self {
        assert!(m <= MAX_DENSE_M);
        debug_assert!(faces & 1 == 1, "the empty set must be a face");
        Self { m: m as u8, faces }
    }

    pub fn from_complex(k: &SimplicialComplex) -> Option<Self> {
        let m = k.vertex_count();
        if m > MAX_DENSE_M {
            return None;
        }
        let mut faces = 0u128;
        for &f in k.maximal_faces() {
            let bits = f.bits() as u32;
            let mut s = bits;
            loop {
                faces |= 1 << s;
                if s == 0 {
                    break;
                }
                s = (s - 1) & bits;
            }
        }
        Some(Self::new(m, faces))
    }

    pub fn to_complex(self) -> SimplicialComplex {
        let maximal: Vec<VertexSet> = self
            .maximal_faces()
            .into_iter()
            .map(|s| VertexSet::from_bits(s as u64))
            .collect();
        SimplicialComplex::from_maximal_faces(self.m as usize, &maximal).expect("valid universe")
    }

    #[inline]
    pub fn is_face(self, s: u32) -> bool {
        self.faces >> s & 1 == 1
    }

    #[inline]
    pub fn full_mask(self) -> u32 {
        (1u32 << self.m) - 1
    }

    pub fn is_full_simplex(self) -> bool {
        self.is_face(self.full_mask())
    }

    pub fn maximal_faces(self) -> Vec<u32> {
        let full = self.full_mask();
        (0..=full)
            .filter(|&s| {
                self.is_face(s) && {
                    let mut rest = full & !s;
                    let mut maximal = true;
                    while rest != 0 {
                        let v = rest & rest.wrapping_neg();
                        if self.is_face(s | v) {
                            maximal = false;
                            break;
                        }
                        rest &= rest - 1;
                    }
                    maximal
                }
            })
            .collect()
    }

    pub fn minimal_nonfaces(self) -> Vec<u32> {
        let full = self.full_mask();
        (1..=full)
            .filter(|&s| {
                !self.is_face(s) && {
                    let mut sub = s;
                    let mut minimal = true;
                    while sub != 0 {
                        let v = sub & sub.wrapping_neg();
                        if !self.is_face(s & !v) {
                            minimal = false;
                            break;
                        }
                        sub &= sub - 1;
                    }
                    minimal
                }
            })
            .collect()
    }

    /// Alexander dual (caller must exclude the full simplex).
    pub fn alexander_dual(self) -> Self {
        let full = self.full_mask();
        let mut faces = 0u128;
        for s in 0..=full {
            if !self.is_face(full & !s) {
                faces |= 1 << s;
            }
        }
        Self {
            m: self.m,
            faces,
        }
    }

    /// Link of the face `i`, compacted onto the complement universe.
    pub fn link(self, i: u32) -> Self {
        debug_assert!(self.is_face(i));
        let keep = self.full_mask() & !i;
        let mut faces = 0u128;
        let mut t = keep;
        loop {
            if self.is_face(t | i) {
                faces |= 1 << compact_mask(t, keep);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & keep;
        }
        Self {
            m: (self.m as u32 - i.count_ones()) as u8,
            faces,
        }
    }

    /// Full subcomplex on `j`, compacted onto a universe of size |j|.
    pub fn full_subcomplex(self, j: u32) -> Self {
        let mut faces = 0u128;
        let mut t = j;
        loop {
            if self.is_face(t) {
                faces |= 1 << compact_mask(t, j);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & j;
        }
        Self {
            m: j.count_ones() as u8,
            faces,
        }
    }

    /// Reduced GF(2) Betti numbers; index 0 holds `b_{-1}`.
    pub fn betti_gf2(self) -> Vec<usize> {
        let full = self.full_mask();
        // faces grouped by cardinality; level c lists masks of c-sets
        let mut levels: Vec<Vec<u32>> = vec![Vec::new(); self.m as usize + 1];
        for s in 0..=full {
            if self.is_face(s) {
                levels[s.count_ones() as usize].push(s);
            }
        }
        while levels.len() > 1 && levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
        }
        let top = levels.len(); // cardinalities 0..top-1 present
        // rank of each boundary map between consecutive levels
        let mut ranks = vec![0usize; top + 1];
        for c in 1..top {
            let rows = &levels[c - 1];
            let mut cols: Vec<u64> = Vec::with_capacity(levels[c].len());
            for &f in &levels[c] {
                let mut col = 0u64;
                let mut rest = f;
                while rest != 0 {
                    let v = rest & rest.wrapping_neg();
                    let sub = f & !v;
                    let idx = rows.binary_search(&sub).expect("closed under subsets");
                    col |= 1 << idx;
                    rest &= rest - 1;
                }
                cols.push(col);
            }
            ranks[c] = rank_u64_columns(&mut cols);
        }
        (0..top)
            .map(|c| levels[c].len() - ranks[c] - ranks[c + 1])
            .collect()
    }
}

/// Rank of a set of GF(2) column vectors packed into single u64 words
/// (xor basis keyed by lowest set bit).
pub fn rank_u64_columns(cols: &mut [u64]) -> usize {
    let mut pivot_at = [0u64; 64];
    let mut rank = 0;
    for &mut col in cols {
        let mut c = col;
        while c != 0 {
            let b = c.trailing_zeros() as usize;
            if pivot_at[b] != 0 {
                c ^= pivot_at[b];
            } else {
                pivot_at[b] = c;
                rank += 1;
                break;
            }
        }
    }
    rank
}

/// Enumerates every simplicial complex on the universe `[m]` (m <= 6) as
/// a face bitmap in a u64, in increasing bitmap order. The empty set is a
/// face of each; the count for m = 6 is 7 828 353.
pub fn enumerate_face_bitmaps(m: usize) -> Vec<u64> {
    assert!(m <= 6, "exhaustive enumeration is desk-scale only");
    let full = (1u32 << m) - 1;
    let mut out = Vec::new();
    // decide masks 1..=full in numeric order; numeric order refines the
    // subset order, so downward closure is checkable on the fly
    let mut stack: Vec<(u32, u64)> = vec![(1, 1)]; // (next mask, bitmap)
    while let Some((next, bitmap)) = stack.pop() {
        if next > full {
            out.push(bitmap);
            continue;
        }
        // excluding `next` is always allowed
        stack.push((next + 1, bitmap));
        // including it requires all immediate subsets to be faces
        let mut ok = true;
        let mut rest = next;
        while rest != 0 {
            let v = rest & rest.wrapping_neg();
            if bitmap >> (next & !v) & 1 == 0 {
                ok = false;
                break;
            }
            rest &= rest - 1;
        }
        if ok {
            stack.push((next + 1, bitmap | (1u64 << next)));
        }
    }
    out
}
