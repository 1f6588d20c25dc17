//! Bigraded Betti numbers of the Stanley-Reisner ring via the Hochster
//! formula, plus the link-based route that computes the table of the
//! Alexander dual from links in the original complex.
//!
//! Degrees are stored as `(i, 2j)` pairs, keeping the doubled grading
//! explicit so no off-by-two convention can creep in.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::{betti_from_levels, levels_from_masks, reduced_betti, Field};

/// Default cap on the vertex count for full-subcomplex sweeps.
pub const DEFAULT_HOCHSTER_CAP: usize = 20;

/// Table of bigraded Betti numbers `beta^{-i, 2j}`, keyed by `(i, 2j)`.
/// Zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub m: usize,
    pub field: Field,
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn new(m: usize, field: Field) -> Self {
        Self {
            m,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, i: usize, deg: usize, value: usize) {
        if value > 0 {
            *self.entries.entry((i, deg)).or_insert(0) += value;
        }
    }

    /// `beta^{-i, deg}` with `deg = 2j`.
    pub fn get(&self, i: usize, deg: usize) -> usize {
        self.entries.get(&(i, deg)).copied().unwrap_or(0)
    }

    /// Nonzero entries in sorted order as `((i, 2j), value)`.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &usize)> {
        self.entries.iter()
    }

    /// Marginal `beta^{-i} = sum_j beta^{-i,2j}`.
    pub fn beta_marginal(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((ii, _), _)| *ii == i)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn max_i(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    fn merge(mut self, other: Self) -> Self {
        for ((i, d), v) in other.entries {
            *self.entries.entry((i, d)).or_insert(0) += v;
        }
        self
    }
}

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "bigraded Betti numbers over {} (i, 2j -> value):", self.field)?;
        for (&(i, deg), v) in &self.entries {
            writeln!(f, "  beta^(-{i}, {deg})  [j = {}]  = {v}", deg / 2)?;
        }
        Ok(())
    }
}

/// Hochster formula with the default vertex cap.
pub fn hochster_betti(k: &SimplicialComplex, field: Field) -> Result<BettiTable> {
    hochster_betti_capped(k, field, DEFAULT_HOCHSTER_CAP)
}

/// `beta^{-i,2j}(K) = sum over j-subsets J of dim H^{j-i-1}(K_J)`.
///
/// The empty subset contributes the `(0,0) = 1` entry; subsets that are
/// faces have acyclic full subcomplexes and are skipped. The sweep over
/// the remaining subsets runs in parallel and merges by addition, so the
/// result is deterministic for any thread count.
pub fn hochster_betti_capped(
    k: &SimplicialComplex,
    field: Field,
    cap: usize,
) -> Result<BettiTable> {
    let m = k.vertex_count();
    if m > cap {
        return Err(Error::CapExceeded { m, cap });
    }
    let all_faces = k.all_faces();
    let table = (0u64..(1u64 << m))
        .into_par_iter()
        .fold(
            || BettiTable::new(m, field),
            |mut acc, j_bits| {
                if all_faces.binary_search(&j_bits).is_ok() {
                    return acc; // faces contribute nothing beyond (0,0)
                }
                let j = j_bits.count_ones() as usize;
                let masks: Vec<u64> = all_faces
                    .iter()
                    .copied()
                    .filter(|f| f & !j_bits == 0)
                    .collect();
                let levels = levels_from_masks(masks);
                let bv = betti_from_levels(&levels, field);
                for p in -1..=bv.max_degree() {
                    let b = bv.get(p);
                    if b > 0 {
                        // H^{j-i-1} contributes at i = j - 1 - p
                        let i = (j as isize - 1 - p) as usize;
                        acc.add(i, 2 * j, b);
                    }
                }
                acc
            },
        )
        .reduce(|| BettiTable::new(m, field), BettiTable::merge);
    let mut table = table;
    table.add(0, 0, 1);
    Ok(table)
}

/// A table has a linear resolution in degree `r` when, for every `i > 0`,
/// all mass sits at `j = r + i + 1`. (`r = -1` covers the all-ghost
/// complexes dual to simplices.)
pub fn has_linear_resolution(table: &BettiTable, r: isize) -> bool {
    table
        .entries()
        .all(|(&(i, deg), _)| i == 0 || deg as isize == 2 * (r + i as isize + 1))
}

/// Computes the table of the Alexander dual of `k` through links in `k`:
/// subsets whose complement is a face contribute link homology
/// `dim H_{i-2}(link_K([m] - J))`; the rest fall back to subcomplex
/// homology in the dual. Must agree entrywise with
/// `hochster_betti(k.alexander_dual())`.
pub fn betti_via_links(k: &SimplicialComplex, field: Field) -> Result<BettiTable> {
    let m = k.vertex_count();
    if m > DEFAULT_HOCHSTER_CAP {
        return Err(Error::CapExceeded {
            m,
            cap: DEFAULT_HOCHSTER_CAP,
        });
    }
    let dual = k.alexander_dual()?;
    let table = (0u64..(1u64 << m))
        .into_par_iter()
        .fold(
            || BettiTable::new(m, field),
            |mut acc, j_bits| {
                let j = j_bits.count_ones() as usize;
                let subset = VertexSet::from_bits(j_bits);
                let complement = subset.complement_in(m);
                if k.is_face(complement) {
                    let link = k.link(complement).expect("checked face").complex;
                    let bv = reduced_betti(&link, field);
                    for p in -1..=bv.max_degree() {
                        let b = bv.get(p);
                        if b > 0 {
                            // dim H_{i-2}(link) lands at (i, 2j), i = p + 2
                            acc.add((p + 2) as usize, 2 * j, b);
                        }
                    }
                } else {
                    let sub = dual.full_subcomplex(subset).complex;
                    let bv = reduced_betti(&sub, field);
                    for p in -1..=bv.max_degree() {
                        let b = bv.get(p);
                        if b > 0 {
                            let i = (j as isize - 1 - p) as usize;
                            acc.add(i, 2 * j, b);
                        }
                    }
                }
                acc
            },
        )
        .reduce(|| BettiTable::new(m, field), BettiTable::merge);
    Ok(table)
}

/// Residuals `beta^{-i,2j} - f_{d-i, m-j}` between a Betti table and a
/// polytope's face counts (`fnl` maps `(n, l)` to the number of
/// n-dimensional proper faces with l vertices). All-zero exactly when the
/// table realizes the polytope's f-data.
pub fn fnl_residual(
    table: &BettiTable,
    fnl: &BTreeMap<(isize, usize), usize>,
    d: usize,
    m: usize,
) -> BTreeMap<(usize, usize), i64> {
    let mut out = BTreeMap::new();
    let mut keys: Vec<(usize, usize)> = table
        .entries()
        .filter(|(&(i, _), _)| i > 0)
        .map(|(&k, _)| k)
        .collect();
    for (&(n, l), _) in fnl {
        // (n, l) corresponds to i = d - n, j = m - l
        if n <= d as isize - 1 {
            let i = (d as isize - n) as usize;
            let j = m - l;
            keys.push((i, 2 * j));
        }
    }
    keys.sort_unstable();
    keys.dedup();
    for (i, deg) in keys {
        let j = deg / 2;
        let beta = table.get(i, deg) as i64;
        let f = fnl
            .get(&(d as isize - i as isize, m - j))
            .copied()
            .unwrap_or(0) as i64;
        if beta - f != 0 {
            out.insert((i, deg), beta - f);
        } else {
            out.insert((i, deg), 0);
        }
    }
    out
}
