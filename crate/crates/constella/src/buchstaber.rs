//! Real Buchstaber invariant by exact GF(2) subgroup search, the xi-map
//! lower-bound criterion, eta certificates on Gale diagrams, and the
//! bounds report for the torus invariant.
//!
//! A rank-r subgroup of Z_2^m is a generator matrix with m rows in
//! F_2^r; it acts freely on the real moment-angle complex iff for every
//! maximal face I the rows outside I have full rank r. The search
//! enumerates one canonical matrix per subgroup (first-occurrence
//! echelon form) and prunes on per-face rank deficits. Witnesses are
//! re-validated independently of the search; refutations carry the
//! explored node count.

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::gale::PointConfiguration;
use crate::linalg::separating_direction;
use crate::polytope::Polytope;
use crate::rational::Rational;
use num_traits::{Signed, Zero};

pub const DEFAULT_SEARCH_BUDGET: u64 = 200_000_000;
pub const MAX_SEARCH_RANK: usize = 16;

/// Generator matrix of a subgroup of `Z_2^m`: row `v` is the image of
/// vertex `v` in `F_2^rank`, packed into the low bits of a u32.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupWitness {
    pub m: usize,
    pub rank: usize,
    pub rows: Vec<u32>,
}

/// Exhaustion proof: no witness of this rank exists; `nodes` is the size
/// of the explored canonical search space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefutationCert {
    pub rank: usize,
    pub nodes: u64,
}

/// Result of the exact real-invariant search.
#[derive(Debug, Clone)]
pub struct SRealOutcome {
    /// Best verified witness rank (0 when none, e.g. the full simplex).
    pub lower: usize,
    /// Best proven upper bound on s_R.
    pub upper: usize,
    /// lower == upper: the value is determined.
    pub exact: bool,
    pub witness: Option<SubgroupWitness>,
    pub refutations: Vec<RefutationCert>,
    pub nodes: u64,
}

impl SRealOutcome {
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.lower)
    }
}

/// Checks the freeness condition directly: for every maximal face the
/// rows outside it span `F_2^rank`. Independent of the search internals.
pub fn validate_witness(k: &SimplicialComplex, w: &SubgroupWitness) -> bool {
    if w.m != k.vertex_count() || w.rows.len() != w.m || w.rank > MAX_SEARCH_RANK {
        return false;
    }
    if w.rows.iter().any(|&g| g >= 1 << w.rank) {
        return false;
    }
    k.maximal_faces().iter().all(|f| {
        let mut basis = [0u32; MAX_SEARCH_RANK];
        let mut rank = 0;
        for v in 0..w.m {
            if !f.contains(v) {
                rank += xor_insert(&mut basis, w.rows[v]);
            }
        }
        rank == w.rank
    })
}

/// Inserts into an xor basis keyed by lowest set bit; returns 1 if the
/// vector was independent.
#[inline]
fn xor_insert(basis: &mut [u32; MAX_SEARCH_RANK], mut g: u32) -> usize {
    while g != 0 {
        let b = g.trailing_zeros() as usize;
        if basis[b] == 0 {
            basis[b] = g;
            return 1;
        }
        g ^= basis[b];
    }
    0
}

enum RankSearch {
    Found(Vec<u32>),
    Exhausted(u64),
    OutOfBudget(u64),
}

struct FaceState {
    face: VertexSet,
    basis: [u32; MAX_SEARCH_RANK],
    rank: usize,
}

struct Search {
    m: usize,
    r: usize,
    faces: Vec<FaceState>,
    /// outside_suffix[v][f] = #{u >= v : u not in face f}
    outside_suffix: Vec<Vec<usize>>,
    rows: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn new(k: &SimplicialComplex, r: usize, budget: u64) -> Self {
        let m = k.vertex_count();
        let faces: Vec<FaceState> = k
            .maximal_faces()
            .iter()
            .map(|&face| FaceState {
                face,
                basis: [0; MAX_SEARCH_RANK],
                rank: 0,
            })
            .collect();
        let mut outside_suffix = vec![vec![0usize; faces.len()]; m + 1];
        for v in (0..m).rev() {
            for (fi, fs) in faces.iter().enumerate() {
                outside_suffix[v][fi] =
                    outside_suffix[v + 1][fi] + usize::from(!fs.face.contains(v));
            }
        }
        Self {
            m,
            r,
            faces,
            outside_suffix,
            rows: Vec::with_capacity(m),
            nodes: 0,
            budget,
        }
    }

    fn run(&mut self) -> RankSearch {
        match self.dfs(0, 0) {
            Some(true) => RankSearch::Found(self.rows.clone()),
            Some(false) => RankSearch::Exhausted(self.nodes),
            None => RankSearch::OutOfBudget(self.nodes),
        }
    }

    /// Some(true) = witness found (rows filled), Some(false) = exhausted,
    /// None = budget blown.
    fn dfs(&mut self, v: usize, pivots: usize) -> Option<bool> {
        if v == self.m {
            return Some(self.faces.iter().all(|f| f.rank == self.r));
        }
        // candidates: everything in the span of the pivots used so far,
        // plus the next fresh pivot when available
        let span = 1u32 << pivots;
        let top = if pivots < self.r { span } else { span - 1 };
        for g in 0..=top {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let next_pivots = pivots + usize::from(g == span);
            // update face states where v is outside, with undo log
            let mut touched: Vec<(usize, usize)> = Vec::new();
            for (fi, fs) in self.faces.iter_mut().enumerate() {
                if !fs.face.contains(v) && g != 0 {
                    let mut x = g;
                    while x != 0 {
                        let b = x.trailing_zeros() as usize;
                        if fs.basis[b] == 0 {
                            fs.basis[b] = x;
                            fs.rank += 1;
                            touched.push((fi, b));
                            break;
                        }
                        x ^= fs.basis[b];
                    }
                }
            }
            // prune: every face must still be able to reach rank r
            let feasible = self.faces.iter().enumerate().all(|(fi, fs)| {
                fs.rank + self.outside_suffix[v + 1][fi].min(self.r) >= self.r
            });
            if feasible {
                self.rows.push(g);
                match self.dfs(v + 1, next_pivots) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
                self.rows.pop();
            }
            for (fi, b) in touched {
                self.faces[fi].basis[b] = 0;
                self.faces[fi].rank -= 1;
            }
        }
        Some(false)
    }
}

fn search_rank(k: &SimplicialComplex, r: usize, budget: u64) -> RankSearch {
    Search::new(k, r, budget).run()
}

/// Largest rank `r <= r_max` of a subgroup acting freely, searched from
/// the dimension bound downwards so refutations certify exactness.
pub fn s_real_exact(k: &SimplicialComplex, r_max: usize) -> SRealOutcome {
    s_real_exact_with_budget(k, r_max, DEFAULT_SEARCH_BUDGET)
}

pub fn s_real_exact_with_budget(
    k: &SimplicialComplex,
    r_max: usize,
    budget: u64,
) -> SRealOutcome {
    let m = k.vertex_count();
    if k.is_full_simplex() {
        return SRealOutcome {
            lower: 0,
            upper: 0,
            exact: true,
            witness: None,
            refutations: Vec::new(),
            nodes: 0,
        };
    }
    let dim_ub = ((m as isize - k.dim() - 1) as usize).min(MAX_SEARCH_RANK);
    let start = dim_ub.min(r_max);
    let mut upper = dim_ub;
    let mut refutations = Vec::new();
    let mut total_nodes = 0u64;
    for r in (1..=start).rev() {
        match search_rank(k, r, budget.saturating_sub(total_nodes)) {
            RankSearch::Found(rows) => {
                let witness = SubgroupWitness { m, rank: r, rows };
                assert!(
                    validate_witness(k, &witness),
                    "search produced an invalid witness"
                );
                return SRealOutcome {
                    lower: r,
                    upper,
                    exact: r == upper,
                    witness: Some(witness),
                    refutations,
                    nodes: total_nodes,
                };
            }
            RankSearch::Exhausted(nodes) => {
                total_nodes += nodes;
                refutations.push(RefutationCert { rank: r, nodes });
                upper = upper.min(r - 1);
            }
            RankSearch::OutOfBudget(nodes) => {
                total_nodes += nodes;
                // cannot conclude anything at this rank; report what is known
                return SRealOutcome {
                    lower: ascending_lower_bound(k, r, budget),
                    upper,
                    exact: false,
                    witness: None,
                    refutations,
                    nodes: total_nodes,
                };
            }
        }
    }
    // no rank >= 1 admits a witness
    SRealOutcome {
        lower: 0,
        upper,
        exact: upper == 0,
        witness: None,
        refutations,
        nodes: total_nodes,
    }
}

fn ascending_lower_bound(k: &SimplicialComplex, below: usize, budget: u64) -> usize {
    let mut best = 0;
    for r in 1..below {
        match search_rank(k, r, budget) {
            RankSearch::Found(_) => best = r,
            _ => break,
        }
    }
    best
}

/// All minimal linear dependences of odd cardinality in `Z_2^k \ {0}`:
/// sets summing to zero with every proper subset independent. Each is
/// returned sorted ascending; sizes range over odd l <= k+1.
pub fn minimal_odd_dependences(k: usize) -> Result<Vec<Vec<u32>>> {
    if k > 6 {
        return Err(Error::CapExceeded { m: k, cap: 6 });
    }
    let max_vec = (1u32 << k) - 1;
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut l = 3;
    while l <= k + 1 {
        // independent increasing prefixes of length l-1; the sum closes
        // the circuit and must exceed the maximum for canonical order
        let mut chosen: Vec<u32> = Vec::with_capacity(l - 1);
        fn dfs(
            start: u32,
            need: usize,
            max_vec: u32,
            chosen: &mut Vec<u32>,
            basis: [u32; 8],
            out: &mut Vec<Vec<u32>>,
        ) {
            if need == 0 {
                let sum = chosen.iter().fold(0u32, |a, &b| a ^ b);
                if sum > *chosen.last().unwrap() {
                    let mut dep = chosen.clone();
                    dep.push(sum);
                    out.push(dep);
                }
                return;
            }
            for a in start..=max_vec {
                // independence check via the xor basis
                let mut x = a;
                let mut b = basis;
                let mut independent = false;
                while x != 0 {
                    let bit = x.trailing_zeros() as usize;
                    if b[bit] == 0 {
                        b[bit] = x;
                        independent = true;
                        break;
                    }
                    x ^= b[bit];
                }
                if independent {
                    chosen.push(a);
                    dfs(a + 1, need - 1, max_vec, chosen, b, out);
                    chosen.pop();
                }
            }
        }
        dfs(1, l - 1, max_vec, &mut chosen, [0u32; 8], &mut out);
        l += 2;
    }
    out.sort();
    Ok(out)
}

/// A Prop-9 style certificate: an assignment of a minimal nonface to
/// every nonzero vector of `Z_2^k` such that each odd minimal dependence
/// has empty total intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiMap {
    pub k: usize,
    /// `assign[a - 1]` is the nonface for the vector with binary value a.
    pub assign: Vec<VertexSet>,
}

/// Validates a xi-map against the full odd-dependence list.
pub fn validate_xi(k: &SimplicialComplex, xi: &XiMap) -> Result<bool> {
    let deps = minimal_odd_dependences(xi.k)?;
    if xi.assign.len() != (1 << xi.k) - 1 {
        return Ok(false);
    }
    let nonfaces = k.minimal_nonfaces();
    if !xi.assign.iter().all(|s| nonfaces.contains(s)) {
        return Ok(false);
    }
    Ok(deps.iter().all(|dep| {
        dep.iter()
            .fold(VertexSet::full(k.vertex_count()), |acc, &a| {
                acc.intersect(xi.assign[(a - 1) as usize])
            })
            .is_empty()
    }))
}

/// Search outcome for the xi-criterion: a certificate or an exhausted
/// search tree.
#[derive(Debug, Clone)]
pub struct XiSearch {
    pub map: Option<XiMap>,
    pub nodes: u64,
    pub exhausted: bool,
}

/// Backtracking search for a xi-map; a found map certifies
/// `s_R(K) >= k`, and by the iff criterion an exhausted search refutes
/// it.
pub fn s_real_lower_via_xi(k: &SimplicialComplex, kk: usize) -> Result<XiSearch> {
    s_real_lower_via_xi_budget(k, kk, DEFAULT_SEARCH_BUDGET)
}

pub fn s_real_lower_via_xi_budget(
    k: &SimplicialComplex,
    kk: usize,
    budget: u64,
) -> Result<XiSearch> {
    if kk == 0 || kk > 6 {
        return Err(Error::CapExceeded { m: kk, cap: 6 });
    }
    let deps = minimal_odd_dependences(kk)?;
    let slots = (1usize << kk) - 1;
    // dependences indexed by their largest element so constraints fire
    // as soon as the last participant is assigned
    let mut deps_by_max: Vec<Vec<&[u32]>> = vec![Vec::new(); slots + 1];
    for d in &deps {
        deps_by_max[*d.last().unwrap() as usize].push(d);
    }
    let nonfaces: Vec<VertexSet> = k.minimal_nonfaces().to_vec();
    let m = k.vertex_count();
    let mut assign: Vec<VertexSet> = Vec::with_capacity(slots);
    let mut nodes = 0u64;

    fn dfs(
        a: usize,
        slots: usize,
        m: usize,
        nonfaces: &[VertexSet],
        deps_by_max: &[Vec<&[u32]>],
        assign: &mut Vec<VertexSet>,
        nodes: &mut u64,
        budget: u64,
    ) -> Option<bool> {
        if a > slots {
            return Some(true);
        }
        for &nf in nonfaces {
            *nodes += 1;
            if *nodes > budget {
                return None;
            }
            assign.push(nf);
            let ok = deps_by_max[a].iter().all(|dep| {
                dep.iter()
                    .fold(VertexSet::full(m), |acc, &x| {
                        acc.intersect(assign[(x - 1) as usize])
                    })
                    .is_empty()
            });
            if ok {
                match dfs(a + 1, slots, m, nonfaces, deps_by_max, assign, nodes, budget) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            assign.pop();
        }
        Some(false)
    }

    let result = dfs(
        1,
        slots,
        m,
        &nonfaces,
        &deps_by_max,
        &mut assign,
        &mut nodes,
        budget,
    );
    match result {
        Some(true) => {
            let map = XiMap { k: kk, assign };
            debug_assert!(validate_xi(k, &map)?);
            Ok(XiSearch {
                map: Some(map),
                nodes,
                exhausted: false,
            })
        }
        Some(false) => Ok(XiSearch {
            map: None,
            nodes,
            exhausted: true,
        }),
        None => Ok(XiSearch {
            map: None,
            nodes,
            exhausted: false,
        }),
    }
}

/// Checks the hemisphere-cover certificate: for every odd minimal
/// dependence, each point of `x` has strictly positive inner product
/// with at least one assigned direction. A `true` answer certifies
/// `s_R >= k` for the polytope whose Gale diagram `x` is (requires a
/// good configuration).
pub fn eta_certificate_check(
    x: &PointConfiguration,
    k: usize,
    eta: &[Vec<Rational>],
) -> Result<bool> {
    let slots = (1usize << k) - 1;
    if eta.len() != slots {
        return Err(Error::BadInput(format!(
            "expected {} directions, found {}",
            slots,
            eta.len()
        )));
    }
    for (i, d) in eta.iter().enumerate() {
        if d.len() != x.dim {
            return Err(Error::DimensionMismatch {
                expected: x.dim,
                found: d.len(),
            });
        }
        if d.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroDirection {
                label: format!("{:b}", i + 1),
            });
        }
    }
    let deps = minimal_odd_dependences(k)?;
    for dep in &deps {
        for p in &x.points {
            let covered = dep.iter().any(|&a| {
                let d = &eta[(a - 1) as usize];
                let dot: Rational = d
                    .iter()
                    .zip(p)
                    .map(|(u, v)| u * v)
                    .fold(Rational::zero(), |s, t| s + t);
                dot.is_positive()
            });
            if !covered {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Builds directions from a xi-map by separating each complement simplex
/// of the constellation complex: the proof's translation from nonfaces
/// of the dual to hemispheres of the diagram.
pub fn eta_from_xi(x: &PointConfiguration, xi: &XiMap) -> Result<Vec<Vec<Rational>>> {
    let m = x.len();
    let mut out = Vec::with_capacity(xi.assign.len());
    for nf in &xi.assign {
        let simplex = nf.complement_in(m);
        let pts = x.subset(&simplex.indices());
        let dir = separating_direction(&pts)?.ok_or_else(|| {
            Error::BadInput(format!(
                "complement {simplex} is not inside an open hemisphere"
            ))
        })?;
        out.push(dir);
    }
    Ok(out)
}

/// Justification tags for bound entries in the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundTag {
    Diagonal,
    Dimension,
    ErokhovetsPair,
    MatrixWitness,
    XiWitness,
    EqualityLowValue,
    EqualityLowDim,
}

/// Bounds for the real and torus Buchstaber invariants with provenance.
#[derive(Debug, Clone)]
pub struct SBoundsReport {
    pub m: usize,
    pub dim: isize,
    pub s_real_lower: usize,
    pub s_real_upper: usize,
    pub s_real_exact: bool,
    pub s_torus_lower: usize,
    pub s_torus_upper: usize,
    pub s_torus_exact: bool,
    pub tags: Vec<(BoundTag, String)>,
    pub witness: Option<SubgroupWitness>,
}

/// Bounds chain `1 <= s <= s_R <= m - dim K - 1` with the equality cases
/// for the torus invariant: the exact torus search is out of scope, so
/// `s` is pinned only where an equality case applies.
pub fn s_bounds(k: &SimplicialComplex) -> Result<SBoundsReport> {
    if k.is_full_simplex() {
        return Err(Error::DualOfFullSimplex);
    }
    let m = k.vertex_count();
    let dim = k.dim();
    let dim_ub = (m as isize - dim - 1) as usize;
    let outcome = s_real_exact(k, dim_ub);
    let mut tags = vec![(
        BoundTag::Dimension,
        format!("s_R <= m - dim - 1 = {dim_ub}"),
    )];
    if let Some(w) = &outcome.witness {
        tags.push((
            BoundTag::MatrixWitness,
            format!("rank-{} subgroup acts freely", w.rank),
        ));
    }
    let mut s_lower = usize::from(!k.is_full_simplex());
    tags.push((BoundTag::Diagonal, "diagonal subgroup acts freely".into()));
    let nf = k.minimal_nonfaces();
    let has_disjoint_pair = nf
        .iter()
        .enumerate()
        .any(|(i, a)| nf[i + 1..].iter().any(|b| a.intersect(*b).is_empty()));
    if nf.len() >= 3 || has_disjoint_pair {
        s_lower = s_lower.max(2);
        tags.push((
            BoundTag::ErokhovetsPair,
            "three minimal nonfaces, or two disjoint ones".into(),
        ));
    }
    let mut s_upper = outcome.upper;
    let mut s_exact = false;
    if outcome.exact {
        let sr = outcome.lower;
        if sr <= 2 {
            s_lower = sr;
            s_upper = sr;
            s_exact = true;
            tags.push((
                BoundTag::EqualityLowValue,
                format!("s = s_R since s_R = {sr} <= 2"),
            ));
        } else if dim <= 2 {
            s_lower = sr;
            s_upper = sr;
            s_exact = true;
            tags.push((
                BoundTag::EqualityLowDim,
                format!("s = s_R since dim K = {dim} <= 2"),
            ));
        }
    }
    s_lower = s_lower.min(s_upper);
    Ok(SBoundsReport {
        m,
        dim,
        s_real_lower: outcome.lower,
        s_real_upper: outcome.upper,
        s_real_exact: outcome.exact,
        s_torus_lower: s_lower,
        s_torus_upper: s_upper,
        s_torus_exact: s_exact,
        tags,
        witness: outcome.witness,
    })
}

/// The pyramid dichotomy for a polytope: `s(P) = 1` iff `P` is a
/// pyramid. Both sides are computed independently: the nerve dimension
/// decides the value, the vertex-side apex test names the pyramid, and
/// non-pyramids come with a disjoint minimal-nonface pair of `K_P`.
#[derive(Debug, Clone)]
pub struct SEqualsOneReport {
    /// apex detected on the vertex side, if any
    pub apex: Option<usize>,
    /// dim K_P == (#facets) - 2, which forces s(P) = 1
    pub s_equals_one: bool,
    /// witness that s >= 2 for non-pyramids
    pub disjoint_nonfaces: Option<(VertexSet, VertexSet)>,
}

pub fn s_equals_one(p: &Polytope) -> Result<SEqualsOneReport> {
    let kp = p.facet_nerve();
    let facet_count = p.facets().len();
    let s_is_one = kp.dim() == facet_count as isize - 2;
    let apex = p.is_pyramid();
    let mut disjoint = None;
    if !s_is_one {
        let nf = kp.minimal_nonfaces();
        'outer: for (i, a) in nf.iter().enumerate() {
            for b in &nf[i + 1..] {
                if a.intersect(*b).is_empty() {
                    disjoint = Some((*a, *b));
                    break 'outer;
                }
            }
        }
    }
    Ok(SEqualsOneReport {
        apex,
        s_equals_one: s_is_one,
        disjoint_nonfaces: disjoint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_i64;

    fn vs(idx: &[usize]) -> VertexSet {
        VertexSet::from_indices(idx)
    }

    fn octahedron_boundary() -> SimplicialComplex {
        SimplicialComplex::from_minimal_nonfaces(
            6,
            &[vs(&[0, 1]), vs(&[2, 3]), vs(&[4, 5])],
        )
        .unwrap()
    }

    #[test]
    fn boundary_of_simplex_has_s_real_one() {
        for m in 2..7 {
            let k = SimplicialComplex::simplex_boundary(m);
            let out = s_real_exact(&k, 16);
            assert_eq!(out.value(), Some(1), "m = {m}");
            assert!(validate_witness(&k, out.witness.as_ref().unwrap()));
        }
    }

    #[test]
    fn octahedron_has_s_real_three() {
        let k = octahedron_boundary();
        let out = s_real_exact(&k, 16);
        assert_eq!(out.value(), Some(3));
        let w = out.witness.unwrap();
        assert!(validate_witness(&k, &w));
        // witness invalid on a complex with a bigger maximal face
        let other = SimplicialComplex::from_maximal_faces(
            6,
            &[vs(&[0, 1, 2, 3, 4])],
        )
        .unwrap();
        assert!(!validate_witness(&other, &w));
    }

    #[test]
    fn ghost_only_complex_has_full_s_real() {
        for m in 1..6 {
            let k = SimplicialComplex::empty_complex(m);
            let out = s_real_exact(&k, 16);
            assert_eq!(out.value(), Some(m));
        }
    }

    #[test]
    fn full_simplex_has_zero() {
        let out = s_real_exact(&SimplicialComplex::simplex(4), 16);
        assert_eq!(out.value(), Some(0));
    }

    #[test]
    fn odd_dependences_counts() {
        assert!(minimal_odd_dependences(1).unwrap().is_empty());
        let d2 = minimal_odd_dependences(2).unwrap();
        assert_eq!(d2, vec![vec![1, 2, 3]]);
        let d3 = minimal_odd_dependences(3).unwrap();
        assert_eq!(d3.len(), 7); // the Fano lines
        assert!(d3.iter().all(|d| d.len() == 3));
        let d4 = minimal_odd_dependences(4).unwrap();
        let threes = d4.iter().filter(|d| d.len() == 3).count();
        let fives = d4.iter().filter(|d| d.len() == 5).count();
        assert_eq!(threes, 35);
        // 840 unordered bases of F_2^4, five per circuit set
        assert_eq!(fives, 168);
        // every reported set really is a minimal dependence
        for d in d3.iter().chain(d4.iter()) {
            assert_eq!(d.iter().fold(0, |a, &b| a ^ b), 0);
            for drop in 0..d.len() {
                let rest: Vec<u32> = d
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, &x)| x)
                    .collect();
                // independence: no nonempty subset sums to zero
                for mask in 1u32..(1 << rest.len()) {
                    let s = rest
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| mask >> i & 1 == 1)
                        .fold(0, |a, (_, &b)| a ^ b);
                    assert_ne!(s, 0);
                }
            }
        }
    }

    #[test]
    fn xi_on_simplex_boundary_fails_at_two() {
        let k = SimplicialComplex::simplex_boundary(4);
        let s = s_real_lower_via_xi(&k, 2).unwrap();
        assert!(s.map.is_none());
        assert!(s.exhausted);
    }

    #[test]
    fn xi_finds_certificates() {
        // two disjoint minimal nonfaces suffice for k = 2
        let k = SimplicialComplex::from_minimal_nonfaces(
            4,
            &[vs(&[0, 1]), vs(&[2, 3])],
        )
        .unwrap();
        let s = s_real_lower_via_xi(&k, 2).unwrap();
        let map = s.map.expect("certificate exists");
        assert!(validate_xi(&k, &map).unwrap());

        let oct = octahedron_boundary();
        let s3 = s_real_lower_via_xi(&oct, 3).unwrap();
        assert!(s3.map.is_some());
        assert!(validate_xi(&oct, &s3.map.unwrap()).unwrap());
    }

    #[test]
    fn bounds_report_chain() {
        let k = octahedron_boundary();
        let r = s_bounds(&k).unwrap();
        assert_eq!((r.s_real_lower, r.s_real_upper), (3, 3));
        assert!(r.s_real_exact);
        // dim K = 2 pins the torus invariant
        assert!(r.s_torus_exact);
        assert_eq!(r.s_torus_lower, 3);
        assert!(1 <= r.s_torus_lower);
        assert!(r.s_torus_lower <= r.s_real_lower);
        assert!(r.s_real_upper as isize <= k.vertex_count() as isize - k.dim() - 1);
        assert!(s_bounds(&SimplicialComplex::simplex(3)).is_err());
    }

    #[test]
    fn pyramid_dichotomy_on_small_polytopes() {
        let pyr = Polytope::from_vertices(
            [
                [0, 0, 0],
                [1, 0, 0],
                [1, 1, 0],
                [0, 1, 0],
                [0, 0, 1],
            ]
            .iter()
            .map(|p| p.iter().map(|&c| rat_i64(c)).collect())
            .collect(),
        )
        .unwrap();
        let r = s_equals_one(&pyr).unwrap();
        assert!(r.s_equals_one);
        assert_eq!(r.apex, Some(4));

        let cube = Polytope::from_vertices(
            (0..8)
                .map(|i| {
                    vec![
                        rat_i64(i & 1),
                        rat_i64((i >> 1) & 1),
                        rat_i64((i >> 2) & 1),
                    ]
                })
                .collect(),
        )
        .unwrap();
        let r = s_equals_one(&cube).unwrap();
        assert!(!r.s_equals_one);
        assert!(r.apex.is_none());
        let (a, b) = r.disjoint_nonfaces.expect("witness pair");
        assert!(a.intersect(b).is_empty());
    }

    #[test]
    fn eta_checks() {
        // pentagon rays with a single direction: the first dependence
        // already fails
        let x = crate::gale::PointConfiguration::new(
            2,
            [[1, 0], [3, 10], [-4, 3], [-4, -3], [3, -10]]
                .iter()
                .map(|p| p.iter().map(|&c| rat_i64(c)).collect())
                .collect(),
        )
        .unwrap();
        let dir = vec![rat_i64(1), rat_i64(0)];
        let eta = vec![dir.clone(), dir.clone(), dir];
        assert!(!eta_certificate_check(&x, 2, &eta).unwrap());
        // k = 1 has no dependences: vacuously true
        assert!(eta_certificate_check(&x, 1, &[vec![rat_i64(1), rat_i64(1)]]).unwrap());
        // zero direction rejected
        let zero = vec![rat_i64(0), rat_i64(0)];
        assert!(eta_certificate_check(&x, 1, &[zero]).is_err());
    }
}
