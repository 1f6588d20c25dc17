//! Proper colorings of `Z_2^k \ {0}` (no odd minimal linear dependence
//! single-colored), the Fano-plane corollary, and the seeded random
//! experiment on direction maps to the circle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::buchstaber::minimal_odd_dependences;
use crate::error::Result;
use crate::linalg::nonneg_nonzero_dependence;
use crate::rational::{rat_i64, Rational};

/// Color assignment on the nonzero vectors of `Z_2^k`, colors `1..=c`;
/// index `a-1` holds the color of the vector with binary value `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub k: usize,
    pub colors: Vec<usize>,
}

/// Proper: no odd minimal linear dependence is single-colored.
pub fn is_proper(coloring: &Coloring, deps: &[Vec<u32>]) -> bool {
    deps.iter().all(|dep| {
        let first = coloring.colors[(dep[0] - 1) as usize];
        dep.iter()
            .any(|&a| coloring.colors[(a - 1) as usize] != first)
    })
}

/// Search outcome: a re-validated coloring, or an exhaustion certificate
/// counting the canonical assignments refuted.
#[derive(Debug, Clone)]
pub struct ColoringSearch {
    pub coloring: Option<Coloring>,
    pub nodes: u64,
}

/// Backtracking search for a proper coloring by `c` colors, with the
/// standard symmetry cut: a new color may be introduced only in order
/// (each vector gets a color at most one above the maximum used so far).
pub fn proper_coloring_search(k: usize, c: usize) -> Result<ColoringSearch> {
    let deps = minimal_odd_dependences(k)?;
    let slots = (1usize << k) - 1;
    let mut deps_by_max: Vec<Vec<&[u32]>> = vec![Vec::new(); slots + 1];
    for d in &deps {
        deps_by_max[*d.last().unwrap() as usize].push(d);
    }
    let mut colors = vec![0usize; slots];
    let mut nodes = 0u64;

    fn dfs(
        a: usize,
        slots: usize,
        c: usize,
        max_used: usize,
        colors: &mut Vec<usize>,
        deps_by_max: &[Vec<&[u32]>],
        nodes: &mut u64,
    ) -> bool {
        if a > slots {
            return true;
        }
        let limit = c.min(max_used + 1);
        for color in 1..=limit {
            *nodes += 1;
            colors[a - 1] = color;
            let ok = deps_by_max[a].iter().all(|dep| {
                let first = colors[(dep[0] - 1) as usize];
                dep.iter().any(|&x| colors[(x - 1) as usize] != first)
            });
            if ok
                && dfs(
                    a + 1,
                    slots,
                    c,
                    max_used.max(color),
                    colors,
                    deps_by_max,
                    nodes,
                )
            {
                return true;
            }
        }
        colors[a - 1] = 0;
        false
    }

    let found = dfs(1, slots, c, 0, &mut colors, &deps_by_max, &mut nodes);
    if found {
        let coloring = Coloring { k, colors };
        // re-validate against the full dependence list, not the
        // incremental checks of the search
        assert!(is_proper(&coloring, &deps));
        Ok(ColoringSearch {
            coloring: Some(coloring),
            nodes,
        })
    } else {
        Ok(ColoringSearch {
            coloring: None,
            nodes,
        })
    }
}

/// The 7 lines of the Fano plane: the minimal 3-element linear
/// dependences `{a, b, a+b}` in `Z_2^3`.
pub fn fano_lines() -> Vec<[u32; 3]> {
    minimal_odd_dependences(3)
        .expect("k = 3 is within the cap")
        .into_iter()
        .map(|d| [d[0], d[1], d[2]])
        .collect()
}

/// Checks every one of the 2^7 two-colorings of the Fano plane for a
/// monochromatic line; returns (all have one, number of colorings
/// checked).
pub fn fano_all_two_colorings_monochromatic() -> (bool, u64) {
    let lines = fano_lines();
    let mut checked = 0u64;
    for mask in 0u32..128 {
        checked += 1;
        let mono = lines.iter().any(|l| {
            let bits: Vec<bool> = l.iter().map(|&a| mask >> (a - 1) & 1 == 1).collect();
            bits.iter().all(|&b| b) || bits.iter().all(|&b| !b)
        });
        if !mono {
            return (false, checked);
        }
    }
    (true, checked)
}

/// One sampled direction map from the Fano points to integer vectors in
/// `[-100,100]^2 \ {0}` that captured zero on all seven lines (which
/// would be a counterexample).
#[derive(Debug, Clone)]
pub struct FanoCounterexample {
    pub trial: u64,
    pub directions: Vec<(i64, i64)>,
}

#[derive(Debug, Clone)]
pub struct FanoCircleReport {
    pub trials: u64,
    pub seed: u64,
    pub counterexamples: Vec<FanoCounterexample>,
}

impl FanoCircleReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn derived_seed(seed: u64, trial: u64) -> u64 {
    // splitmix64 step keyed by the trial index
    let mut z = seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Samples random direction maps eta on the Fano points and looks for a
/// trial where every line captures zero in the convex hull of its three
/// rays. Finding one would contradict the circle statement, so the
/// expected report is empty. Deterministic given the seed and trial
/// count, independent of thread schedule.
pub fn fano_circle_experiment(trials: u64, seed: u64) -> FanoCircleReport {
    let lines = fano_lines();
    let counterexamples: Vec<FanoCounterexample> = (0..trials)
        .into_par_iter()
        .filter_map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(derived_seed(seed, trial));
            let mut dirs: Vec<(i64, i64)> = Vec::with_capacity(7);
            for _ in 0..7 {
                loop {
                    let x = rng.random_range(-100..=100);
                    let y = rng.random_range(-100..=100);
                    if (x, y) != (0, 0) {
                        dirs.push((x, y));
                        break;
                    }
                }
            }
            let all_capture = lines.iter().all(|l| {
                let pts: Vec<Vec<Rational>> = l
                    .iter()
                    .map(|&a| {
                        let (x, y) = dirs[(a - 1) as usize];
                        vec![rat_i64(x), rat_i64(y)]
                    })
                    .collect();
                nonneg_nonzero_dependence(&pts).expect("equal dims")
            });
            all_capture.then(|| FanoCounterexample {
                trial,
                directions: dirs,
            })
        })
        .collect();
    let mut counterexamples = counterexamples;
    counterexamples.sort_by_key(|c| c.trial);
    FanoCircleReport {
        trials,
        seed,
        counterexamples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_color_fails_immediately() {
        let s = proper_coloring_search(2, 1).unwrap();
        assert!(s.coloring.is_none());
    }

    #[test]
    fn two_colors_suffice_for_k2() {
        let s = proper_coloring_search(2, 2).unwrap();
        let c = s.coloring.expect("exists");
        assert!(is_proper(&c, &minimal_odd_dependences(2).unwrap()));
    }

    #[test]
    fn fano_lines_shape() {
        let lines = fano_lines();
        assert_eq!(lines.len(), 7);
        assert!(lines.contains(&[1, 2, 3]));
        assert!(lines.contains(&[1, 6, 7]));
        for l in &lines {
            assert_eq!(l[0] ^ l[1] ^ l[2], 0);
        }
    }

    #[test]
    fn fano_corollary_all_two_colorings() {
        let (holds, checked) = fano_all_two_colorings_monochromatic();
        assert!(holds);
        assert_eq!(checked, 128);
    }

    #[test]
    fn coloring_theorem_k3() {
        assert!(proper_coloring_search(3, 2).unwrap().coloring.is_none());
        let found = proper_coloring_search(3, 3).unwrap();
        assert!(found.coloring.is_some());
    }

    #[test]
    fn circle_experiment_deterministic_and_clean() {
        let a = fano_circle_experiment(500, 20240);
        let b = fano_circle_experiment(500, 20240);
        assert!(a.holds());
        assert_eq!(a.counterexamples.len(), b.counterexamples.len());
        assert_eq!(a.trials, 500);
    }

    #[test]
    fn constant_map_always_leaves_a_free_line() {
        // eta constant: three equal rays never capture zero
        let lines = fano_lines();
        let pts: Vec<Vec<Rational>> = vec![vec![rat_i64(3), rat_i64(4)]; 3];
        assert!(!nonneg_nonzero_dependence(&pts).unwrap());
        assert!(!lines.is_empty());
    }
}
