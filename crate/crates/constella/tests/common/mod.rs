#![allow(dead_code)] // each test binary uses its own slice of the corpus

//! Shared construction helpers for the cross-module test corpus:
//! rational stand-ins for the regular configurations (regular odd-gons
//! are irrational; these rays have the same oriented combinatorics,
//! checked against the regular model by the tests that use them).

use constella::gale::PointConfiguration;
use constella::polytope::Polytope;
use constella::rational::{rat_i64, Rational};

pub fn points(raw: &[&[i64]]) -> Vec<Vec<Rational>> {
    raw.iter()
        .map(|p| p.iter().map(|&c| rat_i64(c)).collect())
        .collect()
}

pub fn polytope(raw: &[&[i64]]) -> Polytope {
    Polytope::from_vertices(points(raw)).unwrap()
}

pub fn config(dim: usize, raw: &[&[i64]]) -> PointConfiguration {
    PointConfiguration::new(dim, points(raw)).unwrap()
}

pub fn pentagon_rays() -> PointConfiguration {
    config(2, &[&[1, 0], &[3, 10], &[-4, 3], &[-4, -3], &[3, -10]])
}

pub fn hexagon_rays() -> PointConfiguration {
    config(
        2,
        &[&[1, 0], &[1, 2], &[-1, 2], &[-1, 0], &[-1, -2], &[1, -2]],
    )
}

pub fn heptagon_rays() -> PointConfiguration {
    config(
        2,
        &[
            &[1, 0],
            &[280, 351],
            &[-9, 40],
            &[-1161, 560],
            &[-1161, -560],
            &[-9, -40],
            &[280, -351],
        ],
    )
}

pub fn ninegon_rays() -> PointConfiguration {
    config(
        2,
        &[
            &[1, 0],
            &[105, 88],
            &[11, 60],
            &[-33, 56],
            &[-280, 102],
            &[-280, -102],
            &[-33, -56],
            &[11, -60],
            &[105, -88],
        ],
    )
}

/// Poles plus an equatorial triangle spanning zero: the degenerate
/// five-point configuration on the 2-sphere.
pub fn degenerate_s2_rays() -> PointConfiguration {
    config(
        3,
        &[
            &[0, 0, 1],
            &[0, 0, -1],
            &[1, 0, 0],
            &[0, 1, 0],
            &[-1, -1, 0],
        ],
    )
}

pub fn square() -> Polytope {
    polytope(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]])
}

pub fn pentagon_polytope() -> Polytope {
    polytope(&[&[0, 0], &[2, 0], &[3, 2], &[1, 4], &[-1, 2]])
}

pub fn heptagon_polytope() -> Polytope {
    polytope(&[
        &[0, 0],
        &[4, 0],
        &[6, 3],
        &[5, 7],
        &[2, 9],
        &[-2, 6],
        &[-2, 2],
    ])
}

pub fn simplex_polytope(d: usize) -> Polytope {
    let mut pts = vec![vec![rat_i64(0); d]];
    for i in 0..d {
        let mut v = vec![rat_i64(0); d];
        v[i] = rat_i64(1);
        pts.push(v);
    }
    Polytope::from_vertices(pts).unwrap()
}

pub fn triangular_prism() -> Polytope {
    polytope(&[
        &[0, 0, 0],
        &[1, 0, 0],
        &[0, 1, 0],
        &[0, 0, 1],
        &[1, 0, 1],
        &[0, 1, 1],
    ])
}

pub fn pyramid_over_square() -> Polytope {
    polytope(&[&[0, 0, 0], &[1, 0, 0], &[1, 1, 0], &[0, 1, 0], &[0, 0, 1]])
}

pub fn cube() -> Polytope {
    Polytope::from_vertices(
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
    .unwrap()
}

/// conv{+-e_1, ..., +-e_k} in R^k.
pub fn crosspolytope(k: usize) -> Polytope {
    let mut pts = Vec::new();
    for i in 0..k {
        for s in [1i64, -1] {
            let mut v = vec![rat_i64(0); k];
            v[i] = rat_i64(s);
            pts.push(v);
        }
    }
    Polytope::from_vertices(pts).unwrap()
}

pub fn octahedron() -> Polytope {
    crosspolytope(3)
}

/// Cyclic polytope C(m,4) on the rational moment curve t -> (t,..,t^4).
pub fn cyclic_polytope(m: usize) -> Polytope {
    let pts: Vec<Vec<Rational>> = (1..=m as i64)
        .map(|t| vec![rat_i64(t), rat_i64(t * t), rat_i64(t * t * t), rat_i64(t * t * t * t)])
        .collect();
    Polytope::from_vertices(pts).unwrap()
}

/// The full cross-module polytope corpus (name, polytope).
pub fn polytope_corpus() -> Vec<(&'static str, Polytope)> {
    vec![
        ("simplex-1", simplex_polytope(1)),
        ("simplex-2", simplex_polytope(2)),
        ("simplex-3", simplex_polytope(3)),
        ("simplex-4", simplex_polytope(4)),
        ("simplex-5", simplex_polytope(5)),
        ("square", square()),
        ("pentagon", pentagon_polytope()),
        ("heptagon", heptagon_polytope()),
        ("prism", triangular_prism()),
        ("pyramid-square", pyramid_over_square()),
        ("cube", cube()),
        ("octahedron", octahedron()),
        ("crosspolytope-4", crosspolytope(4)),
        ("cyclic-6-4", cyclic_polytope(6)),
        ("cyclic-7-4", cyclic_polytope(7)),
        ("cyclic-8-4", cyclic_polytope(8)),
    ]
}
