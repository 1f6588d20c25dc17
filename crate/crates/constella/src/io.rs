//! JSON file formats. Rationals are strings `"p"` or `"p/q"`; vertex
//! arrays are 0-based and sorted ascending.

use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::gale::PointConfiguration;
use crate::homology::Field;
use crate::polytope::Polytope;
use crate::rational::{format_vector, parse_vector};

/// `{"m": 4, "maximal_faces": [[0,1],[1,2],...]}` or
/// `{"m": 4, "minimal_nonfaces": [[0,2],[1,3]]}` - exactly one of the
/// two keys.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_faces: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_nonfaces: Option<Vec<Vec<usize>>>,
}

fn sets_from_lists(m: usize, lists: &[Vec<usize>]) -> Result<Vec<VertexSet>> {
    lists
        .iter()
        .map(|l| {
            for &i in l {
                if i >= m {
                    return Err(Error::VertexOutOfRange { index: i, m });
                }
            }
            Ok(VertexSet::from_indices(l))
        })
        .collect()
}

pub fn complex_from_json(j: &ComplexJson) -> Result<SimplicialComplex> {
    match (&j.maximal_faces, &j.minimal_nonfaces) {
        (Some(faces), None) => {
            SimplicialComplex::from_maximal_faces(j.m, &sets_from_lists(j.m, faces)?)
        }
        (None, Some(nf)) => {
            SimplicialComplex::from_minimal_nonfaces(j.m, &sets_from_lists(j.m, nf)?)
        }
        _ => Err(Error::BadInput(
            "complex JSON needs exactly one of maximal_faces / minimal_nonfaces".into(),
        )),
    }
}

pub fn complex_to_json(k: &SimplicialComplex) -> ComplexJson {
    ComplexJson {
        m: k.vertex_count(),
        maximal_faces: Some(k.maximal_faces().iter().map(|f| f.indices()).collect()),
        minimal_nonfaces: None,
    }
}

/// `{"vertices": [["0","0"],["1","0"],...]}` with rational coordinates.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeJson {
    pub vertices: Vec<Vec<String>>,
}

pub fn polytope_from_json(j: &PolytopeJson) -> Result<Polytope> {
    let vertices = j
        .vertices
        .iter()
        .map(|v| parse_vector(v))
        .collect::<Result<Vec<_>>>()?;
    Polytope::from_vertices(vertices)
}

pub fn polytope_to_json(p: &Polytope) -> PolytopeJson {
    PolytopeJson {
        vertices: p.vertices().iter().map(|v| format_vector(v)).collect(),
    }
}

/// `{"dim": 2, "points": [["1","0"],["3","10"],...]}`; `dim` is the
/// ambient dimension r+1; zero vectors are ghost points.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigurationJson {
    pub dim: usize,
    pub points: Vec<Vec<String>>,
}

pub fn configuration_from_json(j: &ConfigurationJson) -> Result<PointConfiguration> {
    let points = j
        .points
        .iter()
        .map(|v| parse_vector(v))
        .collect::<Result<Vec<_>>>()?;
    PointConfiguration::new(j.dim, points)
}

pub fn configuration_to_json(x: &PointConfiguration) -> ConfigurationJson {
    ConfigurationJson {
        dim: x.dim,
        points: x.points.iter().map(|v| format_vector(v)).collect(),
    }
}

/// One nonzero entry of a bigraded Betti table; `deg` is the internal
/// degree 2j.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BettiEntryJson {
    pub i: usize,
    pub deg: usize,
    pub value: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BettiTableJson {
    pub field: String,
    pub entries: Vec<BettiEntryJson>,
}

pub fn betti_to_json(t: &BettiTable) -> BettiTableJson {
    BettiTableJson {
        field: t.field.to_string(),
        entries: t
            .entries()
            .map(|(&(i, deg), &value)| BettiEntryJson { i, deg, value })
            .collect(),
    }
}

pub fn parse_field(s: &str) -> Result<Field> {
    match s.to_ascii_lowercase().as_str() {
        "gf2" | "f2" | "z2" => Ok(Field::GF2),
        "q" | "rational" => Ok(Field::Q),
        other => Err(Error::BadInput(format!("unknown field {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_json_round_trip() {
        let k = SimplicialComplex::from_minimal_nonfaces(
            4,
            &[
                VertexSet::from_indices(&[0, 2]),
                VertexSet::from_indices(&[1, 3]),
            ],
        )
        .unwrap();
        let j = complex_to_json(&k);
        let s = serde_json::to_string(&j).unwrap();
        let back: ComplexJson = serde_json::from_str(&s).unwrap();
        assert_eq!(complex_from_json(&back).unwrap(), k);
    }

    #[test]
    fn complex_json_requires_exactly_one_key() {
        let both: ComplexJson = serde_json::from_str(
            r#"{"m":2,"maximal_faces":[[0]],"minimal_nonfaces":[[1]]}"#,
        )
        .unwrap();
        assert!(complex_from_json(&both).is_err());
        let neither: ComplexJson = serde_json::from_str(r#"{"m":2}"#).unwrap();
        assert!(complex_from_json(&neither).is_err());
        let nonface_form: ComplexJson =
            serde_json::from_str(r#"{"m":4,"minimal_nonfaces":[[0,2],[1,3]]}"#).unwrap();
        assert!(complex_from_json(&nonface_form).is_ok());
    }

    #[test]
    fn rational_vertices_round_trip() {
        let j: PolytopeJson = serde_json::from_str(
            r#"{"vertices":[["0","0"],["1","0"],["1","1"],["0","1"]]}"#,
        )
        .unwrap();
        let p = polytope_from_json(&j).unwrap();
        assert_eq!(p.vertex_count(), 4);
        let back = polytope_to_json(&p);
        assert_eq!(back.vertices[1], vec!["1", "0"]);
        // halves survive exactly
        let j2: PolytopeJson =
            serde_json::from_str(r#"{"vertices":[["0"],["1/2"],["-3"]]}"#).unwrap();
        let p2 = polytope_from_json(&j2);
        // 1/2 lies between 0 and... -3 < 0 < 1/2: 0 is interior -> rejected
        assert!(p2.is_err());
    }

    #[test]
    fn configuration_round_trip() {
        let j: ConfigurationJson = serde_json::from_str(
            r#"{"dim":2,"points":[["1","0"],["-4","3"],["0","0"]]}"#,
        )
        .unwrap();
        let x = configuration_from_json(&j).unwrap();
        assert_eq!(x.len(), 3);
        let back = configuration_to_json(&x);
        assert_eq!(back.points[2], vec!["0", "0"]);
    }
}
