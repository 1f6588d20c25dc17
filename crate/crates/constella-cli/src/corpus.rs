//! The bundled corpus: the polytopes and spherical configurations the
//! verification suites run on, plus the expected-results index. The
//! files are embedded at compile time; `--corpus DIR` switches to disk
//! copies (required for regenerating recomputed oracle values).

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use constella::gale::PointConfiguration;
use constella::io::{
    configuration_from_json, polytope_from_json, ConfigurationJson, PolytopeJson,
};
use constella::polytope::Polytope;

pub const EXPECTED_FILE: &str = "expected.json";

static EMBEDDED: &[(&str, &str)] = &[
    ("simplex2.json", include_str!("../../../corpus/simplex2.json")),
    ("simplex3.json", include_str!("../../../corpus/simplex3.json")),
    ("simplex4.json", include_str!("../../../corpus/simplex4.json")),
    ("simplex5.json", include_str!("../../../corpus/simplex5.json")),
    ("square.json", include_str!("../../../corpus/square.json")),
    ("pentagon.json", include_str!("../../../corpus/pentagon.json")),
    ("heptagon.json", include_str!("../../../corpus/heptagon.json")),
    ("prism.json", include_str!("../../../corpus/prism.json")),
    (
        "pyramid_square.json",
        include_str!("../../../corpus/pyramid_square.json"),
    ),
    ("cube.json", include_str!("../../../corpus/cube.json")),
    (
        "octahedron.json",
        include_str!("../../../corpus/octahedron.json"),
    ),
    (
        "crosspolytope4.json",
        include_str!("../../../corpus/crosspolytope4.json"),
    ),
    ("cyclic_6_4.json", include_str!("../../../corpus/cyclic_6_4.json")),
    ("cyclic_7_4.json", include_str!("../../../corpus/cyclic_7_4.json")),
    ("cyclic_8_4.json", include_str!("../../../corpus/cyclic_8_4.json")),
    (
        "config_pentagon.json",
        include_str!("../../../corpus/config_pentagon.json"),
    ),
    (
        "config_hexagon.json",
        include_str!("../../../corpus/config_hexagon.json"),
    ),
    (
        "config_heptagon.json",
        include_str!("../../../corpus/config_heptagon.json"),
    ),
    (
        "config_ninegon.json",
        include_str!("../../../corpus/config_ninegon.json"),
    ),
    (
        "config_degenerate_s2.json",
        include_str!("../../../corpus/config_degenerate_s2.json"),
    ),
    ("expected.json", include_str!("../../../corpus/expected.json")),
];

/// One expected value with its provenance: "literature" for published
/// values, "definition" for values forced by the construction,
/// "recomputed" for tool-derived oracles refreshed by --regen-oracles.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Expected<T> {
    pub value: T,
    pub source: String,
}

impl<T> Expected<T> {
    pub fn recomputed(value: T) -> Self {
        Self {
            value,
            source: "recomputed".into(),
        }
    }

    pub fn is_recomputed(&self) -> bool {
        self.source == "recomputed"
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeExpectation {
    pub name: String,
    pub file: String,
    #[serde(default)]
    pub dim: Option<Expected<usize>>,
    #[serde(default)]
    pub facet_count: Option<Expected<usize>>,
    #[serde(default)]
    pub pyramid_apexes: Option<Expected<Vec<usize>>>,
    #[serde(default)]
    pub gale_zero_count: Option<Expected<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gale_sign_split: Option<Expected<[usize; 2]>>,
    #[serde(default)]
    pub s_real_nerve: Option<Expected<usize>>,
    #[serde(default)]
    pub gale_alexander: Option<Expected<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neighborly_2: Option<Expected<bool>>,
}

/// Betti entries serialize as `[i, deg, value]` triples.
pub type BettiEntries = Vec<[usize; 3]>;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigurationExpectation {
    pub name: String,
    pub file: String,
    #[serde(default)]
    pub good: Option<Expected<bool>>,
    #[serde(default)]
    pub nondegenerate: Option<Expected<bool>>,
    #[serde(default)]
    pub minimal_nonface_count: Option<Expected<usize>>,
    #[serde(default)]
    pub betti_entries: Option<Expected<BettiEntries>>,
    #[serde(default)]
    pub linear_resolution_degree: Option<Expected<isize>>,
    #[serde(default)]
    pub dual_betti_entries: Option<Expected<BettiEntries>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExpectedIndex {
    pub polytopes: Vec<PolytopeExpectation>,
    pub configurations: Vec<ConfigurationExpectation>,
}

pub struct CorpusPolytope {
    pub expect: PolytopeExpectation,
    pub polytope: Polytope,
}

pub struct CorpusConfiguration {
    pub expect: ConfigurationExpectation,
    pub configuration: PointConfiguration,
}

pub struct Corpus {
    pub polytopes: Vec<CorpusPolytope>,
    pub configurations: Vec<CorpusConfiguration>,
}

fn read_file(dir: Option<&Path>, name: &str) -> Result<String, String> {
    match dir {
        Some(d) => std::fs::read_to_string(d.join(name))
            .map_err(|e| format!("cannot read {}: {e}", d.join(name).display())),
        None => EMBEDDED
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, c)| c.to_string())
            .ok_or_else(|| format!("no embedded corpus file {name}")),
    }
}

/// Loads the corpus from a directory, or from the embedded copies when
/// no directory is given.
pub fn load(dir: Option<&Path>) -> Result<Corpus, String> {
    let index: ExpectedIndex = serde_json::from_str(&read_file(dir, EXPECTED_FILE)?)
        .map_err(|e| format!("bad {EXPECTED_FILE}: {e}"))?;
    let mut polytopes = Vec::new();
    for expect in index.polytopes {
        let raw = read_file(dir, &expect.file)?;
        let json: PolytopeJson =
            serde_json::from_str(&raw).map_err(|e| format!("{}: {e}", expect.file))?;
        let polytope =
            polytope_from_json(&json).map_err(|e| format!("{}: {e}", expect.file))?;
        polytopes.push(CorpusPolytope { expect, polytope });
    }
    let mut configurations = Vec::new();
    for expect in index.configurations {
        let raw = read_file(dir, &expect.file)?;
        let json: ConfigurationJson =
            serde_json::from_str(&raw).map_err(|e| format!("{}: {e}", expect.file))?;
        let configuration =
            configuration_from_json(&json).map_err(|e| format!("{}: {e}", expect.file))?;
        configurations.push(CorpusConfiguration {
            expect,
            configuration,
        });
    }
    Ok(Corpus {
        polytopes,
        configurations,
    })
}

/// Recomputes every oracle value marked "recomputed" (or absent) from
/// the current implementation and writes the refreshed index back.
pub fn regenerate_oracles(dir: &Path) -> Result<Vec<String>, String> {
    use constella::betti::hochster_betti;
    use constella::buchstaber::s_real_exact;
    use constella::gale::{
        constellation_complex, gale_diagram, is_good, is_nondegenerate,
        verify_gale_alexander,
    };
    use constella::homology::Field;
    use constella::rational::sign;

    let corpus = load(Some(dir))?;
    let mut changed = Vec::new();
    let mut index = ExpectedIndex {
        polytopes: Vec::new(),
        configurations: Vec::new(),
    };

    for entry in &corpus.polytopes {
        let mut e = entry.expect.clone();
        let p = &entry.polytope;
        let name = e.name.clone();
        let diagram = gale_diagram(p);
        let zeros = (0..diagram.len())
            .filter(|&i| diagram.point(i).iter().all(|c| sign(c) == 0))
            .count();
        let refresh_usize = |slot: &mut Option<Expected<usize>>, value: usize,
                             label: &str, changed: &mut Vec<String>| {
            let fill = slot.as_ref().map_or(true, |e| e.is_recomputed());
            if fill {
                let old = slot.as_ref().map(|e| e.value);
                if old != Some(value) {
                    changed.push(format!("{name}.{label}: {old:?} -> {value}"));
                }
                *slot = Some(Expected::recomputed(value));
            }
        };
        refresh_usize(&mut e.gale_zero_count, zeros, "gale_zero_count", &mut changed);
        refresh_usize(
            &mut e.facet_count,
            p.facets().len(),
            "facet_count",
            &mut changed,
        );
        if e.s_real_nerve.as_ref().map_or(true, |x| x.is_recomputed()) {
            let nerve = p.nerve_complex();
            let out = s_real_exact(&nerve, 16);
            if let Some(v) = out.value() {
                let old = e.s_real_nerve.as_ref().map(|x| x.value);
                if old != Some(v) {
                    changed.push(format!("{}.s_real_nerve: {old:?} -> {v}", e.name));
                }
                e.s_real_nerve = Some(Expected::recomputed(v));
            }
        }
        if e.gale_alexander.as_ref().map_or(true, |x| x.is_recomputed()) {
            let v = verify_gale_alexander(p).map_err(|err| err.to_string())?;
            e.gale_alexander = Some(Expected::recomputed(v));
        }
        index.polytopes.push(e);
    }

    for entry in &corpus.configurations {
        let mut e = entry.expect.clone();
        let x = &entry.configuration;
        let delta = constellation_complex(x).map_err(|err| err.to_string())?;
        if e.good.as_ref().map_or(true, |v| v.is_recomputed()) {
            e.good = Some(Expected::recomputed(
                is_good(x).map_err(|err| err.to_string())?,
            ));
        }
        if e.nondegenerate.as_ref().map_or(true, |v| v.is_recomputed()) {
            e.nondegenerate = Some(Expected::recomputed(
                is_nondegenerate(x).map_err(|err| err.to_string())?,
            ));
        }
        if e
            .minimal_nonface_count
            .as_ref()
            .map_or(true, |v| v.is_recomputed())
        {
            let count = delta.minimal_nonfaces().len();
            let old = e.minimal_nonface_count.as_ref().map(|v| v.value);
            if old != Some(count) {
                changed.push(format!(
                    "{}.minimal_nonface_count: {old:?} -> {count}",
                    e.name
                ));
            }
            e.minimal_nonface_count = Some(Expected::recomputed(count));
        }
        if e.betti_entries.as_ref().map_or(true, |v| v.is_recomputed()) {
            let t = hochster_betti(&delta, Field::GF2).map_err(|err| err.to_string())?;
            let entries: BettiEntries =
                t.entries().map(|(&(i, d), &v)| [i, d, v]).collect();
            e.betti_entries = Some(Expected::recomputed(entries));
        }
        if e
            .dual_betti_entries
            .as_ref()
            .map_or(true, |v| v.is_recomputed())
        {
            if !delta.is_full_simplex() {
                let dual = delta.alexander_dual().map_err(|err| err.to_string())?;
                let t = hochster_betti(&dual, Field::GF2).map_err(|err| err.to_string())?;
                let entries: BettiEntries =
                    t.entries().map(|(&(i, d), &v)| [i, d, v]).collect();
                e.dual_betti_entries = Some(Expected::recomputed(entries));
            }
        }
        index.configurations.push(e);
    }

    let mut buf = serde_json::to_string_pretty(&index).map_err(|e| e.to_string())?;
    buf.push('\n');
    std::fs::write(dir.join(EXPECTED_FILE), buf).map_err(|e| e.to_string())?;
    Ok(changed)
}

/// All betti-table entries of a table as sorted triples, for comparison
/// against the expected index.
pub fn table_entries(t: &constella::betti::BettiTable) -> BettiEntries {
    t.entries().map(|(&(i, d), &v)| [i, d, v]).collect()
}

/// Corpus lookup by entry name.
pub fn polytope_by_name<'a>(c: &'a Corpus, name: &str) -> Option<&'a CorpusPolytope> {
    c.polytopes.iter().find(|p| p.expect.name == name)
}

pub fn configuration_by_name<'a>(
    c: &'a Corpus,
    name: &str,
) -> Option<&'a CorpusConfiguration> {
    c.configurations.iter().find(|p| p.expect.name == name)
}

pub type ExpectedMapping = BTreeMap<String, serde_json::Value>;
