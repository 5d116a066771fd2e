//! The shipped witness graphs and their manifest of expected properties.

use serde::Deserialize;
use thiserror::Error;

use crate::graph::{parse_adjacency_list, AdjacencyListError, Graph};
use crate::lcf::{parse_lcf_table, LcfParseError};

const MANIFEST: &str = include_str!("../fixtures/manifest.toml");

const FILES: &[(&str, &str)] = &[
    ("girth6_chi4_lcf_6_11.lcf", include_str!("../fixtures/girth6_chi4_lcf_6_11.lcf")),
    ("girth5_chi5_lcf_4_20.lcf", include_str!("../fixtures/girth5_chi5_lcf_4_20.lcf")),
    ("girth7_chi4_lcf_9_19.lcf", include_str!("../fixtures/girth7_chi4_lcf_9_19.lcf")),
    ("girth4_chi6_lcf_8_5.lcf", include_str!("../fixtures/girth4_chi6_lcf_8_5.lcf")),
    ("girth4_chi7_77.adj", include_str!("../fixtures/girth4_chi7_77.adj")),
    ("girth5_lcf_5_71.lcf", include_str!("../fixtures/girth5_lcf_5_71.lcf")),
    ("cycle_9.adj", include_str!("../fixtures/cycle_9.adj")),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Normal,
    Slow,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    pub file: String,
    pub order: usize,
    pub girth: usize,
    pub regular_degree: Option<usize>,
    pub chromatic: Option<usize>,
    /// Number of colours for which a colouring is expected to be found.
    pub colourable_with: Option<usize>,
    pub vertex_critical: Option<bool>,
    pub tier: Tier,
    pub claim: String,
    pub droogendijk_set: Option<Vec<usize>>,
    pub droogendijk_order: Option<usize>,
    pub droogendijk_chromatic: Option<usize>,
}

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("no fixture named {0}")]
    Unknown(String),
    #[error("fixture file {0} is not shipped")]
    MissingFile(String),
    #[error(transparent)]
    Lcf(#[from] LcfParseError),
    #[error(transparent)]
    AdjacencyList(#[from] AdjacencyListError),
}

#[derive(Deserialize)]
struct Manifest {
    graph: Vec<Fixture>,
}

/// Every fixture listed in the manifest, in manifest order.
pub fn manifest() -> Vec<Fixture> {
    toml::from_str::<Manifest>(MANIFEST).expect("shipped manifest parses").graph
}

pub fn fixture(name: &str) -> Result<Fixture, FixtureError> {
    manifest().into_iter().find(|f| f.name == name).ok_or_else(|| FixtureError::Unknown(name.to_string()))
}

impl Fixture {
    /// Raw text of the fixture file.
    pub fn text(&self) -> Result<&'static str, FixtureError> {
        FILES
            .iter()
            .find(|(f, _)| *f == self.file)
            .map(|(_, t)| *t)
            .ok_or_else(|| FixtureError::MissingFile(self.file.clone()))
    }

    pub fn graph(&self) -> Result<Graph, FixtureError> {
        let text = self.text()?;
        if self.file.ends_with(".lcf") {
            Ok(parse_lcf_table(text)?.realize())
        } else {
            Ok(parse_adjacency_list(text, None)?)
        }
    }
}

/// Loads the graph of the named fixture.
pub fn load(name: &str) -> Result<Graph, FixtureError> {
    fixture(name)?.graph()
}
