//! JSON records for every exchange format. Serialization is deterministic:
//! labels are 1-based and sorted, circuits and edges follow the canonical
//! (size, lex) order, and rationals are exact `"num/den"` strings.

use serde::{Deserialize, Serialize};

use crate::alpha::{StepKind, TransformStep};
use crate::clutter::Clutter;
use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::forest::{Collection, ForestComponent};
use crate::hypergraph::Forest;
use crate::matroid::Matroid;
use crate::ratmat::{Rational, RationalMatrix};
use crate::subset::{GroundSet, Subset};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: u32,
    pub circuits: Vec<Vec<u32>>,
}

impl From<&Matroid> for MatroidJson {
    fn from(m: &Matroid) -> Self {
        MatroidJson {
            n: m.ground_size(),
            circuits: m.circuits().iter().map(|c| c.labels()).collect(),
        }
    }
}

impl MatroidJson {
    pub fn into_matroid(self) -> Result<Matroid> {
        let ground = GroundSet::new_extended(self.n)?;
        let circuits = self
            .circuits
            .iter()
            .map(|c| Subset::checked_from_labels(c, ground))
            .collect::<Result<Vec<_>>>()?;
        Matroid::new(ground, circuits)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClutterJson {
    pub n: u32,
    pub d: u32,
    pub edges: Vec<Vec<u32>>,
    pub implicit_top: bool,
}

impl From<&Clutter> for ClutterJson {
    fn from(c: &Clutter) -> Self {
        ClutterJson {
            n: c.ground_size(),
            d: c.ambient_d(),
            edges: c.explicit_edges().iter().map(|e| e.labels()).collect(),
            implicit_top: c.has_implicit_top(),
        }
    }
}

impl ClutterJson {
    pub fn into_clutter(self) -> Result<Clutter> {
        let ground = GroundSet::new_extended(self.n)?;
        let edges = self
            .edges
            .iter()
            .map(|e| Subset::checked_from_labels(e, ground))
            .collect::<Result<Vec<_>>>()?;
        if self.implicit_top {
            Clutter::with_implicit_top(ground, self.d, edges)
        } else {
            Ok(Clutter::from_family(ground, self.d, edges))
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ForestJson {
    pub n: u32,
    pub edges: Vec<[u32; 2]>,
}

impl From<&Forest> for ForestJson {
    fn from(f: &Forest) -> Self {
        ForestJson {
            n: f.vertex_count(),
            edges: f.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl ForestJson {
    pub fn into_forest(self) -> Result<Forest> {
        Forest::new(
            self.n,
            &self.edges.iter().map(|e| (e[0], e[1])).collect::<Vec<_>>(),
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CollectionJson {
    pub singletons: Vec<u32>,
    pub pairs: Vec<[u32; 2]>,
}

impl From<&Collection> for CollectionJson {
    fn from(c: &Collection) -> Self {
        CollectionJson {
            singletons: c.singletons.labels(),
            pairs: c.pairs.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl CollectionJson {
    pub fn into_collection(self) -> Collection {
        Collection::new(
            Subset::from_labels(&self.singletons),
            self.pairs.iter().map(|e| (e[0], e[1])).collect(),
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigurationJson {
    pub points: Vec<u32>,
    pub lines: Vec<Vec<u32>>,
    pub loops: Vec<u32>,
}

impl ConfigurationJson {
    pub fn new(c: &Configuration, loops: Subset) -> Self {
        ConfigurationJson {
            points: (1..=c.point_count()).collect(),
            lines: c.lines().iter().map(|l| l.labels()).collect(),
            loops: loops.labels(),
        }
    }

    pub fn into_configuration(self) -> Result<(Configuration, Subset)> {
        let n = self.points.len() as u32;
        if self.points.iter().enumerate().any(|(i, &p)| p != i as u32 + 1) {
            return Err(Error::ParameterRange(
                "points must be labeled 1..=n".to_string(),
            ));
        }
        let lines = self
            .lines
            .iter()
            .map(|l| Subset::from_labels(l))
            .collect::<Vec<_>>();
        let config = Configuration::new(n, lines)?;
        Ok((config, Subset::from_labels(&self.loops)))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub d: u32,
    pub n: u32,
    pub entries: Vec<Vec<String>>,
}

fn rational_to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn rational_from_string(s: &str) -> Result<Rational> {
    let parse = |t: &str| {
        t.parse::<num_bigint::BigInt>()
            .map_err(|_| Error::ParameterRange(format!("bad rational '{s}'")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let den = parse(den)?;
            if den == num_bigint::BigInt::from(0) {
                return Err(Error::ParameterRange(format!("zero denominator in '{s}'")));
            }
            Ok(Rational::new(parse(num)?, den))
        }
        None => Ok(Rational::from_integer(parse(s)?)),
    }
}

impl From<&RationalMatrix> for MatrixJson {
    fn from(m: &RationalMatrix) -> Self {
        MatrixJson {
            d: m.rows() as u32,
            n: m.cols() as u32,
            entries: (0..m.rows())
                .map(|r| (0..m.cols()).map(|c| rational_to_string(m.get(r, c))).collect())
                .collect(),
        }
    }
}

impl MatrixJson {
    pub fn into_matrix(self) -> Result<RationalMatrix> {
        if self.entries.len() != self.d as usize
            || self.entries.iter().any(|r| r.len() != self.n as usize)
        {
            return Err(Error::ShapeMismatch("entry grid vs declared shape".to_string()));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|s| rational_from_string(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        RationalMatrix::from_rows(rows)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceStepJson {
    pub kind: String,
    #[serde(rename = "A1", skip_serializing_if = "Option::is_none")]
    pub a1: Option<Vec<u32>>,
    #[serde(rename = "A2", skip_serializing_if = "Option::is_none")]
    pub a2: Option<Vec<u32>>,
    pub input_key: u64,
    pub output_key: u64,
}

impl From<&TransformStep> for TraceStepJson {
    fn from(s: &TransformStep) -> Self {
        match &s.kind {
            StepKind::Alpha1 { a1, a2 } => TraceStepJson {
                kind: "a1".to_string(),
                a1: Some(a1.labels()),
                a2: Some(a2.labels()),
                input_key: s.input_key,
                output_key: s.output_key,
            },
            StepKind::Alpha2 => TraceStepJson {
                kind: "a2".to_string(),
                a1: None,
                a2: None,
                input_key: s.input_key,
                output_key: s.output_key,
            },
            StepKind::Alpha3 => TraceStepJson {
                kind: "a3".to_string(),
                a1: None,
                a2: None,
                input_key: s.input_key,
                output_key: s.output_key,
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecompositionEntryJson {
    pub collection: CollectionJson,
    pub matroid: MatroidJson,
    pub simplification: MatroidJson,
    pub configuration_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub realization: Option<MatrixJson>,
}

impl DecompositionEntryJson {
    pub fn new(component: &ForestComponent, realization: Option<&RationalMatrix>) -> Self {
        DecompositionEntryJson {
            collection: (&component.collection).into(),
            matroid: (&component.matroid).into(),
            simplification: (&component.simplification).into(),
            configuration_id: configuration_id(&component.simplification),
            realization: realization.map(|m| m.into()),
        }
    }
}

/// Stable identifier of a simple matroid's configuration: the canonical line
/// list (sizes and sorted labels).
pub fn configuration_id(simple: &Matroid) -> String {
    match crate::config::config_from_matroid(simple) {
        Ok(c) => {
            let lines: Vec<String> = c
                .lines()
                .iter()
                .map(|l| {
                    l.labels()
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(".")
                })
                .collect();
            format!("p{}:l[{}]", c.point_count(), lines.join("|"))
        }
        Err(_) => format!("n{}:c{}", simple.ground_size(), simple.circuits().len()),
    }
}
