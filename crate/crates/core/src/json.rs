//! JSON encodings of order ideals, generating functions, decompositions
//! and index tables.
//!
//! | value            | shape                                                          |
//! |------------------|----------------------------------------------------------------|
//! | order ideal      | `{"dim": n, "generators": [[..]]}`, `{"dim": n, "elements": [[..]]}` or `{"partition": [λ1,..]}` |
//! | rational GF      | `{"num": [[e1,..,en,"p/q"], ..], "den": [e1,..,en]}`           |
//! | decomposition    | `{"cones": [{"anchor": [..], "free": [i, ..]}, ..]}`, axes 1-based |
//! | index table      | `{"bounds": [..], "values": [..]}`, last axis fastest          |
//!
//! Coefficients are exact rationals written as strings; plain JSON integers
//! are accepted on input.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::decomposition::{Cone, StanleyDecomposition};
use crate::error::{Error, Result};
use crate::gf::RationalGf;
use crate::index::IndexTable;
use crate::lattice::{ExponentVector, OrderIdeal};
use crate::poly::{format_rational, parse_rational, Polynomial, Rational};

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

/// Raw order-ideal input; exactly one of the three encodings must be set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<ExponentVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<ExponentVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<u32>>,
}

impl IdealSpec {
    /// Parses the JSON text without building the ideal. Only malformed
    /// input fails here.
    pub fn parse(text: &str) -> Result<Self> {
        let spec: Self = serde_json::from_str(text).map_err(parse_err)?;
        let given = [
            spec.generators.is_some(),
            spec.elements.is_some(),
            spec.partition.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            return Err(Error::Parse(
                "exactly one of \"generators\", \"elements\" or \"partition\" is required".into(),
            ));
        }
        if spec.partition.is_none() && spec.dim.is_none() {
            return Err(Error::Parse("\"dim\" is required".into()));
        }
        Ok(spec)
    }

    /// Builds the order ideal; errors here mean the input is well-formed but
    /// does not describe a valid order ideal.
    pub fn build(&self) -> Result<OrderIdeal> {
        if let Some(lambda) = &self.partition {
            if let Some(dim) = self.dim {
                if dim != 2 {
                    return Err(Error::DimensionMismatch {
                        expected: 2,
                        found: dim,
                    });
                }
            }
            return OrderIdeal::from_partition(lambda);
        }
        let dim = self
            .dim
            .ok_or_else(|| Error::Parse("\"dim\" is required".into()))?;
        match (&self.generators, &self.elements) {
            (Some(gens), _) => OrderIdeal::from_generators(dim, gens.iter().cloned()),
            (_, Some(elements)) => OrderIdeal::validate(dim, elements.iter().cloned()),
            _ => unreachable!("checked at parse time"),
        }
    }
}

pub fn ideal_to_json(ideal: &OrderIdeal) -> Value {
    json!({ "dim": ideal.dim(), "elements": ideal.elements() })
}

pub fn ideal_from_json(text: &str) -> Result<OrderIdeal> {
    IdealSpec::parse(text)?.build()
}

pub fn exponents_to_json(points: &[ExponentVector]) -> Value {
    json!(points)
}

pub fn exponents_from_json(value: &Value) -> Result<Vec<ExponentVector>> {
    serde_json::from_value(value.clone()).map_err(parse_err)
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_json(value: &Value) -> Result<Rational> {
    match value {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        other => Err(Error::Parse(format!(
            "expected an exact rational, got {other}"
        ))),
    }
}

pub fn gf_to_json(g: &RationalGf) -> Value {
    let num: Vec<Value> = g
        .numerator()
        .terms()
        .map(|(exp, c)| {
            let mut entry: Vec<Value> = exp.coords().iter().map(|&a| json!(a)).collect();
            entry.push(rational_to_json(c));
            Value::Array(entry)
        })
        .collect();
    json!({ "num": num, "den": g.denominator() })
}

pub fn gf_from_value(value: &Value) -> Result<RationalGf> {
    let den: ExponentVector = serde_json::from_value(
        value
            .get("den")
            .cloned()
            .ok_or_else(|| Error::Parse("missing \"den\"".into()))?,
    )
    .map_err(parse_err)?;
    let dim = den.dim();
    let entries = value
        .get("num")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"num\" array".into()))?;
    let mut terms = Vec::with_capacity(entries.len());
    for entry in entries {
        let parts = entry
            .as_array()
            .filter(|a| a.len() == dim + 1)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "numerator term {entry} needs {dim} exponents and a coefficient"
                ))
            })?;
        let exp: Vec<u32> =
            serde_json::from_value(Value::Array(parts[..dim].to_vec())).map_err(parse_err)?;
        terms.push((ExponentVector::new(exp), rational_from_json(&parts[dim])?));
    }
    RationalGf::new(Polynomial::from_terms(dim, terms)?, den)
}

pub fn gf_from_json(text: &str) -> Result<RationalGf> {
    gf_from_value(&serde_json::from_str(text).map_err(parse_err)?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeRecord {
    anchor: ExponentVector,
    free: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompositionRecord {
    cones: Vec<ConeRecord>,
}

pub fn decomposition_to_json(d: &StanleyDecomposition) -> Value {
    let record = DecompositionRecord {
        cones: d
            .cones()
            .iter()
            .map(|c| ConeRecord {
                anchor: c.anchor.clone(),
                free: c.free.iter().map(|i| i + 1).collect(),
            })
            .collect(),
    };
    serde_json::to_value(record).expect("serializable")
}

/// Parses a decomposition in dimension `dim`. Free axes are 1-based.
pub fn decomposition_from_json(text: &str, dim: usize) -> Result<StanleyDecomposition> {
    let record: DecompositionRecord = serde_json::from_str(text).map_err(parse_err)?;
    let cones = record
        .cones
        .into_iter()
        .map(|c| {
            let free = c
                .free
                .iter()
                .map(|&i| {
                    if i == 0 || i > dim {
                        Err(Error::DirectionOutOfRange { index: i, dim })
                    } else {
                        Ok(i - 1)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Cone::new(c.anchor, free))
        })
        .collect::<Result<_>>()?;
    StanleyDecomposition::new(dim, cones)
}

pub fn index_table_to_json(t: &IndexTable) -> Value {
    json!({ "bounds": t.bounds(), "values": t.values() })
}

pub fn index_table_from_value(value: &Value) -> Result<IndexTable> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Record {
        bounds: ExponentVector,
        values: Vec<u64>,
    }
    let r: Record = serde_json::from_value(value.clone()).map_err(parse_err)?;
    IndexTable::from_values(r.bounds, r.values)
}
