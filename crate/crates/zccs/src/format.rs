//! JSON file formats.
//!
//! Field description:
//!
//! ```json
//! {"p": 3, "r": 2, "modulus": [2, 1, 1], "alpha": [0, 1]}
//! ```
//!
//! Code set:
//!
//! ```json
//! {"params": {"s": 9, "m": 9, "length": 9, "z": 9},
//!  "L": 3,
//!  "provenance": {"p": 3, "r": 2, "modulus": [2, 1, 1], "alpha": [0, 1],
//!                 "primes": [], "ordering": "..."},
//!  "codes": [[[0, 0, ...], ...], ...]}
//! ```
//!
//! `codes[k][l][i]` is the exponent of `exp(2 pi i / L)` at entry `i` of
//! sequence `l` of code `k`. Polynomial and element coefficients are listed
//! constant term first. `provenance` is optional on input.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use zccs_core::{Code, CodeSet, FieldSpec, Params, PhaseSequence, Provenance};

use crate::ToolError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u32,
    pub r: u32,
    pub modulus: Vec<u32>,
    pub alpha: Vec<u32>,
}

impl From<&FieldSpec> for FieldJson {
    fn from(spec: &FieldSpec) -> Self {
        FieldJson {
            p: spec.p(),
            r: spec.r(),
            modulus: spec.modulus().to_vec(),
            alpha: spec.alpha().coeffs().to_vec(),
        }
    }
}

impl FieldJson {
    pub fn to_spec(&self) -> Result<FieldSpec, ToolError> {
        if self.modulus.len() != self.r as usize + 1 {
            return Err(ToolError::Schema(format!(
                "modulus: expected {} coefficients for r = {}, found {}",
                self.r + 1,
                self.r,
                self.modulus.len()
            )));
        }
        FieldSpec::with_modulus(self.p, self.modulus.clone(), Some(self.alpha.clone()))
            .map_err(|e| ToolError::Schema(format!("field: {e}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub s: usize,
    pub m: usize,
    pub length: usize,
    pub z: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceJson {
    pub p: u32,
    pub r: u32,
    pub modulus: Vec<u32>,
    pub alpha: Vec<u32>,
    pub primes: Vec<u32>,
    pub ordering: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSetJson {
    pub params: ParamsJson,
    #[serde(rename = "L")]
    pub order: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceJson>,
    pub codes: Vec<Vec<Vec<u32>>>,
}

impl From<&CodeSet> for CodeSetJson {
    fn from(set: &CodeSet) -> Self {
        let Params { s, m, length, z } = set.params();
        CodeSetJson {
            params: ParamsJson { s, m, length, z },
            order: set.order(),
            provenance: set.provenance().map(|p| ProvenanceJson {
                p: p.p,
                r: p.r,
                modulus: p.modulus.clone(),
                alpha: p.alpha.clone(),
                primes: p.primes.clone(),
                ordering: p.ordering.clone(),
            }),
            codes: set
                .codes()
                .iter()
                .map(|c| c.sequences().iter().map(|s| s.phases().to_vec()).collect())
                .collect(),
        }
    }
}

impl CodeSetJson {
    /// Validates the document and builds the in-memory set. Errors name the
    /// offending field.
    pub fn to_code_set(&self) -> Result<CodeSet, ToolError> {
        let schema = |at: String, e: zccs_core::Error| ToolError::Schema(format!("{at}: {e}"));
        if self.order == 0 {
            return Err(ToolError::Schema("L: must be at least 1".into()));
        }
        let mut codes = Vec::with_capacity(self.codes.len());
        for (k, rows) in self.codes.iter().enumerate() {
            let mut sequences = Vec::with_capacity(rows.len());
            for (l, phases) in rows.iter().enumerate() {
                if let Some(i) = phases.iter().position(|&ph| ph >= self.order) {
                    let e = zccs_core::Error::PhaseOutOfRange { value: phases[i], order: self.order };
                    return Err(schema(format!("codes[{k}][{l}][{i}]"), e));
                }
                if phases.is_empty() {
                    return Err(ToolError::Schema(format!("codes[{k}][{l}]: empty sequence")));
                }
                let seq = PhaseSequence::new(self.order, phases.clone())
                    .map_err(|e| schema(format!("codes[{k}][{l}]"), e))?;
                sequences.push(seq);
            }
            codes.push(Code::new(sequences).map_err(|e| schema(format!("codes[{k}]"), e))?);
        }
        let ParamsJson { s, m, length, z } = self.params;
        let provenance = self.provenance.as_ref().map(|p| Provenance {
            p: p.p,
            r: p.r,
            modulus: p.modulus.clone(),
            alpha: p.alpha.clone(),
            primes: p.primes.clone(),
            ordering: p.ordering.clone(),
        });
        CodeSet::new(codes, Params { s, m, length, z }, provenance).map_err(|e| match e {
            zccs_core::Error::ParamMismatch { .. } => ToolError::Schema(e.to_string()),
            other => schema("codes".into(), other),
        })
    }
}

fn read(path: &Path) -> Result<String, ToolError> {
    fs::read_to_string(path).map_err(|source| ToolError::Io { path: path.to_owned(), source })
}

fn write(path: &Path, contents: &str) -> Result<(), ToolError> {
    fs::write(path, contents).map_err(|source| ToolError::Io { path: path.to_owned(), source })
}

pub fn parse_code_set(text: &str, path: &Path) -> Result<CodeSet, ToolError> {
    let doc: CodeSetJson =
        serde_json::from_str(text).map_err(|source| ToolError::Json { path: path.to_owned(), source })?;
    doc.to_code_set()
}

pub fn load_code_set(path: &Path) -> Result<CodeSet, ToolError> {
    parse_code_set(&read(path)?, path)
}

/// Compact JSON with a trailing newline; byte-identical for equal sets.
pub fn code_set_to_string(set: &CodeSet) -> String {
    let mut text = serde_json::to_string(&CodeSetJson::from(set)).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn save_code_set(set: &CodeSet, path: &Path) -> Result<(), ToolError> {
    write(path, &code_set_to_string(set))
}

pub fn load_field(path: &Path) -> Result<FieldSpec, ToolError> {
    let doc: FieldJson = serde_json::from_str(&read(path)?)
        .map_err(|source| ToolError::Json { path: path.to_owned(), source })?;
    doc.to_spec()
}

pub fn field_to_string(spec: &FieldSpec) -> String {
    let mut text = serde_json::to_string_pretty(&FieldJson::from(spec)).expect("plain data serializes");
    text.push('\n');
    text
}
