//! Instance files: a pair of matroid specs over one ground set.
//!
//! ```json
//! {
//!   "ground_size": 3,
//!   "labels": ["e0", "e1", "e2"],
//!   "m": { "partition": { "blocks": [[0], [1, 2]], "capacities": [1, 1] } },
//!   "n": { "partition": { "blocks": [[0, 1], [2]], "capacities": [1, 1] } }
//! }
//! ```

use std::collections::HashSet;
use std::path::Path;

use mhl_core::{Element, ElementSet, Matroid, MatroidSpec};
use serde::{Deserialize, Serialize};

use crate::error::InputError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub ground_size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub m: MatroidSpec,
    pub n: MatroidSpec,
}

impl InstanceFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }

    /// Validates label uniqueness and ground sizes, and builds both oracles.
    pub fn resolve(&self) -> Result<Instance, InputError> {
        for (field, spec) in [("m", &self.m), ("n", &self.n)] {
            let found = spec
                .ground_size()
                .map_err(|source| InputError::Spec { field, source })?;
            if found != self.ground_size {
                return Err(InputError::GroundMismatch {
                    field,
                    expected: self.ground_size,
                    found,
                });
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.ground_size {
                return Err(InputError::Labels(format!(
                    "{} labels for a ground set of size {}",
                    labels.len(),
                    self.ground_size
                )));
            }
            let mut seen = HashSet::new();
            if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
                return Err(InputError::Labels(format!("label {dup:?} is used twice")));
            }
        }
        let m = Matroid::build(&self.m).map_err(|source| InputError::Spec { field: "m", source })?;
        let n = Matroid::build(&self.n).map_err(|source| InputError::Spec { field: "n", source })?;
        Ok(Instance {
            file: self.clone(),
            m,
            n,
        })
    }
}

/// A validated instance with built oracles.
#[derive(Clone, Debug)]
pub struct Instance {
    pub file: InstanceFile,
    pub m: Matroid,
    pub n: Matroid,
}

impl Instance {
    pub fn ground_size(&self) -> usize {
        self.file.ground_size
    }

    pub fn label(&self, e: Element) -> String {
        match &self.file.labels {
            Some(labels) => labels[e].clone(),
            None => e.to_string(),
        }
    }

    /// `{e0,e2}` style rendering using labels.
    pub fn fmt_set(&self, s: ElementSet) -> String {
        let parts: Vec<String> = s.iter().map(|e| self.label(e)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Parses and validates an instance file.
pub fn parse_instance(bytes: &[u8]) -> Result<Instance, InputError> {
    parse_instance_file(bytes)?.resolve()
}

/// Parses the JSON schema only, without building the oracles.
pub fn parse_instance_file(bytes: &[u8]) -> Result<InstanceFile, InputError> {
    if let Err(e) = std::str::from_utf8(bytes) {
        return Err(InputError::Utf8 {
            offset: e.valid_up_to(),
        });
    }
    let mut de = serde_json::Deserializer::from_slice(bytes);
    let file: InstanceFile = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        InputError::Schema {
            line: inner.line(),
            column: inner.column(),
            field,
            message: inner.to_string(),
        }
    })?;
    de.end().map_err(|e| InputError::Schema {
        line: e.line(),
        column: e.column(),
        field: ".".into(),
        message: e.to_string(),
    })?;
    Ok(file)
}

pub fn read_instance(path: &Path) -> Result<Instance, InputError> {
    let bytes = std::fs::read(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_instance(&bytes)
}
