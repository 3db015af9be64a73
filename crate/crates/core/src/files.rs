//! JSON file formats for spaces, soft functions and soft-set arguments.
//!
//! Space file:
//!
//! ```json
//! {"signature": {"universe": ["h1","h2"], "parameters": ["e1"]},
//!  "opens": [{"e1": []}, {"e1": ["h1","h2"]}]}
//! ```
//!
//! An optional `"carrier"` literal marks a subspace. Function files name
//! their source and target spaces either by path (relative to the function
//! file) or inline.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::maps::SoftFunction;
use crate::signature::{SignatureFile, SpaceSignature};
use crate::softset::SoftSet;
use crate::topology::SoftTopology;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub signature: SignatureFile,
    pub opens: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<Value>,
}

impl SpaceFile {
    pub fn from_topology(t: &SoftTopology) -> Self {
        Self {
            signature: t.signature().to_file(),
            opens: t.opens().iter().map(SoftSet::to_json).collect(),
            carrier: (!t.is_full()).then(|| t.carrier().to_json()),
        }
    }

    /// Validates the axioms; an invalid family yields [`Error::Violation`].
    pub fn to_topology(&self) -> Result<SoftTopology> {
        let sig = Arc::new(SpaceSignature::from_file(&self.signature)?);
        self.to_topology_over(&sig)
    }

    /// Like [`to_topology`](Self::to_topology) but reuses `sig` when it matches.
    pub fn to_topology_over(&self, sig: &Arc<SpaceSignature>) -> Result<SoftTopology> {
        let own = SpaceSignature::from_file(&self.signature)?;
        let sig = if own == **sig { Arc::clone(sig) } else { Arc::new(own) };
        let opens = self
            .opens
            .iter()
            .map(|v| SoftSet::from_json(&sig, v))
            .collect::<Result<Vec<_>>>()?;
        match &self.carrier {
            None => SoftTopology::validate(&sig, opens),
            Some(c) => SoftTopology::validate_with_carrier(&sig, &SoftSet::from_json(&sig, c)?, opens),
        }
    }
}

pub fn read_space(path: &Path) -> Result<SoftTopology> {
    let text = fs::read_to_string(path)?;
    let file: SpaceFile = serde_json::from_str(&text)?;
    file.to_topology()
}

pub fn write_space(path: &Path, t: &SoftTopology) -> Result<()> {
    write_json(path, &SpaceFile::from_topology(t))
}

/// Pretty JSON with a trailing newline.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

/// A space given by path or spelled out in place.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum SpaceRef {
    Path(PathBuf),
    Inline(Box<SpaceFile>),
}

impl SpaceRef {
    fn resolve(&self, base: &Path) -> Result<SpaceFile> {
        match self {
            SpaceRef::Inline(file) => Ok((**file).clone()),
            SpaceRef::Path(p) => {
                let text = fs::read_to_string(base.join(p))?;
                Ok(serde_json::from_str(&text)?)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    pub source: SpaceRef,
    pub target: SpaceRef,
    pub point_map: BTreeMap<String, String>,
    pub param_map: BTreeMap<String, String>,
}

/// A soft function together with the spaces it runs between.
#[derive(Debug, Clone)]
pub struct LoadedFunction {
    pub function: SoftFunction,
    pub source: SoftTopology,
    pub target: SoftTopology,
}

impl FunctionFile {
    pub fn new(f: &SoftFunction, source: SpaceRef, target: SpaceRef) -> Self {
        Self {
            source,
            target,
            point_map: f.point_label_map(),
            param_map: f.param_label_map(),
        }
    }

    /// Relative space paths resolve against `base`.
    pub fn load(&self, base: &Path) -> Result<LoadedFunction> {
        let source = self.source.resolve(base)?.to_topology()?;
        let target = self.target.resolve(base)?.to_topology_over(source.signature())?;
        let function = SoftFunction::from_label_maps(
            source.signature(),
            target.signature(),
            &self.point_map,
            &self.param_map,
        )?;
        Ok(LoadedFunction {
            function,
            source,
            target,
        })
    }
}

pub fn read_function(path: &Path) -> Result<LoadedFunction> {
    let text = fs::read_to_string(path)?;
    let file: FunctionFile = serde_json::from_str(&text)?;
    file.load(path.parent().unwrap_or_else(|| Path::new(".")))
}

/// Reads a soft-set argument: an inline literal, or `@path` naming a file
/// that holds one.
pub fn read_set_arg(sig: &Arc<SpaceSignature>, arg: &str) -> Result<SoftSet> {
    match arg.strip_prefix('@') {
        Some(path) => SoftSet::parse_literal(sig, fs::read_to_string(path)?.trim()),
        None => SoftSet::parse_literal(sig, arg),
    }
}

pub fn read_manifest_value(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))
}
