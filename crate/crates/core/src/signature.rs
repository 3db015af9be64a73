//! Universe and parameter labels that fix the lattice of soft sets.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Soft sets are stored as one `u64` characteristic matrix.
pub const MAX_CELLS: usize = 64;

/// A finite universe `U` together with a finite parameter set `A`.
///
/// Every soft set over the signature is an `m × n` boolean matrix (`m`
/// parameters, `n` universe elements). Cell `(param, elem)` has row-major
/// index `param * n + elem`; that index order is the canonical encoding order.
#[derive(Clone)]
pub struct SpaceSignature {
    universe: Vec<String>,
    parameters: Vec<String>,
    universe_index: HashMap<String, usize>,
    parameter_index: HashMap<String, usize>,
}

/// On-disk form, `{"universe": [...], "parameters": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SignatureFile {
    pub universe: Vec<String>,
    pub parameters: Vec<String>,
}

fn index_labels(kind: &str, labels: &[String]) -> Result<HashMap<String, usize>> {
    if labels.is_empty() {
        return Err(Error::InvalidSignature(format!("{kind} list is empty")));
    }
    let mut index = HashMap::with_capacity(labels.len());
    for (i, label) in labels.iter().enumerate() {
        if index.insert(label.clone(), i).is_some() {
            return Err(Error::InvalidSignature(format!(
                "duplicate {kind} label `{label}`"
            )));
        }
    }
    Ok(index)
}

impl SpaceSignature {
    pub fn new<U, P>(universe: U, parameters: P) -> Result<Self>
    where
        U: IntoIterator,
        U::Item: Into<String>,
        P: IntoIterator,
        P::Item: Into<String>,
    {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        let universe_index = index_labels("universe", &universe)?;
        let parameter_index = index_labels("parameter", &parameters)?;
        let cells = universe.len() * parameters.len();
        if cells > MAX_CELLS {
            return Err(Error::InvalidSignature(format!(
                "{cells} lattice bits exceed the storage limit of {MAX_CELLS}"
            )));
        }
        Ok(Self {
            universe,
            parameters,
            universe_index,
            parameter_index,
        })
    }

    /// Universe `h1..hn`, parameters `e1..em`.
    pub fn standard(n: usize, m: usize) -> Result<Self> {
        Self::new(
            (1..=n).map(|i| format!("h{i}")),
            (1..=m).map(|i| format!("e{i}")),
        )
    }

    pub fn from_file(file: &SignatureFile) -> Result<Self> {
        Self::new(file.universe.iter().cloned(), file.parameters.iter().cloned())
    }

    pub fn to_file(&self) -> SignatureFile {
        SignatureFile {
            universe: self.universe.clone(),
            parameters: self.parameters.clone(),
        }
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    /// Number of universe elements.
    pub fn n(&self) -> usize {
        self.universe.len()
    }

    /// Number of parameters.
    pub fn m(&self) -> usize {
        self.parameters.len()
    }

    /// Lattice bits, `n · m`.
    pub fn cells(&self) -> usize {
        self.n() * self.m()
    }

    pub fn element_index(&self, label: &str) -> Option<usize> {
        self.universe_index.get(label).copied()
    }

    pub fn parameter_index(&self, label: &str) -> Option<usize> {
        self.parameter_index.get(label).copied()
    }

    pub fn cell(&self, param: usize, elem: usize) -> usize {
        debug_assert!(param < self.m() && elem < self.n());
        param * self.n() + elem
    }

    /// Splits a row-major cell index into `(param, elem)`.
    pub fn cell_coords(&self, cell: usize) -> (usize, usize) {
        (cell / self.n(), cell % self.n())
    }

    /// Storage bit for a cell. The first cell is the most significant bit, so
    /// numeric order of the storage word is lexicographic order of the
    /// canonical bit string.
    pub fn cell_bit(&self, cell: usize) -> u64 {
        debug_assert!(cell < self.cells());
        1u64 << (self.cells() - 1 - cell)
    }

    pub fn bit_cell(&self, bit_position: u32) -> usize {
        self.cells() - 1 - bit_position as usize
    }

    pub fn full_mask(&self) -> u64 {
        match self.cells() {
            64 => u64::MAX,
            c => (1u64 << c) - 1,
        }
    }

    pub fn row_mask(&self, param: usize) -> u64 {
        (0..self.n()).fold(0, |acc, e| acc | self.cell_bit(self.cell(param, e)))
    }
}

impl PartialEq for SpaceSignature {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.parameters == other.parameters
    }
}

impl Eq for SpaceSignature {}

impl Hash for SpaceSignature {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.universe.hash(state);
        self.parameters.hash(state);
    }
}

impl fmt::Debug for SpaceSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpaceSignature")
            .field("universe", &self.universe)
            .field("parameters", &self.parameters)
            .finish()
    }
}
