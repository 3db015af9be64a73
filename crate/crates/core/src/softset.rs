//! Value-semantic soft sets over a [`SpaceSignature`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde_json::{Map, Value};

use crate::bits;
use crate::error::{Error, Result};
use crate::limits;
use crate::signature::SpaceSignature;

/// A map from each parameter to a subset of the universe.
///
/// Equality, hashing and ordering follow the canonical row-major encoding.
#[derive(Clone)]
pub struct SoftSet {
    sig: Arc<SpaceSignature>,
    bits: u64,
}

fn same_signature(a: &Arc<SpaceSignature>, b: &Arc<SpaceSignature>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl SoftSet {
    /// `Φ_A`: every row empty.
    pub fn null(sig: &Arc<SpaceSignature>) -> Self {
        Self {
            sig: Arc::clone(sig),
            bits: 0,
        }
    }

    /// `U_A`: every row full.
    pub fn absolute(sig: &Arc<SpaceSignature>) -> Self {
        Self {
            sig: Arc::clone(sig),
            bits: sig.full_mask(),
        }
    }

    pub fn from_bits(sig: &Arc<SpaceSignature>, bits: u64) -> Result<Self> {
        if bits & !sig.full_mask() != 0 {
            return Err(Error::MalformedLiteral(format!(
                "bit pattern {bits:#x} exceeds {} cells",
                sig.cells()
            )));
        }
        Ok(Self::from_bits_unchecked(sig, bits))
    }

    pub(crate) fn from_bits_unchecked(sig: &Arc<SpaceSignature>, bits: u64) -> Self {
        debug_assert_eq!(bits & !sig.full_mask(), 0);
        Self {
            sig: Arc::clone(sig),
            bits,
        }
    }

    /// Builds a soft set from `(param, elements)` rows given by index.
    pub fn from_rows<I, E>(sig: &Arc<SpaceSignature>, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, E)>,
        E: IntoIterator<Item = usize>,
    {
        let mut bits = 0;
        for (param, elems) in rows {
            if param >= sig.m() {
                return Err(Error::UnknownLabel(format!("parameter #{param}")));
            }
            for elem in elems {
                if elem >= sig.n() {
                    return Err(Error::UnknownLabel(format!("element #{elem}")));
                }
                bits |= sig.cell_bit(sig.cell(param, elem));
            }
        }
        Ok(Self::from_bits_unchecked(sig, bits))
    }

    /// Builds a soft set from `(parameter label, element labels)` pairs.
    pub fn from_labels<'a, I, E>(sig: &Arc<SpaceSignature>, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, E)>,
        E: IntoIterator<Item = &'a str>,
    {
        let mut bits = 0;
        for (param, elems) in rows {
            let p = sig
                .parameter_index(param)
                .ok_or_else(|| Error::UnknownLabel(param.to_string()))?;
            for elem in elems {
                let e = sig
                    .element_index(elem)
                    .ok_or_else(|| Error::UnknownLabel(elem.to_string()))?;
                bits |= sig.cell_bit(sig.cell(p, e));
            }
        }
        Ok(Self::from_bits_unchecked(sig, bits))
    }

    /// Parses `{"e1": ["h1","h2"], "e2": ["h1"]}`. Omitted parameters are empty.
    pub fn parse_literal(sig: &Arc<SpaceSignature>, text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| Error::MalformedLiteral(format!("{e}: {text}")))?;
        Self::from_json(sig, &value)
    }

    pub fn from_json(sig: &Arc<SpaceSignature>, value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::MalformedLiteral(format!("expected an object, got {value}")))?;
        let mut bits = 0;
        for (param, elems) in obj {
            let p = sig
                .parameter_index(param)
                .ok_or_else(|| Error::UnknownLabel(param.clone()))?;
            let elems = elems.as_array().ok_or_else(|| {
                Error::MalformedLiteral(format!("row `{param}` must be an array of labels"))
            })?;
            for elem in elems {
                let label = elem.as_str().ok_or_else(|| {
                    Error::MalformedLiteral(format!("row `{param}` holds a non-string label"))
                })?;
                let e = sig
                    .element_index(label)
                    .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
                bits |= sig.cell_bit(sig.cell(p, e));
            }
        }
        Ok(Self::from_bits_unchecked(sig, bits))
    }

    /// JSON object with every parameter in declared order.
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        for (p, param) in self.sig.parameters().iter().enumerate() {
            let row = self
                .row(p)
                .map(|e| Value::String(self.sig.universe()[e].clone()))
                .collect();
            obj.insert(param.clone(), Value::Array(row));
        }
        Value::Object(obj)
    }

    /// Compact literal, parameters in declared order, e.g. `{"e1":["h1"],"e2":[]}`.
    pub fn to_literal(&self) -> String {
        let mut out = String::from("{");
        for (p, param) in self.sig.parameters().iter().enumerate() {
            if p > 0 {
                out.push(',');
            }
            out.push_str(&Value::String(param.clone()).to_string());
            out.push_str(":[");
            for (i, e) in self.row(p).enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&Value::String(self.sig.universe()[e].clone()).to_string());
            }
            out.push(']');
        }
        out.push('}');
        out
    }

    pub fn signature(&self) -> &Arc<SpaceSignature> {
        &self.sig
    }

    /// Characteristic matrix, first cell in the most significant position.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Row-major bit string, e.g. `110100`.
    pub fn encoding(&self) -> String {
        (0..self.sig.cells())
            .map(|c| if self.contains_cell(c) { '1' } else { '0' })
            .collect()
    }

    pub fn contains_cell(&self, cell: usize) -> bool {
        self.bits & self.sig.cell_bit(cell) != 0
    }

    /// Elements of `F(e)` for parameter index `param`, ascending.
    pub fn row(&self, param: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.sig.n()).filter(move |&e| self.contains_cell(self.sig.cell(param, e)))
    }

    pub fn is_null(&self) -> bool {
        self.bits == 0
    }

    pub fn is_absolute(&self) -> bool {
        self.bits == self.sig.full_mask()
    }

    /// Number of `(parameter, element)` cells present.
    pub fn cardinality(&self) -> u32 {
        self.bits.count_ones()
    }

    fn check(&self, other: &SoftSet) -> Result<()> {
        if same_signature(&self.sig, &other.sig) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    pub(crate) fn with_bits(&self, bits: u64) -> SoftSet {
        Self::from_bits_unchecked(&self.sig, bits)
    }

    pub fn union(&self, other: &SoftSet) -> Result<SoftSet> {
        self.check(other)?;
        Ok(self.with_bits(self.bits | other.bits))
    }

    pub fn intersection(&self, other: &SoftSet) -> Result<SoftSet> {
        self.check(other)?;
        Ok(self.with_bits(self.bits & other.bits))
    }

    /// Relative complement `G^c(e) = U − G(e)`.
    pub fn complement(&self) -> SoftSet {
        self.with_bits(!self.bits & self.sig.full_mask())
    }

    /// `G ⊆̃ K`: `G(e) ⊆ K(e)` for every parameter.
    pub fn is_subset(&self, other: &SoftSet) -> Result<bool> {
        self.check(other)?;
        Ok(bits::subset(self.bits, other.bits))
    }

    /// Disjoint means the parameter-wise intersection is `Φ_A`.
    pub fn is_disjoint(&self, other: &SoftSet) -> Result<bool> {
        self.check(other)?;
        Ok(self.bits & other.bits == 0)
    }

    /// Soft points `p` with `p ∈ self`, in canonical order.
    pub fn points(&self) -> impl Iterator<Item = SoftPoint> + '_ {
        (0..self.sig.cells())
            .filter(|&c| self.contains_cell(c))
            .map(|c| SoftPoint::from_cell(&self.sig, c))
    }
}

/// Parameter-wise union of a collection; the empty union is `Φ_A`.
pub fn union<'a, I>(sig: &Arc<SpaceSignature>, sets: I) -> Result<SoftSet>
where
    I: IntoIterator<Item = &'a SoftSet>,
{
    let mut acc = SoftSet::null(sig);
    for s in sets {
        acc = acc.union(s)?;
    }
    Ok(acc)
}

/// Parameter-wise intersection of a nonempty collection.
pub fn intersection<'a, I>(sets: I) -> Result<SoftSet>
where
    I: IntoIterator<Item = &'a SoftSet>,
{
    let mut iter = sets.into_iter();
    let first = iter.next().ok_or(Error::EmptyIntersection)?.clone();
    iter.try_fold(first, |acc, s| acc.intersection(s))
}

/// Every soft set over `sig` exactly once, `Φ_A` first and `U_A` last.
pub fn enumerate_soft_sets(
    sig: &Arc<SpaceSignature>,
) -> Result<impl Iterator<Item = SoftSet> + '_> {
    let cells = sig.cells() as u32;
    limits::check_bits(cells)?;
    Ok((0..=sig.full_mask()).map(move |b| SoftSet::from_bits_unchecked(sig, b)))
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && same_signature(&self.sig, &other.sig)
    }
}

impl Eq for SoftSet {}

impl Hash for SoftSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for SoftSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SoftSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.cmp(&other.bits).then_with(|| {
            if same_signature(&self.sig, &other.sig) {
                Ordering::Equal
            } else {
                (self.sig.universe(), self.sig.parameters())
                    .cmp(&(other.sig.universe(), other.sig.parameters()))
            }
        })
    }
}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SoftSet({})", self.to_literal())
    }
}

/// How a soft point is tested against a soft set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Membership {
    /// `e_F ∈ G` iff `F(e) ⊆ G(e)`.
    #[default]
    Inclusion,
    /// `e_F ∈ G` iff `F(e) = G(e)`.
    Equality,
}

/// A soft set whose only nonempty row is a singleton: `F(e) = {x}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SoftPoint {
    sig: Arc<SpaceSignature>,
    param: usize,
    element: usize,
}

impl SoftPoint {
    pub fn new(sig: &Arc<SpaceSignature>, param: usize, element: usize) -> Result<Self> {
        if param >= sig.m() || element >= sig.n() {
            return Err(Error::UnknownLabel(format!("point ({param},{element})")));
        }
        Ok(Self {
            sig: Arc::clone(sig),
            param,
            element,
        })
    }

    pub fn from_cell(sig: &Arc<SpaceSignature>, cell: usize) -> Self {
        let (param, element) = sig.cell_coords(cell);
        Self {
            sig: Arc::clone(sig),
            param,
            element,
        }
    }

    /// Recognises a soft set with exactly one nonempty, singleton row.
    pub fn from_soft_set(set: &SoftSet) -> Option<Self> {
        if set.cardinality() != 1 {
            return None;
        }
        let cell = set.sig.bit_cell(set.bits.trailing_zeros());
        Some(Self::from_cell(&set.sig, cell))
    }

    pub fn param(&self) -> usize {
        self.param
    }

    pub fn element(&self) -> usize {
        self.element
    }

    pub fn cell(&self) -> usize {
        self.sig.cell(self.param, self.element)
    }

    pub fn bit(&self) -> u64 {
        self.sig.cell_bit(self.cell())
    }

    pub fn as_soft_set(&self) -> SoftSet {
        SoftSet::from_bits_unchecked(&self.sig, self.bit())
    }

    pub fn signature(&self) -> &Arc<SpaceSignature> {
        &self.sig
    }

    /// Membership under the default inclusion semantics.
    pub fn is_in(&self, set: &SoftSet) -> Result<bool> {
        self.is_in_with(set, Membership::Inclusion)
    }

    pub fn is_in_with(&self, set: &SoftSet, mode: Membership) -> Result<bool> {
        if !same_signature(&self.sig, &set.sig) {
            return Err(Error::SignatureMismatch);
        }
        Ok(match mode {
            Membership::Inclusion => set.bits & self.bit() != 0,
            Membership::Equality => set.bits & self.sig.row_mask(self.param) == self.bit(),
        })
    }
}

impl fmt::Display for SoftPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_soft_set().to_literal())
    }
}

impl fmt::Debug for SoftPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SoftPoint({},{})",
            self.sig.parameters()[self.param],
            self.sig.universe()[self.element]
        )
    }
}

/// `p ∈ G` under inclusion semantics.
pub fn point_in(p: &SoftPoint, g: &SoftSet) -> Result<bool> {
    p.is_in(g)
}
