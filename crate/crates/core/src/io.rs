//! Serialization: the versioned JSON document and DOT graph export.
//!
//! All outputs are deterministic byte-for-byte for a fixed input: vertex
//! and simplex lists are kept in canonical sorted order and serialized with
//! stable field order.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::{ComplexWindow, Kind, SimplexChain};
use crate::error::{Error, Result};
use crate::point::Vertex;
use crate::seq::Horizon;

/// Schema tag of the JSON complex document.
pub const SCHEMA: &str = "btz-complex/1";

impl Serialize for Horizon {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Horizon::Finite(d) => ser.serialize_u32(*d),
            Horizon::Infinite => ser.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Horizon {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = serde_json::Value::deserialize(de)?;
        match &v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .filter(|&d| d >= 1 && d <= u32::MAX as u64)
                .map(|d| Horizon::Finite(d as u32))
                .ok_or_else(|| D::Error::custom("horizon must be a positive integer")),
            serde_json::Value::String(s) if s == "inf" => Ok(Horizon::Infinite),
            other => Err(D::Error::custom(format!(
                "horizon must be a positive integer or \"inf\", got {other}"
            ))),
        }
    }
}

/// Identifying parameters of a window.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DocumentHeader {
    pub r: usize,
    pub d: Horizon,
    pub k: u32,
    pub kind: String,
    pub n: i64,
    pub margin: u32,
    pub tool_version: String,
}

/// Counts from one verifier run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub checked: usize,
    pub violations: usize,
}

/// Optional verification block of a document.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct VerificationSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equidimensionality: Option<CheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundarylessness: Option<CheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stratification: Option<CheckOutcome>,
}

impl VerificationSummary {
    pub fn is_empty(&self) -> bool {
        self.components.is_none()
            && self.equidimensionality.is_none()
            && self.boundarylessness.is_none()
            && self.stratification.is_none()
    }
}

/// The on-disk form of a [`ComplexWindow`].
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub schema: String,
    pub header: DocumentHeader,
    pub vertices: Vec<Vec<i64>>,
    pub maximal_simplices: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSummary>,
}

impl ComplexDocument {
    pub fn from_window(cw: &ComplexWindow) -> Self {
        let vertices: Vec<Vec<i64>> = cw.vertices().iter().map(|v| v.coords().to_vec()).collect();
        let maximal_simplices = cw
            .maximal_simplices()
            .iter()
            .map(|s| {
                s.vertices()
                    .iter()
                    .map(|v| cw.vertex_index(v).expect("simplex vertex is in the window"))
                    .collect()
            })
            .collect();
        ComplexDocument {
            schema: SCHEMA.to_string(),
            header: DocumentHeader {
                r: cw.r,
                d: cw.horizon,
                k: cw.k,
                kind: cw.kind.letter().to_string(),
                n: cw.bound,
                margin: cw.margin,
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
            },
            vertices,
            maximal_simplices,
            verification: None,
        }
    }

    pub fn into_window(self) -> Result<ComplexWindow> {
        if self.schema != SCHEMA {
            return Err(Error::SchemaMismatch {
                expected: SCHEMA.to_string(),
                found: self.schema,
            });
        }
        let kind = Kind::parse(&self.header.kind)?;
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for (i, coords) in self.vertices.iter().enumerate() {
            if coords.last() != Some(&0) {
                return Err(Error::MalformedDocument(format!(
                    "vertex entry {i} is not normalized (last coordinate nonzero)"
                )));
            }
            if coords.len() != self.header.r {
                return Err(Error::MalformedDocument(format!(
                    "vertex entry {i} has rank {}, header says {}",
                    coords.len(),
                    self.header.r
                )));
            }
            vertices.push(Vertex::normalize(coords.clone())?);
        }
        let mut simplices = Vec::with_capacity(self.maximal_simplices.len());
        for (si, idx) in self.maximal_simplices.iter().enumerate() {
            let mut vs = Vec::with_capacity(idx.len());
            for &ix in idx {
                let v = vertices.get(ix).ok_or_else(|| {
                    Error::MalformedDocument(format!(
                        "maximal_simplices entry {si} references vertex {ix}, only {} exist",
                        vertices.len()
                    ))
                })?;
                vs.push(v.clone());
            }
            simplices.push(SimplexChain::new(vs).map_err(|e| {
                Error::MalformedDocument(format!("maximal_simplices entry {si}: {e}"))
            })?);
        }
        ComplexWindow::from_parts(
            self.header.r,
            self.header.d,
            self.header.k,
            kind,
            self.header.n,
            self.header.margin,
            vertices,
            simplices,
        )
    }
}

/// Serializes a window to the versioned JSON document.
pub fn export_json(cw: &ComplexWindow) -> Result<Vec<u8>> {
    document_bytes(&ComplexDocument::from_window(cw))
}

/// Stable pretty-printed bytes of a document.
pub fn document_bytes(doc: &ComplexDocument) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(doc)?;
    out.push(b'\n');
    Ok(out)
}

/// Parses and validates a JSON document back into a window.
pub fn import_json(bytes: &[u8]) -> Result<ComplexWindow> {
    let doc: ComplexDocument = serde_json::from_slice(bytes)?;
    doc.into_window()
}

fn node_name(v: &Vertex) -> String {
    let mut s = String::from("v");
    for c in v.coords() {
        s.push('_');
        s.push_str(&c.to_string());
    }
    s
}

/// Exports the window as a DOT graph. Windows of dimension at most one map
/// directly; higher-dimensional windows emit their 1-skeleton with a
/// warning comment.
pub fn export_dot(cw: &ComplexWindow) -> Vec<u8> {
    let mut out = String::new();
    out.push_str("graph complex {\n");
    out.push_str(&format!(
        "  // r={} d={} k={} kind={} N={}\n",
        cw.r, cw.horizon, cw.k, cw.kind, cw.bound
    ));
    if cw.dim().unwrap_or(0) > 1 {
        out.push_str("  // warning: complex has dimension > 1; emitting the 1-skeleton\n");
    }
    for v in cw.vertices() {
        out.push_str(&format!("  \"{}\";\n", node_name(v)));
    }
    for (a, b) in cw.edges() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\";\n",
            node_name(&cw.vertices()[a]),
            node_name(&cw.vertices()[b])
        ));
    }
    out.push_str("}\n");
    out.into_bytes()
}
