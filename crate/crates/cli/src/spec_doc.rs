//! JSON documents for rings and groups.

use serde::{Deserialize, Serialize};

use rickart_core::{group_from_cayley, make_involution, make_ring, FiniteGroup, FiniteRing, Involution, RingSpec};

use crate::error::{CliError, Result};

pub const RING_SCHEMA: &str = "rickart.ring/v1";
pub const GROUP_SCHEMA: &str = "rickart.group/v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpecDocument {
    pub schema: String,
    pub orders: Vec<u64>,
    /// `mul[i][j]` is the coordinate vector of `e_i e_j`.
    pub mul: Vec<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unity: Option<Vec<u64>>,
    /// `involution[i]` is the image of `e_i`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDocument {
    pub schema: String,
    pub cayley: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| CliError::parse(e.line(), e.column(), e.to_string()))
}

/// Line and column of the `index`-th entry of the top-level array `key`.
fn locate(text: &str, key: &str, index: usize) -> (usize, usize) {
    let quoted = format!("\"{key}\"");
    let Some(start) = text.find(&quoted) else {
        return (1, 1);
    };
    let bytes = text.as_bytes();
    let mut pos = start + quoted.len();
    while pos < bytes.len() && bytes[pos] != b'[' {
        pos += 1;
    }
    let (mut depth, mut seen) = (0usize, 0usize);
    let mut target = pos;
    for (offset, &b) in bytes[pos..].iter().enumerate() {
        match b {
            b'[' => {
                depth += 1;
                if depth == 2 {
                    if seen == index {
                        target = pos + offset;
                        break;
                    }
                    seen += 1;
                }
            }
            b']' => {
                depth -= 1;
                if depth == 0 {
                    break;
                }
            }
            _ => {}
        }
    }
    let before = &text[..target];
    let line = before.matches('\n').count() + 1;
    let col = target - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, col)
}

fn check_schema(found: &str, expected: &str) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(CliError::parse(1, 1, format!("schema `{found}`, expected `{expected}`")))
    }
}

/// Parses and validates a ring document; validation failures carry the
/// position of the offending table row.
pub fn parse_ring_spec(text: &str) -> Result<(FiniteRing, Option<Involution>)> {
    let doc: RingSpecDocument = from_json(text)?;
    check_schema(&doc.schema, RING_SCHEMA)?;
    let spec = RingSpec {
        orders: doc.orders.clone(),
        mul: doc.mul.clone(),
        unity: doc.unity.clone(),
        labels: doc.labels.clone(),
    };
    let ring = make_ring(spec).map_err(|e| {
        use rickart_core::Error as E;
        let row = match &e {
            E::NonAssociative { i, .. } | E::IllDefined { i, .. } => Some(*i),
            _ => None,
        };
        match row {
            Some(i) => {
                let (line, col) = locate(text, "mul", i);
                CliError::Located { line, col, source: e }
            }
            None => CliError::Core(e),
        }
    })?;
    let ring = ring.with_provenance("document");
    let inv = match doc.involution {
        Some(map) => Some(make_involution(&ring, map)?),
        None => None,
    };
    Ok((ring, inv))
}

pub fn ring_document(ring: &FiniteRing, inv: Option<&Involution>) -> RingSpecDocument {
    RingSpecDocument {
        schema: RING_SCHEMA.to_string(),
        orders: ring.orders().to_vec(),
        mul: ring.mul_table(),
        unity: ring.unity_coords().map(<[u64]>::to_vec),
        involution: inv.map(|i| i.basis_images().to_vec()),
        labels: Some(ring.labels().to_vec()),
    }
}

/// Canonical text: compact JSON with fields in declaration order.
pub fn serialize_ring(ring: &FiniteRing, inv: Option<&Involution>) -> String {
    serde_json::to_string(&ring_document(ring, inv)).expect("ring document serialises")
}

/// `serialize(parse(text))`.
pub fn canonical(text: &str) -> Result<String> {
    let (ring, inv) = parse_ring_spec(text)?;
    Ok(serialize_ring(&ring, inv.as_ref()))
}

pub fn parse_group_doc(text: &str) -> Result<GroupDocument> {
    let doc: GroupDocument = from_json(text)?;
    check_schema(&doc.schema, GROUP_SCHEMA)?;
    Ok(doc)
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let doc = parse_group_doc(text)?;
    Ok(group_from_cayley(doc.cayley, doc.labels)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_associative_rows_are_located() {
        // e0·e0 = e1 with e1·e0 = e0 and e0·e1 = 0 breaks (e0 e0) e0 = e0 (e0 e0).
        let text = "{\n  \"schema\": \"rickart.ring/v1\",\n  \"orders\": [2, 2],\n  \"mul\": [\n    [[0, 1], [0, 0]],\n    [[1, 0], [0, 0]]\n  ]\n}";
        match parse_ring_spec(text) {
            Err(CliError::Located { line, source: rickart_core::Error::NonAssociative { .. }, .. }) => {
                assert!(line >= 5)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_fields_are_parse_errors() {
        let text = r#"{"schema": "rickart.ring/v1", "orders": [2], "mul": [[[1]]], "extra": 1}"#;
        assert!(matches!(parse_ring_spec(text), Err(CliError::Parse { line: 1, .. })));
    }
}
