//! Finite groups given by Cayley tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    cayley: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
    name: String,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    /// Short name used in provenance strings, e.g. `C2`.
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// `Z_n` written multiplicatively: element `i` is `g^i`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::NotAGroup {
            reason: "cyclic group of order 0".into(),
            witness: vec![],
        });
    }
    let cayley = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    Ok(FiniteGroup {
        cayley,
        identity: 0,
        inverse: (0..n).map(|a| (n - a) % n).collect(),
        labels,
        name: format!("C{n}"),
    })
}

/// Validates closure, associativity, identity and inverses.
pub fn group_from_cayley(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<FiniteGroup> {
    let n = table.len();
    let fail = |reason: &str, witness: Vec<usize>| Error::NotAGroup {
        reason: reason.into(),
        witness,
    };
    if n == 0 {
        return Err(fail("empty table", vec![]));
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(fail("table is not square", vec![a]));
        }
        if let Some(b) = row.iter().position(|&c| c >= n) {
            return Err(fail("entry outside the index range", vec![a, b]));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(fail("not associative", vec![a, b, c]));
                }
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| fail("no identity", vec![]))?;
    let mut inverse = Vec::with_capacity(n);
    for a in 0..n {
        let inv = (0..n)
            .find(|&b| table[a][b] == identity && table[b][a] == identity)
            .ok_or_else(|| fail("element without inverse", vec![a]))?;
        inverse.push(inv);
    }
    let labels = match labels {
        Some(l) if l.len() != n => return Err(fail("label count differs from order", vec![l.len()])),
        Some(l) => l,
        None => (0..n)
            .map(|i| if i == identity { "e".into() } else { format!("h{i}") })
            .collect(),
    };
    Ok(FiniteGroup {
        cayley: table,
        identity,
        inverse,
        labels,
        name: format!("G{n}"),
    })
}
