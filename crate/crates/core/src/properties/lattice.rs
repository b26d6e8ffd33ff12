//! One-sided ideal lattices of very small rings.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::Result;
use crate::ideals::{generated_ideal_of, Side};
use crate::kernel::span;
use crate::limits;
use crate::ring::FiniteRing;
use crate::subset::{ElementSubset, SubsetTag};

/// Largest ring whose ideal lattice is materialised.
pub const LATTICE_CAP: u64 = 1 << 8;

/// All one-sided ideals on `side`, sorted by size then members. Fails once
/// more than `max_ideals` have been found.
pub fn enumerate_ideals(ring: &FiniteRing, side: Side, max_ideals: usize) -> Result<Vec<ElementSubset>> {
    let n = ring.size_within("ideal lattice", LATTICE_CAP)?;
    let group = ring.group();
    let tag = match side {
        Side::Right => SubsetTag::RightIdeal,
        Side::Left => SubsetTag::LeftIdeal,
    };
    let mut principal: Vec<ElementSubset> = Vec::new();
    for i in 0..n {
        let p = generated_ideal_of(ring, &group.coords_of(i), side)?;
        if !principal.contains(&p) {
            principal.push(p);
        }
    }
    // Every ideal is a finite sum of principal ones.
    let zero = ElementSubset::from_indices(ring.id(), n, [0]).tagged(tag);
    let mut found: HashSet<ElementSubset> = HashSet::from([zero.clone()]);
    let mut queue = vec![zero];
    while let Some(ideal) = queue.pop() {
        for p in &principal {
            if p.is_subset_of(&ideal) {
                continue;
            }
            let gens: Vec<Vec<u64>> = ideal.iter().chain(p.iter()).map(|i| group.coords_of(i)).collect();
            let sum = ElementSubset::from_indices(ring.id(), n, span(group, &gens)).tagged(tag);
            if found.insert(sum.clone()) {
                limits::ensure_within("ideal count", found.len() as u128, max_ideals as u64)?;
                queue.push(sum);
            }
        }
    }
    let mut out: Vec<ElementSubset> = found.into_iter().collect();
    out.sort_by(|a, b| {
        a.count()
            .cmp(&b.count())
            .then_with(|| a.iter().collect::<Vec<_>>().cmp(&b.iter().collect::<Vec<_>>()))
    });
    Ok(out)
}

pub fn enumerate_right_ideals(ring: &FiniteRing, max_ideals: usize) -> Result<Vec<ElementSubset>> {
    enumerate_ideals(ring, Side::Right, max_ideals)
}

/// Length of the longest strictly increasing chain in a lattice sorted by
/// size, counted in inclusions.
pub fn chain_height(lattice: &[ElementSubset]) -> usize {
    let mut height = vec![0usize; lattice.len()];
    for i in 0..lattice.len() {
        for j in 0..i {
            if lattice[j].count() < lattice[i].count() && lattice[j].is_subset_of(&lattice[i]) {
                height[i] = height[i].max(height[j] + 1);
            }
        }
    }
    height.into_iter().max().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArtinianCertificate {
    pub ring: String,
    pub cardinality: u64,
    pub right_ideals: usize,
    pub left_ideals: usize,
    pub right_height: usize,
    pub left_height: usize,
    /// Finite lattices satisfy both chain conditions.
    pub artinian: bool,
}

pub fn artinian_certificate(ring: &FiniteRing, max_ideals: usize) -> Result<ArtinianCertificate> {
    let right = enumerate_ideals(ring, Side::Right, max_ideals)?;
    let left = enumerate_ideals(ring, Side::Left, max_ideals)?;
    Ok(ArtinianCertificate {
        ring: ring.provenance().to_string(),
        cardinality: ring.cardinality() as u64,
        right_ideals: right.len(),
        left_ideals: left.len(),
        right_height: chain_height(&right),
        left_height: chain_height(&left),
        artinian: true,
    })
}
