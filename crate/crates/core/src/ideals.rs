//! Annihilators, annihilator chains, idempotents, projections and the
//! one-sided ideals they generate.

use crate::embedding::IdealEmbedding;
use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::ring::{FiniteRing, RingElement};
use crate::scan::{self, LinearScan};
use crate::subset::{ElementSubset, SubsetTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Right,
    Left,
}

/// `r(x) = {y : xy = 0}` (right) or `l(x) = {y : yx = 0}` (left), from raw
/// coordinates.
pub fn annihilator_of(ring: &FiniteRing, x: &[u64], side: Side) -> Result<ElementSubset> {
    let n = ring.exhaustive_size("annihilator scan")?;
    let columns = match side {
        Side::Right => ring.left_mul_columns(x),
        Side::Left => ring.right_mul_columns(x),
    };
    let kernel = LinearScan {
        source: ring.group(),
        target: ring.group(),
        columns,
    }
    .kernel();
    let tag = match side {
        Side::Right => SubsetTag::RightIdeal,
        Side::Left => SubsetTag::LeftIdeal,
    };
    let ann = ElementSubset::from_indices(ring.id(), n, kernel).tagged(tag);
    Ok(ann)
}

pub fn right_annihilator(ring: &FiniteRing, x: &RingElement) -> Result<ElementSubset> {
    ring.owns(x)?;
    annihilator_of(ring, x.coords(), Side::Right)
}

pub fn left_annihilator(ring: &FiniteRing, x: &RingElement) -> Result<ElementSubset> {
    ring.owns(x)?;
    annihilator_of(ring, x.coords(), Side::Left)
}

/// `r_I(x) = {s ∈ I : xs = 0}` for `x` in the ambient ring; the result is a
/// subset of the ideal ring's element space.
pub fn right_annihilator_within(emb: &IdealEmbedding, x: &RingElement) -> Result<ElementSubset> {
    emb.ambient().owns(x)?;
    annihilator_within_coords(emb, x.coords())
}

fn annihilator_within_coords(emb: &IdealEmbedding, x: &[u64]) -> Result<ElementSubset> {
    let ideal = emb.ideal();
    let n = ideal.exhaustive_size("relative annihilator scan")?;
    let columns = (0..ideal.rank())
        .map(|j| emb.ambient().mul_coords(x, &emb.embed(&ideal.basis_coords(j))))
        .collect();
    let kernel = LinearScan {
        source: ideal.group(),
        target: emb.ambient().group(),
        columns,
    }
    .kernel();
    let ann = ElementSubset::from_indices(ideal.id(), n, kernel).tagged(SubsetTag::RightIdeal);
    Ok(ann)
}

fn chain_from<F>(mut ann_of_power: F) -> Result<Vec<ElementSubset>>
where
    F: FnMut(u32) -> Result<ElementSubset>,
{
    let mut chain = vec![ann_of_power(1)?];
    let mut n = 1;
    loop {
        n += 1;
        let next = ann_of_power(n)?;
        debug_assert!(chain.last().unwrap().is_subset_of(&next), "chain monotonicity");
        if &next == chain.last().unwrap() {
            return Ok(chain);
        }
        chain.push(next);
    }
}

/// `r(x) ⊆ r(x²) ⊆ …` up to and including the first term equal to its
/// successor.
pub fn annihilator_chain(ring: &FiniteRing, x: &RingElement, side: Side) -> Result<Vec<ElementSubset>> {
    ring.owns(x)?;
    chain_of_coords(ring, x.coords(), side)
}

pub(crate) fn chain_of_coords(ring: &FiniteRing, x: &[u64], side: Side) -> Result<Vec<ElementSubset>> {
    let mut power = x.to_vec();
    let mut last = 1;
    chain_from(|n| {
        while last < n {
            power = ring.mul_coords(&power, x);
            last += 1;
        }
        annihilator_of(ring, &power, side)
    })
}

pub fn annihilator_chain_within(emb: &IdealEmbedding, x: &RingElement) -> Result<Vec<ElementSubset>> {
    emb.ambient().owns(x)?;
    let ambient = emb.ambient();
    let mut power = x.coords().to_vec();
    let mut last = 1;
    chain_from(|n| {
        while last < n {
            power = ambient.mul_coords(&power, x.coords());
            last += 1;
        }
        annihilator_within_coords(emb, &power)
    })
}

pub fn chain_sizes(chain: &[ElementSubset]) -> Vec<u64> {
    chain.iter().map(ElementSubset::count).collect()
}

/// All `x` with `x² = x`, in canonical order.
pub fn enumerate_idempotents(ring: &FiniteRing) -> Result<Vec<RingElement>> {
    ring.exhaustive_size("idempotent scan")?;
    let hits = scan::filter(ring.group(), |x| ring.mul_coords(x, x) == x);
    Ok(hits.into_iter().map(|i| ring.element_at(i)).collect())
}

/// All `x` with `x² = x = x*`, in canonical order.
pub fn enumerate_projections(ring: &FiniteRing, inv: &Involution) -> Result<Vec<RingElement>> {
    inv.belongs_to(ring)?;
    ring.exhaustive_size("projection scan")?;
    let hits = scan::filter(ring.group(), |x| {
        ring.mul_coords(x, x) == x && inv.apply_coords(x) == x
    });
    Ok(hits.into_iter().map(|i| ring.element_at(i)).collect())
}

fn image_subset(ring: &FiniteRing, columns: Vec<Vec<u64>>, tag: SubsetTag) -> Result<ElementSubset> {
    let n = ring.exhaustive_size("ideal image scan")?;
    let image = LinearScan {
        source: ring.group(),
        target: ring.group(),
        columns,
    }
    .image_indices();
    Ok(ElementSubset::from_indices(ring.id(), n, image).tagged(tag))
}

/// `eR = {e·s : s ∈ R}` for an idempotent `e`.
pub fn principal_right_ideal(ring: &FiniteRing, e: &RingElement) -> Result<ElementSubset> {
    ring.owns(e)?;
    principal_ideal_of(ring, e.coords(), Side::Right)
}

/// `Re = {s·e : s ∈ R}` for an idempotent `e`.
pub fn principal_left_ideal(ring: &FiniteRing, e: &RingElement) -> Result<ElementSubset> {
    ring.owns(e)?;
    principal_ideal_of(ring, e.coords(), Side::Left)
}

pub(crate) fn principal_ideal_of(ring: &FiniteRing, e: &[u64], side: Side) -> Result<ElementSubset> {
    if ring.mul_coords(e, e) != e {
        return Err(Error::NotIdempotent(e.to_vec()));
    }
    match side {
        Side::Right => image_subset(ring, ring.left_mul_columns(e), SubsetTag::RightIdeal),
        Side::Left => image_subset(ring, ring.right_mul_columns(e), SubsetTag::LeftIdeal),
    }
}

/// Smallest right ideal containing `x`: `ℤx + xR`.
pub fn generated_right_ideal(ring: &FiniteRing, x: &RingElement) -> Result<ElementSubset> {
    ring.owns(x)?;
    generated_ideal_of(ring, x.coords(), Side::Right)
}

pub fn generated_left_ideal(ring: &FiniteRing, x: &RingElement) -> Result<ElementSubset> {
    ring.owns(x)?;
    generated_ideal_of(ring, x.coords(), Side::Left)
}

pub(crate) fn generated_ideal_of(ring: &FiniteRing, x: &[u64], side: Side) -> Result<ElementSubset> {
    let (columns, tag) = match side {
        Side::Right => (ring.left_mul_columns(x), SubsetTag::RightIdeal),
        Side::Left => (ring.right_mul_columns(x), SubsetTag::LeftIdeal),
    };
    let products = image_subset(ring, columns, tag)?;
    let group = ring.group();
    let mut out = products.clone();
    let mut multiple = x.to_vec();
    for _ in 1..group.element_order(x) {
        for t in products.iter() {
            out.insert(group.index_of(&group.add(&multiple, &group.coords_of(t))));
        }
        group.add_assign(&mut multiple, x);
    }
    Ok(out.tagged(tag))
}

fn multiplicatively_closed(ring: &FiniteRing, set: &ElementSubset, side: Side) -> bool {
    let group = ring.group();
    set.iter().all(|i| {
        let s = group.coords_of(i);
        (0..ring.rank()).all(|j| {
            let e = ring.basis_coords(j);
            let p = match side {
                Side::Right => ring.mul_coords(&s, &e),
                Side::Left => ring.mul_coords(&e, &s),
            };
            set.contains(group.index_of(&p))
        })
    })
}

/// Contains zero, closed under addition, negation and multiplication by the
/// ring on the given side.
pub fn is_one_sided_ideal(ring: &FiniteRing, set: &ElementSubset, side: Side) -> bool {
    if set.ring() != ring.id() || !set.contains(0) {
        return false;
    }
    let group = ring.group();
    let members: Vec<Vec<u64>> = set.iter().map(|i| group.coords_of(i)).collect();
    let additive = members.iter().all(|a| {
        set.contains(group.index_of(&group.neg(a)))
            && members.iter().all(|b| set.contains(group.index_of(&group.add(a, b))))
    });
    additive && multiplicatively_closed(ring, set, side)
}

pub fn is_right_ideal(ring: &FiniteRing, set: &ElementSubset) -> bool {
    is_one_sided_ideal(ring, set, Side::Right)
}
