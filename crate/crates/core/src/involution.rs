//! Additive, anti-multiplicative, self-inverse maps.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::additive::AdditiveGroup;
use crate::error::{Error, Result};
use crate::limits;
use crate::ring::{FiniteRing, RingElement, RingId};

/// Pairs checked on top of the basis axioms when the ring is too large for
/// an all-pairs pass.
pub const SAMPLED_PAIRS: usize = 100_000;

/// All-pairs checks run automatically in [`make_involution`] below this size.
const AUTO_PAIRWISE: u64 = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    /// Basis images and basis products only. Complete by bilinearity.
    Basis,
    /// Basis checks plus every element and every pair.
    Exhaustive,
    /// Basis checks plus seeded random pairs.
    Sampled,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvolutionCheck {
    pub mode: CheckMode,
    pub elements_checked: u64,
    pub pairs_checked: u64,
}

#[derive(Debug, Clone)]
pub struct Involution {
    ring: RingId,
    images: Vec<Vec<u64>>,
    group: AdditiveGroup,
    check: InvolutionCheck,
}

/// Builds the additive extension of `basis_map` and validates the axioms.
pub fn make_involution(ring: &FiniteRing, basis_map: Vec<Vec<u64>>) -> Result<Involution> {
    let k = ring.rank();
    if basis_map.len() != k {
        return Err(Error::BadCoordinates(format!(
            "involution maps {} basis elements, ring has {k}",
            basis_map.len()
        )));
    }
    let group = ring.group().clone();
    for (i, img) in basis_map.iter().enumerate() {
        group.check(img)?;
        if !AdditiveGroup::is_zero(&group.scale(group.orders()[i] as i64, img)) {
            return Err(Error::NotAdditive(i));
        }
    }
    let mut inv = Involution {
        ring: ring.id(),
        images: basis_map,
        group,
        check: InvolutionCheck {
            mode: CheckMode::Basis,
            elements_checked: 0,
            pairs_checked: 0,
        },
    };
    inv.check_basis(ring)?;
    let n = ring.cardinality();
    inv.check = if n <= AUTO_PAIRWISE as u128 {
        inv.check_all_pairs(ring)?
    } else {
        inv.check_sampled(ring, SAMPLED_PAIRS, 0x1a5e)?
    };
    Ok(inv)
}

pub fn identity_involution(ring: &FiniteRing) -> Result<Involution> {
    make_involution(ring, (0..ring.rank()).map(|i| ring.basis_coords(i)).collect())
}

impl Involution {
    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn basis_images(&self) -> &[Vec<u64>] {
        &self.images
    }

    pub fn check_report(&self) -> &InvolutionCheck {
        &self.check
    }

    pub fn apply_coords(&self, x: &[u64]) -> Vec<u64> {
        let mut acc = self.group.zero();
        let orders = self.group.orders();
        for (&c, img) in x.iter().zip(&self.images) {
            if c != 0 {
                for ((a, &v), &d) in acc.iter_mut().zip(img).zip(orders) {
                    *a = (*a + c % d * v) % d;
                }
            }
        }
        acc
    }

    pub fn apply(&self, x: &RingElement) -> Result<RingElement> {
        if x.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(RingElement::from_parts(self.ring, self.apply_coords(x.coords())))
    }

    pub fn belongs_to(&self, ring: &FiniteRing) -> Result<()> {
        if ring.id() == self.ring {
            Ok(())
        } else {
            Err(Error::InvolutionMismatch)
        }
    }

    fn check_basis(&self, ring: &FiniteRing) -> Result<()> {
        let k = ring.rank();
        for i in 0..k {
            let e = ring.basis_coords(i);
            if self.apply_coords(&self.images[i]) != e {
                return Err(Error::NotInvolutive(e));
            }
        }
        for i in 0..k {
            for j in 0..k {
                let lhs = self.apply_coords(ring.basis_product(i, j));
                let rhs = ring.mul_coords(&self.images[j], &self.images[i]);
                if lhs != rhs {
                    return Err(Error::NotAntiMultiplicative {
                        x: ring.basis_coords(i),
                        y: ring.basis_coords(j),
                    });
                }
            }
        }
        Ok(())
    }

    fn check_pair(&self, ring: &FiniteRing, x: &[u64], y: &[u64], xs: &[u64], ys: &[u64]) -> Result<()> {
        if self.apply_coords(&ring.mul_coords(x, y)) != ring.mul_coords(ys, xs) {
            return Err(Error::NotAntiMultiplicative {
                x: x.to_vec(),
                y: y.to_vec(),
            });
        }
        if self.apply_coords(&self.group.add(x, y)) != self.group.add(xs, ys) {
            return Err(Error::NotAdditive(usize::MAX));
        }
        Ok(())
    }

    /// Every element involutive, every pair additive and anti-multiplicative.
    pub fn check_all_pairs(&self, ring: &FiniteRing) -> Result<InvolutionCheck> {
        self.belongs_to(ring)?;
        let n = ring.size_within("all-pairs involution check", limits::PAIRWISE_LIMIT)?;
        let group = &self.group;
        let stars: Vec<Vec<u64>> = (0..n).map(|i| self.apply_coords(&group.coords_of(i))).collect();
        let star_index: Vec<u64> = stars.iter().map(|s| group.index_of(s)).collect();
        for (i, &si) in star_index.iter().enumerate() {
            if star_index[si as usize] != i as u64 {
                return Err(Error::NotInvolutive(group.coords_of(i as u64)));
            }
        }
        let k = ring.rank();
        let orders = group.orders();
        (0..n).into_par_iter().try_for_each(|i| {
            let x = group.coords_of(i);
            let xs = &stars[i as usize];
            // y ↦ x·y and y ↦ y*·x* are additive; walk y in canonical order
            // and add the column of every coordinate the odometer touches.
            let right: Vec<Vec<u64>> = (0..k).map(|t| ring.mul_coords(&x, &ring.basis_coords(t))).collect();
            let left: Vec<Vec<u64>> = (0..k).map(|t| ring.mul_coords(&self.images[t], xs)).collect();
            let mut y = group.zero();
            let mut prod = group.zero();
            let mut rev = group.zero();
            let mut sum = group.zero();
            let mut star_sum = group.zero();
            for j in 0..n {
                let ys = &stars[j as usize];
                if star_index[group.index_of(&prod) as usize] != group.index_of(&rev) {
                    return Err(Error::NotAntiMultiplicative { x: x.clone(), y: y.clone() });
                }
                sum.copy_from_slice(&x);
                group.add_assign(&mut sum, &y);
                star_sum.copy_from_slice(xs);
                group.add_assign(&mut star_sum, ys);
                if stars[group.index_of(&sum) as usize] != star_sum {
                    return Err(Error::NotAdditive(usize::MAX));
                }
                for t in (0..k).rev() {
                    group.add_assign(&mut prod, &right[t]);
                    group.add_assign(&mut rev, &left[t]);
                    y[t] += 1;
                    if y[t] < orders[t] {
                        break;
                    }
                    y[t] = 0;
                }
            }
            Ok(())
        })?;
        Ok(InvolutionCheck {
            mode: CheckMode::Exhaustive,
            elements_checked: n,
            pairs_checked: n * n,
        })
    }

    /// Seeded random pairs; deterministic for a given seed.
    pub fn check_sampled(&self, ring: &FiniteRing, pairs: usize, seed: u64) -> Result<InvolutionCheck> {
        self.belongs_to(ring)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..pairs {
            let x = ring.random_coords(&mut rng);
            let y = ring.random_coords(&mut rng);
            let xs = self.apply_coords(&x);
            if self.apply_coords(&xs) != x {
                return Err(Error::NotInvolutive(x));
            }
            let ys = self.apply_coords(&y);
            self.check_pair(ring, &x, &y, &xs, &ys)?;
        }
        Ok(InvolutionCheck {
            mode: CheckMode::Sampled,
            elements_checked: pairs as u64,
            pairs_checked: pairs as u64,
        })
    }

    /// All pairs when the ring has at most [`limits::PAIRWISE_LIMIT`] elements,
    /// otherwise basis products plus [`SAMPLED_PAIRS`] random pairs.
    pub fn verify_suite(&self, ring: &FiniteRing) -> Result<InvolutionCheck> {
        self.belongs_to(ring)?;
        self.check_basis(ring)?;
        if ring.cardinality() <= limits::PAIRWISE_LIMIT as u128 {
            self.check_all_pairs(ring)
        } else {
            self.check_sampled(ring, SAMPLED_PAIRS, 0xbeef)
        }
    }
}
