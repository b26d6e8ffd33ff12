//! Finite abelian groups presented as products of cyclic groups.
//!
//! Elements are coordinate vectors; the canonical element order is
//! lexicographic on coordinates with the first coordinate most significant,
//! which is also the order used for element indices.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest cyclic factor accepted. Keeps every product of two coordinates
/// inside `u64`.
pub const MAX_ORDER: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdditiveGroup {
    orders: Vec<u64>,
}

impl AdditiveGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if let Some(bad) = orders.iter().find(|&&d| !(2..=MAX_ORDER).contains(&d)) {
            return Err(Error::BadOrders(format!(
                "cyclic order {bad} outside 2..={MAX_ORDER}"
            )));
        }
        Ok(AdditiveGroup { orders })
    }

    pub fn trivial() -> Self {
        AdditiveGroup { orders: Vec::new() }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// Number of elements, saturating at `u128::MAX`.
    pub fn cardinality(&self) -> u128 {
        self.orders
            .iter()
            .fold(1u128, |acc, &d| acc.saturating_mul(d as u128))
    }

    /// Cardinality as an index bound, if it fits.
    pub fn size(&self) -> Option<u64> {
        u64::try_from(self.cardinality()).ok()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &d| acc.lcm(&d))
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.orders.len()]
    }

    pub fn is_zero(x: &[u64]) -> bool {
        x.iter().all(|&c| c == 0)
    }

    pub fn check(&self, x: &[u64]) -> Result<()> {
        if x.len() != self.orders.len() {
            return Err(Error::BadCoordinates(format!(
                "expected {} coordinates, got {}",
                self.orders.len(),
                x.len()
            )));
        }
        for (i, (&c, &d)) in x.iter().zip(&self.orders).enumerate() {
            if c >= d {
                return Err(Error::BadCoordinates(format!(
                    "coordinate {i} is {c}, must be below {d}"
                )));
            }
        }
        Ok(())
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let mut out = x.to_vec();
        self.add_assign(&mut out, y);
        out
    }

    pub fn add_assign(&self, acc: &mut [u64], y: &[u64]) {
        for ((a, &b), &d) in acc.iter_mut().zip(y).zip(&self.orders) {
            *a += b;
            if *a >= d {
                *a -= d;
            }
        }
    }

    pub fn neg(&self, x: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(&self.orders)
            .map(|(&c, &d)| if c == 0 { 0 } else { d - c })
            .collect()
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        self.add(x, &self.neg(y))
    }

    /// `k·x` for any integer `k`.
    pub fn scale(&self, k: i64, x: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(&self.orders)
            .map(|(&c, &d)| {
                let k = (k as i128).rem_euclid(d as i128) as u64;
                k * c % d
            })
            .collect()
    }

    /// Additive order of `x`.
    pub fn element_order(&self, x: &[u64]) -> u64 {
        x.iter()
            .zip(&self.orders)
            .fold(1u64, |acc, (&c, &d)| acc.lcm(&(d / c.gcd(&d))))
    }

    pub fn index_of(&self, x: &[u64]) -> u64 {
        x.iter()
            .zip(&self.orders)
            .fold(0u64, |acc, (&c, &d)| acc * d + c)
    }

    pub fn coords_of(&self, mut index: u64) -> Vec<u64> {
        let mut out = vec![0; self.orders.len()];
        for (slot, &d) in out.iter_mut().zip(&self.orders).rev() {
            *slot = index % d;
            index /= d;
        }
        out
    }

    /// Advances `x` to its lexicographic successor and returns the positions
    /// that were touched (from the last coordinate backwards). Returns `false`
    /// on wrap-around to zero.
    pub fn increment(&self, x: &mut [u64]) -> bool {
        for (c, &d) in x.iter_mut().zip(&self.orders).rev() {
            *c += 1;
            if *c < d {
                return true;
            }
            *c = 0;
        }
        false
    }

    /// All elements in canonical order. Intended for small groups.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let n = self.size().unwrap_or(u64::MAX);
        (0..n).map(move |i| self.coords_of(i))
    }
}
