//! Brute-force reference implementations. They read only the orders and
//! the raw multiplication table and share no code with the engine.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rickart_core::FiniteRing;

pub struct Naive {
    pub orders: Vec<u64>,
    pub table: Vec<Vec<Vec<u64>>>,
}

impl Naive {
    pub fn of(ring: &FiniteRing) -> Self {
        Naive {
            orders: ring.orders().to_vec(),
            table: ring.mul_table(),
        }
    }

    pub fn size(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Mixed-radix decoding, first coordinate most significant.
    pub fn decode(&self, mut index: u64) -> Vec<u64> {
        let mut out = vec![0; self.orders.len()];
        for q in (0..self.orders.len()).rev() {
            out[q] = index % self.orders[q];
            index /= self.orders[q];
        }
        out
    }

    pub fn encode(&self, x: &[u64]) -> u64 {
        x.iter().zip(&self.orders).fold(0, |acc, (&c, &d)| acc * d + c)
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).zip(&self.orders).map(|((a, b), d)| (a + b) % d).collect()
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let k = self.orders.len();
        let mut acc = vec![0u128; k];
        for i in 0..k {
            for j in 0..k {
                let c = x[i] as u128 * y[j] as u128;
                if c == 0 {
                    continue;
                }
                for (t, &v) in self.table[i][j].iter().enumerate() {
                    acc[t] = (acc[t] + c * v as u128) % self.orders[t] as u128;
                }
            }
        }
        acc.into_iter().map(|v| v as u64).collect()
    }

    pub fn is_zero(x: &[u64]) -> bool {
        x.iter().all(|&c| c == 0)
    }

    pub fn elements(&self) -> Vec<Vec<u64>> {
        (0..self.size()).map(|i| self.decode(i)).collect()
    }

    pub fn pow(&self, x: &[u64], n: u32) -> Vec<u64> {
        let mut acc = x.to_vec();
        for _ in 1..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn right_ann(&self, x: &[u64]) -> BTreeSet<u64> {
        (0..self.size())
            .filter(|&i| Self::is_zero(&self.mul(x, &self.decode(i))))
            .collect()
    }

    pub fn left_ann(&self, x: &[u64]) -> BTreeSet<u64> {
        (0..self.size())
            .filter(|&i| Self::is_zero(&self.mul(&self.decode(i), x)))
            .collect()
    }

    pub fn idempotents(&self) -> Vec<u64> {
        (0..self.size())
            .filter(|&i| {
                let e = self.decode(i);
                self.mul(&e, &e) == e
            })
            .collect()
    }

    /// `eR` as index set.
    pub fn right_multiples(&self, e: &[u64]) -> BTreeSet<u64> {
        (0..self.size()).map(|i| self.encode(&self.mul(e, &self.decode(i)))).collect()
    }

    /// Total number of prime factors of |R|, counted with multiplicity. A
    /// strictly increasing chain of subgroups has at most this many steps.
    pub fn omega(&self) -> u32 {
        let mut n = self.size();
        let mut count = 0;
        let mut p = 2;
        while n > 1 {
            while n % p == 0 {
                n /= p;
                count += 1;
            }
            p += 1;
        }
        count
    }

    /// Every distinct term of `r(x), r(x²), …`, by computing enough powers
    /// to pass every possible strict increase.
    pub fn chain_terms(&self, x: &[u64]) -> Vec<BTreeSet<u64>> {
        (1..=self.omega() + 2).map(|n| self.right_ann(&self.pow(x, n))).collect()
    }

    /// Least index whose chain never meets an `eR`, if any.
    pub fn gen_right_pp_witness(&self) -> Option<u64> {
        let targets: Vec<BTreeSet<u64>> = self
            .idempotents()
            .iter()
            .map(|&e| self.right_multiples(&self.decode(e)))
            .collect();
        (0..self.size()).find(|&i| {
            let x = self.decode(i);
            !self.chain_terms(&x).iter().any(|t| targets.contains(t))
        })
    }

    /// Least index with `r(x)` not of the form `eR`, if any.
    pub fn right_rickart_witness(&self) -> Option<u64> {
        let targets: Vec<BTreeSet<u64>> = self
            .idempotents()
            .iter()
            .map(|&e| self.right_multiples(&self.decode(e)))
            .collect();
        (0..self.size()).find(|&i| !targets.contains(&self.right_ann(&self.decode(i))))
    }

    pub fn is_commutative(&self) -> bool {
        let els = self.elements();
        els.iter().all(|x| els.iter().all(|y| self.mul(x, y) == self.mul(y, x)))
    }
}

pub fn indices(set: &rickart_core::ElementSubset) -> BTreeSet<u64> {
    set.iter().collect()
}

use rickart_core::catalog::{CatalogKey, FineKind};
use rickart_core::recipe::{GroupRecipe, Recipe};

pub fn cat(kind: FineKind, p: u64) -> Recipe {
    Recipe::catalog(CatalogKey::Fine(kind, p))
}

pub fn z(n: u64) -> Recipe {
    Recipe::catalog(CatalogKey::Z(n))
}

pub fn null(n: u64) -> Recipe {
    Recipe::catalog(CatalogKey::Null(n))
}

/// Rings small enough for the brute-force oracle.
pub fn small_rings() -> Vec<FiniteRing> {
    use FineKind::*;
    let c2 = GroupRecipe::Cyclic(2);
    let recipes = vec![
        z(1),
        z(4),
        z(6),
        z(8),
        null(3),
        cat(A, 3),
        cat(B, 3),
        cat(C, 3),
        cat(D, 3),
        cat(A, 2),
        cat(C, 5),
        z(2).group_ring(c2.clone()),
        z(3).group_ring(c2.clone()),
        cat(A, 3).group_ring(c2.clone()),
        cat(C, 3).group_ring(c2.clone()),
        z(2).triangular(2),
        z(4).triangular(2),
        null(2).triangular(2),
        z(4).const_diag(2),
        z(4).poly_quot(2),
        cat(A, 2).const_diag(2),
        null(2).unitization(),
        cat(A, 2).unitization(),
        null(2).extension(c2),
    ];
    recipes.iter().map(|r| r.evaluate().expect("test ring builds")).collect()
}
