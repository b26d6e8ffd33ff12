//! Parallel scans over element index ranges.
//!
//! Ranges are cut into fixed-size blocks; each block decodes its first
//! element and then walks the odometer. Results are merged in index order so
//! the outcome never depends on the worker count.

use rayon::prelude::*;

use crate::additive::AdditiveGroup;

const BLOCK: u64 = 2048;

fn blocks(start: u64, end: u64) -> impl IndexedParallelIterator<Item = (u64, u64)> {
    let count = (end.saturating_sub(start)).div_ceil(BLOCK) as usize;
    (0..count).into_par_iter().map(move |b| {
        let lo = start + b as u64 * BLOCK;
        (lo, (lo + BLOCK).min(end))
    })
}

/// Smallest index in `start..end` whose element satisfies `pred`.
pub(crate) fn find_first<F>(group: &AdditiveGroup, start: u64, end: u64, pred: F) -> Option<u64>
where
    F: Fn(&[u64]) -> bool + Sync,
{
    blocks(start, end).find_map_first(|(lo, hi)| {
        let mut x = group.coords_of(lo);
        for idx in lo..hi {
            if pred(&x) {
                return Some(idx);
            }
            group.increment(&mut x);
        }
        None
    })
}

/// All indices in `0..group.size()` satisfying `pred`, ascending.
pub(crate) fn filter<F>(group: &AdditiveGroup, pred: F) -> Vec<u64>
where
    F: Fn(&[u64]) -> bool + Sync,
{
    let n = group.size().expect("scan over an unindexable group");
    let parts: Vec<Vec<u64>> = blocks(0, n)
        .map(|(lo, hi)| {
            let mut x = group.coords_of(lo);
            let mut hits = Vec::new();
            for idx in lo..hi {
                if pred(&x) {
                    hits.push(idx);
                }
                group.increment(&mut x);
            }
            hits
        })
        .collect();
    parts.into_iter().flatten().collect()
}

/// An additive map given by the images of the source basis vectors.
///
/// Walking the source in odometer order, every touched coordinate adds its
/// column once: a wrap from `d-1` to `0` adds `-(d-1)·col = col` because
/// `d·col = 0` for a well-defined map.
pub(crate) struct LinearScan<'a> {
    pub source: &'a AdditiveGroup,
    pub target: &'a AdditiveGroup,
    pub columns: Vec<Vec<u64>>,
}

impl LinearScan<'_> {
    fn image_of(&self, x: &[u64]) -> Vec<u64> {
        let mut acc = self.target.zero();
        for (&c, col) in x.iter().zip(&self.columns) {
            for (a, (&v, &d)) in acc.iter_mut().zip(col.iter().zip(self.target.orders())) {
                *a = (*a + c * v) % d;
            }
        }
        acc
    }

    fn walk<F>(&self, lo: u64, hi: u64, mut visit: F)
    where
        F: FnMut(u64, &[u64]),
    {
        let mut x = self.source.coords_of(lo);
        let mut image = self.image_of(&x);
        let orders = self.source.orders();
        for idx in lo..hi {
            visit(idx, &image);
            for q in (0..x.len()).rev() {
                self.target.add_assign(&mut image, &self.columns[q]);
                x[q] += 1;
                if x[q] < orders[q] {
                    break;
                }
                x[q] = 0;
            }
        }
    }

    /// Indices of source elements mapping to zero, ascending.
    pub fn kernel(&self) -> Vec<u64> {
        let n = self.source.size().expect("scan over an unindexable group");
        let parts: Vec<Vec<u64>> = blocks(0, n)
            .map(|(lo, hi)| {
                let mut hits = Vec::new();
                self.walk(lo, hi, |idx, image| {
                    if AdditiveGroup::is_zero(image) {
                        hits.push(idx);
                    }
                });
                hits
            })
            .collect();
        parts.into_iter().flatten().collect()
    }

    /// Target indices of the image, unsorted and possibly repeated.
    pub fn image_indices(&self) -> Vec<u64> {
        let n = self.source.size().expect("scan over an unindexable group");
        let parts: Vec<Vec<u64>> = blocks(0, n)
            .map(|(lo, hi)| {
                let mut out = Vec::new();
                self.walk(lo, hi, |_, image| out.push(self.target.index_of(image)));
                out
            })
            .collect();
        parts.into_iter().flatten().collect()
    }
}
