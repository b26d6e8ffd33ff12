//! Kernels of additive maps between products of cyclic groups, computed by
//! integer column reduction instead of enumeration.
//!
//! For `f: ⊕ℤ/dⱼ → ⊕ℤ/tᵢ` with matrix `M` (column `j` is `f(eⱼ)`), the
//! preimage of zero lifted to `ℤᵏ` is the projection of the integer kernel of
//! `[M | diag(t)]`. Column-reducing that matrix with a tracked unimodular
//! transform yields kernel generators directly.

use num_integer::Integer;

use crate::additive::AdditiveGroup;
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, RingElement};
use crate::subset::{ElementSubset, SubsetTag};

fn overflow() -> Error {
    Error::Internal("integer overflow in kernel reduction".into())
}

/// Generators (reduced mod the source orders) of `ker f`.
pub fn kernel_generators(
    source: &AdditiveGroup,
    target: &AdditiveGroup,
    columns: &[Vec<u64>],
) -> Result<Vec<Vec<u64>>> {
    let ks = source.rank();
    let kt = target.rank();
    let width = ks + kt;
    // a[row][col]
    let mut a = vec![vec![0i128; width]; kt];
    for (j, col) in columns.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            a[i][j] = v as i128;
        }
    }
    for (i, &t) in target.orders().iter().enumerate() {
        a[i][ks + i] = t as i128;
    }
    let mut u: Vec<Vec<i128>> = (0..width)
        .map(|c| (0..width).map(|r| (r == c) as i128).collect())
        .collect(); // u[col][row]

    let mut pivot = 0;
    for row in 0..kt {
        if pivot == width {
            break;
        }
        for q in pivot + 1..width {
            let (x, y) = (a[row][pivot], a[row][q]);
            if y == 0 {
                continue;
            }
            let eg = x.extended_gcd(&y);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let (xg, yg) = (x / g, y / g);
            // [p q] <- [s·p + t·q, -yg·p + xg·q], determinant 1.
            let mix = |p: i128, qv: i128| -> Result<(i128, i128)> {
                let np = s
                    .checked_mul(p)
                    .and_then(|v| t.checked_mul(qv).and_then(|w| v.checked_add(w)))
                    .ok_or_else(overflow)?;
                let nq = xg
                    .checked_mul(qv)
                    .and_then(|v| yg.checked_mul(p).and_then(|w| v.checked_sub(w)))
                    .ok_or_else(overflow)?;
                Ok((np, nq))
            };
            for r in a.iter_mut() {
                let (np, nq) = mix(r[pivot], r[q])?;
                r[pivot] = np;
                r[q] = nq;
            }
            for r in 0..width {
                let (np, nq) = mix(u[pivot][r], u[q][r])?;
                u[pivot][r] = np;
                u[q][r] = nq;
            }
        }
        if a[row][pivot] != 0 {
            pivot += 1;
        }
    }
    let gens = u[pivot..]
        .iter()
        .map(|col| {
            col[..ks]
                .iter()
                .zip(source.orders())
                .map(|(&v, &d)| v.rem_euclid(d as i128) as u64)
                .collect::<Vec<u64>>()
        })
        .filter(|g| !AdditiveGroup::is_zero(g))
        .collect();
    Ok(gens)
}

/// The subgroup generated by `gens`, as ascending element indices.
pub fn span(group: &AdditiveGroup, gens: &[Vec<u64>]) -> Vec<u64> {
    let n = group.size().expect("span over an unindexable group");
    let mut seen = vec![false; n as usize];
    seen[0] = true;
    let mut members = vec![group.zero()];
    // H + <g> = { h + t·g } for a subgroup H.
    for g in gens {
        let mut grown = Vec::new();
        for h in &members {
            let mut cur = group.add(h, g);
            loop {
                let idx = group.index_of(&cur) as usize;
                if seen[idx] {
                    break;
                }
                seen[idx] = true;
                grown.push(cur.clone());
                cur = group.add(&cur, g);
            }
        }
        members.extend(grown);
    }
    (0..n).filter(|&i| seen[i as usize]).collect()
}

/// Right annihilator of `x` via the kernel of left multiplication.
pub fn right_annihilator_by_kernel(ring: &FiniteRing, x: &RingElement) -> Result<ElementSubset> {
    ring.owns(x)?;
    let n = ring.exhaustive_size("kernel span")?;
    let columns: Vec<Vec<u64>> = (0..ring.rank())
        .map(|j| ring.mul_coords(x.coords(), &ring.basis_coords(j)))
        .collect();
    let gens = kernel_generators(ring.group(), ring.group(), &columns)?;
    let members = span(ring.group(), &gens);
    Ok(ElementSubset::from_indices(ring.id(), n, members).tagged(SubsetTag::RightIdeal))
}
