//! Derived rings: group rings, unitizations, triangular and constant-diagonal
//! matrix rings, truncated polynomial rings, and the involutions lifted onto
//! them.
//!
//! Basis order is always base-ring basis major, group element or matrix
//! position minor.

use std::sync::Arc;

use serde::Serialize;

use crate::additive::AdditiveGroup;
pub use crate::embedding::IdealEmbedding;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::involution::{make_involution, Involution};
use crate::limits;
use crate::ring::{make_ring, FiniteRing, RingSpec, Symbol};

/// Largest cardinality a constructed ring may have; element indices must fit
/// in `u64`.
pub const CONSTRUCTION_CAP: u64 = 1 << 62;

fn check_size(what: &str, orders: &[u64]) -> Result<()> {
    let size = orders
        .iter()
        .fold(1u128, |acc, &d| acc.saturating_mul(d as u128));
    limits::ensure_within(what, size, CONSTRUCTION_CAP)
}

/// Spread `coords` (over the base basis) into the slot `slot` of a layout
/// with `slots` positions per base basis element.
fn spread(coords: &[u64], slot: usize, slots: usize) -> Vec<u64> {
    let mut out = vec![0; coords.len() * slots];
    for (r, &c) in coords.iter().enumerate() {
        out[r * slots + slot] = c;
    }
    out
}

fn add_into(group: &AdditiveGroup, acc: &mut Vec<u64>, v: &[u64]) {
    group.add_assign(acc, v);
}

fn repeated_orders(base: &FiniteRing, slots: usize) -> Vec<u64> {
    base.orders()
        .iter()
        .flat_map(|&d| std::iter::repeat(d).take(slots))
        .collect()
}

fn compound_label(base: &str, suffix: &str) -> String {
    if base == "1" {
        suffix.to_string()
    } else {
        format!("{base}*{suffix}")
    }
}

/// `RG` with convolution product.
pub fn group_ring(base: &FiniteRing, group: &FiniteGroup) -> Result<FiniteRing> {
    let m = group.order();
    let k = base.rank();
    let orders = repeated_orders(base, m);
    check_size("group ring", &orders)?;
    let size = k * m;
    let mut mul = vec![vec![vec![0u64; size]; size]; size];
    for i in 0..k {
        for j in 0..k {
            let prod = base.basis_product(i, j);
            for g in 0..m {
                for h in 0..m {
                    mul[i * m + g][j * m + h] = spread(prod, group.op(g, h), m);
                }
            }
        }
    }
    let labels = (0..k)
        .flat_map(|i| {
            group
                .labels()
                .iter()
                .map(move |h| compound_label(&base.labels()[i], h))
        })
        .collect();
    let unity = base.unity_coords().map(|u| spread(u, group.identity(), m));
    let mut ring = make_ring(RingSpec {
        orders,
        mul,
        unity,
        labels: Some(labels),
    })?
    .set_provenance(format!("GR({}, {})", base.provenance(), group.name()));
    for (g, h) in group.labels().iter().enumerate() {
        ring.push_symbol(Symbol {
            name: h.clone(),
            value: base.unity_coords().map(|u| spread(u, g, m)),
        });
    }
    Ok(ring)
}

/// `U(R) = ℤ_N ⊕ R` with `N` the additive exponent of `R`, and `R` as the
/// ideal `{(0, r)}`.
#[derive(Debug, Clone)]
pub struct Unitization {
    pub ring: Arc<FiniteRing>,
    pub embedding: IdealEmbedding,
}

pub fn unitization(base: &FiniteRing) -> Result<Unitization> {
    let base = Arc::new(base.clone());
    let n = base.additive_exponent();
    let k = base.rank();
    if n == 1 {
        // Unitizing the zero ring gives the zero ring, whose unity is 0.
        let ring = make_ring(RingSpec {
            orders: vec![],
            mul: vec![],
            unity: Some(vec![]),
            labels: Some(vec![]),
        })?
        .set_provenance(format!("U({})", base.provenance()));
        let ring = Arc::new(ring);
        let embedding = IdealEmbedding::new(Arc::clone(&ring), base, vec![])?;
        return Ok(Unitization { ring, embedding });
    }
    let mut orders = vec![n];
    orders.extend_from_slice(base.orders());
    let unit = |v: &[u64]| {
        let mut out = vec![0];
        out.extend_from_slice(v);
        out
    };
    let mut mul = vec![vec![vec![0u64; k + 1]; k + 1]; k + 1];
    let mut one = vec![0u64; k + 1];
    one[0] = 1;
    mul[0][0] = one.clone();
    for j in 0..k {
        let e = unit(&base.basis_coords(j));
        mul[0][j + 1] = e.clone();
        mul[j + 1][0] = e;
        for i in 0..k {
            mul[i + 1][j + 1] = unit(base.basis_product(i, j));
        }
    }
    let unit_label = if base.labels().iter().any(|l| l == "1") {
        "1'".to_string()
    } else {
        "1".to_string()
    };
    let mut labels = vec![unit_label];
    labels.extend(base.labels().iter().cloned());
    let ring = make_ring(RingSpec {
        orders,
        mul,
        unity: Some(one),
        labels: Some(labels),
    })?
    .set_provenance(format!("U({})", base.provenance()));
    let ring = Arc::new(ring);
    let embedding = IdealEmbedding::new(Arc::clone(&ring), base, (1..=k).collect())?;
    Ok(Unitization { ring, embedding })
}

/// `Ũ = U(R)G` together with `RG` embedded as a two-sided ideal.
#[derive(Debug, Clone)]
pub struct ExtensionGroupRing {
    pub unitization: Unitization,
    pub embedding: IdealEmbedding,
}

impl ExtensionGroupRing {
    pub fn ambient(&self) -> &FiniteRing {
        self.embedding.ambient()
    }

    pub fn ideal(&self) -> &FiniteRing {
        self.embedding.ideal()
    }

    /// `1·g` for the group element with index `g`.
    pub fn group_element(&self, g: usize, group: &FiniteGroup) -> Vec<u64> {
        let unit = self.unitization.ring.unity_coords().expect("unitization has unity");
        spread(unit, g, group.order())
    }
}

pub fn extension_group_ring(base: &FiniteRing, group: &FiniteGroup) -> Result<ExtensionGroupRing> {
    let unitization = unitization(base)?;
    let ambient = group_ring(&unitization.ring, group)?
        .set_provenance(format!("XGR({}, {})", base.provenance(), group.name()));
    let ideal = group_ring(base, group)?;
    let m = group.order();
    // ideal basis (i, g) sits at ambient basis (i + 1, g).
    let shift = if unitization.ring.rank() == base.rank() { 0 } else { 1 };
    let coord_map = (0..base.rank())
        .flat_map(|i| (0..m).map(move |g| (i + shift) * m + g))
        .collect();
    let embedding = IdealEmbedding::new(Arc::new(ambient), Arc::new(ideal), coord_map)?;
    Ok(ExtensionGroupRing {
        unitization,
        embedding,
    })
}

/// `(Σ a_g g)^⊛ = Σ a_g^* g⁻¹` on a ring built by [`group_ring`] from `base`.
pub fn lift_involution_group_ring(
    base: &FiniteRing,
    base_inv: &Involution,
    group: &FiniteGroup,
    ring: &FiniteRing,
) -> Result<Involution> {
    base_inv.belongs_to(base)?;
    let m = group.order();
    if ring.rank() != base.rank() * m {
        return Err(Error::InvolutionMismatch);
    }
    let images = (0..base.rank())
        .flat_map(|i| {
            (0..m).map(move |g| spread(&base_inv.basis_images()[i], group.inverse(g), m))
        })
        .collect();
    make_involution(ring, images)
}

/// `(k, r)* = (k, r*)` on a unitization.
pub fn unitization_involution(base_inv: &Involution, unit: &Unitization) -> Result<Involution> {
    let base = unit.embedding.ideal();
    base_inv.belongs_to(base)?;
    let ring = &unit.ring;
    let shift = ring.rank() - base.rank();
    let mut images = Vec::with_capacity(ring.rank());
    if shift == 1 {
        images.push(ring.basis_coords(0));
    }
    for img in base_inv.basis_images() {
        images.push(unit.embedding.embed(img));
    }
    make_involution(ring, images)
}

/// Upper-triangular positions `(i, j)`, `i <= j`, row-major, zero-based.
pub fn triangular_positions(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// `Tₙ(R)`: upper-triangular `n×n` matrices over `R`.
pub fn triangular_ring(base: &FiniteRing, n: usize) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::BadOrders("matrix size must be at least 1".into()));
    }
    let positions = triangular_positions(n);
    let slots = positions.len();
    let slot_of = |i: usize, j: usize| positions.iter().position(|&p| p == (i, j)).unwrap();
    let k = base.rank();
    let orders = repeated_orders(base, slots);
    check_size("triangular ring", &orders)?;
    let size = k * slots;
    let mut mul = vec![vec![vec![0u64; size]; size]; size];
    for a in 0..k {
        for b in 0..k {
            let prod = base.basis_product(a, b);
            for (p, &(i, j)) in positions.iter().enumerate() {
                for (q, &(j2, l)) in positions.iter().enumerate() {
                    if j == j2 {
                        mul[a * slots + p][b * slots + q] = spread(prod, slot_of(i, l), slots);
                    }
                }
            }
        }
    }
    let labels = (0..k)
        .flat_map(|r| {
            positions
                .iter()
                .map(move |&(i, j)| format!("{}[{},{}]", base.labels()[r], i + 1, j + 1))
        })
        .collect();
    let unity = base.unity_coords().map(|u| {
        let group = AdditiveGroup::new(repeated_orders(base, slots)).expect("orders");
        let mut acc = group.zero();
        for i in 0..n {
            add_into(&group, &mut acc, &spread(u, slot_of(i, i), slots));
        }
        acc
    });
    Ok(make_ring(RingSpec {
        orders,
        mul,
        unity,
        labels: Some(labels),
    })?
    .set_provenance(format!("T({}, {n})", base.provenance())))
}

/// `(a_ij)* = (a*_{n-j+1, n-i+1})` on a ring built by [`triangular_ring`].
pub fn anti_transpose_involution(
    base: &FiniteRing,
    base_inv: &Involution,
    n: usize,
    ring: &FiniteRing,
) -> Result<Involution> {
    base_inv.belongs_to(base)?;
    let positions = triangular_positions(n);
    let slots = positions.len();
    if ring.rank() != base.rank() * slots {
        return Err(Error::InvolutionMismatch);
    }
    let slot_of = |i: usize, j: usize| positions.iter().position(|&p| p == (i, j)).unwrap();
    let images = (0..base.rank())
        .flat_map(|r| {
            positions.iter().map(move |&(i, j)| {
                spread(&base_inv.basis_images()[r], slot_of(n - 1 - j, n - 1 - i), slots)
            })
        })
        .collect();
    make_involution(ring, images)
}

/// `T(R, n)`: tuples `(a₁, …, aₙ)` with
/// `(ab)_k = a₁b_k + a₂b_{k-1} + … + a_kb₁`.
pub fn const_diag_tri(base: &FiniteRing, n: usize) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::BadOrders("length must be at least 1".into()));
    }
    let k = base.rank();
    let orders = repeated_orders(base, n);
    check_size("constant-diagonal ring", &orders)?;
    let size = k * n;
    let group = AdditiveGroup::new(orders.clone())?;
    let mut mul = vec![vec![vec![0u64; size]; size]; size];
    for a in 0..k {
        for s in 0..n {
            for b in 0..k {
                for t in 0..n {
                    // Entry k (1-based) collects a_i b_j with i + j = k + 1.
                    let mut entry = group.zero();
                    if s + t < n {
                        add_into(&group, &mut entry, &spread(base.basis_product(a, b), s + t, n));
                    }
                    mul[a * n + s][b * n + t] = entry;
                }
            }
        }
    }
    let labels = (0..k)
        .flat_map(|r| (0..n).map(move |s| format!("{}[{}]", base.labels()[r], s + 1)))
        .collect();
    let unity = base.unity_coords().map(|u| spread(u, 0, n));
    Ok(make_ring(RingSpec {
        orders,
        mul,
        unity,
        labels: Some(labels),
    })?
    .set_provenance(format!("CT({}, {n})", base.provenance())))
}

/// Polynomials over `base` as coefficient lists, each coefficient a base
/// coordinate vector.
type Poly = Vec<Vec<u64>>;

fn poly_mul_truncated(base: &FiniteRing, f: &Poly, g: &Poly, n: usize) -> Poly {
    let mut out: Poly = vec![base.group().zero(); n];
    for (df, cf) in f.iter().enumerate() {
        for (dg, cg) in g.iter().enumerate() {
            if df + dg < n {
                let term = base.mul_coords(cf, cg);
                base.group().add_assign(&mut out[df + dg], &term);
            }
        }
    }
    out
}

fn monomial(base: &FiniteRing, r: usize, degree: usize, n: usize) -> Poly {
    let mut p: Poly = vec![base.group().zero(); n];
    p[degree] = base.basis_coords(r);
    p
}

/// Coefficient list to ring coordinates (base basis major, degree minor).
fn poly_coords(p: &Poly, n: usize, k: usize) -> Vec<u64> {
    let mut out = vec![0; k * n];
    for (deg, coeff) in p.iter().enumerate() {
        for (r, &c) in coeff.iter().enumerate() {
            out[r * n + deg] = c;
        }
    }
    out
}

fn poly_label(base: &str, degree: usize) -> String {
    let mono = match degree {
        0 => return base.to_string(),
        1 => "x".to_string(),
        d => format!("x^{d}"),
    };
    compound_label(base, &mono)
}

/// `R[x]/(xⁿ)`.
pub fn poly_quotient(base: &FiniteRing, n: usize) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::BadOrders("degree bound must be at least 1".into()));
    }
    let k = base.rank();
    let orders = repeated_orders(base, n);
    check_size("polynomial quotient", &orders)?;
    let size = k * n;
    let mut mul = vec![vec![vec![0u64; size]; size]; size];
    for a in 0..k {
        for s in 0..n {
            let f = monomial(base, a, s, n);
            for b in 0..k {
                for t in 0..n {
                    let g = monomial(base, b, t, n);
                    mul[a * n + s][b * n + t] = poly_coords(&poly_mul_truncated(base, &f, &g, n), n, k);
                }
            }
        }
    }
    let labels = (0..k)
        .flat_map(|r| (0..n).map(move |d| poly_label(&base.labels()[r], d)))
        .collect();
    let unity = base.unity_coords().map(|u| spread(u, 0, n));
    Ok(make_ring(RingSpec {
        orders,
        mul,
        unity,
        labels: Some(labels),
    })?
    .set_provenance(format!("PQ({}, {n})", base.provenance())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsoMode {
    Exhaustive,
    BasisProducts,
}

#[derive(Debug, Clone, Serialize)]
pub struct IsoReport {
    pub passed: bool,
    pub mode: IsoMode,
    pub additive: bool,
    pub multiplicative: bool,
    pub bijective: bool,
    pub unity_preserved: Option<bool>,
    pub pairs_checked: u64,
    pub counterexample: Option<(Vec<u64>, Vec<u64>)>,
}

/// `φ(a₁ + a₂x + … + aₙxⁿ⁻¹) = (a₁, …, aₙ)` as a map of coordinates.
pub fn phi(base_rank: usize, n: usize, poly: &[u64]) -> Vec<u64> {
    let mut out = vec![0; base_rank * n];
    for r in 0..base_rank {
        for deg in 0..n {
            out[r * n + deg] = poly[r * n + deg];
        }
    }
    out
}

/// Checks that `φ: R[x]/(xⁿ) → T(R, n)` is a ring isomorphism.
pub fn iso_polyquot_consttri(base: &FiniteRing, n: usize) -> Result<IsoReport> {
    let pq = poly_quotient(base, n)?;
    let ct = const_diag_tri(base, n)?;
    Ok(check_phi(base.rank(), n, &pq, &ct))
}

pub fn check_phi(base_rank: usize, n: usize, pq: &FiniteRing, ct: &FiniteRing) -> IsoReport {
    let map = |x: &[u64]| phi(base_rank, n, x);
    let mut report = IsoReport {
        passed: false,
        mode: IsoMode::BasisProducts,
        additive: true,
        multiplicative: true,
        bijective: pq.orders() == ct.orders(),
        unity_preserved: match (pq.unity_coords(), ct.unity_coords()) {
            (Some(u), Some(v)) => Some(map(u) == v),
            (None, None) => None,
            _ => Some(false),
        },
        pairs_checked: 0,
        counterexample: None,
    };
    let size = pq.cardinality();
    if size * size <= limits::exhaustive_cap() as u128 * 4 && report.bijective {
        report.mode = IsoMode::Exhaustive;
        let n_el = size as u64;
        let mut images = std::collections::HashSet::new();
        let elems: Vec<Vec<u64>> = (0..n_el).map(|i| pq.group().coords_of(i)).collect();
        for x in &elems {
            images.insert(map(x));
        }
        report.bijective = images.len() as u64 == n_el;
        'outer: for x in &elems {
            for y in &elems {
                report.pairs_checked += 1;
                if map(&pq.group().add(x, y)) != ct.group().add(&map(x), &map(y)) {
                    report.additive = false;
                }
                if map(&pq.mul_coords(x, y)) != ct.mul_coords(&map(x), &map(y)) {
                    report.multiplicative = false;
                }
                if !report.additive || !report.multiplicative {
                    report.counterexample = Some((x.clone(), y.clone()));
                    break 'outer;
                }
            }
        }
    } else if report.bijective {
        for i in 0..pq.rank() {
            for j in 0..pq.rank() {
                report.pairs_checked += 1;
                let (x, y) = (pq.basis_coords(i), pq.basis_coords(j));
                if map(&pq.mul_coords(&x, &y)) != ct.mul_coords(&map(&x), &map(&y)) {
                    report.multiplicative = false;
                    report.counterexample.get_or_insert((x, y));
                }
            }
        }
    }
    report.passed = report.additive
        && report.multiplicative
        && report.bijective
        && report.unity_preserved != Some(false);
    report
}

/// Sends `(a₁, …, aₙ) ∈ T(R, n)` to the constant-diagonal matrix in `Tₙ(R)`.
pub fn const_diag_to_matrix(base_rank: usize, n: usize, x: &[u64]) -> Vec<u64> {
    let positions = triangular_positions(n);
    let slots = positions.len();
    let mut out = vec![0; base_rank * slots];
    for r in 0..base_rank {
        for (p, &(i, j)) in positions.iter().enumerate() {
            out[r * slots + p] = x[r * n + (j - i)];
        }
    }
    out
}

/// Checks on basis pairs that `T(R, n) → Tₙ(R)` is multiplicative.
pub fn const_diag_embeds(base: &FiniteRing, n: usize, ct: &FiniteRing, tn: &FiniteRing) -> bool {
    let k = base.rank();
    (0..ct.rank()).all(|i| {
        (0..ct.rank()).all(|j| {
            let (x, y) = (ct.basis_coords(i), ct.basis_coords(j));
            const_diag_to_matrix(k, n, &ct.mul_coords(&x, &y))
                == tn.mul_coords(&const_diag_to_matrix(k, n, &x), &const_diag_to_matrix(k, n, &y))
        })
    })
}

/// `r ↦ diag(r, …, r)` into `Tₙ(R)`.
pub fn diagonal_embedding(base_rank: usize, n: usize, r: &[u64]) -> Vec<u64> {
    let positions = triangular_positions(n);
    let slots = positions.len();
    let mut out = vec![0; base_rank * slots];
    for (b, &c) in r.iter().enumerate() {
        for (p, &(i, j)) in positions.iter().enumerate() {
            if i == j {
                out[b * slots + p] = c;
            }
        }
    }
    out
}

pub fn triangular_slot(n: usize, i: usize, j: usize) -> usize {
    triangular_positions(n)
        .iter()
        .position(|&p| p == (i, j))
        .expect("upper-triangular position")
}
