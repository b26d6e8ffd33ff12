//! Finite, possibly non-unital, associative rings given by structure
//! constants over a product of cyclic groups.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::additive::AdditiveGroup;
use crate::error::{Error, Result};
use crate::limits;
use crate::scan;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RingId(u64);

impl RingId {
    fn fresh() -> Self {
        RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed))
    }
}

/// A coordinate vector tagged with its owning ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: RingId,
    coords: Vec<u64>,
}

impl RingElement {
    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        AdditiveGroup::is_zero(&self.coords)
    }
}

/// A name usable in element expressions that is not a basis label, such as
/// a group element `g` standing for `1·g`. `value` is `None` when the ring
/// has no integer-scalar block to give the name a meaning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Symbol {
    pub name: String,
    pub value: Option<Vec<u64>>,
}

/// Raw input to [`make_ring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    pub orders: Vec<u64>,
    /// `mul[i][j]` is the coordinate vector of `e_i · e_j`.
    pub mul: Vec<Vec<Vec<u64>>>,
    pub unity: Option<Vec<u64>>,
    pub labels: Option<Vec<String>>,
}

type Terms = Vec<(usize, u64)>;

#[derive(Debug, Clone)]
pub struct FiniteRing {
    id: RingId,
    group: AdditiveGroup,
    table: Vec<Vec<u64>>,
    sparse: Vec<Terms>,
    labels: Vec<String>,
    unity: Option<Vec<u64>>,
    symbols: Vec<Symbol>,
    provenance: String,
}

/// Validates a structure-constant table and builds the ring.
pub fn make_ring(spec: RingSpec) -> Result<FiniteRing> {
    let group = AdditiveGroup::new(spec.orders)?;
    let k = group.rank();
    if spec.mul.len() != k {
        return Err(Error::BadTable(format!("expected {k} rows, got {}", spec.mul.len())));
    }
    let mut table = Vec::with_capacity(k * k);
    for (i, row) in spec.mul.into_iter().enumerate() {
        if row.len() != k {
            return Err(Error::BadTable(format!(
                "row {i} has {} entries, expected {k}",
                row.len()
            )));
        }
        for (j, entry) in row.into_iter().enumerate() {
            group
                .check(&entry)
                .map_err(|e| Error::BadTable(format!("entry ({i}, {j}): {e}")))?;
            table.push(entry);
        }
    }
    let orders = group.orders().to_vec();
    for i in 0..k {
        for j in 0..k {
            let m = &table[i * k + j];
            let left = group.scale(orders[i] as i64, m);
            let right = group.scale(orders[j] as i64, m);
            if !AdditiveGroup::is_zero(&left) || !AdditiveGroup::is_zero(&right) {
                return Err(Error::IllDefined { i, j });
            }
        }
    }
    let labels = match spec.labels {
        Some(labels) if labels.len() != k => {
            return Err(Error::BadTable(format!(
                "{} labels for {k} basis elements",
                labels.len()
            )))
        }
        Some(labels) => labels,
        None => (0..k).map(|i| format!("e{i}")).collect(),
    };
    let sparse = table
        .iter()
        .map(|m| {
            m.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(l, &c)| (l, c))
                .collect()
        })
        .collect();
    let mut ring = FiniteRing {
        id: RingId::fresh(),
        group,
        table,
        sparse,
        labels,
        unity: None,
        symbols: Vec::new(),
        provenance: String::from("table"),
    };
    ring.check_associative()?;
    ring.spot_check_distributive();
    if let Some(u) = spec.unity {
        ring.group
            .check(&u)
            .map_err(|e| Error::BadUnity(e.to_string()))?;
        for i in 0..k {
            let e = ring.basis_coords(i);
            if ring.mul_coords(&u, &e) != e || ring.mul_coords(&e, &u) != e {
                return Err(Error::BadUnity(format!(
                    "fails against basis element {}",
                    ring.labels[i]
                )));
            }
        }
        ring.unity = Some(u);
    }
    if !ring.labels.iter().any(|l| l == "1") {
        ring.symbols.push(Symbol {
            name: "1".into(),
            value: ring.unity.clone(),
        });
    }
    Ok(ring)
}

impl FiniteRing {
    fn check_associative(&self) -> Result<()> {
        let k = self.rank();
        for i in 0..k {
            for j in 0..k {
                let ij = &self.table[i * k + j];
                for l in 0..k {
                    let left = self.mul_coords(ij, &self.basis_coords(l));
                    let jl = &self.table[j * k + l];
                    let right = self.mul_coords(&self.basis_coords(i), jl);
                    if left != right {
                        return Err(Error::NonAssociative { i, j, l });
                    }
                }
            }
        }
        Ok(())
    }

    // Bilinear extension makes this automatic; kept as a guard on mul_coords.
    fn spot_check_distributive(&self) {
        if self.rank() == 0 {
            return;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..16 {
            let [x, y, z] = [(); 3].map(|_| self.random_coords(&mut rng));
            let lhs = self.mul_coords(&x, &self.group.add(&y, &z));
            let rhs = self.group.add(&self.mul_coords(&x, &y), &self.mul_coords(&x, &z));
            debug_assert_eq!(lhs, rhs, "left distributivity");
            let lhs = self.mul_coords(&self.group.add(&x, &y), &z);
            let rhs = self.group.add(&self.mul_coords(&x, &z), &self.mul_coords(&y, &z));
            debug_assert_eq!(lhs, rhs, "right distributivity");
        }
    }

    pub(crate) fn set_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub(crate) fn push_symbol(&mut self, symbol: Symbol) {
        if !self.labels.contains(&symbol.name) && self.symbol(&symbol.name).is_none() {
            self.symbols.push(symbol);
        }
    }

    pub fn with_provenance(self, provenance: impl Into<String>) -> Self {
        self.set_provenance(provenance)
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn group(&self) -> &AdditiveGroup {
        &self.group
    }

    pub fn orders(&self) -> &[u64] {
        self.group.orders()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn cardinality(&self) -> u128 {
        self.group.cardinality()
    }

    /// Cardinality as a `u64` once it is known to be within `cap`.
    pub fn size_within(&self, what: &str, cap: u64) -> Result<u64> {
        limits::ensure_within(what, self.cardinality(), cap)?;
        Ok(self.cardinality() as u64)
    }

    /// Cardinality checked against the process-wide exhaustive cap.
    pub fn exhaustive_size(&self, what: &str) -> Result<u64> {
        self.size_within(what, limits::exhaustive_cap())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol(&self, name: &str) -> Option<&Symbol> {
        self.symbols.iter().find(|s| s.name == name)
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn unity_coords(&self) -> Option<&[u64]> {
        self.unity.as_deref()
    }

    pub fn unity(&self) -> Option<RingElement> {
        self.unity.clone().map(|coords| self.wrap(coords))
    }

    /// `mul[i][j]` as nested vectors, row-major.
    pub fn mul_table(&self) -> Vec<Vec<Vec<u64>>> {
        let k = self.rank();
        (0..k)
            .map(|i| (0..k).map(|j| self.table[i * k + j].clone()).collect())
            .collect()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        &self.table[i * self.rank() + j]
    }

    /// True when both rings have identical orders, tables, labels and unity.
    pub fn same_structure(&self, other: &FiniteRing) -> bool {
        self.group == other.group
            && self.table == other.table
            && self.labels == other.labels
            && self.unity == other.unity
    }

    pub(crate) fn wrap(&self, coords: Vec<u64>) -> RingElement {
        RingElement {
            ring: self.id,
            coords,
        }
    }

    pub fn element(&self, coords: Vec<u64>) -> Result<RingElement> {
        self.group.check(&coords)?;
        Ok(self.wrap(coords))
    }

    pub fn element_at(&self, index: u64) -> RingElement {
        self.wrap(self.group.coords_of(index))
    }

    pub fn index_of(&self, x: &RingElement) -> Result<u64> {
        self.owns(x)?;
        Ok(self.group.index_of(&x.coords))
    }

    pub fn zero(&self) -> RingElement {
        self.wrap(self.group.zero())
    }

    pub fn basis_coords(&self, i: usize) -> Vec<u64> {
        let mut e = self.group.zero();
        e[i] = 1;
        e
    }

    pub fn basis(&self, i: usize) -> RingElement {
        self.wrap(self.basis_coords(i))
    }

    pub fn owns(&self, x: &RingElement) -> Result<()> {
        if x.ring == self.id {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn random_coords<R: Rng>(&self, rng: &mut R) -> Vec<u64> {
        self.orders().iter().map(|&d| rng.gen_range(0..d)).collect()
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> RingElement {
        self.wrap(self.random_coords(rng))
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.owns(x)?;
        self.owns(y)?;
        Ok(self.wrap(self.group.add(&x.coords, &y.coords)))
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.owns(x)?;
        self.owns(y)?;
        Ok(self.wrap(self.group.sub(&x.coords, &y.coords)))
    }

    pub fn neg(&self, x: &RingElement) -> Result<RingElement> {
        self.owns(x)?;
        Ok(self.wrap(self.group.neg(&x.coords)))
    }

    pub fn int_scale(&self, k: i64, x: &RingElement) -> Result<RingElement> {
        self.owns(x)?;
        Ok(self.wrap(self.group.scale(k, &x.coords)))
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.owns(x)?;
        self.owns(y)?;
        Ok(self.wrap(self.mul_coords(&x.coords, &y.coords)))
    }

    /// Left-associated product of `n` copies of `x`.
    pub fn pow(&self, x: &RingElement, n: u32) -> Result<RingElement> {
        self.owns(x)?;
        if n == 0 {
            return Err(Error::NonPositiveExponent);
        }
        Ok(self.wrap(self.pow_coords(&x.coords, n)))
    }

    pub fn pow_coords(&self, x: &[u64], n: u32) -> Vec<u64> {
        assert!(n >= 1, "pow_coords needs n >= 1");
        let mut acc = x.to_vec();
        for _ in 1..n {
            acc = self.mul_coords(&acc, x);
        }
        acc
    }

    pub fn mul_coords(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let mut out = self.group.zero();
        self.mul_into(x, y, &mut out);
        out
    }

    /// `out = x·y` by bilinear extension of the structure constants.
    pub fn mul_into(&self, x: &[u64], y: &[u64], out: &mut [u64]) {
        let k = self.rank();
        let orders = self.group.orders();
        out.iter_mut().for_each(|c| *c = 0);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let row = &self.sparse[i * k..(i + 1) * k];
            for (terms, &yj) in row.iter().zip(y) {
                if yj == 0 {
                    continue;
                }
                for &(l, c) in terms {
                    let d = orders[l];
                    out[l] = (out[l] + (xi * yj % d) * c) % d;
                }
            }
        }
    }

    /// Images `x·e_j` of the basis under left multiplication by `x`.
    pub(crate) fn left_mul_columns(&self, x: &[u64]) -> Vec<Vec<u64>> {
        (0..self.rank())
            .map(|j| self.mul_coords(x, &self.basis_coords(j)))
            .collect()
    }

    /// Images `e_j·x` of the basis under right multiplication by `x`.
    pub(crate) fn right_mul_columns(&self, x: &[u64]) -> Vec<Vec<u64>> {
        (0..self.rank())
            .map(|j| self.mul_coords(&self.basis_coords(j), x))
            .collect()
    }

    /// First basis pair `(i, j)` with `e_i e_j != e_j e_i`, if any.
    pub fn noncommuting_basis_pair(&self) -> Option<(usize, usize)> {
        let k = self.rank();
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .find(|&(i, j)| self.basis_product(i, j) != self.basis_product(j, i))
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting_basis_pair().is_none()
    }

    /// Searches every element for a two-sided identity.
    pub fn find_unity(&self) -> Result<Option<RingElement>> {
        let n = self.exhaustive_size("unity search")?;
        let basis: Vec<Vec<u64>> = (0..self.rank()).map(|i| self.basis_coords(i)).collect();
        let hit = scan::find_first(&self.group, 0, n, |u| {
            basis
                .iter()
                .all(|e| self.mul_coords(u, e) == *e && self.mul_coords(e, u) == *e)
        });
        Ok(hit.map(|idx| self.element_at(idx)))
    }

    pub fn is_unital(&self) -> Result<bool> {
        Ok(self.find_unity()?.is_some())
    }

    pub fn additive_exponent(&self) -> u64 {
        self.group.exponent()
    }

    /// Human-readable sum of labelled basis terms, e.g. `a*e + 8*a*g`.
    pub fn format_coords(&self, x: &[u64]) -> String {
        let terms: Vec<String> = x
            .iter()
            .zip(&self.labels)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, l)| if c == 1 { l.clone() } else { format!("{c}*{l}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn format(&self, x: &RingElement) -> String {
        self.format_coords(&x.coords)
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (orders {:?}, {} elements)",
            self.provenance,
            self.orders(),
            self.cardinality()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: u64, square: u64, unity: bool) -> FiniteRing {
        make_ring(RingSpec {
            orders: vec![n],
            mul: vec![vec![vec![square]]],
            unity: unity.then(|| vec![1]),
            labels: Some(vec!["a".into()]),
        })
        .unwrap()
    }

    #[test]
    fn presentation_a_at_three() {
        let a = cyclic(9, 3, false);
        let x = a.element(vec![2]).unwrap();
        assert_eq!(a.mul(&x, &x).unwrap().coords(), &[3]);
        assert_eq!(a.additive_exponent(), 9);
        assert!(a.is_commutative());
        assert!(!a.is_unital().unwrap());
    }

    #[test]
    fn z4_is_unital() {
        let z4 = cyclic(4, 1, true);
        assert_eq!(z4.find_unity().unwrap().unwrap().coords(), &[1]);
        assert_eq!(z4.symbol("1").unwrap().value, Some(vec![1]));
    }

    #[test]
    fn well_definedness_boundary() {
        // a^2 = a with 9a = 0 is consistent.
        assert!(make_ring(RingSpec {
            orders: vec![9],
            mul: vec![vec![vec![1]]],
            unity: None,
            labels: None
        })
        .is_ok());
        // On Z3 x Z9, e0*e0 = e1 is ill defined: 3*e1 != 0.
        let err = make_ring(RingSpec {
            orders: vec![3, 9],
            mul: vec![vec![vec![0, 1], vec![0, 0]], vec![vec![0, 0], vec![0, 0]]],
            unity: None,
            labels: None,
        })
        .unwrap_err();
        assert_eq!(err, Error::IllDefined { i: 0, j: 0 });
    }

    #[test]
    fn rejects_non_associative() {
        // e0*e0 = e1, e1*e0 = e1, e0*e1 = 0 over F2^2: (e0e0)e0 = e1 but e0(e0e0) = 0.
        let err = make_ring(RingSpec {
            orders: vec![2, 2],
            mul: vec![vec![vec![0, 1], vec![0, 0]], vec![vec![0, 1], vec![0, 0]]],
            unity: None,
            labels: None,
        })
        .unwrap_err();
        assert!(matches!(err, Error::NonAssociative { .. }));
    }

    #[test]
    fn rejects_bad_unity() {
        let err = make_ring(RingSpec {
            orders: vec![9],
            mul: vec![vec![vec![3]]],
            unity: Some(vec![1]),
            labels: None,
        })
        .unwrap_err();
        assert!(matches!(err, Error::BadUnity(_)));
    }

    #[test]
    fn arithmetic_rejects_foreign_elements() {
        let a = cyclic(9, 3, false);
        let b = cyclic(9, 0, false);
        assert_eq!(a.add(&a.zero(), &b.zero()), Err(Error::RingMismatch));
        assert_eq!(a.pow(&a.zero(), 0), Err(Error::NonPositiveExponent));
    }

    #[test]
    fn int_scale_cases() {
        let r = cyclic(9, 3, false);
        let x = r.element(vec![4]).unwrap();
        assert!(r.int_scale(0, &x).unwrap().is_zero());
        assert_eq!(r.int_scale(-2, &x).unwrap().coords(), &[1]);
        assert_eq!(r.pow(&x, 1).unwrap(), x);
    }
}

impl RingElement {
    pub(crate) fn from_parts(ring: RingId, coords: Vec<u64>) -> RingElement {
        RingElement { ring, coords }
    }
}
