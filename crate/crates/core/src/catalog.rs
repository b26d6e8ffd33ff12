//! The order-p² rings A, B, C, D (and the D variant with ab = −ba), plus
//! small test rings ℤₙ and null rings.

use serde::{Deserialize, Serialize};

use crate::additive::AdditiveGroup;
use crate::error::{Error, Result};
use crate::ring::{make_ring, FiniteRing, RingSpec};

pub use crate::group::{cyclic_group, group_from_cayley, FiniteGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FineKind {
    A,
    B,
    C,
    D,
    Dalt,
}

impl FineKind {
    /// Every kind except the `Dalt` variant.
    pub const STANDARD: [FineKind; 4] = [FineKind::A, FineKind::B, FineKind::C, FineKind::D];

    pub fn name(self) -> &'static str {
        match self {
            FineKind::A => "A",
            FineKind::B => "B",
            FineKind::C => "C",
            FineKind::D => "D",
            FineKind::Dalt => "Dalt",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "A" => Some(FineKind::A),
            "B" => Some(FineKind::B),
            "C" => Some(FineKind::C),
            "D" => Some(FineKind::D),
            "Dalt" | "D'" => Some(FineKind::Dalt),
            _ => None,
        }
    }
}

impl std::fmt::Display for FineKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CatalogKey {
    Fine(FineKind, u64),
    /// ℤₙ with its usual multiplication.
    Z(u64),
    /// ℤₙ with zero multiplication.
    Null(u64),
}

impl std::fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogKey::Fine(kind, p) => write!(f, "{kind}({p})"),
            CatalogKey::Z(n) => write!(f, "Z({n})"),
            CatalogKey::Null(n) => write!(f, "N({n})"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn cyclic_spec(n: u64, square: u64, unity: bool, label: &str) -> RingSpec {
    RingSpec {
        orders: vec![n],
        mul: vec![vec![vec![square]]],
        unity: unity.then(|| vec![1]),
        labels: Some(vec![label.to_string()]),
    }
}

/// Table for the two-generator rings on (ℤ_p)², basis {a, b}.
fn pair_spec(p: u64, aa: [u64; 2], ab: [u64; 2], ba: [u64; 2], bb: [u64; 2]) -> RingSpec {
    RingSpec {
        orders: vec![p, p],
        mul: vec![vec![aa.to_vec(), ab.to_vec()], vec![ba.to_vec(), bb.to_vec()]],
        unity: None,
        labels: Some(vec!["a".into(), "b".into()]),
    }
}

/// Candidate completions `ab = λa + μb`, `ba = −ab` of the D presentation
/// that pass validation.
pub fn dalt_completions(p: u64) -> Result<Vec<(u64, u64)>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut ok = Vec::new();
    for lambda in 0..p {
        for mu in 0..p {
            let ab = [lambda, mu];
            let ba = [(p - lambda) % p, (p - mu) % p];
            if make_ring(pair_spec(p, [0, 0], ab, ba, [0, 0])).is_ok() {
                ok.push((lambda, mu));
            }
        }
    }
    Ok(ok)
}

/// One of the four order-p² presentations, or the D variant.
pub fn fine_ring(kind: FineKind, p: u64) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p2 = p * p;
    let spec = match kind {
        FineKind::A => cyclic_spec(p2, p, false, "a"),
        FineKind::B => cyclic_spec(p2, 0, false, "a"),
        // ba = a³ = a·ab = 0 and b² = a⁴ = 0 follow from the presentation.
        FineKind::C => pair_spec(p, [0, 1], [0, 0], [0, 0], [0, 0]),
        FineKind::D => pair_spec(p, [0, 0], [0, 0], [0, 0], [0, 0]),
        FineKind::Dalt => {
            let (lambda, mu) = *dalt_completions(p)?
                .first()
                .ok_or_else(|| Error::Internal("no associative completion".into()))?;
            pair_spec(
                p,
                [0, 0],
                [lambda, mu],
                [(p - lambda) % p, (p - mu) % p],
                [0, 0],
            )
        }
    };
    Ok(make_ring(spec)?.set_provenance(CatalogKey::Fine(kind, p).to_string()))
}

pub fn catalog_ring(key: CatalogKey) -> Result<FiniteRing> {
    match key {
        CatalogKey::Fine(kind, p) => fine_ring(kind, p),
        CatalogKey::Z(n) => z_ring(n),
        CatalogKey::Null(n) => null_ring(n),
    }
}

/// ℤₙ; `n = 1` gives the zero ring.
pub fn z_ring(n: u64) -> Result<FiniteRing> {
    let ring = if n == 1 {
        zero_ring()?
    } else {
        make_ring(cyclic_spec(n, 1, true, "1"))?
    };
    Ok(ring.set_provenance(format!("Z({n})")))
}

/// ℤₙ with every product zero.
pub fn null_ring(n: u64) -> Result<FiniteRing> {
    let ring = if n == 1 {
        zero_ring()?
    } else {
        make_ring(cyclic_spec(n, 0, false, "a"))?
    };
    Ok(ring.set_provenance(format!("N({n})")))
}

pub fn zero_ring() -> Result<FiniteRing> {
    Ok(make_ring(RingSpec {
        orders: vec![],
        mul: vec![],
        unity: Some(vec![]),
        labels: Some(vec![]),
    })?
    .set_provenance("0"))
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub parameter: &'static str,
    pub presentation: &'static str,
    pub orders: &'static str,
    pub source: &'static str,
}

pub fn catalog_list() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "A",
            parameter: "p prime",
            presentation: "<a | p^2 a = 0, a^2 = p a>",
            orders: "[p^2]",
            source: "Fine ring of order p^2",
        },
        CatalogEntry {
            name: "B",
            parameter: "p prime",
            presentation: "<a | p^2 a = 0, a^2 = 0>",
            orders: "[p^2]",
            source: "Fine ring of order p^2",
        },
        CatalogEntry {
            name: "C",
            parameter: "p prime",
            presentation: "<a, b | p a = p b = 0, a^2 = b, ab = 0>",
            orders: "[p, p]",
            source: "Fine ring of order p^2",
        },
        CatalogEntry {
            name: "D",
            parameter: "p prime",
            presentation: "<a, b | p a = p b = 0, a^2 = b^2 = 0, ab = ba = 0>",
            orders: "[p, p]",
            source: "Fine ring of order p^2",
        },
        CatalogEntry {
            name: "Dalt",
            parameter: "p prime",
            presentation: "<a, b | p a = p b = 0, a^2 = b^2 = 0, ab = -ba>",
            orders: "[p, p]",
            source: "variant of D",
        },
        CatalogEntry {
            name: "Z",
            parameter: "n >= 1",
            presentation: "integers mod n",
            orders: "[n]",
            source: "unital test ring",
        },
        CatalogEntry {
            name: "N",
            parameter: "n >= 1",
            presentation: "integers mod n, zero product",
            orders: "[n]",
            source: "null test ring",
        },
    ]
}

/// Isomorphism invariants used to tell catalog rings apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub orders: Vec<u64>,
    /// Least `k` with every `k`-fold product zero, if the ring is nilpotent.
    pub nilpotency_index: Option<u32>,
    pub square_zero: u64,
}

pub fn fingerprint(ring: &FiniteRing) -> Result<Fingerprint> {
    let n = ring.exhaustive_size("fingerprint")?;
    let square_zero = (0..n)
        .filter(|&i| {
            let x = ring.group().coords_of(i);
            AdditiveGroup::is_zero(&ring.mul_coords(&x, &x))
        })
        .count() as u64;
    Ok(Fingerprint {
        orders: ring.orders().to_vec(),
        nilpotency_index: nilpotency_index(ring),
        square_zero,
    })
}

/// Computes `R^k` as additive spans of basis products; `None` if the powers
/// stabilise at a nonzero subgroup.
pub fn nilpotency_index(ring: &FiniteRing) -> Option<u32> {
    let group = ring.group();
    let mut power: Vec<Vec<u64>> = (0..ring.rank()).map(|i| ring.basis_coords(i)).collect();
    let mut size = crate::kernel::span(group, &power).len();
    let mut k = 1;
    loop {
        if size == 1 {
            return Some(k);
        }
        let mut next = Vec::new();
        for x in &power {
            for j in 0..ring.rank() {
                let y = ring.mul_coords(x, &ring.basis_coords(j));
                if !AdditiveGroup::is_zero(&y) {
                    next.push(y);
                }
            }
        }
        let span = crate::kernel::span(group, &next);
        if span.len() == size {
            return None;
        }
        size = span.len();
        power = next;
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentations() {
        let a = fine_ring(FineKind::A, 3).unwrap();
        assert_eq!(a.mul_coords(&[1], &[1]), vec![3]);
        assert_eq!(a.mul_coords(&[2], &[2]), vec![3]);
        let c = fine_ring(FineKind::C, 3).unwrap();
        assert_eq!(c.basis_product(0, 0), &[0, 1]);
        assert_eq!(c.basis_product(1, 0), &[0, 0]);
        assert!(matches!(fine_ring(FineKind::A, 4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn dalt_collapses_to_null_completion() {
        for p in [2, 3, 5, 7] {
            assert_eq!(dalt_completions(p).unwrap(), vec![(0, 0)]);
        }
    }

    #[test]
    fn fingerprints_separate_kinds() {
        for p in [2, 3, 5] {
            let prints: Vec<_> = FineKind::STANDARD
                .iter()
                .map(|&k| fingerprint(&fine_ring(k, p).unwrap()).unwrap())
                .collect();
            for i in 0..4 {
                for j in i + 1..4 {
                    assert_ne!(prints[i], prints[j], "p = {p}");
                }
            }
        }
    }

    #[test]
    fn catalog_rings_are_commutative_and_non_unital() {
        for p in [2, 3, 5, 7] {
            for kind in FineKind::STANDARD {
                let r = fine_ring(kind, p).unwrap();
                assert!(r.is_commutative());
                assert!(!r.is_unital().unwrap());
                assert_eq!(r.cardinality(), (p * p) as u128);
            }
        }
    }
}
