//! Deciders for the Rickart family of annihilator conditions and for the
//! arithmetic hypotheses on the coefficient ring.
//!
//! Exhaustive deciders scan elements in canonical order and report the
//! least failing element. Zero is a legitimate witness in non-unital rings;
//! it is flagged as degenerate and the least nonzero witness is reported
//! alongside it.

pub mod lattice;

use std::collections::{HashMap, HashSet};

use num_integer::Integer;
use serde::Serialize;

use crate::additive::AdditiveGroup;
use crate::embedding::IdealEmbedding;
use crate::error::{Error, Result};
use crate::ideals::{self, chain_sizes, Side};
use crate::involution::Involution;
use crate::kernel;
use crate::ring::FiniteRing;
use crate::scan;
use crate::subset::ElementSubset;

pub use crate::catalog::nilpotency_index;
pub use lattice::{artinian_certificate, enumerate_ideals, enumerate_right_ideals, ArtinianCertificate};

/// Largest ring on which [`is_baer`] runs.
pub const BAER_CAP: u64 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    WitnessOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub coords: Vec<u64>,
    pub display: String,
    pub degenerate: bool,
    /// `|r(x)|, |r(x²)|, …` up to stabilisation, when relevant.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub chain_sizes: Vec<u64>,
}

impl Witness {
    fn new(ring: &FiniteRing, coords: Vec<u64>) -> Self {
        Witness {
            display: ring.format_coords(&coords),
            degenerate: AdditiveGroup::is_zero(&coords),
            coords,
            chain_sizes: Vec::new(),
        }
    }

    fn with_chain(mut self, sizes: Vec<u64>) -> Self {
        self.chain_sizes = sizes;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub property: String,
    pub holds: bool,
    pub mode: Mode,
    /// Least failing element in canonical order.
    pub witness: Option<Witness>,
    /// Least nonzero failing element, when `witness` is zero.
    pub nonzero_witness: Option<Witness>,
    /// Second element completing the failure (a non-commuting partner, or
    /// further elements whose common annihilator fails).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub partners: Vec<Witness>,
    pub elements_checked: u64,
    pub generators_scanned: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl PropertyVerdict {
    fn new(property: impl Into<String>, mode: Mode) -> Self {
        PropertyVerdict {
            property: property.into(),
            holds: true,
            mode,
            witness: None,
            nonzero_witness: None,
            partners: Vec::new(),
            elements_checked: 0,
            generators_scanned: 0,
            notes: Vec::new(),
        }
    }

    /// The witness a reader should look at: the nonzero one if the least
    /// witness is degenerate.
    pub fn primary_witness(&self) -> Option<&Witness> {
        self.nonzero_witness.as_ref().or(self.witness.as_ref())
    }
}

/// Elements with `x ↦ m·x` non-injective. Decided by scanning for a nonzero
/// `x` with `m·x = 0` and by `gcd(m, exponent) = 1`; the two must agree.
pub fn condition_i(ring: &FiniteRing, m: u64) -> Result<PropertyVerdict> {
    if m < 2 {
        return Err(Error::HypothesisFailed(format!("multiplier {m} must be at least 2")));
    }
    let by_gcd = m.gcd(&ring.additive_exponent()) == 1;
    let group = ring.group();
    let fits = ring.cardinality() <= crate::limits::exhaustive_cap() as u128;
    let mut verdict = PropertyVerdict::new(format!("condition-i({m})"), Mode::Exhaustive);
    let failing = if fits {
        let n = ring.cardinality() as u64;
        verdict.elements_checked = n;
        scan::find_first(group, 1, n, |x| AdditiveGroup::is_zero(&group.scale(m as i64, x)))
            .map(|i| group.coords_of(i))
    } else {
        // Kernel of multiplication by m, solved as a modular linear system.
        verdict.mode = Mode::WitnessOnly;
        let columns: Vec<Vec<u64>> = (0..ring.rank())
            .map(|j| group.scale(m as i64, &ring.basis_coords(j)))
            .collect();
        let gens = kernel::kernel_generators(group, group, &columns)?;
        gens.into_iter().find(|g| !AdditiveGroup::is_zero(g))
    };
    if failing.is_none() != by_gcd {
        return Err(Error::Internal(format!(
            "condition (i) methods disagree on {}: gcd says {by_gcd}",
            ring.provenance()
        )));
    }
    if let Some(x) = failing {
        verdict.holds = false;
        verdict.witness = Some(Witness::new(ring, x));
    }
    verdict
        .notes
        .push(format!("gcd({m}, {}) = {}", ring.additive_exponent(), m.gcd(&ring.additive_exponent())));
    Ok(verdict)
}

/// All solutions of `c·x² + d·x = 0`, ascending.
pub fn quadratic_solutions(ring: &FiniteRing, c: i64, d: i64) -> Result<Vec<u64>> {
    ring.exhaustive_size("quadratic scan")?;
    let group = ring.group();
    Ok(scan::filter(group, |x| {
        let sq = ring.mul_coords(x, x);
        AdditiveGroup::is_zero(&group.add(&group.scale(c, &sq), &group.scale(d, x)))
    }))
}

/// Holds iff `c·x² + d·x = 0` forces `x = 0`.
pub fn trivial_quadratic(ring: &FiniteRing, c: i64, d: i64) -> Result<PropertyVerdict> {
    let solutions = quadratic_solutions(ring, c, d)?;
    let mut verdict = PropertyVerdict::new(format!("trivial-quadratic({c},{d})"), Mode::Exhaustive);
    verdict.elements_checked = ring.cardinality() as u64;
    if let Some(&x) = solutions.iter().find(|&&i| i != 0) {
        verdict.holds = false;
        verdict.witness = Some(Witness::new(ring, ring.group().coords_of(x)));
    }
    verdict.notes.push(format!("{} solution(s)", solutions.len()));
    Ok(verdict)
}

/// Which generators an annihilator must equal to count as generated.
#[derive(Debug, Clone, Copy)]
pub enum Generators<'a> {
    Idempotents,
    Projections(&'a Involution),
}

fn generator_elements(ring: &FiniteRing, gens: Generators<'_>) -> Result<Vec<Vec<u64>>> {
    let elems = match gens {
        Generators::Idempotents => ideals::enumerate_idempotents(ring)?,
        Generators::Projections(inv) => ideals::enumerate_projections(ring, inv)?,
    };
    Ok(elems.into_iter().map(|e| e.into_coords()).collect())
}

fn generated_ideals(ring: &FiniteRing, gens: &[Vec<u64>], side: Side) -> Result<HashSet<ElementSubset>> {
    gens.iter()
        .map(|e| ideals::principal_ideal_of(ring, e, side))
        .collect()
}

/// Shared engine: `x` succeeds if some `r(xⁿ)` (only `n = 1` when
/// `single_power`) lies in the set of generated ideals.
fn annihilator_decider(
    ring: &FiniteRing,
    property: &str,
    side: Side,
    gens: Generators<'_>,
    single_power: bool,
) -> Result<PropertyVerdict> {
    let n = ring.exhaustive_size(property)?;
    let generators = generator_elements(ring, gens)?;
    let targets = generated_ideals(ring, &generators, side)?;
    let mut verdict = PropertyVerdict::new(property, Mode::Exhaustive);
    verdict.generators_scanned = generators.len() as u64;
    verdict.elements_checked = n;
    let chain_of = |x: &[u64]| -> Vec<ElementSubset> {
        if single_power {
            vec![ideals::annihilator_of(ring, x, side).expect("within cap")]
        } else {
            ideals::chain_of_coords(ring, x, side).expect("within cap")
        }
    };
    let fails = |x: &[u64]| !chain_of(x).iter().any(|a| targets.contains(a));
    let group = ring.group();
    let first = scan::find_first(group, 0, n, fails);
    if let Some(i) = first {
        verdict.holds = false;
        let x = group.coords_of(i);
        verdict.witness = Some(Witness::new(ring, x.clone()).with_chain(chain_sizes(&chain_of(&x))));
        if i == 0 {
            if let Some(j) = scan::find_first(group, 1, n, fails) {
                let y = group.coords_of(j);
                verdict.nonzero_witness =
                    Some(Witness::new(ring, y.clone()).with_chain(chain_sizes(&chain_of(&y))));
            } else {
                verdict.notes.push("zero is the only failing element".into());
            }
        }
    }
    Ok(verdict)
}

pub fn is_generalized_right_pp(ring: &FiniteRing) -> Result<PropertyVerdict> {
    annihilator_decider(ring, "gen-right-pp", Side::Right, Generators::Idempotents, false)
}

pub fn is_generalized_left_pp(ring: &FiniteRing) -> Result<PropertyVerdict> {
    annihilator_decider(ring, "gen-left-pp", Side::Left, Generators::Idempotents, false)
}

pub fn is_right_rickart(ring: &FiniteRing) -> Result<PropertyVerdict> {
    annihilator_decider(ring, "right-rickart", Side::Right, Generators::Idempotents, true)
}

pub fn is_left_rickart(ring: &FiniteRing) -> Result<PropertyVerdict> {
    annihilator_decider(ring, "left-rickart", Side::Left, Generators::Idempotents, true)
}

pub fn is_generalized_rickart_star(ring: &FiniteRing, inv: &Involution) -> Result<PropertyVerdict> {
    inv.belongs_to(ring)?;
    annihilator_decider(ring, "gen-rickart-star", Side::Right, Generators::Projections(inv), false)
}

pub fn is_rickart_star(ring: &FiniteRing, inv: &Involution) -> Result<PropertyVerdict> {
    inv.belongs_to(ring)?;
    annihilator_decider(ring, "rickart-star", Side::Right, Generators::Projections(inv), true)
}

/// Right annihilators of nonempty subsets are intersections of element
/// annihilators, so the closure of `{r(x)}` under intersection is checked.
pub fn is_baer(ring: &FiniteRing) -> Result<PropertyVerdict> {
    let n = ring.size_within("Baer check", BAER_CAP)?;
    let generators = generator_elements(ring, Generators::Idempotents)?;
    let targets = generated_ideals(ring, &generators, Side::Right)?;
    let group = ring.group();
    let mut verdict = PropertyVerdict::new("baer", Mode::Exhaustive);
    verdict.generators_scanned = generators.len() as u64;
    verdict.elements_checked = n;

    // Each distinct annihilator keeps the element indices that produced it.
    let mut sets: Vec<(ElementSubset, Vec<u64>)> = Vec::new();
    let mut seen: HashMap<ElementSubset, usize> = HashMap::new();
    for i in 0..n {
        let ann = ideals::annihilator_of(ring, &group.coords_of(i), Side::Right)?;
        if !seen.contains_key(&ann) {
            seen.insert(ann.clone(), sets.len());
            sets.push((ann, vec![i]));
        }
    }
    let mut frontier = 0;
    while frontier < sets.len() {
        let end = sets.len();
        for i in 0..end {
            for j in frontier.max(i + 1)..end {
                let meet = sets[i].0.intersection(&sets[j].0);
                if !seen.contains_key(&meet) {
                    let mut from = sets[i].1.clone();
                    from.extend(&sets[j].1);
                    from.sort_unstable();
                    from.dedup();
                    seen.insert(meet.clone(), sets.len());
                    sets.push((meet, from));
                }
            }
        }
        frontier = end;
    }
    let failing = sets
        .iter()
        .filter(|(s, _)| !targets.contains(s))
        .min_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.1.cmp(&b.1)));
    if let Some((set, from)) = failing {
        verdict.holds = false;
        let mut elems = from.iter().map(|&i| Witness::new(ring, group.coords_of(i)));
        verdict.witness = elems.next();
        verdict.partners = elems.collect();
        verdict.notes.push(format!("annihilator of size {} is not idempotent-generated", set.count()));
    }
    verdict.notes.push(format!("{} subset annihilators", sets.len()));
    Ok(verdict)
}

/// Every idempotent is central.
pub fn is_abelian(ring: &FiniteRing) -> Result<PropertyVerdict> {
    let idempotents = generator_elements(ring, Generators::Idempotents)?;
    let mut verdict = PropertyVerdict::new("abelian", Mode::Exhaustive);
    verdict.generators_scanned = idempotents.len() as u64;
    verdict.elements_checked = ring.cardinality() as u64;
    let central = |e: &[u64]| {
        (0..ring.rank()).all(|j| {
            let b = ring.basis_coords(j);
            ring.mul_coords(e, &b) == ring.mul_coords(&b, e)
        })
    };
    if let Some(e) = idempotents.iter().find(|e| !central(e)) {
        verdict.holds = false;
        let n = ring.cardinality() as u64;
        let partner = scan::find_first(ring.group(), 0, n, |y| ring.mul_coords(e, y) != ring.mul_coords(y, e))
            .expect("a non-central idempotent has a partner");
        verdict.witness = Some(Witness::new(ring, e.clone()));
        verdict.partners.push(Witness::new(ring, ring.group().coords_of(partner)));
    }
    Ok(verdict)
}

/// Chain data for a single witness taken in an extension ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRefutation {
    pub verdict: PropertyVerdict,
    pub refuted: bool,
    pub all_terms_nonzero: bool,
    /// Least nonzero member of `r_S(x)`, in ideal coordinates.
    pub annihilator_member: Option<Witness>,
    /// The same member written in the ambient ring.
    pub annihilator_member_ambient: Option<String>,
    pub generator_elements: Vec<Witness>,
}

/// Checks that no `r_S(xⁿ)` equals `eS` for an idempotent (or projection)
/// `e` of the ideal `S`, for a single `x` of the ambient ring.
pub fn refute_gen_pp_with_witness(
    emb: &IdealEmbedding,
    x: &[u64],
    gens: Generators<'_>,
) -> Result<WitnessRefutation> {
    let ambient = emb.ambient();
    let ideal = emb.ideal();
    let x_el = ambient.element(x.to_vec())?;
    let chain = ideals::annihilator_chain_within(emb, &x_el)?;
    let generators = generator_elements(ideal, gens)?;
    let targets = generated_ideals(ideal, &generators, Side::Right)?;
    let property = match gens {
        Generators::Idempotents => "gen-right-pp",
        Generators::Projections(_) => "gen-rickart-star",
    };
    let mut verdict = PropertyVerdict::new(property, Mode::WitnessOnly);
    verdict.generators_scanned = generators.len() as u64;
    verdict.elements_checked = 1;
    let all_terms_nonzero = chain.iter().all(|a| a.count() > 1);
    let refuted = !chain.iter().any(|a| targets.contains(a));
    let witness = Witness::new(ambient, x.to_vec()).with_chain(chain_sizes(&chain));
    if refuted {
        verdict.holds = false;
        verdict.witness = Some(witness);
    } else {
        verdict.notes.push(format!(
            "{} does not refute: some r_S(x^n) is generated",
            witness.display
        ));
    }
    let member = chain[0].iter().find(|&i| i != 0).map(|i| ideal.group().coords_of(i));
    Ok(WitnessRefutation {
        verdict,
        refuted,
        all_terms_nonzero,
        annihilator_member_ambient: member.as_ref().map(|m| ambient.format_coords(&emb.embed(m))),
        annihilator_member: member.map(|m| Witness::new(ideal, m)),
        generator_elements: generators.into_iter().map(|e| Witness::new(ideal, e)).collect(),
    })
}

/// `R^k = 0` for some `k`.
pub fn is_nilpotent(ring: &FiniteRing) -> bool {
    nilpotency_index(ring).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fine_ring, null_ring, z_ring, zero_ring, FineKind};
    use crate::constructions::{group_ring, triangular_ring};
    use crate::group::cyclic_group;

    #[test]
    fn condition_i_examples() {
        let a3 = fine_ring(FineKind::A, 3).unwrap();
        assert!(condition_i(&a3, 2).unwrap().holds);
        let a2 = fine_ring(FineKind::A, 2).unwrap();
        let v = condition_i(&a2, 2).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().coords, vec![2]);
    }

    #[test]
    fn quadratic_examples() {
        for p in [3, 5] {
            assert!(trivial_quadratic(&fine_ring(FineKind::B, p).unwrap(), 2, -1).unwrap().holds);
        }
        assert!(trivial_quadratic(&fine_ring(FineKind::A, 3).unwrap(), 2, -1).unwrap().holds);
        assert!(trivial_quadratic(&z_ring(4).unwrap(), 2, -1).unwrap().holds);
    }

    #[test]
    fn rickart_examples() {
        let z4 = z_ring(4).unwrap();
        assert!(is_generalized_right_pp(&z4).unwrap().holds);
        let v = is_right_rickart(&z4).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().coords, vec![2]);
        for p in [2, 3, 5] {
            let zp = z_ring(p).unwrap();
            assert!(is_right_rickart(&zp).unwrap().holds);
            assert!(is_baer(&zp).unwrap().holds);
        }
        assert!(!is_baer(&z4).unwrap().holds);
        let zero = zero_ring().unwrap();
        assert!(is_generalized_right_pp(&zero).unwrap().holds);
        assert!(is_right_rickart(&zero).unwrap().holds);
        assert!(is_baer(&zero).unwrap().holds);
    }

    #[test]
    fn nilpotent_group_ring_fails_with_degenerate_witness() {
        let s = group_ring(&fine_ring(FineKind::A, 3).unwrap(), &cyclic_group(2).unwrap()).unwrap();
        assert!(is_nilpotent(&s));
        let v = is_generalized_right_pp(&s).unwrap();
        assert!(!v.holds);
        assert!(v.witness.as_ref().unwrap().degenerate);
        assert!(v.nonzero_witness.is_some());
        assert_eq!(v.generators_scanned, 1);
    }

    #[test]
    fn abelian_witness_in_triangular_ring() {
        let t = triangular_ring(&z_ring(2).unwrap(), 2).unwrap();
        let v = is_abelian(&t).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().display, "1[2,2]");
        assert_eq!(v.partners[0].display, "1[1,2]");
        assert!(is_abelian(&null_ring(9).unwrap()).unwrap().holds);
    }
}
