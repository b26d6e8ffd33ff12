//! Coordinate embeddings of an ideal into an ambient ring.

use std::sync::Arc;

use crate::additive::AdditiveGroup;
use crate::error::{Error, Result};
use crate::limits;
use crate::ring::{FiniteRing, RingElement};
use crate::subset::{ElementSubset, SubsetTag};

/// `ideal` sits inside `ambient` by sending ideal coordinate `j` to ambient
/// coordinate `coord_map[j]`; all other ambient coordinates are zero on the
/// image. Construction checks that the image is a two-sided ideal and that
/// the map is multiplicative.
#[derive(Debug, Clone)]
pub struct IdealEmbedding {
    ambient: Arc<FiniteRing>,
    ideal: Arc<FiniteRing>,
    coord_map: Vec<usize>,
}

impl IdealEmbedding {
    pub fn new(ambient: Arc<FiniteRing>, ideal: Arc<FiniteRing>, coord_map: Vec<usize>) -> Result<Self> {
        let bad = |why: String| Err(Error::WithinNotIdeal(why));
        if coord_map.len() != ideal.rank() {
            return bad("coordinate map length differs from the ideal's rank".into());
        }
        for (j, &a) in coord_map.iter().enumerate() {
            if a >= ambient.rank() || coord_map[..j].contains(&a) {
                return bad(format!("coordinate {j} maps to an invalid or repeated slot"));
            }
            if ambient.orders()[a] != ideal.orders()[j] {
                return bad(format!("coordinate {j} changes cyclic order"));
            }
        }
        let emb = IdealEmbedding {
            ambient,
            ideal,
            coord_map,
        };
        let k = emb.ideal.rank();
        for i in 0..k {
            let si = emb.embed(&emb.ideal.basis_coords(i));
            for j in 0..k {
                let sj = emb.embed(&emb.ideal.basis_coords(j));
                if emb.ambient.mul_coords(&si, &sj) != emb.embed(emb.ideal.basis_product(i, j)) {
                    return bad(format!("embedding is not multiplicative on basis pair ({i}, {j})"));
                }
            }
            for u in 0..emb.ambient.rank() {
                let u = emb.ambient.basis_coords(u);
                if emb.restrict(&emb.ambient.mul_coords(&u, &si)).is_none()
                    || emb.restrict(&emb.ambient.mul_coords(&si, &u)).is_none()
                {
                    return bad(format!("image not closed under multiplication at ideal basis {i}"));
                }
            }
        }
        Ok(emb)
    }

    pub fn ambient(&self) -> &FiniteRing {
        &self.ambient
    }

    pub fn ideal(&self) -> &FiniteRing {
        &self.ideal
    }

    pub fn ambient_arc(&self) -> Arc<FiniteRing> {
        Arc::clone(&self.ambient)
    }

    pub fn ideal_arc(&self) -> Arc<FiniteRing> {
        Arc::clone(&self.ideal)
    }

    pub fn coord_map(&self) -> &[usize] {
        &self.coord_map
    }

    pub fn embed(&self, s: &[u64]) -> Vec<u64> {
        let mut out = self.ambient.group().zero();
        for (&c, &a) in s.iter().zip(&self.coord_map) {
            out[a] = c;
        }
        out
    }

    /// The ideal coordinates of `x`, if `x` lies in the image.
    pub fn restrict(&self, x: &[u64]) -> Option<Vec<u64>> {
        let mut rest = x.to_vec();
        let coords = self
            .coord_map
            .iter()
            .map(|&a| std::mem::take(&mut rest[a]))
            .collect();
        AdditiveGroup::is_zero(&rest).then_some(coords)
    }

    pub fn embed_element(&self, s: &RingElement) -> Result<RingElement> {
        self.ideal.owns(s)?;
        self.ambient.element(self.embed(s.coords()))
    }

    pub fn restrict_element(&self, x: &RingElement) -> Result<Option<RingElement>> {
        self.ambient.owns(x)?;
        Ok(self.restrict(x.coords()).map(|c| self.ideal.element(c).expect("restricted coordinates")))
    }

    /// Closure of the image under multiplication by every ambient element on
    /// both sides, checked element by element.
    pub fn verify_closure_exhaustive(&self) -> Result<u64> {
        let na = self.ambient.size_within("ideal closure check", limits::PAIRWISE_LIMIT)?;
        let ni = self.ideal.exhaustive_size("ideal closure check")?;
        let mut checked = 0;
        for a in 0..na {
            let x = self.ambient.group().coords_of(a);
            for i in 0..ni {
                let s = self.embed(&self.ideal.group().coords_of(i));
                if self.restrict(&self.ambient.mul_coords(&x, &s)).is_none()
                    || self.restrict(&self.ambient.mul_coords(&s, &x)).is_none()
                {
                    return Err(Error::WithinNotIdeal(format!(
                        "product with ambient element {x:?} leaves the ideal"
                    )));
                }
                checked += 1;
            }
        }
        Ok(checked)
    }

    /// The image as a subset of the ambient ring.
    pub fn subset(&self) -> Result<ElementSubset> {
        let na = self.ambient.exhaustive_size("ideal subset")?;
        let ni = self.ideal.exhaustive_size("ideal subset")?;
        let indices = (0..ni).map(|i| {
            self.ambient
                .group()
                .index_of(&self.embed(&self.ideal.group().coords_of(i)))
        });
        Ok(ElementSubset::from_indices(self.ambient.id(), na, indices).tagged(SubsetTag::TwoSidedIdeal))
    }
}
