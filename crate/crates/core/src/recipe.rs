//! Construction recipes: a serialisable description of how a ring is built
//! from catalog rings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::{catalog_ring, CatalogKey};
use crate::constructions::{
    const_diag_tri, extension_group_ring, group_ring, poly_quotient, triangular_ring, unitization,
};
use crate::error::Result;
use crate::group::{cyclic_group, group_from_cayley, FiniteGroup};
use crate::ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupRecipe {
    Cyclic(usize),
    /// A Cayley table read from `source`.
    Table {
        source: String,
        cayley: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    },
}

impl GroupRecipe {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupRecipe::Cyclic(n) => cyclic_group(*n),
            GroupRecipe::Table {
                source,
                cayley,
                labels,
            } => Ok(group_from_cayley(cayley.clone(), labels.clone())?.with_name(format!("@{source}"))),
        }
    }
}

impl fmt::Display for GroupRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupRecipe::Cyclic(n) => write!(f, "C{n}"),
            GroupRecipe::Table { source, .. } => write!(f, "@{source}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Recipe {
    Catalog(CatalogKey),
    GroupRing(Box<Recipe>, GroupRecipe),
    Extension(Box<Recipe>, GroupRecipe),
    Unitization(Box<Recipe>),
    Triangular(Box<Recipe>, usize),
    ConstDiag(Box<Recipe>, usize),
    PolyQuot(Box<Recipe>, usize),
}

impl Recipe {
    pub fn catalog(key: CatalogKey) -> Self {
        Recipe::Catalog(key)
    }

    pub fn group_ring(self, group: GroupRecipe) -> Self {
        Recipe::GroupRing(Box::new(self), group)
    }

    pub fn extension(self, group: GroupRecipe) -> Self {
        Recipe::Extension(Box::new(self), group)
    }

    pub fn unitization(self) -> Self {
        Recipe::Unitization(Box::new(self))
    }

    pub fn triangular(self, n: usize) -> Self {
        Recipe::Triangular(Box::new(self), n)
    }

    pub fn const_diag(self, n: usize) -> Self {
        Recipe::ConstDiag(Box::new(self), n)
    }

    pub fn poly_quot(self, n: usize) -> Self {
        Recipe::PolyQuot(Box::new(self), n)
    }

    /// Builds the ring; its provenance is the printed recipe.
    pub fn evaluate(&self) -> Result<FiniteRing> {
        let ring = match self {
            Recipe::Catalog(key) => catalog_ring(*key)?,
            Recipe::GroupRing(base, g) => group_ring(&base.evaluate()?, &g.build()?)?,
            Recipe::Extension(base, g) => extension_group_ring(&base.evaluate()?, &g.build()?)?
                .embedding
                .ambient()
                .clone(),
            Recipe::Unitization(base) => (*unitization(&base.evaluate()?)?.ring).clone(),
            Recipe::Triangular(base, n) => triangular_ring(&base.evaluate()?, *n)?,
            Recipe::ConstDiag(base, n) => const_diag_tri(&base.evaluate()?, *n)?,
            Recipe::PolyQuot(base, n) => poly_quotient(&base.evaluate()?, *n)?,
        };
        Ok(ring.set_provenance(self.to_string()))
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Catalog(key) => write!(f, "{key}"),
            Recipe::GroupRing(r, g) => write!(f, "GR({r}, {g})"),
            Recipe::Extension(r, g) => write!(f, "XGR({r}, {g})"),
            Recipe::Unitization(r) => write!(f, "U({r})"),
            Recipe::Triangular(r, n) => write!(f, "T({r}, {n})"),
            Recipe::ConstDiag(r, n) => write!(f, "CT({r}, {n})"),
            Recipe::PolyQuot(r, n) => write!(f, "PQ({r}, {n})"),
        }
    }
}
