//! Turns `--ring` / `--ring-file` arguments into a ring, optionally with
//! the ideal embedding of an XGR result and a chosen involution.

use std::sync::Arc;

use rickart_core::catalog::catalog_ring;
use rickart_core::constructions::{
    anti_transpose_involution, const_diag_tri, extension_group_ring, group_ring,
    lift_involution_group_ring, poly_quotient, triangular_ring, unitization,
    unitization_involution,
};
use rickart_core::recipe::Recipe;
use rickart_core::{identity_involution, FiniteRing, IdealEmbedding, Involution};

use crate::error::{read_file, CliError, Result};
use crate::expr::parse_construction;
use crate::spec_doc::parse_ring_spec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InvolutionChoice {
    /// The identity map; valid on commutative rings.
    Identity,
    /// The involution induced by identity on catalog rings: `g ↦ g⁻¹` on
    /// group rings, `(k, r) ↦ (k, r*)` on unitizations, anti-transpose on
    /// triangular rings.
    Star,
    /// Anti-transpose on a `T(R, n)` ring.
    AntiTranspose,
    /// The involution stored in the `--ring-file` document.
    File,
}

pub struct Loaded {
    pub ring: Arc<FiniteRing>,
    pub recipe: Option<Recipe>,
    /// `S` inside the ambient ring when the ring is `XGR(R, G)`.
    pub embedding: Option<IdealEmbedding>,
    /// Involution on `embedding.ideal()`, when an involution was requested.
    pub ideal_involution: Option<Involution>,
    pub involution: Option<Involution>,
}

pub fn load(expr: Option<&str>, file: Option<&str>, inv: Option<InvolutionChoice>) -> Result<Loaded> {
    match (expr, file) {
        (Some(e), None) => load_recipe(&parse_construction(e)?, inv),
        (None, Some(path)) => {
            let (ring, stored) = parse_ring_spec(&read_file(path)?)?;
            let involution = match inv {
                None => None,
                Some(InvolutionChoice::Identity) => Some(identity_involution(&ring)?),
                Some(InvolutionChoice::File) => Some(stored.ok_or_else(|| {
                    CliError::Usage(format!("{path} does not contain an involution"))
                })?),
                Some(other) => {
                    return Err(CliError::Usage(format!(
                        "involution `{}` needs a construction expression",
                        choice_name(other)
                    )))
                }
            };
            Ok(Loaded {
                ring: Arc::new(ring),
                recipe: None,
                embedding: None,
                ideal_involution: None,
                involution,
            })
        }
        _ => Err(CliError::Usage("give exactly one of --ring and --ring-file".into())),
    }
}

fn choice_name(c: InvolutionChoice) -> &'static str {
    match c {
        InvolutionChoice::Identity => "identity",
        InvolutionChoice::Star => "star",
        InvolutionChoice::AntiTranspose => "anti-transpose",
        InvolutionChoice::File => "file",
    }
}

fn load_recipe(recipe: &Recipe, inv: Option<InvolutionChoice>) -> Result<Loaded> {
    let provenance = recipe.to_string();
    let mut loaded = match (recipe, inv) {
        (Recipe::Extension(base, g), _) => {
            let group = g.build()?;
            let (base_ring, base_inv) = match inv {
                Some(InvolutionChoice::Star) => {
                    let (r, i) = with_star(base)?;
                    (r, Some(i))
                }
                _ => (base.evaluate()?, None),
            };
            let ext = extension_group_ring(&base_ring, &group)?;
            let (involution, ideal_involution) = match (&base_inv, inv) {
                (Some(bi), _) => {
                    let unit = unitization_involution(bi, &ext.unitization)?;
                    let ambient =
                        lift_involution_group_ring(&ext.unitization.ring, &unit, &group, ext.ambient())?;
                    let ideal = lift_involution_group_ring(&base_ring, bi, &group, ext.ideal())?;
                    (Some(ambient), Some(ideal))
                }
                (None, Some(InvolutionChoice::Identity)) => (
                    Some(identity_involution(ext.ambient())?),
                    Some(identity_involution(ext.ideal())?),
                ),
                (None, None) => (None, None),
                (None, Some(other)) => return Err(unsupported(other, recipe)),
            };
            Loaded {
                ring: ext.embedding.ambient_arc(),
                recipe: Some(recipe.clone()),
                embedding: Some(ext.embedding),
                ideal_involution,
                involution,
            }
        }
        (_, Some(InvolutionChoice::Star)) => {
            let (ring, star) = with_star(recipe)?;
            let ring = Arc::new(ring);
            Loaded {
                ring,
                recipe: Some(recipe.clone()),
                embedding: None,
                ideal_involution: None,
                involution: Some(star),
            }
        }
        (Recipe::Triangular(base, n), Some(InvolutionChoice::AntiTranspose)) => {
            let base_ring = base.evaluate()?;
            let id = identity_involution(&base_ring)?;
            let ring = triangular_ring(&base_ring, *n)?;
            let inv = anti_transpose_involution(&base_ring, &id, *n, &ring)?;
            Loaded {
                ring: Arc::new(ring),
                recipe: Some(recipe.clone()),
                embedding: None,
                ideal_involution: None,
                involution: Some(inv),
            }
        }
        (_, Some(InvolutionChoice::Identity)) | (_, None) => {
            let ring = recipe.evaluate()?;
            let involution = match inv {
                Some(_) => Some(identity_involution(&ring)?),
                None => None,
            };
            Loaded {
                ring: Arc::new(ring),
                recipe: Some(recipe.clone()),
                embedding: None,
                ideal_involution: None,
                involution,
            }
        }
        (_, Some(other)) => return Err(unsupported(other, recipe)),
    };
    if loaded.ring.provenance() != provenance {
        // Clones keep the ring identity, so embeddings and involutions still apply.
        loaded.ring = Arc::new((*loaded.ring).clone().with_provenance(provenance));
    }
    Ok(loaded)
}

fn unsupported(choice: InvolutionChoice, recipe: &Recipe) -> CliError {
    CliError::Usage(format!(
        "involution `{}` is not available on {recipe}",
        choice_name(choice)
    ))
}

/// The ring of `recipe` together with its induced involution, built
/// bottom-up so the involution refers to the returned ring.
fn with_star(recipe: &Recipe) -> Result<(FiniteRing, Involution)> {
    let ring_and_inv = match recipe {
        Recipe::Catalog(key) => {
            let ring = catalog_ring(*key)?;
            let inv = identity_involution(&ring)?;
            (ring, inv)
        }
        Recipe::GroupRing(base, g) => {
            let group = g.build()?;
            let (b, bi) = with_star(base)?;
            let ring = group_ring(&b, &group)?;
            let inv = lift_involution_group_ring(&b, &bi, &group, &ring)?;
            (ring, inv)
        }
        Recipe::Unitization(base) => {
            let (b, bi) = with_star(base)?;
            let unit = unitization(&b)?;
            let inv = unitization_involution(&bi, &unit)?;
            ((*unit.ring).clone(), inv)
        }
        Recipe::Triangular(base, n) => {
            let (b, bi) = with_star(base)?;
            let ring = triangular_ring(&b, *n)?;
            let inv = anti_transpose_involution(&b, &bi, *n, &ring)?;
            (ring, inv)
        }
        Recipe::ConstDiag(base, n) | Recipe::PolyQuot(base, n) => {
            let b = base.evaluate()?;
            let ring = if matches!(recipe, Recipe::ConstDiag(..)) {
                const_diag_tri(&b, *n)?
            } else {
                poly_quotient(&b, *n)?
            };
            let inv = identity_involution(&ring)?;
            (ring, inv)
        }
        Recipe::Extension(..) => {
            return Err(CliError::Usage(
                "XGR(..) may only appear at the top of an expression when an involution is used".into(),
            ))
        }
    };
    Ok(ring_and_inv)
}
