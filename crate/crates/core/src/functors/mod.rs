//! Functors on finitely generated abelian groups: tensor, exterior powers,
//! Tor with its τₙ maps and involutions, and Whitehead's quadratic functor Γ.
//!
//! Each construction first builds a *raw* presentation on labelled
//! generators (pairs of generator indices, resolution cycles, words `w(a)`),
//! then canonicalises. Maps are written on the labelled generators and
//! transported through the canonicalisation.

mod gamma;
mod tensor;
mod tor;

pub use gamma::{
    gamma_isomorphism, gamma_presentation, gamma_structural, quadratic_check,
    universal_factorization, GammaLabel, GammaValue, QuadraticTable,
};
pub use tensor::{
    exterior_cube, exterior_square, tensor, tensor_hom, ExteriorSquare, TensorProduct,
};
pub use tor::{
    norm_chain_map, sigma_involutions, tau_stabilization_map, tor, tor_colimit_comparison,
    SigmaInvolutions, TorGroup,
};

use num_bigint::BigInt;

use crate::abgroup::{Canonicalization, FgAbGroup, GroupElement, GroupHom, Presentation};
use crate::error::Result;
use crate::intlin::IntMatrix;

/// A group given by a raw presentation on labelled generators together with
/// its canonical form.
#[derive(Clone, Debug)]
pub struct Carrier<L> {
    pub labels: Vec<L>,
    pub presentation: Presentation,
    pub canon: Canonicalization,
}

impl<L> Carrier<L> {
    pub fn new(labels: Vec<L>, presentation: Presentation) -> Self {
        debug_assert_eq!(labels.len(), presentation.generator_count);
        let canon = presentation.canonicalize();
        Self {
            labels,
            presentation,
            canon,
        }
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.canon.group
    }

    pub fn raw_len(&self) -> usize {
        self.labels.len()
    }

    pub fn element_from_raw(&self, raw: &[BigInt]) -> GroupElement {
        self.canon.to_canonical(raw)
    }

    pub fn raw_of(&self, x: &GroupElement) -> Vec<BigInt> {
        self.canon.to_raw(x)
    }

    /// The canonical homomorphism `self → cod` induced by a map of raw
    /// generators (`cod.raw_len × self.raw_len`).
    pub fn transport<M>(&self, cod: &Carrier<M>, raw: &IntMatrix) -> Result<GroupHom> {
        let m = cod.canon.forward.mul(raw)?.mul(&self.canon.backward)?;
        GroupHom::new(self.group().clone(), cod.group().clone(), m)
    }

    /// Canonical homomorphism from this carrier into a plain group, given on raw generators
    /// (`cod.ngens × self.raw_len`).
    pub fn transport_to_group(&self, cod: &FgAbGroup, raw: &IntMatrix) -> Result<GroupHom> {
        GroupHom::new(
            self.group().clone(),
            cod.clone(),
            raw.mul(&self.canon.backward)?,
        )
    }

    /// Canonical homomorphism from a plain group into this carrier, given as
    /// raw coordinates of the images of the domain generators (`self.raw_len × dom.ngens`).
    pub fn transport_from_group(&self, dom: &FgAbGroup, raw: &IntMatrix) -> Result<GroupHom> {
        GroupHom::new(
            dom.clone(),
            self.group().clone(),
            self.canon.forward.mul(raw)?,
        )
    }
}
