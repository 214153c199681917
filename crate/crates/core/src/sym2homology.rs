//! Homology of the two-element group with coefficients in an abelian group
//! carrying an involution.

use crate::abgroup::{cokernel, kernel, FgAbGroup, GroupHom};
use crate::error::{Error, Result};

/// An abelian group with an order-two automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutiveModule {
    carrier: FgAbGroup,
    sigma: GroupHom,
}

impl InvolutiveModule {
    pub fn new(sigma: GroupHom) -> Result<Self> {
        if sigma.dom() != sigma.cod() {
            return Err(Error::InvalidInput(
                "involution must be an endomorphism".into(),
            ));
        }
        let carrier = sigma.dom().clone();
        if sigma.compose(&sigma)? != GroupHom::identity(&carrier) {
            return Err(Error::InvalidInput(
                "map does not square to the identity".into(),
            ));
        }
        Ok(Self { carrier, sigma })
    }

    /// The module with the trivial action.
    pub fn trivial(carrier: &FgAbGroup) -> Self {
        Self {
            carrier: carrier.clone(),
            sigma: GroupHom::identity(carrier),
        }
    }

    pub fn carrier(&self) -> &FgAbGroup {
        &self.carrier
    }

    pub fn sigma(&self) -> &GroupHom {
        &self.sigma
    }

    fn difference(&self) -> GroupHom {
        self.sigma
            .sub(&GroupHom::identity(&self.carrier))
            .expect("endomorphisms")
    }

    fn norm(&self) -> GroupHom {
        self.sigma
            .add(&GroupHom::identity(&self.carrier))
            .expect("endomorphisms")
    }
}

/// `M / (σ − 1)M` with its projection.
pub fn coinvariants(m: &InvolutiveModule) -> (FgAbGroup, GroupHom) {
    cokernel(&m.difference())
}

/// `ker(σ − 1)` with its inclusion.
pub fn invariants(m: &InvolutiveModule) -> (FgAbGroup, GroupHom) {
    kernel(&m.difference())
}

/// `ker(σ − 1) / (1 + σ)M`.
pub fn h1(m: &InvolutiveModule) -> FgAbGroup {
    let (fixed, incl) = invariants(m);
    let norm = m.norm();
    let into_fixed = norm
        .lift_through(&incl)
        .expect("norm lands in the invariants");
    debug_assert_eq!(into_fixed.cod(), &fixed);
    cokernel(&into_fixed).0
}
