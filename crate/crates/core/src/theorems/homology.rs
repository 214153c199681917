use num_bigint::BigInt;
use serde::Serialize;

use super::Invariants;
use crate::abgroup::FgAbGroup;
use crate::error::{Error, Result};
use crate::functors::{exterior_cube, sigma_involutions, tensor, tor};
use crate::sym2homology::{invariants, InvolutiveModule};

/// `H₀ … H₃` of a group with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedHomology {
    pub degrees: [FgAbGroup; 4],
}

impl GradedHomology {
    pub fn degree(&self, n: usize) -> &FgAbGroup {
        &self.degrees[n]
    }

    fn point() -> Self {
        let t = FgAbGroup::trivial;
        Self {
            degrees: [FgAbGroup::integers(), t(), t(), t()],
        }
    }

    /// Homology of the cyclic group with invariant `d` (`d = 0` for Z).
    fn cyclic(d: &BigInt) -> Self {
        let t = FgAbGroup::trivial;
        let c = FgAbGroup::from_cyclic_orders(std::slice::from_ref(d));
        let h3 = if d == &BigInt::from(0) {
            t()
        } else {
            c.clone()
        };
        Self {
            degrees: [FgAbGroup::integers(), c, t(), h3],
        }
    }

    /// Künneth formula for the direct sum.
    fn product(&self, other: &Self) -> Self {
        let mut degrees: [Vec<BigInt>; 4] = Default::default();
        for i in 0..4 {
            for j in 0..4 - i {
                let t = tensor(&self.degrees[i], &other.degrees[j]);
                degrees[i + j].extend_from_slice(t.group().invariants());
                if i + j + 1 < 4 {
                    let tr = tor(&self.degrees[i], &other.degrees[j]);
                    degrees[i + j + 1].extend_from_slice(tr.group().invariants());
                }
            }
        }
        Self {
            degrees: degrees.map(|v| FgAbGroup::from_cyclic_orders(&v)),
        }
    }
}

impl Serialize for GradedHomology {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Invariants> = self.degrees.iter().map(Invariants::of).collect();
        v.serialize(s)
    }
}

/// Degrees 0 to 3 of `H∗(A, Z)` from the cyclic decomposition and the Künneth formula.
pub fn kunneth_homology(a: &FgAbGroup) -> GradedHomology {
    a.invariants()
        .iter()
        .fold(GradedHomology::point(), |acc, d| {
            acc.product(&GradedHomology::cyclic(d))
        })
}

/// The three orders compared by the H₃ order check.
#[derive(Clone, Debug, Serialize)]
pub struct H3aOrders {
    #[serde(serialize_with = "super::serialize_int")]
    pub h3: BigInt,
    #[serde(serialize_with = "super::serialize_int")]
    pub exterior_cube: BigInt,
    #[serde(serialize_with = "super::serialize_int")]
    pub tor_invariants: BigInt,
    pub holds: bool,
}

/// `|H₃(A)|`, `|Λ³A|` and `|Tor(A, A)^{σ^ε}|` for finite `A`.
pub fn h3a_orders(a: &FgAbGroup) -> Result<H3aOrders> {
    if !a.is_finite() {
        return Err(Error::Unsupported(
            "the H₃ order check needs a finite group".into(),
        ));
    }
    let h3 = kunneth_homology(a).degrees[3].order().expect("finite");
    let l3 = exterior_cube(a).order().expect("finite");
    let sigma = sigma_involutions(a).sigma_eps;
    let fixed = invariants(&InvolutiveModule::new(sigma)?)
        .0
        .order()
        .expect("finite");
    let holds = h3 == &l3 * &fixed;
    Ok(H3aOrders {
        h3,
        exterior_cube: l3,
        tor_invariants: fixed,
        holds,
    })
}

/// `|H₃(A)| = |Λ³A| · |Tor(A, A)^{σ^ε}|`.
pub fn h3a_order_check(a: &FgAbGroup) -> Result<bool> {
    Ok(h3a_orders(a)?.holds)
}
