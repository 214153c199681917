//! The exact sequences around Γ assembled as concrete chains of
//! homomorphisms, the checks run on them, and an independent Künneth
//! computation of low-degree integral homology.

mod batch;
mod exactness;
mod homology;
mod suites;

pub use batch::{
    abelian_groups_of_order, abelian_groups_up_to, batch_verify, BatchOptions, BatchSummary,
    GroupVerdict,
};
pub use exactness::{check_exactness, ExactnessReport, NodeReport, SequenceSpec};
pub use homology::{h3a_order_check, h3a_orders, kunneth_homology, GradedHomology, H3aOrders};
pub use suites::{
    corollary_suite, exact1_suite, identity_suite, theorem_h4_suite, CorollaryReport, Exact1Report,
    H4Options, H4Report, IdentityReport, StabilizationLevel,
};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::abgroup::FgAbGroup;

/// Invariant factors as they appear in reports: smallest first, `0` for Z.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Invariants(pub Vec<BigInt>);

impl Invariants {
    pub fn of(g: &FgAbGroup) -> Self {
        Self(g.invariants().to_vec())
    }

    pub fn to_group(&self) -> FgAbGroup {
        FgAbGroup::from_invariants(self.0.clone()).expect("canonical invariants")
    }
}

impl From<&FgAbGroup> for Invariants {
    fn from(g: &FgAbGroup) -> Self {
        Self::of(g)
    }
}

impl Serialize for Invariants {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_ints(&self.0, s)
    }
}

/// Integers go out as JSON numbers when they fit in 64 bits, as decimal strings otherwise.
pub fn serialize_ints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_i64() {
            Some(k) => seq.serialize_element(&k)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

pub fn serialize_int<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(k) => s.serialize_i64(k),
        None => s.serialize_str(&x.to_string()),
    }
}

pub fn serialize_int_rows<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    struct Row<'a>(&'a [BigInt]);
    impl Serialize for Row<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serialize_ints(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&Row(r))?;
    }
    seq.end()
}
