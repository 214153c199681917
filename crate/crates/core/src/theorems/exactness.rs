use num_bigint::BigInt;
use serde::Serialize;

use super::{serialize_int_rows, Invariants};
use crate::abgroup::{image, kernel, FgAbGroup, GroupHom, MembershipTest};
use crate::error::{Error, Result};

/// A chain `node₀ → node₁ → … → node_k` with optional zero groups attached
/// at either end.
#[derive(Clone, Debug)]
pub struct SequenceSpec {
    pub nodes: Vec<FgAbGroup>,
    pub arrows: Vec<GroupHom>,
    pub leading_zero: bool,
    pub trailing_zero: bool,
}

impl SequenceSpec {
    pub fn new(arrows: Vec<GroupHom>, leading_zero: bool, trailing_zero: bool) -> Result<Self> {
        let Some(first) = arrows.first() else {
            return Err(Error::InvalidInput(
                "a sequence needs at least one arrow".into(),
            ));
        };
        let mut nodes = vec![first.dom().clone()];
        for (i, f) in arrows.iter().enumerate() {
            if f.dom() != nodes.last().expect("nonempty") {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {i} starts at {} but the previous node is {}",
                    f.dom(),
                    nodes[i]
                )));
            }
            nodes.push(f.cod().clone());
        }
        Ok(Self {
            nodes,
            arrows,
            leading_zero,
            trailing_zero,
        })
    }

    /// `0 → A → B → 0` for a single arrow.
    pub fn short(f: GroupHom) -> Self {
        Self::new(vec![f], true, true).expect("one arrow is always composable")
    }
}

/// The verdict at one node of a sequence.
#[derive(Clone, Debug, Serialize)]
pub struct NodeReport {
    pub position: usize,
    pub group: Invariants,
    pub kernel: Invariants,
    pub image: Invariants,
    pub exact: bool,
    /// Kernel generators (node coordinates) outside the image.
    #[serde(
        serialize_with = "serialize_int_rows",
        skip_serializing_if = "Vec::is_empty"
    )]
    pub kernel_not_in_image: Vec<Vec<BigInt>>,
    /// Image generators (node coordinates) not killed by the next arrow.
    #[serde(
        serialize_with = "serialize_int_rows",
        skip_serializing_if = "Vec::is_empty"
    )]
    pub image_not_in_kernel: Vec<Vec<BigInt>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactnessReport {
    pub nodes: Vec<NodeReport>,
    pub overall: bool,
}

/// Checks `ker(outgoing) = im(incoming)` at every node that has both an
/// incoming and an outgoing arrow, counting the zero groups at the ends.
pub fn check_exactness(s: &SequenceSpec) -> ExactnessReport {
    let k = s.nodes.len();
    let mut nodes = Vec::new();
    for pos in 0..k {
        let node = &s.nodes[pos];
        let incoming = if pos > 0 {
            Some(s.arrows[pos - 1].clone())
        } else if s.leading_zero {
            Some(GroupHom::zero(&FgAbGroup::trivial(), node))
        } else {
            None
        };
        let outgoing = if pos + 1 < k {
            Some(s.arrows[pos].clone())
        } else if s.trailing_zero {
            Some(GroupHom::zero(node, &FgAbGroup::trivial()))
        } else {
            None
        };
        let (Some(incoming), Some(outgoing)) = (incoming, outgoing) else {
            continue;
        };
        nodes.push(check_node(pos, node, &incoming, &outgoing));
    }
    let overall = nodes.iter().all(|n| n.exact);
    ExactnessReport { nodes, overall }
}

fn check_node(
    position: usize,
    node: &FgAbGroup,
    incoming: &GroupHom,
    outgoing: &GroupHom,
) -> NodeReport {
    let (ker, ker_incl) = kernel(outgoing);
    let (im, im_incl) = image(incoming);
    let membership = MembershipTest::new(incoming);
    let kernel_not_in_image: Vec<Vec<BigInt>> = (0..ker.ngens())
        .map(|i| ker_incl.apply(&ker.generator(i)))
        .filter(|x| !membership.contains(x))
        .map(|x| x.into_coords())
        .collect();
    let image_not_in_kernel: Vec<Vec<BigInt>> = (0..im.ngens())
        .map(|i| im_incl.apply(&im.generator(i)))
        .filter(|x| !outgoing.apply(x).is_zero())
        .map(|x| x.into_coords())
        .collect();
    NodeReport {
        position,
        group: Invariants::of(node),
        kernel: Invariants::of(&ker),
        image: Invariants::of(&im),
        exact: kernel_not_in_image.is_empty() && image_not_in_kernel.is_empty(),
        kernel_not_in_image,
        image_not_in_kernel,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::IntMatrix;

    fn g(orders: &[i64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders_i64(orders)
    }

    fn hom(dom: &FgAbGroup, cod: &FgAbGroup, rows: &[Vec<i64>]) -> GroupHom {
        GroupHom::new(dom.clone(), cod.clone(), IntMatrix::from_rows(rows)).unwrap()
    }

    #[test]
    fn doubling_sequence_is_exact() {
        let z = g(&[0]);
        let s = SequenceSpec::new(
            vec![
                GroupHom::multiplication(&z, 2),
                hom(&z, &g(&[2]), &[vec![1]]),
            ],
            true,
            true,
        )
        .unwrap();
        let r = check_exactness(&s);
        assert!(r.overall);
        assert_eq!(r.nodes.len(), 3);
    }

    #[test]
    fn wrong_quotient_is_caught() {
        let z = g(&[0]);
        let z4 = g(&[4]);
        let s = SequenceSpec::new(
            vec![GroupHom::multiplication(&z, 2), hom(&z, &z4, &[vec![2]])],
            true,
            true,
        )
        .unwrap();
        let r = check_exactness(&s);
        assert!(!r.overall);
        let bad: Vec<usize> = r
            .nodes
            .iter()
            .filter(|n| !n.exact)
            .map(|n| n.position)
            .collect();
        // 1 ∈ Z/4 is not hit.
        assert_eq!(bad, vec![2]);
        assert_eq!(r.nodes[2].kernel_not_in_image.len(), 1);
    }

    #[test]
    fn identity_is_exact() {
        let a = g(&[2, 6, 0]);
        assert!(check_exactness(&SequenceSpec::short(GroupHom::identity(&a))).overall);
    }

    #[test]
    fn non_composable_chain_rejected() {
        let a = g(&[2]);
        let b = g(&[3]);
        let r = SequenceSpec::new(
            vec![GroupHom::identity(&a), GroupHom::identity(&b)],
            false,
            false,
        );
        assert!(matches!(r, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn nonzero_composite_reports_witness() {
        let z2 = g(&[2]);
        let s = SequenceSpec::new(
            vec![GroupHom::identity(&z2), GroupHom::identity(&z2)],
            false,
            false,
        )
        .unwrap();
        let r = check_exactness(&s);
        assert!(!r.overall);
        assert_eq!(r.nodes[0].image_not_in_kernel.len(), 1);
    }
}
