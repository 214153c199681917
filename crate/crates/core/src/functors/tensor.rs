use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Carrier;
use crate::abgroup::{FgAbGroup, GroupElement, GroupHom, Presentation};
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

/// `A ⊗ B`, labelled by pairs `(i, j)` of canonical generator indices.
///
/// Raw generator `(i, j)` sits at index `i · ngens(B) + j` and has order
/// `gcd(dᵢ, eⱼ)` with gcd(0, x) = x.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub left: FgAbGroup,
    pub right: FgAbGroup,
    pub carrier: Carrier<(usize, usize)>,
}

impl TensorProduct {
    pub fn group(&self) -> &FgAbGroup {
        self.carrier.group()
    }

    pub fn raw_index(&self, i: usize, j: usize) -> usize {
        i * self.right.ngens() + j
    }

    /// Raw coordinates of `x ⊗ y`.
    pub fn raw_pure(&self, x: &GroupElement, y: &GroupElement) -> Vec<BigInt> {
        let mut v = Vec::with_capacity(self.carrier.raw_len());
        for a in x.coords() {
            for b in y.coords() {
                v.push(a * b);
            }
        }
        v
    }

    /// `x ⊗ y`.
    pub fn pure(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.carrier.element_from_raw(&self.raw_pure(x, y))
    }

    /// The factor swap `x ⊗ y ↦ y ⊗ x` on `A ⊗ A`.
    pub fn swap(&self) -> Result<GroupHom> {
        if self.left != self.right {
            return Err(Error::InvalidInput("swap needs equal factors".into()));
        }
        let n = self.left.ngens();
        let mut raw = IntMatrix::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                raw[(self.raw_index(j, i), self.raw_index(i, j))] = BigInt::one();
            }
        }
        self.carrier.transport(&self.carrier, &raw)
    }
}

pub fn tensor(a: &FgAbGroup, b: &FgAbGroup) -> TensorProduct {
    let mut labels = Vec::new();
    let mut orders = Vec::new();
    for (i, d) in a.invariants().iter().enumerate() {
        for (j, e) in b.invariants().iter().enumerate() {
            labels.push((i, j));
            orders.push(d.gcd(e));
        }
    }
    TensorProduct {
        left: a.clone(),
        right: b.clone(),
        carrier: Carrier::new(labels, Presentation::diagonal(&orders)),
    }
}

/// `f ⊗ g : A ⊗ B → A' ⊗ B'`.
pub fn tensor_hom(
    f: &GroupHom,
    g: &GroupHom,
    dom: &TensorProduct,
    cod: &TensorProduct,
) -> Result<GroupHom> {
    if f.dom() != &dom.left
        || g.dom() != &dom.right
        || f.cod() != &cod.left
        || g.cod() != &cod.right
    {
        return Err(Error::DimensionMismatch(
            "tensor factors do not match the maps".into(),
        ));
    }
    let raw = f.matrix().kron(g.matrix());
    dom.carrier.transport(&cod.carrier, &raw)
}

/// `Λ²A = A⊗A / ⟨a⊗a⟩` with the projection from `A⊗A`.
#[derive(Clone, Debug)]
pub struct ExteriorSquare {
    pub tensor: TensorProduct,
    pub group: FgAbGroup,
    pub projection: GroupHom,
}

impl ExteriorSquare {
    pub fn wedge(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.projection.apply(&self.tensor.pure(x, y))
    }
}

pub fn exterior_square(a: &FgAbGroup) -> ExteriorSquare {
    let t = tensor(a, a);
    let n = a.ngens();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let base = t.carrier.presentation.relations.clone();
    for i in 0..base.rows() {
        rows.push(base.row(i).to_vec());
    }
    for i in 0..n {
        let mut v = vec![BigInt::zero(); n * n];
        v[t.raw_index(i, i)] = BigInt::one();
        rows.push(v);
        for j in i + 1..n {
            let mut v = vec![BigInt::zero(); n * n];
            v[t.raw_index(i, j)] = BigInt::one();
            v[t.raw_index(j, i)] = BigInt::one();
            rows.push(v);
        }
    }
    let rel = IntMatrix::from_columns(n * n, &rows).transpose();
    let rel = if rows.is_empty() {
        IntMatrix::zeros(0, n * n)
    } else {
        rel
    };
    let canon = Presentation::new(n * n, rel)
        .expect("square")
        .canonicalize();
    let projection = GroupHom::new(
        t.group().clone(),
        canon.group.clone(),
        canon
            .forward
            .mul(&t.carrier.canon.backward)
            .expect("shapes"),
    )
    .expect("quotient of the tensor square");
    ExteriorSquare {
        tensor: t,
        group: canon.group,
        projection,
    }
}

/// `Λ³A`: one generator `eᵢ∧eⱼ∧e_k` (i<j<k) of order gcd(dᵢ, dⱼ, d_k).
pub fn exterior_cube(a: &FgAbGroup) -> FgAbGroup {
    let d = a.invariants();
    let mut orders = Vec::new();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            for k in j + 1..d.len() {
                orders.push(d[i].gcd(&d[j]).gcd(&d[k]));
            }
        }
    }
    FgAbGroup::from_cyclic_orders(&orders)
}
