//! Whitehead's quadratic functor Γ.
//!
//! Two independent constructions:
//! * [`gamma_presentation`]: the free abelian group on symbols `w(a)`,
//!   `a ∈ A`, modulo `w(a) = w(−a)` and the seven-term relation
//!   `w(a+b+c) − w(a+b) − w(a+c) − w(b+c) + w(a) + w(b) + w(c) = 0`.
//!   Finite groups only.
//! * [`gamma_structural`]: `Γ(Z) = Z`, `Γ(Z/d)` cyclic of order `d·gcd(d, 2)`,
//!   and `Γ(A ⊕ B) = Γ(A) ⊕ Γ(B) ⊕ A⊗B` with `γ(a, b) = (γa, γb, a⊗b)`.
//!   Works for every finitely generated group.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::tensor::{tensor, TensorProduct};
use super::Carrier;
use crate::abgroup::{mod2, FgAbGroup, GroupElement, GroupHom, MembershipTest, Presentation};
use crate::error::{Error, Result};
use crate::intlin::{IntMatrix, LatticeBasis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaLabel {
    /// `γ(eᵢ)` for a canonical generator `eᵢ` of `A`.
    Square(usize),
    /// `[eᵢ, eⱼ]`, `i < j`.
    Cross(usize, usize),
    /// The word `w(a)`.
    Word(GroupElement),
}

#[derive(Clone, Debug)]
enum GammaKind {
    Structural,
    Presentation { index: HashMap<GroupElement, usize> },
}

/// `Γ(A)` with `γ`, `Ψ : Γ(A) → A⊗A`, `Φ : Γ(A) → A/2` and the pairing
/// `[ , ] : A⊗A → Γ(A)`.
#[derive(Clone, Debug)]
pub struct GammaValue {
    pub source: FgAbGroup,
    pub carrier: Carrier<GammaLabel>,
    pub tensor: TensorProduct,
    pub mod2: FgAbGroup,
    pub mod2_projection: GroupHom,
    pub psi: GroupHom,
    pub phi: GroupHom,
    pub pairing: GroupHom,
    kind: GammaKind,
}

impl GammaValue {
    pub fn group(&self) -> &FgAbGroup {
        self.carrier.group()
    }

    pub fn is_structural(&self) -> bool {
        matches!(self.kind, GammaKind::Structural)
    }

    fn raw_gamma(&self, a: &GroupElement) -> Vec<BigInt> {
        match &self.kind {
            GammaKind::Structural => structural_raw_gamma(&self.source, a),
            GammaKind::Presentation { index } => {
                let mut v = vec![BigInt::zero(); self.carrier.raw_len()];
                v[index[a]] = BigInt::one();
                v
            }
        }
    }

    /// The universal quadratic map `γ : A → Γ(A)`.
    pub fn gamma(&self, a: &GroupElement) -> GroupElement {
        self.carrier.element_from_raw(&self.raw_gamma(a))
    }

    /// `[a, b] = γ(a+b) − γ(a) − γ(b)`.
    pub fn bracket(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let g = self.group();
        let s = self.source.add(a, b);
        g.sub(&g.sub(&self.gamma(&s), &self.gamma(a)), &self.gamma(b))
    }
}

fn structural_raw_gamma(a: &FgAbGroup, x: &GroupElement) -> Vec<BigInt> {
    let k = x.coords();
    let n = a.ngens();
    let mut v = Vec::with_capacity(n + n * (n.saturating_sub(1)) / 2);
    for c in k {
        v.push(c * c);
    }
    for i in 0..n {
        for j in i + 1..n {
            v.push(&k[i] * &k[j]);
        }
    }
    v
}

fn finish(
    source: &FgAbGroup,
    carrier: Carrier<GammaLabel>,
    kind: GammaKind,
    psi_raw: IntMatrix,
    phi_raw_source: IntMatrix,
    pairing_raw: IntMatrix,
) -> Result<GammaValue> {
    let t = tensor(source, source);
    let (m2, proj) = mod2(source);
    let psi = carrier.transport(&t.carrier, &psi_raw)?;
    let phi_raw = proj.matrix().mul(&phi_raw_source)?;
    let phi = carrier.transport_to_group(&m2, &phi_raw)?;
    let pairing = t.carrier.transport(&carrier, &pairing_raw)?;
    Ok(GammaValue {
        source: source.clone(),
        carrier,
        tensor: t,
        mod2: m2,
        mod2_projection: proj,
        psi,
        phi,
        pairing,
        kind,
    })
}

/// Γ(A) assembled from cyclic summands and cross terms.
pub fn gamma_structural(a: &FgAbGroup) -> GammaValue {
    let d = a.invariants();
    let n = d.len();
    let two = BigInt::from(2);
    let mut labels = Vec::new();
    let mut orders = Vec::new();
    let mut cross_index = HashMap::new();
    for (i, di) in d.iter().enumerate() {
        labels.push(GammaLabel::Square(i));
        orders.push(di * di.gcd(&two));
    }
    for i in 0..n {
        for j in i + 1..n {
            cross_index.insert((i, j), labels.len());
            labels.push(GammaLabel::Cross(i, j));
            orders.push(d[i].gcd(&d[j]));
        }
    }
    let raw_n = labels.len();
    let carrier = Carrier::new(labels, Presentation::diagonal(&orders));
    let t_idx = |i: usize, j: usize| i * n + j;

    // Ψ: γ(eᵢ) ↦ eᵢ⊗eᵢ, [eᵢ, eⱼ] ↦ eᵢ⊗eⱼ + eⱼ⊗eᵢ
    let mut psi_raw = IntMatrix::zeros(n * n, raw_n);
    // Φ: γ(eᵢ) ↦ eᵢ, [eᵢ, eⱼ] ↦ 0 (into A, then projected to A/2)
    let mut phi_raw = IntMatrix::zeros(n, raw_n);
    for i in 0..n {
        psi_raw[(t_idx(i, i), i)] = BigInt::one();
        phi_raw[(i, i)] = BigInt::one();
    }
    for (&(i, j), &c) in &cross_index {
        psi_raw[(t_idx(i, j), c)] = BigInt::one();
        psi_raw[(t_idx(j, i), c)] = BigInt::one();
    }
    // [ , ]: eᵢ⊗eᵢ ↦ 2γ(eᵢ), eᵢ⊗eⱼ ↦ [e_min, e_max]
    let mut pairing_raw = IntMatrix::zeros(raw_n, n * n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                pairing_raw[(i, t_idx(i, i))] = two.clone();
            } else {
                let c = cross_index[&(i.min(j), i.max(j))];
                pairing_raw[(c, t_idx(i, j))] = BigInt::one();
            }
        }
    }
    finish(
        a,
        carrier,
        GammaKind::Structural,
        psi_raw,
        phi_raw,
        pairing_raw,
    )
    .expect("structural maps are well defined")
}

/// Γ(A) as the free group on `w(a)` modulo the defining relations.
pub fn gamma_presentation(a: &FgAbGroup, cap: u64) -> Result<GammaValue> {
    let elements = a.enumerate(cap)?;
    let n = elements.len();
    let index: HashMap<GroupElement, usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, x)| (x, i))
        .collect();
    let neg: Vec<usize> = elements.iter().map(|x| index[&a.neg(x)]).collect();
    let add = |i: usize, j: usize| index[&a.add(&elements[i], &elements[j])];

    let mut lattice = LatticeBasis::new(n);
    let mut row = vec![0i64; n];
    let push = |row: &mut [i64], lattice: &mut LatticeBasis| -> Result<()> {
        if row.iter().any(|&x| x != 0) {
            let v: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
            lattice.insert(&v)?;
        }
        row.iter_mut().for_each(|x| *x = 0);
        Ok(())
    };
    // w(a) − w(−a)
    for i in 0..n {
        if neg[i] > i {
            row[i] += 1;
            row[neg[i]] -= 1;
            push(&mut row, &mut lattice)?;
        }
    }
    // The seven-term relation is symmetric in (a, b, c): unordered triples suffice.
    for i in 0..n {
        for j in i..n {
            let ij = add(i, j);
            for k in j..n {
                let ik = add(i, k);
                let jk = add(j, k);
                let ijk = add(ij, k);
                row[ijk] += 1;
                row[ij] -= 1;
                row[ik] -= 1;
                row[jk] -= 1;
                row[i] += 1;
                row[j] += 1;
                row[k] += 1;
                push(&mut row, &mut lattice)?;
            }
        }
    }
    let relations = lattice.to_row_matrix();
    let labels = elements.iter().cloned().map(GammaLabel::Word).collect();
    let carrier = Carrier::new(labels, Presentation::new(n, relations)?);

    let t = tensor(a, a);
    let na = a.ngens();
    let mut psi_raw = IntMatrix::zeros(na * na, n);
    let mut phi_raw = IntMatrix::zeros(na, n);
    for (c, x) in elements.iter().enumerate() {
        for (r, v) in t.raw_pure(x, x).into_iter().enumerate() {
            psi_raw[(r, c)] = v;
        }
        for (r, v) in x.coords().iter().enumerate() {
            phi_raw[(r, c)] = v.clone();
        }
    }
    let mut pairing_raw = IntMatrix::zeros(n, na * na);
    for i in 0..na {
        for j in 0..na {
            let (ei, ej) = (a.generator(i), a.generator(j));
            let col = t.raw_index(i, j);
            pairing_raw[(index[&a.add(&ei, &ej)], col)] += 1;
            pairing_raw[(index[&ei], col)] -= 1;
            pairing_raw[(index[&ej], col)] -= 1;
        }
    }
    finish(
        a,
        carrier,
        GammaKind::Presentation { index },
        psi_raw,
        phi_raw,
        pairing_raw,
    )
}

/// A function `A → B` on a finite group, tabulated in enumeration order of `A`.
#[derive(Clone, Debug)]
pub struct QuadraticTable {
    pub source: FgAbGroup,
    pub target: FgAbGroup,
    pub values: Vec<GroupElement>,
}

impl QuadraticTable {
    pub fn from_fn(
        source: &FgAbGroup,
        target: &FgAbGroup,
        cap: u64,
        f: impl Fn(&GroupElement) -> GroupElement,
    ) -> Result<Self> {
        let values = source.enumerate(cap)?.iter().map(f).collect();
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            values,
        })
    }

    pub fn value(&self, a: &GroupElement) -> &GroupElement {
        &self.values[self.source.element_index(a)]
    }
}

/// `f(a) = f(−a)` and `(a, b) ↦ f(a+b) − f(a) − f(b)` bilinear, checked exhaustively.
pub fn quadratic_check(f: &QuadraticTable) -> bool {
    let a = &f.source;
    let b = &f.target;
    let Ok(elements) = a.enumerate(u64::MAX) else {
        return false;
    };
    if elements.len() != f.values.len() {
        return false;
    }
    let val = |x: &GroupElement| &f.values[a.element_index(x)];
    if elements.iter().any(|x| val(x) != val(&a.neg(x))) {
        return false;
    }
    let n = elements.len();
    let mut cross = vec![vec![b.zero(); n]; n];
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            cross[i][j] = b.sub(&b.sub(val(&a.add(x, y)), val(x)), val(y));
        }
    }
    // The symbol is symmetric, so additivity in the first slot is enough.
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            let s = a.element_index(&a.add(x, y));
            let additive = (0..n).all(|k| cross[s][k] == b.add(&cross[i][k], &cross[j][k]));
            if !additive {
                return false;
            }
        }
    }
    true
}

/// The unique homomorphism `h : Γ(A) → B` with `h ∘ γ = f`.
pub fn universal_factorization(g: &GammaValue, f: &QuadraticTable) -> Result<GroupHom> {
    if f.source != g.source {
        return Err(Error::InvalidInput(
            "table and Γ have different sources".into(),
        ));
    }
    if !quadratic_check(f) {
        return Err(Error::InvalidInput("function is not quadratic".into()));
    }
    let a = &g.source;
    let gamma_group = g.group();
    let elements = a.enumerate(u64::MAX)?;
    // Columns γ(x); every canonical generator of Γ(A) must be a combination of them.
    let gammas: Vec<Vec<BigInt>> = elements.iter().map(|x| g.gamma(x).into_coords()).collect();
    let span = GroupHom::new(
        FgAbGroup::free(elements.len()),
        gamma_group.clone(),
        IntMatrix::from_columns(gamma_group.ngens(), &gammas),
    )?;
    let membership = MembershipTest::new(&span);
    let target = &f.target;
    let mut cols = Vec::with_capacity(gamma_group.ngens());
    for k in 0..gamma_group.ngens() {
        let y = membership
            .preimage(gamma_group.generator(k).coords())?
            .ok_or_else(|| Error::InvalidInput("γ(A) does not generate Γ(A)".into()))?;
        let mut v = vec![BigInt::zero(); target.ngens()];
        for (coef, fx) in y.iter().zip(&f.values) {
            if coef.is_zero() {
                continue;
            }
            for (acc, c) in v.iter_mut().zip(fx.coords()) {
                *acc += coef * c;
            }
        }
        cols.push(v);
    }
    let h = GroupHom::new(
        gamma_group.clone(),
        target.clone(),
        IntMatrix::from_columns(target.ngens(), &cols),
    )?;
    for (x, fx) in elements.iter().zip(&f.values) {
        if &h.apply(&g.gamma(x)) != fx {
            return Err(Error::InvalidInput(
                "factorization does not reproduce the table".into(),
            ));
        }
    }
    Ok(h)
}

/// The isomorphism `h : Γ_pres(A) → Γ_struct(A)` with `h ∘ γ = γ`, verified to
/// commute with Ψ, Φ and the pairing.
pub fn gamma_isomorphism(
    structural: &GammaValue,
    presentation: &GammaValue,
    cap: u64,
) -> Result<GroupHom> {
    let table = QuadraticTable::from_fn(&presentation.source, structural.group(), cap, |x| {
        structural.gamma(x)
    })?;
    let h = universal_factorization(presentation, &table)?;
    if !h.is_isomorphism() {
        return Err(Error::InvalidInput(
            "comparison map is not an isomorphism".into(),
        ));
    }
    let mismatch =
        |what: &str| Error::InvalidInput(format!("comparison map does not commute with {what}"));
    if structural.psi.compose(&h)? != presentation.psi {
        return Err(mismatch("Ψ"));
    }
    if structural.phi.compose(&h)? != presentation.phi {
        return Err(mismatch("Φ"));
    }
    if h.compose(&presentation.pairing)? != structural.pairing {
        return Err(mismatch("the pairing"));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::{kernel, DEFAULT_ENUM_CAP};
    use num_traits::ToPrimitive;

    fn g(orders: &[i64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders_i64(orders)
    }

    fn inv(x: &FgAbGroup) -> Vec<i64> {
        x.invariants().iter().map(|d| d.to_i64().unwrap()).collect()
    }

    #[test]
    fn presentation_examples() {
        assert_eq!(
            inv(gamma_presentation(&g(&[2]), DEFAULT_ENUM_CAP)
                .unwrap()
                .group()),
            vec![4]
        );
        assert!(gamma_presentation(&FgAbGroup::trivial(), DEFAULT_ENUM_CAP)
            .unwrap()
            .group()
            .is_trivial());
        assert_eq!(
            inv(gamma_presentation(&g(&[3]), DEFAULT_ENUM_CAP)
                .unwrap()
                .group()),
            vec![3]
        );
        assert_eq!(
            gamma_presentation(&g(&[0]), DEFAULT_ENUM_CAP).unwrap_err(),
            Error::InfiniteEnumeration
        );
        assert!(matches!(
            gamma_presentation(&g(&[8]), 4),
            Err(Error::SizeCap { cap: 4, .. })
        ));
    }

    #[test]
    fn structural_examples() {
        let z = g(&[0]);
        let gz = gamma_structural(&z);
        assert_eq!(inv(gz.group()), vec![0]);
        let three = z.element_i64(&[3]).unwrap();
        let gen = gz.gamma(&z.generator(0));
        assert_eq!(gz.gamma(&three), gz.group().scale(&BigInt::from(9), &gen));
        assert_eq!(inv(gamma_structural(&g(&[2, 2])).group()), vec![2, 4, 4]);
        assert_eq!(inv(gamma_structural(&g(&[0, 0])).group()), vec![0, 0, 0]);
    }

    #[test]
    fn structural_agrees_with_presentation() {
        for orders in [
            vec![2],
            vec![3],
            vec![4],
            vec![2, 2],
            vec![2, 4],
            vec![6],
            vec![2, 2, 2],
        ] {
            let a = g(&orders);
            let s = gamma_structural(&a);
            let p = gamma_presentation(&a, DEFAULT_ENUM_CAP).unwrap();
            assert_eq!(s.group(), p.group(), "{a}");
            gamma_isomorphism(&s, &p, DEFAULT_ENUM_CAP).unwrap();
        }
    }

    #[test]
    fn quadratic_check_examples() {
        let z4 = g(&[4]);
        let gm = gamma_structural(&z4);
        let t = QuadraticTable::from_fn(&z4, gm.group(), 64, |x| gm.gamma(x)).unwrap();
        assert!(quadratic_check(&t));

        let z3 = g(&[3]);
        let id = QuadraticTable::from_fn(&z3, &z3, 64, Clone::clone).unwrap();
        assert!(!quadratic_check(&id));

        let a = g(&[2, 4]);
        let tp = tensor(&a, &a);
        let sq = QuadraticTable::from_fn(&a, tp.group(), 64, |x| tp.pure(x, x)).unwrap();
        assert!(quadratic_check(&sq));
    }

    #[test]
    fn universal_factorization_examples() {
        let a = g(&[2, 4]);
        let p = gamma_presentation(&a, DEFAULT_ENUM_CAP).unwrap();
        let gm = QuadraticTable::from_fn(&a, p.group(), 64, |x| p.gamma(x)).unwrap();
        assert_eq!(
            universal_factorization(&p, &gm).unwrap(),
            GroupHom::identity(p.group())
        );
        let sq =
            QuadraticTable::from_fn(&a, p.tensor.group(), 64, |x| p.tensor.pure(x, x)).unwrap();
        assert_eq!(universal_factorization(&p, &sq).unwrap(), p.psi);
        let bar = QuadraticTable::from_fn(&a, &p.mod2, 64, |x| p.mod2_projection.apply(x)).unwrap();
        assert_eq!(universal_factorization(&p, &bar).unwrap(), p.phi);
        let lin = QuadraticTable::from_fn(&a, &a, 64, Clone::clone).unwrap();
        assert!(matches!(
            universal_factorization(&p, &lin),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn psi_kernel_is_two_torsion() {
        for orders in [vec![2], vec![4], vec![2, 4, 0], vec![8, 8]] {
            let gm = gamma_structural(&g(&orders));
            let (k, _) = kernel(&gm.psi);
            assert!(k.invariants().iter().all(|d| d == &BigInt::from(2)));
        }
    }
}
