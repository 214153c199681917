//! `Tor(A, B)` as the first homology of the tensor product of the two
//! presentation resolutions
//!
//! ```text
//! 0 → F₁⊗G₁ --∂₂--> F₀⊗G₁ ⊕ F₁⊗G₀ --∂₁--> F₀⊗G₀ → 0
//! ∂₂(x⊗y) = (∂x⊗y, −x⊗∂y),   ∂₁ = id⊗∂ + ∂⊗id
//! ```
//!
//! `F₀` is free on the canonical generators of `A`, `F₁` free on its torsion
//! generators, and `∂` is diagonal with the invariant factors.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::tensor::tensor;
use super::Carrier;
use crate::abgroup::{FgAbGroup, GroupElement, GroupHom, Presentation};
use crate::error::{Error, Result};
use crate::intlin::{kernel_basis, smith_normal_form, IntMatrix, SmithDecomposition};

/// Index bookkeeping for the middle term `F₀⊗G₁ ⊕ F₁⊗G₀`.
#[derive(Clone, Debug)]
struct Layout {
    na: usize,
    ta: usize,
    nb: usize,
    tb: usize,
}

impl Layout {
    /// `u_i ⊗ g_j` with `u_i ∈ F₀`, `g_j ∈ G₁`.
    fn first(&self, i: usize, j: usize) -> usize {
        i * self.tb + j
    }

    /// `f_i ⊗ v_j` with `f_i ∈ F₁`, `v_j ∈ G₀`.
    fn second(&self, i: usize, j: usize) -> usize {
        self.na * self.tb + i * self.nb + j
    }

    fn middle_len(&self) -> usize {
        self.na * self.tb + self.ta * self.nb
    }

    fn top(&self, i: usize, j: usize) -> usize {
        i * self.tb + j
    }

    fn bottom(&self, i: usize, j: usize) -> usize {
        i * self.nb + j
    }
}

/// `Tor(A, B)` with its defining complex. Raw generators of the carrier are a
/// basis of the 1-cycles.
#[derive(Clone, Debug)]
pub struct TorGroup {
    pub left: FgAbGroup,
    pub right: FgAbGroup,
    /// `∂₂ : F₁⊗G₁ → F₀⊗G₁ ⊕ F₁⊗G₀`.
    pub boundary_top: IntMatrix,
    /// `∂₁ : F₀⊗G₁ ⊕ F₁⊗G₀ → F₀⊗G₀`.
    pub boundary_bottom: IntMatrix,
    /// Columns form a basis of `ker ∂₁`.
    pub cycles: IntMatrix,
    pub carrier: Carrier<Vec<BigInt>>,
    layout: Layout,
    cycle_snf: SmithDecomposition,
}

pub fn tor(a: &FgAbGroup, b: &FgAbGroup) -> TorGroup {
    let layout = Layout {
        na: a.ngens(),
        ta: a.torsion_invariants().len(),
        nb: b.ngens(),
        tb: b.torsion_invariants().len(),
    };
    let da = a.torsion_invariants();
    let db = b.torsion_invariants();
    let l = &layout;

    let mut bottom = IntMatrix::zeros(l.na * l.nb, l.middle_len());
    for i in 0..l.na {
        for j in 0..l.tb {
            bottom[(l.bottom(i, j), l.first(i, j))] = db[j].clone();
        }
    }
    for i in 0..l.ta {
        for j in 0..l.nb {
            bottom[(l.bottom(i, j), l.second(i, j))] = da[i].clone();
        }
    }

    let mut top = IntMatrix::zeros(l.middle_len(), l.ta * l.tb);
    for i in 0..l.ta {
        for j in 0..l.tb {
            top[(l.first(i, j), l.top(i, j))] = da[i].clone();
            top[(l.second(i, j), l.top(i, j))] = -db[j].clone();
        }
    }

    let cycles = kernel_basis(&bottom);
    let cycle_snf = smith_normal_form(&cycles);
    let k = cycles.cols();
    let mut rel_rows = Vec::with_capacity(top.cols());
    for c in 0..top.cols() {
        let y = cycle_snf
            .solve(&top.column(c))
            .expect("shapes")
            .expect("boundaries are cycles");
        rel_rows.push(y);
    }
    let relations = if rel_rows.is_empty() {
        IntMatrix::zeros(0, k)
    } else {
        IntMatrix::from_columns(k, &rel_rows).transpose()
    };
    let labels = cycles.columns();
    let carrier = Carrier::new(labels, Presentation::new(k, relations).expect("columns"));
    TorGroup {
        left: a.clone(),
        right: b.clone(),
        boundary_top: top,
        boundary_bottom: bottom,
        cycles,
        carrier,
        layout,
        cycle_snf,
    }
}

impl TorGroup {
    pub fn group(&self) -> &FgAbGroup {
        self.carrier.group()
    }

    /// Homology class of a 1-cycle of the complex.
    pub fn class_of_cycle(&self, z: &[BigInt]) -> Result<GroupElement> {
        let image = self.boundary_bottom.mul_vec(z)?;
        if image.iter().any(|x| !x.is_zero()) {
            return Err(Error::InvalidInput("chain is not a cycle".into()));
        }
        let y = self
            .cycle_snf
            .solve(z)?
            .expect("cycle lattice is saturated");
        Ok(self.carrier.element_from_raw(&y))
    }

    /// A representing cycle of a class.
    pub fn cycle_of(&self, x: &GroupElement) -> Vec<BigInt> {
        self.cycles
            .mul_vec(&self.carrier.raw_of(x))
            .expect("shapes")
    }

    /// The cycle `(−ã⊗y, x⊗b̃)` with `∂x = n·ã`, `∂y = n·b̃`, whose class is `τₙ(a, b)`.
    pub fn tau_cycle(&self, n: u64, a: &GroupElement, b: &GroupElement) -> Result<Vec<BigInt>> {
        let l = &self.layout;
        let n = BigInt::from(n);
        if n.is_zero() {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        let lift = |g: &FgAbGroup, e: &GroupElement, what: &str| -> Result<Vec<BigInt>> {
            if e.coords().len() != g.ngens() {
                return Err(Error::DimensionMismatch(format!(
                    "{what} is not an element of {g}"
                )));
            }
            if !g.scale(&n, e).is_zero() {
                return Err(Error::InvalidInput(format!("{what} is not {n}-torsion")));
            }
            // ∂x = n·ẽ coordinatewise on torsion generators; free coordinates are 0.
            Ok(g.torsion_invariants()
                .iter()
                .zip(e.coords())
                .map(|(d, c)| c * &n / d)
                .collect())
        };
        let x = lift(&self.left, a, "first argument")?;
        let y = lift(&self.right, b, "second argument")?;
        let mut z = vec![BigInt::zero(); l.middle_len()];
        for i in 0..l.na {
            for j in 0..l.tb {
                z[l.first(i, j)] = -(&a.coords()[i] * &y[j]);
            }
        }
        for i in 0..l.ta {
            for j in 0..l.nb {
                z[l.second(i, j)] = &x[i] * &b.coords()[j];
            }
        }
        Ok(z)
    }

    /// `τₙ(a, b)` for `a ∈ ₙA`, `b ∈ ₙB`.
    pub fn tau(&self, n: u64, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        let z = self.tau_cycle(n, a, b)?;
        self.class_of_cycle(&z)
    }

    /// Endomorphism of Tor induced by an endomorphism of the middle chain group
    /// that preserves cycles and boundaries.
    pub fn induced_endomorphism(&self, middle: &IntMatrix) -> Result<GroupHom> {
        let g = self.group();
        let mut cols = Vec::with_capacity(g.ngens());
        for k in 0..g.ngens() {
            let z = self.cycle_of(&g.generator(k));
            let w = middle.mul_vec(&z)?;
            cols.push(self.class_of_cycle(&w)?.into_coords());
        }
        GroupHom::new(
            g.clone(),
            g.clone(),
            IntMatrix::from_columns(g.ngens(), &cols),
        )
    }

    fn require_square(&self) -> Result<()> {
        if self.left != self.right {
            return Err(Error::InvalidInput("involutions need Tor(A, A)".into()));
        }
        Ok(())
    }

    /// The Koszul factor swap on the middle term: `u⊗g ↦ g⊗u`, `f⊗v ↦ v⊗f`
    /// (degree-one factors, no sign). On the outer terms it is `x⊗y ↦ y⊗x`
    /// in degree 0 and `x⊗y ↦ −y⊗x` in degree 2.
    pub fn koszul_swap_middle(&self) -> Result<IntMatrix> {
        self.require_square()?;
        let l = &self.layout;
        let mut m = IntMatrix::zeros(l.middle_len(), l.middle_len());
        for i in 0..l.na {
            for j in 0..l.tb {
                m[(l.second(j, i), l.first(i, j))] = BigInt::one();
            }
        }
        for i in 0..l.ta {
            for j in 0..l.nb {
                m[(l.first(j, i), l.second(i, j))] = BigInt::one();
            }
        }
        Ok(m)
    }

    /// The chain maps `f₀(x⊗y) = x⊗y + y⊗x`,
    /// `f₁(x⊗y, y'⊗x') = (x⊗y + x'⊗y', y⊗x + y'⊗x')`, `f₂(x⊗y) = x⊗y − y⊗x`,
    /// written out on basis tensors. Returned as `(f₀, f₁, f₂)`.
    pub fn norm_chain_maps(&self) -> Result<(IntMatrix, IntMatrix, IntMatrix)> {
        self.require_square()?;
        let l = &self.layout;
        let n0 = l.na * l.nb;
        let mut f0 = IntMatrix::zeros(n0, n0);
        for i in 0..l.na {
            for j in 0..l.nb {
                f0[(l.bottom(i, j), l.bottom(i, j))] += 1;
                f0[(l.bottom(j, i), l.bottom(i, j))] += 1;
            }
        }
        let mut f1 = IntMatrix::zeros(l.middle_len(), l.middle_len());
        // (x⊗y, 0) with x = u_i ∈ F₀, y = g_j ∈ F₁  ↦  (x⊗y, y⊗x)
        for i in 0..l.na {
            for j in 0..l.tb {
                let src = l.first(i, j);
                f1[(l.first(i, j), src)] += 1;
                f1[(l.second(j, i), src)] += 1;
            }
        }
        // (0, y'⊗x') with y' = f_i ∈ F₁, x' = v_j ∈ F₀  ↦  (x'⊗y', y'⊗x')
        for i in 0..l.ta {
            for j in 0..l.nb {
                let src = l.second(i, j);
                f1[(l.first(j, i), src)] += 1;
                f1[(l.second(i, j), src)] += 1;
            }
        }
        let n2 = l.ta * l.tb;
        let mut f2 = IntMatrix::zeros(n2, n2);
        for i in 0..l.ta {
            for j in 0..l.tb {
                f2[(l.top(i, j), l.top(i, j))] += 1;
                f2[(l.top(j, i), l.top(i, j))] -= 1;
            }
        }
        Ok((f0, f1, f2))
    }
}

/// `σ₀` on `A⊗A` and `σ^ε` on `Tor(A, A)`.
#[derive(Clone, Debug)]
pub struct SigmaInvolutions {
    pub tensor_swap: GroupHom,
    pub sigma_eps: GroupHom,
}

/// `σ^ε` is the involution with `σ^ε(τₙ(a, b)) = τₙ(b, a)`. On the complex
/// it is the negative of the Koszul swap.
pub fn sigma_involutions(a: &FgAbGroup) -> SigmaInvolutions {
    let t = tensor(a, a);
    let tr = tor(a, a);
    sigma_involutions_with(&t, &tr).expect("square inputs")
}

pub(crate) fn sigma_involutions_with(
    t: &super::TensorProduct,
    tr: &TorGroup,
) -> Result<SigmaInvolutions> {
    let swap = tr.koszul_swap_middle()?;
    let neg = swap.scale(&BigInt::from(-1));
    Ok(SigmaInvolutions {
        tensor_swap: t.swap()?,
        sigma_eps: tr.induced_endomorphism(&neg)?,
    })
}

/// Endomorphism of `Tor(A, A)` induced by the chain maps `f₀, f₁, f₂`.
pub fn norm_chain_map(a: &FgAbGroup) -> GroupHom {
    norm_chain_map_of(&tor(a, a)).expect("square input")
}

pub(crate) fn norm_chain_map_of(tr: &TorGroup) -> Result<GroupHom> {
    let (_, f1, _) = tr.norm_chain_maps()?;
    tr.induced_endomorphism(&f1)
}

/// `a ⊗ b ↦ τ_e(a, b)` as a map `A⊗A → Tor(A, A)` for finite `A` of exponent `e`.
pub fn tau_stabilization_map(a: &FgAbGroup) -> Result<GroupHom> {
    if !a.is_finite() {
        return Err(Error::Unsupported(
            "stabilization map needs a finite group".into(),
        ));
    }
    let e: u64 = num_traits::ToPrimitive::to_u64(&a.torsion_exponent())
        .ok_or_else(|| Error::Unsupported("exponent too large".into()))?;
    let t = tensor(a, a);
    let tr = tor(a, a);
    let n = a.ngens();
    let mut cols = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            cols.push(tr.tau(e, &a.generator(i), &a.generator(j))?.into_coords());
        }
    }
    let raw = IntMatrix::from_columns(tr.group().ngens(), &cols);
    t.carrier.transport_to_group(tr.group(), &raw)
}

/// The map `lim_n (ₙA ⊗ ₙB) → Tor(A, B)` induced by the τₙ, for `n` running over
/// the divisors of the torsion exponent. The colimit is formed from the
/// relations `τₙ(a, b) = τₛ(ma, b)` (a ∈ ₙA, b ∈ ₛB) and
/// `τₙ(a', b') = τₛ(a', mb')` (a' ∈ ₛA, b' ∈ ₙB) for `n = sm`.
pub fn tor_colimit_comparison(a: &FgAbGroup, b: &FgAbGroup) -> Result<GroupHom> {
    use crate::abgroup::n_torsion;
    use num_integer::Integer;

    let e = a.torsion_exponent().lcm(&b.torsion_exponent());
    let e: u64 = num_traits::ToPrimitive::to_u64(&e)
        .ok_or_else(|| Error::Unsupported("exponent too large".into()))?;
    let divisors: Vec<u64> = (1..=e).filter(|d| e.is_multiple_of(*d)).collect();
    let tr = tor(a, b);

    struct Level {
        n: u64,
        a_incl: GroupHom,
        b_incl: GroupHom,
        tensor: super::TensorProduct,
        offset: usize,
    }
    let mut levels = Vec::new();
    let mut offset = 0;
    for &n in &divisors {
        let (_, a_incl) = n_torsion(a, n)?;
        let (_, b_incl) = n_torsion(b, n)?;
        let t = tensor(a_incl.dom(), b_incl.dom());
        let len = t.group().ngens();
        levels.push(Level {
            n,
            a_incl,
            b_incl,
            tensor: t,
            offset,
        });
        offset += len;
    }
    let total = offset;

    // Relations of the colimit, as vectors in ⊕ canonical coordinates of the levels.
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for lv in &levels {
        for (k, d) in lv.tensor.group().invariants().iter().enumerate() {
            let mut v = vec![BigInt::zero(); total];
            v[lv.offset + k] = d.clone();
            rows.push(v);
        }
    }
    let place = |lv: &Level, x: &GroupElement, sign: i64, into: &mut Vec<BigInt>| {
        for (k, c) in x.coords().iter().enumerate() {
            into[lv.offset + k] += c * sign;
        }
    };
    for big in &levels {
        for small in &levels {
            if big.n == small.n || big.n % small.n != 0 {
                continue;
            }
            let m = (big.n / small.n) as i64;
            // p_m : ₙA → ₛA (multiplication by m), i_m : ₛB → ₙB (inclusion)
            let p_a = big.a_incl.scale(m).lift_through(&small.a_incl)?;
            let i_b = small.b_incl.lift_through(&big.b_incl)?;
            for u in 0..big.a_incl.dom().ngens() {
                for v in 0..small.b_incl.dom().ngens() {
                    let (gu, gv) = (
                        big.a_incl.dom().generator(u),
                        small.b_incl.dom().generator(v),
                    );
                    let mut row = vec![BigInt::zero(); total];
                    place(small, &small.tensor.pure(&p_a.apply(&gu), &gv), 1, &mut row);
                    place(big, &big.tensor.pure(&gu, &i_b.apply(&gv)), -1, &mut row);
                    rows.push(row);
                }
            }
            let i_a = small.a_incl.lift_through(&big.a_incl)?;
            let p_b = big.b_incl.scale(m).lift_through(&small.b_incl)?;
            for u in 0..small.a_incl.dom().ngens() {
                for v in 0..big.b_incl.dom().ngens() {
                    let (gu, gv) = (
                        small.a_incl.dom().generator(u),
                        big.b_incl.dom().generator(v),
                    );
                    let mut row = vec![BigInt::zero(); total];
                    place(small, &small.tensor.pure(&gu, &p_b.apply(&gv)), 1, &mut row);
                    place(big, &big.tensor.pure(&i_a.apply(&gu), &gv), -1, &mut row);
                    rows.push(row);
                }
            }
        }
    }
    let rel = if rows.is_empty() {
        IntMatrix::zeros(0, total)
    } else {
        IntMatrix::from_columns(total, &rows).transpose()
    };
    let colim = Presentation::new(total, rel)?.canonicalize();

    // τ on each level, written on canonical generators of ₙA ⊗ ₙB.
    let mut tau_cols: Vec<Vec<BigInt>> = Vec::with_capacity(total);
    for lv in &levels {
        let (sa, sb) = (lv.a_incl.dom(), lv.b_incl.dom());
        let tg = lv.tensor.group();
        for k in 0..tg.ngens() {
            let raw = lv.tensor.carrier.raw_of(&tg.generator(k));
            let mut acc = tr.group().zero();
            for i in 0..sa.ngens() {
                for j in 0..sb.ngens() {
                    let c = &raw[lv.tensor.raw_index(i, j)];
                    if c.is_zero() {
                        continue;
                    }
                    let t = tr.tau(
                        lv.n,
                        &lv.a_incl.apply(&sa.generator(i)),
                        &lv.b_incl.apply(&sb.generator(j)),
                    )?;
                    acc = tr.group().add(&acc, &tr.group().scale(c, &t));
                }
            }
            tau_cols.push(acc.into_coords());
        }
    }
    let tau_raw = IntMatrix::from_columns(tr.group().ngens(), &tau_cols);
    GroupHom::new(
        colim.group.clone(),
        tr.group().clone(),
        tau_raw.mul(&colim.backward)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn g(orders: &[i64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders_i64(orders)
    }

    fn inv(x: &FgAbGroup) -> Vec<i64> {
        x.invariants().iter().map(|d| d.to_i64().unwrap()).collect()
    }

    #[test]
    fn complex_squares_to_zero() {
        for orders in [vec![2], vec![4, 0], vec![2, 6, 0], vec![0, 0]] {
            let a = g(&orders);
            let t = tor(&a, &g(&[3, 9]));
            assert!(t.boundary_bottom.mul(&t.boundary_top).unwrap().is_zero());
        }
    }

    #[test]
    fn tor_examples() {
        assert_eq!(inv(tor(&g(&[4]), &g(&[6])).group()), vec![2]);
        for b in [vec![0], vec![5], vec![2, 4, 0]] {
            assert!(tor(&g(&[0]), &g(&b)).group().is_trivial());
        }
        assert_eq!(inv(tor(&g(&[2]), &g(&[2])).group()), vec![2]);
    }

    /// Tor of finite cyclics is Z/gcd; for sums it is the sum over torsion pairs.
    #[test]
    fn tor_matches_gcd_formula() {
        let cases = [
            (vec![2, 4], vec![4, 0]),
            (vec![3, 0], vec![6, 6]),
            (vec![2, 2, 2], vec![2, 8]),
        ];
        for (x, y) in cases {
            let (a, b) = (g(&x), g(&y));
            let mut orders = Vec::new();
            for d in a.torsion_invariants() {
                for e in b.torsion_invariants() {
                    orders.push(num_integer::Integer::gcd(d, e));
                }
            }
            assert_eq!(tor(&a, &b).group(), &FgAbGroup::from_cyclic_orders(&orders));
        }
    }

    #[test]
    fn tau_examples() {
        let z2 = g(&[2]);
        let t = tor(&z2, &z2);
        let one = z2.generator(0);
        let r = t.tau(2, &one, &one).unwrap();
        assert!(!r.is_zero());
        assert!(t.group().scale(&BigInt::from(2), &r).is_zero());
        assert!(t.tau(2, &z2.zero(), &one).unwrap().is_zero());

        let z4 = g(&[4]);
        let t = tor(&z4, &z4);
        let z = z4.element_i64(&[2]).unwrap();
        for a in z4.enumerate(16).unwrap() {
            let b = z4.scale(&BigInt::from(2), &a);
            // τ₄(a, b) = τ₂(2a, b) for b ∈ ₂(Z/4)
            assert_eq!(
                t.tau(4, &a, &b).unwrap(),
                t.tau(2, &z4.scale(&BigInt::from(2), &a), &b).unwrap()
            );
        }
        assert!(matches!(
            t.tau(2, &z4.generator(0), &z),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn sigma_examples() {
        let z2 = g(&[2]);
        let s = sigma_involutions(&z2);
        assert_eq!(s.tensor_swap, GroupHom::identity(&z2));
        assert_eq!(s.sigma_eps, GroupHom::identity(&z2));
        for orders in [vec![4], vec![2, 4], vec![3, 0], vec![2, 2, 0]] {
            let a = g(&orders);
            let s = sigma_involutions(&a);
            let id = GroupHom::identity(s.sigma_eps.dom());
            assert_eq!(s.sigma_eps.compose(&s.sigma_eps).unwrap(), id);
            assert_eq!(
                s.tensor_swap.compose(&s.tensor_swap).unwrap(),
                GroupHom::identity(s.tensor_swap.dom())
            );
        }
    }

    #[test]
    fn norm_maps_are_chain_maps() {
        for orders in [vec![2], vec![4, 0], vec![2, 6], vec![0, 0]] {
            let a = g(&orders);
            let t = tor(&a, &a);
            let (f0, f1, f2) = t.norm_chain_maps().unwrap();
            let d1 = &t.boundary_bottom;
            let d2 = &t.boundary_top;
            assert_eq!(d1.mul(&f1).unwrap(), f0.mul(d1).unwrap());
            assert_eq!(d2.mul(&f2).unwrap(), f1.mul(d2).unwrap());
        }
    }

    #[test]
    fn norm_map_small_cases() {
        assert!(norm_chain_map(&g(&[2])).is_zero());
        assert!(norm_chain_map(&FgAbGroup::trivial()).is_zero());
    }

    /// The chain maps f₀, f₁, f₂ induce `id + (Koszul swap)`, which is `id − σ^ε`
    /// for the τ-compatible involution.
    #[test]
    fn norm_map_is_identity_minus_sigma_eps() {
        for orders in [vec![4], vec![2, 4], vec![3, 9], vec![2, 2, 8]] {
            let a = g(&orders);
            let s = sigma_involutions(&a);
            let id = GroupHom::identity(s.sigma_eps.dom());
            assert_eq!(norm_chain_map(&a), id.sub(&s.sigma_eps).unwrap());
        }
    }

    #[test]
    fn stabilization_on_homocyclic_groups() {
        for orders in [vec![2], vec![4], vec![3, 3], vec![2, 2, 2], vec![8, 8]] {
            assert!(tau_stabilization_map(&g(&orders)).unwrap().is_isomorphism());
        }
        assert!(tau_stabilization_map(&g(&[0])).is_err());
    }

    /// τ₄(e, e) = τ₂(2e, e) = 0 for the order-2 generator e of Z/2 ⊕ Z/4.
    #[test]
    fn single_level_tau_misses_lower_torsion() {
        let a = g(&[2, 4]);
        let m = tau_stabilization_map(&a).unwrap();
        assert!(!m.is_injective());
        let t = tor(&a, &a);
        let e = a.generator(0);
        assert!(t.tau(4, &e, &e).unwrap().is_zero());
        assert!(!t.tau(2, &e, &e).unwrap().is_zero());
    }

    #[test]
    fn colimit_comparison_is_an_isomorphism() {
        let cases = [
            (vec![2], vec![2]),
            (vec![2, 4], vec![2, 4]),
            (vec![4, 8], vec![2]),
            (vec![6, 0], vec![3, 9]),
            (vec![2, 2, 8], vec![4]),
        ];
        for (x, y) in cases {
            let (a, b) = (g(&x), g(&y));
            let m = tor_colimit_comparison(&a, &b).unwrap();
            assert!(m.is_isomorphism(), "{a} , {b}");
        }
    }
}
