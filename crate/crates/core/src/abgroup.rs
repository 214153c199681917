//! Finitely generated abelian groups in invariant-factor form, their elements,
//! homomorphisms, and the kernel / image / cokernel calculus.
//!
//! Every subgroup and quotient is computed on presentation lattices, never by
//! listing elements, so all of this works for groups with free summands.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intlin::{kernel_basis, smith_normal_form, IntMatrix, LatticeBasis, SmithDecomposition};

/// Default ceiling on the number of elements [`FgAbGroup::enumerate`] will list.
pub const DEFAULT_ENUM_CAP: u64 = 4096;

/// `Z/d₁ ⊕ … ⊕ Z/d_k ⊕ Z^r` with `d₁ | d₂ | …`, each `dᵢ ≥ 2`; free factors are `0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgAbGroup {
    invariants: Vec<BigInt>,
}

/// Reduced coordinates of an element with respect to the canonical generators
/// of some [`FgAbGroup`]. The owning group is not stored; arithmetic goes
/// through the group.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<BigInt>,
}

impl GroupElement {
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", c.join(", "))
    }
}

pub(crate) fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// gcd with the convention gcd(0, d) = d, gcd(0, 0) = 0.
pub fn gcd0(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

impl FgAbGroup {
    /// Accepts only lists already in canonical form.
    pub fn from_invariants(invariants: Vec<BigInt>) -> Result<Self> {
        let mut seen_zero = false;
        for (i, d) in invariants.iter().enumerate() {
            if d.is_zero() {
                seen_zero = true;
                continue;
            }
            if seen_zero {
                return Err(Error::InvalidInput("free factors must come last".into()));
            }
            if *d < big(2) {
                return Err(Error::InvalidInput(format!(
                    "invariant factor {d} is not >= 2"
                )));
            }
            if i > 0 && !d.is_multiple_of(&invariants[i - 1]) {
                return Err(Error::InvalidInput(format!(
                    "{} does not divide {d}",
                    invariants[i - 1]
                )));
            }
        }
        Ok(Self { invariants })
    }

    /// Canonical form of `⊕ Z/orders[i]` for arbitrary nonnegative orders
    /// (1 means trivial, 0 means infinite cyclic).
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        Presentation::diagonal(orders).canonicalize().group
    }

    pub fn from_cyclic_orders_i64(orders: &[i64]) -> Self {
        let o: Vec<BigInt> = orders.iter().map(|&x| big(x)).collect();
        Self::from_cyclic_orders(&o)
    }

    pub fn trivial() -> Self {
        Self {
            invariants: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_orders(&[BigInt::from(n)])
    }

    pub fn integers() -> Self {
        Self {
            invariants: vec![BigInt::zero()],
        }
    }

    pub fn free(rank: usize) -> Self {
        Self {
            invariants: vec![BigInt::zero(); rank],
        }
    }

    pub fn invariants(&self) -> &[BigInt] {
        &self.invariants
    }

    pub fn ngens(&self) -> usize {
        self.invariants.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.invariants.iter().all(|d| !d.is_zero())
    }

    pub fn free_rank(&self) -> usize {
        self.invariants.iter().filter(|d| d.is_zero()).count()
    }

    /// Torsion invariant factors (the nonzero entries).
    pub fn torsion_invariants(&self) -> &[BigInt] {
        let t = self.invariants.len() - self.free_rank();
        &self.invariants[..t]
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.invariants.iter().product())
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion_invariants().iter().product()
    }

    /// Exponent of the torsion subgroup (1 for torsion-free groups).
    pub fn torsion_exponent(&self) -> BigInt {
        self.torsion_invariants()
            .last()
            .cloned()
            .unwrap_or_else(BigInt::one)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![BigInt::zero(); self.ngens()],
        }
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        let mut c = vec![BigInt::zero(); self.ngens()];
        c[i] = BigInt::one();
        self.element(c).expect("length matches")
    }

    /// Reduces raw coordinates into an element.
    pub fn element(&self, mut coords: Vec<BigInt>) -> Result<GroupElement> {
        if coords.len() != self.ngens() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a group with {} generators",
                coords.len(),
                self.ngens()
            )));
        }
        self.reduce_in_place(&mut coords);
        Ok(GroupElement { coords })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<GroupElement> {
        self.element(coords.iter().map(|&x| big(x)).collect())
    }

    pub(crate) fn reduce_in_place(&self, coords: &mut [BigInt]) {
        for (c, d) in coords.iter_mut().zip(&self.invariants) {
            if !d.is_zero() {
                *c = c.mod_floor(d);
            }
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        self.element(coords).expect("same group")
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
        self.element(coords).expect("same group")
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.element(a.coords.iter().map(|x| -x).collect())
            .expect("same group")
    }

    pub fn scale(&self, k: &BigInt, a: &GroupElement) -> GroupElement {
        self.element(a.coords.iter().map(|x| x * k).collect())
            .expect("same group")
    }

    /// Order of an element, `None` if infinite.
    pub fn element_order(&self, a: &GroupElement) -> Option<BigInt> {
        let mut ord = BigInt::one();
        for (c, d) in a.coords.iter().zip(&self.invariants) {
            if c.is_zero() {
                continue;
            }
            if d.is_zero() {
                return None;
            }
            ord = ord.lcm(&(d / c.gcd(d)));
        }
        Some(ord)
    }

    /// The relation lattice `diag(invariants)` as a square matrix (zero columns
    /// for free factors).
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.ngens();
        IntMatrix::diagonal(n, n, &self.invariants)
    }

    /// All elements in lexicographic order of their coordinates (last coordinate fastest).
    pub fn enumerate(&self, cap: u64) -> Result<Vec<GroupElement>> {
        let order = self.order().ok_or(Error::InfiniteEnumeration)?;
        if order > BigInt::from(cap) {
            return Err(Error::SizeCap {
                order: order.to_string(),
                cap,
            });
        }
        let dims: Vec<u64> = self
            .invariants
            .iter()
            .map(|d| d.to_u64().unwrap())
            .collect();
        let total = order.to_u64().unwrap() as usize;
        let mut out = Vec::with_capacity(total);
        let mut cur = vec![0u64; dims.len()];
        for _ in 0..total {
            out.push(GroupElement {
                coords: cur.iter().map(|&x| BigInt::from(x)).collect(),
            });
            for k in (0..dims.len()).rev() {
                cur[k] += 1;
                if cur[k] < dims[k] {
                    break;
                }
                cur[k] = 0;
            }
        }
        Ok(out)
    }

    /// Position of an element in [`FgAbGroup::enumerate`] order.
    pub fn element_index(&self, a: &GroupElement) -> usize {
        let mut idx = 0usize;
        for (c, d) in a.coords.iter().zip(&self.invariants) {
            idx = idx * d.to_usize().expect("finite group") + c.to_usize().expect("reduced");
        }
        idx
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariants.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .invariants
            .iter()
            .map(|d| {
                if d.is_zero() {
                    "Z".to_string()
                } else {
                    format!("Z/{d}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup[{self}]")
    }
}

/// A homomorphism given on canonical generators: column `j` is the image of
/// domain generator `j` in reduced codomain coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupHom {
    dom: FgAbGroup,
    cod: FgAbGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    /// Checks well-definedness and reduces the columns.
    pub fn new(dom: FgAbGroup, cod: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != cod.ngens() || matrix.cols() != dom.ngens() {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{} but the map is {} -> {}",
                matrix.rows(),
                matrix.cols(),
                dom,
                cod
            )));
        }
        for (j, d) in dom.invariants().iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            for (i, e) in cod.invariants().iter().enumerate() {
                let v = &matrix[(i, j)] * d;
                let ok = if e.is_zero() {
                    v.is_zero()
                } else {
                    v.is_multiple_of(e)
                };
                if !ok {
                    return Err(Error::IllDefined(format!(
                        "generator {j} has order {d} but its image does not"
                    )));
                }
            }
        }
        let mut matrix = matrix;
        for j in 0..matrix.cols() {
            for (i, e) in cod.invariants().iter().enumerate() {
                if !e.is_zero() {
                    let v = matrix[(i, j)].mod_floor(e);
                    matrix[(i, j)] = v;
                }
            }
        }
        Ok(Self { dom, cod, matrix })
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        Self::new(g.clone(), g.clone(), IntMatrix::identity(g.ngens())).expect("identity")
    }

    pub fn zero(dom: &FgAbGroup, cod: &FgAbGroup) -> Self {
        Self {
            dom: dom.clone(),
            cod: cod.clone(),
            matrix: IntMatrix::zeros(cod.ngens(), dom.ngens()),
        }
    }

    /// Multiplication by `k` on `g`.
    pub fn multiplication(g: &FgAbGroup, k: i64) -> Self {
        Self::new(
            g.clone(),
            g.clone(),
            IntMatrix::identity(g.ngens()).scale(&big(k)),
        )
        .expect("scalar map")
    }

    pub fn dom(&self) -> &FgAbGroup {
        &self.dom
    }

    pub fn cod(&self) -> &FgAbGroup {
        &self.cod
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &GroupElement) -> GroupElement {
        let v = self
            .matrix
            .mul_vec(x.coords())
            .expect("element of the domain");
        self.cod.element(v).expect("length matches")
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.cod != self.dom {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.dom, self.cod, first.dom, first.cod
            )));
        }
        GroupHom::new(
            first.dom.clone(),
            self.cod.clone(),
            self.matrix.mul(&first.matrix)?,
        )
    }

    fn check_parallel(&self, other: &GroupHom) -> Result<()> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::DimensionMismatch(
                "homomorphisms are not parallel".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupHom) -> Result<GroupHom> {
        self.check_parallel(other)?;
        GroupHom::new(
            self.dom.clone(),
            self.cod.clone(),
            self.matrix.add(&other.matrix)?,
        )
    }

    pub fn sub(&self, other: &GroupHom) -> Result<GroupHom> {
        self.check_parallel(other)?;
        GroupHom::new(
            self.dom.clone(),
            self.cod.clone(),
            self.matrix.sub(&other.matrix)?,
        )
    }

    pub fn scale(&self, k: i64) -> GroupHom {
        GroupHom::new(
            self.dom.clone(),
            self.cod.clone(),
            self.matrix.scale(&big(k)),
        )
        .expect("scalar multiple")
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_injective(&self) -> bool {
        kernel(self).0.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        cokernel(self).0.is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Given an injection `inj: K → self.cod` whose image contains the image of
    /// `self`, returns the unique `g` with `inj ∘ g = self`.
    pub fn lift_through(&self, inj: &GroupHom) -> Result<GroupHom> {
        if inj.cod != self.cod {
            return Err(Error::DimensionMismatch("lift target differs".into()));
        }
        let membership = MembershipTest::new(inj);
        let mut cols = Vec::with_capacity(self.dom.ngens());
        for j in 0..self.dom.ngens() {
            let col = self.matrix.column(j);
            let y = membership.preimage(&col)?.ok_or_else(|| {
                Error::InvalidInput(format!("image of generator {j} is outside the subgroup"))
            })?;
            cols.push(y);
        }
        GroupHom::new(
            self.dom.clone(),
            inj.dom.clone(),
            IntMatrix::from_columns(inj.dom.ngens(), &cols),
        )
    }

    /// Given a surjection `surj: self.dom → Q` with `ker(surj) ⊆ ker(self)`,
    /// returns the unique `g: Q → self.cod` with `g ∘ surj = self`.
    pub fn descend_through(&self, surj: &GroupHom) -> Result<GroupHom> {
        if surj.dom != self.dom {
            return Err(Error::DimensionMismatch("descent source differs".into()));
        }
        let q = surj.cod.clone();
        let section = section_of(surj)?;
        let g = self.compose(&section)?;
        if g.compose(surj)? != *self {
            return Err(Error::InvalidInput(
                "map does not vanish on the kernel of the surjection".into(),
            ));
        }
        debug_assert_eq!(g.dom, q);
        Ok(g)
    }
}

/// A set-theoretic section of a surjection, given on generators (a hom from
/// the free group on the codomain's generators; well-defined only up to the
/// kernel, so the returned matrix is not checked as a homomorphism).
fn section_of(surj: &GroupHom) -> Result<GroupHom> {
    let q = &surj.cod;
    let stacked = surj.matrix.hstack(&q.relation_matrix())?;
    let snf = smith_normal_form(&stacked);
    let n = surj.dom.ngens();
    let mut cols = Vec::with_capacity(q.ngens());
    for k in 0..q.ngens() {
        let target = q.generator(k).into_coords();
        let sol = snf
            .solve(&target)?
            .ok_or_else(|| Error::InvalidInput("map is not surjective".into()))?;
        cols.push(sol[..n].to_vec());
    }
    Ok(GroupHom {
        dom: q.clone(),
        cod: surj.dom.clone(),
        matrix: IntMatrix::from_columns(n, &cols),
    })
}

/// Reusable membership / preimage test for the image of a homomorphism.
pub struct MembershipTest {
    target: FgAbGroup,
    sources: usize,
    snf: SmithDecomposition,
}

impl MembershipTest {
    pub fn new(f: &GroupHom) -> Self {
        let stacked = f
            .matrix
            .hstack(&f.cod.relation_matrix())
            .expect("same rows");
        Self {
            target: f.cod.clone(),
            sources: f.dom.ngens(),
            snf: smith_normal_form(&stacked),
        }
    }

    /// Coordinates `y` in the domain with `f(y) = x`, if any.
    pub fn preimage(&self, x: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if x.len() != self.target.ngens() {
            return Err(Error::DimensionMismatch(
                "element of the wrong group".into(),
            ));
        }
        Ok(self.snf.solve(x)?.map(|s| s[..self.sources].to_vec()))
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        matches!(self.preimage(x.coords()), Ok(Some(_)))
    }
}

/// `ℤ^generator_count / rowspace(relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generator_count: usize,
    /// One relation per row.
    pub relations: IntMatrix,
}

/// Result of [`Presentation::canonicalize`].
#[derive(Clone, Debug)]
pub struct Canonicalization {
    pub group: FgAbGroup,
    /// `group.ngens × generator_count`: presentation coordinates to canonical coordinates.
    pub forward: IntMatrix,
    /// `generator_count × group.ngens`: canonical generators back to presentation coordinates.
    pub backward: IntMatrix,
}

impl Canonicalization {
    pub fn to_canonical(&self, raw: &[BigInt]) -> GroupElement {
        let v = self.forward.mul_vec(raw).expect("presentation coordinates");
        self.group.element(v).expect("length matches")
    }

    pub fn to_raw(&self, x: &GroupElement) -> Vec<BigInt> {
        self.backward
            .mul_vec(x.coords())
            .expect("canonical coordinates")
    }
}

impl Presentation {
    pub fn new(generator_count: usize, relations: IntMatrix) -> Result<Self> {
        if relations.cols() != generator_count {
            return Err(Error::DimensionMismatch(format!(
                "relation matrix has {} columns for {generator_count} generators",
                relations.cols()
            )));
        }
        Ok(Self {
            generator_count,
            relations,
        })
    }

    /// `⊕ Z/orders[i]`.
    pub fn diagonal(orders: &[BigInt]) -> Self {
        let n = orders.len();
        Self {
            generator_count: n,
            relations: IntMatrix::diagonal(n, n, orders),
        }
    }

    pub fn canonicalize(&self) -> Canonicalization {
        let g = self.generator_count;
        let rel = if self.relations.rows() > g {
            let mut lb = LatticeBasis::new(g);
            for i in 0..self.relations.rows() {
                lb.insert(self.relations.row(i)).expect("row length");
            }
            lb.to_row_matrix()
        } else {
            self.relations.clone()
        };
        let snf = smith_normal_form(&rel);
        // rowspace(rel)·right = rowspace(diag d), so x ↦ rightᵀ x diagonalises.
        let fwd_all = snf.right.transpose();
        let bwd_all = snf.right_inv.transpose();
        let mut keep = Vec::new();
        let mut invariants = Vec::new();
        for i in 0..g {
            let d = snf.d.get(i).cloned().unwrap_or_else(BigInt::zero);
            if !d.is_one() {
                keep.push(i);
                invariants.push(d);
            }
        }
        let group = FgAbGroup { invariants };
        let mut forward = fwd_all.select_rows(&keep);
        for (r, d) in group.invariants.iter().enumerate() {
            if !d.is_zero() {
                for c in 0..g {
                    let v = forward[(r, c)].mod_floor(d);
                    forward[(r, c)] = v;
                }
            }
        }
        let backward = bwd_all.select_cols(&keep);
        Canonicalization {
            group,
            forward,
            backward,
        }
    }
}

/// Subgroup of `parent` generated by the given coordinate vectors, with its inclusion.
pub fn subgroup_generated(
    parent: &FgAbGroup,
    generators: &[Vec<BigInt>],
) -> Result<(FgAbGroup, GroupHom)> {
    let n = parent.ngens();
    let mut lb = LatticeBasis::new(n);
    for (i, d) in parent.invariants().iter().enumerate() {
        if !d.is_zero() {
            let mut v = vec![BigInt::zero(); n];
            v[i] = d.clone();
            lb.insert(&v)?;
        }
    }
    for g in generators {
        lb.insert(g)?;
    }
    // Columns of `basis` span a lattice containing the relation lattice.
    let basis = lb.to_column_matrix();
    let k = basis.cols();
    if parent.invariants().iter().all(|d| d.is_zero()) {
        let free = FgAbGroup::free(k);
        let incl = GroupHom::new(free.clone(), parent.clone(), basis)?;
        return Ok((free, incl));
    }
    let snf = smith_normal_form(&basis);
    let mut rel_rows = Vec::new();
    for (i, d) in parent.invariants().iter().enumerate() {
        if d.is_zero() {
            continue;
        }
        let mut v = vec![BigInt::zero(); n];
        v[i] = d.clone();
        let y = snf.solve(&v)?.expect("relation lattice lies in the span");
        rel_rows.push(y);
    }
    let relations = IntMatrix::from_columns(k, &rel_rows).transpose();
    let relations = if rel_rows.is_empty() {
        IntMatrix::zeros(0, k)
    } else {
        relations
    };
    let canon = Presentation::new(k, relations)?.canonicalize();
    let incl = GroupHom::new(
        canon.group.clone(),
        parent.clone(),
        basis.mul(&canon.backward)?,
    )?;
    Ok((canon.group, incl))
}

/// Kernel of `f` with its inclusion into `f.dom()`.
pub fn kernel(f: &GroupHom) -> (FgAbGroup, GroupHom) {
    let n = f.dom.ngens();
    let stacked = f
        .matrix
        .hstack(&f.cod.relation_matrix())
        .expect("same rows");
    let k = kernel_basis(&stacked);
    let gens: Vec<Vec<BigInt>> = (0..k.cols()).map(|j| k.column(j)[..n].to_vec()).collect();
    subgroup_generated(&f.dom, &gens).expect("coordinates of the domain")
}

/// Image of `f` with its inclusion into `f.cod()`.
pub fn image(f: &GroupHom) -> (FgAbGroup, GroupHom) {
    subgroup_generated(&f.cod, &f.matrix.columns()).expect("coordinates of the codomain")
}

/// Cokernel of `f` with the projection from `f.cod()`.
pub fn cokernel(f: &GroupHom) -> (FgAbGroup, GroupHom) {
    let m = f.cod.ngens();
    let rel = f
        .matrix
        .hstack(&f.cod.relation_matrix())
        .expect("same rows")
        .transpose();
    let canon = Presentation::new(m, rel)
        .expect("columns match")
        .canonicalize();
    let proj =
        GroupHom::new(f.cod.clone(), canon.group.clone(), canon.forward).expect("quotient map");
    (canon.group, proj)
}

/// `a ⊕ b` with its biproduct structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub group: FgAbGroup,
    pub injections: [GroupHom; 2],
    pub projections: [GroupHom; 2],
}

pub fn direct_sum(a: &FgAbGroup, b: &FgAbGroup) -> DirectSum {
    let (na, nb) = (a.ngens(), b.ngens());
    let mut orders = a.invariants().to_vec();
    orders.extend(b.invariants().iter().cloned());
    let canon = Presentation::diagonal(&orders).canonicalize();
    let g = canon.group.clone();
    let inj_a = canon.forward.select_cols(&(0..na).collect::<Vec<_>>());
    let inj_b = canon
        .forward
        .select_cols(&(na..na + nb).collect::<Vec<_>>());
    let proj_a = canon.backward.select_rows(&(0..na).collect::<Vec<_>>());
    let proj_b = canon
        .backward
        .select_rows(&(na..na + nb).collect::<Vec<_>>());
    DirectSum {
        injections: [
            GroupHom::new(a.clone(), g.clone(), inj_a).expect("injection"),
            GroupHom::new(b.clone(), g.clone(), inj_b).expect("injection"),
        ],
        projections: [
            GroupHom::new(g.clone(), a.clone(), proj_a).expect("projection"),
            GroupHom::new(g.clone(), b.clone(), proj_b).expect("projection"),
        ],
        group: g,
    }
}

/// `ₙA`, the n-torsion subgroup.
pub fn n_torsion(a: &FgAbGroup, n: u64) -> Result<(FgAbGroup, GroupHom)> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let n = BigInt::from(n);
    let gens: Vec<Vec<BigInt>> = a
        .invariants()
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(i, d)| {
            let mut v = vec![BigInt::zero(); a.ngens()];
            v[i] = d / n.gcd(d);
            v
        })
        .collect();
    subgroup_generated(a, &gens)
}

/// `ₚ∞A`, the p-power torsion subgroup.
pub fn p_primary_part(a: &FgAbGroup, p: u64) -> Result<(FgAbGroup, GroupHom)> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let p = BigInt::from(p);
    let gens: Vec<Vec<BigInt>> = a
        .invariants()
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(i, d)| {
            let mut pk = BigInt::one();
            let mut rest = d.clone();
            while rest.is_multiple_of(&p) {
                rest /= &p;
                pk *= &p;
            }
            let mut v = vec![BigInt::zero(); a.ngens()];
            v[i] = d / pk;
            v
        })
        .collect();
    subgroup_generated(a, &gens)
}

/// `A/2A` with its projection.
pub fn mod2(a: &FgAbGroup) -> (FgAbGroup, GroupHom) {
    cokernel(&GroupHom::multiplication(a, 2))
}

/// Number of elements as `u64`, if finite and small enough.
pub fn order_u64(g: &FgAbGroup) -> Option<u64> {
    g.order().and_then(|o| o.to_u64())
}
