//! Modules over Λ = End(T)^op given by structure constants: the restricted
//! Yoneda image of the category, projective presentations, the surjectivity
//! condition on presentation classes, and the tau-rigid / support
//! tau-tilting / tilting predicates.
//!
//! Λ-elements multiply opposite to composition (x·y = y∘x), so Hom(T, X)
//! with the precomposition action is an honest left module. Idempotents are
//! the identities of the tilting summands; the peak e_i·Hom(T,X) is
//! Hom(T_i, X), which is what the kernel conditions of pair predicates
//! evaluate.

use crate::exactlin::{algebra_radical, Matrix, Scalar, Subspace};
use crate::homcat::{BasicObject, ObjId};
use crate::tricat::TriangCategory;
use std::collections::BTreeMap;
use std::fmt;

/// A finite-dimensional associative unital algebra by structure constants,
/// with a distinguished complete set of primitive orthogonal idempotents.
#[derive(Clone)]
pub struct Algebra {
    pub dim: usize,
    pub labels: Vec<String>,
    /// mult[i][j] = coordinates of b_i · b_j
    pub mult: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
    pub idems: Vec<Idempotent>,
}

#[derive(Clone)]
pub struct Idempotent {
    pub coords: Vec<Scalar>,
    /// the tilting summand this idempotent is the identity of
    pub source: ObjId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgViolation {
    Associativity { i: usize, j: usize, k: usize },
    Unit { side: &'static str, basis: usize },
    IdempotentSquare { idx: usize },
    IdempotentOrthogonal { i: usize, j: usize },
    IdempotentSum,
}

impl fmt::Display for AlgViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgViolation::Associativity { i, j, k } => {
                write!(f, "associativity fails on basis triple ({i},{j},{k})")
            }
            AlgViolation::Unit { side, basis } => {
                write!(f, "unit fails as {side} identity on basis element {basis}")
            }
            AlgViolation::IdempotentSquare { idx } => {
                write!(f, "idempotent {idx} is not idempotent")
            }
            AlgViolation::IdempotentOrthogonal { i, j } => {
                write!(f, "idempotents {i} and {j} are not orthogonal")
            }
            AlgViolation::IdempotentSum => write!(f, "idempotents do not sum to the unit"),
        }
    }
}

impl Algebra {
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (o, c) in out.iter_mut().zip(self.mult[i][j].iter()) {
                    *o += &w * c;
                }
            }
        }
        out
    }

    /// Left multiplication matrix of an element.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            let mut e = vec![Scalar::zero(); self.dim];
            e[j] = Scalar::one();
            self.product(x, &e)[i].clone()
        })
    }

    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            let mut e = vec![Scalar::zero(); self.dim];
            e[j] = Scalar::one();
            self.product(&e, x)[i].clone()
        })
    }

    pub fn validate(&self) -> Vec<AlgViolation> {
        let mut out = Vec::new();
        let unit_basis: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| {
                let mut e = vec![Scalar::zero(); self.dim];
                e[i] = Scalar::one();
                e
            })
            .collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let ij_k = self.product(&self.mult[i][j], &unit_basis[k]);
                    let i_jk = self.product(&unit_basis[i], &self.mult[j][k]);
                    if ij_k != i_jk {
                        out.push(AlgViolation::Associativity { i, j, k });
                    }
                }
            }
        }
        for i in 0..self.dim {
            if self.product(&self.unit, &unit_basis[i]) != unit_basis[i] {
                out.push(AlgViolation::Unit { side: "left", basis: i });
            }
            if self.product(&unit_basis[i], &self.unit) != unit_basis[i] {
                out.push(AlgViolation::Unit { side: "right", basis: i });
            }
        }
        for (idx, e) in self.idems.iter().enumerate() {
            if self.product(&e.coords, &e.coords) != e.coords {
                out.push(AlgViolation::IdempotentSquare { idx });
            }
        }
        for i in 0..self.idems.len() {
            for j in 0..self.idems.len() {
                if i == j {
                    continue;
                }
                let p = self.product(&self.idems[i].coords, &self.idems[j].coords);
                if p.iter().any(|c| !c.is_zero()) {
                    out.push(AlgViolation::IdempotentOrthogonal { i, j });
                }
            }
        }
        let mut sum = vec![Scalar::zero(); self.dim];
        for e in &self.idems {
            for (s, c) in sum.iter_mut().zip(e.coords.iter()) {
                *s += c.clone();
            }
        }
        if sum != self.unit {
            out.push(AlgViolation::IdempotentSum);
        }
        out
    }

    /// Jacobson radical via the trace form, checked nilpotent.
    pub fn radical(&self) -> Subspace {
        let mats: Vec<Matrix> = (0..self.dim)
            .map(|i| {
                let mut e = vec![Scalar::zero(); self.dim];
                e[i] = Scalar::one();
                self.left_mult(&e)
            })
            .collect();
        let rad = algebra_radical(&mats);
        // nilpotency: iterated products of the radical basis die out
        let mut layer: Vec<Vec<Scalar>> = rad.basis().to_vec();
        for _ in 0..=self.dim {
            if layer.is_empty() {
                break;
            }
            let mut next: Vec<Vec<Scalar>> = Vec::new();
            for x in &layer {
                for r in rad.basis() {
                    let p = self.product(x, r);
                    if p.iter().any(|c| !c.is_zero()) {
                        next.push(p);
                    }
                }
            }
            let span = Subspace::from_spanning(self.dim, next);
            layer = span.basis().to_vec();
        }
        assert!(layer.is_empty(), "trace-form radical is not nilpotent");
        rad
    }
}

/// A finite-dimensional left Λ-module: one action matrix per basis element.
#[derive(Clone)]
pub struct Module {
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl Module {
    pub fn zero(alg: &Algebra) -> Module {
        Module {
            dim: 0,
            action: (0..alg.dim).map(|_| Matrix::zero(0, 0)).collect(),
        }
    }

    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zero(self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[i].scale(c));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Action respects products and the unit.
    pub fn validate(&self, alg: &Algebra) -> bool {
        if self.action.len() != alg.dim {
            return false;
        }
        if self.act(&alg.unit) != Matrix::identity(self.dim) {
            return false;
        }
        for i in 0..alg.dim {
            for j in 0..alg.dim {
                let lhs = self.act(&alg.mult[i][j]);
                let rhs = self.action[i].mul(&self.action[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Direct sum.
    pub fn sum(&self, other: &Module) -> Module {
        let dim = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(other.action.iter())
            .map(|(a, b)| {
                Matrix::from_fn(dim, dim, |i, j| {
                    if i < self.dim && j < self.dim {
                        a.get(i, j).clone()
                    } else if i >= self.dim && j >= self.dim {
                        b.get(i - self.dim, j - self.dim).clone()
                    } else {
                        Scalar::zero()
                    }
                })
            })
            .collect();
        Module { dim, action }
    }

    /// The submodule spanned by an action-stable subspace, with its basis as
    /// new coordinates. Panics if the subspace is not stable.
    pub fn submodule(&self, sub: &Subspace) -> (Module, Matrix) {
        let d = sub.dim();
        let embed = Matrix::from_fn(self.dim, d, |i, j| sub.basis()[j][i].clone());
        let action = self
            .action
            .iter()
            .map(|a| {
                Matrix::from_fn(d, d, |i, j| {
                    let img = a.apply(&sub.basis()[j]);
                    let coords = sub
                        .coordinates(&img)
                        .expect("subspace must be action-stable");
                    coords[i].clone()
                })
            })
            .collect();
        (Module { dim: d, action }, embed)
    }

    /// The quotient by an action-stable subspace, with the projection map.
    pub fn quotient(&self, sub: &Subspace) -> (Module, Matrix) {
        let d = self.dim - sub.dim();
        // pick unit vectors completing the subspace
        let mut chosen = Vec::new();
        let mut span = sub.clone();
        for j in 0..self.dim {
            if chosen.len() == d {
                break;
            }
            let mut e = vec![Scalar::zero(); self.dim];
            e[j] = Scalar::one();
            if !span.contains(&e) {
                span = span.sum(&Subspace::from_spanning(self.dim, vec![e]));
                chosen.push(j);
            }
        }
        assert_eq!(chosen.len(), d, "completion failed");
        let mut cols: Vec<Vec<Scalar>> = sub.basis().to_vec();
        for &j in &chosen {
            let mut e = vec![Scalar::zero(); self.dim];
            e[j] = Scalar::one();
            cols.push(e);
        }
        let b = Matrix::from_rows(cols).transpose();
        let k = sub.dim();
        let mut proj = Matrix::zero(d, self.dim);
        for col in 0..self.dim {
            let mut e = vec![Scalar::zero(); self.dim];
            e[col] = Scalar::one();
            let x = b.solve(&e).expect("basis completion spans");
            for r in 0..d {
                proj.set(r, col, x[k + r].clone());
            }
        }
        let action = self
            .action
            .iter()
            .map(|a| {
                // induced action: proj ∘ a ∘ section
                let section = Matrix::from_fn(self.dim, d, |i, j| {
                    if i == chosen[j] {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                });
                proj.mul(&a.mul(&section))
            })
            .collect();
        (Module { dim: d, action }, proj)
    }
}

/// The space of module homomorphisms M → N as a subspace of flattened
/// (N.dim × M.dim) matrices.
pub fn hom_modules(alg: &Algebra, m: &Module, n: &Module) -> Subspace {
    let unknowns = n.dim * m.dim;
    if unknowns == 0 {
        return Subspace::zero(unknowns);
    }
    let mut eqs: Vec<Vec<Scalar>> = Vec::new();
    for b in 0..alg.dim {
        let am = &m.action[b];
        let an = &n.action[b];
        for i in 0..n.dim {
            for j in 0..m.dim {
                // (Φ·am - an·Φ)[i][j] = 0
                let mut eq = vec![Scalar::zero(); unknowns];
                for k in 0..m.dim {
                    eq[i * m.dim + k] += am.get(k, j).clone();
                }
                for k in 0..n.dim {
                    eq[k * m.dim + j] -= an.get(i, k).clone();
                }
                if !eq.iter().all(Scalar::is_zero) {
                    eqs.push(eq);
                }
            }
        }
    }
    if eqs.is_empty() {
        return Subspace::full(unknowns);
    }
    Matrix::from_rows(eqs).kernel_basis()
}

pub fn hom_dim_modules(alg: &Algebra, m: &Module, n: &Module) -> usize {
    if m.dim == 0 || n.dim == 0 {
        return 0;
    }
    hom_modules(alg, m, n).dim()
}

fn unflatten(rows: usize, cols: usize, flat: &[Scalar]) -> Matrix {
    Matrix::from_fn(rows, cols, |i, j| flat[i * cols + j].clone())
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        out.extend(m.row(i).iter().cloned());
    }
    out
}

/// Λ = End(T)^op with the bookkeeping needed to move between the category
/// and the module side.
pub struct EndAlgebra {
    pub alg: Algebra,
    pub tilting: BasicObject,
    /// category basis triple of each algebra basis element
    pub basis_triples: Vec<(ObjId, ObjId, usize)>,
    /// idempotent index of each tilting summand
    pub idem_of: BTreeMap<ObjId, usize>,
}

/// Builds End(T)^op from the Hom-table. Basis elements are the basis
/// morphisms between tilting summands; the product is opposite composition.
pub fn end_algebra(t: &TriangCategory, tilting: &BasicObject) -> EndAlgebra {
    assert!(!tilting.is_empty(), "tilting object must be nonempty");
    let c = &t.base;
    let mut basis_triples = Vec::new();
    for a in tilting.iter() {
        for b in tilting.iter() {
            for k in 0..c.hom_dim_pair(a, b) {
                basis_triples.push((a, b, k));
            }
        }
    }
    let dim = basis_triples.len();
    let index_of = |src: ObjId, tgt: ObjId, k: usize| -> usize {
        basis_triples
            .iter()
            .position(|&(a, b, kk)| a == src && b == tgt && kk == k)
            .expect("basis triple present")
    };
    let mut mult = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for (i, &(isrc, itgt, ik)) in basis_triples.iter().enumerate() {
        for (j, &(jsrc, jtgt, jk)) in basis_triples.iter().enumerate() {
            // x·y = y ∘ x in the category
            if itgt != jsrc {
                continue;
            }
            let comp = c.compose_basis((jsrc, jtgt, jk), (isrc, itgt, ik));
            for (kk, co) in comp.iter().enumerate() {
                if !co.is_zero() {
                    mult[i][j][index_of(isrc, jtgt, kk)] = co.clone();
                }
            }
        }
    }
    let mut unit = vec![Scalar::zero(); dim];
    let mut idems = Vec::new();
    let mut idem_of = BTreeMap::new();
    for a in tilting.iter() {
        let mut coords = vec![Scalar::zero(); dim];
        for (k, co) in c.ident(a).iter().enumerate() {
            coords[index_of(a, a, k)] = co.clone();
        }
        for (u, co) in unit.iter_mut().zip(coords.iter()) {
            *u += co.clone();
        }
        idem_of.insert(a, idems.len());
        idems.push(Idempotent { coords, source: a });
    }
    let labels = basis_triples
        .iter()
        .map(|&(a, b, k)| format!("{}→{}#{}", c.name(a), c.name(b), k))
        .collect();
    let alg = Algebra {
        dim,
        labels,
        mult,
        unit,
        idems,
    };
    debug_assert!(alg.validate().is_empty());
    EndAlgebra {
        alg,
        tilting: tilting.clone(),
        basis_triples,
        idem_of,
    }
}

/// The restricted Yoneda module Hom(T, X): carrier = ⊕ Hom(T_a, x) over
/// tilting summands a and members x of X, with the precomposition action.
pub fn yoneda_module(t: &TriangCategory, ea: &EndAlgebra, x: &BasicObject) -> Module {
    let c = &t.base;
    // carrier blocks (a, x, offset, dim)
    let mut layout = Vec::new();
    let mut dim = 0;
    for a in ea.tilting.iter() {
        for xx in x.iter() {
            let d = c.hom_dim_pair(a, xx);
            layout.push((a, xx, dim, d));
            dim += d;
        }
    }
    let mut action = Vec::new();
    for &(fsrc, ftgt, fk) in &ea.basis_triples {
        // act(f): m ↦ m∘f moves the Hom(ftgt, x) block into Hom(fsrc, x)
        let mut mat = Matrix::zero(dim, dim);
        for &(a, xx, off, d) in &layout {
            if a != ftgt {
                continue;
            }
            let (_, _, off2, _) = *layout
                .iter()
                .find(|&&(b, yy, _, _)| b == fsrc && yy == xx)
                .expect("block present");
            for k in 0..d {
                let mut m = vec![Scalar::zero(); d];
                m[k] = Scalar::one();
                let mut f = vec![Scalar::zero(); c.hom_dim_pair(fsrc, ftgt)];
                f[fk] = Scalar::one();
                let comp = c.compose_vec(fsrc, ftgt, xx, &m, &f);
                for (r, co) in comp.iter().enumerate() {
                    mat.set(off2 + r, off + k, co.clone());
                }
            }
        }
        action.push(mat);
    }
    let m = Module { dim, action };
    debug_assert!(m.validate(&ea.alg));
    m
}

/// The regular representation.
pub fn regular_module(alg: &Algebra) -> Module {
    let action = (0..alg.dim)
        .map(|i| {
            let mut e = vec![Scalar::zero(); alg.dim];
            e[i] = Scalar::one();
            alg.left_mult(&e)
        })
        .collect();
    Module {
        dim: alg.dim,
        action,
    }
}

/// The indecomposable projective Λe_i as a submodule of the regular module,
/// together with a basis of it inside Λ (columns).
pub fn projective_module(alg: &Algebra, idem_idx: usize) -> (Module, Matrix) {
    let reg = regular_module(alg);
    let e = &alg.idems[idem_idx].coords;
    let rm = alg.right_mult(e);
    let span = Subspace::from_spanning(alg.dim, (0..alg.dim).map(|j| rm.col(j)).collect());
    reg.submodule(&span)
}

/// A projective presentation P1 → P0 → M → 0 with the cover data kept
/// around: the syzygy module ΩM = ker(P0 → M) and its embedding.
pub struct ProjPresentation {
    pub p0_slots: Vec<usize>,
    pub p1_slots: Vec<usize>,
    pub p0: Module,
    pub p1: Module,
    /// P1 → P0
    pub map: Matrix,
    /// P0 → M
    pub cover: Matrix,
    pub omega: Module,
    /// ΩM → P0
    pub omega_embed: Matrix,
}

/// Projective cover: top multiplicities per idempotent peak, the cover
/// module, and the covering map.
fn projective_cover(alg: &Algebra, rad: &Subspace, m: &Module) -> (Vec<usize>, Module, Matrix) {
    if m.dim == 0 {
        return (Vec::new(), Module::zero(alg), Matrix::zero(0, 0));
    }
    // rad·M
    let mut rad_m_vecs = Vec::new();
    for r in rad.basis() {
        let a = m.act(r);
        for j in 0..m.dim {
            let col = a.col(j);
            if col.iter().any(|c| !c.is_zero()) {
                rad_m_vecs.push(col);
            }
        }
    }
    let rad_m = Subspace::from_spanning(m.dim, rad_m_vecs);
    // peak-by-peak lift of a basis of top(M) = M/rad·M
    let mut slots = Vec::new();
    let mut generators: Vec<Vec<Scalar>> = Vec::new();
    for (idx, e) in alg.idems.iter().enumerate() {
        let pe = m.act(&e.coords);
        let mut span = rad_m.clone();
        for j in 0..m.dim {
            let v = pe.col(j);
            if v.iter().all(Scalar::is_zero) {
                continue;
            }
            if !span.contains(&v) {
                span = span.sum(&Subspace::from_spanning(m.dim, vec![v.clone()]));
                slots.push(idx);
                generators.push(v);
            }
        }
    }
    // assemble P0 = ⊕ Λe_{slot} and the cover map x ⊗ v ↦ x·v
    let mut p0 = Module::zero(alg);
    let mut cover_cols: Vec<Vec<Scalar>> = Vec::new();
    for (slot, v) in slots.iter().zip(generators.iter()) {
        let (proj, embed) = projective_module(alg, *slot);
        for j in 0..proj.dim {
            let x = embed.col(j);
            let col = m.act(&x).apply(v);
            cover_cols.push(col);
        }
        p0 = p0.sum(&proj);
    }
    let cover = if p0.dim == 0 {
        Matrix::zero(m.dim, 0)
    } else {
        Matrix::from_fn(m.dim, p0.dim, |i, j| cover_cols[j][i].clone())
    };
    assert_eq!(cover.rank(), m.dim, "projective cover must be surjective");
    (slots, p0, cover)
}

/// Minimal projective presentation via two projective covers.
pub fn min_proj_presentation(alg: &Algebra, rad: &Subspace, m: &Module) -> ProjPresentation {
    let (p0_slots, p0, cover) = projective_cover(alg, rad, m);
    let omega_space = if p0.dim == 0 {
        Subspace::zero(0)
    } else {
        cover.kernel_basis()
    };
    let (omega, omega_embed) = p0.submodule(&omega_space);
    let (p1_slots, p1, cover1) = projective_cover(alg, rad, &omega);
    let map = if p1.dim == 0 {
        Matrix::zero(p0.dim, 0)
    } else {
        omega_embed.mul(&cover1)
    };
    // exactness and minimality: image = kernel by construction; entries of the
    // induced map live in the radical because covers kill nothing of the top
    let pres = ProjPresentation {
        p0_slots,
        p1_slots,
        p0,
        p1,
        map,
        cover,
        omega,
        omega_embed,
    };
    debug_assert!(pres.validate(alg));
    pres
}

impl ProjPresentation {
    pub fn validate(&self, alg: &Algebra) -> bool {
        let _ = alg;
        // exact at P0: im(map) = ker(cover)
        if self.p0.dim > 0 {
            let ker = self.cover.kernel_basis();
            let im = Subspace::from_spanning(
                self.p0.dim,
                (0..self.map.cols()).map(|j| self.map.col(j)).collect(),
            );
            if im != ker {
                return false;
            }
        }
        true
    }

    /// pd M ≤ 1 iff the presentation map is injective.
    pub fn pd_le_1(&self) -> bool {
        if self.p1.dim == 0 {
            return true;
        }
        self.map.rank() == self.p1.dim
    }
}

/// Surjectivity of Hom(P0, N) → Hom(P1, N) induced by the presentation map
/// of `pres`, the pairwise ingredient of the presentation-class condition.
pub fn presentation_surjective_onto(alg: &Algebra, pres: &ProjPresentation, n: &Module) -> bool {
    if pres.p1.dim == 0 || n.dim == 0 {
        return true;
    }
    let target = hom_modules(alg, &pres.p1, n);
    if target.is_zero() {
        return true;
    }
    let source = hom_modules(alg, &pres.p0, n);
    let mut images = Vec::new();
    for flat in source.basis() {
        let phi = unflatten(n.dim, pres.p0.dim, flat);
        images.push(flatten(&phi.mul(&pres.map)));
    }
    let image_span = Subspace::from_spanning(n.dim * pres.p1.dim, images);
    image_span.dim() == target.dim()
}

/// Property of a class of presentations over the listed modules: every
/// induced Hom map is surjective.
pub fn has_property_s(alg: &Algebra, pres: &[ProjPresentation], modules: &[Module]) -> bool {
    pres.iter()
        .all(|p| modules.iter().all(|n| presentation_surjective_onto(alg, p, n)))
}

/// A pair (list of modules, kernel part inside the tilting summands).
#[derive(Clone)]
pub struct TauPair {
    pub modules: Vec<Module>,
    pub kernel_part: BasicObject,
}

/// tau-rigidity of the pair: the minimal presentation class has the
/// surjectivity property and every kernel-part summand kills every module.
pub fn is_tau_rigid_pair(ea: &EndAlgebra, pair: &TauPair) -> bool {
    let rad = ea.alg.radical();
    let pres: Vec<ProjPresentation> = pair
        .modules
        .iter()
        .map(|m| min_proj_presentation(&ea.alg, &rad, m))
        .collect();
    if !has_property_s(&ea.alg, &pres, &pair.modules) {
        return false;
    }
    pair.kernel_part.iter().all(|e| {
        let idx = ea.idem_of[&e];
        pair.modules
            .iter()
            .all(|m| m.act(&ea.alg.idems[idx].coords).is_zero())
    })
}

/// dim-Hom fingerprint against a fixed probe list, in both variances,
/// plus the dimension. Determines modules up to isomorphism when probed
/// against the complete list of indecomposables.
pub fn fingerprint(alg: &Algebra, m: &Module, probes: &[Module]) -> Vec<usize> {
    let mut out = vec![m.dim];
    for p in probes {
        out.push(hom_dim_modules(alg, p, m));
        out.push(hom_dim_modules(alg, m, p));
    }
    out
}

/// Multiplicity vector of N over the complete list of indecomposables, by
/// solving the dim-Hom linear system; falls back to a bounded search when
/// the system is degenerate. None when no nonnegative integral solution
/// reproduces the fingerprints.
pub fn decompose(alg: &Algebra, n: &Module, indec_list: &[Module]) -> Option<Vec<usize>> {
    let k = indec_list.len();
    // sanity: probes pairwise non-isomorphic
    {
        let fps: Vec<Vec<usize>> = indec_list
            .iter()
            .map(|m| fingerprint(alg, m, indec_list))
            .collect();
        for i in 0..k {
            for j in (i + 1)..k {
                assert_ne!(
                    fps[i], fps[j],
                    "indecomposable list contains an isomorphic pair ({i},{j})"
                );
            }
        }
    }
    if n.dim == 0 {
        return Some(vec![0; k]);
    }
    // rows: hom from each probe, hom to each probe, total dimension
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for p in indec_list {
        rows.push(
            indec_list
                .iter()
                .map(|l| Scalar::from_int(hom_dim_modules(alg, p, l) as i64))
                .collect::<Vec<_>>(),
        );
        rhs.push(Scalar::from_int(hom_dim_modules(alg, p, n) as i64));
        rows.push(
            indec_list
                .iter()
                .map(|l| Scalar::from_int(hom_dim_modules(alg, l, p) as i64))
                .collect::<Vec<_>>(),
        );
        rhs.push(Scalar::from_int(hom_dim_modules(alg, n, p) as i64));
    }
    rows.push(
        indec_list
            .iter()
            .map(|l| Scalar::from_int(l.dim as i64))
            .collect(),
    );
    rhs.push(Scalar::from_int(n.dim as i64));
    let mat = Matrix::from_rows(rows);
    let x = mat.solve(&rhs)?;
    // unique solution when the probe matrix has full column rank; verify and
    // convert
    if mat.rank() == k {
        let mut out = Vec::with_capacity(k);
        for c in &x {
            let s = c.to_string();
            let v: i64 = s.parse().ok()?;
            if v < 0 {
                return None;
            }
            out.push(v as usize);
        }
        return Some(out);
    }
    // degenerate probe matrix: bounded search over candidate multiplicities
    let bounds: Vec<usize> = indec_list
        .iter()
        .map(|l| n.dim.checked_div(l.dim).unwrap_or(0))
        .collect();
    let target = fingerprint(alg, n, indec_list);
    fn search(
        alg: &Algebra,
        indec_list: &[Module],
        bounds: &[usize],
        target: &[usize],
        acc: &mut Vec<usize>,
        budget: usize,
    ) -> Option<Vec<usize>> {
        let idx = acc.len();
        if idx == indec_list.len() {
            if budget != 0 {
                return None;
            }
            let mut m = Module {
                dim: 0,
                action: (0..alg.dim).map(|_| Matrix::zero(0, 0)).collect(),
            };
            for (c, l) in acc.iter().zip(indec_list.iter()) {
                for _ in 0..*c {
                    m = m.sum(l);
                }
            }
            if fingerprint(alg, &m, indec_list) == target {
                return Some(acc.clone());
            }
            return None;
        }
        for c in 0..=bounds[idx].min(budget / indec_list[idx].dim.max(1)) {
            acc.push(c);
            if let Some(sol) = search(alg, indec_list, bounds, target, acc, budget - c * indec_list[idx].dim) {
                return Some(sol);
            }
            acc.pop();
        }
        None
    }
    search(alg, indec_list, &bounds, &target, &mut Vec::new(), n.dim)
}

/// Canonical left approximation of the projective Λe_i into add of the
/// listed modules: the sum of all Hom-basis targets. Returns the map and
/// the codomain.
pub fn canonical_left_approx(
    alg: &Algebra,
    idem_idx: usize,
    modules: &[Module],
) -> (Module, Matrix) {
    let (p, _) = projective_module(alg, idem_idx);
    let mut cod = Module::zero(alg);
    let mut blocks: Vec<(usize, Matrix)> = Vec::new(); // (offset in cod, map block)
    let mut off = 0;
    for m in modules {
        let homs = hom_modules(alg, &p, m);
        for flat in homs.basis() {
            let phi = unflatten(m.dim, p.dim, flat);
            blocks.push((off, phi));
            cod = cod.sum(m);
            off += m.dim;
        }
    }
    let mut map = Matrix::zero(cod.dim, p.dim);
    for (o, phi) in &blocks {
        for i in 0..phi.rows() {
            for j in 0..phi.cols() {
                map.set(o + i, j, phi.get(i, j).clone());
            }
        }
    }
    (cod, map)
}

/// Support tau-tilting: the kernel part is exactly Ker of the module class,
/// and for every idempotent the canonical left approximation has cokernel in
/// add of the class. `indec_list` must be the complete list of
/// indecomposable modules (up to isomorphism).
pub fn is_support_tau_tilting(ea: &EndAlgebra, pair: &TauPair, indec_list: &[Module]) -> bool {
    assert!(
        is_tau_rigid_pair(ea, pair),
        "support tau-tilting requires a tau-rigid pair"
    );
    // (a) kernel part = { summands whose idempotent kills every module }
    let killed = BasicObject::from_ids(ea.tilting.iter().filter(|&e| {
        let idx = ea.idem_of[&e];
        pair.modules
            .iter()
            .all(|m| m.act(&ea.alg.idems[idx].coords).is_zero())
    }));
    if killed != pair.kernel_part {
        return false;
    }
    // (b) cokernel of the canonical left approximation lies in add(modules)
    let member_fps: Vec<Vec<usize>> = pair
        .modules
        .iter()
        .map(|m| fingerprint(&ea.alg, m, indec_list))
        .collect();
    for idx in 0..ea.alg.idems.len() {
        let (cod, map) = canonical_left_approx(&ea.alg, idx, &pair.modules);
        let image = Subspace::from_spanning(
            cod.dim,
            (0..map.cols()).map(|j| map.col(j)).collect(),
        );
        let (coker, _) = cod.quotient(&image);
        let Some(mults) = decompose(&ea.alg, &coker, indec_list) else {
            return false;
        };
        for (i, &c) in mults.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let fp = fingerprint(&ea.alg, &indec_list[i], indec_list);
            if !member_fps.contains(&fp) {
                return false;
            }
        }
    }
    true
}

/// Ext¹(M, N) dimension: cokernel of Hom(P0, N) → Hom(ΩM, N).
pub fn ext1_modules(alg: &Algebra, pres: &ProjPresentation, n: &Module) -> usize {
    if pres.omega.dim == 0 || n.dim == 0 {
        return 0;
    }
    let target = hom_modules(alg, &pres.omega, n);
    if target.is_zero() {
        return 0;
    }
    let source = hom_modules(alg, &pres.p0, n);
    let mut images = Vec::new();
    for flat in source.basis() {
        let phi = unflatten(n.dim, pres.p0.dim, flat);
        images.push(flatten(&phi.mul(&pres.omega_embed)));
    }
    let image_span = Subspace::from_spanning(n.dim * pres.omega.dim, images);
    target.dim() - image_span.dim()
}

/// (M, 0) is a support tau-tilting pair.
pub fn is_tau_tilting(ea: &EndAlgebra, modules: &[Module], indec_list: &[Module]) -> bool {
    let pair = TauPair {
        modules: modules.to_vec(),
        kernel_part: BasicObject::empty(),
    };
    if !is_tau_rigid_pair(ea, &pair) {
        return false;
    }
    is_support_tau_tilting(ea, &pair, indec_list)
}

/// Weak tilting: self-orthogonal (no first extensions), projective
/// dimension at most one, and every projective embeds with cokernel in the
/// class.
pub fn is_weak_tilting(ea: &EndAlgebra, modules: &[Module], indec_list: &[Module]) -> bool {
    let alg = &ea.alg;
    let rad = alg.radical();
    let pres: Vec<ProjPresentation> = modules
        .iter()
        .map(|m| min_proj_presentation(alg, &rad, m))
        .collect();
    // (T2) first: pd ≤ 1
    if !pres.iter().all(|p| p.pd_le_1()) {
        return false;
    }
    // (T1) Ext¹(M, M') = 0 pairwise
    for p in &pres {
        for n in modules {
            if ext1_modules(alg, p, n) != 0 {
                return false;
            }
        }
    }
    // (T3) canonical left approximation of each projective is injective with
    // cokernel in add(modules)
    let member_fps: Vec<Vec<usize>> = modules
        .iter()
        .map(|m| fingerprint(alg, m, indec_list))
        .collect();
    for idx in 0..alg.idems.len() {
        let (p, _) = projective_module(alg, idx);
        let (cod, map) = canonical_left_approx(alg, idx, modules);
        if map.rank() != p.dim {
            return false;
        }
        let image = Subspace::from_spanning(
            cod.dim,
            (0..map.cols()).map(|j| map.col(j)).collect(),
        );
        let (coker, _) = cod.quotient(&image);
        let Some(mults) = decompose(alg, &coker, indec_list) else {
            return false;
        };
        for (i, &c) in mults.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let fp = fingerprint(alg, &indec_list[i], indec_list);
            if !member_fps.contains(&fp) {
                return false;
            }
        }
    }
    true
}
