//! Finite additive categories presented by Hom-tables.
//!
//! A `CategoryTable` lists the indecomposable objects, the dimensions of the
//! Hom-spaces between them, and the structure constants of composition on the
//! chosen bases. Subcategories are always additive closures of finite sets of
//! indecomposables, encoded by `BasicObject`. On top of the raw table this
//! module provides the ideal calculus (morphisms factoring through an object)
//! and canonical left/right approximations.

use crate::exactlin::{algebra_radical, Matrix, Scalar, Subspace};
use std::collections::BTreeSet;
use std::fmt;

pub type ObjId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectInfo {
    pub name: String,
}

/// Additive category on finitely many indecomposables, with exact structure
/// constants for composition of basis morphisms.
///
/// Basis morphisms are enumerated globally: pairs (src, tgt) in lexicographic
/// order, then the index inside Hom(src, tgt). Composition is stored sparsely
/// on basis pairs and extended bilinearly.
#[derive(Clone)]
pub struct CategoryTable {
    objects: Vec<ObjectInfo>,
    hom_dims: Vec<Vec<usize>>,
    /// comp[g][f] with `g`, `f` global basis ids and target(f) = source(g);
    /// value is the coordinate vector of g∘f in Hom(src f, tgt g).
    comp: std::collections::HashMap<(usize, usize), Vec<Scalar>>,
    idents: Vec<Vec<Scalar>>,
    /// offsets[src][tgt] = first global basis id of Hom(src, tgt)
    offsets: Vec<Vec<usize>>,
    basis_count: usize,
}

/// Structural defects found by `validate`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Associativity {
        h: (ObjId, ObjId, usize),
        g: (ObjId, ObjId, usize),
        f: (ObjId, ObjId, usize),
    },
    LeftIdentity { obj: ObjId, f: (ObjId, ObjId, usize) },
    RightIdentity { obj: ObjId, f: (ObjId, ObjId, usize) },
    IdentityMissing { obj: ObjId },
    NotSplitLocal { obj: ObjId, top_dim: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Associativity { h, g, f: ff } => write!(
                f,
                "associativity fails on basis triple h={h:?}, g={g:?}, f={ff:?}"
            ),
            Violation::LeftIdentity { obj, f: ff } => {
                write!(f, "id_{obj} is not a left identity on basis morphism {ff:?}")
            }
            Violation::RightIdentity { obj, f: ff } => {
                write!(f, "id_{obj} is not a right identity on basis morphism {ff:?}")
            }
            Violation::IdentityMissing { obj } => write!(f, "object {obj} has no identity"),
            Violation::NotSplitLocal { obj, top_dim } => write!(
                f,
                "End({obj})/rad has dimension {top_dim}, expected 1 (object not split-local)"
            ),
        }
    }
}

impl CategoryTable {
    pub fn new(
        names: Vec<String>,
        hom_dims: Vec<Vec<usize>>,
        comp: std::collections::HashMap<(usize, usize), Vec<Scalar>>,
        idents: Vec<Vec<Scalar>>,
    ) -> Self {
        let n = names.len();
        assert_eq!(hom_dims.len(), n);
        assert!(hom_dims.iter().all(|r| r.len() == n));
        assert_eq!(idents.len(), n);
        let mut offsets = vec![vec![0usize; n]; n];
        let mut acc = 0usize;
        for s in 0..n {
            for t in 0..n {
                offsets[s][t] = acc;
                acc += hom_dims[s][t];
            }
        }
        for (x, ident) in idents.iter().enumerate() {
            assert_eq!(ident.len(), hom_dims[x][x], "identity coordinates of wrong length");
        }
        CategoryTable {
            objects: names.into_iter().map(|name| ObjectInfo { name }).collect(),
            hom_dims,
            comp,
            idents,
            offsets,
            basis_count: acc,
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[ObjectInfo] {
        &self.objects
    }

    pub fn name(&self, x: ObjId) -> &str {
        &self.objects[x].name
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o.name == name)
    }

    pub fn hom_dim_pair(&self, x: ObjId, y: ObjId) -> usize {
        self.hom_dims[x][y]
    }

    pub fn basis_count(&self) -> usize {
        self.basis_count
    }

    pub fn basis_id(&self, src: ObjId, tgt: ObjId, k: usize) -> usize {
        assert!(k < self.hom_dims[src][tgt], "basis index out of range");
        self.offsets[src][tgt] + k
    }

    /// Inverse of `basis_id`.
    pub fn basis_triple(&self, id: usize) -> (ObjId, ObjId, usize) {
        let n = self.objects.len();
        for s in 0..n {
            for t in 0..n {
                let off = self.offsets[s][t];
                let d = self.hom_dims[s][t];
                if id >= off && id < off + d {
                    return (s, t, id - off);
                }
            }
        }
        panic!("basis id {id} out of range");
    }

    pub fn ident(&self, x: ObjId) -> &[Scalar] {
        &self.idents[x]
    }

    /// Coordinates of (basis g)∘(basis f) in Hom(src f, tgt g).
    pub fn compose_basis(&self, g: (ObjId, ObjId, usize), f: (ObjId, ObjId, usize)) -> Vec<Scalar> {
        assert_eq!(f.1, g.0, "target of f must be source of g");
        let gid = self.basis_id(g.0, g.1, g.2);
        let fid = self.basis_id(f.0, f.1, f.2);
        match self.comp.get(&(gid, fid)) {
            Some(v) => v.clone(),
            None => vec![Scalar::zero(); self.hom_dims[f.0][g.1]],
        }
    }

    /// Bilinear extension of the structure constants to coordinate vectors
    /// g ∈ Hom(mid, tgt), f ∈ Hom(src, mid).
    pub fn compose_vec(
        &self,
        src: ObjId,
        mid: ObjId,
        tgt: ObjId,
        g: &[Scalar],
        f: &[Scalar],
    ) -> Vec<Scalar> {
        assert_eq!(f.len(), self.hom_dims[src][mid]);
        assert_eq!(g.len(), self.hom_dims[mid][tgt]);
        let mut out = vec![Scalar::zero(); self.hom_dims[src][tgt]];
        for (fi, fc) in f.iter().enumerate() {
            if fc.is_zero() {
                continue;
            }
            for (gi, gc) in g.iter().enumerate() {
                if gc.is_zero() {
                    continue;
                }
                let c = self.compose_basis((mid, tgt, gi), (src, mid, fi));
                let w = gc * fc;
                for (o, cv) in out.iter_mut().zip(c.iter()) {
                    *o += &w * cv;
                }
            }
        }
        out
    }

    /// Checks associativity, identity laws, and split-local endomorphism
    /// rings. Returns the list of defects; sound tables return an empty list.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.objects.len();
        // identities behave as identities
        for x in 0..n {
            if self.hom_dims[x][x] == 0 || self.idents[x].iter().all(Scalar::is_zero) {
                out.push(Violation::IdentityMissing { obj: x });
                continue;
            }
            for y in 0..n {
                for k in 0..self.hom_dims[x][y] {
                    // id_y ∘ f = f
                    let mut unit_f = vec![Scalar::zero(); self.hom_dims[x][y]];
                    unit_f[k] = Scalar::one();
                    let left = self.compose_vec(x, y, y, &self.idents[y], &unit_f);
                    if left != unit_f {
                        out.push(Violation::LeftIdentity { obj: y, f: (x, y, k) });
                    }
                    let right = self.compose_vec(x, x, y, &unit_f, &self.idents[x]);
                    if right != unit_f {
                        out.push(Violation::RightIdentity { obj: x, f: (x, y, k) });
                    }
                }
            }
        }
        // associativity on basis triples
        for x in 0..n {
            for y in 0..n {
                if self.hom_dims[x][y] == 0 {
                    continue;
                }
                for z in 0..n {
                    if self.hom_dims[y][z] == 0 {
                        continue;
                    }
                    for w in 0..n {
                        if self.hom_dims[z][w] == 0 {
                            continue;
                        }
                        for fi in 0..self.hom_dims[x][y] {
                            let mut f = vec![Scalar::zero(); self.hom_dims[x][y]];
                            f[fi] = Scalar::one();
                            for gi in 0..self.hom_dims[y][z] {
                                let mut g = vec![Scalar::zero(); self.hom_dims[y][z]];
                                g[gi] = Scalar::one();
                                let gf = self.compose_vec(x, y, z, &g, &f);
                                for hi in 0..self.hom_dims[z][w] {
                                    let mut h = vec![Scalar::zero(); self.hom_dims[z][w]];
                                    h[hi] = Scalar::one();
                                    let h_gf = self.compose_vec(x, z, w, &h, &gf);
                                    let hg = self.compose_vec(y, z, w, &h, &g);
                                    let hg_f = self.compose_vec(x, y, w, &hg, &f);
                                    if h_gf != hg_f {
                                        out.push(Violation::Associativity {
                                            h: (z, w, hi),
                                            g: (y, z, gi),
                                            f: (x, y, fi),
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        // split validity: End(X)/rad End(X) is one-dimensional
        if out.is_empty() {
            for x in 0..n {
                let d = self.hom_dims[x][x];
                let left_mults: Vec<Matrix> = (0..d)
                    .map(|k| {
                        Matrix::from_fn(d, d, |i, j| {
                            let mut g = vec![Scalar::zero(); d];
                            g[k] = Scalar::one();
                            let mut f = vec![Scalar::zero(); d];
                            f[j] = Scalar::one();
                            self.compose_vec(x, x, x, &g, &f)[i].clone()
                        })
                    })
                    .collect();
                let rad = algebra_radical(&left_mults);
                let top = d - rad.dim();
                if top != 1 {
                    out.push(Violation::NotSplitLocal { obj: x, top_dim: top });
                }
            }
        }
        out
    }
}

/// A basic object: a multiplicity-free finite set of indecomposables,
/// standing for the additive closure add(⊕ indecs). May be empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct BasicObject {
    indecs: BTreeSet<ObjId>,
}

impl BasicObject {
    pub fn empty() -> Self {
        BasicObject::default()
    }

    pub fn from_ids(ids: impl IntoIterator<Item = ObjId>) -> Self {
        BasicObject {
            indecs: ids.into_iter().collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ObjId> + '_ {
        self.indecs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.indecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecs.is_empty()
    }

    pub fn contains(&self, x: ObjId) -> bool {
        self.indecs.contains(&x)
    }

    pub fn insert(&mut self, x: ObjId) {
        self.indecs.insert(x);
    }

    pub fn union(&self, other: &BasicObject) -> BasicObject {
        BasicObject {
            indecs: self.indecs.union(&other.indecs).copied().collect(),
        }
    }

    pub fn intersect(&self, other: &BasicObject) -> BasicObject {
        BasicObject {
            indecs: self.indecs.intersection(&other.indecs).copied().collect(),
        }
    }

    pub fn with(&self, x: ObjId) -> BasicObject {
        let mut s = self.clone();
        s.insert(x);
        s
    }

    pub fn display(&self, c: &CategoryTable) -> String {
        let names: Vec<&str> = self.iter().map(|x| c.name(x)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// A morphism between direct sums of indecomposables, block by block.
/// `blocks[t][s]` holds the coordinates in Hom(source[s], target[t]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub source: Vec<ObjId>,
    pub target: Vec<ObjId>,
    pub blocks: Vec<Vec<Vec<Scalar>>>,
}

impl Morphism {
    pub fn zero(c: &CategoryTable, source: Vec<ObjId>, target: Vec<ObjId>) -> Self {
        let blocks = target
            .iter()
            .map(|&t| {
                source
                    .iter()
                    .map(|&s| vec![Scalar::zero(); c.hom_dim_pair(s, t)])
                    .collect()
            })
            .collect();
        Morphism { source, target, blocks }
    }

    pub fn identity(c: &CategoryTable, x: ObjId) -> Self {
        Morphism {
            source: vec![x],
            target: vec![x],
            blocks: vec![vec![c.ident(x).to_vec()]],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks
            .iter()
            .all(|row| row.iter().all(|b| b.iter().all(Scalar::is_zero)))
    }

    /// Drops the source summands listed in `remove` (indices into `source`).
    pub fn without_source_slots(&self, remove: &BTreeSet<usize>) -> Morphism {
        let source: Vec<ObjId> = self
            .source
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, &x)| x)
            .collect();
        let blocks = self
            .blocks
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(i, _)| !remove.contains(i))
                    .map(|(_, b)| b.clone())
                    .collect()
            })
            .collect();
        Morphism {
            source,
            target: self.target.clone(),
            blocks,
        }
    }

    pub fn without_target_slots(&self, remove: &BTreeSet<usize>) -> Morphism {
        let target: Vec<ObjId> = self
            .target
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, &x)| x)
            .collect();
        let blocks = self
            .blocks
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, row)| row.clone())
            .collect();
        Morphism {
            source: self.source.clone(),
            target,
            blocks,
        }
    }
}

/// g∘f for morphisms between sums; target of f must equal source of g slotwise.
pub fn compose(c: &CategoryTable, g: &Morphism, f: &Morphism) -> Morphism {
    assert_eq!(f.target, g.source, "target of f must be source of g");
    let mut out = Morphism::zero(c, f.source.clone(), g.target.clone());
    for (t, &tgt) in g.target.iter().enumerate() {
        for (s, &src) in f.source.iter().enumerate() {
            let mut acc = vec![Scalar::zero(); c.hom_dim_pair(src, tgt)];
            for (m, &mid) in f.target.iter().enumerate() {
                let part = c.compose_vec(src, mid, tgt, &g.blocks[t][m], &f.blocks[m][s]);
                for (a, p) in acc.iter_mut().zip(part.iter()) {
                    *a += p.clone();
                }
            }
            out.blocks[t][s] = acc;
        }
    }
    out
}

/// dim Hom(X, Y) for basic objects: the sum of the pairwise dimensions.
pub fn hom_dim(c: &CategoryTable, x: &BasicObject, y: &BasicObject) -> usize {
    x.iter()
        .map(|a| y.iter().map(|b| c.hom_dim_pair(a, b)).sum::<usize>())
        .sum()
}

/// Ambient layout for Hom(X, Y) of basic objects: blocks ordered by
/// (source indec, target indec), both ascending.
pub fn hom_block_layout(
    c: &CategoryTable,
    x: &BasicObject,
    y: &BasicObject,
) -> Vec<(ObjId, ObjId, usize, usize)> {
    let mut out = Vec::new();
    let mut off = 0;
    for a in x.iter() {
        for b in y.iter() {
            let d = c.hom_dim_pair(a, b);
            out.push((a, b, off, d));
            off += d;
        }
    }
    out
}

/// The ideal [add D](X, Y): the span of all compositions X → Dᵢ → Y over
/// basis morphisms and Dᵢ ∈ D, inside Hom(X, Y) with the block layout above.
pub fn ideal_basis(c: &CategoryTable, d: &BasicObject, x: &BasicObject, y: &BasicObject) -> Subspace {
    let layout = hom_block_layout(c, x, y);
    let ambient = hom_dim(c, x, y);
    let mut vectors = Vec::new();
    for (a, b, off, dim_ab) in &layout {
        for mid in d.iter() {
            let df = c.hom_dim_pair(*a, mid);
            let dg = c.hom_dim_pair(mid, *b);
            for fi in 0..df {
                let mut f = vec![Scalar::zero(); df];
                f[fi] = Scalar::one();
                for gi in 0..dg {
                    let mut g = vec![Scalar::zero(); dg];
                    g[gi] = Scalar::one();
                    let comp = c.compose_vec(*a, mid, *b, &g, &f);
                    if comp.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    let mut vec = vec![Scalar::zero(); ambient];
                    vec[*off..*off + *dim_ab].clone_from_slice(&comp);
                    vectors.push(vec);
                }
            }
        }
    }
    Subspace::from_spanning(ambient, vectors)
}

/// The dimension of the ideal [add D](X, Y).
pub fn ideal_dim(c: &CategoryTable, d: &BasicObject, x: &BasicObject, y: &BasicObject) -> usize {
    ideal_basis(c, d, x, y).dim()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Canonical right D-approximation of X: the sum over Dᵢ ∈ D of
/// Dᵢ^{dim Hom(Dᵢ, X)} mapping to X by all basis morphisms at once.
pub fn right_approx(c: &CategoryTable, d: &BasicObject, x: &BasicObject) -> Morphism {
    let target: Vec<ObjId> = x.iter().collect();
    let mut source = Vec::new();
    let mut cols = Vec::new(); // (indec, basis index into Hom(indec, tgt), tgt slot)
    for di in d.iter() {
        for (ti, &t) in target.iter().enumerate() {
            for k in 0..c.hom_dim_pair(di, t) {
                source.push(di);
                cols.push((di, k, ti));
            }
        }
    }
    let mut f = Morphism::zero(c, source, target.clone());
    for (s, (di, k, ti)) in cols.iter().enumerate() {
        let mut v = vec![Scalar::zero(); c.hom_dim_pair(*di, target[*ti])];
        v[*k] = Scalar::one();
        f.blocks[*ti][s] = v;
    }
    debug_assert!(is_approximation(c, d, &f, Side::Right));
    f
}

/// Canonical left D-approximation of X (dual construction).
pub fn left_approx(c: &CategoryTable, d: &BasicObject, x: &BasicObject) -> Morphism {
    let source: Vec<ObjId> = x.iter().collect();
    let mut target = Vec::new();
    let mut rows = Vec::new();
    for di in d.iter() {
        for (si, &s) in source.iter().enumerate() {
            for k in 0..c.hom_dim_pair(s, di) {
                target.push(di);
                rows.push((di, k, si));
            }
        }
    }
    let mut f = Morphism::zero(c, source.clone(), target);
    for (t, (di, k, si)) in rows.iter().enumerate() {
        let mut v = vec![Scalar::zero(); c.hom_dim_pair(source[*si], *di)];
        v[*k] = Scalar::one();
        f.blocks[t][*si] = v;
    }
    debug_assert!(is_approximation(c, d, &f, Side::Left));
    f
}

/// Checks the approximation property. For a right approximation f: D₀ → X
/// this is surjectivity of Hom(Dᵢ, D₀) → Hom(Dᵢ, X) for every Dᵢ ∈ D; the
/// left case is dual.
pub fn is_approximation(c: &CategoryTable, d: &BasicObject, f: &Morphism, side: Side) -> bool {
    match side {
        Side::Right => d.iter().all(|di| {
            // matrix of Hom(Dᵢ, ⊕src) → Hom(Dᵢ, ⊕tgt), composition with f
            let dom_dim: usize = f.source.iter().map(|&s| c.hom_dim_pair(di, s)).sum();
            let cod_dim: usize = f.target.iter().map(|&t| c.hom_dim_pair(di, t)).sum();
            if cod_dim == 0 {
                return true;
            }
            let mut m = Matrix::zero(cod_dim, dom_dim);
            let mut col = 0;
            for (s, &src) in f.source.iter().enumerate() {
                for k in 0..c.hom_dim_pair(di, src) {
                    let mut g = vec![Scalar::zero(); c.hom_dim_pair(di, src)];
                    g[k] = Scalar::one();
                    let mut row = 0;
                    for (t, &tgt) in f.target.iter().enumerate() {
                        let comp = c.compose_vec(di, src, tgt, &f.blocks[t][s], &g);
                        for v in comp {
                            m.set(row, col, v);
                            row += 1;
                        }
                    }
                    col += 1;
                }
            }
            m.rank() == cod_dim
        }),
        Side::Left => d.iter().all(|di| {
            let dom_dim: usize = f.target.iter().map(|&t| c.hom_dim_pair(t, di)).sum();
            let cod_dim: usize = f.source.iter().map(|&s| c.hom_dim_pair(s, di)).sum();
            if cod_dim == 0 {
                return true;
            }
            let mut m = Matrix::zero(cod_dim, dom_dim);
            let mut col = 0;
            for (t, &tgt) in f.target.iter().enumerate() {
                for k in 0..c.hom_dim_pair(tgt, di) {
                    let mut g = vec![Scalar::zero(); c.hom_dim_pair(tgt, di)];
                    g[k] = Scalar::one();
                    let mut row = 0;
                    for (s, &src) in f.source.iter().enumerate() {
                        let comp = c.compose_vec(src, tgt, di, &g, &f.blocks[t][s]);
                        for v in comp {
                            m.set(row, col, v);
                            row += 1;
                        }
                    }
                    col += 1;
                }
            }
            m.rank() == cod_dim
        }),
    }
}

/// Greedily removes approximating summands (in slot order) while the
/// approximation property survives. Panics if the input is not an
/// approximation for `d`.
pub fn minimize_approx(c: &CategoryTable, d: &BasicObject, f: &Morphism, side: Side) -> Morphism {
    assert!(
        is_approximation(c, d, f, side),
        "input is not a {side:?} approximation"
    );
    let mut current = f.clone();
    loop {
        let slots = match side {
            Side::Right => current.source.len(),
            Side::Left => current.target.len(),
        };
        let mut removed = false;
        for slot in 0..slots {
            let mut rm = BTreeSet::new();
            rm.insert(slot);
            let candidate = match side {
                Side::Right => current.without_source_slots(&rm),
                Side::Left => current.without_target_slots(&rm),
            };
            if is_approximation(c, d, &candidate, side) {
                current = candidate;
                removed = true;
                break;
            }
        }
        if !removed {
            return current;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    /// Path category of the linear quiver on `n` objects with all composites
    /// equal to the basis path; `tweak` can corrupt entries before assembly.
    fn path_category(n: usize, tweak: impl Fn(&mut HashMap<(usize, usize), Vec<Scalar>>, &CategoryTable)) -> CategoryTable {
        let names = (0..n).map(|i| format!("v{i}")).collect::<Vec<_>>();
        let mut dims = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in i..n {
                dims[i][j] = 1;
            }
        }
        let idents = (0..n).map(|_| vec![s(1)]).collect();
        // build a scaffold to get basis ids, then fill compositions
        let scaffold = CategoryTable::new(names.clone(), dims.clone(), HashMap::new(), (0..n).map(|_| vec![s(1)]).collect());
        let mut comp = HashMap::new();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let g = scaffold.basis_id(j, k, 0);
                    let f = scaffold.basis_id(i, j, 0);
                    comp.insert((g, f), vec![s(1)]);
                }
            }
        }
        tweak(&mut comp, &scaffold);
        CategoryTable::new(names, dims, comp, idents)
    }

    #[test]
    fn valid_path_category() {
        let c = path_category(4, |_, _| {});
        assert!(c.validate().is_empty());
    }

    #[test]
    fn associativity_fault_names_the_triple() {
        // corrupt (v1→v3)∘(v0→v1) so that h(gf) ≠ (hg)f on the chain
        let c = path_category(4, |comp, sc| {
            let hg = sc.basis_id(1, 3, 0);
            let f = sc.basis_id(0, 1, 0);
            comp.insert((hg, f), vec![s(2)]);
        });
        let violations = c.validate();
        assert!(violations.iter().any(|v| matches!(
            v,
            Violation::Associativity { h: (2, 3, 0), g: (1, 2, 0), f: (0, 1, 0) }
        )), "got {violations:?}");
    }

    #[test]
    fn missing_identity_is_reported() {
        let names = vec!["a".to_string()];
        let dims = vec![vec![1]];
        let comp = HashMap::new();
        let c = CategoryTable::new(names, dims, comp, vec![vec![s(0)]]);
        let violations = c.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::IdentityMissing { obj: 0 })));
    }

    #[test]
    fn split_locality_fails_on_a_product_object() {
        // one object whose endomorphism ring is k x k: valid algebra, not local
        let names = vec!["a".to_string()];
        let dims = vec![vec![2]];
        let scaffold = CategoryTable::new(names.clone(), dims.clone(), HashMap::new(), vec![vec![s(1), s(1)]]);
        let e0 = scaffold.basis_id(0, 0, 0);
        let e1 = scaffold.basis_id(0, 0, 1);
        let mut comp = HashMap::new();
        comp.insert((e0, e0), vec![s(1), s(0)]);
        comp.insert((e1, e1), vec![s(0), s(1)]);
        let c = CategoryTable::new(names, dims, comp, vec![vec![s(1), s(1)]]);
        let violations = c.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::NotSplitLocal { obj: 0, top_dim: 2 })));
    }

    #[test]
    fn compose_identity_and_zero() {
        let c = path_category(3, |_, _| {});
        let f = Morphism {
            source: vec![0],
            target: vec![1],
            blocks: vec![vec![vec![s(1)]]],
        };
        let idy = Morphism::identity(&c, 1);
        assert_eq!(compose(&c, &idy, &f), f);
        let z = Morphism::zero(&c, vec![1], vec![2]);
        let zf = compose(&c, &z, &f);
        assert!(zf.is_zero());
    }

    #[test]
    fn hom_dim_with_empty_object() {
        let c = path_category(3, |_, _| {});
        let x = BasicObject::from_ids([0, 1]);
        assert_eq!(hom_dim(&c, &x, &BasicObject::empty()), 0);
        assert_eq!(hom_dim(&c, &BasicObject::empty(), &x), 0);
        assert_eq!(hom_dim(&c, &x, &x), 3);
    }

    #[test]
    fn ideal_basics() {
        let c = path_category(3, |_, _| {});
        let x = BasicObject::from_ids([0]);
        let y = BasicObject::from_ids([2]);
        // empty ideal
        assert_eq!(ideal_dim(&c, &BasicObject::empty(), &x, &y), 0);
        // identity factors once the middle object contains the source
        assert_eq!(ideal_dim(&c, &BasicObject::from_ids([0]), &x, &y), 1);
        // factoring through the middle vertex gives the whole hom space
        assert_eq!(ideal_dim(&c, &BasicObject::from_ids([1]), &x, &y), 1);
        // monotone in the middle object
        let d_small = BasicObject::from_ids([1]);
        let d_big = BasicObject::from_ids([1, 2]);
        let i_small = ideal_basis(&c, &d_small, &x, &y);
        let i_big = ideal_basis(&c, &d_big, &x, &y);
        assert!(i_small.is_subspace_of(&i_big));
    }

    #[test]
    fn approximations_and_minimization() {
        let c = path_category(3, |_, _| {});
        let d = BasicObject::from_ids([0, 1]);
        let x = BasicObject::from_ids([2]);
        let f = right_approx(&c, &d, &x);
        assert!(is_approximation(&c, &d, &f, Side::Right));
        // canonical approximation has one slot per basis morphism
        assert_eq!(f.source.len(), 2);
        let min = minimize_approx(&c, &d, &f, Side::Right);
        // the map from the earlier vertex factors through the later one,
        // so exactly one summand survives
        assert_eq!(min.source.len(), 1);
        assert!(is_approximation(&c, &d, &min, Side::Right));
        // a minimal approximation is a fixpoint
        let min2 = minimize_approx(&c, &d, &min, Side::Right);
        assert_eq!(min.source, min2.source);
        // a padded approximation loses its superfluous zero-block summand
        let mut padded = f.clone();
        padded.source.push(0);
        for (t_slot, &tgt) in padded.target.clone().iter().enumerate() {
            padded.blocks[t_slot].push(vec![Scalar::zero(); c.hom_dim_pair(0, tgt)]);
        }
        assert!(is_approximation(&c, &d, &padded, Side::Right));
        let unpadded = minimize_approx(&c, &d, &padded, Side::Right);
        assert_eq!(unpadded.source.len(), 1);

        // empty approximating object: the zero morphism qualifies vacuously
        let empty = BasicObject::empty();
        let zf = right_approx(&c, &empty, &x);
        assert!(zf.source.is_empty());
        assert!(is_approximation(&c, &empty, &zf, Side::Right));

        // dual side
        let g = left_approx(&c, &d, &BasicObject::from_ids([0]));
        assert!(is_approximation(&c, &d, &g, Side::Left));
        // split mono when the object itself approximates
        let dx = BasicObject::from_ids([0]);
        let gm = left_approx(&c, &dx, &BasicObject::from_ids([0]));
        assert!(is_approximation(&c, &dx, &gm, Side::Left));
    }
}
