//! The mesh category of the stable translation quiver ZA_n, computed by
//! knitting.
//!
//! Vertices are (i, p) with i ∈ Z and level p ∈ 1..=n; arrows go
//! (i,p) → (i,p+1) and (i,p) → (i+1,p-1); the translation is
//! τ(i,p) = (i-1,p). For a fixed source x the functor Hom(x, −) is computed
//! mesh by mesh in the grading t = 2i + p (every arrow raises t by one):
//! Hom(x, z) for z ≠ x is the cokernel of the mesh map
//! Hom(x, τz) → ⊕_m Hom(x, m) over the middle vertices m of the mesh ending
//! at z. Each cokernel basis vector remembers which (arrow, earlier basis
//! element) pair it lifts, which later lets us express composition with an
//! arbitrary basis morphism, and transport along any translation-quiver
//! automorphism, as small exact matrices.
//!
//! Hom-spaces here are at most one-dimensional and supported on the
//! "hammock" rectangle between x and (i+p-1, n+1-p); generation checks the
//! knitted dimensions against that closed form.

use crate::exactlin::{Matrix, Scalar, Subspace};
use std::collections::{BTreeMap, HashMap};

/// A vertex (i, p) of ZA_n. Ordered by the path grading t = 2i + p, then by
/// level, so iteration follows the knitting order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Vertex {
    pub i: i64,
    pub p: usize,
}

impl Vertex {
    pub fn new(i: i64, p: usize) -> Self {
        Vertex { i, p }
    }

    pub fn t(&self) -> i64 {
        2 * self.i + self.p as i64
    }

    pub fn tau(&self, k: i64) -> Vertex {
        Vertex::new(self.i - k, self.p)
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.t(), self.p, self.i).cmp(&(other.t(), other.p, other.i))
    }
}

/// dim Hom((i,p), (j,q)) in the mesh category of ZA_n: one inside the
/// rectangle i ≤ j ≤ i+p-1, i+p ≤ j+q ≤ i+n, zero outside.
pub fn hammock_dim(n: usize, x: Vertex, y: Vertex) -> usize {
    let (i, p) = (x.i, x.p as i64);
    let (j, q) = (y.i, y.p as i64);
    let nn = n as i64;
    usize::from(i <= j && j < i + p && i + p <= j + q && j + q <= i + nn)
}

/// The knitted data of Hom(source, −): dimensions, the matrices of
/// composition with each arrow, and for every basis element of Hom(source, z)
/// the (middle vertex, basis index) it lifts through.
pub struct Knit {
    pub source: Vertex,
    dims: BTreeMap<Vertex, usize>,
    arrows: HashMap<(Vertex, Vertex), Matrix>,
    lifts: BTreeMap<Vertex, Vec<(Vertex, usize)>>,
}

fn middles(n: usize, z: Vertex) -> Vec<Vertex> {
    let mut out = Vec::new();
    if z.p > 1 {
        out.push(Vertex::new(z.i, z.p - 1));
    }
    if z.p < n {
        out.push(Vertex::new(z.i - 1, z.p + 1));
    }
    out
}

impl Knit {
    pub fn compute(n: usize, source: Vertex) -> Knit {
        let mut dims: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut arrows: HashMap<(Vertex, Vertex), Matrix> = HashMap::new();
        let mut lifts: BTreeMap<Vertex, Vec<(Vertex, usize)>> = BTreeMap::new();
        dims.insert(source, 1);
        let t0 = source.t();
        for t in (t0 + 1)..=(t0 + n as i64 + 1) {
            for p in 1..=n {
                if (t - p as i64) % 2 != 0 {
                    continue;
                }
                let z = Vertex::new((t - p as i64) / 2, p);
                if z == source {
                    continue;
                }
                let mids = middles(n, z);
                let mid_dims: Vec<usize> =
                    mids.iter().map(|m| *dims.get(m).unwrap_or(&0)).collect();
                let total_mid: usize = mid_dims.iter().sum();
                let tau_z = z.tau(1);
                let tau_dim = if tau_z == source {
                    1
                } else {
                    *dims.get(&tau_z).unwrap_or(&0)
                };
                if total_mid == 0 {
                    continue;
                }
                // mesh map Hom(x, τz) → ⊕ Hom(x, m), stacked block rows
                let mut mesh = Matrix::zero(total_mid, tau_dim);
                if tau_dim > 0 {
                    let mut row = 0;
                    for (m, &md) in mids.iter().zip(mid_dims.iter()) {
                        if md > 0 {
                            let a = arrows
                                .get(&(tau_z, *m))
                                .expect("arrow matrix into middle already knitted");
                            for r in 0..md {
                                for c in 0..tau_dim {
                                    mesh.set(row + r, c, a.get(r, c).clone());
                                }
                            }
                        }
                        row += md;
                    }
                }
                let image = Subspace::from_spanning(
                    total_mid,
                    (0..tau_dim).map(|c| mesh.col(c)).collect(),
                );
                let rank = image.dim();
                let dim_z = total_mid - rank;
                if dim_z > 0 {
                    dims.insert(z, dim_z);
                }
                // choose unit vectors completing the image to the whole space;
                // they are the lifts of the cokernel basis
                let mut chosen: Vec<usize> = Vec::new();
                {
                    let mut span = image.clone();
                    for j in 0..total_mid {
                        if chosen.len() == dim_z {
                            break;
                        }
                        let mut e = vec![Scalar::zero(); total_mid];
                        e[j] = Scalar::one();
                        if !span.contains(&e) {
                            span = span.sum(&Subspace::from_spanning(total_mid, vec![e]));
                            chosen.push(j);
                        }
                    }
                }
                assert_eq!(chosen.len(), dim_z, "cokernel basis completion failed");
                let mut lift = Vec::new();
                for &j in &chosen {
                    let mut off = 0;
                    for (m, &md) in mids.iter().zip(mid_dims.iter()) {
                        if j < off + md {
                            lift.push((*m, j - off));
                            break;
                        }
                        off += md;
                    }
                }
                if dim_z > 0 {
                    lifts.insert(z, lift);
                }
                // projection ⊕Hom(x, m) → Hom(x, z): invert [image | chosen units]
                if dim_z > 0 || total_mid > 0 {
                    let mut cols: Vec<Vec<Scalar>> = image.basis().to_vec();
                    for &j in &chosen {
                        let mut e = vec![Scalar::zero(); total_mid];
                        e[j] = Scalar::one();
                        cols.push(e);
                    }
                    let b = Matrix::from_rows(cols).transpose();
                    // solve B * X = I column by column; the last dim_z rows of X
                    // are the quotient coordinates
                    let mut proj = Matrix::zero(dim_z, total_mid);
                    for col in 0..total_mid {
                        let mut e = vec![Scalar::zero(); total_mid];
                        e[col] = Scalar::one();
                        let x = b.solve(&e).expect("completion spans the space");
                        for r in 0..dim_z {
                            proj.set(r, col, x[rank + r].clone());
                        }
                    }
                    // arrow matrices m → z: the middle-block columns of proj
                    let mut off = 0;
                    for (m, &md) in mids.iter().zip(mid_dims.iter()) {
                        if md > 0 {
                            let a = Matrix::from_fn(dim_z, md, |r, c| {
                                proj.get(r, off + c).clone()
                            });
                            arrows.insert((*m, z), a);
                        }
                        off += md;
                    }
                }
            }
        }
        Knit {
            source,
            dims,
            arrows,
            lifts,
        }
    }

    pub fn dim(&self, y: Vertex) -> usize {
        *self.dims.get(&y).unwrap_or(&0)
    }

    /// Vertices with nonzero Hom(source, −), in knitting order.
    pub fn support(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.dims.iter().map(|(v, d)| (*v, *d))
    }

    pub fn arrow_matrix(&self, from: Vertex, to: Vertex) -> Option<&Matrix> {
        self.arrows.get(&(from, to))
    }

    fn lift(&self, z: Vertex) -> &[(Vertex, usize)] {
        &self.lifts[&z]
    }
}

/// For basis morphisms g out of `w` (knitted in `knit_w`), the matrices of
/// g∘(−): Hom(x, w) → Hom(x, z) computed against the knitting of source `x`.
/// Returned per target vertex z, one matrix per basis element of Hom(w, z).
pub fn compose_mats(knit_x: &Knit, knit_w: &Knit) -> BTreeMap<Vertex, Vec<Matrix>> {
    let w = knit_w.source;
    let dx_w = knit_x.dim(w);
    let mut out: BTreeMap<Vertex, Vec<Matrix>> = BTreeMap::new();
    out.insert(w, vec![Matrix::identity(dx_w)]);
    for (z, dim_z) in knit_w.support() {
        if z == w {
            continue;
        }
        let mut mats = Vec::with_capacity(dim_z);
        for (m, idx) in knit_w.lift(z).iter() {
            let prev = &out[m][*idx];
            let dz = knit_x.dim(z);
            let mat = match knit_x.arrow_matrix(*m, z) {
                Some(a) if prev.rows() > 0 => a.mul(prev),
                _ => Matrix::zero(dz, dx_w),
            };
            mats.push(mat);
        }
        out.insert(z, mats);
    }
    out
}

/// The matrices of the functor induced by a translation-quiver automorphism
/// σ: for every y in the support of Hom(x, −), the matrix
/// Hom(x, y) → Hom(σx, σy). `knit_sx` must be the knitting of σ(x).
pub fn transport_mats(
    knit_x: &Knit,
    knit_sx: &Knit,
    sigma: impl Fn(Vertex) -> Vertex,
) -> BTreeMap<Vertex, Matrix> {
    let x = knit_x.source;
    assert_eq!(knit_sx.source, sigma(x), "knit_sx must knit σ(source)");
    let mut out: BTreeMap<Vertex, Matrix> = BTreeMap::new();
    out.insert(x, Matrix::identity(1));
    for (z, dim_z) in knit_x.support() {
        if z == x {
            continue;
        }
        let sz = sigma(z);
        assert_eq!(
            knit_sx.dim(sz),
            dim_z,
            "automorphism must preserve hom dimensions"
        );
        let mut mat = Matrix::zero(dim_z, dim_z);
        for (col, (m, idx)) in knit_x.lift(z).iter().enumerate() {
            let sm = sigma(*m);
            let prev = &out[m];
            let a = knit_sx
                .arrow_matrix(sm, sz)
                .expect("image arrow present in σ-knitting");
            let img = a.mul(prev);
            for r in 0..dim_z {
                mat.set(r, col, img.get(r, *idx).clone());
            }
        }
        out.insert(z, mat);
    }
    out
}

/// A window of the mesh category: knitted hom functors for every source in
/// an i-interval, with composition available through `compose_mats`.
pub struct MeshWindow {
    pub n: usize,
    pub i_min: i64,
    pub i_max: i64,
    knits: BTreeMap<Vertex, Knit>,
}

impl MeshWindow {
    /// Knits every source with i in [-radius, radius]. Targets extend as far
    /// as the hammocks reach, so no truncation can occur; the radius only
    /// determines which sources are materialized.
    pub fn new(n: usize, radius: i64) -> MeshWindow {
        assert!(n >= 1, "level count must be positive");
        let sources = (-radius..=radius)
            .flat_map(|i| (1..=n).map(move |p| Vertex::new(i, p)))
            .collect::<Vec<_>>();
        MeshWindow::with_sources(n, sources)
    }

    pub fn with_sources(n: usize, sources: Vec<Vertex>) -> MeshWindow {
        let mut i_min = i64::MAX;
        let mut i_max = i64::MIN;
        let mut knits = BTreeMap::new();
        for v in sources {
            assert!((1..=n).contains(&v.p), "vertex level out of range");
            i_min = i_min.min(v.i);
            i_max = i_max.max(v.i);
            knits.entry(v).or_insert_with(|| Knit::compute(n, v));
        }
        let w = MeshWindow {
            n,
            i_min,
            i_max,
            knits,
        };
        w.validate();
        w
    }

    pub fn knit(&self, source: Vertex) -> &Knit {
        self.knits
            .get(&source)
            .unwrap_or_else(|| panic!("source {source:?} not knitted in this window"))
    }

    pub fn has_source(&self, source: Vertex) -> bool {
        self.knits.contains_key(&source)
    }

    pub fn hom_dim(&self, x: Vertex, y: Vertex) -> usize {
        self.knit(x).dim(y)
    }

    /// Knitted dimensions agree with the hammock rectangle, never exceed one,
    /// and every mesh composite vanishes.
    fn validate(&self) {
        for (x, knit) in &self.knits {
            for (z, d) in knit.support() {
                assert!(d <= 1, "type A hom spaces are at most one-dimensional");
                assert_eq!(
                    d,
                    hammock_dim(self.n, *x, z),
                    "knitted dim disagrees with hammock at {x:?} → {z:?}"
                );
            }
            // hammock vertices all accounted for
            for j in x.i..=(x.i + self.n as i64) {
                for q in 1..=self.n {
                    let y = Vertex::new(j, q);
                    assert_eq!(knit.dim(y), hammock_dim(self.n, *x, y));
                }
            }
            // mesh relations: Hom(x, τz) → ⊕ Hom(x, m) → Hom(x, z) composes to zero
            for (z, _) in knit.support() {
                if z == *x {
                    continue;
                }
                let tau_z = z.tau(1);
                let dt = knit.dim(tau_z);
                if dt == 0 {
                    continue;
                }
                let dz = knit.dim(z);
                let mut acc = Matrix::zero(dz, dt);
                for m in middles(self.n, z) {
                    if knit.dim(m) == 0 {
                        continue;
                    }
                    let a1 = knit.arrow_matrix(tau_z, m).expect("first leg");
                    let a2 = knit.arrow_matrix(m, z).expect("second leg");
                    acc = acc.add(&a2.mul(a1));
                }
                assert!(acc.is_zero(), "mesh relation violated at {z:?}");
            }
        }
    }
}


/// The full subcategory of the mesh category on the vertices with
/// i ∈ [i_lo, i_hi], as a Hom-table. Exercises the knitted composition
/// against the general category validator.
pub fn mesh_category_table(n: usize, i_lo: i64, i_hi: i64) -> crate::homcat::CategoryTable {
    use crate::homcat::CategoryTable;
    use std::collections::HashMap;

    let vertices: Vec<Vertex> = (i_lo..=i_hi)
        .flat_map(|i| (1..=n).map(move |p| Vertex::new(i, p)))
        .collect();
    let window = MeshWindow::with_sources(n, vertices.clone());
    let num = vertices.len();
    let names = vertices.iter().map(|v| format!("({},{})", v.i, v.p)).collect();
    let dims: Vec<Vec<usize>> = vertices
        .iter()
        .map(|&x| vertices.iter().map(|&y| window.hom_dim(x, y)).collect())
        .collect();
    let mut offsets = vec![vec![0usize; num]; num];
    let mut acc = 0;
    for s in 0..num {
        for t in 0..num {
            offsets[s][t] = acc;
            acc += dims[s][t];
        }
    }
    let mut comp = HashMap::new();
    for (xi, &x) in vertices.iter().enumerate() {
        for (yi, &y) in vertices.iter().enumerate() {
            if dims[xi][yi] == 0 {
                continue;
            }
            let mats = compose_mats(window.knit(x), window.knit(y));
            for (zi, &z) in vertices.iter().enumerate() {
                if dims[yi][zi] == 0 {
                    continue;
                }
                for (gk, mat) in mats[&z].iter().enumerate() {
                    for fk in 0..dims[xi][yi] {
                        let col = mat.col(fk);
                        if col.iter().all(Scalar::is_zero) {
                            continue;
                        }
                        let gid = offsets[yi][zi] + gk;
                        let fid = offsets[xi][yi] + fk;
                        comp.insert((gid, fid), col);
                    }
                }
            }
        }
    }
    let idents = (0..num).map(|_| vec![Scalar::one()]).collect();
    CategoryTable::new(names, dims, comp, idents)
}
