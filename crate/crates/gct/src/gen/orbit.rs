//! Orbit categories of the mesh category of ZA_n under an auto-equivalence
//! F₀ = τ^{-a}∘[b], realized entirely inside the knitted mesh data.
//!
//! On ZA_n the shift acts as the glide γ(i,p) = (i+p, n+1-p) and the
//! translation as τ(i,p) = (i-1,p), so F₀ is the quiver automorphism
//! σ = τ^{-a}γ^b. Objects of the quotient are σ-orbits of vertices; a
//! hom-space is the direct sum over twists k of the mesh homs
//! Hom(x, σ^k y), and composition transports the second factor by σ^k
//! before composing in the mesh category. The transports are the functor
//! matrices of `transport_mats`, so all structure constants stay exact.
//!
//! a = b = 1 yields the cluster category (objects named by polygon
//! diagonals); a = b = 2 over A_2 yields the repetitive cluster category of
//! the final worked example. Serre data descends as S = τ∘γ.

use super::mesh::{compose_mats, hammock_dim, transport_mats, MeshWindow, Vertex};
use crate::exactlin::{Matrix, Scalar};
use crate::homcat::{CategoryTable, ObjId};
use crate::tricat::TriangCategory;
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Parameters of the auto-equivalence F₀ = τ^{-a}∘[b] over A_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitSpec {
    pub n: usize,
    pub a: i64,
    pub b: i64,
}

impl OrbitSpec {
    pub fn cluster(n: usize) -> Self {
        OrbitSpec { n, a: 1, b: 1 }
    }

    pub fn repetitive(n: usize, m: i64) -> Self {
        OrbitSpec { n, a: m, b: m }
    }

    /// t-step of one application of σ.
    fn t_step(&self) -> i64 {
        2 * self.a + self.b * (self.n as i64 + 1)
    }

    /// Smallest e with σ^e a plain translation, and the translation amount.
    fn period(&self) -> (i64, i64) {
        if self.b % 2 == 0 {
            (1, self.a + (self.n as i64 + 1) * self.b / 2)
        } else {
            (2, 2 * self.a + (self.n as i64 + 1) * self.b)
        }
    }

    pub fn default_label(&self) -> String {
        if self.a == 1 && self.b == 1 {
            format!("cc_a{}", self.n)
        } else if self.a == self.b {
            format!("rc_a{}_{}", self.n, self.a)
        } else {
            format!("orbit_a{}_t{}_s{}", self.n, self.a, self.b)
        }
    }
}

/// How generated objects are displayed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitNaming {
    /// Diagonals of the (n+3)-gon; only meaningful for a = b = 1.
    Diagonals,
    /// Module interval names with shift suffixes, e.g. "1/2[2]".
    ModuleShift,
}

fn gamma(n: usize, v: Vertex) -> Vertex {
    Vertex::new(v.i + v.p as i64, n + 1 - v.p)
}

fn gamma_inv(n: usize, v: Vertex) -> Vertex {
    Vertex::new(v.i - (n as i64 + 1 - v.p as i64), n + 1 - v.p)
}

fn gamma_pow(n: usize, k: i64, mut v: Vertex) -> Vertex {
    if k >= 0 {
        for _ in 0..k {
            v = gamma(n, v);
        }
    } else {
        for _ in 0..(-k) {
            v = gamma_inv(n, v);
        }
    }
    v
}

fn sigma(spec: &OrbitSpec, v: Vertex) -> Vertex {
    let g = gamma_pow(spec.n, spec.b, v);
    Vertex::new(g.i + spec.a, g.p)
}

fn sigma_inv(spec: &OrbitSpec, v: Vertex) -> Vertex {
    gamma_pow(spec.n, -spec.b, Vertex::new(v.i - spec.a, v.p))
}

fn sigma_pow(spec: &OrbitSpec, k: i64, mut v: Vertex) -> Vertex {
    if k >= 0 {
        for _ in 0..k {
            v = sigma(spec, v);
        }
    } else {
        for _ in 0..(-k) {
            v = sigma_inv(spec, v);
        }
    }
    v
}

/// The distinguished slice of ZA_n carrying interval names: vertex (i,p)
/// with i ∈ [0, n) and i+p ≤ n stands for the interval [a..b] with
/// b = n-i, a = b-p+1. Every vertex is γ^k of exactly one slice vertex.
fn slice_name(n: usize, v: Vertex) -> Option<String> {
    if v.i < 0 || v.i >= n as i64 || v.i + v.p as i64 > n as i64 {
        return None;
    }
    let b = n as i64 - v.i;
    let a = b - v.p as i64 + 1;
    let parts: Vec<String> = (a..=b).map(|x| x.to_string()).collect();
    Some(parts.join("/"))
}

fn module_shift_name(n: usize, v: Vertex) -> String {
    // t of the slice lies in [1, 2n-1]; γ adds n+1 to t
    let guess = (v.t() - 1).div_euclid(n as i64 + 1);
    for k in (guess - 2)..=(guess + 2) {
        let w = gamma_pow(n, -k, v);
        if let Some(base) = slice_name(n, w) {
            return match k {
                0 => base,
                _ if base.contains('/') => format!("({base})[{k}]"),
                _ => format!("{base}[{k}]"),
            };
        }
    }
    panic!("vertex {v:?} has no γ-decomposition into the module slice");
}

fn diagonal_name(n: usize, v: Vertex) -> String {
    let m = n as i64 + 3;
    let a = v.i.rem_euclid(m);
    let b = (v.i + v.p as i64 + 1).rem_euclid(m);
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    format!("({a},{b})")
}

/// Generates the orbit category as a validated triangulated Hom-table.
pub fn gen_orbit(spec: OrbitSpec, naming: OrbitNaming, label: Option<String>) -> Result<TriangCategory> {
    if spec.n == 0 {
        return Err(Error::BadGeneratorSpec("n must be at least 1".into()));
    }
    if spec.b < 1 {
        return Err(Error::BadGeneratorSpec(
            "the shift exponent b must be at least 1".into(),
        ));
    }
    if spec.a < 0 {
        return Err(Error::BadGeneratorSpec("a must be nonnegative".into()));
    }
    let (e, period) = spec.period();
    if period < 1 {
        return Err(Error::BadGeneratorSpec(format!(
            "orbit of τ^-{}[{}] is not a translation by a positive amount",
            spec.a, spec.b
        )));
    }
    // free orbits: within the strip, σ never fixes a vertex before σ^e
    let normalize = |v: Vertex| Vertex::new(v.i.rem_euclid(period), v.p);
    let strip: Vec<Vertex> = (0..period)
        .flat_map(|i| (1..=spec.n).map(move |p| Vertex::new(i, p)))
        .collect();
    if e == 2 {
        for &v in &strip {
            if normalize(sigma(&spec, v)) == v {
                return Err(Error::BadGeneratorSpec(format!(
                    "σ has a fixed object at {v:?}; orbits are not free"
                )));
            }
        }
    }
    // orbit representatives: lexicographically least strip member of each orbit
    let mut reps: Vec<Vertex> = Vec::new();
    {
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        let mut sorted = strip.clone();
        sorted.sort_by_key(|v| (v.i, v.p));
        for v in sorted {
            if seen.contains(&v) {
                continue;
            }
            reps.push(v);
            let mut w = v;
            for _ in 0..e {
                seen.insert(normalize(w));
                w = sigma(&spec, w);
            }
        }
    }
    let num = reps.len();

    let t_step = spec.t_step();
    let decompose = |v: Vertex| -> (ObjId, i64) {
        for (idx, r) in reps.iter().enumerate() {
            let dt = v.t() - r.t();
            if dt % t_step != 0 {
                continue;
            }
            let k = dt / t_step;
            if sigma_pow(&spec, k, *r) == v {
                return (idx, k);
            }
        }
        panic!("vertex {v:?} not in any σ-orbit of the representatives");
    };

    // hom blocks: twists k with σ^k(y) inside the hammock of x; the t-grading
    // pins the candidate range exactly
    let blocks_for = |x: Vertex, y: Vertex| -> Vec<(i64, Vertex)> {
        let lo_num = x.t() - y.t();
        let hi_num = x.t() + spec.n as i64 - 1 - y.t();
        let lo = lo_num.div_euclid(t_step) - 1;
        let hi = hi_num.div_euclid(t_step) + 1;
        let mut out = Vec::new();
        for k in lo..=hi {
            let w = sigma_pow(&spec, k, y);
            if hammock_dim(spec.n, x, w) == 1 {
                out.push((k, w));
            }
        }
        out
    };
    let mut blocks: Vec<Vec<Vec<(i64, Vertex)>>> = vec![vec![Vec::new(); num]; num];
    let mut needed_sources: BTreeSet<Vertex> = reps.iter().copied().collect();
    for (xi, &x) in reps.iter().enumerate() {
        for (yi, &y) in reps.iter().enumerate() {
            let bl = blocks_for(x, y);
            for (k, _) in &bl {
                needed_sources.insert(sigma_pow(&spec, *k, y));
            }
            blocks[xi][yi] = bl;
        }
    }
    let window = MeshWindow::with_sources(spec.n, needed_sources.into_iter().collect());

    // hom dimensions and identities
    let hom_dims: Vec<Vec<usize>> = (0..num)
        .map(|xi| (0..num).map(|yi| blocks[xi][yi].len()).collect())
        .collect();
    let block_pos = |xi: usize, yi: usize, k: i64| -> Option<usize> {
        blocks[xi][yi].iter().position(|(kk, _)| *kk == k)
    };
    let mut idents: Vec<Vec<Scalar>> = Vec::new();
    for xi in 0..num {
        let pos = block_pos(xi, xi, 0).expect("identity block at twist zero");
        let mut v = vec![Scalar::zero(); hom_dims[xi][xi]];
        v[pos] = Scalar::one();
        idents.push(v);
    }

    // composition: transport the second factor by σ^twist, then compose in
    // the mesh window
    let mut transports: HashMap<(usize, i64), BTreeMap<Vertex, Matrix>> = HashMap::new();
    let mut comp_cache: HashMap<(Vertex, Vertex), BTreeMap<Vertex, Vec<Matrix>>> = HashMap::new();
    let mut comp: HashMap<(usize, usize), Vec<Scalar>> = HashMap::new();

    // global basis ids follow the CategoryTable layout
    let mut offsets = vec![vec![0usize; num]; num];
    {
        let mut acc = 0;
        for s in 0..num {
            for t in 0..num {
                offsets[s][t] = acc;
                acc += hom_dims[s][t];
            }
        }
    }

    for yi in 0..num {
        let y = reps[yi];
        for zi in 0..num {
            let g_blocks = blocks[yi][zi].clone();
            for (gpos, (j, u)) in g_blocks.iter().enumerate() {
                for xi in 0..num {
                    let x = reps[xi];
                    let f_blocks = blocks[xi][yi].clone();
                    for (fpos, (i, w)) in f_blocks.iter().enumerate() {
                        // transport g: Hom(y, u) → Hom(w, σ^i u)
                        let tr = transports.entry((yi, *i)).or_insert_with(|| {
                            transport_mats(window.knit(y), window.knit(sigma_pow(&spec, *i, y)), |v| {
                                sigma_pow(&spec, *i, v)
                            })
                        });
                        let g_scalar = tr[u].get(0, 0).clone();
                        let u2 = sigma_pow(&spec, *i, *u);
                        let cm = comp_cache.entry((x, *w)).or_insert_with(|| {
                            compose_mats(window.knit(x), window.knit(*w))
                        });
                        let mat = &cm[&u2][0];
                        if mat.rows() == 0 {
                            continue;
                        }
                        let c = &g_scalar * mat.get(0, 0);
                        if c.is_zero() {
                            continue;
                        }
                        let tpos = block_pos(xi, zi, i + j)
                            .expect("composite twist block must exist");
                        let mut coeffs = vec![Scalar::zero(); hom_dims[xi][zi]];
                        coeffs[tpos] = c;
                        let gid = offsets[yi][zi] + gpos;
                        let fid = offsets[xi][yi] + fpos;
                        comp.insert((gid, fid), coeffs);
                    }
                }
            }
        }
    }

    let names: Vec<String> = reps
        .iter()
        .map(|&v| match naming {
            OrbitNaming::Diagonals => diagonal_name(spec.n, v),
            OrbitNaming::ModuleShift => module_shift_name(spec.n, v),
        })
        .collect();
    let base = CategoryTable::new(names, hom_dims.clone(), comp, idents);

    // shift: object permutation and blockwise transports via ψ_X = σ^{-kX}∘γ
    let mut shift_perm = vec![0usize; num];
    let mut shift_k = vec![0i64; num];
    for (xi, &x) in reps.iter().enumerate() {
        let (idx, k) = decompose(gamma(spec.n, x));
        shift_perm[xi] = idx;
        shift_k[xi] = k;
    }
    let mut shift_transport: HashMap<(ObjId, ObjId), Matrix> = HashMap::new();
    for xi in 0..num {
        let x = reps[xi];
        let x1 = shift_perm[xi];
        let kx = shift_k[xi];
        let psi = |v: Vertex| sigma_pow(&spec, -kx, gamma(spec.n, v));
        let tr = transport_mats(window.knit(x), window.knit(reps[x1]), psi);
        for yi in 0..num {
            let d = hom_dims[xi][yi];
            if d == 0 {
                continue;
            }
            let y1 = shift_perm[yi];
            let ky = shift_k[yi];
            let mut mat = Matrix::zero(hom_dims[x1][y1], d);
            for (src_pos, (i, w)) in blocks[xi][yi].iter().enumerate() {
                let val = tr[w].get(0, 0).clone();
                let tgt_pos = block_pos(x1, y1, i - kx + ky)
                    .expect("shifted twist block must exist");
                mat.set(tgt_pos, src_pos, val);
            }
            shift_transport.insert((xi, yi), mat);
        }
    }

    // Serre functor S = τ∘γ descends to the orbit
    let serre_perm: Vec<ObjId> = reps
        .iter()
        .map(|&x| decompose(gamma(spec.n, x).tau(1)).0)
        .collect();

    let label = label.unwrap_or_else(|| spec.default_label());
    let t = TriangCategory::new(base, label, shift_perm, shift_transport, Some(serre_perm));
    let violations = crate::tricat::validate_triang(&t);
    if !violations.is_empty() {
        return Err(Error::InvalidTable(
            violations.iter().map(|v| v.to_string()).collect(),
        ));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homcat::BasicObject;

    #[test]
    fn cluster_a2_has_five_objects() {
        let t = gen_orbit(OrbitSpec::cluster(2), OrbitNaming::Diagonals, None).unwrap();
        assert_eq!(t.base.object_count(), 5);
        let names: Vec<&str> = t.base.objects().iter().map(|o| o.name.as_str()).collect();
        assert!(names.contains(&"(0,2)"));
        assert!(names.contains(&"(1,3)"));
    }

    #[test]
    fn cluster_a2_identity_hom() {
        let t = gen_orbit(OrbitSpec::cluster(2), OrbitNaming::Diagonals, None).unwrap();
        let x = t.base.object_by_name("(0,2)").unwrap();
        let b = BasicObject::from_ids([x]);
        assert_eq!(crate::homcat::hom_dim(&t.base, &b, &b), 1);
    }

    #[test]
    fn cluster_is_two_calabi_yau() {
        for n in [2usize, 3] {
            let t = gen_orbit(OrbitSpec::cluster(n), OrbitNaming::Diagonals, None).unwrap();
            let serre = t.serre_perm().unwrap();
            for x in 0..t.base.object_count() {
                assert_eq!(serre[x], t.shift_id(x, 2));
            }
        }
    }

    #[test]
    fn repetitive_a2_matches_figure() {
        let t = gen_orbit(OrbitSpec::repetitive(2, 2), OrbitNaming::ModuleShift, None).unwrap();
        assert_eq!(t.base.object_count(), 10);
        for name in ["1", "2", "1/2", "2[1]", "1[1]", "(1/2)[1]", "2[2]", "1[2]", "(1/2)[2]", "2[3]"] {
            assert!(
                t.base.object_by_name(name).is_some(),
                "missing object {name}"
            );
        }
        // shift sends 1 to 1[1]
        let one = t.base.object_by_name("1").unwrap();
        let one_shift = t.base.object_by_name("1[1]").unwrap();
        assert_eq!(t.shift_id(one, 1), one_shift);
    }

    #[test]
    fn cluster_a3_has_nine_objects() {
        let t = gen_orbit(OrbitSpec::cluster(3), OrbitNaming::Diagonals, None).unwrap();
        assert_eq!(t.base.object_count(), 9);
    }
}
