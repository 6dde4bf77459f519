//! Generators for the shipped example categories, the category file format,
//! and independent combinatorial oracles used by the test suites.

pub mod arc;
pub mod format;
pub mod mesh;
pub mod nakayama;
pub mod orbit;

pub use arc::{arc_oracle, count_triangulations, diagonals, Diagonal};
pub use format::{from_json, load, save, to_json};
pub use mesh::{hammock_dim, MeshWindow, Vertex};
pub use nakayama::gen_stable_nakayama;
pub use orbit::{gen_orbit, OrbitNaming, OrbitSpec};

use crate::tricat::TriangCategory;

/// The mesh category window of ZA_n with all sources of |i| ≤ radius
/// materialized; validation against the hammock description happens during
/// construction.
pub fn gen_mesh(n: usize, window_radius: i64) -> MeshWindow {
    MeshWindow::new(n, window_radius)
}

/// The cluster category of A_n, objects named by diagonals of the (n+3)-gon.
pub fn gen_cluster(n: usize) -> crate::Result<TriangCategory> {
    gen_orbit(OrbitSpec::cluster(n), OrbitNaming::Diagonals, None)
}

/// The repetitive cluster category D^b(kA_n)/(τ^-m [m]).
pub fn gen_repetitive(n: usize, m: i64) -> crate::Result<TriangCategory> {
    gen_orbit(OrbitSpec::repetitive(n, m), OrbitNaming::ModuleShift, None)
}
