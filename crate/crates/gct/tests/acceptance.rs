//! Acceptance suite: the worked examples reproduced exactly and the
//! expected bijections and set identities verified extensionally over every
//! shipped category and every cluster tilting object. All equalities are
//! exact; one pass line prints per criterion.

use gct::bridge::{cluster_tiltings, verify, Theorem};
use gct::exactlin::Subspace;
use gct::gen::{
    count_triangulations, from_json, gen_cluster, gen_repetitive, gen_stable_nakayama, to_json,
};
use gct::homcat::{hom_dim, ideal_basis, is_approximation, left_approx, right_approx, BasicObject, Side};
use gct::tricat::{enumerate, ghost_report, validate_triang, GhostTables, Kind, TriangCategory};

fn shipped() -> Vec<TriangCategory> {
    vec![
        gen_stable_nakayama(2, 4).unwrap(),
        gen_cluster(2).unwrap(),
        gen_cluster(3).unwrap(),
        gen_repetitive(2, 2).unwrap(),
    ]
}

fn by_names(t: &TriangCategory, names: &[&str]) -> BasicObject {
    BasicObject::from_ids(
        names
            .iter()
            .map(|n| t.base.object_by_name(n).unwrap_or_else(|| panic!("no object {n}"))),
    )
}

fn pass(criterion: &str) {
    println!("PASS {criterion}");
}

#[test]
fn criterion_01_stable_nakayama_worked_example() {
    let t = gen_stable_nakayama(2, 4).unwrap();
    let tilt = by_names(&t, &["2_1", "2_3"]);
    let x = by_names(&t, &["2_1", "1_2"]);

    assert!(t.is_cluster_tilting(&tilt));
    let rep = ghost_report(&t, &tilt, &x);
    assert!(rep.ghost_cluster_tilting);
    assert!(!rep.cluster_tilting);
    // the displayed computation: the length-two module is its own shift and
    // carries a nonzero self-extension
    let m12 = t.base.object_by_name("1_2").unwrap();
    assert_eq!(t.shift_id(m12, 1), m12);
    assert!(rep
        .witnesses
        .iter()
        .any(|w| w.contains("Hom(1_2, 1_2[1]) != 0") && w.contains("1_2[1] = 1_2")));
    pass("criterion 1: stable Nakayama worked example");
}

#[test]
fn criterion_02_repetitive_cluster_category_example() {
    let t = gen_repetitive(2, 2).unwrap();
    assert_eq!(t.base.object_count(), 10);
    let tilt = by_names(&t, &["1", "2[1]", "(1/2)[2]", "1[2]"]);
    assert!(t.is_cluster_tilting(&tilt));
    let (d1, _) = t.defs_d1_d2_set(&tilt, &tilt);
    assert_eq!(d1.len(), 10, "the one-sided candidate set is everything");
    assert_ne!(d1, tilt);
    pass("criterion 2: repetitive cluster category counterexample to the one-sided definitions");
}

#[test]
fn criterion_03_rigidity_bijections_everywhere() {
    for t in shipped() {
        for tilt in cluster_tiltings(&t) {
            let a7 = verify(Theorem::A7, &t, &tilt).unwrap();
            assert!(
                a7.success() && a7.left_card == a7.right_card && a7.matched == a7.left_card,
                "a7 on {} at {}: {:?}",
                t.label,
                a7.tilting,
                a7.failures
            );
            let a9 = verify(Theorem::A9, &t, &tilt).unwrap();
            assert!(
                a9.success() && a9.left_card == a9.right_card && a9.matched == a9.left_card,
                "a9 on {} at {}: {:?}",
                t.label,
                a9.tilting,
                a9.failures
            );
        }
    }
    pass("criterion 3: rigid-pair and support-pair bijections with round trips");
}

#[test]
fn criterion_04_two_calabi_yau_specialization() {
    for (n, expected) in [(2usize, 5usize), (3, 14)] {
        let t = gen_cluster(n).unwrap();
        let tilts = cluster_tiltings(&t);
        assert_eq!(tilts.len(), expected);
        assert_eq!(tilts.len(), count_triangulations(n));
        for tilt in &tilts {
            let rep = verify(Theorem::TwoCy, &t, tilt).unwrap();
            assert!(rep.success(), "two_cy on cc_a{n}: {:?}", rep.failures);
            // ghost cluster tilting relative to any tilting object is plain
            // cluster tilting here
            let ghost = enumerate(&t, Some(tilt), Kind::GhostClusterTilting);
            let plain = enumerate(&t, None, Kind::ClusterTilting);
            assert_eq!(ghost, plain);
        }
    }
    pass("criterion 4: 2-Calabi-Yau specialization with arc-model counts 5 and 14");
}

#[test]
fn criterion_05_f_stable_characterization() {
    for t in shipped() {
        for tilt in cluster_tiltings(&t) {
            let rep = verify(Theorem::FStable, &t, &tilt).unwrap();
            assert!(
                rep.success(),
                "f_stable on {} at {}: {:?}",
                t.label,
                rep.tilting,
                rep.failures
            );
        }
    }
    pass("criterion 5: F-stable ghost cluster tilting = cluster tilting");
}

#[test]
fn criterion_06_relative_definition_equivalence() {
    for t in shipped() {
        for tilt in cluster_tiltings(&t) {
            let rep = verify(Theorem::Equi, &t, &tilt).unwrap();
            assert!(
                rep.success(),
                "equi on {} at {}: {:?}",
                t.label,
                rep.tilting,
                rep.failures
            );
        }
    }
    pass("criterion 6: ghost cluster tilting = ghost rigid of full rank");
}

#[test]
fn criterion_07_projective_dimension_criterion() {
    for t in shipped() {
        for tilt in cluster_tiltings(&t) {
            let rep = verify(Theorem::Factor, &t, &tilt).unwrap();
            assert!(
                rep.success(),
                "factor on {} at {}: {:?}",
                t.label,
                rep.tilting,
                rep.failures
            );
        }
    }
    pass("criterion 7: pd ≤ 1 iff the factorization ideal vanishes");
}

#[test]
fn criterion_08_tilting_family_bijections() {
    for t in shipped() {
        for tilt in cluster_tiltings(&t) {
            for th in [Theorem::Thm5, Theorem::Thm6, Theorem::Thm7, Theorem::PropY4] {
                let rep = verify(th, &t, &tilt).unwrap();
                assert!(
                    rep.success(),
                    "{} on {} at {}: {:?}",
                    rep.theorem,
                    t.label,
                    rep.tilting,
                    rep.failures
                );
            }
        }
    }
    pass("criterion 8: tau-tilting and weak tilting families match their preimages");
}

#[test]
fn criterion_09_property_suites() {
    use gct::exactlin::Scalar;
    for t in shipped() {
        // full structural validation: associativity, identities, split
        // locality, shift transports, Serre duality dimensions
        assert!(validate_triang(&t).is_empty(), "{} fails validation", t.label);
        let serre = t.serre_perm().expect("all shipped categories carry Serre data");
        let n = t.base.object_count();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(t.base.hom_dim_pair(a, b), t.base.hom_dim_pair(b, serre[a]));
            }
        }
        // ideal monotonicity and approximation surjectivity on singleton data
        for d1 in 0..n.min(3) {
            let d_small = BasicObject::from_ids([d1]);
            let d_big = BasicObject::from_ids([d1, (d1 + 1) % n]);
            for x in 0..n {
                for y in 0..n {
                    let xo = BasicObject::from_ids([x]);
                    let yo = BasicObject::from_ids([y]);
                    let small = ideal_basis(&t.base, &d_small, &xo, &yo);
                    let big = ideal_basis(&t.base, &d_big, &xo, &yo);
                    assert!(small.is_subspace_of(&big));
                }
                let xo = BasicObject::from_ids([x]);
                let f = right_approx(&t.base, &d_big, &xo);
                assert!(is_approximation(&t.base, &d_big, &f, Side::Right));
                let g = left_approx(&t.base, &d_big, &xo);
                assert!(is_approximation(&t.base, &d_big, &g, Side::Left));
            }
        }
        // save/load round trip is bit-exact
        let json = to_json(&t);
        let reloaded = from_json(&json).unwrap();
        assert_eq!(to_json(&reloaded), json);
        let _ = Scalar::from_int(0);
    }
    // Grassmann identity on a deterministic family of subspaces
    let vecs = |coords: &[[i64; 3]]| {
        Subspace::from_spanning(
            3,
            coords
                .iter()
                .map(|row| row.iter().map(|&c| Scalar::from_int(c)).collect())
                .collect(),
        )
    };
    let family = [
        vecs(&[[1, 0, 0]]),
        vecs(&[[0, 1, 0], [0, 0, 1]]),
        vecs(&[[1, 1, 0], [0, 1, 1]]),
        vecs(&[[1, 2, 3]]),
        Subspace::zero(3),
        Subspace::full(3),
    ];
    for a in &family {
        for b in &family {
            assert_eq!(
                a.sum(b).dim() + a.intersect(b).dim(),
                a.dim() + b.dim(),
                "Grassmann identity"
            );
        }
    }
    pass("criterion 9: structural, duality, ideal, approximation, subspace, and file properties");
}

#[test]
fn criterion_10_completions_always_exist() {
    for t in shipped() {
        assert!(t.has_serre());
        for tilt in cluster_tiltings(&t) {
            for x in enumerate(&t, Some(&tilt), Kind::T1Rigid) {
                let completions = t.bongartz_complete(&tilt, &x).unwrap();
                assert!(
                    !completions.is_empty(),
                    "{} has no completion in {} relative to {}",
                    x.display(&t.base),
                    t.label,
                    tilt.display(&t.base)
                );
                for c in &completions {
                    assert!(c.iter().count() == tilt.len());
                    assert!(GhostTables::new(&t, &tilt).is_t1_rigid(c));
                    assert!(x.iter().all(|m| c.contains(m)));
                }
            }
        }
    }
    pass("criterion 10: every ghost rigid object completes to full rank");
}

#[test]
fn paper_hom_dimension_checks() {
    // the displayed nonzero hom of the stable Nakayama example
    let t = gen_stable_nakayama(2, 4).unwrap();
    let m12 = by_names(&t, &["1_2"]);
    assert!(hom_dim(&t.base, &m12, &m12) >= 1);
    assert_eq!(t.ext1_dim(&m12, &m12), hom_dim(&t.base, &m12, &m12));
    // ghost ideal vanishing for the worked ghost cluster tilting object
    let tilt = by_names(&t, &["2_1", "2_3"]);
    let x = by_names(&t, &["2_1", "1_2"]);
    assert_eq!(t.ghost_hom_dim(&tilt, &x, &t.shift_obj(&x, 1)), 0);
    assert_eq!(t.ghost_hom_dim(&BasicObject::empty(), &x, &x), 0);
}
