//! Independent combinatorial oracle for cluster categories of type A_n:
//! indecomposables correspond to diagonals of the (n+3)-gon and Ext¹
//! dimensions to crossing numbers, so triangulations count the cluster
//! tilting objects. This module knows nothing about Hom-tables; tests use
//! it to cross-check the orbit construction.

use crate::{Error, Result};

/// A diagonal of the (n+3)-gon, stored with endpoints a < b.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Diagonal {
    pub a: usize,
    pub b: usize,
}

impl Diagonal {
    pub fn new(m: usize, a: usize, b: usize) -> Result<Diagonal> {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        if a == b || b >= m {
            return Err(Error::BadGeneratorSpec(format!(
                "({a},{b}) is not a chord of the {m}-gon"
            )));
        }
        if b - a == 1 || (a == 0 && b == m - 1) {
            return Err(Error::BadGeneratorSpec(format!(
                "({a},{b}) is an edge of the {m}-gon, not a diagonal"
            )));
        }
        Ok(Diagonal { a, b })
    }
}

/// All diagonals of the (n+3)-gon, lexicographically.
pub fn diagonals(n: usize) -> Vec<Diagonal> {
    let m = n + 3;
    let mut out = Vec::new();
    for a in 0..m {
        for b in (a + 2)..m {
            if a == 0 && b == m - 1 {
                continue;
            }
            out.push(Diagonal { a, b });
        }
    }
    out
}

/// Number of interior crossings of two diagonals (0 or 1).
pub fn arc_oracle(n: usize, x: Diagonal, y: Diagonal) -> usize {
    let m = n + 3;
    assert!(x.b < m && y.b < m, "not a diagonal of the (n+3)-gon");
    let crosses = (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
    usize::from(crosses)
}

/// Number of triangulations of the (n+3)-gon, counted by brute force over
/// maximal pairwise non-crossing sets of diagonals (each has n members).
pub fn count_triangulations(n: usize) -> usize {
    let ds = diagonals(n);
    fn extend(n: usize, ds: &[Diagonal], chosen: &mut Vec<Diagonal>, from: usize, found: &mut usize) {
        if chosen.len() == n {
            *found += 1;
            return;
        }
        for k in from..ds.len() {
            let cand = ds[k];
            if chosen.iter().all(|&c| arc_oracle(n, c, cand) == 0) {
                chosen.push(cand);
                extend(n, ds, chosen, k + 1, found);
                chosen.pop();
            }
        }
    }
    let mut found = 0;
    extend(n, &ds, &mut Vec::new(), 0, &mut found);
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_self_crossing() {
        let d = Diagonal::new(5, 0, 2).unwrap();
        assert_eq!(arc_oracle(2, d, d), 0);
    }

    #[test]
    fn pentagon_crossing() {
        let d1 = Diagonal::new(5, 0, 2).unwrap();
        let d2 = Diagonal::new(5, 1, 3).unwrap();
        assert_eq!(arc_oracle(2, d1, d2), 1);
        assert_eq!(arc_oracle(2, d2, d1), 1);
    }

    #[test]
    fn edges_rejected() {
        assert!(Diagonal::new(5, 0, 1).is_err());
        assert!(Diagonal::new(5, 0, 4).is_err());
        assert!(Diagonal::new(5, 2, 2).is_err());
    }

    #[test]
    fn catalan_counts() {
        assert_eq!(diagonals(2).len(), 5);
        assert_eq!(diagonals(3).len(), 9);
        assert_eq!(count_triangulations(2), 5);
        assert_eq!(count_triangulations(3), 14);
    }
}
