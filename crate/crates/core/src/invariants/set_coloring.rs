//! Set colorings: each vertex receives `r` colors and adjacent vertices
//! receive disjoint sets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{compose, cycle, Graph};
use crate::invariants::chromatic::chromatic_number_with;
use crate::search::SearchLimits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetColoring {
    sets: Vec<BTreeSet<usize>>,
    r: usize,
    k: usize,
}

impl SetColoring {
    /// Colors are drawn from `0..k`; no validation against a graph happens here.
    pub fn new(sets: Vec<BTreeSet<usize>>, r: usize, k: usize) -> Self {
        SetColoring { sets, r, k }
    }

    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.sets
    }

    pub fn set(&self, v: usize) -> &BTreeSet<usize> {
        &self.sets[v]
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// True iff every vertex has exactly `r` colors from `0..k` and adjacent
/// vertices have disjoint color sets.
pub fn validate_set_coloring(g: &Graph, sc: &SetColoring) -> Result<bool> {
    if sc.sets.len() != g.order() {
        return Err(Error::param(format!(
            "set coloring covers {} vertices, graph has {}",
            sc.sets.len(),
            g.order()
        )));
    }
    let sizes_ok = sc.sets.iter().all(|s| s.len() == sc.r && s.iter().all(|&c| c < sc.k));
    Ok(sizes_ok && g.edges().all(|(u, v)| sc.sets[u].is_disjoint(&sc.sets[v])))
}

/// The explicit `(2s-1)`-set-coloring of `C_{4s-1}` with `4s-1` colors:
/// vertex `i` receives `{ i(2s-1) + j mod (4s-1) : 0 <= j <= 2s-2 }`.
pub fn lemma5_set_coloring(s: usize) -> Result<SetColoring> {
    if s < 2 {
        return Err(Error::param(format!("odd-cycle set coloring needs s >= 2, got {s}")));
    }
    let n = 4 * s - 1;
    let r = 2 * s - 1;
    let sets = (0..n)
        .map(|i| (0..r).map(|j| (i * r + j) % n).collect())
        .collect();
    let sc = SetColoring::new(sets, r, n);
    let cycle = cycle(n)?;
    if !validate_set_coloring(&cycle, &sc)? {
        return Err(Error::construction(format!("set coloring of C{n} is not proper")));
    }
    Ok(sc)
}

/// `χ^(r)(g)`, computed as `χ(g[K_r])`.
pub fn set_chromatic_number_with(g: &Graph, r: usize, limits: &SearchLimits) -> Result<usize> {
    if r == 0 {
        return Err(Error::param("set size r must be positive"));
    }
    let product = compose(g, &Graph::complete(r));
    Ok(chromatic_number_with(&product, limits)?.chi)
}

pub fn set_chromatic_number(g: &Graph, r: usize) -> Result<usize> {
    set_chromatic_number_with(g, r, &SearchLimits::unlimited())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle_set_coloring_s2_matches_formula() {
        let sc = lemma5_set_coloring(2).unwrap();
        assert_eq!(sc.set(0), &BTreeSet::from([0, 1, 2]));
        assert_eq!(sc.set(1), &BTreeSet::from([3, 4, 5]));
        assert_eq!(sc.set(2), &BTreeSet::from([6, 0, 1]));
        let mut uses = [0usize; 7];
        for s in sc.sets() {
            for &c in s {
                uses[c] += 1;
            }
        }
        assert_eq!(uses, [3; 7]);
    }

    #[test]
    fn odd_cycle_set_coloring_valid_for_small_s() {
        for s in 2..=6 {
            let sc = lemma5_set_coloring(s).unwrap();
            assert!(validate_set_coloring(&cycle(4 * s - 1).unwrap(), &sc).unwrap());
        }
        assert!(lemma5_set_coloring(1).is_err());
    }

    #[test]
    fn validation_examples() {
        let k2 = Graph::complete(2);
        let bad = SetColoring::new(vec![BTreeSet::from([1, 2]), BTreeSet::from([1, 2])], 2, 3);
        assert!(!validate_set_coloring(&k2, &bad).unwrap());
        let e3 = Graph::empty(3);
        let any = SetColoring::new(vec![BTreeSet::from([0, 1]); 3], 2, 2);
        assert!(validate_set_coloring(&e3, &any).unwrap());
        assert!(validate_set_coloring(&k2, &any).is_err());
    }

    #[test]
    fn set_chromatic_examples() {
        assert_eq!(set_chromatic_number(&Graph::complete(2), 2).unwrap(), 4);
        assert_eq!(set_chromatic_number(&cycle(7).unwrap(), 3).unwrap(), 7);
        assert_eq!(set_chromatic_number(&cycle(5).unwrap(), 1).unwrap(), 3);
    }
}
