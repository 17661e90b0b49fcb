//! Apex construction: replace a vertex `u0` of a minimal `(s,s;s+1)`
//! arrowing graph by apexes over `(2s-2)`-subsets of its neighbourhood,
//! producing an arrowing graph with a vertex of degree exactly `2s-2`.

use crate::arrowing::{arrows_with, is_edge_minimal_with, is_vertex_minimal_with, ArrowSpec};
use crate::bitset::VertexSet;
use crate::constructions::{Check, ConstructionRecord, Part, Verification, VerifyConfig};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph};
use crate::invariants::{chromatic_number_with, clique_number, cliques_of_size, has_clique_in};

#[derive(Clone, Debug)]
pub struct Theorem8Config {
    /// Upper limit on `C(deg(u0), 2s-2)` before enumeration is refused.
    pub max_subsets: u64,
    pub verify: VerifyConfig,
}

impl Default for Theorem8Config {
    fn default() -> Self {
        Theorem8Config {
            max_subsets: 100_000,
            verify: VerifyConfig::default(),
        }
    }
}

/// True iff `g[s]` contains two vertex-disjoint `k`-cliques.
pub fn two_disjoint_cliques(g: &Graph, s: &VertexSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    cliques_of_size(g, s, k).iter().any(|c| {
        let mut rest = s.clone();
        for &v in c {
            rest.remove(v);
        }
        has_clique_in(g, &rest, k)
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// All `(2s-2)`-subsets of `N(u0)`, in lexicographic order, that contain two
/// vertex-disjoint `K_{s-1}`.
pub fn apex_sets(h: &Graph, s: usize, u0: usize, max_subsets: u64) -> Result<Vec<VertexSet>> {
    if s < 3 {
        return Err(Error::param(format!("apex construction needs s >= 3, got {s}")));
    }
    if u0 >= h.order() {
        return Err(Error::param(format!("u0 = {u0} is not a vertex of a graph of order {}", h.order())));
    }
    let nbrs = h.neighbors(u0).to_vec();
    let k = 2 * s - 2;
    let total = binomial(nbrs.len() as u64, k as u64);
    if total > max_subsets {
        return Err(Error::param(format!(
            "C({}, {k}) = {total} neighbourhood subsets exceeds the cap of {max_subsets}",
            nbrs.len()
        )));
    }
    let mut out = Vec::new();
    if nbrs.len() < k {
        return Ok(out);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let set = VertexSet::from_members(h.order(), idx.iter().map(|&i| nbrs[i]));
        if two_disjoint_cliques(h, &set, s - 1) {
            out.push(set);
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < nbrs.len() - k + i) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(out)
}

/// `H'`: `h - u0` relabelled ascending, followed by one apex per set.
pub fn apex_extension(h: &Graph, u0: usize, sets: &[VertexSet]) -> Graph {
    let core = h.without_vertex(u0);
    let n = core.order();
    let mut g = Graph::empty(n + sets.len());
    for (u, v) in core.edges() {
        g.add_edge(u, v);
    }
    for (i, set) in sets.iter().enumerate() {
        for v in set.iter() {
            g.add_edge(n + i, if v > u0 { v - 1 } else { v });
        }
    }
    g
}

fn budgeted(result: Result<bool>, unverified: &mut Vec<String>, what: &str) -> Result<Option<bool>> {
    match result {
        Ok(b) => Ok(Some(b)),
        Err(Error::Indeterminate { nodes }) => {
            unverified.push(format!("{what}: budget exhausted after {nodes} nodes"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Runs the apex construction on a vertex- and edge-minimal `h` in
/// `F_v(s, s; s+1)`, greedily discarding apexes in ascending order while
/// arrowing survives.
pub fn theorem8_construction(h: &Graph, s: usize, u0: usize, config: &Theorem8Config) -> Result<ConstructionRecord> {
    let limits = &config.verify.limits;
    let a = [s, s];
    let spec = ArrowSpec::new(a.to_vec(), s + 1)?;
    if u0 >= h.order() {
        return Err(Error::param(format!("u0 = {u0} is not a vertex of a graph of order {}", h.order())));
    }
    if has_clique_in(h, &h.vertices(), s + 1) {
        return Err(Error::contract(format!("input contains K{}", s + 1)));
    }
    if !arrows_with(h, &a, limits)?.arrows() {
        return Err(Error::contract(format!("input does not arrow ({s},{s})")));
    }
    if !is_vertex_minimal_with(h, &a, limits)?.0 || !is_edge_minimal_with(h, &a, limits)?.0 {
        return Err(Error::contract("input is not vertex- and edge-minimal"));
    }

    let sets = apex_sets(h, s, u0, config.max_subsets)?;
    if sets.is_empty() {
        return Err(Error::construction(format!(
            "no (2s-2)-subset of N({u0}) contains two disjoint K{}",
            s - 1
        )));
    }
    let extended = apex_extension(h, u0, &sets);
    let n_core = h.order() - 1;
    let mut unverified = Vec::new();
    if budgeted(arrows_with(&extended, &a, limits).map(|o| o.arrows()), &mut unverified, "H'")? == Some(false) {
        return Err(Error::construction("apex extension does not arrow"));
    }

    let mut keep = extended.vertices();
    for i in 0..sets.len() {
        let apex = n_core + i;
        keep.remove(apex);
        let trial = induced_subgraph(&extended, &keep);
        let what = format!("removal of apex {i}");
        match budgeted(arrows_with(&trial, &a, limits).map(|o| o.arrows()), &mut unverified, &what)? {
            Some(true) => {}
            _ => {
                keep.insert(apex);
            }
        }
    }
    let g = induced_subgraph(&extended, &keep);
    let apexes: Vec<usize> = (n_core..g.order()).collect();
    if apexes.is_empty() {
        return Err(Error::construction("every apex was discarded"));
    }
    if !apexes.iter().any(|&x| g.degree(x) == 2 * s - 2) {
        return Err(Error::construction(format!("no apex of degree {}", 2 * s - 2)));
    }
    let (omega, _) = clique_number(&g);
    if omega > s {
        return Err(Error::construction(format!("output contains K{}", s + 1)));
    }
    let chromatic_number = match chromatic_number_with(&g, limits) {
        Ok(r) => Some(r.chi),
        Err(Error::Indeterminate { .. }) => None,
        Err(e) => return Err(e),
    };
    let arrowing = if unverified.is_empty() {
        Check::Verified
    } else {
        Check::Unverified(unverified.join("; "))
    };
    let parts = vec![
        Part {
            name: "core".to_string(),
            vertices: (0..n_core).collect(),
        },
        Part {
            name: "apex".to_string(),
            vertices: apexes,
        },
    ];
    Ok(ConstructionRecord {
        graph: g.with_label(format!("apex({s})")),
        spec,
        parts,
        classes: Vec::new(),
        verification: Verification {
            clique_number: omega,
            chromatic_number,
            chromatic_upper_bound: None,
            arrowing,
        },
    })
}

/// Lowest-index vertex of maximum degree.
pub fn max_degree_vertex(g: &Graph) -> Option<usize> {
    let d = g.max_degree()?;
    (0..g.order()).find(|&v| g.degree(v) == d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn disjoint_cliques() {
        let k4 = Graph::complete(4);
        assert!(two_disjoint_cliques(&k4, &k4.vertices(), 2));
        let c5 = cycle(5).unwrap();
        assert!(two_disjoint_cliques(&c5, &c5.vertices(), 2));
        assert!(!two_disjoint_cliques(&c5, &c5.vertices(), 3));
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(!two_disjoint_cliques(&star, &star.vertices(), 2));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(15, 4), 1365);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(200, 100), u64::MAX);
    }

    #[test]
    fn apex_sets_are_lexicographic_and_capped() {
        let k5 = Graph::complete(5);
        let sets = apex_sets(&k5, 3, 0, 100).unwrap();
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].to_vec(), vec![1, 2, 3, 4]);
        assert!(matches!(apex_sets(&k5, 3, 0, 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn extension_core_is_h_minus_u0() {
        let h = cycle(5).unwrap();
        let sets = vec![VertexSet::from_members(5, [1, 4])];
        let ext = apex_extension(&h, 0, &sets);
        let core = induced_subgraph(&ext, &VertexSet::from_members(5, 0..4));
        assert_eq!(core, h.without_vertex(0));
        assert_eq!(ext.neighbors(4).to_vec(), vec![0, 3]);
    }

    #[test]
    fn rejects_non_minimal_input() {
        let k5 = Graph::complete(5);
        assert!(matches!(
            theorem8_construction(&k5, 3, 0, &Theorem8Config::default()),
            Err(Error::Contract(_))
        ));
    }
}
