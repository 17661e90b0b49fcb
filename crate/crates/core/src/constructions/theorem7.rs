//! Composition: `C_{4s-1}[H]` for `H ∈ F^χ(s, s; s+1)` lies in
//! `F^χ(2s, 2s; 2s+1)`.

use crate::arrowing::{folkman_membership_with, ArrowSpec};
use crate::constructions::{require_membership, verify_graph, ConstructionRecord, Part, VerifyConfig};
use crate::error::{Error, Result};
use crate::graph::{compose, cycle, Graph};
use crate::invariants::{chromatic_number_with, lemma5_set_coloring, Coloring, SetColoring};

/// Proper coloring of `g[h]` from a set coloring of `g` whose sets have at
/// least `χ(h)` colors: vertex `(u, v)` takes the `c(v)`-th smallest color
/// of the set of `u`.
pub fn composition_coloring(g: &Graph, h: &Graph, sets: &SetColoring, h_coloring: &Coloring) -> Result<Coloring> {
    if sets.sets().len() != g.order() || h_coloring.len() != h.order() || h_coloring.num_colors() > sets.r() {
        return Err(Error::param("set coloring does not fit the composition"));
    }
    let mut colors = Vec::with_capacity(g.order() * h.order());
    for u in 0..g.order() {
        let set: Vec<usize> = sets.set(u).iter().copied().collect();
        for v in 0..h.order() {
            colors.push(set[h_coloring.color(v)]);
        }
    }
    Coloring::new(colors, sets.k())
}

/// Builds `C_{4s-1}[h]` and verifies `cl = 2s` and `χ = 4s-1`.
pub fn theorem7_graph(h: &Graph, s: usize, config: &VerifyConfig) -> Result<ConstructionRecord> {
    if s < 2 {
        return Err(Error::param(format!("composition needs s >= 2, got {s}")));
    }
    let source = ArrowSpec::new(vec![s, s], s + 1)?;
    let cert = folkman_membership_with(h, &source, true, &config.limits)?;
    if !cert.is_member() {
        return Err(Error::contract(format!(
            "input is not in F^χ({s},{s};{}): {}",
            s + 1,
            cert.kind
        )));
    }
    let n = 4 * s - 1;
    let c = cycle(n)?;
    let g = compose(&c, h);
    let sets = lemma5_set_coloring(s)?;
    let h_coloring = chromatic_number_with(h, &config.limits)?.coloring;
    let explicit = composition_coloring(&c, h, &sets, &h_coloring)?;

    let spec = ArrowSpec::new(vec![2 * s, 2 * s], 2 * s + 1)?;
    let verification = verify_graph(&g, &spec, Some(&explicit), config)?;
    require_membership(&verification, &spec, "composed graph")?;
    if verification.clique_number != 2 * s {
        return Err(Error::construction(format!(
            "composed graph has clique number {}, expected {}",
            verification.clique_number,
            2 * s
        )));
    }
    let parts = (0..n)
        .map(|u| Part {
            name: format!("F{u}"),
            vertices: (u * h.order()..(u + 1) * h.order()).collect(),
        })
        .collect();
    let label = format!("C{n}[{}]", h.label().unwrap_or("H"));
    Ok(ConstructionRecord {
        graph: g.with_label(label),
        spec,
        parts,
        classes: Vec::new(),
        verification,
    })
}
