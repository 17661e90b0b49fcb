//! Truncation: the union of the `a+b-1` smallest color classes of a member
//! of `F^χ(s, s; s+1)` is a member of `F^χ(a, b; s+1)`.

use crate::arrowing::{folkman_membership_with, ArrowSpec};
use crate::bitset::VertexSet;
use crate::constructions::{require_membership, verify_graph, ConstructionRecord, Part, VerifyConfig};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph};
use crate::invariants::{chromatic_number_with, Partition};

/// `out_order (2s-1) <= (a+b-1) source_order`.
pub fn theorem4_size_bound_holds(source_order: usize, out_order: usize, a: usize, b: usize, s: usize) -> bool {
    out_order * (2 * s - 1) <= (a + b - 1) * source_order
}

/// Induced subgraph of `g` on the first `a+b-1` classes of its canonical
/// `(2s-1)`-partition (ascending by size), verified to lie in
/// `F^χ(a, b; s+1)`.
pub fn theorem4_subgraph(g: &Graph, a: usize, b: usize, s: usize, config: &VerifyConfig) -> Result<ConstructionRecord> {
    if s < 2 || !(2..=s).contains(&a) || !(2..=s).contains(&b) {
        return Err(Error::param(format!("truncation needs 2 <= a, b <= s, got a={a}, b={b}, s={s}")));
    }
    let source = ArrowSpec::new(vec![s, s], s + 1)?;
    let cert = folkman_membership_with(g, &source, true, &config.limits)?;
    if !cert.is_member() {
        return Err(Error::contract(format!(
            "input is not in F^χ({s},{s};{}): {}",
            s + 1,
            cert.kind
        )));
    }
    let partition = Partition::from_coloring(&chromatic_number_with(g, &config.limits)?.coloring);
    let keep_classes = a + b - 1;
    let keep: VertexSet = partition.union_of_first(keep_classes);
    let out = induced_subgraph(g, &keep);

    // Vertex i of the output is the i-th smallest member of `keep`.
    let position: Vec<usize> = {
        let mut pos = vec![usize::MAX; g.order()];
        for (i, v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        pos
    };
    let parts = partition.classes()[..keep_classes]
        .iter()
        .enumerate()
        .map(|(i, class)| Part {
            name: format!("I{}", i + 1),
            vertices: class.iter().map(|v| position[v]).collect(),
        })
        .collect();

    let spec = ArrowSpec::new(vec![a, b], s + 1)?;
    let verification = verify_graph(&out, &spec, None, config)?;
    require_membership(&verification, &spec, "truncated graph")?;
    if !theorem4_size_bound_holds(g.order(), out.order(), a, b, s) {
        return Err(Error::construction(format!(
            "truncated order {} exceeds ({a}+{b}-1)/(2*{s}-1) of {}",
            out.order(),
            g.order()
        )));
    }
    let label = format!("trunc({a},{b})");
    Ok(ConstructionRecord {
        graph: out.with_label(label),
        spec,
        parts,
        classes: Vec::new(),
        verification,
    })
}
