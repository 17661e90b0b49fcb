//! Randomized search for `K_{s+1}`-free subgraphs of `T_{n,2s-1}` that
//! arrow `(s, s)^v`.

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arrowing::arrows_with;
use crate::error::{Error, Result};
use crate::graph::{turan, Graph};
use crate::invariants::find_clique_in;
use crate::search::SearchLimits;

/// Repeatedly thins `T_{n,2s-1}` by deleting a random edge of some
/// `K_{s+1}` until none remain, then tests arrowing; restarts on failure.
/// Returns a verified witness, or `None` once `budget` search nodes are
/// spent. `None` proves nothing.
pub fn conjecture1_search(n: usize, s: usize, budget: u64, seed: u64) -> Result<Option<Graph>> {
    if s < 3 {
        return Err(Error::param(format!("conjecture search needs s >= 3, got {s}")));
    }
    let parts = 2 * s - 1;
    if n < parts {
        return Ok(None);
    }
    let base = turan(n, parts)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spent: u64 = 0;
    while spent < budget {
        let mut g = base.clone();
        while let Some(k) = find_clique_in(&g, &g.vertices(), s + 1) {
            spent += 1;
            let members = k.to_vec();
            let pairs: Vec<(usize, usize)> = members
                .iter()
                .enumerate()
                .flat_map(|(i, &u)| members[i + 1..].iter().map(move |&v| (u, v)))
                .collect();
            let &(u, v) = pairs.choose(&mut rng).expect("clique has an edge");
            g.remove_edge(u, v);
        }
        let limits = SearchLimits::unlimited().with_max_nodes(budget.saturating_sub(spent).max(1));
        match arrows_with(&g, &[s, s], &limits) {
            Ok(out) if out.arrows() => {
                return Ok(Some(g.with_label(format!("conj({n},{s})"))));
            }
            Ok(out) => spent += out.nodes().max(1),
            Err(Error::Indeterminate { .. }) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}
