//! Brute-force reference implementations, written independently of the
//! library's search code. Only suitable for small graphs.

use folkman::Graph;

pub fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.order() <= 32);
    (0..g.order())
        .map(|u| (0..g.order()).filter(|&v| g.has_edge(u, v)).fold(0u32, |m, v| m | (1 << v)))
        .collect()
}

pub fn is_clique_mask(adj: &[u32], set: u32) -> bool {
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if set & !(1 << v) & !adj[v] != 0 {
            return false;
        }
    }
    true
}

pub fn is_independent_mask(adj: &[u32], set: u32) -> bool {
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & set != 0 {
            return false;
        }
    }
    true
}

/// Largest clique inside `within`, by enumerating its subsets.
pub fn clique_number_within(adj: &[u32], within: u32) -> usize {
    let mut best = 0;
    let mut sub = within;
    loop {
        if sub.count_ones() as usize > best && is_clique_mask(adj, sub) {
            best = sub.count_ones() as usize;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & within;
    }
    best
}

pub fn clique_number(g: &Graph) -> usize {
    let adj = masks(g);
    let all = if g.order() == 32 { u32::MAX } else { (1u32 << g.order()) - 1 };
    clique_number_within(&adj, all)
}

/// Minimum number of independent sets covering the vertices, by dynamic
/// programming over vertex subsets.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 16);
    let adj = masks(g);
    let full = (1usize << n) - 1;
    let independent: Vec<bool> = (0..=full).map(|s| is_independent_mask(&adj, s as u32)).collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        // Class containing the lowest vertex: low plus any subset of rest.
        let mut sub = rest;
        loop {
            let class = sub | low;
            if independent[class] && best[s & !class] != usize::MAX {
                best[s] = best[s].min(best[s & !class] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full]
}

/// Decides `g -> (a_1..a_r)^v` by trying all `r^n` colorings.
pub fn arrows(g: &Graph, a: &[usize]) -> bool {
    let n = g.order();
    let r = a.len();
    let adj = masks(g);
    let total = (r as u64).pow(n as u32);
    for code in 0..total {
        let mut classes = vec![0u32; r];
        let mut x = code;
        for v in 0..n {
            classes[(x % r as u64) as usize] |= 1 << v;
            x /= r as u64;
        }
        let avoids = (0..r).all(|i| clique_number_within(&adj, classes[i]) < a[i]);
        if avoids {
            return false;
        }
    }
    true
}
