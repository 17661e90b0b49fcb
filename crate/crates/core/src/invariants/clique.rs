//! Maximum clique by branch and bound with greedy-coloring upper bounds.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Greedy sequential coloring of `p`: returns vertices sorted by color and,
/// for each position, the number of colors used up to it. That number bounds
/// the clique size available among the vertices up to that position.
fn color_sort(g: &Graph, p: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    let mut uncolored = p.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(g.neighbors(v));
            uncolored.remove(v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

fn expand(g: &Graph, current: &mut Vec<usize>, mut p: VertexSet, best: &mut Vec<usize>) {
    let (order, bounds) = color_sort(g, &p);
    for i in (0..order.len()).rev() {
        if current.len() + bounds[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let next = p.intersection(g.neighbors(v));
        if next.is_empty() {
            if current.len() > best.len() {
                best.clone_from(current);
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        p.remove(v);
    }
}

/// Largest clique contained in `candidates`.
pub fn max_clique_in(g: &Graph, candidates: &VertexSet) -> VertexSet {
    let mut best = Vec::new();
    if !candidates.is_empty() {
        expand(g, &mut Vec::new(), candidates.clone(), &mut best);
    }
    VertexSet::from_members(g.order(), best)
}

/// Clique number with a witness clique of that size.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    let w = max_clique_in(g, &g.vertices());
    debug_assert!(g.is_clique(&w));
    (w.len(), w)
}

/// Finds some clique of exactly `k` vertices inside `candidates`.
pub fn find_clique_in(g: &Graph, candidates: &VertexSet, k: usize) -> Option<VertexSet> {
    let mut stack = Vec::with_capacity(k);
    if find_rec(g, candidates.clone(), k, &mut stack) {
        Some(VertexSet::from_members(g.order(), stack))
    } else {
        None
    }
}

fn find_rec(g: &Graph, mut cand: VertexSet, k: usize, stack: &mut Vec<usize>) -> bool {
    if k == 0 {
        return true;
    }
    while let Some(v) = cand.first() {
        if cand.len() < k {
            return false;
        }
        cand.remove(v);
        let next = cand.intersection(g.neighbors(v));
        if next.len() + 1 >= k {
            stack.push(v);
            if find_rec(g, next, k - 1, stack) {
                return true;
            }
            stack.pop();
        }
    }
    false
}

/// True if `candidates` contains a clique of `k` vertices.
pub fn has_clique_in(g: &Graph, candidates: &VertexSet, k: usize) -> bool {
    match k {
        0 => true,
        1 => !candidates.is_empty(),
        2 => candidates.iter().any(|v| g.neighbors(v).intersects(candidates)),
        _ => find_clique_in(g, candidates, k).is_some(),
    }
}

/// All `k`-cliques inside `candidates`, each as an ascending vertex list,
/// in lexicographic order.
pub fn cliques_of_size(g: &Graph, candidates: &VertexSet, k: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, mut cand: VertexSet, k: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(stack.clone());
            return;
        }
        while let Some(v) = cand.first() {
            cand.remove(v);
            let next = cand.intersection(g.neighbors(v));
            if next.len() + 1 >= k {
                stack.push(v);
                rec(g, next, k - 1, stack, out);
                stack.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, candidates.clone(), k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{compose, cycle, grotzsch, q_graph};

    #[test]
    fn complete_graph() {
        let (w, s) = clique_number(&Graph::complete(6));
        assert_eq!(w, 6);
        assert_eq!(s.len(), 6);
        assert_eq!(clique_number(&Graph::empty(0)).0, 0);
        assert_eq!(clique_number(&Graph::empty(3)).0, 1);
    }

    #[test]
    fn named_graphs() {
        assert_eq!(clique_number(&q_graph()).0, 4);
        assert_eq!(clique_number(&grotzsch()).0, 2);
        let g = compose(&cycle(7).unwrap(), &cycle(5).unwrap());
        let (w, s) = clique_number(&g);
        assert_eq!(w, 4);
        assert!(g.is_clique(&s));
    }

    #[test]
    fn fixed_size_search() {
        let q = q_graph();
        assert!(has_clique_in(&q, &q.vertices(), 4));
        assert!(!has_clique_in(&q, &q.vertices(), 5));
        let c5 = cycle(5).unwrap();
        assert_eq!(cliques_of_size(&c5, &c5.vertices(), 2).len(), 5);
        assert!(cliques_of_size(&c5, &c5.vertices(), 3).is_empty());
    }
}
