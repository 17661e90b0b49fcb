//! Exact chromatic number.
//!
//! `k`-colorability is decided by DSATUR-style backtracking: the most
//! saturated vertex is branched on, over every feasible used color plus at
//! most one new color. A maximum clique is precolored first. Members of a
//! true-twin class (equal closed neighbourhoods) are colored as one
//! consecutive block with increasing colors, which removes the `|T|!`
//! relabellings such a block otherwise produces. Before searching, any
//! proper non-clique module is collapsed to a clique of its own chromatic
//! number, recursively.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph};
use crate::invariants::clique::clique_number;
use crate::search::{Meter, SearchLimits, SharedBudget, Stop};

/// A total map from vertices to colors `0..num_colors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, num_colors: usize) -> Result<Self> {
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c >= num_colors) {
            return Err(Error::param(format!(
                "vertex {v} has color {c}, outside 0..{num_colors}"
            )));
        }
        Ok(Coloring { colors, num_colors })
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Vertex set of each color, indexed by color.
    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.colors.len();
        let mut classes = vec![VertexSet::new(n); self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].insert(v);
        }
        classes
    }
}

/// Independent classes covering `V`, ordered by ascending size with ties
/// broken by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<VertexSet>,
}

impl Partition {
    /// Classes of `coloring`, empty ones dropped, in canonical order.
    pub fn from_coloring(coloring: &Coloring) -> Self {
        let mut classes: Vec<VertexSet> = coloring.classes().into_iter().filter(|c| !c.is_empty()).collect();
        classes.sort_by_key(|c| (c.len(), c.first()));
        Partition { classes }
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(VertexSet::len).collect()
    }

    /// Union of the first `k` classes.
    pub fn union_of_first(&self, k: usize) -> VertexSet {
        let n = self.classes.first().map_or(0, VertexSet::universe);
        let mut s = VertexSet::new(n);
        for c in self.classes.iter().take(k) {
            s.union_with(c);
        }
        s
    }

    /// Disjoint, covering, independent, nonempty and ascending in `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new(g.order());
        for c in &self.classes {
            if c.universe() != g.order() || c.is_empty() || c.intersects(&seen) || !g.is_independent(c) {
                return false;
            }
            seen.union_with(c);
        }
        let ascending = self
            .classes
            .windows(2)
            .all(|w| (w[0].len(), w[0].first()) < (w[1].len(), w[1].first()));
        seen.len() == g.order() && ascending
    }
}

/// Outcome of an exact chromatic number computation.
#[derive(Clone, Debug)]
pub struct ChromaticResult {
    pub chi: usize,
    pub coloring: Coloring,
    /// Search nodes spent refuting smaller color counts.
    pub nodes: u64,
}

const NONE: usize = usize::MAX;

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    /// `counts[v * k + c]`: colored neighbours of `v` holding color `c`.
    counts: Vec<u32>,
    saturation: Vec<usize>,
    class_size: Vec<usize>,
    used: usize,
    uncolored: usize,
    dead: usize,
    twin_class: Vec<usize>,
    twins: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.order();
        let (twin_class, twins) = true_twin_classes(g);
        Dsatur {
            g,
            k,
            color: vec![NONE; n],
            counts: vec![0; n * k],
            saturation: vec![0; n],
            class_size: vec![0; k],
            used: 0,
            uncolored: n,
            dead: 0,
            twin_class,
            twins,
            degree: (0..n).map(|v| g.degree(v)).collect(),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.uncolored -= 1;
        self.class_size[c] += 1;
        if c == self.used {
            self.used += 1;
        }
        for u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.saturation[u] += 1;
                if self.saturation[u] == self.k && self.color[u] == NONE {
                    self.dead += 1;
                }
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        for u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                if self.saturation[u] == self.k && self.color[u] == NONE {
                    self.dead -= 1;
                }
                self.saturation[u] -= 1;
            }
        }
        self.class_size[c] -= 1;
        if self.class_size[c] == 0 && c + 1 == self.used {
            self.used -= 1;
        }
        self.color[v] = NONE;
        self.uncolored += 1;
    }

    fn select(&self) -> usize {
        let mut best = NONE;
        for v in 0..self.color.len() {
            if self.color[v] != NONE {
                continue;
            }
            if best == NONE
                || (self.saturation[v], self.degree[v]) > (self.saturation[best], self.degree[best])
            {
                best = v;
            }
        }
        best
    }

    /// `block`: pending twin block as (next vertex, minimum color).
    fn search(&mut self, meter: &mut Meter<'_>, block: Option<(usize, usize)>) -> Result<bool, Stop> {
        if self.uncolored == 0 {
            return Ok(true);
        }
        if self.dead > 0 {
            return Ok(false);
        }
        let (v, min_color) = block.unwrap_or_else(|| (self.select(), 0));
        let limit = (self.used + 1).min(self.k);
        for c in min_color..limit {
            if self.counts[v * self.k + c] != 0 {
                continue;
            }
            meter.tick()?;
            self.assign(v, c);
            let next = self.twins[self.twin_class[v]]
                .iter()
                .copied()
                .find(|&u| self.color[u] == NONE)
                .map(|u| (u, c + 1));
            let found = self.search(meter, next)?;
            if found {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// Groups vertices with identical closed neighbourhoods.
fn true_twin_classes(g: &Graph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = g.order();
    let closed: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut s = g.neighbors(v).clone();
            s.insert(v);
            s
        })
        .collect();
    let mut class = vec![NONE; n];
    let mut twins: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class[v] != NONE {
            continue;
        }
        let id = twins.len();
        let members: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&u| u > v && closed[u] == closed[v])
            .collect();
        class[v] = id;
        let mut all = vec![v];
        for u in members {
            class[u] = id;
            all.push(u);
        }
        twins.push(all);
    }
    (class, twins)
}

fn run_k_colorable(g: &Graph, k: usize, clique: &VertexSet, meter: &mut Meter<'_>) -> Result<Option<Coloring>, Stop> {
    let n = g.order();
    if n == 0 {
        return Ok(Some(Coloring { colors: vec![], num_colors: k }));
    }
    if k == 0 || clique.len() > k {
        return Ok(None);
    }
    let mut d = Dsatur::new(g, k);
    for (c, v) in clique.iter().enumerate() {
        d.assign(v, c);
    }
    // The precolored clique may split a twin class; finish it as a block.
    let block = clique.iter().find_map(|v| {
        let members = &d.twins[d.twin_class[v]];
        members
            .iter()
            .copied()
            .find(|&u| d.color[u] == NONE)
            .map(|u| (u, members.iter().filter(|&&w| d.color[w] != NONE).map(|&w| d.color[w]).max().unwrap_or(0) + 1))
    });
    if d.search(meter, block)? {
        let coloring = Coloring {
            colors: d.color,
            num_colors: k,
        };
        debug_assert!(coloring.is_proper(g));
        Ok(Some(coloring))
    } else {
        Ok(None)
    }
}

/// Decides whether `g` has a proper `k`-coloring.
pub fn k_coloring(g: &Graph, k: usize, limits: &SearchLimits) -> Result<Option<Coloring>> {
    let (_, clique) = clique_number(g);
    let shared = SharedBudget::new(limits);
    let mut meter = Meter::new(&shared);
    run_k_colorable(g, k, &clique, &mut meter).map_err(|_| shared.exhausted_error())
}

/// Greedy DSATUR coloring; an upper bound only.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.order();
    let k = n.max(1);
    let mut d = Dsatur::new(g, k);
    for _ in 0..n {
        let v = d.select();
        let c = (0..k).find(|&c| d.counts[v * k + c] == 0).expect("n colors always suffice");
        d.assign(v, c);
    }
    let num = d.used.max(if n == 0 { 0 } else { 1 });
    Coloring {
        colors: d.color,
        num_colors: num,
    }
}

/// Smallest module (set with no outside vertex adjacent to only part of
/// it) containing `u` and `v`.
fn module_closure(g: &Graph, u: usize, v: usize) -> VertexSet {
    let mut module = VertexSet::from_members(g.order(), [u, v]);
    let mut common = g.neighbors(u).intersection(g.neighbors(v));
    let mut any = g.neighbors(u).union(g.neighbors(v));
    loop {
        let mut mixed = any.difference(&common);
        mixed.difference_with(&module);
        if mixed.is_empty() {
            return module;
        }
        for x in mixed.iter() {
            common.intersect_with(g.neighbors(x));
            any.union_with(g.neighbors(x));
            module.insert(x);
        }
    }
}

/// A smallest proper module that is not a clique, if any.
fn find_module(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    let mut best: Option<VertexSet> = None;
    for u in 0..n {
        for v in u + 1..n {
            let m = module_closure(g, u, v);
            if m.len() == n || g.is_clique(&m) || best.as_ref().is_some_and(|b| b.len() <= m.len()) {
                continue;
            }
            if m.len() == 2 {
                return Some(m);
            }
            best = Some(m);
        }
    }
    best
}

/// Replacing a module `M` by a clique of order `χ(G[M])` preserves `χ`;
/// an optimal coloring of the reduced graph expands back along an optimal
/// coloring of `G[M]`.
fn chromatic_rec(g: &Graph, meter: &mut Meter<'_>) -> Result<Coloring, Stop> {
    if let Some(module) = find_module(g) {
        let inner = chromatic_rec(&induced_subgraph(g, &module), meter)?;
        let k = inner.num_colors;
        let outside = module.complement();
        let mut position = vec![NONE; g.order()];
        for (i, v) in outside.iter().enumerate() {
            position[v] = i;
        }
        let n_out = outside.len();
        let mut reduced = Graph::empty(n_out + k);
        for (u, v) in g.edges() {
            if position[u] != NONE && position[v] != NONE {
                reduced.add_edge(position[u], position[v]);
            }
        }
        let rep = module.first().expect("module is nonempty");
        let attach = g.neighbors(rep).difference(&module);
        for i in 0..k {
            for j in i + 1..k {
                reduced.add_edge(n_out + i, n_out + j);
            }
            for x in attach.iter() {
                reduced.add_edge(n_out + i, position[x]);
            }
        }
        let outer = chromatic_rec(&reduced, meter)?;
        let mut colors = vec![0; g.order()];
        for v in outside.iter() {
            colors[v] = outer.colors[position[v]];
        }
        for (i, v) in module.iter().enumerate() {
            colors[v] = outer.colors[n_out + inner.colors[i]];
        }
        return Ok(Coloring {
            colors,
            num_colors: outer.num_colors,
        });
    }
    let (omega, clique) = clique_number(g);
    let upper = greedy_coloring(g);
    for k in omega..upper.num_colors() {
        if let Some(coloring) = run_k_colorable(g, k, &clique, meter)? {
            return Ok(coloring);
        }
    }
    Ok(upper)
}

/// Exact chromatic number under `limits`.
pub fn chromatic_number_with(g: &Graph, limits: &SearchLimits) -> Result<ChromaticResult> {
    let shared = SharedBudget::new(limits);
    let mut meter = Meter::new(&shared);
    let coloring = chromatic_rec(g, &mut meter).map_err(|_| shared.exhausted_error())?;
    assert!(coloring.is_proper(g), "chromatic witness is not proper");
    Ok(ChromaticResult {
        chi: coloring.num_colors,
        coloring,
        nodes: meter.local,
    })
}

/// Exact chromatic number with a witness coloring using exactly `chi` colors.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    let r = chromatic_number_with(g, &SearchLimits::unlimited()).expect("unlimited search cannot run out of budget");
    (r.chi, r.coloring)
}

/// Partition into exactly `χ(g)` independent classes in canonical order.
pub fn chromatic_partition(g: &Graph) -> Partition {
    Partition::from_coloring(&chromatic_number(g).1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{compose, cycle, grotzsch, q_graph, turan};

    #[test]
    fn module_closure_finds_fibers() {
        let g = compose(&cycle(7).unwrap(), &cycle(5).unwrap());
        assert_eq!(module_closure(&g, 0, 2).to_vec(), (0..5).collect::<Vec<_>>());
        assert_eq!(find_module(&g).unwrap().len(), 5);
        assert!(find_module(&cycle(5).unwrap()).is_none());
        assert!(find_module(&Graph::complete(4)).is_none());
    }

    #[test]
    fn composition_of_odd_cycles() {
        let g = compose(&cycle(7).unwrap(), &cycle(5).unwrap());
        let (chi, coloring) = chromatic_number(&g);
        assert_eq!(chi, 7);
        assert!(coloring.is_proper(&g));
        assert_eq!(coloring.num_colors(), 7);
    }

    #[test]
    fn small_named_graphs() {
        assert_eq!(chromatic_number(&cycle(5).unwrap()).0, 3);
        assert_eq!(chromatic_number(&cycle(6).unwrap()).0, 2);
        assert_eq!(chromatic_number(&Graph::complete(4)).0, 4);
        assert_eq!(chromatic_number(&Graph::empty(3)).0, 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).0, 0);
        assert_eq!(chromatic_number(&grotzsch()).0, 4);
    }

    #[test]
    fn q_has_chromatic_number_seven() {
        let (chi, c) = chromatic_number(&q_graph());
        assert_eq!(chi, 7);
        assert!(c.is_proper(&q_graph()));
        assert_eq!(c.num_colors(), 7);
    }

    #[test]
    fn turan_is_r_chromatic() {
        assert_eq!(chromatic_number(&turan(7, 3).unwrap()).0, 3);
        assert_eq!(chromatic_number(&turan(9, 4).unwrap()).0, 4);
    }

    #[test]
    fn twin_blocks_on_odd_cycle_compositions() {
        let g = compose(&cycle(7).unwrap(), &Graph::complete(3));
        assert_eq!(chromatic_number(&g).0, 7);
        let g = compose(&cycle(5).unwrap(), &Graph::complete(2));
        assert_eq!(chromatic_number(&g).0, 5);
    }

    #[test]
    fn partitions() {
        assert_eq!(chromatic_partition(&Graph::complete(3)).sizes(), vec![1, 1, 1]);
        let c5 = cycle(5).unwrap();
        let p = chromatic_partition(&c5);
        assert_eq!(p.sizes(), vec![1, 2, 2]);
        assert!(p.is_valid_for(&c5));
        let q = q_graph();
        let p = chromatic_partition(&q);
        assert_eq!(p.len(), 7);
        assert_eq!(p.sizes().iter().sum::<usize>(), 13);
        assert!(p.is_valid_for(&q));
    }

    #[test]
    fn budget_is_reported() {
        let g = compose(&cycle(7).unwrap(), &cycle(5).unwrap());
        let err = chromatic_number_with(&g, &SearchLimits::unlimited().with_max_nodes(5)).unwrap_err();
        assert!(matches!(err, Error::Indeterminate { .. }));
    }

    #[test]
    fn coloring_rejects_out_of_range() {
        assert!(Coloring::new(vec![0, 2], 2).is_err());
    }
}
