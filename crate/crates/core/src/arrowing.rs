//! Exact decision of vertex arrowing `G -> (a_1, ..., a_r)^v`, Folkman-set
//! membership, and arrowing-criticality.
//!
//! The search colors vertices one at a time. For every color `c` it keeps the
//! set of uncolored vertices that can no longer take `c` because their
//! neighbourhood inside class `c` already holds a `K_{a_c - 1}`. That set only
//! grows when a neighbour `w` joins class `c`, and then exactly when
//! `N(u) ∩ N(w) ∩ class(c)` holds a `K_{a_c - 2}`, so it is maintained
//! incrementally with an undo trail. A vertex with every color blocked is a
//! dead end; vertices with a single open color are branched on first.
//!
//! Colors with equal clique targets are interchangeable, so an unused color is
//! only opened when it is the lowest unused one of its group.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use crate::bitset::VertexSet;
use crate::certificate::{Certificate, CertificateKind, Witness};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph};
use crate::graph6::to_graph6;
use crate::invariants::{chromatic_number_with, clique_number, has_clique_in, max_clique_in, Coloring};
use crate::search::{Meter, SearchLimits, SharedBudget, Stop};

/// The parameters `(a_1, ..., a_r; s)` of a vertex Folkman set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowSpec {
    a: Vec<usize>,
    s: usize,
}

impl ArrowSpec {
    pub fn new(a: Vec<usize>, s: usize) -> Result<Self> {
        validate_targets(&a)?;
        let max = *a.iter().max().expect("validated nonempty");
        if s <= max {
            return Err(Error::param(format!("forbidden clique size s = {s} must exceed max a_i = {max}")));
        }
        Ok(ArrowSpec { a, s })
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn colors(&self) -> usize {
        self.a.len()
    }

    /// `m = 1 + Σ (a_i - 1)`, the least chromatic number of an arrowing graph.
    pub fn m(&self) -> usize {
        min_chromatic(&self.a)
    }
}

pub(crate) fn min_chromatic(a: &[usize]) -> usize {
    1 + a.iter().map(|&x| x - 1).sum::<usize>()
}

fn validate_targets(a: &[usize]) -> Result<()> {
    if a.is_empty() {
        return Err(Error::param("arrowing needs at least one color"));
    }
    if let Some(&x) = a.iter().find(|&&x| x < 2) {
        return Err(Error::param(format!("clique targets must be >= 2, got {x}")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrowOutcome {
    /// Every coloring contains a forced monochromatic clique.
    Arrows { nodes: u64 },
    /// A coloring with no `K_{a_i}` in any color `i`.
    NotArrows { witness: Coloring, nodes: u64 },
}

impl ArrowOutcome {
    pub fn arrows(&self) -> bool {
        matches!(self, ArrowOutcome::Arrows { .. })
    }

    pub fn nodes(&self) -> u64 {
        match self {
            ArrowOutcome::Arrows { nodes } | ArrowOutcome::NotArrows { nodes, .. } => *nodes,
        }
    }

    pub fn witness(&self) -> Option<&Coloring> {
        match self {
            ArrowOutcome::Arrows { .. } => None,
            ArrowOutcome::NotArrows { witness, .. } => Some(witness),
        }
    }
}

/// Independent check that `coloring` has no `K_{a_i}` inside color class `i`.
pub fn is_avoiding_coloring(g: &Graph, a: &[usize], coloring: &Coloring) -> bool {
    coloring.len() == g.order()
        && coloring.num_colors() <= a.len()
        && coloring
            .classes()
            .iter()
            .zip(a)
            .all(|(class, &target)| max_clique_in(g, class).len() < target)
}

const NONE: usize = usize::MAX;

/// Search state over a graph relabelled so that the static branching order
/// (descending degree, then index) is ascending vertex index.
#[derive(Clone)]
struct ArrowSearch<'g> {
    g: &'g Graph,
    a: &'g [usize],
    /// `group_first[c]`: lowest color with the same target as `c`.
    group_first: Vec<usize>,
    class: Vec<VertexSet>,
    blocked: Vec<VertexSet>,
    uncolored: VertexSet,
    color: Vec<usize>,
    trail: Vec<(usize, usize)>,
    scratch: VertexSet,
}

impl<'g> ArrowSearch<'g> {
    fn new(g: &'g Graph, a: &'g [usize]) -> Self {
        let n = g.order();
        let r = a.len();
        let group_first = (0..r).map(|c| (0..=c).find(|&d| a[d] == a[c]).unwrap()).collect();
        ArrowSearch {
            g,
            a,
            group_first,
            class: vec![VertexSet::new(n); r],
            blocked: vec![VertexSet::new(n); r],
            uncolored: VertexSet::full(n),
            color: vec![NONE; n],
            trail: Vec::new(),
            scratch: VertexSet::new(n),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        let need = self.a[c] - 2;
        let mut candidates = self.g.neighbors(v).intersection(&self.uncolored);
        candidates.difference_with(&self.blocked[c]);
        for u in candidates.iter() {
            let block = match need {
                0 => true,
                _ => {
                    self.g.neighbors(u).intersection_into(self.g.neighbors(v), &mut self.scratch);
                    self.scratch.intersect_with(&self.class[c]);
                    has_clique_in(self.g, &self.scratch, need)
                }
            };
            if block {
                self.blocked[c].insert(u);
                self.trail.push((c, u));
            }
        }
        self.class[c].insert(v);
        self.uncolored.remove(v);
        self.color[v] = c;
    }

    fn unassign(&mut self, v: usize, mark: usize) {
        for (c, u) in self.trail.drain(mark..) {
            self.blocked[c].remove(u);
        }
        let c = self.color[v];
        self.class[c].remove(v);
        self.uncolored.insert(v);
        self.color[v] = NONE;
    }

    fn open_colors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.a.len()).filter(move |&c| {
            if self.blocked[c].contains(v) {
                return false;
            }
            if !self.class[c].is_empty() {
                return true;
            }
            let first = self.group_first[c];
            (first..c).all(|d| self.a[d] != self.a[c] || !self.class[d].is_empty())
        })
    }

    fn has_dead_vertex(&self) -> bool {
        let mut dead = self.uncolored.clone();
        for b in &self.blocked {
            dead.intersect_with(b);
            if dead.is_empty() {
                return false;
            }
        }
        true
    }

    fn select(&self) -> usize {
        let r = self.a.len();
        if r == 1 {
            return self.uncolored.first().unwrap();
        }
        if r == 2 {
            // Exactly one of the two colors blocked.
            let mut forced = self.blocked[0].union(&self.blocked[1]);
            let both = self.blocked[0].intersection(&self.blocked[1]);
            forced.difference_with(&both);
            forced.intersect_with(&self.uncolored);
            return forced.first().or_else(|| self.uncolored.first()).unwrap();
        }
        let mut best = NONE;
        let mut best_open = usize::MAX;
        for v in self.uncolored.iter() {
            let open = self.blocked.iter().filter(|b| !b.contains(v)).count();
            if open < best_open {
                best = v;
                best_open = open;
                if open <= 1 {
                    break;
                }
            }
        }
        best
    }

    /// Depth-first search for an avoiding coloring.
    fn dfs(&mut self, meter: &mut Meter<'_>) -> Result<bool, Stop> {
        if self.uncolored.is_empty() {
            return Ok(true);
        }
        if self.has_dead_vertex() {
            return Ok(false);
        }
        let v = self.select();
        let colors: Vec<usize> = self.open_colors(v).collect();
        for c in colors {
            meter.tick()?;
            let mark = self.trail.len();
            self.assign(v, c);
            if self.dfs(meter)? {
                return Ok(true);
            }
            self.unassign(v, mark);
        }
        Ok(false)
    }

    /// Prefixes of the search tree at `depth`, in depth-first order. A
    /// complete coloring found above `depth` is emitted as a shorter prefix.
    fn frontier(&mut self, depth: usize, prefix: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>, nodes: &mut u64) {
        if depth == 0 || self.uncolored.is_empty() {
            out.push(prefix.clone());
            return;
        }
        if self.has_dead_vertex() {
            return;
        }
        let v = self.select();
        let colors: Vec<usize> = self.open_colors(v).collect();
        for c in colors {
            *nodes += 1;
            let mark = self.trail.len();
            self.assign(v, c);
            prefix.push((v, c));
            self.frontier(depth - 1, prefix, out, nodes);
            prefix.pop();
            self.unassign(v, mark);
        }
    }

    fn coloring(&self) -> Vec<usize> {
        self.color.clone()
    }
}

/// Relabelling that puts vertices in descending-degree order.
fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn relabel(g: &Graph, order: &[usize]) -> Graph {
    let mut position = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut h = Graph::empty(g.order());
    for (u, v) in g.edges() {
        h.add_edge(position[u], position[v]);
    }
    h
}

enum TaskResult {
    Found(Vec<usize>, u64),
    Exhausted(u64),
    Skipped,
}

fn search_parallel(base: &ArrowSearch<'_>, shared: &SharedBudget, workers: usize) -> Result<(Option<Vec<usize>>, u64)> {
    let mut frontier = Vec::new();
    let mut frontier_nodes = 0;
    let target = 4 * workers;
    for depth in 1..=base.g.order().min(24) {
        frontier.clear();
        frontier_nodes = 0;
        base.clone().frontier(depth, &mut Vec::new(), &mut frontier, &mut frontier_nodes);
        if frontier.len() >= target || frontier.iter().any(|p| p.len() < depth) {
            break;
        }
    }
    let next = AtomicUsize::new(0);
    let winner = AtomicUsize::new(usize::MAX);
    let results: Mutex<Vec<Option<TaskResult>>> = Mutex::new((0..frontier.len()).map(|_| None).collect());
    let budget_hit = std::sync::atomic::AtomicBool::new(false);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= frontier.len() {
                    break;
                }
                if i > winner.load(Ordering::SeqCst) || budget_hit.load(Ordering::SeqCst) {
                    results.lock().unwrap()[i] = Some(TaskResult::Skipped);
                    continue;
                }
                let cancel = || i > winner.load(Ordering::Relaxed);
                let mut meter = Meter::new(shared).with_cancel(&cancel);
                let mut state = base.clone();
                for &(v, c) in &frontier[i] {
                    state.assign(v, c);
                }
                let outcome = match state.dfs(&mut meter) {
                    Ok(true) => {
                        winner.fetch_min(i, Ordering::SeqCst);
                        TaskResult::Found(state.coloring(), meter.local)
                    }
                    Ok(false) => TaskResult::Exhausted(meter.local),
                    Err(Stop::Cancelled) => TaskResult::Skipped,
                    Err(Stop::Budget) => {
                        budget_hit.store(true, Ordering::SeqCst);
                        TaskResult::Skipped
                    }
                };
                results.lock().unwrap()[i] = Some(outcome);
            });
        }
    });
    let results = results.into_inner().unwrap();
    let mut nodes = frontier_nodes;
    for r in results {
        match r {
            Some(TaskResult::Found(coloring, n)) => return Ok((Some(coloring), nodes + n)),
            Some(TaskResult::Exhausted(n)) => nodes += n,
            _ => return Err(shared.exhausted_error()),
        }
    }
    Ok((None, nodes))
}

/// Runs the backtracking search directly, without the all-2 reduction.
pub fn arrows_by_search(g: &Graph, a: &[usize], limits: &SearchLimits) -> Result<ArrowOutcome> {
    validate_targets(a)?;
    let order = branching_order(g);
    let h = relabel(g, &order);
    let shared = SharedBudget::new(limits);
    let base = ArrowSearch::new(&h, a);
    let (found, nodes) = if limits.workers > 1 && h.order() > 1 {
        search_parallel(&base, &shared, limits.workers)?
    } else {
        let mut state = base;
        let mut meter = Meter::new(&shared);
        match state.dfs(&mut meter) {
            Ok(true) => (Some(state.coloring()), meter.local),
            Ok(false) => (None, meter.local),
            Err(_) => return Err(shared.exhausted_error()),
        }
    };
    match found {
        None => Ok(ArrowOutcome::Arrows { nodes }),
        Some(internal) => {
            let mut colors = vec![0; g.order()];
            for (i, &v) in order.iter().enumerate() {
                colors[v] = internal[i];
            }
            let witness = Coloring::new(colors, a.len())?;
            assert!(
                is_avoiding_coloring(g, a, &witness),
                "arrowing search produced an invalid witness"
            );
            Ok(ArrowOutcome::NotArrows { witness, nodes })
        }
    }
}

/// Decides `g -> (a_1, ..., a_r)^v` under `limits`.
///
/// When every target is 2 the question is whether `χ(g) > r`, answered by the
/// exact chromatic solver.
pub fn arrows_with(g: &Graph, a: &[usize], limits: &SearchLimits) -> Result<ArrowOutcome> {
    validate_targets(a)?;
    if a.iter().all(|&x| x == 2) {
        let r = a.len();
        let chi = chromatic_number_with(g, limits)?;
        return Ok(if chi.chi > r {
            ArrowOutcome::Arrows { nodes: chi.nodes }
        } else {
            let witness = Coloring::new(chi.coloring.colors().to_vec(), r)?;
            debug_assert!(is_avoiding_coloring(g, a, &witness));
            ArrowOutcome::NotArrows {
                witness,
                nodes: chi.nodes,
            }
        });
    }
    arrows_by_search(g, a, limits)
}

pub fn arrows(g: &Graph, a: &[usize]) -> Result<ArrowOutcome> {
    arrows_with(g, a, &SearchLimits::unlimited())
}

fn arrows_bool(g: &Graph, a: &[usize], limits: &SearchLimits) -> Result<bool> {
    Ok(arrows_with(g, a, limits)?.arrows())
}

/// Checks `cl(g) < s`, arrowing, and (when `chromatic`) `χ(g) = m`, in that
/// order, and reports the first failure.
pub fn folkman_membership_with(g: &Graph, spec: &ArrowSpec, chromatic: bool, limits: &SearchLimits) -> Result<Certificate> {
    let started = std::time::Instant::now();
    let graph6 = to_graph6(g);
    let (omega, clique) = clique_number(g);
    let mut cert = Certificate {
        kind: CertificateKind::Arrows,
        spec: spec.clone(),
        chromatic,
        graph6,
        witness: None,
        nodes: 0,
        elapsed: Duration::ZERO,
        clique_number: Some(omega),
        chromatic_number: None,
    };
    if omega >= spec.s() {
        let k_s = VertexSet::from_members(g.order(), clique.iter().take(spec.s()));
        cert.kind = CertificateKind::NotKsFree;
        cert.witness = Some(Witness::Clique(k_s));
        cert.elapsed = started.elapsed();
        return Ok(cert);
    }
    let outcome = arrows_with(g, spec.a(), limits)?;
    cert.nodes = outcome.nodes();
    if let ArrowOutcome::NotArrows { witness, .. } = outcome {
        cert.kind = CertificateKind::NotArrows;
        cert.witness = Some(Witness::Coloring(witness));
        cert.elapsed = started.elapsed();
        return Ok(cert);
    }
    let chi = match chromatic_number_with(g, limits) {
        Ok(r) => Some(r),
        Err(Error::Indeterminate { .. }) if !chromatic => None,
        Err(e) => return Err(e),
    };
    if let Some(chi) = chi {
        cert.nodes += chi.nodes;
        cert.chromatic_number = Some(chi.chi);
        if chi.chi < spec.m() {
            return Err(Error::construction(format!(
                "arrowing graph with χ = {} below m = {}; solver inconsistency",
                chi.chi,
                spec.m()
            )));
        }
        if chromatic && chi.chi != spec.m() {
            cert.kind = CertificateKind::NotChromatic;
            cert.witness = Some(Witness::Coloring(chi.coloring));
        }
    }
    cert.elapsed = started.elapsed();
    Ok(cert)
}

pub fn folkman_membership(g: &Graph, spec: &ArrowSpec, chromatic: bool) -> Result<Certificate> {
    folkman_membership_with(g, spec, chromatic, &SearchLimits::unlimited())
}

fn require_arrowing(g: &Graph, a: &[usize], limits: &SearchLimits) -> Result<()> {
    if !arrows_bool(g, a, limits)? {
        return Err(Error::contract(format!("graph does not arrow {a:?}")));
    }
    Ok(())
}

/// Vertices whose deletion keeps the arrowing; minimal iff there are none.
pub fn is_vertex_minimal_with(g: &Graph, a: &[usize], limits: &SearchLimits) -> Result<(bool, VertexSet)> {
    require_arrowing(g, a, limits)?;
    let mut deletable = VertexSet::new(g.order());
    for v in 0..g.order() {
        if arrows_bool(&g.without_vertex(v), a, limits)? {
            deletable.insert(v);
        }
    }
    Ok((deletable.is_empty(), deletable))
}

pub fn is_vertex_minimal(g: &Graph, a: &[usize]) -> Result<(bool, VertexSet)> {
    is_vertex_minimal_with(g, a, &SearchLimits::unlimited())
}

/// Edges whose deletion keeps the arrowing; minimal iff there are none.
pub fn is_edge_minimal_with(g: &Graph, a: &[usize], limits: &SearchLimits) -> Result<(bool, Vec<(usize, usize)>)> {
    require_arrowing(g, a, limits)?;
    let mut deletable = Vec::new();
    for (u, v) in g.edges() {
        if arrows_bool(&g.without_edge(u, v), a, limits)? {
            deletable.push((u, v));
        }
    }
    Ok((deletable.is_empty(), deletable))
}

pub fn is_edge_minimal(g: &Graph, a: &[usize]) -> Result<(bool, Vec<(usize, usize)>)> {
    is_edge_minimal_with(g, a, &SearchLimits::unlimited())
}

/// Greedy deletion of vertices (ascending index), then edges (ascending
/// lexicographic order), while the arrowing persists.
///
/// A deletion that failed once keeps failing on every later subgraph, since
/// a non-arrowing graph has only non-arrowing subgraphs. One ascending pass
/// therefore yields the same graph as restarting after each deletion, and the
/// result is vertex- and edge-minimal.
pub fn minimize_with(g: &Graph, a: &[usize], limits: &SearchLimits) -> Result<Graph> {
    require_arrowing(g, a, limits)?;
    let mut current = g.clone();
    let mut v = 0;
    while v < current.order() {
        let candidate = current.without_vertex(v);
        if arrows_bool(&candidate, a, limits)? {
            current = candidate;
        } else {
            v += 1;
        }
    }
    let edges: Vec<(usize, usize)> = current.edges().collect();
    for (u, v) in edges {
        let candidate = current.without_edge(u, v);
        if arrows_bool(&candidate, a, limits)? {
            current = candidate;
        }
    }
    let label = g.label().map(|l| format!("min({l})")).unwrap_or_else(|| "min".into());
    Ok(current.with_label(label))
}

pub fn minimize(g: &Graph, a: &[usize]) -> Result<Graph> {
    minimize_with(g, a, &SearchLimits::unlimited())
}

/// For a vertex-minimal graph arrowing `(s, s)^v`, reports whether
/// `δ(g) >= 2s - 2`. Both preconditions are re-checked. A `false` result can
/// only come from a solver bug.
pub fn min_degree_theorem8a_with(g: &Graph, s: usize, limits: &SearchLimits) -> Result<bool> {
    if s < 3 {
        return Err(Error::param(format!("minimum-degree bound applies for s >= 3, got {s}")));
    }
    let (minimal, deletable) = is_vertex_minimal_with(g, &[s, s], limits)?;
    if !minimal {
        return Err(Error::contract(format!(
            "graph is not vertex-minimal; deletable vertices {:?}",
            deletable.to_vec()
        )));
    }
    Ok(g.min_degree().unwrap_or(0) >= 2 * s - 2)
}

pub fn min_degree_theorem8a(g: &Graph, s: usize) -> Result<bool> {
    min_degree_theorem8a_with(g, s, &SearchLimits::unlimited())
}

/// Induced subgraph on one color class of `coloring`.
pub fn color_class_subgraph(g: &Graph, coloring: &Coloring, color: usize) -> Graph {
    induced_subgraph(g, &coloring.classes()[color])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, disjoint_union, grotzsch, q_graph};

    #[test]
    fn c5_arrows_2_2() {
        let c5 = cycle(5).unwrap();
        assert!(arrows(&c5, &[2, 2]).unwrap().arrows());
        assert!(arrows_by_search(&c5, &[2, 2], &SearchLimits::unlimited()).unwrap().arrows());
    }

    #[test]
    fn k4_does_not_arrow_3_3() {
        let k4 = Graph::complete(4);
        let out = arrows(&k4, &[3, 3]).unwrap();
        let w = out.witness().expect("K4 splits 2+2");
        let sizes: Vec<usize> = w.classes().iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![2, 2]);
    }

    #[test]
    fn q_arrows_3_4() {
        assert!(arrows(&q_graph(), &[3, 4]).unwrap().arrows());
        assert!(arrows(&q_graph(), &[4, 3]).unwrap().arrows());
        assert!(!arrows(&q_graph(), &[4, 4]).unwrap().arrows());
    }

    #[test]
    fn grotzsch_arrows_three_colors() {
        assert!(arrows(&grotzsch(), &[2, 2, 2]).unwrap().arrows());
        assert!(arrows_by_search(&grotzsch(), &[2, 2, 2], &SearchLimits::unlimited()).unwrap().arrows());
    }

    #[test]
    fn empty_targets_rejected() {
        assert!(matches!(arrows(&Graph::complete(3), &[]), Err(Error::Parameter(_))));
        assert!(matches!(arrows(&Graph::complete(3), &[1, 2]), Err(Error::Parameter(_))));
    }

    #[test]
    fn spec_validation() {
        let spec = ArrowSpec::new(vec![3, 4], 5).unwrap();
        assert_eq!(spec.m(), 6);
        assert!(ArrowSpec::new(vec![3, 4], 4).is_err());
        assert!(ArrowSpec::new(vec![], 4).is_err());
    }

    #[test]
    fn membership_examples() {
        let c5 = cycle(5).unwrap();
        let cert = folkman_membership(&c5, &ArrowSpec::new(vec![2, 2], 3).unwrap(), true).unwrap();
        assert_eq!(cert.kind, CertificateKind::Arrows);
        assert_eq!((cert.clique_number, cert.chromatic_number), (Some(2), Some(3)));

        let q = q_graph();
        let spec = ArrowSpec::new(vec![3, 4], 5).unwrap();
        assert_eq!(folkman_membership(&q, &spec, false).unwrap().kind, CertificateKind::Arrows);
        let cert = folkman_membership(&q, &spec, true).unwrap();
        assert_eq!(cert.kind, CertificateKind::NotChromatic);
        assert_eq!(cert.chromatic_number, Some(7));

        let cert = folkman_membership(&Graph::complete(5), &ArrowSpec::new(vec![2, 2], 3).unwrap(), false).unwrap();
        assert_eq!(cert.kind, CertificateKind::NotKsFree);
        match cert.witness {
            Some(Witness::Clique(ref k)) => assert_eq!(k.len(), 3),
            ref other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn vertex_minimality() {
        let c5 = cycle(5).unwrap();
        let (min, del) = is_vertex_minimal(&c5, &[2, 2]).unwrap();
        assert!(min && del.is_empty());
        let c5k1 = disjoint_union(&c5, &Graph::empty(1));
        let (min, del) = is_vertex_minimal(&c5k1, &[2, 2]).unwrap();
        assert!(!min);
        assert_eq!(del.to_vec(), vec![5]);
        assert!(matches!(is_vertex_minimal(&cycle(6).unwrap(), &[2, 2]), Err(Error::Contract(_))));
    }

    #[test]
    fn edge_minimality() {
        assert!(is_edge_minimal(&cycle(5).unwrap(), &[2, 2]).unwrap().0);
        let (min, del) = is_edge_minimal(&Graph::complete(4), &[2, 2]).unwrap();
        assert!(!min);
        assert_eq!(del.len(), 6);
    }

    #[test]
    fn minimize_examples() {
        let c5 = cycle(5).unwrap();
        let padded = disjoint_union(&c5, &Graph::empty(3));
        assert_eq!(minimize(&padded, &[2, 2]).unwrap(), c5);
        assert_eq!(minimize(&Graph::complete(5), &[2, 2]).unwrap(), Graph::complete(3));
    }

    #[test]
    fn min_degree_preconditions() {
        assert!(matches!(min_degree_theorem8a(&cycle(5).unwrap(), 2), Err(Error::Parameter(_))));
        assert!(matches!(min_degree_theorem8a(&Graph::complete(4), 3), Err(Error::Contract(_))));
    }

    #[test]
    fn budget_yields_indeterminate() {
        let g = crate::graph::compose(&cycle(7).unwrap(), &cycle(5).unwrap());
        let err = arrows_with(&g, &[4, 4], &SearchLimits::unlimited().with_max_nodes(100)).unwrap_err();
        assert!(matches!(err, Error::Indeterminate { .. }));
    }

    #[test]
    fn parallel_matches_sequential() {
        let q = q_graph();
        for a in [[3usize, 4], [4, 4], [3, 3]] {
            let seq = arrows_by_search(&q, &a, &SearchLimits::unlimited()).unwrap();
            for workers in [2, 4] {
                let par = arrows_by_search(&q, &a, &SearchLimits::unlimited().with_workers(workers)).unwrap();
                assert_eq!(seq.arrows(), par.arrows());
                assert_eq!(seq.witness(), par.witness());
            }
        }
    }
}
