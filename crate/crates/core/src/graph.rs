//! Simple undirected graphs, the named generators and the graph operators
//! used by the constructions.
//!
//! Vertex-ordering contracts are fixed so that constructed graphs are
//! byte-reproducible in graph6:
//! * [`compose`] flattens `(u, v)` to `u * |V(h)| + v`;
//! * [`induced_subgraph`] keeps the selected vertices in ascending order.

use std::collections::BTreeSet;
use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A simple undirected graph on the vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] per vertex; the relation is kept
/// symmetric and irreflexive by every mutator.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    label: Option<String>,
}

impl PartialEq for Graph {
    /// Labels are provenance only; equality is on the labelled adjacency.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("label", &self.label)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
            label: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n);
                s.remove(v);
                s
            })
            .collect();
        Graph {
            n,
            adj,
            label: Some(format!("K{n}")),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!("edge ({u},{v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::param(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Adds the edge `{u, v}`. Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// True if every pair of distinct members of `s` is adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Copy with vertex `v` deleted; remaining vertices keep ascending order.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let mut keep = self.vertices();
        keep.remove(v);
        induced_subgraph(self, &keep)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// Checks the structural invariants: no loops and symmetric adjacency.
    pub fn is_well_formed(&self) -> bool {
        self.adj.len() == self.n
            && (0..self.n).all(|u| {
                self.adj[u].universe() == self.n
                    && !self.adj[u].contains(u)
                    && self.adj[u].iter().all(|v| self.adj[v].contains(u))
            })
    }
}

fn check_subset(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.order() {
        return Err(Error::param(format!(
            "vertex set over universe {} used with a graph of order {}",
            s.universe(),
            g.order()
        )));
    }
    Ok(())
}

/// Circulant graph on `Z_n`: `i ~ j` iff their cyclic distance is in `arcs`.
pub fn circulant(n: usize, arcs: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!("circulant needs n >= 3, got {n}")));
    }
    let arcs: BTreeSet<usize> = arcs.iter().copied().collect();
    if let Some(&d) = arcs.iter().find(|&&d| d == 0 || d > n / 2) {
        return Err(Error::param(format!(
            "arc length {d} outside [1, {}] for n = {n}",
            n / 2
        )));
    }
    let mut g = Graph::empty(n);
    for i in 0..n {
        for &d in &arcs {
            g.add_edge(i, (i + d) % n);
        }
    }
    let list: Vec<String> = arcs.iter().map(usize::to_string).collect();
    Ok(g.with_label(format!("C{n}({})", list.join(","))))
}

/// The cycle `C_n`, i.e. `circulant(n, {1})`.
pub fn cycle(n: usize) -> Result<Graph> {
    Ok(circulant(n, &[1])?.with_label(format!("C{n}")))
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let adj = (0..n)
        .map(|v| {
            let mut s = g.neighbors(v).complement();
            s.remove(v);
            s
        })
        .collect();
    Graph {
        n,
        adj,
        label: g.label().map(|l| format!("co-{l}")),
    }
}

/// Lexicographic product `g[h]`.
///
/// `(u, v)` is vertex `u * |V(h)| + v`; `(u,v) ~ (u',v')` iff `uu'` is an
/// edge of `g`, or `u = u'` and `vv'` is an edge of `h`.
pub fn compose(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let n = g.order() * m;
    let mut out = Graph::empty(n);
    for u in 0..g.order() {
        for v in 0..m {
            let x = u * m + v;
            for w in h.neighbors(v) {
                out.adj[x].insert(u * m + w);
            }
            for u2 in g.neighbors(u) {
                for v2 in 0..m {
                    out.adj[x].insert(u2 * m + v2);
                }
            }
        }
    }
    let label = match (g.label(), h.label()) {
        (Some(a), Some(b)) => Some(format!("{a}[{b}]")),
        _ => None,
    };
    out.label = label;
    out
}

/// Turán graph `T(n, r)`: vertex `i` lies in part `i mod r`.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    if r == 0 || r > n {
        return Err(Error::param(format!("turan needs 1 <= r <= n, got n={n}, r={r}")));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if u % r != v % r {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g.with_label(format!("T({n},{r})")))
}

/// Mycielskian of `g`: vertices `0..n` copy `g`, `n + i` is the shadow of `i`
/// (adjacent to the neighbours of `i`), and `2n` is the apex joined to every
/// shadow.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.order();
    let mut m = Graph::empty(2 * n + 1);
    for (u, v) in g.edges() {
        m.add_edge(u, v);
        m.add_edge(n + u, v);
        m.add_edge(n + v, u);
    }
    for i in 0..n {
        m.add_edge(n + i, 2 * n);
    }
    m.label = g.label().map(|l| format!("M({l})"));
    m
}

/// The Grötzsch graph, built as the Mycielskian of `C5`.
pub fn grotzsch() -> Graph {
    let c5 = cycle(5).expect("C5 is a valid circulant");
    mycielskian(&c5).with_label("Grotzsch")
}

/// The 13-vertex graph `Q`: complement of the circulant on `Z_13` with arcs 1 and 5.
pub fn q_graph() -> Graph {
    let r = circulant(13, &[1, 5]).expect("valid circulant");
    complement(&r).with_label("Q")
}

/// Induced subgraph on `s`, relabelled `0..|s|` in ascending order.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Graph {
    let members = s.to_vec();
    let mut index = vec![usize::MAX; g.order()];
    for (i, &v) in members.iter().enumerate() {
        index[v] = i;
    }
    let k = members.len();
    let mut out = Graph::empty(k);
    for (i, &v) in members.iter().enumerate() {
        for w in g.neighbors(v).intersection(s).iter() {
            out.adj[i].insert(index[w]);
        }
    }
    out
}

/// Adds every edge `{v, w}` for `w` in `s`.
pub fn join_vertex_to_set(g: &Graph, v: usize, s: &VertexSet) -> Result<Graph> {
    check_subset(g, s)?;
    if v >= g.order() {
        return Err(Error::param(format!("vertex {v} outside 0..{}", g.order())));
    }
    if s.contains(v) {
        return Err(Error::param(format!("vertex {v} cannot be joined to a set containing it")));
    }
    let mut out = g.clone();
    for w in s {
        out.add_edge(v, w);
    }
    Ok(out)
}

/// Disjoint union; vertices of `h` follow those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(n + h.order());
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(n + u, n + v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_examples() {
        let c5 = circulant(5, &[1]).unwrap();
        assert_eq!((c5.order(), c5.size()), (5, 5));
        assert!((0..5).all(|v| c5.degree(v) == 2));

        let k7 = circulant(7, &[1, 2, 3]).unwrap();
        assert_eq!(k7, Graph::complete(7));

        let r13 = circulant(13, &[1, 5]).unwrap();
        assert!((0..13).all(|v| r13.degree(v) == 4));
        assert!(r13.has_edge(0, 5) && r13.has_edge(0, 8) && !r13.has_edge(0, 2));
    }

    #[test]
    fn circulant_rejects_bad_arcs() {
        assert!(matches!(circulant(5, &[3]), Err(Error::Parameter(_))));
        assert!(matches!(circulant(5, &[0]), Err(Error::Parameter(_))));
        assert!(matches!(circulant(2, &[1]), Err(Error::Parameter(_))));
    }

    #[test]
    fn complement_of_r13_is_the_other_circulant() {
        let q = complement(&circulant(13, &[1, 5]).unwrap());
        assert_eq!(q, circulant(13, &[2, 3, 4, 6]).unwrap());
        assert_eq!(q, q_graph());
        assert_eq!(complement(&Graph::complete(5)), Graph::empty(5));
    }

    #[test]
    fn compose_with_k1_is_identity() {
        let h = cycle(5).unwrap();
        assert_eq!(compose(&Graph::complete(1), &h), h);
    }

    #[test]
    fn compose_c7_k3_is_8_regular() {
        let g = compose(&cycle(7).unwrap(), &Graph::complete(3));
        assert_eq!(g.order(), 21);
        assert!((0..21).all(|v| g.degree(v) == 8));
    }

    #[test]
    fn turan_examples() {
        let t = turan(6, 3).unwrap();
        assert_eq!(t.size(), 12);
        assert!(!t.has_edge(0, 3) && t.has_edge(0, 1));
        let t = turan(5, 2).unwrap();
        assert_eq!(t.size(), 6);
        assert!(turan(3, 4).is_err());
    }

    #[test]
    fn grotzsch_shape() {
        let g = grotzsch();
        assert_eq!((g.order(), g.size()), (11, 20));
        assert_eq!(g.degree(10), 5);
        assert!(g.has_edge(5, 1) && g.has_edge(5, 4) && !g.has_edge(5, 0));
        assert!(g.is_well_formed());
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(induced_subgraph(&c5, &c5.vertices()), c5);
        let p3 = induced_subgraph(&c5, &VertexSet::from_members(5, [0, 1, 2]));
        assert_eq!(p3, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        let k3 = induced_subgraph(&Graph::complete(5), &VertexSet::from_members(5, [0, 2, 4]));
        assert_eq!(k3, Graph::complete(3));
    }

    #[test]
    fn join_vertex_to_set_examples() {
        let g = Graph::empty(4);
        let s = VertexSet::from_members(4, [1, 2]);
        let star = join_vertex_to_set(&g, 0, &s).unwrap();
        assert_eq!(star.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(join_vertex_to_set(&star, 0, &s).unwrap(), star);
        assert!(join_vertex_to_set(&g, 1, &s).is_err());
    }

    #[test]
    fn from_edges_rejects_loops() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(1, 3)]).is_err());
    }
}
