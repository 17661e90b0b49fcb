//! Recursive construction of `G(r, s)` in `F^χ(r, s, s+1)`.
//!
//! Parts: `V0 = K_1`, `V1 = K_s`, `V_i = G_i ∈ F^χ(i, s, s+1)` for
//! `2 <= i < r`, each split into its `b_i = i(s-1)+1` color classes
//! `V_i(j)`, and one copy `H(j_0, ..., j_{r-1})` of some
//! `H ∈ F^χ(r, s-1, s)` for every index tuple. Each copy is joined
//! completely to `V_i(j_i)` for all `i`, and to nothing else.

use std::collections::BTreeMap;

use crate::arrowing::ArrowSpec;
use crate::bitset::VertexSet;
use crate::constructions::{require_membership, verify_graph, ClassBlock, ConstructionRecord, Part, VerifyConfig};
use crate::error::{Error, Result};
use crate::graph::{cycle, grotzsch, induced_subgraph, Graph};
use crate::invariants::{chromatic_number_with, Coloring, Partition};
use crate::search::SearchLimits;

/// Supplied members of `F^χ(r, a, a+1)`, keyed by `(r, a)`.
///
/// The recursion bottoms out at `a = 2`: triangle-free graphs of chromatic
/// number `r + 1`. Defaults cover `r = 2` (`C5`) and `r = 3` (Grötzsch);
/// larger `r` must be supplied.
#[derive(Clone, Debug, Default)]
pub struct BaseWitnesses {
    graphs: BTreeMap<(usize, usize), Graph>,
}

impl BaseWitnesses {
    pub fn empty() -> Self {
        BaseWitnesses::default()
    }

    pub fn with_defaults() -> Self {
        let mut b = BaseWitnesses::empty();
        b.insert(2, 2, cycle(5).expect("C5"));
        b.insert(3, 2, grotzsch());
        b
    }

    pub fn insert(&mut self, r: usize, a: usize, g: Graph) {
        self.graphs.insert((r, a), g);
    }

    pub fn get(&self, r: usize, a: usize) -> Option<&Graph> {
        self.graphs.get(&(r, a))
    }
}

/// `b_i = i(s-1)+1` for `i in 0..r` and `B = Π_{i=1}^{r-1} b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem3Params {
    pub r: usize,
    pub s: usize,
    /// `b[i]` for `i in 0..r`; `b[0] = 1` is the single class of `V0`.
    pub b: Vec<usize>,
    pub big_b: usize,
}

impl Theorem3Params {
    pub fn new(r: usize, s: usize) -> Result<Self> {
        if r < 2 || s < 3 {
            return Err(Error::param(format!("G(r,s) needs r >= 2 and s >= 3, got r={r}, s={s}")));
        }
        let b: Vec<usize> = (0..r).map(|i| i * (s - 1) + 1).collect();
        let big_b = b[1..].iter().product();
        Ok(Theorem3Params { r, s, b, big_b })
    }

    pub fn m(&self) -> usize {
        self.r * (self.s - 1) + 1
    }

    /// `1 + s + Σ_{i=2}^{r-1} |G_i| + B |H|`.
    pub fn order(&self, middle: &[usize], h: usize) -> usize {
        1 + self.s + middle.iter().sum::<usize>() + self.big_b * h
    }
}

fn diagonal(r: usize, a: usize) -> ArrowSpec {
    ArrowSpec::new(vec![a; r], a + 1).expect("diagonal spec is valid")
}

struct Builder<'a> {
    bases: &'a BaseWitnesses,
    config: &'a VerifyConfig,
    memo: BTreeMap<(usize, usize), Graph>,
}

impl Builder<'_> {
    /// A member of `F^χ(r, a, a+1)`: supplied, memoized, or built.
    fn witness(&mut self, r: usize, a: usize) -> Result<Graph> {
        if let Some(g) = self.memo.get(&(r, a)) {
            return Ok(g.clone());
        }
        let g = match self.bases.get(r, a) {
            Some(g) => {
                self.check_base(g, r, a)?;
                g.clone()
            }
            None if a == 2 => {
                return Err(Error::param(format!(
                    "missing base witness for F^χ({r},2,3): a triangle-free graph with chromatic number {}",
                    r + 1
                )))
            }
            None => self.build(r, a)?.graph,
        };
        self.memo.insert((r, a), g.clone());
        Ok(g)
    }

    fn check_base(&self, g: &Graph, r: usize, a: usize) -> Result<()> {
        let spec = diagonal(r, a);
        let what = format!("base witness F^χ({r},{a},{})", a + 1);
        let as_param = |e: Error| match e {
            Error::Construction(msg) => Error::param(format!("{what}: {msg}")),
            other => other,
        };
        let v = verify_graph(g, &spec, None, self.config).map_err(as_param)?;
        require_membership(&v, &spec, &what).map_err(as_param)?;
        if v.chromatic_number.is_none() {
            return Err(Error::param(format!(
                "chromatic number of base witness F^χ({r},{a},{}) could not be established",
                a + 1
            )));
        }
        Ok(())
    }

    fn build(&mut self, r: usize, s: usize) -> Result<ConstructionRecord> {
        let params = Theorem3Params::new(r, s)?;
        let h = self.witness(r, s - 1)?;
        let middles: Vec<Graph> = (2..r).map(|i| self.witness(i, s)).collect::<Result<_>>()?;
        assemble(&params, &middles, &h, self.config)
    }
}

fn exact_coloring(g: &Graph, limits: &SearchLimits) -> Result<Coloring> {
    Ok(chromatic_number_with(g, limits)?.coloring)
}

fn assemble(params: &Theorem3Params, middles: &[Graph], h: &Graph, config: &VerifyConfig) -> Result<ConstructionRecord> {
    let (r, s) = (params.r, params.s);
    let mut levels: Vec<Graph> = vec![Graph::complete(1), Graph::complete(s)];
    levels.extend(middles.iter().cloned());

    let mut partitions = Vec::with_capacity(r);
    for (i, g) in levels.iter().enumerate() {
        let p = Partition::from_coloring(&exact_coloring(g, &config.limits)?);
        if p.len() != params.b[i] {
            return Err(Error::param(format!(
                "part V{i} has chromatic number {}, expected b_{i} = {}",
                p.len(),
                params.b[i]
            )));
        }
        partitions.push(p);
    }

    let h_coloring = exact_coloring(h, &config.limits)?;
    let h_colors = r * (s - 2) + 1;
    if h_coloring.num_colors() != h_colors {
        return Err(Error::param(format!(
            "H has chromatic number {}, expected {h_colors}",
            h_coloring.num_colors()
        )));
    }

    let order = params.order(&middles.iter().map(Graph::order).collect::<Vec<_>>(), h.order());
    let mut g = Graph::empty(order);
    let mut parts = Vec::new();
    let mut classes = Vec::new();
    let mut offsets = Vec::with_capacity(r);
    let mut next = 0;
    for (i, level) in levels.iter().enumerate() {
        offsets.push(next);
        for (u, v) in level.edges() {
            g.add_edge(next + u, next + v);
        }
        parts.push(Part {
            name: format!("V{i}"),
            vertices: (next..next + level.order()).collect(),
        });
        for (j, class) in partitions[i].classes().iter().enumerate() {
            classes.push(ClassBlock {
                level: i,
                index: j + 1,
                vertices: class.iter().map(|v| next + v).collect(),
            });
        }
        next += level.order();
    }

    let m = params.m();
    let mut colors = vec![0usize; order];
    for (i, p) in partitions.iter().enumerate() {
        for (j, class) in p.classes().iter().enumerate() {
            for v in class {
                colors[offsets[i] + v] = j;
            }
        }
    }

    let mut tuple = vec![1usize; r];
    for _ in 0..params.big_b {
        let base = next;
        for (u, v) in h.edges() {
            g.add_edge(base + u, base + v);
        }
        let mut forbidden = VertexSet::new(m);
        for (i, &j) in tuple.iter().enumerate() {
            for v in partitions[i].classes()[j - 1].iter() {
                for x in 0..h.order() {
                    g.add_edge(base + x, offsets[i] + v);
                }
            }
            forbidden.insert(j - 1);
        }
        let free: Vec<usize> = forbidden.complement().to_vec();
        for x in 0..h.order() {
            colors[base + x] = free[h_coloring.color(x)];
        }
        let name = tuple.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        parts.push(Part {
            name: format!("H({name})"),
            vertices: (base..base + h.order()).collect(),
        });
        next += h.order();
        // Advance the tuple lexicographically; j_0 is fixed at 1.
        for i in (0..r).rev() {
            if tuple[i] < params.b[i] {
                tuple[i] += 1;
                break;
            }
            tuple[i] = 1;
        }
    }
    debug_assert_eq!(next, order);

    let spec = diagonal(r, s);
    let explicit = Coloring::new(colors, m)?;
    let verification = verify_graph(&g, &spec, Some(&explicit), config)?;
    require_membership(&verification, &spec, &format!("G({r},{s})"))?;
    if verification.clique_number != s {
        return Err(Error::construction(format!(
            "G({r},{s}) has clique number {}, expected {s}",
            verification.clique_number
        )));
    }
    Ok(ConstructionRecord {
        graph: g.with_label(format!("G({r},{s})")),
        spec,
        parts,
        classes,
        verification,
    })
}

/// Builds `G(r, s)`, recursing on smaller parameters and drawing the
/// `F^χ(i, 2, 3)` bases from `bases`.
pub fn theorem3_graph(r: usize, s: usize, bases: &BaseWitnesses, config: &VerifyConfig) -> Result<ConstructionRecord> {
    Theorem3Params::new(r, s)?;
    let mut builder = Builder {
        bases,
        config,
        memo: BTreeMap::new(),
    };
    builder.build(r, s)
}

/// True iff deleting the `V0` vertex drops `χ` to `m - 1` and the remainder
/// no longer arrows `(s, ..., s)^v`.
pub fn theorem3_negative_check(rec: &ConstructionRecord, limits: &SearchLimits) -> Result<bool> {
    let v0 = rec
        .part("V0")
        .and_then(|p| p.vertices.first().copied())
        .ok_or_else(|| Error::param("record has no V0 part"))?;
    let rest = rec.graph.without_vertex(v0);
    let chi = chromatic_number_with(&rest, limits)?.chi;
    let arrows = crate::arrowing::arrows_with(&rest, rec.spec.a(), limits)?.arrows();
    Ok(chi + 1 == rec.spec.m() && !arrows)
}

/// Induced subgraph on one named part of the record.
pub fn part_subgraph(rec: &ConstructionRecord, name: &str) -> Option<Graph> {
    let p = rec.part(name)?;
    Some(induced_subgraph(
        &rec.graph,
        &VertexSet::from_members(rec.graph.order(), p.vertices.iter().copied()),
    ))
}
