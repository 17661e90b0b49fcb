//! Constructions of Folkman graphs with minimum chromatic number, each
//! returned as a [`ConstructionRecord`] that has already verified itself.

mod conjecture;
mod theorem3;
mod theorem4;
mod theorem7;
mod theorem8;

use std::fmt;

pub use conjecture::conjecture1_search;
pub use theorem3::{part_subgraph, theorem3_graph, theorem3_negative_check, BaseWitnesses, Theorem3Params};
pub use theorem4::{theorem4_size_bound_holds, theorem4_subgraph};
pub use theorem7::{composition_coloring, theorem7_graph};
pub use theorem8::{apex_extension, apex_sets, max_degree_vertex, theorem8_construction, two_disjoint_cliques, Theorem8Config};

use crate::arrowing::{arrows_with, ArrowSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::invariants::{chromatic_number_with, clique_number, Coloring};
use crate::search::SearchLimits;

/// How much of a construction is re-verified by exhaustive search.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Arrowing is only searched for graphs up to this order; larger ones are
    /// flagged unverified.
    pub arrow_max_order: usize,
    /// Limits for each individual search.
    pub limits: SearchLimits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            arrow_max_order: 40,
            limits: SearchLimits::unlimited(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Verified,
    Unverified(String),
}

impl Check {
    pub fn is_verified(&self) -> bool {
        matches!(self, Check::Verified)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Verified => f.write_str("VERIFIED"),
            Check::Unverified(why) => write!(f, "UNVERIFIED ({why})"),
        }
    }
}

/// Results of the self-checks run on a constructed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub clique_number: usize,
    /// Exact value, when the search finished within budget.
    pub chromatic_number: Option<usize>,
    /// Colors used by an explicit proper coloring, when one is known.
    pub chromatic_upper_bound: Option<usize>,
    pub arrowing: Check,
}

impl Verification {
    /// `χ = m` is established either exactly, or by a proper `m`-coloring
    /// together with verified arrowing (which forces `χ >= m`).
    pub fn chromatic_established(&self, m: usize) -> bool {
        self.chromatic_number == Some(m)
            || (self.chromatic_upper_bound == Some(m) && self.arrowing.is_verified())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub name: String,
    pub vertices: Vec<usize>,
}

/// Independent class `V_level(index)` (index 1-based) used by a construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassBlock {
    pub level: usize,
    pub index: usize,
    pub vertices: Vec<usize>,
}

/// A constructed graph together with its vertex bookkeeping and checks.
#[derive(Clone, Debug)]
pub struct ConstructionRecord {
    pub graph: Graph,
    /// The Folkman set the graph is claimed to belong to, with `χ = m`.
    pub spec: ArrowSpec,
    pub parts: Vec<Part>,
    pub classes: Vec<ClassBlock>,
    pub verification: Verification,
}

impl ConstructionRecord {
    pub fn part(&self, name: &str) -> Option<&Part> {
        self.parts.iter().find(|p| p.name == name)
    }

    /// graph6 line followed by the part map.
    pub fn to_text(&self) -> String {
        let list = |vs: &[usize]| vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        let mut out = format!("{}\n", to_graph6(&self.graph));
        if let Some(label) = self.graph.label() {
            out.push_str(&format!("label: {label}\n"));
        }
        let a: Vec<String> = self.spec.a().iter().map(usize::to_string).collect();
        out.push_str(&format!("arrow: {}\n", a.join(",")));
        out.push_str(&format!("s: {}\n", self.spec.s()));
        for p in &self.parts {
            out.push_str(&format!("part: {} {}\n", p.name, list(&p.vertices)));
        }
        for c in &self.classes {
            out.push_str(&format!("class: {} {} {}\n", c.level, c.index, list(&c.vertices)));
        }
        out.push_str("end\n");
        out
    }

    /// Reads the text form back. The verification block is recomputed with
    /// `config`, so a parsed record is re-verified rather than trusted.
    pub fn parse(text: &str, config: &VerifyConfig) -> Result<Self> {
        let mut offset = 0;
        let mut lines = text.lines().map(|l| {
            let o = offset;
            offset += l.len() + 1;
            (o, l)
        });
        let (_, first) = lines.next().ok_or_else(|| Error::parse(0, "empty record"))?;
        let mut graph = parse_graph6(first)?;
        let mut a = None;
        let mut s = None;
        let mut parts = Vec::new();
        let mut classes = Vec::new();
        let bad = |o: usize, l: &str| Error::parse(o, format!("unexpected record line {l:?}"));
        for (o, line) in lines {
            let Some((key, value)) = line.split_once(':') else {
                if line.trim() == "end" {
                    break;
                }
                return Err(bad(o, line));
            };
            let value = value.trim();
            let nums = |v: &str| -> Result<Vec<usize>> {
                v.split_whitespace()
                    .map(|x| x.parse::<usize>().ok().filter(|&u| u < graph.order()))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| bad(o, line))
            };
            match key {
                "label" => graph = graph.with_label(value),
                "arrow" => {
                    a = Some(
                        value
                            .split(',')
                            .map(|x| x.trim().parse::<usize>())
                            .collect::<std::result::Result<Vec<_>, _>>()
                            .map_err(|_| bad(o, line))?,
                    )
                }
                "s" => s = Some(value.parse::<usize>().map_err(|_| bad(o, line))?),
                "part" => {
                    let (name, rest) = value.split_once(' ').unwrap_or((value, ""));
                    parts.push(Part {
                        name: name.to_string(),
                        vertices: nums(rest)?,
                    });
                }
                "class" => {
                    let mut it = value.splitn(3, ' ');
                    let level = it.next().and_then(|x| x.parse().ok()).ok_or_else(|| bad(o, line))?;
                    let index = it.next().and_then(|x| x.parse().ok()).ok_or_else(|| bad(o, line))?;
                    classes.push(ClassBlock {
                        level,
                        index,
                        vertices: nums(it.next().unwrap_or(""))?,
                    });
                }
                _ => return Err(bad(o, line)),
            }
        }
        let spec = ArrowSpec::new(
            a.ok_or_else(|| Error::parse(text.len(), "missing arrow line"))?,
            s.ok_or_else(|| Error::parse(text.len(), "missing s line"))?,
        )?;
        let verification = verify_graph(&graph, &spec, None, config)?;
        Ok(ConstructionRecord {
            graph,
            spec,
            parts,
            classes,
            verification,
        })
    }

    /// Human-readable verification block in `key: value` form.
    pub fn verification_text(&self) -> String {
        let v = &self.verification;
        let opt = |x: Option<usize>| x.map_or_else(|| "unknown".to_string(), |x| x.to_string());
        format!(
            "order: {}\nsize: {}\nclique_number: {}\nchromatic_number: {}\nchromatic_upper_bound: {}\narrowing: {}\nm: {}\n",
            self.graph.order(),
            self.graph.size(),
            v.clique_number,
            opt(v.chromatic_number),
            opt(v.chromatic_upper_bound),
            v.arrowing,
            self.spec.m()
        )
    }
}

/// Runs the clique, chromatic and arrowing checks on `g` against `spec`
/// without judging them.
pub(crate) fn verify_graph(
    g: &Graph,
    spec: &ArrowSpec,
    explicit: Option<&Coloring>,
    config: &VerifyConfig,
) -> Result<Verification> {
    let (omega, _) = clique_number(g);
    let upper = match explicit {
        Some(c) if c.is_proper(g) => Some(c.num_colors()),
        Some(_) => return Err(Error::construction("explicit coloring is not proper")),
        None => None,
    };
    let chromatic_number = match chromatic_number_with(g, &config.limits) {
        Ok(r) => Some(r.chi),
        Err(Error::Indeterminate { .. }) => None,
        Err(e) => return Err(e),
    };
    let arrowing = if g.order() > config.arrow_max_order {
        Check::Unverified(format!("order {} above arrowing threshold {}", g.order(), config.arrow_max_order))
    } else {
        match arrows_with(g, spec.a(), &config.limits) {
            Ok(out) if out.arrows() => Check::Verified,
            Ok(_) => return Err(Error::construction(format!("graph does not arrow {:?}", spec.a()))),
            Err(Error::Indeterminate { nodes }) => Check::Unverified(format!("budget exhausted after {nodes} nodes")),
            Err(e) => return Err(e),
        }
    };
    Ok(Verification {
        clique_number: omega,
        chromatic_number,
        chromatic_upper_bound: upper,
        arrowing,
    })
}

/// Checks a verification against the claimed membership `cl < s`, `χ = m`.
pub(crate) fn require_membership(v: &Verification, spec: &ArrowSpec, what: &str) -> Result<()> {
    if v.clique_number >= spec.s() {
        return Err(Error::construction(format!(
            "{what}: clique number {} not below {}",
            v.clique_number,
            spec.s()
        )));
    }
    if let Some(chi) = v.chromatic_number {
        if chi != spec.m() {
            return Err(Error::construction(format!("{what}: chromatic number {chi} != m = {}", spec.m())));
        }
    }
    if let Some(ub) = v.chromatic_upper_bound {
        if ub > spec.m() {
            return Err(Error::construction(format!("{what}: explicit coloring uses {ub} > m colors")));
        }
    }
    Ok(())
}
