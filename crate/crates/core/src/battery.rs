//! Reproduction battery: every desk-scale fact about the named graphs and
//! constructions, each reported as PASS, FAIL or UNVERIFIED.

use std::fmt;

use crate::arrowing::{
    arrows_with, folkman_membership_with, is_avoiding_coloring, min_degree_theorem8a_with, minimize_with, ArrowSpec,
};
use crate::certificate::CertificateKind;
use crate::constructions::{
    max_degree_vertex, theorem3_graph, theorem3_negative_check, theorem4_subgraph, theorem7_graph,
    theorem8_construction, BaseWitnesses, ConstructionRecord, Theorem8Config, VerifyConfig,
};
use crate::error::{Error, Result};
use crate::graph::{cycle, grotzsch, q_graph, Graph};
use crate::invariants::{
    chromatic_number_with, clique_number, has_clique_in, lemma5_set_coloring, set_chromatic_number_with,
    validate_set_coloring,
};
use crate::search::SearchLimits;

/// Node budget for the `(4,4)` arrowing of `C7[C5]` outside extended mode.
pub const SLOW_ARROWING_NODES: u64 = 500_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Unverified,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unverified => "UNVERIFIED",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Fact {
    pub criterion: usize,
    pub id: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}\t{}", self.status, self.criterion, self.id, self.detail)
    }
}

#[derive(Clone, Debug, Default)]
pub struct BatteryOptions {
    /// Skip the checks that take more than a few seconds.
    pub skip_slow: bool,
    /// Run slow checks without a budget and treat UNVERIFIED as failure.
    pub extended: bool,
    pub limits: SearchLimits,
    /// Replaces the built-in Grötzsch graph, for negative controls.
    pub grotzsch: Option<Graph>,
}

struct Battery<'a> {
    opts: &'a BatteryOptions,
    facts: Vec<Fact>,
}

impl Battery<'_> {
    fn record(&mut self, criterion: usize, id: &str, outcome: Result<(bool, String)>) {
        let (status, detail) = match outcome {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(Error::Indeterminate { nodes }) if !self.opts.extended => {
                (Status::Unverified, format!("budget exhausted after {nodes} nodes"))
            }
            Err(e) => (Status::Fail, e.to_string()),
        };
        self.facts.push(Fact {
            criterion,
            id: id.to_string(),
            status,
            detail,
        });
    }

    fn skipped(&mut self, criterion: usize, id: &str) {
        self.facts.push(Fact {
            criterion,
            id: id.to_string(),
            status: if self.opts.extended { Status::Fail } else { Status::Unverified },
            detail: "skipped (slow)".to_string(),
        });
    }

    fn limits(&self) -> &SearchLimits {
        &self.opts.limits
    }

    fn eq_fact(&mut self, criterion: usize, id: &str, got: Result<usize>, want: usize) {
        self.record(criterion, id, got.map(|g| (g == want, format!("got {g}, expected {want}"))));
    }

    fn chi(&self, g: &Graph) -> Result<usize> {
        Ok(chromatic_number_with(g, self.limits())?.chi)
    }

    fn arrows(&self, g: &Graph, a: &[usize]) -> Result<(bool, String)> {
        let out = arrows_with(g, a, self.limits())?;
        Ok((out.arrows(), format!("arrows={} nodes={}", out.arrows(), out.nodes())))
    }

    fn construction_config(&self) -> VerifyConfig {
        VerifyConfig {
            arrow_max_order: 0,
            limits: self.opts.limits.clone(),
        }
    }

    fn q(&mut self) {
        let q = q_graph();
        self.eq_fact(1, "q.order", Ok(q.order()), 13);
        self.eq_fact(1, "q.clique_number", Ok(clique_number(&q).0), 4);
        self.eq_fact(1, "q.chromatic_number", self.chi(&q), 7);
        let r = self.arrows(&q, &[3, 4]);
        self.record(1, "q.arrows_3_4", r);
        let spec = ArrowSpec::new(vec![3, 4], 5).expect("valid");
        let plain = folkman_membership_with(&q, &spec, false, self.limits());
        self.record(1, "q.member_F(3,4;5)", plain.map(|c| (c.is_member(), c.kind.to_string())));
        let chromatic = folkman_membership_with(&q, &spec, true, self.limits());
        self.record(
            1,
            "q.not_chromatic_member",
            chromatic.map(|c| (c.kind == CertificateKind::NotChromatic, c.kind.to_string())),
        );
    }

    fn c5(&mut self) {
        let c5 = cycle(5).expect("C5");
        self.eq_fact(2, "c5.order", Ok(c5.order()), 5);
        let spec = ArrowSpec::new(vec![2, 2], 3).expect("valid");
        let cert = folkman_membership_with(&c5, &spec, true, self.limits());
        self.record(
            2,
            "c5.member_Fchi(2,2;3)",
            cert.map(|c| {
                (
                    c.is_member() && c.clique_number == Some(2) && c.chromatic_number == Some(3),
                    c.kind.to_string(),
                )
            }),
        );
    }

    fn grotzsch(&mut self) {
        let g = self.opts.grotzsch.clone().unwrap_or_else(grotzsch);
        self.eq_fact(3, "grotzsch.order", Ok(g.order()), 11);
        self.eq_fact(3, "grotzsch.clique_number", Ok(clique_number(&g).0), 2);
        self.eq_fact(3, "grotzsch.chromatic_number", self.chi(&g), 4);
        let r = self.arrows(&g, &[2, 2, 2]);
        self.record(3, "grotzsch.arrows_2_2_2", r);
    }

    fn recursive(&mut self) -> Option<Graph> {
        let cfg = self.construction_config();
        let rec = match theorem3_graph(2, 3, &BaseWitnesses::with_defaults(), &cfg) {
            Ok(rec) => rec,
            Err(e) => {
                self.record(4, "g23.construct", Err(e));
                return None;
            }
        };
        let g = rec.graph.clone();
        self.eq_fact(4, "g23.order", Ok(g.order()), 1 + 3 + 3 * 5);
        self.eq_fact(4, "g23.clique_number", Ok(rec.verification.clique_number), 3);
        self.eq_fact(4, "g23.chromatic_number", self.chi(&g), 5);
        let r = self.arrows(&g, &[3, 3]);
        self.record(4, "g23.arrows_3_3", r);
        let v0 = rec.part("V0").and_then(|p| p.vertices.first().copied()).unwrap_or(0);
        let rest = g.without_vertex(v0);
        self.eq_fact(4, "g23.minus_v0.chromatic_number", self.chi(&rest), 4);
        let witness = arrows_with(&rest, &[3, 3], self.limits()).map(|o| match o.witness() {
            Some(c) => (is_avoiding_coloring(&rest, &[3, 3], c), "NOT_ARROWS witness validated".to_string()),
            None => (false, "still arrows".to_string()),
        });
        self.record(4, "g23.minus_v0.not_arrows", witness);
        let neg = theorem3_negative_check(&rec, self.limits());
        self.record(4, "g23.negative_check", neg.map(|b| (b, String::new())));
        if self.opts.skip_slow {
            self.skipped(4, "g33.order");
            self.skipped(4, "g33.chromatic_number");
        } else {
            self.g33();
        }
        Some(g)
    }

    fn g33(&mut self) {
        let cfg = self.construction_config();
        match theorem3_graph(3, 3, &BaseWitnesses::with_defaults(), &cfg) {
            Ok(rec) => {
                self.eq_fact(4, "g33.order", Ok(rec.graph.order()), 1 + 3 + 19 + 15 * 11);
                self.eq_fact(4, "g33.clique_number", Ok(rec.verification.clique_number), 3);
                let chi = rec.verification.chromatic_number.ok_or(Error::Indeterminate { nodes: 0 });
                self.eq_fact(4, "g33.chromatic_number", chi, 7);
            }
            Err(e) => self.record(4, "g33.construct", Err(e)),
        }
    }

    fn truncation(&mut self, g23: Option<&Graph>) {
        let Some(g) = g23 else {
            self.record(5, "t4.construct", Err(Error::construction("no G(2,3) to truncate")));
            return;
        };
        match theorem4_subgraph(g, 2, 2, 3, &self.construction_config()) {
            Ok(rec) => {
                let t = &rec.graph;
                self.eq_fact(5, "t4.chromatic_number", self.chi(t), 3);
                let cl = clique_number(t).0;
                self.record(5, "t4.clique_at_most_3", Ok((cl <= 3, format!("clique number {cl}"))));
                let r = self.arrows(t, &[2, 2]);
                self.record(5, "t4.arrows_2_2", r);
            }
            Err(e) => self.record(5, "t4.construct", Err(e)),
        }
    }

    fn set_colorings(&mut self) {
        for s in [2usize, 3] {
            let id = format!("setcol.s{s}.valid_on_C{}", 4 * s - 1);
            let ok = lemma5_set_coloring(s)
                .and_then(|sc| validate_set_coloring(&cycle(4 * s - 1)?, &sc).map(|b| (b, format!("{} colors", sc.k()))));
            self.record(6, &id, ok);
        }
        let c7 = cycle(7).expect("C7");
        self.eq_fact(6, "setchrom.C7_3", set_chromatic_number_with(&c7, 3, self.limits()), 7);
    }

    fn composition(&mut self) {
        let c5 = cycle(5).expect("C5");
        let rec = match theorem7_graph(&c5, 2, &self.construction_config()) {
            Ok(rec) => rec,
            Err(e) => {
                self.record(7, "t7.construct", Err(e));
                return;
            }
        };
        let g = &rec.graph;
        self.eq_fact(7, "t7.order", Ok(g.order()), 35);
        self.eq_fact(7, "t7.clique_number", Ok(clique_number(g).0), 4);
        self.eq_fact(7, "t7.chromatic_number", self.chi(g), 7);
        if self.opts.skip_slow {
            self.skipped(7, "t7.arrows_4_4");
            return;
        }
        let limits = if self.opts.extended {
            self.opts.limits.clone()
        } else {
            let mut l = self.opts.limits.clone();
            l.max_nodes = Some(l.max_nodes.map_or(SLOW_ARROWING_NODES, |n| n.min(SLOW_ARROWING_NODES)));
            l
        };
        let out = arrows_with(g, &[4, 4], &limits);
        self.record(7, "t7.arrows_4_4", out.map(|o| (o.arrows(), format!("nodes={}", o.nodes()))));
    }

    fn apex(&mut self, g23: Option<&Graph>) {
        let Some(g) = g23 else {
            self.record(8, "t8.construct", Err(Error::construction("no G(2,3) to minimize")));
            return;
        };
        let h = match minimize_with(g, &[3, 3], self.limits()) {
            Ok(h) => h,
            Err(e) => {
                self.record(8, "t8.minimize", Err(e));
                return;
            }
        };
        let r = min_degree_theorem8a_with(&h, 3, self.limits()).map(|b| (b, format!("δ = {:?}", h.min_degree())));
        self.record(8, "t8.input.min_degree_at_least_4", r);
        let u0 = max_degree_vertex(&h).unwrap_or(0);
        let cfg = Theorem8Config {
            verify: self.construction_config(),
            ..Theorem8Config::default()
        };
        let rec: ConstructionRecord = match theorem8_construction(&h, 3, u0, &cfg) {
            Ok(rec) => rec,
            Err(e) => {
                self.record(8, "t8.construct", Err(e));
                return;
            }
        };
        let out = &rec.graph;
        let r = self.arrows(out, &[3, 3]);
        self.record(8, "t8.arrows_3_3", r);
        let k4 = has_clique_in(out, &out.vertices(), 4);
        self.record(8, "t8.k4_free", Ok((!k4, format!("order {}", out.order()))));
        let deg4 = (0..out.order()).filter(|&v| out.degree(v) == 4).count();
        self.record(8, "t8.has_degree_4_vertex", Ok((deg4 > 0, format!("{deg4} vertices of degree 4"))));
        let r = min_degree_theorem8a_with(out, 3, self.limits()).map(|b| (b, format!("δ = {:?}", out.min_degree())));
        self.record(8, "t8.min_degree_at_least_4", r);
    }
}

/// Runs every check and returns the facts in criterion order.
pub fn run_battery(opts: &BatteryOptions) -> Vec<Fact> {
    let mut b = Battery {
        opts,
        facts: Vec::new(),
    };
    b.q();
    b.c5();
    b.grotzsch();
    let g23 = b.recursive();
    b.truncation(g23.as_ref());
    b.set_colorings();
    b.composition();
    b.apex(g23.as_ref());
    b.facts
}

pub fn battery_passed(facts: &[Fact]) -> bool {
    facts.iter().all(|f| f.status != Status::Fail)
}
