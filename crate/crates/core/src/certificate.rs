//! Membership certificates and their line-oriented text form.
//!
//! ```text
//! certificate: folkman 0.1.0
//! kind: NOT_ARROWS
//! arrow: 3,3
//! s: 4
//! chromatic: false
//! graph6: Cr
//! clique_number: 3
//! nodes: 5
//! witness: coloring
//! 0:1
//! 1:1
//! 2:2
//! 3:2
//! end
//! ```
//!
//! Colors are written 1-based. Wall time is not part of the text so equal
//! runs produce identical certificates.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use crate::arrowing::{is_avoiding_coloring, ArrowSpec};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph6::parse_graph6;
use crate::invariants::Coloring;

pub const TOOL_VERSION: &str = concat!("folkman ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    Arrows,
    NotArrows,
    NotKsFree,
    NotChromatic,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateKind::Arrows => "ARROWS",
            CertificateKind::NotArrows => "NOT_ARROWS",
            CertificateKind::NotKsFree => "NOT_KS_FREE",
            CertificateKind::NotChromatic => "NOT_CHROMATIC",
        }
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CertificateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ARROWS" => CertificateKind::Arrows,
            "NOT_ARROWS" => CertificateKind::NotArrows,
            "NOT_KS_FREE" => CertificateKind::NotKsFree,
            "NOT_CHROMATIC" => CertificateKind::NotChromatic,
            other => return Err(Error::parse(0, format!("unknown certificate kind {other:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Coloring(Coloring),
    Clique(VertexSet),
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub spec: ArrowSpec,
    pub chromatic: bool,
    pub graph6: String,
    pub witness: Option<Witness>,
    pub nodes: u64,
    pub elapsed: Duration,
    pub clique_number: Option<usize>,
    pub chromatic_number: Option<usize>,
}

impl PartialEq for Certificate {
    fn eq(&self, other: &Self) -> bool {
        self.to_text() == other.to_text()
    }
}

impl Certificate {
    /// Member of the (chromatic, if requested) Folkman set.
    pub fn is_member(&self) -> bool {
        self.kind == CertificateKind::Arrows
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let a: Vec<String> = self.spec.a().iter().map(usize::to_string).collect();
        out.push_str(&format!("certificate: {TOOL_VERSION}\n"));
        out.push_str(&format!("kind: {}\n", self.kind));
        out.push_str(&format!("arrow: {}\n", a.join(",")));
        out.push_str(&format!("s: {}\n", self.spec.s()));
        out.push_str(&format!("chromatic: {}\n", self.chromatic));
        out.push_str(&format!("graph6: {}\n", self.graph6));
        if let Some(w) = self.clique_number {
            out.push_str(&format!("clique_number: {w}\n"));
        }
        if let Some(chi) = self.chromatic_number {
            out.push_str(&format!("chromatic_number: {chi}\n"));
        }
        out.push_str(&format!("nodes: {}\n", self.nodes));
        match &self.witness {
            None => {}
            Some(Witness::Coloring(c)) => {
                out.push_str(&format!("witness: coloring {}\n", c.num_colors()));
                for (v, &col) in c.colors().iter().enumerate() {
                    out.push_str(&format!("{v}:{}\n", col + 1));
                }
            }
            Some(Witness::Clique(s)) => {
                let members: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                out.push_str("witness: clique\n");
                out.push_str(&format!("members: {}\n", members.join(" ")));
            }
        }
        out.push_str("end\n");
        out
    }

    /// Parses the text form and re-validates the witness against the graph.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().scan(0usize, |offset, line| {
            let start = *offset;
            *offset += line.len() + 1;
            Some((start, line))
        });
        let mut field = |key: &str| -> Result<(usize, String)> {
            let (off, line) = lines
                .next()
                .ok_or_else(|| Error::parse(text.len(), format!("missing {key:?}")))?;
            let value = line
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix(':'))
                .ok_or_else(|| Error::parse(off, format!("expected {key:?} line, found {line:?}")))?;
            Ok((off, value.trim().to_string()))
        };
        let num = |(off, v): (usize, String)| -> Result<usize> {
            v.parse().map_err(|_| Error::parse(off, format!("expected a number, found {v:?}")))
        };
        field("certificate")?;
        let kind: CertificateKind = field("kind")?.1.parse()?;
        let (off, arrow) = field("arrow")?;
        let a = arrow
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::parse(off, format!("bad arrow list {arrow:?}")))?;
        let s = num(field("s")?)?;
        let spec = ArrowSpec::new(a, s)?;
        let (off, chromatic) = field("chromatic")?;
        let chromatic = chromatic
            .parse()
            .map_err(|_| Error::parse(off, format!("bad boolean {chromatic:?}")))?;
        let (off, graph6) = field("graph6")?;
        let g = parse_graph6(&graph6).map_err(|e| match e {
            Error::Parse { offset, message } => Error::parse(off + 8 + offset, message),
            other => other,
        })?;

        let mut rest: Vec<(usize, &str)> = lines.collect();
        rest.reverse();
        let mut clique_number = None;
        let mut chromatic_number = None;
        let mut nodes = None;
        let mut witness = None;
        while let Some((off, line)) = rest.pop() {
            let (key, value) = line
                .split_once(':')
                .map(|(k, v)| (k, v.trim()))
                .unwrap_or((line, ""));
            let parse_num = |v: &str| v.parse::<u64>().map_err(|_| Error::parse(off, format!("bad number {v:?}")));
            match key {
                "end" => break,
                "clique_number" => clique_number = Some(parse_num(value)? as usize),
                "chromatic_number" => chromatic_number = Some(parse_num(value)? as usize),
                "nodes" => nodes = Some(parse_num(value)?),
                "witness" if value.starts_with("coloring") => {
                    let k = parse_num(value["coloring".len()..].trim())? as usize;
                    let mut colors = Vec::with_capacity(g.order());
                    for v in 0..g.order() {
                        let (o, l) = rest.pop().ok_or_else(|| Error::parse(text.len(), "truncated coloring"))?;
                        let (vv, cc) = l
                            .split_once(':')
                            .ok_or_else(|| Error::parse(o, format!("expected vertex:color, found {l:?}")))?;
                        let vv: usize = vv.parse().map_err(|_| Error::parse(o, "bad vertex"))?;
                        let cc: usize = cc.parse().map_err(|_| Error::parse(o, "bad color"))?;
                        if vv != v || cc == 0 {
                            return Err(Error::parse(o, format!("unexpected coloring line {l:?}")));
                        }
                        colors.push(cc - 1);
                    }
                    witness = Some(Witness::Coloring(Coloring::new(colors, k)?));
                }
                "witness" if value == "clique" => {
                    let (o, l) = rest.pop().ok_or_else(|| Error::parse(text.len(), "missing clique members"))?;
                    let members = l
                        .strip_prefix("members:")
                        .ok_or_else(|| Error::parse(o, "expected members line"))?
                        .split_whitespace()
                        .map(|x| x.parse::<usize>().ok().filter(|&v| v < g.order()))
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(|| Error::parse(o, "bad clique member"))?;
                    witness = Some(Witness::Clique(VertexSet::from_members(g.order(), members)));
                }
                _ => return Err(Error::parse(off, format!("unexpected line {line:?}"))),
            }
        }
        let cert = Certificate {
            kind,
            spec,
            chromatic,
            graph6,
            witness,
            nodes: nodes.ok_or_else(|| Error::parse(text.len(), "missing nodes"))?,
            elapsed: Duration::ZERO,
            clique_number,
            chromatic_number,
        };
        cert.check_witness()?;
        Ok(cert)
    }

    /// Re-validates the witness against the embedded graph.
    pub fn check_witness(&self) -> Result<()> {
        let g = parse_graph6(&self.graph6)?;
        let ok = match (self.kind, &self.witness) {
            (CertificateKind::NotArrows, Some(Witness::Coloring(c))) => is_avoiding_coloring(&g, self.spec.a(), c),
            (CertificateKind::NotKsFree, Some(Witness::Clique(k))) => k.len() >= self.spec.s() && g.is_clique(k),
            (CertificateKind::NotChromatic, Some(Witness::Coloring(c))) => {
                c.is_proper(&g) && Some(c.num_colors()) == self.chromatic_number
            }
            (CertificateKind::Arrows, None) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::contract(format!("{} certificate witness does not validate", self.kind)))
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowing::folkman_membership;
    use crate::graph::{cycle, q_graph, Graph};

    #[test]
    fn text_round_trip_for_each_kind() {
        let cases = [
            (cycle(5).unwrap(), ArrowSpec::new(vec![2, 2], 3).unwrap(), true),
            (q_graph(), ArrowSpec::new(vec![3, 4], 5).unwrap(), true),
            (Graph::complete(4), ArrowSpec::new(vec![3, 3], 4).unwrap(), false),
            (Graph::complete(4), ArrowSpec::new(vec![3, 3], 5).unwrap(), false),
        ];
        let kinds: Vec<CertificateKind> = cases
            .iter()
            .map(|(g, spec, chromatic)| {
                let cert = folkman_membership(g, spec, *chromatic).unwrap();
                let text = cert.to_text();
                let back = Certificate::parse(&text).unwrap();
                assert_eq!(back.to_text(), text);
                cert.kind
            })
            .collect();
        assert_eq!(
            kinds,
            vec![
                CertificateKind::Arrows,
                CertificateKind::NotChromatic,
                CertificateKind::NotKsFree,
                CertificateKind::NotArrows
            ]
        );
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let cert = folkman_membership(&Graph::complete(4), &ArrowSpec::new(vec![3, 3], 5).unwrap(), false).unwrap();
        let text: String = cert
            .to_text()
            .lines()
            .map(|l| match l.split_once(':') {
                Some((v, _)) if v.chars().all(|c| c.is_ascii_digit()) => format!("{v}:1\n"),
                _ => format!("{l}\n"),
            })
            .collect();
        assert!(matches!(Certificate::parse(&text), Err(Error::Contract(_))));
    }
}
