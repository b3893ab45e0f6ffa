//! Replayable certificates for dichoosability lower bounds.
//!
//! A certificate names a graph, one of its orientations and an `r`-uniform
//! list assignment under which the orientation has no L-dicolouring; this
//! proves `dic_ℓ(G) >= r + 1`. Verification re-derives every structural fact
//! and re-enumerates all `∏|L(v)|` L-colourings without pruning.
//!
//! Text form:
//!
//! ```text
//! [GRAPH]
//! graph 4
//! 0 2
//! ...
//! [ORIENTATION]
//! digraph 4
//! ...
//! [LISTS]
//! 0: 1
//! ...
//! [CLAIM]
//! dichoosability >= 2
//! list_size = 1
//! [TRANSCRIPT]
//! all L-colourings checked: none is a dicolouring
//! colourings_checked = 1
//! ```

use std::fmt;
use std::fmt::Write as _;

use crate::caps::Caps;
use crate::dicolour::Dicolouring;
use crate::error::{Error, Result};
use crate::format::{content_lines, parse_graph_lines, parse_lists_lines, write_digraph, write_graph, write_lists};
use crate::graph::{mask_is_acyclic, Digraph, Graph};
use crate::lists::ListAssignment;

const TRANSCRIPT_STATEMENT: &str = "all L-colourings checked: none is a dicolouring";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundCertificate {
    pub graph: Graph,
    pub orientation: Digraph,
    pub lists: ListAssignment,
    /// `r + 1` for lists of size `r`.
    pub claimed_bound: usize,
    /// Number of L-colourings the transcript states were checked.
    pub colourings_checked: u128,
}

impl LowerBoundCertificate {
    /// Fills in the claim and the transcript count from `lists`. Nothing is verified.
    pub fn new(graph: Graph, orientation: Digraph, lists: ListAssignment) -> Result<LowerBoundCertificate> {
        let r = lists
            .uniform_size()
            .ok_or_else(|| Error::InvalidArgument("certificate lists must all have the same size".into()))?;
        Ok(LowerBoundCertificate {
            colourings_checked: lists.colouring_count(),
            claimed_bound: r + 1,
            graph,
            orientation,
            lists,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "[GRAPH]");
        s.push_str(&write_graph(&self.graph));
        let _ = writeln!(s, "[ORIENTATION]");
        s.push_str(&write_digraph(&self.orientation));
        let _ = writeln!(s, "[LISTS]");
        s.push_str(&write_lists(&self.lists));
        let _ = writeln!(s, "[CLAIM]");
        let _ = writeln!(s, "dichoosability >= {}", self.claimed_bound);
        let _ = writeln!(s, "list_size = {}", self.claimed_bound.saturating_sub(1));
        let _ = writeln!(s, "[TRANSCRIPT]");
        let _ = writeln!(s, "{TRANSCRIPT_STATEMENT}");
        let _ = writeln!(s, "colourings_checked = {}", self.colourings_checked);
        s
    }

    pub fn parse(text: &str) -> Result<LowerBoundCertificate> {
        let is_section = |l: &str| l.starts_with('[') && l.ends_with(']');
        let mut lines = content_lines(text).peekable();
        let expect_section = |lines: &mut std::iter::Peekable<_>, name: &str| -> Result<()> {
            match Iterator::next(lines) {
                Some((_, l)) if l == format!("[{name}]") => Ok(()),
                Some((line, l)) => Err(Error::parse(line, format!("expected section [{name}], found `{l}`"))),
                None => Err(Error::parse(0, format!("missing section [{name}]"))),
            }
        };

        expect_section(&mut lines, "GRAPH")?;
        let graph = parse_graph_lines(&mut lines, Some(&is_section))?.into_graph()?;
        expect_section(&mut lines, "ORIENTATION")?;
        let orientation = parse_graph_lines(&mut lines, Some(&is_section))?.into_digraph()?;
        expect_section(&mut lines, "LISTS")?;
        let mut list_lines = Vec::new();
        while let Some(&(line, l)) = lines.peek() {
            if is_section(l) {
                break;
            }
            list_lines.push((line, l));
            lines.next();
        }
        let lists = parse_lists_lines(list_lines.into_iter())?;

        expect_section(&mut lines, "CLAIM")?;
        let mut claimed_bound = None;
        let mut list_size = None;
        while let Some(&(line, l)) = lines.peek() {
            if is_section(l) {
                break;
            }
            lines.next();
            if let Some(v) = l.strip_prefix("dichoosability >=") {
                claimed_bound = Some(parse_number::<usize>(v, line)?);
            } else if let Some(v) = l.strip_prefix("list_size =") {
                list_size = Some(parse_number::<usize>(v, line)?);
            } else {
                return Err(Error::parse(line, format!("unrecognised claim `{l}`")));
            }
        }
        let claimed_bound = claimed_bound.ok_or_else(|| Error::parse(0, "claim has no `dichoosability >=` line"))?;
        if list_size.is_some_and(|r| r + 1 != claimed_bound) {
            return Err(Error::parse(0, "claim: list_size must be one less than the bound"));
        }

        expect_section(&mut lines, "TRANSCRIPT")?;
        let mut colourings_checked = None;
        for (line, l) in lines {
            if l == TRANSCRIPT_STATEMENT {
                continue;
            }
            if let Some(v) = l.strip_prefix("colourings_checked =") {
                colourings_checked = Some(parse_number::<u128>(v, line)?);
            } else {
                return Err(Error::parse(line, format!("unrecognised transcript line `{l}`")));
            }
        }
        Ok(LowerBoundCertificate {
            graph,
            orientation,
            lists,
            claimed_bound,
            colourings_checked: colourings_checked
                .ok_or_else(|| Error::parse(0, "transcript has no `colourings_checked` line"))?,
        })
    }
}

fn parse_number<T: std::str::FromStr>(s: &str, line: usize) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(line, format!("expected a number, found `{}`", s.trim())))
}

/// The first check a certificate failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailedCheck {
    VertexCountMismatch { graph: usize, orientation: usize, lists: usize },
    NotAnOrientation { u: usize, v: usize },
    UnderlyingGraphMismatch,
    ListsNotUniform,
    ClaimMismatch { claimed: usize, list_size: usize },
    TranscriptCountMismatch { stated: u128, actual: u128 },
    DicolouringExists(Dicolouring),
}

impl fmt::Display for FailedCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailedCheck::VertexCountMismatch { graph, orientation, lists } => write!(
                f,
                "vertex counts differ: graph {graph}, orientation {orientation}, lists {lists}"
            ),
            FailedCheck::NotAnOrientation { u, v } => write!(f, "orientation has a digon between {u} and {v}"),
            FailedCheck::UnderlyingGraphMismatch => write!(f, "orientation's underlying graph differs from the graph"),
            FailedCheck::ListsNotUniform => write!(f, "lists do not all have the same size"),
            FailedCheck::ClaimMismatch { claimed, list_size } => {
                write!(f, "claimed bound {claimed} does not equal list size {list_size} + 1")
            }
            FailedCheck::TranscriptCountMismatch { stated, actual } => {
                write!(f, "transcript states {stated} colourings, lists give {actual}")
            }
            FailedCheck::DicolouringExists(c) => {
                write!(f, "an L-dicolouring exists: {:?}", c.colours())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateVerdict {
    pub failed: Option<FailedCheck>,
    /// Colourings enumerated during replay (0 when a structural check failed).
    pub replayed: u128,
}

impl CertificateVerdict {
    pub fn is_valid(&self) -> bool {
        self.failed.is_none()
    }
}

/// Structural checks first, then a full replay of all L-colourings.
/// `Err` only when the replay would exceed `caps.colouring_enumeration`.
pub fn verify_certificate(cert: &LowerBoundCertificate, caps: &Caps) -> Result<CertificateVerdict> {
    let reject = |check| {
        Ok(CertificateVerdict {
            failed: Some(check),
            replayed: 0,
        })
    };
    let n = cert.graph.n();
    if cert.orientation.n() != n || cert.lists.len() != n {
        return reject(FailedCheck::VertexCountMismatch {
            graph: n,
            orientation: cert.orientation.n(),
            lists: cert.lists.len(),
        });
    }
    if let Some((u, v)) = cert.orientation.find_digon() {
        return reject(FailedCheck::NotAnOrientation { u, v });
    }
    if cert.orientation.underlying_graph() != cert.graph {
        return reject(FailedCheck::UnderlyingGraphMismatch);
    }
    let Some(r) = cert.lists.uniform_size().or((n == 0).then_some(0)) else {
        return reject(FailedCheck::ListsNotUniform);
    };
    if cert.claimed_bound != r + 1 {
        return reject(FailedCheck::ClaimMismatch {
            claimed: cert.claimed_bound,
            list_size: r,
        });
    }
    let actual = cert.lists.colouring_count();
    if cert.colourings_checked != actual {
        return reject(FailedCheck::TranscriptCountMismatch {
            stated: cert.colourings_checked,
            actual,
        });
    }
    let (replayed, found) = replay_l_colourings(&cert.orientation, &cert.lists, caps)?;
    Ok(CertificateVerdict {
        failed: found.map(FailedCheck::DicolouringExists),
        replayed,
    })
}

/// Enumerates every L-colouring in odometer order until one is a
/// dicolouring. Returns the number visited and the dicolouring, if any.
pub fn replay_l_colourings(d: &Digraph, lists: &ListAssignment, caps: &Caps) -> Result<(u128, Option<Dicolouring>)> {
    let total = lists.colouring_count();
    if total > caps.colouring_enumeration {
        return Err(Error::cap("L-colourings to replay", caps.colouring_enumeration, total));
    }
    let out = d.out_masks()?;
    let n = d.n();
    let options: Vec<Vec<u32>> = lists.lists().iter().map(|l| l.iter().copied().collect()).collect();
    let mut digits = vec![0usize; n];
    let mut visited = 0u128;
    loop {
        visited += 1;
        let colours: Vec<u32> = (0..n).map(|v| options[v][digits[v]]).collect();
        let mut classes: std::collections::BTreeMap<u32, u64> = std::collections::BTreeMap::new();
        for (v, &c) in colours.iter().enumerate() {
            *classes.entry(c).or_default() |= 1 << v;
        }
        if classes.values().all(|&m| mask_is_acyclic(&out, m)) {
            return Ok((visited, Some(Dicolouring::new(colours)?)));
        }
        // Advance the odometer, last vertex fastest.
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok((visited, None));
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < options[pos].len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite, directed_cycle};

    fn c4_certificate() -> LowerBoundCertificate {
        // K_{2,2} with parts {0,1},{2,3}; the directed 4-cycle 0->2->1->3->0.
        let g = complete_bipartite(2, 2);
        let d = Digraph::from_arcs(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        LowerBoundCertificate::new(g, d, ListAssignment::constant(4, &[1]).unwrap()).unwrap()
    }

    #[test]
    fn valid_certificate() {
        let v = verify_certificate(&c4_certificate(), &Caps::default()).unwrap();
        assert!(v.is_valid());
        assert_eq!(v.replayed, 1);
    }

    #[test]
    fn enlarged_list_breaks_certificate() {
        let mut cert = c4_certificate();
        let mut lists: Vec<_> = cert.lists.lists().to_vec();
        lists[0].insert(2);
        cert.lists = ListAssignment::new(lists).unwrap();
        let v = verify_certificate(&cert, &Caps::default()).unwrap();
        assert_eq!(v.failed, Some(FailedCheck::ListsNotUniform));

        // With every list enlarged uniformly the replay finds a dicolouring.
        let mut cert = c4_certificate();
        cert.lists = ListAssignment::constant(4, &[1, 2]).unwrap();
        cert.claimed_bound = 3;
        cert.colourings_checked = 16;
        let v = verify_certificate(&cert, &Caps::default()).unwrap();
        assert!(matches!(v.failed, Some(FailedCheck::DicolouringExists(_))));
    }

    #[test]
    fn digon_is_rejected() {
        let mut cert = c4_certificate();
        cert.orientation = Digraph::from_arcs(4, [(0, 2), (2, 0), (2, 1), (1, 3), (3, 0)]).unwrap();
        let v = verify_certificate(&cert, &Caps::default()).unwrap();
        assert_eq!(v.failed, Some(FailedCheck::NotAnOrientation { u: 0, v: 2 }));
        assert!(!v.is_valid());
    }

    #[test]
    fn other_structural_failures() {
        let mut cert = c4_certificate();
        cert.orientation = directed_cycle(4).unwrap();
        assert_eq!(
            verify_certificate(&cert, &Caps::default()).unwrap().failed,
            Some(FailedCheck::UnderlyingGraphMismatch)
        );
        let mut cert = c4_certificate();
        cert.claimed_bound = 3;
        assert!(matches!(
            verify_certificate(&cert, &Caps::default()).unwrap().failed,
            Some(FailedCheck::ClaimMismatch { .. })
        ));
        let mut cert = c4_certificate();
        cert.colourings_checked = 5;
        assert!(matches!(
            verify_certificate(&cert, &Caps::default()).unwrap().failed,
            Some(FailedCheck::TranscriptCountMismatch { .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        let cert = c4_certificate();
        let text = cert.to_text();
        assert_eq!(LowerBoundCertificate::parse(&text).unwrap(), cert);
        let with_comments = format!("# manifest.tool = x\n{text}");
        assert_eq!(LowerBoundCertificate::parse(&with_comments).unwrap(), cert);
    }

    #[test]
    fn malformed_text() {
        let text = c4_certificate().to_text();
        assert!(LowerBoundCertificate::parse(&text.replace("[CLAIM]", "[CLAIMS]")).is_err());
        assert!(LowerBoundCertificate::parse(&text.replace("list_size = 1", "list_size = 4")).is_err());
        assert!(LowerBoundCertificate::parse(&text.replace("colourings_checked = 1\n", "")).is_err());
        assert!(LowerBoundCertificate::parse("[GRAPH]\ngraph 2\n").is_err());
    }
}
