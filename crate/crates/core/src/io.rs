//! graph6, edge lists, DOT and JSON certificates.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::classifier::Certificate;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed graph6: {0}")]
    MalformedG6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

const G6_HEADER: &str = ">>graph6<<";
const G6_MAX_ORDER: usize = (1 << 36) - 1;

fn g6_order_prefix(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// The graph6 line for `g`, without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= G6_MAX_ORDER, "order {n} not representable in graph6");
    let mut out = Vec::new();
    g6_order_prefix(n, &mut out);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Parses one graph6 line. An optional `>>graph6<<` header and trailing
/// line break are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let bad = |m: &str| FormatError::MalformedG6(m.to_string());
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(&c) = bytes.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(FormatError::MalformedG6(format!(
            "byte {c:#04x} out of range"
        )));
    }
    let sextet = |slice: &[u8]| {
        slice
            .iter()
            .fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize)
    };
    let (n, rest) = if bytes[0] != 126 {
        (sextet(&bytes[..1]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(bad("truncated order prefix"));
        }
        (sextet(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(bad("truncated order prefix"));
        }
        (sextet(&bytes[2..8]), &bytes[8..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if rest.len() < need {
        return Err(bad("truncated bit vector"));
    }
    if rest.len() > need {
        return Err(bad("trailing characters"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.try_add_edge(i, j).expect("each pair appears once");
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 && (rest[need - 1] - 63) & ((1 << (6 - nbits % 6)) - 1) != 0 {
        return Err(bad("nonzero padding bits"));
    }
    Ok(g)
}

/// Parses `"n m"` followed by `m` lines of `"u v"`. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    let bad = |m: String| FormatError::MalformedEdgeList(m);
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let pair = |no: usize, l: &str| -> Result<(usize, usize), FormatError> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(bad(format!("line {}: expected two integers", no + 1))),
        }
    };
    let (no, header) = lines.next().ok_or_else(|| bad("missing header".into()))?;
    let (n, m) = pair(no, header)?;
    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (no, l) in lines {
        let (u, v) = pair(no, l)?;
        if u >= n || v >= n {
            return Err(bad(format!(
                "line {}: vertex out of range for order {n}",
                no + 1
            )));
        }
        g.try_add_edge(u, v)
            .map_err(|e| bad(format!("line {}: {e}", no + 1)))?;
        seen += 1;
    }
    if seen != m {
        return Err(bad(format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

/// Undirected DOT. `labels`, when given, names vertex `i` by `labels[i]`.
pub fn write_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut s = String::from("graph G {\n");
    for v in g.vertices() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                writeln!(s, "  {v} [label=\"{}\"];", label.replace('"', "\\\"")).unwrap()
            }
            None => writeln!(s, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Stable JSON form of a [`Certificate`]; absent fields are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_g6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subdivided_edges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pendant_hosts: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exception_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root_g6: Option<String>,
}

impl CertificateJson {
    pub fn new(cert: &Certificate, root: Option<&Graph>) -> Self {
        let mut j = CertificateJson {
            verdict: match cert {
                Certificate::Exceptional { .. } => "exceptional",
                Certificate::Decorated(_) => "decorated",
                Certificate::Rejected(_) => "rejected",
            },
            base_g6: None,
            subdivided_edges: None,
            pendant_hosts: None,
            exception_index: None,
            reason: None,
            witness: None,
            root_g6: root.map(write_graph6),
        };
        match cert {
            Certificate::Exceptional { index } => j.exception_index = Some(*index),
            Certificate::Decorated(d) => {
                j.base_g6 = Some(write_graph6(&d.base));
                j.subdivided_edges = Some(d.subdivided_edges.clone());
                j.pendant_hosts = Some(d.pendant_hosts.clone());
            }
            Certificate::Rejected(r) => {
                j.reason = Some(r.reason.to_string());
                j.witness = Some(r.witness.clone());
            }
        }
        j
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}
