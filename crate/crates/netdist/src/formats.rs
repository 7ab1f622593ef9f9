//! File formats: edge-list text, contact-event CSV, dense correlation CSV.

use std::fs;
use std::path::Path;

use netdist_core::graph::ContactEvent;
use netdist_core::{Graph, Matrix};

use crate::{CliError, CliResult};

/// Parsed edge-list file before graph construction.
pub struct EdgeList {
    pub header_n: Option<usize>,
    pub edges: Vec<(usize, usize, f64)>,
    pub max_id: Option<usize>,
}

impl EdgeList {
    /// Vertex count: the explicit header when present, otherwise max id + 1.
    pub fn vertex_count(&self) -> usize {
        self.header_n
            .unwrap_or_else(|| self.max_id.map_or(0, |m| m + 1))
    }

    pub fn into_graph(self, n: usize) -> CliResult<Graph> {
        Graph::build(n, self.edges).map_err(CliError::from)
    }
}

/// Edge-list text: one edge per line as `i j` or `i j w`, `#` comments,
/// whitespace-separated. An optional first line `n=<count>` fixes the vertex
/// count; otherwise it is max id + 1.
pub fn parse_edge_list(text: &str, origin: &str) -> CliResult<EdgeList> {
    let mut header_n = None;
    let mut edges = Vec::new();
    let mut max_id = None;
    let mut first_content_line = true;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if first_content_line {
            first_content_line = false;
            if let Some(rest) = line.strip_prefix("n=") {
                header_n = Some(rest.trim().parse::<usize>().map_err(|_| {
                    CliError::Parse(format!("{origin}:{}: bad vertex count {rest:?}", lineno + 1))
                })?);
                continue;
            }
        }
        let mut tokens = line.split_whitespace();
        let mut next_id = |what: &str| -> CliResult<usize> {
            tokens
                .next()
                .ok_or_else(|| {
                    CliError::Parse(format!("{origin}:{}: missing {what}", lineno + 1))
                })?
                .parse::<usize>()
                .map_err(|_| CliError::Parse(format!("{origin}:{}: bad {what}", lineno + 1)))
        };
        let i = next_id("source vertex")?;
        let j = next_id("target vertex")?;
        let w = match tokens.next() {
            Some(tok) => tok.parse::<f64>().map_err(|_| {
                CliError::Parse(format!("{origin}:{}: bad weight {tok:?}", lineno + 1))
            })?,
            None => 1.0,
        };
        if tokens.next().is_some() {
            return Err(CliError::Parse(format!(
                "{origin}:{}: trailing tokens after edge",
                lineno + 1
            )));
        }
        max_id = Some(max_id.map_or(i.max(j), |m: usize| m.max(i).max(j)));
        edges.push((i, j, w));
    }
    Ok(EdgeList {
        header_n,
        edges,
        max_id,
    })
}

pub fn read_edge_list(path: &Path) -> CliResult<Graph> {
    let text = fs::read_to_string(path)?;
    let parsed = parse_edge_list(&text, &path.display().to_string())?;
    let n = parsed.vertex_count();
    parsed.into_graph(n)
}

/// Write an edge list with an explicit `n=` header (so empty graphs round
/// trip). Unit weights are omitted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (i, j, w) in g.edges() {
        if w == 1.0 {
            out.push_str(&format!("{i} {j}\n"));
        } else {
            out.push_str(&format!("{i} {j} {w}\n"));
        }
    }
    out
}

/// Contact-event CSV with header `t,u,v`, one event per row.
pub fn parse_contacts_csv(text: &str, origin: &str) -> CliResult<Vec<ContactEvent>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == "t,u,v" => {}
        _ => {
            return Err(CliError::Parse(format!(
                "{origin}: expected header line \"t,u,v\""
            )))
        }
    }
    let mut events = Vec::new();
    for (lineno, raw) in lines {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(CliError::Parse(format!(
                "{origin}:{}: expected 3 fields, got {}",
                lineno + 1,
                fields.len()
            )));
        }
        let t = fields[0]
            .parse::<f64>()
            .map_err(|_| CliError::Parse(format!("{origin}:{}: bad timestamp", lineno + 1)))?;
        let u = fields[1]
            .parse::<usize>()
            .map_err(|_| CliError::Parse(format!("{origin}:{}: bad vertex id", lineno + 1)))?;
        let v = fields[2]
            .parse::<usize>()
            .map_err(|_| CliError::Parse(format!("{origin}:{}: bad vertex id", lineno + 1)))?;
        events.push(ContactEvent { t, u, v });
    }
    Ok(events)
}

pub fn read_contacts_csv(path: &Path) -> CliResult<Vec<ContactEvent>> {
    let text = fs::read_to_string(path)?;
    parse_contacts_csv(&text, &path.display().to_string())
}

/// Dense correlation matrix: n rows of n comma-separated reals.
pub fn parse_correlation_csv(text: &str, origin: &str) -> CliResult<Matrix> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|tok| tok.trim().parse::<f64>())
            .collect::<Result<Vec<f64>, _>>()
            .map_err(|_| CliError::Parse(format!("{origin}:{}: bad entry", lineno + 1)))?;
        rows.push(row);
    }
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Parse(format!("{origin}: matrix is not square")));
    }
    Ok(Matrix::from_rows(&rows))
}

pub fn read_correlation_csv(path: &Path) -> CliResult<Matrix> {
    let text = fs::read_to_string(path)?;
    parse_correlation_csv(&text, &path.display().to_string())
}

/// Read a directory of per-interval edge lists (`0000.edges`,
/// `0001.edges`, ...) in name order, unifying the vertex count to the
/// largest seen across files.
pub fn read_edges_dir(dir: &Path) -> CliResult<Vec<Graph>> {
    let mut paths: Vec<_> = fs::read_dir(dir)?
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "edges"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::Parse(format!(
            "{}: no .edges files found",
            dir.display()
        )));
    }
    let mut parsed = Vec::with_capacity(paths.len());
    for path in &paths {
        let text = fs::read_to_string(path)?;
        parsed.push(parse_edge_list(&text, &path.display().to_string())?);
    }
    let n = parsed
        .iter()
        .map(EdgeList::vertex_count)
        .max()
        .unwrap_or(0);
    parsed.into_iter().map(|p| p.into_graph(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::weighted(4, &[(0, 1, 1.0), (1, 2, 0.5), (0, 3, 2.0)]).unwrap();
        let text = write_edge_list(&g);
        let parsed = parse_edge_list(&text, "test").unwrap();
        assert_eq!(parsed.header_n, Some(4));
        let g2 = parsed.into_graph(4).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn edge_list_without_header_uses_max_id() {
        let parsed = parse_edge_list("0 1\n2 3 0.5\n", "test").unwrap();
        assert_eq!(parsed.vertex_count(), 4);
        let parsed = parse_edge_list("# only comments\n", "test").unwrap();
        assert_eq!(parsed.vertex_count(), 0);
    }

    #[test]
    fn edge_list_comments_and_blank_lines() {
        let text = "# a triangle\nn=3\n0 1 # first\n\n1 2\n0 2\n";
        let parsed = parse_edge_list(text, "test").unwrap();
        assert_eq!(parsed.edges.len(), 3);
        assert_eq!(parsed.header_n, Some(3));
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("0\n", "t").is_err());
        assert!(parse_edge_list("0 x\n", "t").is_err());
        assert!(parse_edge_list("0 1 2 3\n", "t").is_err());
        assert!(parse_edge_list("n=notanumber\n", "t").is_err());
    }

    #[test]
    fn contacts_csv_parses() {
        let events = parse_contacts_csv("t,u,v\n0.5,0,1\n1.5, 2, 3\n", "test").unwrap();
        assert_eq!(events.len(), 2);
        assert_eq!(events[1].u, 2);
        assert!(parse_contacts_csv("time,u,v\n", "test").is_err());
        assert!(parse_contacts_csv("t,u,v\n1.0,2\n", "test").is_err());
    }

    #[test]
    fn correlation_csv_parses() {
        let m = parse_correlation_csv("1.0, -0.8\n-0.8, 1.0\n", "test").unwrap();
        assert_eq!(m.n(), 2);
        assert_eq!(m[(0, 1)], -0.8);
        assert!(parse_correlation_csv("1.0, 2.0\n3.0\n", "test").is_err());
    }
}
