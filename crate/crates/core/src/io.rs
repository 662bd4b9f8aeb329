//! Text loaders: whitespace-separated edge lists and Matrix Market
//! coordinate files.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeListOptions {
    /// Drop repeated undirected edges. The surviving edges are sorted.
    pub dedupe: bool,
    /// Densify non-contiguous IDs by ascending original ID.
    pub remap: bool,
}

impl Default for EdgeListOptions {
    fn default() -> Self {
        EdgeListOptions {
            dedupe: false,
            remap: true,
        }
    }
}

/// Input file formats understood by [`load_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    MatrixMarket,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "el" | "snap" => Ok(Format::EdgeList),
            "mtx" | "matrixmarket" => Ok(Format::MatrixMarket),
            other => Err(Error::param(format!("unknown graph format `{other}`"))),
        }
    }
}

pub fn load_graph(path: impl AsRef<Path>, format: Format, options: EdgeListOptions) -> Result<Graph> {
    let reader = BufReader::new(File::open(path)?);
    match format {
        Format::EdgeList => load_edge_list(reader, options),
        Format::MatrixMarket => load_matrix_market(reader),
    }
}

fn canonical(u: VertexId, v: VertexId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

fn sort_dedupe(edges: &mut Vec<Edge>) {
    edges.sort_unstable();
    edges.dedup();
}

fn parse_token<T: FromStr>(token: &str, line: usize) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("`{token}` is not a vertex id")))
}

/// Loads a SNAP-style edge list: two integer IDs per line, `#` or `%`
/// starting a comment line.
pub fn load_edge_list<R: BufRead>(source: R, options: EdgeListOptions) -> Result<Graph> {
    let mut raw: Vec<(u64, u64)> = Vec::new();
    for (index, line) in source.lines().enumerate() {
        let line = line?;
        let number = index + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::parse(number, "expected exactly two vertex ids"));
        };
        raw.push((parse_token(a, number)?, parse_token(b, number)?));
    }

    let max_id = raw.iter().map(|&(a, b)| a.max(b)).max();
    let contiguous = match max_id {
        None => true,
        Some(max) => {
            let ids: BTreeSet<u64> = raw.iter().flat_map(|&(a, b)| [a, b]).collect();
            ids.len() as u64 == max + 1
        }
    };

    let (n, id_map, mut edges) = if options.remap && !contiguous {
        let ids: Vec<u64> = raw
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let dense = |id: u64| ids.binary_search(&id).expect("id collected above") as VertexId;
        let edges = raw
            .iter()
            .map(|&(a, b)| canonical(dense(a), dense(b)))
            .collect();
        (ids.len(), Some(ids), edges)
    } else {
        let n = max_id.map_or(0, |m| m + 1);
        if n > VertexId::MAX as u64 {
            return Err(Error::param(format!(
                "vertex id {} does not fit in 32 bits (enable remapping)",
                n - 1
            )));
        }
        let edges = raw
            .iter()
            .map(|&(a, b)| canonical(a as VertexId, b as VertexId))
            .collect();
        (n as usize, None, edges)
    };

    if options.dedupe {
        sort_dedupe(&mut edges);
    }
    let graph = Graph::from_edges(n, edges)?;
    match id_map {
        Some(map) => graph.with_id_map(map),
        None => Ok(graph),
    }
}

/// Loads a Matrix Market coordinate file as an undirected graph. Values are
/// discarded and mirrored entries of a `general` matrix collapse to one edge.
pub fn load_matrix_market<R: BufRead>(source: R) -> Result<Graph> {
    let mut lines = source.lines().enumerate();

    let header = match lines.next() {
        Some((_, line)) => line?,
        None => return Err(Error::Format("missing header".into())),
    };
    let fields: Vec<String> = header
        .split_whitespace()
        .map(|s| s.to_ascii_lowercase())
        .collect();
    if fields.len() != 5 || fields[0] != "%%matrixmarket" || fields[1] != "matrix" {
        return Err(Error::Format(format!("unrecognised header `{header}`")));
    }
    if fields[2] != "coordinate" {
        return Err(Error::Format(format!("unsupported layout `{}`", fields[2])));
    }
    if !matches!(fields[3].as_str(), "pattern" | "real" | "integer" | "double") {
        return Err(Error::Format(format!("unsupported field `{}`", fields[3])));
    }
    if !matches!(fields[4].as_str(), "general" | "symmetric") {
        return Err(Error::Format(format!("unsupported symmetry `{}`", fields[4])));
    }

    let mut size: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (index, line) in lines {
        let line = line?;
        let number = index + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match size {
            None => {
                let [rows, cols, nnz] = tokens[..] else {
                    return Err(Error::Format(format!(
                        "line {number}: size line needs rows, cols and entry count"
                    )));
                };
                let dims: (usize, usize, usize) = (
                    parse_token(rows, number)?,
                    parse_token(cols, number)?,
                    parse_token(nnz, number)?,
                );
                if dims.0.max(dims.1) > VertexId::MAX as usize {
                    return Err(Error::Format("dimension exceeds 32-bit ids".into()));
                }
                edges.reserve(dims.2);
                size = Some(dims);
            }
            Some((rows, cols, _)) => {
                if tokens.len() < 2 {
                    return Err(Error::parse(number, "entry needs a row and a column"));
                }
                let i: usize = parse_token(tokens[0], number)?;
                let j: usize = parse_token(tokens[1], number)?;
                if i == 0 || j == 0 || i > rows || j > cols {
                    return Err(Error::Format(format!(
                        "line {number}: entry ({i}, {j}) outside {rows}x{cols}"
                    )));
                }
                edges.push(canonical((i - 1) as VertexId, (j - 1) as VertexId));
            }
        }
    }

    let Some((rows, cols, nnz)) = size else {
        return Err(Error::Format("missing size line".into()));
    };
    if edges.len() != nnz {
        return Err(Error::Format(format!(
            "size line declares {nnz} entries, found {}",
            edges.len()
        )));
    }
    sort_dedupe(&mut edges);
    Graph::from_edges(rows.max(cols), edges)
}

/// Writes `u v` lines in edge order.
pub fn write_edge_list<W: std::io::Write>(graph: &Graph, mut sink: W) -> std::io::Result<()> {
    for &(u, v) in graph.edges() {
        writeln!(sink, "{} {}", graph.original_id(u), graph.original_id(v))?;
    }
    sink.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(text: &str, dedupe: bool, remap: bool) -> Result<Graph> {
        load_edge_list(text.as_bytes(), EdgeListOptions { dedupe, remap })
    }

    const HEADER: &str = "%%MatrixMarket matrix coordinate pattern symmetric\n";

    #[test]
    fn edge_list_examples() {
        let g = el("0 1\n1 2", false, true).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (3, 2));
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.id_map(), None);

        let g = el("# c\n5 9", false, true).unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.id_map(), Some(&[5, 9][..]));

        let g = el("0 1\n1 0\n0 0", true, false).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (2, 2));
        assert_eq!(g.edges(), &[(0, 0), (0, 1)]);
    }

    #[test]
    fn edge_list_keeps_duplicates_without_dedupe() {
        let g = el("0 1\n1 0\n% note\n\n0 0", false, false).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 1), (0, 0)]);
    }

    #[test]
    fn edge_list_without_remap_uses_raw_ids() {
        let g = el("5 9", false, false).unwrap();
        assert_eq!(g.num_vertices(), 10);
        assert_eq!(g.edges(), &[(5, 9)]);
    }

    #[test]
    fn edge_list_remap_is_ascending() {
        let g = el("30 10\n20 30", false, true).unwrap();
        assert_eq!(g.id_map(), Some(&[10, 20, 30][..]));
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        match el("0 1\n1 x\n", false, true) {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match el("# c\n0 1 2\n", false, true) {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(el("7\n", false, true), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(el("-1 2\n", false, true), Err(Error::Parse { .. })));
    }

    #[test]
    fn empty_edge_list_is_empty_graph() {
        let g = el("", true, true).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (0, 0));
        let g = el("# only a comment\n", false, false).unwrap();
        assert_eq!(g.num_vertices(), 0);
    }

    #[test]
    fn matrix_market_examples() {
        let g = load_matrix_market(format!("{HEADER}4 4 2\n1 2\n3 4").as_bytes()).unwrap();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);

        let text = "%%MatrixMarket matrix coordinate real general\n% comment\n2 2 1\n1 2 0.5\n";
        let g = load_matrix_market(text.as_bytes()).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);

        let g = load_matrix_market(format!("{HEADER}2 2 1\n1 1").as_bytes()).unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.edges(), &[(0, 0)]);
    }

    #[test]
    fn matrix_market_general_collapses_mirrored_entries() {
        let text = "%%MatrixMarket matrix coordinate pattern general\n3 3 3\n1 2\n2 1\n3 2\n";
        let g = load_matrix_market(text.as_bytes()).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn matrix_market_rejects_unsupported_headers() {
        for header in [
            "%%MatrixMarket matrix array real general",
            "%%MatrixMarket matrix coordinate complex general",
            "%%MatrixMarket matrix coordinate real hermitian",
            "%%MatrixMarket vector coordinate real general",
            "not a header",
        ] {
            let text = format!("{header}\n2 2 1\n1 2\n");
            assert!(
                matches!(load_matrix_market(text.as_bytes()), Err(Error::Format(_))),
                "{header}"
            );
        }
    }

    #[test]
    fn matrix_market_rejects_count_and_bounds_mismatch() {
        let short = format!("{HEADER}3 3 2\n1 2\n");
        assert!(matches!(load_matrix_market(short.as_bytes()), Err(Error::Format(_))));
        let long = format!("{HEADER}3 3 1\n1 2\n2 3\n");
        assert!(matches!(load_matrix_market(long.as_bytes()), Err(Error::Format(_))));
        let oob = format!("{HEADER}3 3 1\n1 4\n");
        assert!(matches!(load_matrix_market(oob.as_bytes()), Err(Error::Format(_))));
        let zero = format!("{HEADER}3 3 1\n0 1\n");
        assert!(matches!(load_matrix_market(zero.as_bytes()), Err(Error::Format(_))));
    }

    #[test]
    fn written_edge_list_reloads() {
        let g = el("5 9\n9 12", false, true).unwrap();
        let mut out = Vec::new();
        write_edge_list(&g, &mut out).unwrap();
        assert_eq!(String::from_utf8(out.clone()).unwrap(), "5 9\n9 12\n");
        assert_eq!(el(std::str::from_utf8(&out).unwrap(), false, true).unwrap(), g);
    }
}
