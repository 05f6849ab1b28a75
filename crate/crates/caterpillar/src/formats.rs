//! Text formats for graphs: the edge-list format used on stdin and stdout,
//! single-byte-header graph6 lines, and DOT blocks for eyeballing.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

/// Edge-list text: first line the vertex count, then one `u v` pair per
/// line. Lines starting with `#` are comments.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n_vertices());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: invalid vertex count {token:?}")]
    InvalidHeader { line: usize, token: String },
    #[error("line {line}: expected \"u v\", got {text:?}")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: edge ({u}, {v}) references a vertex outside 0..{n_vertices}")]
    VertexOutOfRange {
        line: usize,
        u: usize,
        v: usize,
        n_vertices: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: a graph needs at least one vertex")]
    ZeroVertices { line: usize },
}

/// Parses a stream of edge-list blocks separated by blank lines. Comment
/// lines neither terminate a block nor count as content. Errors carry the
/// line number within the whole input, 1-based.
pub fn parse_edge_list_stream(text: &str) -> Result<Vec<Graph>, EdgeListError> {
    let mut graphs = Vec::new();
    let mut block: Option<BlockParser> = None;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.trim();
        if content.starts_with('#') {
            continue;
        }
        if content.is_empty() {
            if let Some(parser) = block.take() {
                graphs.push(parser.finish());
            }
            continue;
        }
        match block.as_mut() {
            None => block = Some(BlockParser::start(line, content)?),
            Some(parser) => parser.edge_line(line, content)?,
        }
    }
    if let Some(parser) = block.take() {
        graphs.push(parser.finish());
    }
    Ok(graphs)
}

/// Parses input expected to hold exactly one edge-list block; blank lines
/// around it are tolerated, a second block is not.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut graphs = parse_edge_list_stream(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("length was checked")),
        _ => Err(EdgeListError::InvalidHeader {
            line: text.lines().count() + 1,
            token: format!("{} graphs, expected 1", graphs.len()),
        }),
    }
}

struct BlockParser {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
    seen: BTreeSet<(usize, usize)>,
}

impl BlockParser {
    fn start(line: usize, content: &str) -> Result<Self, EdgeListError> {
        let n_vertices = content
            .parse::<usize>()
            .map_err(|_| EdgeListError::InvalidHeader {
                line,
                token: content.to_string(),
            })?;
        if n_vertices == 0 {
            return Err(EdgeListError::ZeroVertices { line });
        }
        Ok(Self {
            n_vertices,
            edges: Vec::new(),
            seen: BTreeSet::new(),
        })
    }

    fn edge_line(&mut self, line: usize, content: &str) -> Result<(), EdgeListError> {
        let mut tokens = content.split_whitespace();
        let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => match (u.parse::<usize>(), v.parse::<usize>()) {
                (Ok(u), Ok(v)) => (u, v),
                _ => {
                    return Err(EdgeListError::MalformedEdge {
                        line,
                        text: content.to_string(),
                    })
                }
            },
            _ => {
                return Err(EdgeListError::MalformedEdge {
                    line,
                    text: content.to_string(),
                })
            }
        };
        if u >= self.n_vertices || v >= self.n_vertices {
            return Err(EdgeListError::VertexOutOfRange {
                line,
                u,
                v,
                n_vertices: self.n_vertices,
            });
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(EdgeListError::DuplicateEdge {
                line,
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self) -> Graph {
        Graph::new(self.n_vertices, self.edges).expect("block edges were validated line by line")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph6 line is empty")]
    Empty,
    #[error("vertex count {0} exceeds the single-byte graph6 limit of 62")]
    TooManyVertices(usize),
    #[error("multi-byte graph6 size headers are unsupported")]
    MultiByteHeader,
    #[error("byte {position} is not in the graph6 range 63..=126")]
    InvalidByte { position: usize },
    #[error("expected {expected} data bytes after the header, got {actual}")]
    WrongLength { expected: usize, actual: usize },
    #[error("padding bits past the last vertex pair must be zero")]
    NonzeroPadding,
}

/// Position of the pair `(i, j)`, `i < j`, in the graph6 bit order, which
/// walks the upper triangle column by column.
fn pair_bit_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Encodes as a single graph6 line (no trailing newline): one size byte
/// for up to 62 vertices, then the upper-triangle bits packed big-endian
/// into 6-bit chunks offset by 63.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n_vertices();
    if n > 62 {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let bit_count = n * (n - 1) / 2;
    let mut bits = vec![false; bit_count.div_ceil(6) * 6];
    for &(u, v) in g.edges() {
        bits[pair_bit_index(u, v)] = true;
    }
    let mut out = String::with_capacity(1 + bits.len() / 6);
    out.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let value = chunk.iter().fold(0u8, |acc, &bit| (acc << 1) | bit as u8);
        out.push((63 + value) as char);
    }
    Ok(out)
}

pub fn from_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let (&header, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if header == 126 {
        return Err(Graph6Error::MultiByteHeader);
    }
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::InvalidByte { position: 1 });
    }
    let n = (header - 63) as usize;
    if n == 0 {
        // A graph with no vertices encodes as a bare "?" and has no
        // in-memory representation here.
        return Err(Graph6Error::Empty);
    }
    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            actual: body.len(),
        });
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for (offset, &byte) in body.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte {
                position: offset + 2,
            });
        }
        let value = byte - 63;
        for shift in (0..6).rev() {
            bits.push(value >> shift & 1 == 1);
        }
    }
    if bits[bit_count..].iter().any(|&bit| bit) {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bits[pair_bit_index(i, j)] {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(n, edges).expect("triangle bits give distinct in-range pairs"))
}

/// Anonymous undirected DOT block; isolated vertices are declared so the
/// drawing shows them.
pub fn to_dot(g: &Graph) -> String {
    let degrees = g.degrees();
    let mut out = String::from("graph {\n");
    for (v, &degree) in degrees.iter().enumerate() {
        if degree == 0 {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
