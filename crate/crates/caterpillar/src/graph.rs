//! Concrete trees: caterpillar recognition, spine encoding and decoding,
//! and a rooted canonical form serving as an independent isomorphism check.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::spine::{CanonicalSpine, Spine};

/// Undirected simple graph over vertices `0..n_vertices`. Edges are stored
/// normalized: each pair ordered low-high, the list sorted and duplicate
/// free. Tree-ness is not an invariant here; [`recognize`] classifies it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("edge ({u}, {v}) references a vertex outside 0..{n_vertices}")]
    VertexOutOfRange {
        u: usize,
        v: usize,
        n_vertices: usize,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
}

impl Graph {
    pub fn new(
        n_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n_vertices == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n_vertices || v >= n_vertices {
                return Err(GraphError::VertexOutOfRange { u, v, n_vertices });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        Ok(Self {
            n_vertices,
            edges: normalized,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Normalized edge list: low-high pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut degrees = vec![0; self.n_vertices];
        for &(u, v) in &self.edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        degrees
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adjacency = vec![Vec::new(); self.n_vertices];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        adjacency
    }

    pub fn is_connected(&self) -> bool {
        let adjacency = self.adjacency();
        let mut seen = vec![false; self.n_vertices];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut visited = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    visited += 1;
                    queue.push_back(w);
                }
            }
        }
        visited == self.n_vertices
    }
}

/// Why a graph fails the tree test. Display uses single snake_case tokens
/// so classification lines stay machine-splittable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum NotATreeReason {
    #[error("wrong_edge_count")]
    WrongEdgeCount { n_vertices: usize, n_edges: usize },
    #[error("disconnected")]
    Disconnected,
}

/// Outcome of [`recognize`]. The caterpillar variant carries the canonical
/// spine, which doubles as the isomorphism certificate; `DegenerateSmall`
/// covers the 1- and 2-vertex trees that have no spine at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    NotATree(NotATreeReason),
    TreeNotCaterpillar,
    Caterpillar(CanonicalSpine),
    DegenerateSmall(usize),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::NotATree(reason) => write!(f, "not_a_tree {reason}"),
            Classification::TreeNotCaterpillar => f.write_str("tree_not_caterpillar"),
            Classification::Caterpillar(spine) => write!(f, "caterpillar {spine}"),
            Classification::DegenerateSmall(n) => write!(f, "degenerate_small {n}"),
        }
    }
}

/// Classifies a graph: tree or not, and if a tree whether one round of
/// leaf deletion leaves a path. For caterpillars the canonical spine is
/// read straight off that core path.
pub fn recognize(g: &Graph) -> Classification {
    let n = g.n_vertices();
    if g.edges().len() != n - 1 {
        return Classification::NotATree(NotATreeReason::WrongEdgeCount {
            n_vertices: n,
            n_edges: g.edges().len(),
        });
    }
    if !g.is_connected() {
        return Classification::NotATree(NotATreeReason::Disconnected);
    }
    if n <= 2 {
        return Classification::DegenerateSmall(n);
    }
    match core_path_spine(g) {
        Some(spine) => Classification::Caterpillar(spine.canonicalize()),
        None => Classification::TreeNotCaterpillar,
    }
}

/// For a tree on >= 3 vertices: reads the spine off the core (the vertices
/// of degree >= 2) if that core is a path, walking it end to end. Each core
/// vertex contributes degree - 2 leaves; the two subtracted neighbors are
/// its path neighbors, or at a path end one neighbor plus the leaf that
/// caps the maximal path.
fn core_path_spine(g: &Graph) -> Option<Spine> {
    let degrees = g.degrees();
    let adjacency = g.adjacency();
    let core: Vec<usize> = (0..g.n_vertices()).filter(|&v| degrees[v] >= 2).collect();
    let mut in_core = vec![false; g.n_vertices()];
    for &v in &core {
        in_core[v] = true;
    }
    let core_degree = |v: usize| adjacency[v].iter().filter(|&&w| in_core[w]).count();
    if core.iter().any(|&v| core_degree(v) > 2) {
        return None;
    }
    let start = core
        .iter()
        .copied()
        .find(|&v| core_degree(v) <= 1)
        .expect("an acyclic core with maximum degree 2 has an end vertex");
    let mut components = Vec::with_capacity(core.len());
    let mut prev = usize::MAX;
    let mut current = start;
    loop {
        components.push(degrees[current] - 2);
        let next = adjacency[current]
            .iter()
            .copied()
            .find(|&w| in_core[w] && w != prev);
        match next {
            Some(w) => {
                prev = current;
                current = w;
            }
            None => break,
        }
    }
    debug_assert_eq!(components.len(), core.len(), "tree cores are connected");
    Some(Spine::from_components_unchecked(components))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a caterpillar on >= 3 vertices: {classification}")]
pub struct NotACaterpillar {
    pub classification: Classification,
}

/// Tree to canonical spine. Fails with the offending classification for
/// anything [`recognize`] does not accept as a caterpillar.
pub fn encode(g: &Graph) -> Result<CanonicalSpine, NotACaterpillar> {
    match recognize(g) {
        Classification::Caterpillar(spine) => Ok(spine),
        classification => Err(NotACaterpillar { classification }),
    }
}

/// Spine to tree, with a fixed vertex numbering so output bytes are
/// reproducible: 0 is the left endpoint leaf, 1..=k the spine vertices left
/// to right, k+1 the right endpoint leaf, and remaining leaves follow
/// grouped by spine position in ascending order.
pub fn decode(s: &Spine) -> Graph {
    let k = s.len();
    let mut edges = Vec::with_capacity(s.component_sum() + k + 1);
    edges.push((0, 1));
    for i in 1..k {
        edges.push((i, i + 1));
    }
    edges.push((k, k + 1));
    let mut next_leaf = k + 2;
    for (i, &count) in s.components().iter().enumerate() {
        for _ in 0..count {
            edges.push((i + 1, next_leaf));
            next_leaf += 1;
        }
    }
    Graph::new(next_leaf, edges).expect("decoded edges are simple by construction")
}

/// Canonical form for unlabeled trees: equal certificates characterize
/// isomorphic trees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsoCertificate(String);

impl IsoCertificate {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for IsoCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Canonicalizes a tree by rooting at its center. The certificate is the
/// center count, a colon, then the rooted code: a leaf is `()`, an inner
/// vertex wraps its children's codes in sorted order. A bicentral tree
/// takes the smaller of its two center-rooted codes; the count prefix keeps
/// unicentral and bicentral codes from ever comparing equal.
pub fn iso_certificate(g: &Graph) -> Result<IsoCertificate, NotATreeReason> {
    let n = g.n_vertices();
    if g.edges().len() != n - 1 {
        return Err(NotATreeReason::WrongEdgeCount {
            n_vertices: n,
            n_edges: g.edges().len(),
        });
    }
    if !g.is_connected() {
        return Err(NotATreeReason::Disconnected);
    }
    let adjacency = g.adjacency();
    let centers = tree_centers(&adjacency);
    let code = centers
        .iter()
        .map(|&c| rooted_code(&adjacency, c))
        .min()
        .expect("every tree has a center");
    Ok(IsoCertificate(format!("{}:{}", centers.len(), code)))
}

/// The one or two middle vertices left by stripping leaf layers until at
/// most two vertices remain.
fn tree_centers(adjacency: &[Vec<usize>]) -> Vec<usize> {
    let n = adjacency.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adjacency.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &w in &adjacency[v] {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(adjacency: &[Vec<usize>], root: usize) -> String {
    let n = adjacency.len();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut child_codes: Vec<Vec<String>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut parts = std::mem::take(&mut child_codes[v]);
        parts.sort_unstable();
        let mut code = String::with_capacity(2 + parts.iter().map(String::len).sum::<usize>());
        code.push('(');
        for part in &parts {
            code.push_str(part);
        }
        code.push(')');
        if v == root {
            return code;
        }
        child_codes[parent[v]].push(code);
    }
    unreachable!("breadth-first order starts at the root")
}

/// Number of vertices on a longest path, by double breadth-first search:
/// the farthest vertex from anywhere is a path end, and the farthest vertex
/// from an end realizes the diameter.
pub fn diameter_path_vertices(g: &Graph) -> Result<usize, NotATreeReason> {
    let n = g.n_vertices();
    if g.edges().len() != n - 1 {
        return Err(NotATreeReason::WrongEdgeCount {
            n_vertices: n,
            n_edges: g.edges().len(),
        });
    }
    if !g.is_connected() {
        return Err(NotATreeReason::Disconnected);
    }
    let adjacency = g.adjacency();
    let (end, _) = farthest_from(&adjacency, 0);
    let (_, distance) = farthest_from(&adjacency, end);
    Ok(distance + 1)
}

fn farthest_from(adjacency: &[Vec<usize>], start: usize) -> (usize, usize) {
    let mut distance = vec![usize::MAX; adjacency.len()];
    let mut queue = VecDeque::from([start]);
    distance[start] = 0;
    let mut best = (start, 0);
    while let Some(v) = queue.pop_front() {
        if distance[v] > best.1 {
            best = (v, distance[v]);
        }
        for &w in &adjacency[v] {
            if distance[w] == usize::MAX {
                distance[w] = distance[v] + 1;
                queue.push_back(w);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spine(components: &[usize]) -> Spine {
        Spine::new(components.to_vec()).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (0, v))).unwrap()
    }

    /// Three legs of length 2 hanging off vertex 0.
    fn spider7() -> Graph {
        Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn construction_normalizes_and_validates() {
        let g = Graph::new(3, [(2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(Graph::new(0, []), Err(GraphError::NoVertices));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { u: 0, v: 2, n_vertices: 2 })
        );
        assert_eq!(Graph::new(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn recognize_paths_and_stars() {
        assert_eq!(
            recognize(&path(4)),
            Classification::Caterpillar(spine(&[0, 0]).canonicalize())
        );
        assert_eq!(
            recognize(&star(4)),
            Classification::Caterpillar(spine(&[1]).canonicalize())
        );
        assert_eq!(
            recognize(&path(3)),
            Classification::Caterpillar(spine(&[0]).canonicalize())
        );
    }

    #[test]
    fn recognize_rejects_the_spider() {
        assert_eq!(recognize(&spider7()), Classification::TreeNotCaterpillar);
    }

    #[test]
    fn recognize_non_trees() {
        let triangle = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            recognize(&triangle),
            Classification::NotATree(NotATreeReason::WrongEdgeCount {
                n_vertices: 3,
                n_edges: 3
            })
        );
        let cycle_plus_isolated = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            recognize(&cycle_plus_isolated),
            Classification::NotATree(NotATreeReason::Disconnected)
        );
    }

    #[test]
    fn recognize_degenerate_sizes() {
        assert_eq!(
            recognize(&Graph::new(1, []).unwrap()),
            Classification::DegenerateSmall(1)
        );
        assert_eq!(
            recognize(&Graph::new(2, [(0, 1)]).unwrap()),
            Classification::DegenerateSmall(2)
        );
        assert_eq!(
            recognize(&Graph::new(2, []).unwrap()),
            Classification::NotATree(NotATreeReason::WrongEdgeCount {
                n_vertices: 2,
                n_edges: 0
            })
        );
    }

    #[test]
    fn classification_tokens() {
        assert_eq!(recognize(&path(4)).to_string(), "caterpillar 0,0");
        assert_eq!(recognize(&spider7()).to_string(), "tree_not_caterpillar");
        assert_eq!(
            recognize(&Graph::new(2, []).unwrap()).to_string(),
            "not_a_tree wrong_edge_count"
        );
        assert_eq!(
            recognize(&Graph::new(1, []).unwrap()).to_string(),
            "degenerate_small 1"
        );
    }

    #[test]
    fn decode_fixed_numbering() {
        let g = decode(&spine(&[2, 1, 3]));
        assert_eq!(g.n_vertices(), 11);
        assert_eq!(
            g.edges(),
            &[
                (0, 1),
                (1, 2),
                (1, 5),
                (1, 6),
                (2, 3),
                (2, 7),
                (3, 4),
                (3, 8),
                (3, 9),
                (3, 10)
            ]
        );
        assert_eq!(decode(&spine(&[0])), path(3));
    }

    #[test]
    fn decode_longest_path_is_spine_plus_two() {
        assert_eq!(diameter_path_vertices(&decode(&spine(&[2, 1, 3]))).unwrap(), 5);
        assert_eq!(diameter_path_vertices(&decode(&spine(&[4]))).unwrap(), 3);
        assert_eq!(diameter_path_vertices(&path(6)).unwrap(), 6);
    }

    #[test]
    fn encode_canonicalizes() {
        let encoded = encode(&decode(&spine(&[2, 1, 1]))).unwrap();
        assert_eq!(encoded.to_string(), "1,1,2");
        let err = encode(&spider7()).unwrap_err();
        assert_eq!(err.classification, Classification::TreeNotCaterpillar);
        assert!(encode(&Graph::new(2, [(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn certificates_track_isomorphism() {
        let left = iso_certificate(&decode(&spine(&[1, 1, 2]))).unwrap();
        let right = iso_certificate(&decode(&spine(&[2, 1, 1]))).unwrap();
        assert_eq!(left, right);
        assert_ne!(
            iso_certificate(&path(4)).unwrap(),
            iso_certificate(&star(4)).unwrap()
        );
        assert_ne!(
            iso_certificate(&path(4)).unwrap(),
            iso_certificate(&path(5)).unwrap()
        );
        let relabeled_p4 = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(
            iso_certificate(&relabeled_p4).unwrap(),
            iso_certificate(&path(4)).unwrap()
        );
    }

    #[test]
    fn certificate_rejects_non_trees() {
        let triangle = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            iso_certificate(&triangle),
            Err(NotATreeReason::WrongEdgeCount {
                n_vertices: 3,
                n_edges: 3
            })
        );
        let split = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(iso_certificate(&split), Err(NotATreeReason::Disconnected));
    }

    #[test]
    fn small_tree_certificates() {
        let single = Graph::new(1, []).unwrap();
        assert_eq!(iso_certificate(&single).unwrap().as_str(), "1:()");
        let pair = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(iso_certificate(&pair).unwrap().as_str(), "2:(())");
    }

    fn arb_spine() -> impl Strategy<Value = Spine> {
        proptest::collection::vec(0usize..=4, 1..=7).prop_map(|v| Spine::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn decode_then_recognize_round_trips(s in arb_spine()) {
            let g = decode(&s);
            prop_assert_eq!(g.n_vertices(), s.component_sum() + s.len() + 2);
            prop_assert_eq!(g.edges().len(), g.n_vertices() - 1);
            prop_assert_eq!(recognize(&g), Classification::Caterpillar(s.canonicalize()));
            prop_assert_eq!(encode(&g).unwrap(), s.canonicalize());
            prop_assert_eq!(diameter_path_vertices(&g).unwrap(), s.len() + 2);
        }

        #[test]
        fn mirrored_spines_share_certificates(s in arb_spine()) {
            let cert = iso_certificate(&decode(&s)).unwrap();
            let mirrored = iso_certificate(&decode(&s.reversed())).unwrap();
            prop_assert_eq!(cert, mirrored);
        }
    }
}
