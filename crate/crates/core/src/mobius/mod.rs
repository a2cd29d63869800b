//! Möbius graphs: ribbon graphs whose edges carry a twist color. Vertex
//! flips, edge contraction, surface classification, and the group sum `G_Γ`
//! over a finite group.

mod catalog;
mod classify;
mod eval;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

pub use catalog::{catalog_graph, catalog_graphs, CATALOG_NAMES};
pub use classify::{classify_surface, SurfaceClassification};
pub use eval::{evaluate_graph_direct, evaluate_graph_formula, GraphEvaluation};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("half-edge {0} is not in any edge")]
    Dangling(usize),
    #[error("half-edge {0} is not at any vertex")]
    Unplaced(usize),
    #[error("half-edge {0} appears more than once")]
    Duplicate(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {0} has no half-edges")]
    EmptyVertex(usize),
    #[error("no vertex {0}")]
    NoSuchVertex(usize),
    #[error("no edge {0}")]
    NoSuchEdge(usize),
    #[error("edge {0} is a loop and cannot be contracted")]
    Loop(usize),
}

/// Edge color: untwisted (`+1`) or twisted (`-1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Color {
    Untwisted,
    Twisted,
}

impl Color {
    pub fn sign(self) -> i64 {
        match self {
            Color::Untwisted => 1,
            Color::Twisted => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Color::Untwisted => Color::Twisted,
            Color::Twisted => Color::Untwisted,
        }
    }

    pub fn times(self, other: Color) -> Color {
        if self == other {
            Color::Untwisted
        } else {
            Color::Twisted
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub ends: (usize, usize),
    pub color: Color,
}

/// A connected Möbius graph on half-edges `0..2e`. Each vertex is a cyclic
/// sequence of half-edges; each edge pairs two half-edges.
///
/// A single vertex with no half-edges is allowed: it is what contracting
/// the only edge of a two-vertex graph leaves behind, and represents the
/// sphere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MobiusGraph {
    vertices: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
}

impl MobiusGraph {
    /// Validates and builds a graph. Half-edge ids must be exactly `0..2e`.
    pub fn new(vertices: Vec<Vec<usize>>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let n = 2 * edges.len();
        let mut edge_of = vec![usize::MAX; n];
        for (i, e) in edges.iter().enumerate() {
            for h in [e.ends.0, e.ends.1] {
                if h >= n {
                    return Err(GraphError::Unplaced(h));
                }
                if edge_of[h] != usize::MAX {
                    return Err(GraphError::Duplicate(h));
                }
                edge_of[h] = i;
            }
        }
        let mut vertex_of = vec![usize::MAX; n];
        for (v, cycle) in vertices.iter().enumerate() {
            if cycle.is_empty() && !(vertices.len() == 1 && edges.is_empty()) {
                return Err(GraphError::EmptyVertex(v));
            }
            for &h in cycle {
                if h >= n {
                    return Err(GraphError::Dangling(h));
                }
                if vertex_of[h] != usize::MAX {
                    return Err(GraphError::Duplicate(h));
                }
                vertex_of[h] = v;
            }
        }
        if let Some(h) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(GraphError::Unplaced(h));
        }
        if vertices.is_empty() {
            return Err(GraphError::Disconnected);
        }
        let g = Self {
            vertices,
            edges,
            vertex_of,
            edge_of,
        };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &h in &self.vertices[v] {
                let w = self.vertex_of[self.partner(h)];
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Parses the line format: `vertex: h0 h1 …` (cyclic order) and
    /// `edge: hA hB +|-`, with `#` comments. Half-edge ids may be any
    /// nonnegative integers; they are renumbered by first appearance.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut raw_vertices: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut raw_edges: Vec<(usize, usize, usize, Color)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |message: String| GraphError::Syntax { line: line_no, message };
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| syntax("expected 'vertex:' or 'edge:'".into()))?;
            let tokens: Vec<&str> = rest.split_whitespace().collect();
            let id = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| syntax(format!("bad half-edge id {t:?}")))
            };
            match key.trim() {
                "vertex" => {
                    let ids = tokens.iter().map(|t| id(t)).collect::<Result<Vec<_>, _>>()?;
                    raw_vertices.push((line_no, ids));
                }
                "edge" => {
                    if tokens.len() != 3 {
                        return Err(syntax("edge needs two half-edges and a color".into()));
                    }
                    let color = match tokens[2] {
                        "+" | "+1" => Color::Untwisted,
                        "-" | "-1" => Color::Twisted,
                        other => return Err(syntax(format!("bad color {other:?}"))),
                    };
                    raw_edges.push((line_no, id(tokens[0])?, id(tokens[1])?, color));
                }
                other => return Err(syntax(format!("unknown record {other:?}"))),
            }
        }
        let mut index: HashMap<usize, usize> = HashMap::new();
        for (line, ids) in &raw_vertices {
            if ids.is_empty() && !(raw_vertices.len() == 1 && raw_edges.is_empty()) {
                return Err(GraphError::Syntax {
                    line: *line,
                    message: "vertex has no half-edges".into(),
                });
            }
            for &h in ids {
                let next = index.len();
                if index.insert(h, next).is_some() {
                    return Err(GraphError::Duplicate(h));
                }
            }
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        let mut in_edge: HashMap<usize, ()> = HashMap::new();
        for &(_, a, b, color) in &raw_edges {
            for h in [a, b] {
                if in_edge.insert(h, ()).is_some() {
                    return Err(GraphError::Duplicate(h));
                }
                if !index.contains_key(&h) {
                    return Err(GraphError::Unplaced(h));
                }
            }
            edges.push(Edge {
                ends: (index[&a], index[&b]),
                color,
            });
        }
        if let Some((&h, _)) = index.iter().filter(|(h, _)| !in_edge.contains_key(h)).min() {
            return Err(GraphError::Dangling(h));
        }
        let vertices = raw_vertices
            .into_iter()
            .map(|(_, ids)| ids.iter().map(|h| index[h]).collect())
            .collect();
        Self::new(vertices, edges)
    }

    /// Renders the graph in the line format accepted by [`MobiusGraph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for cycle in &self.vertices {
            let ids: Vec<String> = cycle.iter().map(|h| h.to_string()).collect();
            out.push_str(&format!("vertex: {}\n", ids.join(" ")).replace(": \n", ":\n"));
        }
        for e in &self.edges {
            let c = if e.color == Color::Untwisted { '+' } else { '-' };
            out.push_str(&format!("edge: {} {} {c}\n", e.ends.0, e.ends.1));
        }
        out
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        self.vertex_of[h]
    }

    pub fn edge_of(&self, h: usize) -> usize {
        self.edge_of[h]
    }

    /// The other half-edge of `h`'s edge.
    pub fn partner(&self, h: usize) -> usize {
        let e = self.edges[self.edge_of[h]];
        if e.ends.0 == h {
            e.ends.1
        } else {
            e.ends.0
        }
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let e = self.edges[edge];
        self.vertex_of[e.ends.0] == self.vertex_of[e.ends.1]
    }

    /// Reverses the cyclic order at `v` and toggles the color of every
    /// non-loop edge at `v`. Loops keep their color.
    pub fn vertex_flip(&self, v: usize) -> Result<Self, GraphError> {
        if v >= self.vertices.len() {
            return Err(GraphError::NoSuchVertex(v));
        }
        let mut g = self.clone();
        g.vertices[v].reverse();
        for e in g.edges.iter_mut() {
            let at_v = [e.ends.0, e.ends.1].iter().filter(|&&h| self.vertex_of[h] == v).count();
            if at_v == 1 {
                e.color = e.color.flipped();
            }
        }
        Ok(g)
    }

    /// Contracts a non-loop edge, flipping its second endpoint first when the
    /// edge is twisted. With `V = (h a1 … am)` and `W = (h' b1 … bn)` the
    /// merged vertex is `(a1 … am b1 … bn)`.
    pub fn contract_edge(&self, edge: usize) -> Result<Self, GraphError> {
        if edge >= self.edges.len() {
            return Err(GraphError::NoSuchEdge(edge));
        }
        if self.is_loop(edge) {
            return Err(GraphError::Loop(edge));
        }
        let e = self.edges[edge];
        let base = if e.color == Color::Twisted {
            self.vertex_flip(self.vertex_of[e.ends.1])?
        } else {
            self.clone()
        };
        let (h, h2) = e.ends;
        let v = base.vertex_of[h];
        let w = base.vertex_of[h2];
        let merged: Vec<usize> = rotate_after(&base.vertices[v], h)
            .into_iter()
            .chain(rotate_after(&base.vertices[w], h2))
            .collect();
        Ok(base.rebuild_without(edge, v, w, merged))
    }

    /// Contraction by the one-step rule for twisted edges: the second
    /// vertex's part enters reversed and its other non-loop edges toggle.
    /// Agrees with [`MobiusGraph::contract_edge`]; kept as an independent
    /// code path for cross-checking.
    pub fn contract_edge_direct(&self, edge: usize) -> Result<Self, GraphError> {
        if edge >= self.edges.len() {
            return Err(GraphError::NoSuchEdge(edge));
        }
        if self.is_loop(edge) {
            return Err(GraphError::Loop(edge));
        }
        let e = self.edges[edge];
        if e.color == Color::Untwisted {
            return self.contract_edge(edge);
        }
        let (h, h2) = e.ends;
        let v = self.vertex_of[h];
        let w = self.vertex_of[h2];
        let mut tail = rotate_after(&self.vertices[w], h2);
        tail.reverse();
        let merged: Vec<usize> = rotate_after(&self.vertices[v], h).into_iter().chain(tail).collect();
        let mut g = self.clone();
        for (i, other) in g.edges.iter_mut().enumerate() {
            if i == edge {
                continue;
            }
            let at_w = [other.ends.0, other.ends.1]
                .iter()
                .filter(|&&x| self.vertex_of[x] == w)
                .count();
            if at_w == 1 {
                other.color = other.color.flipped();
            }
        }
        Ok(g.rebuild_without(edge, v, w, merged))
    }

    fn rebuild_without(&self, edge: usize, v: usize, w: usize, merged: Vec<usize>) -> Self {
        let (h, h2) = self.edges[edge].ends;
        let relabel = |x: usize| x - usize::from(x > h) - usize::from(x > h2);
        let mut vertices = Vec::with_capacity(self.vertices.len() - 1);
        for (i, cycle) in self.vertices.iter().enumerate() {
            if i == v {
                vertices.push(merged.iter().map(|&x| relabel(x)).collect());
            } else if i != w {
                vertices.push(cycle.iter().map(|&x| relabel(x)).collect());
            }
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != edge)
            .map(|(_, e)| Edge {
                ends: (relabel(e.ends.0), relabel(e.ends.1)),
                color: e.color,
            })
            .collect();
        Self::new(vertices, edges).expect("contraction preserves validity")
    }

    /// Normal form up to rotation of each vertex cycle and ordering of
    /// vertices and edges.
    pub fn canonical(&self) -> Self {
        let mut vertices: Vec<Vec<usize>> = self
            .vertices
            .iter()
            .map(|c| match c.iter().enumerate().min_by_key(|&(_, h)| h) {
                Some((i, _)) => c[i..].iter().chain(&c[..i]).copied().collect(),
                None => Vec::new(),
            })
            .collect();
        vertices.sort();
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge {
                ends: (e.ends.0.min(e.ends.1), e.ends.0.max(e.ends.1)),
                color: e.color,
            })
            .collect();
        edges.sort();
        Self::new(vertices, edges).expect("canonical form of a valid graph")
    }

    /// Equality up to rotating vertex cycles and reordering vertices/edges.
    pub fn same_as(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Ids of edges joining two distinct vertices.
    pub fn contractible_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| !self.is_loop(i)).collect()
    }
}

fn rotate_after(cycle: &[usize], h: usize) -> Vec<usize> {
    let i = cycle.iter().position(|&x| x == h).expect("half-edge in cycle");
    cycle[i + 1..].iter().chain(&cycle[..i]).copied().collect()
}

impl fmt::Display for MobiusGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A random connected graph with `v` vertices and `e ≥ v − 1` edges,
/// uniformly shuffled half-edges and random colors.
pub fn random_graph<R: Rng>(rng: &mut R, v: usize, e: usize) -> MobiusGraph {
    assert!(v >= 1 && 2 * e >= v && e + 1 >= v, "cannot build a connected graph");
    loop {
        let mut halves: Vec<usize> = (0..2 * e).collect();
        halves.shuffle(rng);
        // each vertex gets at least one half-edge
        let mut cuts: Vec<usize> = (1..2 * e).collect();
        cuts.shuffle(rng);
        let mut cuts: Vec<usize> = cuts.into_iter().take(v - 1).collect();
        cuts.sort_unstable();
        let mut vertices = Vec::with_capacity(v);
        let mut start = 0;
        for &c in cuts.iter().chain(std::iter::once(&(2 * e))) {
            vertices.push(halves[start..c].to_vec());
            start = c;
        }
        let mut pairing: Vec<usize> = (0..2 * e).collect();
        pairing.shuffle(rng);
        let edges = pairing
            .chunks(2)
            .map(|p| Edge {
                ends: (p[0], p[1]),
                color: if rng.random_bool(0.5) {
                    Color::Twisted
                } else {
                    Color::Untwisted
                },
            })
            .collect();
        if let Ok(g) = MobiusGraph::new(vertices, edges) {
            return g;
        }
    }
}

/// Counts of half-edges per vertex, for display.
pub fn valences(g: &MobiusGraph) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for c in g.vertices() {
        *out.entry(c.len()).or_insert(0) += 1;
    }
    out
}
