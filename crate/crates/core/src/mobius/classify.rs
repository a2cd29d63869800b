//! Face tracing and orientability.
//!
//! Faces are traced on flags `(h, ±)`, two per half-edge. The vertex
//! involution pairs `(h, +)` with `(σh, −)` where `σ` is the cyclic
//! successor; an untwisted edge `{h, h'}` pairs `(h, ±)` with `(h', ∓)` and a
//! twisted edge pairs `(h, ±)` with `(h', ±)`. Faces are the orbits of the
//! group generated by the two involutions.

use std::collections::VecDeque;

use serde::Serialize;

use super::{Color, MobiusGraph};
use crate::homcount::SurfaceKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceClassification {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub kind: SurfaceKind,
}

fn flag(h: usize, positive: bool) -> usize {
    2 * h + usize::from(!positive)
}

pub fn count_faces(g: &MobiusGraph) -> usize {
    let n = 2 * g.num_edges();
    if n == 0 {
        return 1;
    }
    let mut vertex_inv = vec![0usize; 2 * n];
    for cycle in g.vertices() {
        for (i, &h) in cycle.iter().enumerate() {
            let next = cycle[(i + 1) % cycle.len()];
            vertex_inv[flag(h, true)] = flag(next, false);
            vertex_inv[flag(next, false)] = flag(h, true);
        }
    }
    let mut edge_inv = vec![0usize; 2 * n];
    for e in g.edges() {
        let (a, b) = e.ends;
        for s in [true, false] {
            let t = if e.color == Color::Untwisted { !s } else { s };
            edge_inv[flag(a, s)] = flag(b, t);
            edge_inv[flag(b, t)] = flag(a, s);
        }
    }
    let mut seen = vec![false; 2 * n];
    let mut faces = 0;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        faces += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in [vertex_inv[x], edge_inv[x]] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    faces
}

/// True when some choice of vertex flips makes every edge untwisted.
pub fn is_orientable(g: &MobiusGraph) -> bool {
    // flip state of each vertex, fixed along a spanning tree
    let mut state: Vec<Option<Color>> = vec![None; g.num_vertices()];
    state[0] = Some(Color::Untwisted);
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &h in &g.vertices()[v] {
            let e = g.edges()[g.edge_of(h)];
            let w = g.vertex_of(g.partner(h));
            if state[w].is_none() {
                state[w] = Some(state[v].expect("visited").times(e.color));
                queue.push_back(w);
            }
        }
    }
    g.edges().iter().all(|e| {
        let a = state[g.vertex_of(e.ends.0)].expect("connected");
        let b = state[g.vertex_of(e.ends.1)].expect("connected");
        e.color.times(a).times(b) == Color::Untwisted
    })
}

pub fn classify_surface(g: &MobiusGraph) -> SurfaceClassification {
    let (v, e, f) = (g.num_vertices(), g.num_edges(), count_faces(g));
    let chi = v as i64 - e as i64 + f as i64;
    let orientable = is_orientable(g);
    let kind =
        SurfaceKind::from_euler_characteristic(chi, orientable).expect("a connected graph determines a closed surface");
    SurfaceClassification {
        vertices: v,
        edges: e,
        faces: f,
        euler_characteristic: chi,
        orientable,
        kind,
    }
}
