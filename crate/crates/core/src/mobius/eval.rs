//! The group sum `G_Γ`: labelings of half-edges by group elements such that
//! the product around every vertex is the identity and the two labels of an
//! edge satisfy `x_h x_{h'}^c = e`, with `c = ±1` the edge color.

use num_bigint::BigUint;
use serde::Serialize;

use super::{classify_surface, Color, MobiusGraph, SurfaceClassification};
use crate::chartab::CharacterTable;
use crate::fingroup::FiniteGroup;
use crate::homcount::{enumerate, surface_hom_count_character, HomCountError, Method};
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphEvaluation {
    #[serde(serialize_with = "crate::homcount::serialize_biguint")]
    pub count: BigUint,
    pub method: Method,
    pub classification: SurfaceClassification,
}

/// One word per vertex over one variable per edge. Edge `i = {h, h'}`
/// labels `h` by `y_i` and `h'` by `y_i^{-c}`, which solves the edge
/// constraint exactly.
pub fn vertex_words(graph: &MobiusGraph) -> Vec<Word> {
    graph
        .vertices()
        .iter()
        .map(|cycle| {
            Word::reduce(cycle.iter().map(|&h| {
                let i = graph.edge_of(h);
                let e = graph.edges()[i];
                let second = e.ends.1 == h;
                let inverted = second && e.color == Color::Untwisted;
                Letter::new(i, inverted)
            }))
        })
        .collect()
}

/// Counts labelings by enumerating the edge variables.
pub fn evaluate_graph_direct(
    g: &FiniteGroup,
    graph: &MobiusGraph,
    budget: u64,
) -> Result<GraphEvaluation, HomCountError> {
    let words = vertex_words(graph);
    let e = enumerate(g, graph.num_edges(), &words, None, budget)?;
    Ok(GraphEvaluation {
        count: e.count(),
        method: Method::Brute,
        classification: classify_surface(graph),
    })
}

/// `|G|^{f-1} · |Hom(π₁(S_Γ), G)|` with the surface count from characters.
pub fn evaluate_graph_formula(
    g: &FiniteGroup,
    table: &CharacterTable,
    graph: &MobiusGraph,
) -> Result<GraphEvaluation, HomCountError> {
    let classification = classify_surface(graph);
    let hom = surface_hom_count_character(g, table, classification.kind)?;
    let count = BigUint::from(g.order()).pow(classification.faces as u32 - 1) * hom.count;
    Ok(GraphEvaluation {
        count,
        method: Method::Character,
        classification,
    })
}
