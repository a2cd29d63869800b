//! Built-in graphs covering the sphere, projective plane, torus, Klein
//! bottle, three cross-caps, and genus 2, all with at most four edges.

use super::MobiusGraph;

pub const CATALOG_NAMES: [&str; 10] = [
    "untwisted_loop",
    "twisted_loop",
    "segment",
    "theta",
    "twisted_theta",
    "torus",
    "klein",
    "dumbbell",
    "crosscap3",
    "genus2",
];

fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "untwisted_loop" => include_str!("../../data/graphs/untwisted_loop.mg"),
        "twisted_loop" => include_str!("../../data/graphs/twisted_loop.mg"),
        "segment" => include_str!("../../data/graphs/segment.mg"),
        "theta" => include_str!("../../data/graphs/theta.mg"),
        "twisted_theta" => include_str!("../../data/graphs/twisted_theta.mg"),
        "torus" => include_str!("../../data/graphs/torus.mg"),
        "klein" => include_str!("../../data/graphs/klein.mg"),
        "dumbbell" => include_str!("../../data/graphs/dumbbell.mg"),
        "crosscap3" => include_str!("../../data/graphs/crosscap3.mg"),
        "genus2" => include_str!("../../data/graphs/genus2.mg"),
        _ => return None,
    })
}

pub fn catalog_graph(name: &str) -> Option<MobiusGraph> {
    source(name).map(|text| MobiusGraph::parse(text).expect("catalog graph parses"))
}

/// All catalog graphs with their names.
pub fn catalog_graphs() -> Vec<(&'static str, MobiusGraph)> {
    CATALOG_NAMES
        .iter()
        .map(|&n| (n, catalog_graph(n).expect("listed")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homcount::SurfaceKind;
    use crate::mobius::classify_surface;

    #[test]
    fn catalog_surfaces() {
        let kinds: Vec<(usize, SurfaceKind)> = catalog_graphs()
            .iter()
            .map(|(_, g)| {
                let c = classify_surface(g);
                (c.faces, c.kind)
            })
            .collect();
        let o = SurfaceKind::orientable;
        let n = |k| SurfaceKind::NonOrientable { crosscaps: k };
        assert_eq!(
            kinds,
            vec![
                (2, o(0)),
                (1, n(1)),
                (1, o(0)),
                (3, o(0)),
                (2, n(1)),
                (1, o(1)),
                (1, n(2)),
                (1, n(2)),
                (1, n(3)),
                (1, o(2)),
            ]
        );
        assert!(catalog_graph("nope").is_none());
    }
}
