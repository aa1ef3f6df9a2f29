//! Dense graphs, components, bipartiteness certificates and colorings of a
//! complete graph with a hole.

use cycle_ramsey::graph::TwoColoring;
use cycle_ramsey::{EdgeColoring, Graph, HoleSpec, VertexSet};

fn main() -> cycle_ramsey::Result<()> {
    // A 5-cycle plus a disjoint edge.
    let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6)])?;
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    for c in g.components() {
        println!("component {:?}", c.to_vec());
    }
    match g.two_coloring() {
        TwoColoring::Bipartite(a, b) => println!("bipartite: {:?} | {:?}", a.to_vec(), b.to_vec()),
        TwoColoring::OddCycle(c) => println!("odd cycle {:?}", c.vertices),
    }

    // K_6 with a hole on {0, 1, 2}, two colors by parity of u + v.
    let hole = HoleSpec::new(vec![VertexSet::range(0, 3)]);
    let mut c = EdgeColoring::new(6, 2, hole, [])?;
    for v in 0..6 {
        for u in 0..v {
            if c.is_present(u, v) {
                c.set(u, v, 1 + ((u + v) % 2) as u8)?;
            }
        }
    }
    c.validate()?;
    println!("host has {} edges; color 1 has {}", c.host().edge_count(), c.color_class(1).edge_count());
    println!("{}", c.to_json());
    Ok(())
}
