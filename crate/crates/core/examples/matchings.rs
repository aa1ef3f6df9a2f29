//! Maximum matchings, the Gallai–Edmonds decomposition, the (S, T, U)
//! barrier partition, the bipartite split and closed walks.

use cycle_ramsey::bounds::ratio;
use cycle_ramsey::matching::{bipartite_split, closed_walk_through_matching, gallai_edmonds, maximum_matching, tutte_partition};
use cycle_ramsey::{Graph, Parity};

fn main() -> cycle_ramsey::Result<()> {
    // A star with five leaves, a triangle, and a 4-cycle.
    let mut edges: Vec<(usize, usize)> = (1..6).map(|v| (0, v)).collect();
    edges.extend([(6, 7), (7, 8), (6, 8), (9, 10), (10, 11), (11, 12), (12, 9)]);
    let g = Graph::from_edges(13, &edges)?;

    let m = maximum_matching(&g);
    println!("maximum matching {:?} saturates {}", m.edges, m.saturation());

    let ge = gallai_edmonds(&g);
    println!("D = {:?}, A = {:?}, C = {:?}", ge.d.to_vec(), ge.a.to_vec(), ge.c.to_vec());

    let p = tutte_partition(&g, m.saturation() + 1)?;
    println!("S = {:?}, T = {:?}, U = {:?}", p.s.to_vec(), p.t.to_vec(), p.u.to_vec());
    p.check(&g).expect("partition conclusions hold");

    // Non-bipartite components must not have matchings saturating alpha * n.
    let split = bipartite_split(&g, &ratio(3, 1), 1)?;
    println!("V' = {:?}, V'' = {:?}", split.vprime.to_vec(), split.vdoubleprime.to_vec());

    let triangle_edge = m.edges.iter().copied().filter(|&(u, _)| (6..9).contains(&u)).collect();
    let walk = closed_walk_through_matching(&g, &cycle_ramsey::MatchingCertificate::new(triangle_edge), Parity::Odd)?;
    println!("odd closed walk {:?}", walk.vertices);
    Ok(())
}
