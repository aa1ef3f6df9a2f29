//! Exact cycle queries and long cycles above the edge threshold.

use cycle_ramsey::cycles::{erdos_gallai_cycle, has_cycle_of_length, longest_cycle, DEFAULT_BUDGET};
use cycle_ramsey::{Graph, Parity};

fn main() -> cycle_ramsey::Result<()> {
    // The Petersen graph: girth 5, no Hamiltonian cycle.
    let outer: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let spokes: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
    let inner: Vec<(usize, usize)> = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5)).collect();
    let petersen = Graph::from_edges(10, &[outer, spokes, inner].concat())?;

    for len in 3..=10 {
        let found = has_cycle_of_length(&petersen, len, DEFAULT_BUDGET)?;
        println!("C{len}: {}", found.map_or("none".to_string(), |c| format!("{:?}", c.vertices)));
    }
    for parity in [Parity::Odd, Parity::Even] {
        let c = longest_cycle(&petersen, Some(parity), DEFAULT_BUDGET)?.expect("Petersen has cycles of both parities");
        println!("longest {parity:?} cycle: {}", c.len());
    }

    // 15 edges on 10 vertices meets (m-1)(n-1)/2 + 1 for m = 4.
    let c = erdos_gallai_cycle(&petersen, 4, DEFAULT_BUDGET)?;
    println!("cycle of length >= 4 from the edge count: {:?}", c.vertices);
    Ok(())
}
