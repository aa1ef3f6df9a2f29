//! Simulated annealing for avoiding colorings; a witness settles the
//! instance, otherwise the verdict stays unknown.

use cycle_ramsey::search::{arrow_randomized, ArrowInstance, Schedule, Target};

fn main() -> cycle_ramsey::Result<()> {
    let sched = Schedule { chains: 4, steps: 20_000, ..Default::default() };
    for (n, l) in [(8, 5), (10, 6), (9, 5)] {
        let inst = ArrowInstance::complete(n, vec![Target::Cycle { length: l }; 2])?;
        let v = arrow_randomized(&inst, None, &sched, 2024)?;
        println!("K{n}, (C{l}, C{l}): {} after {} steps", v.arrows, v.stats.nodes);
    }
    Ok(())
}
