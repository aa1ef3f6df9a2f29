//! Exact arrowing decisions: small Ramsey numbers, a host with a hole, and
//! component-matching targets.

use cycle_ramsey::search::{arrow_exhaustive, ramsey_number_exact, tau_check, ArrowInstance, ExhaustiveConfig, Target};
use cycle_ramsey::{HoleSpec, VertexSet};

fn main() -> cycle_ramsey::Result<()> {
    let cfg = ExhaustiveConfig::default();
    for l in [3, 4, 5] {
        let targets = vec![Target::Cycle { length: l }; 2];
        let r = ramsey_number_exact(&targets, 3..=10, &cfg)?;
        println!("R(C{l}, C{l}): {:?}", r.outcome);
    }

    let mut inst = ArrowInstance::complete(7, vec![Target::Cycle { length: 4 }; 2])?;
    inst.holes = HoleSpec::new(vec![VertexSet::range(0, 3)]);
    let v = arrow_exhaustive(&inst, &cfg)?;
    println!("K7 minus a triangle -> (C4, C4): {} after {} nodes", v.arrows, v.stats.nodes);
    if let Some(w) = &v.witness {
        println!("witness {:?}", w.colored_edges());
    }

    let matching = vec![Target::Matching { saturation: 4, nonbipartite: true }; 2];
    let v = tau_check(&ArrowInstance::complete(6, matching)?, &cfg)?;
    println!("K6 -> two non-bipartite components with matchings on 4 vertices: {}", v.arrows);
    Ok(())
}
