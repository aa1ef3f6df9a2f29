//! Property harness for the two-color lemmas on a complete graph with a
//! hole: uniform and adversarial samples, exact evaluation of the
//! conclusion, witnesses for any failure.

use cycle_ramsey::bounds::{int, ratio, HoleParams};
use cycle_ramsey::search::{lemma_harness, HarnessOptions, LemmaParams};

fn main() -> cycle_ramsey::Result<()> {
    let hole = HoleParams { alpha: int(1), beta: int(1), nu: ratio(1, 2), epsilon: ratio(9, 1000) };
    let runs = [
        LemmaParams::Dwa { hole: hole.clone(), n: 24 },
        LemmaParams::Trzy { hole, n: 20 },
        LemmaParams::L2 { v1: 30, v2: 24, epsilon: ratio(1, 200) },
    ];
    for params in runs {
        let rep = lemma_harness(&params, 40, 7, &HarnessOptions::default())?;
        println!(
            "{} on {} vertices: {}/{} pass, least margin {}, genuine failures {}",
            rep.lemma,
            rep.host_size,
            rep.passed,
            rep.samples,
            rep.min_margin,
            rep.genuine_failures()
        );
        for note in &rep.notes {
            println!("  {note}");
        }
    }
    Ok(())
}
