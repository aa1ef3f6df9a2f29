//! Exact coefficients of the three-cycle Ramsey numbers, host sizes of the
//! hole lemmas and the sizes of the lower-bound colorings.

use cycle_ramsey::bounds::{
    construction_sizes, int, lemma_dwa_host_size, lemma_trzy_host_size, ratio, theorem_coefficient, to_decimal, xi, HoleParams,
    TargetTriple,
};
use cycle_ramsey::Parity::{Even, Odd};

fn main() -> cycle_ramsey::Result<()> {
    let n = 40;
    for parities in [[Odd, Odd, Odd], [Even, Even, Odd], [Even, Odd, Odd], [Even, Even, Even]] {
        let t = TargetTriple::new([int(1), ratio(3, 4), ratio(1, 2)], parities, n)?;
        let (c, canon) = theorem_coefficient(&t)?;
        println!("{parities:?} -> {c} ({}), case {:?}, lengths {:?}", to_decimal(&c, 3), canon.case, t.target_lengths()?);
        for s in construction_sizes(&t)? {
            println!("  {} on {:?}: {} vertices", s.id, s.lengths, s.vertices);
        }
    }

    println!("xi(1, 1/2, 1) = {}", xi(&int(1), &ratio(1, 2), &int(1)));
    let p = HoleParams { alpha: int(1), beta: int(1), nu: ratio(1, 2), epsilon: ratio(1, 10_000) };
    println!("two-color host sizes at n = 100: {} and {}", lemma_dwa_host_size(&p, 100)?, lemma_trzy_host_size(&p, 100)?);
    Ok(())
}
