//! Lower-bound colorings and the verifier for their claims.

use cycle_ramsey::bounds::ConstructionId;
use cycle_ramsey::constructions::{build, build_oee_four_part, verify_claims};
use cycle_ramsey::cycles::DEFAULT_BUDGET;

fn main() -> cycle_ramsey::Result<()> {
    let reports = [
        build(ConstructionId::FourCliques, &[7])?,
        build(ConstructionId::EeoFourPart, &[8, 6])?,
        build(ConstructionId::EeoThreePart, &[8, 6, 7])?,
        build_oee_four_part(8, 7)?,
    ];
    for report in reports {
        let r = verify_claims(report, DEFAULT_BUDGET);
        println!("{:?} {:?}: {} vertices, all claims hold: {}", r.construction, r.parameters, r.vertex_count(), r.all_hold());
        for (claim, verdict) in r.claims.iter().zip(&r.verdicts) {
            println!("  color {} {:?}: {:?}", claim.color, claim.kind, verdict);
        }
        for remark in &r.remarks {
            println!("  note: {remark}");
        }
    }
    Ok(())
}
