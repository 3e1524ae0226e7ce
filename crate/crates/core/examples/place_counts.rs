//! Brute-force place counts for the first four tower steps.
use gf2_tensor_rank::curve_count::{place_counts, CurveStep};

fn main() -> gf2_tensor_rank::Result<()> {
    for step in CurveStep::ALL {
        let pc = place_counts(step)?;
        println!(
            "{:<4} g {:>2}  N1 {}  N2 {}  N4 {:>2}  (published N4 {:>2})",
            pc.step, pc.genus, pc.n1, pc.n2, pc.n4, pc.published.n4
        );
    }
    Ok(())
}
