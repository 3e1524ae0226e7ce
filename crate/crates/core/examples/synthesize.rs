//! Synthesize and verify multiplication algorithms for small and composite n.
use gf2_tensor_rank::cc_construct::{plan_places, synthesize, synthesize_any};

fn main() -> gf2_tensor_rank::Result<()> {
    for n in 1..=17 {
        let alg = synthesize(n)?;
        let tally = plan_places(n)?.tally();
        println!("n {n:2}  rank {:3}  formula {:3}  verified {}", alg.rank(), tally.rank_formula(), alg.verify_default(10_000)?);
    }
    let big = synthesize_any(32)?;
    println!("n 32  rank {}  verified {}", big.rank(), big.verify_default(10_000)?);
    Ok(())
}
