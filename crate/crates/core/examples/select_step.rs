//! Tower step chosen for each extension degree, with its genus bracket.
use gf2_tensor_rank::tower_bounds::{genus_info, k_interval, select_step};

fn main() -> gf2_tensor_rank::Result<()> {
    for n in [2u64, 6, 12, 24, 28, 100, 1000, 100_000] {
        let step = select_step(n)?;
        let g = genus_info(step)?;
        print!("n {n:>6}  {:<8} genus {:?} in [{}, {}]", step.to_string(), g.exact, g.lower, g.upper);
        if n >= 28 {
            let (lo, hi) = k_interval(n);
            print!("  k range [{lo}, {hi}]");
        }
        println!();
    }
    Ok(())
}
