//! Emit a straight-line program for GF(2^5) multiplication and run it.
use gf2_tensor_rank::bilinear::{codegen, count_ands, count_xors, interpret};
use gf2_tensor_rank::cc_construct::synthesize;

fn main() -> gf2_tensor_rank::Result<()> {
    let alg = synthesize(5)?;
    let program = codegen(&alg);
    print!("{program}");
    println!("# {} AND, {} XOR", count_ands(&program), count_xors(&program));
    let (x, y) = (0b10110, 0b01101);
    println!("# {x:#07b} * {y:#07b} = {:#07b}", interpret(&program, 5, x, y)?);
    println!("# field says      {:#07b}", alg.field().mul(x, y));
    Ok(())
}
