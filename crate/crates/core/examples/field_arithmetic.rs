//! Arithmetic in GF(2^8) under its canonical modulus.
use gf2_tensor_rank::gf2k::{canonical_modulus, irreducibles_of_degree, necklace_count, FieldSpec};

fn main() -> gf2_tensor_rank::Result<()> {
    let f = FieldSpec::canonical(8)?;
    println!("modulus {}", canonical_modulus(8)?.to_hex());

    let (a, b) = (0x57, 0x83);
    let p = f.mul(a, b);
    let inv = f.inv(a).expect("nonzero");
    println!("{a:#04x} * {b:#04x} = {p:#04x}");
    println!("{a:#04x}^-1 = {inv:#04x}, check {:#04x}", f.mul(a, inv));
    println!("trace({a:#04x}) = {}", f.trace(a));

    for d in 1..=8 {
        println!("degree {d}: {} irreducibles (necklace count {})", irreducibles_of_degree(d)?.len(), necklace_count(d));
    }
    Ok(())
}
