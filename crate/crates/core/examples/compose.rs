//! Nest Karatsuba over GF(4) on top of Karatsuba over GF(2) to multiply in GF(16).
use gf2_tensor_rank::bilinear::{compose, karatsuba2, nested4, TowerAlgorithm, VerifyMode};
use gf2_tensor_rank::gf2k::FieldSpec;

fn main() -> gf2_tensor_rank::Result<()> {
    let outer = TowerAlgorithm::karatsuba2(FieldSpec::canonical(2)?)?;
    let alg = compose(&outer, &karatsuba2())?;
    println!("rank {} over modulus {}", alg.rank(), alg.field().modulus().to_hex());
    println!("exhaustive {}", alg.verify(VerifyMode::Exhaustive)?);
    println!("nested4 rank {}", nested4().rank());
    Ok(())
}
