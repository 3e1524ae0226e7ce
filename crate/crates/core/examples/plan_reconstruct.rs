//! Evaluate a product at the chosen places and rebuild it by CRT.
use gf2_tensor_rank::cc_construct::{plan_places, reconstruct};
use gf2_tensor_rank::gf2k::BinaryPoly;

fn main() -> gf2_tensor_rank::Result<()> {
    let n = 6;
    let plan = plan_places(n)?;
    println!("{}", serde_json::to_string_pretty(&plan.to_json()).expect("serializes"));

    let f = BinaryPoly::from_u64(0b101101);
    let g = BinaryPoly::from_u64(0b110011);
    let h = &f * &g;
    let residues = plan.evaluate(&h)?;
    for (a, r) in plan.assignments().iter().zip(&residues.0) {
        println!("{:>4} u={} value={:x} derivative={:?}", a.place.label(), a.u, r.value, r.derivative);
    }
    let back = reconstruct(&plan, &residues)?;
    println!("f*g = {}  reconstructed = {}", h.to_hex(), back.to_hex());
    Ok(())
}
