//! Arithmetic in the tower F_2 ⊂ F_8 ⊂ F_64.

use acp_core::{FieldTower, Level};

fn main() -> acp_core::Result<()> {
    let t = FieldTower::new(2, 3, 2)?;
    let (mid, top) = (t.mid(), t.top());
    println!("{} over {} over {}", top, mid, t.prime());
    println!("mid modulus {:?}, top modulus {:?}", t.mid_modulus(), t.top_modulus());

    let w = top.primitive();
    let x = top.pow(w, 10);
    println!("w^10 = {x}, its coordinates over F_8: {:?}", top.digits(x));
    println!("Tr_(F_64/F_8)(w^10) = {}", top.trace_to_base(x));
    let image = top.frobenius(x, 3);
    println!("Frobenius x -> x^8 maps w^10 to w^{}", top.log_primitive(image).unwrap_or(0));

    let u = mid.primitive();
    let y = t.elem(Level::Mid, u)?;
    println!("u = {u} lies in F_8 and embeds into F_64 as the same code: {}", top.contains(y.code));
    println!("order of w^9 is {}", top.multiplicative_order(top.pow(w, 9))?);
    Ok(())
}
