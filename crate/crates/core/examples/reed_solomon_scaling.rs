//! A Reed-Solomon code and its dual, turned into an LCP by column scaling
//! and lifted to an additive complementary pair.

use acp_core::construct::{find_scaling, lift_pair, rs_code, vandermonde};
use acp_core::text::{fmt_rows, fmt_vector};
use acp_core::{FieldTower, Level};

fn main() -> acp_core::Result<()> {
    let t = FieldTower::new(5, 1, 2)?;
    let pts = (1..=4).map(|c| t.elem(Level::Top, c)).collect::<acp_core::Result<Vec<_>>>()?;
    let g = vandermonde(&t, &pts, 2)?;
    println!("G = {:?}", fmt_rows(&t, &g.to_rows()));
    let (c, d) = rs_code(&t, &pts, 2)?;
    println!("C = {:?}, dual generator {:?}", c.params()?, fmt_rows(&t, &d.gen().to_rows()));

    let found = find_scaling(&c, &d, 1000, 0)?.expect("a scaling exists for this pair");
    println!("scaling a = {} after {} candidates", fmt_vector(&t, &found.a), found.tried);
    let lifted = lift_pair(&c.scale(&found.a)?, &d)?;
    println!("{}", lifted.summary);
    Ok(())
}
