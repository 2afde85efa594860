//! Two binary LCPs combined into one additive complementary pair over F_4.

use acp_core::construct::combine_lcps;
use acp_core::{FieldTower, Level, LinearCode};

fn main() -> acp_core::Result<()> {
    let t = FieldTower::new(2, 1, 2)?;
    let code = |rows: &[Vec<u32>]| LinearCode::from_rows(&t, Level::Mid, 4, rows);
    let pairs = vec![
        (code(&[vec![1, 1, 0, 1], vec![0, 1, 1, 1]])?, code(&[vec![1, 1, 1, 0], vec![1, 0, 1, 1]])?),
        (code(&[vec![1, 1, 1, 0]])?, code(&[vec![1, 1, 0, 0], vec![1, 0, 1, 0], vec![0, 0, 0, 1]])?),
    ];
    let r = combine_lcps(&t, &[1, t.top().primitive()], &pairs)?;
    println!("{}", r.summary);
    println!("C basis {:?}", r.first.basis().to_rows());
    println!("D basis {:?}", r.second.basis().to_rows());
    Ok(())
}
