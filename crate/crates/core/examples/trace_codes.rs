//! Binary trace codes of additive codes over F_4, with their parameters and
//! LCD status.

use acp_core::text::parse_vector;
use acp_core::{AdditiveCode, FieldTower, Level, Mat};

fn main() -> acp_core::Result<()> {
    let t = FieldTower::new(2, 1, 2)?;
    let examples = [
        vec!["w w^2 0 w 0", "0 w w^2 0 w"],
        vec!["w w 0 w w 0 w w 0", "0 w w 0 w w 0 w w"],
        vec!["w w 0 0 w w 0 0 w 0 0", "0 w w 0 0 w w 0 0 w 0", "0 0 w w 0 0 w w^2 0 0 w"],
    ];
    for rows in examples {
        let v = rows.iter().map(|r| parse_vector(&t, Level::Top, r)).collect::<acp_core::Result<Vec<_>>>()?;
        let c = AdditiveCode::span_fq(&t, &Mat::from_rows(t.top(), &v)?)?;
        let tc = c.trace_code();
        let (n, k, d) = tc.params()?;
        println!("[{n}, {k}, {d}]  {}", if tc.is_lcd() { "LCD" } else { "not LCD" });
    }
    Ok(())
}
