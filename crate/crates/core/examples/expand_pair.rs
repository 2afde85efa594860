//! Growing an LCP over F_64 by one coordinate, then expanding by a
//! parity-check row over F_4.

use acp_core::construct::{expand_pair, parity_expansion};
use acp_core::text::{fmt_elem, fmt_rows, parse_vector};
use acp_core::{FieldTower, Level, Mat};

fn main() -> acp_core::Result<()> {
    // F_8 = F_2[u] / (u^3 + u^2 + 1).
    let t = FieldTower::with_moduli(2, 3, 2, Some(vec![1, 0, 1, 1]), None)?;
    let rows = |s: &[&str]| -> acp_core::Result<Mat> {
        let v = s.iter().map(|r| parse_vector(&t, Level::Top, r)).collect::<acp_core::Result<Vec<_>>>()?;
        Mat::from_rows(t.top(), &v)
    };
    let g1 = rows(&[
        "1 1 1 1 1 1 1",
        "1 u u^2 u^3 u^4 u^5 u^6",
        "1 u^-1 u^-2 u^-3 u^-4 u^-5 u^-6",
        "1 u^2 u^4 u^6 u^8 u^10 u^12",
        "1 u^5 u^10 u^15 u^20 u^25 u^30",
    ])?;
    let g2 = rows(&["1 0 1 u^6 u^4 u^4 u^6", "0 1 u^6 u^4 u^4 u^6 1"])?;
    let p = parse_vector(&t, Level::Top, "u^6 u^3 u^4 u u^2 1 0")?;
    let e = expand_pair(&t, &g1, &g2, &p)?;
    println!("lambda = {}", fmt_elem(&t, e.lambda));
    println!("G_ex2 = {:?}", fmt_rows(&t, &e.gen2.to_rows()));
    println!("LCP {}, lifted ACP {}", e.verdict.is_complementary, e.lifted.is_complementary);

    let s = FieldTower::new(2, 1, 2)?;
    let g = Mat::from_rows(s.top(), &[vec![1, 0, 0]])?;
    let h = Mat::from_rows(s.top(), &[vec![1, 0, 0]])?;
    let r = parity_expansion(&s, &g, &h, &[0, 1, 0], &[0, 0, 2])?;
    println!("parity expansion: ACP {}", r.verdict.is_complementary);
    Ok(())
}
