//! Deciding whether two additive codes are complementary, with the rank
//! criteria alongside.

use acp_core::acp::{is_acp, rank_iff, rank_necessary};
use acp_core::text::fmt_vector;
use acp_core::{AdditiveCode, FieldTower, FormSpec, Mat};

fn main() -> acp_core::Result<()> {
    let t = FieldTower::new(2, 1, 2)?;
    let top = t.top();
    let (w, w2) = (2, 3);
    let code = |rows: &[Vec<u32>]| AdditiveCode::span_fq(&t, &Mat::from_rows(top, rows)?);

    let c = code(&[vec![1, 1, 0], vec![w, w, 0], vec![w2, 0, w2]])?;
    let d = code(&[vec![1, 1, 1], vec![w, w, w], vec![w, w, 0]])?;
    let f = FormSpec::identity(&t, 3);
    let v = is_acp(&c, &d)?;
    println!("ACP: {}, dims {:?}", v.is_complementary, v.dims);
    if let Some(x) = &v.witness {
        println!("common word {}", fmt_vector(&t, x));
    }
    let (holds, rank) = rank_necessary(&f, &c, &d)?;
    println!("necessary rank condition: {holds} (rank {rank})");

    let c = code(&[vec![1, 1, 0], vec![w, 0, w], vec![0, w, w]])?;
    let d = code(&[vec![1, 0, 1], vec![1, 1, 1], vec![w, w, w]])?;
    let r = rank_iff(&f, &c, &d)?;
    println!("rank criterion: ranks {:?} targets {:?} -> {}", r.ranks, r.targets, r.holds);
    println!("definitional check agrees: {}", is_acp(&c, &d)?.is_complementary == r.holds);
    Ok(())
}
