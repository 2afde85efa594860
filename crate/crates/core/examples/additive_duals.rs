//! Left and right duals of an additive code under a twisted trace form.

use acp_core::{AdditiveCode, FieldTower, FormSpec, Mat};

fn main() -> acp_core::Result<()> {
    let t = FieldTower::new(2, 1, 2)?;
    let top = t.top();
    let w = top.primitive();
    let g = Mat::from_rows(top, &[vec![1, w, 0], vec![w, 0, 1]])?;
    let c = AdditiveCode::span_fq(&t, &g)?;

    // mu = (1, w, w), sigma = (2 3 1), pi = Frobenius.
    let f = FormSpec::new(&t, vec![1, w, w], vec![1, 2, 0], 1)?;
    let left = f.left_dual(&c)?;
    let right = f.right_dual(&c)?;
    println!("dim C = {}, left dual {}, right dual {}", c.dim(), left.dim(), right.dim());
    println!("left dual basis: {:?}", left.basis().to_rows());
    println!("(C^L)^R == C: {}", f.right_dual(&left)? == c);
    println!("parity-check matrix: {:?}", f.parity_check(&c)?.to_rows());
    Ok(())
}
