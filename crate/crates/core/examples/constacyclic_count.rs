//! Factoring X^n - λ, splitting the ambient space into components, and
//! counting constacyclic complementary pairs.

use acp_core::constacyclic::{count_acp, cyclotomic_cosets, decompose_ring, factor_xn_minus_lambda};
use acp_core::oracle::{enumerate_constacyclic_acp, EnumBudget, EnumMode};
use acp_core::{FieldTower, Level};

fn main() -> acp_core::Result<()> {
    let t = FieldTower::new(3, 1, 2)?;
    println!("3-cyclotomic cosets mod 10: {:?}", cyclotomic_cosets(10, 3)?.cosets);
    let f = factor_xn_minus_lambda(&t, 10, 1, Level::Mid)?;
    for p in &f.factors {
        println!("  {p}");
    }
    let dec = decompose_ring(&t, 10, 1)?;
    for c in dec.components() {
        println!("component of degree {}: {:?}", c.degree, c.kind);
    }
    println!("pairs for n = 10: {}", count_acp(&t, 10, 1)?);

    let small = count_acp(&t, 4, 2)?;
    let enumerated = enumerate_constacyclic_acp(&t, 4, 2, EnumMode::Raw, &EnumBudget::default())?;
    println!("n = 4, λ = 2: formula {small}, enumeration {enumerated}");
    Ok(())
}
