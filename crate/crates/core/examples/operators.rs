//! Creation and annihilation operators acting on multivectors.

use paravector::operator::{op_exp_series, star_bracket};
use paravector::{Multivector, OpElement, Vector3};

fn main() -> paravector::Result<()> {
    let (e1, e2) = (OpElement::cre(1), OpElement::cre(2));
    let (a1, a2) = (OpElement::ann(1), OpElement::ann(2));

    println!("e1 e2 + e2 e1   = {}", e1 * e2 + e2 * e1);
    println!("e1* e1 + e1 e1* = {}", a1 * e1 + e1 * a1);
    println!("e2* e1 e2       = {}", a2 * e1 * e2);

    let x = Multivector::basis(1).wedge(&Multivector::basis(2));
    println!("\ne2* applied to e1∧e2 = {}", a2.apply(&x));

    let u = Vector3::new(1.0, 2.0, 0.0);
    let v = Vector3::new(0.0, 1.0, -1.0);
    let w = OpElement::creation(u) * OpElement::annihilation(v);
    println!("u v* = {w}");
    println!("its 8×8 action, row 1: {:?}", w.to_matrix()[1]);

    let omega = OpElement::iota(&Multivector::omega());
    println!("\n⋆1 = {}", OpElement::identity().star()?);
    println!("⋆Ω = {}", omega.star()?);
    println!("bracket form of ⋆e1 = {}", star_bracket(0b001));

    let g = OpElement::creation(Vector3::new(0.0, 0.0, 2.0)) * 0.5;
    println!("\nexp(e3) = {}", op_exp_series(&g, 1e-14)?);
    Ok(())
}
