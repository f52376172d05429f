//! Wedge, contraction, Hodge dual and the three involutions.

use paravector::{Multivector, Vector3};

fn main() {
    let e1 = Multivector::basis(1);
    let e2 = Multivector::basis(2);
    let e3 = Multivector::basis(3);

    let b = e1.wedge(&e2);
    println!("e1 ∧ e2         = {b}");
    println!("e2 ∧ e1         = {}", e2.wedge(&e1));
    println!("e1 ∧ e2 ∧ e3    = {}", b.wedge(&e3));
    println!("e1 · (e1 ∧ e2)  = {}", e1.interior(&b));

    for (name, x) in [("1", Multivector::scalar(1.0)), ("e2", e2), ("e1∧e2", b)] {
        println!("⋆{name:<6} = {}", x.hodge());
    }

    let a = Multivector::scalar(2.0) + Vector3::new(1.0, -1.0, 0.5).into() + b * 3.0 + Multivector::omega();
    println!("\nA              = {a}");
    println!("grade involution {}", a.grade_involution());
    println!("reversion        {}", a.reversion());
    println!("conjugation      {}", a.conjugation());
    println!("(A|A)            {}", a.scalar_product(&a));
}
