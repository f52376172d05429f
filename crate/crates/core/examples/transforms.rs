//! Every sandwich transform applied to a point and to a line.

use std::f64::consts::FRAC_PI_2;

use paravector::{line_through, Point, Transform, Vector3};

fn main() -> paravector::Result<()> {
    let (e1, e2, e3) = (Vector3::E1, Vector3::E2, Vector3::E3);
    let p = Point::at(Vector3::new(1.0, 2.0, 3.0));
    let line = line_through(&Point::at(e1), &Point::at(e1 + e2))?;

    let transforms = [
        Transform::reflection(e3)?,
        Transform::scale(e1, 2f64.ln())?,
        Transform::shear(e1, e2, 0.5)?,
        Transform::rotation(e1, e2, FRAC_PI_2)?,
        Transform::hyperbolic_rotation(e1, e2, 0.3)?,
        Transform::translation(Vector3::new(0.0, 0.0, 5.0))?,
    ];
    for t in &transforms {
        println!("{:<12} ε={:+}  P ↦ {}", t.kind().tag(), t.epsilon(), t.apply(&p)?);
        println!("{:<12}       L ↦ {}", "", t.apply(&line)?);
    }

    let both = transforms[5].compose(&transforms[3]);
    println!("\nrotate then translate: P ↦ {}", both.apply(&p)?);
    println!("operator: {}", both.operator());
    Ok(())
}
