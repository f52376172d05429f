//! Cotranslation turns position into weight.

use paravector::transform::{cotranslate_closed_form, cotranslate_pv};
use paravector::{line_through, Paravector, Point, Vector3};

fn main() -> paravector::Result<()> {
    let v = Vector3::new(0.0, 0.0, 1.0);
    for z in [-1.0, 0.0, 1.0, 2.0] {
        let p = Point::at(Vector3::new(1.0, 0.0, z));
        let out = paravector::transform::cotranslate(v, &p)?;
        println!("(1, 0, {z:>2}) ↦ {out:<16} weight {}", out.weight());
    }

    let l = line_through(&Point::at(Vector3::E1), &Point::at(Vector3::E3))?;
    let star = cotranslate_pv(v, l.pv())?;
    let closed = cotranslate_closed_form(v, l.pv())?;
    println!("\nline {l}");
    println!("  star route   {star}");
    println!("  closed form  {closed}");
    Ok(())
}
