//! The frustum-to-box map: the eye goes to infinity and rays become parallel.

use paravector::transform::pseudo_perspective;
use paravector::{Point, Vector3};

fn main() -> paravector::Result<()> {
    let n = Vector3::E3;
    let eye = Point::from_raw(1.0, -n);
    println!("eye {eye} ↦ {}", pseudo_perspective(n, &eye)?);

    // frustum corners at depth k from the eye, spread ±k sideways
    for k in [1.0, 2.0] {
        for side in [-1.0, 1.0] {
            let corner = eye + Point::vector(n * k + Vector3::E1 * (side * k));
            let img = pseudo_perspective(n, &corner)?;
            println!("depth {k}, side {side:+}: {corner} ↦ {img}  at {:?}", img.location()?.to_array());
        }
    }
    Ok(())
}
