//! Central projection onto a plane.

use paravector::{PerspectiveCamera, Point, Vector3};

fn main() -> paravector::Result<()> {
    // eye at the origin looking down +z onto z = 1
    let cam = PerspectiveCamera::new(Vector3::ZERO, Vector3::E3, 1.0)?;
    for p in [[1.0, 1.0, 2.0], [2.0, -1.0, 4.0], [1.0, 0.0, -1.0]] {
        let img = cam.project(&Point::at(Vector3::from(p)))?;
        println!("{p:?} ↦ {:?}  weight {:<5} {:?}", img.location.to_array(), img.weight, img.side);
    }
    match cam.project(&Point::at(Vector3::new(3.0, 0.0, 0.0))) {
        Ok(img) => println!("unexpected image {:?}", img.location),
        Err(e) => println!("[3, 0, 0] ↦ {e}"),
    }
    Ok(())
}
