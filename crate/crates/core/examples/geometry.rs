//! Points, lines and planes as paravectors, with their Plücker data.

use paravector::paravector::{plane_through, volume_through};
use paravector::{line_through, on_line, on_plane, Point, Vector3};

fn main() -> paravector::Result<()> {
    let p = Point::at(Vector3::new(1.0, 0.0, 0.0));
    let q = Point::at(Vector3::new(0.0, 1.0, 0.0));
    let r = Point::at(Vector3::new(0.0, 0.0, 1.0));
    let heavy = Point::new(Vector3::new(2.0, 2.0, 2.0), -3.0);

    println!("P = {p}");
    println!("weighted point {heavy}: weight {}, orientation {:?}, at {:?}",
        heavy.weight(), heavy.orientation(), heavy.location()?);

    let l = line_through(&p, &q)?;
    let (dir, moment) = l.plucker();
    println!("\nline PQ = {l}");
    println!("  direction {dir:?}\n  moment    {moment:?}\n  support   {:?}", l.support()?);
    println!("  midpoint on line: {}", on_line(&l, &Point::at(Vector3::new(0.5, 0.5, 0.0))));

    let plane = plane_through(&p, &q, &r)?;
    let (n, c) = plane.dual();
    println!("\nplane PQR = {plane}");
    println!("  n·x = c with n = {n:?}, c = {c}");
    println!("  support {:?}", plane.support()?);
    println!("  centroid on plane: {}", on_plane(&plane, &Point::at(Vector3::new(1.0, 1.0, 1.0) / 3.0)));

    let o = Point::at(Vector3::ZERO);
    println!("\nsigned volume OPQR = {}", volume_through(&o, &p, &q, &r)?.volume());
    Ok(())
}
