//! Relative position of two lines.

use paravector::{classify_lines, line_through, Point, Vector3};

fn line(a: [f64; 3], b: [f64; 3]) -> paravector::LineSegment {
    line_through(&Point::at(Vector3::from(a)), &Point::at(Vector3::from(b))).unwrap()
}

fn main() -> paravector::Result<()> {
    let x_axis = line([0.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
    let others = [
        ("y axis", line([0.0, 0.0, 0.0], [0.0, 1.0, 0.0])),
        ("x axis shifted by e2", line([0.0, 1.0, 0.0], [1.0, 1.0, 0.0])),
        ("x axis, reparametrized", line([3.0, 0.0, 0.0], [-2.0, 0.0, 0.0])),
        ("diagonal through origin", line([0.0, 0.0, 0.0], [1.0, 1.0, 0.0])),
        ("y axis shifted by e3", line([0.0, 0.0, 1.0], [0.0, 1.0, 1.0])),
    ];
    for (name, m) in others {
        println!("x axis vs {name:<24} {}", classify_lines(&x_axis, &m)?);
    }
    Ok(())
}
