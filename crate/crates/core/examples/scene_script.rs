//! Builds a scene in memory, runs a script over it and projects it.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_4;

use paravector::scene::{cmd_classify, cmd_project, info, run_script, ProjectMode, Scene, ScenePoint, Step, TransformScript};
use paravector::Vector3;

fn main() -> Result<(), paravector::scene::SceneError> {
    let mut points = BTreeMap::new();
    for (id, pos) in [("a", [0.0, 0.0, 1.0]), ("b", [1.0, 0.0, 1.0]), ("c", [0.0, 1.0, 1.0]), ("d", [0.0, 0.0, 2.0])] {
        points.insert(id.to_string(), ScenePoint { pos, weight: 1.0 });
    }
    let scene = Scene {
        points,
        segments: vec![["a".into(), "b".into()], ["c".into(), "d".into()]],
        triangles: vec![["a".into(), "b".into(), "c".into()]],
        ..Scene::default()
    };
    scene.validate()?;

    let script = TransformScript {
        steps: vec![
            Step::Rotate { u: [1.0, 0.0, 0.0], v: [0.0, 1.0, 0.0], theta: FRAC_PI_4 },
            Step::Translate { v: [0.0, 0.0, 1.0] },
        ],
    };
    println!("script:\n{}", serde_json::to_string(&script).unwrap());
    let moved = run_script(&scene, &script)?;
    print!("\nafter script:\n{}", moved.to_json());

    println!("\nab vs cd: {}", cmd_classify(&moved, ("a", "b"), ("c", "d"))?);
    let report = info(&moved)?;
    println!("triangle normal {:?}", report.triangles[0].normal);

    let flat = cmd_project(&moved, Vector3::ZERO, Vector3::E3, ProjectMode::Perspective { c: 1.0 })?;
    for (id, p) in &flat.points {
        println!("{id}: {:?} weight {}", p.pos, p.weight);
    }
    Ok(())
}
