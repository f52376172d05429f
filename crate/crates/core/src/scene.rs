//! JSON scenes and transform scripts.
//!
//! A scene is a set of named weighted points plus segments and triangles
//! that refer to them by id. A point with weight `w ≠ 0` at `pos` is the
//! paravector `w + |w|·pos`; with `w = 0` it is the bare vector `pos`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::exterior::Vector3;
use crate::paravector::{classify_lines, line_through, plane_through, LineRelation, Point};
use crate::transform::{cotranslate, pseudo_perspective, PerspectiveCamera, Side, Transform};

/// Errors from loading, validating or processing scenes.
#[derive(Debug, Error)]
pub enum SceneError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },

    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },

    #[error("{context} refers to unknown point id `{id}`")]
    UnknownId { context: String, id: String },

    #[error("point `{id}` has a non-finite coordinate or weight")]
    NonFinite { id: String },

    #[error("{context}: {source}")]
    Degenerate { context: String, source: Error },

    #[error("step {index} ({op}): {source}")]
    Step { index: usize, op: &'static str, source: Error },

    #[error("point `{id}`: {source}")]
    Point { id: String, source: Error },

    #[error(transparent)]
    Geometry(#[from] Error),

    #[error("{0}")]
    Usage(String),
}

/// A named weighted point as stored on disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenePoint {
    pub pos: [f64; 3],
    pub weight: f64,
}

impl ScenePoint {
    pub fn to_point(&self) -> Point {
        let pos = Vector3::from(self.pos);
        if self.weight == 0.0 {
            Point::vector(pos)
        } else {
            Point::from_raw(self.weight, pos * self.weight.abs())
        }
    }

    pub fn from_point(p: &Point) -> Self {
        let x0 = p.scalar();
        let x = p.vector_part();
        if x0 == 0.0 {
            ScenePoint { pos: x.to_array(), weight: 0.0 }
        } else {
            ScenePoint { pos: (x / x0.abs()).to_array(), weight: x0 }
        }
    }

    fn is_finite(&self) -> bool {
        self.weight.is_finite() && self.pos.iter().all(|c| c.is_finite())
    }
}

/// Named points, segments and triangles. Per-point flags record projection
/// outcomes such as `behind_eye` or `at_infinity`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scene {
    pub points: BTreeMap<String, ScenePoint>,
    #[serde(default)]
    pub segments: Vec<[String; 2]>,
    #[serde(default)]
    pub triangles: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub flags: BTreeMap<String, String>,
}

impl Scene {
    pub fn point(&self, id: &str, context: &str) -> Result<Point, SceneError> {
        self.points
            .get(id)
            .map(ScenePoint::to_point)
            .ok_or_else(|| SceneError::UnknownId { context: context.to_string(), id: id.to_string() })
    }

    /// Checks finiteness, id references and that every segment and triangle
    /// spans a line or plane.
    pub fn validate(&self) -> Result<(), SceneError> {
        for (id, p) in &self.points {
            if !p.is_finite() {
                return Err(SceneError::NonFinite { id: id.clone() });
            }
        }
        for (i, [a, b]) in self.segments.iter().enumerate() {
            let ctx = format!("segment {i} ({a}, {b})");
            let (p, q) = (self.point(a, &ctx)?, self.point(b, &ctx)?);
            line_through(&p, &q).map_err(|source| SceneError::Degenerate { context: ctx, source })?;
        }
        for (i, [a, b, c]) in self.triangles.iter().enumerate() {
            let ctx = format!("triangle {i} ({a}, {b}, {c})");
            let (p, q, r) = (self.point(a, &ctx)?, self.point(b, &ctx)?, self.point(c, &ctx)?);
            plane_through(&p, &q, &r).map_err(|source| SceneError::Degenerate { context: ctx, source })?;
        }
        Ok(())
    }

    pub fn from_json(text: &str, path: &Path) -> Result<Self, SceneError> {
        let scene: Scene = serde_json::from_str(text)
            .map_err(|source| SceneError::Parse { path: path.to_path_buf(), source })?;
        scene.validate()?;
        Ok(scene)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("scene serializes");
        s.push('\n');
        s
    }
}

pub fn load_scene(path: impl AsRef<Path>) -> Result<Scene, SceneError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|source| SceneError::Read { path: path.to_path_buf(), source })?;
    Scene::from_json(&text, path)
}

pub fn save_scene(scene: &Scene, path: impl AsRef<Path>) -> Result<(), SceneError> {
    let path = path.as_ref();
    fs::write(path, scene.to_json())
        .map_err(|source| SceneError::Write { path: path.to_path_buf(), source })
}

/// One scripted transformation. Angles are radians.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", content = "params", rename_all = "lowercase", deny_unknown_fields)]
pub enum Step {
    Reflect { n: [f64; 3] },
    Scale { v: [f64; 3], t: f64 },
    Shear { u: [f64; 3], v: [f64; 3], t: f64 },
    Rotate { u: [f64; 3], v: [f64; 3], theta: f64 },
    Hrotate { u: [f64; 3], v: [f64; 3], theta: f64 },
    Translate { v: [f64; 3] },
    Cotranslate { v: [f64; 3] },
}

impl Step {
    pub fn name(&self) -> &'static str {
        match self {
            Step::Reflect { .. } => "reflect",
            Step::Scale { .. } => "scale",
            Step::Shear { .. } => "shear",
            Step::Rotate { .. } => "rotate",
            Step::Hrotate { .. } => "hrotate",
            Step::Translate { .. } => "translate",
            Step::Cotranslate { .. } => "cotranslate",
        }
    }

    /// The sandwich transform, or `None` for cotranslation.
    pub fn transform(&self) -> Result<Option<Transform>, Error> {
        let v3 = |a: &[f64; 3]| Vector3::from(*a);
        let t = match self {
            Step::Reflect { n } => Transform::reflection(v3(n))?,
            Step::Scale { v, t } => Transform::scale(v3(v), *t)?,
            Step::Shear { u, v, t } => Transform::shear(v3(u), v3(v), *t)?,
            Step::Rotate { u, v, theta } => Transform::rotation(v3(u), v3(v), *theta)?,
            Step::Hrotate { u, v, theta } => Transform::hyperbolic_rotation(v3(u), v3(v), *theta)?,
            Step::Translate { v } => Transform::translation(v3(v))?,
            Step::Cotranslate { v } => {
                if !v3(v).is_finite() {
                    return Err(Error::NonFinite("cotranslation vector"));
                }
                return Ok(None);
            }
        };
        Ok(Some(t))
    }
}

/// An ordered list of steps.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformScript {
    pub steps: Vec<Step>,
}

impl TransformScript {
    /// Builds every step once so bad parameters surface before any point
    /// is touched.
    pub fn validate(&self) -> Result<(), SceneError> {
        for (index, step) in self.steps.iter().enumerate() {
            step.transform()
                .map_err(|source| SceneError::Step { index, op: step.name(), source })?;
        }
        Ok(())
    }
}

pub fn load_script(path: impl AsRef<Path>) -> Result<TransformScript, SceneError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|source| SceneError::Read { path: path.to_path_buf(), source })?;
    let script: TransformScript = serde_json::from_str(&text)
        .map_err(|source| SceneError::Parse { path: path.to_path_buf(), source })?;
    script.validate()?;
    Ok(script)
}

/// Applies each step to every point in order. Segments and triangles keep
/// their ids and are re-checked against the moved endpoints after each step.
pub fn run_script(scene: &Scene, script: &TransformScript) -> Result<Scene, SceneError> {
    script.validate()?;
    let mut out = scene.clone();
    for (index, step) in script.steps.iter().enumerate() {
        let fail = |source| SceneError::Step { index, op: step.name(), source };
        let transform = step.transform().map_err(fail)?;
        for p in out.points.values_mut() {
            let x = p.to_point();
            let moved = match (&transform, step) {
                (Some(t), _) => t.apply(&x),
                (None, Step::Cotranslate { v }) => cotranslate(Vector3::from(*v), &x),
                (None, _) => unreachable!("only cotranslation has no sandwich"),
            }
            .map_err(fail)?;
            *p = ScenePoint::from_point(&moved);
        }
        out.validate().map_err(|e| match e {
            SceneError::Degenerate { source, .. } => fail(source),
            other => other,
        })?;
    }
    Ok(out)
}

/// Projection mode for [`cmd_project`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProjectMode {
    /// Central projection onto `n⃗·x⃗ = c`.
    Perspective { c: f64 },
    /// Frustum-to-box map with the eye moved to `1 − 𝐧`.
    Pseudo,
}

pub const FLAG_BEHIND: &str = "behind_eye";
pub const FLAG_INFINITY: &str = "at_infinity";
pub const FLAG_UNPROJECTABLE: &str = "unprojectable";

/// Projects every point. Segments and triangles are carried over unchanged
/// and not re-validated, since projection collapses depth.
///
/// Perspective output stores the location on the plane with weight
/// `(c − n⃗·e⃗)/(n⃗·(p⃗−e⃗))`. Points in the eye plane get weight 0, position
/// `p⃗ − e⃗` and the `at_infinity` flag.
pub fn cmd_project(
    scene: &Scene,
    eye: Vector3,
    normal: Vector3,
    mode: ProjectMode,
) -> Result<Scene, SceneError> {
    let mut out = Scene {
        points: BTreeMap::new(),
        segments: scene.segments.clone(),
        triangles: scene.triangles.clone(),
        flags: BTreeMap::new(),
    };
    match mode {
        ProjectMode::Perspective { c } => {
            let cam = PerspectiveCamera::new(eye, normal, c)?;
            for (id, sp) in &scene.points {
                let p = sp.to_point();
                let (projected, flag) = match cam.project(&p) {
                    Ok(img) => {
                        let flag = (img.side == Side::Behind).then_some(FLAG_BEHIND);
                        (ScenePoint { pos: img.location.to_array(), weight: img.weight }, flag)
                    }
                    Err(Error::PointAtInfinity) => {
                        let rel = p.location()? - eye;
                        (ScenePoint { pos: rel.to_array(), weight: 0.0 }, Some(FLAG_INFINITY))
                    }
                    Err(Error::UndefinedLocation) => (*sp, Some(FLAG_UNPROJECTABLE)),
                    Err(source) => return Err(SceneError::Point { id: id.clone(), source }),
                };
                out.points.insert(id.clone(), projected);
                if let Some(f) = flag {
                    out.flags.insert(id.clone(), f.to_string());
                }
            }
        }
        ProjectMode::Pseudo => {
            let to_canonical = Transform::translation(-normal - eye)?;
            for (id, sp) in &scene.points {
                let p = to_canonical
                    .apply(&sp.to_point())
                    .and_then(|p| pseudo_perspective(normal, &p))
                    .map_err(|source| SceneError::Point { id: id.clone(), source })?;
                let flag = if p.scalar() == 0.0 {
                    Some(FLAG_INFINITY)
                } else if p.scalar() < 0.0 {
                    Some(FLAG_BEHIND)
                } else {
                    None
                };
                out.points.insert(id.clone(), ScenePoint::from_point(&p));
                if let Some(f) = flag {
                    out.flags.insert(id.clone(), f.to_string());
                }
            }
        }
    }
    Ok(out)
}

/// Relation between two segments of a scene.
pub fn cmd_classify(
    scene: &Scene,
    a: (&str, &str),
    b: (&str, &str),
) -> Result<LineRelation, SceneError> {
    let line = |(p, q): (&str, &str), ctx: &str| -> Result<_, SceneError> {
        let (p, q) = (scene.point(p, ctx)?, scene.point(q, ctx)?);
        line_through(&p, &q).map_err(|source| SceneError::Degenerate { context: ctx.to_string(), source })
    };
    Ok(classify_lines(&line(a, "segment a")?, &line(b, "segment b")?)?)
}

/// Derived quantities of a scene, for the `info` command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SceneInfo {
    pub points: BTreeMap<String, PointInfo>,
    pub segments: Vec<SegmentInfo>,
    pub triangles: Vec<TriangleInfo>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointInfo {
    pub weight: f64,
    pub orientation: i8,
    pub location: Option<[f64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SegmentInfo {
    pub ids: [String; 2],
    pub direction: [f64; 3],
    pub moment: [f64; 3],
    pub support: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleInfo {
    pub ids: [String; 3],
    pub normal: [f64; 3],
    pub c: f64,
    pub support: [f64; 3],
}

/// Plücker coordinates and supports of the segments, plane duals and
/// supports of the triangles.
pub fn info(scene: &Scene) -> Result<SceneInfo, SceneError> {
    let points = scene
        .points
        .iter()
        .map(|(id, sp)| {
            let p = sp.to_point();
            let info = PointInfo {
                weight: p.weight(),
                orientation: if p.scalar() < 0.0 { -1 } else { 1 },
                location: p.location().ok().map(Vector3::to_array),
            };
            (id.clone(), info)
        })
        .collect();
    let mut segments = Vec::new();
    for [a, b] in &scene.segments {
        let ctx = format!("segment ({a}, {b})");
        let l = line_through(&scene.point(a, &ctx)?, &scene.point(b, &ctx)?)?;
        let (dir, m) = l.plucker();
        segments.push(SegmentInfo {
            ids: [a.clone(), b.clone()],
            direction: dir.to_array(),
            moment: m.to_array(),
            support: l.support()?.to_array(),
        });
    }
    let mut triangles = Vec::new();
    for [a, b, c] in &scene.triangles {
        let ctx = format!("triangle ({a}, {b}, {c})");
        let plane = plane_through(
            &scene.point(a, &ctx)?,
            &scene.point(b, &ctx)?,
            &scene.point(c, &ctx)?,
        )?;
        let (n, off) = plane.dual();
        triangles.push(TriangleInfo {
            ids: [a.clone(), b.clone(), c.clone()],
            normal: n.to_array(),
            c: off,
            support: plane.support()?.to_array(),
        });
    }
    Ok(SceneInfo { points, segments, triangles })
}
