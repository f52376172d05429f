//! Sandwich transformations of points, lines, planes and volumes.
//!
//! A [`Transform`] holds an invertible operator `U` with `ŪU = ε = ±1`.
//! Odd bands (points, planes) transform as `ε U X Ũ`, even bands (lines,
//! volumes) as `ε U X Ū`.
//!
//! Cotranslation, perspective and pseudo-perspective conjugate a translation
//! by the Hodge star, so they are plain functions rather than `Transform`
//! values.

use std::fmt;

use crate::error::{Error, Result};
use crate::exterior::{Multivector, Vector3};
use crate::operator::OpElement;
use crate::paravector::{KParavector, Paravector, Point};

/// Tolerance for unit-length and orthogonality preconditions.
pub const FRAME_TOL: f64 = 1e-9;

/// Below this `|u⃗·v⃗|` the function `H` switches to its limit value `t`.
pub const H_BRANCH: f64 = 1e-12;

const CHECK_TOL: f64 = 1e-9;

/// `H(t, s) = (e^{ts} − 1)/s`, with the removable singularity at `s = 0`.
pub fn h_function(t: f64, s: f64) -> f64 {
    if s.abs() < H_BRANCH {
        t
    } else {
        (t * s).exp_m1() / s
    }
}

/// `e^{t[𝐮,𝐯*]/2} = e^{−t s/2} (1 + H(t,s) 𝐮𝐯*)` with `s = u⃗·v⃗`.
pub fn screw_scale_exp(u: Vector3, v: Vector3, t: f64) -> OpElement {
    let s = u.dot(&v);
    let uv = OpElement::creation(u) * OpElement::annihilation(v);
    (OpElement::identity() + uv * h_function(t, s)) * (-t * s / 2.0).exp()
}

/// Parameters a transform was built from.
#[derive(Debug, Clone, PartialEq)]
pub enum TransformKind {
    Identity,
    Reflection { n: Vector3 },
    Scale { v: Vector3, t: f64 },
    Shear { u: Vector3, v: Vector3, t: f64 },
    Rotation { u: Vector3, v: Vector3, theta: f64 },
    HyperbolicRotation { u: Vector3, v: Vector3, theta: f64 },
    Translation { v: Vector3 },
    /// Left factor first.
    Composed(Vec<TransformKind>),
}

impl TransformKind {
    /// Short tag: `reflection`, `scale`, `shear`, `rotation`, `hrotation`,
    /// `translation`, `composed` or `identity`.
    pub fn tag(&self) -> &'static str {
        match self {
            TransformKind::Identity => "identity",
            TransformKind::Reflection { .. } => "reflection",
            TransformKind::Scale { .. } => "scale",
            TransformKind::Shear { .. } => "shear",
            TransformKind::Rotation { .. } => "rotation",
            TransformKind::HyperbolicRotation { .. } => "hrotation",
            TransformKind::Translation { .. } => "translation",
            TransformKind::Composed(_) => "composed",
        }
    }
}

fn check_finite(v: &Vector3, what: &'static str) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

fn check_unit(v: &Vector3, name: &str) -> Result<()> {
    let n = v.norm();
    if (n - 1.0).abs() > FRAME_TOL {
        return Err(Error::InvalidArgument(format!("{name} must be a unit vector, |{name}| = {n}")));
    }
    Ok(())
}

fn check_orthonormal(u: &Vector3, v: &Vector3) -> Result<()> {
    check_finite(u, "frame vector u")?;
    check_finite(v, "frame vector v")?;
    check_unit(u, "u")?;
    check_unit(v, "v")?;
    let d = u.dot(v);
    if d.abs() > FRAME_TOL {
        return Err(Error::InvalidArgument(format!("u and v must be orthogonal, u·v = {d}")));
    }
    Ok(())
}

/// The split `X₁ = ½[𝐮+𝐮*, 𝐯+𝐯*]`, `X₂ = ½[𝐮−𝐮*, 𝐯−𝐯*]` of the rotation
/// generator `ℛ = X₁ − X₂`.
pub fn rotation_split(u: Vector3, v: Vector3) -> (OpElement, OpElement) {
    let (cu, au) = (OpElement::creation(u), OpElement::annihilation(u));
    let (cv, av) = (OpElement::creation(v), OpElement::annihilation(v));
    let r1 = (cu + au).commutator(&(cv + av)) * 0.5;
    let r2 = (cu - au).commutator(&(cv - av)) * 0.5;
    (r1, r2)
}

/// The split `Y₁ = ½[𝐮−𝐮*, 𝐯+𝐯*]`, `Y₂ = ½[𝐮+𝐮*, 𝐯−𝐯*]` of the hyperbolic
/// generator `𝒮 = Y₁ − Y₂`.
pub fn hyperbolic_split(u: Vector3, v: Vector3) -> (OpElement, OpElement) {
    let (cu, au) = (OpElement::creation(u), OpElement::annihilation(u));
    let (cv, av) = (OpElement::creation(v), OpElement::annihilation(v));
    let s1 = (cu - au).commutator(&(cv + av)) * 0.5;
    let s2 = (cu + au).commutator(&(cv - av)) * 0.5;
    (s1, s2)
}

/// `[𝐮,𝐯*]`.
fn uv_commutator(u: Vector3, v: Vector3) -> OpElement {
    OpElement::creation(u).commutator(&OpElement::annihilation(v))
}

/// A validated sandwich operator.
#[derive(Clone, PartialEq)]
pub struct Transform {
    u: OpElement,
    epsilon: f64,
    kind: TransformKind,
}

impl fmt::Debug for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Transform")
            .field("kind", &self.kind)
            .field("epsilon", &self.epsilon)
            .field("u", &self.u)
            .finish()
    }
}

impl Transform {
    /// Wraps an operator, computing `ε` from `ŪU` and checking that the
    /// product is `±1` times the identity.
    pub fn from_operator(u: OpElement, kind: TransformKind) -> Result<Self> {
        if !u.is_finite() {
            return Err(Error::NonFinite("transform operator"));
        }
        let norm = u.conjugation() * u;
        let epsilon = norm.scalar_part();
        let deviation = (norm - OpElement::scalar(epsilon)).max_abs();
        if (epsilon.abs() - 1.0).abs() > CHECK_TOL || deviation > CHECK_TOL {
            return Err(Error::InvalidArgument(format!(
                "operator is not a valid sandwich: ŪU has scalar {epsilon} and off-scalar part {deviation:e}"
            )));
        }
        Ok(Transform { u, epsilon: epsilon.signum(), kind })
    }

    pub fn identity() -> Self {
        Transform {
            u: OpElement::identity(),
            epsilon: 1.0,
            kind: TransformKind::Identity,
        }
    }

    /// Reflection in the plane through the origin with unit normal `n`,
    /// `U = 𝐧*𝐧 − 𝐧𝐧*`, `ε = −1`.
    pub fn reflection(n: Vector3) -> Result<Self> {
        check_finite(&n, "reflection normal")?;
        check_unit(&n, "n")?;
        let (c, a) = (OpElement::creation(n), OpElement::annihilation(n));
        Self::from_operator(a * c - c * a, TransformKind::Reflection { n })
    }

    /// Scale of the component along `v` by `e^{t|v⃗|²}`.
    pub fn scale(v: Vector3, t: f64) -> Result<Self> {
        check_finite(&v, "scale direction")?;
        if !t.is_finite() {
            return Err(Error::NonFinite("scale parameter"));
        }
        if v.norm() == 0.0 {
            return Err(Error::InvalidArgument("scale direction must be nonzero".into()));
        }
        Self::from_operator(screw_scale_exp(v, v, t), TransformKind::Scale { v, t })
    }

    /// Shear `p⃗ ↦ p⃗ + t (p⃗·v⃗) u⃗` for orthogonal `u`, `v`.
    pub fn shear(u: Vector3, v: Vector3, t: f64) -> Result<Self> {
        check_finite(&u, "shear vector u")?;
        check_finite(&v, "shear vector v")?;
        if !t.is_finite() {
            return Err(Error::NonFinite("shear parameter"));
        }
        if u.norm() == 0.0 || v.norm() == 0.0 {
            return Err(Error::InvalidArgument("shear vectors must be nonzero".into()));
        }
        let d = u.dot(&v);
        if d.abs() > FRAME_TOL * u.norm() * v.norm() {
            return Err(Error::InvalidArgument(format!("shear vectors must be orthogonal, u·v = {d}")));
        }
        Self::from_operator(screw_scale_exp(u, v, t), TransformKind::Shear { u, v, t })
    }

    /// Rotation by `theta` in the plane of the orthonormal pair `(u, v)`,
    /// positive from `v` towards `u`.
    pub fn rotation(u: Vector3, v: Vector3, theta: f64) -> Result<Self> {
        check_orthonormal(&u, &v)?;
        if !theta.is_finite() {
            return Err(Error::NonFinite("rotation angle"));
        }
        let (r1, r2) = rotation_split(u, v);
        let area = u.cross(&v).norm();
        let (i1, i2) = (r1 * (1.0 / area), r2 * (1.0 / area));
        let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        let one = OpElement::identity();
        let op = (one * c + i1 * s) * (one * c - i2 * s);
        Self::from_operator(op, TransformKind::Rotation { u, v, theta })
    }

    /// Hyperbolic rotation by `theta` in the plane of the orthonormal pair
    /// `(u, v)`.
    pub fn hyperbolic_rotation(u: Vector3, v: Vector3, theta: f64) -> Result<Self> {
        check_orthonormal(&u, &v)?;
        if !theta.is_finite() {
            return Err(Error::NonFinite("hyperbolic rotation parameter"));
        }
        let (s1, s2) = hyperbolic_split(u, v);
        let scale = u.norm() * v.norm();
        let (h1, h2) = (s1 * (1.0 / scale), s2 * (1.0 / scale));
        let (c, s) = ((theta / 2.0).cosh(), (theta / 2.0).sinh());
        let one = OpElement::identity();
        let op = (one * c + h1 * s) * (one * c - h2 * s);
        Self::from_operator(op, TransformKind::HyperbolicRotation { u, v, theta })
    }

    /// Translation by `v`, `U = e^{𝐯/2} = 1 + 𝐯/2`.
    pub fn translation(v: Vector3) -> Result<Self> {
        check_finite(&v, "translation vector")?;
        let op = OpElement::identity() + OpElement::creation(v) * 0.5;
        Self::from_operator(op, TransformKind::Translation { v })
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Transform) -> Transform {
        let mut parts = Vec::new();
        for k in [&self.kind, &other.kind] {
            match k {
                TransformKind::Composed(inner) => parts.extend(inner.iter().cloned()),
                TransformKind::Identity => {}
                k => parts.push(k.clone()),
            }
        }
        Transform {
            u: self.u * other.u,
            epsilon: self.epsilon * other.epsilon,
            kind: TransformKind::Composed(parts),
        }
    }

    pub fn operator(&self) -> &OpElement {
        &self.u
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn kind(&self) -> &TransformKind {
        &self.kind
    }

    /// `W` with `U = e^W`, for the kinds built as exponentials.
    pub fn generator(&self) -> Option<OpElement> {
        match self.kind {
            TransformKind::Identity => Some(OpElement::ZERO),
            TransformKind::Scale { v, t } => Some(uv_commutator(v, v) * (t / 2.0)),
            TransformKind::Shear { u, v, t } => Some(uv_commutator(u, v) * (t / 2.0)),
            TransformKind::Rotation { u, v, theta } => {
                Some((uv_commutator(u, v) - uv_commutator(v, u)) * (theta / 2.0))
            }
            TransformKind::HyperbolicRotation { u, v, theta } => {
                Some((uv_commutator(u, v) + uv_commutator(v, u)) * (theta / 2.0))
            }
            TransformKind::Translation { v } => Some(OpElement::creation(v) * 0.5),
            TransformKind::Reflection { .. } | TransformKind::Composed(_) => None,
        }
    }

    /// Sandwich of a k-paravector, with the band and creation-only checks.
    pub fn apply_pv(&self, x: &KParavector) -> Result<KParavector> {
        let k = x.k();
        let right = if k % 2 == 1 {
            self.u.reversion()
        } else {
            self.u.conjugation()
        };
        let out = (self.u * OpElement::iota(x.data()) * right) * self.epsilon;
        if !out.is_creation_only() {
            return Err(Error::Internal(format!(
                "{} sandwich left annihilation terms of size {:e}",
                self.kind.tag(),
                out.annihilation_magnitude()
            )));
        }
        KParavector::new(out.vacuum(), k).map_err(|e| {
            Error::Internal(format!("{} sandwich left the {k}-paravector band: {e}", self.kind.tag()))
        })
    }

    /// Applies the transform to a point, line, plane or volume.
    pub fn apply<T: Paravector>(&self, x: &T) -> Result<T> {
        T::from_pv(self.apply_pv(x.pv())?)
    }
}

/// Orthonormal pair `(u, v)` spanning the plane of a bivector, oriented so
/// that `u ∧ v` is a positive multiple of `b`.
pub fn frame_from(b: &Multivector) -> Result<(Vector3, Vector3)> {
    let n = b.grade_part(2).hodge().vector_part();
    let len = n.norm();
    if len == 0.0 || !len.is_finite() {
        return Err(Error::InvalidArgument("bivector must be nonzero and finite".into()));
    }
    let n = n / len;
    // axis least aligned with the normal
    let axes = [Vector3::E1, Vector3::E2, Vector3::E3];
    let seed = axes
        .iter()
        .copied()
        .min_by(|a, b| a.dot(&n).abs().total_cmp(&b.dot(&n).abs()))
        .unwrap_or(Vector3::E1);
    let u = seed - n * seed.dot(&n);
    let u = u / u.norm();
    Ok((u, n.cross(&u)))
}

/// Gram–Schmidt on two vectors, keeping the direction of `a`.
pub fn orthonormalize(a: Vector3, b: Vector3) -> Result<(Vector3, Vector3)> {
    let la = a.norm();
    if la == 0.0 || la.is_nan() {
        return Err(Error::InvalidArgument("first frame vector must be nonzero".into()));
    }
    let u = a / la;
    let w = b - u * b.dot(&u);
    let lw = w.norm();
    if lw <= FRAME_TOL * (1.0 + b.norm()) {
        return Err(Error::InvalidArgument("frame vectors are parallel".into()));
    }
    Ok((u, w / lw))
}

/// Star–translate–star on a k-paravector: `⋆ 𝔗_v(⋆X)`.
pub fn cotranslate_pv(v: Vector3, x: &KParavector) -> Result<KParavector> {
    let t = Transform::translation(v)?;
    let dual = KParavector::new(x.data().hodge(), 4 - x.k())?;
    let moved = t.apply_pv(&dual)?;
    KParavector::new(moved.data().hodge(), x.k())
}

/// `X + A_k · v⃗` with `A_k` the top grade of the band (zero for `k = 0` and
/// `k = 4`).
pub fn cotranslate_closed_form(v: Vector3, x: &KParavector) -> Result<KParavector> {
    check_finite(&v, "cotranslation vector")?;
    if x.k() == 0 {
        return Ok(*x);
    }
    let shifted = *x.data() + x.upper().interior(&v.into());
    KParavector::new(shifted, x.k())
}

/// Cotranslation by `v`. A point gains weight `p⃗·v⃗`.
pub fn cotranslate<T: Paravector>(v: Vector3, x: &T) -> Result<T> {
    T::from_pv(cotranslate_pv(v, x.pv())?)
}

/// Which side of the eye a projected point was on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Same side as the projection plane.
    Front,
    Behind,
}

/// Eye point and plane `n⃗·x⃗ = c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerspectiveCamera {
    eye: Vector3,
    normal: Vector3,
    c: f64,
    a: f64,
}

/// Result of a perspective projection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerspectiveImage {
    /// `𝐏₀` as produced by the operator composition.
    pub raw: Point,
    /// `(c − n⃗·e⃗)/(n⃗·(p⃗−e⃗))`, positive in front of the eye.
    pub weight: f64,
    /// The projected location on the plane.
    pub location: Vector3,
    pub side: Side,
}

impl PerspectiveCamera {
    pub fn new(eye: Vector3, normal: Vector3, c: f64) -> Result<Self> {
        check_finite(&eye, "eye point")?;
        check_finite(&normal, "plane normal")?;
        if !c.is_finite() {
            return Err(Error::NonFinite("plane offset"));
        }
        check_unit(&normal, "normal")?;
        let ne = normal.dot(&eye);
        let a = c - ne;
        if a.abs() <= 1e-12 * (1.0 + c.abs() + ne.abs()) {
            return Err(Error::EyeOnPlane);
        }
        Ok(PerspectiveCamera { eye, normal, c, a })
    }

    pub fn eye(&self) -> Vector3 {
        self.eye
    }

    pub fn normal(&self) -> Vector3 {
        self.normal
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Signed distance parameter `a = c − n⃗·e⃗`.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// `𝐏₀ = (𝔗_e ∘ 𝔚_{n/a} ∘ 𝔗_{−e})(𝐏 − 𝐄)`.
    pub fn project(&self, p: &Point) -> Result<PerspectiveImage> {
        let (p, _) = p.normalize()?;
        let rel = p.vector_part() - self.eye;
        let depth = self.normal.dot(&rel);
        if depth.abs() <= 1e-12 * (1.0 + rel.norm()) {
            return Err(Error::PointAtInfinity);
        }
        let x = Point::vector(rel);
        let x = Transform::translation(-self.eye)?.apply(&x)?;
        let x = cotranslate(self.normal * (1.0 / self.a), &x)?;
        let raw = Transform::translation(self.eye)?.apply(&x)?;

        let w = depth / self.a;
        let expected = Point::from_raw(w, p.vector_part() + self.eye * (w - 1.0));
        let scale = 1.0 + w.abs() + p.vector_part().norm() + self.eye.norm() * (1.0 + w.abs());
        if raw.max_abs_diff(&expected) > CHECK_TOL * scale {
            return Err(Error::Internal(format!(
                "perspective composition gave {raw}, closed form {expected}"
            )));
        }
        let weight = self.a / depth;
        Ok(PerspectiveImage {
            raw,
            weight,
            location: raw.vector_part() / raw.scalar(),
            side: if weight > 0.0 { Side::Front } else { Side::Behind },
        })
    }
}

/// Free-function form of [`PerspectiveCamera::project`].
pub fn perspective_project(cam: &PerspectiveCamera, p: &Point) -> Result<PerspectiveImage> {
    cam.project(p)
}

/// `𝔚_n`: cotranslation by a unit `n`. Sends the eye `1 − 𝐧` to `−𝐧`.
pub fn pseudo_perspective(n: Vector3, x: &Point) -> Result<Point> {
    check_finite(&n, "pseudo-perspective direction")?;
    check_unit(&n, "n")?;
    cotranslate(n, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;
    use crate::paravector::{line_through, plane_through};

    fn v(x: f64, y: f64, z: f64) -> Vector3 {
        Vector3::new(x, y, z)
    }

    fn pt(x: f64, y: f64, z: f64) -> Point {
        Point::at(v(x, y, z))
    }

    fn assert_point(p: &Point, w: f64, x: Vector3) {
        assert!((p.scalar() - w).abs() < 1e-12, "weight {} vs {w}", p.scalar());
        assert!(p.vector_part().max_abs_diff(&x) < 1e-12, "{p} vs {x:?}");
    }

    #[test]
    fn reflection_examples() {
        let t = Transform::reflection(Vector3::E3).unwrap();
        assert_eq!(t.epsilon(), -1.0);
        assert_point(&t.apply(&pt(1.0, 2.0, 3.0)).unwrap(), 1.0, v(1.0, 2.0, -3.0));
        let t = Transform::reflection(Vector3::E1).unwrap();
        assert_point(&t.apply(&pt(1.0, 0.0, 0.0)).unwrap(), 1.0, v(-1.0, 0.0, 0.0));
        assert_eq!(Transform::reflection(Vector3::E2).unwrap().epsilon(), -1.0);
        assert!(Transform::reflection(v(0.0, 0.0, 2.0)).is_err());
    }

    #[test]
    fn scale_examples() {
        let t = Transform::scale(Vector3::E1, 2f64.ln()).unwrap();
        assert_point(&t.apply(&pt(1.0, 1.0, 0.0)).unwrap(), 1.0, v(2.0, 1.0, 0.0));
        let t = Transform::scale(v(2.0, 0.0, 0.0), 2f64.ln() / 4.0).unwrap();
        assert_point(&t.apply(&pt(3.0, 1.0, 0.0)).unwrap(), 1.0, v(6.0, 1.0, 0.0));
        let t = Transform::scale(Vector3::E2, 0.0).unwrap();
        assert_point(&t.apply(&pt(3.0, 1.0, 7.0)).unwrap(), 1.0, v(3.0, 1.0, 7.0));
        assert!(Transform::scale(Vector3::ZERO, 1.0).is_err());
    }

    #[test]
    fn shear_examples() {
        let t = Transform::shear(Vector3::E1, Vector3::E2, 3.0).unwrap();
        assert_point(&t.apply(&pt(0.0, 2.0, 5.0)).unwrap(), 1.0, v(6.0, 2.0, 5.0));
        assert_point(&t.apply(&pt(4.0, 0.0, 5.0)).unwrap(), 1.0, v(4.0, 0.0, 5.0));
        assert!(Transform::shear(Vector3::E1, v(1.0, 1.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn rotation_examples() {
        let t = Transform::rotation(Vector3::E1, Vector3::E2, PI / 2.0).unwrap();
        assert_point(&t.apply(&pt(0.0, 1.0, 0.0)).unwrap(), 1.0, v(1.0, 0.0, 0.0));
        assert_point(&t.apply(&pt(1.0, 0.0, 0.0)).unwrap(), 1.0, v(0.0, -1.0, 0.0));
        let t = Transform::rotation(Vector3::E1, Vector3::E2, 0.0).unwrap();
        assert_point(&t.apply(&pt(1.0, 2.0, 3.0)).unwrap(), 1.0, v(1.0, 2.0, 3.0));
        let t = Transform::rotation(Vector3::E1, Vector3::E2, PI).unwrap();
        assert_point(&t.apply(&pt(1.0, 0.0, 0.0)).unwrap(), 1.0, v(-1.0, 0.0, 0.0));
        assert!(Transform::rotation(Vector3::E1, v(0.0, 2.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn hyperbolic_examples() {
        let th = 0.7;
        let t = Transform::hyperbolic_rotation(Vector3::E1, Vector3::E2, th).unwrap();
        assert_point(&t.apply(&pt(1.0, 0.0, 0.0)).unwrap(), 1.0, v(th.cosh(), th.sinh(), 0.0));
        let t = Transform::hyperbolic_rotation(Vector3::E1, Vector3::E2, 0.0).unwrap();
        assert_point(&t.apply(&pt(1.0, 2.0, 3.0)).unwrap(), 1.0, v(1.0, 2.0, 3.0));
    }

    #[test]
    fn translation_examples() {
        let t = Transform::translation(Vector3::E1).unwrap();
        assert_point(&t.apply(&pt(0.0, 0.0, 0.0)).unwrap(), 1.0, v(1.0, 0.0, 0.0));
        let bare = Point::vector(Vector3::E2);
        assert_point(&t.apply(&bare).unwrap(), 0.0, Vector3::E2);
        let p = v(1.0, 2.0, 3.0);
        let half = Transform::translation(p).unwrap();
        let sq = *half.operator() * *half.operator();
        assert_eq!(sq.vacuum(), *Point::at(p).data());
    }

    #[test]
    fn line_and_plane_sandwiches() {
        let axis = line_through(&pt(0.0, 0.0, 0.0), &pt(1.0, 0.0, 0.0)).unwrap();
        let moved = Transform::translation(Vector3::E3).unwrap().apply(&axis).unwrap();
        assert!(moved.direction().max_abs_diff(&Vector3::E1) < 1e-15);
        let e31 = Multivector::basis(3).wedge(&Multivector::basis(1));
        assert!(moved.moment().max_abs_diff(&e31) < 1e-15);

        let z1 = plane_through(&pt(0.0, 0.0, 1.0), &pt(1.0, 0.0, 1.0), &pt(0.0, 1.0, 1.0)).unwrap();
        let r = Transform::reflection(Vector3::E3).unwrap();
        let image = r.apply(&z1).unwrap();
        let direct = plane_through(&pt(0.0, 0.0, -1.0), &pt(1.0, 0.0, -1.0), &pt(0.0, 1.0, -1.0)).unwrap();
        assert!(image.max_abs_diff(&direct) < 1e-12, "{image} vs {direct}");

        let t = Transform::rotation(Vector3::E1, Vector3::E2, PI).unwrap();
        assert_point(&t.apply(&pt(1.0, 0.0, 0.0)).unwrap(), 1.0, v(-1.0, 0.0, 0.0));
    }

    #[test]
    fn cotranslation_examples() {
        let p = cotranslate(v(2.0, 0.0, 0.0), &pt(1.0, 0.0, 0.0)).unwrap();
        assert_point(&p, 3.0, Vector3::E1);
        let bare = cotranslate(v(1.0, 1.0, 0.0), &Point::vector(v(1.0, 2.0, 0.0))).unwrap();
        assert_point(&bare, 3.0, v(1.0, 2.0, 0.0));
        let e1 = Multivector::basis(1);
        let e12 = e1.wedge(&Multivector::basis(2));
        let x = KParavector::new(e1 + e12, 2).unwrap();
        let star = cotranslate_pv(Vector3::E2, &x).unwrap();
        let closed = cotranslate_closed_form(Vector3::E2, &x).unwrap();
        assert_eq!(*closed.data(), e1 * 2.0 + e12);
        assert!(star.max_abs_diff(&closed) < 1e-15);
    }

    #[test]
    fn compose_examples() {
        let a = Transform::translation(Vector3::E1).unwrap();
        let b = Transform::translation(Vector3::E2).unwrap();
        let ab = a.compose(&b);
        let p = pt(0.5, -1.0, 2.0);
        assert_point(&ab.apply(&p).unwrap(), 1.0, v(1.5, 0.0, 2.0));
        let r = Transform::reflection(Vector3::E1).unwrap();
        let rr = r.compose(&r);
        assert_eq!(rr.epsilon(), 1.0);
        assert_point(&rr.apply(&p).unwrap(), 1.0, p.vector_part());
    }

    #[test]
    fn perspective_examples() {
        let cam = PerspectiveCamera::new(Vector3::ZERO, Vector3::E3, 1.0).unwrap();
        let img = cam.project(&pt(2.0, 2.0, 4.0)).unwrap();
        assert!((img.weight - 0.25).abs() < 1e-15);
        assert!(img.location.max_abs_diff(&v(0.5, 0.5, 1.0)) < 1e-15);
        assert_eq!(img.side, Side::Front);
        let on = cam.project(&pt(3.0, -1.0, 1.0)).unwrap();
        assert_eq!(on.weight, 1.0);
        assert!(on.location.max_abs_diff(&v(3.0, -1.0, 1.0)) < 1e-15);
        let behind = cam.project(&pt(0.0, 0.0, -1.0)).unwrap();
        assert_eq!(behind.weight, -1.0);
        assert_eq!(behind.side, Side::Behind);
        assert!(behind.location.max_abs_diff(&v(0.0, 0.0, 1.0)) < 1e-15);
        assert_eq!(cam.project(&pt(1.0, 1.0, 0.0)), Err(Error::PointAtInfinity));
        assert_eq!(
            PerspectiveCamera::new(v(0.0, 0.0, 1.0), Vector3::E3, 1.0),
            Err(Error::EyeOnPlane)
        );
    }

    #[test]
    fn pseudo_examples() {
        let eye = Point::from_raw(1.0, -Vector3::E3);
        let img = pseudo_perspective(Vector3::E3, &eye).unwrap();
        assert_eq!(*img.data(), -Multivector::basis(3));
        let f1 = pt(1.0, 0.0, 0.0);
        assert_point(&pseudo_perspective(Vector3::E3, &f1).unwrap(), 1.0, Vector3::E1);
        let f2 = pt(2.0, 0.0, 1.0);
        assert_point(&pseudo_perspective(Vector3::E3, &f2).unwrap(), 2.0, v(2.0, 0.0, 1.0));
    }

    #[test]
    fn frames() {
        let b = Multivector::basis(1).wedge(&Multivector::basis(2)) * 3.0;
        let (u, w) = frame_from(&b).unwrap();
        assert!((u.dot(&w)).abs() < 1e-15);
        assert!(u.cross(&w).max_abs_diff(&Vector3::E3) < 1e-15);
        let (a, c) = orthonormalize(v(2.0, 0.0, 0.0), v(1.0, 1.0, 0.0)).unwrap();
        assert_eq!((a, c), (Vector3::E1, Vector3::E2));
        assert!(orthonormalize(Vector3::E1, v(2.0, 0.0, 0.0)).is_err());
    }
}
