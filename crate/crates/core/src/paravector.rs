//! k-paravectors and the geometric objects they represent.
//!
//! A k-paravector lives on grades `k-1` and `k`. Points are paravectors
//! (`k = 1`), line segments biparavectors, plane fragments triparavectors and
//! signed volumes quadriparavectors (trivector only).
//!
//! Constructors follow the `P ⋏ Q†` convention throughout: a line is
//! `P ⋏ Q†`, a plane `P ⋏ Q† ⋏ R`, a volume `P ⋏ Q† ⋏ R ⋏ S†`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exterior::{grade_of, Multivector, Vector3, BLADES};

/// Relative tolerance of the incidence and degeneracy tests.
pub const INCIDENCE_TOL: f64 = 1e-9;

// residual ≤ tol·(1 + scale), the shared zero test
fn negligible(residual: f64, scale: f64) -> bool {
    residual <= INCIDENCE_TOL * (1.0 + scale)
}

fn band_contains(k: usize, grade: usize) -> bool {
    grade <= 3 && (grade == k || grade + 1 == k)
}

/// A multivector supported on grades `{k-1, k}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KParavector {
    data: Multivector,
    k: usize,
}

impl KParavector {
    /// Wraps `data` as a `k`-paravector.
    ///
    /// Coefficients outside the band must be negligible relative to the
    /// norm of `data`; they are dropped.
    pub fn new(data: Multivector, k: usize) -> Result<Self> {
        if k > 4 {
            return Err(Error::BandOutOfRange(k));
        }
        if !data.is_finite() {
            return Err(Error::NonFinite("paravector data"));
        }
        let projected = Self::project(&data, k);
        let residual = (data - projected).norm();
        if !negligible(residual, data.norm()) {
            return Err(Error::OffBand { k, residual });
        }
        Ok(KParavector { data: projected, k })
    }

    pub(crate) fn project(data: &Multivector, k: usize) -> Multivector {
        let mut c = [0.0; BLADES];
        for (s, slot) in c.iter_mut().enumerate() {
            if band_contains(k, grade_of(s)) {
                *slot = data[s];
            }
        }
        Multivector::from_raw(c)
    }

    pub(crate) fn from_parts_unchecked(data: Multivector, k: usize) -> Self {
        KParavector { data: Self::project(&data, k), k }
    }

    pub fn data(&self) -> &Multivector {
        &self.data
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `⟨A⟩_{k-1}`, zero for `k = 0`.
    pub fn lower(&self) -> Multivector {
        if self.k == 0 {
            Multivector::ZERO
        } else {
            self.data.grade_part(self.k - 1)
        }
    }

    /// `⟨A⟩_k`, zero for `k = 4`.
    pub fn upper(&self) -> Multivector {
        if self.k > 3 {
            Multivector::ZERO
        } else {
            self.data.grade_part(self.k)
        }
    }

    /// The ⋏ product, `⟨A ∧ B⟩_{k+l}`.
    pub fn product(&self, other: &KParavector) -> Result<KParavector> {
        let k = self.k + other.k;
        if k > 4 {
            return Err(Error::GradeOverflow { k: self.k, l: other.k });
        }
        Ok(Self::from_parts_unchecked(self.data.wedge(&other.data), k))
    }

    /// Orientation flip. On points this is `-P̄`; on higher bands it negates,
    /// so that `(P ⋏ Q†)† = Q ⋏ P†`.
    pub fn dagger(&self) -> KParavector {
        let data = if self.k == 1 {
            -self.data.conjugation()
        } else {
            -self.data
        };
        KParavector { data, k: self.k }
    }

    pub fn norm(&self) -> f64 {
        self.data.norm()
    }

    pub fn max_abs_diff(&self, other: &KParavector) -> f64 {
        self.data.max_abs_diff(&other.data)
    }
}

impl fmt::Display for KParavector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.data)
    }
}

/// Free-function form of the ⋏ product.
pub fn pv_product(a: &KParavector, b: &KParavector) -> Result<KParavector> {
    a.product(b)
}

/// Free-function form of [`KParavector::dagger`].
pub fn dagger(a: &KParavector) -> KParavector {
    a.dagger()
}

/// Sign of a point's scalar part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Positive => 1.0,
            Orientation::Negative => -1.0,
        }
    }
}

/// Common access to the paravector behind each geometric type.
pub trait Paravector: Sized {
    /// The band this type lives on.
    const BAND: usize;

    fn pv(&self) -> &KParavector;

    /// Rewraps a paravector of band [`Self::BAND`].
    fn from_pv(pv: KParavector) -> Result<Self>;

    fn data(&self) -> &Multivector {
        self.pv().data()
    }
}

macro_rules! geometric_type {
    ($(#[$m:meta])* $name:ident, $band:expr) => {
        $(#[$m])*
        #[derive(Debug, Clone, Copy, PartialEq)]
        pub struct $name(KParavector);

        impl Paravector for $name {
            const BAND: usize = $band;

            fn pv(&self) -> &KParavector {
                &self.0
            }

            fn from_pv(pv: KParavector) -> Result<Self> {
                if pv.k() != $band {
                    return Err(Error::InvalidArgument(format!(
                        "expected a {}-paravector, got k = {}",
                        $band,
                        pv.k()
                    )));
                }
                Ok($name(pv))
            }
        }

        impl $name {
            /// Wraps a multivector, checking the band.
            pub fn from_multivector(data: Multivector) -> Result<Self> {
                KParavector::new(data, $band).map($name)
            }

            pub fn dagger(&self) -> Self {
                $name(self.0.dagger())
            }

            pub fn max_abs_diff(&self, other: &Self) -> f64 {
                self.0.max_abs_diff(&other.0)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(KParavector { data: -self.0.data, k: $band })
            }
        }

        impl Mul<f64> for $name {
            type Output = $name;
            fn mul(self, s: f64) -> $name {
                $name(KParavector { data: self.0.data * s, k: $band })
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, o: $name) -> $name {
                $name(KParavector { data: self.0.data + o.0.data, k: $band })
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, o: $name) -> $name {
                $name(KParavector { data: self.0.data - o.0.data, k: $band })
            }
        }
    };
}

geometric_type!(
    /// A weighted, oriented point `x₀ + x⃗`.
    Point,
    1
);
geometric_type!(
    /// A line segment `l⃗ + M`: direction plus moment bivector.
    LineSegment,
    2
);
geometric_type!(
    /// A plane fragment: bivector direction plus trivector moment.
    PlaneFragment,
    3
);
geometric_type!(
    /// A signed volume, six times the tetrahedron volume.
    VolumeElement,
    4
);

/// Weight, orientation and location of a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointParts {
    pub weight: f64,
    pub orientation: Orientation,
    pub location: Vector3,
}

impl Point {
    /// The point `w + |w|·p⃗`: located at `p⃗`, with weight `|w|` and the
    /// orientation of `w`.
    pub fn new(p: Vector3, weight: f64) -> Self {
        Point(KParavector {
            data: Multivector::scalar(weight) + (p * weight.abs()).into(),
            k: 1,
        })
    }

    /// `1 + p⃗`.
    pub fn at(p: Vector3) -> Self {
        Self::new(p, 1.0)
    }

    /// A bare vector, the zero-weight paravector `p⃗`.
    pub fn vector(p: Vector3) -> Self {
        Point(KParavector { data: p.into(), k: 1 })
    }

    /// Builds `x₀ + x⃗` from raw coefficients.
    pub fn from_raw(x0: f64, x: Vector3) -> Self {
        Point(KParavector {
            data: Multivector::scalar(x0) + x.into(),
            k: 1,
        })
    }

    /// The scalar part `x₀`.
    pub fn scalar(&self) -> f64 {
        self.0.data.scalar_part()
    }

    /// The vector part `x⃗`.
    pub fn vector_part(&self) -> Vector3 {
        self.0.data.vector_part()
    }

    pub fn weight(&self) -> f64 {
        self.scalar().abs()
    }

    pub fn orientation(&self) -> Orientation {
        if self.scalar() < 0.0 {
            Orientation::Negative
        } else {
            Orientation::Positive
        }
    }

    /// `x⃗/|x₀|`.
    pub fn location(&self) -> Result<Vector3> {
        let w = self.weight();
        if w == 0.0 {
            return Err(Error::UndefinedLocation);
        }
        Ok(self.vector_part() / w)
    }

    pub fn parts(&self) -> Result<PointParts> {
        Ok(PointParts {
            weight: self.weight(),
            orientation: self.orientation(),
            location: self.location()?,
        })
    }

    /// `1 + p⃗` at the same location, plus the orientation the input had.
    /// `P` and `P†` normalize to the same point.
    pub fn normalize(&self) -> Result<(Point, Orientation)> {
        Ok((Point::at(self.location()?), self.orientation()))
    }

    fn normalized(&self) -> Result<Point> {
        self.normalize().map(|(p, _)| p)
    }
}

/// `make_point(p, w)`: scalar part `w`, vector part `|w|·p⃗`.
pub fn make_point(p: Vector3, weight: f64) -> Point {
    Point::new(p, weight)
}

/// `(weight, orientation, location)` of a point.
pub fn point_parts(p: &Point) -> Result<PointParts> {
    p.parts()
}

/// Direction, moment and support of a line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineParts {
    pub direction: Vector3,
    pub moment: Multivector,
    pub support: Vector3,
}

impl LineSegment {
    pub fn direction(&self) -> Vector3 {
        self.0.data.vector_part()
    }

    pub fn moment(&self) -> Multivector {
        self.0.data.grade_part(2)
    }

    /// Closest point to the origin, `M·l⃗ / |l⃗|²`.
    pub fn support(&self) -> Result<Vector3> {
        let l = self.direction();
        let l2 = l.norm_squared();
        if l2 == 0.0 {
            return Err(Error::DegenerateLine);
        }
        Ok(self.moment().interior(&l.into()).vector_part() / l2)
    }

    pub fn parts(&self) -> Result<LineParts> {
        Ok(LineParts {
            direction: self.direction(),
            moment: self.moment(),
            support: self.support()?,
        })
    }

    /// Plücker pair `(l⃗, m⃗)` with `m⃗ = ⋆M`.
    pub fn plucker(&self) -> (Vector3, Vector3) {
        (self.direction(), self.moment().hodge().vector_part())
    }

    fn is_degenerate(&self) -> bool {
        self.direction().norm() <= INCIDENCE_TOL
    }
}

/// `P ⋏ Q† = q⃗ − p⃗ + p⃗∧q⃗` for the unit-weight versions of `P` and `Q`.
pub fn line_through(p: &Point, q: &Point) -> Result<LineSegment> {
    let p = p.normalized()?;
    let q = q.normalized()?;
    let dir = q.vector_part() - p.vector_part();
    let scale = p.vector_part().norm().max(q.vector_part().norm());
    if negligible(dir.norm(), scale) {
        return Err(Error::DegenerateLine);
    }
    let pv = p.0.product(&q.0.dagger())?;
    Ok(LineSegment(pv))
}

pub fn line_parts(l: &LineSegment) -> Result<LineParts> {
    l.parts()
}

/// Plücker coordinates `(l⃗, m⃗)` of a line.
pub fn plucker(l: &LineSegment) -> (Vector3, Vector3) {
    l.plucker()
}

/// Bivector, trivector and support of a plane fragment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneParts {
    pub bivector: Multivector,
    pub trivector: Multivector,
    pub support: Vector3,
}

impl PlaneFragment {
    pub fn bivector(&self) -> Multivector {
        self.0.data.grade_part(2)
    }

    pub fn trivector(&self) -> Multivector {
        self.0.data.grade_part(3)
    }

    /// Closest point to the origin, `B̃·T / |B|²`.
    pub fn support(&self) -> Result<Vector3> {
        let b = self.bivector();
        let b2 = b.scalar_product(&b);
        if b2 == 0.0 {
            return Err(Error::DegeneratePlane);
        }
        Ok(b.reversion().interior(&self.trivector()).vector_part() / b2)
    }

    pub fn parts(&self) -> Result<PlaneParts> {
        Ok(PlaneParts {
            bivector: self.bivector(),
            trivector: self.trivector(),
            support: self.support()?,
        })
    }

    /// `(n⃗, c)` with `⋆n⃗ = ⟨𝒫⟩₂` and `⟨𝒫⟩₃ = c Ω`; the plane is `n⃗·x⃗ = c`.
    pub fn dual(&self) -> (Vector3, f64) {
        (self.bivector().hodge().vector_part(), self.0.data.trivector_part())
    }
}

/// `P ⋏ Q† ⋏ R` for the unit-weight versions of the three points.
pub fn plane_through(p: &Point, q: &Point, r: &Point) -> Result<PlaneFragment> {
    let p = p.normalized()?;
    let q = q.normalized()?;
    let r = r.normalized()?;
    let a = q.vector_part() - p.vector_part();
    let b = r.vector_part() - p.vector_part();
    if a.cross(&b).norm() <= INCIDENCE_TOL * (1.0 + a.norm() * b.norm()) {
        return Err(Error::DegeneratePlane);
    }
    let pv = p.0.product(&q.0.dagger())?.product(&r.0)?;
    Ok(PlaneFragment(pv))
}

pub fn plane_parts(p: &PlaneFragment) -> Result<PlaneParts> {
    p.parts()
}

pub fn plane_dual(p: &PlaneFragment) -> (Vector3, f64) {
    p.dual()
}

impl VolumeElement {
    /// The `Ω` coefficient.
    pub fn volume(&self) -> f64 {
        self.0.data.trivector_part()
    }
}

fn unit_or_raw(x: &Point) -> Point {
    x.normalized().unwrap_or(*x)
}

/// `L ⋏ X = 0` within the relative tolerance. `X` is normalized first when
/// it has nonzero weight.
pub fn on_line(l: &LineSegment, x: &Point) -> bool {
    let x = unit_or_raw(x);
    let residual = l.0.data.wedge(&x.0.data);
    let r = KParavector::project(&residual, 3).norm();
    negligible(r, l.0.norm() * x.0.norm())
}

/// `𝒫 ⋏ X† = 0` within the relative tolerance.
pub fn on_plane(plane: &PlaneFragment, x: &Point) -> bool {
    let x = unit_or_raw(x);
    let residual = plane.0.data.wedge(&x.dagger().0.data);
    let r = KParavector::project(&residual, 4).norm();
    negligible(r, plane.0.norm() * x.0.norm())
}

/// How two lines sit relative to each other.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LineRelation {
    /// Not coplanar; `volume` is the `Ω` coefficient of `L ⋏ M`.
    Skew { volume: f64 },
    Parallel,
    Coincident,
    Intersecting { perpendicular: bool },
}

impl fmt::Display for LineRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineRelation::Skew { volume } => write!(f, "skew, volume={volume}"),
            LineRelation::Parallel => write!(f, "parallel"),
            LineRelation::Coincident => write!(f, "coincident"),
            LineRelation::Intersecting { perpendicular: true } => {
                write!(f, "intersecting, perpendicular")
            }
            LineRelation::Intersecting { perpendicular: false } => write!(f, "intersecting"),
        }
    }
}

// zero test for a wedge of two vectors; an exact tie counts as nonzero
fn wedge_vanishes(a: &Vector3, b: &Vector3) -> bool {
    a.cross(b).norm() < INCIDENCE_TOL * (1.0 + a.norm() * b.norm())
}

/// Classifies a pair of lines.
///
/// Coplanarity is decided by `L ⋏ M`. Coplanar pairs are split using anchor
/// points `P = d⃗`, `Q = d⃗ + l⃗` on each line and the wedges
/// `PQ∧RS`, `PR∧PQ`, `PR∧RS`.
pub fn classify_lines(l: &LineSegment, m: &LineSegment) -> Result<LineRelation> {
    if l.is_degenerate() || m.is_degenerate() {
        return Err(Error::DegenerateLine);
    }
    let v = l.0.product(&m.0)?;
    let volume = v.data().trivector_part();
    if volume.abs() >= INCIDENCE_TOL * (1.0 + l.0.norm() * m.0.norm()) {
        return Ok(LineRelation::Skew { volume });
    }
    let pq = l.direction();
    let rs = m.direction();
    let pr = m.support()? - l.support()?;
    if !wedge_vanishes(&pq, &rs) {
        let perpendicular = pq.dot(&rs).abs() < INCIDENCE_TOL * (1.0 + pq.norm() * rs.norm());
        return Ok(LineRelation::Intersecting { perpendicular });
    }
    if wedge_vanishes(&pr, &pq) && wedge_vanishes(&pr, &rs) {
        Ok(LineRelation::Coincident)
    } else {
        Ok(LineRelation::Parallel)
    }
}

/// `P ⋏ Q† ⋏ R ⋏ S†`, the signed volume of the parallelepiped on the edges
/// `PQ`, `QR`, `RS` (six times the tetrahedron volume).
pub fn tetra_volume(p: &Point, q: &Point, r: &Point, s: &Point) -> Result<f64> {
    let p = p.normalized()?;
    let q = q.normalized()?;
    let r = r.normalized()?;
    let s = s.normalized()?;
    let v = p
        .0
        .product(&q.0.dagger())?
        .product(&r.0)?
        .product(&s.0.dagger())?;
    Ok(v.data().trivector_part())
}

/// `P ⋏ Q† ⋏ R ⋏ S†` as a volume element.
pub fn volume_through(p: &Point, q: &Point, r: &Point, s: &Point) -> Result<VolumeElement> {
    let v = tetra_volume(p, q, r, s)?;
    Ok(VolumeElement(KParavector {
        data: Multivector::omega() * v,
        k: 4,
    }))
}
