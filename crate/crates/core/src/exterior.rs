//! Exterior algebra of three-dimensional Euclidean space.
//!
//! A [`Multivector`] stores one coefficient per basis blade. Blades are
//! addressed by a bitmask: bit `i` set means `e_{i+1}` is a factor, and the
//! stored coefficient always refers to the ascending-index ordering of the
//! factors, so index `0b011` is `e1∧e2` and `0b111` is `Ω = e1∧e2∧e3`.
//!
//! The basis is orthonormal. The interior product follows the recursive
//! definition (vector on a blade, then `(v∧u)·A = v·(u·A)`, then the sign
//! flip `A_k·B_j = (-1)^{j(k-1)} B_j·A_k` for `k > j ≥ 1`) and is tabulated
//! once per blade pair.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Number of basis blades of the exterior algebra over R³.
pub const BLADES: usize = 8;

/// Bitmask of the pseudoscalar blade `e1∧e2∧e3`.
pub const OMEGA: usize = 0b111;

/// Grade of the blade with the given bitmask.
#[inline]
pub fn grade_of(blade: usize) -> usize {
    blade.count_ones() as usize
}

/// Sign of `e_a ∧ e_b` relative to the ascending blade `e_{a|b}`, or `0.0`
/// when the factors share an index.
pub fn wedge_sign(a: usize, b: usize) -> f64 {
    if a & b != 0 {
        return 0.0;
    }
    // count inversions: pairs (i in a, j in b) with i > j
    let mut swaps = 0;
    for i in 0..3 {
        if a & (1 << i) != 0 {
            swaps += (b & ((1 << i) - 1)).count_ones();
        }
    }
    if swaps % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// One of the three grade-wise involutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Involution {
    /// `(-1)^k` on grade `k` (hat).
    GradeInvolution,
    /// `(-1)^{k(k-1)/2}` on grade `k` (tilde).
    Reversion,
    /// `(-1)^{k(k+1)/2}` on grade `k` (bar).
    Conjugation,
}

impl Involution {
    /// Sign applied to a homogeneous element of the given grade.
    pub fn sign(self, grade: usize) -> f64 {
        let k = grade;
        let exponent = match self {
            Involution::GradeInvolution => k,
            Involution::Reversion => k * k.saturating_sub(1) / 2,
            Involution::Conjugation => k * (k + 1) / 2,
        };
        if exponent % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

// Interior product of two basis blades as (sign, blade); sign 0 means zero.
fn blade_interior(a: usize, b: usize) -> (f64, usize) {
    let k = grade_of(a);
    let j = grade_of(b);
    if k == 0 {
        return (1.0, b);
    }
    if j == 0 {
        // v·1 = 0, extended to every k ≥ 1
        return (0.0, 0);
    }
    if k > j {
        let (s, r) = blade_interior(b, a);
        let flip = if (j * (k - 1)).is_multiple_of(2) { 1.0 } else { -1.0 };
        return (flip * s, r);
    }
    if k == 1 {
        if a & b == 0 {
            return (0.0, 0);
        }
        // position of the contracted factor in the ascending blade
        let pos = (b & (a - 1)).count_ones();
        let s = if pos.is_multiple_of(2) { 1.0 } else { -1.0 };
        return (s, b & !a);
    }
    // (v ∧ U)·B = v·(U·B) with v the lowest factor of a
    let v = a & a.wrapping_neg();
    let rest = a & !v;
    let (s1, inner) = blade_interior(rest, b);
    if s1 == 0.0 {
        return (0.0, 0);
    }
    let (s2, out) = blade_interior(v, inner);
    (s1 * s2, out)
}

fn interior_table() -> &'static [[(f64, usize); BLADES]; BLADES] {
    static TABLE: OnceLock<[[(f64, usize); BLADES]; BLADES]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[(0.0, 0); BLADES]; BLADES];
        for (a, row) in t.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = blade_interior(a, b);
            }
        }
        t
    })
}

/// Element of ⋀(R³) stored as eight blade coefficients.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Multivector {
    coeffs: [f64; BLADES],
}

impl Multivector {
    pub const ZERO: Multivector = Multivector { coeffs: [0.0; BLADES] };

    /// Builds a multivector from blade coefficients, rejecting NaN and infinities.
    pub fn from_coeffs(coeffs: [f64; BLADES]) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_finite()) {
            Ok(Multivector { coeffs })
        } else {
            Err(Error::NonFinite("multivector coefficients"))
        }
    }

    pub(crate) const fn from_raw(coeffs: [f64; BLADES]) -> Self {
        Multivector { coeffs }
    }

    pub fn scalar(s: f64) -> Self {
        Self::blade(0, s)
    }

    /// `coeff · e_S` for the blade bitmask `S`.
    pub fn blade(mask: usize, coeff: f64) -> Self {
        let mut m = Self::ZERO;
        m.coeffs[mask & OMEGA] = coeff;
        m
    }

    /// Basis vector `e_i` for `i` in `1..=3`.
    pub fn basis(i: usize) -> Self {
        assert!((1..=3).contains(&i), "basis index {i} outside 1..=3");
        Self::blade(1 << (i - 1), 1.0)
    }

    /// The pseudoscalar `Ω = e1∧e2∧e3`.
    pub fn omega() -> Self {
        Self::blade(OMEGA, 1.0)
    }

    pub fn coeffs(&self) -> &[f64; BLADES] {
        &self.coeffs
    }

    pub fn get(&self, mask: usize) -> f64 {
        self.coeffs[mask]
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Grade-1 part as a vector.
    pub fn vector_part(&self) -> Vector3 {
        Vector3::new(self.coeffs[0b001], self.coeffs[0b010], self.coeffs[0b100])
    }

    /// Coefficient of `Ω`.
    pub fn trivector_part(&self) -> f64 {
        self.coeffs[OMEGA]
    }

    /// `⟨A⟩_k`.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > 3 {
            return Err(Error::GradeOutOfRange(k));
        }
        Ok(self.grade_part(k))
    }

    pub(crate) fn grade_part(&self, k: usize) -> Self {
        let mut out = Self::ZERO;
        for (s, c) in self.coeffs.iter().enumerate() {
            if grade_of(s) == k {
                out.coeffs[s] = *c;
            }
        }
        out
    }

    /// Largest absolute coefficient among blades of grade `k`.
    pub fn grade_magnitude(&self, k: usize) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(s, _)| grade_of(*s) == k)
            .fold(0.0, |m, (_, c)| m.max(c.abs()))
    }

    /// Exterior product.
    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::ZERO;
        for (a, ca) in self.coeffs.iter().enumerate() {
            if *ca == 0.0 {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                let s = wedge_sign(a, b);
                if s != 0.0 {
                    out.coeffs[a | b] += s * ca * cb;
                }
            }
        }
        out
    }

    /// Interior product `A · B`.
    pub fn interior(&self, other: &Self) -> Self {
        let table = interior_table();
        let mut out = Self::ZERO;
        for (a, ca) in self.coeffs.iter().enumerate() {
            if *ca == 0.0 {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                let (s, r) = table[a][b];
                if s != 0.0 {
                    out.coeffs[r] += s * ca * cb;
                }
            }
        }
        out
    }

    pub fn involution(&self, kind: Involution) -> Self {
        let mut out = *self;
        for (s, c) in out.coeffs.iter_mut().enumerate() {
            *c *= kind.sign(grade_of(s));
        }
        out
    }

    pub fn grade_involution(&self) -> Self {
        self.involution(Involution::GradeInvolution)
    }

    pub fn reversion(&self) -> Self {
        self.involution(Involution::Reversion)
    }

    pub fn conjugation(&self) -> Self {
        self.involution(Involution::Conjugation)
    }

    /// Scalar product `(A|B)`: zero across grades, `Ã_k · B_k` within a grade.
    pub fn scalar_product(&self, other: &Self) -> f64 {
        let mut sum = self.coeffs[0] * other.coeffs[0];
        for k in 1..=3 {
            let a = self.grade_part(k).reversion();
            sum += a.interior(&other.grade_part(k)).scalar_part();
        }
        sum
    }

    /// Hodge dual, `⋆A_k = Ã_k · Ω`.
    pub fn hodge(&self) -> Self {
        self.reversion().interior(&Self::omega())
    }

    /// Euclidean norm `sqrt((A|A))`.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }
}

impl Index<usize> for Multivector {
    type Output = f64;
    fn index(&self, mask: usize) -> &f64 {
        &self.coeffs[mask]
    }
}

impl Add for Multivector {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for Multivector {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl SubAssign for Multivector {
    fn sub_assign(&mut self, rhs: Self) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for Multivector {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.coeffs.iter_mut() {
            *c = -*c;
        }
        self
    }
}

impl Mul<f64> for Multivector {
    type Output = Self;
    fn mul(mut self, rhs: f64) -> Self {
        for c in self.coeffs.iter_mut() {
            *c *= rhs;
        }
        self
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs * self
    }
}

impl Div<f64> for Multivector {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        self * (1.0 / rhs)
    }
}

impl From<f64> for Multivector {
    fn from(s: f64) -> Self {
        Multivector::scalar(s)
    }
}

impl From<Vector3> for Multivector {
    fn from(v: Vector3) -> Self {
        Multivector::from_raw([0.0, v.x, v.y, 0.0, v.z, 0.0, 0.0, 0.0])
    }
}

const BLADE_NAMES: [&str; BLADES] = ["", "e1", "e2", "e12", "e3", "e13", "e23", "e123"];

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector({self})")
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, c) in self.coeffs.iter().enumerate() {
            if *c == 0.0 {
                continue;
            }
            if first {
                write!(f, "{c}{}", BLADE_NAMES[s])?;
            } else if *c < 0.0 {
                write!(f, " - {}{}", -c, BLADE_NAMES[s])?;
            } else {
                write!(f, " + {c}{}", BLADE_NAMES[s])?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A Euclidean vector; the grade-1 slice of a [`Multivector`].
#[derive(Debug, Clone, Copy, PartialEq, Default, serde::Serialize, serde::Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Vector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vector3 {
    pub const ZERO: Vector3 = Vector3 { x: 0.0, y: 0.0, z: 0.0 };
    pub const E1: Vector3 = Vector3 { x: 1.0, y: 0.0, z: 0.0 };
    pub const E2: Vector3 = Vector3 { x: 0.0, y: 1.0, z: 0.0 };
    pub const E3: Vector3 = Vector3 { x: 0.0, y: 0.0, z: 1.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vector3 { x, y, z }
    }

    pub fn dot(&self, o: &Vector3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(&self, o: &Vector3) -> Vector3 {
        Vector3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm_squared(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn max_abs_diff(&self, o: &Vector3) -> f64 {
        (self.x - o.x).abs().max((self.y - o.y).abs()).max((self.z - o.z).abs())
    }

    pub fn to_multivector(self) -> Multivector {
        self.into()
    }
}

impl From<[f64; 3]> for Vector3 {
    fn from(a: [f64; 3]) -> Self {
        Vector3::new(a[0], a[1], a[2])
    }
}

impl From<Vector3> for [f64; 3] {
    fn from(v: Vector3) -> Self {
        v.to_array()
    }
}

impl Add for Vector3 {
    type Output = Vector3;
    fn add(self, o: Vector3) -> Vector3 {
        Vector3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vector3 {
    type Output = Vector3;
    fn sub(self, o: Vector3) -> Vector3 {
        Vector3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vector3 {
    type Output = Vector3;
    fn neg(self) -> Vector3 {
        Vector3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vector3 {
    type Output = Vector3;
    fn mul(self, s: f64) -> Vector3 {
        Vector3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vector3> for f64 {
    type Output = Vector3;
    fn mul(self, v: Vector3) -> Vector3 {
        v * self
    }
}

impl Div<f64> for Vector3 {
    type Output = Vector3;
    fn div(self, s: f64) -> Vector3 {
        Vector3::new(self.x / s, self.y / s, self.z / s)
    }
}
