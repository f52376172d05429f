//! The algebra generated by creation operators `𝐞ᵢ` and annihilation
//! operators `𝐞ᵢ*` acting on ⋀(R³).
//!
//! `𝐞ᵢ[Φ] = eᵢ ∧ Φ` and `𝐞ᵢ*[Φ] = eᵢ · Φ`. They satisfy the canonical
//! anticommutation relations
//!
//! ```text
//! 𝐞ᵢ𝐞ⱼ + 𝐞ⱼ𝐞ᵢ = 0,   𝐞ᵢ*𝐞ⱼ* + 𝐞ⱼ*𝐞ᵢ* = 0,   𝐞ᵢ𝐞ⱼ* + 𝐞ⱼ*𝐞ᵢ = δᵢⱼ
//! ```
//!
//! An [`OpElement`] is stored in the normal-ordered basis `𝐞_S 𝐞*_T`: all
//! creation factors to the left, each group in ascending index order. The
//! coefficient of `𝐞_S 𝐞*_T` sits at index `S * 8 + T`.
//!
//! Products are computed from a structure-constant table built once by
//! normal-ordering generator words. The action on multivectors goes through
//! wedge and interior products directly, which makes it an independent check
//! on the table.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::expm;
use crate::exterior::{grade_of, Involution, Multivector, Vector3, BLADES, OMEGA};
use crate::paravector::KParavector;

/// Number of normal-ordered monomials.
pub const DIM: usize = BLADES * BLADES;

/// Tolerance below which annihilation coefficients count as absent,
/// relative to the largest coefficient.
pub const CREATION_TOL: f64 = 1e-9;

/// An 8×8 matrix acting on blade coefficients, `m[row][col]`.
pub type Matrix8 = [[f64; BLADES]; BLADES];

// Generators are numbered so that normal order is ascending order:
// creation 𝐞ᵢ is i, annihilation 𝐞ᵢ* is 3 + i (i = 0, 1, 2).
type Gen = u8;

fn word_of(s: usize, t: usize) -> Vec<Gen> {
    let mut w = Vec::with_capacity(6);
    w.extend((0..3).filter(|i| s & (1 << i) != 0).map(|i| i as Gen));
    w.extend((0..3).filter(|i| t & (1 << i) != 0).map(|i| 3 + i as Gen));
    w
}

// Rewrites a generator word into normal order, accumulating coefficients.
fn normal_order(word: Vec<Gen>, coeff: f64, out: &mut [f64; DIM]) {
    if coeff == 0.0 {
        return;
    }
    for i in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[i], word[i + 1]);
        if a == b {
            // 𝐞ᵢ𝐞ᵢ = 0 and 𝐞ᵢ*𝐞ᵢ* = 0
            return;
        }
        if a > b {
            let mut swapped = word.clone();
            swapped.swap(i, i + 1);
            normal_order(swapped, -coeff, out);
            if a == b + 3 {
                // 𝐞ᵢ*𝐞ᵢ = 1 − 𝐞ᵢ𝐞ᵢ*
                let mut contracted = word;
                contracted.drain(i..i + 2);
                normal_order(contracted, coeff, out);
            }
            return;
        }
    }
    let (mut s, mut t) = (0, 0);
    for g in word {
        if g < 3 {
            s |= 1 << g;
        } else {
            t |= 1 << (g - 3);
        }
    }
    out[s * BLADES + t] += coeff;
}

fn sparse(dense: &[f64; DIM]) -> Vec<(usize, f64)> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0.0)
        .map(|(i, c)| (i, *c))
        .collect()
}

type Table = Vec<Vec<(usize, f64)>>;

fn product_table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = Vec::with_capacity(DIM * DIM);
        for a in 0..DIM {
            for b in 0..DIM {
                let mut w = word_of(a / BLADES, a % BLADES);
                w.extend(word_of(b / BLADES, b % BLADES));
                let mut out = [0.0; DIM];
                normal_order(w, 1.0, &mut out);
                table.push(sparse(&out));
            }
        }
        table
    })
}

fn reversion_table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..DIM)
            .map(|a| {
                let mut w = word_of(a / BLADES, a % BLADES);
                w.reverse();
                let mut out = [0.0; DIM];
                normal_order(w, 1.0, &mut out);
                sparse(&out)
            })
            .collect()
    })
}

// E_{S,R} = 𝐞_S · P₀ · 𝐞*_{r_k}⋯𝐞*_{r_1}, the operator sending e_R to e_S
// and every other blade to zero. P₀ = Π 𝐞ᵢ*𝐞ᵢ projects onto the vacuum.
fn matrix_units() -> &'static Vec<OpElement> {
    static UNITS: OnceLock<Vec<OpElement>> = OnceLock::new();
    UNITS.get_or_init(|| {
        let mut vacuum = OpElement::identity();
        for i in 1..=3 {
            vacuum = vacuum * (OpElement::ann(i) * OpElement::cre(i));
        }
        let mut units = Vec::with_capacity(DIM);
        for s in 0..BLADES {
            for r in 0..BLADES {
                let mut lowering = OpElement::identity();
                for i in 1..=3 {
                    if r & (1 << (i - 1)) != 0 {
                        // highest index ends up leftmost
                        lowering = OpElement::ann(i) * lowering;
                    }
                }
                units.push(OpElement::monomial(s, 0, 1.0) * vacuum * lowering);
            }
        }
        units
    })
}

/// Element of the operator algebra in the normal-ordered basis.
#[derive(Clone, Copy, PartialEq)]
pub struct OpElement {
    coeffs: [f64; DIM],
}

impl Default for OpElement {
    fn default() -> Self {
        Self::ZERO
    }
}

impl OpElement {
    pub const ZERO: OpElement = OpElement { coeffs: [0.0; DIM] };

    pub fn from_coeffs(coeffs: [f64; DIM]) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_finite()) {
            Ok(OpElement { coeffs })
        } else {
            Err(Error::NonFinite("operator coefficients"))
        }
    }

    pub fn coeffs(&self) -> &[f64; DIM] {
        &self.coeffs
    }

    /// Coefficient of `𝐞_S 𝐞*_T`.
    pub fn get(&self, s: usize, t: usize) -> f64 {
        self.coeffs[s * BLADES + t]
    }

    /// `c · 𝐞_S 𝐞*_T`.
    pub fn monomial(s: usize, t: usize, c: f64) -> Self {
        let mut x = Self::ZERO;
        x.coeffs[(s & OMEGA) * BLADES + (t & OMEGA)] = c;
        x
    }

    pub fn identity() -> Self {
        Self::scalar(1.0)
    }

    pub fn scalar(c: f64) -> Self {
        Self::monomial(0, 0, c)
    }

    /// Creation operator `𝐞ᵢ`, `i` in `1..=3`.
    pub fn cre(i: usize) -> Self {
        assert!((1..=3).contains(&i), "generator index {i} outside 1..=3");
        Self::monomial(1 << (i - 1), 0, 1.0)
    }

    /// Annihilation operator `𝐞ᵢ*`, `i` in `1..=3`.
    pub fn ann(i: usize) -> Self {
        assert!((1..=3).contains(&i), "generator index {i} outside 1..=3");
        Self::monomial(0, 1 << (i - 1), 1.0)
    }

    /// `𝐯 = Σ vᵢ 𝐞ᵢ`.
    pub fn creation(v: Vector3) -> Self {
        Self::cre(1) * v.x + Self::cre(2) * v.y + Self::cre(3) * v.z
    }

    /// `𝐯* = Σ vᵢ 𝐞ᵢ*`.
    pub fn annihilation(v: Vector3) -> Self {
        Self::ann(1) * v.x + Self::ann(2) * v.y + Self::ann(3) * v.z
    }

    /// Scalar (identity) coefficient.
    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// The natural map: blade `e_S` goes to `𝐞_S`.
    pub fn iota(a: &Multivector) -> Self {
        let mut x = Self::ZERO;
        for s in 0..BLADES {
            x.coeffs[s * BLADES] = a[s];
        }
        x
    }

    /// Normal-ordered product.
    pub fn product(&self, other: &Self) -> Self {
        let table = product_table();
        let mut out = Self::ZERO;
        for (a, ca) in self.coeffs.iter().enumerate() {
            if *ca == 0.0 {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if *cb == 0.0 {
                    continue;
                }
                for (r, c) in &table[a * DIM + b] {
                    out.coeffs[*r] += c * ca * cb;
                }
            }
        }
        out
    }

    /// Action on a multivector: contract by `e*_T` (highest index first),
    /// then wedge by `e_S`.
    pub fn apply(&self, phi: &Multivector) -> Multivector {
        let mut out = Multivector::ZERO;
        for t in 0..BLADES {
            let mut contracted = *phi;
            for i in (0..3).rev() {
                if t & (1 << i) != 0 {
                    contracted = Multivector::blade(1 << i, 1.0).interior(&contracted);
                }
            }
            if contracted == Multivector::ZERO {
                continue;
            }
            for s in 0..BLADES {
                let c = self.coeffs[s * BLADES + t];
                if c != 0.0 {
                    out += Multivector::blade(s, c).wedge(&contracted);
                }
            }
        }
        out
    }

    /// The induced 8×8 matrix; column `R` is the image of blade `e_R`.
    pub fn to_matrix(&self) -> Matrix8 {
        let mut m = [[0.0; BLADES]; BLADES];
        for r in 0..BLADES {
            let col = self.apply(&Multivector::blade(r, 1.0));
            for (s, row) in m.iter_mut().enumerate() {
                row[r] = col[s];
            }
        }
        m
    }

    /// The unique element whose action is `m`.
    pub fn from_matrix(m: &Matrix8) -> Self {
        let units = matrix_units();
        let mut out = Self::ZERO;
        for (s, row) in m.iter().enumerate() {
            for (r, c) in row.iter().enumerate() {
                if *c != 0.0 {
                    out += units[s * BLADES + r] * *c;
                }
            }
        }
        out
    }

    /// Reversion fixes generators and reverses words; grade involution
    /// negates generators; conjugation does both.
    pub fn involution(&self, kind: Involution) -> Self {
        match kind {
            Involution::GradeInvolution => {
                let mut out = *self;
                for (i, c) in out.coeffs.iter_mut().enumerate() {
                    if (grade_of(i / BLADES) + grade_of(i % BLADES)) % 2 == 1 {
                        *c = -*c;
                    }
                }
                out
            }
            Involution::Reversion => {
                let table = reversion_table();
                let mut out = Self::ZERO;
                for (a, ca) in self.coeffs.iter().enumerate() {
                    if *ca != 0.0 {
                        for (r, c) in &table[a] {
                            out.coeffs[*r] += c * ca;
                        }
                    }
                }
                out
            }
            Involution::Conjugation => self
                .involution(Involution::Reversion)
                .involution(Involution::GradeInvolution),
        }
    }

    pub fn reversion(&self) -> Self {
        self.involution(Involution::Reversion)
    }

    pub fn conjugation(&self) -> Self {
        self.involution(Involution::Conjugation)
    }

    pub fn grade_involution(&self) -> Self {
        self.involution(Involution::GradeInvolution)
    }

    /// `[X, Y] = XY − YX`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.product(other) - other.product(self)
    }

    /// Largest coefficient on a monomial with annihilation factors.
    pub fn annihilation_magnitude(&self) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(i, _)| i % BLADES != 0)
            .fold(0.0, |m, (_, c)| m.max(c.abs()))
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn is_creation_only(&self) -> bool {
        self.annihilation_magnitude() <= CREATION_TOL * (1.0 + self.max_abs())
    }

    fn require_creation_only(&self) -> Result<()> {
        if self.is_creation_only() {
            Ok(())
        } else {
            Err(Error::NotCreationOnly(self.annihilation_magnitude()))
        }
    }

    /// The multivector this creation-only element represents, `X[1]`.
    pub fn vacuum(&self) -> Multivector {
        self.apply(&Multivector::scalar(1.0))
    }

    /// Operator Hodge star on creation-only elements, `ι(⋆X[1])`.
    pub fn star(&self) -> Result<Self> {
        self.require_creation_only()?;
        Ok(Self::iota(&self.vacuum().hodge()))
    }

    /// `ι(⟨X[1]⟩_{k-1} + ⟨X[1]⟩_k)`.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > 4 {
            return Err(Error::BandOutOfRange(k));
        }
        self.require_creation_only()?;
        Ok(Self::iota(&KParavector::project(&self.vacuum(), k)))
    }

    /// `e^X` through the 8×8 action.
    pub fn exp(&self, tol: f64) -> Result<Self> {
        op_exp_series(self, tol)
    }

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

/// Free-function form of [`OpElement::iota`].
pub fn iota(a: &Multivector) -> OpElement {
    OpElement::iota(a)
}

pub fn op_mul(x: &OpElement, y: &OpElement) -> OpElement {
    x.product(y)
}

pub fn op_apply(x: &OpElement, phi: &Multivector) -> Multivector {
    x.apply(phi)
}

pub fn op_involution(x: &OpElement, kind: Involution) -> OpElement {
    x.involution(kind)
}

pub fn commutator(x: &OpElement, y: &OpElement) -> OpElement {
    x.commutator(y)
}

pub fn op_star(x: &OpElement) -> Result<OpElement> {
    x.star()
}

pub fn is_creation_only(x: &OpElement) -> bool {
    x.is_creation_only()
}

pub fn op_grade_project(x: &OpElement, k: usize) -> Result<OpElement> {
    x.grade_project(k)
}

/// Matrix exponential of the action of `x`, mapped back to the algebra.
pub fn op_exp_series(x: &OpElement, tol: f64) -> Result<OpElement> {
    if !x.is_finite() {
        return Err(Error::NonFinite("exponent"));
    }
    let m = expm::expm(&x.to_matrix(), tol)?;
    Ok(OpElement::from_matrix(&m))
}

/// `{𝐞ᵢ* | X_k} = 𝐞ᵢ* X − (−1)^k X 𝐞ᵢ*` for homogeneous creation-only `X_k`.
pub fn bracket(i: usize, x: &OpElement, k: usize) -> OpElement {
    let a = OpElement::ann(i);
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    a.product(x) - x.product(&a) * sign
}

/// Operator star of the basis monomial `𝐞_S` built from nested brackets,
/// `⋆𝐞_μ = {τ(𝐞̃_μ) | 𝛀}`.
///
/// The reversed word `𝐞*_{μ_k}⋯𝐞*_{μ_1}` is applied with its rightmost
/// factor innermost.
pub fn star_bracket(s: usize) -> OpElement {
    let mut x = OpElement::monomial(OMEGA, 0, 1.0);
    let mut k = 3;
    for i in 0..3 {
        if s & (1 << i) != 0 {
            x = bracket(i + 1, &x, k);
            k -= 1;
        }
    }
    x
}

impl Add for OpElement {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for OpElement {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for OpElement {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl SubAssign for OpElement {
    fn sub_assign(&mut self, rhs: Self) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for OpElement {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

impl Mul<f64> for OpElement {
    type Output = Self;
    fn mul(mut self, rhs: f64) -> Self {
        for c in self.coeffs.iter_mut() {
            *c *= rhs;
        }
        self
    }
}

impl Mul<OpElement> for f64 {
    type Output = OpElement;
    fn mul(self, rhs: OpElement) -> OpElement {
        rhs * self
    }
}

impl Mul for OpElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        OpElement::product(&self, &rhs)
    }
}

const CRE: [&str; BLADES] = ["", "e1", "e2", "e1e2", "e3", "e1e3", "e2e3", "e1e2e3"];
const ANN: [&str; BLADES] = ["", "e1*", "e2*", "e1*e2*", "e3*", "e1*e3*", "e2*e3*", "e1*e2*e3*"];

impl fmt::Display for OpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == 0.0 {
                continue;
            }
            let name = format!("{}{}", CRE[i / BLADES], ANN[i % BLADES]);
            if first {
                write!(f, "{c}{name}")?;
            } else if *c < 0.0 {
                write!(f, " - {}{name}", -c)?;
            } else {
                write!(f, " + {c}{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OpElement({self})")
    }
}
