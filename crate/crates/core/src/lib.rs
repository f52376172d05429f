//! Paravector model of three-dimensional affine geometry.
//!
//! Points, lines and planes are k-paravectors of the exterior algebra
//! ⋀(R³). Transformations are sandwiches `ε U X Ũ` (or `Ū`) by elements of
//! the 64-dimensional algebra generated by creation and annihilation
//! operators. The crate covers:
//!
//! - [`exterior`]: wedge, interior product, involutions, Hodge star.
//! - [`paravector`]: points, line segments, plane fragments, volumes and
//!   their incidence tests.
//! - [`operator`]: the operator algebra, its action on multivectors and the
//!   matrix exponential.
//! - [`transform`]: reflection, scale, shear, rotations, translation,
//!   cotranslation, perspective and pseudo-perspective.
//! - [`scene`]: JSON scenes and transform scripts driven by the `paravec` CLI.

pub mod error;
pub mod exterior;
pub mod expm;
pub mod operator;
pub mod paravector;
pub mod scene;
pub mod transform;

pub use error::{Error, Result};
pub use exterior::{Involution, Multivector, Vector3};
pub use operator::OpElement;
pub use paravector::{
    classify_lines, line_through, on_line, on_plane, plane_through, tetra_volume, KParavector,
    LineRelation, LineSegment, Paravector, PlaneFragment, Point, VolumeElement,
};
pub use transform::{PerspectiveCamera, Transform};
