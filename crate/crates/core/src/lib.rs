//! Generalized bicomplex numbers `C_αβ`, the hyperquadric Lie groups they
//! carry, their left-invariant vector fields, and tensor product surfaces of
//! plane curves lying on those groups.
//!
//! ```
//! use gbx_core::{AlgebraParams, GbcNumber};
//!
//! let p = AlgebraParams::new(2.0, 3.0).unwrap();
//! let i = GbcNumber::I;
//! assert_eq!(p.multiply(i, i), GbcNumber::new(-2.0, 0.0, 0.0, 0.0).unwrap());
//! ```

pub mod algebra;
pub mod error;
pub mod hyperquadric;
pub mod lie;
pub mod mesh;
pub mod numeric;
pub mod surface;
pub mod verify;

pub use algebra::{AlgebraParams, ConjugationKind, GbcNumber, NormForm, RepMatrix};
pub use error::{Error, Result};
pub use hyperquadric::{FailedCondition, Hyperquadric, HyperquadricKind, HyperquadricPoint, MetricForm};
pub use lie::TangentVector;
pub use mesh::{MeshFormat, MeshGrid, MeshSample};
pub use surface::{CurveKind, FundamentalForm, PlanarCurve, Plane, TensorRule, TensorSurface};
pub use verify::{RunConfig, VerificationReport};
