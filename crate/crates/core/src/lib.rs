//! Radii of starlikeness for three subordination-defined function classes.
//!
//! The library is organized around four layers:
//!
//! - [`kernel`]: complex branch primitives (principal square root, the
//!   upper-half-plane square root, principal log and arcsine), disks, and
//!   deterministic circle sampling.
//! - [`regions`]: the nine target regions in the right half plane, each with
//!   its superordinate map, an exact interior predicate, implicit-curve
//!   cross-checks, and sampled disk-inclusion certificates.
//! - [`families`]: the classes `T1`, `T2`, `T3` with their piecewise
//!   derivative bounds, extremal functions, and a seeded Blaschke-product
//!   member generator.
//! - [`radii`]: closed-form sharp radii, an independent bisection
//!   cross-check, and sharpness certificates at the extremal contact point.
//!
//! Hot loops (circle sampling, Monte-Carlo member sweeps) run on rayon when
//! the default `parallel` feature is enabled and fall back to sequential
//! iteration otherwise; see [`exec`].

pub mod error;
pub mod exec;
pub mod families;
pub mod kernel;
pub mod radii;
pub mod regions;

pub use error::Error;
pub use kernel::{Complex64, Disk};
pub use families::{Family, MemberInstance, SchwarzSpec};
pub use radii::RadiusResult;
pub use regions::{InclusionReport, TargetClass};
