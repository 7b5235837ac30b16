//! Genericity, gamma-factor orders and theta lifts for the metaplectic group `Mp(2n)`.

pub mod classify;
pub mod error;
pub mod gamma;
pub mod half;
pub mod notation;
pub mod param;
pub mod rep;
pub mod segment;
pub mod symbols;
pub mod theta;
pub mod universe;

pub use error::{Error, Result};
pub use half::HalfInt;
pub use param::LParameter;
pub use rep::{Flavor, LanglandsDatum, TemperedRep, TowerSign};
pub use segment::Segment;
pub use symbols::{Cuspidal, QuadChar, SelfDualType};
