//! Finite fields, the Desarguesian projective planes PG(2, q), and the
//! substructures the constructions need.

pub mod baer;
pub mod biaffine;
pub mod field;
pub mod oval;
pub mod plane;

pub use baer::{fano_subplane_pg24, FanoSubplane};
pub use biaffine::{biaffine, BiaffineKind};
pub use field::{gf, FieldTable};
pub use oval::{conic_oval, LineTag, OvalClassification, PointTag};
pub use plane::{levi, pg2, IncidenceStructure, ProjectivePlane, Triple};
