//! Digital topology on finite simple graphs.
//!
//! A digital space is a finite simple graph read as a topological object:
//! subspaces are induced subgraphs, the rim of a vertex is the subgraph on
//! its neighbors, and homotopy is generated by deletions and attachments of
//! simple points and edges. On top of that substrate this crate decides
//! contractibility, recognizes digital n-spheres, n-manifolds and n-disks,
//! separates manifolds along embedded spheres, and checks (local) simple
//! connectedness — every positive answer backed by a machine-checkable
//! certificate and every search audited by homotopy invariants (Euler
//! characteristic and GF(2) Betti numbers of the clique complex).
//!
//! Searches are exact: negative answers are exhaustive, and running out of
//! budget or exceeding a size cap is an explicit error, never a verdict.

pub mod bits;
pub mod canon;
pub mod engine;
pub mod error;
pub mod generate;
pub mod homotopy;
pub mod invariants;
pub mod pairs;
pub mod recognize;
pub mod rng;
pub mod separation;
pub mod simply;
pub mod space;

pub use canon::{canonical_key, CanonKey};
pub use engine::{Budget, Caps, Engine};
pub use error::TopoError;
pub use homotopy::{Certificate, Contractibility, Reduction, TransformStep};
pub use invariants::HomologyProfile;
pub use pairs::{PairContraction, PairSplit, SplitSpec};
pub use recognize::{DiskDecomposition, SphereCertificate, SphereOutcome};
pub use separation::{Separation, SeparationOutcome};
pub use simply::{CurveSet, DiskSearch, LscVerdict, ScVerdict, SearchLimits};
pub use space::{join, DigitalSpace, VertexSet};
