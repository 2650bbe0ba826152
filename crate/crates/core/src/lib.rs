pub mod error;
pub mod field;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod search;
pub mod stable;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use linalg::{Caps, Echelon, Form, HilbertTable, Provenance, Subspace, SubspaceRecord};
pub use monomial::{GradedComponent, Monomial, MonomialSpace, TermOrder};
pub use search::{LResult, MResult, PersistenceProbe, QuadricPairParams, StableCatalog};
pub use stable::{RationalHilbertSeries, StableSpace, StableSpaceRecord};

/// Subspaces over `GF(p)`.
pub type GfSubspace = Subspace<PrimeField>;
/// Subspaces over the rationals.
pub type QSubspace = Subspace<Rationals>;
