//! Pop-stack sorting dynamics on finite Coxeter groups.

pub mod cartan;
pub mod dynamics;
pub mod combinat;
pub mod conjecture;
pub mod element;
pub mod error;
pub mod folding;
pub mod golden;
pub mod group;
pub mod linalg;
pub mod normal_form;
pub mod notation;
pub mod nc;
pub mod refset;
pub mod scalar;
pub mod verify;

pub use cartan::{CoxeterType, Family};
pub use dynamics::{DepthTable, OrbitRecord, PopEngine, Terminal};
pub use element::Element;
pub use error::{Error, Result};
pub use group::{CoxeterSpec, Enumeration, GroupContext, DEFAULT_BUDGET};
pub use nc::{NcLattice, Projector};
pub use refset::ReflectionSet;
pub use scalar::Scalar;
pub use folding::{FoldKind, FoldingMap};
pub use normal_form::{BlockDecomposition, Factorization};
pub use notation::Notation;
