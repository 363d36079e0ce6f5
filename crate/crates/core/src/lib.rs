//! Exact computable algebra for basic classical Lie superalgebras.
//!
//! The crate is organized around five subsystems:
//!
//! * [`scalars`] — the arithmetic kernel: the degree-8 cyclotomic field,
//!   finite Grassmann algebras, supermatrices, supertranspose, Berezinian.
//! * [`rootdata`] — root systems in the eps/delta basis for `osp(m|2n)` and
//!   `sl(m|n)`, admissible positive systems, explicit matrix root vectors
//!   and structure constants.
//! * [`weights`] — the super Kostant partition function, torus-spectrum and
//!   Verma weight multiplicities, Freudenthal recursion for the even part,
//!   dominance and irreducibility criteria.
//! * [`enveloping`] — a PBW normal-ordering engine for `U(g)`, the Verma
//!   module action and the contravariant pairing realized as exact rational
//!   matrices.
//! * [`ospgeo`] — the orthosymplectic supergroup on Grassmann T-points:
//!   membership residuals, real forms, the Lagrangian and Siegel charts,
//!   fractional actions, the super Cayley transform, Cartan and
//!   Harish-Chandra decompositions and the invariant complex structure.
//!
//! Everything is exact: no floating point anywhere.

pub mod enveloping;
pub mod error;
pub mod ospgeo;
pub mod rootdata;
pub mod scalars;
pub mod weights;

pub(crate) mod linalg;

pub use error::{Error, Result};
pub use scalars::{CycloScalar, GrassmannElement, Parity, ParityTag, Rat, SuperMatrix};

pub use rootdata::{
    build_root_system, classify_root, coroot_pairing, enumerate_admissible, is_admissible,
    rho_vector, root_vector, structure_constants, AdmissibilityReport, Family, Root, RootSystem,
    SplitPositiveSystem, Weight,
};

pub use weights::{
    dominance_check, hc_universal_mult, irreducibility_criterion, mult_table,
    super_kostant_partition, torus_spectrum_mult, verma_weight_mult, DominanceReport, MultTable,
    PartitionQuery,
};

pub use enveloping::{
    contravariant_matrix, irreducible_quotient_mult, normal_order, verma_apply, verma_project,
    BasisIndex, PBWMonomial, PairingMatrix, UEElement,
};

pub use ospgeo::{
    cartan_split, cayley_inverse, cayley_transform, complex_structure_j, fractional_action,
    hc_split, lagrangian_normalize, lie_membership, osp_lie_basis, osp_membership, p_minus_mul,
    real_form_membership, ChartPoint, ChartTag, OspContext, PMinusPoint, RealForm,
};
