//! Algebraic numbers: number fields with optional real embeddings, real root
//! isolation, extensions and factorization over number fields.

pub mod extend;
pub mod field;
pub mod roots;

pub use extend::{factor_over, primitive_extension, real_roots_over, roots_of_irreducible, Extension, KPoly, RootInExtension};
pub use field::{Nf, NfElem, NumberField};
pub use roots::{isolate_irrational, real_roots_q, sturm_chain, RealAlg};
