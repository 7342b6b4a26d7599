//! Formal products of cyclotomic factors `1 - c q^{-(a s + b)}` and opaque
//! gamma symbols with declared poles, with leading Laurent terms, rescaling
//! in `s`, and the residue bookkeeping relating formal degrees to adjoint
//! gamma factors.

mod coeff;
mod derive;
mod expr;
mod laurent;

pub use coeff::{Coeff, Conj, GammaLabel, Sym, SymPower};
pub use derive::{
    adjoint_quotient_expression, adjoint_quotient_expression_with, derive_main_theorem, derive_main_theorem_with,
    mu_expression, mu_expression_with, standard_axioms, standard_axioms_for, trivial_gamma, DerivationReport,
    DerivationStep, LevelLabels,
};
pub use expr::{FactorKind, FactorPower, MeroExpr};
pub use laurent::{laurent_leading, numeric_leading, GammaAxioms, LaurentLeading, PoleDeclaration};
