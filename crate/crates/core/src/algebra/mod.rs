//! Deformed `u(2)` algebra: structure functions, irrep matrices and their
//! verification against an independent Cartesian Fock-space oracle.

mod commutator;
mod irrep;
mod oracle;
mod structure;

pub use commutator::{commutator_polynomial, CommutatorPolynomial};
pub use irrep::{
    build_irrep, eval_matrix_poly, verify_algebra, verify_algebra_with_tol, w32_check, w32_check_with, IrrepMatrices,
    W32_DEFAULT_RHO,
};
pub use oracle::{build_oracle, oracle_compare, CartesianOracle, SparseMatrix};
pub use structure::{parafermionic_decompose, structure_function, Form, Parafermionic, StructureFunction};
