//! Exact group arithmetic for the semidirect product of the pseudo-unitary
//! group U(1,3) with the Weyl-Heisenberg group, together with its Lie
//! algebra on truncated polynomial space, orbit classification with
//! induced-representation evaluators, Gelfand-Tsetlin combinatorics, the
//! Segal-Bargmann transform by quadrature, and dimensioned phase-space
//! boost kinematics.

pub mod algebra;
pub mod bargmann;
pub mod expm;
pub mod fock;
pub mod gelfand;
pub mod group;
pub mod kinematics;
pub mod mackey;
pub mod metric;
pub mod tolerances;
