//! Free Lie algebras in the Lyndon basis, the Kohno Lie algebra `L(P_k)`, and
//! the graded map `θ`.

pub mod expr;
pub mod kohno;
pub mod lie;
pub mod theta;
