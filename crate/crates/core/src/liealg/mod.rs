//! Reductive Lie algebras in a Chevalley basis, the invariant form, lifts of
//! root isometries, and nilpotent elements.

mod algebra;
mod chevalley;
mod maps;
mod nilpotent;
mod parabolic;

pub use algebra::{build_lie_algebra, LieAlgebra, TriangularParts};
pub use maps::{
    build_xi, exp_ad, fixed_subalgebra, sigma_vee, simple_reflection_representative, weyl_representative, AlgebraMap,
    FixedSubalgebra,
};
pub use nilpotent::{jacobson_morozov_characteristic, NilpotentDatum};
pub use parabolic::{levi_subalgebra, orthogonal, parabolic_subalgebra, ParabolicSubalgebra, SemisimplePart};
