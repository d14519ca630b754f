//! Filtrations of `K^(n)` by ideals with well-understood factors, the
//! complexes resolving those factors, and the assembled resolution. Only
//! ranks and shifts are tracked; exactness is checked through Euler
//! characteristics against the fine Hilbert function of `K^(n)`.

pub mod complexes;
pub mod filtration;
pub mod hilbert;

pub use complexes::{
    en_ranks, exterior_power, first_row_complex_ranks, koszul_ranks, ComplexRanks, GradedFreeModule,
};
pub use filtration::{
    factor_resolution, factor_resolutions, filtration, filtration_coarse, filtration_fine,
    is_eligible_prime, total_resolution, FactorDescriptor, FactorKind, Filtration,
};
pub use hilbert::{
    euler_characteristic, euler_check, hilbert_function, ideal_fine_hilbert, s_hilbert, EulerReport,
    HilbertTarget,
};
