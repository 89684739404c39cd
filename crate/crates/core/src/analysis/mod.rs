//! Reduced states and observables of a walk.

mod density;
mod entropy;
mod measure;
mod witness;

pub use density::{
    reduced_coin_density, reduced_position_density, trace_distance, BasisLabel, DensityMatrix,
};
pub use entropy::{binary_entropy, von_neumann_entropy_avg};
pub use measure::{measure, MeasurementRecord, NEGLIGIBLE_PROBABILITY};
pub use witness::{
    nm_witness, nm_witness_grid, nm_witness_steps, position_density_at, DEFAULT_TAU_PRIME,
    WITNESS_STEPS,
};
