//! Constructions producing matroids: extensions, the two-filter swap, cones,
//! blow-ups, explicit families and lattice realizations.

mod cone;
mod extension;
mod families;
mod realize;
mod twofilters;

pub use cone::{
    free_m_cone, free_m_cone_by_extensions, parallel_blowup, parallel_blowup_by_oracle,
    ConedMatroid,
};
pub use extension::{add_coloop, free_extension, principal_extension};
pub use families::{diffconfig_diagram, diffconfig_pair, tipless_counterexample};
pub use realize::{lattice_to_transversal, small_lattices, transversal_pair, LatticeRealization};
pub use twofilters::{lpm_witness, twofilters};
