//! Permutation groups acting on incidence graphs.

mod action;
mod autom;
mod classical;
mod perm;
mod schreier;

pub use action::{
    cycle_extension_criterion, is_moufang, is_strongly_transitive, stabilizer_transitivity_degree,
    type_preserving_subgroup, ActionError, CycleExtensionReport, MoufangReport,
    StrongTransitivityReport,
};
pub use autom::automorphism_group;
pub use classical::{fano_plane, gq22};
pub use perm::{Perm, PermError, PermGroup};
pub use schreier::StabChain;
