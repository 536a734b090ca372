//! Structural recognizers: colored neighborhood classes, cascade status and
//! class 𝒯.

mod cascade;
mod classes;
mod tclass;

pub use cascade::{cascade_status, CascadeKind, CascadeStatus};
pub use classes::{
    colored_classes, equivalent, is_color_diverse, spec_is_color_diverse, ClassKind, ClassPartition,
};
pub use tclass::{
    is_double_cluster, recognize_t, scan_forbidden, ComponentClass, ForbiddenKind,
    ForbiddenWitness, TComponent, TDecomposition,
};
