mod builtin;
mod cartan;
mod datum;
mod system;
mod weyl;

pub use builtin::{
    adjoint_datum, builtin_datum, cartan_matrix, gl_datum, parse_type_name, simple_types_up_to,
    simply_connected_datum, SimpleType,
};
pub use cartan::CartanMatrix;
pub use datum::{RootDatum, RootDatumSpec};
pub use system::{
    build_root_system, build_root_system_bounded, simple_root_names, Coroot, LengthClass, Root, RootSystem,
    DEFAULT_ROOT_BOUND,
};
pub use weyl::{
    count_levi_normalizer, enumerate_weyl_group, longest_element, longest_in_levi, preserves_subset,
    weyl_group_order, WeylElement,
};
