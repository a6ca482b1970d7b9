//! Gröbner machinery for ideals and submodules of free modules, plus the
//! derived operations: normal forms, syzygy kernels, elimination,
//! saturation, and module intersection.

pub mod ideal;
pub mod module;

pub use ideal::Ideal;
pub use module::{element_from_strings, syzygy_generators, FreeModuleElement, ModuleOrder, Submodule};
