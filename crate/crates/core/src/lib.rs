pub mod analysis;
pub mod arith;
pub mod checks;
pub mod cli;
pub mod family;
pub mod lattice;
pub mod newton;
pub mod toric;
