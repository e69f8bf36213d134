pub mod arc;
pub mod error;
pub mod hilbert;
pub mod partition;
pub mod qseries;
