//! Scenario files, phase sweeps and CSV output on top of `cheshire-core`,
//! plus the scenarios bundled into the `cheshire` binary.

pub mod bundled;
pub mod csv;
pub mod scenario;
pub mod sweep;
