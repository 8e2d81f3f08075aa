mod bar;
mod matching;
mod oracle;
mod resolution;
mod sdr;
mod verify;

pub use bar::{
    bar_cells, bar_differential, bar_differential_lin, delta_prime, is_attached, top_degree, TensorComb, WordComb,
};
pub use matching::{role, MorseMatching, Role};
pub use oracle::BasedComplex;
pub use resolution::{Bimod, BimodComb, Resolution, ResolutionReport};
pub use sdr::{ClosedSdr, OracleSdr, SdrMaps};
pub use verify::{compare_sdr, verify_sdr, SdrReport, HOMOTOPY};
