#![no_std]

extern crate alloc;

pub mod graph;
pub mod algebra;
pub mod equations;
pub mod spectra;
pub mod solve;
pub mod geobound;
pub mod mooreaut;
pub mod oracle;
