pub mod bredon;
pub mod cli;
pub mod coeff;
pub mod galoisff;
pub mod groups;
pub mod interp;
pub mod intlin;
pub mod orbitcat;
