//! Brute-force reference implementations and seeded input generators used
//! by the test suites. Nothing here shares code with the algorithms it checks
//! beyond the plain data types.

pub mod cans;
pub mod disk;
pub mod gen;
pub mod gluing;
pub mod graphs;
pub mod paths;
