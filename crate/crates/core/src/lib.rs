pub mod artin;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod scalar;
pub mod fiber;
pub mod criterion;
pub mod graded;
pub mod dsl;
pub mod report;
pub mod corpus;
pub mod export;
pub mod cli;
