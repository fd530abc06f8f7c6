//! Library side of the command-line front end: certificate persistence, the
//! paper-core verification suite, and the generator-word grammar.

pub mod cert;
pub mod suite;
pub mod words;
