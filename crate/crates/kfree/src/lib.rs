//! Standard-library side of `kfree-core`: graph6 streams, a rayon executor,
//! report serialization, and the command line.

pub mod cli;
pub mod exec;
pub mod report;
pub mod stream;

pub use exec::Parallel;
pub use stream::{read_stream, StreamError};
