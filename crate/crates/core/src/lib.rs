pub mod exec;
pub mod groups;
pub mod intersect;
pub mod paths;
pub mod present;
pub mod ring;
pub mod wrap;

pub use exec::Exec;
