//! File formats, SVG diagrams, threaded split search and the command line
//! for [`dinterval_core`].

pub mod bench;
pub mod cli;
pub mod edgelist;
pub mod repfile;
pub mod runtime;
pub mod svg;

pub use edgelist::{parse_graph, write_graph, EdgeListError};
pub use repfile::{parse_rep, write_rep, RepFileError};
pub use svg::render_svg;
