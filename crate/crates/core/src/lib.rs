pub mod builder;
pub mod graph;
pub mod group;
pub mod kmu;
pub mod predim;
pub mod witness;
pub mod zero_alg;

mod flow;
