//! Worked examples: hook modules, the `Γ(G,T)` graph, the `M(2,2)`
//! counterexample and tensor space.

mod gamma;
mod reports;

pub use gamma::{gamma_graph_analysis, Component, GammaFieldDims, GammaGraph, GammaReport};
pub use reports::{
    counterexample_report, dc_check_spec, hook_report, tensor_report, CounterexampleReport,
    HookReport, TensorFieldDims, TensorReport,
};
