//! Exact and Monte Carlo checks of the probabilistic ingredients.
//!
//! Exact statements (bounds, binomial identities, parameter arithmetic,
//! certificates) are asserted. Statements that only hold for unspecified
//! large parameters are measured and reported, never asserted.

mod acyclic;
mod bounds;
mod pipeline;
mod report;
mod saturation;
mod witness;

pub use self::acyclic::{approx, exact_acyclic_probability, mc_acyclic_probability, AcyclicEstimate, AcyclicProbability, AcyclicRoute};
pub use self::bounds::{
    acyclic_orientation_bound, acyclic_orientation_bound_exact, chernoff_bound, verify_parameter_chain, verify_prop_2_4, Interval,
    ParameterChain, Prop24, Verdict,
};
pub use self::pipeline::{pipeline_run, PipelineOptions, PipelineOutcome};
pub use self::report::ExperimentReport;
pub use self::saturation::{
    is_saturated, is_truly_saturated, saturation_experiment, truly_saturated_experiment, ColouringMode, SaturationOutcome,
    SaturationParams, SideLists, TrulySaturatedOutcome,
};
pub use self::witness::{witness_orientation_search, SearchMode, WitnessOutcome};
