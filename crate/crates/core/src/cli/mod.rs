//! Command-line front end: run configuration, named experiments and output.
//!
//! A run is described by a [`RunConfig`], assembled from an optional flat
//! `key = value` file and then from command-line flags (flags win).
//! [`run_experiment`] evaluates it into a [`SweepResult`] and [`emit`] writes
//! that as CSV or JSON.

mod config;
mod experiments;
mod output;

pub use config::{
    parse_config_text, read_config_file, Experiment, Format, Observable, RunConfig, SweepAxis,
    AXIS_NAMES, CONFIG_KEYS,
};
pub use experiments::{run_experiment, table1_closed_form};
pub use output::{emit, render, Axis, Cell, Column, Metadata, SweepResult};
