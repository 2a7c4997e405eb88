// SPDX-License-Identifier: Apache-2.0

pub mod config;
pub mod cyclo;
pub mod error;
pub mod fixpt;
pub mod geometry;
pub mod gluing;
pub mod groups;
pub mod matrix;
pub mod report;
pub mod reps;
pub mod suites;
pub mod symalg;
