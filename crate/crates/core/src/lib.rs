//! FMCW radar toolkit: scene simulation with per-class micro-motion,
//! range-Doppler-angle processing, FFT and MUSIC direction of arrival,
//! CA-CFAR detection with DBSCAN clustering, micro-Doppler feature cubes,
//! a decision-tree classification baseline, and detection metrics.

pub mod config;
pub mod error;

pub use config::{LinkBudget, RadarConfig, SPEED_OF_LIGHT};
pub use error::{Error, Result};
