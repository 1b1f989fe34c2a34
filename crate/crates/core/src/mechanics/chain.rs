//! Tensioned segment-chain parameters and the separation (break) condition.

use crate::error::{ModelError, Result};

/// Parameters of the tensioned multi-segment stiffening chain.
///
/// A rope under pre-tension `F_T` clamps `N` rigid segments of total length
/// `L` and height `h` against each other. An external tip force larger than
/// `F_T * h / L` overcomes the clamping moment and separates the segments,
/// collapsing the lateral stiffness; below and at the threshold the chain
/// stays intact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlsChain {
    h_mm: f64,
    l_mm: f64,
    tension_n: f64,
    segments: usize,
}

impl BlsChain {
    /// Creates a chain from height `h` (mm), length `L` (mm), rope
    /// pre-tension `F_T` (N, >= 0), and segment count `N` (>= 1).
    ///
    /// `h` is the same physical quantity as [`BeamSection::height`]
    /// (`crate::mechanics::BeamSection::height`); consumers that take both
    /// reject mismatches. A chain shorter than its own height is rejected.
    pub fn new(h_mm: f64, l_mm: f64, tension_n: f64, segments: usize) -> Result<Self> {
        ModelError::require_positive("chain.h_mm", h_mm)?;
        ModelError::require_positive("chain.L_mm", l_mm)?;
        ModelError::require_non_negative("chain.F_T_N", tension_n)?;
        if segments < 1 {
            return Err(ModelError::domain("chain.N_segments", "must be >= 1, got 0"));
        }
        if l_mm < h_mm {
            return Err(ModelError::Inconsistent(format!(
                "chain.L_mm ({l_mm}) must be >= chain.h_mm ({h_mm})"
            )));
        }
        Ok(BlsChain { h_mm, l_mm, tension_n, segments })
    }

    /// Chain height `h` in mm.
    pub fn height(&self) -> f64 {
        self.h_mm
    }

    /// Chain length `L` in mm.
    pub fn length(&self) -> f64 {
        self.l_mm
    }

    /// Rope pre-tension `F_T` in N.
    pub fn tension(&self) -> f64 {
        self.tension_n
    }

    /// Segment count `N`.
    pub fn segment_count(&self) -> usize {
        self.segments
    }

    /// Largest external tip force the intact chain sustains: `F_T * h / L` (N).
    pub fn break_threshold(&self) -> f64 {
        self.tension_n * self.h_mm / self.l_mm
    }
}

/// Whether an applied tip force separates the chain segments.
///
/// Returns `true` iff `f_applied_n` strictly exceeds the threshold
/// `F_T * h / L`; equality counts as intact.
pub fn break_check(f_applied_n: f64, chain: &BlsChain) -> Result<bool> {
    ModelError::require_non_negative("F_applied_N", f_applied_n)?;
    Ok(f_applied_n > chain.break_threshold())
}
