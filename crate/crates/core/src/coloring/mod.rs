//! Proper vertex colourings: exact decision, chromatic number,
//! vertex-criticality, and a randomized one-sided heuristic.

mod backtrack;
mod chromatic;
mod critical;
mod exact;
mod local;

pub use backtrack::decide_k_colorable_plain;
pub use chromatic::{chromatic_number, greedy_clique, ChromaticNumber};
pub use critical::{is_vertex_critical, vertex_criticality, Criticality};
pub use exact::decide_k_colorable;
pub use local::{random_colourable, LocalSearchParams};

use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::Graph;

/// Largest palette the bitmask kernels handle.
pub const MAX_COLORS: usize = 64;

/// A vertex to colour assignment using colours `0..color_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    assignment: Vec<usize>,
    color_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringViolation {
    #[error("colouring covers {found} vertices but the graph has {expected}")]
    WrongOrder { expected: usize, found: usize },
    #[error("vertex {vertex} has colour {color} outside 0..{color_count}")]
    ColorOutOfRange { vertex: usize, color: usize, color_count: usize },
    #[error("edge ({u}, {v}) joins two vertices of colour {color}")]
    Monochromatic { u: usize, v: usize, color: usize },
    #[error("vertex {vertex} uses colour {color} which its palette forbids")]
    Forbidden { vertex: usize, color: usize },
}

impl Coloring {
    pub fn new(assignment: Vec<usize>, color_count: usize) -> Self {
        Coloring { assignment, color_count }
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Number of distinct colours actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.color_count.max(1)];
        self.assignment.iter().filter(|&&c| c < seen.len() && !std::mem::replace(&mut seen[c], true)).count()
    }

    /// Checks every edge of `g` (and the palette, if given).
    pub fn validate(&self, g: &Graph, palette: Option<&PaletteConstraint>) -> Result<(), ColoringViolation> {
        if self.assignment.len() != g.order() {
            return Err(ColoringViolation::WrongOrder { expected: g.order(), found: self.assignment.len() });
        }
        for (v, &c) in self.assignment.iter().enumerate() {
            if c >= self.color_count {
                return Err(ColoringViolation::ColorOutOfRange { vertex: v, color: c, color_count: self.color_count });
            }
            if let Some(p) = palette {
                if !p.allows(v, c) {
                    return Err(ColoringViolation::Forbidden { vertex: v, color: c });
                }
            }
        }
        for (u, v) in g.edges() {
            if self.assignment[u] == self.assignment[v] {
                return Err(ColoringViolation::Monochromatic { u, v, color: self.assignment[u] });
            }
        }
        Ok(())
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.validate(g, None).is_ok()
    }

    /// `vertex color` lines.
    pub fn to_lines(&self) -> String {
        self.assignment.iter().enumerate().map(|(v, c)| format!("{v} {c}\n")).collect()
    }
}

/// Per-vertex sets of allowed colours out of `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaletteConstraint {
    k: usize,
    allowed: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PaletteError {
    #[error("palette of {0} colours exceeds the supported maximum of {MAX_COLORS}")]
    TooManyColors(usize),
    #[error("vertex {0} would have no allowed colour")]
    EmptyPalette(usize),
    #[error("colour {color} is outside 0..{k}")]
    ColorOutOfRange { color: usize, k: usize },
}

fn full_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

impl PaletteConstraint {
    /// Every vertex may use every colour in `0..k`.
    pub fn unrestricted(order: usize, k: usize) -> Result<Self, PaletteError> {
        if k > MAX_COLORS {
            return Err(PaletteError::TooManyColors(k));
        }
        if k == 0 && order > 0 {
            return Err(PaletteError::EmptyPalette(0));
        }
        Ok(PaletteConstraint { k, allowed: vec![full_mask(k); order] })
    }

    /// Restricts `v` to `colors`.
    pub fn restrict(&mut self, v: usize, colors: impl IntoIterator<Item = usize>) -> Result<(), PaletteError> {
        let mut mask = 0u64;
        for c in colors {
            if c >= self.k {
                return Err(PaletteError::ColorOutOfRange { color: c, k: self.k });
            }
            mask |= 1 << c;
        }
        if mask == 0 {
            return Err(PaletteError::EmptyPalette(v));
        }
        self.allowed[v] = mask;
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.allowed.len()
    }

    pub fn allows(&self, v: usize, c: usize) -> bool {
        c < self.k && self.allowed[v] >> c & 1 == 1
    }

    pub(crate) fn mask(&self, v: usize) -> u64 {
        self.allowed[v]
    }

    pub fn is_unrestricted(&self) -> bool {
        let full = full_mask(self.k);
        self.allowed.iter().all(|&m| m == full)
    }
}

/// Resource limits for one exact decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ColorBudget {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
}

impl ColorBudget {
    pub fn unlimited() -> Self {
        ColorBudget { time_limit: None, node_limit: None }
    }

    pub fn with_time(limit: Duration) -> Self {
        ColorBudget { time_limit: Some(limit), node_limit: None }
    }

    pub fn with_nodes(limit: u64) -> Self {
        ColorBudget { time_limit: None, node_limit: Some(limit) }
    }

    pub fn is_unlimited(&self) -> bool {
        self.time_limit.is_none() && self.node_limit.is_none()
    }

    pub(crate) fn start(&self) -> Limits {
        Limits { deadline: self.time_limit.map(|d| Instant::now() + d), node_limit: self.node_limit }
    }
}

/// A started budget: absolute deadline plus per-call node limit.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Limits {
    pub deadline: Option<Instant>,
    pub node_limit: Option<u64>,
}

impl Limits {
    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    /// Remaining budget as a fresh `ColorBudget`, for handing to helpers.
    pub fn remaining(&self) -> ColorBudget {
        ColorBudget {
            time_limit: self.deadline.map(|d| d.saturating_duration_since(Instant::now())),
            node_limit: self.node_limit,
        }
    }
}

/// Outcome of an exact k-colourability decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Colorable(Coloring),
    /// Proven by exhaustion.
    NotColorable,
    /// No claim either way.
    BudgetExhausted,
}

impl Decision {
    pub fn is_colorable(&self) -> bool {
        matches!(self, Decision::Colorable(_))
    }

    pub fn is_not_colorable(&self) -> bool {
        matches!(self, Decision::NotColorable)
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            Decision::Colorable(c) => Some(c),
            _ => None,
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::Colorable(c) => write!(f, "colorable ({} colours)", c.color_count()),
            Decision::NotColorable => f.write_str("not colorable"),
            Decision::BudgetExhausted => f.write_str("budget exhausted"),
        }
    }
}

/// Marker for a check that ran out of budget before reaching a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("budget exhausted before a verdict was reached")]
pub struct BudgetExhausted;
