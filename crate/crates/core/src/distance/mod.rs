//! Distance estimation with evidence, theoretical bounds and logical operators.

use std::fmt;

use serde::{Serialize, Serializer};

pub mod bounds;
pub mod logical;
pub mod quantum;
pub mod search;

pub use quantum::{
    css_distance, css_x_problem, css_z_problem, logical_complement, noncss_distance, noncss_problem,
    DistanceOptions, DistanceResult, SideResult,
};
pub use bounds::{
    classical_inputs, f4_dual_distance_bound, theoretical_bounds, BoundsReport, ClassicalInputs, DualBound,
};
pub use logical::{logical_operators, noncss_logical_operators, LogicalOperators, NonCssLogicals};
pub use search::{LogicalSearch, SearchConfig, SearchOutcome, WeightKind};

/// A distance value; `Infinite` is the convention for codes without
/// logical operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(usize),
    Infinite,
}

impl Dist {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Dist::Infinite
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => f.write_str("inf"),
        }
    }
}

/// Closed interval of distances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: Dist,
    pub hi: Dist,
}

impl Interval {
    pub fn new(lo: Dist, hi: Dist) -> Self {
        Self { lo, hi }
    }

    pub fn exact(d: Dist) -> Self {
        Self { lo: d, hi: d }
    }

    pub fn contains(&self, d: Dist) -> bool {
        self.lo <= d && d <= self.hi
    }

    /// Interval of `min` over values known to lie in each interval.
    pub fn min_of(items: impl IntoIterator<Item = Interval>) -> Interval {
        items.into_iter().fold(Interval::exact(Dist::Infinite), |acc, i| Interval {
            lo: acc.lo.min(i.lo),
            hi: acc.hi.min(i.hi),
        })
    }
}

impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dist::Finite(d) => s.serialize_u64(*d as u64),
            Dist::Infinite => s.serialize_str("inf"),
        }
    }
}
