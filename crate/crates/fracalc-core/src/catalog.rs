//! Small catalog of named test functions shared by the CLI and the
//! invariant suites.

use crate::error::Result;
use crate::grid::{Grid, SampledSignal};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Catalog {
    Const,
    Linear,
    Square,
    Sin,
    ExpDecay,
}

impl Catalog {
    pub const ALL: [Catalog; 5] =
        [Catalog::Const, Catalog::Linear, Catalog::Square, Catalog::Sin, Catalog::ExpDecay];

    pub fn name(self) -> &'static str {
        match self {
            Catalog::Const => "const",
            Catalog::Linear => "linear",
            Catalog::Square => "square",
            Catalog::Sin => "sin",
            Catalog::ExpDecay => "exp_decay",
        }
    }

    pub fn from_name(name: &str) -> Option<Catalog> {
        Catalog::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            Catalog::Const => 1.0,
            Catalog::Linear => x,
            Catalog::Square => x * x,
            Catalog::Sin => libm::sin(x),
            Catalog::ExpDecay => libm::exp(-x),
        }
    }

    pub fn sample(self, grid: Grid) -> Result<SampledSignal> {
        SampledSignal::from_fn(grid, |x| self.eval(x))
    }
}
