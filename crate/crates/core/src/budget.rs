//! Work limits for the searches: a node count or a wall-clock allowance.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    Nodes(u64),
    Time(Duration),
}

impl Budget {
    pub fn meter(self) -> Meter {
        Meter { budget: self, spent: 0, start: Instant::now() }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::Nodes(1_000_000)
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Budget::Nodes(n) => write!(f, "{n}"),
            Budget::Time(d) => write!(f, "{}s", d.as_secs_f64()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid budget {0:?}: expected a node count or seconds such as 600s")]
pub struct BudgetParseError(String);

impl FromStr for Budget {
    type Err = BudgetParseError;

    /// `N` (nodes), `Ns` or `Nms`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BudgetParseError(s.to_string());
        let s = s.trim();
        if let Some(ms) = s.strip_suffix("ms") {
            return ms.parse().map(|v| Budget::Time(Duration::from_millis(v))).map_err(|_| bad());
        }
        if let Some(secs) = s.strip_suffix('s') {
            return secs.parse::<f64>().ok().filter(|v| v.is_finite() && *v >= 0.0).map(|v| Budget::Time(Duration::from_secs_f64(v))).ok_or_else(bad);
        }
        s.replace('_', "").parse().map(Budget::Nodes).map_err(|_| bad())
    }
}

/// Running account against a [`Budget`].
#[derive(Debug)]
pub struct Meter {
    budget: Budget,
    spent: u64,
    start: Instant,
}

impl Meter {
    /// Charges one unit of work; false once the budget is used up.
    pub fn tick(&mut self) -> bool {
        self.spent += 1;
        match self.budget {
            Budget::Nodes(n) => self.spent <= n,
            // checking the clock on every node is wasteful
            Budget::Time(d) => self.spent % 256 != 0 || self.start.elapsed() <= d,
        }
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// The budget as a number for error reports (nodes, or whole seconds).
    pub fn limit(&self) -> u64 {
        match self.budget {
            Budget::Nodes(n) => n,
            Budget::Time(d) => d.as_secs(),
        }
    }
}
