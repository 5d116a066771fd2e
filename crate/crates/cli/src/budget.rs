use std::time::Duration;

use clap::Args;
use girthcolor::ColorBudget;

/// Default wall-clock limit for exact decisions.
const DEFAULT_LIMIT: Duration = Duration::from_secs(600);
/// Limit under `--slow`.
const SLOW_LIMIT: Duration = Duration::from_secs(4 * 3600);

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Wall-clock limit for each exact check, in seconds [default: 600].
    #[arg(long, value_name = "SECS")]
    pub time_limit: Option<f64>,
    /// Search-node limit for each exact decision.
    #[arg(long)]
    pub node_limit: Option<u64>,
    /// Raise the default time limit to four hours.
    #[arg(long)]
    pub slow: bool,
    /// Drop the default time limit entirely.
    #[arg(long, conflicts_with = "slow")]
    pub unbounded: bool,
}

impl BudgetArgs {
    pub fn budget(&self) -> ColorBudget {
        let time_limit = match (self.time_limit, self.unbounded, self.slow) {
            (Some(secs), _, _) => Some(Duration::from_secs_f64(secs.max(0.0))),
            (None, true, _) => None,
            (None, false, true) => Some(SLOW_LIMIT),
            (None, false, false) => Some(DEFAULT_LIMIT),
        };
        ColorBudget { time_limit, node_limit: self.node_limit }
    }
}
