use std::time::{Duration, Instant};

use derangement_core::Budget;

/// Wall-clock deadline, polled cooperatively by the engine.
#[derive(Debug, Clone, Copy)]
pub struct WallClock {
    deadline: Option<Instant>,
}

impl WallClock {
    pub fn unlimited() -> Self {
        WallClock { deadline: None }
    }

    pub fn from_secs(secs: Option<f64>) -> Self {
        WallClock {
            deadline: secs.map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0))),
        }
    }
}

impl Budget for WallClock {
    fn exhausted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}
