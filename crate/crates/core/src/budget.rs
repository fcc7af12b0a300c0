//! Per-thread step and wall-clock limits for the exhaustive searches.
//!
//! Heavy loops call [`tick`]; outside [`with_limits`] every tick succeeds.

use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default)]
pub struct Limits {
    pub max_steps: Option<u64>,
    pub timeout: Option<Duration>,
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits::default()
    }

    pub fn timeout(d: Duration) -> Self {
        Limits {
            max_steps: None,
            timeout: Some(d),
        }
    }
}

#[derive(Clone, Copy)]
struct State {
    steps: u64,
    max_steps: u64,
    deadline: Option<Instant>,
}

thread_local! {
    static STATE: Cell<Option<State>> = const { Cell::new(None) };
}

const CLOCK_EVERY: u64 = 1024;

/// Run `f` with `limits` installed on the current thread. Nested calls keep
/// the tighter of the two limits.
pub fn with_limits<T>(limits: Limits, f: impl FnOnce() -> T) -> T {
    let outer = STATE.with(|s| s.get());
    let mut state = State {
        steps: 0,
        max_steps: limits.max_steps.unwrap_or(u64::MAX),
        deadline: limits.timeout.map(|d| Instant::now() + d),
    };
    if let Some(o) = outer {
        state.max_steps = state.max_steps.min(o.max_steps.saturating_sub(o.steps));
        state.deadline = match (state.deadline, o.deadline) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    STATE.with(|s| s.set(Some(state)));
    let out = f();
    STATE.with(|s| {
        let inner = s.get();
        let restored = outer.map(|mut o| {
            o.steps += inner.map_or(0, |i| i.steps);
            o
        });
        s.set(restored);
    });
    out
}

/// Account one unit of work.
#[inline]
pub fn tick() -> Result<()> {
    STATE.with(|s| match s.get() {
        None => Ok(()),
        Some(mut st) => {
            st.steps += 1;
            s.set(Some(st));
            if st.steps > st.max_steps {
                return Err(Error::BudgetExceeded);
            }
            if st.steps % CLOCK_EVERY == 0 {
                if let Some(d) = st.deadline {
                    if Instant::now() > d {
                        return Err(Error::BudgetExceeded);
                    }
                }
            }
            Ok(())
        }
    })
}
