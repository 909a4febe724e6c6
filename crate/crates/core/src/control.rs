//! Cooperative cancellation shared by the long-running solvers.
//!
//! Solvers call [`Control::check`] between candidates. The check is cheap: the
//! clock is consulted on every call, the resident set size only every few
//! thousand calls.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

const MEM_CHECK_INTERVAL: u64 = 4096;

#[derive(Debug, Clone, Default)]
pub struct Control {
    deadline: Option<Instant>,
    max_mem_mb: Option<u64>,
    cancelled: Arc<AtomicBool>,
    calls: Arc<AtomicU64>,
}

impl Control {
    /// No deadline, no memory cap.
    pub fn unbounded() -> Self {
        Self::default()
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        Self {
            deadline: Some(Instant::now() + timeout),
            ..Self::default()
        }
    }

    pub fn deadline(mut self, deadline: Option<Instant>) -> Self {
        self.deadline = deadline;
        self
    }

    pub fn max_mem_mb(mut self, cap: Option<u64>) -> Self {
        self.max_mem_mb = cap;
        self
    }

    /// Flag observed by every clone of this control.
    pub fn cancel(&self) {
        self.cancelled.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.cancelled.load(Ordering::Relaxed)
    }

    pub fn check(&self) -> Result<()> {
        if self.is_cancelled() {
            return Err(Error::Timeout);
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                return Err(Error::Timeout);
            }
        }
        if let Some(cap) = self.max_mem_mb {
            let calls = self.calls.fetch_add(1, Ordering::Relaxed);
            if calls % MEM_CHECK_INTERVAL == 0 {
                if let Some(rss) = resident_mb() {
                    if rss > cap {
                        return Err(Error::MemoryCap(cap));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Resident set size in MiB, where the platform exposes it.
fn resident_mb() -> Option<u64> {
    let statm = std::fs::read_to_string("/proc/self/statm").ok()?;
    let pages: u64 = statm.split_whitespace().nth(1)?.parse().ok()?;
    Some(pages * 4096 / (1024 * 1024))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expired_deadline_reports_timeout() {
        let ctl = Control::with_timeout(Duration::ZERO);
        assert!(matches!(ctl.check(), Err(Error::Timeout)));
    }

    #[test]
    fn cancel_is_shared_between_clones() {
        let ctl = Control::unbounded();
        let other = ctl.clone();
        assert!(ctl.check().is_ok());
        other.cancel();
        assert!(matches!(ctl.check(), Err(Error::Timeout)));
    }
}
