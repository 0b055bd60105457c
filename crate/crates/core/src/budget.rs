use std::time::Instant;

use crate::error::AtopError;

/// Default bound on the number of autotopisms or automorphisms enumerated.
pub const DEFAULT_CAP: usize = 1_000_000;

/// Resource limits shared by the solvers and the automorphism engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub cap: usize,
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            deadline: None,
        }
    }
}

impl Limits {
    pub fn with_cap(cap: usize) -> Self {
        Self {
            cap,
            deadline: None,
        }
    }
}

/// Polls the deadline every 1024 search nodes.
#[derive(Debug)]
pub(crate) struct Ticker {
    count: u32,
    deadline: Option<Instant>,
}

impl Ticker {
    pub(crate) fn new(limits: &Limits) -> Self {
        Self {
            count: 0,
            deadline: limits.deadline,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), AtopError> {
        self.count = self.count.wrapping_add(1);
        if self.count & 1023 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(AtopError::Timeout);
                }
            }
        }
        Ok(())
    }
}
