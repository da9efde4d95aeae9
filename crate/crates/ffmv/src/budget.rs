//! Enumeration budgets. Every operation that walks all of M_n or builds a
//! unit group checks its size against these caps first, so feasibility is
//! auditable before any work starts.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Cap on q^n for full enumerations of M_n.
    pub max_qn: u64,
    /// Cap on q^l * phi(M) for unit-group construction.
    pub max_group: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_qn: 10_000_000, max_group: 100_000 }
    }
}

impl Budget {
    /// Apply overrides from the FFMV_BUDGET environment variable, a
    /// comma-separated list like "max_qn=20000000,max_group=200000".
    pub fn from_env() -> Budget {
        let mut b = Budget::default();
        if let Ok(s) = std::env::var("FFMV_BUDGET") {
            b.apply_overrides(&s);
        }
        b
    }

    pub fn apply_overrides(&mut self, s: &str) {
        for part in s.split(',') {
            let part = part.trim();
            if let Some((key, val)) = part.split_once('=') {
                if let Ok(v) = val.trim().parse::<u64>() {
                    match key.trim() {
                        "max_qn" => self.max_qn = v,
                        "max_group" => self.max_group = v,
                        _ => {}
                    }
                }
            }
        }
    }

    pub fn check_enumeration(&self, q: u64, n: usize) -> Result<u64> {
        let size = q
            .checked_pow(n as u32)
            .ok_or(Error::BudgetExceeded { size: u64::MAX, budget: self.max_qn })?;
        if size > self.max_qn {
            return Err(Error::BudgetExceeded { size, budget: self.max_qn });
        }
        Ok(size)
    }

    pub fn check_group(&self, order: u64) -> Result<()> {
        if order > self.max_group {
            return Err(Error::GroupTooLarge { order, budget: self.max_group });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_caps() {
        let b = Budget::default();
        assert!(b.check_enumeration(2, 23).is_ok());
        assert!(matches!(b.check_enumeration(10, 8), Err(Error::BudgetExceeded { .. })));
        assert!(b.check_group(100_000).is_ok());
        assert!(b.check_group(100_001).is_err());
    }

    #[test]
    fn overrides_parse() {
        let mut b = Budget::default();
        b.apply_overrides("max_qn=123, max_group=45");
        assert_eq!(b, Budget { max_qn: 123, max_group: 45 });
    }
}
