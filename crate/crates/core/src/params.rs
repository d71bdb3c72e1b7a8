use crate::error::{InterpError, Result};
use crate::nodes::NodeSet;

/// Local polynomial degree `d` and the number `e` of extra lower-degree
/// interpolants blended in at each end. `e = 0` is the plain
/// Floater-Hormann interpolant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtParams {
    pub d: usize,
    pub e: usize,
}

impl ExtParams {
    pub const fn new(d: usize, e: usize) -> Self {
        Self { d, e }
    }

    pub const fn fh(d: usize) -> Self {
        Self { d, e: 0 }
    }

    /// Checks `0 <= d <= n` and `0 <= e <= d`.
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.d > n {
            return Err(InterpError::DegreeOutOfRange { d: self.d, n });
        }
        if self.e > self.d {
            return Err(InterpError::EndCountOutOfRange {
                e: self.e,
                d: self.d,
            });
        }
        Ok(())
    }

    pub fn validate_for(&self, nodes: &NodeSet) -> Result<()> {
        self.validate(nodes.n())
    }

    pub fn is_fh(&self) -> bool {
        self.e == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ExtParams::new(0, 0).validate(1).is_ok());
        assert!(ExtParams::new(4, 4).validate(4).is_ok());
        assert_eq!(
            ExtParams::new(9, 0).validate(4),
            Err(InterpError::DegreeOutOfRange { d: 9, n: 4 })
        );
        assert_eq!(
            ExtParams::new(4, 5).validate(10),
            Err(InterpError::EndCountOutOfRange { e: 5, d: 4 })
        );
    }
}
