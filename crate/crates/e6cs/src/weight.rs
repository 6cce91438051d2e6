//! Integer coordinate vectors for the two natural bases of the E6 weight space.
//!
//! [`Weight`] holds coordinates in the fundamental-weight basis (l1..l6); the
//! same type doubles as a z-monomial exponent vector, since the exponent of
//! `z1^e1 ... z6^e6` is the weight `e1*l1 + ... + e6*l6`. [`RootVec`] holds
//! coordinates in the simple-root basis (a1..a6).
//!
//! `Weight` orders graded-lexicographically: total sum of entries first, then
//! the entry tuple. This is the canonical term order used everywhere output
//! must be deterministic.

use std::cmp::Ordering;
use std::fmt;

pub const RANK: usize = 6;

/// Coordinates in the fundamental-weight basis; also a z-exponent vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Weight(pub [i32; RANK]);

/// Coordinates in the simple-root basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RootVec(pub [i32; RANK]);

impl Weight {
    pub const ZERO: Weight = Weight([0; RANK]);

    /// The i-th fundamental weight, 1-based.
    pub fn fundamental(i: usize) -> Weight {
        assert!((1..=RANK).contains(&i), "fundamental weight index {i} out of 1..=6");
        let mut m = [0; RANK];
        m[i - 1] = 1;
        Weight(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; RANK]
    }

    /// All coordinates non-negative, i.e. the weight is dominant. For an
    /// exponent vector this is exactly validity as a z-monomial.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn total(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        let mut m = [0; RANK];
        for i in 0..RANK {
            m[i] = self.0[i] + other.0[i];
        }
        Weight(m)
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        let mut m = [0; RANK];
        for i in 0..RANK {
            m[i] = self.0[i] - other.0[i];
        }
        Weight(m)
    }

    /// Image under the diagram automorphism exchanging nodes 1<->6 and 3<->5.
    pub fn dual(&self) -> Weight {
        let m = self.0;
        Weight([m[5], m[1], m[4], m[3], m[2], m[0]])
    }

    /// Compact digit-string label, e.g. (1,0,0,0,0,1) -> "100001".
    /// Entries above 9 are wrapped in parentheses to stay unambiguous.
    pub fn label(&self) -> String {
        self.0
            .iter()
            .map(|&m| {
                if (0..=9).contains(&m) {
                    m.to_string()
                } else {
                    format!("({m})")
                }
            })
            .collect()
    }
}

impl RootVec {
    pub const ZERO: RootVec = RootVec([0; RANK]);

    /// The i-th simple root, 1-based.
    pub fn simple(i: usize) -> RootVec {
        assert!((1..=RANK).contains(&i), "simple root index {i} out of 1..=6");
        let mut c = [0; RANK];
        c[i - 1] = 1;
        RootVec(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; RANK]
    }

    /// Sum of simple-root coefficients.
    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &RootVec) -> RootVec {
        let mut c = [0; RANK];
        for i in 0..RANK {
            c[i] = self.0[i] + other.0[i];
        }
        RootVec(c)
    }

    pub fn dual(&self) -> RootVec {
        let c = self.0;
        RootVec([c[5], c[1], c[4], c[3], c[2], c[0]])
    }

    pub fn label(&self) -> String {
        Weight(self.0).label()
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for RootVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let z2 = Weight([0, 1, 0, 0, 0, 0]);
        let z4 = Weight([0, 0, 0, 1, 0, 0]);
        let z1z6 = Weight([1, 0, 0, 0, 0, 1]);
        let z2sq = Weight([0, 2, 0, 0, 0, 0]);
        // degree separates first, then lex on the tuple
        assert!(z2 > z4);
        assert!(z1z6 > z2sq);
        assert!(z1z6 > z2);
    }

    #[test]
    fn dual_is_involution() {
        let m = Weight([1, 2, 3, 4, 5, 6]);
        assert_eq!(m.dual().dual(), m);
        assert_eq!(Weight::fundamental(1).dual(), Weight::fundamental(6));
        assert_eq!(Weight::fundamental(3).dual(), Weight::fundamental(5));
        assert_eq!(Weight::fundamental(4).dual(), Weight::fundamental(4));
    }

    #[test]
    fn labels() {
        assert_eq!(Weight([1, 0, 0, 0, 0, 1]).label(), "100001");
        assert_eq!(Weight([0, 0, 0, 12, 0, 0]).label(), "000(12)00");
    }
}
