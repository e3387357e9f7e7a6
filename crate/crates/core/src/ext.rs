//! Integers extended with saturating +/-infinity.
//!
//! Degree and edge-count bounds admit unbounded entries, and the
//! subpartition maximum is -infinity when no subpartition with the requested
//! number of parts exists. All other arithmetic in the crate is exact `i64`.

use core::fmt;
use core::ops::Add;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Ext {
    NegInf,
    Fin(i64),
    PosInf,
}

impl Ext {
    pub fn finite(self) -> Option<i64> {
        match self {
            Ext::Fin(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Ext::Fin(_))
    }

    /// Clamp into `[lo, hi]`, turning infinities into the nearest bound.
    pub fn clamp_finite(self, lo: i64, hi: i64) -> i64 {
        match self {
            Ext::NegInf => lo,
            Ext::PosInf => hi,
            Ext::Fin(v) => v.clamp(lo, hi),
        }
    }
}

impl Add for Ext {
    type Output = Ext;

    fn add(self, rhs: Ext) -> Ext {
        match (self, rhs) {
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a + b),
            (Ext::NegInf, Ext::PosInf) | (Ext::PosInf, Ext::NegInf) => {
                panic!("Ext: adding opposite infinities")
            }
            (Ext::NegInf, _) | (_, Ext::NegInf) => Ext::NegInf,
            (Ext::PosInf, _) | (_, Ext::PosInf) => Ext::PosInf,
        }
    }
}

impl Add<i64> for Ext {
    type Output = Ext;

    fn add(self, rhs: i64) -> Ext {
        self + Ext::Fin(rhs)
    }
}

impl From<i64> for Ext {
    fn from(v: i64) -> Ext {
        Ext::Fin(v)
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::NegInf => write!(f, "-inf"),
            Ext::PosInf => write!(f, "+inf"),
            Ext::Fin(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::Ext;

    #[test]
    fn ordering_puts_infinities_at_the_ends() {
        assert!(Ext::NegInf < Ext::Fin(i64::MIN));
        assert!(Ext::Fin(i64::MAX) < Ext::PosInf);
        assert!(Ext::Fin(-3) < Ext::Fin(4));
    }

    #[test]
    fn saturating_addition() {
        assert_eq!(Ext::PosInf + Ext::Fin(5), Ext::PosInf);
        assert_eq!(Ext::NegInf + 7, Ext::NegInf);
        assert_eq!(Ext::Fin(2) + Ext::Fin(3), Ext::Fin(5));
    }
}
