//! Integral weights in Chevalley coordinates.
//!
//! A [`Weight`] stores its values on the simple coroots `h_i` in index
//! order, plus the value on the grading element `d`. Finite-type weights
//! carry `d = 0` and one entry per node of `I`; affine weights carry one
//! entry per node of `Î = {0} ∪ I`, node 0 first.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub h: Vec<i64>,
    #[serde(default)]
    pub d: i64,
}

impl Weight {
    pub fn new(h: Vec<i64>, d: i64) -> Self {
        Self { h, d }
    }

    /// A finite-type weight (grade zero).
    pub fn classical(h: Vec<i64>) -> Self {
        Self { h, d: 0 }
    }

    pub fn zero(len: usize) -> Self {
        Self { h: vec![0; len], d: 0 }
    }

    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.d == 0 && self.h.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.h.iter().all(|&x| x >= 0)
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: i64, other: &Weight) -> Weight {
        debug_assert_eq!(self.h.len(), other.h.len());
        Weight {
            h: self.h.iter().zip(&other.h).map(|(a, b)| a + k * b).collect(),
            d: self.d + k * other.d,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(h:[")?;
        for (k, x) in self.h.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "],d:{})", self.d)
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.add_scaled(1, rhs)
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.add_scaled(-1, rhs)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.h.iter_mut().zip(&rhs.h) {
            *a += b;
        }
        self.d += rhs.d;
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.h.iter_mut().zip(&rhs.h) {
            *a -= b;
        }
        self.d -= rhs.d;
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            h: self.h.iter().map(|x| -x).collect(),
            d: -self.d,
        }
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight {
            h: rhs.h.iter().map(|x| self * x).collect(),
            d: self * rhs.d,
        }
    }
}

/// A word in the simple reflections, read as the product
/// `s_{i_1} s_{i_2} ... s_{i_n}` acting with the last letter first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<usize>> for WeylWord {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serializes_as_h_and_d() {
        let w = Weight::new(vec![1, 0], 1);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"h":[1,0],"d":1}"#);
        let back: Weight = serde_json::from_str(r#"{"h":[1,0]}"#).unwrap();
        assert_eq!(back, Weight::new(vec![1, 0], 0));
    }

    #[test]
    fn arithmetic() {
        let a = Weight::new(vec![2, -1], 0);
        let b = Weight::new(vec![-2, 2], 1);
        assert_eq!(&a + &b, Weight::new(vec![0, 1], 1));
        assert_eq!(&a - &b, Weight::new(vec![4, -3], -1));
        assert_eq!(a.add_scaled(2, &b), Weight::new(vec![-2, 3], 2));
        assert_eq!(-&b, Weight::new(vec![2, -2], -1));
        assert_eq!(3 * &b, Weight::new(vec![-6, 6], 3));
    }
}
