//! Scalar traits for the generic series and matrix code.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{Num, Signed};

/// A commutative ring with exact arithmetic: machine integers, big integers
/// or rationals.
pub trait Ring: Clone + Num + Signed + Debug + Display {}

impl<T> Ring for T where T: Clone + Num + Signed + Debug + Display {}

/// Marker for rings in which every nonzero element is invertible.
pub trait Field: Ring {}

impl<T> Field for num_rational::Ratio<T> where T: Clone + Integer + Signed + Debug + Display {}

/// Euclidean rings usable by the Smith normal form.
pub trait EuclideanRing: Ring + Integer {}

impl<T> EuclideanRing for T where T: Ring + Integer {}
