//! Planar geometry over any ordered field: `f32`/`f64` for layouts,
//! `Ratio<i128>` and `BigRational` where answers must be exact.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, Zero};

/// Ordered field used for coordinates.
pub trait Scalar: Clone + PartialOrd + Num + Signed + FromPrimitive + Debug {}

impl<T> Scalar for T where T: Clone + PartialOrd + Num + Signed + FromPrimitive + Debug {}

#[derive(Debug, Clone, PartialEq)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn sub(&self, o: &Point<T>) -> Point<T> {
        Point::new(self.x.clone() - o.x.clone(), self.y.clone() - o.y.clone())
    }

    /// Point at parameter `s` on the segment from `self` to `o`.
    pub fn lerp(&self, o: &Point<T>, s: &T) -> Point<T> {
        let d = o.sub(self);
        Point::new(
            self.x.clone() + d.x * s.clone(),
            self.y.clone() + d.y * s.clone(),
        )
    }
}

pub fn cross<T: Scalar>(a: &Point<T>, b: &Point<T>) -> T {
    a.x.clone() * b.y.clone() - a.y.clone() * b.x.clone()
}

/// Twice the signed area of `abc`; positive for a counter-clockwise turn.
pub fn orient<T: Scalar>(a: &Point<T>, b: &Point<T>, c: &Point<T>) -> T {
    cross(&b.sub(a), &c.sub(a))
}

fn sign<T: Scalar>(x: &T) -> Ordering {
    x.partial_cmp(&T::zero()).unwrap_or(Ordering::Equal)
}

/// Parameter `s` in `(0, 1)` along `ab` where it properly crosses `cd`
/// (interiors meet in one point, no endpoint involved), else `None`.
pub fn proper_crossing<T: Scalar>(a: &Point<T>, b: &Point<T>, c: &Point<T>, d: &Point<T>) -> Option<T> {
    let o1 = sign(&orient(a, b, c));
    let o2 = sign(&orient(a, b, d));
    let o3 = sign(&orient(c, d, a));
    let o4 = sign(&orient(c, d, b));
    if [o1, o2, o3, o4].contains(&Ordering::Equal) || o1 == o2 || o3 == o4 {
        return None;
    }
    let r = b.sub(a);
    let q = d.sub(c);
    Some(cross(&c.sub(a), &q) / cross(&r, &q))
}

/// Whether closed segments `ab` and `cd` share a point.
pub fn segments_intersect<T: Scalar>(a: &Point<T>, b: &Point<T>, c: &Point<T>, d: &Point<T>) -> bool {
    let o1 = sign(&orient(a, b, c));
    let o2 = sign(&orient(a, b, d));
    let o3 = sign(&orient(c, d, a));
    let o4 = sign(&orient(c, d, b));
    if o1 != o2 && o3 != o4 && o1 != Ordering::Equal && o2 != Ordering::Equal
        && o3 != Ordering::Equal && o4 != Ordering::Equal
    {
        return true;
    }
    (o1 == Ordering::Equal && on_segment(a, b, c))
        || (o2 == Ordering::Equal && on_segment(a, b, d))
        || (o3 == Ordering::Equal && on_segment(c, d, a))
        || (o4 == Ordering::Equal && on_segment(c, d, b))
}

/// `p` collinear with `ab` lies within the bounding box of `ab`.
fn on_segment<T: Scalar>(a: &Point<T>, b: &Point<T>, p: &Point<T>) -> bool {
    let within = |lo: &T, hi: &T, x: &T| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        lo <= x && x <= hi
    };
    within(&a.x, &b.x, &p.x) && within(&a.y, &b.y, &p.y)
}

pub fn to_exact(p: &Point<f64>) -> Point<BigRational> {
    let conv = |x: f64| BigRational::from_float(x).expect("finite coordinate");
    Point::new(conv(p.x), conv(p.y))
}

/// Sign of the orientation of three `f64` points, exact. A floating-point
/// evaluation with a forward error bound decides most cases; the rest fall
/// back to rational arithmetic on the exact binary values.
pub fn orient_sign_exact(a: &Point<f64>, b: &Point<f64>, c: &Point<f64>) -> Ordering {
    let l = (a.x - c.x) * (b.y - c.y);
    let r = (a.y - c.y) * (b.x - c.x);
    let det = l - r;
    let bound = (3.0 + 16.0 * f64::EPSILON) * f64::EPSILON * (l.abs() + r.abs());
    if det > bound {
        return Ordering::Greater;
    }
    if -det > bound {
        return Ordering::Less;
    }
    let det = orient(&to_exact(a), &to_exact(b), &to_exact(c));
    if det.is_zero() {
        Ordering::Equal
    } else if det > BigRational::from_integer(BigInt::from(0)) {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}
