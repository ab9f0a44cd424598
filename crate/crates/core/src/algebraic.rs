//! Exact real numbers: rationals, and real roots of integer polynomials held
//! as isolating intervals with dyadic endpoints.
//!
//! Comparisons between two of these are decided exactly. A rational against
//! a root is settled by one sign evaluation; two roots are separated by
//! bisection, with a polynomial gcd deciding equality when the intervals keep
//! overlapping. The refinement cap only matters if neither happens.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

/// Refinement cap for comparisons and interval certificates.
pub const MAX_PRECISION_BITS: u32 = 200;

/// Target width `2^-bits` for isolating intervals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    bits: u32,
}

impl Precision {
    pub const DEFAULT_BITS: u32 = 40;

    /// Clamped to `1..=200`.
    pub fn new(bits: u32) -> Precision {
        Precision {
            bits: bits.clamp(1, MAX_PRECISION_BITS),
        }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// `2^-bits`.
    pub fn width(self) -> Rational {
        Rational::new(BigInt::one(), BigInt::one() << self.bits as usize)
    }

    pub fn max() -> Precision {
        Precision::new(MAX_PRECISION_BITS)
    }

    /// Doubles the bit count, saturating at the cap.
    pub fn doubled(self) -> Precision {
        Precision::new(self.bits.saturating_mul(2))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::new(Self::DEFAULT_BITS)
    }
}

/// Outcome of a comparison that may run out of precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision<T> {
    Known(T),
    Undecided,
}

impl<T> Decision<T> {
    pub fn known(self) -> Option<T> {
        match self {
            Decision::Known(t) => Some(t),
            Decision::Undecided => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Decision<U> {
        match self {
            Decision::Known(t) => Decision::Known(f(t)),
            Decision::Undecided => Decision::Undecided,
        }
    }
}

/// Polynomial with integer coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sign of `p(x)`, computed exactly on the numerator of `p(x) · den^deg`.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        let Some(deg) = self.degree() else {
            return Ordering::Equal;
        };
        let num = x.numer();
        let den = x.denom();
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // Horner from the top: acc = Σ c_i num^i den^(deg-i).
        for (idx, c) in self.coeffs.iter().enumerate().rev() {
            if idx == deg {
                acc = c.clone();
            } else {
                den_pow *= den;
                acc = acc * num + c * &den_pow;
            }
        }
        acc.sign().cmp_zero()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Monic-free gcd over the rationals, returned as a primitive integer
    /// polynomial with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a: Vec<Rational> = self.coeffs.iter().cloned().map(Rational::from_integer).collect();
        let mut b: Vec<Rational> = other.coeffs.iter().cloned().map(Rational::from_integer).collect();
        while !b.is_empty() {
            let r = rem(&a, &b);
            a = b;
            b = r;
        }
        primitive(&a)
    }
}

trait CmpZero {
    fn cmp_zero(self) -> Ordering;
}

impl CmpZero for Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r: Vec<Rational> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = r[r.len() - 1].clone() / lead;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &factor * bc;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn primitive(a: &[Rational]) -> IntPoly {
    if a.is_empty() {
        return IntPoly::new(Vec::new());
    }
    let lcm = a.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = a
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    IntPoly::new(ints.into_iter().map(|c| c / &g * &sign).collect())
}

/// A simple real root of `poly` strictly inside `(lo, hi)`; `poly` is
/// nonzero with opposite signs at the two endpoints and has no other root
/// in the interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    poly: IntPoly,
    lo: Rational,
    hi: Rational,
    lo_sign: Ordering,
}

impl IsolatedRoot {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// Halves the interval. Returns the root if the midpoint hits it.
    fn bisect(&mut self) -> Option<Rational> {
        let mid = (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2));
        match self.poly.sign_at(&mid) {
            Ordering::Equal => Some(mid),
            s if s == self.lo_sign => {
                self.lo = mid;
                None
            }
            _ => {
                self.hi = mid;
                None
            }
        }
    }

    fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Position of the root relative to `x`, exactly.
    fn cmp_rational(&self, x: &Rational) -> Ordering {
        if x <= &self.lo {
            return Ordering::Greater;
        }
        if x >= &self.hi {
            return Ordering::Less;
        }
        match self.poly.sign_at(x) {
            Ordering::Equal => Ordering::Equal,
            // Same sign as at `lo`: no sign change on (lo, x], so the root is above x.
            s if s == self.lo_sign => Ordering::Greater,
            _ => Ordering::Less,
        }
    }
}

/// An exact real number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Real {
    Exact(Rational),
    Root(IsolatedRoot),
}

impl Real {
    pub fn from_int(x: i64) -> Real {
        Real::Exact(Rational::from_integer(x.into()))
    }

    /// Wraps the unique root of `poly` in `(lo, hi)`. Returns `None` if the
    /// endpoint signs do not bracket a root.
    pub fn root_in(poly: IntPoly, lo: Rational, hi: Rational) -> Option<Real> {
        let sl = poly.sign_at(&lo);
        let sh = poly.sign_at(&hi);
        if sl == Ordering::Equal {
            return Some(Real::Exact(lo));
        }
        if sh == Ordering::Equal {
            return Some(Real::Exact(hi));
        }
        if sl == sh || lo >= hi {
            return None;
        }
        Some(Real::Root(IsolatedRoot {
            poly,
            lo,
            hi,
            lo_sign: sl,
        }))
    }

    /// Non-negative square root of a non-negative integer; exact when the
    /// radicand is a perfect square.
    pub fn sqrt_int(r: &BigInt) -> Option<Real> {
        if r.is_negative() {
            return None;
        }
        let s = r.sqrt();
        if &(&s * &s) == r {
            return Some(Real::Exact(Rational::from_integer(s)));
        }
        let poly = IntPoly::new(vec![-r.clone(), BigInt::zero(), BigInt::one()]);
        Real::root_in(poly, Rational::from_integer(s.clone()), Rational::from_integer(s + 1))
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Real::Exact(q) => Some(q),
            Real::Root(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Exact(_))
    }

    /// Refines in place until the interval width is at most `2^-bits`.
    pub fn refine(&mut self, prec: Precision) {
        let target = prec.width();
        loop {
            let Real::Root(r) = self else { return };
            if r.width() <= target {
                return;
            }
            if let Some(q) = r.bisect() {
                *self = Real::Exact(q);
                return;
            }
        }
    }

    pub fn refined(&self, prec: Precision) -> Real {
        let mut r = self.clone();
        r.refine(prec);
        r
    }

    /// Enclosing interval at the current refinement.
    pub fn interval(&self) -> Interval {
        match self {
            Real::Exact(q) => Interval::point(q.clone()),
            Real::Root(r) => Interval::new(r.lo.clone(), r.hi.clone()),
        }
    }

    /// Exact comparison with a rational; never undecided.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        match self {
            Real::Exact(q) => q.cmp(x),
            Real::Root(r) => r.cmp_rational(x),
        }
    }

    /// Compares two reals, refining up to `cap`. Equal irrational roots are
    /// recognised through the gcd of their defining polynomials.
    pub fn cmp_real(&self, other: &Real, cap: Precision) -> Decision<Ordering> {
        let (x, y) = match (self, other) {
            (Real::Exact(p), Real::Exact(q)) => return Decision::Known(p.cmp(q)),
            (Real::Exact(p), Real::Root(r)) => return Decision::Known(r.cmp_rational(p).reverse()),
            (Real::Root(r), Real::Exact(q)) => return Decision::Known(r.cmp_rational(q)),
            (Real::Root(x), Real::Root(y)) => (x, y),
        };
        if x.hi <= y.lo {
            return Decision::Known(Ordering::Less);
        }
        if y.hi <= x.lo {
            return Decision::Known(Ordering::Greater);
        }
        let g = x.poly.gcd(&y.poly);
        let mut x = x.clone();
        let mut y = y.clone();
        let limit = cap.width();
        loop {
            if x.hi <= y.lo {
                return Decision::Known(Ordering::Less);
            }
            if y.hi <= x.lo {
                return Decision::Known(Ordering::Greater);
            }
            let lo = core::cmp::max(&x.lo, &y.lo).clone();
            let hi = core::cmp::min(&x.hi, &y.hi).clone();
            // A root outside the overlap is below `lo` (then `lo` is the other
            // interval's left end) or above `hi` (the other's right end).
            if x.cmp_rational(&lo) != Ordering::Greater {
                return Decision::Known(Ordering::Less);
            }
            if x.cmp_rational(&hi) != Ordering::Less {
                return Decision::Known(Ordering::Greater);
            }
            if y.cmp_rational(&lo) != Ordering::Greater {
                return Decision::Known(Ordering::Greater);
            }
            if y.cmp_rational(&hi) != Ordering::Less {
                return Decision::Known(Ordering::Less);
            }
            // Both roots lie in (lo, hi); a root of the gcd there is a shared root.
            if g.degree().unwrap_or(0) >= 1 {
                let sl = g.sign_at(&lo);
                let sh = g.sign_at(&hi);
                if sl != Ordering::Equal && sh != Ordering::Equal && sl != sh {
                    return Decision::Known(Ordering::Equal);
                }
            }
            if x.width() <= limit && y.width() <= limit {
                return Decision::Undecided;
            }
            if let Some(q) = x.bisect() {
                return Decision::Known(y.cmp_rational(&q).reverse());
            }
            if let Some(q) = y.bisect() {
                return Decision::Known(x.cmp_rational(&q));
            }
        }
    }

    /// Midpoint approximation after refining to `2^-60`.
    pub fn to_f64(&self) -> f64 {
        self.refined(Precision::new(60)).interval().midpoint_f64()
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Real::Exact(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Real::Root(_) => write!(f, "~{:.12}", self.to_f64()),
        }
    }
}

/// Closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Interval {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(q: Rational) -> Interval {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    /// Integers in the interval, as `(first, last)`; `None` when empty.
    pub fn integer_range(&self) -> Option<(BigInt, BigInt)> {
        let first = self.lo.ceil().to_integer();
        let last = self.hi.floor().to_integer();
        (first <= last).then_some((first, last))
    }

    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval::new(self.hi.recip(), self.lo.recip()))
    }

    pub fn square(&self) -> Interval {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.contains_zero() {
            Interval::new(Rational::zero(), core::cmp::max(a, b))
        } else if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }

    pub fn scale(&self, q: &Rational) -> Interval {
        let a = &self.lo * q;
        let b = &self.hi * q;
        if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }

    pub fn shift(&self, q: &Rational) -> Interval {
        Interval::new(&self.lo + q, &self.hi + q)
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2));
        rational_to_f64(&mid)
    }
}

/// Lossy conversion for display and numeric cross-checks.
pub fn rational_to_f64(q: &Rational) -> f64 {
    let (n, d) = (q.numer(), q.denom());
    let shift = d.bits().saturating_sub(60).max(n.bits().saturating_sub(60));
    let n = n >> shift as usize;
    let d = d >> shift as usize;
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if b != 0.0 => a / b,
        _ => 0.0,
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().cloned().unwrap_or_default();
        let hi = products.iter().max().cloned().unwrap_or_default();
        Interval::new(lo, hi)
    }
}

impl Div for &Interval {
    type Output = Option<Interval>;
    fn div(self, rhs: &Interval) -> Option<Interval> {
        rhs.recip().map(|r| self * &r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn sign_and_eval_agree() {
        let p = poly(&[-2, 0, 1]);
        for x in [q(-3, 2), q(7, 5), q(3, 2), q(0, 1)] {
            let v = p.eval(&x);
            assert_eq!(p.sign_at(&x), v.cmp(&Rational::zero()));
        }
    }

    #[test]
    fn gcd_finds_common_factor() {
        // (x^2 - 2)(x - 1) and (x^2 - 2)(x + 3)
        let a = poly(&[2, -2, -1, 1]);
        let b = poly(&[-6, -2, 3, 1]);
        assert_eq!(a.gcd(&b), poly(&[-2, 0, 1]));
        assert_eq!(poly(&[-1, 1]).gcd(&poly(&[1, 1])), poly(&[1]));
    }

    #[test]
    fn sqrt_exact_and_irrational() {
        assert_eq!(Real::sqrt_int(&BigInt::from(16)).unwrap(), Real::from_int(4));
        let r = Real::sqrt_int(&BigInt::from(19)).unwrap().refined(Precision::new(40));
        let iv = r.interval();
        assert!(iv.width() <= Precision::new(40).width());
        assert!(iv.lo() * iv.lo() < q(19, 1) && iv.hi() * iv.hi() > q(19, 1));
    }

    #[test]
    fn cmp_rational_is_exact() {
        let r = Real::sqrt_int(&BigInt::from(8)).unwrap();
        assert_eq!(r.cmp_rational(&q(2828, 1000)), Ordering::Greater);
        assert_eq!(r.cmp_rational(&q(2829, 1000)), Ordering::Less);
        assert_eq!(r.cmp_rational(&q(3, 1)), Ordering::Less);
    }

    #[test]
    fn equal_roots_of_different_polynomials() {
        // √2 as a root of x^2 - 2 and of x^4 - 4 (= (x^2-2)(x^2+2)).
        let a = Real::root_in(poly(&[-2, 0, 1]), q(1, 1), q(2, 1)).unwrap();
        let b = Real::root_in(poly(&[-4, 0, 0, 0, 1]), q(5, 4), q(3, 2)).unwrap();
        assert_eq!(a.cmp_real(&b, Precision::max()), Decision::Known(Ordering::Equal));
        let c = Real::sqrt_int(&BigInt::from(3)).unwrap();
        assert_eq!(a.cmp_real(&c, Precision::max()), Decision::Known(Ordering::Less));
        assert_eq!(c.cmp_real(&a, Precision::max()), Decision::Known(Ordering::Greater));
    }

    #[test]
    fn close_distinct_roots_are_separated() {
        // √2 vs 1.4142135623731 (root of 10^13 x - 14142135623731).
        let a = Real::sqrt_int(&BigInt::from(2)).unwrap();
        let b = Real::root_in(poly(&[-14142135623731, 10_000_000_000_000]), q(1, 1), q(2, 1)).unwrap();
        assert_eq!(a.cmp_real(&b, Precision::max()), Decision::Known(Ordering::Less));
        // With a tiny cap and no shared factor the comparison gives up honestly.
        assert_eq!(a.cmp_real(&b, Precision::new(8)), Decision::Undecided);
    }

    #[test]
    fn interval_arithmetic_encloses() {
        let x = Interval::new(q(-1, 2), q(3, 1));
        let y = Interval::new(q(2, 1), q(5, 2));
        let p = &x * &y;
        assert_eq!(p, Interval::new(q(-5, 4), q(15, 2)));
        assert_eq!(x.square(), Interval::new(q(0, 1), q(9, 1)));
        assert_eq!((&x / &y).unwrap(), Interval::new(q(-1, 4), q(3, 2)));
        assert!((&y / &x).is_none());
        assert_eq!(
            Interval::new(q(1, 3), q(7, 3)).integer_range(),
            Some((1.into(), 2.into()))
        );
        assert_eq!(Interval::new(q(1, 3), q(2, 3)).integer_range(), None);
    }
}
