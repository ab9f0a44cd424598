//! Eigenvalues and multiplicities of the intersection matrix, and the
//! spectral bounds used by the rules.
//!
//! The intersection matrix is tridiagonal with positive off-diagonal
//! products, so the leading principal minors form a Sturm chain: the number
//! of sign changes of `det(T_i - xI)`, `i = 0..=D`, is the number of
//! eigenvalues below `x`. Roots are isolated by bisection on dyadic points of
//! `[-2^m, 2^m]`, which also lands exactly on every integer eigenvalue.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebraic::{Decision, IntPoly, Interval, Precision, Real};
use crate::array::IntersectionArray;
use crate::params::Params;
use crate::Rational;

/// Tridiagonal integer matrix. `upper[i] = T[i][i+1]`, `lower[i] = T[i+1][i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tridiagonal {
    diag: Vec<i64>,
    upper: Vec<i64>,
    lower: Vec<i64>,
}

impl Tridiagonal {
    /// Rows `(c_i, a_i, b_i)` of an intersection array.
    pub fn from_array(arr: &IntersectionArray) -> Tridiagonal {
        let d = arr.diameter();
        Tridiagonal {
            diag: (0..=d).map(|i| arr.a(i)).collect(),
            upper: (0..d).map(|i| i64::from(arr.b(i))).collect(),
            lower: (1..=d).map(|i| i64::from(arr.c(i))).collect(),
        }
    }

    /// Panics unless every off-diagonal product is positive.
    pub fn new(diag: Vec<i64>, upper: Vec<i64>, lower: Vec<i64>) -> Tridiagonal {
        assert!(upper.len() + 1 == diag.len() && lower.len() == upper.len());
        assert!(upper.iter().zip(&lower).all(|(u, l)| u * l > 0));
        Tridiagonal { diag, upper, lower }
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = self.diag[i];
            if i + 1 < n {
                m[i][i + 1] = self.upper[i];
                m[i + 1][i] = self.lower[i];
            }
        }
        m
    }

    /// `det(xI - T)`.
    pub fn charpoly(&self) -> IntPoly {
        let x_minus = |a: i64| vec![BigInt::from(-a), BigInt::one()];
        let mut prev: Vec<BigInt> = vec![BigInt::one()];
        let mut cur: Vec<BigInt> = x_minus(self.diag[0]);
        for i in 1..self.size() {
            let lin = x_minus(self.diag[i]);
            let mut next = vec![BigInt::zero(); cur.len() + 1];
            for (p, cp) in cur.iter().enumerate() {
                for (q, lq) in lin.iter().enumerate() {
                    next[p + q] += cp * lq;
                }
            }
            let off = BigInt::from(self.upper[i - 1] * self.lower[i - 1]);
            for (p, pp) in prev.iter().enumerate() {
                next[p] -= &off * pp;
            }
            prev = cur;
            cur = next;
        }
        IntPoly::new(cur)
    }

    /// Number of eigenvalues strictly below `x`, and whether `x` is one.
    fn count_below(&self, x: &Rational) -> (usize, bool) {
        let num = x.numer();
        let den = x.denom();
        let den2 = den * den;
        // F_i = den^i det(T_i - xI)
        let mut prev = BigInt::one();
        let mut cur = BigInt::from(self.diag[0]) * den - num;
        let mut changes = 0usize;
        let mut last_sign = prev.sign();
        let track = |v: &BigInt, changes: &mut usize, last: &mut num_bigint::Sign| {
            let s = v.sign();
            if s != num_bigint::Sign::NoSign {
                if s != *last {
                    *changes += 1;
                }
                *last = s;
            }
        };
        track(&cur, &mut changes, &mut last_sign);
        for i in 1..self.size() {
            let next = (BigInt::from(self.diag[i]) * den - num) * &cur
                - BigInt::from(self.upper[i - 1] * self.lower[i - 1]) * &den2 * &prev;
            prev = cur;
            cur = next;
            track(&cur, &mut changes, &mut last_sign);
        }
        (changes, cur.is_zero())
    }

    fn bound(&self) -> Rational {
        let n = self.size();
        let mut m: i64 = 1;
        for i in 0..n {
            let mut row = self.diag[i].abs();
            if i + 1 < n {
                row += self.upper[i].abs();
            }
            if i >= 1 {
                row += self.lower[i - 1].abs();
            }
            m = m.max(row + 1);
        }
        let mut p: i64 = 1;
        while p < m {
            p *= 2;
        }
        Rational::from_integer(p.into())
    }

    /// All eigenvalues, in descending order, isolated to width `2^-bits`.
    pub fn eigenvalues(&self, prec: Precision) -> Vec<Real> {
        let poly = self.charpoly();
        let target = prec.width();
        let two = Rational::from_integer(BigInt::from(2));
        let b = self.bound();
        let mut out: Vec<Real> = Vec::with_capacity(self.size());
        let roots_open = |lo: &Rational, hi: &Rational| -> usize {
            let (l, l_root) = self.count_below(lo);
            let (h, _) = self.count_below(hi);
            h - l - usize::from(l_root)
        };
        let mut stack = vec![(-b.clone(), b)];
        while let Some((mut lo, mut hi)) = stack.pop() {
            let count = roots_open(&lo, &hi);
            if count == 0 {
                continue;
            }
            if count >= 2 {
                let mid = (&lo + &hi) / &two;
                if self.count_below(&mid).1 {
                    out.push(Real::Exact(mid.clone()));
                }
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
                continue;
            }
            loop {
                let endpoints_clear = poly.sign_at(&lo) != Ordering::Equal && poly.sign_at(&hi) != Ordering::Equal;
                if endpoints_clear && &hi - &lo <= target {
                    out.push(Real::root_in(poly.clone(), lo, hi).expect("isolated simple root"));
                    break;
                }
                let mid = (&lo + &hi) / &two;
                if self.count_below(&mid).1 {
                    out.push(Real::Exact(mid));
                    break;
                }
                if roots_open(&lo, &mid) == 1 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
        }
        sort_descending(&mut out);
        out
    }

    /// The blocks of the principal submatrix on `indices` (sorted, distinct):
    /// deleting rows and columns of a tridiagonal matrix leaves a direct sum
    /// of contiguous tridiagonal blocks.
    pub fn principal_blocks(&self, indices: &[usize]) -> Vec<Tridiagonal> {
        let mut blocks = Vec::new();
        let mut run: Vec<usize> = Vec::new();
        let flush = |run: &mut Vec<usize>, blocks: &mut Vec<Tridiagonal>| {
            if run.is_empty() {
                return;
            }
            let first = run[0];
            let len = run.len();
            blocks.push(Tridiagonal {
                diag: self.diag[first..first + len].to_vec(),
                upper: self.upper[first..first + len - 1].to_vec(),
                lower: self.lower[first..first + len - 1].to_vec(),
            });
            run.clear();
        };
        for &i in indices {
            if run.last().is_some_and(|&l| l + 1 != i) {
                flush(&mut run, &mut blocks);
            }
            run.push(i);
        }
        flush(&mut run, &mut blocks);
        blocks
    }

    /// Eigenvalues (with repetition, descending) of a principal submatrix.
    pub fn principal_eigenvalues(&self, indices: &[usize], prec: Precision) -> Vec<Real> {
        let mut all: Vec<Real> = self
            .principal_blocks(indices)
            .iter()
            .flat_map(|blk| blk.eigenvalues(prec))
            .collect();
        sort_descending(&mut all);
        all
    }
}

fn sort_descending(v: &mut [Real]) {
    v.sort_by(|x, y| y.cmp_real(x, Precision::max()).known().unwrap_or(Ordering::Equal));
}

/// The intersection matrix as a dense integer matrix: row `i` holds
/// `c_i, a_i, b_i` on the sub-, main and superdiagonal.
pub fn intersection_matrix(arr: &IntersectionArray) -> Vec<Vec<i64>> {
    Tridiagonal::from_array(arr).to_dense()
}

/// A multiplicity, exact when the eigenvalue is rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    Exact(Rational),
    Enclosed(Interval),
}

/// How a multiplicity fares against integrality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Integrality {
    /// Exactly a positive integer.
    Integral(BigInt),
    /// The certified enclosure contains exactly this positive integer and no other.
    NearInteger { value: BigInt, width: Rational },
    /// Certainly not a positive integer.
    NotIntegral,
    /// The enclosure is too wide to tell.
    Ambiguous,
}

impl Multiplicity {
    pub fn interval(&self) -> Interval {
        match self {
            Multiplicity::Exact(q) => Interval::point(q.clone()),
            Multiplicity::Enclosed(iv) => iv.clone(),
        }
    }

    pub fn integrality(&self) -> Integrality {
        match self {
            Multiplicity::Exact(q) => {
                if q.is_integer() && q.is_positive() {
                    Integrality::Integral(q.to_integer())
                } else {
                    Integrality::NotIntegral
                }
            }
            Multiplicity::Enclosed(iv) => {
                if !iv.hi().is_positive() {
                    return Integrality::NotIntegral;
                }
                match iv.integer_range() {
                    None => Integrality::NotIntegral,
                    Some((a, b)) if a == b && a.is_positive() => Integrality::NearInteger {
                        value: a,
                        width: iv.width(),
                    },
                    Some((_, b)) if !b.is_positive() => Integrality::NotIntegral,
                    Some(_) => Integrality::Ambiguous,
                }
            }
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Exact(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Multiplicity::Exact(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Multiplicity::Enclosed(iv) => write!(f, "~{:.9}", iv.midpoint_f64()),
        }
    }
}

/// The `D + 1` distinct eigenvalues, descending, with multiplicities once
/// [`multiplicities`] has filled them in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    thetas: Vec<Real>,
    mults: Option<Vec<Multiplicity>>,
    n: Rational,
}

impl Spectrum {
    pub fn thetas(&self) -> &[Real] {
        &self.thetas
    }

    pub fn theta(&self, i: usize) -> &Real {
        &self.thetas[i]
    }

    /// Smallest eigenvalue `θ_D`.
    pub fn theta_min(&self) -> &Real {
        self.thetas.last().expect("non-empty spectrum")
    }

    pub fn mults(&self) -> Option<&[Multiplicity]> {
        self.mults.as_deref()
    }

    pub fn n(&self) -> &Rational {
        &self.n
    }
}

/// Isolates the eigenvalues of the intersection matrix (multiplicities left empty).
pub fn eigenvalues(params: &Params, prec: Precision) -> Spectrum {
    let thetas = Tridiagonal::from_array(params.array()).eigenvalues(prec);
    Spectrum {
        thetas,
        mults: None,
        n: params.n().clone(),
    }
}

/// Eigenvalues and multiplicities in one go.
pub fn spectrum(params: &Params, prec: Precision) -> Spectrum {
    let s = eigenvalues(params, prec);
    multiplicities(params, s, prec)
}

/// Fills in `m(θ) = n / Σ_j k_j u_j(θ)^2` from the standard sequence
/// `u_0 = 1, u_1 = θ/k, c_j u_{j-1} + a_j u_j + b_j u_{j+1} = θ u_j`.
///
/// Irrational eigenvalues start at width `2^-bits`; the enclosure is refined
/// (doubling the bits up to the cap) while it still contains more than one
/// integer.
pub fn multiplicities(params: &Params, mut spectrum: Spectrum, prec: Precision) -> Spectrum {
    let mults = spectrum
        .thetas
        .iter()
        .map(|theta| match theta {
            Real::Exact(t) => Multiplicity::Exact(multiplicity_exact(params, t)),
            Real::Root(_) => {
                let mut p = prec;
                loop {
                    let th = theta.refined(p);
                    if let Real::Exact(t) = th {
                        break Multiplicity::Exact(multiplicity_exact(params, &t));
                    }
                    let m = multiplicity_enclosure(params, &th.interval());
                    let settled = match &m {
                        Some(iv) => {
                            let range = iv.integer_range();
                            !matches!(range, Some((a, b)) if a != b)
                        }
                        None => false,
                    };
                    if let Some(iv) = m.as_ref().filter(|_| settled || p == Precision::max()) {
                        break Multiplicity::Enclosed(iv.clone());
                    }
                    if p == Precision::max() {
                        // Degenerate enclosure; report the whole positive line.
                        break Multiplicity::Enclosed(Interval::new(Rational::zero(), params.n().clone()));
                    }
                    p = p.doubled();
                }
            }
        })
        .collect();
    spectrum.mults = Some(mults);
    spectrum
}

/// Standard sequence `u_0..u_D` at a rational point.
pub fn standard_sequence(params: &Params, theta: &Rational) -> Vec<Rational> {
    let d = params.diameter();
    let q = |x: i64| Rational::from_integer(x.into());
    let mut u = Vec::with_capacity(d + 1);
    u.push(Rational::one());
    if d >= 1 {
        u.push(theta / q(params.k().into()));
    }
    for j in 1..d {
        let next = ((theta - q(params.a(j))) * &u[j] - q(params.c(j).into()) * &u[j - 1]) / q(params.b(j).into());
        u.push(next);
    }
    u
}

fn multiplicity_exact(params: &Params, theta: &Rational) -> Rational {
    let u = standard_sequence(params, theta);
    let norm = u
        .iter()
        .zip(params.kdist_seq())
        .fold(Rational::zero(), |acc, (uj, kj)| acc + kj * uj * uj);
    params.n() / norm
}

/// Interval version of the standard sequence.
pub fn standard_sequence_enclosure(params: &Params, theta: &Interval) -> Vec<Interval> {
    let d = params.diameter();
    let q = |x: i64| Rational::from_integer(x.into());
    let mut u = Vec::with_capacity(d + 1);
    u.push(Interval::point(Rational::one()));
    if d >= 1 {
        u.push(theta.scale(&(Rational::one() / q(params.k().into()))));
    }
    for j in 1..d {
        let t = &theta.shift(&-q(params.a(j))) * &u[j];
        let s = u[j - 1].scale(&q(params.c(j).into()));
        let next = (&t - &s).scale(&(Rational::one() / q(params.b(j).into())));
        u.push(next);
    }
    u
}

fn multiplicity_enclosure(params: &Params, theta: &Interval) -> Option<Interval> {
    let u = standard_sequence_enclosure(params, theta);
    let mut norm = Interval::point(Rational::zero());
    for (uj, kj) in u.iter().zip(params.kdist_seq()) {
        norm = &norm + &uj.square().scale(kj);
    }
    &Interval::point(params.n().clone()) / &norm
}

/// Delsarte bound `1 - k/θ_D` on clique size. `None` unless `θ_D < 0`.
///
/// For irrational `θ_D` the result is again an isolated root: substituting
/// `θ = k/(1 - y)` into the characteristic polynomial gives a polynomial in
/// `y`, and the map is increasing on `θ < 0`.
pub fn delsarte_clique_bound(params: &Params, spectrum: &Spectrum) -> Option<Real> {
    let theta = spectrum.theta_min();
    let zero = Rational::zero();
    if theta.cmp_rational(&zero) != Ordering::Less {
        return None;
    }
    let k = Rational::from_integer(params.k().into());
    let one = Rational::one();
    match theta {
        Real::Exact(t) => Some(Real::Exact(&one - &k / t)),
        Real::Root(_) => {
            let mut th = theta.clone();
            let mut p = Precision::default();
            while th.interval().hi() >= &zero {
                p = p.doubled();
                th.refine(p);
            }
            if let Real::Exact(t) = &th {
                return Some(Real::Exact(&one - &k / t));
            }
            let Real::Root(r) = &th else { unreachable!() };
            let poly = substitute_clique(r.poly(), params.k());
            let lo = &one - &k / r.lo();
            let hi = &one - &k / r.hi();
            Real::root_in(poly, lo, hi)
        }
    }
}

/// `Σ c_i k^i (1 - y)^(deg - i)`.
fn substitute_clique(p: &IntPoly, k: u32) -> IntPoly {
    let deg = p.degree().unwrap_or(0);
    let k = BigInt::from(k);
    let mut out = vec![BigInt::zero(); deg + 1];
    // powers of (1 - y)
    let mut pows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for _ in 0..deg {
        let last = pows.last().expect("seeded");
        let mut next = vec![BigInt::zero(); last.len() + 1];
        for (i, c) in last.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c;
        }
        pows.push(next);
    }
    let mut kp = BigInt::one();
    for (i, c) in p.coeffs().iter().enumerate() {
        for (j, e) in pows[deg - i].iter().enumerate() {
            out[j] += c * &kp * e;
        }
        kp *= &k;
    }
    IntPoly::new(out)
}

/// `2st/(s+t) ≤ b_1/(θ_1 + 1) + 1`, decided exactly.
///
/// For `θ_1 > -1` this is a comparison of `θ_1` with a rational threshold.
/// For `θ_1 ≤ -1` the right-hand side is at most 1 (or undefined), so the
/// bound holds only in the degenerate case `b_1 = 0`, `s = t = 1`.
pub fn kst_bound_holds(params: &Params, spectrum: &Spectrum, s: u32, t: u32) -> Decision<bool> {
    let lhs = Rational::new(BigInt::from(2 * s * t), BigInt::from(s + t));
    let theta1 = match spectrum.thetas().get(1) {
        Some(x) => x,
        None => return Decision::Known(true),
    };
    let one = Rational::one();
    let b1 = Rational::from_integer(params.b(1).into());
    match theta1.cmp_rational(&-&one) {
        Ordering::Greater => {
            if lhs <= one {
                return Decision::Known(true);
            }
            let threshold = &b1 / (&lhs - &one) - &one;
            Decision::Known(theta1.cmp_rational(&threshold) != Ordering::Greater)
        }
        Ordering::Less => Decision::Known(b1.is_zero() && lhs == one),
        Ordering::Equal => Decision::Known(false),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectraError {
    /// `t` must satisfy `3 ≤ t ≤ D + 1`.
    IndexOutOfRange { t: usize, diameter: usize },
}

impl fmt::Display for SpectraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectraError::IndexOutOfRange { t, diameter } => {
                write!(f, "t = {t} out of range for diameter {diameter} (need 3 ≤ t ≤ D + 1)")
            }
        }
    }
}

impl core::error::Error for SpectraError {}

/// Largest eigenvalue of the 3×3 block on distance layers `t-3, t-2, t-1`
/// with zero diagonal: `√(c_{t-1} b_{t-2} + c_{t-2} b_{t-3})`. Returns the
/// radicand and the root.
pub fn theta1_lower_bound(arr: &IntersectionArray, t: usize) -> Result<(BigInt, Real), SpectraError> {
    if t < 3 || t > arr.diameter() + 1 {
        return Err(SpectraError::IndexOutOfRange {
            t,
            diameter: arr.diameter(),
        });
    }
    let r = BigInt::from(arr.c(t - 1)) * BigInt::from(arr.b(t - 2))
        + BigInt::from(arr.c(t - 2)) * BigInt::from(arr.b(t - 3));
    let root = Real::sqrt_int(&r).expect("radicand is non-negative");
    Ok((r, root))
}

/// `θ_{n-m+i}(A) ≤ θ_i(B) ≤ θ_i(A)` for all `i`; both lists descending.
pub fn interlace_check(a: &[Real], b: &[Real], cap: Precision) -> Decision<bool> {
    let n = a.len();
    let m = b.len();
    if m > n {
        return Decision::Known(false);
    }
    let mut undecided = false;
    for i in 0..m {
        for (lower, upper) in [(&a[n - m + i], &b[i]), (&b[i], &a[i])] {
            match lower.cmp_real(upper, cap) {
                Decision::Known(Ordering::Greater) => return Decision::Known(false),
                Decision::Known(_) => {}
                Decision::Undecided => undecided = true,
            }
        }
    }
    if undecided {
        Decision::Undecided
    } else {
        Decision::Known(true)
    }
}
