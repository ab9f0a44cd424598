//! Exact feasibility machinery for intersection arrays of distance-regular graphs.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure: arrays
//! are parsed and rendered from text, derived parameters and spectra are
//! computed in exact rational arithmetic (irrational eigenvalues are kept as
//! isolating intervals of an integer polynomial), and the feasibility rules
//! produce a report with a witness for every violated condition.
//!
//! The [`graph`] module holds explicit constructions and a breadth-first
//! oracle that re-derives every parameter from an adjacency structure; it is
//! what the test suites use to cross-check the closed forms.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebraic;
pub mod array;
pub mod enumerate;
pub mod exceptions;
pub mod filter;
pub mod graph;
pub mod params;
pub mod rules;
pub mod spectra;

pub use algebraic::{Decision, Interval, Precision, Real};
pub use array::{ArrayError, IntersectionArray};
pub use enumerate::{enumerate, SearchError, SearchResult, SearchSpec, Survivor};
pub use exceptions::{Family, NamedArray};
pub use filter::{Filter, FilterError};
pub use graph::{DrgCertificate, Graph, GraphError, NotDrg};
pub use params::{derive, DerivedParams, PTable, Params};
pub use rules::{evaluate, Assumption, Overall, RuleId, RuleReport, RuleSet, RuleVerdict, Status};
pub use spectra::{Multiplicity, Spectrum};

/// Exact rational number used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Renders a rational as `num/den`, or as a bare integer when the
/// denominator is 1.
pub fn fmt_rational(q: &Rational) -> alloc::string::String {
    if q.is_integer() {
        alloc::format!("{}", q.numer())
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses the form produced by [`fmt_rational`].
pub fn parse_rational(s: &str) -> Option<Rational> {
    use num_bigint::BigInt;
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}
