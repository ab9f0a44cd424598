//! Intersection arrays `{b_0,...,b_{D-1}; c_1,...,c_D}` and their text form.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

/// An intersection array of diameter `D`.
///
/// Entries are stored as given; the only structural invariants enforced at
/// construction are the ones that make the array well formed: `D ≥ 1`,
/// `b_0 = k ≥ 2`, `c_1 = 1` and every entry positive. Everything else
/// (monotonicity, `a_i ≥ 0`, integrality of `k_i`) is a feasibility question
/// and is left to the rule engine.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntersectionArray {
    b: Vec<u32>,
    c: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrayError {
    /// The text does not have the `{...;...}` shape; `token` is the part that failed.
    Syntax { token: String },
    /// An entry is not a positive integer.
    NonPositive { token: String },
    /// `c_1` must be 1.
    FirstCNotOne { token: String },
    /// `b` and `c` must both have `D` entries.
    LengthMismatch { b_len: usize, c_len: usize },
    /// `b_0 = k` must be at least 2.
    ValencyTooSmall { token: String },
}

impl fmt::Display for ArrayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrayError::Syntax { token } => write!(f, "malformed intersection array near `{token}`"),
            ArrayError::NonPositive { token } => {
                write!(f, "entry `{token}` is not a positive integer")
            }
            ArrayError::FirstCNotOne { token } => write!(f, "c_1 must be 1, found `{token}`"),
            ArrayError::LengthMismatch { b_len, c_len } => {
                write!(f, "b has {b_len} entries but c has {c_len}; both must have D entries")
            }
            ArrayError::ValencyTooSmall { token } => {
                write!(f, "valency b_0 = `{token}` must be at least 2")
            }
        }
    }
}

impl core::error::Error for ArrayError {}

impl IntersectionArray {
    /// Builds an array from `b_0..b_{D-1}` and `c_1..c_D`.
    pub fn new(b: Vec<u32>, c: Vec<u32>) -> Result<Self, ArrayError> {
        if b.len() != c.len() || b.is_empty() {
            return Err(ArrayError::LengthMismatch {
                b_len: b.len(),
                c_len: c.len(),
            });
        }
        if let Some(x) = b.iter().chain(c.iter()).find(|&&x| x == 0) {
            return Err(ArrayError::NonPositive { token: x.to_string() });
        }
        if b[0] < 2 {
            return Err(ArrayError::ValencyTooSmall {
                token: b[0].to_string(),
            });
        }
        if c[0] != 1 {
            return Err(ArrayError::FirstCNotOne {
                token: c[0].to_string(),
            });
        }
        Ok(IntersectionArray { b, c })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// Valency `k = b_0`.
    pub fn k(&self) -> u32 {
        self.b[0]
    }

    /// `b_i` for `0 ≤ i ≤ D`, with `b_D = 0`.
    pub fn b(&self, i: usize) -> u32 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `0 ≤ i ≤ D`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.c.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// `a_i = k - b_i - c_i`; may be negative for infeasible arrays.
    pub fn a(&self, i: usize) -> i64 {
        i64::from(self.k()) - i64::from(self.b(i)) - i64::from(self.c(i))
    }

    /// `b_0..b_{D-1}`.
    pub fn b_seq(&self) -> &[u32] {
        &self.b
    }

    /// `c_1..c_D`.
    pub fn c_seq(&self) -> &[u32] {
        &self.c
    }
}

impl Ord for IntersectionArray {
    fn cmp(&self, other: &Self) -> Ordering {
        self.diameter()
            .cmp(&other.diameter())
            .then_with(|| self.b.cmp(&other.b))
            .then_with(|| self.c.cmp(&other.c))
    }
}

impl PartialOrd for IntersectionArray {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        write_list(f, &self.b)?;
        f.write_str(";")?;
        write_list(f, &self.c)?;
        f.write_str("}")
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl FromStr for IntersectionArray {
    type Err = ArrayError;

    fn from_str(text: &str) -> Result<Self, ArrayError> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| ArrayError::Syntax { token: trimmed.into() })?;
        let (bs, cs) = inner
            .split_once(';')
            .ok_or_else(|| ArrayError::Syntax { token: inner.into() })?;
        if cs.contains(';') {
            return Err(ArrayError::Syntax { token: cs.into() });
        }
        let b = parse_list(bs)?;
        let c = parse_list(cs)?;
        IntersectionArray::new(b, c)
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>, ArrayError> {
    s.split(',')
        .map(|tok| {
            let t = tok.trim();
            if t.is_empty() || !t.bytes().all(|ch| ch.is_ascii_digit() || ch == b'-' || ch == b'+') {
                return Err(ArrayError::Syntax { token: t.into() });
            }
            let v: i64 = t.parse().map_err(|_| ArrayError::Syntax { token: t.into() })?;
            if v <= 0 {
                return Err(ArrayError::NonPositive { token: t.into() });
            }
            u32::try_from(v).map_err(|_| ArrayError::Syntax { token: t.into() })
        })
        .collect()
}

/// Parses the brace notation, e.g. `"{6,5,4,3,2,1;1,2,3,4,5,6}"`.
pub fn parse_array(text: &str) -> Result<IntersectionArray, ArrayError> {
    text.parse()
}

/// Canonical rendering: brace notation without spaces.
pub fn render_array(arr: &IntersectionArray) -> String {
    arr.to_string()
}
