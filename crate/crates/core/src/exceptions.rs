//! Named families and sporadic arrays that the classification statements
//! single out.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::array::IntersectionArray;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Cube,
    Hadamard,
    Crown,
    Taylor,
    Sporadic,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Cube => "cube",
            Family::Hadamard => "hadamard",
            Family::Crown => "crown",
            Family::Taylor => "taylor",
            Family::Sporadic => "sporadic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedArray {
    pub name: String,
    pub family: Family,
    pub array: IntersectionArray,
    pub provenance: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogError {
    UnknownName(String),
    /// A family generator was called outside its parameter range.
    BadParameter {
        family: Family,
        value: u32,
    },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownName(n) => write!(f, "unknown catalog name `{n}`"),
            CatalogError::BadParameter { family, value } => {
                write!(f, "parameter {value} is out of range for the {family} family")
            }
        }
    }
}

impl core::error::Error for CatalogError {}

fn arr(b: Vec<u32>, c: Vec<u32>) -> IntersectionArray {
    IntersectionArray::new(b, c).expect("catalog arrays are well formed")
}

/// `{D, D-1, ..., 1; 1, 2, ..., D}`, `D ≥ 2`.
pub fn cube_array(d: u32) -> Result<IntersectionArray, CatalogError> {
    if d < 2 {
        return Err(CatalogError::BadParameter {
            family: Family::Cube,
            value: d,
        });
    }
    Ok(arr((1..=d).rev().collect(), (1..=d).collect()))
}

/// `{k, k-1, k/2, 1; 1, k/2, k-1, k}` for even `k ≥ 4`.
pub fn hadamard_array(k: u32) -> Result<IntersectionArray, CatalogError> {
    if k < 4 || !k.is_multiple_of(2) {
        return Err(CatalogError::BadParameter {
            family: Family::Hadamard,
            value: k,
        });
    }
    Ok(arr(vec![k, k - 1, k / 2, 1], vec![1, k / 2, k - 1, k]))
}

/// `K_{k+1,k+1}` minus a perfect matching: `{k, k-1, 1; 1, k-1, k}`, `k ≥ 2`.
pub fn crown_array(k: u32) -> Result<IntersectionArray, CatalogError> {
    if k < 2 {
        return Err(CatalogError::BadParameter {
            family: Family::Crown,
            value: k,
        });
    }
    Ok(arr(vec![k, k - 1, 1], vec![1, k - 1, k]))
}

pub const SPORADIC_NAMES: [&str; 3] = ["foster", "biggs_smith", "gen_dodecagon_12"];

pub fn sporadic(name: &str) -> Result<NamedArray, CatalogError> {
    let (array, provenance) = match name {
        "foster" => (
            arr(vec![3, 2, 2, 2, 2, 1, 1, 1], vec![1, 1, 1, 1, 2, 2, 2, 3]),
            "Foster graph, 90 vertices",
        ),
        "biggs_smith" => (
            arr(vec![3, 2, 2, 2, 1, 1, 1], vec![1, 1, 1, 1, 1, 1, 3]),
            "Biggs-Smith graph, 102 vertices",
        ),
        "gen_dodecagon_12" => (
            arr(vec![3, 2, 2, 2, 2, 2], vec![1, 1, 1, 1, 1, 3]),
            "generalized dodecagon of order (1,2), 126 vertices",
        ),
        other => return Err(CatalogError::UnknownName(other.into())),
    };
    Ok(NamedArray {
        name: name.into(),
        family: Family::Sporadic,
        array,
        provenance,
    })
}

pub fn is_cube(a: &IntersectionArray) -> bool {
    let d = a.diameter();
    d >= 2 && a.k() as usize == d && (1..=d).all(|i| a.c(i) as usize == i && a.b(i - 1) as usize == d - i + 1)
}

/// Matches `{k, k-1, k/2, 1; 1, k/2, k-1, k}` with `k` even. Existence of a
/// Hadamard matrix of order `k` is not checked.
pub fn is_hadamard_form(a: &IntersectionArray) -> bool {
    let k = a.k();
    a.diameter() == 4 && k.is_multiple_of(2) && a.b_seq() == [k, k - 1, k / 2, 1] && a.c_seq() == [1, k / 2, k - 1, k]
}

pub fn is_crown(a: &IntersectionArray) -> bool {
    let k = a.k();
    a.diameter() == 3 && a.b_seq() == [k, k - 1, 1] && a.c_seq() == [1, k - 1, k]
}

/// `Some(μ)` for a Taylor array `{k, μ, 1; 1, μ, k}`.
pub fn taylor_mu(a: &IntersectionArray) -> Option<u32> {
    let k = a.k();
    let mu = a.b(1);
    (a.diameter() == 3 && a.b_seq() == [k, mu, 1] && a.c_seq() == [1, mu, k]).then_some(mu)
}

/// Name of the first family (in the order cube, Hadamard, crown, Taylor,
/// sporadic) whose array equals `a`.
pub fn match_exception(a: &IntersectionArray) -> Option<String> {
    if is_cube(a) {
        return Some(format!("{}-cube", a.diameter()));
    }
    if is_hadamard_form(a) {
        return Some(format!("hadamard-{}", a.k()));
    }
    if is_crown(a) {
        return Some(format!("crown-{}", a.k()));
    }
    if let Some(mu) = taylor_mu(a) {
        return Some(format!("taylor-{}-{}", a.k(), mu));
    }
    SPORADIC_NAMES
        .iter()
        .find(|n| sporadic(n).is_ok_and(|s| &s.array == a))
        .map(|n| String::from(*n))
}

/// The fixed catalog listing.
pub fn catalog() -> Vec<NamedArray> {
    let mut out = Vec::new();
    for d in 2..=8 {
        out.push(NamedArray {
            name: format!("{d}-cube"),
            family: Family::Cube,
            array: cube_array(d).expect("d ≥ 2"),
            provenance: "hypercube",
        });
    }
    for k in [4, 8, 12, 16] {
        out.push(NamedArray {
            name: format!("hadamard-{k}"),
            family: Family::Hadamard,
            array: hadamard_array(k).expect("even k ≥ 4"),
            provenance: "Hadamard graph array (bipartite, antipodal, diameter 4)",
        });
    }
    for k in 2..=6 {
        out.push(NamedArray {
            name: format!("crown-{k}"),
            family: Family::Crown,
            array: crown_array(k).expect("k ≥ 2"),
            provenance: "K_{k+1,k+1} minus a perfect matching",
        });
    }
    out.push(NamedArray {
        name: "icosahedron".into(),
        family: Family::Taylor,
        array: arr(vec![5, 2, 1], vec![1, 2, 5]),
        provenance: "Taylor graph {k,mu,1;1,mu,k} with k=5, mu=2",
    });
    for name in SPORADIC_NAMES {
        out.push(sporadic(name).expect("known name"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;

    #[test]
    fn family_generators() {
        assert_eq!(cube_array(6).unwrap().to_string(), "{6,5,4,3,2,1;1,2,3,4,5,6}");
        assert_eq!(cube_array(2).unwrap().to_string(), "{2,1;1,2}");
        assert!(cube_array(1).is_err());
        assert_eq!(hadamard_array(8).unwrap().to_string(), "{8,7,4,1;1,4,7,8}");
        assert_eq!(hadamard_array(4).unwrap(), cube_array(4).unwrap());
        assert!(hadamard_array(6).is_ok());
        assert!(hadamard_array(7).is_err());
        assert!(hadamard_array(2).is_err());
        assert_eq!(crown_array(2).unwrap().to_string(), "{2,1,1;1,1,2}");
        assert_eq!(crown_array(5).unwrap().c(2), 4);
    }

    #[test]
    fn cube_is_self_dual() {
        for d in 2..=10 {
            let a = cube_array(d).unwrap();
            for i in 0..d as usize {
                assert_eq!(a.b(i), a.c(d as usize - i));
            }
        }
    }

    #[test]
    fn hadamard_meets_two_over_d() {
        for k in (4..=32).step_by(2) {
            let a = hadamard_array(k).unwrap();
            // c_2 = 2k/D with D = 4
            assert_eq!(2 * a.c(2), k);
        }
    }

    #[test]
    fn sporadic_lookup() {
        let f = sporadic("foster").unwrap();
        assert_eq!(f.array.diameter(), 8);
        assert_eq!(sporadic("biggs_smith").unwrap().array.diameter(), 7);
        assert_eq!(sporadic("gen_dodecagon_12").unwrap().array.diameter(), 6);
        assert_eq!(
            sporadic("petersen").unwrap_err(),
            CatalogError::UnknownName("petersen".into())
        );
    }

    #[test]
    fn matching() {
        let m = |s: &str| match_exception(&parse_array(s).unwrap());
        assert_eq!(m("{5,4,3,2,1;1,2,3,4,5}").as_deref(), Some("5-cube"));
        assert_eq!(m("{6,5,4,3,2,1;1,2,3,4,5,6}").as_deref(), Some("6-cube"));
        assert_eq!(m("{3,1;1,3}"), None);
        assert_eq!(m("{4,3,2,1;1,2,3,4}").as_deref(), Some("4-cube"));
        assert_eq!(m("{12,11,6,1;1,6,11,12}").as_deref(), Some("hadamard-12"));
        assert_eq!(m("{3,2,1;1,2,3}").as_deref(), Some("3-cube"));
        assert_eq!(m("{5,4,1;1,4,5}").as_deref(), Some("crown-5"));
        assert_eq!(m("{5,2,1;1,2,5}").as_deref(), Some("taylor-5-2"));
        assert_eq!(m("{3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3}").as_deref(), Some("foster"));
    }
}
