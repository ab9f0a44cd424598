//! Builtin graphs: constructed families plus the three bundled data files.

use drg_core::exceptions::{self, NamedArray};
use drg_core::graph::{build_crown, build_cube, build_hadamard, build_icosahedron, Graph};
use drg_core::IntersectionArray;

use crate::format::{parse_graph, NamedGraph};

pub const FOSTER: &str = include_str!("../data/foster.drg");
pub const BIGGS_SMITH: &str = include_str!("../data/biggs_smith.drg");
pub const GEN_DODECAGON_12: &str = include_str!("../data/gen_dodecagon_12.drg");

/// `(name, file contents)` of every bundled graph.
pub const BUNDLED: [(&str, &str); 3] = [
    ("foster", FOSTER),
    ("biggs_smith", BIGGS_SMITH),
    ("gen_dodecagon_12", GEN_DODECAGON_12),
];

/// A positive decimal without leading zeros.
fn count(digits: &str) -> Option<u32> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}

fn cube_dim(name: &str) -> Option<u32> {
    name.strip_suffix("-cube").and_then(count)
}

fn family_param(name: &str, prefix: &str) -> Option<u32> {
    name.strip_prefix(prefix).and_then(count)
}

/// Resolves a builtin name: `D-cube` (1 ≤ D ≤ 12), `crown-k` (1 ≤ k ≤ 32),
/// `hadamard-k` (k a power of two, 4 ≤ k ≤ 64), `icosahedron`, and the
/// bundled graphs.
pub fn builtin_graph(name: &str) -> Option<Graph> {
    if let Some((_, text)) = BUNDLED.iter().find(|(n, _)| *n == name) {
        let NamedGraph { graph, .. } = parse_graph(text).expect("bundled graphs are well formed");
        return Some(graph);
    }
    if name == "icosahedron" {
        return Some(build_icosahedron());
    }
    if let Some(d) = cube_dim(name) {
        return (1..=12).contains(&d).then(|| build_cube(d).expect("in range"));
    }
    if let Some(k) = family_param(name, "crown-") {
        return (1..=32).contains(&k).then(|| build_crown(k).expect("in range"));
    }
    if let Some(k) = family_param(name, "hadamard-") {
        let ok = k.is_power_of_two() && (4..=64).contains(&k);
        return ok.then(|| build_hadamard(k.trailing_zeros()).expect("in range"));
    }
    None
}

/// The catalog array for a builtin name, when the catalog has one.
pub fn expected_array(name: &str) -> Option<IntersectionArray> {
    if let Some(d) = cube_dim(name) {
        return exceptions::cube_array(d).ok();
    }
    if let Some(k) = family_param(name, "crown-") {
        return exceptions::crown_array(k).ok();
    }
    if let Some(k) = family_param(name, "hadamard-") {
        return exceptions::hadamard_array(k).ok();
    }
    exceptions::catalog()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.array)
}

/// The catalog listing.
pub fn entries() -> Vec<NamedArray> {
    exceptions::catalog()
}
