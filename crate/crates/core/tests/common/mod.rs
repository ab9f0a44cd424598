#![allow(dead_code)]

use drg_core::IntersectionArray;
use proptest::prelude::*;

/// Arrays with `b` nonincreasing below `k` and `c` nondecreasing from 1, the
/// shape every generated array has. Nothing else is enforced, so `a_i < 0`
/// and fractional `k_i` occur.
pub fn shaped_array(max_d: usize, max_k: u32) -> impl Strategy<Value = IntersectionArray> {
    (1..=max_d, 2..=max_k).prop_flat_map(|(d, k)| {
        (prop::collection::vec(1..k, d - 1), prop::collection::vec(1..=k, d - 1)).prop_map(move |(mut b, mut c)| {
            b.sort_unstable_by(|x, y| y.cmp(x));
            c.sort_unstable();
            b.insert(0, k);
            c.insert(0, 1);
            IntersectionArray::new(b, c).expect("shaped arrays are valid")
        })
    })
}

/// Bipartite arrays: `b_i = k - c_i` and `c_D = k`.
pub fn bipartite_array(max_d: usize, max_k: u32) -> impl Strategy<Value = IntersectionArray> {
    (2..=max_d, 2..=max_k).prop_flat_map(|(d, k)| {
        prop::collection::vec(1..k, d - 2).prop_map(move |mut mid| {
            mid.sort_unstable();
            let mut c = vec![1];
            c.extend(mid);
            c.push(k);
            let b = std::iter::once(k).chain((1..d).map(|i| k - c[i - 1])).collect();
            IntersectionArray::new(b, c).expect("bipartite arrays are valid")
        })
    })
}
