//! Parameters derived from an intersection array: `a_i`, `k_i`, `n` and the
//! triple intersection numbers `p^i_{jh}`.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::array::IntersectionArray;
use crate::Rational;

/// The cheap part of the derived parameters: everything but the `p` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    array: IntersectionArray,
    a: Vec<i64>,
    kdist: Vec<Rational>,
    n: Rational,
    bipartite: bool,
    antipodal2: bool,
}

impl Params {
    pub fn new(array: &IntersectionArray) -> Params {
        let d = array.diameter();
        let a: Vec<i64> = (0..=d).map(|i| array.a(i)).collect();
        let mut kdist = Vec::with_capacity(d + 1);
        kdist.push(Rational::one());
        for i in 1..=d {
            let prev: &Rational = &kdist[i - 1];
            let next = prev * Rational::new(array.b(i - 1).into(), array.c(i).into());
            kdist.push(next);
        }
        let n = kdist.iter().fold(Rational::zero(), |acc, x| acc + x);
        let bipartite = a.iter().all(|&x| x == 0);
        let antipodal2 = kdist[d].is_one();
        Params {
            array: array.clone(),
            a,
            kdist,
            n,
            bipartite,
            antipodal2,
        }
    }

    pub fn array(&self) -> &IntersectionArray {
        &self.array
    }

    pub fn diameter(&self) -> usize {
        self.array.diameter()
    }

    pub fn k(&self) -> u32 {
        self.array.k()
    }

    pub fn b(&self, i: usize) -> u32 {
        self.array.b(i)
    }

    pub fn c(&self, i: usize) -> u32 {
        self.array.c(i)
    }

    pub fn a(&self, i: usize) -> i64 {
        self.a[i]
    }

    pub fn a_seq(&self) -> &[i64] {
        &self.a
    }

    /// `k_i`, the size of the `i`-th distance layer.
    pub fn kdist(&self, i: usize) -> &Rational {
        &self.kdist[i]
    }

    pub fn kdist_seq(&self) -> &[Rational] {
        &self.kdist
    }

    /// Vertex count `n = Σ k_i`.
    pub fn n(&self) -> &Rational {
        &self.n
    }

    /// All `a_i = 0`.
    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    /// `k_D = 1`.
    pub fn is_antipodal_double_cover(&self) -> bool {
        self.antipodal2
    }
}

/// The table `p^i_{jh}` for `0 ≤ i, j, h ≤ D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PTable {
    size: usize,
    data: Vec<Rational>,
}

impl PTable {
    /// Builds the table from `A_1 A_j = b_{j-1} A_{j-1} + a_j A_j + c_{j+1} A_{j+1}`:
    /// row `j + 1` is obtained from rows `j` and `j - 1` by multiplying with `A_1`
    /// and reading off coefficients.
    fn compute(params: &Params) -> PTable {
        let d = params.diameter();
        let size = d + 1;
        let mut t = PTable {
            size,
            data: vec![Rational::zero(); size * size * size],
        };
        let q = |x: i64| Rational::from_integer(BigInt::from(x));
        let a = |i: usize| q(params.a(i));
        let b = |i: usize| q(params.b(i).into());
        let c = |i: usize| q(params.c(i).into());

        for i in 0..size {
            *t.at(i, 0, i) = Rational::one();
        }
        if d >= 1 {
            for i in 0..size {
                if i >= 1 {
                    *t.at(i, 1, i - 1) = c(i);
                }
                *t.at(i, 1, i) = a(i);
                if i + 1 < size {
                    *t.at(i, 1, i + 1) = b(i);
                }
            }
        }
        for j in 1..d {
            for i in 0..size {
                for h in 0..size {
                    let mut acc = a(i) * t.get(i, j, h);
                    if i >= 1 {
                        acc += c(i) * t.get(i - 1, j, h);
                    }
                    if i + 1 < size {
                        acc += b(i) * t.get(i + 1, j, h);
                    }
                    acc -= b(j - 1) * t.get(i, j - 1, h);
                    acc -= a(j) * t.get(i, j, h);
                    *t.at(i, j + 1, h) = acc / c(j + 1);
                }
            }
        }
        t
    }

    fn at(&mut self, i: usize, j: usize, h: usize) -> &mut Rational {
        let s = self.size;
        &mut self.data[(i * s + j) * s + h]
    }

    /// `p^i_{jh}`.
    pub fn get(&self, i: usize, j: usize, h: usize) -> &Rational {
        let s = self.size;
        &self.data[(i * s + j) * s + h]
    }

    /// `D + 1`.
    pub fn size(&self) -> usize {
        self.size
    }
}

/// [`Params`] together with the full `p` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedParams {
    params: Params,
    p: PTable,
}

impl DerivedParams {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn p(&self) -> &PTable {
        &self.p
    }
}

impl core::ops::Deref for DerivedParams {
    type Target = Params;

    fn deref(&self) -> &Params {
        &self.params
    }
}

/// Computes every derived parameter. Never fails: negative `a_i` or
/// fractional `k_i` are reported later by the rules.
pub fn derive(array: &IntersectionArray) -> DerivedParams {
    let params = Params::new(array);
    let p = PTable::compute(&params);
    DerivedParams { params, p }
}

/// `p^D_{D2} = (a_D(a_D - 1 - a_1) + c_D(b_{D-1} - 1)) / c_2`, or `None` when `D < 2`.
pub fn p_closed_form_dd2(array: &IntersectionArray) -> Option<Rational> {
    let d = array.diameter();
    if d < 2 {
        return None;
    }
    let a_d = array.a(d);
    let a_1 = array.a(1);
    let c_d = i64::from(array.c(d));
    let b_last = i64::from(array.b(d - 1));
    let num = a_d * (a_d - 1 - a_1) + c_d * (b_last - 1);
    Some(Rational::new(num.into(), i64::from(array.c(2)).into()))
}

/// `p^1_{i-1,i-1} = k_{i-1} a_{i-1} / k` for `2 ≤ i ≤ D`.
pub fn p_closed_form_1ii(array: &IntersectionArray, i: usize) -> Option<Rational> {
    if i < 2 || i > array.diameter() {
        return None;
    }
    let params = Params::new(array);
    Some(
        params.kdist(i - 1) * Rational::from_integer(params.a(i - 1).into())
            / Rational::from_integer(params.k().into()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    #[test]
    fn six_cube_layers_are_binomials() {
        let d = derive(&parse_array("{6,5,4,3,2,1;1,2,3,4,5,6}").unwrap());
        let binom = [1, 6, 15, 20, 15, 6, 1];
        for (i, &x) in binom.iter().enumerate() {
            assert_eq!(d.kdist(i), &q(x));
        }
        assert_eq!(d.n(), &q(64));
        assert!(d.is_bipartite());
        assert!(d.is_antipodal_double_cover());
    }

    #[test]
    fn crown_five() {
        let d = derive(&parse_array("{5,4,1;1,4,5}").unwrap());
        assert_eq!(d.kdist(2), &q(5));
        assert_eq!(d.kdist(3), &q(1));
        assert_eq!(d.n(), &q(12));
        assert!(d.is_bipartite() && d.is_antipodal_double_cover());
    }

    #[test]
    fn negative_a_still_derives() {
        let d = derive(&parse_array("{6,5,4,1;1,4,5,6}").unwrap());
        assert_eq!(d.a(2), -2);
        assert_eq!(d.kdist(2), &(q(30) / q(4)));
    }

    #[test]
    fn closed_forms() {
        let cube4 = parse_array("{4,3,2,1;1,2,3,4}").unwrap();
        assert_eq!(p_closed_form_dd2(&cube4), Some(q(0)));
        let had8 = parse_array("{8,7,4,1;1,4,7,8}").unwrap();
        assert_eq!(p_closed_form_dd2(&had8), Some(q(0)));
        let foster = parse_array("{3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3}").unwrap();
        assert_eq!(p_closed_form_dd2(&foster), Some(q(0)));
        let petersen = parse_array("{3,2;1,1}").unwrap();
        assert_eq!(p_closed_form_1ii(&petersen, 2), Some(q(0)));
        let ico = parse_array("{5,2,1;1,2,5}").unwrap();
        assert_eq!(p_closed_form_1ii(&ico, 2), Some(q(2)));
        assert_eq!(p_closed_form_1ii(&ico, 1), None);
        assert_eq!(p_closed_form_dd2(&parse_array("{2;1}").unwrap()), None);
    }

    #[test]
    fn first_rows_of_p_table() {
        let arr = parse_array("{5,2,1;1,2,5}").unwrap();
        let d = derive(&arr);
        for i in 0..=3 {
            if i >= 1 {
                assert_eq!(d.p().get(i, 1, i - 1), &q(arr.c(i).into()));
            }
            assert_eq!(d.p().get(i, 1, i), &q(arr.a(i)));
            if i < 3 {
                assert_eq!(d.p().get(i, 1, i + 1), &q(arr.b(i).into()));
            }
        }
    }
}
