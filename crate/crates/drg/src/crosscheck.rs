//! Agreement between a graph and the parameters computed from its array.

use drg_core::algebraic::rational_to_f64;
use drg_core::graph::{count_pnumbers, DrgCertificate, Graph};
use drg_core::params::{derive, p_closed_form_1ii, p_closed_form_dd2};
use drg_core::spectra::spectrum;
use drg_core::{Multiplicity, Precision, Rational};
use nalgebra::DMatrix;
use serde::Serialize;

/// Eigenvalue agreement tolerance for the floating-point solve.
pub const TOLERANCE: f64 = 1e-9;

/// Triple counting is cubic in `n`; larger graphs skip it.
pub const PNUMBER_LIMIT: usize = 130;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn outcome(check: &'static str, pass: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        check,
        pass,
        detail: detail.into(),
    }
}

fn q(x: u64) -> Rational {
    Rational::from_integer(x.into())
}

/// Adjacency eigenvalues, descending.
pub fn adjacency_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let m = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// Groups a descending eigenvalue list into `(value, count)` clusters.
fn clusters(ev: &[f64]) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &x in ev {
        match out.last_mut() {
            Some((v, c)) if (*v - x).abs() <= 1e-6 => {
                *v = (*v * *c as f64 + x) / (*c as f64 + 1.0);
                *c += 1;
            }
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Runs every agreement check for a graph already certified distance-regular.
pub fn cross_check(g: &Graph, cert: &DrgCertificate, prec: Precision) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let arr = match cert.array() {
        Ok(a) => a,
        Err(e) => {
            out.push(outcome(
                "array",
                false,
                format!("extracted numbers do not form an array: {e}"),
            ));
            return out;
        }
    };
    let dp = derive(&arr);
    let d = arr.diameter();

    let sizes_ok = dp.n() == &q(g.n() as u64)
        && cert
            .layer_sizes
            .iter()
            .enumerate()
            .all(|(i, &s)| dp.kdist(i) == &q(s as u64));
    out.push(outcome(
        "layer-sizes",
        sizes_ok,
        format!("k_i = {:?}, n = {}", cert.layer_sizes, g.n()),
    ));

    let flags_ok = dp.is_bipartite() == cert.bipartite && dp.is_antipodal_double_cover() == cert.antipodal2;
    out.push(outcome(
        "flags",
        flags_ok,
        format!("bipartite = {}, antipodal2 = {}", cert.bipartite, cert.antipodal2),
    ));

    if g.n() <= PNUMBER_LIMIT {
        match count_pnumbers(g) {
            Some(counted) => {
                let s = d + 1;
                let mismatch = (0..s)
                    .flat_map(|i| (0..s).flat_map(move |j| (0..s).map(move |h| (i, j, h))))
                    .find(|&(i, j, h)| dp.p().get(i, j, h) != &q(counted[i][j][h]));
                out.push(outcome(
                    "pnumbers",
                    mismatch.is_none(),
                    match mismatch {
                        None => format!("all {} triples agree", s * s * s),
                        Some((i, j, h)) => format!("p^{i}_{{{j}{h}}} differs"),
                    },
                ));
                let one_ok = (2..=d).all(|i| p_closed_form_1ii(&arr, i) == Some(q(counted[1][i - 1][i - 1])));
                out.push(outcome("closed-form-1ii", one_ok, "p^1_{i-1,i-1} = k_{i-1}a_{i-1}/k"));
                if d >= 2 && arr.a(d) == 0 {
                    let expected = p_closed_form_dd2(&arr).expect("D >= 2");
                    let counted = q(counted[d][d][2]);
                    out.push(outcome(
                        "closed-form-dd2",
                        expected == counted,
                        format!("p^D_{{D2}} = {counted}"),
                    ));
                }
            }
            None => out.push(outcome("pnumbers", false, "triple counts are not uniform")),
        }
    }

    let sp = spectrum(&dp, prec);
    let mults = sp.mults().expect("spectrum carries multiplicities");
    let found = clusters(&adjacency_eigenvalues(g));
    let mut spectrum_ok = found.len() == sp.thetas().len();
    let mut detail = format!("{} distinct eigenvalues", found.len());
    if spectrum_ok {
        for (i, ((value, count), theta)) in found.iter().zip(sp.thetas()).enumerate() {
            let iv = theta.interval();
            let inside =
                rational_to_f64(iv.lo()) - TOLERANCE <= *value && *value <= rational_to_f64(iv.hi()) + TOLERANCE;
            let mult_ok = match &mults[i] {
                Multiplicity::Exact(m) => m == &q(*count as u64),
                Multiplicity::Enclosed(m) => m.contains(&q(*count as u64)),
            };
            if !(inside && mult_ok) {
                spectrum_ok = false;
                detail = format!(
                    "theta_{i}: adjacency gives {value} x{count}, exact gives {theta} x{}",
                    mults[i]
                );
                break;
            }
        }
    }
    out.push(outcome("spectrum", spectrum_ok, detail));
    out
}
