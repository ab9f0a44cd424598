//! JSON documents and their plain-text twins.
//!
//! Rationals are `"num/den"` strings, or bare integers when the denominator
//! is one. A real number is `{"exact": q}` or `{"interval": [lo, hi]}`. The
//! text renderings carry the same fields.

use std::fmt::Write as _;

use drg_core::enumerate::{SearchResult, SearchSpec};
use drg_core::exceptions::{match_exception, NamedArray};
use drg_core::graph::{DrgCertificate, NotDrg};
use drg_core::spectra::Spectrum;
use drg_core::{fmt_rational, DerivedParams, Multiplicity, Rational, Real, RuleReport};
use serde::Serialize;

use crate::crosscheck::CheckOutcome;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RealJson {
    Exact(String),
    Interval([String; 2]),
}

impl RealJson {
    fn text(&self) -> String {
        match self {
            RealJson::Exact(q) => q.clone(),
            RealJson::Interval([lo, hi]) => format!("[{lo}, {hi}]"),
        }
    }
}

fn real_json(x: &Real) -> RealJson {
    match x.exact() {
        Some(q) => RealJson::Exact(fmt_rational(q)),
        None => {
            let iv = x.interval();
            RealJson::Interval([fmt_rational(iv.lo()), fmt_rational(iv.hi())])
        }
    }
}

fn mult_json(m: &Multiplicity) -> RealJson {
    match m {
        Multiplicity::Exact(q) => RealJson::Exact(fmt_rational(q)),
        Multiplicity::Enclosed(iv) => RealJson::Interval([fmt_rational(iv.lo()), fmt_rational(iv.hi())]),
    }
}

fn rationals(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(fmt_rational).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictJson {
    pub rule: String,
    pub status: &'static str,
    pub witness: Option<String>,
    pub paper_ref: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct Informational {
    /// `c_2 <= 2k/D`, reported for `k >= 3`, `D >= 4` only.
    pub c2_le_2k_over_d: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub array: String,
    pub assumption: Option<&'static str>,
    pub overall: &'static str,
    pub exception: Option<String>,
    pub verdicts: Vec<VerdictJson>,
    pub informational: Informational,
}

impl ReportJson {
    pub fn new(r: &RuleReport) -> ReportJson {
        ReportJson {
            array: r.array.to_string(),
            assumption: r.assumption.as_str(),
            overall: r.overall.as_str(),
            exception: match_exception(&r.array),
            verdicts: r
                .verdicts
                .iter()
                .map(|v| VerdictJson {
                    rule: v.id.to_string(),
                    status: v.status.as_str(),
                    witness: v.witness.clone(),
                    paper_ref: v.statement,
                })
                .collect(),
            informational: Informational {
                c2_le_2k_over_d: r.c2_two_over_d,
            },
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "array: {}", self.array);
        let _ = writeln!(out, "assumption: {}", self.assumption.unwrap_or("none"));
        let _ = writeln!(out, "overall: {}", self.overall);
        let _ = writeln!(out, "exception: {}", self.exception.as_deref().unwrap_or("none"));
        for v in &self.verdicts {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}",
                v.rule,
                v.status,
                v.witness.as_deref().unwrap_or("-"),
                v.paper_ref
            );
        }
        let flag = self
            .informational
            .c2_le_2k_over_d
            .map_or_else(|| "not-applicable".to_string(), |b| b.to_string());
        let _ = writeln!(out, "informational: c2_le_2k_over_d = {flag}");
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenJson {
    pub theta: RealJson,
    pub multiplicity: Option<RealJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeriveJson {
    pub array: String,
    pub diameter: usize,
    pub k: u32,
    pub a: Vec<i64>,
    pub b: Vec<u32>,
    pub c: Vec<u32>,
    pub kdist: Vec<String>,
    pub n: String,
    pub bipartite: bool,
    pub antipodal2: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<EigenJson>>,
    /// `pnumbers[i][j][h] = p^i_{jh}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pnumbers: Option<Vec<Vec<Vec<String>>>>,
}

impl DeriveJson {
    pub fn new(dp: &DerivedParams, spectrum: Option<&Spectrum>, pnumbers: bool) -> DeriveJson {
        let arr = dp.array();
        let d = arr.diameter();
        let s = dp.p().size();
        DeriveJson {
            array: arr.to_string(),
            diameter: d,
            k: arr.k(),
            a: dp.a_seq().to_vec(),
            b: arr.b_seq().to_vec(),
            c: arr.c_seq().to_vec(),
            kdist: rationals(dp.kdist_seq()),
            n: fmt_rational(dp.n()),
            bipartite: dp.is_bipartite(),
            antipodal2: dp.is_antipodal_double_cover(),
            spectrum: spectrum.map(|sp| {
                sp.thetas()
                    .iter()
                    .enumerate()
                    .map(|(i, t)| EigenJson {
                        theta: real_json(t),
                        multiplicity: sp.mults().map(|m| mult_json(&m[i])),
                    })
                    .collect()
            }),
            pnumbers: pnumbers.then(|| {
                (0..s)
                    .map(|i| {
                        (0..s)
                            .map(|j| (0..s).map(|h| fmt_rational(dp.p().get(i, j, h))).collect())
                            .collect()
                    })
                    .collect()
            }),
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "array: {}", self.array);
        let _ = writeln!(out, "diameter: {}", self.diameter);
        let _ = writeln!(out, "k: {}", self.k);
        let join = |xs: Vec<String>| xs.join(" ");
        let _ = writeln!(out, "a: {}", join(self.a.iter().map(|x| x.to_string()).collect()));
        let _ = writeln!(out, "b: {}", join(self.b.iter().map(|x| x.to_string()).collect()));
        let _ = writeln!(out, "c: {}", join(self.c.iter().map(|x| x.to_string()).collect()));
        let _ = writeln!(out, "kdist: {}", self.kdist.join(" "));
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "bipartite: {}", self.bipartite);
        let _ = writeln!(out, "antipodal2: {}", self.antipodal2);
        if let Some(spec) = &self.spectrum {
            for (i, e) in spec.iter().enumerate() {
                let m = e.multiplicity.as_ref().map_or_else(|| "-".to_string(), RealJson::text);
                let _ = writeln!(out, "theta_{i}: {}\tmultiplicity: {m}", e.theta.text());
            }
        }
        if let Some(p) = &self.pnumbers {
            for (i, plane) in p.iter().enumerate() {
                for (j, row) in plane.iter().enumerate() {
                    let _ = writeln!(out, "p^{i}_{j}*: {}", row.join(" "));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecJson {
    pub diameter: usize,
    pub k_min: u32,
    pub k_max: u32,
    pub filter: String,
    pub assumption: Option<&'static str>,
    pub rules: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SurvivorJson {
    pub array: String,
    pub exception: Option<String>,
    pub overall: &'static str,
    pub report: ReportJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchJson {
    pub spec: SpecJson,
    pub survivors: Vec<SurvivorJson>,
    /// Rule id to number of subtrees it removed first, in rule order.
    pub pruned: Vec<(String, u64)>,
    pub pruned_by_filter: u64,
    pub nodes: u64,
    pub leaves: u64,
}

impl SearchJson {
    pub fn new(spec: &SearchSpec, r: &SearchResult) -> SearchJson {
        SearchJson {
            spec: SpecJson {
                diameter: spec.diameter,
                k_min: spec.k_min,
                k_max: spec.k_max,
                filter: spec.filter.source().to_string(),
                assumption: spec.assumption.as_str(),
                rules: spec.rules.iter().map(|r| r.to_string()).collect(),
            },
            survivors: r
                .survivors
                .iter()
                .map(|s| SurvivorJson {
                    array: s.array.to_string(),
                    exception: s.exception.clone(),
                    overall: s.report.overall.as_str(),
                    report: ReportJson::new(&s.report),
                })
                .collect(),
            pruned: r.pruned.iter().map(|(id, n)| (id.to_string(), *n)).collect(),
            pruned_by_filter: r.pruned_by_filter,
            nodes: r.nodes,
            leaves: r.leaves,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let s = &self.spec;
        let _ = writeln!(
            out,
            "spec: D={} k={}..={} filter={:?} assumption={} rules={}",
            s.diameter,
            s.k_min,
            s.k_max,
            s.filter,
            s.assumption.unwrap_or("none"),
            s.rules.join(",")
        );
        let _ = writeln!(out, "survivors: {}", self.survivors.len());
        for sv in &self.survivors {
            let _ = writeln!(
                out,
                "{}\t{}\t{}",
                sv.array,
                sv.exception.as_deref().unwrap_or("-"),
                sv.overall
            );
            for line in sv.report.text().lines().skip(4) {
                let _ = writeln!(out, "  {line}");
            }
        }
        for (rule, n) in &self.pruned {
            let _ = writeln!(out, "pruned {rule}: {n}");
        }
        let _ = writeln!(out, "pruned by filter: {}", self.pruned_by_filter);
        let _ = writeln!(out, "nodes: {}", self.nodes);
        let _ = writeln!(out, "leaves: {}", self.leaves);
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NotDrgJson {
    pub x: usize,
    pub y: usize,
    pub i: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    pub array: Option<String>,
    pub b: Vec<u32>,
    pub c: Vec<u32>,
    pub layer_sizes: Vec<usize>,
    pub bipartite: bool,
    pub antipodal2: bool,
    pub has_induced_quadrangle: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphJson {
    pub name: String,
    pub source: &'static str,
    pub n: usize,
    pub certificate: Option<CertificateJson>,
    pub not_drg: Option<NotDrgJson>,
    pub cross_check: Option<Vec<CheckOutcome>>,
}

impl GraphJson {
    pub fn new(
        name: &str,
        source: &'static str,
        n: usize,
        verdict: &Result<DrgCertificate, NotDrg>,
        cross_check: Option<Vec<CheckOutcome>>,
    ) -> GraphJson {
        let (certificate, not_drg) = match verdict {
            Ok(c) => (
                Some(CertificateJson {
                    array: c.array().ok().map(|a| a.to_string()),
                    b: c.b.clone(),
                    c: c.c.clone(),
                    layer_sizes: c.layer_sizes.clone(),
                    bipartite: c.bipartite,
                    antipodal2: c.antipodal2,
                    has_induced_quadrangle: c.has_induced_quadrangle,
                }),
                None,
            ),
            Err(e) => (None, Some(NotDrgJson { x: e.x, y: e.y, i: e.i })),
        };
        GraphJson {
            name: name.to_string(),
            source,
            n,
            certificate,
            not_drg,
            cross_check,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "name: {}", self.name);
        let _ = writeln!(out, "source: {}", self.source);
        let _ = writeln!(out, "n: {}", self.n);
        if let Some(c) = &self.certificate {
            let _ = writeln!(out, "array: {}", c.array.as_deref().unwrap_or("-"));
            let nums = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
            let _ = writeln!(out, "b: {}", nums(&c.b));
            let _ = writeln!(out, "c: {}", nums(&c.c));
            let sizes: Vec<String> = c.layer_sizes.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "layer_sizes: {}", sizes.join(" "));
            let _ = writeln!(out, "bipartite: {}", c.bipartite);
            let _ = writeln!(out, "antipodal2: {}", c.antipodal2);
            let _ = writeln!(out, "has_induced_quadrangle: {}", c.has_induced_quadrangle);
        }
        if let Some(e) = &self.not_drg {
            let _ = writeln!(out, "not distance-regular: x={} y={} i={}", e.x, e.y, e.i);
        }
        if let Some(checks) = &self.cross_check {
            for c in checks {
                let _ = writeln!(
                    out,
                    "check {}\t{}\t{}",
                    c.check,
                    if c.pass { "pass" } else { "FAIL" },
                    c.detail
                );
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntryJson {
    pub name: String,
    pub diameter: usize,
    pub n: String,
    pub array: String,
}

impl CatalogEntryJson {
    pub fn new(e: &NamedArray) -> CatalogEntryJson {
        let n = drg_core::Params::new(&e.array).n().clone();
        CatalogEntryJson {
            name: e.name.clone(),
            diameter: e.array.diameter(),
            n: if n.is_integer() {
                n.to_integer().to_string()
            } else {
                fmt_rational(&n)
            },
            array: e.array.to_string(),
        }
    }

    /// `name\tD\tn\tarray`.
    pub fn line(&self) -> String {
        format!("{}\t{}\t{}\t{}", self.name, self.diameter, self.n, self.array)
    }
}
