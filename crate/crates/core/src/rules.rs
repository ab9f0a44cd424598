//! Feasibility rules over an intersection array.
//!
//! Each rule is an independent predicate over [`Params`] (and, for R4, R21
//! and R22, the spectrum). A rule reports `NotApplicable` when the array is
//! outside its scope (diameter, valency, quadrangle assumption) and `Pass`
//! when its hypothesis is not met or its conclusion holds.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;

use crate::algebraic::{Decision, Precision};
use crate::array::IntersectionArray;
use crate::exceptions::{is_cube, is_hadamard_form, sporadic};
use crate::params::Params;
use crate::spectra::{self, Integrality, Spectrum};
use crate::{fmt_rational, Rational};

macro_rules! rule_ids {
    ($($id:ident => $name:literal, $spectral:literal, $statement:literal;)*) => {
        /// Stable rule identifiers; the order here is the report order.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum RuleId {
            $($id,)*
        }

        impl RuleId {
            pub const ALL: &'static [RuleId] = &[$(RuleId::$id,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(RuleId::$id => $name,)*
                }
            }

            /// Needs the spectrum.
            pub fn is_spectral(self) -> bool {
                match self {
                    $(RuleId::$id => $spectral,)*
                }
            }

            /// The condition the rule checks, in words.
            pub fn statement(self) -> &'static str {
                match self {
                    $(RuleId::$id => $statement,)*
                }
            }

            pub fn parse(s: &str) -> Option<RuleId> {
                let s = s.trim();
                RuleId::ALL.iter().copied().find(|r| r.as_str().eq_ignore_ascii_case(s))
            }
        }
    };
}

rule_ids! {
    R0 => "R0", false, "a_i >= 0, and k_i and n are positive integers";
    R1 => "R1", false, "k = b_0 > b_1 >= ... >= b_{D-1}";
    R2 => "R2", false, "1 = c_1 <= c_2 <= ... <= c_D";
    R3 => "R3", false, "b_i >= c_j whenever i + j <= D";
    R4 => "R4", true, "every eigenvalue multiplicity is a positive integer";
    R5 => "R5", false, "k >= 3, D >= 4: a_i != 0 and 2c_i + c_{D-i} > k imply a_{i-1} != 0";
    R5q => "R5q", false, "a_i != 0 implies c_{D-i} + 2c_i - k_{i-1}a_{i-1}/k <= k";
    R6 => "R6", false, "a_1 != 0 implies c_{floor(D/2)} <= k/3";
    R7 => "R7", false, "k >= 3, D >= 4, c_2 > k/3 imply D <= 5 and bipartite";
    R8 => "R8", false, "bipartite, D = 2t >= 4, k >= 3: k_2 = alpha(k-1) for an integer alpha";
    R9 => "R9", false, "k >= 3, D >= 3, a_D = 0, k_{D-1} < 2k: k_D = 1 (antipodal 2-cover) or D = 3 and bipartite";
    R10 => "R10", false, "D = 3: bipartite, or Taylor {k,mu,1;1,mu,k}, or c_2 <= k/2, b_2 <= k_3/2 and c_3 <= k_2/2";
    R11 => "R11", false, "induced quadrangle: a_1 + 2 <= 2k/D";
    R12 => "R12", false, "induced quadrangle, D >= 4: c_2 <= 2k/D, with equality only for a Hadamard array (D = 4) or the D-cube (D >= 5)";
    R13 => "R13", false, "k >= 3, D in {4,5}: c_2 <= k/3, or a Hadamard array (D = 4), or the 5-cube";
    R14 => "R14", false, "k >= 3, D >= 6: c_2 <= k/4, or the 6-cube, 7-cube, generalized dodecagon of order (1,2), Biggs-Smith or Foster array";
    R15 => "R15", false, "D >= 2t, t >= 2, c_2 > k/(t+1), c_i strictly increasing: D in {2t,2t+1} and a Hadamard array (D = 4) or the D-cube";
    R16 => "R16", false, "D >= 4, c_2 >= 2, c_2 > a_1: c_i strictly increasing and c_i >= (i/2)c_2";
    R17 => "R17", false, "D >= 4, c_2 >= 2: c_3 >= (3/2)c_2";
    R18 => "R18", false, "D >= 3, b_2 > 0, 2c_2 > c_3: c_3 - 1 - c_2(c_2-1) >= -c_2(c_2-1)(c_2-2)^2/(2b_2)";
    R19 => "R19", false, "D >= 3: a_2 = 0 implies a_1 = 0";
    R20 => "R20", false, "a_{D-2} = 0 and c_{D-2} > k/2 imply a_{D-1} = a_D = 0";
    R21 => "R21", true, "a_1 = 0, c_2 >= 2 (induced K_{2,c_2}): 4c_2/(c_2+2) <= b_1/(theta_1+1) + 1";
    R22 => "R22", true, "D >= 2t, t >= 3: theta_1 >= sqrt(c_{t-1}b_{t-2} + c_{t-2}b_{t-3})";
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Geometric hypotheses that cannot be read off the array.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Assumption {
    #[default]
    None,
    ContainsQuadrangle,
    QuadrangleFree,
}

impl Assumption {
    pub fn as_str(self) -> Option<&'static str> {
        match self {
            Assumption::None => None,
            Assumption::ContainsQuadrangle => Some("quadrangle"),
            Assumption::QuadrangleFree => Some("quadrangle-free"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Violated,
    NotApplicable,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Violated => "violated",
            Status::NotApplicable => "not-applicable",
            Status::Undecided => "undecided",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleVerdict {
    pub id: RuleId,
    pub status: Status,
    /// The instantiated condition for a violation, the certificate for a
    /// numerically certified pass, or the reason for an undecided one.
    pub witness: Option<String>,
    pub statement: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Overall {
    FeasibleSoFar,
    Infeasible,
    Undecided,
}

impl Overall {
    pub fn as_str(self) -> &'static str {
        match self {
            Overall::FeasibleSoFar => "feasible-so-far",
            Overall::Infeasible => "infeasible",
            Overall::Undecided => "undecided",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleReport {
    pub array: IntersectionArray,
    pub assumption: Assumption,
    pub verdicts: Vec<RuleVerdict>,
    pub overall: Overall,
    /// Whether `c_2 <= 2k/D` holds, for `k >= 3` and `D >= 4`. This is only
    /// expected to hold up to finitely many exceptions and never feeds the
    /// overall verdict.
    pub c2_two_over_d: Option<bool>,
}

impl RuleReport {
    pub fn verdict(&self, id: RuleId) -> Option<&RuleVerdict> {
        self.verdicts.iter().find(|v| v.id == id)
    }

    pub fn violated(&self) -> impl Iterator<Item = &RuleVerdict> {
        self.verdicts.iter().filter(|v| v.status == Status::Violated)
    }
}

/// A subset of the rules, as a bit mask over [`RuleId::ALL`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RuleSet(u32);

impl RuleSet {
    pub fn all() -> RuleSet {
        RuleSet((1u32 << RuleId::ALL.len()) - 1)
    }

    pub fn empty() -> RuleSet {
        RuleSet(0)
    }

    pub fn with(self, id: RuleId) -> RuleSet {
        RuleSet(self.0 | 1 << id as u32)
    }

    pub fn without(self, id: RuleId) -> RuleSet {
        RuleSet(self.0 & !(1 << id as u32))
    }

    pub fn contains(self, id: RuleId) -> bool {
        self.0 & (1 << id as u32) != 0
    }

    pub fn is_superset(self, other: RuleSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn iter(self) -> impl Iterator<Item = RuleId> {
        RuleId::ALL.iter().copied().filter(move |&r| self.contains(r))
    }

    /// `"all"` or a comma-separated list of ids such as `"R0,R5q,R13"`.
    pub fn parse(s: &str) -> Option<RuleSet> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Some(RuleSet::all());
        }
        s.split(',')
            .try_fold(RuleSet::empty(), |set, tok| RuleId::parse(tok).map(|r| set.with(r)))
    }
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet::all()
    }
}

enum Outcome {
    Pass,
    PassWith(String),
    Violated(String),
    NotApplicable,
    Undecided(String),
}

/// Lazily computed spectrum shared by the spectral rules.
struct SpectralCache<'a> {
    params: &'a Params,
    prec: Precision,
    spectrum: Option<Spectrum>,
}

impl<'a> SpectralCache<'a> {
    fn new(params: &'a Params, prec: Precision) -> Self {
        SpectralCache {
            params,
            prec,
            spectrum: None,
        }
    }

    fn get(&mut self) -> &Spectrum {
        let (params, prec) = (self.params, self.prec);
        self.spectrum.get_or_insert_with(|| spectra::spectrum(params, prec))
    }
}

/// Runs every rule with the default precision.
pub fn evaluate(array: &IntersectionArray, assumption: Assumption) -> RuleReport {
    evaluate_with(&Params::new(array), assumption, RuleSet::all(), Precision::default())
}

/// Runs the rules in `rules`, in id order.
pub fn evaluate_with(params: &Params, assumption: Assumption, rules: RuleSet, prec: Precision) -> RuleReport {
    let mut cache = SpectralCache::new(params, prec);
    let verdicts: Vec<RuleVerdict> = rules
        .iter()
        .map(|id| verdict(id, check(id, params, assumption, &mut cache)))
        .collect();
    let overall = if verdicts.iter().any(|v| v.status == Status::Violated) {
        Overall::Infeasible
    } else if verdicts.iter().any(|v| v.status == Status::Undecided) {
        Overall::Undecided
    } else {
        Overall::FeasibleSoFar
    };
    let d = params.diameter() as i64;
    let k = i64::from(params.k());
    let c2_two_over_d = (k >= 3 && d >= 4).then(|| d * i64::from(params.c(2)) <= 2 * k);
    RuleReport {
        array: params.array().clone(),
        assumption,
        verdicts,
        overall,
        c2_two_over_d,
    }
}

/// Evaluates one rule.
pub fn check_rule(id: RuleId, params: &Params, assumption: Assumption, prec: Precision) -> RuleVerdict {
    let mut cache = SpectralCache::new(params, prec);
    verdict(id, check(id, params, assumption, &mut cache))
}

/// The first violated rule in `rules`, trying the integer rules before the
/// spectral ones. Used by the enumerator to prune without building a report.
pub fn first_violation(params: &Params, assumption: Assumption, rules: RuleSet, prec: Precision) -> Option<RuleId> {
    let mut cache = SpectralCache::new(params, prec);
    let integer = rules.iter().filter(|r| !r.is_spectral());
    let spectral = rules.iter().filter(|r| r.is_spectral());
    integer
        .chain(spectral)
        .find(|&id| matches!(check(id, params, assumption, &mut cache), Outcome::Violated(_)))
}

fn verdict(id: RuleId, outcome: Outcome) -> RuleVerdict {
    let (status, witness) = match outcome {
        Outcome::Pass => (Status::Pass, None),
        Outcome::PassWith(w) => (Status::Pass, Some(w)),
        Outcome::Violated(w) => (Status::Violated, Some(w)),
        Outcome::NotApplicable => (Status::NotApplicable, None),
        Outcome::Undecided(w) => (Status::Undecided, Some(w)),
    };
    RuleVerdict {
        id,
        status,
        witness,
        statement: id.statement(),
    }
}

fn check(id: RuleId, p: &Params, assumption: Assumption, cache: &mut SpectralCache<'_>) -> Outcome {
    match id {
        RuleId::R0 => r0(p),
        RuleId::R1 => r1(p),
        RuleId::R2 => r2(p),
        RuleId::R3 => r3(p),
        RuleId::R4 => r4(cache),
        RuleId::R5 => r5(p),
        RuleId::R5q => r5q(p),
        RuleId::R6 => r6(p),
        RuleId::R7 => r7(p),
        RuleId::R8 => r8(p),
        RuleId::R9 => r9(p),
        RuleId::R10 => r10(p),
        RuleId::R11 => r11(p, assumption),
        RuleId::R12 => r12(p, assumption),
        RuleId::R13 => r13(p),
        RuleId::R14 => r14(p),
        RuleId::R15 => r15(p),
        RuleId::R16 => r16(p),
        RuleId::R17 => r17(p),
        RuleId::R18 => r18(p),
        RuleId::R19 => r19(p),
        RuleId::R20 => r20(p),
        RuleId::R21 => r21(p, cache),
        RuleId::R22 => r22(p, cache),
    }
}

fn k_of(p: &Params) -> i64 {
    i64::from(p.k())
}

fn b(p: &Params, i: usize) -> i64 {
    i64::from(p.b(i))
}

fn c(p: &Params, i: usize) -> i64 {
    i64::from(p.c(i))
}

fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn r0(p: &Params) -> Outcome {
    let d = p.diameter();
    if let Some(i) = (0..=d).find(|&i| p.a(i) < 0) {
        return Outcome::Violated(format!("a_{i} = {} < 0", p.a(i)));
    }
    if let Some(i) = (0..=d).find(|&i| !p.kdist(i).is_integer()) {
        return Outcome::Violated(format!("k_{i} = {} is not an integer", fmt_rational(p.kdist(i))));
    }
    Outcome::Pass
}

fn r1(p: &Params) -> Outcome {
    let d = p.diameter();
    if d >= 2 && p.b(1) >= p.b(0) {
        return Outcome::Violated(format!("b_1 = {} >= b_0 = {}", p.b(1), p.b(0)));
    }
    for i in 1..d.saturating_sub(1) {
        if p.b(i + 1) > p.b(i) {
            return Outcome::Violated(format!("b_{} = {} > b_{i} = {}", i + 1, p.b(i + 1), p.b(i)));
        }
    }
    Outcome::Pass
}

fn r2(p: &Params) -> Outcome {
    for i in 1..p.diameter() {
        if p.c(i + 1) < p.c(i) {
            return Outcome::Violated(format!("c_{} = {} < c_{i} = {}", i + 1, p.c(i + 1), p.c(i)));
        }
    }
    Outcome::Pass
}

fn r3(p: &Params) -> Outcome {
    let d = p.diameter();
    for i in 0..d {
        for j in 1..=d - i {
            if p.b(i) < p.c(j) {
                return Outcome::Violated(format!("b_{i} = {} < c_{j} = {} with {i}+{j} <= D", p.b(i), p.c(j)));
            }
        }
    }
    Outcome::Pass
}

fn r4(cache: &mut SpectralCache<'_>) -> Outcome {
    let bits = cache.prec.bits();
    let s = cache.get();
    let mults = s.mults().expect("spectrum carries multiplicities");
    let mut certified = Vec::new();
    let mut ambiguous = None;
    for (i, (theta, m)) in s.thetas().iter().zip(mults).enumerate() {
        match m.integrality() {
            Integrality::Integral(_) => {}
            Integrality::NearInteger { value, width } => certified.push(format!(
                "m(theta_{i}) = {value} (enclosure width {:.3e})",
                crate::algebraic::rational_to_f64(&width)
            )),
            Integrality::NotIntegral => {
                return Outcome::Violated(format!("m(theta_{i} = {theta}) = {m} is not a positive integer"))
            }
            Integrality::Ambiguous => {
                ambiguous.get_or_insert(i);
            }
        }
    }
    if let Some(i) = ambiguous {
        return Outcome::Undecided(format!(
            "enclosure of m(theta_{i}) still contains several integers at the refinement cap"
        ));
    }
    if certified.is_empty() {
        Outcome::Pass
    } else {
        Outcome::PassWith(format!(
            "certified numerically (theta width 2^-{bits}): {}",
            certified.join("; ")
        ))
    }
}

fn r5(p: &Params) -> Outcome {
    let d = p.diameter();
    let k = k_of(p);
    if d < 4 || k < 3 {
        return Outcome::NotApplicable;
    }
    for i in 2..=d {
        let lhs = 2 * c(p, i) + c(p, d - i);
        if p.a(i) != 0 && lhs > k && p.a(i - 1) == 0 {
            return Outcome::Violated(format!(
                "i={i}: a_{i}={} != 0, 2*c_{i}+c_{}={} > k={k}, a_{}=0",
                p.a(i),
                d - i,
                lhs,
                i - 1
            ));
        }
    }
    Outcome::Pass
}

fn r5q(p: &Params) -> Outcome {
    let d = p.diameter();
    let k = k_of(p);
    for i in 2..=d {
        if p.a(i) == 0 {
            continue;
        }
        let p1 = p.kdist(i - 1) * q(p.a(i - 1)) / q(k);
        let lhs = q(c(p, d - i) + 2 * c(p, i)) - &p1;
        if lhs > q(k) {
            return Outcome::Violated(format!(
                "i={i}: a_{i}={} != 0 and c_{}+2c_{i}-k_{}a_{}/k = {} > k={k}",
                p.a(i),
                d - i,
                i - 1,
                i - 1,
                fmt_rational(&lhs)
            ));
        }
    }
    Outcome::Pass
}

fn r6(p: &Params) -> Outcome {
    let d = p.diameter();
    let k = k_of(p);
    let h = d / 2;
    if p.a(1) != 0 && 3 * c(p, h) > k {
        return Outcome::Violated(format!("a_1={} != 0 but c_{h}={} > k/3 = {k}/3", p.a(1), p.c(h)));
    }
    Outcome::Pass
}

fn r7(p: &Params) -> Outcome {
    let d = p.diameter();
    let k = k_of(p);
    if d < 4 || k < 3 {
        return Outcome::NotApplicable;
    }
    if 3 * c(p, 2) > k && !(p.is_bipartite() && d <= 5) {
        let why = if d > 5 {
            format!("D={d} > 5")
        } else {
            String::from("not bipartite")
        };
        return Outcome::Violated(format!("c_2={} > k/3 = {k}/3 but {why}", p.c(2)));
    }
    Outcome::Pass
}

fn r8(p: &Params) -> Outcome {
    let d = p.diameter();
    let k = k_of(p);
    // No positive a_i: on any array with a_i >= 0 this is exactly bipartiteness.
    let bipartite_pattern = p.a_seq().iter().all(|&a| a <= 0);
    if d < 4 || !d.is_multiple_of(2) || k < 3 || !bipartite_pattern {
        return Outcome::NotApplicable;
    }
    let alpha = p.kdist(2) / q(k - 1);
    if alpha.is_integer() {
        Outcome::Pass
    } else {
        Outcome::Violated(format!(
            "k_2/(k-1) = {} is not an integer (k/c_2 = {k}/{})",
            fmt_rational(&alpha),
            p.c(2)
        ))
    }
}

fn r9(p: &Params) -> Outcome {
    let d = p.diameter();
    let k = k_of(p);
    if d < 3 || k < 3 {
        return Outcome::NotApplicable;
    }
    let hyp = p.a(d) == 0 && p.kdist(d - 1) < &q(2 * k) && p.kdist(d) >= &q(2);
    if hyp && !(d == 3 && p.is_bipartite()) {
        return Outcome::Violated(format!(
            "a_D=0 and k_{}={} < 2k={} but k_D={} (not an antipodal 2-cover)",
            d - 1,
            fmt_rational(p.kdist(d - 1)),
            2 * k,
            fmt_rational(p.kdist(d))
        ));
    }
    Outcome::Pass
}

fn r10(p: &Params) -> Outcome {
    if p.diameter() != 3 {
        return Outcome::NotApplicable;
    }
    let k = k_of(p);
    let taylor = crate::exceptions::taylor_mu(p.array()).is_some();
    let c2_ok = 2 * c(p, 2) <= k;
    let b2_ok = q(2 * b(p, 2)) <= *p.kdist(3);
    let c3_ok = q(2 * c(p, 3)) <= *p.kdist(2);
    if p.is_bipartite() || taylor || (c2_ok && b2_ok && c3_ok) {
        return Outcome::Pass;
    }
    let failed = if !c2_ok {
        format!("c_2={} > k/2", p.c(2))
    } else if !b2_ok {
        format!("b_2={} > k_3/2 = {}/2", p.b(2), fmt_rational(p.kdist(3)))
    } else {
        format!("c_3={} > k_2/2 = {}/2", p.c(3), fmt_rational(p.kdist(2)))
    };
    Outcome::Violated(format!("not bipartite, not Taylor, and {failed}"))
}

fn r11(p: &Params, assumption: Assumption) -> Outcome {
    let d = p.diameter() as i64;
    if assumption != Assumption::ContainsQuadrangle || d < 2 {
        return Outcome::NotApplicable;
    }
    let k = k_of(p);
    if d * (p.a(1) + 2) > 2 * k {
        return Outcome::Violated(format!("a_1+2 = {} > 2k/D = {}/{d}", p.a(1) + 2, 2 * k));
    }
    Outcome::Pass
}

fn r12(p: &Params, assumption: Assumption) -> Outcome {
    let d = p.diameter() as i64;
    if assumption != Assumption::ContainsQuadrangle || d < 4 {
        return Outcome::NotApplicable;
    }
    let k = k_of(p);
    let lhs = d * c(p, 2);
    if lhs > 2 * k {
        return Outcome::Violated(format!("c_2={} > 2k/D = {}/{d}", p.c(2), 2 * k));
    }
    if lhs == 2 * k {
        let allowed = if d == 4 {
            is_hadamard_form(p.array())
        } else {
            is_cube(p.array())
        };
        if !allowed {
            let family = if d == 4 { "a Hadamard array" } else { "the D-cube" };
            return Outcome::Violated(format!("c_2 = 2k/D = {}/{d} but the array is not {family}", 2 * k));
        }
    }
    Outcome::Pass
}

fn r13(p: &Params) -> Outcome {
    let d = p.diameter();
    let k = k_of(p);
    if !(d == 4 || d == 5) || k < 3 {
        return Outcome::NotApplicable;
    }
    if 3 * c(p, 2) > k {
        let allowed = if d == 4 {
            is_hadamard_form(p.array())
        } else {
            is_cube(p.array())
        };
        if !allowed {
            let family = if d == 4 { "a Hadamard array" } else { "the 5-cube" };
            return Outcome::Violated(format!("c_2={} > k/3 = {k}/3 and the array is not {family}", p.c(2)));
        }
    }
    Outcome::Pass
}

fn is_theorem_nine_exception(a: &IntersectionArray) -> bool {
    let d = a.diameter();
    ((d == 6 || d == 7) && is_cube(a))
        || ["gen_dodecagon_12", "biggs_smith", "foster"]
            .iter()
            .any(|n| sporadic(n).is_ok_and(|s| &s.array == a))
}

fn r14(p: &Params) -> Outcome {
    let d = p.diameter();
    let k = k_of(p);
    if d < 6 || k < 3 {
        return Outcome::NotApplicable;
    }
    if 4 * c(p, 2) > k && !is_theorem_nine_exception(p.array()) {
        return Outcome::Violated(format!(
            "c_2={} > k/4 = {k}/4 and the array is not a listed exception",
            p.c(2)
        ));
    }
    Outcome::Pass
}

fn strictly_increasing_c(p: &Params) -> Result<(), usize> {
    match (2..=p.diameter()).find(|&i| p.c(i) <= p.c(i - 1)) {
        Some(i) => Err(i),
        None => Ok(()),
    }
}

fn r15(p: &Params) -> Outcome {
    let d = p.diameter();
    if d < 4 {
        return Outcome::NotApplicable;
    }
    let k = k_of(p);
    // Admissibility in t is upward closed up to floor(D/2); the largest t decides.
    let t = (d / 2) as i64;
    if (t + 1) * c(p, 2) > k && strictly_increasing_c(p).is_ok() {
        let allowed = if d == 4 {
            is_hadamard_form(p.array())
        } else {
            is_cube(p.array())
        };
        if !allowed {
            let family = if d == 4 { "a Hadamard array" } else { "the D-cube" };
            return Outcome::Violated(format!(
                "t={t}: c_2={} > k/(t+1) = {k}/{}, c_i strictly increasing, but the array is not {family}",
                p.c(2),
                t + 1
            ));
        }
    }
    Outcome::Pass
}

/// Strict increase of `c_i` is invoked under two hypotheses: `c_2 >= a_1 + 3`
/// together with a quadrangle, and `c_2 >= 2` with `c_2 > a_1`. This rule uses
/// the weaker of the two. At `D = 3` the crown graphs have `c_3 < (3/2)c_2`,
/// so the rule is scoped to `D >= 4`.
fn r16(p: &Params) -> Outcome {
    let d = p.diameter();
    if d < 4 {
        return Outcome::NotApplicable;
    }
    if !(c(p, 2) >= 2 && c(p, 2) > p.a(1)) {
        return Outcome::Pass;
    }
    if let Err(i) = strictly_increasing_c(p) {
        return Outcome::Violated(format!(
            "c_2={} >= 2, c_2 > a_1={}, but c_{i}={} <= c_{}={}",
            p.c(2),
            p.a(1),
            p.c(i),
            i - 1,
            p.c(i - 1)
        ));
    }
    if let Some(i) = (2..=d).find(|&i| 2 * c(p, i) < i as i64 * c(p, 2)) {
        return Outcome::Violated(format!("c_{i}={} < ({i}/2)c_2 = {}/2", p.c(i), i as i64 * c(p, 2)));
    }
    Outcome::Pass
}

fn r17(p: &Params) -> Outcome {
    if p.diameter() < 4 {
        return Outcome::NotApplicable;
    }
    if c(p, 2) >= 2 && 2 * c(p, 3) < 3 * c(p, 2) {
        return Outcome::Violated(format!("c_3={} < (3/2)c_2 = {}/2", p.c(3), 3 * c(p, 2)));
    }
    Outcome::Pass
}

fn r18(p: &Params) -> Outcome {
    let d = p.diameter();
    if d < 3 || p.b(2) == 0 {
        return Outcome::NotApplicable;
    }
    let (c2, c3, b2) = (c(p, 2), c(p, 3), b(p, 2));
    if 2 * c2 <= c3 {
        return Outcome::Pass;
    }
    // Multiplied through by 2b_2 > 0.
    let lhs = BigInt::from(2 * b2) * BigInt::from(c3 - 1 - c2 * (c2 - 1));
    let rhs = -BigInt::from(c2 * (c2 - 1)) * BigInt::from((c2 - 2) * (c2 - 2));
    if lhs < rhs {
        return Outcome::Violated(format!(
            "2c_2 > c_3 and c_3-1-c_2(c_2-1) = {} < -c_2(c_2-1)(c_2-2)^2/(2b_2) = {}",
            c3 - 1 - c2 * (c2 - 1),
            fmt_rational(&Rational::new(rhs, BigInt::from(2 * b2)))
        ));
    }
    Outcome::Pass
}

fn r19(p: &Params) -> Outcome {
    if p.diameter() < 3 {
        return Outcome::NotApplicable;
    }
    if p.a(2) == 0 && p.a(1) != 0 {
        return Outcome::Violated(format!("a_2=0 but a_1={}", p.a(1)));
    }
    Outcome::Pass
}

fn r20(p: &Params) -> Outcome {
    let d = p.diameter();
    if d < 3 {
        return Outcome::NotApplicable;
    }
    let k = k_of(p);
    if p.a(d - 2) == 0 && 2 * c(p, d - 2) > k && (p.a(d - 1) != 0 || p.a(d) != 0) {
        return Outcome::Violated(format!(
            "a_{}=0 and c_{}={} > k/2, but a_{}={}, a_{d}={}",
            d - 2,
            d - 2,
            p.c(d - 2),
            d - 1,
            p.a(d - 1),
            p.a(d)
        ));
    }
    Outcome::Pass
}

fn r21(p: &Params, cache: &mut SpectralCache<'_>) -> Outcome {
    if p.diameter() < 2 {
        return Outcome::NotApplicable;
    }
    if !(p.a(1) == 0 && p.c(2) >= 2) {
        return Outcome::Pass;
    }
    let s = cache.get();
    match spectra::kst_bound_holds(p, s, 2, p.c(2)) {
        Decision::Known(true) => Outcome::Pass,
        Decision::Known(false) => Outcome::Violated(format!(
            "4c_2/(c_2+2) = {}/{} > b_1/(theta_1+1)+1 with b_1={}, theta_1={}",
            4 * c(p, 2),
            c(p, 2) + 2,
            p.b(1),
            s.theta(1)
        )),
        Decision::Undecided => Outcome::Undecided(String::from("theta_1 comparison hit the refinement cap")),
    }
}

fn r22(p: &Params, cache: &mut SpectralCache<'_>) -> Outcome {
    let d = p.diameter();
    if d < 6 {
        return Outcome::NotApplicable;
    }
    let s = cache.get();
    let theta1 = s.theta(1).clone();
    let mut undecided = None;
    for t in 3..=d / 2 {
        let (radicand, bound) = spectra::theta1_lower_bound(p.array(), t).expect("3 <= t <= D/2");
        match theta1.cmp_real(&bound, Precision::max()) {
            Decision::Known(Ordering::Less) => {
                return Outcome::Violated(format!("t={t}: theta_1 = {theta1} < sqrt({radicand})"));
            }
            Decision::Known(_) => {}
            Decision::Undecided => {
                undecided.get_or_insert(t);
            }
        }
    }
    match undecided {
        Some(t) => Outcome::Undecided(format!("t={t}: theta_1 vs bound hit the refinement cap")),
        None => Outcome::Pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;

    fn report(s: &str, a: Assumption) -> RuleReport {
        evaluate(&parse_array(s).unwrap(), a)
    }

    fn status(r: &RuleReport, id: RuleId) -> Status {
        r.verdict(id).unwrap().status
    }

    #[test]
    fn ids_are_ordered_and_parse() {
        let names: Vec<_> = RuleId::ALL.iter().map(|r| r.as_str()).collect();
        assert_eq!(names.len(), 24);
        assert_eq!(&names[..8], ["R0", "R1", "R2", "R3", "R4", "R5", "R5q", "R6"]);
        assert!(RuleId::ALL.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(RuleId::parse("r5q"), Some(RuleId::R5q));
        assert_eq!(RuleSet::parse("R0, R13").unwrap().iter().count(), 2);
        assert!(RuleSet::parse("R99").is_none());
    }

    #[test]
    fn six_cube_has_no_violation() {
        let r = report("{6,5,4,3,2,1;1,2,3,4,5,6}", Assumption::None);
        assert_eq!(r.overall, Overall::FeasibleSoFar);
        assert_eq!(status(&r, RuleId::R11), Status::NotApplicable);
        let r = report("{6,5,4,3,2,1;1,2,3,4,5,6}", Assumption::ContainsQuadrangle);
        assert_eq!(r.overall, Overall::FeasibleSoFar);
        assert_eq!(status(&r, RuleId::R12), Status::Pass);
    }

    #[test]
    fn lemma3_instance() {
        let r = report("{10,9,5,1;1,4,5,10}", Assumption::None);
        assert_eq!(r.overall, Overall::Infeasible);
        let v = r.verdict(RuleId::R5).unwrap();
        assert_eq!(v.status, Status::Violated);
        assert!(
            v.witness.as_deref().unwrap().starts_with("i=2: a_2=1"),
            "{:?}",
            v.witness
        );
        // a_1 = 0, so the a_1 != 0 rule has nothing to say.
        assert_eq!(status(&r, RuleId::R6), Status::Pass);
    }

    #[test]
    fn foster_passes() {
        let r = report("{3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3}", Assumption::QuadrangleFree);
        assert_eq!(
            r.overall,
            Overall::FeasibleSoFar,
            "{:?}",
            r.violated().collect::<Vec<_>>()
        );
        assert_eq!(status(&r, RuleId::R14), Status::Pass);
        assert_eq!(r.c2_two_over_d, Some(false));
    }

    #[test]
    fn lemma2_synthetic() {
        let r = report("{6,5,4,1;1,4,5,6}", Assumption::None);
        assert_eq!(status(&r, RuleId::R8), Status::Violated);
        assert_eq!(status(&r, RuleId::R0), Status::Violated);
        let ok = report("{8,7,4,1;1,4,7,8}", Assumption::None);
        assert_eq!(status(&ok, RuleId::R8), Status::Pass);
    }

    #[test]
    fn hadamard_r4_is_certified_numerically() {
        let r = report("{8,7,4,1;1,4,7,8}", Assumption::ContainsQuadrangle);
        assert_eq!(r.overall, Overall::FeasibleSoFar);
        let v = r.verdict(RuleId::R4).unwrap();
        assert_eq!(v.status, Status::Pass);
        assert!(v.witness.as_deref().unwrap().contains("certified numerically"));
    }

    #[test]
    fn equality_case_of_two_over_d() {
        let mutated = parse_array("{6,5,4,3,3,1;1,2,3,4,5,6}").unwrap();
        let r = evaluate(&mutated, Assumption::ContainsQuadrangle);
        let v = r.verdict(RuleId::R12).unwrap();
        assert_eq!(v.status, Status::Violated);
        assert!(v.witness.as_deref().unwrap().contains("not the D-cube"));
    }

    #[test]
    fn quadrangle_rules_need_the_assumption() {
        for a in [Assumption::None, Assumption::QuadrangleFree] {
            let r = report("{6,5,4,3,3,1;1,2,3,4,5,6}", a);
            assert_eq!(status(&r, RuleId::R11), Status::NotApplicable);
            assert_eq!(status(&r, RuleId::R12), Status::NotApplicable);
        }
    }

    #[test]
    fn spectral_rule_on_small_c2_growth() {
        // a_1 = 0, c_2 = 5 on a long bipartite-looking array: the K_{2,5} bound fails.
        let arr = parse_array("{10,9,5,5,5,5,1;1,5,5,5,5,9,10}").unwrap();
        let r = evaluate(&arr, Assumption::None);
        assert_eq!(status(&r, RuleId::R21), Status::Violated);
    }

    #[test]
    fn rule_subset_only_reports_selected() {
        let set = RuleSet::empty().with(RuleId::R5).with(RuleId::R1);
        let r = evaluate_with(
            &Params::new(&parse_array("{10,9,5,1;1,4,5,10}").unwrap()),
            Assumption::None,
            set,
            Precision::default(),
        );
        let ids: Vec<_> = r.verdicts.iter().map(|v| v.id).collect();
        assert_eq!(ids, [RuleId::R1, RuleId::R5]);
    }

    #[test]
    fn first_violation_matches_report() {
        for s in [
            "{10,9,5,1;1,4,5,10}",
            "{6,5,4,1;1,4,5,6}",
            "{4,3,2,1;1,2,3,4}",
            "{7,6,4,4;1,1,1,6}",
        ] {
            let arr = parse_array(s).unwrap();
            let p = Params::new(&arr);
            let rep = evaluate_with(&p, Assumption::None, RuleSet::all(), Precision::default());
            let first = first_violation(&p, Assumption::None, RuleSet::all(), Precision::default());
            assert_eq!(first.is_some(), rep.overall == Overall::Infeasible, "{s}");
            if let Some(id) = first {
                assert_eq!(rep.verdict(id).unwrap().status, Status::Violated);
            }
        }
    }
}
