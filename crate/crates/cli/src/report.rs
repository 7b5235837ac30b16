//! Output records and their text rendering. JSON field names are stable.

use std::fmt::Write as _;

use mpgen_core::classify::{CoefficientReport, PairKind, Witness};
use mpgen_core::gamma::{CoeffMode, ElementaryTerm, LocalCoeffOrder};
use mpgen_core::theta::{Branch, DispatchCase, FirstOccurrence, LiftDatum, LiftSource, Origin, Tower};
use mpgen_core::{HalfInt, LParameter, Segment};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct SegmentJson {
    pub rho: String,
    pub b: HalfInt,
    pub a: HalfInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin: Option<Origin>,
}

impl SegmentJson {
    pub fn new(s: &Segment, origin: Option<Origin>) -> Self {
        SegmentJson { rho: s.rho().to_string(), b: s.b(), a: s.a(), origin }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TemperedJson {
    pub symbol: &'static str,
    pub level: i64,
    pub source: LiftSource,
    pub param: Option<LParameter>,
    pub dim: u64,
    pub st2_copies: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftJson {
    pub branch: Branch,
    pub chi_v: String,
    pub l: i64,
    pub m: i64,
    pub zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<DispatchCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extrapolated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gl_factors: Option<Vec<SegmentJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tempered: Option<TemperedJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

impl LiftJson {
    pub fn lift(x: &LiftDatum) -> Self {
        LiftJson {
            branch: x.tower.branch,
            chi_v: x.tower.chi_v.to_string(),
            l: x.level,
            m: x.m,
            zero: false,
            case: Some(x.case),
            extrapolated: Some(x.extrapolated),
            gl_factors: Some(x.factors.iter().map(|f| SegmentJson::new(&f.segment, Some(f.origin))).collect()),
            tempered: Some(TemperedJson {
                symbol: "theta",
                level: x.tempered.level,
                source: x.tempered.source.clone(),
                param: x.tempered.param.clone(),
                dim: x.tempered.dim,
                st2_copies: x.tempered.st2_copies,
            }),
            text: Some(x.to_string()),
        }
    }

    pub fn zero(tower: &Tower, l: i64, m: i64) -> Self {
        LiftJson {
            branch: tower.branch,
            chi_v: tower.chi_v.to_string(),
            l,
            m,
            zero: true,
            case: None,
            extrapolated: None,
            gl_factors: None,
            tempered: None,
            text: None,
        }
    }

    fn text_line(&self) -> String {
        let tower = if self.chi_v == "1" { self.branch.to_string() } else { format!("{}:{}", self.chi_v, self.branch) };
        let body = self.text.as_deref().unwrap_or("0");
        let mut s = format!("{tower} l={} O({}): {body}", self.l, self.m);
        if self.extrapolated == Some(true) {
            s.push_str("  [extrapolated shape]");
        }
        s
    }
}

/// Result of `classify`, `occurrence`, `lift` and `table`.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic_via_coefficient: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Witness>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<CoefficientReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub standard_reducible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reducibility_witnesses: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transfer_generic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_occurrence: Option<FirstOccurrence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lifts: Option<Vec<LiftJson>>,
}

fn factor_line(k: usize, c: &LocalCoeffOrder) -> String {
    let den = c.denominator.map_or("-".to_string(), |d| d.0.to_string());
    format!(
        "  factor {k}: sym2 {} + rs {} = numerator {}, denominator {den}, order {}",
        c.sym2.0, c.rankin_selberg.0, c.numerator.0, c.total.0
    )
}

fn coefficient_text(c: &CoefficientReport, out: &mut String) {
    let mode = match c.mode {
        CoeffMode::Metaplectic => "metaplectic",
        CoeffMode::Orthogonal => "orthogonal",
    };
    let _ = writeln!(out, "local coefficient ({mode}): order {} at the Langlands point", c.total.0);
    for p in c.pairs.iter().filter(|p| p.order.0 != 0) {
        let kind = match p.kind {
            PairKind::Swap => "swap",
            PairKind::DualPair => "dual pair",
        };
        let _ = writeln!(out, "  {kind} ({}, {}): {}", p.i, p.j, p.order.0);
    }
    for (k, f) in c.factors.iter().enumerate() {
        let _ = writeln!(out, "{}", factor_line(k + 1, f));
    }
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: {}", self.input);
        if let Some(g) = self.generic {
            let _ = writeln!(out, "generic (combinatorial): {g}");
        }
        if let Some(g) = self.generic_via_coefficient {
            let _ = writeln!(out, "generic (local coefficient): {g}");
        }
        if let Some(w) = &self.witnesses {
            if !w.is_empty() {
                let _ = writeln!(out, "witnesses:");
                for x in w {
                    let _ = writeln!(out, "  {x}");
                }
            }
        }
        if let Some(c) = &self.coefficient {
            coefficient_text(c, &mut out);
        }
        if let Some(r) = self.standard_reducible {
            let _ = writeln!(out, "standard module: {}", if r { "reducible" } else { "irreducible" });
            for w in self.reducibility_witnesses.iter().flatten() {
                let _ = writeln!(out, "  {w}");
            }
        }
        for n in self.notes.iter().flatten() {
            let _ = writeln!(out, "note: {n}");
        }
        if let Some(t) = self.transfer_generic {
            let _ = writeln!(out, "transfer to SO(2n+1) generic: {t}");
        }
        if let Some(fo) = &self.first_occurrence {
            let _ = writeln!(
                out,
                "first occurrence: l={} m_down={} m_up={} (down branch {})",
                fo.l, fo.m_down, fo.m_up, fo.down_branch
            );
        }
        for x in self.lifts.iter().flatten() {
            let _ = writeln!(out, "{}", x.text_line());
        }
        out
    }
}

/// Result of `gamma-ord`.
#[derive(Debug, Clone, Serialize)]
pub struct GammaReport {
    pub kind: String,
    pub input: Vec<String>,
    pub at: HalfInt,
    pub order: i64,
    pub terms: Vec<ElementaryTerm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<LocalCoeffOrder>,
}

impl GammaReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} at u={}: order {}", self.kind, self.input.join(" "), self.at, self.order);
        if let Some(c) = &self.coefficient {
            let _ = writeln!(out, "{}", factor_line(1, c).trim_start());
        }
        for t in &self.terms {
            let _ = writeln!(out, "  {} at {}: {:+}", t.factor, t.argument, t.order);
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestLine {
    pub check: String,
    pub cases: usize,
    pub violations: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub examples: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub checks: Vec<SelftestLine>,
    pub breaches: Vec<String>,
}

impl SelftestReport {
    pub fn clean(&self) -> bool {
        self.breaches.is_empty() && self.checks.iter().all(|c| c.violations == 0)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.violations == 0 { "ok" } else { "FAIL" };
            let _ = writeln!(out, "{verdict:4} {}: {} cases, {} violations", c.check, c.cases, c.violations);
            for e in &c.examples {
                let _ = writeln!(out, "       {e}");
            }
        }
        for b in &self.breaches {
            let _ = writeln!(out, "breach: {b}");
        }
        out
    }
}
