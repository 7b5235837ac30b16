//! Genericity of Langlands quotients and reducibility verdicts.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gamma::{
    local_coeff_for_param, ord_gamma_rs, so_rank1_standard_irreducible, CoeffMode, LocalCoeffOrder, OrderAtPoint,
};
use crate::half::HalfInt;
use crate::param::LParameter;
use crate::rep::{Flavor, LanglandsDatum, TemperedRep};
use crate::segment::Segment;
use crate::symbols::{Cuspidal, QuadChar};

/// A firing condition. Factor indices are 1-based, in the untwisted normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Linked { i: usize, j: usize },
    LinkedWithDual { i: usize, j: usize },
    RankOneReducible { i: usize, factor: String },
    SteinbergBound { i: usize, a: u32, four_s: i64 },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Linked { i, j } => write!(f, "factors {i} and {j} are linked"),
            Witness::LinkedWithDual { i, j } => write!(f, "factor {i} is linked with the dual of factor {j}"),
            Witness::RankOneReducible { i, factor } => {
                write!(f, "rank-one standard module of factor {i} ({factor}) reduces")
            }
            Witness::SteinbergBound { i, a, four_s } => write!(f, "a={a} < 4s={four_s} (factor {i})"),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericityVerdict {
    pub generic: bool,
    pub witnesses: Vec<Witness>,
}

/// `l(sigma)` on the tower with discriminant character `chi_v`.
pub fn l_of_tempered(sigma: &TemperedRep, chi_v: &QuadChar) -> i64 {
    if chi_v.is_trivial() && sigma.param().m_s2() > 0 {
        2
    } else {
        0
    }
}

fn four_s(seg: &Segment) -> i64 {
    2 * seg.center().twice()
}

fn require_standard(pi: &LanglandsDatum) -> Result<()> {
    if pi.is_standard() {
        Ok(())
    } else {
        Err(Error::NotStandard)
    }
}

/// Irreducibility of `gamma_psi^{-1} delta nu^s ⋊ sigma` on the metaplectic side.
pub fn mp_rank1_irreducible(seg: &Segment, sigma: &TemperedRep) -> Result<bool> {
    let s = seg.center();
    if !s.is_positive() {
        return Err(Error::NonPositiveExponent(seg.to_string()));
    }
    if !seg.is_trivial_steinberg_form() {
        return so_rank1_standard_irreducible(&seg.unitarized(), sigma.param(), s);
    }
    if s == HalfInt::HALF {
        return Ok(l_of_tempered(sigma, &QuadChar::trivial()) == 2);
    }
    match sigma.param().a0() {
        // A non-generic quotient of a generic standard module forces reducibility.
        Some(a0) if (a0 as i64) < four_s(seg) => Ok(false),
        Some(a0) => Ok(a0 as i64 == four_s(seg)),
        None => Ok(false),
    }
}

/// Route A: the combinatorial criterion.
pub fn is_generic_lq(pi: &LanglandsDatum) -> Result<GenericityVerdict> {
    require_standard(pi)?;
    let d = pi.untwisted();
    let f = d.factors();
    let sigma = d.tempered();
    let mut witnesses = Vec::new();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if f[i].linked(&f[j]) {
                witnesses.push(Witness::Linked { i: i + 1, j: j + 1 });
            }
            if f[i].linked(&f[j].dual()) {
                witnesses.push(Witness::LinkedWithDual { i: i + 1, j: j + 1 });
            }
        }
    }
    let orthogonal = d.flavor() == Flavor::OddOrthogonal;
    for (i, seg) in f.iter().enumerate() {
        if seg.is_trivial_steinberg_form() && !orthogonal {
            for s in sigma.param().summands() {
                if s.rho.is_trivial_character() && s.a % 2 == 0 && (s.a as i64) < four_s(seg) {
                    witnesses.push(Witness::SteinbergBound { i: i + 1, a: s.a, four_s: four_s(seg) });
                }
            }
        } else if !so_rank1_standard_irreducible(&seg.unitarized(), sigma.param(), seg.center())? {
            witnesses.push(Witness::RankOneReducible { i: i + 1, factor: seg.to_string() });
        }
    }
    let generic = witnesses.is_empty();
    if generic && d.steinberg_indices().len() > 1 {
        return Err(Error::InvariantBreach(format!("{pi} judged generic with two trivial-Steinberg factors")));
    }
    Ok(GenericityVerdict { generic, witnesses })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// `gamma(delta_i nu^{s_i} x (delta_j nu^{s_j})~)`, for `s_i > s_j`.
    Swap,
    /// `gamma(delta_i nu^{s_i} x delta_j nu^{s_j})`, from moving past a dual.
    DualPair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairTerm {
    pub i: usize,
    pub j: usize,
    pub kind: PairKind,
    pub order: OrderAtPoint,
}

/// The full local coefficient at the Langlands point, factor by factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientReport {
    pub mode: CoeffMode,
    pub pairs: Vec<PairTerm>,
    pub factors: Vec<LocalCoeffOrder>,
    pub total: OrderAtPoint,
}

pub fn coefficient_report(pi: &LanglandsDatum) -> Result<CoefficientReport> {
    require_standard(pi)?;
    let d = pi.untwisted();
    let f = d.factors();
    let mode = match d.flavor() {
        Flavor::Metaplectic => CoeffMode::Metaplectic,
        Flavor::OddOrthogonal => CoeffMode::Orthogonal,
    };
    let mut pairs = Vec::new();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if f[i].center() > f[j].center() {
                let order = ord_gamma_rs(&f[i], &f[j].dual(), HalfInt::ZERO);
                pairs.push(PairTerm { i: i + 1, j: j + 1, kind: PairKind::Swap, order });
            }
            let order = ord_gamma_rs(&f[i], &f[j], HalfInt::ZERO);
            pairs.push(PairTerm { i: i + 1, j: j + 1, kind: PairKind::DualPair, order });
        }
    }
    let factors: Vec<LocalCoeffOrder> =
        f.iter().map(|s| local_coeff_for_param(s, d.tempered().param(), mode, HalfInt::ZERO)).collect();
    let total = pairs.iter().map(|p| p.order).sum::<OrderAtPoint>() + factors.iter().map(|c| c.total).sum();
    Ok(CoefficientReport { mode, pairs, factors, total })
}

/// Route B: holomorphy of the local coefficient at the Langlands point.
pub fn is_generic_lq_via_coeff(pi: &LanglandsDatum) -> Result<bool> {
    Ok(coefficient_report(pi)?.total.is_holomorphic())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducibilityVerdict {
    pub reducible: bool,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
}

fn require_generic(pi: &LanglandsDatum) -> Result<()> {
    let v = is_generic_lq(pi)?;
    if v.generic {
        Ok(())
    } else {
        Err(Error::NotGeneric(v.witnesses.iter().map(|w| w.to_string()).collect()))
    }
}

/// Reducibility of the standard module of a datum with generic Langlands quotient.
pub fn standard_module_reducible(pi: &LanglandsDatum) -> Result<ReducibilityVerdict> {
    require_generic(pi)?;
    let d = pi.untwisted();
    let sigma = d.tempered();
    let mut witnesses = Vec::new();
    let mut notes = Vec::new();
    if d.flavor() == Flavor::Metaplectic {
        for i in d.steinberg_indices() {
            let seg = &d.factors()[i];
            if mp_rank1_irreducible(seg, sigma)? {
                continue;
            }
            if seg.center() == HalfInt::HALF {
                witnesses.push(format!("{seg} over sigma with l(sigma)=0"));
            } else {
                let a0 = sigma.param().a0().map_or("inf".to_string(), |a| a.to_string());
                witnesses.push(format!("{seg}: 4s={} < a0={a0}", four_s(seg)));
            }
        }
        if l_of_tempered(sigma, &QuadChar::trivial()) == 2 {
            notes.push(
                "l(sigma)=2: genericity forces every trivial-Steinberg factor to be nu^1/2, which is irreducible here"
                    .into(),
            );
        }
    }
    Ok(ReducibilityVerdict { reducible: !witnesses.is_empty(), witnesses, notes })
}

/// Whether the Langlands quotient on `SO(2n+1)` with the same data is generic.
pub fn generic_transfer_is_generic(pi: &LanglandsDatum) -> Result<bool> {
    require_generic(pi)?;
    Ok(pi.untwisted().steinberg_indices().is_empty())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenericPosition {
    Subrepresentation,
    Quotient,
    /// Reducibility at `s = 0`; no Langlands quotient to place.
    UnitaryAxis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CuspidalReducibility {
    pub s0: HalfInt,
    pub position: GenericPosition,
}

/// Reducibility point of `gamma_psi^{-1} tau nu^s ⋊ sigma` for cuspidal generic `sigma`.
pub fn cuspidal_reducibility_point(tau: &Cuspidal, sigma_param: &LParameter) -> Result<CuspidalReducibility> {
    use GenericPosition::*;
    if !tau.is_self_dual() {
        return Err(Error::NotSelfDual(tau.to_string()));
    }
    sigma_param.validate().map_err(Error::InvalidParameter)?;
    let one = Cuspidal::trivial();
    let has_s2 = sigma_param.contains(&one, 2);
    let rest = if has_s2 { sigma_param.with_removed(&one, 2, 1).expect("present") } else { sigma_param.clone() };
    let (s0, position) = if tau.is_symplectic() {
        if rest.contains(tau, 1) {
            (HalfInt::ONE, Subrepresentation)
        } else {
            (HalfInt::ZERO, UnitaryAxis)
        }
    } else if tau.is_trivial_character() {
        if has_s2 {
            (HalfInt::from_twice(3), Subrepresentation)
        } else {
            (HalfInt::HALF, Quotient)
        }
    } else {
        (HalfInt::HALF, Subrepresentation)
    };
    Ok(CuspidalReducibility { s0, position })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteEmbedding {
    pub segments: Vec<Segment>,
    /// Rank of the remaining cuspidal support `sigma'_cusp`.
    pub residual_rank: u64,
}

/// The segments through which the discrete series with parameter `phi` embeds.
pub fn discrete_series_embedding(phi: &LParameter) -> Result<DiscreteEmbedding> {
    phi.validate().map_err(Error::InvalidParameter)?;
    if !phi.is_discrete() {
        return Err(Error::NotDiscrete);
    }
    let mut segments = Vec::new();
    let summands = phi.summands();
    let mut k = 0;
    while k < summands.len() {
        let rho = &summands[k].rho;
        let mut a_vals = Vec::new();
        while k < summands.len() && &summands[k].rho == rho {
            a_vals.push(summands[k].a as i64);
            k += 1;
        }
        for pair in a_vals.chunks(2) {
            let top = HalfInt::from_twice(pair[pair.len() - 1] - 1);
            let bottom = if pair.len() == 2 {
                HalfInt::from_twice(1 - pair[0])
            } else if pair[0] % 2 == 0 {
                HalfInt::HALF
            } else {
                HalfInt::ONE
            };
            if bottom <= top {
                segments.push(Segment::new(rho.clone(), bottom, top)?);
            }
        }
    }
    let used: u64 = segments.iter().map(Segment::gl_dim).sum();
    Ok(DiscreteEmbedding { segments, residual_rank: phi.rank() - used })
}
