//! L-parameters: multisets of summands `rho (x) S_a`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::symbols::{Cuspidal, QuadChar, SelfDualType};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Summand {
    pub rho: Cuspidal,
    pub a: u32,
    pub mult: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamViolation {
    #[error("summand {rho}*S{a}: S_a needs a >= 1")]
    ZeroA { rho: String, a: u32 },
    #[error("summand {rho}*S{a}: rho is not self-dual")]
    NotSelfDual { rho: String, a: u32 },
    #[error("summand {rho}*S{a}: orthogonal-type rho needs even a")]
    OrthogonalOddA { rho: String, a: u32 },
    #[error("summand {rho}*S{a}: symplectic-type rho needs odd a")]
    SymplecticEvenA { rho: String, a: u32 },
    #[error("summand {rho}*S{a}: symplectic-type rho must have even dimension")]
    SymplecticOddDim { rho: String, a: u32 },
    #[error("total dimension {dim} is odd")]
    OddDimension { dim: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSummary {
    pub rank: u64,
    pub discrete: bool,
}

/// A multiset of summands, kept sorted by `(rho, a)` with merged multiplicities.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LParameter {
    summands: Vec<Summand>,
}

impl LParameter {
    pub fn empty() -> Self {
        LParameter::default()
    }

    pub fn from_summands<I>(items: I) -> Self
    where
        I: IntoIterator<Item = (Cuspidal, u32, u32)>,
    {
        let mut p = LParameter::empty();
        for (rho, a, m) in items {
            p.add_in_place(rho, a, m);
        }
        p
    }

    fn add_in_place(&mut self, rho: Cuspidal, a: u32, k: u32) {
        if k == 0 {
            return;
        }
        match self.summands.binary_search_by(|s| (&s.rho, s.a).cmp(&(&rho, a))) {
            Ok(i) => self.summands[i].mult += k,
            Err(i) => self.summands.insert(i, Summand { rho, a, mult: k }),
        }
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn mult(&self, rho: &Cuspidal, a: u32) -> u32 {
        self.summands.iter().find(|s| &s.rho == rho && s.a == a).map_or(0, |s| s.mult)
    }

    pub fn contains(&self, rho: &Cuspidal, a: u32) -> bool {
        self.mult(rho, a) > 0
    }

    pub fn with_added(&self, rho: &Cuspidal, a: u32, k: u32) -> LParameter {
        let mut p = self.clone();
        p.add_in_place(rho.clone(), a, k);
        p
    }

    /// Removes `k` copies of `rho (x) S_a`; `None` if there are fewer.
    pub fn with_removed(&self, rho: &Cuspidal, a: u32, k: u32) -> Option<LParameter> {
        let mut p = self.clone();
        let i = p.summands.iter().position(|s| &s.rho == rho && s.a == a)?;
        let m = p.summands[i].mult;
        if m < k {
            return None;
        }
        if m == k {
            p.summands.remove(i);
        } else {
            p.summands[i].mult = m - k;
        }
        Some(p)
    }

    pub fn twisted(&self, chi: &QuadChar) -> LParameter {
        LParameter::from_summands(self.summands.iter().map(|s| (s.rho.twisted(chi), s.a, s.mult)))
    }

    pub fn dim(&self) -> u64 {
        self.summands.iter().map(|s| s.mult as u64 * s.rho.dim() as u64 * s.a as u64).sum()
    }

    pub fn rank(&self) -> u64 {
        self.dim() / 2
    }

    pub fn is_discrete(&self) -> bool {
        self.summands.iter().all(|s| s.mult == 1)
    }

    /// Smallest even `a` with `1 (x) S_a` present; `None` stands for `+infinity`.
    pub fn a0(&self) -> Option<u32> {
        self.summands.iter().filter(|s| s.rho.is_trivial_character() && s.a % 2 == 0).map(|s| s.a).min()
    }

    /// Multiplicity of `1 (x) S_2`.
    pub fn m_s2(&self) -> u32 {
        self.mult(&Cuspidal::trivial(), 2)
    }

    pub fn validate(&self) -> Result<ParamSummary, Vec<ParamViolation>> {
        let mut errs = Vec::new();
        for s in &self.summands {
            let (rho, a) = (s.rho.to_string(), s.a);
            if a == 0 {
                errs.push(ParamViolation::ZeroA { rho, a });
                continue;
            }
            match s.rho.self_dual_type() {
                SelfDualType::NonSelfDual => errs.push(ParamViolation::NotSelfDual { rho, a }),
                SelfDualType::Orthogonal if a % 2 == 1 => errs.push(ParamViolation::OrthogonalOddA { rho, a }),
                SelfDualType::Symplectic if a % 2 == 0 => errs.push(ParamViolation::SymplecticEvenA { rho, a }),
                SelfDualType::Symplectic if s.rho.dim() % 2 == 1 => {
                    errs.push(ParamViolation::SymplecticOddDim { rho, a })
                }
                _ => {}
            }
        }
        let dim = self.dim();
        if dim % 2 == 1 {
            errs.push(ParamViolation::OddDimension { dim });
        }
        if errs.is_empty() {
            Ok(ParamSummary { rank: dim / 2, discrete: self.is_discrete() })
        } else {
            Err(errs)
        }
    }
}

impl fmt::Display for LParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}*S{}", s.rho, s.a)?;
            if s.mult > 1 {
                write!(f, "^{}", s.mult)?;
            }
        }
        f.write_str("}")
    }
}

impl fmt::Debug for LParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize)]
struct SummandJson {
    rho: String,
    a: u32,
    mult: u32,
}

impl Serialize for LParameter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<SummandJson> =
            self.summands.iter().map(|x| SummandJson { rho: x.rho.to_string(), a: x.a, mult: x.mult }).collect();
        v.serialize(s)
    }
}
