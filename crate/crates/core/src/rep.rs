//! Tempered representations and Langlands data.

use std::fmt;

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::param::LParameter;
use crate::segment::Segment;
use crate::symbols::QuadChar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Metaplectic,
    OddOrthogonal,
}

impl Flavor {
    pub fn flipped(self) -> Flavor {
        match self {
            Flavor::Metaplectic => Flavor::OddOrthogonal,
            Flavor::OddOrthogonal => Flavor::Metaplectic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TowerSign {
    Plus,
    Minus,
}

/// The generic member of the tempered packet of `param`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TemperedRep {
    flavor: Flavor,
    param: LParameter,
    sign: TowerSign,
}

impl TemperedRep {
    pub fn new(flavor: Flavor, param: LParameter, sign: TowerSign) -> Result<Self> {
        param.validate().map_err(Error::InvalidParameter)?;
        // A generic member sits over the split form, SO(2n+1)^+.
        if sign == TowerSign::Minus {
            return Err(Error::NonGenericSign);
        }
        Ok(TemperedRep { flavor, param, sign })
    }

    pub fn metaplectic(param: LParameter) -> Result<Self> {
        Self::new(Flavor::Metaplectic, param, TowerSign::Plus)
    }

    /// `mu_0`, the rank-zero metaplectic representation.
    pub fn mu0() -> Self {
        TemperedRep { flavor: Flavor::Metaplectic, param: LParameter::empty(), sign: TowerSign::Plus }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn param(&self) -> &LParameter {
        &self.param
    }

    pub fn sign(&self) -> TowerSign {
        self.sign
    }

    pub fn rank(&self) -> u64 {
        self.param.rank()
    }

    pub fn transfer(&self) -> TemperedRep {
        TemperedRep { flavor: self.flavor.flipped(), ..self.clone() }
    }
}

impl fmt::Display for TemperedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.flavor {
            Flavor::Metaplectic => write!(f, "T{}", self.param),
            Flavor::OddOrthogonal => write!(f, "SO{}", self.param),
        }
    }
}

/// `L(delta_1 nu^{s_1}, ..., delta_k nu^{s_k}; sigma)`, also read as its standard module.
///
/// `psi_twist = chi` means the GL factors are induced through `gamma_{psi_chi}`,
/// which equals inducing the `chi`-twisted factors through `gamma_psi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LanglandsDatum {
    factors: Vec<Segment>,
    tempered: TemperedRep,
    psi_twist: QuadChar,
}

fn check_positive(factors: &[Segment]) -> Result<()> {
    match factors.iter().find(|s| !s.center().is_positive()) {
        Some(s) => Err(Error::NonPositiveExponent(s.to_string())),
        None => Ok(()),
    }
}

/// Sorts factors into the normal form. Rejects exponents `<= 0`.
pub fn normalize_datum(mut factors: Vec<Segment>, tempered: TemperedRep) -> Result<LanglandsDatum> {
    check_positive(&factors)?;
    factors.sort_by(|x, y| x.standard_cmp(y));
    Ok(LanglandsDatum { factors, tempered, psi_twist: QuadChar::trivial() })
}

impl LanglandsDatum {
    /// Accepts factors already in standard order (weakly decreasing exponents).
    pub fn new(factors: Vec<Segment>, tempered: TemperedRep, psi_twist: QuadChar) -> Result<Self> {
        check_positive(&factors)?;
        if factors.windows(2).any(|w| w[0].center() < w[1].center()) {
            return Err(Error::NotStandard);
        }
        let d = normalize_datum(factors, tempered)?;
        Ok(d.with_twist(psi_twist))
    }

    pub fn tempered_only(tempered: TemperedRep) -> Self {
        LanglandsDatum { factors: Vec::new(), tempered, psi_twist: QuadChar::trivial() }
    }

    pub fn with_twist(mut self, chi: QuadChar) -> Self {
        self.psi_twist = chi;
        self
    }

    pub fn factors(&self) -> &[Segment] {
        &self.factors
    }

    pub fn tempered(&self) -> &TemperedRep {
        &self.tempered
    }

    pub fn psi_twist(&self) -> &QuadChar {
        &self.psi_twist
    }

    pub fn flavor(&self) -> Flavor {
        self.tempered.flavor
    }

    pub fn rank(&self) -> u64 {
        self.factors.iter().map(Segment::gl_dim).sum::<u64>() + self.tempered.rank()
    }

    /// The same representation written with `gamma_psi`: every factor twisted by `psi_twist`.
    pub fn untwisted(&self) -> LanglandsDatum {
        if self.psi_twist.is_trivial() {
            return self.clone();
        }
        let factors = self.factors.iter().map(|s| s.twisted(&self.psi_twist)).collect();
        normalize_datum(factors, self.tempered.clone()).expect("twisting keeps exponents")
    }

    /// Indices of factors of the form `St_{2s} nu^s`.
    pub fn steinberg_indices(&self) -> Vec<usize> {
        (0..self.factors.len()).filter(|&i| self.factors[i].is_trivial_steinberg_form()).collect()
    }

    pub fn is_standard(&self) -> bool {
        self.factors.iter().all(|s| s.center().is_positive())
            && self.factors.windows(2).all(|w| w[0].center() >= w[1].center())
    }

    /// Transfer of Langlands data between Mp(2n) and SO(2n+1): swap flavour, keep everything else.
    pub fn transfer(&self) -> LanglandsDatum {
        LanglandsDatum { tempered: self.tempered.transfer(), ..self.clone() }
    }

    pub fn exponents(&self) -> Vec<HalfInt> {
        self.factors.iter().map(Segment::center).collect()
    }
}

/// Functional form of [`LanglandsDatum::transfer`].
pub fn theta_psi_transfer(pi: &LanglandsDatum) -> LanglandsDatum {
    pi.transfer()
}

impl fmt::Display for LanglandsDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            write!(f, "{}", self.tempered)?;
        } else {
            f.write_str("L(")?;
            for (i, s) in self.factors.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, "; {})", self.tempered)?;
        }
        if !self.psi_twist.is_trivial() {
            write!(f, " twist {}", self.psi_twist)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::Cuspidal;

    fn st(n: u32, s2: i64) -> Segment {
        Segment::steinberg(n, HalfInt::from_twice(s2))
    }

    #[test]
    fn normalize_examples() {
        let d = normalize_datum(vec![st(1, 1), st(2, 3)], TemperedRep::mu0()).unwrap();
        assert_eq!(d.factors(), &[st(2, 3), st(1, 1)]);
        let again = normalize_datum(d.factors().to_vec(), TemperedRep::mu0()).unwrap();
        assert_eq!(again, d);
        let chi = Cuspidal::quadratic(QuadChar::named("a").unwrap());
        let nu1 = st(1, 2);
        let chinu1 = Segment::point(chi, HalfInt::ONE);
        let d = normalize_datum(vec![chinu1.clone(), nu1.clone()], TemperedRep::mu0()).unwrap();
        assert_eq!(d.factors(), &[nu1, chinu1]);
        assert!(matches!(normalize_datum(vec![st(2, 0)], TemperedRep::mu0()), Err(Error::NonPositiveExponent(_))));
    }

    #[test]
    fn new_rejects_unsorted() {
        assert_eq!(
            LanglandsDatum::new(vec![st(1, 1), st(1, 3)], TemperedRep::mu0(), QuadChar::trivial()),
            Err(Error::NotStandard)
        );
    }

    #[test]
    fn transfer_is_involution() {
        let d = normalize_datum(vec![st(1, 1)], TemperedRep::mu0()).unwrap();
        let t = theta_psi_transfer(&d);
        assert_eq!(t.flavor(), Flavor::OddOrthogonal);
        assert_eq!(t.factors(), d.factors());
        assert_eq!(t.to_string(), "L(St(1) v^1/2; SO{})");
        assert_eq!(t.transfer(), d);
    }

    #[test]
    fn sign_minus_rejected() {
        assert_eq!(
            TemperedRep::new(Flavor::Metaplectic, LParameter::empty(), TowerSign::Minus),
            Err(Error::NonGenericSign)
        );
    }

    #[test]
    fn rank_counts_gl_blocks() {
        let rho = Cuspidal::symbol("r", 2, crate::symbols::SelfDualType::Symplectic).unwrap();
        let s = Segment::unitary(rho.clone(), 3).shifted(HalfInt::ONE);
        let p = LParameter::from_summands([(rho, 1, 1)]);
        let d = normalize_datum(vec![s], TemperedRep::metaplectic(p).unwrap()).unwrap();
        assert_eq!(d.rank(), 6 + 1);
    }
}
