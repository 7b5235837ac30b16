//! Theta lifts to the odd orthogonal towers.

use std::fmt;

use serde::Serialize;

use crate::classify::{is_generic_lq, l_of_tempered, standard_module_reducible};
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::param::LParameter;
use crate::rep::{Flavor, LanglandsDatum, TemperedRep};
use crate::segment::Segment;
use crate::symbols::{Cuspidal, QuadChar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Split,
    Nonsplit,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Split => "split",
            Branch::Nonsplit => "nonsplit",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tower {
    pub chi_v: QuadChar,
    pub branch: Branch,
}

impl Tower {
    pub fn new(chi_v: QuadChar, branch: Branch) -> Self {
        Tower { chi_v, branch }
    }

    pub fn split() -> Self {
        Tower::new(QuadChar::trivial(), Branch::Split)
    }

    pub fn nonsplit() -> Self {
        Tower::new(QuadChar::trivial(), Branch::Nonsplit)
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chi_v.is_trivial() {
            write!(f, "{}", self.branch)
        } else {
            write!(f, "{}:{}", self.chi_v, self.branch)
        }
    }
}

/// `l = 2n + 1 - m`, always even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiftLevel(i64);

impl LiftLevel {
    pub fn new(l: i64) -> Result<Self> {
        if l % 2 != 0 {
            return Err(Error::OddLevel(l));
        }
        Ok(LiftLevel(l))
    }

    /// The level of the lift to `O(m)` from a group of rank `n`.
    pub fn from_target(n: u64, m: i64) -> Result<Self> {
        if m < 1 || m % 2 == 0 {
            return Err(Error::BadTarget(m));
        }
        Ok(LiftLevel(2 * n as i64 + 1 - m))
    }

    pub fn get(self) -> i64 {
        self.0
    }

    pub fn target_dim(self, n: u64) -> i64 {
        2 * n as i64 + 1 - self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FirstOccurrence {
    pub l: i64,
    pub m_down: i64,
    pub m_up: i64,
    pub down_branch: Branch,
}

impl FirstOccurrence {
    /// First non-zero level on `branch`.
    pub fn level_on(&self, branch: Branch) -> i64 {
        if branch == self.down_branch {
            self.l
        } else {
            -self.l - 2
        }
    }
}

fn require_generic_mp(pi: &LanglandsDatum) -> Result<LanglandsDatum> {
    if pi.flavor() != Flavor::Metaplectic {
        return Err(Error::WrongFlavor { expected: "metaplectic" });
    }
    let v = is_generic_lq(pi)?;
    if !v.generic {
        return Err(Error::NotGeneric(v.witnesses.iter().map(|w| w.to_string()).collect()));
    }
    Ok(pi.untwisted())
}

fn has_nu_half(d: &LanglandsDatum) -> bool {
    d.factors().iter().any(|s| s.is_trivial_steinberg_form() && s.center() == HalfInt::HALF)
}

fn occurrence_of(d: &LanglandsDatum, chi_v: &QuadChar) -> FirstOccurrence {
    let n = d.rank() as i64;
    if !chi_v.is_trivial() {
        return FirstOccurrence { l: 0, m_down: 2 * n + 1, m_up: 2 * n + 3, down_branch: Branch::Split };
    }
    let l = if has_nu_half(d) { 2 } else { l_of_tempered(d.tempered(), chi_v) };
    let m_down = 2 * n + 1 - l;
    FirstOccurrence { l, m_down, m_up: 4 * n + 4 - m_down, down_branch: Branch::Split }
}

pub fn first_occurrence(pi: &LanglandsDatum, chi_v: &QuadChar) -> Result<FirstOccurrence> {
    let d = require_generic_mp(pi)?;
    Ok(occurrence_of(&d, chi_v))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum LiftSource {
    Sigma,
    /// `sigma'` with `removed_s2` copies of `S_2` taken out of the parameter.
    SigmaPrime {
        removed_s2: u32,
    },
}

/// The tempered part `theta_{l'}(sigma)` of a lift, with its derived parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemperedLift {
    pub tower: Tower,
    pub level: i64,
    pub source: LiftSource,
    /// `None` where the parameter is not determined (the `chi_V` towers).
    pub param: Option<LParameter>,
    pub dim: u64,
    /// Copies of `St_2` induced on top, as in `(St_2, h-1) ⋊ theta_{-2}(sigma')`.
    pub st2_copies: u32,
}

impl fmt::Display for TemperedLift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.st2_copies > 0 {
            write!(f, "(St(2),{}) x ", self.st2_copies)?;
        }
        let who = match self.source {
            LiftSource::Sigma => "sigma",
            LiftSource::SigmaPrime { .. } => "sigma'",
        };
        write!(f, "theta_{}({who})", self.level)?;
        match &self.param {
            Some(p) => write!(f, "{p}"),
            None => f.write_str("{?}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// A GL factor of the input.
    Source,
    /// Contributed by the tempered lift (the `nu`-chain, `St_3 nu^{1/2}`).
    Lift,
    /// `delta([nu^{1/2}, nu^{3/2}])` replacing `nu^{1/2}` and `nu^{3/2}`.
    Merged,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftFactor {
    pub segment: Segment,
    pub origin: Origin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DispatchCase {
    /// Standard module irreducible.
    StandardIrreducible,
    /// `l(sigma) = 0` with a trivial-Steinberg factor.
    Exceptional,
    /// Non-trivial discriminant character.
    TwistedTower,
    /// Lift of a tempered representation alone.
    Tempered,
}

/// Langlands datum of `theta_l(pi)` on `O(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftDatum {
    pub tower: Tower,
    pub level: i64,
    pub m: i64,
    pub factors: Vec<LiftFactor>,
    pub tempered: TemperedLift,
    pub case: DispatchCase,
    /// The displayed statements do not cover this shape; same rules applied.
    pub extrapolated: bool,
}

impl LiftDatum {
    pub fn segments(&self) -> impl Iterator<Item = &Segment> {
        self.factors.iter().map(|f| &f.segment)
    }

    pub fn rank_accounting_holds(&self) -> bool {
        let gl: u64 = self.segments().map(Segment::gl_dim).sum();
        (2 * gl + self.tempered.dim) as i64 == self.m - 1
    }

    pub fn is_standard(&self) -> bool {
        self.factors.iter().all(|f| f.segment.center().is_positive())
            && self.factors.windows(2).all(|w| w[0].segment.center() >= w[1].segment.center())
    }
}

impl fmt::Display for LiftDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.tempered);
        }
        f.write_str("L(")?;
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", x.segment)?;
        }
        write!(f, "; {})", self.tempered)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftResult {
    Zero,
    Lift(LiftDatum),
}

impl LiftResult {
    pub fn datum(&self) -> Option<&LiftDatum> {
        match self {
            LiftResult::Zero => None,
            LiftResult::Lift(d) => Some(d),
        }
    }
}

/// `nu^{(L-1)/2}, ..., nu^{down_to}` for `L = -l`, highest first.
fn nu_chain(l: i64, down_to: HalfInt) -> Vec<Segment> {
    let top = -l - 1;
    (0..)
        .map(|k| top - 2 * k)
        .take_while(|&t| t >= down_to.twice())
        .map(|t| Segment::point(Cuspidal::trivial(), HalfInt::from_twice(t)))
        .collect()
}

fn three_halves() -> HalfInt {
    HalfInt::from_twice(3)
}

fn five_halves() -> HalfInt {
    HalfInt::from_twice(5)
}

/// The chain and tempered symbol of `theta_l(sigma)`, or `None` above first occurrence.
fn tempered_parts(sigma: &TemperedRep, tower: &Tower, l: i64) -> Option<(Vec<Segment>, TemperedLift)> {
    let n2 = 2 * sigma.rank();
    let phi = sigma.param();
    let one = Cuspidal::trivial();
    let sym = |level, source, param: Option<LParameter>, dim, st2_copies| TemperedLift {
        tower: tower.clone(),
        level,
        source,
        param,
        dim,
        st2_copies,
    };
    if !tower.chi_v.is_trivial() {
        return match tower.branch {
            Branch::Split if l <= 0 => Some((nu_chain(l, HalfInt::HALF), sym(0, LiftSource::Sigma, None, n2, 0))),
            Branch::Nonsplit if l <= -2 => {
                Some((nu_chain(l, three_halves()), sym(-2, LiftSource::Sigma, None, n2 + 2, 0)))
            }
            _ => None,
        };
    }
    let ls = l_of_tempered(sigma, &tower.chi_v);
    match tower.branch {
        Branch::Split => {
            if l > ls {
                None
            } else if l == 2 {
                let p = phi.with_removed(&one, 2, 1).expect("l(sigma)=2 means S_2 is present");
                Some((Vec::new(), sym(2, LiftSource::Sigma, Some(p), n2 - 2, 0)))
            } else {
                Some((nu_chain(l, HalfInt::HALF), sym(0, LiftSource::Sigma, Some(phi.clone()), n2, 0)))
            }
        }
        Branch::Nonsplit => {
            if l > -ls - 2 {
                return None;
            }
            if ls == 0 {
                let p = phi.with_added(&one, 2, 1);
                return Some((nu_chain(l, three_halves()), sym(-2, LiftSource::Sigma, Some(p), n2 + 2, 0)));
            }
            let m_s2 = phi.m_s2();
            if m_s2 % 2 == 1 {
                let p = phi.with_added(&one, 4, 1);
                return Some((nu_chain(l, five_halves()), sym(-4, LiftSource::Sigma, Some(p), n2 + 4, 0)));
            }
            // sigma embeds in (St_2, h) ⋊ sigma'; the tempered part is (St_2, h-1) ⋊ theta_{-2}(sigma').
            let h = m_s2 / 2;
            let mut chain = nu_chain(l, five_halves());
            chain.push(Segment::steinberg(3, HalfInt::HALF));
            let p = phi.with_removed(&one, 2, 1).expect("m_S2 > 0");
            Some((chain, sym(-2, LiftSource::SigmaPrime { removed_s2: m_s2 }, Some(p), n2 - 2, h - 1)))
        }
    }
}

fn finish(mut lift: LiftDatum) -> Result<LiftResult> {
    lift.factors.sort_by(|x, y| x.segment.standard_cmp(&y.segment).then(x.origin.cmp(&y.origin)));
    if !lift.rank_accounting_holds() {
        return Err(Error::InvariantBreach(format!("rank accounting fails for {lift} on O({})", lift.m)));
    }
    Ok(LiftResult::Lift(lift))
}

fn tagged(segs: Vec<Segment>, origin: Origin) -> impl Iterator<Item = LiftFactor> {
    segs.into_iter().map(move |segment| LiftFactor { segment, origin })
}

fn target(n: u64, l: LiftLevel) -> Result<i64> {
    let m = l.target_dim(n);
    if m < 1 {
        return Err(Error::BadTarget(m));
    }
    Ok(m)
}

/// `theta_l(sigma)` for generic tempered `sigma`.
pub fn tempered_lift(sigma: &TemperedRep, tower: &Tower, l: LiftLevel) -> Result<LiftResult> {
    if sigma.flavor() != Flavor::Metaplectic {
        return Err(Error::WrongFlavor { expected: "metaplectic" });
    }
    let m = target(sigma.rank(), l)?;
    let Some((chain, tempered)) = tempered_parts(sigma, tower, l.get()) else {
        return Ok(LiftResult::Zero);
    };
    finish(LiftDatum {
        tower: tower.clone(),
        level: l.get(),
        m,
        factors: tagged(chain, Origin::Lift).collect(),
        tempered,
        case: DispatchCase::Tempered,
        extrapolated: false,
    })
}

/// `theta_l(pi)` for `pi` with generic Langlands quotient.
pub fn theta_lift(pi: &LanglandsDatum, tower: &Tower, l: LiftLevel) -> Result<LiftResult> {
    let d = require_generic_mp(pi)?;
    lift_untwisted(&d, tower, l)
}

fn lift_untwisted(d: &LanglandsDatum, tower: &Tower, l: LiftLevel) -> Result<LiftResult> {
    let m = target(d.rank(), l)?;
    let fo = occurrence_of(d, &tower.chi_v);
    if l.get() > fo.level_on(tower.branch) {
        return Ok(LiftResult::Zero);
    }
    let sigma = d.tempered();
    let lvl = l.get();
    let missing = || Error::InvariantBreach(format!("tempered lift vanishes below first occurrence of {d}"));
    let base = |factors: Vec<LiftFactor>, tempered: TemperedLift, case, extrapolated| LiftDatum {
        tower: tower.clone(),
        level: lvl,
        m,
        factors,
        tempered,
        case,
        extrapolated,
    };

    if !tower.chi_v.is_trivial() {
        let (chain, tl) = tempered_parts(sigma, tower, lvl).ok_or_else(missing)?;
        let own = d.factors().iter().map(|s| s.twisted(&tower.chi_v)).collect();
        let factors = tagged(own, Origin::Source).chain(tagged(chain, Origin::Lift)).collect();
        let extrapolated = d.steinberg_indices().is_empty();
        return finish(base(factors, tl, DispatchCase::TwistedTower, extrapolated));
    }

    let case = if d.factors().is_empty() {
        DispatchCase::Tempered
    } else if standard_module_reducible(d)?.reducible {
        DispatchCase::Exceptional
    } else {
        DispatchCase::StandardIrreducible
    };
    let half = d.factors().iter().position(|s| s.is_trivial_steinberg_form() && s.center() == HalfInt::HALF);
    let ls = l_of_tempered(sigma, &tower.chi_v);
    let others = |k: usize| {
        let mut v = d.factors().to_vec();
        v.remove(k);
        v
    };

    match half {
        Some(k) if tower.branch == Branch::Split && lvl == 2 => {
            let (_, tl) = tempered_parts(sigma, tower, 0).ok_or_else(missing)?;
            finish(base(tagged(others(k), Origin::Source).collect(), tl, case, false))
        }
        Some(k) if ls == 0 && tower.branch == Branch::Nonsplit => {
            let (mut chain, tl) = tempered_parts(sigma, tower, lvl).ok_or_else(missing)?;
            let last = chain.pop();
            if last != Some(Segment::point(Cuspidal::trivial(), three_halves())) {
                return Err(Error::InvariantBreach("expected nu^3/2 at the end of the chain".into()));
            }
            let merged = Segment::steinberg(2, HalfInt::ONE);
            let factors = tagged(others(k), Origin::Source)
                .chain(tagged(chain, Origin::Lift))
                .chain(tagged(vec![merged], Origin::Merged))
                .collect();
            finish(base(factors, tl, case, false))
        }
        _ => {
            let (chain, tl) = tempered_parts(sigma, tower, lvl).ok_or_else(missing)?;
            let factors = tagged(d.factors().to_vec(), Origin::Source).chain(tagged(chain, Origin::Lift)).collect();
            finish(base(factors, tl, case, false))
        }
    }
}

/// Lifts from the first occurrence down `depth` further steps, split branch first.
pub fn lift_table(pi: &LanglandsDatum, chi_v: &QuadChar, depth: u32) -> Result<Vec<LiftDatum>> {
    let d = require_generic_mp(pi)?;
    let fo = occurrence_of(&d, chi_v);
    let mut out = Vec::new();
    for branch in [Branch::Split, Branch::Nonsplit] {
        let tower = Tower::new(chi_v.clone(), branch);
        let first = fo.level_on(branch);
        for k in 0..=depth as i64 {
            match lift_untwisted(&d, &tower, LiftLevel::new(first - 2 * k)?)? {
                LiftResult::Lift(x) => out.push(x),
                LiftResult::Zero => {
                    return Err(Error::InvariantBreach(format!("zero lift below first occurrence on {tower}")))
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::normalize_datum;

    fn one() -> Cuspidal {
        Cuspidal::trivial()
    }

    fn nu(t: i64) -> Segment {
        Segment::point(one(), HalfInt::from_twice(t))
    }

    fn sigma(items: &[(u32, u32)]) -> TemperedRep {
        TemperedRep::metaplectic(LParameter::from_summands(items.iter().map(|&(a, m)| (one(), a, m)))).unwrap()
    }

    fn omega() -> LanglandsDatum {
        normalize_datum(vec![nu(1)], TemperedRep::mu0()).unwrap()
    }

    fn lvl(l: i64) -> LiftLevel {
        LiftLevel::new(l).unwrap()
    }

    fn lift(pi: &LanglandsDatum, t: &Tower, l: i64) -> LiftDatum {
        theta_lift(pi, t, lvl(l)).unwrap().datum().cloned().expect("non-zero")
    }

    fn segs(d: &LiftDatum) -> Vec<Segment> {
        d.segments().cloned().collect()
    }

    #[test]
    fn first_occurrences() {
        let mu0 = LanglandsDatum::tempered_only(TemperedRep::mu0());
        let fo = first_occurrence(&mu0, &QuadChar::trivial()).unwrap();
        assert_eq!((fo.l, fo.m_down, fo.m_up, fo.down_branch), (0, 1, 3, Branch::Split));
        let fo = first_occurrence(&omega(), &QuadChar::trivial()).unwrap();
        assert_eq!((fo.l, fo.m_down, fo.m_up), (2, 1, 7));
        let s2 = LanglandsDatum::tempered_only(sigma(&[(2, 1)]));
        assert_eq!(first_occurrence(&s2, &QuadChar::trivial()).unwrap().l, 2);
        let chi = QuadChar::named("v").unwrap();
        let fo = first_occurrence(&s2, &chi).unwrap();
        assert_eq!((fo.l, fo.m_down, fo.m_up), (0, 3, 5));
    }

    #[test]
    fn tempered_lift_examples() {
        let s = sigma(&[(4, 1)]);
        let d = tempered_lift(&s, &Tower::split(), lvl(-6)).unwrap();
        let d = d.datum().unwrap();
        assert_eq!(segs(d), vec![nu(5), nu(3), nu(1)]);
        assert_eq!((d.tempered.level, d.tempered.param.as_ref()), (0, Some(s.param())));
        let d = tempered_lift(&s, &Tower::nonsplit(), lvl(-6)).unwrap();
        let d = d.datum().unwrap();
        assert_eq!(segs(d), vec![nu(5), nu(3)]);
        assert_eq!(d.tempered.level, -2);
        assert_eq!(d.tempered.param, Some(s.param().with_added(&one(), 2, 1)));

        let s = sigma(&[(2, 2)]);
        let d = tempered_lift(&s, &Tower::nonsplit(), lvl(-8)).unwrap();
        let d = d.datum().unwrap();
        assert_eq!(segs(d), vec![nu(7), nu(5), Segment::steinberg(3, HalfInt::HALF)]);
        assert_eq!(d.tempered.level, -2);
        assert_eq!(d.tempered.source, LiftSource::SigmaPrime { removed_s2: 2 });
        assert_eq!(d.tempered.st2_copies, 0);
        assert_eq!(d.tempered.to_string(), "theta_-2(sigma'){1*S2}");
        assert_eq!(tempered_lift(&s, &Tower::nonsplit(), lvl(-2)).unwrap(), LiftResult::Zero);

        let s = sigma(&[(2, 1), (4, 1)]);
        let d = tempered_lift(&s, &Tower::nonsplit(), lvl(-4)).unwrap();
        assert_eq!(d.datum().unwrap().tempered.param, Some(s.param().with_added(&one(), 4, 1)));
    }

    #[test]
    fn omega_lifts() {
        let w = omega();
        let t2 = lift(&w, &Tower::split(), 2);
        assert!(t2.factors.is_empty());
        assert_eq!((t2.m, t2.tempered.level), (1, 0));
        let t0 = lift(&w, &Tower::split(), 0);
        assert_eq!(segs(&t0), vec![nu(1)]);
        assert_eq!((t0.m, t0.tempered.level), (3, 0));
        let t4 = lift(&w, &Tower::nonsplit(), -4);
        assert_eq!(segs(&t4), vec![Segment::steinberg(2, HalfInt::ONE)]);
        assert_eq!((t4.m, t4.tempered.level), (7, -2));
        assert_eq!(t4.tempered.param, Some(LParameter::from_summands([(one(), 2, 1)])));
        assert_eq!(theta_lift(&w, &Tower::nonsplit(), lvl(-2)).unwrap(), LiftResult::Zero);
        let st = normalize_datum(vec![Segment::steinberg(2, HalfInt::ONE)], sigma(&[(4, 1)])).unwrap();
        assert_eq!(theta_lift(&st, &Tower::split(), lvl(2)).unwrap(), LiftResult::Zero);
    }

    #[test]
    fn steinberg_at_one_lifts() {
        let st = Segment::steinberg(2, HalfInt::ONE);
        let pi = normalize_datum(vec![st.clone()], sigma(&[(4, 1)])).unwrap();
        let t0 = lift(&pi, &Tower::split(), 0);
        assert_eq!(segs(&t0), vec![st.clone()]);
        assert_eq!(t0.tempered.level, 0);
        let t2 = lift(&pi, &Tower::nonsplit(), -2);
        assert_eq!(segs(&t2), vec![st]);
        assert_eq!(t2.tempered.level, -2);
    }

    #[test]
    fn smc_merge() {
        let d1 = Segment::steinberg(3, HalfInt::from_twice(4));
        let pi = normalize_datum(vec![d1.clone()], sigma(&[(4, 1)])).unwrap();
        let t = lift(&pi, &Tower::split(), -2);
        assert_eq!(segs(&t), vec![d1, nu(1)]);
        assert_eq!(t.case, DispatchCase::StandardIrreducible);
    }

    #[test]
    fn twisted_tower() {
        let chi = QuadChar::named("v").unwrap();
        let st = Segment::steinberg(2, HalfInt::ONE);
        let pi = normalize_datum(vec![st.clone()], sigma(&[(4, 1)])).unwrap();
        let t = lift(&pi, &Tower::new(chi.clone(), Branch::Split), -2);
        assert_eq!(segs(&t), vec![st.twisted(&chi), nu(1)]);
        assert!(t.tempered.param.is_none());
        assert!(!t.extrapolated);
        assert_eq!(t.case, DispatchCase::TwistedTower);
    }

    #[test]
    fn table_shape() {
        let mu0 = LanglandsDatum::tempered_only(TemperedRep::mu0());
        let t = lift_table(&mu0, &QuadChar::trivial(), 2).unwrap();
        let ms: Vec<(Branch, i64)> = t.iter().map(|x| (x.tower.branch, x.m)).collect();
        assert_eq!(
            ms,
            vec![
                (Branch::Split, 1),
                (Branch::Split, 3),
                (Branch::Split, 5),
                (Branch::Nonsplit, 3),
                (Branch::Nonsplit, 5),
                (Branch::Nonsplit, 7)
            ]
        );
        let t = lift_table(&omega(), &QuadChar::trivial(), 1).unwrap();
        let ms: Vec<i64> = t.iter().map(|x| x.m).collect();
        assert_eq!(ms, vec![1, 3, 7, 9]);
        assert_eq!(lift_table(&mu0, &QuadChar::trivial(), 0).unwrap().len(), 2);
    }

    #[test]
    fn levels() {
        assert!(LiftLevel::new(1).is_err());
        assert_eq!(LiftLevel::from_target(1, 7).unwrap().get(), -4);
        assert!(LiftLevel::from_target(1, 4).is_err());
        assert!(theta_lift(&omega(), &Tower::split(), lvl(6)).is_err());
    }
}
