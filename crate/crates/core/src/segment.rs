use std::cmp::Ordering;
use std::fmt;

use crate::half::HalfInt;
use crate::symbols::{Cuspidal, QuadChar, SymbolError};

/// The segment `[rho nu^b, rho nu^a]`, standing for `delta([rho nu^b, rho nu^a])`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    rho: Cuspidal,
    b: HalfInt,
    a: HalfInt,
}

impl Segment {
    pub fn new(rho: Cuspidal, b: HalfInt, a: HalfInt) -> Result<Self, SymbolError> {
        let len = a - b;
        if !len.is_integer() || len < HalfInt::ZERO {
            return Err(SymbolError::BadSegment { b: b.to_string(), a: a.to_string() });
        }
        Ok(Segment { rho, b, a })
    }

    /// `St_n nu^s` for the trivial character.
    pub fn steinberg(n: u32, s: HalfInt) -> Self {
        assert!(n >= 1, "St_n needs n >= 1");
        Self::unitary(Cuspidal::trivial(), n).shifted(s)
    }

    /// The unitary segment `[rho nu^{-(n-1)/2}, rho nu^{(n-1)/2}]`.
    pub fn unitary(rho: Cuspidal, n: u32) -> Self {
        assert!(n >= 1, "segment length must be positive");
        let half = HalfInt::from_twice(n as i64 - 1);
        Segment { rho, b: -half, a: half }
    }

    /// The single point `rho nu^x`.
    pub fn point(rho: Cuspidal, x: HalfInt) -> Self {
        Segment { rho, b: x, a: x }
    }

    pub fn rho(&self) -> &Cuspidal {
        &self.rho
    }

    pub fn b(&self) -> HalfInt {
        self.b
    }

    pub fn a(&self) -> HalfInt {
        self.a
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> u64 {
        ((self.a - self.b).twice() / 2 + 1) as u64
    }

    pub fn gl_dim(&self) -> u64 {
        self.rho.dim() as u64 * self.len()
    }

    /// The exponent `s = (a + b)/2`, always a half-integer.
    pub fn center(&self) -> HalfInt {
        HalfInt::from_twice((self.a.twice() + self.b.twice()) / 2)
    }

    /// Whether `x` is one of the exponents `b, b+1, ..., a`.
    pub fn contains(&self, x: HalfInt) -> bool {
        self.b <= x && x <= self.a && (x - self.b).is_integer()
    }

    pub fn exponents(&self) -> impl Iterator<Item = HalfInt> {
        let b = self.b.twice();
        (0..self.len() as i64).map(move |k| HalfInt::from_twice(b + 2 * k))
    }

    pub fn shifted(&self, s: HalfInt) -> Segment {
        Segment { rho: self.rho.clone(), b: self.b + s, a: self.a + s }
    }

    /// The same segment recentred at 0.
    pub fn unitarized(&self) -> Segment {
        self.shifted(-self.center())
    }

    /// `delta~`: `(rho~, -a, -b)`.
    pub fn dual(&self) -> Segment {
        Segment { rho: self.rho.dual(), b: -self.a, a: -self.b }
    }

    pub fn twisted(&self, chi: &QuadChar) -> Segment {
        Segment { rho: self.rho.twisted(chi), b: self.b, a: self.a }
    }

    /// `rho = 1` and `b = 1/2`, i.e. `St_{2s} nu^s`.
    pub fn is_trivial_steinberg_form(&self) -> bool {
        self.rho.is_trivial_character() && self.b == HalfInt::HALF
    }

    /// Zelevinsky linkage.
    pub fn linked(&self, other: &Segment) -> bool {
        if self.rho != other.rho || !(self.b - other.b).is_integer() {
            return false;
        }
        let (lo, hi) = if self.b <= other.b { (self, other) } else { (other, self) };
        lo.b < hi.b && lo.a < hi.a && hi.b <= lo.a + HalfInt::ONE
    }

    /// Normal-form order: center descending, length descending, label ascending.
    pub fn standard_cmp(&self, other: &Segment) -> Ordering {
        other.center().cmp(&self.center()).then(other.len().cmp(&self.len())).then_with(|| self.rho.cmp(&other.rho))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rho.is_trivial_character() {
            write!(f, "St({})", self.len())?;
            let s = self.center();
            if s != HalfInt::ZERO {
                write!(f, " v^{s}")?;
            }
            Ok(())
        } else {
            write!(f, "D({};{},{})", self.rho, self.b, self.a)
        }
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Linkage as defined by the union-of-sets picture; kept for cross-checking.
#[cfg(test)]
pub(crate) fn linked_by_sets(s1: &Segment, s2: &Segment) -> bool {
    use std::collections::BTreeSet;
    if s1.rho != s2.rho || !(s1.b - s2.b).is_integer() {
        return false;
    }
    let e1: BTreeSet<i64> = s1.exponents().map(|x| x.twice()).collect();
    let e2: BTreeSet<i64> = s2.exponents().map(|x| x.twice()).collect();
    if e1.is_subset(&e2) || e2.is_subset(&e1) {
        return false;
    }
    let u: Vec<i64> = e1.union(&e2).copied().collect();
    u.windows(2).all(|w| w[1] - w[0] == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::SelfDualType;
    use proptest::prelude::*;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn seg(b: i64, a: i64) -> Segment {
        Segment::new(Cuspidal::trivial(), h(b), h(a)).unwrap()
    }

    fn chi_a() -> QuadChar {
        QuadChar::named("a").unwrap()
    }

    #[test]
    fn construction() {
        let s = seg(1, 3);
        assert_eq!(s, Segment::steinberg(2, HalfInt::ONE));
        assert_eq!(seg(-1, 1), Segment::steinberg(2, HalfInt::ZERO));
        assert!(Segment::new(Cuspidal::trivial(), h(1), h(0)).is_err());
        assert!(Segment::new(Cuspidal::trivial(), h(2), h(0)).is_err());
        assert_eq!(s.len(), 2);
        assert_eq!(s.center(), HalfInt::ONE);
        assert_eq!(s.to_string(), "St(2) v^1");
    }

    #[test]
    fn duals() {
        assert_eq!(seg(1, 3).dual(), seg(-3, -1));
        let st2 = seg(-1, 1);
        assert_eq!(st2.dual(), st2);
        let rho = Cuspidal::symbol("x", 2, SelfDualType::NonSelfDual).unwrap();
        let s = Segment::new(rho.clone(), h(0), h(2)).unwrap();
        let d = s.dual();
        assert_eq!(d.rho(), &rho.dual());
        assert_eq!((d.b(), d.a()), (h(-2), h(0)));
    }

    #[test]
    fn linkage_examples() {
        assert!(seg(3, 3).linked(&seg(-1, 1)));
        assert!(!seg(1, 3).linked(&seg(1, 3)));
        let chi_pt = Segment::point(Cuspidal::quadratic(chi_a()), h(3));
        assert!(!seg(1, 1).linked(&chi_pt));
        assert!(seg(1, 1).linked(&seg(-1, -1)));
        assert!(!seg(1, 1).linked(&seg(-3, -3)));
        assert!(!seg(1, 1).linked(&seg(0, 0)));
    }

    #[test]
    fn trivial_steinberg_form() {
        assert!(seg(1, 5).is_trivial_steinberg_form());
        assert!(seg(1, 1).is_trivial_steinberg_form());
        assert!(!seg(1, 3).twisted(&chi_a()).is_trivial_steinberg_form());
    }

    #[test]
    fn twisting() {
        let s = seg(1, 3);
        let t = s.twisted(&chi_a());
        assert_eq!(t.rho(), &Cuspidal::quadratic(chi_a()));
        assert_eq!(t.twisted(&chi_a()), s);
        assert_eq!(s.twisted(&QuadChar::trivial()), s);
    }

    fn arb_cusp() -> impl Strategy<Value = Cuspidal> {
        prop_oneof![
            Just(Cuspidal::trivial()),
            Just(Cuspidal::quadratic(QuadChar::named("a").unwrap())),
            Just(Cuspidal::symbol("r", 2, SelfDualType::Symplectic).unwrap()),
            Just(Cuspidal::symbol("x", 1, SelfDualType::NonSelfDual).unwrap()),
            Just(Cuspidal::symbol("x", 1, SelfDualType::NonSelfDual).unwrap().dual()),
        ]
    }

    pub(crate) fn arb_segment() -> impl Strategy<Value = Segment> {
        (arb_cusp(), -8i64..8, 0i64..5).prop_map(|(rho, b, len)| Segment::new(rho, h(b), h(b + 2 * len)).unwrap())
    }

    proptest! {
        #[test]
        fn dual_is_involution(s in arb_segment()) {
            prop_assert_eq!(s.dual().dual(), s.clone());
            prop_assert_eq!(s.dual().center(), -s.center());
            prop_assert!(s.gl_dim() >= 1);
        }

        #[test]
        fn linkage_symmetric_and_matches_sets(s in arb_segment(), t in arb_segment()) {
            prop_assert_eq!(s.linked(&t), t.linked(&s));
            prop_assert_eq!(s.linked(&t), linked_by_sets(&s, &t));
            prop_assert!(!s.linked(&s));
        }

        #[test]
        fn twist_involution_commutes_with_dual(s in arb_segment()) {
            let c = chi_a();
            prop_assert_eq!(s.twisted(&c).twisted(&c), s.clone());
            prop_assert_eq!(s.twisted(&c).dual(), s.dual().twisted(&c));
        }

        #[test]
        fn steinberg_form_has_positive_center(s in arb_segment()) {
            if s.is_trivial_steinberg_form() {
                prop_assert!(s.center() >= HalfInt::HALF);
                prop_assert!(s.rho().twist().is_trivial());
            }
        }
    }
}
