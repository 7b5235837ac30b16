//! Orders of gamma factors and local coefficients at real points.
//!
//! Elementary rules: `gamma(u, rho x rho')` has a zero at `u = 0` and a pole at
//! `u = 1` exactly when `rho' = rho~`; `gamma(u, rho, Sym^2)` likewise when `rho` is
//! orthogonal; `gamma(u, rho)` only for `rho = 1`. Complex poles are ignored.

use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::param::LParameter;
use crate::rep::TemperedRep;
use crate::segment::Segment;

/// Order of vanishing; negative values are poles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct OrderAtPoint(pub i64);

impl OrderAtPoint {
    pub const UNIT: OrderAtPoint = OrderAtPoint(0);

    pub fn is_holomorphic(self) -> bool {
        self.0 >= 0
    }

    pub fn is_pole(self) -> bool {
        self.0 < 0
    }
}

impl Add for OrderAtPoint {
    type Output = OrderAtPoint;
    fn add(self, rhs: OrderAtPoint) -> OrderAtPoint {
        OrderAtPoint(self.0 + rhs.0)
    }
}

impl AddAssign for OrderAtPoint {
    fn add_assign(&mut self, rhs: OrderAtPoint) {
        self.0 += rhs.0;
    }
}

impl Sub for OrderAtPoint {
    type Output = OrderAtPoint;
    fn sub(self, rhs: OrderAtPoint) -> OrderAtPoint {
        OrderAtPoint(self.0 - rhs.0)
    }
}

impl Neg for OrderAtPoint {
    type Output = OrderAtPoint;
    fn neg(self) -> OrderAtPoint {
        OrderAtPoint(-self.0)
    }
}

impl Sum for OrderAtPoint {
    fn sum<I: Iterator<Item = OrderAtPoint>>(iter: I) -> OrderAtPoint {
        OrderAtPoint(iter.map(|o| o.0).sum())
    }
}

fn ind(b: bool) -> i64 {
    b as i64
}

/// `gamma(u, delta)` at `u0`: pole at `1 - b`, zero at `-a`, for `rho = 1` only.
pub fn ord_gamma_std(seg: &Segment, u0: HalfInt) -> OrderAtPoint {
    if !seg.rho().is_trivial_character() {
        return OrderAtPoint::UNIT;
    }
    OrderAtPoint(ind(u0 == -seg.a()) - ind(u0 == HalfInt::ONE - seg.b()))
}

/// `gamma(u, delta_1 x delta_2)` at `u0`.
///
/// For fixed `x`, the product over `y` telescopes to a zero at `u + x = -a_2` and a
/// pole at `u + x = 1 - b_2`.
pub fn ord_gamma_rs(s1: &Segment, s2: &Segment, u0: HalfInt) -> OrderAtPoint {
    if *s2.rho() != s1.rho().dual() {
        return OrderAtPoint::UNIT;
    }
    let zero = s1.contains(-s2.a() - u0);
    let pole = s1.contains(HalfInt::ONE - s2.b() - u0);
    OrderAtPoint(ind(zero) - ind(pole))
}

/// Number of pairs `i < j` of exponents of `seg` with `i + j = t`.
fn pairs_summing_to(seg: &Segment, t: HalfInt) -> i64 {
    let r = t - seg.b().double();
    let Some(r) = r.to_int() else { return 0 };
    let len = seg.len() as i64;
    let lo = (r - (len - 1)).max(0);
    let hi = (r - 1).div_euclid(2);
    (hi - lo + 1).max(0)
}

fn diagonal_at(seg: &Segment, t: HalfInt) -> i64 {
    t.halve().map_or(0, |x| ind(seg.contains(x)))
}

/// `gamma(u, delta, Sym^2)` at `u0`, via the product over `i < j` of
/// `gamma(u+i+j, rho x rho)` and over `i` of `gamma(u+2i, rho, Sym^2)`.
pub fn ord_gamma_sym2(seg: &Segment, u0: HalfInt) -> OrderAtPoint {
    let rho = seg.rho();
    let mut ord = 0;
    if rho.is_self_dual() {
        ord += pairs_summing_to(seg, -u0) - pairs_summing_to(seg, HalfInt::ONE - u0);
    }
    if rho.is_orthogonal() {
        ord += diagonal_at(seg, -u0) - diagonal_at(seg, HalfInt::ONE - u0);
    }
    OrderAtPoint(ord)
}

pub(crate) fn vs_param_order(phi: &LParameter, seg: &Segment, u0: HalfInt) -> OrderAtPoint {
    phi.summands()
        .iter()
        .map(|s| {
            let block = Segment::unitary(s.rho.clone(), s.a);
            OrderAtPoint(s.mult as i64 * ord_gamma_rs(seg, &block, u0).0)
        })
        .sum()
}

/// `gamma(sigma x delta, u)` at `u0` for the generic tempered `sigma` with parameter `phi`.
pub fn ord_gamma_vs_parameter(phi: &LParameter, seg: &Segment, u0: HalfInt) -> Result<OrderAtPoint> {
    phi.validate().map_err(Error::InvalidParameter)?;
    Ok(vs_param_order(phi, seg, u0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoeffMode {
    Metaplectic,
    Orthogonal,
}

/// The pieces of a rank-one local coefficient order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalCoeffOrder {
    pub sym2: OrderAtPoint,
    pub rankin_selberg: OrderAtPoint,
    /// `sym2 + rankin_selberg`.
    pub numerator: OrderAtPoint,
    /// Order of `gamma(delta, u + 1/2)`, which divides in the metaplectic case.
    pub denominator: Option<OrderAtPoint>,
    pub total: OrderAtPoint,
}

pub(crate) fn local_coeff_for_param(seg: &Segment, phi: &LParameter, mode: CoeffMode, u0: HalfInt) -> LocalCoeffOrder {
    let sym2 = ord_gamma_sym2(seg, u0.double());
    let rankin_selberg = vs_param_order(phi, seg, u0);
    let denominator = match mode {
        CoeffMode::Metaplectic => Some(ord_gamma_std(seg, u0 + HalfInt::HALF)),
        CoeffMode::Orthogonal => None,
    };
    let numerator = sym2 + rankin_selberg;
    let total = numerator - denominator.unwrap_or_default();
    LocalCoeffOrder { sym2, rankin_selberg, numerator, denominator, total }
}

/// Order at `u0` of `C(s, delta nu^s (x) sigma)`; `seg` carries its own exponent.
pub fn ord_local_coeff(seg: &Segment, sigma: &TemperedRep, mode: CoeffMode, u0: HalfInt) -> LocalCoeffOrder {
    local_coeff_for_param(seg, sigma.param(), mode, u0)
}

/// Whether `delta nu^{s0} ⋊ tau` is irreducible on `SO(2n+1)`, `tau` generic tempered
/// with parameter `phi` and `seg` unitary.
pub fn so_rank1_standard_irreducible(seg: &Segment, phi: &LParameter, s0: HalfInt) -> Result<bool> {
    if !s0.is_positive() {
        return Err(Error::NonPositiveShift(s0.to_string()));
    }
    if seg.center() != HalfInt::ZERO {
        return Err(Error::NotUnitary(seg.to_string()));
    }
    phi.validate().map_err(Error::InvalidParameter)?;
    let c = local_coeff_for_param(&seg.shifted(s0), phi, CoeffMode::Orthogonal, HalfInt::ZERO);
    Ok(c.total.is_holomorphic())
}

/// One non-unit elementary factor, for per-factor breakdowns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementaryTerm {
    pub factor: String,
    pub argument: HalfInt,
    pub order: i64,
}

fn elem(v: HalfInt) -> i64 {
    ind(v == HalfInt::ZERO) - ind(v == HalfInt::ONE)
}

/// Contributions of `L(u, delta)` and `L(1-u, delta~)` to `gamma(u, delta)` at `u0`.
pub fn std_breakdown(seg: &Segment, u0: HalfInt) -> Vec<ElementaryTerm> {
    let mut out = Vec::new();
    if !seg.rho().is_trivial_character() {
        return out;
    }
    if u0 == -seg.a() {
        out.push(ElementaryTerm { factor: "1/L(u, delta)".into(), argument: u0 + seg.a(), order: 1 });
    }
    if u0 == HalfInt::ONE - seg.b() {
        out.push(ElementaryTerm { factor: "L(1-u, delta~)".into(), argument: HalfInt::ONE - u0 - seg.b(), order: -1 });
    }
    out
}

/// Every non-unit `gamma(u+x+y, rho_1 x rho_2)` at `u0`.
pub fn rs_breakdown(s1: &Segment, s2: &Segment, u0: HalfInt) -> Vec<ElementaryTerm> {
    let mut out = Vec::new();
    if *s2.rho() != s1.rho().dual() {
        return out;
    }
    for x in s1.exponents() {
        for y in s2.exponents() {
            let v = u0 + x + y;
            let o = elem(v);
            if o != 0 {
                out.push(ElementaryTerm {
                    factor: format!("gamma(u{:+}{:+}, rho x rho')", Signed(x), Signed(y)),
                    argument: v,
                    order: o,
                });
            }
        }
    }
    out
}

/// Every non-unit factor of `gamma(u, delta, Sym^2)` at `u0`.
pub fn sym2_breakdown(seg: &Segment, u0: HalfInt) -> Vec<ElementaryTerm> {
    let mut out = Vec::new();
    let exps: Vec<HalfInt> = seg.exponents().collect();
    if seg.rho().is_self_dual() {
        for (k, &i) in exps.iter().enumerate() {
            for &j in &exps[k + 1..] {
                let v = u0 + i + j;
                let o = elem(v);
                if o != 0 {
                    out.push(ElementaryTerm {
                        factor: format!("gamma(u{:+}{:+}, rho x rho)", Signed(i), Signed(j)),
                        argument: v,
                        order: o,
                    });
                }
            }
        }
    }
    if seg.rho().is_orthogonal() {
        for &i in &exps {
            let v = u0 + i.double();
            let o = elem(v);
            if o != 0 {
                out.push(ElementaryTerm {
                    factor: format!("gamma(u{:+}, rho, Sym2)", Signed(i.double())),
                    argument: v,
                    order: o,
                });
            }
        }
    }
    out
}

/// Signed display helper for breakdown labels.
struct Signed(HalfInt);

impl std::fmt::Display for Signed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0 >= HalfInt::ZERO && f.sign_plus() {
            write!(f, "+{}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::{Cuspidal, QuadChar, SelfDualType};

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn seg(b: i64, a: i64) -> Segment {
        Segment::new(Cuspidal::trivial(), h(b), h(a)).unwrap()
    }

    fn chi_a() -> QuadChar {
        QuadChar::named("a").unwrap()
    }

    fn one_s(a: u32) -> LParameter {
        LParameter::from_summands([(Cuspidal::trivial(), a, 1)])
    }

    #[test]
    fn std_examples() {
        for m in 0..4 {
            let d = seg(1, 2 * m + 1);
            assert_eq!(ord_gamma_std(&d, h(1)), OrderAtPoint(-1));
            assert_eq!(ord_gamma_std(&d.twisted(&chi_a()), h(1)), OrderAtPoint(0));
        }
        assert_eq!(ord_gamma_std(&seg(-1, 1), h(10)), OrderAtPoint(0));
    }

    #[test]
    fn rs_examples() {
        let nu = seg(1, 1);
        assert_eq!(ord_gamma_rs(&nu, &nu, h(0)), OrderAtPoint(-1));
        let chinu = nu.twisted(&chi_a());
        assert_eq!(ord_gamma_rs(&nu, &chinu, h(0)), OrderAtPoint(0));
        let st2nu = seg(1, 3);
        assert_eq!(ord_gamma_rs(&st2nu, &st2nu.dual(), h(0)), OrderAtPoint(1));
    }

    #[test]
    fn sym2_examples() {
        for m in 0..5 {
            let d = seg(1, 2 * m + 1);
            assert_eq!(ord_gamma_sym2(&d, h(0)), OrderAtPoint(-1));
            assert_eq!(ord_gamma_sym2(&d.twisted(&chi_a()), h(0)), OrderAtPoint(-1));
        }
        let x = Cuspidal::symbol("x", 2, SelfDualType::NonSelfDual).unwrap();
        for u in -6..6 {
            assert_eq!(ord_gamma_sym2(&Segment::unitary(x.clone(), 3), h(u)), OrderAtPoint(0));
        }
    }

    #[test]
    fn vs_param_examples() {
        let st2nu = seg(1, 3);
        assert_eq!(ord_gamma_vs_parameter(&LParameter::empty(), &st2nu, h(3)).unwrap(), OrderAtPoint(0));
        assert_eq!(ord_gamma_vs_parameter(&one_s(2), &st2nu, h(0)).unwrap(), OrderAtPoint(-1));
        assert_eq!(ord_gamma_vs_parameter(&one_s(6), &st2nu, h(0)).unwrap(), OrderAtPoint(0));
        assert!(ord_gamma_vs_parameter(&one_s(3), &st2nu, h(0)).is_err());
    }

    #[test]
    fn local_coeff_example() {
        let mu0 = TemperedRep::mu0();
        for m in 0..4 {
            let d = seg(1, 2 * m + 1);
            let c = ord_local_coeff(&d, &mu0, CoeffMode::Metaplectic, h(0));
            assert_eq!((c.sym2, c.denominator, c.total), (OrderAtPoint(-1), Some(OrderAtPoint(-1)), OrderAtPoint(0)));
            let ct = ord_local_coeff(&d.twisted(&chi_a()), &mu0, CoeffMode::Metaplectic, h(0));
            assert_eq!((ct.denominator, ct.total), (Some(OrderAtPoint(0)), OrderAtPoint(-1)));
            let co = ord_local_coeff(&d, &mu0, CoeffMode::Orthogonal, h(0));
            assert_eq!(co.total, OrderAtPoint(-1));
        }
    }

    #[test]
    fn so_rank1_examples() {
        for n in 1..5u32 {
            let s = h(n as i64);
            assert!(!so_rank1_standard_irreducible(&Segment::steinberg(n, h(0)), &LParameter::empty(), s).unwrap());
        }
        let x = Cuspidal::symbol("x", 2, SelfDualType::NonSelfDual).unwrap();
        assert!(so_rank1_standard_irreducible(&Segment::unitary(x, 2), &one_s(2), h(2)).unwrap());
        assert!(!so_rank1_standard_irreducible(&Segment::steinberg(2, h(0)), &one_s(6), h(2)).unwrap());
        assert!(so_rank1_standard_irreducible(&Segment::steinberg(2, h(0)), &one_s(6), h(0)).is_err());
        assert!(so_rank1_standard_irreducible(&seg(1, 3), &one_s(6), h(2)).is_err());
    }

    #[test]
    fn breakdowns_sum_to_orders() {
        for b in -6..6 {
            for len in 0..4 {
                let s = seg(b, b + 2 * len);
                for u in -8..8 {
                    let sum = |v: Vec<ElementaryTerm>| v.iter().map(|t| t.order).sum::<i64>();
                    assert_eq!(sum(sym2_breakdown(&s, h(u))), ord_gamma_sym2(&s, h(u)).0);
                    assert_eq!(sum(std_breakdown(&s, h(u))), ord_gamma_std(&s, h(u)).0);
                    assert_eq!(sum(rs_breakdown(&s, &s.dual(), h(u))), ord_gamma_rs(&s, &s.dual(), h(u)).0);
                }
            }
        }
    }
}
