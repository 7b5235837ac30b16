//! Brute-force gamma orders: expand every factor into elementary `gamma(v, tau)` and count.
//!
//! An elementary factor whose pairing has a pole at `0` contributes a zero at `v = 0`
//! and a pole at `v = 1`. Nothing else is assumed.

#![allow(dead_code)]

use mpgen_core::{Cuspidal, HalfInt, Segment};

fn points(seg: &Segment) -> Vec<HalfInt> {
    let mut out = Vec::new();
    let mut x = seg.b();
    while x <= seg.a() {
        out.push(x);
        x = x + HalfInt::ONE;
    }
    out
}

fn elementary(active: bool, v: HalfInt) -> i64 {
    if !active {
        0
    } else if v == HalfInt::ZERO {
        1
    } else if v == HalfInt::ONE {
        -1
    } else {
        0
    }
}

/// `L(s, rho)` has a pole at `0` only for the trivial character.
pub fn std_order(seg: &Segment, u0: HalfInt) -> i64 {
    let active = *seg.rho() == Cuspidal::trivial();
    points(seg).into_iter().map(|x| elementary(active, u0 + x)).sum()
}

/// `L(s, rho_1 x rho_2)` has a pole at `0` iff `rho_2` is the contragredient of `rho_1`.
pub fn rs_order(s1: &Segment, s2: &Segment, u0: HalfInt) -> i64 {
    let active = *s2.rho() == s1.rho().dual();
    let mut total = 0;
    for x in points(s1) {
        for y in points(s2) {
            total += elementary(active, u0 + x + y);
        }
    }
    total
}

/// Pairs `i < j` through `rho x rho`, diagonal terms through `Sym^2 rho`.
pub fn sym2_order(seg: &Segment, u0: HalfInt) -> i64 {
    let rho = seg.rho();
    let pair_active = *rho == rho.dual();
    let diag_active = rho.is_orthogonal();
    let xs = points(seg);
    let mut total = 0;
    for i in 0..xs.len() {
        total += elementary(diag_active, u0 + xs[i] + xs[i]);
        for j in i + 1..xs.len() {
            total += elementary(pair_active, u0 + xs[i] + xs[j]);
        }
    }
    total
}
