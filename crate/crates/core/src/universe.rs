//! A finite universe of data and the enumeration properties checked over it.

use crate::classify::{is_generic_lq, is_generic_lq_via_coeff};
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::param::LParameter;
use crate::rep::{normalize_datum, LanglandsDatum, TemperedRep};
use crate::segment::Segment;
use crate::symbols::{Cuspidal, QuadChar, SelfDualType};
use crate::theta::{first_occurrence, lift_table, theta_lift, Branch, LiftDatum, LiftLevel, LiftResult, Origin, Tower};

/// `1`, `chi:a` and a dimension-2 symplectic symbol.
pub fn bases() -> Vec<Cuspidal> {
    vec![
        Cuspidal::trivial(),
        Cuspidal::quadratic(QuadChar::named("a").expect("valid label")),
        Cuspidal::symbol("r", 2, SelfDualType::Symplectic).expect("valid symbol"),
    ]
}

/// Segments over [`bases`] with centres in `{1/2, 1, 3/2, 2}` and lengths 1 to 3.
pub fn segments() -> Vec<Segment> {
    let mut out = Vec::new();
    for rho in bases() {
        for c2 in 1..=4 {
            for len in 1..=3i64 {
                let b = HalfInt::from_twice(c2 - (len - 1));
                let a = HalfInt::from_twice(c2 + (len - 1));
                out.push(Segment::new(rho.clone(), b, a).expect("b <= a"));
            }
        }
    }
    out
}

/// The summands a parameter of the universe is built from, with their dimensions.
fn summand_pool() -> Vec<(Cuspidal, u32)> {
    let mut pool = Vec::new();
    for rho in bases() {
        let alist: &[u32] = if rho.is_symplectic() { &[1, 3] } else { &[2, 4, 6, 8] };
        for &a in alist {
            pool.push((rho.clone(), a));
        }
    }
    pool
}

/// Every valid parameter of dimension at most `2 * max_rank` over the summand pool.
pub fn parameters(max_rank: u64) -> Vec<LParameter> {
    fn go(
        pool: &[(Cuspidal, u32)],
        k: usize,
        left: u64,
        cur: &mut Vec<(Cuspidal, u32, u32)>,
        out: &mut Vec<LParameter>,
    ) {
        if k == pool.len() {
            out.push(LParameter::from_summands(cur.iter().cloned()));
            return;
        }
        let (rho, a) = &pool[k];
        let d = rho.dim() as u64 * *a as u64;
        let mut m = 0;
        while m as u64 * d <= left {
            if m > 0 {
                cur.push((rho.clone(), *a, m));
            }
            go(pool, k + 1, left - m as u64 * d, cur, out);
            if m > 0 {
                cur.pop();
            }
            m += 1;
        }
    }
    let mut out = Vec::new();
    go(&summand_pool(), 0, 2 * max_rank, &mut Vec::new(), &mut out);
    out.retain(|p| p.validate().is_ok());
    out
}

/// All standard data with at most two factors from [`segments`] over parameters of rank at most 4.
pub fn data() -> Vec<LanglandsDatum> {
    let segs = segments();
    let mut factor_sets: Vec<Vec<Segment>> = vec![Vec::new()];
    for i in 0..segs.len() {
        factor_sets.push(vec![segs[i].clone()]);
        for j in i..segs.len() {
            factor_sets.push(vec![segs[i].clone(), segs[j].clone()]);
        }
    }
    let mut out = Vec::new();
    for p in parameters(4) {
        let sigma = TemperedRep::metaplectic(p).expect("validated");
        for f in &factor_sets {
            out.push(normalize_datum(f.clone(), sigma.clone()).expect("positive exponents"));
        }
    }
    out
}

/// Route A against route B. `Err` only on an internal invariant breach.
pub fn check_routes(d: &LanglandsDatum) -> Result<Option<String>> {
    let a = is_generic_lq(d)?.generic;
    let b = is_generic_lq_via_coeff(d)?;
    Ok((a != b).then(|| format!("{d}: combinatorial {a}, coefficient {b}")))
}

/// Conservation and the split down branch, for a generic datum.
pub fn check_conservation(d: &LanglandsDatum) -> Result<Option<String>> {
    let fo = first_occurrence(d, &QuadChar::trivial())?;
    let n = d.rank() as i64;
    if fo.m_down + fo.m_up != 4 * n + 4 || fo.down_branch != Branch::Split {
        return Ok(Some(format!("{d}: m_down={} m_up={} n={n} down={}", fo.m_down, fo.m_up, fo.down_branch)));
    }
    Ok(None)
}

fn nu(t: i64) -> Segment {
    Segment::point(Cuspidal::trivial(), HalfInt::from_twice(t))
}

fn sorted_segments(x: &LiftDatum) -> Vec<Segment> {
    let mut v: Vec<Segment> = x.segments().cloned().collect();
    v.sort();
    v
}

/// Whether `lower` (level `l - 2`) follows from `upper` (level `l`) on the same branch.
fn chain_step_ok(upper: &LiftDatum, lower: &LiftDatum) -> bool {
    let l = upper.level;
    let up = sorted_segments(upper);
    let mut down = sorted_segments(lower);
    let same_tempered = upper.tempered == lower.tempered;
    let remove = |v: &mut Vec<Segment>, s: &Segment| match v.iter().position(|x| x == s) {
        Some(i) => {
            v.remove(i);
            true
        }
        None => false,
    };
    if l == 2 && upper.tower.branch == Branch::Split {
        // theta_2 either carries theta_2(sigma) or has just dropped nu^{1/2}.
        if up == down {
            return upper.tempered.level == 2 && lower.tempered.level == 0;
        }
        return same_tempered && remove(&mut down, &nu(1)) && up == down;
    }
    same_tempered && remove(&mut down, &nu(1 - l)) && up == down
}

/// The lift properties over `depth` levels on each trivial-character branch.
pub fn check_lifts(d: &LanglandsDatum, depth: u32) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let fo = first_occurrence(d, &QuadChar::trivial())?;
    let n = d.rank();
    let table = lift_table(d, &QuadChar::trivial(), depth)?;
    for branch in [Branch::Split, Branch::Nonsplit] {
        let tower = Tower::new(QuadChar::trivial(), branch);
        let first = fo.level_on(branch);
        // Zero exactly above first occurrence, down to the trivial group.
        let mut l = first + 2;
        while LiftLevel::new(l)?.target_dim(n) >= 1 {
            if theta_lift(d, &tower, LiftLevel::new(l)?)? != LiftResult::Zero {
                bad.push(format!("{d}: non-zero lift above first occurrence at l={l} on {tower}"));
            }
            l += 2;
        }
        let rows: Vec<&LiftDatum> = table.iter().filter(|x| x.tower == tower).collect();
        if rows.len() != depth as usize + 1 || rows[0].level != first {
            bad.push(format!("{d}: table rows on {tower} do not start at first occurrence"));
            continue;
        }
        for x in &rows {
            if !x.rank_accounting_holds() {
                bad.push(format!("{d}: rank accounting at l={} on {tower}", x.level));
            }
            if !x.is_standard() {
                bad.push(format!("{d}: non-standard output {x}"));
            }
            let src = |t| x.factors.iter().any(|f| f.origin == Origin::Source && f.segment == nu(t));
            if src(1) && src(3) {
                bad.push(format!("{d}: nu^1/2 and nu^3/2 both in {x}"));
            }
            let st = x.factors.iter().filter(|f| f.origin == Origin::Source && f.segment.is_trivial_steinberg_form());
            if st.count() > 1 {
                bad.push(format!("{d}: two trivial-Steinberg factors in {x}"));
            }
        }
        for w in rows.windows(2) {
            if !chain_step_ok(w[0], w[1]) {
                bad.push(format!("{d}: chain step {} -> {} on {tower}", w[0], w[1]));
            }
        }
    }
    // Equal-rank lift against the transfer.
    let eq = theta_lift(d, &Tower::split(), LiftLevel::new(0)?)?;
    let x = eq.datum().ok_or_else(|| Error::InvariantBreach(format!("equal-rank lift of {d} vanishes")))?;
    let u = d.untwisted();
    let mut own = u.factors().to_vec();
    own.sort();
    if sorted_segments(x) != own || x.tempered.param.as_ref() != Some(u.tempered().param()) {
        bad.push(format!("{d}: equal-rank lift {x} differs from the transfer"));
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(segments().len(), 36);
        let ps = parameters(4);
        assert!(ps.contains(&LParameter::empty()));
        assert!(ps.iter().all(|p| p.rank() <= 4));
        assert_eq!(data().len(), ps.len() * 703);
    }

    #[test]
    fn chain_check_rejects_wrong_steps() {
        let d = normalize_datum(Vec::new(), TemperedRep::mu0()).unwrap();
        let table = lift_table(&d, &QuadChar::trivial(), 2).unwrap();
        assert!(chain_step_ok(&table[0], &table[1]));
        assert!(!chain_step_ok(&table[0], &table[2]));
        assert!(!chain_step_ok(&table[1], &table[0]));
        let mut off = table[1].clone();
        off.tempered.level = -2;
        assert!(!chain_step_ok(&table[0], &off));
    }
}
