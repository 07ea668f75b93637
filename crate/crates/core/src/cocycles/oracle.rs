//! Exhaustive searches over 1-cochains, in lexicographic order of the
//! cochain values (elements by index, values by element order).

use super::{OneCochain, TwoCocycle, UnitModule};
use crate::error::{Error, Result};
use crate::groupkit::Subgroup;

pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

/// Number of candidate cochains the oracles may cover; the environment
/// variable `CROSSED_ORDER_ORACLE_BUDGET` can lower it.
pub fn oracle_budget() -> u64 {
    std::env::var("CROSSED_ORDER_ORACLE_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse::<u64>().ok())
        .map_or(DEFAULT_ORACLE_BUDGET, |b| b.min(DEFAULT_ORACLE_BUDGET))
}

enum Mode<'a> {
    Coboundary,
    Inflated(&'a Subgroup),
}

/// A cochain `c` with `f = ∂c`, if one exists.
pub fn brute_force_is_coboundary(module: &UnitModule, f: &TwoCocycle) -> Result<Option<OneCochain>> {
    search(module, f, Mode::Coboundary)
}

/// A cochain `c` such that `f · ∂c` is constant on `A`-cosets in both
/// arguments (so `f` is inflated from `G/A`), if one exists.
pub fn brute_force_is_inflated(module: &UnitModule, f: &TwoCocycle, a: &Subgroup) -> Result<Option<OneCochain>> {
    if !module.group().is_normal(a) {
        return Err(Error::NotNormal);
    }
    search(module, f, Mode::Inflated(a))
}

fn search(module: &UnitModule, f: &TwoCocycle, mode: Mode<'_>) -> Result<Option<OneCochain>> {
    let field = module.field();
    let g = module.group();
    let Some(q) = field.order() else {
        return Err(Error::OracleFiniteOnly);
    };
    let m = q - 1;
    let n = g.order();
    let candidates = (m as u128).saturating_pow(n as u32 - 1);
    let budget = oracle_budget();
    if candidates > budget as u128 {
        return Err(Error::OracleOutOfRange(format!(
            "{m}^{} candidate cochains exceed the budget of {budget}",
            n - 1
        )));
    }
    // work with discrete logarithms: units are gen^k, automorphisms multiply k by p^j
    let consts = field.constants();
    let log = |x| field.torsion_log(x).expect("unit of a finite field");
    let flog: Vec<Vec<u64>> = g.elements().map(|a| g.elements().map(|b| log(f.value(a, b))).collect()).collect();
    let p = consts.characteristic() as u64;
    let mult: Vec<u64> = g
        .elements()
        .map(|a| (0..module.action().automorphism(a).frobenius_power()).fold(1 % m.max(1), |acc, _| acc * p % m.max(1)))
        .collect();
    let mut unit_logs: Vec<(u32, u64)> = (1..q as u32).map(|c| (c, consts.log(c).unwrap() as u64)).collect();
    unit_logs.sort();
    let order: Vec<u64> = unit_logs.into_iter().map(|(_, l)| l).collect();

    let e = g.identity();
    let elems: Vec<usize> = g.elements().filter(|&x| x != e).collect();
    let mut pos = vec![0usize; n];
    for (i, &x) in elems.iter().enumerate() {
        pos[x] = i + 1;
    }
    let rep = |x: usize| -> usize {
        match &mode {
            Mode::Coboundary => x,
            Mode::Inflated(a) => {
                a.elements().iter().map(|&s| g.mul(x, s)).min().expect("nonempty subgroup")
            }
        }
    };
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for x in g.elements() {
        for y in g.elements() {
            let mut involved = vec![x, y, g.mul(x, y)];
            if let Mode::Inflated(_) = mode {
                involved.extend([rep(x), rep(y), g.mul(rep(x), rep(y))]);
            }
            let last = involved.iter().map(|&z| pos[z]).max().unwrap();
            checks[last].push((x, y));
        }
    }
    let md = |v: u64| if m == 0 { 0 } else { v % m };
    let holds = |c: &[u64], x: usize, y: usize| -> bool {
        match mode {
            Mode::Coboundary => md(flog[x][y] + c[g.mul(x, y)]) == md(c[x] + mult[x] * c[y]),
            Mode::Inflated(_) => {
                let (rx, ry) = (rep(x), rep(y));
                let lhs = flog[x][y] + c[x] + mult[x] * c[y] + c[g.mul(rx, ry)];
                let rhs = flog[rx][ry] + c[rx] + mult[rx] * c[ry] + c[g.mul(x, y)];
                md(lhs) == md(rhs)
            }
        }
    };
    let mut c = vec![0u64; n];
    if !checks[0].iter().all(|&(x, y)| holds(&c, x, y)) {
        return Ok(None);
    }
    // iterative depth-first search; choice[i] indexes into `order`
    let depth = elems.len();
    let mut choice = vec![0usize; depth];
    let mut i = 0usize;
    let found = loop {
        if i == depth {
            break true;
        }
        if choice[i] == order.len() {
            if i == 0 {
                break false;
            }
            choice[i] = 0;
            i -= 1;
            choice[i] += 1;
            continue;
        }
        c[elems[i]] = order[choice[i]];
        if checks[i + 1].iter().all(|&(x, y)| holds(&c, x, y)) {
            i += 1;
        } else {
            choice[i] += 1;
        }
    };
    if !found {
        return Ok(None);
    }
    let (gen, _) = field.torsion_generator();
    let values = c.iter().map(|&k| field.pow(&gen, k as i64).expect("unit")).collect();
    Ok(Some(OneCochain::new(module, values)?))
}
