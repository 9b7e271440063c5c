//! Shared helpers for the registries: exact sequence values as ℚ(√5)
//! elements, cached transcendental constants, and bound arithmetic used by
//! the tail majorants.

use crate::error::Result;
use crate::exact::{alpha_pow, QSqrt5};
use crate::interval::Interval;
use crate::rat::{rat, rat_i64, rat_pow, Rational};
use crate::registry::{get_rat, Params};
use crate::seq;
use crate::transcendental::log_iv;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub fn fq(n: i64) -> QSqrt5 {
    QSqrt5::from_bigint(seq::fib(n))
}

pub fn lq(n: i64) -> QSqrt5 {
    QSqrt5::from_bigint(seq::lucas(n))
}

pub fn fr(n: i64) -> Rational {
    seq::fib_rat(n)
}

pub fn lr(n: i64) -> Rational {
    seq::lucas_rat(n)
}

pub fn q5r(x: Rational) -> QSqrt5 {
    QSqrt5::from_rational(x)
}

/// (-1)^n as rational.
pub fn sgn(n: i64) -> Rational {
    seq::sign_pow(n)
}

/// Integer power of a rational with 0^0 = 1 (needed by the b = ±c
/// degenerations of the binomial closed forms).
pub fn rpow0(base: &Rational, e: i64) -> Rational {
    use num_traits::Zero;
    if e == 0 {
        return Rational::from_integer(1.into());
    }
    if base.is_zero() {
        debug_assert!(e > 0, "negative power of zero");
        return Rational::zero();
    }
    rat_pow(base, e)
}

/// Integer power of a ℚ(√5) element with the same 0^0 = 1 convention.
pub fn q5pow0(base: &QSqrt5, e: i64) -> QSqrt5 {
    if e == 0 {
        return QSqrt5::one();
    }
    if base.is_zero() {
        debug_assert!(e > 0, "negative power of zero");
        return QSqrt5::zero();
    }
    base.pow(e).expect("nonzero base")
}

/// Rational upper bound on the golden ratio.
pub fn alpha_hi() -> Rational {
    rat(16180339888, 10_000_000_000)
}

/// Rational upper bound on alpha^e for e >= 0.
pub fn alpha_hi_pow(e: i64) -> Rational {
    debug_assert!(e >= 0);
    rat_pow(&alpha_hi(), e)
}

/// Rational upper bound on alpha^(1/k) for k >= 1 (monotone table; entries
/// for k > 4 reuse the k = 4 bound, which stays an upper bound).
pub fn alpha_root_hi(k: i64) -> Rational {
    match k {
        1 => alpha_hi(),
        2 => rat(12720196496, 10_000_000_000),
        3 => rat(11739850000, 10_000_000_000),
        4 => rat(11278900000, 10_000_000_000),
        _ => rat(11278900000, 10_000_000_000),
    }
}

/// Rational upper bound of an exact ℚ(√5) value.
pub fn q5_hi(x: &QSqrt5) -> Rational {
    x.embed(64).hi()
}

/// Rigorous log of an exact positive ℚ(√5) value.
pub fn log_q5(x: &QSqrt5, precision: u32) -> Result<Interval> {
    log_iv(&x.embed(precision + 8), precision)
}

fn catalog_const_cache() -> &'static Mutex<HashMap<(&'static str, u32), Interval>> {
    static CACHE: OnceLock<Mutex<HashMap<(&'static str, u32), Interval>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached_const(key: &'static str, precision: u32, f: impl FnOnce() -> Interval) -> Interval {
    if let Some(v) = catalog_const_cache().lock().unwrap().get(&(key, precision)) {
        return v.clone();
    }
    let v = f();
    catalog_const_cache()
        .lock()
        .unwrap()
        .insert((key, precision), v.clone());
    v
}

/// log α, cached per precision.
pub fn log_alpha(precision: u32) -> Interval {
    cached_const("log_alpha", precision, || {
        log_q5(&alpha_pow(1), precision).expect("alpha > 0")
    })
}

/// log 5, cached per precision.
pub fn log5(precision: u32) -> Interval {
    cached_const("log5", precision, || {
        crate::transcendental::log_rat(&rat_i64(5), precision).expect("5 > 0")
    })
}

/// Decode a parameter pair (za, zb) into z = za + zb√5.
pub fn get_q5(p: &Params, rat_key: &str, irr_key: &str) -> Result<QSqrt5> {
    Ok(QSqrt5::new(get_rat(p, rat_key)?, get_rat(p, irr_key)?))
}

/// Cartesian-product grid builders.
pub fn grid_int(name: &str, vals: &[i64]) -> Vec<Params> {
    vals.iter()
        .map(|v| {
            let mut p = Params::new();
            p.insert(name.to_string(), crate::registry::ParamValue::Int(*v));
            p
        })
        .collect()
}

pub fn extend_int(grid: Vec<Params>, name: &str, vals: &[i64]) -> Vec<Params> {
    let mut out = Vec::with_capacity(grid.len() * vals.len());
    for g in grid {
        for v in vals {
            let mut g2 = g.clone();
            g2.insert(name.to_string(), crate::registry::ParamValue::Int(*v));
            out.push(g2);
        }
    }
    out
}

pub fn extend_rat(grid: Vec<Params>, name: &str, vals: &[Rational]) -> Vec<Params> {
    let mut out = Vec::with_capacity(grid.len() * vals.len());
    for g in grid {
        for v in vals {
            let mut g2 = g.clone();
            g2.insert(name.to_string(), crate::registry::ParamValue::Rat(v.clone()));
            out.push(g2);
        }
    }
    out
}

pub fn grid_rat(name: &str, vals: &[Rational]) -> Vec<Params> {
    extend_rat(vec![Params::new()], name, vals)
}
