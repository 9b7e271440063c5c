//! Shared plumbing for the identity registries: parameter sets, verification
//! policy, verdicts and tail-bound machinery.

use crate::error::{Error, Result};
use crate::exact::{QSqrt5, QSqrt5i};
use crate::interval::Interval;
use crate::rat::{parse_rational, pow10_neg, rat_i64, to_decimal_string, Rational};
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

/// A parameter value: integer or exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    Rat(Rational),
}

impl ParamValue {
    pub fn as_int(&self) -> Result<i64> {
        match self {
            ParamValue::Int(n) => Ok(*n),
            ParamValue::Rat(r) => {
                if r.is_integer() {
                    r.to_integer()
                        .to_i64()
                        .ok_or_else(|| Error::BadParam("integer out of range".into()))
                } else {
                    Err(Error::BadParam(format!("expected integer, got {r}")))
                }
            }
        }
    }

    pub fn as_rat(&self) -> Rational {
        match self {
            ParamValue::Int(n) => rat_i64(*n),
            ParamValue::Rat(r) => r.clone(),
        }
    }

    pub fn parse(s: &str) -> Result<ParamValue> {
        if let Ok(n) = s.trim().parse::<i64>() {
            return Ok(ParamValue::Int(n));
        }
        parse_rational(s)
            .map(ParamValue::Rat)
            .ok_or_else(|| Error::BadParam(format!("cannot parse parameter value {s:?}")))
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(n) => write!(f, "{n}"),
            ParamValue::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Ordered parameter map; the BTreeMap keeps report keys alphabetical.
pub type Params = BTreeMap<String, ParamValue>;

/// Canonical "k=2,m=-1" rendering (alphabetical by name).
pub fn params_string(p: &Params) -> String {
    p.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn params_from(pairs: &[(&str, ParamValue)]) -> Params {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

pub fn p_int(pairs: &[(&str, i64)]) -> Params {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), ParamValue::Int(*v)))
        .collect()
}

pub fn get_int(p: &Params, key: &str) -> Result<i64> {
    p.get(key)
        .ok_or_else(|| Error::BadParam(format!("missing parameter {key}")))?
        .as_int()
}

pub fn get_rat(p: &Params, key: &str) -> Result<Rational> {
    Ok(p.get(key)
        .ok_or_else(|| Error::BadParam(format!("missing parameter {key}")))?
        .as_rat())
}

/// Verification policy: working precision, comparison tolerance and the
/// summation budget.
#[derive(Debug, Clone)]
pub struct Policy {
    pub precision: u32,
    pub tolerance: Rational,
    pub max_terms: u64,
}

impl Default for Policy {
    fn default() -> Self {
        Policy {
            precision: 256,
            tolerance: pow10_neg(30),
            max_terms: 1 << 20,
        }
    }
}

impl Policy {
    /// Margin separating "refuted" from "inconclusive": 10x the tolerance.
    pub fn separation(&self) -> Rational {
        &self.tolerance * rat_i64(10)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Confirmed,
    Refuted,
    Inconclusive,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Confirmed => "confirmed",
            Status::Refuted => "refuted",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// An exact or enclosed numeric value produced by an oracle or closed form.
#[derive(Debug, Clone)]
pub enum Value {
    Exact(QSqrt5),
    ExactComplex(QSqrt5i),
    Num(Interval),
}

impl Value {
    pub fn to_interval(&self, precision: u32) -> Interval {
        match self {
            Value::Exact(q) => q.embed(precision),
            Value::ExactComplex(z) => {
                debug_assert!(z.is_real(), "interval view of a complex value");
                z.re.embed(precision)
            }
            Value::Num(iv) => iv.clone(),
        }
    }

    pub fn exact_string(&self) -> Option<String> {
        match self {
            Value::Exact(q) => Some(q.exact_string()),
            Value::ExactComplex(z) => Some(z.exact_string()),
            Value::Num(_) => None,
        }
    }
}

/// Rendered value inside a verdict: decimal midpoint, radius, optional exact
/// representation. All strings are deterministic.
#[derive(Debug, Clone)]
pub struct ValueRepr {
    pub dec: String,
    pub rad: String,
    pub exact: Option<String>,
}

pub const REPORT_SIG_DIGITS: u32 = 40;

impl ValueRepr {
    pub fn from_value(v: &Value, precision: u32) -> ValueRepr {
        let iv = v.to_interval(precision);
        ValueRepr {
            dec: to_decimal_string(iv.mid(), REPORT_SIG_DIGITS),
            rad: to_decimal_string(iv.rad(), 3),
            exact: v.exact_string(),
        }
    }

    pub fn from_interval(iv: &Interval) -> ValueRepr {
        ValueRepr {
            dec: to_decimal_string(iv.mid(), REPORT_SIG_DIGITS),
            rad: to_decimal_string(iv.rad(), 3),
            exact: None,
        }
    }

    pub fn empty() -> ValueRepr {
        ValueRepr {
            dec: String::new(),
            rad: String::new(),
            exact: None,
        }
    }
}

/// Outcome of checking one (id, params) cell.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub id: String,
    pub params: Params,
    pub status: Status,
    pub lhs: ValueRepr,
    pub rhs: ValueRepr,
    pub gap: String,
    pub terms_used: u64,
    pub wall_time: Duration,
    pub note: Option<String>,
}

impl Verdict {
    pub fn sort_key(&self) -> (String, String) {
        (self.id.clone(), params_string(&self.params))
    }
}

/// Decide a verdict from an oracle enclosure and a reference enclosure.
/// `lhs` must already include the series tail in its radius.
pub fn decide(lhs: &Interval, rhs: &Interval, policy: &Policy) -> (Status, Rational) {
    let gap = (lhs.mid() - rhs.mid()).abs();
    let slack = lhs.rad() + rhs.rad();
    if gap <= &slack + &policy.tolerance {
        (Status::Confirmed, gap)
    } else if gap > &slack + &policy.separation() {
        (Status::Refuted, gap)
    } else {
        (Status::Inconclusive, gap)
    }
}

/// Majorant for series tails: either |term(n)| <= c * n^d * r^n with r < 1,
/// or |term(n)| <= c * n^-m (compared against the integral).
#[derive(Debug, Clone)]
pub enum Majorant {
    Geometric { c: Rational, d: u32, r: Rational },
    InversePower { c: Rational, m: u32 },
}

impl Majorant {
    /// Rigorous bound on |sum_{n > n0} term(n)|, when computable at n0.
    ///
    /// Geometric case: the term ratio beyond n0 is at most
    /// rho = ((n0+2)/(n0+1))^d * r; when rho < 1 the tail is bounded by
    /// term(n0+1)/(1 - rho). All bound arithmetic rounds up at bounded
    /// precision, so huge exact powers never appear.
    pub fn tail(&self, n0: u64) -> Option<Rational> {
        use crate::rat::{dyadic_ceil_sig, pow_upper};
        const BOUND_BITS: u32 = 128;
        match self {
            Majorant::Geometric { c, d, r } => {
                if c.is_zero() {
                    return Some(Rational::zero());
                }
                debug_assert!(r.is_positive() && r < &Rational::from_integer(1.into()));
                let np1 = rat_i64((n0 + 1) as i64);
                let np2 = rat_i64((n0 + 2) as i64);
                let ratio = dyadic_ceil_sig(
                    &(pow_upper(&(np2 / &np1), *d as u64, BOUND_BITS)
                        * dyadic_ceil_sig(r, BOUND_BITS)),
                    BOUND_BITS,
                );
                if ratio >= Rational::from_integer(1.into()) {
                    return None;
                }
                let first = dyadic_ceil_sig(
                    &(dyadic_ceil_sig(c, BOUND_BITS)
                        * pow_upper(&np1, *d as u64, BOUND_BITS)
                        * pow_upper(r, n0 + 1, BOUND_BITS)),
                    BOUND_BITS,
                );
                Some(first / (Rational::from_integer(1.into()) - ratio))
            }
            Majorant::InversePower { c, m } => {
                debug_assert!(*m >= 2);
                if c.is_zero() {
                    return Some(Rational::zero());
                }
                // sum_{n>n0} n^-m <= integral_{n0}^inf t^-m dt = n0^(1-m)/(m-1)
                if n0 == 0 {
                    return None;
                }
                let n0r = rat_i64(n0 as i64);
                Some(c / (n0r.pow((*m - 1) as i32) * rat_i64((*m - 1) as i64)))
            }
        }
    }

    /// Smallest summation length (from the doubling schedule 64, 128, ...)
    /// whose tail is below `target`, capped at `max_terms`. Returns the chosen
    /// length and its tail bound (None if no valid bound exists by the cap).
    pub fn choose_length(&self, target: &Rational, max_terms: u64) -> (u64, Option<Rational>) {
        let mut n: u64 = 64;
        loop {
            if let Some(t) = self.tail(n) {
                if &t < target {
                    return (n, Some(t));
                }
            }
            if n >= max_terms {
                return (max_terms, self.tail(max_terms));
            }
            n = (n * 2).min(max_terms);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn params_are_canonical() {
        let p = p_int(&[("m", -1), ("k", 2)]);
        assert_eq!(params_string(&p), "k=2,m=-1");
    }

    #[test]
    fn geometric_tail_bounds_a_known_series() {
        // sum_{n>N} n (1/2)^n for N=10: exact value (N+2) * 2^-N = 12/1024
        let m = Majorant::Geometric {
            c: rat(1, 1),
            d: 1,
            r: rat(1, 2),
        };
        let bound = m.tail(10).unwrap();
        let exact = rat(12, 1024);
        assert!(bound >= exact);
        assert!(bound < rat(40, 1024));
    }

    #[test]
    fn inverse_power_tail_bounds_zeta_tail() {
        // sum_{n>100} n^-2 ~ 1/100; integral bound 1/100
        let m = Majorant::InversePower { c: rat(1, 1), m: 2 };
        let bound = m.tail(100).unwrap();
        assert_eq!(bound, rat(1, 100));
    }

    #[test]
    fn decide_tri_state() {
        let policy = Policy::default();
        let a = Interval::exact(rat(1, 3));
        let b = Interval::exact(rat(1, 3));
        assert_eq!(decide(&a, &b, &policy).0, Status::Confirmed);
        let c = Interval::exact(rat(1, 2));
        assert_eq!(decide(&a, &c, &policy).0, Status::Refuted);
        let d = Interval::exact(&rat(1, 3) + &pow10_neg(30) * rat(5, 1));
        assert_eq!(decide(&a, &d, &policy).0, Status::Inconclusive);
    }
}
