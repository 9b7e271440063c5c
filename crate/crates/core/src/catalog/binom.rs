//! The finite binomial-sum registry B01–B30.
//!
//! Every entry has a direct-summation oracle and an exact closed form in ℚ,
//! ℚ(√5) or ℚ(√5, i); the complex entries additionally carry polar-form
//! variants compared through rigorous intervals. All exact comparisons are
//! componentwise equality in the field.

use crate::catalog::util::*;
use crate::catalog::{EntryMeta, Mode};
use crate::error::{Error, Result};
use crate::exact::{QSqrt5, QSqrt5i};
use crate::interval::Interval;
use crate::rat::{rat, rat_i64, rat_pow, to_decimal_string, Rational};
use crate::registry::{
    decide, get_int, get_rat, Params, ParamValue, Policy, Status, Value, ValueRepr, Verdict,
};
use crate::seq::{binom_rat, floor_div};
use crate::transcendental::{arctan_iv, cos_iv, pi_iv, sin_iv};
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;
use std::time::Instant;

/// What the closed-form side evaluates to.
enum Closed {
    /// Exact value in ℚ(√5).
    Exact(QSqrt5),
    /// Exact value in ℚ(√5, i); must come out real and equal to the oracle.
    Complex(QSqrt5i),
    /// Rigorous enclosure (polar forms).
    Numeric(Interval),
    /// Cell intentionally not asserted (principal-branch policy).
    PolicySkip(&'static str),
}

type ValidateFn = Box<dyn Fn(&Params) -> Result<()> + Send + Sync>;
type OracleFn = Box<dyn Fn(&Params) -> Result<QSqrt5> + Send + Sync>;
type ClosedFn = Box<dyn Fn(&Params, u32) -> Result<Closed> + Send + Sync>;
type GridFn = Box<dyn Fn() -> Vec<Params> + Send + Sync>;

struct BinomDef {
    meta: EntryMeta,
    flagged: bool,
    validate: ValidateFn,
    oracle: OracleFn,
    closed: ClosedFn,
    grid: GridFn,
}

fn defs() -> &'static Vec<BinomDef> {
    static DEFS: OnceLock<Vec<BinomDef>> = OnceLock::new();
    DEFS.get_or_init(build_defs)
}

fn def(id: &str) -> Result<&'static BinomDef> {
    defs()
        .iter()
        .find(|d| d.meta.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

pub fn meta() -> Vec<EntryMeta> {
    defs().iter().map(|d| d.meta.clone()).collect()
}

pub fn validate(id: &str, params: &Params) -> Result<()> {
    (def(id)?.validate)(params)
}

pub fn default_grid(id: &str) -> Result<Vec<Params>> {
    let d = def(id)?;
    Ok((d.grid)()
        .into_iter()
        .filter(|p| (d.validate)(p).is_ok())
        .collect())
}

pub fn is_flagged(id: &str) -> bool {
    def(id).map(|d| d.flagged).unwrap_or(false)
}

/// The universal direct-summation oracle behind the registry:
/// sum_j C(n-r, j-s) b^(n-j-r+s) c^(j-s) w(j), exact.
pub fn floor_binom_sum(
    b: &QSqrt5,
    c: &QSqrt5,
    n: i64,
    weight: &dyn Fn(i64) -> Rational,
    r: i64,
    s: i64,
) -> Result<QSqrt5> {
    if n - r < 0 {
        return Err(Error::domain("negative effective order n - r"));
    }
    let mut acc = QSqrt5::zero();
    for t in 0..=(n - r) {
        let j = t + s;
        let w = weight(j);
        if w.is_zero() {
            continue;
        }
        let coeff = binom_rat(n - r, t) * w;
        let term = (q5pow0(b, n - r - t) * q5pow0(c, t)).scale(&coeff);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Direct oracle value for one (id, params) cell.
pub fn oracle(id: &str, params: &Params) -> Result<QSqrt5> {
    let d = def(id)?;
    (d.validate)(params)?;
    (d.oracle)(params)
}

/// Exact closed form for one cell (the paper side).
pub fn closed_form_binom(id: &str, params: &Params) -> Result<Value> {
    let d = def(id)?;
    (d.validate)(params)?;
    match (d.closed)(params, 256)? {
        Closed::Exact(q) => Ok(Value::Exact(q)),
        Closed::Complex(z) => Ok(Value::ExactComplex(z)),
        Closed::Numeric(iv) => Ok(Value::Num(iv)),
        Closed::PolicySkip(msg) => Err(Error::domain(msg)),
    }
}

pub fn verify(id: &str, params: &Params, policy: &Policy) -> Result<Verdict> {
    let t0 = Instant::now();
    let d = def(id)?;
    (d.validate)(params)?;
    let oracle_val = (d.oracle)(params)?;
    let closed = (d.closed)(params, policy.precision)?;
    let (status, gap, lhs, rhs, note) = match closed {
        Closed::Exact(q) => {
            let equal = q == oracle_val;
            let gap = (&q - &oracle_val).embed(64).mid().abs();
            (
                if equal { Status::Confirmed } else { Status::Refuted },
                gap,
                ValueRepr::from_value(&Value::Exact(oracle_val.clone()), policy.precision),
                ValueRepr::from_value(&Value::Exact(q), policy.precision),
                None,
            )
        }
        Closed::Complex(z) => {
            let equal = z.is_real() && z.re == oracle_val;
            let gap = if z.is_real() {
                (&z.re - &oracle_val).embed(64).mid().abs()
            } else {
                rat_i64(1)
            };
            (
                if equal { Status::Confirmed } else { Status::Refuted },
                gap,
                ValueRepr::from_value(&Value::Exact(oracle_val.clone()), policy.precision),
                ValueRepr::from_value(&Value::ExactComplex(z), policy.precision),
                None,
            )
        }
        Closed::Numeric(iv) => {
            let lhs_iv = oracle_val.embed(policy.precision);
            let (st, gap) = decide(&lhs_iv, &iv, policy);
            (
                st,
                gap,
                ValueRepr::from_value(&Value::Exact(oracle_val.clone()), policy.precision),
                ValueRepr::from_interval(&iv),
                None,
            )
        }
        Closed::PolicySkip(msg) => (
            Status::Inconclusive,
            Rational::zero(),
            ValueRepr::from_value(&Value::Exact(oracle_val.clone()), policy.precision),
            ValueRepr::empty(),
            Some(msg.to_string()),
        ),
    };
    let note = if status == Status::Refuted && d.flagged {
        Some("flagged entry: stated closed form disagrees with the summation oracle".into())
    } else {
        note
    };
    Ok(Verdict {
        id: id.to_string(),
        params: params.clone(),
        status,
        lhs,
        rhs,
        gap: to_decimal_string(&gap, 6),
        terms_used: (get_int(params, "n").unwrap_or(0).max(0) + 1) as u64,
        wall_time: t0.elapsed(),
        note,
    })
}

/// Registered reductions: a general identity collapses to a special one.
/// Returns a single verdict covering the registered comparison grid.
pub fn reduction_check(id_general: &str, id_special: &str, policy: &Policy) -> Result<Verdict> {
    let t0 = Instant::now();
    let pair = (id_general, id_special);
    let mut mismatches: Vec<String> = Vec::new();
    let mut cells = 0u64;
    match pair {
        ("B15", "B01") | ("B22", "B19") => {
            for (b, c) in small_bc() {
                for n in 1..=12i64 {
                    cells += 1;
                    let mut pg = Params::new();
                    pg.insert("b".into(), ParamValue::Rat(b.clone()));
                    pg.insert("c".into(), ParamValue::Rat(c.clone()));
                    pg.insert("n".into(), ParamValue::Int(n));
                    pg.insert("r".into(), ParamValue::Int(0));
                    pg.insert("s".into(), ParamValue::Int(0));
                    let mut ps = pg.clone();
                    ps.remove("r");
                    ps.remove("s");
                    let vg = closed_form_binom(id_general, &pg)?;
                    let vs = closed_form_binom(id_special, &ps)?;
                    match (vg, vs) {
                        (Value::Exact(a), Value::Exact(bb)) if a == bb => {}
                        _ => mismatches.push(format!("b={b} c={c} n={n}")),
                    }
                }
            }
        }
        ("B28", "B26") => {
            for (b, c) in small_bc() {
                for n in 2..=12i64 {
                    cells += 1;
                    let mut pg = Params::new();
                    pg.insert("b".into(), ParamValue::Rat(b.clone()));
                    pg.insert("c".into(), ParamValue::Rat(c.clone()));
                    pg.insert("n".into(), ParamValue::Int(n));
                    pg.insert("r".into(), ParamValue::Int(0));
                    pg.insert("s".into(), ParamValue::Int(0));
                    pg.insert("form".into(), ParamValue::Int(1));
                    let ps = pg.clone();
                    let vg = closed_form_binom("B28", &pg)?;
                    let vs = closed_form_binom("B26", &ps)?;
                    match (vg, vs) {
                        (Value::ExactComplex(a), Value::ExactComplex(bb)) if a == bb => {}
                        _ => mismatches.push(format!("b={b} c={c} n={n}")),
                    }
                }
            }
        }
        ("B16", "B15") => {
            // B16 v1 = B15 at b = c = 1; B16 v2 = B15 with (-1)^j absorbed
            // into (b, c) = (-1, 1) ... sum (-1)^j C b^(n-j-r) c^(j-s) =
            // (-1)^s sum C (-b)^(n-j-r) ... easiest: evaluate both oracles.
            for n in 2..=12i64 {
                for r in 0..=2i64 {
                    for s in 0..=2i64 {
                        if n <= r + s + 1 {
                            continue;
                        }
                        cells += 1;
                        for v in [1i64, 2] {
                            if v == 2 && n < r + s + 2 {
                                continue;
                            }
                            let p16 = p_of(&[("v", v), ("n", n), ("r", r), ("s", s)]);
                            let o16 = oracle("B16", &p16)?;
                            let c16 = match closed_form_binom("B16", &p16)? {
                                Value::Exact(q) => q,
                                _ => unreachable!(),
                            };
                            if o16 != c16 {
                                mismatches.push(format!("v={v} n={n} r={r} s={s}"));
                            }
                        }
                        // and the b=c collapse of the general closed form
                        let mut pg = p_of(&[("n", n), ("r", r), ("s", s)]);
                        pg.insert("b".into(), ParamValue::Int(1));
                        pg.insert("c".into(), ParamValue::Int(1));
                        let v15 = match closed_form_binom("B15", &pg)? {
                            Value::Exact(q) => q,
                            _ => unreachable!(),
                        };
                        let v16 = match closed_form_binom(
                            "B16",
                            &p_of(&[("v", 1), ("n", n), ("r", r), ("s", s)]),
                        )? {
                            Value::Exact(q) => q,
                            _ => unreachable!(),
                        };
                        if v15 != v16 {
                            mismatches.push(format!("b=c collapse n={n} r={r} s={s}"));
                        }
                    }
                }
            }
        }
        ("B23", "B22") => {
            for n in 4..=14i64 {
                for r in 0..=2i64 {
                    for s in 0..=r {
                        if n - 2 < r {
                            continue;
                        }
                        cells += 1;
                        let mut pg = p_of(&[("n", n), ("r", r), ("s", s)]);
                        pg.insert("b".into(), ParamValue::Int(1));
                        pg.insert("c".into(), ParamValue::Int(1));
                        let v22 = match closed_form_binom("B22", &pg)? {
                            Value::Exact(q) => q,
                            _ => unreachable!(),
                        };
                        let v23 = match closed_form_binom(
                            "B23",
                            &p_of(&[("v", 1), ("n", n), ("r", r), ("s", s)]),
                        )? {
                            Value::Exact(q) => q,
                            _ => unreachable!(),
                        };
                        if v22 != v23 {
                            mismatches.push(format!("b=c collapse n={n} r={r} s={s}"));
                        }
                    }
                }
            }
        }
        _ => {
            return Err(Error::domain(format!(
                "unregistered reduction pair ({id_general}, {id_special})"
            )))
        }
    }
    let _ = policy;
    let status = if mismatches.is_empty() {
        Status::Confirmed
    } else {
        Status::Refuted
    };
    Ok(Verdict {
        id: format!("{id_general}->{id_special}"),
        params: Params::new(),
        status,
        lhs: ValueRepr::empty(),
        rhs: ValueRepr::empty(),
        gap: to_decimal_string(&rat_i64(mismatches.len() as i64), 3),
        terms_used: cells,
        wall_time: t0.elapsed(),
        note: if mismatches.is_empty() {
            None
        } else {
            Some(mismatches.join("; "))
        },
    })
}

fn p_of(pairs: &[(&str, i64)]) -> Params {
    crate::registry::p_int(pairs)
}

// ---------------------------------------------------------------------------
// oracle building blocks
// ---------------------------------------------------------------------------

/// sum_{j=0}^n C(n,j) f(j), exact rational.
fn bsum(n: i64, f: impl Fn(i64) -> Rational) -> Rational {
    let mut acc = Rational::zero();
    for j in 0..=n {
        let v = f(j);
        if !v.is_zero() {
            acc += binom_rat(n, j) * v;
        }
    }
    acc
}

/// sum over the even/odd slice: sum_j C(nr, lo(j)) f(j) over all j >= 0 with
/// 0 <= lo(j) <= nr (the silent-vanishing convention on the binomial).
fn esum(nr: i64, lo: impl Fn(i64) -> i64, f: impl Fn(i64) -> Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut j = 0i64;
    loop {
        let l = lo(j);
        if l > nr {
            break;
        }
        if l >= 0 {
            let v = f(j);
            if !v.is_zero() {
                acc += binom_rat(nr, l) * v;
            }
        }
        j += 1;
        if j > nr + 2 {
            break;
        }
    }
    acc
}

fn floor_half(j: i64) -> Rational {
    rat_i64(floor_div(j, 2).unwrap())
}

fn fl(v: i64, n: i64) -> Rational {
    if v == 1 {
        fr(n)
    } else {
        lr(n)
    }
}

/// 5^(e/2) for an even exponent as a rational (the case splits keep all
/// closed-form powers integral).
fn five_half(e: i64) -> Rational {
    debug_assert!(e % 2 == 0, "odd half-power of five outside a parity branch");
    rat_pow(&rat_i64(5), e / 2)
}

/// coeff * base^e with the coefficient checked first: a vanishing scalar
/// coefficient silences an otherwise ill-defined 0^negative power (the b = -c
/// degenerations hit these terms exactly when their coefficients vanish).
fn term0(coeff: Rational, base: &Rational, e: i64) -> Rational {
    if coeff.is_zero() {
        Rational::zero()
    } else {
        coeff * rpow0(base, e)
    }
}

fn need(id: &str, cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::schema(id, msg))
    }
}

fn small_bc() -> Vec<(Rational, Rational)> {
    vec![
        (rat_i64(1), rat_i64(1)),
        (rat_i64(1), rat_i64(-1)),
        (rat_i64(2), rat_i64(1)),
        (rat(1, 2), rat(3, 2)),
        (rat(3, 5), rat(-1, 3)),
    ]
}

fn bc_grid_values() -> Vec<Rational> {
    vec![
        rat_i64(1),
        rat_i64(-1),
        rat_i64(2),
        rat_i64(-2),
        rat(1, 2),
        rat(3, 5),
        rat(-1, 3),
    ]
}

fn grid_bcn(ns: &[i64]) -> Vec<Params> {
    let vals = bc_grid_values();
    let g = grid_rat("b", &vals);
    let g = extend_rat(g, "c", &vals);
    extend_int(g, "n", ns)
}

fn get_bc(params: &Params) -> Result<(Rational, Rational)> {
    Ok((get_rat(params, "b")?, get_rat(params, "c")?))
}

// ---------------------------------------------------------------------------
// the registry
// ---------------------------------------------------------------------------

#[allow(clippy::too_many_lines)]
fn build_defs() -> Vec<BinomDef> {
    let mut v: Vec<BinomDef> = Vec::with_capacity(30);

    // B01: the floor-weight binomial transform in closed form.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B01",
            statement: "sum C(n,j) floor(j/2) b^(n-j) c^j = (cn/2)(b+c)^(n-1) - ((b+c)^n - (b-c)^n)/4",
            param_schema: "b rational, c rational nonzero, n >= 1",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let (_, c) = get_bc(p)?;
            need("B01", !c.is_zero(), "c must be nonzero")?;
            need("B01", get_int(p, "n")? >= 1, "n must be >= 1")
        }),
        oracle: Box::new(|p| {
            let (b, c) = get_bc(p)?;
            let n = get_int(p, "n")?;
            floor_binom_sum(&q5r(b), &q5r(c), n, &floor_half, 0, 0)
        }),
        closed: Box::new(|p, _| {
            let (b, c) = get_bc(p)?;
            let n = get_int(p, "n")?;
            let sum = &b + &c;
            let diff = &b - &c;
            let val = &c * rat_i64(n) / rat_i64(2) * rpow0(&sum, n - 1)
                - (rpow0(&sum, n) - rpow0(&diff, n)) / rat_i64(4);
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| grid_bcn(&[1, 2, 3, 4, 5, 8, 13, 21, 34, 40])),
    });

    // B02: the b = c collapse.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B02",
            statement: "sum C(n,j) floor(j/2) = 2^(n-2)(n-1)",
            param_schema: "n >= 1",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| need("B02", get_int(p, "n")? >= 1, "n must be >= 1")),
        oracle: Box::new(|p| {
            let n = get_int(p, "n")?;
            Ok(q5r(bsum(n, floor_half)))
        }),
        closed: Box::new(|p, _| {
            let n = get_int(p, "n")?;
            Ok(Closed::Exact(q5r(
                rat_pow(&rat_i64(2), n - 2) * rat_i64(n - 1),
            )))
        }),
        grid: Box::new(|| grid_int("n", &(1..=40).collect::<Vec<_>>())),
    });

    // B03: the two worked corollaries of B01.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B03",
            statement: "sum (-1)^j C(n,j) floor(j/2) = 2^(n-2) and sum C(n,j) 2^j floor(j/2) = n 3^(n-1) - (3^n - (-1)^n)/4",
            param_schema: "v in {1, 2}, n >= 2",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B03", (1..=2).contains(&variant), "v must be 1 or 2")?;
            need("B03", get_int(p, "n")? >= 2, "n must be >= 2")
        }),
        oracle: Box::new(|p| {
            let n = get_int(p, "n")?;
            let val = if get_int(p, "v")? == 1 {
                bsum(n, |j| sgn(j) * floor_half(j))
            } else {
                bsum(n, |j| rat_pow(&rat_i64(2), j) * floor_half(j))
            };
            Ok(q5r(val))
        }),
        closed: Box::new(|p, _| {
            let n = get_int(p, "n")?;
            let val = if get_int(p, "v")? == 1 {
                rat_pow(&rat_i64(2), n - 2)
            } else {
                rat_i64(n) * rat_pow(&rat_i64(3), n - 1)
                    - (rat_pow(&rat_i64(3), n) - sgn(n)) / rat_i64(4)
            };
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| extend_int(grid_int("v", &[1, 2]), "n", &(2..=30).collect::<Vec<_>>())),
    });

    // B04/B05: Fibonacci/Lucas floor-weight sums.
    for which in [1i64, 2] {
        let id: &'static str = if which == 1 { "B04" } else { "B05" };
        v.push(BinomDef {
            meta: EntryMeta {
                id,
                statement: if which == 1 {
                    "sum C(n,j) floor(j/2) F_(j+m) = (n/2) F_(2n+m-1) - (F_(2n+m) + (-1)^m F_(n-m))/4"
                } else {
                    "sum C(n,j) floor(j/2) L_(j+m) = (n/2) L_(2n+m-1) - (L_(2n+m) - (-1)^m L_(n-m))/4"
                },
                param_schema: "m int, n >= 1",
                mode: Mode::Exact,
            },
            flagged: false,
            validate: Box::new(move |p| {
                get_int(p, "m")?;
                need(id, get_int(p, "n")? >= 1, "n must be >= 1")
            }),
            oracle: Box::new(move |p| {
                let m = get_int(p, "m")?;
                let n = get_int(p, "n")?;
                Ok(q5r(bsum(n, |j| floor_half(j) * fl(which, j + m))))
            }),
            closed: Box::new(move |p, _| {
                let m = get_int(p, "m")?;
                let n = get_int(p, "n")?;
                let val = if which == 1 {
                    rat_i64(n) / rat_i64(2) * fr(2 * n + m - 1)
                        - (fr(2 * n + m) + sgn(m) * fr(n - m)) / rat_i64(4)
                } else {
                    rat_i64(n) / rat_i64(2) * lr(2 * n + m - 1)
                        - (lr(2 * n + m) - sgn(m) * lr(n - m)) / rat_i64(4)
                };
                Ok(Closed::Exact(q5r(val)))
            }),
            grid: Box::new(|| {
                let g = grid_int("m", &[-8, -6, -4, -2, -1, 0, 1, 2, 4, 6, 8]);
                extend_int(g, "n", &[1, 2, 3, 4, 5, 6, 8, 10, 14, 19, 25, 30])
            }),
        });
    }

    // B06: classical plain binomial transforms (oracle self-tests).
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B06",
            statement: "classical sums: sum C(n,j) F_(j+m) = F_(2n+m) and sum C(n,j) L_(j+m) = L_(2n+m)",
            param_schema: "v in {1: F, 2: L}, m int, n >= 0",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B06", (1..=2).contains(&variant), "v must be 1 or 2")?;
            get_int(p, "m")?;
            need("B06", get_int(p, "n")? >= 0, "n must be >= 0")
        }),
        oracle: Box::new(|p| {
            let which = get_int(p, "v")?;
            let m = get_int(p, "m")?;
            let n = get_int(p, "n")?;
            Ok(q5r(bsum(n, |j| fl(which, j + m))))
        }),
        closed: Box::new(|p, _| {
            let which = get_int(p, "v")?;
            let m = get_int(p, "m")?;
            let n = get_int(p, "n")?;
            Ok(Closed::Exact(q5r(fl(which, 2 * n + m))))
        }),
        grid: Box::new(|| {
            let g = grid_int("v", &[1, 2]);
            let g = extend_int(g, "m", &[-10, -7, -4, -2, -1, 0, 1, 2, 4, 7, 10]);
            extend_int(g, "n", &[0, 1, 2, 3, 5, 8, 13, 21, 30, 40])
        }),
    });

    // B07/B08: odd-p Fibonacci/Lucas with sqrt5-power parity branches.
    for which in [1i64, 2] {
        let id: &'static str = if which == 1 { "B07" } else { "B08" };
        v.push(BinomDef {
            meta: EntryMeta {
                id,
                statement: if which == 1 {
                    "odd-p sum C(n,j) floor(j/2) F_(2pj+m) with n-parity closed forms"
                } else {
                    "odd-p sum C(n,j) floor(j/2) L_(2pj+m) with n-parity closed forms"
                },
                param_schema: "p odd >= 1, m int, n >= 1",
                mode: Mode::Exact,
            },
            flagged: false,
            validate: Box::new(move |p| {
                let pp = get_int(p, "p")?;
                need(id, pp >= 1 && pp % 2 == 1, "p must be odd and >= 1")?;
                get_int(p, "m")?;
                need(id, get_int(p, "n")? >= 1, "n must be >= 1")
            }),
            oracle: Box::new(move |p| {
                let pp = get_int(p, "p")?;
                let m = get_int(p, "m")?;
                let n = get_int(p, "n")?;
                Ok(q5r(bsum(n, |j| floor_half(j) * fl(which, 2 * pp * j + m))))
            }),
            closed: Box::new(move |p, _| {
                let pp = get_int(p, "p")?;
                let m = get_int(p, "m")?;
                let n = get_int(p, "n")?;
                let fp = fr(pp);
                let lp = lr(pp);
                let half_n = rat_i64(n) / rat_i64(2);
                let quarter = rat(1, 4);
                let val = if which == 1 {
                    if n % 2 == 1 {
                        half_n * five_half(n - 1) * rat_pow(&fp, n - 1) * fr(pp * (n + 1) + m)
                            - &quarter * five_half(n - 1) * rat_pow(&fp, n) * lr(pp * n + m)
                            - &quarter * rat_pow(&lp, n) * fr(pp * n + m)
                    } else {
                        half_n * five_half(n - 2) * rat_pow(&fp, n - 1) * lr(pp * (n + 1) + m)
                            - &quarter * five_half(n) * rat_pow(&fp, n) * fr(pp * n + m)
                            + &quarter * rat_pow(&lp, n) * fr(pp * n + m)
                    }
                } else if n % 2 == 1 {
                    half_n * five_half(n - 1) * rat_pow(&fp, n - 1) * lr(pp * (n + 1) + m)
                        - &quarter * five_half(n + 1) * rat_pow(&fp, n) * fr(pp * n + m)
                        - &quarter * rat_pow(&lp, n) * lr(pp * n + m)
                } else {
                    half_n * five_half(n) * rat_pow(&fp, n - 1) * fr(pp * (n + 1) + m)
                        - &quarter * five_half(n) * rat_pow(&fp, n) * lr(pp * n + m)
                        + &quarter * rat_pow(&lp, n) * lr(pp * n + m)
                };
                Ok(Closed::Exact(q5r(val)))
            }),
            grid: Box::new(|| {
                let g = grid_int("p", &[1, 3, 5]);
                let g = extend_int(g, "m", &[-5, -3, -1, 0, 1, 3, 5]);
                extend_int(g, "n", &[1, 2, 3, 4, 5, 7, 10, 14, 20, 25])
            }),
        });
    }

    // B09/B10: even-p companions.
    for which in [1i64, 2] {
        let id: &'static str = if which == 1 { "B09" } else { "B10" };
        v.push(BinomDef {
            meta: EntryMeta {
                id,
                statement: if which == 1 {
                    "even-p sum C(n,j) floor(j/2) F_(2pj+m) with Lucas-power closed forms"
                } else {
                    "even-p sum C(n,j) floor(j/2) L_(2pj+m) with Lucas-power closed forms"
                },
                param_schema: "p even >= 2, m int, n >= 1",
                mode: Mode::Exact,
            },
            flagged: false,
            validate: Box::new(move |p| {
                let pp = get_int(p, "p")?;
                need(id, pp >= 2 && pp % 2 == 0, "p must be even and >= 2")?;
                get_int(p, "m")?;
                need(id, get_int(p, "n")? >= 1, "n must be >= 1")
            }),
            oracle: Box::new(move |p| {
                let pp = get_int(p, "p")?;
                let m = get_int(p, "m")?;
                let n = get_int(p, "n")?;
                Ok(q5r(bsum(n, |j| floor_half(j) * fl(which, 2 * pp * j + m))))
            }),
            closed: Box::new(move |p, _| {
                let pp = get_int(p, "p")?;
                let m = get_int(p, "m")?;
                let n = get_int(p, "n")?;
                let fp = fr(pp);
                let lp = lr(pp);
                let half_n = rat_i64(n) / rat_i64(2);
                let quarter = rat(1, 4);
                let val = if which == 1 {
                    let head = &half_n * rat_pow(&lp, n - 1) * fr(pp * (n + 1) + m)
                        - &quarter * rat_pow(&lp, n) * fr(pp * n + m);
                    if n % 2 == 1 {
                        head - &quarter * five_half(n - 1) * rat_pow(&fp, n) * lr(pp * n + m)
                    } else {
                        head + &quarter * five_half(n) * rat_pow(&fp, n) * fr(pp * n + m)
                    }
                } else {
                    let head = &half_n * rat_pow(&lp, n - 1) * lr(pp * (n + 1) + m)
                        - &quarter * rat_pow(&lp, n) * lr(pp * n + m);
                    if n % 2 == 1 {
                        head - &quarter * five_half(n + 1) * rat_pow(&fp, n) * fr(pp * n + m)
                    } else {
                        head + &quarter * five_half(n) * rat_pow(&fp, n) * lr(pp * n + m)
                    }
                };
                Ok(Closed::Exact(q5r(val)))
            }),
            grid: Box::new(|| {
                let g = grid_int("p", &[2, 4]);
                let g = extend_int(g, "m", &[-5, -3, -1, 0, 1, 3, 5]);
                extend_int(g, "n", &[1, 2, 3, 4, 5, 7, 10, 14, 20, 25])
            }),
        });
    }

    // B11: classical 2j counterparts.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B11",
            statement: "classical sums: sum C(n,j) F/L_(2j+m) in 5^(n/2) closed forms by n-parity",
            param_schema: "v in {1: F, 2: L}, m int, n >= 0",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B11", (1..=2).contains(&variant), "v must be 1 or 2")?;
            get_int(p, "m")?;
            need("B11", get_int(p, "n")? >= 0, "n must be >= 0")
        }),
        oracle: Box::new(|p| {
            let which = get_int(p, "v")?;
            let m = get_int(p, "m")?;
            let n = get_int(p, "n")?;
            Ok(q5r(bsum(n, |j| fl(which, 2 * j + m))))
        }),
        closed: Box::new(|p, _| {
            let which = get_int(p, "v")?;
            let m = get_int(p, "m")?;
            let n = get_int(p, "n")?;
            let val = match (which, n % 2 == 0) {
                (1, false) => five_half(n - 1) * lr(n + m),
                (1, true) => five_half(n) * fr(n + m),
                (2, false) => five_half(n + 1) * fr(n + m),
                _ => five_half(n) * lr(n + m),
            };
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let g = grid_int("v", &[1, 2]);
            let g = extend_int(g, "m", &[-10, -6, -3, -1, 0, 1, 3, 6, 10]);
            extend_int(g, "n", &[0, 1, 2, 3, 5, 8, 13, 21, 30, 40])
        }),
    });

    // B12: the 3j+m theorem.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B12",
            statement: "sum C(n,j) floor(j/2) F/L_(3j+m) = 2^(n-2)(n F/L_(2n+m+1) - F/L_(2n+m) + (-1)^n F/L_(n+m))",
            param_schema: "v in {1: F, 2: L}, m int, n >= 1",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B12", (1..=2).contains(&variant), "v must be 1 or 2")?;
            get_int(p, "m")?;
            need("B12", get_int(p, "n")? >= 1, "n must be >= 1")
        }),
        oracle: Box::new(|p| {
            let which = get_int(p, "v")?;
            let m = get_int(p, "m")?;
            let n = get_int(p, "n")?;
            Ok(q5r(bsum(n, |j| floor_half(j) * fl(which, 3 * j + m))))
        }),
        closed: Box::new(|p, _| {
            let which = get_int(p, "v")?;
            let m = get_int(p, "m")?;
            let n = get_int(p, "n")?;
            let val = rat_pow(&rat_i64(2), n - 2)
                * (rat_i64(n) * fl(which, 2 * n + m + 1) - fl(which, 2 * n + m)
                    + sgn(n) * fl(which, n + m));
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let g = grid_int("v", &[1, 2]);
            let g = extend_int(g, "m", &[-8, -5, -2, -1, 0, 1, 2, 5, 8]);
            extend_int(g, "n", &[1, 2, 3, 4, 6, 9, 13, 20, 26, 30])
        }),
    });

    // B13: the 2^j theorem plus its classical counterparts.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B13",
            statement: "sum C(n,j) floor(j/2) 2^j F/L_(j+m) with 5^(n/2) parity tails; classical 2^j sums checked alongside",
            param_schema: "v in {1: F, 2: L}, m int, n >= 1",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B13", (1..=2).contains(&variant), "v must be 1 or 2")?;
            get_int(p, "m")?;
            need("B13", get_int(p, "n")? >= 1, "n must be >= 1")
        }),
        oracle: Box::new(|p| {
            let which = get_int(p, "v")?;
            let m = get_int(p, "m")?;
            let n = get_int(p, "n")?;
            // classical counterpart must hold exactly on the same cell
            let classical = bsum(n, |j| rat_pow(&rat_i64(2), j) * fl(which, j + m));
            if classical != fl(which, 3 * n + m) {
                return Err(Error::domain("classical 2^j counterpart failed"));
            }
            Ok(q5r(bsum(n, |j| {
                rat_pow(&rat_i64(2), j) * floor_half(j) * fl(which, j + m)
            })))
        }),
        closed: Box::new(|p, _| {
            let which = get_int(p, "v")?;
            let m = get_int(p, "m")?;
            let n = get_int(p, "n")?;
            let head = rat_i64(n) * fl(which, 3 * n + m - 2) - fl(which, 3 * n + m) / rat_i64(4);
            let tail = match (which, n % 2 == 0) {
                (1, true) => five_half(n) / rat_i64(4) * fr(m),
                (1, false) => -five_half(n - 1) / rat_i64(4) * lr(m),
                (2, true) => five_half(n) / rat_i64(4) * lr(m),
                _ => -five_half(n + 1) / rat_i64(4) * fr(m),
            };
            Ok(Closed::Exact(q5r(head + tail)))
        }),
        grid: Box::new(|| {
            let g = grid_int("v", &[1, 2]);
            let g = extend_int(g, "m", &[-8, -5, -2, -1, 0, 1, 2, 5, 8]);
            extend_int(g, "n", &[1, 2, 3, 4, 6, 9, 13, 20, 26, 30])
        }),
    });

    // B14: (-1)^(q(n-j)) weighted sums.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B14",
            statement: "sum (-1)^(q(n-j)) C(n,j) floor(j/2) F/L_(2qj+m) in L_q/F_q power closed forms",
            param_schema: "v in {1: F, 2: L}, q int, m int, n >= 0",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B14", (1..=2).contains(&variant), "v must be 1 or 2")?;
            get_int(p, "q")?;
            get_int(p, "m")?;
            need("B14", get_int(p, "n")? >= 0, "n must be >= 0")
        }),
        oracle: Box::new(|p| {
            let which = get_int(p, "v")?;
            let q = get_int(p, "q")?;
            let m = get_int(p, "m")?;
            let n = get_int(p, "n")?;
            Ok(q5r(bsum(n, |j| {
                sgn(q * (n - j)) * floor_half(j) * fl(which, 2 * q * j + m)
            })))
        }),
        closed: Box::new(|p, _| {
            let which = get_int(p, "v")?;
            let q = get_int(p, "q")?;
            let m = get_int(p, "m")?;
            let n = get_int(p, "n")?;
            let lq_ = lr(q);
            let fq_ = fr(q);
            let head = rat_i64(n) / rat_i64(2) * fl(which, q * (n + 1) + m) * rat_pow(&lq_, n - 1)
                - fl(which, q * n + m) * rat_pow(&lq_, n) / rat_i64(4);
            let tail = match (which, n % 2 == 0) {
                (1, true) => five_half(n) / rat_i64(4) * fr(q * n + m) * rat_pow(&fq_, n),
                (1, false) => -five_half(n - 1) / rat_i64(4) * lr(q * n + m) * rat_pow(&fq_, n),
                (2, true) => five_half(n) / rat_i64(4) * lr(q * n + m) * rat_pow(&fq_, n),
                _ => -five_half(n + 1) / rat_i64(4) * fr(q * n + m) * rat_pow(&fq_, n),
            };
            Ok(Closed::Exact(q5r(head + tail)))
        }),
        grid: Box::new(|| {
            let g = grid_int("v", &[1, 2]);
            let g = extend_int(g, "q", &[-3, -2, -1, 1, 2, 3]);
            let g = extend_int(g, "m", &[-5, -2, 0, 2, 5]);
            extend_int(g, "n", &[0, 1, 2, 3, 5, 8, 12, 17, 20])
        }),
    });

    v.extend(build_defs_late());
    v
}

#[allow(clippy::too_many_lines)]
fn build_defs_late() -> Vec<BinomDef> {
    let mut v: Vec<BinomDef> = Vec::with_capacity(16);

    // B15: the doubly shifted generalization of B01.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B15",
            statement: "shifted transform sum C(n-s-r, j-s) floor(j/2) b^(n-j-r) c^(j-s) in ((n-r)c+bs)/2 form",
            param_schema: "b, c rational nonzero, n, r, s >= 0 with n >= r+s",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let (b, c) = get_bc(p)?;
            need("B15", !c.is_zero() && !b.is_zero(), "b, c must be nonzero")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            need("B15", r >= 0 && s >= 0, "r, s must be >= 0")?;
            need("B15", n >= r + s, "requires n >= r + s")?;
            let (b, c) = get_bc(p)?;
            if (b + c).is_zero() {
                // the boundary cell n = r + s needs a removable-singularity
                // reading of the closed form; keep it out of the domain
                need("B15", n >= r + s + 1, "b = -c requires n >= r + s + 1")?;
            }
            Ok(())
        }),
        oracle: Box::new(|p| {
            let (b, c) = get_bc(p)?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            // sum C(n-s-r, j-s) floor(j/2) b^(n-j-r) c^(j-s) over the support:
            // the universal oracle with effective order n' = n - s
            floor_binom_sum(&q5r(b), &q5r(c), n - s, &floor_half, r, s)
        }),
        closed: Box::new(|p, _| {
            let (b, c) = get_bc(p)?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let sum = &b + &c;
            let diff = &b - &c;
            let val = term0(
                (rat_i64(n - r) * &c + &b * rat_i64(s)) / rat_i64(2),
                &sum,
                n - r - s - 1,
            ) - (rpow0(&sum, n - r - s) - sgn(s) * rpow0(&diff, n - r - s)) / rat_i64(4);
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let mut out = Vec::new();
            for (b, c) in small_bc() {
                for n in [2i64, 3, 5, 8, 12] {
                    for r in 0..=2i64 {
                        for s in 0..=2i64 {
                            if n < r + s {
                                continue;
                            }
                            let mut g = Params::new();
                            g.insert("b".into(), ParamValue::Rat(b.clone()));
                            g.insert("c".into(), ParamValue::Rat(c.clone()));
                            g.insert("n".into(), ParamValue::Int(n));
                            g.insert("r".into(), ParamValue::Int(r));
                            g.insert("s".into(), ParamValue::Int(s));
                            out.push(g);
                        }
                    }
                }
            }
            out
        }),
    });

    // B16: b = +-c collapses of B15.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B16",
            statement: "sum C(n-s-r, j-s) floor(j/2) = 2^(n-s-r-2)(n+s-r-1); alternating version = 2^(n-s-r-2)",
            param_schema: "v in {1, 2}, n, r, s >= 0; v=1 needs n > r+s, v=2 needs n >= r+s+2",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B16", (1..=2).contains(&variant), "v must be 1 or 2")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            need("B16", r >= 0 && s >= 0, "r, s must be >= 0")?;
            if variant == 1 {
                need("B16", n > r + s, "requires n > r + s")
            } else {
                need("B16", n >= r + s + 2, "requires n >= r + s + 2")
            }
        }),
        oracle: Box::new(|p| {
            let variant = get_int(p, "v")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let mut acc = Rational::zero();
            for j in s..=(n - r) {
                let w = floor_half(j) * if variant == 2 { sgn(j) } else { Rational::one() };
                acc += binom_rat(n - s - r, j - s) * w;
            }
            Ok(q5r(acc))
        }),
        closed: Box::new(|p, _| {
            let variant = get_int(p, "v")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let base = rat_pow(&rat_i64(2), n - s - r - 2);
            let val = if variant == 1 {
                base * rat_i64(n + s - r - 1)
            } else {
                base
            };
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let mut out = Vec::new();
            for variant in [1i64, 2] {
                for n in [3i64, 4, 6, 9, 13, 18] {
                    for r in 0..=2i64 {
                        for s in 0..=2i64 {
                            out.push(p_of(&[("v", variant), ("n", n), ("r", r), ("s", s)]));
                        }
                    }
                }
            }
            out
        }),
    });

    // B17: even/odd index splits with weight j.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B17",
            statement: "sum C(n-s-r, 2j-s) j = 2^(n-s-r-3)(n+s-r) and sum C(n-s-r, 2j-s+1) j = 2^(n-s-r-3)(n+s-r-2)",
            param_schema: "v in {1, 2}, n, r, s >= 0 with n >= r+s+2",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B17", (1..=2).contains(&variant), "v must be 1 or 2")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            need("B17", r >= 0 && s >= 0, "r, s must be >= 0")?;
            need("B17", n >= r + s + 2, "requires n >= r + s + 2")
        }),
        oracle: Box::new(|p| {
            let variant = get_int(p, "v")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let nr = n - s - r;
            let val = if variant == 1 {
                esum(nr, |j| 2 * j - s, |j| rat_i64(j))
            } else {
                esum(nr, |j| 2 * j - s + 1, |j| rat_i64(j))
            };
            Ok(q5r(val))
        }),
        closed: Box::new(|p, _| {
            let variant = get_int(p, "v")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let base = rat_pow(&rat_i64(2), n - s - r - 3);
            let val = if variant == 1 {
                base * rat_i64(n + s - r)
            } else {
                base * rat_i64(n + s - r - 2)
            };
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let mut out = Vec::new();
            for variant in [1i64, 2] {
                for n in [4i64, 5, 7, 10, 14, 19] {
                    for r in 0..=2i64 {
                        for s in 0..=2i64 {
                            out.push(p_of(&[("v", variant), ("n", n), ("r", r), ("s", s)]));
                        }
                    }
                }
            }
            out
        }),
    });

    // B18: the four 5^j j theorems with s-parity branches.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B18",
            statement: "four sums C(n-r, 2j-s or 2j+1-s) 5^j j with 5^((s+-1)/2) Fibonacci/Lucas closed forms",
            param_schema: "v in 1..4 (1,2: s odd; 3,4: s even), n >= r >= s >= 0",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B18", (1..=4).contains(&variant), "v must be in 1..4")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            need("B18", s >= 0 && r >= s && n >= r, "requires n >= r >= s >= 0")?;
            if variant <= 2 {
                need("B18", s % 2 == 1, "s must be odd for this branch")
            } else {
                need("B18", s % 2 == 0, "s must be even for this branch")
            }
        }),
        oracle: Box::new(|p| {
            let variant = get_int(p, "v")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let odd_slice = variant == 2 || variant == 4;
            let val = esum(
                n - r,
                |j| if odd_slice { 2 * j + 1 - s } else { 2 * j - s },
                |j| rat_i64(j) * rat_pow(&rat_i64(5), j),
            );
            Ok(q5r(val))
        }),
        closed: Box::new(|p, _| {
            let variant = get_int(p, "v")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let nr = n - r;
            let base = rat_pow(&rat_i64(2), nr - 3);
            let val = match variant {
                1 => base * five_half(s + 1) * (rat_i64(nr) * lr(nr - 1) + rat_i64(2 * s) * fr(nr)),
                2 => {
                    base * five_half(s - 1)
                        * (rat_i64(5 * nr) * fr(nr - 1) + rat_i64(2 * (s - 1)) * lr(nr))
                }
                3 => base * five_half(s) * (rat_i64(5 * nr) * fr(nr - 1) + rat_i64(2 * s) * lr(nr)),
                _ => {
                    base * five_half(s)
                        * (rat_i64(nr) * lr(nr - 1) + rat_i64(2 * (s - 1)) * fr(nr))
                }
            };
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let mut out = Vec::new();
            for variant in 1..=4i64 {
                let ss: &[i64] = if variant <= 2 { &[1, 3] } else { &[0, 2] };
                for &s in ss {
                    for r in s..=(s + 2) {
                        for n in [r, r + 1, r + 3, r + 6, r + 10, 30.min(r + 20)] {
                            out.push(p_of(&[("v", variant), ("n", n), ("r", r), ("s", s)]));
                        }
                    }
                }
            }
            out
        }),
    });

    // B19: the squared-floor transform.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B19",
            statement: "sum C(n,j) floor(j/2)^2 b^(n-j) c^j = c^2 n(n-1)(b+c)^(n-2)/4 + ((b+c)^n - (b-c)^n)/8 - cn(b-c)^(n-1)/4",
            param_schema: "b rational, c rational nonzero, n >= 0",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let (_, c) = get_bc(p)?;
            need("B19", !c.is_zero(), "c must be nonzero")?;
            need("B19", get_int(p, "n")? >= 0, "n must be >= 0")
        }),
        oracle: Box::new(|p| {
            let (b, c) = get_bc(p)?;
            let n = get_int(p, "n")?;
            floor_binom_sum(
                &q5r(b),
                &q5r(c),
                n,
                &|j| {
                    let f = floor_half(j);
                    &f * &f
                },
                0,
                0,
            )
        }),
        closed: Box::new(|p, _| {
            let (b, c) = get_bc(p)?;
            let n = get_int(p, "n")?;
            let sum = &b + &c;
            let diff = &b - &c;
            let val = term0(&c * &c * rat_i64(n * (n - 1)) / rat_i64(4), &sum, n - 2)
                + (rpow0(&sum, n) - rpow0(&diff, n)) / rat_i64(8)
                - term0(&c * rat_i64(n) / rat_i64(4), &diff, n - 1);
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| grid_bcn(&[0, 1, 2, 3, 4, 5, 8, 13, 21, 34, 40])),
    });

    // B20: squared-floor Fibonacci/Lucas sums (sign placement as stated).
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B20",
            statement: "sum C(n,j) floor(j/2)^2 F/L_(j+m) with (-1)^m n/4 correction terms as stated",
            param_schema: "v in {1: F, 2: L}, m int, n >= 0",
            mode: Mode::Exact,
        },
        flagged: true,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B20", (1..=2).contains(&variant), "v must be 1 or 2")?;
            get_int(p, "m")?;
            need("B20", get_int(p, "n")? >= 0, "n must be >= 0")
        }),
        oracle: Box::new(|p| {
            let which = get_int(p, "v")?;
            let m = get_int(p, "m")?;
            let n = get_int(p, "n")?;
            Ok(q5r(bsum(n, |j| {
                let f = floor_half(j);
                &f * &f * fl(which, j + m)
            })))
        }),
        closed: Box::new(|p, _| {
            let which = get_int(p, "v")?;
            let m = get_int(p, "m")?;
            let n = get_int(p, "n")?;
            let val = if which == 1 {
                rat_i64(n * (n - 1)) / rat_i64(4) * fr(2 * n + m - 2)
                    + (fr(2 * n + m) + sgn(m) * fr(n - m)) / rat_i64(8)
                    - sgn(m) * rat_i64(n) / rat_i64(4) * fr(n - 2 - m)
            } else {
                rat_i64(n * (n - 1)) / rat_i64(4) * lr(2 * n + m - 2)
                    + (lr(2 * n + m) - sgn(m) * lr(n - m)) / rat_i64(8)
                    + sgn(m) * rat_i64(n) / rat_i64(4) * lr(n - 2 - m)
            };
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let g = grid_int("v", &[1, 2]);
            let g = extend_int(g, "m", &[-8, -5, -3, -1, 0, 1, 3, 5, 8]);
            extend_int(g, "n", &[0, 1, 2, 3, 4, 6, 9, 13, 20, 30])
        }),
    });

    // B21: b = +-c collapses of B19.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B21",
            statement: "sum C(n,j) floor(j/2)^2 = 2^(n-4)(n^2-n+2) (n>=2); alternating = 2^(n-3)(n-1) (n>=3)",
            param_schema: "v in {1, 2}, n >= 1",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B21", (1..=2).contains(&variant), "v must be 1 or 2")?;
            need("B21", get_int(p, "n")? >= 1, "n must be >= 1")
        }),
        oracle: Box::new(|p| {
            let variant = get_int(p, "v")?;
            let n = get_int(p, "n")?;
            Ok(q5r(bsum(n, |j| {
                let f = floor_half(j);
                let w = &f * &f;
                if variant == 2 {
                    sgn(j) * w
                } else {
                    w
                }
            })))
        }),
        closed: Box::new(|p, _| {
            let variant = get_int(p, "v")?;
            let n = get_int(p, "n")?;
            let val = if variant == 1 {
                match n {
                    1 => Rational::zero(),
                    _ => rat_pow(&rat_i64(2), n - 4) * rat_i64(n * n - n + 2),
                }
            } else {
                match n {
                    1 => Rational::zero(),
                    2 => rat_i64(1),
                    _ => rat_pow(&rat_i64(2), n - 3) * rat_i64(n - 1),
                }
            };
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| extend_int(grid_int("v", &[1, 2]), "n", &(1..=40).collect::<Vec<_>>())),
    });

    // B22: the doubly shifted squared-floor generalization.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B22",
            statement: "shifted sum C(n-r, j-s) b^(n-j-r+s) c^(j-s) floor(j/2)^2 in four-term closed form",
            param_schema: "b, c rational nonzero, n >= r >= s >= 0",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let (b, c) = get_bc(p)?;
            need("B22", !c.is_zero() && !b.is_zero(), "b, c must be nonzero")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            need("B22", s >= 0 && r >= s && n >= r, "requires n >= r >= s >= 0")
        }),
        oracle: Box::new(|p| {
            let (b, c) = get_bc(p)?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            floor_binom_sum(
                &q5r(b),
                &q5r(c),
                n,
                &|j| {
                    let f = floor_half(j);
                    &f * &f
                },
                r,
                s,
            )
        }),
        closed: Box::new(|p, _| {
            let (b, c) = get_bc(p)?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let nr = n - r;
            let sum = &b + &c;
            let diff = &b - &c;
            let val = term0(rat_i64((nr - 1) * nr) / rat_i64(4) * &c * &c, &sum, nr - 2)
                + term0(rat_i64(2 * s * nr) * &c / rat_i64(4), &sum, nr - 1)
                - term0(sgn(s) * rat_i64(nr) * &c / rat_i64(4), &diff, nr - 1)
                + rat_i64(2 * s * (s - 1) + 1) / rat_i64(8) * rpow0(&sum, nr)
                + sgn(s) * rat_i64(2 * s - 1) / rat_i64(8) * rpow0(&diff, nr);
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let mut out = Vec::new();
            for (b, c) in small_bc() {
                for n in [2i64, 3, 5, 8, 12] {
                    for r in 0..=2i64 {
                        for s in 0..=r {
                            if n < r {
                                continue;
                            }
                            let mut g = Params::new();
                            g.insert("b".into(), ParamValue::Rat(b.clone()));
                            g.insert("c".into(), ParamValue::Rat(c.clone()));
                            g.insert("n".into(), ParamValue::Int(n));
                            g.insert("r".into(), ParamValue::Int(r));
                            g.insert("s".into(), ParamValue::Int(s));
                            out.push(g);
                        }
                    }
                }
            }
            out
        }),
    });

    // B23: particular and special values of B22.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B23",
            statement: "squared-floor shifted sums at b = +-c, including the n >= 2s+2 special values",
            param_schema: "v in 1..4; v1: n-2>=r>=s; v2: n-2>r>=s; v3: n>=2s+2; v4: n>=2s+2, s>=1",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B23", (1..=4).contains(&variant), "v must be in 1..4")?;
            let n = get_int(p, "n")?;
            let s = get_int(p, "s")?;
            match variant {
                1 => {
                    let r = get_int(p, "r")?;
                    need("B23", s >= 0 && r >= s && n - 2 >= r, "requires n-2 >= r >= s >= 0")
                }
                2 => {
                    let r = get_int(p, "r")?;
                    need("B23", s >= 0 && r >= s && n - 2 > r, "requires n-2 > r >= s >= 0")
                }
                3 => need("B23", s >= 0 && n >= 2 * s + 2, "requires n >= 2s + 2"),
                _ => need("B23", s >= 1 && n >= 2 * s + 2, "requires s >= 1 and n >= 2s + 2"),
            }
        }),
        oracle: Box::new(|p| {
            let variant = get_int(p, "v")?;
            let n = get_int(p, "n")?;
            let s = get_int(p, "s")?;
            let (top, alt) = match variant {
                1 => (n - get_int(p, "r")?, false),
                2 => (n - get_int(p, "r")?, true),
                3 => (n - 2 * s, false),
                _ => (n - 2 * s + 1, true),
            };
            let mut acc = Rational::zero();
            for j in s..=(top + s) {
                let f = floor_half(j);
                let w = &f * &f * if alt { sgn(j) } else { Rational::one() };
                if !w.is_zero() {
                    acc += binom_rat(top, j - s) * w;
                }
            }
            Ok(q5r(acc))
        }),
        closed: Box::new(|p, _| {
            let variant = get_int(p, "v")?;
            let n = get_int(p, "n")?;
            let s = get_int(p, "s")?;
            let val = match variant {
                1 => {
                    let r = get_int(p, "r")?;
                    // 2^(n-r-4)((n+2s-r-1/2)^2 + 7/4 - 2s)
                    let u = rat_i64(n + 2 * s - r) - rat(1, 2);
                    rat_pow(&rat_i64(2), n - r - 4) * (&u * &u + rat(7, 4) - rat_i64(2 * s))
                }
                2 => {
                    let r = get_int(p, "r")?;
                    rat_pow(&rat_i64(2), n - r - 3) * rat_i64(n + 2 * s - r - 1)
                }
                3 => rat_pow(&rat_i64(2), n - 2 * s - 4) * rat_i64(n * n - n - 2 * s + 2),
                _ => rat_pow(&rat_i64(2), n - 2 * s - 2) * rat_i64(n),
            };
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let mut out = Vec::new();
            for variant in [1i64, 2] {
                for n in [4i64, 5, 7, 10, 14, 19] {
                    for r in 0..=2i64 {
                        for s in 0..=r {
                            out.push(p_of(&[("v", variant), ("n", n), ("r", r), ("s", s)]));
                        }
                    }
                }
            }
            for variant in [3i64, 4] {
                for s in 0..=3i64 {
                    for n in [2 * s + 2, 2 * s + 3, 2 * s + 6, 2 * s + 11] {
                        out.push(p_of(&[("v", variant), ("n", n), ("s", s)]));
                    }
                }
            }
            out
        }),
    });

    // B24: even/odd slices with weight j^2.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B24",
            statement: "sum C(n-r, 2j-s) j^2 and sum C(n-r, 2j-s+1) j^2 in 2^(n-r-5) closed forms",
            param_schema: "v in {1, 2}, n-2 > r >= s >= 0",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B24", (1..=2).contains(&variant), "v must be 1 or 2")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            need("B24", s >= 0 && r >= s && n - 2 > r, "requires n-2 > r >= s >= 0")
        }),
        oracle: Box::new(|p| {
            let variant = get_int(p, "v")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let val = esum(
                n - r,
                |j| if variant == 1 { 2 * j - s } else { 2 * j - s + 1 },
                |j| rat_i64(j * j),
            );
            Ok(q5r(val))
        }),
        closed: Box::new(|p, _| {
            let variant = get_int(p, "v")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let nr = n - r;
            let u = rat_i64(nr + 2 * s);
            let base = rat_pow(&rat_i64(2), nr - 5);
            let val = if variant == 1 {
                base * (&u * &u + rat_i64(nr))
            } else {
                base * (&u * &u - rat_i64(3 * nr) - rat_i64(8 * s) + rat_i64(4))
            };
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let mut out = Vec::new();
            for variant in [1i64, 2] {
                for n in [4i64, 5, 7, 10, 14, 19] {
                    for r in 0..=2i64 {
                        for s in 0..=r {
                            out.push(p_of(&[("v", variant), ("n", n), ("r", r), ("s", s)]));
                        }
                    }
                }
            }
            out
        }),
    });

    // B25: the four 5^j j^2 theorems.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B25",
            statement: "four sums C(n-r, 2j-s or 2j+1-s) 5^j j^2 with 2^(n-r-5) 5^(s/2-ish) closed forms",
            param_schema: "v in 1..4 (1,2: s odd; 3,4: s even), n >= r >= s >= 0",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B25", (1..=4).contains(&variant), "v must be in 1..4")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            need("B25", s >= 0 && r >= s && n >= r, "requires n >= r >= s >= 0")?;
            if variant <= 2 {
                need("B25", s % 2 == 1, "s must be odd for this branch")
            } else {
                need("B25", s % 2 == 0, "s must be even for this branch")
            }
        }),
        oracle: Box::new(|p| {
            let variant = get_int(p, "v")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let odd_slice = variant == 2 || variant == 4;
            let val = esum(
                n - r,
                |j| if odd_slice { 2 * j + 1 - s } else { 2 * j - s },
                |j| rat_i64(j * j) * rat_pow(&rat_i64(5), j),
            );
            Ok(q5r(val))
        }),
        closed: Box::new(|p, _| {
            let variant = get_int(p, "v")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let nr = n - r;
            let base = rat_pow(&rat_i64(2), nr - 5);
            let val = match variant {
                1 => {
                    base * five_half(s + 1)
                        * (rat_i64(5 * (nr - 1) * nr) * fr(nr - 2)
                            + rat_i64(2 * (2 * s + 1) * nr) * lr(nr - 1)
                            + rat_i64(4 * s * s) * fr(nr))
                }
                2 => {
                    base * five_half(s - 1)
                        * (rat_i64(5 * (nr - 1) * nr) * lr(nr - 2)
                            + rat_i64(10 * (2 * s - 1) * nr) * fr(nr - 1)
                            + rat_i64(4 * (s - 1) * (s - 1)) * lr(nr))
                }
                3 => {
                    base * five_half(s)
                        * (rat_i64(5 * (nr - 1) * nr) * lr(nr - 2)
                            + rat_i64(10 * (2 * s + 1) * nr) * fr(nr - 1)
                            + rat_i64(4 * s * s) * lr(nr))
                }
                _ => {
                    base * five_half(s)
                        * (rat_i64(5 * (nr - 1) * nr) * fr(nr - 2)
                            + rat_i64(2 * (2 * s - 1) * nr) * lr(nr - 1)
                            + rat_i64(4 * (s - 1) * (s - 1)) * fr(nr))
                }
            };
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let mut out = Vec::new();
            for variant in 1..=4i64 {
                let ss: &[i64] = if variant <= 2 { &[1, 3] } else { &[0, 2] };
                for &s in ss {
                    for r in s..=(s + 2) {
                        for n in [r, r + 1, r + 3, r + 6, r + 10, 30.min(r + 20)] {
                            out.push(p_of(&[("v", variant), ("n", n), ("r", r), ("s", s)]));
                        }
                    }
                }
            }
            out
        }),
    });

    // B26: the sign-floor transform in complex closed form.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B26",
            statement: "sum (-1)^floor(j/2) C(n,j) b^(n-j) c^j = (1-i)(b+ic)^n/2 + (1+i)(b-ic)^n/2, with polar variant",
            param_schema: "b, c rational nonzero, n >= 2, form in {1: complex, 2: polar}",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let (b, c) = get_bc(p)?;
            need("B26", !c.is_zero() && !b.is_zero(), "b, c must be nonzero")?;
            need("B26", get_int(p, "n")? >= 2, "n must be >= 2")?;
            let form = get_int(p, "form")?;
            need("B26", (1..=2).contains(&form), "form must be 1 or 2")
        }),
        oracle: Box::new(|p| {
            let (b, c) = get_bc(p)?;
            let n = get_int(p, "n")?;
            floor_binom_sum(
                &q5r(b),
                &q5r(c),
                n,
                &|j| sgn(floor_div(j, 2).unwrap()),
                0,
                0,
            )
        }),
        closed: Box::new(|p, prec| {
            let (b, c) = get_bc(p)?;
            let n = get_int(p, "n")?;
            if get_int(p, "form")? == 1 {
                Ok(Closed::Complex(sign_floor_complex(&b, &c, n, 0)))
            } else if b.is_positive() {
                Ok(Closed::Numeric(sign_floor_polar(&b, &c, n, 0, 0, prec)?))
            } else {
                Ok(Closed::PolicySkip(
                    "polar form with b < 0 is reported, not asserted (principal-branch policy)",
                ))
            }
        }),
        grid: Box::new(|| {
            let g = grid_bcn(&[2, 3, 4, 5, 8, 13, 21, 30]);
            extend_int(g, "form", &[1, 2])
        }),
    });

    // B27: the cos/sin corollary with exact complex duals.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B27",
            statement: "sum (-1)^floor(j/2) C(n,j) = 2^((n+1)/2) cos((n-1)pi/4); twisted version with sin",
            param_schema: "v in {1: cos, 2: sin}, n in [2, 64]",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B27", (1..=2).contains(&variant), "v must be 1 or 2")?;
            let n = get_int(p, "n")?;
            need("B27", (2..=64).contains(&n), "n must be in [2, 64]")
        }),
        oracle: Box::new(|p| {
            let variant = get_int(p, "v")?;
            let n = get_int(p, "n")?;
            let val = if variant == 1 {
                bsum(n, |j| sgn(floor_div(j, 2).unwrap()))
            } else {
                bsum(n, |j| -sgn(floor_div(3 * j, 2).unwrap()))
            };
            Ok(q5r(val))
        }),
        closed: Box::new(|p, prec| {
            let variant = get_int(p, "v")?;
            let n = get_int(p, "n")?;
            // exact complex route
            let one_plus = QSqrt5i::new(QSqrt5::one(), QSqrt5::one());
            let one_minus = one_plus.conj();
            let exact = if variant == 1 {
                &one_plus.pow(n - 1)? + &one_minus.pow(n - 1)?
            } else {
                -&(&one_plus.pow(n + 1)? + &one_minus.pow(n + 1)?)
                    .scale_q5(&QSqrt5::from_rational(rat(1, 2)))
            };
            // numeric route: 2^((n+1)/2) cos/sin((n-1)pi/4) must agree exactly
            // with the complex value; verify both here
            let amp = Interval::exact(rat_pow(&rat_i64(2), n + 1))
                .sqrt(prec + 16)
                .expect("positive");
            let angle = pi_iv(prec).scale(&(rat_i64(n - 1) / rat_i64(4)));
            let trig = if variant == 1 {
                cos_iv(&angle, prec)
            } else {
                sin_iv(&angle, prec)
            };
            let numeric = amp.mul(&trig);
            if !exact.is_real() {
                return Err(Error::domain("complex route produced a non-real value"));
            }
            let diff = numeric.sub(&exact.re.embed(prec));
            if diff.mid().abs() > diff.rad() + crate::rat::pow10_neg(30) {
                return Err(Error::domain("polar and complex routes disagree"));
            }
            Ok(Closed::Complex(exact))
        }),
        grid: Box::new(|| extend_int(grid_int("v", &[1, 2]), "n", &(2..=40).collect::<Vec<_>>())),
    });

    // B28: the doubly shifted sign-floor transform.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B28",
            statement: "shifted sum (-1)^floor(j/2) C(n-r, j-s) b^(n-j-r+s) c^(j-s) = (1-i)/2 i^s (b+ic)^(n-r) + conj, with polar variant",
            param_schema: "b, c rational nonzero, n >= r >= s >= 0, form in {1: complex, 2: polar}",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let (b, c) = get_bc(p)?;
            need("B28", !c.is_zero() && !b.is_zero(), "b, c must be nonzero")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            need("B28", s >= 0 && r >= s && n >= r, "requires n >= r >= s >= 0")?;
            let form = get_int(p, "form")?;
            need("B28", (1..=2).contains(&form), "form must be 1 or 2")
        }),
        oracle: Box::new(|p| {
            let (b, c) = get_bc(p)?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            floor_binom_sum(
                &q5r(b),
                &q5r(c),
                n,
                &|j| sgn(floor_div(j, 2).unwrap()),
                r,
                s,
            )
        }),
        closed: Box::new(|p, prec| {
            let (b, c) = get_bc(p)?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            if get_int(p, "form")? == 1 {
                Ok(Closed::Complex(sign_floor_complex(&b, &c, n - r, s)))
            } else if b.is_positive() {
                Ok(Closed::Numeric(sign_floor_polar(&b, &c, n, r, s, prec)?))
            } else {
                Ok(Closed::PolicySkip(
                    "polar form with b < 0 is reported, not asserted (principal-branch policy)",
                ))
            }
        }),
        grid: Box::new(|| {
            let mut out = Vec::new();
            for (b, c) in small_bc() {
                for n in [2i64, 3, 5, 8, 12] {
                    for r in 0..=2i64 {
                        for s in 0..=r {
                            for form in [1i64, 2] {
                                let mut g = Params::new();
                                g.insert("b".into(), ParamValue::Rat(b.clone()));
                                g.insert("c".into(), ParamValue::Rat(c.clone()));
                                g.insert("n".into(), ParamValue::Int(n));
                                g.insert("r".into(), ParamValue::Int(r));
                                g.insert("s".into(), ParamValue::Int(s));
                                g.insert("form".into(), ParamValue::Int(form));
                                out.push(g);
                            }
                        }
                    }
                }
            }
            out
        }),
    });

    // B29: even/odd real splits of the shifted sign-floor transform.
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B29",
            statement: "even/odd slices: sum C(n-r, 2j-s) b^.. c^.. = ((b+c)^(n-r) + (-1)^s (b-c)^(n-r))/2 and companion",
            param_schema: "v in {1, 2}, b, c rational nonzero, n >= r >= s >= 0",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B29", (1..=2).contains(&variant), "v must be 1 or 2")?;
            let (b, c) = get_bc(p)?;
            need("B29", !c.is_zero() && !b.is_zero(), "b, c must be nonzero")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            need("B29", s >= 0 && r >= s && n >= r, "requires n >= r >= s >= 0")
        }),
        oracle: Box::new(|p| {
            let variant = get_int(p, "v")?;
            let (b, c) = get_bc(p)?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let nr = n - r;
            let val = if variant == 1 {
                let mut acc = Rational::zero();
                let mut j = 0i64;
                while 2 * j - s <= nr {
                    let l = 2 * j - s;
                    if l >= 0 {
                        acc += binom_rat(nr, l) * rpow0(&b, nr - l) * rpow0(&c, l);
                    }
                    j += 1;
                }
                acc
            } else {
                let mut acc = Rational::zero();
                let mut j = 0i64;
                while 2 * j + 1 - s <= nr {
                    let l = 2 * j + 1 - s;
                    if l >= 0 {
                        acc += binom_rat(nr, l) * rpow0(&b, nr - l) * rpow0(&c, l);
                    }
                    j += 1;
                }
                acc
            };
            Ok(q5r(val))
        }),
        closed: Box::new(|p, _| {
            let variant = get_int(p, "v")?;
            let (b, c) = get_bc(p)?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let nr = n - r;
            let sum = rpow0(&(&b + &c), nr);
            let diff = rpow0(&(&b - &c), nr);
            let val = if variant == 1 {
                (sum + sgn(s) * diff) / rat_i64(2)
            } else {
                (sum - sgn(s) * diff) / rat_i64(2)
            };
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let mut out = Vec::new();
            for variant in [1i64, 2] {
                for (b, c) in small_bc() {
                    for n in [2i64, 3, 5, 8, 12] {
                        for r in 0..=2i64 {
                            for s in 0..=r {
                                let mut g = Params::new();
                                g.insert("v".into(), ParamValue::Int(variant));
                                g.insert("b".into(), ParamValue::Rat(b.clone()));
                                g.insert("c".into(), ParamValue::Rat(c.clone()));
                                g.insert("n".into(), ParamValue::Int(n));
                                g.insert("r".into(), ParamValue::Int(r));
                                g.insert("s".into(), ParamValue::Int(s));
                                out.push(g);
                            }
                        }
                    }
                }
            }
            out
        }),
    });

    // B30: the 5^j example of B29 at (b, c) = (1/2, sqrt5/2).
    v.push(BinomDef {
        meta: EntryMeta {
            id: "B30",
            statement: "sum C(n-r, 2j-s) 5^j = 2^(n-r-1) 5^((s+1)/2) F_(n-r); odd slice gives 5^((s-1)/2) L_(n-r)",
            param_schema: "v in {1, 2}, s odd >= 1, n >= r >= s",
            mode: Mode::Exact,
        },
        flagged: false,
        validate: Box::new(|p| {
            let variant = get_int(p, "v")?;
            need("B30", (1..=2).contains(&variant), "v must be 1 or 2")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            need("B30", s >= 1 && s % 2 == 1, "s must be odd and >= 1")?;
            need("B30", r >= s && n >= r, "requires n >= r >= s")
        }),
        oracle: Box::new(|p| {
            let variant = get_int(p, "v")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let val = esum(
                n - r,
                |j| if variant == 1 { 2 * j - s } else { 2 * j + 1 - s },
                |j| rat_pow(&rat_i64(5), j),
            );
            Ok(q5r(val))
        }),
        closed: Box::new(|p, _| {
            let variant = get_int(p, "v")?;
            let (n, r, s) = (get_int(p, "n")?, get_int(p, "r")?, get_int(p, "s")?);
            let nr = n - r;
            let base = rat_pow(&rat_i64(2), nr - 1);
            let val = if variant == 1 {
                base * five_half(s + 1) * fr(nr)
            } else {
                base * five_half(s - 1) * lr(nr)
            };
            Ok(Closed::Exact(q5r(val)))
        }),
        grid: Box::new(|| {
            let mut out = Vec::new();
            for variant in [1i64, 2] {
                for s in [1i64, 3] {
                    for r in s..=(s + 2) {
                        for n in [r, r + 1, r + 2, r + 5, r + 9, r + 15] {
                            out.push(p_of(&[("v", variant), ("n", n), ("r", r), ("s", s)]));
                        }
                    }
                }
            }
            out
        }),
    });

    v
}

/// Exact complex closed form (1-i)/2 i^s (b+ic)^nr + (1+i)/2 (-i)^s (b-ic)^nr.
fn sign_floor_complex(b: &Rational, c: &Rational, nr: i64, s: i64) -> QSqrt5i {
    let i = QSqrt5i::i();
    let half = QSqrt5::from_rational(rat(1, 2));
    let one = QSqrt5i::one();
    let b_ic = QSqrt5i::new(q5r(b.clone()), q5r(c.clone()));
    let b_mic = b_ic.conj();
    let lead_plus = (&one - &i).scale_q5(&half); // (1-i)/2
    let lead_minus = (&one + &i).scale_q5(&half); // (1+i)/2
    let i_s = i.pow(s).expect("i is invertible");
    let mi_s = i.conj().pow(s).expect("-i is invertible");
    &(&(&lead_plus * &i_s) * &b_ic.pow(nr).expect("n >= r"))
        + &(&(&lead_minus * &mi_s) * &b_mic.pow(nr).expect("n >= r"))
}

/// Polar form sgn(b) sqrt(2 (b^2+c^2)^(n-r)) cos((n-r) atan(c/b) + (2s-1)pi/4).
fn sign_floor_polar(
    b: &Rational,
    c: &Rational,
    n: i64,
    r: i64,
    s: i64,
    prec: u32,
) -> Result<Interval> {
    let nr = n - r;
    let b2c2 = b * b + c * c;
    let amp = Interval::exact(rat_i64(2) * rat_pow(&b2c2, nr))
        .sqrt(prec + 16)
        .ok_or_else(|| Error::domain("negative amplitude"))?;
    let atan = arctan_iv(&Interval::exact(c / b), prec);
    let angle = atan
        .scale(&rat_i64(nr))
        .add(&pi_iv(prec).scale(&(rat_i64(2 * s - 1) / rat_i64(4))));
    let cosv = cos_iv(&angle, prec);
    let signed = if b.is_positive() {
        amp.mul(&cosv)
    } else {
        amp.mul(&cosv).neg()
    };
    Ok(signed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pol(pairs: &[(&str, i64)]) -> Params {
        p_of(pairs)
    }

    #[test]
    fn b02_spot_values() {
        let policy = Policy::default();
        let v = verify("B02", &pol(&[("n", 10)]), &policy).unwrap();
        assert_eq!(v.status, Status::Confirmed);
        // 2^8 * 9 = 2304
        let o = oracle("B02", &pol(&[("n", 10)])).unwrap();
        assert_eq!(o, q5r(rat_i64(2304)));
    }

    #[test]
    fn b01_oracle_example() {
        // b=2, c=1, n=3, weight floor(j/2): direct sum = 7
        let mut p = pol(&[("n", 3)]);
        p.insert("b".into(), ParamValue::Int(2));
        p.insert("c".into(), ParamValue::Int(1));
        assert_eq!(oracle("B01", &p).unwrap(), q5r(rat_i64(7)));
        let v = verify("B01", &p, &Policy::default()).unwrap();
        assert_eq!(v.status, Status::Confirmed);
    }

    #[test]
    fn b21_collapse_value() {
        // n = 4: 2^0 (16-4+2) = 14
        let o = oracle("B21", &pol(&[("v", 1), ("n", 4)])).unwrap();
        assert_eq!(o, q5r(rat_i64(14)));
        let v = verify("B21", &pol(&[("v", 1), ("n", 4)]), &Policy::default()).unwrap();
        assert_eq!(v.status, Status::Confirmed);
    }

    #[test]
    fn b26_complex_example() {
        // b=1, c=2, n=2: oracle 1; complex closed form must be real and 1
        let mut p = pol(&[("n", 2), ("form", 1)]);
        p.insert("b".into(), ParamValue::Int(1));
        p.insert("c".into(), ParamValue::Int(2));
        assert_eq!(oracle("B26", &p).unwrap(), q5r(rat_i64(1)));
        let v = verify("B26", &p, &Policy::default()).unwrap();
        assert_eq!(v.status, Status::Confirmed, "{:?}", v.note);
        // polar with b < 0 is inconclusive by policy
        let mut pneg = pol(&[("n", 2), ("form", 2)]);
        pneg.insert("b".into(), ParamValue::Int(-1));
        pneg.insert("c".into(), ParamValue::Int(2));
        let v = verify("B26", &pneg, &Policy::default()).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
    }

    #[test]
    fn b27_zero_at_n3() {
        // 2^2 cos(pi/2) = 0
        let o = oracle("B27", &pol(&[("v", 1), ("n", 3)])).unwrap();
        assert!(o.is_zero());
        let v = verify("B27", &pol(&[("v", 1), ("n", 3)]), &Policy::default()).unwrap();
        assert_eq!(v.status, Status::Confirmed);
    }

    #[test]
    fn reductions_hold() {
        let policy = Policy::default();
        for (g, s) in [("B15", "B01"), ("B22", "B19"), ("B28", "B26"), ("B16", "B15"), ("B23", "B22")] {
            let v = reduction_check(g, s, &policy).unwrap();
            assert_eq!(v.status, Status::Confirmed, "{g}->{s}: {:?}", v.note);
        }
        assert!(reduction_check("B01", "B02", &policy).is_err());
    }
}
