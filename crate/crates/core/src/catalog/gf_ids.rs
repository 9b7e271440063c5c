//! The coefficientwise generating-function registry G01–G14.
//!
//! Each entry expands a closed rational GF (or evaluates a polynomial
//! identity) and compares exactly against a directly built sequence. A cell
//! is confirmed only when every compared coefficient matches.

use crate::catalog::util::*;
use crate::catalog::{EntryMeta, Mode};
use crate::error::{Error, Result};
use crate::exact::{QSqrt5, QSqrt5i};
use crate::gf::{
    binomial_transform_series, floor_transform_gf, floor_transform_seq, floor_transform_series,
    parity_identity_check, series_equal, Poly, RationalGF, SeriesCmp, TransformSign,
    TruncatedSeries,
};
use crate::rat::{rat_i64, to_decimal_string, Rational};
use crate::registry::{get_int, get_rat, Params, Policy, Status, ValueRepr, Verdict};
use crate::seq::{self, ceil_div, floor_div};
use num_traits::Zero;
use std::time::Instant;

const DEFAULT_ORDER: usize = 300;
const DEFAULT_ORDER_BINOM: usize = 120;

struct GfEntry {
    id: &'static str,
    statement: &'static str,
    param_schema: &'static str,
}

static ALL: &[GfEntry] = &[
    GfEntry {
        id: "G01",
        statement: "dual floor sequence GF: sum a_floor(n/k) z^n = (1-z^k)/(1-z) F(z^k), six base sequences",
        param_schema: "k>=1; optional order",
    },
    GfEntry {
        id: "G02",
        statement: "alternating dual floor sequence GF with (1+(-1)^(k+1) z^k)/(1+z) F((-1)^k z^k)",
        param_schema: "k>=1; optional order",
    },
    GfEntry {
        id: "G03",
        statement: "floor GF pair: sum floor(n/k) z^n and its alternating companion as rational functions",
        param_schema: "k>=1; optional order",
    },
    GfEntry {
        id: "G04",
        statement: "negative-denominator extension: shifted floor GFs for k <= -1",
        param_schema: "k>=1 (checked as -k); optional order",
    },
    GfEntry {
        id: "G05",
        statement: "ceiling GFs: sum ceil((n+1)/k) z^n and companions for both signs of k",
        param_schema: "k>=1; optional order",
    },
    GfEntry {
        id: "G06",
        statement: "squared floor GF: sum floor(n/k)^2 z^n = z^k(1+z^k)/((1-z)(1-z^k)^2)",
        param_schema: "k>=1; optional order",
    },
    GfEntry {
        id: "G07",
        statement: "alternating squared floor GF with (-1)^k z^k(1+(-1)^k z^k) numerator",
        param_schema: "k>=1; optional order",
    },
    GfEntry {
        id: "G08",
        statement: "binomial-transform GFs of floor(j/k) and floor(j/k)^2 against direct transform sums",
        param_schema: "k>=1, b rational, c rational nonzero; optional order",
    },
    GfEntry {
        id: "G09",
        statement: "k=2 squared-floor transform GF in factored (1-(b+c)z)^3 (1-(b-c)z)^2 form",
        param_schema: "b rational, c rational nonzero; optional order",
    },
    GfEntry {
        id: "G10",
        statement: "sign floor GF: sum (-1)^floor(n/k) z^n = (1-z^k)/((1-z)(1+z^k))",
        param_schema: "k>=1; optional order",
    },
    GfEntry {
        id: "G11",
        statement: "binomial-transform GF of (-1)^floor(j/k) against the direct transform sums",
        param_schema: "k>=1, b rational, c rational nonzero; optional order",
    },
    GfEntry {
        id: "G12",
        statement: "dual-floor Fibonacci/Lucas GFs via the floor transform of the base GFs",
        param_schema: "k>=1; optional order",
    },
    GfEntry {
        id: "G13",
        statement: "three weighted-convolution polynomial identities (third with corrected z prefactor)",
        param_schema: "n in [4,40]",
    },
    GfEntry {
        id: "G14",
        statement: "even/odd binomial slice polynomials h1, h2 and their x=1, x=i evaluations",
        param_schema: "n>=1, b rational, c rational nonzero",
    },
];

pub fn meta() -> Vec<EntryMeta> {
    ALL.iter()
        .map(|e| EntryMeta {
            id: e.id,
            statement: e.statement,
            param_schema: e.param_schema,
            mode: Mode::Exact,
        })
        .collect()
}

fn entry(id: &str) -> Result<&'static GfEntry> {
    ALL.iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

pub fn validate(id: &str, params: &Params) -> Result<()> {
    entry(id)?;
    match id {
        "G13" => {
            let n = get_int(params, "n")?;
            if !(4..=40).contains(&n) {
                return Err(Error::schema(id, "n must be in [4, 40]"));
            }
        }
        "G14" => {
            let n = get_int(params, "n")?;
            if n < 1 {
                return Err(Error::schema(id, "n must be >= 1"));
            }
            if get_rat(params, "c")?.is_zero() {
                return Err(Error::schema(id, "c must be nonzero"));
            }
            get_rat(params, "b")?;
        }
        "G08" | "G11" => {
            let k = get_int(params, "k")?;
            if k < 1 {
                return Err(Error::schema(id, "k must be >= 1"));
            }
            get_rat(params, "b")?;
            if get_rat(params, "c")?.is_zero() {
                return Err(Error::schema(id, "c must be nonzero"));
            }
        }
        "G09" => {
            get_rat(params, "b")?;
            if get_rat(params, "c")?.is_zero() {
                return Err(Error::schema(id, "c must be nonzero"));
            }
        }
        _ => {
            let k = get_int(params, "k")?;
            if k < 1 {
                return Err(Error::schema(id, "k must be >= 1"));
            }
        }
    }
    if let Ok(order) = get_int(params, "order") {
        if !(10..=2000).contains(&order) {
            return Err(Error::schema(id, "order must be in [10, 2000]"));
        }
    }
    Ok(())
}

fn bc_pairs() -> Vec<(Rational, Rational)> {
    vec![
        (rat_i64(1), rat_i64(1)),
        (rat_i64(1), rat_i64(-1)),
        (rat_i64(2), rat_i64(1)),
        (crate::rat::rat(1, 2), crate::rat::rat(3, 2)),
        (rat_i64(-1), rat_i64(2)),
        (crate::rat::rat(3, 5), crate::rat::rat(-1, 3)),
    ]
}

pub fn default_grid(id: &str) -> Result<Vec<Params>> {
    entry(id)?;
    Ok(match id {
        "G08" | "G11" => {
            let mut out = Vec::new();
            for k in [1i64, 2, 3, 4] {
                for (b, c) in &bc_pairs()[..4] {
                    let g = grid_int("k", &[k]);
                    let g = extend_rat(g, "b", std::slice::from_ref(b));
                    out.extend(extend_rat(g, "c", std::slice::from_ref(c)));
                }
            }
            out
        }
        "G09" => {
            let mut out = Vec::new();
            for (b, c) in &bc_pairs() {
                let g = extend_rat(vec![Params::new()], "b", std::slice::from_ref(b));
                out.extend(extend_rat(g, "c", std::slice::from_ref(c)));
            }
            out
        }
        "G13" => grid_int("n", &(4..=30).collect::<Vec<_>>()),
        "G14" => {
            let mut out = Vec::new();
            for n in [1i64, 2, 3, 5, 8, 12, 17] {
                for (b, c) in &bc_pairs()[..4] {
                    let g = grid_int("n", &[n]);
                    let g = extend_rat(g, "b", std::slice::from_ref(b));
                    out.extend(extend_rat(g, "c", std::slice::from_ref(c)));
                }
            }
            out
        }
        _ => grid_int("k", &[1, 2, 3, 4, 5, 6, 7, 8]),
    })
}

/// The six base sequences used by the fundamental transform checks, with
/// rational GFs where they exist.
#[allow(clippy::type_complexity)]
fn base_sequences() -> Vec<(&'static str, Box<dyn Fn(i64) -> QSqrt5>, Option<RationalGF>)> {
    vec![
        (
            "n",
            Box::new(QSqrt5::from_int),
            Some(RationalGF::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[1, -2, 1])).unwrap()),
        ),
        (
            "n^2",
            Box::new(|n| QSqrt5::from_int(n * n)),
            Some(
                RationalGF::new(Poly::from_ints(&[0, 1, 1]), Poly::from_ints(&[1, -3, 3, -1]))
                    .unwrap(),
            ),
        ),
        (
            "F_n",
            Box::new(fq),
            Some(RationalGF::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[1, -1, -1])).unwrap()),
        ),
        (
            "L_n",
            Box::new(lq),
            Some(
                RationalGF::new(Poly::from_ints(&[2, -1]), Poly::from_ints(&[1, -1, -1])).unwrap(),
            ),
        ),
        (
            "(-1)^n",
            Box::new(|n| QSqrt5::from_int(seq::sign_i64(n))),
            Some(RationalGF::new(Poly::one(), Poly::from_ints(&[1, 1])).unwrap()),
        ),
        (
            "H_n/(n+1)^2",
            Box::new(|n| q5r(seq::harmonic(n) / (rat_i64(n + 1) * rat_i64(n + 1)))),
            None,
        ),
    ]
}

fn order_of(params: &Params, default: usize) -> usize {
    get_int(params, "order")
        .map(|o| o as usize)
        .unwrap_or(default)
}

/// Run the checks for one cell, returning (compared order, mismatches).
#[allow(clippy::too_many_lines)]
fn run_checks(id: &str, params: &Params) -> Result<(usize, Vec<String>)> {
    let mut mismatches = Vec::new();
    let order = order_of(
        params,
        if matches!(id, "G08" | "G09" | "G11") {
            DEFAULT_ORDER_BINOM
        } else {
            DEFAULT_ORDER
        },
    );

    let mut cmp = |label: String, a: &TruncatedSeries, b: &TruncatedSeries| {
        match series_equal(a, b) {
            Ok(SeriesCmp::Equal) => {}
            Ok(SeriesCmp::MismatchAt(n)) => mismatches.push(format!("{label}: mismatch at n={n}")),
            Err(e) => mismatches.push(format!("{label}: {e}")),
        }
    };

    match id {
        "G01" | "G02" => {
            let k = get_int(params, "k")?;
            let sign = if id == "G01" {
                TransformSign::Plus
            } else {
                TransformSign::Minus
            };
            for (name, a, gf) in base_sequences() {
                let direct = TruncatedSeries::from_fn(order, |n| {
                    let v = a(floor_div(n, k).unwrap());
                    if id == "G02" && n % 2 == 1 {
                        -v
                    } else {
                        v
                    }
                });
                let base = TruncatedSeries::from_fn(order, &*a);
                let via_series = floor_transform_series(&base, k, sign, order);
                cmp(format!("{name} (series route)"), &via_series, &direct);
                if let Some(f) = gf {
                    let t = floor_transform_gf(&f, k, sign);
                    cmp(format!("{name} (gf route)"), &t.expand(order), &direct);
                }
            }
        }
        "G03" => {
            let k = get_int(params, "k")?;
            let ku = k as usize;
            // z^k / ((1-z)(1-z^k))
            let gf_plus = RationalGF::new(
                Poly::monomial(QSqrt5::one(), ku),
                Poly::from_ints(&[1, -1]).mul(&one_minus_zk(ku)),
            )?;
            let direct_plus =
                TruncatedSeries::from_fn(order, |n| QSqrt5::from_int(floor_div(n, k).unwrap()));
            cmp("plain".into(), &gf_plus.expand(order), &direct_plus);
            // (-1)^k z^k / ((1+z)(1+(-1)^(k+1) z^k))
            let gf_minus = RationalGF::new(
                Poly::monomial(QSqrt5::from_int(seq::sign_i64(k)), ku),
                Poly::from_ints(&[1, 1]).mul(&one_plus_signed_zk(ku)),
            )?;
            let direct_minus = TruncatedSeries::from_fn(order, |n| {
                QSqrt5::from_int(seq::sign_i64(n) * floor_div(n, k).unwrap())
            });
            cmp("alternating".into(), &gf_minus.expand(order), &direct_minus);
        }
        "G04" => {
            // floor((n+1)/k') for k' = -k, via the cleared rational forms
            let k = get_int(params, "k")?;
            let ku = k as usize;
            // plain: -1/((1-z)(1-z^k))
            let gf_plus = RationalGF::new(
                Poly::constant(QSqrt5::from_int(-1)),
                Poly::from_ints(&[1, -1]).mul(&one_minus_zk(ku)),
            )?;
            let direct_plus = TruncatedSeries::from_fn(order, |n| {
                QSqrt5::from_int(floor_div(n + 1, -k).unwrap())
            });
            cmp("plain".into(), &gf_plus.expand(order), &direct_plus);
            // alternating: (-1)^k / ((1+z)(z^k - (-1)^k))
            let mut tail = vec![0i64; ku + 1];
            tail[0] = -seq::sign_i64(k);
            tail[ku] = 1;
            let gf_minus = RationalGF::new(
                Poly::constant(QSqrt5::from_int(seq::sign_i64(k))),
                Poly::from_ints(&[1, 1]).mul(&Poly::from_ints(&tail)),
            )?;
            let direct_minus = TruncatedSeries::from_fn(order, |n| {
                QSqrt5::from_int(seq::sign_i64(n) * floor_div(n + 1, -k).unwrap())
            });
            cmp("alternating".into(), &gf_minus.expand(order), &direct_minus);
        }
        "G05" => {
            let k = get_int(params, "k")?;
            let ku = k as usize;
            // ceil((n+1)/k): 1/((1-z)(1-z^k))
            let gf_pos = RationalGF::new(
                Poly::one(),
                Poly::from_ints(&[1, -1]).mul(&one_minus_zk(ku)),
            )?;
            let direct_pos =
                TruncatedSeries::from_fn(order, |n| QSqrt5::from_int(ceil_div(n + 1, k).unwrap()));
            cmp("positive k".into(), &gf_pos.expand(order), &direct_pos);
            // ceil(n/k') for k' = -k: cleared form -z^k/((1-z)(1-z^k))
            let gf_neg = RationalGF::new(
                Poly::monomial(QSqrt5::from_int(-1), ku),
                Poly::from_ints(&[1, -1]).mul(&one_minus_zk(ku)),
            )?;
            let direct_neg =
                TruncatedSeries::from_fn(order, |n| QSqrt5::from_int(ceil_div(n, -k).unwrap()));
            cmp("negative k".into(), &gf_neg.expand(order), &direct_neg);
            // alternating, positive k: 1/((1+z)(1-(-1)^k z^k))
            let mut tail = vec![0i64; ku + 1];
            tail[0] = 1;
            tail[ku] = -seq::sign_i64(k);
            let gf_alt_pos = RationalGF::new(
                Poly::one(),
                Poly::from_ints(&[1, 1]).mul(&Poly::from_ints(&tail)),
            )?;
            let direct_alt_pos = TruncatedSeries::from_fn(order, |n| {
                QSqrt5::from_int(seq::sign_i64(n) * ceil_div(n + 1, k).unwrap())
            });
            cmp(
                "alternating positive k".into(),
                &gf_alt_pos.expand(order),
                &direct_alt_pos,
            );
            // alternating, negative k: cleared z^k/((1+z)(z^k - (-1)^k))
            let mut tail_neg = vec![0i64; ku + 1];
            tail_neg[0] = -seq::sign_i64(k);
            tail_neg[ku] = 1;
            let gf_alt_neg = RationalGF::new(
                Poly::monomial(QSqrt5::one(), ku),
                Poly::from_ints(&[1, 1]).mul(&Poly::from_ints(&tail_neg)),
            )?;
            let direct_alt_neg = TruncatedSeries::from_fn(order, |n| {
                QSqrt5::from_int(seq::sign_i64(n) * ceil_div(n, -k).unwrap())
            });
            cmp(
                "alternating negative k".into(),
                &gf_alt_neg.expand(order),
                &direct_alt_neg,
            );
        }
        "G06" => {
            let k = get_int(params, "k")?;
            let ku = k as usize;
            let num = Poly::monomial(QSqrt5::one(), ku).mul(&one_plus_zk(ku));
            let den = Poly::from_ints(&[1, -1]).mul(&one_minus_zk(ku).pow(2));
            let gf = RationalGF::new(num, den)?;
            let direct = TruncatedSeries::from_fn(order, |n| {
                let f = floor_div(n, k).unwrap();
                QSqrt5::from_int(f * f)
            });
            cmp("closed form".into(), &gf.expand(order), &direct);
            // second route: floor transform of F(z) = z(1+z)/(1-z)^3
            let base =
                RationalGF::new(Poly::from_ints(&[0, 1, 1]), Poly::from_ints(&[1, -3, 3, -1]))?;
            let t = floor_transform_gf(&base, k, TransformSign::Plus);
            cmp("transform route".into(), &t.expand(order), &direct);
        }
        "G07" => {
            let k = get_int(params, "k")?;
            let ku = k as usize;
            let sgn_k = seq::sign_i64(k);
            let mut plus_part = vec![0i64; ku + 1];
            plus_part[0] = 1;
            plus_part[ku] = sgn_k;
            let num =
                Poly::monomial(QSqrt5::from_int(sgn_k), ku).mul(&Poly::from_ints(&plus_part));
            let den = Poly::from_ints(&[1, 1]).mul(&one_plus_signed_zk(ku).pow(2));
            let gf = RationalGF::new(num, den)?;
            let direct = TruncatedSeries::from_fn(order, |n| {
                let f = floor_div(n, k).unwrap();
                QSqrt5::from_int(seq::sign_i64(n) * f * f)
            });
            cmp("closed form".into(), &gf.expand(order), &direct);
        }
        "G08" => {
            let k = get_int(params, "k")?;
            let b = q5r(get_rat(params, "b")?);
            let c = q5r(get_rat(params, "c")?);
            let ku = k as usize;
            let cz = Poly(vec![QSqrt5::zero(), c.clone()]);
            let bz1 = Poly(vec![QSqrt5::one(), -&b]); // 1 - bz
            let lin = Poly(vec![QSqrt5::one(), -&(&b + &c)]); // 1 - (b+c)z
            let czk = cz.pow(ku as u32);
            let bzk = bz1.pow(ku as u32);
            // S*(z,k) = (cz)^k / ((1-(b+c)z)((1-bz)^k - (cz)^k))
            let s_star = RationalGF::new(czk.clone(), lin.mul(&bzk.sub(&czk)))?;
            let direct_floor = binomial_transform_series(
                &|j| QSqrt5::from_int(floor_div(j, k).unwrap()),
                &b,
                &c,
                order,
            );
            cmp("floor weight".into(), &s_star.expand(order), &direct_floor);
            // S_u*(z,k) = (cz)^k ((1-bz)^k + (cz)^k) /
            //   ((1-(b+c)z)((1-bz)^k - (cz)^k)^2)
            let s_u = RationalGF::new(czk.mul(&bzk.add(&czk)), lin.mul(&bzk.sub(&czk).pow(2)))?;
            let direct_sq = binomial_transform_series(
                &|j| {
                    let f = floor_div(j, k).unwrap();
                    QSqrt5::from_int(f * f)
                },
                &b,
                &c,
                order,
            );
            cmp("squared weight".into(), &s_u.expand(order), &direct_sq);
        }
        "G09" => {
            let b = q5r(get_rat(params, "b")?);
            let c = q5r(get_rat(params, "c")?);
            let cz = Poly(vec![QSqrt5::zero(), c.clone()]);
            let bz1 = Poly(vec![QSqrt5::one(), -&b]);
            let czk = cz.pow(2);
            let bzk = bz1.pow(2);
            let lin_sum = Poly(vec![QSqrt5::one(), -&(&b + &c)]);
            let lin_diff = Poly(vec![QSqrt5::one(), -&(&b - &c)]);
            let gf = RationalGF::new(
                czk.mul(&bzk.add(&czk)),
                lin_sum.pow(3).mul(&lin_diff.pow(2)),
            )?;
            let direct = binomial_transform_series(
                &|j| {
                    let f = floor_div(j, 2).unwrap();
                    QSqrt5::from_int(f * f)
                },
                &b,
                &c,
                order,
            );
            cmp("factored form".into(), &gf.expand(order), &direct);
        }
        "G10" => {
            let k = get_int(params, "k")?;
            let ku = k as usize;
            let gf = RationalGF::new(
                one_minus_zk(ku),
                Poly::from_ints(&[1, -1]).mul(&one_plus_zk(ku)),
            )?;
            let direct = TruncatedSeries::from_fn(order, |n| {
                QSqrt5::from_int(seq::sign_i64(floor_div(n, k).unwrap()))
            });
            cmp("closed form".into(), &gf.expand(order), &direct);
            // parity residual for even k must vanish identically
            if k % 2 == 0 {
                let residual =
                    parity_identity_check(&|j| QSqrt5::from_int(seq::sign_i64(j)), k, order)?;
                if let Some(nz) = residual.coeffs.iter().position(|x| !x.is_zero()) {
                    mismatches.push(format!("parity residual nonzero at n={nz}"));
                }
            }
        }
        "G11" => {
            let k = get_int(params, "k")?;
            let b = q5r(get_rat(params, "b")?);
            let c = q5r(get_rat(params, "c")?);
            let ku = k as usize;
            let cz = Poly(vec![QSqrt5::zero(), c.clone()]);
            let bz1 = Poly(vec![QSqrt5::one(), -&b]);
            let czk = cz.pow(ku as u32);
            let bzk = bz1.pow(ku as u32);
            let lin = Poly(vec![QSqrt5::one(), -&(&b + &c)]);
            // S_v*(z,k) = ((1-bz)^k - (cz)^k) / ((1-(b+c)z)((1-bz)^k + (cz)^k))
            let gf = RationalGF::new(bzk.sub(&czk), lin.mul(&bzk.add(&czk)))?;
            let direct = binomial_transform_series(
                &|j| QSqrt5::from_int(seq::sign_i64(floor_div(j, k).unwrap())),
                &b,
                &c,
                order,
            );
            cmp("sign weight".into(), &gf.expand(order), &direct);
        }
        "G12" => {
            let k = get_int(params, "k")?;
            let (gf_f, gf_l) = crate::catalog::series::dual_floor_gfs(k)?;
            let fib_gf = RationalGF::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[1, -1, -1]))?;
            let lucas_gf =
                RationalGF::new(Poly::from_ints(&[2, -1]), Poly::from_ints(&[1, -1, -1]))?;
            let tf = floor_transform_gf(&fib_gf, k, TransformSign::Plus);
            let tl = floor_transform_gf(&lucas_gf, k, TransformSign::Plus);
            cmp(
                "F transform vs closed".into(),
                &tf.expand(order),
                &gf_f.expand(order),
            );
            cmp(
                "L transform vs closed".into(),
                &tl.expand(order),
                &gf_l.expand(order),
            );
            let direct_f = floor_transform_seq(&fq, k, order);
            let direct_l = floor_transform_seq(&lq, k, order);
            cmp("F closed vs direct".into(), &gf_f.expand(order), &direct_f);
            cmp("L closed vs direct".into(), &gf_l.expand(order), &direct_l);
        }
        "G13" => {
            let n = get_int(params, "n")?;
            for (label, weight, rhs, clear_power) in convolution_cases(n) {
                let mut direct = Poly::zero();
                for j in 0..=(n - 4) {
                    direct = direct.add(&Poly::monomial(QSqrt5::from_int(weight(j)), j as usize));
                }
                let lhs = direct
                    .mul(&Poly::from_ints(&[-1, 1]).pow(4)) // (z-1)^4
                    .mul(&Poly::monomial(QSqrt5::one(), clear_power));
                if lhs != rhs {
                    mismatches.push(format!("{label}: polynomial mismatch"));
                }
            }
        }
        "G14" => {
            let n = get_int(params, "n")?;
            let b = q5r(get_rat(params, "b")?);
            let c = q5r(get_rat(params, "c")?);
            // h1(x) = sum_j C(n,2j) b^(n-2j) c^2j x^2j = ((b+cx)^n + (b-cx)^n)/2
            // h2(x) = sum_j C(n,2j-1) b^(n-2j+1) c^(2j-1) x^(2j-2)
            //       = ((b+cx)^n - (b-cx)^n)/(2x)
            let bp = Poly(vec![b.clone(), c.clone()]);
            let bm = Poly(vec![b.clone(), -&c]);
            let half = q5r(crate::rat::rat(1, 2));
            let plus_n = bp.pow(n as u32);
            let minus_n = bm.pow(n as u32);
            let h1_closed = plus_n.add(&minus_n).scale(&half);
            let diff = plus_n.sub(&minus_n);
            let mut h2_coeffs = diff.0.clone();
            if !h2_coeffs.is_empty() {
                if !h2_coeffs[0].is_zero() {
                    mismatches.push("h2: difference has a constant term".into());
                }
                h2_coeffs.remove(0);
            }
            let h2_closed = Poly(h2_coeffs).scale(&half);
            let mut h1_direct = Poly::zero();
            let mut h2_direct = Poly::zero();
            for j in 0..=(n / 2 + 1) {
                if 2 * j <= n {
                    let coeff = q5pow0(&b, n - 2 * j).scale(&seq::binom_rat(n, 2 * j))
                        * q5pow0(&c, 2 * j);
                    h1_direct = h1_direct.add(&Poly::monomial(coeff, (2 * j) as usize));
                }
                if 2 * j + 1 <= n {
                    let coeff = q5pow0(&b, n - 2 * j - 1).scale(&seq::binom_rat(n, 2 * j + 1))
                        * q5pow0(&c, 2 * j + 1);
                    h2_direct = h2_direct.add(&Poly::monomial(coeff, (2 * j) as usize));
                }
            }
            if h1_closed != h1_direct {
                mismatches.push("h1: polynomial mismatch".into());
            }
            if h2_closed != h2_direct {
                mismatches.push("h2: polynomial mismatch".into());
            }
            // derivative route at x = 1 reproduces the floor-weight sum
            let d1 = h1_direct.derivative();
            let d2 = h2_direct.derivative();
            let one = QSqrt5::one();
            let lhs_deriv = &d1.eval(&one) + &d2.eval(&one);
            let mut floor_sum = QSqrt5::zero();
            for j in 1..=n {
                let w = seq::binom_rat(n, j) * rat_i64(floor_div(j, 2).unwrap());
                floor_sum = &floor_sum + &(q5pow0(&b, n - j) * q5pow0(&c, j)).scale(&w);
            }
            if lhs_deriv != floor_sum.scale(&rat_i64(2)) {
                mismatches.push("x=1 derivative route disagrees with the floor-weight sum".into());
            }
            // x = i evaluation reproduces the sign-floor sum
            let i = QSqrt5i::i();
            let lhs_i = &eval_poly_complex(&h1_direct, &i) + &eval_poly_complex(&h2_direct, &i);
            let mut sign_sum = QSqrt5::zero();
            for j in 0..=n {
                let w = seq::binom_rat(n, j) * sgn(floor_div(j, 2).unwrap());
                sign_sum = &sign_sum + &(q5pow0(&b, n - j) * q5pow0(&c, j)).scale(&w);
            }
            if lhs_i != QSqrt5i::from_real(sign_sum) {
                mismatches.push("x=i route disagrees with the sign-floor sum".into());
            }
        }
        _ => return Err(Error::UnknownId(id.to_string())),
    }

    Ok((order + 1, mismatches))
}

fn eval_poly_complex(p: &Poly, x: &QSqrt5i) -> QSqrt5i {
    let mut acc = QSqrt5i::zero();
    for c in p.0.iter().rev() {
        acc = &(&acc * x) + &QSqrt5i::from_real(c.clone());
    }
    acc
}

/// The three weighted-convolution identities from the squared-floor transform
/// proof, as (label, weight, cleared RHS polynomial, z-clearing power). The
/// third one needs prefactor 1/((z-1)^4 z), not the printed 1/((z-1)^4 z^3):
/// the stated form is off by z^2 for every n.
#[allow(clippy::type_complexity)]
fn convolution_cases(n: i64) -> Vec<(&'static str, Box<dyn Fn(i64) -> i64>, Poly, usize)> {
    let term = |c: i64, p: i64| -> Poly {
        if p < 0 {
            Poly::zero()
        } else {
            Poly::monomial(QSqrt5::from_int(c), p as usize)
        }
    };
    let rhs1 = term(n * n + 3 * n + 2, 5)
        .sub(&term(2 * n * n + 2 * n - 4, 4))
        .add(&term(n * n - n, 3))
        .sub(&term(6 * n - 12, n))
        .add(&term(22 * n - 46, n + 1))
        .sub(&term(28 * n - 64, n + 2))
        .add(&term(12 * n - 36, n + 3));
    let rhs2 = term(n * n + n, 5)
        .sub(&term(2 * n * n - 2 * n - 4, 4))
        .add(&term(n * n - 3 * n + 2, 3))
        .sub(&term(2 * n - 4, n))
        .add(&term(8 * n - 16, n + 1))
        .sub(&term(12 * n - 24, n + 2))
        .add(&term(6 * n - 18, n + 3));
    let rhs3 = term(n * n - 5 * n + 6, 1)
        .sub(&term(2 * n * n - 6 * n, 2))
        .add(&term(n * n - n, 3))
        .sub(&term(2 * n, n))
        .add(&term(2 * n - 6, n + 1));
    let n1 = n;
    let n2 = n;
    let n3 = n;
    vec![
        (
            "first",
            Box::new(move |j: i64| (j + 1) * (n1 - j) * (n1 - 1 - j)) as Box<dyn Fn(i64) -> i64>,
            rhs1,
            3,
        ),
        (
            "second",
            Box::new(move |j: i64| (j + 1) * (n2 - 1 - j) * (n2 - 2 - j)),
            rhs2,
            3,
        ),
        (
            "third",
            Box::new(move |j: i64| (j + 1) * (n3 - 2 - j) * (n3 - 3 - j)),
            rhs3,
            1,
        ),
    ]
}

pub fn verify(id: &str, params: &Params, _policy: &Policy) -> Result<Verdict> {
    let t0 = Instant::now();
    validate(id, params)?;
    let (order_used, mismatches) = run_checks(id, params)?;
    let status = if mismatches.is_empty() {
        Status::Confirmed
    } else {
        Status::Refuted
    };
    Ok(Verdict {
        id: id.to_string(),
        params: params.clone(),
        status,
        lhs: ValueRepr::empty(),
        rhs: ValueRepr::empty(),
        gap: to_decimal_string(&rat_i64(mismatches.len() as i64), 3),
        terms_used: order_used as u64,
        wall_time: t0.elapsed(),
        note: if mismatches.is_empty() {
            None
        } else {
            Some(mismatches.join("; "))
        },
    })
}

// small polynomial builders --------------------------------------------------

fn one_minus_zk(k: usize) -> Poly {
    let mut v = vec![0i64; k + 1];
    v[0] = 1;
    v[k] = -1;
    Poly::from_ints(&v)
}

fn one_plus_zk(k: usize) -> Poly {
    let mut v = vec![0i64; k + 1];
    v[0] = 1;
    v[k] = 1;
    Poly::from_ints(&v)
}

/// 1 + (-1)^(k+1) z^k.
fn one_plus_signed_zk(k: usize) -> Poly {
    let mut v = vec![0i64; k + 1];
    v[0] = 1;
    v[k] = if k % 2 == 0 { -1 } else { 1 };
    Poly::from_ints(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::{p_int, ParamValue};

    #[test]
    fn g01_g02_small_orders() {
        let policy = Policy::default();
        for id in ["G01", "G02"] {
            for k in 1..=4 {
                let params = p_int(&[("k", k), ("order", 80)]);
                let v = verify(id, &params, &policy).unwrap();
                assert_eq!(v.status, Status::Confirmed, "{id} k={k}: {:?}", v.note);
            }
        }
    }

    #[test]
    fn g13_convolutions_including_corrected_third() {
        let policy = Policy::default();
        for n in 4..=12 {
            let v = verify("G13", &p_int(&[("n", n)]), &policy).unwrap();
            assert_eq!(v.status, Status::Confirmed, "n={n}: {:?}", v.note);
        }
    }

    #[test]
    fn g14_h_polynomials() {
        let policy = Policy::default();
        let mut params = p_int(&[("n", 7)]);
        params.insert("b".into(), ParamValue::Int(2));
        params.insert("c".into(), ParamValue::Int(1));
        let v = verify("G14", &params, &policy).unwrap();
        assert_eq!(v.status, Status::Confirmed, "{:?}", v.note);
    }

    #[test]
    fn schema_rejections() {
        let policy = Policy::default();
        assert!(verify("G01", &p_int(&[("k", 0)]), &policy).is_err());
        assert!(verify("G13", &p_int(&[("n", 3)]), &policy).is_err());
        assert!(verify("G99", &p_int(&[("k", 1)]), &policy).is_err());
    }
}
