//! Arbitrary-precision rational numbers and shared helpers.
//!
//! The representation is `num_rational::BigRational`, which maintains the
//! invariants the exact layer relies on: always reduced, positive
//! denominator, canonical zero `0/1`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat_i64(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_zero() -> Rational {
    Rational::zero()
}

pub fn rat_one() -> Rational {
    Rational::one()
}

/// 2^e as an exact rational, e may be negative.
pub fn pow2(e: i64) -> Rational {
    let one = BigInt::one();
    if e >= 0 {
        Rational::from_integer(one << (e as usize))
    } else {
        Rational::new(one.clone(), one << ((-e) as usize))
    }
}

/// b^e as an exact rational for a rational base, e may be negative (b ≠ 0).
pub fn rat_pow(b: &Rational, e: i64) -> Rational {
    if e >= 0 {
        b.pow(e as i32)
    } else {
        b.pow(-(e as i32)).recip()
    }
}

/// 10^-d as an exact rational.
pub fn pow10_neg(d: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(d))
}

/// Parse "p/q", "p", or a decimal like "-1.25" into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let i: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().ok()?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let f: BigInt = frac.parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let abs = Rational::from_integer(i.abs()) + Rational::new(f, scale);
        return Some(if neg { -abs } else { abs });
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(n))
}

/// Render a rational as a decimal string with the given number of significant
/// digits, in scientific notation. Exact and deterministic (round-half-away).
pub fn to_decimal_string(x: &Rational, sig_digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let a = x.abs();
    // decimal exponent: largest e with 10^e <= a
    let mut e: i64 = 0;
    let ten = Rational::from_integer(BigInt::from(10));
    let one = Rational::one();
    let mut v = a.clone();
    if v >= one {
        while v >= ten {
            v /= ten.clone();
            e += 1;
        }
    } else {
        while v < one {
            v *= ten.clone();
            e -= 1;
        }
    }
    // digits = round(a * 10^(sig-1-e))
    let shift = sig_digits as i64 - 1 - e;
    let scaled = a * rat_pow(&ten, shift);
    let twice = &scaled + &scaled;
    let num = twice.numer() + twice.denom(); // 2x + 1
    let mut digits = (num / (twice.denom() * BigInt::from(2))).to_string();
    // rounding may carry to one extra digit (e.g. 999.96 -> 1000)
    if digits.len() as u32 > sig_digits {
        digits.truncate(sig_digits as usize);
        e += 1;
    }
    let mantissa = if digits.len() > 1 {
        format!("{}.{}", &digits[..1], &digits[1..])
    } else {
        digits
    };
    let sign = if neg { "-" } else { "" };
    format!("{sign}{mantissa}e{e}")
}

/// Lossless "p/q" rendering (always includes the denominator).
pub fn to_fraction_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// floor(x) as a BigInt.
pub fn rat_floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Number of bits in |n| (0 for 0).
pub fn bit_len(n: &BigInt) -> u64 {
    if n.is_zero() {
        0
    } else {
        n.bits()
    }
}

/// Round x to the dyadic grid 2^-w (toward -inf); |x - round(x)| < 2^-w.
pub fn dyadic_floor(x: &Rational, w: u32) -> Rational {
    let scaled_num = x.numer() << (w as usize);
    let q = scaled_num.div_floor(x.denom());
    Rational::new(q, BigInt::one() << (w as usize))
}

/// Smallest dyadic with about `bits` significant bits that is >= x (x >= 0).
/// Bound arithmetic rounds up through this to keep numbers small.
pub fn dyadic_ceil_sig(x: &Rational, bits: u32) -> Rational {
    if x.is_zero() {
        return Rational::zero();
    }
    debug_assert!(x.is_positive());
    let e = bit_len(x.numer()) as i64 - bit_len(x.denom()) as i64;
    let shift = bits as i64 + 1 - e;
    if shift >= 0 {
        let scaled = div_ceil_big(&(x.numer() << shift as usize), x.denom());
        Rational::new(scaled, BigInt::one() << shift as usize)
    } else {
        let scaled = div_ceil_big(x.numer(), &(x.denom() << (-shift) as usize));
        Rational::from_integer(scaled << (-shift) as usize)
    }
}

fn div_ceil_big(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if r.is_zero() {
        q
    } else {
        q + BigInt::one()
    }
}

/// Upper bound on r^e for r >= 0, at bounded working precision.
pub fn pow_upper(r: &Rational, e: u64, bits: u32) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let mut base = dyadic_ceil_sig(r, bits);
    let mut acc = Rational::one();
    let mut e = e;
    loop {
        if e & 1 == 1 {
            acc = dyadic_ceil_sig(&(&acc * &base), bits);
        }
        e >>= 1;
        if e == 0 {
            return acc;
        }
        base = dyadic_ceil_sig(&(&base * &base), bits);
    }
}

/// lcm accumulation tuned for small or repeated divisors: avoids full
/// big-by-big gcd whenever the divisor fits a machine word or already
/// divides the accumulator.
pub fn lcm_update(l: &mut BigInt, d: &BigInt) {
    use num_integer::Integer as _;
    if d.is_one() {
        return;
    }
    if let Some(ds) = d.to_u64() {
        let r = (&*l % d).to_u64().unwrap_or(0);
        let g = gcd_u64(r, ds);
        if g != ds {
            *l = &*l * BigInt::from(ds / g);
        }
        return;
    }
    if (&*l % d).is_zero() {
        return;
    }
    let g = l.gcd(d);
    *l = &*l * (d / g);
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn rat_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // values outside f64 range: clamp by sign
        match x.numer().sign() {
            Sign::Minus => f64::NEG_INFINITY,
            Sign::NoSign => 0.0,
            Sign::Plus => f64::INFINITY,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat_i64(-7));
        assert_eq!(parse_rational("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_rational("0.5").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_none());
    }

    #[test]
    fn decimal_rendering_is_exact() {
        assert_eq!(to_decimal_string(&rat(1, 2), 4), "5.000e-1");
        assert_eq!(to_decimal_string(&rat(-32, 5), 5), "-6.4000e0");
        assert_eq!(to_decimal_string(&rat_i64(0), 10), "0");
        assert_eq!(to_decimal_string(&rat(9999, 10), 3), "1.00e3");
    }

    #[test]
    fn dyadic_floor_error_is_bounded() {
        let x = rat(22, 7);
        let r = dyadic_floor(&x, 16);
        let err = &x - &r;
        assert!(!err.is_negative());
        assert!(err < pow2(-16));
    }
}
