//! Midpoint–radius interval arithmetic over exact rationals.
//!
//! Field operations on intervals are carried out exactly in ℚ, so they never
//! introduce rounding error of their own; the radius only grows through the
//! propagation rules. Series evaluators round intermediate values to a dyadic
//! grid explicitly (see [`Interval::round`]) and account one grid step of
//! radius per rounding, which keeps numerators bounded without any hardware
//! rounding-mode assumptions.

use crate::rat::{dyadic_floor, pow2, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    mid: Rational,
    rad: Rational,
}

impl Interval {
    pub fn new(mid: Rational, rad: Rational) -> Self {
        debug_assert!(!rad.is_negative());
        Interval { mid, rad }
    }

    /// Exact point interval.
    pub fn exact(mid: Rational) -> Self {
        Interval {
            mid,
            rad: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Interval::exact(Rational::zero())
    }

    pub fn mid(&self) -> &Rational {
        &self.mid
    }

    pub fn rad(&self) -> &Rational {
        &self.rad
    }

    pub fn lo(&self) -> Rational {
        &self.mid - &self.rad
    }

    pub fn hi(&self) -> Rational {
        &self.mid + &self.rad
    }

    pub fn contains(&self, x: &Rational) -> bool {
        (&self.mid - x).abs() <= self.rad
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo() <= other.lo() && other.hi() <= self.hi()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo().is_positive()
    }

    /// Upper bound on |x| over the interval.
    pub fn abs_upper(&self) -> Rational {
        self.mid.abs() + &self.rad
    }

    /// Lower bound on |x| over the interval (0 if the interval straddles 0).
    pub fn abs_lower(&self) -> Rational {
        let v = self.mid.abs() - &self.rad;
        if v.is_negative() {
            Rational::zero()
        } else {
            v
        }
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-self.mid.clone(), self.rad.clone())
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.mid + &other.mid, &self.rad + &other.rad)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval::new(&self.mid - &other.mid, &self.rad + &other.rad)
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let rad = self.mid.abs() * &other.rad + other.mid.abs() * &self.rad + &self.rad * &other.rad;
        Interval::new(&self.mid * &other.mid, rad)
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        Interval::new(&self.mid * c, self.rad.clone() * c.abs())
    }

    pub fn add_rad(&self, extra: &Rational) -> Interval {
        debug_assert!(!extra.is_negative());
        Interval::new(self.mid.clone(), &self.rad + extra)
    }

    /// Reciprocal; the interval must not contain zero.
    pub fn recip(&self) -> Option<Interval> {
        let lo = self.abs_lower();
        if lo.is_zero() {
            return None;
        }
        let mid = self.mid.recip();
        // |1/x - 1/mid| = |x - mid| / (|x||mid|) <= rad / (lo * |mid|)
        let rad = &self.rad / (lo * self.mid.abs());
        Some(Interval::new(mid, rad))
    }

    pub fn div(&self, other: &Interval) -> Option<Interval> {
        Some(self.mul(&other.recip()?))
    }

    /// Round the midpoint to the dyadic grid 2^-w and absorb the error into
    /// the radius (also dyadically rounded up). Keeps number sizes bounded
    /// inside long accumulation loops.
    pub fn round(&self, w: u32) -> Interval {
        let mid = dyadic_floor(&self.mid, w);
        let rad = dyadic_floor(&self.rad, w) + pow2(-(w as i64)) + pow2(-(w as i64));
        Interval::new(mid, rad)
    }

    /// Tight enclosure of sqrt(x); requires the interval to be >= 0.
    pub fn sqrt(&self, w: u32) -> Option<Interval> {
        let lo = self.lo();
        if lo.is_negative() {
            return None;
        }
        let hi = self.hi();
        let slo = dyadic_sqrt_floor(&lo, w);
        let shi = dyadic_sqrt_floor(&hi, w) + pow2(-(w as i64));
        let mid = (&slo + &shi) / Rational::from_integer(BigInt::from(2));
        let rad = (&shi - &slo) / Rational::from_integer(BigInt::from(2));
        Some(Interval::new(mid, rad))
    }
}

/// Largest dyadic q = m/2^w with q <= sqrt(x), for x >= 0.
fn dyadic_sqrt_floor(x: &Rational, w: u32) -> Rational {
    debug_assert!(!x.is_negative());
    if x.is_zero() {
        return Rational::zero();
    }
    // floor(sqrt(num * 4^w / den)) / 2^w <= sqrt(x): isqrt is monotone and
    // floor(sqrt(floor(y))) = floor(sqrt(y)) for rational y.
    let scaled = (x.numer() << (2 * w as usize)).div_floor(x.denom());
    Rational::new(scaled.sqrt(), BigInt::one() << (w as usize))
}

/// Enclosure of sqrt(n) for a nonnegative integer, at w fractional bits.
pub fn sqrt_int_enclosure(n: u64, w: u32) -> Interval {
    let lo = dyadic_sqrt_floor(&Rational::from_integer(BigInt::from(n)), w);
    let step = pow2(-(w as i64));
    let hi = &lo + &step;
    let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
    let rad = (&hi - &lo) / Rational::from_integer(BigInt::from(2));
    Interval::new(mid, rad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i64};

    #[test]
    fn point_arithmetic_is_exact() {
        let a = Interval::exact(rat(1, 3));
        let b = Interval::exact(rat(1, 6));
        let s = a.add(&b);
        assert_eq!(s.mid(), &rat(1, 2));
        assert!(s.rad().is_zero());
        let p = a.mul(&b);
        assert_eq!(p.mid(), &rat(1, 18));
        assert!(p.rad().is_zero());
    }

    #[test]
    fn division_propagates_conservatively() {
        let a = Interval::new(rat_i64(1), rat(1, 100));
        let b = Interval::new(rat_i64(2), rat(1, 100));
        let q = a.div(&b).unwrap();
        // true range of x/y for x in [0.99,1.01], y in [1.99,2.01]
        assert!(q.contains(&rat(99, 201)));
        assert!(q.contains(&rat(101, 199)));
        assert!(a.div(&Interval::new(rat(1, 100), rat(1, 50))).is_none());
    }

    #[test]
    fn sqrt_enclosure_contains_root() {
        let five = Interval::exact(rat_i64(5));
        let r = five.sqrt(128).unwrap();
        let sq = r.mul(&r);
        assert!(sq.contains(&rat_i64(5)));
        assert!(r.rad() < &pow2(-120));
        let s2 = sqrt_int_enclosure(2, 200);
        assert!(s2.mul(&s2).contains(&rat_i64(2)));
    }

    #[test]
    fn rounding_keeps_value_enclosed() {
        let x = Interval::exact(rat(1, 3)); // non-dyadic
        let r = x.round(64);
        assert!(r.contains(&rat(1, 3)));
        assert!(r.rad() <= &(pow2(-63) + pow2(-64)));
    }

    #[test]
    fn widening_inputs_never_shrinks_outputs() {
        let narrow = Interval::new(rat(3, 2), rat(1, 1000));
        let wide = Interval::new(rat(3, 2), rat(1, 100));
        let other = Interval::new(rat(-7, 3), rat(1, 500));
        let p_narrow = narrow.mul(&other);
        let p_wide = wide.mul(&other);
        assert!(p_wide.rad() >= p_narrow.rad());
        assert!(p_wide.contains_interval(&p_narrow));
    }
}
