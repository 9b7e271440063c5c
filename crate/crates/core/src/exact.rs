//! Exact arithmetic in the field tower ℚ ⊂ ℚ(√5) ⊂ ℚ(√5, i).
//!
//! `QSqrt5` stores a + b√5 with reduced rational components; equality is
//! componentwise, which is justified by the uniqueness of the representation
//! over ℚ. `QSqrt5i` is the rank-2 extension by the imaginary unit, reusing
//! `QSqrt5` arithmetic for both components.

use crate::error::{Error, Result};
use crate::interval::{sqrt_int_enclosure, Interval};
use crate::rat::{pow2, rat_i64, Rational};
use crate::seq;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element a + b√5 of ℚ(√5).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSqrt5 {
    /// coefficient of 1
    pub rat: Rational,
    /// coefficient of √5
    pub irr: Rational,
}

impl QSqrt5 {
    pub fn new(rat: Rational, irr: Rational) -> Self {
        QSqrt5 { rat, irr }
    }

    pub fn from_rational(r: Rational) -> Self {
        QSqrt5 {
            rat: r,
            irr: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_i64(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn sqrt5() -> Self {
        QSqrt5 {
            rat: Rational::zero(),
            irr: Rational::one(),
        }
    }

    /// The golden ratio α = (1+√5)/2.
    pub fn alpha() -> Self {
        QSqrt5 {
            rat: Rational::new(BigInt::one(), BigInt::from(2)),
            irr: Rational::new(BigInt::one(), BigInt::from(2)),
        }
    }

    /// β = (1-√5)/2, the conjugate root of x² = x + 1.
    pub fn beta() -> Self {
        Self::alpha().conj()
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// Conjugation a + b√5 -> a - b√5 (the nontrivial field automorphism).
    pub fn conj(&self) -> Self {
        QSqrt5 {
            rat: self.rat.clone(),
            irr: -self.irr.clone(),
        }
    }

    /// Field norm N(a + b√5) = a² - 5b².
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - Rational::from_integer(BigInt::from(5)) * &self.irr * &self.irr
    }

    /// Multiplicative inverse via the conjugate over the norm.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        debug_assert!(!n.is_zero(), "norm vanishes only at zero");
        Ok(QSqrt5 {
            rat: &self.rat / &n,
            irr: -(&self.irr / &n),
        })
    }

    pub fn div(&self, other: &QSqrt5) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power by repeated squaring; negative exponents go through the
    /// exact inverse (for α this is -β, never a floating inversion).
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut base = self.clone();
        let mut e = e as u64;
        let mut acc = QSqrt5::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Scale by an exact rational.
    pub fn scale(&self, c: &Rational) -> Self {
        QSqrt5 {
            rat: &self.rat * c,
            irr: &self.irr * c,
        }
    }

    /// Exact sign of the real value a + b√5 (-1, 0, +1), decided without
    /// floating point: compare a² with 5b² in the mixed-sign case.
    pub fn sign(&self) -> i32 {
        let sa = rational_sign(&self.rat);
        let sb = rational_sign(&self.irr);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // a and b√5 have opposite signs: sign matches the larger magnitude.
        let a2 = &self.rat * &self.rat;
        let b25 = Rational::from_integer(BigInt::from(5)) * &self.irr * &self.irr;
        match a2.cmp(&b25) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    /// Exact comparison of two values in ℚ(√5).
    pub fn cmp_exact(&self, other: &QSqrt5) -> std::cmp::Ordering {
        match (self - other).sign() {
            1 => std::cmp::Ordering::Greater,
            -1 => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Equal,
        }
    }

    /// Rigorous interval containing the real value, with relative radius at
    /// most 2^(1-precision) (exact for rational values).
    pub fn embed(&self, precision: u32) -> Interval {
        if self.irr.is_zero() {
            return Interval::exact(self.rat.clone());
        }
        let mut w = precision + 8;
        loop {
            let s5 = sqrt_int_enclosure(5, w);
            let iv = s5
                .scale(&self.irr)
                .add(&Interval::exact(self.rat.clone()));
            // rad <= 2^(1-precision) |mid| unless cancellation ate the
            // midpoint; retry with more working bits in that case.
            let bound = iv.mid().abs() * pow2(1 - precision as i64);
            if iv.rad() <= &bound || (iv.mid().is_zero() && self.sign() == 0) {
                return iv;
            }
            w += 2 * (w / 2).max(32);
        }
    }

    /// Rational upper bound of the real value (uses the embedding).
    pub fn upper_bound(&self, precision: u32) -> Rational {
        self.embed(precision).hi()
    }

    /// Canonical "a/b+c/d*sqrt5" rendering used by reports.
    pub fn exact_string(&self) -> String {
        format!(
            "{}/{}+{}/{}*sqrt5",
            self.rat.numer(),
            self.rat.denom(),
            self.irr.numer(),
            self.irr.denom()
        )
    }
}

fn rational_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exact_string())
    }
}

macro_rules! impl_q5_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b QSqrt5> for &'a QSqrt5 {
            type Output = QSqrt5;
            fn $method(self, rhs: &'b QSqrt5) -> QSqrt5 {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl $trait<QSqrt5> for QSqrt5 {
            type Output = QSqrt5;
            fn $method(self, rhs: QSqrt5) -> QSqrt5 {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a QSqrt5> for QSqrt5 {
            type Output = QSqrt5;
            fn $method(self, rhs: &'a QSqrt5) -> QSqrt5 {
                (&self).$method(rhs)
            }
        }
    };
}

impl_q5_binop!(Add, add, |a, b| QSqrt5 {
    rat: &a.rat + &b.rat,
    irr: &a.irr + &b.irr,
});

impl_q5_binop!(Sub, sub, |a, b| QSqrt5 {
    rat: &a.rat - &b.rat,
    irr: &a.irr - &b.irr,
});

impl_q5_binop!(Mul, mul, |a, b| QSqrt5 {
    rat: &a.rat * &b.rat + Rational::from_integer(BigInt::from(5)) * &a.irr * &b.irr,
    irr: &a.rat * &b.irr + &a.irr * &b.rat,
});

impl Neg for &QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5 {
            rat: -self.rat.clone(),
            irr: -self.irr.clone(),
        }
    }
}

impl Neg for QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        -&self
    }
}

/// Exact αⁿ = (Lₙ + Fₙ√5)/2 by field powering (the Lucas/Fibonacci form is
/// kept as an independent test oracle, not the implementation).
pub fn alpha_pow(n: i64) -> QSqrt5 {
    QSqrt5::alpha().pow(n).expect("alpha is invertible")
}

pub fn beta_pow(n: i64) -> QSqrt5 {
    alpha_pow(n).conj()
}

/// Exact 5^(e/2) with the parity split: even e stays rational, odd e places
/// 5^((e-1)/2) on the √5 component. e may be negative.
pub fn five_pow_half(e: i64) -> QSqrt5 {
    let five = Rational::from_integer(BigInt::from(5));
    let pow5 = |k: i64| -> Rational {
        if k >= 0 {
            five.pow(k as i32)
        } else {
            five.pow((-k) as i32).recip()
        }
    };
    if e.rem_euclid(2) == 0 {
        QSqrt5::from_rational(pow5(e / 2))
    } else {
        // 5^(e/2) = 5^((e-1)/2) * sqrt5, with (e-1)/2 rounded toward -inf
        let k = (e - 1).div_euclid(2);
        QSqrt5::new(Rational::zero(), pow5(k))
    }
}

/// F_n as an element of ℚ(√5).
pub fn fib_q5(n: i64) -> QSqrt5 {
    QSqrt5::from_bigint(seq::fib(n))
}

/// L_n as an element of ℚ(√5).
pub fn lucas_q5(n: i64) -> QSqrt5 {
    QSqrt5::from_bigint(seq::lucas(n))
}

/// An element x + y·i of ℚ(√5, i), with x, y ∈ ℚ(√5).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSqrt5i {
    pub re: QSqrt5,
    pub im: QSqrt5,
}

impl QSqrt5i {
    pub fn new(re: QSqrt5, im: QSqrt5) -> Self {
        QSqrt5i { re, im }
    }

    pub fn from_real(re: QSqrt5) -> Self {
        QSqrt5i {
            re,
            im: QSqrt5::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_real(QSqrt5::from_int(n))
    }

    pub fn i() -> Self {
        QSqrt5i {
            re: QSqrt5::zero(),
            im: QSqrt5::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugation (negates the i-component).
    pub fn conj(&self) -> Self {
        QSqrt5i {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// |z|² = re² + im², an element of ℚ(√5).
    pub fn norm_sq(&self) -> QSqrt5 {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq();
        let n_inv = n.inv()?;
        Ok(QSqrt5i {
            re: &self.re * &n_inv,
            im: -&(&self.im * &n_inv),
        })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut base = self.clone();
        let mut e = e as u64;
        let mut acc = QSqrt5i::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn scale_q5(&self, c: &QSqrt5) -> Self {
        QSqrt5i {
            re: &self.re * c,
            im: &self.im * c,
        }
    }

    pub fn exact_string(&self) -> String {
        format!(
            "{}+{}/{}*i+{}/{}*sqrt5*i",
            self.re.exact_string(),
            self.im.rat.numer(),
            self.im.rat.denom(),
            self.im.irr.numer(),
            self.im.irr.denom()
        )
    }
}

macro_rules! impl_q5i_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b QSqrt5i> for &'a QSqrt5i {
            type Output = QSqrt5i;
            fn $method(self, rhs: &'b QSqrt5i) -> QSqrt5i {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl $trait<QSqrt5i> for QSqrt5i {
            type Output = QSqrt5i;
            fn $method(self, rhs: QSqrt5i) -> QSqrt5i {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_q5i_binop!(Add, add, |a, b| QSqrt5i {
    re: &a.re + &b.re,
    im: &a.im + &b.im,
});

impl_q5i_binop!(Sub, sub, |a, b| QSqrt5i {
    re: &a.re - &b.re,
    im: &a.im - &b.im,
});

impl_q5i_binop!(Mul, mul, |a, b| QSqrt5i {
    re: &(&a.re * &b.re) - &(&a.im * &b.im),
    im: &(&a.re * &b.im) + &(&a.im * &b.re),
});

impl Neg for &QSqrt5i {
    type Output = QSqrt5i;
    fn neg(self) -> QSqrt5i {
        QSqrt5i {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn q5(a: Rational, b: Rational) -> QSqrt5 {
        QSqrt5::new(a, b)
    }

    #[test]
    fn product_examples() {
        // (1+sqrt5)(1-sqrt5) = -4
        let x = q5(rat(1, 1), rat(1, 1));
        let y = x.conj();
        assert_eq!(&x * &y, QSqrt5::from_int(-4));
        // alpha * beta = -1
        assert_eq!(&QSqrt5::alpha() * &QSqrt5::beta(), QSqrt5::from_int(-1));
        // (3/2 + (1/2)sqrt5)^2 = 7/2 + (3/2)sqrt5
        let z = q5(rat(3, 2), rat(1, 2));
        assert_eq!(&z * &z, q5(rat(7, 2), rat(3, 2)));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            QSqrt5::from_int(2).inv().unwrap(),
            QSqrt5::from_rational(rat(1, 2))
        );
        assert_eq!(QSqrt5::alpha().inv().unwrap(), -&QSqrt5::beta());
        let x = q5(rat(1, 1), rat(1, 1)); // 1 + sqrt5
        let inv = x.inv().unwrap();
        assert_eq!(inv, q5(rat(-1, 4), rat(1, 4)));
        assert_eq!(&x * &inv, QSqrt5::one());
        assert!(QSqrt5::zero().inv().is_err());
    }

    #[test]
    fn alpha_powers() {
        assert_eq!(alpha_pow(2), q5(rat(3, 2), rat(1, 2)));
        assert_eq!(alpha_pow(-1), q5(rat(-1, 2), rat(1, 2)));
        assert_eq!(alpha_pow(10), q5(rat(123, 2), rat(55, 2)));
    }

    #[test]
    fn binet_consistency() {
        // field powering must agree with (L_n + F_n*sqrt5)/2 for all |n|<=50
        for n in -50..=50 {
            let a = alpha_pow(n);
            let expected = QSqrt5::new(
                Rational::new(seq::lucas(n), BigInt::from(2)),
                Rational::new(seq::fib(n), BigInt::from(2)),
            );
            assert_eq!(a, expected, "alpha^{n}");
            // (alpha^n - beta^n)/sqrt5 = F_n
            let diff = &a - &a.conj();
            let f = diff.div(&QSqrt5::sqrt5()).unwrap();
            assert!(f.is_rational());
            assert_eq!(f.rat, seq::fib_rat(n));
            // alpha^n + beta^n = L_n
            let s = &a + &a.conj();
            assert!(s.is_rational());
            assert_eq!(s.rat, seq::lucas_rat(n));
        }
    }

    #[test]
    fn five_pow_half_parity_split() {
        assert_eq!(five_pow_half(0), QSqrt5::one());
        assert_eq!(five_pow_half(2), QSqrt5::from_int(5));
        assert_eq!(five_pow_half(1), QSqrt5::sqrt5());
        assert_eq!(five_pow_half(3), q5(rat(0, 1), rat(5, 1)));
        assert_eq!(five_pow_half(-1), q5(rat(0, 1), rat(1, 5)));
        assert_eq!(five_pow_half(-2), QSqrt5::from_rational(rat(1, 5)));
        // square of 5^(e/2) is 5^e
        for e in -6..=6i64 {
            let h = five_pow_half(e);
            let sq = &h * &h;
            assert_eq!(sq, five_pow_half(2 * e), "square at e={e}");
        }
    }

    #[test]
    fn exact_sign_decisions() {
        assert_eq!(QSqrt5::alpha().sign(), 1);
        assert_eq!(QSqrt5::beta().sign(), -1);
        assert_eq!(QSqrt5::zero().sign(), 0);
        // 9/4 - sqrt5 > 0 since 81/16 > 5
        assert_eq!(q5(rat(9, 4), rat(-1, 1)).sign(), 1);
        // 2 - sqrt5 < 0
        assert_eq!(q5(rat(2, 1), rat(-1, 1)).sign(), -1);
    }

    #[test]
    fn embed_examples() {
        let z = QSqrt5::zero().embed(128);
        assert!(z.mid().is_zero() && z.rad().is_zero());
        let m4 = QSqrt5::from_int(-4).embed(128);
        assert!(m4.rad().is_zero());
        assert_eq!(m4.mid(), &rat(-4, 1));
        let a = QSqrt5::alpha().embed(128);
        // independent check digits of the golden ratio
        let lo = rat(16180339887u64.try_into().unwrap(), 10_000_000_000);
        let hi = rat(16180339888u64.try_into().unwrap(), 10_000_000_000);
        assert!(a.lo() > lo && a.hi() < hi);
        // catastrophic cancellation still meets the relative-radius contract
        let tiny = alpha_pow(-80);
        let iv = tiny.embed(96);
        assert!(iv.rad() <= &(iv.mid().abs() * pow2(-95)));
        assert!(iv.is_strictly_positive());
    }

    #[test]
    fn complex_examples() {
        let one_i = QSqrt5i::new(QSqrt5::one(), QSqrt5::one());
        assert_eq!(&one_i * &one_i.conj(), QSqrt5i::from_int(2));
        let z = QSqrt5i::new(QSqrt5::one(), QSqrt5::from_int(2));
        assert_eq!(
            z.pow(2).unwrap(),
            QSqrt5i::new(QSqrt5::from_int(-3), QSqrt5::from_int(4))
        );
        let i_sqrt5 = QSqrt5i::new(QSqrt5::zero(), QSqrt5::sqrt5());
        assert_eq!(&i_sqrt5 * &i_sqrt5, QSqrt5i::from_int(-5));
        let z_inv = z.inv().unwrap();
        assert_eq!(&z * &z_inv, QSqrt5i::one());
    }
}
