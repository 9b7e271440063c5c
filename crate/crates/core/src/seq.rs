//! Special sequences: Fibonacci, Lucas, gibonacci, harmonic numbers and
//! binomial coefficients, all with exact big-integer/rational values.
//!
//! Fibonacci and Lucas support arbitrary integer indices through the
//! reflection rules F_{-n} = (-1)^{n-1} F_n and L_{-n} = (-1)^n L_n.
//! Values are memoized behind a process-wide cache; verification sweeps
//! hit the same indices over and over.

use crate::error::{Error, Result};
use crate::rat::{rat_i64, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::{Mutex, OnceLock};

struct SequenceCache {
    fib: Vec<BigInt>,     // F_0, F_1, ...
    lucas: Vec<BigInt>,   // L_0, L_1, ...
    harmonic: Vec<Rational>, // H_0, H_1, ...
}

impl SequenceCache {
    fn new() -> Self {
        SequenceCache {
            fib: vec![BigInt::zero(), BigInt::one()],
            lucas: vec![BigInt::from(2), BigInt::one()],
            harmonic: vec![Rational::zero()],
        }
    }

    fn fib_at(&mut self, n: usize) -> BigInt {
        while self.fib.len() <= n {
            let k = self.fib.len();
            let v = &self.fib[k - 1] + &self.fib[k - 2];
            self.fib.push(v);
        }
        self.fib[n].clone()
    }

    fn lucas_at(&mut self, n: usize) -> BigInt {
        while self.lucas.len() <= n {
            let k = self.lucas.len();
            let v = &self.lucas[k - 1] + &self.lucas[k - 2];
            self.lucas.push(v);
        }
        self.lucas[n].clone()
    }

    fn harmonic_at(&mut self, n: usize) -> Rational {
        while self.harmonic.len() <= n {
            let k = self.harmonic.len();
            let v = &self.harmonic[k - 1] + Rational::new(BigInt::one(), BigInt::from(k));
            self.harmonic.push(v);
        }
        self.harmonic[n].clone()
    }
}

fn cache() -> &'static Mutex<SequenceCache> {
    static CACHE: OnceLock<Mutex<SequenceCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(SequenceCache::new()))
}

/// Fibonacci number F_n for any integer n.
pub fn fib(n: i64) -> BigInt {
    if n >= 0 {
        cache().lock().unwrap().fib_at(n as usize)
    } else {
        let v = cache().lock().unwrap().fib_at((-n) as usize);
        if n % 2 == 0 {
            -v
        } else {
            v
        }
    }
}

/// Lucas number L_n for any integer n.
pub fn lucas(n: i64) -> BigInt {
    if n >= 0 {
        cache().lock().unwrap().lucas_at(n as usize)
    } else {
        let v = cache().lock().unwrap().lucas_at((-n) as usize);
        if n % 2 == 0 {
            v
        } else {
            -v
        }
    }
}

pub fn fib_rat(n: i64) -> Rational {
    Rational::from_integer(fib(n))
}

pub fn lucas_rat(n: i64) -> Rational {
    Rational::from_integer(lucas(n))
}

/// Gibonacci number G_n with G_0 = a, G_1 = b. For n >= 0 this equals
/// a*F_{n-1} + b*F_n (the formula also covers n = 0 via F_{-1} = 1).
pub fn gibonacci(a: &Rational, b: &Rational, n: i64) -> Rational {
    debug_assert!(n >= 0);
    a * fib_rat(n - 1) + b * fib_rat(n)
}

/// Harmonic number H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
pub fn harmonic(n: i64) -> Rational {
    debug_assert!(n >= 0);
    cache().lock().unwrap().harmonic_at(n as usize)
}

/// Binomial coefficient C(n, k) for n >= 0; zero outside 0 <= k <= n.
/// Shifted-index sums rely on the silent vanishing convention.
pub fn binom(n: i64, k: i64) -> BigInt {
    debug_assert!(n >= 0);
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k) as u64;
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i as i64) / BigInt::from(i + 1);
    }
    acc
}

pub fn binom_rat(n: i64, k: i64) -> Rational {
    Rational::from_integer(binom(n, k))
}

/// Floor of n/k (rounds toward -inf). Errors on k = 0.
pub fn floor_div(n: i64, k: i64) -> Result<i64> {
    if k == 0 {
        return Err(Error::DivisionByZero);
    }
    let q = n / k;
    if n % k != 0 && (n < 0) != (k < 0) {
        Ok(q - 1)
    } else {
        Ok(q)
    }
}

/// Ceiling of n/k; k != 0.
pub fn ceil_div(n: i64, k: i64) -> Result<i64> {
    Ok(-floor_div(-n, k)?)
}

/// (-1)^n as an exact rational sign.
pub fn sign_pow(n: i64) -> Rational {
    if n % 2 == 0 {
        rat_i64(1)
    } else {
        rat_i64(-1)
    }
}

pub fn sign_i64(n: i64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn fib_examples() {
        assert_eq!(fib(0), BigInt::zero());
        assert_eq!(fib(-5), BigInt::from(5));
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(fib(-6), BigInt::from(-8));
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas(0), BigInt::from(2));
        assert_eq!(lucas(-3), BigInt::from(-4));
        assert_eq!(lucas(10), BigInt::from(123));
    }

    #[test]
    fn recurrences_hold_for_negative_indices() {
        for n in -60..=58i64 {
            assert_eq!(fib(n + 2), fib(n + 1) + fib(n), "F recurrence at {n}");
            assert_eq!(lucas(n + 2), lucas(n + 1) + lucas(n), "L recurrence at {n}");
        }
        for n in -40..=40i64 {
            assert_eq!(lucas(n), fib(n - 1) + fib(n + 1), "L_n = F_(n-1)+F_(n+1) at {n}");
        }
    }

    #[test]
    fn gibonacci_specializes_to_fib_and_lucas() {
        let zero = rat(0, 1);
        let one = rat(1, 1);
        let two = rat(2, 1);
        for n in 0..=60 {
            assert_eq!(gibonacci(&zero, &one, n), fib_rat(n));
            assert_eq!(gibonacci(&two, &one, n), lucas_rat(n));
        }
        // recurrence oracle: (3,5) at n=6 -> 3*F_5 + 5*F_6 = 15 + 40
        assert_eq!(gibonacci(&rat(3, 1), &rat(5, 1), 6), rat(55, 1));
        // direct recurrence check for a rational seed
        let a = rat(1, 3);
        let b = rat(-2, 7);
        let mut g0 = a.clone();
        let mut g1 = b.clone();
        for n in 2..=30 {
            let g2 = &g0 + &g1;
            g0 = g1;
            g1 = g2;
            assert_eq!(gibonacci(&a, &b, n), g1);
        }
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(0), rat(0, 1));
        assert_eq!(harmonic(3), rat(11, 6));
        assert_eq!(harmonic(5), rat(137, 60));
    }

    #[test]
    fn binom_examples_and_pascal_oracle() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(binom(5, 6), BigInt::zero());
        // Pascal-triangle oracle
        let mut row = vec![BigInt::one()];
        for n in 1..=40 {
            let mut next = vec![BigInt::one()];
            for j in 1..n {
                next.push(&row[j - 1] + &row[j]);
            }
            next.push(BigInt::one());
            row = next;
        }
        assert_eq!(binom(40, 20), row[20]);
        assert_eq!(row[20].to_string(), "137846528820");
    }

    #[test]
    fn floor_div_examples_and_remark_identity() {
        assert_eq!(floor_div(7, 2).unwrap(), 3);
        assert_eq!(floor_div(7, -2).unwrap(), -4);
        assert_eq!(floor_div(5, -3).unwrap(), -2);
        assert!(floor_div(1, 0).is_err());
        // floor(n/k) = -1 - floor((n-1)/(-k))
        for n in -20..=20 {
            for k in 1..=8 {
                assert_eq!(
                    floor_div(n, -k).unwrap(),
                    -1 - floor_div(n - 1, k).unwrap(),
                    "remark identity at n={n}, k={k}"
                );
            }
        }
        // ceiling relation
        for n in -20..=20 {
            for k in [-5, -2, -1, 1, 2, 5] {
                let c = ceil_div(n, k).unwrap();
                let f = floor_div(n, k).unwrap();
                assert!(c == f || c == f + 1);
                assert_eq!(c, -floor_div(-n, k).unwrap());
            }
        }
    }
}
