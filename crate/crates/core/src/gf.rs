//! Truncated formal power series over ℚ(√5): polynomial arithmetic,
//! rational-function expansion, the floor transforms and the generalized
//! binomial transform.
//!
//! Rational GFs are kept unreduced; equality is always decided by expansion,
//! never by structural comparison of numerator/denominator.

use crate::error::{Error, Result};
use crate::exact::QSqrt5;
use crate::seq::{binom_rat, floor_div};
use std::ops::Neg;

/// Dense polynomial with ℚ(√5) coefficients, index = degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<QSqrt5>);

impl Poly {
    pub fn zero() -> Self {
        Poly(vec![])
    }

    pub fn constant(c: QSqrt5) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly(vec![c])
        }
    }

    pub fn one() -> Self {
        Poly::constant(QSqrt5::one())
    }

    /// c * z^k
    pub fn monomial(c: QSqrt5, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![QSqrt5::zero(); k + 1];
        v[k] = c;
        Poly(v)
    }

    /// Build from integer coefficients, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly(coeffs.iter().map(|&c| QSqrt5::from_int(c)).collect()).trimmed()
    }

    pub fn coeff(&self, k: usize) -> QSqrt5 {
        self.0.get(k).cloned().unwrap_or_else(QSqrt5::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    fn trimmed(mut self) -> Self {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &other.coeff(k));
        }
        Poly(out).trimmed()
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.clone().neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![QSqrt5::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly(out).trimmed()
    }

    pub fn scale(&self, c: &QSqrt5) -> Poly {
        Poly(self.0.iter().map(|a| a * c).collect()).trimmed()
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute z -> c * z^k (k >= 1).
    pub fn compose_scaled_power(&self, c: &QSqrt5, k: usize) -> Poly {
        debug_assert!(k >= 1);
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![QSqrt5::zero(); (self.0.len() - 1) * k + 1];
        let mut cp = QSqrt5::one();
        for (i, a) in self.0.iter().enumerate() {
            if !a.is_zero() {
                out[i * k] = a * &cp;
            }
            cp = &cp * c;
        }
        Poly(out).trimmed()
    }

    pub fn eval(&self, x: &QSqrt5) -> QSqrt5 {
        let mut acc = QSqrt5::zero();
        for c in self.0.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly::zero();
        }
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&crate::rat::rat_i64(i as i64)))
                .collect(),
        )
        .trimmed()
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.into_iter().map(|c| -c).collect())
    }
}

/// Quotient of two polynomials, expandable at z = 0 (den(0) != 0).
#[derive(Debug, Clone)]
pub struct RationalGF {
    pub num: Poly,
    pub den: Poly,
}

impl RationalGF {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.coeff(0).is_zero() {
            return Err(Error::domain("rational GF denominator vanishes at 0"));
        }
        Ok(RationalGF { num, den })
    }

    pub fn mul(&self, other: &RationalGF) -> RationalGF {
        RationalGF {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    /// Substitute z -> c * z^k in both numerator and denominator.
    pub fn compose_scaled_power(&self, c: &QSqrt5, k: usize) -> RationalGF {
        RationalGF {
            num: self.num.compose_scaled_power(c, k),
            den: self.den.compose_scaled_power(c, k),
        }
    }

    /// Power-series coefficients to the given order, by the denominator-driven
    /// recurrence c_n = (num_n - sum_{j>=1} den_j c_{n-j}) / den_0.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let d0 = self.den.coeff(0);
        let d0_inv = d0.inv().expect("den(0) != 0 by construction");
        let dlen = self.den.0.len();
        let mut coeffs: Vec<QSqrt5> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for j in 1..dlen.min(n + 1) {
                let dj = &self.den.0[j];
                if dj.is_zero() {
                    continue;
                }
                acc = &acc - &(dj * &coeffs[n - j]);
            }
            coeffs.push(&acc * &d0_inv);
        }
        TruncatedSeries { coeffs }
    }

    /// Exact value num(x)/den(x) at a point where den(x) != 0.
    pub fn eval(&self, x: &QSqrt5) -> Result<QSqrt5> {
        self.num.eval(x).div(&self.den.eval(x))
    }
}

/// Coefficients c_0..c_N of a formal power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub coeffs: Vec<QSqrt5>,
}

impl TruncatedSeries {
    pub fn from_fn(order: usize, f: impl Fn(i64) -> QSqrt5) -> Self {
        TruncatedSeries {
            coeffs: (0..=order as i64).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> QSqrt5 {
        self.coeffs.get(n).cloned().unwrap_or_else(QSqrt5::zero)
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        TruncatedSeries::from_fn(order, |n| &self.coeff(n as usize) + &other.coeff(n as usize))
    }

    pub fn scale(&self, c: &QSqrt5) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by a polynomial, truncating to this series' order.
    pub fn mul_poly(&self, p: &Poly) -> TruncatedSeries {
        let order = self.order();
        let mut out = vec![QSqrt5::zero(); order + 1];
        for (j, b) in p.0.iter().enumerate() {
            if b.is_zero() || j > order {
                continue;
            }
            for n in j..=order {
                out[n] = &out[n] + &(b * &self.coeffs[n - j]);
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Substitute z -> s * z^k (s = +1 or -1), truncating to the same order.
    pub fn compose_signed_power(&self, negative: bool, k: usize) -> TruncatedSeries {
        let order = self.order();
        let mut out = vec![QSqrt5::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            let Some(pos) = i.checked_mul(k) else { break };
            if pos > order {
                break;
            }
            out[pos] = if negative && i % 2 == 1 { -a } else { a.clone() };
        }
        TruncatedSeries { coeffs: out }
    }
}

/// Outcome of a coefficientwise comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesCmp {
    Equal,
    MismatchAt(usize),
}

/// Compare two series of equal order coefficient by coefficient.
pub fn series_equal(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<SeriesCmp> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    for n in 0..=a.order() {
        if a.coeffs[n] != b.coeffs[n] {
            return Ok(SeriesCmp::MismatchAt(n));
        }
    }
    Ok(SeriesCmp::Equal)
}

/// The series whose n-th coefficient is a_{floor(n/k)}, built directly.
pub fn floor_transform_seq(a: &dyn Fn(i64) -> QSqrt5, k: i64, order: usize) -> TruncatedSeries {
    debug_assert!(k >= 1);
    TruncatedSeries::from_fn(order, |n| a(floor_div(n, k).expect("k >= 1")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformSign {
    Plus,
    Minus,
}

/// The rational GF of the dual floor sequence:
/// `(1-z^k)/(1-z) F(z^k)` for the plus sign, and
/// `(1+(-1)^(k+1) z^k)/(1+z) F((-1)^k z^k)` for the minus sign.
pub fn floor_transform_gf(f: &RationalGF, k: i64, sign: TransformSign) -> RationalGF {
    debug_assert!(k >= 1);
    let k = k as usize;
    match sign {
        TransformSign::Plus => {
            let inner = f.compose_scaled_power(&QSqrt5::one(), k);
            let mut pre_num = Poly::one();
            pre_num.0.resize(k + 1, QSqrt5::zero());
            pre_num.0[k] = QSqrt5::from_int(-1); // 1 - z^k
            let pre_den = Poly::from_ints(&[1, -1]); // 1 - z
            RationalGF {
                num: pre_num.mul(&inner.num),
                den: pre_den.mul(&inner.den),
            }
        }
        TransformSign::Minus => {
            let inner_scale = if k % 2 == 0 {
                QSqrt5::one()
            } else {
                QSqrt5::from_int(-1)
            };
            let inner = f.compose_scaled_power(&inner_scale, k);
            // 1 + (-1)^(k+1) z^k
            let mut pre_num = Poly::one();
            pre_num.0.resize(k + 1, QSqrt5::zero());
            pre_num.0[k] = QSqrt5::from_int(if k % 2 == 0 { -1 } else { 1 });
            let pre_den = Poly::from_ints(&[1, 1]); // 1 + z
            RationalGF {
                num: pre_num.mul(&inner.num),
                den: pre_den.mul(&inner.den),
            }
        }
    }
}

/// Series-level floor transform of an arbitrary truncated series: multiply
/// F(±z^k) by the geometric prefactor polynomial. Works for sequences with no
/// rational GF.
pub fn floor_transform_series(
    a: &TruncatedSeries,
    k: i64,
    sign: TransformSign,
    order: usize,
) -> TruncatedSeries {
    debug_assert!(k >= 1);
    let k = k as usize;
    let mut chopped = a.clone();
    chopped.coeffs.resize(order + 1, QSqrt5::zero());
    match sign {
        TransformSign::Plus => {
            // (1 - z^k)/(1 - z) = 1 + z + ... + z^(k-1)
            let inner = chopped.compose_signed_power(false, k);
            let pre = Poly(vec![QSqrt5::one(); k]);
            inner.mul_poly(&pre)
        }
        TransformSign::Minus => {
            // (1 + (-1)^(k+1) z^k)/(1 + z) = sum_{j<k} (-z)^j
            let inner = chopped.compose_signed_power(k % 2 == 1, k);
            let pre = Poly(
                (0..k)
                    .map(|j| QSqrt5::from_int(if j % 2 == 0 { 1 } else { -1 }))
                    .collect(),
            );
            inner.mul_poly(&pre)
        }
    }
}

/// Direct generalized binomial transform: the n-th coefficient is
/// sum_j C(n,j) b^(n-j) c^j a(j). O(N^2) but exact; used as the oracle
/// against expansions of the closed transform GFs.
pub fn binomial_transform_series(
    a: &dyn Fn(i64) -> QSqrt5,
    b: &QSqrt5,
    c: &QSqrt5,
    order: usize,
) -> TruncatedSeries {
    let avals: Vec<QSqrt5> = (0..=order as i64).map(a).collect();
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        // powers b^(n-j) c^j built incrementally across j
        let mut bpow = b.pow(n as i64).expect("nonnegative power");
        let c_over_b: Option<QSqrt5> = (!b.is_zero()).then(|| c.div(b).ok()).flatten();
        let mut acc = QSqrt5::zero();
        match c_over_b {
            Some(ratio) => {
                for (j, aj) in avals.iter().enumerate().take(n + 1) {
                    if !aj.is_zero() {
                        acc = &acc + &(&bpow * aj).scale(&binom_rat(n as i64, j as i64));
                    }
                    bpow = &bpow * &ratio;
                }
            }
            None => {
                // b = 0: only the j = n term survives
                let cn = c.pow(n as i64).expect("nonnegative power");
                acc = &cn * &avals[n];
            }
        }
        coeffs.push(acc);
    }
    TruncatedSeries { coeffs }
}

/// Residual of the even-k parity identity
/// (1-z) sum a_{floor(n/k)} z^n - (1+z) sum (-1)^n a_{floor(n/k)} z^n,
/// which must vanish identically for even k.
pub fn parity_identity_check(
    a: &dyn Fn(i64) -> QSqrt5,
    k: i64,
    order: usize,
) -> Result<TruncatedSeries> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::domain("parity identity requires even k >= 2"));
    }
    let plus = floor_transform_seq(a, k, order);
    let minus = TruncatedSeries::from_fn(order, |n| {
        let v = a(floor_div(n, k).expect("k >= 1"));
        if n % 2 == 0 {
            v
        } else {
            -v
        }
    });
    let lhs = plus.mul_poly(&Poly::from_ints(&[1, -1]));
    let rhs = minus.mul_poly(&Poly::from_ints(&[1, 1]));
    Ok(lhs.add(&rhs.scale(&QSqrt5::from_int(-1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fib_q5;
    use crate::rat::rat;
    use crate::seq;

    fn fib_gf() -> RationalGF {
        RationalGF::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[1, -1, -1])).unwrap()
    }

    #[test]
    fn expand_examples() {
        let fib_series = fib_gf().expand(6);
        let expect: Vec<i64> = vec![0, 1, 1, 2, 3, 5, 8];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(fib_series.coeff(n), QSqrt5::from_int(*e));
        }
        let geo = RationalGF::new(Poly::one(), Poly::from_ints(&[1, -1]))
            .unwrap()
            .expand(4);
        assert!(geo.coeffs.iter().all(|c| c == &QSqrt5::one()));
        // z^2/((1-z)(1-z^2)) -> floor(n/2)
        let gf = RationalGF::new(
            Poly::from_ints(&[0, 0, 1]),
            Poly::from_ints(&[1, -1]).mul(&Poly::from_ints(&[1, 0, -1])),
        )
        .unwrap();
        let s = gf.expand(7);
        for n in 0..=7i64 {
            assert_eq!(
                s.coeff(n as usize),
                QSqrt5::from_int(seq::floor_div(n, 2).unwrap())
            );
        }
        // den(0) = 0 rejected
        assert!(RationalGF::new(Poly::one(), Poly::from_ints(&[0, 1])).is_err());
    }

    #[test]
    fn floor_transform_seq_examples() {
        let s = floor_transform_seq(&|n| QSqrt5::from_int(n), 2, 5);
        let expect = [0, 0, 1, 1, 2, 2];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(s.coeff(n), QSqrt5::from_int(*e));
        }
        let f = floor_transform_seq(&fib_q5, 1, 5);
        let expect = [0, 1, 1, 2, 3, 5];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(f.coeff(n), QSqrt5::from_int(*e));
        }
        // a_n = H_n/(n+1)^2 at k = 2
        let a = |n: i64| {
            QSqrt5::from_rational(
                seq::harmonic(n) / (crate::rat::rat_i64(n + 1) * crate::rat::rat_i64(n + 1)),
            )
        };
        let h = floor_transform_seq(&a, 2, 4);
        assert_eq!(h.coeff(0), QSqrt5::zero());
        assert_eq!(h.coeff(2), QSqrt5::from_rational(rat(1, 4)));
        assert_eq!(h.coeff(3), QSqrt5::from_rational(rat(1, 4)));
        assert_eq!(h.coeff(4), QSqrt5::from_rational(rat(3, 2) / crate::rat::rat_i64(9)));
    }

    #[test]
    fn gf_transform_matches_direct_construction() {
        // F = z/(1-z)^2 (a_n = n), k = 2, plus sign
        let f = RationalGF::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[1, -2, 1])).unwrap();
        let t = floor_transform_gf(&f, 2, TransformSign::Plus);
        let direct = floor_transform_seq(&|n| QSqrt5::from_int(n), 2, 200);
        assert_eq!(series_equal(&t.expand(200), &direct).unwrap(), SeriesCmp::Equal);
        // k = 1 is the identity transform
        let id = floor_transform_gf(&fib_gf(), 1, TransformSign::Plus);
        assert_eq!(
            series_equal(&id.expand(100), &fib_gf().expand(100)).unwrap(),
            SeriesCmp::Equal
        );
        // minus sign carries (-1)^n
        let tm = floor_transform_gf(&fib_gf(), 3, TransformSign::Minus);
        let direct_m = TruncatedSeries::from_fn(150, |n| {
            let v = fib_q5(seq::floor_div(n, 3).unwrap());
            if n % 2 == 0 {
                v
            } else {
                -v
            }
        });
        assert_eq!(series_equal(&tm.expand(150), &direct_m).unwrap(), SeriesCmp::Equal);
    }

    #[test]
    fn binomial_transform_examples() {
        let ones = binomial_transform_series(&|_| QSqrt5::one(), &QSqrt5::one(), &QSqrt5::one(), 4);
        let expect = [1, 2, 4, 8, 16];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(ones.coeff(n), QSqrt5::from_int(*e));
        }
        // a_j = floor(j/2), b = c = 1: 0, 0, 1, 4, 12 (equals 2^(n-2)(n-1))
        let s = binomial_transform_series(
            &|j| QSqrt5::from_int(seq::floor_div(j, 2).unwrap()),
            &QSqrt5::one(),
            &QSqrt5::one(),
            4,
        );
        let expect = [0, 0, 1, 4, 12];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(s.coeff(n), QSqrt5::from_int(*e));
        }
        // a_j = (-1)^floor(j/2), n = 3 vanishes (2^2 cos(pi/2) = 0)
        let v = binomial_transform_series(
            &|j| QSqrt5::from_int(seq::sign_i64(seq::floor_div(j, 2).unwrap())),
            &QSqrt5::one(),
            &QSqrt5::one(),
            3,
        );
        assert_eq!(v.coeff(3), QSqrt5::zero());
        // zero base: only the diagonal term survives
        let zb = binomial_transform_series(
            &|j| QSqrt5::from_int(j + 1),
            &QSqrt5::zero(),
            &QSqrt5::from_int(2),
            3,
        );
        assert_eq!(zb.coeff(3), QSqrt5::from_int(32)); // 2^3 * 4
    }

    #[test]
    fn series_equal_reports_first_mismatch() {
        let a = TruncatedSeries::from_fn(10, |_| QSqrt5::one());
        let b = TruncatedSeries::from_fn(10, |n| QSqrt5::from_int(if n % 2 == 0 { 1 } else { -1 }));
        assert_eq!(series_equal(&a, &a).unwrap(), SeriesCmp::Equal);
        assert_eq!(series_equal(&a, &b).unwrap(), SeriesCmp::MismatchAt(1));
        let c = TruncatedSeries::from_fn(5, |_| QSqrt5::one());
        assert!(series_equal(&a, &c).is_err());
    }

    #[test]
    fn parity_identity_vanishes_for_even_k() {
        let r = parity_identity_check(&|n| QSqrt5::from_int(n), 2, 100).unwrap();
        assert!(r.coeffs.iter().all(|c| c.is_zero()));
        let r = parity_identity_check(&fib_q5, 4, 100).unwrap();
        assert!(r.coeffs.iter().all(|c| c.is_zero()));
        assert!(parity_identity_check(&fib_q5, 3, 10).is_err());
    }

    #[test]
    fn linearity_of_floor_transform() {
        let f = |n: i64| QSqrt5::from_int(n * n - 3);
        let g = |n: i64| fib_q5(n);
        let combo = |n: i64| &f(n) + &g(n).scale(&rat(2, 3));
        let order = 80;
        for k in 1..=5 {
            let lhs = floor_transform_seq(&combo, k, order);
            let rhs = floor_transform_seq(&f, k, order).add(
                &floor_transform_seq(&g, k, order).scale(&QSqrt5::from_rational(rat(2, 3))),
            );
            assert_eq!(series_equal(&lhs, &rhs).unwrap(), SeriesCmp::Equal);
        }
    }
}
