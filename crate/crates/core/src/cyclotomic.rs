//! Exact arithmetic in `Z[zeta_m]`, power basis modulo the m-th cyclotomic polynomial.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

/// Coefficients of `Phi_m`, lowest degree first.
pub fn cyclotomic_polynomial(m: u64) -> Vec<i64> {
    assert!(m >= 1, "cyclotomic index must be >= 1");
    // x^m - 1 = prod_{d | m} Phi_d
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = divide_exact(&num, &cyclotomic_polynomial(d));
    }
    num
}

/// Exact division by a monic polynomial.
fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; rem.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division was not exact");
    quot
}

/// Euler's totient, the degree of `Phi_m`.
pub fn totient(m: u64) -> u64 {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count() as u64
}

/// An element of `Z[zeta_m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInteger {
    m: u64,
    coeffs: Vec<i64>,
}

impl CyclotomicInteger {
    pub fn zero(m: u64) -> Self {
        CyclotomicInteger { m, coeffs: vec![0; totient(m) as usize] }
    }

    pub fn from_integer(m: u64, c: i64) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = c;
        z
    }

    /// `zeta_m^e` for any integer exponent.
    pub fn zeta_power(m: u64, e: i64) -> Self {
        let e = e.rem_euclid(m as i64) as usize;
        let mut raw = vec![0i64; e + 1];
        raw[e] = 1;
        Self::reduce(m, raw)
    }

    fn reduce(m: u64, mut raw: Vec<i64>) -> Self {
        let phi = cyclotomic_polynomial(m);
        let deg = phi.len() - 1;
        for i in (deg..raw.len()).rev() {
            let c = raw[i];
            if c != 0 {
                for (j, &p) in phi.iter().enumerate() {
                    raw[i - deg + j] -= c * p;
                }
            }
        }
        raw.resize(deg, 0);
        CyclotomicInteger { m, coeffs: raw }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, c: i64) -> Self {
        CyclotomicInteger { m: self.m, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// The rational integer this element equals, if any.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then(|| self.coeffs[0])
    }
}

impl Add for &CyclotomicInteger {
    type Output = CyclotomicInteger;

    fn add(self, rhs: &CyclotomicInteger) -> CyclotomicInteger {
        assert_eq!(self.m, rhs.m);
        CyclotomicInteger { m: self.m, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &CyclotomicInteger {
    type Output = CyclotomicInteger;

    fn sub(self, rhs: &CyclotomicInteger) -> CyclotomicInteger {
        self + &rhs.scale(-1)
    }
}

impl Mul for &CyclotomicInteger {
    type Output = CyclotomicInteger;

    fn mul(self, rhs: &CyclotomicInteger) -> CyclotomicInteger {
        assert_eq!(self.m, rhs.m);
        let mut raw = vec![0i64; self.coeffs.len() + rhs.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        CyclotomicInteger::reduce(self.m, raw)
    }
}
