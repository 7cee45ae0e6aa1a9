//! Exact rationals, the Todd series and the Bernoulli-denominator bounds on
//! MMM-classes.
//!
//! Bernoulli numbers use the positive convention
//! `z/(1 - e^{-z}) = 1 + z/2 + sum_{k>=1} (-1)^{k+1} B_k/(2k)! z^{2k}`,
//! so `B_1 = 1/6`, `B_2 = 1/30`, `B_3 = 1/42`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// An element of Q/Z, held by its representative in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModZValue(BigRational);

impl ModZValue {
    pub fn new(value: BigRational) -> Self {
        let floor = value.floor();
        ModZValue(value - floor)
    }

    pub fn zero() -> Self {
        ModZValue(BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(rational(num, den))
    }

    pub fn residue(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Negative representative in `(-1/2, 0)`, when the canonical one exceeds 1/2.
    pub fn alias(&self) -> Option<BigRational> {
        if self.0 > rational(1, 2) {
            Some(&self.0 - BigRational::one())
        } else {
            None
        }
    }

    /// `factor * self`.
    pub fn scale(&self, factor: &BigInt) -> Self {
        Self::new(&self.0 * BigRational::from_integer(factor.clone()))
    }

    /// Least `m <= cap` with `m * self = 0` in Q/Z.
    pub fn order(&self, cap: u64) -> Option<u64> {
        // the order is exactly the reduced denominator
        let den = self.0.denom();
        (1..=cap).find(|&m| (BigInt::from(m) % den).is_zero())
    }
}

impl Add for ModZValue {
    type Output = ModZValue;

    fn add(self, rhs: ModZValue) -> ModZValue {
        ModZValue::new(self.0 + rhs.0)
    }
}

impl Sub for ModZValue {
    type Output = ModZValue;

    fn sub(self, rhs: ModZValue) -> ModZValue {
        ModZValue::new(self.0 - rhs.0)
    }
}

impl Neg for ModZValue {
    type Output = ModZValue;

    fn neg(self) -> ModZValue {
        ModZValue::new(-self.0)
    }
}

impl fmt::Debug for ModZValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModZValue({})", self.0)
    }
}

impl fmt::Display for ModZValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn modz_add(a: &ModZValue, b: &ModZValue) -> ModZValue {
    a.clone() + b.clone()
}

pub fn modz_scale(v: &ModZValue, factor: i64) -> ModZValue {
    v.scale(&BigInt::from(factor))
}

pub fn modz_order(v: &ModZValue, cap: u64) -> Result<Option<u64>> {
    if cap == 0 {
        return Err(Error::InvalidArgument("order cap must be >= 1".into()));
    }
    Ok(v.order(cap))
}

/// Coefficients of `z/(1 - e^{-z})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToddSeries {
    coefficients: Vec<BigRational>,
}

impl ToddSeries {
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn max_degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, degree: usize) -> Option<&BigRational> {
        self.coefficients.get(degree)
    }
}

/// Inverts `(1 - e^{-z})/z = sum_k (-1)^k z^k/(k+1)!` as a power series.
pub fn todd_coefficients(max_degree: usize) -> ToddSeries {
    let denominator: Vec<BigRational> = (0..=max_degree as u64)
        .map(|k| {
            let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            BigRational::new(sign, factorial(k + 1))
        })
        .collect();
    let mut inverse: Vec<BigRational> = Vec::with_capacity(max_degree + 1);
    inverse.push(BigRational::one());
    for n in 1..=max_degree {
        let acc = (1..=n).fold(BigRational::zero(), |acc, i| acc + &denominator[i] * &inverse[n - i]);
        inverse.push(-acc);
    }
    ToddSeries { coefficients: inverse }
}

fn require_positive(k: u64, what: &str) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument(alloc::format!("{what} must be >= 1")));
    }
    Ok(())
}

/// Positive Bernoulli number `B_k = (-1)^{k+1} (2k)! [z^{2k}] td(z)`.
pub fn bernoulli_paper(k: u64) -> Result<BigRational> {
    require_positive(k, "Bernoulli index")?;
    let todd = todd_coefficients(2 * k as usize);
    Ok(bernoulli_from_todd(&todd, k))
}

fn bernoulli_from_todd(todd: &ToddSeries, k: u64) -> BigRational {
    let c = &todd.coefficients[2 * k as usize] * BigRational::from_integer(factorial(2 * k));
    if k % 2 == 1 {
        c
    } else {
        -c
    }
}

/// All of `B_1..B_kmax` from a single series inversion.
pub fn bernoulli_table(kmax: u64) -> Vec<BigRational> {
    let todd = todd_coefficients(2 * kmax as usize);
    (1..=kmax).map(|k| bernoulli_from_todd(&todd, k)).collect()
}

/// `B_k / 2k` as an exact rational.
pub fn bernoulli_ratio(k: u64) -> Result<BigRational> {
    Ok(bernoulli_paper(k)? / integer(2 * k as i64))
}

/// Denominator of `B_k / 2k`, read off the exact rational.
pub fn bernoulli_ratio_den(k: u64) -> Result<BigInt> {
    Ok(bernoulli_ratio(k)?.denom().clone())
}

/// Exponent of the prime `p` in `n` (`n != 0`).
pub fn p_adic_valuation(p: u64, n: u64) -> u32 {
    debug_assert!(p >= 2 && n != 0);
    let mut m = n;
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    v
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Product formula `prod_{(p-1) | 2k} p^{1 + nu_p(2k)}`.
pub fn von_staudt_den(k: u64) -> Result<BigInt> {
    require_positive(k, "von Staudt index")?;
    let two_k = 2 * k;
    let product = (2..=two_k + 1)
        .filter(|&p| is_prime(p) && two_k.is_multiple_of(p - 1))
        .fold(BigInt::one(), |acc, p| acc * BigInt::from(p).pow(1 + p_adic_valuation(p, two_k)));
    Ok(product)
}

/// Both routes to `den(B_k/2k)` side by side; the exact rational is authoritative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VonStaudtCheck {
    pub k: u64,
    pub product_formula: BigInt,
    pub exact: BigInt,
}

impl VonStaudtCheck {
    pub fn agrees(&self) -> bool {
        self.product_formula == self.exact
    }
}

pub fn von_staudt_check(k: u64) -> Result<VonStaudtCheck> {
    Ok(VonStaudtCheck { k, product_formula: von_staudt_den(k)?, exact: bernoulli_ratio_den(k)? })
}

/// Maximal divisor `D_n` of `kappa_n` for oriented surface bundles.
pub fn divisor_oriented(n: u64) -> Result<BigInt> {
    require_positive(n, "MMM index")?;
    if n.is_multiple_of(2) {
        Ok(BigInt::from(2))
    } else {
        bernoulli_ratio_den(n.div_ceil(2))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinMaximality {
    ProvenMaximal,
    LowerBoundOnly,
}

/// Divisibility of `kappa_n` for oriented and for spin surface bundles.
///
/// `spin_divisor = 2^two_exponent * den(B_m/2m)` when `bernoulli_index` is
/// `Some(m)`, and `2^two_exponent` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityBound {
    pub index: u64,
    pub oriented_divisor: BigInt,
    pub spin_divisor: BigInt,
    pub two_exponent: u32,
    pub bernoulli_index: Option<u64>,
    pub spin_maximality: SpinMaximality,
}

impl DivisibilityBound {
    /// `spin_divisor / oriented_divisor`, if it is a power of two.
    pub fn quotient_two_power(&self) -> Option<u64> {
        let (q, r) = self.spin_divisor.div_rem(&self.oriented_divisor);
        if !r.is_zero() || !q.is_positive() {
            return None;
        }
        let bits = q.bits();
        (q == BigInt::one() << (bits - 1)).then_some(bits - 1)
    }
}

pub fn divisor_spin(n: u64) -> Result<DivisibilityBound> {
    let oriented = divisor_oriented(n)?;
    let bound = if n.is_multiple_of(2) {
        let exp = (n + 1) as u32;
        DivisibilityBound {
            index: n,
            spin_divisor: BigInt::one() << exp,
            oriented_divisor: oriented,
            two_exponent: exp,
            bernoulli_index: None,
            spin_maximality: SpinMaximality::ProvenMaximal,
        }
    } else {
        let m = n.div_ceil(2);
        let exp = (2 * m) as u32;
        DivisibilityBound {
            index: n,
            spin_divisor: (BigInt::one() << exp) * &oriented,
            oriented_divisor: oriented,
            two_exponent: exp,
            bernoulli_index: Some(m),
            spin_maximality: SpinMaximality::LowerBoundOnly,
        }
    };
    Ok(bound)
}

/// Coefficient relating `s_{2k-1}` of the Hodge bundle to `kappa_{2k-1}`,
/// read off the Todd series: `(2k-1)! [z^{2k}] td(z) = (-1)^{k+1} B_k/2k`.
pub fn mumford_coefficient(k: u64) -> Result<BigRational> {
    require_positive(k, "Mumford index")?;
    let todd = todd_coefficients(2 * k as usize);
    Ok(&todd.coefficients[2 * k as usize] * BigRational::from_integer(factorial(2 * k - 1)))
}

/// Checks `|s_{2k-1} / kappa_{2k-1}| = B_k/2k`.
pub fn mumford_identity_holds(k: u64) -> Result<bool> {
    Ok(mumford_coefficient(k)?.abs() == bernoulli_ratio(k)?)
}
