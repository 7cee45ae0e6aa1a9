//! Characteristic classes of genus-0 and genus-1 universal surface bundles.
//!
//! The vertical Euler class of the universal sphere bundle is taken as `+z`.
//! Even classes do not see the sign and odd classes vanish, so none of the
//! values below depend on that choice.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Generator, IntPolynomial, QuotientedPolynomial};

fn gen(g: Generator) -> IntPolynomial {
    IntPolynomial::generator(g)
}

/// `kappa_n` of the universal oriented sphere bundle over BSO(3), from
/// `kappa_{n+2} = p1 * kappa_n`, `kappa_0 = 2`, `kappa_1 = 0`.
pub fn sphere_kappa(n: u32) -> IntPolynomial {
    let p1 = gen(Generator::P1);
    let mut even = IntPolynomial::constant(2);
    let mut odd = IntPolynomial::zero();
    for _ in 0..n / 2 {
        even = &p1 * &even;
        odd = &p1 * &odd;
    }
    if n.is_multiple_of(2) {
        even
    } else {
        odd
    }
}

/// `0` for odd `n`, `2 p1^k` for `n = 2k`.
pub fn sphere_kappa_closed(n: u32) -> IntPolynomial {
    if n % 2 == 1 {
        IntPolynomial::zero()
    } else {
        IntPolynomial::term(2, &[(Generator::P1, n / 2)])
    }
}

/// `kappa_n` of the projective bundle of a rank-2 complex bundle.
pub fn proj_bundle_kappa(n: u32) -> IntPolynomial {
    if n % 2 == 1 {
        return IntPolynomial::zero();
    }
    let c1 = gen(Generator::C1);
    let disc = &c1 * &c1 - IntPolynomial::term(4, &[(Generator::C2, 1)]);
    disc.pow(n / 2).scale(&BigInt::from(2))
}

/// `kappa_n` of the universal spin sphere bundle over HP^infinity.
pub fn hp_infinity_kappa(n: u32) -> IntPolynomial {
    if n % 2 == 1 {
        return IntPolynomial::zero();
    }
    let m = n / 2;
    let magnitude = BigInt::from(1) << (2 * m + 1);
    let coeff = if m.is_multiple_of(2) { magnitude } else { -magnitude };
    IntPolynomial::term(coeff, &[(Generator::U, m)])
}

/// `proj_bundle_kappa(n)` restricted along `c1 -> 0, c2 -> u`.
pub fn proj_at_hp_infinity(n: u32) -> IntPolynomial {
    let mut images = BTreeMap::new();
    images.insert(Generator::C1, IntPolynomial::zero());
    images.insert(Generator::C2, gen(Generator::U));
    proj_bundle_kappa(n).substitute(&images)
}

/// Integral lifts `lambda_0..=lambda_n` of the analytic classes, as
/// polynomials in `c2 = c2(V⊗C)` and `c3 = c3(V⊗C)`.
///
/// `lambda_0 = 2` is the rank of the index bundle (3) minus the trivial line.
/// From `n = 4` on, `lambda_n = -c2 lambda_{n-2} + c3 lambda_{n-3}`.
pub fn sphere_lambda_integral_table(n: u32) -> Vec<IntPolynomial> {
    let c2 = gen(Generator::C2);
    let c3 = gen(Generator::C3);
    let mut table = Vec::with_capacity(n as usize + 1);
    for i in 0..=n as usize {
        let next = match i {
            0 => IntPolynomial::constant(2),
            1 => IntPolynomial::zero(),
            2 => IntPolynomial::term(-2, &[(Generator::C2, 1)]),
            3 => IntPolynomial::term(3, &[(Generator::C3, 1)]),
            _ => &c3 * &table[i - 3] - &c2 * &table[i - 2],
        };
        table.push(next);
    }
    table
}

pub fn sphere_lambda_integral(n: u32) -> IntPolynomial {
    sphere_lambda_integral_table(n).pop().expect("table has n + 1 entries")
}

/// `lambda_n` in `Z[c2, c3] / (2 c3)`.
pub fn sphere_lambda(n: u32) -> QuotientedPolynomial {
    QuotientedPolynomial::new(sphere_lambda_integral(n)).expect("lambda lives in c2, c3")
}

/// Image of `sphere_kappa(n)` in the quotient ring under `p1 -> -c2`.
pub fn sphere_kappa_in_quotient(n: u32) -> QuotientedPolynomial {
    let mut images = BTreeMap::new();
    images.insert(Generator::P1, -gen(Generator::C2));
    QuotientedPolynomial::new(sphere_kappa(n).substitute(&images)).expect("kappa maps into c2")
}

/// `lambda_n - kappa_n` in the quotient ring.
pub fn lambda_kappa_difference(n: u32) -> QuotientedPolynomial {
    sphere_lambda(n) - sphere_kappa_in_quotient(n)
}

/// All topological MMM-classes of torus bundles vanish.
pub fn torus_kappa(_n: u32) -> IntPolynomial {
    IntPolynomial::zero()
}

/// `lambda_n = (-1)^n (1 - 2^n) u^n` for torus bundles.
pub fn torus_lambda(n: u32) -> IntPolynomial {
    let base = BigInt::from(1) - (BigInt::from(1) << n);
    let coeff = if n.is_multiple_of(2) { base } else { -base };
    IntPolynomial::term(coeff, &[(Generator::U, n)])
}

/// `dim ker dbar` on the `m`-th power of the canonical bundle of a genus-`g` surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RiemannRochDim {
    pub genus: u64,
    pub power: i64,
    pub dimension: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RrRow {
    PowerZero,
    PowerOne,
    GenusZeroNonPositive,
    GenusZeroPositive,
    GenusOne,
    HighGenusNegative,
    HighGenusLarge,
}

impl RrRow {
    const ALL: [RrRow; 7] = [
        RrRow::PowerZero,
        RrRow::PowerOne,
        RrRow::GenusZeroNonPositive,
        RrRow::GenusZeroPositive,
        RrRow::GenusOne,
        RrRow::HighGenusNegative,
        RrRow::HighGenusLarge,
    ];

    fn applies(self, g: u64, m: i64) -> bool {
        match self {
            RrRow::PowerZero => m == 0,
            RrRow::PowerOne => m == 1,
            RrRow::GenusZeroNonPositive => g == 0 && m <= 0,
            RrRow::GenusZeroPositive => g == 0 && m > 0,
            RrRow::GenusOne => g == 1,
            RrRow::HighGenusNegative => g >= 2 && m < 0,
            RrRow::HighGenusLarge => g >= 2 && m >= 2,
        }
    }

    fn value(self, g: u64, m: i64) -> u64 {
        match self {
            RrRow::PowerZero => 1,
            RrRow::PowerOne => g,
            RrRow::GenusZeroNonPositive => (1 - 2 * m) as u64,
            RrRow::GenusZeroPositive => 0,
            RrRow::GenusOne => 1,
            RrRow::HighGenusNegative => 0,
            RrRow::HighGenusLarge => (2 * m as u64 - 1) * (g - 1),
        }
    }
}

/// Piecewise dimension formula. Rows are tried in order: `m = 0`, `m = 1`,
/// then the genus-specific rows.
///
/// On the sphere `Lambda^m = O(-2m)`, so the genus-0 row for `m <= 0` is `1 - 2m`.
pub fn riemann_roch_dim(genus: u64, power: i64) -> RiemannRochDim {
    let row = RrRow::ALL.into_iter().find(|r| r.applies(genus, power)).expect("rows cover every (g, m)");
    RiemannRochDim { genus, power, dimension: row.value(genus, power) }
}

/// Every row that applies to `(g, m)` must give the same dimension.
pub fn riemann_roch_overlaps_consistent(max_genus: u64, power_range: core::ops::RangeInclusive<i64>) -> Result<()> {
    for g in 0..=max_genus {
        for m in power_range.clone() {
            let mut values = RrRow::ALL.into_iter().filter(|r| r.applies(g, m)).map(|r| r.value(g, m));
            let first = values.next().expect("at least one row applies");
            if values.any(|v| v != first) {
                return Err(Error::InvalidArgument(alloc::format!("rows disagree at g={g}, m={m}")));
            }
        }
    }
    Ok(())
}

/// Kernel, Serre-dual cokernel and index of `dbar` on `Lambda^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RiemannRochIndex {
    pub kernel: u64,
    pub cokernel: u64,
    pub index: i64,
    pub expected_index: i64,
}

pub fn riemann_roch_index(genus: u64, power: i64) -> RiemannRochIndex {
    let kernel = riemann_roch_dim(genus, power).dimension;
    let cokernel = riemann_roch_dim(genus, 1 - power).dimension;
    RiemannRochIndex {
        kernel,
        cokernel,
        index: kernel as i64 - cokernel as i64,
        expected_index: (2 * power - 1) * (genus as i64 - 1),
    }
}

/// `dim ker - dim coker = (2m - 1)(g - 1)` with the cokernel taken by Serre duality.
pub fn serre_duality_check(genus: u64, power: i64) -> bool {
    let r = riemann_roch_index(genus, power);
    r.index == r.expected_index
}
