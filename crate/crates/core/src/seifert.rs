//! Seifert homology spheres and the Jones–Westbury e-invariant of flat bundles
//! over them, with the icosahedral examples.
//!
//! Eigenvalues of `rho(x_j)` are written `lambda_k(j) = zeta_{N a_j}^{N s_k(j) - b_j r_h}`
//! where `rho(h) = zeta_N^{r_h}`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::CyclotomicInteger;
use crate::error::{Error, Result};
use crate::exact_arith::{integer, ModZValue};
use crate::icosa_group::regular_restriction_profile;

/// Order of `pi_3^s`, which every e-invariant here must annihilate.
pub const PI3_ORDER: u64 = 24;

/// Candidate vectors `multiplicity_solve` may visit before giving up.
pub const SEARCH_LIMIT: u128 = 100_000_000;

/// Exceptional fibers `(a_j, b_j)` of a Seifert fibration over the sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    pairs: Vec<(i64, i64)>,
}

impl SeifertData {
    pub fn new(pairs: Vec<(i64, i64)>) -> Result<Self> {
        for &(a, b) in &pairs {
            if a < 1 {
                return Err(Error::InvalidFiberOrder(a));
            }
            if a.gcd(&b) != 1 {
                return Err(Error::NonCoprimePair { a, b });
            }
        }
        Ok(SeifertData { pairs })
    }

    /// `{(2,-1), (3,1), (5,1)}`.
    pub fn poincare() -> Self {
        SeifertData { pairs: vec![(2, -1), (3, 1), (5, 1)] }
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn fiber_count(&self) -> usize {
        self.pairs.len()
    }

    /// `a = prod a_j`.
    pub fn a(&self) -> BigInt {
        self.pairs.iter().map(|&(a, _)| BigInt::from(a)).product()
    }

    /// `a * sum_j b_j / a_j`.
    pub fn homology_value(&self) -> BigRational {
        let sum = self
            .pairs
            .iter()
            .fold(BigRational::zero(), |acc, &(a, b)| acc + BigRational::new(b.into(), a.into()));
        sum * BigRational::from_integer(self.a())
    }
}

pub fn is_integral_homology_sphere(d: &SeifertData) -> bool {
    d.homology_value().abs().is_one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
}

fn power(base: &str, e: i64) -> String {
    match e {
        0 => String::from("1"),
        1 => String::from(base),
        _ => format!("{base}^{e}"),
    }
}

/// Generators `h, x_1..x_n`; relations `[h,x_i] = 1`, then `x_i^{a_i} = h^{-b_i}`,
/// then `x_1...x_n = 1`.
pub fn presentation(d: &SeifertData) -> Presentation {
    let n = d.pairs.len();
    let xs: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut generators = vec![String::from("h")];
    generators.extend(xs.iter().cloned());
    let mut relations: Vec<String> = xs.iter().map(|x| format!("[h,{x}] = 1")).collect();
    for (x, &(a, b)) in xs.iter().zip(&d.pairs) {
        relations.push(format!("{} = {}", power(x, a), power("h", -b)));
    }
    if n > 0 {
        relations.push(format!("{} = 1", xs.join("*")));
    }
    Presentation { generators, relations }
}

/// The values `s_1(j)..s_N(j)` for one exceptional fiber (`fiber` counts from 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueProfile {
    pub fiber: usize,
    pub s_values: Vec<BigRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralBehavior {
    /// `rho(h) = zeta_N^exponent`.
    Scalar { exponent: i64 },
    Trivial,
}

impl CentralBehavior {
    pub fn exponent(&self) -> i64 {
        match self {
            CentralBehavior::Scalar { exponent } => *exponent,
            CentralBehavior::Trivial => 0,
        }
    }
}

/// An `N`-dimensional unitary representation of the Seifert group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepSpec {
    pub dimension: u64,
    pub central: CentralBehavior,
    pub profiles: Vec<EigenvalueProfile>,
}

fn check_profiles(d: &SeifertData, spec: &RepSpec) -> Result<()> {
    if spec.profiles.len() != d.fiber_count() {
        return Err(Error::ProfileMismatch { expected: d.fiber_count(), found: spec.profiles.len() });
    }
    for (j, p) in spec.profiles.iter().enumerate() {
        if p.fiber != j + 1 {
            return Err(Error::InvalidArgument(format!("profile {} is labelled fiber {}", j + 1, p.fiber)));
        }
        if p.s_values.len() as u64 != spec.dimension {
            return Err(Error::DimensionMismatch { expected: spec.dimension as usize, found: p.s_values.len() });
        }
    }
    Ok(())
}

/// `2 Re(N e) = -a sum_j sum_{k,l} (s_k(j) - s_l(j))^2 / (2 a_j^2)` mod Z.
pub fn e_general(d: &SeifertData, spec: &RepSpec) -> Result<ModZValue> {
    check_profiles(d, spec)?;
    let a = BigRational::from_integer(d.a());
    let mut total = BigRational::zero();
    for (p, &(aj, _)) in spec.profiles.iter().zip(&d.pairs) {
        // sum_{k,l} (s_k - s_l)^2 = 2 N sum s^2 - 2 (sum s)^2
        let n = integer(p.s_values.len() as i64);
        let sum: BigRational = p.s_values.iter().sum();
        let squares: BigRational = p.s_values.iter().map(|s| s * s).sum();
        let pair_sum = integer(2) * (n * squares - &sum * &sum);
        total += pair_sum / integer(2 * aj * aj);
    }
    Ok(ModZValue::new(-(a * total)))
}

/// `e = -sum_j sum_k a s_k(j)^2 / (2 a_j^2)` mod Z, for representations trivial on `h`.
pub fn e_simple(d: &SeifertData, spec: &RepSpec) -> Result<ModZValue> {
    if spec.central.exponent().rem_euclid(spec.dimension.max(1) as i64) != 0 {
        return Err(Error::CentralBehavior("the simple formula needs h to act trivially"));
    }
    check_profiles(d, spec)?;
    let a = BigRational::from_integer(d.a());
    let mut total = BigRational::zero();
    for (p, &(aj, _)) in spec.profiles.iter().zip(&d.pairs) {
        let squares: BigRational = p.s_values.iter().map(|s| s * s).sum();
        total += squares / integer(2 * aj * aj);
    }
    Ok(ModZValue::new(-(a * total)))
}

/// `s = (t + b_j r_h) / N` with `t` the representative of each exponent in `[0, N a_j)`.
pub fn s_from_exponents(aj: i64, bj: i64, n: u64, r_h: i64, exponents: &[i64]) -> Result<Vec<BigRational>> {
    if aj < 1 {
        return Err(Error::InvalidFiberOrder(aj));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    let n = n as i64;
    exponents
        .iter()
        .map(|&e| {
            let t = e.rem_euclid(n * aj);
            let num = t + bj * r_h;
            if num % n != 0 {
                return Err(Error::NonIntegralS { exponent: e });
            }
            Ok(integer(num / n))
        })
        .collect()
}

/// Trace of a finite-order orientation-preserving surface map on `H_1`, by Lefschetz.
pub fn lefschetz_trace(fixed_points: u64) -> i64 {
    2 - fixed_points as i64
}

fn binomial_saturating(n: u128, k: u128) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
        if acc >= SEARCH_LIMIT * 1000 {
            return u128::MAX;
        }
    }
    acc
}

struct Orbit {
    members: Vec<usize>,
    zeta_sum: CyclotomicInteger,
}

/// Nonnegative multiplicities `mu_i` over `allowed` (same order) with
/// `sum mu_i = dimension` and `sum mu_i zeta_m^i = trace` exactly in `Z[zeta_m]`.
/// With `real`, also `mu_i = mu_{m-i}`.
pub fn multiplicity_solve(m: u64, dimension: u64, trace: i64, real: bool, allowed: &[u64]) -> Result<Vec<u64>> {
    if m == 0 {
        return Err(Error::InvalidArgument("element order must be >= 1".into()));
    }
    if allowed.is_empty() || allowed.iter().any(|&e| e >= m) {
        return Err(Error::InvalidArgument(format!("allowed exponents must be nonempty residues mod {m}")));
    }
    if allowed.iter().collect::<BTreeSet<_>>().len() != allowed.len() {
        return Err(Error::InvalidArgument("allowed exponents repeat".into()));
    }
    let mut orbits: Vec<Orbit> = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, &e) in allowed.iter().enumerate() {
        if !seen.insert(e) && real {
            continue;
        }
        let mut members = vec![i];
        if real {
            let partner = (m - e) % m;
            if partner != e {
                let j = allowed.iter().position(|&x| x == partner).ok_or_else(|| {
                    Error::InvalidArgument(format!("exponent {e} is allowed but its conjugate {partner} is not"))
                })?;
                seen.insert(partner);
                members.push(j);
            }
        }
        let zeta_sum = members.iter().fold(CyclotomicInteger::zero(m), |acc, &k| {
            &acc + &CyclotomicInteger::zeta_power(m, allowed[k] as i64)
        });
        orbits.push(Orbit { members, zeta_sum });
    }

    let vars = orbits.len() as u128;
    if binomial_saturating(dimension as u128 + vars - 1, vars - 1) > SEARCH_LIMIT {
        return Err(Error::SearchTooLarge);
    }

    let target = CyclotomicInteger::from_integer(m, trace);
    let mut solutions = Vec::new();
    let mut current = vec![0u64; orbits.len()];
    search(&orbits, 0, dimension, CyclotomicInteger::zero(m), &target, &mut current, &mut solutions);

    let expand = |orbit_mu: &[u64]| {
        let mut mu = vec![0u64; allowed.len()];
        for (o, &k) in orbits.iter().zip(orbit_mu) {
            for &i in &o.members {
                mu[i] = k;
            }
        }
        mu
    };
    match solutions.len() {
        0 => Err(Error::NoSolution),
        1 => Ok(expand(&solutions[0])),
        _ => Err(Error::MultipleSolutions(solutions.iter().map(|s| expand(s)).collect())),
    }
}

fn search(
    orbits: &[Orbit],
    idx: usize,
    remaining: u64,
    partial: CyclotomicInteger,
    target: &CyclotomicInteger,
    current: &mut Vec<u64>,
    solutions: &mut Vec<Vec<u64>>,
) {
    let weight = orbits[idx].members.len() as u64;
    if idx + 1 == orbits.len() {
        if !remaining.is_multiple_of(weight) {
            return;
        }
        let k = remaining / weight;
        let total = &partial + &orbits[idx].zeta_sum.scale(k as i64);
        if &total == target {
            current[idx] = k;
            solutions.push(current.clone());
        }
        return;
    }
    for k in 0..=remaining / weight {
        current[idx] = k;
        let next = &partial + &orbits[idx].zeta_sum.scale(k as i64);
        search(orbits, idx + 1, remaining - k * weight, next, target, current, solutions);
    }
}

/// How much the available data pins down the order of `e` in `pi_3^s = Z/24`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderReport {
    Exact(u64),
    /// Orders of all 24-torsion `e` compatible with what was computed.
    ConstraintSet(Vec<u64>),
}

/// A fully derived icosahedral example.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IcosahedralExample {
    pub index: u32,
    pub genus: u64,
    pub fixed_points: [u64; 3],
    pub data: SeifertData,
    pub spec: RepSpec,
    /// Per fiber: element order, allowed exponents and solved multiplicities.
    pub element_orders: Vec<u64>,
    pub allowed_exponents: Vec<Vec<u64>>,
    pub multiplicities: Vec<Vec<u64>>,
    /// `e` itself for trivial center, `2 Re(N e)` otherwise.
    pub value: ModZValue,
    pub order: OrderReport,
}

struct Canned {
    genus: u64,
    central: CentralBehavior,
    fixed_points: [u64; 3],
}

fn canned(k: u32) -> Result<Canned> {
    match k {
        1 => Ok(Canned { genus: 14, central: CentralBehavior::Scalar { exponent: 14 }, fixed_points: [2, 0, 0] }),
        2 => Ok(Canned { genus: 9, central: CentralBehavior::Trivial, fixed_points: [4, 2, 4] }),
        3 => Ok(Canned { genus: 5, central: CentralBehavior::Trivial, fixed_points: [4, 4, 2] }),
        _ => Err(Error::InvalidArgument(format!("no icosahedral example {k}"))),
    }
}

/// Builds a flat bundle from the action of the binary icosahedral group on
/// `H_1` of a surface and evaluates its e-invariant.
///
/// `rho(x_j)` has eigenvalues `zeta_{N a_j}^t` with `t = e N / o`, where
/// `o = N / gcd(N, r_h)`, `e` ranges over `Z/(a_j o)` and
/// `e = -b_j r_h / gcd(N, r_h) (mod o)` so that `x_j^{a_j} = h^{-b_j}` holds.
pub fn icosahedral_example(k: u32) -> Result<IcosahedralExample> {
    let c = canned(k)?;
    let data = SeifertData::poincare();
    let n = 2 * c.genus;
    let r_h = c.central.exponent();
    let g = (n as i64).gcd(&r_h);
    let o = n as i64 / g;
    let r_reduced = r_h / g;

    let mut element_orders = Vec::new();
    let mut allowed_exponents = Vec::new();
    let mut multiplicities = Vec::new();
    let mut profiles = Vec::new();
    for (j, (&(aj, bj), &f)) in data.pairs().iter().zip(&c.fixed_points).enumerate() {
        let m = aj * o;
        let residue = (-bj * r_reduced).rem_euclid(o);
        let allowed: Vec<u64> = (0..m).filter(|e| e % o == residue).map(|e| e as u64).collect();
        let mu = multiplicity_solve(m as u64, n, lefschetz_trace(f), true, &allowed)?;
        let exponents: Vec<i64> = allowed
            .iter()
            .zip(&mu)
            .flat_map(|(&e, &count)| core::iter::repeat_n(e as i64 * n as i64 / o, count as usize))
            .collect();
        let s_values = s_from_exponents(aj, bj, n, r_h, &exponents)?;
        profiles.push(EigenvalueProfile { fiber: j + 1, s_values });
        element_orders.push(m as u64);
        allowed_exponents.push(allowed);
        multiplicities.push(mu);
    }
    let spec = RepSpec { dimension: n, central: c.central, profiles };

    let (value, order) = match c.central {
        CentralBehavior::Trivial => {
            let e = e_simple(&data, &spec)?;
            let order = order_in_pi3(&e)?;
            (e, OrderReport::Exact(order))
        }
        CentralBehavior::Scalar { .. } => {
            let v = e_general(&data, &spec)?;
            let set = pi3_orders_with(&BigInt::from(2 * n), &v);
            (v, OrderReport::ConstraintSet(set))
        }
    };
    Ok(IcosahedralExample {
        index: k,
        genus: c.genus,
        fixed_points: c.fixed_points,
        data,
        spec,
        element_orders,
        allowed_exponents,
        multiplicities,
        value,
        order,
    })
}

/// Orders of the `e` in `(1/24)Z/Z` with `factor * e = v`, ascending.
pub fn pi3_orders_with(factor: &BigInt, v: &ModZValue) -> Vec<u64> {
    let orders: BTreeSet<u64> = (0..PI3_ORDER as i64)
        .map(|s| ModZValue::from_ratio(s, PI3_ORDER as i64))
        .filter(|e| &e.scale(factor) == v)
        .filter_map(|e| e.order(PI3_ORDER))
        .collect();
    orders.into_iter().collect()
}

/// Order of `e` in `pi_3^s = Z/24`.
pub fn order_in_pi3(e: &ModZValue) -> Result<u64> {
    if !e.scale(&BigInt::from(PI3_ORDER)).is_zero() {
        return Err(Error::NotTwentyFourTorsion);
    }
    Ok(e.order(PI3_ORDER).expect("24-torsion has order at most 24"))
}

/// The representation `2 * (pullback of the regular representation of A_5)`
/// of the Poincaré sphere group, as a `RepSpec` built from restriction profiles.
pub fn regular_rep_spec() -> Result<RepSpec> {
    let data = SeifertData::poincare();
    let mut profiles = Vec::new();
    let mut dimension = None;
    for (j, &(aj, _)) in data.pairs().iter().enumerate() {
        let profile = regular_restriction_profile(aj as u32)?;
        let dim = profile.dimension();
        if *dimension.get_or_insert(dim) != dim {
            return Err(Error::DimensionMismatch { expected: dimension.unwrap_or(0) as usize, found: dim as usize });
        }
        // trivial center: lambda = zeta_{a_j}^{s}, so s is the exponent itself
        let s_values = profile.exponents().into_iter().map(|e| integer(e as i64)).collect();
        profiles.push(EigenvalueProfile { fiber: j + 1, s_values });
    }
    Ok(RepSpec { dimension: dimension.unwrap_or(0), central: CentralBehavior::Trivial, profiles })
}

/// e-invariant of `2 * (pullback of the regular representation)`.
pub fn regular_increment() -> Result<ModZValue> {
    e_simple(&SeifertData::poincare(), &regular_rep_spec()?)
}

/// Example 3 stabilized by `n` copies of the doubled regular representation.
pub fn stabilized_e(n: u64) -> Result<ModZValue> {
    let base = icosahedral_example(3)?.value;
    let step = regular_increment()?;
    Ok(base + step.scale(&BigInt::from(n)))
}
