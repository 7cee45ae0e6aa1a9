//! The binary icosahedral group, modeled as SL2(F5).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::ops::Mul;

use crate::cyclotomic::CyclotomicInteger;
use crate::error::{Error, Result};

const P: u8 = 5;

/// A 2x2 matrix `[[a, b], [c, d]]` over F5 with determinant 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement2x2F5 {
    entries: [u8; 4],
}

impl GroupElement2x2F5 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let r = |x: i64| x.rem_euclid(P as i64) as u8;
        let e = [r(a), r(b), r(c), r(d)];
        let det = (e[0] as i64 * e[3] as i64 - e[1] as i64 * e[2] as i64).rem_euclid(P as i64);
        if det != 1 {
            return Err(Error::InvalidArgument(alloc::format!("determinant {det} != 1 over F5")));
        }
        Ok(GroupElement2x2F5 { entries: e })
    }

    pub const IDENTITY: GroupElement2x2F5 = GroupElement2x2F5 { entries: [1, 0, 0, 1] };
    pub const MINUS_IDENTITY: GroupElement2x2F5 = GroupElement2x2F5 { entries: [4, 0, 0, 4] };

    pub fn entries(&self) -> [u8; 4] {
        self.entries
    }

    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = self.entries;
        GroupElement2x2F5 { entries: [d, (P - b) % P, (P - c) % P, a] }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::IDENTITY, |acc, _| acc * *self)
    }

    pub fn order(&self) -> u32 {
        let mut x = *self;
        let mut n = 1;
        while x != Self::IDENTITY {
            x = x * *self;
            n += 1;
        }
        n
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other * self.inverse() * other.inverse()
    }

    /// The image `{g, -g}` in the icosahedral group.
    pub fn central_class(&self) -> [Self; 2] {
        let neg = *self * Self::MINUS_IDENTITY;
        if neg < *self {
            [neg, *self]
        } else {
            [*self, neg]
        }
    }
}

impl Mul for GroupElement2x2F5 {
    type Output = GroupElement2x2F5;

    fn mul(self, rhs: Self) -> Self {
        let [a, b, c, d] = self.entries.map(u16::from);
        let [e, f, g, h] = rhs.entries.map(u16::from);
        let p = P as u16;
        GroupElement2x2F5 {
            entries: [
                ((a * e + b * g) % p) as u8,
                ((a * f + b * h) % p) as u8,
                ((c * e + d * g) % p) as u8,
                ((c * f + d * h) % p) as u8,
            ],
        }
    }
}

/// All 120 elements, sorted.
pub fn enumerate_group() -> Vec<GroupElement2x2F5> {
    let mut out = Vec::with_capacity(120);
    for a in 0..5 {
        for b in 0..5 {
            for c in 0..5 {
                for d in 0..5 {
                    if let Ok(g) = GroupElement2x2F5::new(a, b, c, d) {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

pub fn center(group: &[GroupElement2x2F5]) -> Vec<GroupElement2x2F5> {
    group.iter().copied().filter(|z| group.iter().all(|g| *z * *g == *g * *z)).collect()
}

/// Closure of a generating set under multiplication. Inside a finite group
/// this is the generated subgroup.
pub fn generated_subgroup(generators: &[GroupElement2x2F5]) -> BTreeSet<GroupElement2x2F5> {
    let mut set: BTreeSet<_> = BTreeSet::new();
    set.insert(GroupElement2x2F5::IDENTITY);
    let mut frontier: Vec<_> = alloc::vec![GroupElement2x2F5::IDENTITY];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = x * *g;
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Whether the commutators of `subgroup` generate all of `subgroup`.
pub fn is_perfect(subgroup: &[GroupElement2x2F5]) -> bool {
    let commutators: BTreeSet<_> =
        subgroup.iter().flat_map(|x| subgroup.iter().map(move |y| x.commutator(y))).collect();
    let commutators: Vec<_> = commutators.into_iter().collect();
    let derived = generated_subgroup(&commutators);
    let whole: BTreeSet<_> = subgroup.iter().copied().collect();
    derived == whole
}

pub fn verify_perfect() -> bool {
    is_perfect(&enumerate_group())
}

pub fn element_order_census() -> BTreeMap<u32, usize> {
    let mut census = BTreeMap::new();
    for g in enumerate_group() {
        *census.entry(g.order()).or_insert(0) += 1;
    }
    census
}

/// Matrices realizing `x1^2 = x2^3 = x3^5 = h = -1`, `x1 x2 x3 = 1`.
///
/// With `h` of order two, `x_i^{a_i} = h^{-b_i}` for the Poincaré pairs
/// `(2,-1), (3,1), (5,1)` reads `x1^2 = h`, `x2^3 = h^{-1} = h`, `x3^5 = h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PresentationWitness {
    pub h: GroupElement2x2F5,
    pub x1: GroupElement2x2F5,
    pub x2: GroupElement2x2F5,
    pub x3: GroupElement2x2F5,
}

impl PresentationWitness {
    pub fn satisfies_relations(&self) -> bool {
        let h = self.h;
        let commute = [self.x1, self.x2, self.x3].iter().all(|x| x.commutator(&h) == GroupElement2x2F5::IDENTITY);
        commute
            && self.x1 * self.x2 * self.x3 == GroupElement2x2F5::IDENTITY
            && self.x1.pow(2) == h
            && self.x2.pow(3) == h.inverse()
            && self.x3.pow(5) == h.inverse()
    }

    pub fn generates_group(&self) -> bool {
        generated_subgroup(&[self.x1, self.x2, self.x3]).len() == 120
    }
}

/// First triple (in sorted element order) of orders 4, 6, 10 satisfying the relations.
pub fn find_presentation_witness() -> Option<PresentationWitness> {
    let group = enumerate_group();
    let h = GroupElement2x2F5::MINUS_IDENTITY;
    for &x1 in group.iter().filter(|g| g.order() == 4) {
        for &x2 in group.iter().filter(|g| g.order() == 6) {
            let x3 = (x1 * x2).inverse();
            let w = PresentationWitness { h, x1, x2, x3 };
            if x3.order() == 10 && w.satisfies_relations() {
                return Some(w);
            }
        }
    }
    None
}

/// Restriction of `2 * (pullback of the regular representation of G)` to a
/// cyclic subgroup of order `m` of `G = SL2(F5)/{±1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionProfile {
    pub subgroup_order: u32,
    /// Lift in SL2(F5) of the chosen generator of the subgroup.
    pub generator: GroupElement2x2F5,
    /// `multiplicities[j]` = multiplicity of the eigenvalue `zeta_m^j`.
    pub multiplicities: Vec<u64>,
}

impl RestrictionProfile {
    pub fn dimension(&self) -> u64 {
        self.multiplicities.iter().sum()
    }

    /// Copies of the regular representation of `Z/m`, if the profile is a multiple of it.
    pub fn regular_copies(&self) -> Option<u64> {
        let first = self.multiplicities[0];
        self.multiplicities.iter().all(|&k| k == first).then_some(first)
    }

    /// Exponent list with multiplicity, `0..m` in increasing order.
    pub fn exponents(&self) -> Vec<u64> {
        self.multiplicities.iter().enumerate().flat_map(|(j, &k)| core::iter::repeat_n(j as u64, k as usize)).collect()
    }
}

/// Character of `2 * phi^* Z[G]` at `x`: twice the number of cosets `g{±1}` fixed by left multiplication.
pub fn doubled_regular_character(group: &[GroupElement2x2F5], x: &GroupElement2x2F5) -> i64 {
    let cosets: BTreeSet<[GroupElement2x2F5; 2]> = group.iter().map(|g| g.central_class()).collect();
    let fixed = cosets.iter().filter(|c| (*x * c[0]).central_class() == **c).count() as i64;
    2 * fixed
}

/// Decomposes the restriction by characters:
/// `mu_j = (1/m) sum_k chi(y^k) zeta_m^{-jk}`, evaluated exactly in `Z[zeta_m]`.
pub fn regular_restriction_profile(subgroup_order: u32) -> Result<RestrictionProfile> {
    if !matches!(subgroup_order, 2 | 3 | 5) {
        return Err(Error::InvalidArgument(alloc::format!(
            "subgroup order {subgroup_order} is not one of 2, 3, 5"
        )));
    }
    let m = subgroup_order;
    let group = enumerate_group();
    // a noncentral element whose m-th power is central has image of order m in G
    let identity_class = GroupElement2x2F5::IDENTITY.central_class();
    let generator = *group
        .iter()
        .find(|g| g.central_class() != identity_class && g.pow(m).central_class() == identity_class)
        .expect("SL2(F5) has elements of every such order");
    let characters: Vec<i64> = (0..m).map(|k| doubled_regular_character(&group, &generator.pow(k))).collect();
    let mut multiplicities = Vec::with_capacity(m as usize);
    for j in 0..m as i64 {
        let sum = (0..m as i64).fold(CyclotomicInteger::zero(m as u64), |acc, k| {
            &acc + &CyclotomicInteger::zeta_power(m as u64, -j * k).scale(characters[k as usize])
        });
        let total = sum.as_integer().expect("character sums of a permutation module are rational");
        debug_assert_eq!(total % m as i64, 0);
        multiplicities.push((total / m as i64) as u64);
    }
    Ok(RestrictionProfile { subgroup_order: m, generator, multiplicities })
}
