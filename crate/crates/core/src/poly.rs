//! Integral polynomials in the named characteristic-class generators.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    P1,
    C1,
    C2,
    C3,
    U,
}

impl Generator {
    pub const ALL: [Generator; 5] = [Generator::P1, Generator::C1, Generator::C2, Generator::C3, Generator::U];

    pub fn name(&self) -> &'static str {
        match self {
            Generator::P1 => "p1",
            Generator::C1 => "c1",
            Generator::C2 => "c2",
            Generator::C3 => "c3",
            Generator::U => "u",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == name)
            .ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown generator '{name}'")))
    }
}

/// Exponent vector; generators with exponent zero are never stored.
pub type Monomial = BTreeMap<Generator, u32>;

/// Sparse polynomial with big-integer coefficients and no zero terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, &[])
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(1, &[(g, 1)])
    }

    /// `c * prod g^e`.
    pub fn term(c: impl Into<BigInt>, powers: &[(Generator, u32)]) -> Self {
        let mut p = Self::zero();
        let mono: Monomial = powers.iter().copied().filter(|&(_, e)| e > 0).collect();
        p.add_term(mono, c.into());
        p
    }

    fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            let m = m.into_iter().filter(|&(_, e)| e > 0).collect();
            p.add_term(m, c);
        }
        p
    }

    pub fn coefficient(&self, powers: &[(Generator, u32)]) -> BigInt {
        let mono: Monomial = powers.iter().copied().filter(|&(_, e)| e > 0).collect();
        self.terms.get(&mono).cloned().unwrap_or_default()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(1), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, v)| (m.clone(), v * c)))
    }

    /// Replaces every generator by the given polynomial (identity when absent).
    pub fn substitute(&self, images: &BTreeMap<Generator, IntPolynomial>) -> Self {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (&g, &e) in mono {
                let img = images.get(&g).cloned().unwrap_or_else(|| Self::generator(g));
                t = &t * &img.pow(e);
            }
            out = out + t;
        }
        out
    }

    /// Evaluation at integer values; missing generators count as zero.
    pub fn evaluate(&self, values: &BTreeMap<Generator, BigInt>) -> BigInt {
        self.terms
            .iter()
            .map(|(mono, c)| {
                mono.iter().fold(c.clone(), |acc, (g, &e)| acc * values.get(g).cloned().unwrap_or_default().pow(e))
            })
            .sum()
    }

    pub fn generators(&self) -> Vec<Generator> {
        let mut gens: Vec<Generator> = self.terms.keys().flat_map(|m| m.keys().copied()).collect();
        gens.sort();
        gens.dedup();
        gens
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        self + (-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let mut m = m1.clone();
                for (&g, &e) in m2 {
                    *m.entry(g).or_insert(0) += e;
                }
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest total degree first
        let mut terms: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| core::cmp::Reverse(m.values().sum::<u32>()));
        for (i, (mono, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            for (j, (g, e)) in mono.iter().enumerate() {
                if j > 0 {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "{}", g.name())?;
                } else {
                    write!(f, "{}^{}", g.name(), e)?;
                }
            }
        }
        Ok(())
    }
}

/// Polynomial in `c2, c3` modulo `2*c3 = 0`.
///
/// Canonical form: every monomial containing `c3` has coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QuotientedPolynomial {
    base: IntPolynomial,
}

impl QuotientedPolynomial {
    pub fn new(p: IntPolynomial) -> Result<Self> {
        if let Some(g) = p.generators().into_iter().find(|g| !matches!(g, Generator::C2 | Generator::C3)) {
            return Err(Error::InvalidArgument(alloc::format!(
                "generator {} does not live in the c2, c3 quotient ring",
                g.name()
            )));
        }
        let two = BigInt::from(2);
        let reduced = IntPolynomial::from_terms(p.terms.into_iter().map(|(m, c)| {
            if m.contains_key(&Generator::C3) {
                let r = c.mod_floor(&two);
                (m, r)
            } else {
                (m, c)
            }
        }));
        Ok(QuotientedPolynomial { base: reduced })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn as_polynomial(&self) -> &IntPolynomial {
        &self.base
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.base.scale(c)).expect("scaling keeps the generators")
    }
}

impl Add for QuotientedPolynomial {
    type Output = QuotientedPolynomial;

    fn add(self, rhs: QuotientedPolynomial) -> QuotientedPolynomial {
        QuotientedPolynomial::new(self.base + rhs.base).expect("sum keeps the generators")
    }
}

impl Sub for QuotientedPolynomial {
    type Output = QuotientedPolynomial;

    fn sub(self, rhs: QuotientedPolynomial) -> QuotientedPolynomial {
        QuotientedPolynomial::new(self.base - rhs.base).expect("difference keeps the generators")
    }
}

impl fmt::Display for QuotientedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.base.fmt(f)
    }
}
