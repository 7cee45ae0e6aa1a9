//! Quadratic refinements of symplectic forms over F2.
//!
//! Vectors of the 2g-dimensional space live in a single `u64`. Bit `i` for
//! `i < g` is the coordinate along `a_{i+1}`, bit `g + i` the coordinate
//! along `b_{i+1}`. A form is stored by its values on that standard basis;
//! everything else follows from `q(x + y) = q(x) + q(y) + x.y`.

use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Add;

use crate::error::{Error, Result};

/// Largest genus representable in a machine word.
pub const MAX_GENUS: usize = 32;

/// Default bound on the genus for exhaustive enumerations.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

#[inline]
fn parity(x: u64) -> bool {
    x.count_ones() & 1 == 1
}

#[inline]
fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

fn check_genus(genus: usize) -> Result<()> {
    if genus == 0 || genus > MAX_GENUS {
        return Err(Error::InvalidGenus(genus));
    }
    Ok(())
}

/// Standard symplectic pairing of two packed vectors of genus `genus`.
#[inline]
pub(crate) fn standard_dot(genus: usize, x: u64, y: u64) -> bool {
    let m = low_mask(genus);
    let (xa, xb) = (x & m, (x >> genus) & m);
    let (ya, yb) = (y & m, (y >> genus) & m);
    parity((xa & yb) ^ (xb & ya))
}

/// Configurable bound for the exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_genus: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { max_genus: DEFAULT_ENUMERATION_CAP }
    }
}

impl EnumerationConfig {
    fn check(&self, genus: usize) -> Result<()> {
        // 2^{2g} must fit the loop counter regardless of the configured cap.
        if genus > self.max_genus || genus > 31 {
            return Err(Error::EnumerationCap { genus, cap: self.max_genus.min(31) });
        }
        Ok(())
    }
}

/// A vector of the 2g-dimensional F2 space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vector {
    genus: usize,
    bits: u64,
}

impl F2Vector {
    pub fn new(genus: usize, bits: u64) -> Result<Self> {
        check_genus(genus)?;
        if bits & !low_mask(2 * genus) != 0 {
            return Err(Error::DimensionMismatch { expected: 2 * genus, found: 64 - bits.leading_zeros() as usize });
        }
        Ok(F2Vector { genus, bits })
    }

    pub fn zero(genus: usize) -> Result<Self> {
        Self::new(genus, 0)
    }

    /// The basis vector `a_i` (1-based).
    pub fn a(genus: usize, i: usize) -> Result<Self> {
        if i == 0 || i > genus {
            return Err(Error::InvalidArgument(alloc::format!("a_{i} does not exist in genus {genus}")));
        }
        Self::new(genus, 1 << (i - 1))
    }

    /// The basis vector `b_i` (1-based).
    pub fn b(genus: usize, i: usize) -> Result<Self> {
        if i == 0 || i > genus {
            return Err(Error::InvalidArgument(alloc::format!("b_{i} does not exist in genus {genus}")));
        }
        Self::new(genus, 1 << (genus + i - 1))
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn coord(&self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Standard symplectic pairing.
    pub fn dot(&self, other: &F2Vector) -> Result<bool> {
        if self.genus != other.genus {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(standard_dot(self.genus, self.bits, other.bits))
    }
}

impl Add for F2Vector {
    type Output = F2Vector;

    fn add(self, rhs: F2Vector) -> F2Vector {
        assert_eq!(self.genus, rhs.genus, "adding vectors of different dimension");
        F2Vector { genus: self.genus, bits: self.bits ^ rhs.bits }
    }
}

/// A nondegenerate alternating pairing on F2^{2g}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymplecticPairing {
    /// `a_i . b_i = 1`, all other basis pairs 0.
    Standard { genus: usize },
    /// Gram matrix; row `i` packs the pairings `e_i . e_j` in bit `j`.
    Matrix { dim: usize, rows: Vec<u64> },
}

impl SymplecticPairing {
    pub fn standard(genus: usize) -> Result<Self> {
        check_genus(genus)?;
        Ok(SymplecticPairing::Standard { genus })
    }

    /// Builds a pairing from a Gram matrix. The matrix must be symmetric with
    /// zero diagonal; nondegeneracy is detected by [`symplectic_basis`].
    pub fn from_matrix(rows: Vec<u64>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || dim % 2 == 1 || dim > 2 * MAX_GENUS {
            return Err(Error::DimensionMismatch { expected: 2 * (dim / 2).max(1), found: dim });
        }
        let mask = low_mask(dim);
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || (row >> i) & 1 == 1 {
                return Err(Error::NotAlternating);
            }
            for (j, &other) in rows.iter().enumerate() {
                if ((row >> j) & 1) != ((other >> i) & 1) {
                    return Err(Error::NotAlternating);
                }
            }
        }
        Ok(SymplecticPairing::Matrix { dim, rows })
    }

    pub fn dim(&self) -> usize {
        match self {
            SymplecticPairing::Standard { genus } => 2 * genus,
            SymplecticPairing::Matrix { dim, .. } => *dim,
        }
    }

    pub fn genus(&self) -> usize {
        self.dim() / 2
    }

    /// Pairing of two packed coordinate vectors.
    pub fn pair(&self, x: u64, y: u64) -> bool {
        match self {
            SymplecticPairing::Standard { genus } => standard_dot(*genus, x, y),
            SymplecticPairing::Matrix { rows, .. } => {
                let mut acc = 0u64;
                let mut xs = x;
                while xs != 0 {
                    let i = xs.trailing_zeros() as usize;
                    acc ^= rows[i];
                    xs &= xs - 1;
                }
                parity(acc & y)
            }
        }
    }

    fn gram_entry(&self, i: usize, j: usize) -> bool {
        self.pair(1 << i, 1 << j)
    }
}

/// An ordered symplectic basis `(a_1..a_g, b_1..b_g)` in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticBasis {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
}

impl SymplecticBasis {
    pub fn standard(genus: usize) -> Self {
        SymplecticBasis {
            a: (0..genus).map(|i| 1u64 << i).collect(),
            b: (0..genus).map(|i| 1u64 << (genus + i)).collect(),
        }
    }

    pub fn genus(&self) -> usize {
        self.a.len()
    }

    /// Checks `a_i.a_j = b_i.b_j = 0` and `a_i.b_j = delta_ij`.
    pub fn is_symplectic_for(&self, pairing: &SymplecticPairing) -> bool {
        let g = self.genus();
        if self.b.len() != g || pairing.genus() != g {
            return false;
        }
        for i in 0..g {
            for j in 0..g {
                if pairing.pair(self.a[i], self.a[j]) || pairing.pair(self.b[i], self.b[j]) {
                    return false;
                }
                if pairing.pair(self.a[i], self.b[j]) != (i == j) {
                    return false;
                }
            }
        }
        true
    }
}

/// Symplectic Gram–Schmidt over F2.
pub fn symplectic_basis(pairing: &SymplecticPairing) -> Result<SymplecticBasis> {
    if let SymplecticPairing::Standard { genus } = pairing {
        return Ok(SymplecticBasis::standard(*genus));
    }
    let dim = pairing.dim();
    let mut pool: Vec<u64> = (0..dim).map(|i| 1u64 << i).collect();
    let mut a = Vec::with_capacity(dim / 2);
    let mut b = Vec::with_capacity(dim / 2);
    while let Some(v) = pool.pop() {
        let partner = pool.iter().position(|&w| pairing.pair(v, w)).ok_or(Error::DegeneratePairing)?;
        let w = pool.swap_remove(partner);
        // project the remaining vectors onto the orthogonal complement of <v, w>
        for u in pool.iter_mut() {
            let mut x = *u;
            if pairing.pair(*u, w) {
                x ^= v;
            }
            if pairing.pair(*u, v) {
                x ^= w;
            }
            *u = x;
        }
        a.push(v);
        b.push(w);
    }
    Ok(SymplecticBasis { a, b })
}

/// Arf invariant in additive and multiplicative notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArfValue {
    odd: bool,
}

impl ArfValue {
    pub fn from_additive(odd: bool) -> Self {
        ArfValue { odd }
    }

    pub fn from_multiplicative(sign: i8) -> Result<Self> {
        match sign {
            1 => Ok(ArfValue { odd: false }),
            -1 => Ok(ArfValue { odd: true }),
            _ => Err(Error::InvalidArgument(alloc::format!("{sign} is not +-1"))),
        }
    }

    /// Value in F2, as 0 or 1.
    pub fn additive(&self) -> u8 {
        self.odd as u8
    }

    /// `(-1)^additive`.
    pub fn multiplicative(&self) -> i8 {
        if self.odd {
            -1
        } else {
            1
        }
    }
}

impl Add for ArfValue {
    type Output = ArfValue;

    // addition in F2
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: ArfValue) -> ArfValue {
        ArfValue { odd: self.odd ^ rhs.odd }
    }
}

/// A quadratic refinement of the standard symplectic form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2QuadraticForm {
    genus: usize,
    basis_values: u64,
}

impl F2QuadraticForm {
    pub fn new(genus: usize, basis_values: u64) -> Result<Self> {
        check_genus(genus)?;
        if basis_values & !low_mask(2 * genus) != 0 {
            return Err(Error::DimensionMismatch {
                expected: 2 * genus,
                found: 64 - basis_values.leading_zeros() as usize,
            });
        }
        Ok(F2QuadraticForm { genus, basis_values })
    }

    /// Genus-1 form vanishing on both basis vectors.
    pub fn q0() -> Self {
        F2QuadraticForm { genus: 1, basis_values: 0 }
    }

    /// Genus-1 form equal to 1 on every nonzero vector.
    pub fn q1() -> Self {
        F2QuadraticForm { genus: 1, basis_values: 0b11 }
    }

    /// Parses a bitstring of length 2g; character `i` is `q(e_{i+1})`.
    pub fn from_bitstring(genus: usize, s: &str) -> Result<Self> {
        check_genus(genus)?;
        if s.len() != 2 * genus {
            return Err(Error::DimensionMismatch { expected: 2 * genus, found: s.len() });
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::InvalidArgument(alloc::format!("'{c}' is not a bit"))),
            }
        }
        Self::new(genus, bits)
    }

    pub fn to_bitstring(&self) -> String {
        (0..2 * self.genus).map(|i| if (self.basis_values >> i) & 1 == 1 { '1' } else { '0' }).collect()
    }

    /// Normalizes a form given on an arbitrary pairing.
    ///
    /// `values` packs `q(e_i)` on the ambient basis. The form is evaluated on a
    /// symplectic basis of the pairing and re-expressed on the standard space.
    pub fn from_pairing(pairing: &SymplecticPairing, values: u64) -> Result<(Self, SymplecticBasis)> {
        let basis = symplectic_basis(pairing)?;
        let eval = |x: u64| eval_on_pairing(pairing, values, x);
        let g = basis.genus();
        let mut bits = 0u64;
        for i in 0..g {
            if eval(basis.a[i]) {
                bits |= 1 << i;
            }
            if eval(basis.b[i]) {
                bits |= 1 << (g + i);
            }
        }
        Ok((Self::new(g, bits)?, basis))
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    pub fn basis_values(&self) -> u64 {
        self.basis_values
    }

    #[inline]
    pub(crate) fn eval_bits(&self, x: u64) -> bool {
        let m = low_mask(self.genus);
        parity(x & self.basis_values) ^ parity(x & m & (x >> self.genus))
    }

    pub fn eval(&self, x: &F2Vector) -> Result<bool> {
        if x.genus != self.genus {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.dim() });
        }
        Ok(self.eval_bits(x.bits))
    }
}

/// `sum_i x_i q(e_i) + sum_{i<j} x_i x_j (e_i.e_j)` for a general pairing.
pub(crate) fn eval_on_pairing(pairing: &SymplecticPairing, values: u64, x: u64) -> bool {
    let dim = pairing.dim();
    let mut acc = parity(x & values);
    for i in 0..dim {
        if (x >> i) & 1 == 0 {
            continue;
        }
        for j in (i + 1)..dim {
            if (x >> j) & 1 == 1 && pairing.gram_entry(i, j) {
                acc = !acc;
            }
        }
    }
    acc
}

/// `sum_i q(a_i) q(b_i)` on the standard basis.
pub fn arf_basis(q: &F2QuadraticForm) -> ArfValue {
    let m = low_mask(q.genus);
    let va = q.basis_values & m;
    let vb = (q.basis_values >> q.genus) & m;
    ArfValue::from_additive(parity(va & vb))
}

/// Arf invariant read off in a supplied symplectic basis of the standard space.
pub fn arf_in_basis(q: &F2QuadraticForm, basis: &SymplecticBasis) -> Result<ArfValue> {
    if basis.genus() != q.genus || basis.b.len() != q.genus {
        return Err(Error::DimensionMismatch { expected: q.genus, found: basis.genus() });
    }
    let odd = basis.a.iter().zip(&basis.b).fold(false, |acc, (&a, &b)| acc ^ (q.eval_bits(a) & q.eval_bits(b)));
    Ok(ArfValue::from_additive(odd))
}

/// Raw Gauss sum `sum_x (-1)^{q(x)}`.
pub fn gauss_sum(q: &F2QuadraticForm, config: &EnumerationConfig) -> Result<i64> {
    config.check(q.genus)?;
    let total = 1u64 << (2 * q.genus);
    let negatives = (0..total).filter(|&x| q.eval_bits(x)).count() as i64;
    Ok(total as i64 - 2 * negatives)
}

/// Arf invariant as the normalized Gauss sum `2^{-g} sum_x (-1)^{q(x)}`.
pub fn arf_gauss(q: &F2QuadraticForm) -> Result<ArfValue> {
    arf_gauss_with(q, &EnumerationConfig::default())
}

pub fn arf_gauss_with(q: &F2QuadraticForm, config: &EnumerationConfig) -> Result<ArfValue> {
    let sum = gauss_sum(q, config)?;
    let scale = 1i64 << q.genus;
    match sum {
        s if s == scale => Ok(ArfValue::from_additive(false)),
        s if s == -scale => Ok(ArfValue::from_additive(true)),
        _ => Err(Error::GaussSumInvalid),
    }
}

/// Number of zeros of `q`, by exhaustive enumeration.
pub fn count_zeros(q: &F2QuadraticForm) -> Result<u64> {
    count_zeros_with(q, &EnumerationConfig::default())
}

pub fn count_zeros_with(q: &F2QuadraticForm, config: &EnumerationConfig) -> Result<u64> {
    config.check(q.genus)?;
    Ok((0..1u64 << (2 * q.genus)).filter(|&x| !q.eval_bits(x)).count() as u64)
}

/// `2^{g-1}(2^g + arf)` with `arf` multiplicative.
pub fn zero_count_closed_form(genus: usize, arf: ArfValue) -> u64 {
    let half = 1u64 << (genus - 1);
    let full = 1u64 << genus;
    if arf.multiplicative() == 1 {
        half * (full + 1)
    } else {
        half * (full - 1)
    }
}

/// All `2^{2g}` forms on the standard space, ordered by basis values.
pub fn enumerate_forms(genus: usize) -> Result<Vec<F2QuadraticForm>> {
    enumerate_forms_with(genus, &EnumerationConfig::default())
}

pub fn enumerate_forms_with(genus: usize, config: &EnumerationConfig) -> Result<Vec<F2QuadraticForm>> {
    check_genus(genus)?;
    config.check(genus)?;
    Ok((0..1u64 << (2 * genus)).map(|v| F2QuadraticForm { genus, basis_values: v }).collect())
}

/// Numbers of forms with Arf invariant +1 and -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormCounts {
    pub n_plus: u64,
    pub n_minus: u64,
}

impl FormCounts {
    /// `(2^{g-1}(2^g+1), 2^{g-1}(2^g-1))`.
    pub fn closed_form(genus: usize) -> Self {
        let half = 1u64 << (genus - 1);
        let full = 1u64 << genus;
        FormCounts { n_plus: half * (full + 1), n_minus: half * (full - 1) }
    }
}

pub fn count_by_arf(genus: usize) -> Result<FormCounts> {
    count_by_arf_with(genus, &EnumerationConfig::default())
}

pub fn count_by_arf_with(genus: usize, config: &EnumerationConfig) -> Result<FormCounts> {
    let forms = enumerate_forms_with(genus, config)?;
    let n_minus = forms.iter().filter(|q| arf_basis(q).additive() == 1).count() as u64;
    Ok(FormCounts { n_plus: forms.len() as u64 - n_minus, n_minus })
}

/// Orthogonal direct sum; the first summand occupies the leading coordinates
/// of both the `a` and the `b` block.
pub fn direct_sum(q1: &F2QuadraticForm, q2: &F2QuadraticForm) -> Result<F2QuadraticForm> {
    let (g1, g2) = (q1.genus, q2.genus);
    let g = g1 + g2;
    check_genus(g)?;
    let split = |q: &F2QuadraticForm| {
        let m = low_mask(q.genus);
        (q.basis_values & m, (q.basis_values >> q.genus) & m)
    };
    let (a1, b1) = split(q1);
    let (a2, b2) = split(q2);
    let a = a1 | (a2 << g1);
    let b = b1 | (b2 << g1);
    F2QuadraticForm::new(g, a | (b << g))
}

/// A linear map of the standard space, stored by the images of the basis
/// vectors `e_1..e_{2g}` (same packing as vectors).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymplecticMap {
    genus: usize,
    columns: Vec<u64>,
}

impl SymplecticMap {
    pub fn identity(genus: usize) -> Self {
        SymplecticMap { genus, columns: (0..2 * genus).map(|i| 1u64 << i).collect() }
    }

    /// `x -> x + (x.v) v`.
    pub fn transvection(genus: usize, v: u64) -> Self {
        let columns = (0..2 * genus)
            .map(|i| {
                let e = 1u64 << i;
                if standard_dot(genus, e, v) {
                    e ^ v
                } else {
                    e
                }
            })
            .collect();
        SymplecticMap { genus, columns }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn columns(&self) -> &[u64] {
        &self.columns
    }

    pub fn apply(&self, x: u64) -> u64 {
        let mut acc = 0;
        let mut xs = x;
        while xs != 0 {
            let i = xs.trailing_zeros() as usize;
            acc ^= self.columns[i];
            xs &= xs - 1;
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SymplecticMap) -> SymplecticMap {
        SymplecticMap { genus: self.genus, columns: other.columns.iter().map(|&c| self.apply(c)).collect() }
    }

    pub fn is_symplectic(&self) -> bool {
        let n = 2 * self.genus;
        (0..n).all(|i| {
            (0..n).all(|j| {
                standard_dot(self.genus, self.columns[i], self.columns[j]) == standard_dot(self.genus, 1 << i, 1 << j)
            })
        })
    }

    /// Image of the standard basis.
    pub fn image_basis(&self) -> SymplecticBasis {
        let g = self.genus;
        SymplecticBasis { a: self.columns[..g].to_vec(), b: self.columns[g..].to_vec() }
    }

    /// `q ∘ self`, again a form on the standard space.
    pub fn pullback(&self, q: &F2QuadraticForm) -> F2QuadraticForm {
        let bits = self
            .columns
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &c)| if q.eval_bits(c) { acc | (1 << i) } else { acc });
        F2QuadraticForm { genus: self.genus, basis_values: bits }
    }
}

/// Every element of Sp(2g, F2) for `g <= 2`, by backtracking over basis images.
pub fn symplectic_group(genus: usize) -> Result<Vec<SymplecticMap>> {
    check_genus(genus)?;
    if genus > 2 {
        return Err(Error::WitnessUnsupported { genus });
    }
    let n = 2 * genus;
    let mut out = Vec::new();
    let mut columns = Vec::with_capacity(n);
    extend_symplectic(genus, &mut columns, &mut out);
    debug_assert!(out.iter().all(|m| m.columns.len() == n));
    Ok(out)
}

fn extend_symplectic(genus: usize, columns: &mut Vec<u64>, out: &mut Vec<SymplecticMap>) {
    let n = 2 * genus;
    let k = columns.len();
    if k == n {
        out.push(SymplecticMap { genus, columns: columns.clone() });
        return;
    }
    for candidate in 1..(1u64 << n) {
        let ok = columns
            .iter()
            .enumerate()
            .all(|(j, &c)| standard_dot(genus, c, candidate) == standard_dot(genus, 1 << j, 1 << k));
        if ok {
            columns.push(candidate);
            extend_symplectic(genus, columns, out);
            columns.pop();
        }
    }
}

/// Isomorphism test: equal dimension and equal Arf invariant.
pub fn forms_isomorphic(q1: &F2QuadraticForm, q2: &F2QuadraticForm) -> bool {
    q1.genus == q2.genus && arf_basis(q1) == arf_basis(q2)
}

/// A symplectic `T` with `q2 ∘ T = q1`, searched exhaustively (`g <= 2`).
pub fn isomorphism_witness(q1: &F2QuadraticForm, q2: &F2QuadraticForm) -> Result<Option<SymplecticMap>> {
    if q1.genus != q2.genus {
        return Ok(None);
    }
    if q1.genus > 2 {
        return Err(Error::WitnessUnsupported { genus: q1.genus });
    }
    if q1 == q2 {
        return Ok(Some(SymplecticMap::identity(q1.genus)));
    }
    Ok(symplectic_group(q1.genus)?.into_iter().find(|t| t.pullback(q2) == *q1))
}
