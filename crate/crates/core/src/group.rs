//! Finite abelian groups `Z_{n_1} × … × Z_{n_t}`, their group rings, and the
//! Fourier isomorphism `CG → C^G`.
//!
//! Elements are exponent tuples `a = (a_1, …, a_t)` standing for
//! `K^a = K_1^{a_1} ⋯ K_t^{a_t}`. They are enumerated lexicographically with
//! the identity first; that order is also the canonical order of every
//! report. Characters are labelled by group elements through the pairing
//! `χ_b(K^a) = ζ_N^{Σ_i (N/n_i) a_i b_i}` where `N = lcm(n_i)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::cyclotomic::{reduce_mod_cyclotomic_i128, CycloNum, CyclotomicField};
use crate::error::{Error, Result};

/// Largest group order accepted. Dense tables are quadratic in it.
pub const MAX_GROUP_ORDER: usize = 1 << 16;

const MUL_TABLE_LIMIT: usize = 1024;

#[derive(Debug)]
struct GroupData {
    orders: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
    conductor: usize,
    /// `N / n_i` for each factor.
    weights: Vec<usize>,
    field: CyclotomicField,
    mul_table: Option<Vec<u32>>,
}

/// A finite abelian group given as a product of cyclic groups. Cheap to clone.
#[derive(Debug, Clone)]
pub struct AbelianGroup(Arc<GroupData>);

impl PartialEq for AbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.orders == other.0.orders
    }
}

impl Eq for AbelianGroup {}

/// Exponent tuple of a group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<usize>);

impl GroupElement {
    pub fn new(exponents: Vec<usize>) -> Self {
        GroupElement(exponents)
    }

    pub fn exponents(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K^(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl AbelianGroup {
    pub fn new(orders: &[usize]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::EmptyGroup);
        }
        if let Some(index) = orders.iter().position(|&n| n == 0) {
            return Err(Error::ZeroFactor { index });
        }
        let mut size: usize = 1;
        for &n in orders {
            size = size
                .checked_mul(n)
                .filter(|&s| s <= MAX_GROUP_ORDER)
                .ok_or_else(|| Error::GroupTooLarge(format!("{orders:?}")))?;
        }
        let conductor = orders.iter().fold(1usize, |acc, &n| acc.lcm(&n));
        let weights = orders.iter().map(|&n| conductor / n).collect();
        let mut strides = vec![1; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1];
        }
        let field = CyclotomicField::new(conductor)?;
        let mut data = GroupData {
            orders: orders.to_vec(),
            strides,
            size,
            conductor,
            weights,
            field,
            mul_table: None,
        };
        if size <= MUL_TABLE_LIMIT {
            let mut table = Vec::with_capacity(size * size);
            for a in 0..size {
                for b in 0..size {
                    table.push(Self::mul_digits(&data, a, b) as u32);
                }
            }
            data.mul_table = Some(table);
        }
        Ok(AbelianGroup(Arc::new(data)))
    }

    fn mul_digits(data: &GroupData, a: usize, b: usize) -> usize {
        let mut out = 0;
        for ((&n, &stride), _) in data.orders.iter().zip(&data.strides).zip(0..) {
            let da = (a / stride) % n;
            let db = (b / stride) % n;
            out += ((da + db) % n) * stride;
        }
        out
    }

    pub fn orders(&self) -> &[usize] {
        &self.0.orders
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.0.orders.len()
    }

    /// Group order `s`.
    pub fn size(&self) -> usize {
        self.0.size
    }

    /// `N = lcm(n_i)`.
    pub fn conductor(&self) -> usize {
        self.0.conductor
    }

    /// Q(ζ_N), which holds every character value of the group.
    pub fn field(&self) -> &CyclotomicField {
        &self.0.field
    }

    /// Human-readable name such as `Z2 x Z3`.
    pub fn name(&self) -> String {
        self.orders()
            .iter()
            .map(|n| format!("Z{n}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    pub fn element(&self, exponents: &[usize]) -> Result<GroupElement> {
        let e = GroupElement(exponents.to_vec());
        self.index_of(&e)?;
        Ok(e)
    }

    /// Position of `e` in the canonical (lexicographic) enumeration.
    pub fn index_of(&self, e: &GroupElement) -> Result<usize> {
        let bad = || Error::BadExponents {
            exponents: e.0.clone(),
            orders: self.0.orders.clone(),
        };
        if e.0.len() != self.rank() {
            return Err(bad());
        }
        let mut idx = 0;
        for ((&a, &n), &stride) in e.0.iter().zip(&self.0.orders).zip(&self.0.strides) {
            if a >= n {
                return Err(bad());
            }
            idx += a * stride;
        }
        Ok(idx)
    }

    pub fn element_at(&self, index: usize) -> GroupElement {
        assert!(index < self.size(), "element index out of range");
        GroupElement(
            self.0
                .orders
                .iter()
                .zip(&self.0.strides)
                .map(|(&n, &stride)| (index / stride) % n)
                .collect(),
        )
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.size()).map(move |i| self.element_at(i))
    }

    #[inline]
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        match &self.0.mul_table {
            Some(t) => t[a * self.0.size + b] as usize,
            None => Self::mul_digits(&self.0, a, b),
        }
    }

    pub fn inv_index(&self, a: usize) -> usize {
        let mut out = 0;
        for (&n, &stride) in self.0.orders.iter().zip(&self.0.strides) {
            let d = (a / stride) % n;
            out += ((n - d) % n) * stride;
        }
        out
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        Ok(self.element_at(self.mul_index(self.index_of(a)?, self.index_of(b)?)))
    }

    pub fn inv(&self, a: &GroupElement) -> Result<GroupElement> {
        Ok(self.element_at(self.inv_index(self.index_of(a)?)))
    }

    /// Exponent `e` with `χ_b(K^a) = ζ_N^e`, i.e. `Σ_i (N/n_i) a_i b_i mod N`.
    pub fn pairing_exponent(&self, a: usize, b: usize) -> usize {
        let n_total = self.0.conductor;
        let mut e = 0;
        for ((&n, &stride), &w) in self.0.orders.iter().zip(&self.0.strides).zip(&self.0.weights) {
            let da = (a / stride) % n;
            let db = (b / stride) % n;
            e = (e + w * ((da * db) % n)) % n_total;
        }
        e
    }
}

/// Coefficient domains of group rings: the integers and Q(ζ_N).
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero_in(group: &AbelianGroup) -> Self;
    fn from_integer(group: &AbelianGroup, n: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;

    /// `Σ v · ζ_N^k` over the given terms.
    fn root_sum(field: &CyclotomicField, terms: &[(&Self, usize)]) -> CycloNum;

    /// Convolution product of two canonical coefficient maps.
    fn convolve(
        group: &AbelianGroup,
        x: &BTreeMap<usize, Self>,
        y: &BTreeMap<usize, Self>,
    ) -> BTreeMap<usize, Self> {
        convolve_generic(group, x, y)
    }
}

fn convolve_generic<R: Scalar>(
    group: &AbelianGroup,
    x: &BTreeMap<usize, R>,
    y: &BTreeMap<usize, R>,
) -> BTreeMap<usize, R> {
    let mut acc: Vec<Option<R>> = vec![None; group.size()];
    for (&a, xa) in x {
        for (&b, yb) in y {
            let p = xa.times(yb);
            let slot = &mut acc[group.mul_index(a, b)];
            *slot = Some(match slot.take() {
                Some(v) => v.plus(&p),
                None => p,
            });
        }
    }
    acc.into_iter()
        .enumerate()
        .filter_map(|(i, v)| v.filter(|v| !v.is_zero()).map(|v| (i, v)))
        .collect()
}

impl Scalar for BigInt {
    fn zero_in(_: &AbelianGroup) -> Self {
        BigInt::zero()
    }
    fn from_integer(_: &AbelianGroup, n: &BigInt) -> Self {
        n.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }

    fn root_sum(field: &CyclotomicField, terms: &[(&Self, usize)]) -> CycloNum {
        let mut sums = vec![BigInt::zero(); field.order()];
        for (v, k) in terms {
            sums[*k % field.order()] += *v;
        }
        field.from_power_sums(sums)
    }

    fn convolve(
        group: &AbelianGroup,
        x: &BTreeMap<usize, Self>,
        y: &BTreeMap<usize, Self>,
    ) -> BTreeMap<usize, Self> {
        convolve_int_fast(group, x, y).unwrap_or_else(|| convolve_generic(group, x, y))
    }
}

/// Machine-integer convolution; `None` when anything overflows i128.
fn convolve_int_fast(
    group: &AbelianGroup,
    x: &BTreeMap<usize, BigInt>,
    y: &BTreeMap<usize, BigInt>,
) -> Option<BTreeMap<usize, BigInt>> {
    let xs: Vec<(usize, i128)> = x
        .iter()
        .map(|(&i, v)| v.to_i128().map(|v| (i, v)))
        .collect::<Option<_>>()?;
    let ys: Vec<(usize, i128)> = y
        .iter()
        .map(|(&i, v)| v.to_i128().map(|v| (i, v)))
        .collect::<Option<_>>()?;
    let mut acc = vec![0i128; group.size()];
    for &(a, va) in &xs {
        for &(b, vb) in &ys {
            let c = group.mul_index(a, b);
            acc[c] = acc[c].checked_add(va.checked_mul(vb)?)?;
        }
    }
    Some(
        acc.into_iter()
            .enumerate()
            .filter(|(_, v)| *v != 0)
            .map(|(i, v)| (i, BigInt::from(v)))
            .collect(),
    )
}

impl Scalar for CycloNum {
    fn zero_in(group: &AbelianGroup) -> Self {
        group.field().zero()
    }
    fn from_integer(group: &AbelianGroup, n: &BigInt) -> Self {
        group.field().from_integer(n)
    }
    fn is_zero(&self) -> bool {
        CycloNum::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }

    fn root_sum(field: &CyclotomicField, terms: &[(&Self, usize)]) -> CycloNum {
        field.combine_powers(terms.iter().copied())
    }

    fn convolve(
        group: &AbelianGroup,
        x: &BTreeMap<usize, Self>,
        y: &BTreeMap<usize, Self>,
    ) -> BTreeMap<usize, Self> {
        convolve_cyclo_fast(group, x, y).unwrap_or_else(|| convolve_generic(group, x, y))
    }
}

type IndexedRows = Vec<(usize, Vec<i128>)>;

/// Scales every coefficient to one common denominator and returns the
/// integer numerators as i128 rows.
fn common_denominator_rows(x: &BTreeMap<usize, CycloNum>) -> Option<(BigInt, IndexedRows)> {
    let den = x.values().fold(BigInt::one(), |acc, v| acc.lcm(&v.den));
    let rows = x
        .iter()
        .map(|(&i, v)| {
            let scale = &den / &v.den;
            let row = v
                .num
                .iter()
                .map(|a| (a * &scale).to_i128())
                .collect::<Option<Vec<_>>>()?;
            Some((i, row))
        })
        .collect::<Option<Vec<_>>>()?;
    Some((den, rows))
}

/// Convolution of cyclotomic group-ring elements on integer numerators with
/// delayed reduction. `None` when anything overflows i128.
fn convolve_cyclo_fast(
    group: &AbelianGroup,
    x: &BTreeMap<usize, CycloNum>,
    y: &BTreeMap<usize, CycloNum>,
) -> Option<BTreeMap<usize, CycloNum>> {
    if x.is_empty() || y.is_empty() {
        return Some(BTreeMap::new());
    }
    let field = group.field();
    let d = field.degree();
    let (dx, xs) = common_denominator_rows(x)?;
    let (dy, ys) = common_denominator_rows(y)?;
    let width = 2 * d - 1;
    let mut acc = vec![0i128; group.size() * width];
    let mut touched = vec![false; group.size()];
    for (a, xa) in &xs {
        for (b, yb) in &ys {
            let c = group.mul_index(*a, *b);
            touched[c] = true;
            let out = &mut acc[c * width..(c + 1) * width];
            for (i, &u) in xa.iter().enumerate() {
                if u == 0 {
                    continue;
                }
                for (j, &v) in yb.iter().enumerate() {
                    if v != 0 {
                        out[i + j] = out[i + j].checked_add(u.checked_mul(v)?)?;
                    }
                }
            }
        }
    }
    let den = dx * dy;
    let mut result = BTreeMap::new();
    for c in 0..group.size() {
        if !touched[c] {
            continue;
        }
        let mut poly = acc[c * width..(c + 1) * width].to_vec();
        reduce_mod_cyclotomic_i128(&mut poly, d, field.modulus())?;
        if poly.iter().all(|&v| v == 0) {
            continue;
        }
        let num = poly.into_iter().map(BigInt::from).collect();
        result.insert(c, CycloNum::from_parts(field.clone(), num, den.clone()));
    }
    Some(result)
}

/// Finitely supported map from the group to a coefficient domain, with no
/// stored zeros.
#[derive(Clone, PartialEq)]
pub struct GroupRingElem<R> {
    group: AbelianGroup,
    terms: BTreeMap<usize, R>,
}

impl<R: Scalar> fmt::Debug for GroupRingElem<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (e, v) in self.terms() {
            m.entry(&e.to_string(), v);
        }
        m.finish()
    }
}

impl<R: Scalar> GroupRingElem<R> {
    pub fn zero(group: &AbelianGroup) -> Self {
        GroupRingElem {
            group: group.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(group: &AbelianGroup) -> Self {
        Self::delta_index(group, 0)
    }

    /// Dirac mass `K^a` with coefficient 1.
    pub fn delta(group: &AbelianGroup, e: &GroupElement) -> Result<Self> {
        Ok(Self::delta_index(group, group.index_of(e)?))
    }

    pub fn delta_index(group: &AbelianGroup, index: usize) -> Self {
        assert!(index < group.size());
        let mut terms = BTreeMap::new();
        terms.insert(index, R::from_integer(group, &BigInt::one()));
        GroupRingElem {
            group: group.clone(),
            terms,
        }
    }

    /// Sums repeated elements and drops zero coefficients.
    pub fn from_terms<I>(group: &AbelianGroup, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, R)>,
    {
        let mut out = Self::zero(group);
        for (e, v) in terms {
            let i = group.index_of(&e)?;
            out.add_at(i, &v);
        }
        Ok(out)
    }

    /// From a coefficient vector in canonical element order.
    pub fn from_dense(group: &AbelianGroup, coeffs: Vec<R>) -> Result<Self> {
        if coeffs.len() != group.size() {
            return Err(Error::LengthMismatch {
                expected: group.size(),
                got: coeffs.len(),
            });
        }
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Ok(GroupRingElem {
            group: group.clone(),
            terms,
        })
    }

    pub fn to_dense(&self) -> Vec<R> {
        (0..self.group.size())
            .map(|i| {
                self.terms
                    .get(&i)
                    .cloned()
                    .unwrap_or_else(|| R::zero_in(&self.group))
            })
            .collect()
    }

    pub(crate) fn add_at(&mut self, index: usize, v: &R) {
        if v.is_zero() {
            return;
        }
        match self.terms.get_mut(&index) {
            Some(cur) => {
                *cur = cur.plus(v);
                if cur.is_zero() {
                    self.terms.remove(&index);
                }
            }
            None => {
                self.terms.insert(index, v.clone());
            }
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn coeff(&self, e: &GroupElement) -> Result<R> {
        let i = self.group.index_of(e)?;
        Ok(self.coeff_at(i))
    }

    pub fn coeff_at(&self, index: usize) -> R {
        self.terms
            .get(&index)
            .cloned()
            .unwrap_or_else(|| R::zero_in(&self.group))
    }

    /// Nonzero terms in canonical element order.
    pub fn terms(&self) -> impl Iterator<Item = (GroupElement, &R)> + '_ {
        self.terms
            .iter()
            .map(|(&i, v)| (self.group.element_at(i), v))
    }

    pub fn indexed_terms(&self) -> impl Iterator<Item = (usize, &R)> + '_ {
        self.terms.iter().map(|(&i, v)| (i, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                left: self.group.orders().to_vec(),
                right: other.group.orders().to_vec(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut out = self.clone();
        for (&i, v) in &other.terms {
            out.add_at(i, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|v| v.negated())
    }

    pub fn scale(&self, k: &R) -> Self {
        if k.is_zero() {
            return Self::zero(&self.group);
        }
        let terms = self
            .terms
            .iter()
            .map(|(&i, v)| (i, v.times(k)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        GroupRingElem {
            group: self.group.clone(),
            terms,
        }
    }

    /// Convolution product: the coefficient of `K^c` is `Σ_{ab=c} x_a y_b`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.group));
        }
        Ok(GroupRingElem {
            group: self.group.clone(),
            terms: R::convolve(&self.group, &self.terms, &other.terms),
        })
    }

    /// Sum of all coefficients.
    pub fn augmentation(&self) -> R {
        self.terms
            .values()
            .fold(R::zero_in(&self.group), |acc, v| acc.plus(v))
    }

    fn map_coeffs(&self, f: impl Fn(&R) -> R) -> Self {
        GroupRingElem {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(&i, v)| (i, f(v))).collect(),
        }
    }

    /// Coefficient-wise change of domain; zero images are dropped.
    pub fn map<S: Scalar>(&self, f: impl Fn(&R) -> S) -> GroupRingElem<S> {
        GroupRingElem {
            group: self.group.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&i, v)| (i, f(v)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }
}

impl GroupRingElem<BigInt> {
    /// The same element with coefficients in Q(ζ_N).
    pub fn to_cyclotomic(&self) -> GroupRingElem<CycloNum> {
        let field = self.group.field().clone();
        self.map(|v| field.from_integer(v))
    }
}

impl GroupRingElem<CycloNum> {
    pub fn scale_rational(&self, q: &BigRational) -> Self {
        self.map(|v| v.scale(q))
    }
}

/// Sum of all group elements.
pub fn trace_element(group: &AbelianGroup) -> GroupRingElem<BigInt> {
    GroupRingElem::from_dense(group, vec![BigInt::one(); group.size()]).expect("length matches")
}

/// `χ_b(x) = Σ_a x_a ζ_N^{⟨a, b⟩}`.
pub fn character_value<R: Scalar>(
    group: &AbelianGroup,
    label: &GroupElement,
    x: &GroupRingElem<R>,
) -> Result<CycloNum> {
    let b = group.index_of(label)?;
    if x.group() != group {
        return Err(Error::GroupMismatch {
            left: group.orders().to_vec(),
            right: x.group().orders().to_vec(),
        });
    }
    Ok(character_value_at(group, b, x))
}

fn character_value_at<R: Scalar>(group: &AbelianGroup, b: usize, x: &GroupRingElem<R>) -> CycloNum {
    let terms: Vec<(&R, usize)> = x
        .indexed_terms()
        .map(|(a, v)| (v, group.pairing_exponent(a, b)))
        .collect();
    R::root_sum(group.field(), &terms)
}

/// The Fourier transform α: entry `b` is `χ_b(x)`, labels in canonical order.
pub fn fourier<R: Scalar>(x: &GroupRingElem<R>) -> Vec<CycloNum> {
    let group = x.group();
    (0..group.size())
        .map(|b| character_value_at(group, b, x))
        .collect()
}

/// Inverse of [`fourier`]: the coefficient of `K^a` is
/// `(1/s) Σ_b v_b ζ_N^{-⟨a, b⟩}`.
pub fn inverse_fourier(group: &AbelianGroup, values: &[CycloNum]) -> Result<GroupRingElem<CycloNum>> {
    let s = group.size();
    if values.len() != s {
        return Err(Error::LengthMismatch {
            expected: s,
            got: values.len(),
        });
    }
    let n = group.conductor();
    let inv_s = BigRational::new(BigInt::one(), BigInt::from(s));
    let field = group.field();
    let support: Vec<usize> = (0..s).filter(|&b| !values[b].is_zero()).collect();
    let coeffs = (0..s)
        .map(|a| {
            let terms = support
                .iter()
                .map(|&b| (&values[b], (n - group.pairing_exponent(a, b)) % n));
            field.combine_powers(terms).scale(&inv_s)
        })
        .collect();
    GroupRingElem::from_dense(group, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_elem(g: &AbelianGroup, dense: &[i64]) -> GroupRingElem<BigInt> {
        GroupRingElem::from_dense(g, dense.iter().map(|&v| BigInt::from(v)).collect()).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn construction() {
        let z3 = AbelianGroup::new(&[3]).unwrap();
        assert_eq!((z3.size(), z3.conductor()), (3, 3));
        let klein = AbelianGroup::new(&[2, 2]).unwrap();
        assert_eq!((klein.size(), klein.conductor()), (4, 2));
        let z6 = AbelianGroup::new(&[2, 3]).unwrap();
        assert_eq!((z6.size(), z6.conductor()), (6, 6));
        assert_eq!(AbelianGroup::new(&[]), Err(Error::EmptyGroup));
        assert_eq!(AbelianGroup::new(&[2, 0]), Err(Error::ZeroFactor { index: 1 }));
        assert!(matches!(
            AbelianGroup::new(&[1 << 10, 1 << 10]),
            Err(Error::GroupTooLarge(_))
        ));
    }

    #[test]
    fn enumeration_is_lexicographic_identity_first() {
        let g = AbelianGroup::new(&[2, 3]).unwrap();
        let all: Vec<_> = g.elements().collect();
        assert_eq!(all[0], g.identity());
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all[4].exponents(), &[1, 1]);
    }

    #[test]
    fn element_arithmetic() {
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let k = z3.element(&[1]).unwrap();
        let k2 = z3.element(&[2]).unwrap();
        assert_eq!(z3.mul(&k, &k2).unwrap(), z3.identity());
        assert_eq!(z3.inv(&k).unwrap(), k2);
        let g = AbelianGroup::new(&[2, 3]).unwrap();
        let a = g.element(&[1, 2]).unwrap();
        assert_eq!(g.mul(&a, &a).unwrap().exponents(), &[0, 1]);
        assert!(matches!(g.element(&[2, 0]), Err(Error::BadExponents { .. })));
        assert!(g.element(&[0]).is_err());
    }

    #[test]
    fn degenerate_factor_collapses() {
        let g = AbelianGroup::new(&[1, 3, 1]).unwrap();
        assert_eq!((g.size(), g.conductor()), (3, 3));
        let x = trace_element(&g);
        let f = fourier(&x);
        assert_eq!(f[0], g.field().from_integer(&int(3)));
        assert!(f[1].is_zero() && f[2].is_zero());
    }

    #[test]
    fn convolution_examples() {
        let z2 = AbelianGroup::new(&[2]).unwrap();
        let one_plus_g = int_elem(&z2, &[1, 1]);
        assert_eq!(one_plus_g.mul(&one_plus_g).unwrap(), int_elem(&z2, &[2, 2]));
        let unit = GroupRingElem::one(&z2);
        assert_eq!(one_plus_g.mul(&unit).unwrap(), one_plus_g);
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let tr = trace_element(&z3);
        let k = GroupRingElem::delta(&z3, &z3.element(&[1]).unwrap()).unwrap();
        assert_eq!(tr.mul(&k).unwrap(), tr);
    }

    #[test]
    fn mixed_groups_rejected() {
        let a = trace_element(&AbelianGroup::new(&[2]).unwrap());
        let b = trace_element(&AbelianGroup::new(&[3]).unwrap());
        assert!(matches!(a.mul(&b), Err(Error::GroupMismatch { .. })));
        assert!(matches!(a.add(&b), Err(Error::GroupMismatch { .. })));
    }

    #[test]
    fn canonical_form_has_no_zeros() {
        let z2 = AbelianGroup::new(&[2]).unwrap();
        let g = z2.element(&[1]).unwrap();
        let x = GroupRingElem::from_terms(
            &z2,
            vec![(g.clone(), int(2)), (z2.identity(), int(1)), (g, int(-2))],
        )
        .unwrap();
        assert_eq!(x, GroupRingElem::one(&z2));
        assert_eq!(x.support_len(), 1);
        let d = int_elem(&z2, &[1, -1]);
        assert!(d.mul(&int_elem(&z2, &[1, 1])).unwrap().is_zero());
    }

    #[test]
    fn augmentation_examples() {
        let z3 = AbelianGroup::new(&[3]).unwrap();
        assert_eq!(GroupRingElem::<BigInt>::one(&z3).augmentation(), int(1));
        assert_eq!(trace_element(&z3).augmentation(), int(3));
        let z2 = AbelianGroup::new(&[2]).unwrap();
        assert_eq!(int_elem(&z2, &[1, -1]).augmentation(), int(0));
    }

    #[test]
    fn trace_elements() {
        let trivial = AbelianGroup::new(&[1]).unwrap();
        assert_eq!(trace_element(&trivial), GroupRingElem::one(&trivial));
        let z2 = AbelianGroup::new(&[2]).unwrap();
        assert_eq!(trace_element(&z2), int_elem(&z2, &[1, 1]));
    }

    #[test]
    fn character_values() {
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let tr = trace_element(&z3);
        let k = z3.element(&[1]).unwrap();
        assert!(character_value(&z3, &k, &tr).unwrap().is_zero());
        assert_eq!(
            character_value(&z3, &z3.identity(), &tr).unwrap(),
            z3.field().from_integer(&int(3))
        );
        let z2 = AbelianGroup::new(&[2]).unwrap();
        let g = z2.element(&[1]).unwrap();
        assert!(character_value(&z2, &g, &trace_element(&z2)).unwrap().is_zero());
    }

    #[test]
    fn fourier_examples() {
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let f = z3.field();
        assert_eq!(
            fourier(&GroupRingElem::<BigInt>::one(&z3)),
            vec![f.one(), f.one(), f.one()]
        );
        assert_eq!(
            fourier(&trace_element(&z3)),
            vec![f.from_integer(&int(3)), f.zero(), f.zero()]
        );
    }

    #[test]
    fn inverse_fourier_examples() {
        let z2 = AbelianGroup::new(&[2]).unwrap();
        let f = z2.field();
        let half = BigRational::new(int(1), int(2));
        let e0 = inverse_fourier(&z2, &[f.one(), f.zero()]).unwrap();
        assert_eq!(e0, trace_element(&z2).to_cyclotomic().scale_rational(&half));
        let e1 = inverse_fourier(&z2, &[f.zero(), f.one()]).unwrap();
        assert_eq!(e1, int_elem(&z2, &[1, -1]).to_cyclotomic().scale_rational(&half));
        assert_eq!(
            inverse_fourier(&z2, &[f.one(), f.one()]).unwrap(),
            GroupRingElem::one(&z2)
        );
        assert!(matches!(
            inverse_fourier(&z2, &[f.one()]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn fast_and_generic_convolution_agree() {
        let g = AbelianGroup::new(&[2, 6]).unwrap();
        let field = g.field();
        let x: Vec<CycloNum> = (0..g.size())
            .map(|i| {
                let r = field.root_of_unity(i as i64 * 5);
                r.scale(&BigRational::new(int(i as i64 - 3), int(i as i64 % 4 + 1)))
            })
            .collect();
        let x = GroupRingElem::from_dense(&g, x).unwrap();
        let y = x.map(|v| &(v * v) - &field.one());
        let fast = x.mul(&y).unwrap();
        let generic = convolve_generic(&g, &x.terms, &y.terms);
        assert_eq!(fast.terms, generic);

        let big = GroupRingElem::from_dense(&g, (0..12).map(|i| int(i) << 70).collect()).unwrap();
        let small = int_elem(&g, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]);
        let p = big.mul(&small).unwrap();
        assert_eq!(p.terms, convolve_generic(&g, &big.terms, &small.terms));
        assert!(convolve_int_fast(&g, &big.terms, &big.terms).is_none());
    }
}
