//! Exact arithmetic in the cyclotomic field Q(ζ_N).
//!
//! An element is stored as its unique reduced residue modulo the cyclotomic
//! polynomial Φ_N in the power basis `1, ζ, …, ζ^{φ(N)-1}`. Coefficients are
//! kept as arbitrary-precision integer numerators over one positive common
//! denominator; the pair is always in lowest terms, so structural equality is
//! field equality and zero-testing is exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial, coefficients from the constant term upwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient by a monic divisor, or `None` when the division leaves a remainder.
    pub fn div_exact_monic(&self, divisor: &Self) -> Option<Self> {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return self.coeffs.is_empty().then(|| self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[i]);
            if lead.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[i - dd + j] -= &lead * d;
            }
            quot[i - dd] = lead;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn euler_phi(n: usize) -> usize {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The `n`-th cyclotomic polynomial, obtained by dividing `x^n - 1` by `Φ_d`
/// for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut known: BTreeMap<usize, IntPolynomial> = BTreeMap::new();
    for d in divisors(n) {
        let mut p = IntPolynomial::x_pow_minus_one(d);
        for e in divisors(d) {
            if e == d {
                break;
            }
            p = p
                .div_exact_monic(&known[&e])
                .expect("cyclotomic factors divide x^d - 1");
        }
        known.insert(d, p);
    }
    Ok(known.remove(&n).unwrap())
}

#[derive(Debug)]
struct FieldData {
    order: usize,
    degree: usize,
    /// Low coefficients of Φ_N (the monic leading 1 is implicit).
    modulus: Vec<i64>,
}

/// The field Q(ζ_N) for a fixed conductor `N`. Cheap to clone.
#[derive(Debug, Clone)]
pub struct CyclotomicField(Arc<FieldData>);

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.order == other.0.order
    }
}

impl Eq for CyclotomicField {}

impl CyclotomicField {
    pub fn new(order: usize) -> Result<Self> {
        let phi = cyclotomic_polynomial(order)?;
        let degree = phi.degree().expect("nonzero polynomial");
        let modulus = phi.coeffs()[..degree]
            .iter()
            .map(|c| c.to_i64().expect("cyclotomic coefficients fit in i64"))
            .collect();
        Ok(CyclotomicField(Arc::new(FieldData {
            order,
            degree,
            modulus,
        })))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    /// φ(N), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub(crate) fn modulus(&self) -> &[i64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> CycloNum {
        CycloNum {
            field: self.clone(),
            num: vec![BigInt::zero(); self.degree()],
            den: BigInt::one(),
        }
    }

    pub fn one(&self) -> CycloNum {
        self.from_integer(&BigInt::one())
    }

    pub fn from_integer(&self, n: &BigInt) -> CycloNum {
        let mut x = self.zero();
        x.num[0] = n.clone();
        x
    }

    pub fn from_rational(&self, q: &BigRational) -> CycloNum {
        let mut num = vec![BigInt::zero(); self.degree()];
        num[0] = q.numer().clone();
        CycloNum::from_parts(self.clone(), num, q.denom().clone())
    }

    /// `ζ_N^k`, with `k` taken modulo `N`.
    pub fn root_of_unity(&self, k: i64) -> CycloNum {
        let n = self.order();
        let k = k.rem_euclid(n as i64) as usize;
        let mut sums = vec![BigInt::zero(); n];
        sums[k] = BigInt::one();
        self.from_power_sums(sums)
    }

    /// The element `Σ_k a_k ζ^k` for an integer vector of any length.
    pub fn from_power_sums(&self, mut sums: Vec<BigInt>) -> CycloNum {
        reduce_mod_cyclotomic(&mut sums, self.degree(), self.modulus());
        CycloNum {
            field: self.clone(),
            num: sums,
            den: BigInt::one(),
        }
    }

    /// The element `Σ v · ζ^k` over `(v, k)` pairs, accumulated modulo
    /// `x^N - 1` under one common denominator and reduced once.
    pub fn combine_powers<'a, I>(&self, terms: I) -> CycloNum
    where
        I: IntoIterator<Item = (&'a CycloNum, usize)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        let n = self.order();
        let mut den = BigInt::one();
        for (v, _) in &terms {
            self.check(v);
            if !v.is_zero() {
                den = den.lcm(&v.den);
            }
        }
        let mut acc = vec![BigInt::zero(); n];
        for (v, k) in terms {
            if v.is_zero() {
                continue;
            }
            let scale = &den / &v.den;
            for (j, a) in v.num.iter().enumerate() {
                if !a.is_zero() {
                    acc[(j + k) % n] += a * &scale;
                }
            }
        }
        reduce_mod_cyclotomic(&mut acc, self.degree(), self.modulus());
        CycloNum::from_parts(self.clone(), acc, den)
    }

    fn check(&self, x: &CycloNum) {
        assert!(
            x.field == *self,
            "cyclotomic orders differ: {} vs {}",
            self.order(),
            x.field.order()
        );
    }
}

/// `ζ_N^k` in Q(ζ_N).
pub fn root_of_unity(order: usize, k: i64) -> Result<CycloNum> {
    Ok(CyclotomicField::new(order)?.root_of_unity(k))
}

/// Reduce `poly` (any length) modulo the monic polynomial with low
/// coefficients `modulus`, leaving exactly `degree` coefficients.
pub(crate) fn reduce_mod_cyclotomic(poly: &mut Vec<BigInt>, degree: usize, modulus: &[i64]) {
    for i in (degree..poly.len()).rev() {
        let lead = std::mem::take(&mut poly[i]);
        if lead.is_zero() {
            continue;
        }
        for (j, &m) in modulus.iter().enumerate() {
            if m != 0 {
                poly[i - degree + j] -= &lead * m;
            }
        }
    }
    poly.resize(degree, BigInt::zero());
}

/// Same reduction on machine integers; `None` on overflow.
pub(crate) fn reduce_mod_cyclotomic_i128(
    poly: &mut Vec<i128>,
    degree: usize,
    modulus: &[i64],
) -> Option<()> {
    for i in (degree..poly.len()).rev() {
        let lead = std::mem::take(&mut poly[i]);
        if lead == 0 {
            continue;
        }
        for (j, &m) in modulus.iter().enumerate() {
            if m != 0 {
                let t = lead.checked_mul(m as i128)?;
                poly[i - degree + j] = poly[i - degree + j].checked_sub(t)?;
            }
        }
    }
    poly.resize(degree, 0);
    Some(())
}

/// Exact element of Q(ζ_N).
#[derive(Clone, PartialEq, Eq)]
pub struct CycloNum {
    field: CyclotomicField,
    pub(crate) num: Vec<BigInt>,
    pub(crate) den: BigInt,
}

impl CycloNum {
    /// Builds from already-reduced numerators and brings the pair to lowest terms.
    pub(crate) fn from_parts(field: CyclotomicField, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert_eq!(num.len(), field.degree());
        assert!(!den.is_zero(), "zero denominator");
        if num.iter().all(Zero::is_zero) {
            den = BigInt::one();
        } else {
            let mut g = den.abs();
            for a in &num {
                if g.is_one() {
                    break;
                }
                if !a.is_zero() {
                    g = g.gcd(a);
                }
            }
            if den.is_negative() {
                g = -g;
            }
            if !g.is_one() {
                for a in num.iter_mut() {
                    if !a.is_zero() {
                        *a /= &g;
                    }
                }
                den /= &g;
            }
        }
        CycloNum { field, num, den }
    }

    /// Build from power-basis rationals; the vector must have length φ(N).
    pub fn from_coeffs(field: &CyclotomicField, coeffs: &[BigRational]) -> Result<Self> {
        if coeffs.len() != field.degree() {
            return Err(Error::LengthMismatch {
                expected: field.degree(),
                got: coeffs.len(),
            });
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = coeffs
            .iter()
            .map(|q| q.numer() * (&den / q.denom()))
            .collect();
        Ok(Self::from_parts(field.clone(), num, den))
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.field.order()
    }

    /// Power-basis coefficients, each in lowest terms.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|a| BigRational::new(a.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let num = self.num.iter().map(|a| a * q.numer()).collect();
        Self::from_parts(self.field.clone(), num, &self.den * q.denom())
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_N.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(self.field.from_rational(&q.recip()));
        }
        let d = self.field.degree();
        let mut modulus: Vec<BigRational> = self
            .field
            .modulus()
            .iter()
            .map(|&m| BigRational::from_integer(m.into()))
            .collect();
        modulus.push(BigRational::one());
        let lifted: Vec<BigRational> = self
            .num
            .iter()
            .map(|a| BigRational::from_integer(a.clone()))
            .collect();
        let inv = rational_poly::inverse_mod(&lifted, &modulus)
            .expect("Φ_N is irreducible, so nonzero residues are invertible");
        // inverse of (num/den) is den * inv(num)
        let scaled: Vec<BigRational> = (0..d)
            .map(|i| {
                inv.get(i)
                    .cloned()
                    .unwrap_or_else(BigRational::zero)
                    * BigRational::from_integer(self.den.clone())
            })
            .collect();
        CycloNum::from_coeffs(&self.field, &scaled)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Complex approximation under ζ_N = exp(2πi/N). Display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.order() as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let v = BigRational::new(a.clone(), self.den.clone())
                .to_f64()
                .unwrap_or(f64::NAN);
            let angle = 2.0 * std::f64::consts::PI * j as f64 / n;
            re += v * angle.cos();
            im += v * angle.sin();
        }
        (re, im)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        self.field.check(other);
        let num = if self.den == other.den {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect::<Vec<_>>()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let l = a * &other.den;
                    let r = b * &self.den;
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect()
        };
        let den = if self.den == other.den {
            self.den.clone()
        } else {
            &self.den * &other.den
        };
        Self::from_parts(self.field.clone(), num, den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.field.check(other);
        if self.is_zero() || other.is_zero() {
            return self.field.zero();
        }
        let d = self.field.degree();
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        reduce_mod_cyclotomic(&mut prod, d, self.field.modulus());
        Self::from_parts(self.field.clone(), prod, &self.den * &other.den)
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum[{}]({})", self.order(), self)
    }
}

/// Renders in the power basis with `z` standing for ζ_N.
impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, q) in self.coeffs().into_iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if k == 1 {
                write!(f, "z")?;
            } else {
                write!(f, "z^{k}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &'a CycloNum) -> CycloNum {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &'a CycloNum) -> CycloNum {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &'a CycloNum) -> CycloNum {
        self.mul_impl(rhs)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            field: self.field.clone(),
            num: self.num.iter().map(|a| -a).collect(),
            den: self.den.clone(),
        }
    }
}

mod rational_poly {
    use num_rational::BigRational;
    use num_traits::Zero;

    fn trim(p: &mut Vec<BigRational>) {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem = a.to_vec();
        trim(&mut rem);
        let db = b.len() - 1;
        let lead = &b[db];
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let mut quot = vec![BigRational::zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / lead;
            for (j, bj) in b.iter().enumerate() {
                rem[i - db + j] -= &q * bj;
            }
            quot[i - db] = q;
        }
        trim(&mut rem);
        trim(&mut quot);
        (quot, rem)
    }

    fn sub_mul(a: &[BigRational], q: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let len = a.len().max(if q.is_empty() || b.is_empty() { 0 } else { q.len() + b.len() - 1 });
        let mut out = vec![BigRational::zero(); len];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, x) in q.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] -= x * y;
            }
        }
        trim(&mut out);
        out
    }

    /// Inverse of `a` modulo `m`, when gcd(a, m) is a nonzero constant.
    pub fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
        let mut r0 = m.to_vec();
        let mut r1 = a.to_vec();
        trim(&mut r0);
        trim(&mut r1);
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::from_integer(1.into())];
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s2 = sub_mul(&s0, &q, &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].clone();
        Some(s0.into_iter().map(|x| x / &c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2).unwrap(), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(6).unwrap(), IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(6).unwrap().to_string(), "x^2 - x + 1");
        assert_eq!(cyclotomic_polynomial(0), Err(Error::ZeroOrder));
    }

    #[test]
    fn divisors_and_totient() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(30), 8);
        assert_eq!(euler_phi(29), 28);
    }

    #[test]
    fn roots_of_unity() {
        let f4 = CyclotomicField::new(4).unwrap();
        assert_eq!(f4.root_of_unity(2), f4.from_integer(&BigInt::from(-1)));
        assert_eq!(&f4.root_of_unity(1) * &f4.root_of_unity(1), f4.from_integer(&(-1).into()));
        let f3 = CyclotomicField::new(3).unwrap();
        assert!(f3.root_of_unity(0).is_one());
        let s = &f3.root_of_unity(1) + &f3.root_of_unity(2);
        assert_eq!(s, f3.from_integer(&(-1).into()));
        assert!((&s + &f3.one()).is_zero());
        assert_eq!(f3.root_of_unity(-1), f3.root_of_unity(2));
    }

    #[test]
    fn trivial_conductor() {
        let f1 = CyclotomicField::new(1).unwrap();
        assert_eq!(f1.degree(), 1);
        assert!(f1.root_of_unity(5).is_one());
    }

    #[test]
    fn inverses() {
        let f3 = CyclotomicField::new(3).unwrap();
        let two = f3.from_integer(&2.into());
        assert_eq!(two.inv().unwrap(), f3.from_rational(&q(1, 2)));
        assert_eq!(f3.root_of_unity(1).inv().unwrap(), f3.root_of_unity(2));
        assert_eq!(f3.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(
            f3.zero().inv().unwrap_err().to_string(),
            "division by zero in cyclotomic field"
        );
        let f12 = CyclotomicField::new(12).unwrap();
        let x = &(&f12.root_of_unity(1) + &f12.from_integer(&3.into())) - &f12.root_of_unity(5);
        assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn zero_test() {
        let f5 = CyclotomicField::new(5).unwrap();
        assert!(f5.zero().is_zero());
        assert!(!f5.root_of_unity(1).is_zero());
        let one = f5.one();
        assert!(f5.combine_powers((0..5).map(|k| (&one, k))).is_zero());
    }

    #[test]
    fn canonical_lowest_terms() {
        let f4 = CyclotomicField::new(4).unwrap();
        let a = CycloNum::from_coeffs(&f4, &[q(2, 4), q(-3, 6)]).unwrap();
        assert_eq!(a.den, BigInt::from(2));
        assert_eq!(a.coeffs(), vec![q(1, 2), q(-1, 2)]);
        let b = CycloNum::from_coeffs(&f4, &[q(1, -2), q(0, 1)]).unwrap();
        assert_eq!(b.den, BigInt::from(2));
        assert_eq!(b.num[0], BigInt::from(-1));
    }

    #[test]
    fn display() {
        let f6 = CyclotomicField::new(6).unwrap();
        let a = CycloNum::from_coeffs(&f6, &[q(1, 2), q(-1, 1)]).unwrap();
        assert_eq!(a.to_string(), "1/2 - z");
        assert_eq!(f6.zero().to_string(), "0");
    }

    #[test]
    fn complex_value() {
        let f4 = CyclotomicField::new(4).unwrap();
        let (re, im) = f4.root_of_unity(1).to_complex();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
    }

    #[test]
    #[should_panic(expected = "cyclotomic orders differ")]
    fn mixed_orders_panic() {
        let a = root_of_unity(3, 1).unwrap();
        let b = root_of_unity(4, 1).unwrap();
        let _ = &a + &b;
    }
}
