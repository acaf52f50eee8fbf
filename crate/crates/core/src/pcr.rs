//! The projective class ring `K₀ᵖ = ZS ⊕ ZP` as a ring of pairs.
//!
//! A pair `(s, t)` stands for the class `Σ s_S [S] + Σ t_S [P_S]`, with `S`
//! running over the simple modules (the structure group) and `P_S` the
//! projective cover of `S`. Multiplication is
//!
//! ```text
//! (s1, t1)(s2, t2) = (s1 s2, s1 t2 + t1 s2 + t1 c t2)
//! ```
//!
//! where `c` is the class of the composition factors of `P_1` in `ZS`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement, GroupRingElem, Scalar};

/// Composition factors of the projective cover of the trivial module.
///
/// Any `c` with nonnegative coefficients, identity coefficient at least 1
/// and augmentation at least 2 is accepted.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalElement(GroupRingElem<BigInt>);

impl CanonicalElement {
    pub fn new(c: GroupRingElem<BigInt>) -> Result<Self> {
        if let Some((e, v)) = c.terms().find(|(_, v)| v.is_negative()) {
            return Err(Error::InvalidMultiplicity {
                exponents: e.exponents().to_vec(),
                coeff: v.to_string(),
            });
        }
        if Scalar::is_zero(&c.coeff_at(0)) {
            return Err(Error::MissingTrivialFactor);
        }
        if c.augmentation().is_one() {
            return Err(Error::SemisimpleInput);
        }
        Ok(CanonicalElement(c))
    }

    pub fn element(&self) -> &GroupRingElem<BigInt> {
        &self.0
    }

    /// Dimension of `P_1`.
    pub fn dimension(&self) -> BigInt {
        self.0.augmentation()
    }
}

/// Element `(s, t)` of the pair ring.
#[derive(Debug, Clone, PartialEq)]
pub struct PairElem<R: Scalar> {
    s: GroupRingElem<R>,
    t: GroupRingElem<R>,
}

impl<R: Scalar> PairElem<R> {
    pub fn new(s: GroupRingElem<R>, t: GroupRingElem<R>) -> Result<Self> {
        if s.group() != t.group() {
            return Err(Error::GroupMismatch {
                left: s.group().orders().to_vec(),
                right: t.group().orders().to_vec(),
            });
        }
        Ok(PairElem { s, t })
    }

    pub fn zero(group: &AbelianGroup) -> Self {
        PairElem {
            s: GroupRingElem::zero(group),
            t: GroupRingElem::zero(group),
        }
    }

    /// The ring unit `(δ_1, 0)`.
    pub fn unit(group: &AbelianGroup) -> Self {
        PairElem {
            s: GroupRingElem::one(group),
            t: GroupRingElem::zero(group),
        }
    }

    /// Semisimple component (classes of simple modules).
    pub fn s_part(&self) -> &GroupRingElem<R> {
        &self.s
    }

    /// Projective component (multiplicities of the `P_S`).
    pub fn t_part(&self) -> &GroupRingElem<R> {
        &self.t
    }

    pub fn group(&self) -> &AbelianGroup {
        self.s.group()
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.t.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(PairElem {
            s: self.s.add(&other.s)?,
            t: self.t.add(&other.t)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(PairElem {
            s: self.s.sub(&other.s)?,
            t: self.t.sub(&other.t)?,
        })
    }

    pub fn neg(&self) -> Self {
        PairElem {
            s: self.s.neg(),
            t: self.t.neg(),
        }
    }

    pub fn scale(&self, k: &R) -> Self {
        PairElem {
            s: self.s.scale(k),
            t: self.t.scale(k),
        }
    }

    /// Coordinates in the basis `[S_0, …, S_{s-1}, P_{S_0}, …, P_{S_{s-1}}]`.
    pub fn to_vector(&self) -> Vec<R> {
        let mut v = self.s.to_dense();
        v.extend(self.t.to_dense());
        v
    }

    pub fn from_vector(group: &AbelianGroup, mut v: Vec<R>) -> Result<Self> {
        if v.len() != 2 * group.size() {
            return Err(Error::LengthMismatch {
                expected: 2 * group.size(),
                got: v.len(),
            });
        }
        let t = v.split_off(group.size());
        Ok(PairElem {
            s: GroupRingElem::from_dense(group, v)?,
            t: GroupRingElem::from_dense(group, t)?,
        })
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&R) -> S) -> PairElem<S> {
        PairElem {
            s: self.s.map(&f),
            t: self.t.map(&f),
        }
    }
}

/// The projective class ring attached to a structure group and a canonical element.
#[derive(Debug, Clone)]
pub struct PcRing {
    group: AbelianGroup,
    c: CanonicalElement,
}

impl PcRing {
    pub fn new(group: &AbelianGroup, c: GroupRingElem<BigInt>) -> Result<Self> {
        if c.group() != group {
            return Err(Error::GroupMismatch {
                left: group.orders().to_vec(),
                right: c.group().orders().to_vec(),
            });
        }
        let c = CanonicalElement::new(c)?;
        let ring = PcRing {
            group: group.clone(),
            c,
        };
        debug_assert!(ring.c_is_central());
        Ok(ring)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn canonical(&self) -> &CanonicalElement {
        &self.c
    }

    pub fn c(&self) -> &GroupRingElem<BigInt> {
        self.c.element()
    }

    /// Order of the structure group.
    pub fn s(&self) -> usize {
        self.group.size()
    }

    /// `c δ_a = δ_a c` for every group element.
    pub fn c_is_central(&self) -> bool {
        (0..self.s()).all(|a| {
            let d = GroupRingElem::<BigInt>::delta_index(&self.group, a);
            self.c().mul(&d).ok() == d.mul(self.c()).ok()
        })
    }

    fn c_in<R: Scalar>(&self) -> GroupRingElem<R> {
        self.c().map(|v| R::from_integer(&self.group, v))
    }

    fn check<R: Scalar>(&self, x: &PairElem<R>) -> Result<()> {
        if *x.group() == self.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                left: self.group.orders().to_vec(),
                right: x.group().orders().to_vec(),
            })
        }
    }

    /// `(s1, t1)(s2, t2) = (s1 s2, s1 t2 + t1 s2 + t1 c t2)`.
    pub fn pair_mul<R: Scalar>(&self, x: &PairElem<R>, y: &PairElem<R>) -> Result<PairElem<R>> {
        self.check(x)?;
        self.check(y)?;
        let s = x.s.mul(&y.s)?;
        let mut t = x.s.mul(&y.t)?.add(&x.t.mul(&y.s)?)?;
        if !x.t.is_zero() && !y.t.is_zero() {
            let tct = x.t.mul(&self.c_in())?.mul(&y.t)?;
            t = t.add(&tct)?;
        }
        Ok(PairElem { s, t })
    }

    /// Class `[S]` of a simple module.
    pub fn simple_class(&self, e: &GroupElement) -> Result<PairElem<BigInt>> {
        Ok(PairElem {
            s: GroupRingElem::delta(&self.group, e)?,
            t: GroupRingElem::zero(&self.group),
        })
    }

    /// Class `[P_S]` of an indecomposable projective module.
    pub fn projective_class(&self, e: &GroupElement) -> Result<PairElem<BigInt>> {
        Ok(PairElem {
            s: GroupRingElem::zero(&self.group),
            t: GroupRingElem::delta(&self.group, e)?,
        })
    }

    /// The `2s` module classes, simples first, each block in canonical order.
    pub fn basis(&self) -> Vec<PairElem<BigInt>> {
        let simples = (0..self.s()).map(|i| PairElem {
            s: GroupRingElem::delta_index(&self.group, i),
            t: GroupRingElem::zero(&self.group),
        });
        let projectives = (0..self.s()).map(|i| PairElem {
            s: GroupRingElem::zero(&self.group),
            t: GroupRingElem::delta_index(&self.group, i),
        });
        simples.chain(projectives).collect()
    }

    /// Dimension vector `(s, t) ↦ s + t c`, a ring map onto `ZS`.
    pub fn bar<R: Scalar>(&self, x: &PairElem<R>) -> Result<GroupRingElem<R>> {
        self.check(x)?;
        x.s.add(&x.t.mul(&self.c_in())?)
    }
}
