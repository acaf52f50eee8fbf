//! Brute-force realization of `K₀ᵖ` as a structure-constants algebra on the
//! `2s` module classes, used to cross-check the pair ring and the spectral
//! analysis.
//!
//! The table is assembled directly from module-level facts:
//! `[S][T] = [ST]`, `[S][P_T] = [P_{ST}]`, `[P_T][S] = [P_{TS}]` and
//! `[P_S][P_T] = Σ_U c_U [P_{SUT}]`. The radical is the kernel of the trace
//! form `(x, y) ↦ tr(L_{xy})`, computed over Q.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::cyclotomic::CycloNum;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::linalg::{self, Span};
use crate::pcr::{PairElem, PcRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisLabel {
    Simple(GroupElement),
    Projective(GroupElement),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Simple(e) => write!(f, "[{e}]"),
            BasisLabel::Projective(e) => write!(f, "[P_{e}]"),
        }
    }
}

/// Dense structure constants `e_i e_j = Σ_k c_{ijk} e_k` on the basis
/// `[S_0 … S_{s-1}, P_{S_0} … P_{S_{s-1}}]`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureTable {
    group: AbelianGroup,
    dim: usize,
    constants: Vec<i64>,
}

pub fn build_table(ring: &PcRing) -> Result<StructureTable> {
    let group = ring.group();
    let s = group.size();
    let dim = 2 * s;
    let c: Vec<(usize, i64)> = ring
        .c()
        .indexed_terms()
        .map(|(u, v)| v.to_i64().map(|v| (u, v)).ok_or(Error::TableOverflow))
        .collect::<Result<_>>()?;
    let mut table = StructureTable {
        group: group.clone(),
        dim,
        constants: vec![0; dim * dim * dim],
    };
    for a in 0..s {
        for b in 0..s {
            let ab = group.mul_index(a, b);
            let o1 = table.offset(a, b) + ab;
            table.constants[o1] = 1;
            let o2 = table.offset(a, s + b) + s + ab;
            table.constants[o2] = 1;
            let o3 = table.offset(s + a, b) + s + ab;
            table.constants[o3] = 1;
            let base = table.offset(s + a, s + b);
            for &(u, cu) in &c {
                let k = s + group.mul_index(group.mul_index(a, u), b);
                let slot = &mut table.constants[base + k];
                *slot = slot.checked_add(cu).ok_or(Error::TableOverflow)?;
            }
        }
    }
    Ok(table)
}

impl StructureTable {
    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.dim + j) * self.dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn label(&self, i: usize) -> BasisLabel {
        let s = self.group.size();
        if i < s {
            BasisLabel::Simple(self.group.element_at(i))
        } else {
            BasisLabel::Projective(self.group.element_at(i - s))
        }
    }

    /// Coefficients of `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[i64] {
        let o = self.offset(i, j);
        &self.constants[o..o + self.dim]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> i64 {
        self.constants[self.offset(i, j) + k]
    }

    /// Overwrites one constant (for mutation tests).
    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, value: i64) {
        let o = self.offset(i, j);
        self.constants[o + k] = value;
    }

    pub fn all_nonnegative(&self) -> bool {
        self.constants.iter().all(|&v| v >= 0)
    }

    /// `e_0 = [identity simple]` is a two-sided unit.
    pub fn unit_is_identity_simple(&self) -> bool {
        (0..self.dim).all(|x| {
            (0..self.dim).all(|k| {
                let want = i64::from(k == x);
                self.constant(0, x, k) == want && self.constant(x, 0, k) == want
            })
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.product(i, j) == self.product(j, i)))
    }

    fn sparse_products(&self) -> Vec<Vec<(usize, i64)>> {
        (0..self.dim * self.dim)
            .map(|ij| {
                let (i, j) = (ij / self.dim, ij % self.dim);
                self.product(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(k, &v)| (k, v))
                    .collect()
            })
            .collect()
    }

    /// First basis triple with `(e_i e_j) e_k ≠ e_i (e_j e_k)`, if any.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        let sparse = self.sparse_products();
        let prod = |i: usize, j: usize| &sparse[i * n + j];
        let mut left = vec![0i128; n];
        let mut right = vec![0i128; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    left.iter_mut().for_each(|v| *v = 0);
                    right.iter_mut().for_each(|v| *v = 0);
                    for &(m, a) in prod(i, j) {
                        for &(l, b) in prod(m, k) {
                            left[l] += a as i128 * b as i128;
                        }
                    }
                    for &(m, a) in prod(j, k) {
                        for &(l, b) in prod(i, m) {
                            right[l] += a as i128 * b as i128;
                        }
                    }
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_violation().is_none()
    }

    /// `τ_k = tr(L_{e_k})`.
    fn traces(&self) -> Vec<i128> {
        (0..self.dim)
            .map(|k| (0..self.dim).map(|m| self.constant(k, m, m) as i128).sum())
            .collect()
    }

    /// Gram matrix of the trace form: `T_ij = Σ_k c_{ijk} τ_k`.
    pub fn trace_form(&self) -> Vec<Vec<BigInt>> {
        let tau = self.traces();
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        let v: i128 = self
                            .product(i, j)
                            .iter()
                            .zip(&tau)
                            .map(|(&c, &t)| c as i128 * t)
                            .sum();
                        BigInt::from(v)
                    })
                    .collect()
            })
            .collect()
    }
}

/// Exact rational basis of the radical.
#[derive(Debug, Clone, PartialEq)]
pub struct Radical {
    pub basis: Vec<Vec<BigRational>>,
}

impl Radical {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Kernel of the trace form, after checking associativity on every basis triple.
pub fn radical(table: &StructureTable) -> Result<Radical> {
    if let Some((i, j, k)) = table.associativity_violation() {
        return Err(Error::NotAssociative(i, j, k));
    }
    let gram: Vec<Vec<BigRational>> = table
        .trace_form()
        .into_iter()
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    Ok(Radical {
        basis: linalg::kernel(&gram, &BigRational::zero()),
    })
}

pub fn radical_dimension(table: &StructureTable) -> Result<usize> {
    Ok(radical(table)?.dim())
}

/// Checks every basis product `e_i e_j` of the table against `pair_mul`
/// under `[S] ↦ (δ_S, 0)`, `[P_S] ↦ (0, δ_S)`.
pub fn table_matches_pair_ring(table: &StructureTable, ring: &PcRing) -> bool {
    if table.group != *ring.group() {
        return false;
    }
    let basis = ring.basis();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let Ok(p) = ring.pair_mul(x, y) else {
                return false;
            };
            let expected = table.product(i, j);
            let got = p.to_vector();
            if got.len() != expected.len()
                || got.iter().zip(expected).any(|(g, &e)| *g != BigInt::from(e))
            {
                return false;
            }
        }
    }
    true
}

/// Whether the rational radical basis and a complex nilradical basis span
/// the same subspace of `C^{2s}`, decided by exact membership of every
/// vector of each family in the span of the other.
pub fn radical_matches(radical: &Radical, group: &AbelianGroup, nilpotents: &[PairElem<CycloNum>]) -> bool {
    let field = group.field();
    let ambient = 2 * group.size();
    let embedded: Vec<Vec<CycloNum>> = radical
        .basis
        .iter()
        .map(|v| v.iter().map(|q| field.from_rational(q)).collect())
        .collect();
    let others: Vec<Vec<CycloNum>> = nilpotents.iter().map(PairElem::to_vector).collect();
    let span_a = Span::new(&embedded, ambient);
    let span_b = Span::new(&others, ambient);
    span_a.dim() == radical.dim()
        && span_b.dim() == others.len()
        && span_a.dim() == span_b.dim()
        && others.iter().all(|v| span_a.contains(v))
        && embedded.iter().all(|v| span_b.contains(v))
}

/// Summary of the oracle cross-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub associative: bool,
    pub commutative: bool,
    pub matches_pair_ring: bool,
    pub radical_dim: usize,
    pub radical_matches_spectral: bool,
}

impl OracleVerdict {
    pub fn passed(&self) -> bool {
        self.associative && self.commutative && self.matches_pair_ring && self.radical_matches_spectral
    }
}

pub fn verify(ring: &PcRing, nilpotents: &[PairElem<CycloNum>]) -> Result<OracleVerdict> {
    let table = build_table(ring)?;
    let associative = table.is_associative();
    let commutative = table.is_commutative();
    let matches_pair_ring = table_matches_pair_ring(&table, ring);
    let (radical_dim, radical_matches_spectral) = if associative {
        let rad = radical(&table)?;
        let ok = radical_matches(&rad, ring.group(), nilpotents);
        (rad.dim(), ok)
    } else {
        (0, false)
    };
    Ok(OracleVerdict {
        associative,
        commutative,
        matches_pair_ring,
        radical_dim,
        radical_matches_spectral,
    })
}
