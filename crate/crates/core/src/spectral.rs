//! Structure of the complexified ring `C ⊗ K₀ᵖ`.
//!
//! Under the Fourier transform `CS ≅ C^S` the pair ring becomes a product of
//! `s` two-dimensional blocks, one per character `x`, each with
//! multiplication `(a, b)(a', b') = (aa', ab' + ba' + λ_x bb')` where
//! `λ_x = α(c)(x)`. A block with `λ_x ≠ 0` splits as `C × C`, a block with
//! `λ_x = 0` is the dual numbers. Hence `C^{2r} × C[ε]^{s-r}` with `r` the
//! number of characters not vanishing at `c`.
//!
//! Labelling: the character with label `b` sends `K^a` to
//! `ζ_N^{Σ_i (N/n_i) a_i b_i}`, so the support `F` of `α(c)` is also the set
//! `B_c` of elements pairing nontrivially with `c`.

use std::fmt;

use num_bigint::BigInt;

use crate::cyclotomic::CycloNum;
use crate::error::Result;
use crate::group::{fourier, inverse_fourier, AbelianGroup, GroupElement, GroupRingElem};
use crate::linalg;
use crate::pcr::{PairElem, PcRing};

/// `C^{2r} × C[ε]^{s-r}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition {
    pub r: usize,
    pub s: usize,
}

impl Decomposition {
    pub fn split_factors(&self) -> usize {
        2 * self.r
    }

    pub fn dual_number_factors(&self) -> usize {
        self.s - self.r
    }

    /// Complex dimension, always `2s`.
    pub fn dimension(&self) -> usize {
        self.split_factors() + 2 * self.dual_number_factors()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "C^{} x C[eps]^{}",
            self.split_factors(),
            self.dual_number_factors()
        )
    }
}

/// Fourier transform of `c` and its support.
#[derive(Debug, Clone)]
pub struct Spectrum {
    group: AbelianGroup,
    fourier_c: Vec<CycloNum>,
    support: Vec<usize>,
}

impl Spectrum {
    pub fn fourier_c(&self) -> &[CycloNum] {
        &self.fourier_c
    }

    /// Indices (canonical order) of the characters not vanishing at `c`.
    pub fn support_indices(&self) -> &[usize] {
        &self.support
    }

    pub fn support(&self) -> Vec<GroupElement> {
        self.support.iter().map(|&i| self.group.element_at(i)).collect()
    }

    pub fn in_support(&self, index: usize) -> bool {
        !self.fourier_c[index].is_zero()
    }

    pub fn r(&self) -> usize {
        self.support.len()
    }

    pub fn s(&self) -> usize {
        self.group.size()
    }

    pub fn decomposition(&self) -> Decomposition {
        Decomposition {
            r: self.r(),
            s: self.s(),
        }
    }

    /// `B_c = {K^x : β(K^x, c) ≠ 0}`.
    pub fn b_c(&self) -> BcSet {
        BcSet(self.support())
    }
}

/// Group elements pairing nontrivially with `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BcSet(Vec<GroupElement>);

impl BcSet {
    pub fn elements(&self) -> &[GroupElement] {
        &self.0
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        self.0.contains(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn spectrum(ring: &PcRing) -> Spectrum {
    let fourier_c = fourier(ring.c());
    let support = (0..fourier_c.len())
        .filter(|&i| !fourier_c[i].is_zero())
        .collect();
    Spectrum {
        group: ring.group().clone(),
        fourier_c,
        support,
    }
}

pub fn decomposition(ring: &PcRing) -> Decomposition {
    spectrum(ring).decomposition()
}

/// A pair element in Fourier coordinates: two functions on the character labels.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierPair {
    pub s: Vec<CycloNum>,
    pub t: Vec<CycloNum>,
}

impl FourierPair {
    fn dirac(group: &AbelianGroup, s_at: Option<(usize, CycloNum)>, t_at: Option<(usize, CycloNum)>) -> Self {
        let zero = group.field().zero();
        let mut s = vec![zero.clone(); group.size()];
        let mut t = vec![zero; group.size()];
        if let Some((i, v)) = s_at {
            s[i] = v;
        }
        if let Some((i, v)) = t_at {
            t[i] = v;
        }
        FourierPair { s, t }
    }

    /// Back to group-ring coordinates, componentwise.
    pub fn to_group_ring(&self, group: &AbelianGroup) -> PairElem<CycloNum> {
        let s = inverse_fourier(group, &self.s).expect("length is the group order");
        let t = inverse_fourier(group, &self.t).expect("length is the group order");
        PairElem::new(s, t).expect("same group")
    }
}

/// Complete system of primitive orthogonal idempotents in Fourier
/// coordinates: `(δ_y, 0)` for `y ∉ F`, then `(δ_x, -δ_x/λ_x)` and
/// `(0, δ_x/λ_x)` for `x ∈ F`.
pub fn idempotent_system_fourier(ring: &PcRing) -> Vec<FourierPair> {
    idempotents_from_spectrum(ring.group(), &spectrum(ring))
}

fn idempotents_from_spectrum(group: &AbelianGroup, spec: &Spectrum) -> Vec<FourierPair> {
    let one = group.field().one();
    let mut out = Vec::with_capacity(spec.s() + spec.r());
    for y in (0..spec.s()).filter(|&y| !spec.in_support(y)) {
        out.push(FourierPair::dirac(group, Some((y, one.clone())), None));
    }
    for &x in spec.support_indices() {
        let inv = spec.fourier_c[x].inv().expect("λ_x is nonzero on the support");
        out.push(FourierPair::dirac(group, Some((x, one.clone())), Some((x, -&inv))));
        out.push(FourierPair::dirac(group, None, Some((x, inv))));
    }
    out
}

/// The idempotent system pulled back to group-ring coordinates.
pub fn idempotent_system(ring: &PcRing) -> Vec<PairElem<CycloNum>> {
    idempotent_system_fourier(ring)
        .iter()
        .map(|e| e.to_group_ring(ring.group()))
        .collect()
}

/// `(0, δ_y)` in Fourier coordinates for every `y ∉ F`.
pub fn nilradical_basis_fourier(ring: &PcRing) -> Vec<FourierPair> {
    let spec = spectrum(ring);
    let one = ring.group().field().one();
    (0..spec.s())
        .filter(|&y| !spec.in_support(y))
        .map(|y| FourierPair::dirac(ring.group(), None, Some((y, one.clone()))))
        .collect()
}

/// Basis of the nilradical: `(0, α⁻¹(δ_y))` for `y ∉ F`.
pub fn nilradical_basis(ring: &PcRing) -> Vec<PairElem<CycloNum>> {
    nilradical_basis_fourier(ring)
        .iter()
        .map(|e| e.to_group_ring(ring.group()))
        .collect()
}

/// Canonical representative of the multiplicative structure up to central units.
#[derive(Debug, Clone)]
pub struct Normalization {
    /// `c' = α⁻¹(1_F)`.
    pub c_prime: GroupRingElem<CycloNum>,
    /// Fourier coordinates of the unit `u`: `λ_x` on `F`, `1` elsewhere.
    pub unit_fourier: Vec<CycloNum>,
    pub unit: GroupRingElem<CycloNum>,
}

/// Normalizes a central element given by its Fourier transform.
pub fn normalize_fourier(group: &AbelianGroup, values: &[CycloNum]) -> Result<Normalization> {
    let field = group.field();
    let indicator: Vec<CycloNum> = values
        .iter()
        .map(|v| if v.is_zero() { field.zero() } else { field.one() })
        .collect();
    let unit_fourier: Vec<CycloNum> = values
        .iter()
        .map(|v| if v.is_zero() { field.one() } else { v.clone() })
        .collect();
    Ok(Normalization {
        c_prime: inverse_fourier(group, &indicator)?,
        unit: inverse_fourier(group, &unit_fourier)?,
        unit_fourier,
    })
}

pub fn normalize_structure(ring: &PcRing) -> Normalization {
    normalize_fourier(ring.group(), spectrum(ring).fourier_c())
        .expect("the transform has the group order as length")
}

/// Everything the spectral analysis produces for one ring.
#[derive(Debug, Clone)]
pub struct SpectralReport {
    pub spectrum: Spectrum,
    pub decomposition: Decomposition,
    pub idempotents_fourier: Vec<FourierPair>,
    pub idempotents: Vec<PairElem<CycloNum>>,
    pub nilpotents_fourier: Vec<FourierPair>,
    pub nilpotents: Vec<PairElem<CycloNum>>,
    pub normalization: Normalization,
}

pub fn analyze(ring: &PcRing) -> SpectralReport {
    let spectrum = spectrum(ring);
    let group = ring.group();
    let idempotents_fourier = idempotents_from_spectrum(group, &spectrum);
    let idempotents = idempotents_fourier
        .iter()
        .map(|e| e.to_group_ring(group))
        .collect();
    let nilpotents_fourier = nilradical_basis_fourier(ring);
    let nilpotents = nilpotents_fourier
        .iter()
        .map(|e| e.to_group_ring(group))
        .collect();
    let normalization = normalize_fourier(group, spectrum.fourier_c()).expect("lengths agree");
    SpectralReport {
        decomposition: spectrum.decomposition(),
        spectrum,
        idempotents_fourier,
        idempotents,
        nilpotents_fourier,
        nilpotents,
        normalization,
    }
}

/// Outcome of checking an idempotent family with exact pair multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentAudit {
    pub count: usize,
    pub expected_count: usize,
    pub all_idempotent: bool,
    pub pairwise_orthogonal: bool,
    pub sums_to_unit: bool,
}

impl IdempotentAudit {
    pub fn passed(&self) -> bool {
        self.count == self.expected_count
            && self.all_idempotent
            && self.pairwise_orthogonal
            && self.sums_to_unit
    }
}

/// Checks `e² = e`, `e_i e_j = 0` for every ordered pair `i ≠ j`, and `Σ e = 1`.
pub fn audit_idempotents(ring: &PcRing, family: &[PairElem<CycloNum>]) -> Result<IdempotentAudit> {
    let group = ring.group();
    let mut all_idempotent = true;
    let mut pairwise_orthogonal = true;
    let mut total = PairElem::zero(group);
    for (i, e) in family.iter().enumerate() {
        total = total.add(e)?;
        for (j, f) in family.iter().enumerate() {
            let p = ring.pair_mul(e, f)?;
            if i == j {
                all_idempotent &= p == *e;
            } else {
                pairwise_orthogonal &= p.is_zero();
            }
        }
    }
    Ok(IdempotentAudit {
        count: family.len(),
        expected_count: spectrum(ring).r() + ring.s(),
        all_idempotent,
        pairwise_orthogonal,
        sums_to_unit: total == PairElem::unit(group),
    })
}

/// Outcome of checking the nilradical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentAudit {
    pub count: usize,
    pub expected_count: usize,
    pub mutually_annihilating: bool,
    pub orthogonal_to_b_c: bool,
}

impl NilpotentAudit {
    pub fn passed(&self) -> bool {
        self.count == self.expected_count && self.mutually_annihilating && self.orthogonal_to_b_c
    }
}

/// Checks `n_i n_j = 0` for all `i, j` (squares included), and that each
/// projective part pairs to zero with every element of `B_c` under β.
pub fn audit_nilpotents(ring: &PcRing, family: &[PairElem<CycloNum>]) -> Result<NilpotentAudit> {
    let spec = spectrum(ring);
    let mut mutually_annihilating = true;
    for a in family {
        for b in family {
            mutually_annihilating &= ring.pair_mul(a, b)?.is_zero();
        }
    }
    let mut orthogonal_to_b_c = true;
    for n in family {
        orthogonal_to_b_c &= n.s_part().is_zero();
        for x in spec.b_c().elements() {
            orthogonal_to_b_c &= bilinear_form(n.t_part(), x)?.is_zero();
        }
    }
    Ok(NilpotentAudit {
        count: family.len(),
        expected_count: spec.s() - spec.r(),
        mutually_annihilating,
        orthogonal_to_b_c,
    })
}

/// `β(f, K^x) = Σ_a f_a q^{a x}`.
pub fn bilinear_form(f: &GroupRingElem<CycloNum>, x: &GroupElement) -> Result<CycloNum> {
    crate::group::character_value(f.group(), x, f)
}

/// Rank of the union of the two families as vectors in `C^{2s}`.
pub fn combined_rank(idempotents: &[PairElem<CycloNum>], nilpotents: &[PairElem<CycloNum>]) -> usize {
    let rows: Vec<Vec<CycloNum>> = idempotents
        .iter()
        .chain(nilpotents)
        .map(PairElem::to_vector)
        .collect();
    linalg::rank(&rows)
}

/// `(s, t) ↦` the same element with integer coefficients lifted to Q(ζ_N).
pub fn complexify(x: &PairElem<BigInt>) -> PairElem<CycloNum> {
    let field = x.group().field().clone();
    x.map(|v| field.from_integer(v))
}
