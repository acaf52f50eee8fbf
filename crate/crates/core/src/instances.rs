//! Named instances and the validated custom-input path.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::{trace_element, AbelianGroup, GroupElement, GroupRingElem};
use crate::pcr::PcRing;
use crate::spectral::Decomposition;

/// Expected values for instances with a known answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Golden {
    pub r: usize,
    pub decomposition: Decomposition,
}

#[derive(Debug, Clone)]
pub enum InstanceKind {
    /// Non-semisimple: a validated pair ring.
    Projective(PcRing),
    /// Semisimple (functions on a group): the projective class ring is just `ZG`.
    Semisimple,
}

#[derive(Debug, Clone)]
pub struct InstanceDescriptor {
    pub name: String,
    pub group: AbelianGroup,
    pub kind: InstanceKind,
    pub expected: Option<Golden>,
}

impl InstanceDescriptor {
    pub fn ring(&self) -> Option<&PcRing> {
        match &self.kind {
            InstanceKind::Projective(ring) => Some(ring),
            InstanceKind::Semisimple => None,
        }
    }

    pub fn is_semisimple(&self) -> bool {
        matches!(self.kind, InstanceKind::Semisimple)
    }
}

/// Half-quantum group `u_q⁺(sl₂)` at a primitive `n`-th root of unity:
/// cyclic structure group of order `n`, `c` the trace element.
pub fn uq_sl2(n: usize) -> Result<InstanceDescriptor> {
    if n < 2 {
        return Err(Error::BadRootOrder(n));
    }
    let group = AbelianGroup::new(&[n])?;
    let ring = PcRing::new(&group, trace_element(&group))?;
    Ok(InstanceDescriptor {
        name: format!("uq-sl2(n={n})"),
        group,
        kind: InstanceKind::Projective(ring),
        expected: Some(Golden {
            r: 1,
            decomposition: Decomposition { r: 1, s: n },
        }),
    })
}

/// Functions `k^G` on a finite abelian group.
pub fn dual_group_algebra(orders: &[usize]) -> Result<InstanceDescriptor> {
    let group = AbelianGroup::new(orders)?;
    Ok(InstanceDescriptor {
        name: format!("dual-group({})", group.name()),
        group,
        kind: InstanceKind::Semisimple,
        expected: None,
    })
}

/// A user-supplied structure group and canonical element.
pub fn custom(orders: &[usize], terms: Vec<(Vec<usize>, BigInt)>) -> Result<InstanceDescriptor> {
    let group = AbelianGroup::new(orders)?;
    let c = GroupRingElem::from_terms(
        &group,
        terms.into_iter().map(|(e, v)| (GroupElement::new(e), v)),
    )?;
    custom_element(c)
}

pub fn custom_element(c: GroupRingElem<BigInt>) -> Result<InstanceDescriptor> {
    let group = c.group().clone();
    let ring = PcRing::new(&group, c)?;
    Ok(InstanceDescriptor {
        name: format!("custom({})", group.name()),
        group,
        kind: InstanceKind::Projective(ring),
        expected: None,
    })
}

/// `Z[Z2 x Z3]`-style name of an integral group ring; trivial factors are
/// dropped and the trivial group gives `Z`.
pub fn group_ring_name(group: &AbelianGroup) -> String {
    let factors: Vec<String> = group
        .orders()
        .iter()
        .filter(|&&n| n > 1)
        .map(|n| format!("Z{n}"))
        .collect();
    if factors.is_empty() {
        "Z".to_string()
    } else {
        format!("Z[{}]", factors.join(" x "))
    }
}
