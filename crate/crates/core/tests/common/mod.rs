//! Seeded instance corpus shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use pcring::group::trace_element;
use pcring::{instances, AbelianGroup, GroupRingElem, PairElem, PcRing};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5eed_2024;
pub const CORPUS_SIZE: usize = 120;
/// Cap on |G| so the brute-force oracle stays cheap.
pub const MAX_ORDER: usize = 32;
pub const MAX_CONDUCTOR: usize = 30;

pub struct CorpusInstance {
    pub label: String,
    pub ring: PcRing,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// 1 to 4 cyclic factors, lcm at most 30, order at most 32.
pub fn random_orders(rng: &mut impl Rng) -> Vec<usize> {
    loop {
        let k = rng.random_range(1..=4);
        let orders: Vec<usize> = (0..k).map(|_| rng.random_range(1..=MAX_CONDUCTOR)).collect();
        let size: usize = orders.iter().product();
        let conductor = orders.iter().fold(1, |a, &b| lcm(a, b));
        if (2..=MAX_ORDER).contains(&size) && conductor <= MAX_CONDUCTOR {
            return orders;
        }
    }
}

/// Sparse random `c` with coefficients in 0..=5, identity coefficient ≥ 1
/// and augmentation ≥ 2.
pub fn random_sparse_c(group: &AbelianGroup, rng: &mut impl Rng) -> GroupRingElem<BigInt> {
    let s = group.size();
    let mut dense = vec![0i64; s];
    dense[0] = rng.random_range(1..=5);
    let extra = rng.random_range(0..=s.min(6));
    for _ in 0..extra {
        dense[rng.random_range(0..s)] = rng.random_range(0..=5);
    }
    dense[0] = dense[0].max(1);
    if dense.iter().sum::<i64>() < 2 {
        dense[rng.random_range(0..s)] += 1;
    }
    GroupRingElem::from_dense(group, dense.into_iter().map(BigInt::from).collect()).unwrap()
}

/// `c = Σ m_coset · (sum of the coset)` for the cyclic subgroup generated by
/// a random element; such `c` vanish on every character nontrivial on that
/// subgroup, so these instances have `r < s`.
pub fn random_coset_c(group: &AbelianGroup, rng: &mut impl Rng) -> GroupRingElem<BigInt> {
    let s = group.size();
    let h = rng.random_range(1..s);
    let mut subgroup = vec![0usize];
    let mut x = h;
    while x != 0 {
        subgroup.push(x);
        x = group.mul_index(x, h);
    }
    let mut seen = vec![false; s];
    let mut dense = vec![0i64; s];
    for rep in 0..s {
        if seen[rep] {
            continue;
        }
        let m = if rep == 0 { rng.random_range(1..=5) } else { rng.random_range(0..=5) };
        for &k in &subgroup {
            let e = group.mul_index(rep, k);
            seen[e] = true;
            dense[e] = m;
        }
    }
    if dense.iter().sum::<i64>() < 2 {
        dense[0] += 1;
    }
    GroupRingElem::from_dense(group, dense.into_iter().map(BigInt::from).collect()).unwrap()
}

fn fixed(label: &str, orders: &[usize], c: GroupRingElem<BigInt>) -> CorpusInstance {
    let group = AbelianGroup::new(orders).unwrap();
    assert_eq!(c.group(), &group);
    CorpusInstance {
        label: label.to_string(),
        ring: PcRing::new(&group, c).unwrap(),
    }
}

/// Staples first, then seeded random instances; `CORPUS_SIZE` in total.
pub fn corpus() -> Vec<CorpusInstance> {
    let mut out = Vec::with_capacity(CORPUS_SIZE);
    for n in 2..=12 {
        let d = instances::uq_sl2(n).unwrap();
        out.push(CorpusInstance {
            label: d.name.clone(),
            ring: d.ring().unwrap().clone(),
        });
    }
    let klein = AbelianGroup::new(&[2, 2]).unwrap();
    out.push(fixed("klein-trace", &[2, 2], trace_element(&klein)));
    let z30 = AbelianGroup::new(&[30]).unwrap();
    out.push(fixed("z30-trace", &[30], trace_element(&z30)));
    let z2 = AbelianGroup::new(&[2]).unwrap();
    out.push(fixed(
        "z2-two-nonzero",
        &[2],
        GroupRingElem::from_dense(&z2, vec![2.into(), 1.into()]).unwrap(),
    ));
    let z2x4x4 = AbelianGroup::new(&[2, 4, 4]).unwrap();
    out.push(fixed("z2xz4xz4-trace", &[2, 4, 4], trace_element(&z2x4x4)));

    let mut rng = rng(CORPUS_SEED);
    let mut i = 0;
    while out.len() < CORPUS_SIZE {
        let orders = random_orders(&mut rng);
        let group = AbelianGroup::new(&orders).unwrap();
        let coset = rng.random_bool(0.5);
        let c = if coset {
            random_coset_c(&group, &mut rng)
        } else {
            random_sparse_c(&group, &mut rng)
        };
        let label = format!("random-{i}-{}-{}", group.name(), if coset { "coset" } else { "sparse" });
        out.push(CorpusInstance {
            label,
            ring: PcRing::new(&group, c).unwrap(),
        });
        i += 1;
    }
    out
}

pub fn random_group_ring(group: &AbelianGroup, rng: &mut impl Rng, bound: i64) -> GroupRingElem<BigInt> {
    let dense = (0..group.size())
        .map(|_| {
            if rng.random_bool(0.4) {
                BigInt::from(rng.random_range(-bound..=bound))
            } else {
                BigInt::from(0)
            }
        })
        .collect();
    GroupRingElem::from_dense(group, dense).unwrap()
}

pub fn random_pair(group: &AbelianGroup, rng: &mut impl Rng, bound: i64) -> PairElem<BigInt> {
    PairElem::new(random_group_ring(group, rng, bound), random_group_ring(group, rng, bound)).unwrap()
}

pub fn choose<'a, T>(items: &'a [T], rng: &mut impl Rng) -> &'a T {
    items.choose(rng).unwrap()
}
