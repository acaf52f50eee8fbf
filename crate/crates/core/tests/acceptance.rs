//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pcring::cyclotomic::{divisors, euler_phi};
use pcring::group::{fourier, inverse_fourier};
use pcring::linalg::Span;
use pcring::{cyclotomic_polynomial, instances, oracle, spectral, CycloNum, GroupRingElem, IntPolynomial, PairElem};
use rand::Rng;

use common::{corpus, random_group_ring, random_pair, rng, CorpusInstance};

const CRITERION_1_BUDGET: Duration = Duration::from_secs(1);
const CRITERION_4_BUDGET: Duration = Duration::from_secs(60);
const MIN_CORPUS: usize = 100;
const SAMPLES_PER_INSTANCE: usize = 100;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 2..=12 {
        let d = instances::uq_sl2(n).unwrap();
        let spec = spectral::spectrum(d.ring().unwrap());
        let dec = spec.decomposition().to_string();
        if spec.r() != 1 || dec != format!("C^2 x C[eps]^{}", n - 1) {
            bad.push(format!("n={n}: r={} {dec}", spec.r()));
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < CRITERION_1_BUDGET;
    outcome(ok, format!("uq_sl2(2..=12) golden values, {elapsed:.2?} (budget 1 s) {bad:?}"))
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=12 {
        let d = instances::uq_sl2(n).unwrap();
        let ring = d.ring().unwrap();
        let group = ring.group();
        let s = group.size();
        let spec = spectral::spectrum(ring);
        if spec.b_c().elements() != [group.identity()] {
            bad.push(format!("n={n}: B_c = {:?}", spec.b_c().elements()));
        }
        // Augmentation ideal inside the projective component:
        // (0, δ_S − δ_1) for S ≠ 1.
        let field = group.field();
        let aug: Vec<Vec<CycloNum>> = (1..s)
            .map(|i| {
                let mut v = vec![field.zero(); 2 * s];
                v[s + i] = field.one();
                v[s] = field.from_integer(&BigInt::from(-1));
                v
            })
            .collect();
        let nil: Vec<Vec<CycloNum>> = spectral::nilradical_basis(ring).iter().map(PairElem::to_vector).collect();
        let span_aug = Span::new(&aug, 2 * s);
        let span_nil = Span::new(&nil, 2 * s);
        let same = span_aug.dim() == n - 1
            && span_nil.dim() == n - 1
            && nil.iter().all(|v| span_aug.contains(v))
            && aug.iter().all(|v| span_nil.contains(v));
        if !same {
            bad.push(format!("n={n}: nilradical span differs from the augmentation ideal"));
        }
        for a in 0..s {
            for b in 0..s {
                let t = GroupRingElem::<BigInt>::delta_index(group, a)
                    .sub(&GroupRingElem::delta_index(group, b))
                    .unwrap();
                let x = PairElem::new(GroupRingElem::zero(group), t).unwrap();
                if !ring.pair_mul(&x, &x).unwrap().is_zero() {
                    bad.push(format!("n={n}: (0, d_{a} - d_{b})^2 != 0"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("B_c, augmentation ideal and square-zero differences for n <= 12 {bad:?}"))
}

fn criterion_3(corpus: &[CorpusInstance]) -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for inst in corpus {
        let family = spectral::idempotent_system(&inst.ring);
        let audit = spectral::audit_idempotents(&inst.ring, &family).unwrap();
        if !audit.passed() {
            bad.push(format!("{}: {audit:?}", inst.label));
        }
    }
    outcome(
        bad.is_empty(),
        format!("s + r idempotents, e^2 = e, e_i e_j = 0, sum = 1 on {} instances, {:.2?} {bad:?}", corpus.len(), start.elapsed()),
    )
}

fn criterion_4(corpus: &[CorpusInstance]) -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut degenerate = 0;
    for inst in corpus {
        let table = oracle::build_table(&inst.ring).unwrap();
        let spec = spectral::spectrum(&inst.ring);
        if spec.r() < spec.s() {
            degenerate += 1;
        }
        let matches = oracle::table_matches_pair_ring(&table, &inst.ring);
        let associative = table.is_associative();
        let dim = oracle::radical_dimension(&table).ok();
        if !matches || !associative || dim != Some(spec.s() - spec.r()) {
            bad.push(format!("{}: matches={matches} assoc={associative} rad={dim:?}", inst.label));
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && corpus.len() >= MIN_CORPUS && elapsed < CRITERION_4_BUDGET;
    outcome(
        ok,
        format!(
            "table vs pair_mul, associativity, radical dim = s - r on {} instances ({degenerate} with r < s), {elapsed:.2?} (budget 60 s) {bad:?}",
            corpus.len()
        ),
    )
}

fn criterion_5(corpus: &[CorpusInstance]) -> Outcome {
    let mut bad = Vec::new();
    for inst in corpus {
        let table = oracle::build_table(&inst.ring).unwrap();
        let rad = oracle::radical(&table).unwrap();
        let nil = spectral::nilradical_basis(&inst.ring);
        let spec = spectral::spectrum(&inst.ring);
        if rad.dim() != spec.s() - spec.r() || !oracle::radical_matches(&rad, inst.ring.group(), &nil) {
            bad.push(inst.label.clone());
        }
    }
    outcome(bad.is_empty(), format!("trace-form kernel = nilradical span on {} instances {bad:?}", corpus.len()))
}

fn criterion_6(corpus: &[CorpusInstance]) -> Outcome {
    let mut rng = rng(6);
    let mut bad = Vec::new();
    for inst in corpus {
        let ring = &inst.ring;
        let g = ring.group();
        for _ in 0..SAMPLES_PER_INSTANCE {
            let x = random_pair(g, &mut rng, 5);
            let y = random_pair(g, &mut rng, 5);
            let z = random_pair(g, &mut rng, 5);
            let xy = ring.pair_mul(&x, &y).unwrap();
            let hom = ring.bar(&xy).unwrap() == ring.bar(&x).unwrap().mul(&ring.bar(&y).unwrap()).unwrap();
            let assoc = ring.pair_mul(&xy, &z).unwrap() == ring.pair_mul(&x, &ring.pair_mul(&y, &z).unwrap()).unwrap();
            let comm = xy == ring.pair_mul(&y, &x).unwrap();
            if !(hom && assoc && comm) {
                bad.push(format!("{}: hom={hom} assoc={assoc} comm={comm}", inst.label));
                break;
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("bar homomorphism, associativity, commutativity on {SAMPLES_PER_INSTANCE} samples x {} instances {bad:?}", corpus.len()),
    )
}

fn criterion_7(corpus: &[CorpusInstance]) -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=60 {
        let phi = cyclotomic_polynomial(n).unwrap();
        if phi.degree() != Some(euler_phi(n)) {
            bad.push(format!("deg Phi_{n}"));
        }
        let product = divisors(n)
            .into_iter()
            .map(|d| cyclotomic_polynomial(d).unwrap())
            .fold(IntPolynomial::from_i64(&[1]), |acc, p| acc.mul(&p));
        if product != IntPolynomial::x_pow_minus_one(n) {
            bad.push(format!("prod Phi_d for N={n}"));
        }
    }
    let mut rng = rng(7);
    for inst in corpus {
        let g = inst.ring.group();
        for _ in 0..5 {
            let bound = 1 + rng.random_range(0..20);
            let x = random_group_ring(g, &mut rng, bound).to_cyclotomic();
            if inverse_fourier(g, &fourier(&x)).unwrap() != x {
                bad.push(format!("round trip on {}", inst.label));
                break;
            }
        }
    }
    outcome(bad.is_empty(), format!("Phi identities for N <= 60, Fourier round trip on {} groups {bad:?}", corpus.len()))
}

fn criterion_8(corpus: &[CorpusInstance]) -> Outcome {
    let mut bad = Vec::new();
    for inst in corpus {
        let idem = spectral::idempotent_system(&inst.ring);
        let nil = spectral::nilradical_basis(&inst.ring);
        let rank = spectral::combined_rank(&idem, &nil);
        if idem.len() + nil.len() != 2 * inst.ring.s() || rank != 2 * inst.ring.s() {
            bad.push(format!("{}: {} + {} vectors, rank {rank}", inst.label, idem.len(), nil.len()));
        }
    }
    outcome(bad.is_empty(), format!("idempotents and nilpotents have rank 2s on {} instances {bad:?}", corpus.len()))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let checks: Vec<(usize, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(criterion_2)),
        (3, Box::new(|| criterion_3(&corpus))),
        (4, Box::new(|| criterion_4(&corpus))),
        (5, Box::new(|| criterion_5(&corpus))),
        (6, Box::new(|| criterion_6(&corpus))),
        (7, Box::new(|| criterion_7(&corpus))),
        (8, Box::new(|| criterion_8(&corpus))),
    ];
    let mut failures = 0;
    for (id, check) in checks {
        let o = check();
        if !o.passed {
            failures += 1;
        }
        println!("criterion {id}: {}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
