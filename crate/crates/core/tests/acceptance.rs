//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. All checks are exact unless stated.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zccs_core::correlation::FLOAT_AGREEMENT_TOL;
use zccs_core::{
    build_ccc, build_zccs, char_inner, char_phase, profile, verify, Code, CodeSet, CorrelationValue,
    FieldSpec, Params, PhaseSequence, SetKind, VerificationReport,
};

/// Exact-versus-float bookkeeping shared by criteria 1-3 and checked by 5.
#[derive(Default)]
struct Tally {
    values: usize,
    mismatches: usize,
}

impl Tally {
    fn absorb_report(&mut self, report: &VerificationReport) {
        self.values += report.values_checked;
        self.mismatches += report.float_mismatches;
    }

    fn absorb_value(&mut self, v: &CorrelationValue, length: usize) {
        let (re, im) = v.to_complex();
        self.values += 1;
        if v.is_zero() != (re.hypot(im) < FLOAT_AGREEMENT_TOL * length as f64) {
            self.mismatches += 1;
        }
    }
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn example_field() -> FieldSpec {
    FieldSpec::with_modulus(3, vec![2, 1, 1], Some(vec![0, 1])).expect("x^2 + x + 2 with alpha = x")
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

fn criterion_1(tally: &mut Tally) -> Outcome {
    let start = Instant::now();
    let set = build_ccc(&example_field());
    let report = verify(&set);
    let elapsed = start.elapsed();
    tally.absorb_report(&report);

    ensure(report.kind == SetKind::Ccc, || format!("kind {:?}", report.kind))?;
    ensure(report.measured == Params { s: 9, m: 9, length: 9, z: 9 }, || format!("measured {:?}", report.measured))?;
    ensure(report.peak == 81 && report.certified, || format!("peak {} certified {}", report.peak, report.certified))?;

    let codes = set.codes();
    let mut cross_pairs = 0;
    for i in 0..codes.len() {
        for j in i..codes.len() {
            let prof = profile(&codes[i], &codes[j]).map_err(|e| e.to_string())?;
            let back = profile(&codes[j], &codes[i]).map_err(|e| e.to_string())?;
            for (tau, v) in prof.iter() {
                tally.absorb_value(v, 9);
                let ok = if i == j && tau == 0 { v.equals_integer(81) } else { v.is_zero() };
                ensure(ok, || format!("codes ({i},{j}) tau {tau}: {:?}", v.counts()))?;
                ensure(v == &back.get(-tau).unwrap().conj(), || format!("conjugate symmetry ({i},{j}) tau {tau}"))?;
            }
            cross_pairs += usize::from(i != j);
        }
    }
    ensure(cross_pairs == 36, || format!("{cross_pairs} cross pairs"))?;
    within(elapsed, Duration::from_secs(1), "construction and verification")?;
    Ok(format!("(9,9,9)-CCC, peak 81, 36 cross pairs identically zero, {elapsed:.2?}"))
}

fn criterion_2(tally: &mut Tally) -> Outcome {
    let start = Instant::now();
    let set = build_zccs(&example_field(), &[2]).map_err(|e| e.to_string())?;
    let report = verify(&set);
    let elapsed = start.elapsed();
    tally.absorb_report(&report);

    let m = report.measured;
    ensure(report.kind == SetKind::Zccs, || format!("kind {:?}", report.kind))?;
    ensure(m == Params { s: 18, m: 9, length: 18, z: 9 }, || format!("measured {m:?}"))?;
    ensure(report.peak == 162, || format!("peak {}", report.peak))?;
    ensure(report.optimal && m.s == m.m * (m.length / m.z), || "set-size bound not met".into())?;
    ensure(report.certified, || format!("{} violations", report.violation_count))?;
    within(elapsed, Duration::from_secs(5), "construction and verification")?;
    Ok(format!("optimal ZCCS s=18 m=9 length=18 z=9, peak 162, 18 = 9*floor(18/9), {elapsed:.2?}"))
}

const SWEEP_FIELDS: &[(u32, u32)] = &[(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2)];
const SWEEP_PRIMES: &[&[u32]] = &[&[2], &[3], &[2, 3]];

fn criterion_3(tally: &mut Tally) -> Outcome {
    let start = Instant::now();
    let mut runs = 0;
    for &(p, r) in SWEEP_FIELDS {
        let spec = FieldSpec::new(p, r).map_err(|e| e.to_string())?;
        let q = spec.q();
        let report = verify(&build_ccc(&spec));
        tally.absorb_report(&report);
        ensure(
            report.kind == SetKind::Ccc && report.certified && report.measured == Params { s: q, m: q, length: q, z: q },
            || format!("CCC q={q}: {:?} {:?}", report.kind, report.measured),
        )?;
        runs += 1;
        for &primes in SWEEP_PRIMES {
            let n: usize = primes.iter().map(|&x| x as usize).product();
            if n * q > 150 {
                continue;
            }
            let report = verify(&build_zccs(&spec, primes).map_err(|e| e.to_string())?);
            tally.absorb_report(&report);
            let m = report.measured;
            ensure(
                report.kind == SetKind::Zccs
                    && report.certified
                    && m == Params { s: n * q, m: q, length: n * q, z: q }
                    && m.s == m.m * (m.length / m.z),
                || format!("ZCCS q={q} primes={primes:?}: {:?} {m:?}", report.kind),
            )?;
            runs += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(120), "sweep")?;
    Ok(format!("{runs} sets certified with measured z = q, {elapsed:.2?}"))
}

fn check_field(spec: &FieldSpec, full: bool, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let (p, q) = (spec.p(), spec.q());
    let elems: Vec<_> = spec.elements().collect();
    let label = format!("GF({q})");
    let mut checks = 0;

    let mut fibers = vec![0usize; p as usize];
    for c in &elems {
        fibers[spec.trace(c) as usize] += 1;
        ensure(spec.trace(&spec.pow(c, p as u64)) == spec.trace(c), || format!("{label}: Frobenius"))?;
    }
    ensure(fibers.iter().all(|&f| f == q / p as usize), || format!("{label}: fibers {fibers:?}"))?;

    let mut image: Vec<usize> = (0..q).map(|i| spec.index_to_element(i).unwrap().encode(p)).collect();
    image.sort_unstable();
    ensure(image == (0..q).collect::<Vec<_>>(), || format!("{label}: a(.) not a bijection"))?;

    let pairs: Vec<(usize, usize)> = if full {
        (0..q).flat_map(|a| (0..q).map(move |b| (a, b))).collect()
    } else {
        (0..300).map(|_| (rng.gen_range(0..q), rng.gen_range(0..q))).chain((0..q).map(|a| (a, a))).collect()
    };
    for (a, b) in pairs {
        let (x, y) = (&elems[a], &elems[b]);
        let inner = char_inner(x, y, spec);
        let ok = if a == b { inner.equals_integer(q as i64) } else { inner.is_zero() };
        ensure(ok, || format!("{label}: orthogonality at ({a},{b})"))?;
        ensure(
            spec.trace(&spec.add(x, y)) == (spec.trace(x) + spec.trace(y)) % p,
            || format!("{label}: trace additivity at ({a},{b})"),
        )?;
        ensure(
            char_phase(x, &spec.add(x, y), spec).value()
                == (char_phase(x, x, spec).value() + char_phase(x, y, spec).value()) % p,
            || format!("{label}: character homomorphism at ({a},{b})"),
        )?;
        checks += 1;
    }
    Ok(checks)
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2026);
    let full: &[(u32, u32)] = &[(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1)];
    let sampled: &[(u32, u32)] = &[(2, 5), (2, 6), (3, 3), (3, 4), (5, 3), (7, 2), (11, 2)];
    let mut pairs = 0;
    let mut fields = 0;
    for &(p, r) in full {
        pairs += check_field(&FieldSpec::new(p, r).map_err(|e| e.to_string())?, true, &mut rng)?;
        fields += 1;
    }
    pairs += check_field(&example_field(), true, &mut rng)?;
    for &(p, r) in sampled {
        pairs += check_field(&FieldSpec::new(p, r).map_err(|e| e.to_string())?, false, &mut rng)?;
        fields += 1;
    }
    Ok(format!("{} fields, {pairs} element pairs", fields + 1))
}

fn criterion_5(tally: &Tally) -> Outcome {
    ensure(tally.values > 0, || "no values recorded".into())?;
    ensure(tally.mismatches == 0, || format!("{} of {} values disagree", tally.mismatches, tally.values))?;
    Ok(format!("{} correlation sums, exact and float decisions agree", tally.values))
}

/// (code, sequence, position, phase increment mod 3), recorded once.
const MUTATIONS: [(usize, usize, usize, u32); 20] = [
    (3, 3, 7, 2), (0, 0, 0, 1), (8, 6, 6, 2), (3, 7, 0, 1), (8, 2, 0, 2),
    (1, 5, 3, 2), (6, 2, 0, 1), (0, 8, 7, 2), (2, 0, 7, 2), (0, 1, 1, 1),
    (8, 0, 7, 1), (7, 0, 7, 1), (4, 3, 6, 1), (2, 1, 4, 1), (0, 6, 8, 2),
    (3, 6, 7, 2), (0, 4, 3, 1), (4, 2, 3, 2), (7, 8, 6, 2), (3, 2, 6, 1),
];

fn criterion_6() -> Outcome {
    let set = build_ccc(&example_field());
    let mut least = usize::MAX;
    for &(code, seq, pos, delta) in &MUTATIONS {
        let mut codes = set.codes().to_vec();
        let mut sequences = codes[code].sequences().to_vec();
        let mut phases = sequences[seq].phases().to_vec();
        phases[pos] = (phases[pos] + delta) % 3;
        sequences[seq] = PhaseSequence::new(3, phases).map_err(|e| e.to_string())?;
        codes[code] = Code::new(sequences).map_err(|e| e.to_string())?;
        let mutated = CodeSet::new(codes, set.params(), None).map_err(|e| e.to_string())?;
        let report = verify(&mutated);
        ensure(report.violation_count > 0, || format!("mutation {:?} went unnoticed", (code, seq, pos, delta)))?;
        least = least.min(report.violation_count);
    }
    Ok(format!("20/20 mutations flagged, at least {least} violations each"))
}

fn main() -> ExitCode {
    let mut tally = Tally::default();
    let results = [
        ("1", "GF(9) CCC over x^2 + x + 2", criterion_1(&mut tally)),
        ("2", "GF(9) ZCCS with primes [2]", criterion_2(&mut tally)),
        ("3", "parameter sweep", criterion_3(&mut tally)),
        ("4", "character and trace properties", criterion_4()),
        ("5", "exact/float cross-check", criterion_5(&tally)),
        ("6", "mutation sensitivity", criterion_6()),
    ];
    let mut failed = 0;
    for (id, name, result) in &results {
        match result {
            Ok(detail) => println!("[PASS] criterion {id}: {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {id}: {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
