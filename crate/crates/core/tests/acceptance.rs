//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ifmagnify::harness::{
    characterization_witness, crisp_product_witness, random_subjects, run_suite_on, sample_ifs,
    suite_semigroups, CharacterizationKind, LabeledSemigroup, Outcome, SampleSpec, SuiteRun, TheoremId,
};
use ifmagnify::ifs::characteristic_pair;
use ifmagnify::semigroup::{classify, enumerate_semigroups, RegularityKind};
use ifmagnify::{
    check, if_product, magnify, max_alpha, multiply, semiprime_inequalities, translate, FuzzyStructureKind,
    Grade, IfSubset, Rational, Semigroup, TransformParams,
};

struct Gate {
    failures: usize,
}

impl Gate {
    fn report(&mut self, id: usize, title: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => println!("PASS [{id}] {title}: {detail}"),
            Err(detail) => {
                self.failures += 1;
                println!("FAIL [{id}] {title}: {detail}");
            }
        }
    }
}

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn g(n: i64, d: i64) -> Grade {
    Grade::from_fraction(n, d).unwrap()
}

/// Every `n^(n^2)` table, kept when the direct triple check passes.
fn brute_force_tables(n: usize) -> Vec<Vec<usize>> {
    let cells = n * n;
    let mut out = Vec::new();
    let mut table = vec![0usize; cells];
    loop {
        let m = |x: usize, y: usize| table[x * n + y];
        let assoc = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| m(m(x, y), z) == m(x, m(y, z)))));
        if assoc {
            out.push(table.clone());
        }
        let mut i = cells;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            table[i] += 1;
            if table[i] < n {
                break;
            }
            table[i] = 0;
        }
    }
}

/// Regularity straight from the element equations.
fn regular_oracle(s: &Semigroup, kind: RegularityKind) -> bool {
    let e = || s.elements();
    e().all(|a| {
        let a2 = s.square(a);
        match kind {
            RegularityKind::Regular => e().any(|x| s.mul(s.mul(a, x), a) == a),
            RegularityKind::IntraRegular => e().any(|x| e().any(|y| s.mul(s.mul(x, a2), y) == a)),
            RegularityKind::LeftRegular => e().any(|x| s.mul(x, a2) == a),
            RegularityKind::RightRegular => e().any(|x| s.mul(a2, x) == a),
        }
    })
}

fn counterexamples(run: &SuiteRun) -> Vec<String> {
    run.reports
        .iter()
        .filter(|r| r.outcome == Outcome::Counterexample)
        .map(|r| r.render_text())
        .collect()
}

fn small_semigroups() -> Vec<LabeledSemigroup> {
    suite_semigroups(&[1, 2, 3], false).unwrap()
}

fn reference_magnification() -> Result<String, String> {
    let a = IfSubset::new(vec![g(3, 10), g(1, 10), g(1, 2)], vec![g(2, 5), g(1, 4), g(3, 10)]).unwrap();
    let p = TransformParams::from_rationals(Rational::new(1, 5), Rational::new(1, 25)).unwrap();
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..5 {
        let start = Instant::now();
        let m = magnify(&a, p).map_err(|e| e.to_string())?;
        best = best.min(start.elapsed());
        out = Some(m);
    }
    let m = out.unwrap();
    let want_mu = [g(1, 10), g(3, 50), g(7, 50)];
    let want_nu = [g(1, 25), g(1, 100), g(1, 50)];
    ensure(m.mu_values() == want_mu && m.nu_values() == want_nu, || {
        format!("got mu {:?}, nu {:?}", m.mu_values(), m.nu_values())
    })?;
    ensure(best < Duration::from_millis(1), || format!("took {best:?}"))?;
    Ok(format!("mu' = (1/10, 3/50, 7/50), nu' = (1/25, 1/100, 1/50) exactly, {best:?}"))
}

fn enumeration() -> Result<String, String> {
    let mut parts = Vec::new();
    for (n, expected) in [(1, 1), (2, 8), (3, 113)] {
        let oracle = brute_force_tables(n);
        let start = Instant::now();
        let listed: Vec<Semigroup> = enumerate_semigroups(n).map_err(|e| e.to_string())?.collect();
        let elapsed = start.elapsed();
        let listed_tables: Vec<Vec<usize>> = listed
            .iter()
            .map(|s| s.rows().flat_map(|r| r.to_vec()).collect())
            .collect();
        ensure(oracle.len() == expected, || format!("oracle counted {} at order {n}", oracle.len()))?;
        ensure(listed_tables == oracle, || format!("enumeration differs from the oracle at order {n}"))?;
        if n == 3 {
            ensure(elapsed < Duration::from_secs(5), || format!("order 3 took {elapsed:?}"))?;
        }
        parts.push(format!("order {n}: {expected} ({elapsed:?})"));
    }
    Ok(parts.join(", "))
}

fn equivalence_suite() -> Result<String, String> {
    let spec = SampleSpec {
        random_count: 0,
        ..SampleSpec::default()
    };
    let theorems: Vec<TheoremId> = FuzzyStructureKind::ALL.into_iter().map(TheoremId::Equivalence).collect();
    let semigroups = small_semigroups();
    let start = Instant::now();
    let run = run_suite_on(&semigroups, &theorems, &spec).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let bad = counterexamples(&run);
    ensure(bad.is_empty(), || bad.join("\n"))?;
    let expected_subjects = |n: u32| 15usize.pow(n) - 5usize.pow(n);
    ensure(
        run.reports
            .iter()
            .zip(semigroups.iter().flat_map(|s| std::iter::repeat_n(s, theorems.len())))
            .all(|(r, s)| r.subjects_checked == expected_subjects(s.semigroup.order() as u32)),
        || "not every grid subject was checked".into(),
    )?;
    let parallel = std::thread::available_parallelism().map_or(1, |n| n.get()) > 1;
    let limit = if parallel { 60 } else { 300 };
    ensure(elapsed < Duration::from_secs(limit), || format!("took {elapsed:?}, limit {limit} s"))?;
    Ok(format!(
        "{} semigroups x 7 kinds, {} cases, 0 counterexamples, {elapsed:.1?} ({} threads)",
        semigroups.len(),
        run.summary.cases,
        rayon::current_num_threads()
    ))
}

/// Lowers `mu` at the point of a randomly chosen tuple so that one inequality
/// of the kind fails there.
fn mutate(rng: &mut ChaCha8Rng, s: &Semigroup, a: &IfSubset, kind: FuzzyStructureKind) -> Option<IfSubset> {
    let n = s.order();
    let mut candidates = Vec::new();
    for &condition in kind.conditions() {
        let k = condition.arity();
        for code in 0..n.pow(k as u32) {
            let mut t = vec![0; k];
            let mut c = code;
            for slot in t.iter_mut().rev() {
                *slot = c % n;
                c /= n;
            }
            let (point, bounds) = condition.instantiate(s, &t);
            let floor = bounds.iter().map(|&b| a.mu(b)).min().unwrap();
            if !bounds.contains(&point) && !floor.is_zero() {
                candidates.push((point, floor));
            }
        }
    }
    if candidates.is_empty() {
        return None;
    }
    let (point, floor) = candidates[rng.gen_range(0..candidates.len())];
    // anything strictly below the floor breaks the inequality
    let lowered = Grade::new(floor.value() * Rational::new(rng.gen_range(0..3), 3)).unwrap();
    let mutated = a.with_point(point, lowered, a.nu(point)).ok()?;
    mutated.is_nonempty().then_some(mutated)
}

fn mutation_sensitivity() -> Result<String, String> {
    let spec = SampleSpec::default();
    let semigroups = small_semigroups();
    let pools: Vec<Vec<IfSubset>> = (1..=3).map(|n| sample_ifs(n, &spec).unwrap().collect()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc4);
    let (mut mutations, mut asymmetric, mut attempts) = (0usize, 0usize, 0usize);
    let mut first_asymmetric = None;
    while mutations < 200 && attempts < 100_000 {
        attempts += 1;
        let entry = &semigroups[rng.gen_range(0..semigroups.len())];
        let s = &entry.semigroup;
        let kind = FuzzyStructureKind::ALL[rng.gen_range(0..7)];
        let pool = &pools[s.order() - 1];
        let a = &pool[rng.gen_range(0..pool.len())];
        if !check(kind, s, a).unwrap().holds() || a.is_constant() {
            continue;
        }
        let Some(b) = mutate(&mut rng, s, a, kind) else { continue };
        if check(kind, s, &b).unwrap().holds() {
            return Err(format!("mutation of a {kind} on {} did not break it", entry.label));
        }
        mutations += 1;
        for p in spec.params_for(&[&b]).unwrap() {
            if check(kind, s, &magnify(&b, p).unwrap()).unwrap().holds() {
                asymmetric += 1;
                first_asymmetric.get_or_insert_with(|| format!("{kind} on {} with {p}", entry.label));
            }
        }
    }
    ensure(mutations >= 100, || format!("only {mutations} mutations in {attempts} attempts"))?;
    ensure(asymmetric == 0, || format!("{asymmetric} asymmetric outcomes, first: {first_asymmetric:?}"))?;
    Ok(format!("{mutations} mutations, each false on A and on every magnified subject; 0 asymmetric"))
}

fn characterization() -> Result<String, String> {
    let spec = SampleSpec::default();
    let mut semigroups = small_semigroups();
    semigroups.extend(suite_semigroups(&[], true).unwrap());
    let theorems: Vec<TheoremId> = CharacterizationKind::ALL.into_iter().map(TheoremId::Characterization).collect();
    let run = run_suite_on(&semigroups, &theorems, &spec).map_err(|e| e.to_string())?;
    let bad = counterexamples(&run);
    ensure(bad.is_empty(), || bad.join("\n"))?;
    let (mut agree, mut total, mut negatives) = (0, 0, 0);
    for entry in &semigroups {
        let s = &entry.semigroup;
        let class = classify(s);
        for kind in CharacterizationKind::ALL {
            total += 1;
            let flag = class.flag(kind.regularity());
            ensure(flag == regular_oracle(s, kind.regularity()), || {
                format!("classify disagrees with the element equations on {}", entry.label)
            })?;
            // semiprime verdict from magnified principal ideals of every m^2
            let mut all_semiprime = true;
            for m in s.elements() {
                let chi = characteristic_pair(s.order(), &kind.principal_ideal(s, s.square(m)).unwrap()).unwrap();
                for p in spec.params_for(&[&chi]).unwrap() {
                    all_semiprime &= semiprime_inequalities(s, &magnify(&chi, p).unwrap()).unwrap().holds();
                }
            }
            if all_semiprime == flag {
                agree += 1;
            }
            if !flag {
                negatives += 1;
                let (m, witness) = characterization_witness(s, kind).unwrap().ok_or("missing witness")?;
                ensure(check(kind.ideal_kind(), s, &witness).unwrap().holds(), || {
                    format!("witness on {} is not an ideal", entry.label)
                })?;
                for p in spec.params_for(&[&witness]).unwrap() {
                    let w = magnify(&witness, p).unwrap();
                    let m2 = s.square(m);
                    ensure(w.mu(m) < w.mu(m2) || w.nu(m) > w.nu(m2), || {
                        format!("witness on {} satisfies the inequalities at {m}", entry.label)
                    })?;
                }
            }
        }
    }
    ensure(agree == total, || format!("{agree}/{total} agree"))?;
    Ok(format!(
        "{agree}/{total} verdicts agree over {} semigroups; {negatives} negative cases each with a violating witness",
        semigroups.len()
    ))
}

fn regular_product() -> Result<String, String> {
    let spec = SampleSpec::default();
    let semigroups = small_semigroups();
    let mut non_regular = 0;
    for entry in &semigroups {
        let s = &entry.semigroup;
        let regular = classify(s).regular;
        ensure(regular == regular_oracle(s, RegularityKind::Regular), || {
            format!("classify disagrees on {}", entry.label)
        })?;
        let witness = crisp_product_witness(s).unwrap();
        ensure(witness.is_none() == regular, || format!("crisp level disagrees on {}", entry.label))?;
        if let Some((r, l)) = witness {
            non_regular += 1;
            let (a, b) = (characteristic_pair(s.order(), &r).unwrap(), characteristic_pair(s.order(), &l).unwrap());
            ensure(!if_product(s, &a, &b).unwrap().same_as(&a.intersect(&b).unwrap()).unwrap(), || {
                format!("fuzzy witness fails on {}", entry.label)
            })?;
            for p in spec.params_for(&[&a, &b]).unwrap() {
                ensure(p.alpha.is_zero(), || "alpha should be forced to 0".into())?;
                let (x, y) = (magnify(&a, p).unwrap(), magnify(&b, p).unwrap());
                ensure(!if_product(s, &x, &y).unwrap().same_as(&x.intersect(&y).unwrap()).unwrap(), || {
                    format!("magnified witness fails on {}", entry.label)
                })?;
            }
        }
    }
    let run = run_suite_on(
        &semigroups,
        &[TheoremId::RegularProduct, TheoremId::RegularProductMagnified],
        &spec,
    )
    .map_err(|e| e.to_string())?;
    let bad = counterexamples(&run);
    ensure(bad.is_empty(), || bad.join("\n"))?;
    Ok(format!(
        "crisp level agrees on {} semigroups; {} non-regular with witnesses; {} fuzzy/magnified cases, 0 violations",
        semigroups.len(),
        non_regular,
        run.summary.cases
    ))
}

fn archimedean_constant() -> Result<String, String> {
    let semigroups: Vec<LabeledSemigroup> =
        small_semigroups().into_iter().filter(|e| classify(&e.semigroup).archimedean).collect();
    let run = run_suite_on(&semigroups, &[TheoremId::ArchimedeanConstant], &SampleSpec::default())
        .map_err(|e| e.to_string())?;
    let bad = counterexamples(&run);
    ensure(bad.is_empty(), || bad.join("\n"))?;
    let subjects: usize = run.reports.iter().map(|r| r.subjects_checked).sum();
    ensure(subjects > 0, || "no semiprime ideals sampled".into())?;
    Ok(format!(
        "{} archimedean semigroups, {subjects} semiprime ideals, {} cases, 0 violations",
        semigroups.len(),
        run.summary.cases
    ))
}

fn degeneration() -> Result<String, String> {
    let subjects = random_subjects(3, 1000, 0xde9e);
    let mut rng = ChaCha8Rng::seed_from_u64(0xde9f);
    for (i, a) in subjects.iter().enumerate() {
        let beta = g(rng.gen_range(1..=12), 12);
        let bound = max_alpha(a, Grade::ONE).unwrap();
        let alpha = Grade::new(bound.value() * Rational::new(rng.gen_range(0..=4), 4)).unwrap();
        let scaled = magnify(a, TransformParams::new(beta, Grade::ZERO)).unwrap();
        ensure(scaled == multiply(a, beta).unwrap(), || format!("alpha = 0 fails on subject {i}"))?;
        let shifted = magnify(a, TransformParams::new(Grade::ONE, alpha)).unwrap();
        ensure(shifted == translate(a, alpha).unwrap(), || format!("beta = 1 fails on subject {i}"))?;
    }
    Ok(format!("{} subjects, both identities exact", subjects.len()))
}

fn main() -> ExitCode {
    let mut gate = Gate { failures: 0 };
    gate.report(1, "reference magnification", reference_magnification());
    gate.report(2, "enumeration oracle", enumeration());
    gate.report(3, "equivalence suite", equivalence_suite());
    gate.report(4, "mutation sensitivity", mutation_sensitivity());
    gate.report(5, "characterization agreement", characterization());
    gate.report(6, "regularity and products", regular_product());
    gate.report(7, "archimedean constants", archimedean_constant());
    gate.report(8, "degeneration identities", degeneration());
    if gate.failures == 0 {
        println!("acceptance: all 8 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} of 8 criteria FAIL", gate.failures);
        ExitCode::FAILURE
    }
}
