//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
//! if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use hyperplitz::complex_rep::{chi1, chi1_interleaved};
use hyperplitz::normality::{generate_normal, kappa_commutator, normal_census, sampled_census, Strategy, FROZEN_CONJ};
use hyperplitz::oracle::{kappa_commutator_naive, naive_product};
use hyperplitz::product::{displacement_multiply, displacement_multiply_counted};
use hyperplitz::sample::{self, trial_rng};
use hyperplitz::verify::{run, RunConfig, Theorem, VerifyReport};
use hyperplitz::{CplxPair, HQuat, HQuat64, HQuatInt, Int, Kappa, Mat, Rational, ToeplitzGen};
use serde_json::Value;

const SEED: u64 = 20_240_601;

struct Line {
    id: u8,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn cfg(trials: u64, n_min: usize, n_max: usize) -> RunConfig {
    RunConfig {
        seed: SEED,
        trials,
        n_min,
        n_max,
        bound: 5,
        kappas: Kappa::ALL.to_vec(),
        exhaustive: false,
    }
}

fn campaign(t: Theorem, c: &RunConfig) -> VerifyReport {
    run(t, c).expect("valid configuration")
}

fn count(r: &VerifyReport, key: &str) -> u64 {
    r.body.observations.get(key).and_then(Value::as_u64).unwrap_or(0)
}

fn summary(r: &VerifyReport) -> String {
    let mut s = format!("{} {}/{}", r.body.theorem, r.body.passed, r.body.attempted);
    if let Some(f) = r.body.failures.first() {
        s += &format!(", first failure trial {} n={}: {}", f.trial, f.n, f.detail);
    }
    s
}

fn reconstruction() -> (bool, String) {
    let start = Instant::now();
    let r = campaign(Theorem::Reconstruction, &cfg(1000, 1, 8));
    let took = start.elapsed();
    let pass = r.body.passed == 1000 && r.all_passed() && took < Duration::from_secs(10);
    (pass, format!("{} in {:.2?}", summary(&r), took))
}

fn characterization() -> (bool, String) {
    let r = campaign(Theorem::Characterization, &cfg(1000, 2, 8));
    let (pos, neg) = (count(&r, "positive"), count(&r, "negative"));
    let pass = r.all_passed() && pos == 500 && neg == 500;
    (pass, format!("{}, {pos} accepted and {neg} perturbed", summary(&r)))
}

fn chi1_suite() -> (bool, String) {
    let c = |re: i64, im: i64| CplxPair::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()));
    let r = |v: i64| Rational::from_integer(v.into());
    let h = |w: i64, x: i64, y: i64, z: i64| HQuat::new(r(w), r(x), r(y), r(z));
    let example = Mat::from_rows(vec![
        vec![h(0, 1, 1, 1), h(1, 0, 0, 1)],
        vec![h(0, 1, 1, 0), h(0, 0, 1, 1)],
    ])
    .unwrap();
    let expected = Mat::from_rows(vec![
        vec![c(0, 1), c(1, 1), c(1, 0), c(0, 1)],
        vec![c(-1, 1), c(0, -1), c(0, 1), c(1, 0)],
        vec![c(0, 1), c(1, 0), c(0, 0), c(1, 1)],
        vec![c(-1, 0), c(0, -1), c(-1, 1), c(0, 0)],
    ])
    .unwrap();
    let example_ok = chi1_interleaved(&example) == expected;
    let block = chi1(&example);
    let perm = [0, 2, 1, 3];
    let shuffle_ok = Mat::from_fn(4, 4, |i, j| block[(perm[i], perm[j])].clone()) == expected;

    let hom = campaign(Theorem::Chi1Hom, &cfg(300, 1, 6));
    let toe = campaign(Theorem::Chi1Toeplitz, &cfg(400, 2, 8));
    let (pos, neg) = (count(&toe, "positive"), count(&toe, "negative"));
    let pass = example_ok && shuffle_ok && hom.all_passed() && hom.body.passed == 300 && toe.all_passed() && pos == 200 && neg == 200;
    (
        pass,
        format!(
            "worked example {}, {}, {} ({pos} positive, {neg} negative)",
            if example_ok { "exact" } else { "differs" },
            summary(&hom),
            summary(&toe)
        ),
    )
}

fn product_lemma() -> (bool, String) {
    let r = campaign(Theorem::ProductLemma, &cfg(500, 2, 8));
    (r.all_passed() && r.body.passed == 500, summary(&r))
}

fn tuvw() -> (bool, String) {
    let a = campaign(Theorem::TuvwToeplitz, &cfg(500, 1, 8));
    let b = campaign(Theorem::TuvwZero, &cfg(500, 1, 8));
    let constructed: u64 = ["equal", "negated", "shifted_diagonals"]
        .iter()
        .map(|k| count(&a, &format!("{k}_toeplitz")) + count(&a, &format!("{k}_not_toeplitz")))
        .sum();
    let random = count(&a, "random_toeplitz") + count(&a, "random_not_toeplitz");
    let met = count(&b, "hypothesis_met_equal") + count(&b, "hypothesis_met_unequal");
    let pass = a.all_passed() && b.all_passed() && constructed == 250 && random == 250;
    (
        pass,
        format!(
            "{}, {} ({constructed} constructed, {random} random, {met} hypothesis-satisfying)",
            summary(&a),
            summary(&b)
        ),
    )
}

fn zero_product() -> (bool, String) {
    let r = campaign(Theorem::ZeroProduct, &cfg(2500, 2, 6));
    let fams = ["psi_zero_pattern", "p_zero_pattern", "independent", "dependent", "nilpotent_lower"];
    let counts: Vec<String> = fams.iter().map(|f| format!("{f}={}", count(&r, f))).collect();
    let pass = r.all_passed() && fams.iter().all(|f| count(&r, f) > 0);
    (pass, format!("{}, {}", summary(&r), counts.join(" ")))
}

fn normality() -> (bool, String) {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut mismatches = 0;
    let mut first: Option<String> = None;
    let mut note = |c: hyperplitz::normality::Census, first: &mut Option<String>| {
        mismatches += c.mismatches;
        if first.is_none() {
            *first = c.first_mismatch.clone();
        }
        notes.push(format!("n={} k={}: {} normal of {}", c.n, c.kappa, c.normal, c.total));
    };
    for kappa in Kappa::ALL {
        note(normal_census::<Int>(kappa, FROZEN_CONJ.resolve(kappa)), &mut first);
    }
    for n in 3..=5 {
        for kappa in Kappa::ALL {
            note(
                sampled_census::<Int>(n, kappa, FROZEN_CONJ.resolve(kappa), 100_000, 1, SEED + n as u64),
                &mut first,
            );
        }
    }
    let mut circulant_bad = 0;
    let mut circulant = 0;
    for n in 2..=8 {
        for kappa in Kappa::ALL {
            for seed in 0..10 {
                let g = generate_normal::<Int>(n, kappa, Strategy::KappaCirculant, seed).unwrap();
                circulant += 1;
                if !kappa_commutator_naive(&g.dense(), kappa).is_zero() || !kappa_commutator(&g, kappa).is_zero() {
                    circulant_bad += 1;
                }
            }
        }
    }
    let took = start.elapsed();
    let pass = mismatches == 0 && circulant_bad == 0 && took < Duration::from_secs(60);
    let mut detail = format!(
        "{mismatches} mismatches, circulant {}/{circulant} normal, {:.2?}; {}",
        circulant - circulant_bad,
        took,
        notes.join(", ")
    );
    if let Some(f) = first {
        detail += &format!("; first counterexample: {f}");
    }
    (pass, detail)
}

fn scalars() -> (bool, String) {
    let r = campaign(Theorem::ScalarProps, &cfg(10_000, 1, 1));
    (r.all_passed() && r.body.passed == 10_000, summary(&r))
}

fn multiply() -> (bool, String) {
    let mut exact_bad = 0;
    for trial in 0..100u64 {
        let mut rng = trial_rng(SEED, trial);
        let n = sample::order(&mut rng, 1, 64);
        let t: ToeplitzGen<HQuatInt> = sample::toeplitz(&mut rng, n, 5, (), true);
        let u: ToeplitzGen<HQuatInt> = sample::toeplitz(&mut rng, n, 5, (), true);
        if displacement_multiply(&t, &u).unwrap() != naive_product(&t.dense(), &u.dense()) {
            exact_bad += 1;
        }
    }
    let mut ratios = Vec::new();
    let mut ok = exact_bad == 0;
    for n in [64usize, 128, 256] {
        let mut rng = trial_rng(SEED, n as u64);
        let t: ToeplitzGen<HQuat64> = sample::toeplitz(&mut rng, n, 5, (), true);
        let u: ToeplitzGen<HQuat64> = sample::toeplitz(&mut rng, n, 5, (), true);
        let (mut naive, mut fast) = (0u64, 0u64);
        t.dense().mul_counted(&u.dense(), &mut naive).unwrap();
        displacement_multiply_counted(&t, &u, &mut fast).unwrap();
        let ratio = naive as f64 / fast as f64;
        ok &= ratio >= n as f64 / 8.0;
        ratios.push((n, naive, fast, ratio));
    }
    ok &= ratios.windows(2).all(|w| w[1].3 > w[0].3);
    let r: Vec<String> = ratios
        .iter()
        .map(|(n, a, b, r)| format!("n={n}: {a}/{b} = {r:.1} (bound {})", n / 8))
        .collect();
    (ok, format!("{} of 100 exact pairs differ; {}", exact_bad, r.join(", ")))
}

fn cli_determinism() -> (bool, String) {
    let bin = env!("CARGO_BIN_EXE_hyperplitz");
    let exec = |args: &[&str], stdin_file: Option<&std::path::Path>| {
        let mut cmd = Command::new(bin);
        cmd.args(args);
        if let Some(f) = stdin_file {
            cmd.arg(f);
        }
        cmd.output().expect("binary runs")
    };
    let mut identical = 0;
    let runs = [
        ["verify", "reconstruction", "--seed", "5", "--trials", "300", "--n-min", "1", "--n-max", "8"],
        ["verify", "zero-product", "--seed", "5", "--trials", "300", "--n-min", "2", "--n-max", "6"],
        ["verify", "normal-classification", "--seed", "5", "--trials", "300", "--n-min", "2", "--n-max", "6"],
        ["verify", "scalar-props", "--seed", "5", "--trials", "300", "--n-min", "1", "--n-max", "1"],
    ];
    for args in &runs {
        let a = exec(args, None);
        let b = exec(args, None);
        if a.status.success() && a.stdout == b.stdout && !a.stdout.is_empty() {
            identical += 1;
        }
    }
    let dir = std::env::temp_dir();
    let mut revalidated = 0;
    let mut total = 0;
    for seed in 0..5u64 {
        for n in [2usize, 3, 5, 8] {
            let s = seed.to_string();
            let ns = n.to_string();
            let cases: [(Vec<&str>, Vec<&str>); 4] = [
                (vec!["generate", "random-toeplitz", "--n", &ns, "--seed", &s], vec!["check", "toeplitz"]),
                (
                    vec!["generate", "random-toeplitz", "--n", &ns, "--seed", &s, "--kappa", "2"],
                    vec!["check", "toeplitz", "--kappa", "2"],
                ),
                (
                    vec!["generate", "normal", "--n", &ns, "--seed", &s, "--kappa", "3"],
                    vec!["check", "normal", "--kappa", "3"],
                ),
                (vec!["generate", "zero-product-pair", "--n", &ns, "--seed", &s], vec!["check", "zero-product"]),
            ];
            for (k, (gen, check)) in cases.iter().enumerate() {
                total += 1;
                let g = exec(gen, None);
                let path = dir.join(format!("hyperplitz-acc-{}-{seed}-{n}-{k}.json", std::process::id()));
                std::fs::write(&path, &g.stdout).unwrap();
                if g.status.success() && exec(check, Some(&path)).status.success() {
                    revalidated += 1;
                }
            }
        }
    }
    let pass = identical == runs.len() && revalidated == total;
    (
        pass,
        format!("{identical}/{} verify bodies identical, {revalidated}/{total} generated objects re-validate", runs.len()),
    )
}

fn main() {
    type Criterion = (u8, &'static str, fn() -> (bool, String));
    let criteria: [Criterion; 10] = [
        (1, "reconstruction identity", reconstruction),
        (2, "Toeplitz characterization", characterization),
        (3, "chi1 representation", chi1_suite),
        (4, "product displacement", product_lemma),
        (5, "TU - VW criteria", tuvw),
        (6, "zero-product families", zero_product),
        (7, "normality classification", normality),
        (8, "scalar identities", scalars),
        (9, "structured multiply", multiply),
        (10, "CLI determinism", cli_determinism),
    ];
    let lines: Vec<Line> = criteria
        .iter()
        .map(|&(id, name, f)| {
            let (pass, detail) = f();
            let line = Line { id, name, pass, detail };
            println!(
                "criterion {:>2} {}: {} ({})",
                line.id,
                if line.pass { "PASS" } else { "FAIL" },
                line.name,
                line.detail
            );
            line
        })
        .collect();
    let failed = lines.iter().filter(|l| !l.pass).count();
    println!("acceptance: {} of {} criteria pass", lines.len() - failed, lines.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
