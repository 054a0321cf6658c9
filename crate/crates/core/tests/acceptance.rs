//! Acceptance run: one pass/fail line per criterion, exact equality throughout.
//!
//! Runs under `cargo test` (no libtest harness) and exits nonzero on failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use daha::cartan::{AffineCartanDatum, Coords, Rational};
use daha::hecke::relations::{bernstein_relation, matsumoto, push_soundness, relation_suite, y_lattice, y_t_relation};
use daha::hecke::Daha;
use daha::involution::{defining_relations, lattice_box, random_word, verify_homomorphism_samples, verify_duality};
use daha::lemmas::verify_all;
use daha::report::Status;
use daha::weyl::{length_cross_check, parse_element, AffineWeylElement};

const TYPES: [&str; 8] = ["A1~", "A2~", "A3~", "B2~", "C2~", "B3~", "C3~", "G2~"];

type Outcome = Result<Vec<String>, Box<dyn std::error::Error>>;

/// Positive roots of a rank-2 system closed under reflections, computed from
/// a bare Gram matrix. Shares no code with the library.
fn oracle_positive_roots(gram: [[Rational; 2]; 2]) -> BTreeSet<[i64; 2]> {
    let pair = |x: [i64; 2], y: [i64; 2]| -> Rational {
        let mut s = Rational::from_integer(0);
        for i in 0..2 {
            for j in 0..2 {
                s += gram[i][j] * Rational::from_integer(x[i] * y[j]);
            }
        }
        s
    };
    let simple = [[1, 0], [0, 1]];
    let mut all: BTreeSet<[i64; 2]> = simple.iter().copied().collect();
    loop {
        let mut next = all.clone();
        for &b in &all {
            for a in simple {
                let k = Rational::from_integer(2) * pair(b, a) / pair(a, a);
                let k = k.to_integer();
                next.insert([b[0] - k * a[0], b[1] - k * a[1]]);
            }
        }
        if next.len() == all.len() {
            break;
        }
        all = next;
    }
    all.into_iter().filter(|r| r[0] >= 0 && r[1] >= 0).collect()
}

fn oracle_reflect(gram: [[Rational; 2]; 2], word: &[usize], beta: [i64; 2]) -> [i64; 2] {
    let pair = |x: [i64; 2], y: [i64; 2]| -> Rational {
        (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| gram[i][j] * Rational::from_integer(x[i] * y[j]))
            .sum()
    };
    let mut v = beta;
    for &j in word.iter().rev() {
        let a = if j == 1 { [1, 0] } else { [0, 1] };
        let k = (Rational::from_integer(2) * pair(v, a) / pair(a, a)).to_integer();
        v = [v[0] - k * a[0], v[1] - k * a[1]];
    }
    v
}

fn render2(r: [i64; 2]) -> String {
    let part = |c: i64, name: &str| match c {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{c}{name}"),
    };
    [part(r[0], "a1"), part(r[1], "a2")].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("+")
}

fn g2_data() -> Outcome {
    // reference values for G_2 (alpha_1 short)
    let expected_roots: BTreeSet<&str> = ["a1", "a2", "a1+a2", "2a1+a2", "3a1+a2", "3a1+2a2"].into();
    let expected_pi: BTreeSet<&str> = ["a1+a2", "a2", "3a1+2a2"].into();
    let gram =
        [[Rational::new(2, 3), Rational::from_integer(-1)], [Rational::from_integer(-1), Rational::from_integer(2)]];
    let mut bad = Vec::new();

    let oracle_roots: BTreeSet<String> = oracle_positive_roots(gram).into_iter().map(render2).collect();
    let d = AffineCartanDatum::load("G2~")?;
    let info = d.to_json();
    let lib_roots: BTreeSet<String> =
        info["positive_roots"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
    let expected_roots: BTreeSet<String> = expected_roots.into_iter().map(String::from).collect();
    if lib_roots != expected_roots || oracle_roots != expected_roots {
        bad.push(format!("roots: lib {lib_roots:?} oracle {oracle_roots:?}"));
    }
    for (key, want) in [("theta", "3a1+2a2"), ("theta_s", "2a1+a2")] {
        if info[key] != want {
            bad.push(format!("{key} = {}", info[key]));
        }
    }
    let diff: Coords = d.theta_coords().iter().zip(d.theta_s_coords().iter()).map(|(a, b)| a - b).collect();
    if render2([diff[0], diff[1]]) != "a1+a2" {
        bad.push(format!("theta - theta_s = {diff:?}"));
    }
    let g = d.gram();
    let gram_text = [g[0][0].to_string(), g[0][1].to_string(), g[1][1].to_string()];
    if gram_text != ["2/3", "-1", "2"] {
        bad.push(format!("gram {gram_text:?}"));
    }

    let w = parse_element(&d, "s2 s1 s2")?;
    let reflection = AffineWeylElement::from_finite(daha::weyl::FiniteWeylElement::reflection(&d, &diff)?);
    if w != reflection || w.reduced_word(&d) != vec![2, 1, 2] {
        bad.push(format!("s_(theta - theta_s) = s{:?}", reflection.reduced_word(&d)));
    }
    let lib_pi: BTreeSet<String> =
        w.to_json(&d)["inversion_set"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
    let oracle_pi: BTreeSet<String> = oracle_positive_roots(gram)
        .into_iter()
        .filter(|&r| {
            let img = oracle_reflect(gram, &[2, 1, 2], r);
            img[0] <= 0 && img[1] <= 0
        })
        .map(render2)
        .collect();
    let expected_pi: BTreeSet<String> = expected_pi.into_iter().map(String::from).collect();
    if lib_pi != expected_pi || oracle_pi != expected_pi {
        bad.push(format!("inversions: lib {lib_pi:?} oracle {oracle_pi:?}"));
    }
    Ok(bad)
}

fn relation_suites() -> Outcome {
    let mut bad = Vec::new();
    for label in TYPES {
        let h = Daha::load(label)?;
        let n = h.rank();
        for c in relation_suite(&h)? {
            if !c.holds {
                bad.push(format!("{label}: {}", c.name));
            }
        }
        for rel in defining_relations(&h, 1) {
            if h.evaluate_expr(&rel.lhs)? != h.evaluate_expr(&rel.rhs)? {
                bad.push(format!("{label}: {}", rel.name));
            }
        }
        let pts = lattice_box(n, 1);
        for (i, mu) in pts.iter().enumerate() {
            let nu = &pts[(i * 7 + 1) % pts.len()];
            if !y_lattice(&h, mu, nu)? {
                bad.push(format!("{label}: Y lattice {mu:?} {nu:?}"));
            }
            for j in 1..=n {
                if y_t_relation(&h, mu, j)? == Some(false) {
                    bad.push(format!("{label}: Y T relation mu={mu:?} j={j}"));
                }
                if !bernstein_relation(&h, mu, j)? {
                    bad.push(format!("{label}: Bernstein relation mu={mu:?} j={j}"));
                }
            }
        }
    }
    Ok(bad)
}

fn lengths() -> Outcome {
    let mut bad = Vec::new();
    for label in TYPES {
        let d = AffineCartanDatum::load(label)?;
        let (count, mismatches) = length_cross_check(&d, 6)?;
        if count == 0 {
            bad.push(format!("{label}: nothing enumerated"));
        }
        bad.extend(mismatches.into_iter().map(|m| format!("{label}: {m}")));
    }
    Ok(bad)
}

fn normal_forms() -> Outcome {
    let mut bad = Vec::new();
    for label in TYPES {
        let h = Daha::load(label)?;
        let (_, failures) = matsumoto(&h, 5);
        bad.extend(failures.into_iter().map(|w| format!("{label}: reduced word {w:?}")));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for i in 0..300 {
            // longer words make single triples run into tens of thousands of terms
            let [a, b, c] = [0, 1, 2].map(|_| random_word(&h, &mut rng, 2));
            let [ea, eb, ec] = [&a, &b, &c].map(|w| h.evaluate(w).expect("word evaluates"));
            let left = h.multiply(&h.multiply(&ea, &eb), &ec);
            let right = h.multiply(&ea, &h.multiply(&eb, &ec));
            if left != right {
                bad.push(format!("{label}: associativity ({a})({b})({c})"));
            }
            if i % 10 == 0 && h.multiply_cached(&ea, &eb) != h.multiply(&ea, &eb) {
                bad.push(format!("{label}: product routes differ on ({a})({b})"));
            }
        }
    }
    Ok(bad)
}

fn lemma_suite() -> Outcome {
    let mut bad = Vec::new();
    for label in TYPES {
        let d = AffineCartanDatum::load(label)?;
        for r in verify_all(&d)? {
            let want = if r.lemma == "case-analysis" || d.p() != 1 { Status::Pass } else { Status::NotApplicable };
            if r.status != want {
                bad.push(format!("{label} {}: {} (wanted {})", r.lemma, r.status.as_str(), want.as_str()));
            }
        }
    }
    Ok(bad)
}

fn involution() -> Outcome {
    let mut bad = Vec::new();
    let targets = [("B2~", "C2~"), ("C2~", "B2~"), ("B3~", "C3~"), ("C3~", "B3~"), ("G2~", "G2~*")];
    for label in TYPES {
        let d = AffineCartanDatum::load(label)?;
        let r = verify_duality(&d)?;
        let want = targets.iter().find(|(s, _)| *s == label).map_or(label, |(_, t)| *t);
        if r.iota_type != want {
            bad.push(format!("{label}: target {} (wanted {want})", r.iota_type));
        }
        if !r.checks.iter().any(|c| c.name.starts_with("involutive on")) {
            bad.push(format!("{label}: no involutivity checks"));
        }
        bad.extend(r.failures().map(|c| format!("{label}: {}", c.name)));
        let s = verify_homomorphism_samples(&d, 200, 2024)?;
        bad.extend(s.failures().map(|c| format!("{label}: {} {}", c.name, c.witness.as_deref().unwrap_or(""))));
    }
    Ok(bad)
}

fn exact_division() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for label in TYPES {
        let h = Daha::load(label)?;
        let n = h.rank();
        let r = if n <= 2 { 3 } else { 2 };
        for beta in lattice_box(n, r) {
            for j in 0..=n {
                total += 1;
                if !push_soundness(&h, j, &beta)? {
                    bad.push(format!("{label}: j={j} beta={beta:?}"));
                }
            }
        }
    }
    if total == 0 {
        bad.push("no pushes checked".into());
    }
    Ok(bad)
}

fn main() -> ExitCode {
    let criteria: [(&str, f64, fn() -> Outcome); 7] = [
        ("G2 data reproduction", 1.0, g2_data),
        ("relation suites", 60.0, relation_suites),
        ("length cross-validation, l <= 6", f64::INFINITY, lengths),
        ("reduced words and associativity", f64::INFINITY, normal_forms),
        ("lemma suite", 120.0, lemma_suite),
        ("duality involution", 600.0, involution),
        ("exact division of pushes", f64::INFINITY, exact_division),
    ];
    let mut all_ok = true;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (ok, detail) = match outcome {
            Ok(bad) if bad.is_empty() && secs < budget => (true, String::new()),
            Ok(bad) if bad.is_empty() => (false, format!(" over budget {budget}s")),
            Ok(bad) => (false, format!(" {} failures, first: {}", bad.len(), bad[0])),
            Err(e) => (false, format!(" error: {e}")),
        };
        all_ok &= ok;
        println!("criterion {}: {} {name} ({secs:.2}s){detail}", i + 1, if ok { "PASS" } else { "FAIL" });
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
