//! One line per acceptance criterion, each with its wall-clock budget.
//! Exits nonzero if any criterion fails or runs over time.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use asm_tsscpp::asm::six_vertex::{normalize_z, refined_from_z, weighted_partition_sum};
use asm_tsscpp::asm::{asm_count_formula, enumerate_asms, genfun_doubly_refined, Convention};
use asm_tsscpp::nilp::{genfun_u, lgv_genfun};
use asm_tsscpp::partition::{schur_staircase, verify_dyck_values, zprime_residue_sum};
use asm_tsscpp::report::Check;
use asm_tsscpp::residue::{integral_a, integral_i, integral_u, UForm};
use asm_tsscpp::sample::Sampler;
use asm_tsscpp::suite::{random_a, run_suite};
use asm_tsscpp::{parse_poly, Cyclo, GenPoly, Integer, QPoly, Ring};
use num_traits::{One, Zero};

const SEED: u64 = 0;

type Outcome = Result<String, String>;

/// Number, title, time budget in seconds, check.
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn n3_poly() -> GenPoly {
    GenPoly::from_qpoly(
        &parse_poly("y^2 + y + x*y^2 + x + x*y + x^2*y + x^2").unwrap(),
        "x",
        "y",
    )
    .unwrap()
}

fn xy_weights(n: usize) -> Vec<QPoly> {
    let mut t: Vec<QPoly> = [QPoly::var("x"), QPoly::var("y")].into_iter().take(n).collect();
    t.resize(n, QPoly::one());
    t
}

/// Summarizes a batch of checks, naming the first failure.
fn summarize(checks: &[Check], expected: Option<usize>) -> Outcome {
    if let Some(c) = checks.iter().find(|c| !c.pass) {
        return Err(format!(
            "{} n={} at {}: expected {}, got {}",
            c.check, c.n, c.point, c.expected, c.got
        ));
    }
    if let Some(k) = expected {
        if checks.len() != k {
            return Err(format!("{} checks, wanted {k}", checks.len()));
        }
    }
    Ok(format!("{} checks", checks.len()))
}

fn asm_counts() -> Outcome {
    let got: Vec<usize> = (1..=6).map(|n| enumerate_asms(n).count()).collect();
    for (n, &c) in (1..=6).zip(&got) {
        if Integer::from(c) != asm_count_formula(n) {
            return Err(format!("n={n}: {c} objects, formula {}", asm_count_formula(n)));
        }
    }
    if got != [1, 2, 7, 42, 429, 7436] {
        return Err(format!("{got:?}"));
    }
    Ok(format!("{got:?}"))
}

fn n3_polynomials() -> Outcome {
    let want = n3_poly();
    let a = genfun_doubly_refined(3, Convention::Tilde);
    let u = genfun_u(3, 0, 1).map_err(|e| e.to_string())?;
    if a != want || u != want {
        return Err(format!("asm {a}, paths {u}"));
    }
    Ok(want.to_string())
}

fn asm_equals_paths() -> Outcome {
    for n in 1..=6 {
        let a = genfun_doubly_refined(n, Convention::Tilde);
        let u = genfun_u(n, 0, 1).map_err(|e| e.to_string())?;
        if a != u {
            return Err(format!("n={n}: {a} vs {u}"));
        }
        let l = lgv_genfun(n, &xy_weights(n)).map_err(|e| e.to_string())?;
        if l != u.to_qpoly("x", "y") {
            return Err(format!("n={n}: LGV gives {l}"));
        }
    }
    Ok("n = 1..6, brute force and LGV".into())
}

fn integral_routes() -> Outcome {
    for n in 1..=5 {
        let a = genfun_doubly_refined(n, Convention::Tilde);
        let u = genfun_u(n, 0, 1).map_err(|e| e.to_string())?;
        let ia = integral_a(n).map_err(|e| e.to_string())?;
        let iu = integral_u(n, UForm::Raw).map_err(|e| e.to_string())?;
        if ia != a {
            return Err(format!("n={n}: integral A {ia}"));
        }
        if iu != u {
            return Err(format!("n={n}: integral U {iu}"));
        }
    }
    Ok("n = 1..5".into())
}

fn a_independence() -> Outcome {
    let mut rng = Sampler::derived(SEED, "acceptance-a", 0);
    for n in 1..=5 {
        let m = n - 1;
        let mut choices = vec![vec![QPoly::zero(); m], vec![parse_poly("y*(1 - y)").unwrap(); m]];
        choices.extend((0..3).map(|_| random_a(n, &mut rng)));
        let base = integral_i(n, &choices[0]).map_err(|e| e.to_string())?;
        if base != genfun_doubly_refined(n, Convention::Tilde) {
            return Err(format!("n={n}: a = 0 gives {base}"));
        }
        for a in &choices[1..] {
            let got = integral_i(n, a).map_err(|e| e.to_string())?;
            if got != base {
                let shown: Vec<String> = a.iter().map(|p| p.to_string()).collect();
                return Err(format!("n={n}, a = {shown:?}: {got}"));
            }
        }
    }
    Ok("n = 1..5, 5 parameter choices each".into())
}

fn dyck_values() -> Outcome {
    let checks: Vec<Check> = (1..=5).flat_map(verify_dyck_values).collect();
    summarize(&checks, Some(64))
}

fn zprime() -> Outcome {
    let mut checks = Vec::new();
    for n in 1..=3 {
        let mut rng = Sampler::derived(SEED, "acceptance-zprime", n);
        for _ in 0..20 {
            let z: Vec<Cyclo> = rng.distinct(2 * n).into_iter().map(Cyclo::from_base).collect();
            let got = zprime_residue_sum(n, &z).map_err(|e| e.to_string())?;
            let want = schur_staircase(n, &z).map_err(|e| e.to_string())?;
            checks.push(Check::compare("zprime", n, serde_json::Value::Null, &want, &got));
        }
    }
    summarize(&checks, Some(60))
}

fn six_vertex() -> Outcome {
    let mut checks = Vec::new();
    let r = Cyclo::sqrt_q();
    for n in 1..=3 {
        let mut rng = Sampler::derived(SEED, "acceptance-6v", n);
        for _ in 0..10 {
            let s: Vec<Cyclo> = (0..2 * n).map(|_| Cyclo::from_base(rng.nonzero())).collect();
            let z: Vec<Cyclo> = s.iter().map(|x| x.mul_ref(x)).collect();
            let zt = weighted_partition_sum(n, &s, &r).map_err(|e| e.to_string())?;
            let got = normalize_z(&zt, n, &s, &r).map_err(|e| e.to_string())?;
            let want = schur_staircase(n, &z).map_err(|e| e.to_string())?;
            checks.push(Check::compare("six-vertex", n, serde_json::Value::Null, &want, &got));
        }
    }
    for n in 1..=4 {
        let mut rng = Sampler::derived(SEED, "acceptance-refined", n);
        let polys = [
            (Convention::Tilde, genfun_doubly_refined(n, Convention::Tilde)),
            (Convention::Reversed, genfun_doubly_refined(n, Convention::Reversed)),
        ];
        for _ in 0..10 {
            let (t, u) = (rng.rational(), rng.rational());
            for (conv, g) in &polys {
                let got = refined_from_z(n, &t, &u, *conv).map_err(|e| e.to_string())?;
                let want = Cyclo::from_base(g.eval(&t, &u));
                let point = serde_json::json!({ "t": t.to_string(), "u": u.to_string() });
                checks.push(Check::compare("refined", n, point, &want, &got));
            }
        }
    }
    summarize(&checks, Some(30 + 80))
}

fn path_statistics() -> Outcome {
    let ns = [1, 2, 3, 4];
    let mut checks = run_suite("involutions", &ns, SEED, None).map_err(|e| e.to_string())?;
    checks.extend(run_suite("mrr", &ns, SEED, None).map_err(|e| e.to_string())?);
    summarize(&checks, None)
}

fn spectral_identities() -> Outcome {
    let mut checks = run_suite("appendix-d", &[1, 2, 3, 4], SEED, Some(10)).map_err(|e| e.to_string())?;
    let per = |name: &str, n: usize| checks.iter().filter(|c| c.check == name && c.n == n).count();
    for n in 1..=4 {
        if per("bn", n) != 10 || per("cauchy", n) != 10 {
            return Err(format!(
                "n={n}: {} B_n and {} Cauchy samples",
                per("bn", n),
                per("cauchy", n)
            ));
        }
    }
    let zeil = run_suite("zeilid", &[1, 2, 3, 4], SEED, Some(3)).map_err(|e| e.to_string())?;
    let zcount = zeil.iter().filter(|c| c.check == "zeilid").count();
    if zcount != 16 {
        return Err(format!("{zcount} antisymmetrization-identity checks, wanted 16"));
    }
    checks.extend(zeil);
    summarize(&checks, None)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "ASM counts n = 1..6", 5, asm_counts),
        (2, "n = 3 generating polynomials", 1, n3_polynomials),
        (
            3,
            "Ã_n = U^{0,1}_n, brute force and LGV, n = 1..6",
            120,
            asm_equals_paths,
        ),
        (4, "integral routes, n = 1..5", 300, integral_routes),
        (5, "a-independence of the interpolating integral", 300, a_independence),
        (6, "Dyck specialization values, n = 1..5", 30, dyck_values),
        (7, "Z_n = Z'_n at random points, n = 1..3", 60, zprime),
        (8, "six-vertex consistency", 120, six_vertex),
        (9, "involutions, U^{0,i} symmetries and MRR, n ≤ 4", 60, path_statistics),
        (
            10,
            "B_n, Cauchy determinant and the antisymmetrization identity",
            300,
            spectral_identities,
        ),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let budget = Duration::from_secs(limit);
        let (status, detail) = match outcome {
            Ok(d) if took <= budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("over time budget; {d}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {id:>2}: {status} [{:.2}s / {limit}s] {name}: {detail}",
            took.as_secs_f64()
        );
    }
    if failed == 0 {
        println!("all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
