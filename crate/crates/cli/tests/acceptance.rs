//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use bvfla_core::ideals::{close_under, holds};
use bvfla_core::theorems::{
    ids, run_all, verify_characteristic_bridge, FixtureBundle, RunConfig, Status,
};
use bvfla_core::{
    characterize_by_composition, classify, enumerate, search, BiForm, EnumerationTask, IdealClass,
    Law, Magma, SearchSpec,
};
use serde_json::Value;

type Outcome = Result<String, String>;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

/// Runs the CLI in-process and returns (exit code, stdout).
fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bvfla").chain(args.iter().copied());
    let code = bvfla_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn la_magmas_up_to(order: usize) -> Vec<Magma> {
    (1..=order)
        .flat_map(|n| {
            let mut task = EnumerationTask::new(n);
            task.budget = None;
            enumerate(&task).unwrap().magmas
        })
        .collect()
}

fn laws_example31() -> Outcome {
    let (code, text) = cli(&[
        "laws",
        &fixture("example31.tbl"),
        "--json",
        "--all-witnesses",
    ]);
    ensure(code == 0, format!("exit {code}"))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let law = |name: &str| {
        v["laws"]
            .as_array()
            .unwrap()
            .iter()
            .find(|l| l["law"] == name)
            .cloned()
            .unwrap()
    };
    ensure(
        law("left_invertive")["holds"] == true,
        "left invertive should hold",
    )?;
    let assoc = law("associative");
    ensure(assoc["holds"] == false, "associativity should fail")?;
    let violations: Vec<Vec<usize>> = serde_json::from_value(assoc["violations"].clone()).unwrap();
    let dba = vec![3, 1, 0];
    ensure(
        violations.contains(&dba),
        "(d,b,a) missing from associativity violations",
    )?;
    let m = bvfla_core::fixtures::example31_magma();
    let (lhs, rhs) = Law::Associative.sides(|x, y| m.op(x, y), &dba);
    ensure(
        (lhs, rhs) == (3, 1),
        format!("sides at (d,b,a) are {lhs},{rhs}"),
    )?;
    ensure(v["left_identity_name"] == "b", "left identity should be b")?;
    Ok(format!(
        "(d,b,a): d·(b·a)=d, (d·b)·a=b; one of {} violations, first row-major witness {}",
        violations.len(),
        assoc["witness_names"]
    ))
}

fn classify_example31() -> Outcome {
    let (code, text) = cli(&[
        "classify",
        &fixture("example31.tbl"),
        &fixture("example31.bvf.json"),
        "--json",
    ]);
    ensure(code == 0, format!("exit {code}"))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let classes = v["classes"].as_object().unwrap();
    ensure(classes.len() == 7, "seven classes expected")?;
    for (name, c) in classes {
        ensure(c["holds"] == true, format!("{name} is false"))?;
    }
    Ok("all seven classes true".into())
}

fn classify_example32() -> Outcome {
    let (code, text) = cli(&[
        "classify",
        &fixture("example32.tbl"),
        &fixture("example32.bvf.json"),
        "--json",
        "--all-witnesses",
    ]);
    ensure(code == 0, format!("exit {code}"))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    ensure(
        v["classes"]["interior"]["holds"] == true,
        "interior should hold",
    )?;
    let right = &v["classes"]["right"];
    ensure(right["holds"] == false, "right should fail")?;
    let bc = right["violations"]
        .as_array()
        .unwrap()
        .iter()
        .find(|w| w["elements"] == serde_json::json!([1, 2]))
        .ok_or("(b,c) missing from right-ideal violations")?;
    ensure(bc["product_name"] == "c", "b·c should be c")?;
    ensure(
        bc["pos"]["value"] == "1/10" && bc["pos"]["bound"] == "3/10",
        "positive degrees",
    )?;
    ensure(
        bc["neg"]["value"] == "-1/5" && bc["neg"]["bound"] == "-2/5",
        "negative degrees",
    )?;
    Ok(format!(
        "(b,c): 1/10 < 3/10 and -1/5 > -2/5; one of {} violations, first row-major witness {}",
        right["violation_count"], right["witness"]["element_names"]
    ))
}

fn theorem_suite() -> Outcome {
    let magmas = la_magmas_up_to(3);
    ensure(magmas.len() == 112, format!("{} magmas", magmas.len()))?;
    let bundles: Vec<FixtureBundle> = magmas
        .into_iter()
        .enumerate()
        .map(|(i, m)| FixtureBundle::new(format!("la-{i}"), m, vec![]))
        .collect();
    let cfg = RunConfig {
        samples: 1000,
        seed: 20240,
        q: 10,
    };
    let reports = run_all(&bundles, &cfg);
    let mut na = 0;
    let mut instances = 0;
    for (bundle, chunk) in bundles.iter().zip(reports.chunks(ids::ALL.len())) {
        let has_identity = bundle.magma.left_identity().is_some();
        for r in chunk {
            instances += r.checked;
            match r.status {
                Status::Fail => {
                    return Err(format!(
                        "{} failed on {}: {:?}",
                        r.id, bundle.name, r.witness
                    ))
                }
                Status::NotApplicable => {
                    na += 1;
                    let genuine = !has_identity
                        && matches!(
                            r.id,
                            ids::PARAMEDIAL_LAW
                                | ids::LEMMA_L1
                                | ids::GAMMA_ABSORPTION
                                | ids::RIGHT_IFF_INTERIOR
                                | ids::LEFT_IDEAL_IS_BI
                        );
                    ensure(genuine, format!("{} marked n/a on {}", r.id, bundle.name))?;
                }
                Status::Pass => {}
            }
        }
    }
    Ok(format!(
        "{} reports over 112 magmas, {instances} instances, 0 failures, {na} n/a (no left identity)",
        reports.len()
    ))
}

fn characterization() -> Outcome {
    let cfg = RunConfig {
        samples: 1000,
        seed: 20240,
        q: 10,
    };
    let mut compared = 0u64;
    for m in la_magmas_up_to(3) {
        let bundle = FixtureBundle::new("", m.clone(), vec![]);
        for (i, b) in cfg.family(&bundle).iter().enumerate() {
            let mut inputs = vec![b.clone()];
            if i < 100 {
                for class in IdealClass::ALL {
                    inputs.push(close_under(&m, b, class, BiForm::default()).unwrap());
                }
            }
            for x in &inputs {
                for class in IdealClass::ALL {
                    compared += 1;
                    let pointwise = holds(&m, x, class, BiForm::default()).unwrap();
                    let composed = characterize_by_composition(&m, x, class).unwrap().holds;
                    ensure(
                        pointwise == composed,
                        format!("{class} disagrees on {m}{}", x.to_json()),
                    )?;
                }
            }
        }
    }
    Ok(format!(
        "{compared} pointwise/compositional comparisons agree"
    ))
}

fn bridge() -> Outcome {
    let mut checked = 0;
    for m in la_magmas_up_to(3) {
        let n = m.order();
        for mask in 1u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            for class in IdealClass::ALL {
                checked += 1;
                let r =
                    verify_characteristic_bridge(&m, &subset, class).map_err(|e| e.to_string())?;
                ensure(r.holds, format!("{class} on {m}{subset:?}"))?;
            }
        }
    }
    Ok(format!("{checked} (magma, subset, class) triples agree"))
}

fn brute_force(n: usize) -> Vec<Vec<usize>> {
    let cells = n * n;
    (0..n.pow(cells as u32))
        .map(|mut code| {
            let mut t = vec![0; cells];
            for cell in (0..cells).rev() {
                t[cell] = code % n;
                code /= n;
            }
            t
        })
        .filter(|t| {
            let op = |x: usize, y: usize| t[x * n + y];
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(op(c, b), a))))
        })
        .collect()
}

fn enumeration_oracle() -> Outcome {
    let mut counts = Vec::new();
    for (n, locked) in [(2, 6), (3, 105)] {
        let oracle = brute_force(n);
        let found: Vec<Vec<usize>> = enumerate(&EnumerationTask::new(n))
            .unwrap()
            .magmas
            .iter()
            .map(|m| m.table().to_vec())
            .collect();
        ensure(
            found == oracle,
            format!("order {n}: enumerator and brute force disagree"),
        )?;
        ensure(
            found.len() == locked,
            format!("order {n}: {} tables, locked {locked}", found.len()),
        )?;
        counts.push(found.len());
    }
    Ok(format!(
        "labeled counts {counts:?} equal brute force over 16 and 19683 tables"
    ))
}

fn separation_search() -> Outcome {
    let mut spec = SearchSpec::new("interior ∧ ¬two_sided", vec![4]).map_err(|e| e.to_string())?;
    spec.seed = 0;
    spec.max_trials = 100_000;
    let hit = search(&spec)
        .map_err(|e| e.to_string())?
        .ok_or("no hit within 10^5 trials")?;
    let c = classify(&hit.magma, &hit.subset).unwrap();
    ensure(
        c.flag(IdealClass::Interior) && !c.flag(IdealClass::TwoSided),
        "hit does not re-check",
    )?;
    Ok(format!("hit at trial {} (seed 0)", hit.trial))
}

fn rust_sources(dir: &Path, out: &mut Vec<PathBuf>) {
    for entry in fs::read_dir(dir).unwrap().flatten() {
        let p = entry.path();
        if p.is_dir() {
            rust_sources(&p, out);
        } else if p.extension().is_some_and(|e| e == "rs") {
            out.push(p);
        }
    }
}

fn exactness() -> Outcome {
    let crates = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("..");
    let mut files = Vec::new();
    rust_sources(&crates, &mut files);
    // Built at runtime so this file does not match itself.
    let banned: Vec<String> = [
        ("f", "32"),
        ("f", "64"),
        ("EPSI", "LON"),
        ("epsi", "lon"),
        ("toler", "ance"),
        ("appr", "ox_eq"),
        ("1e", "-"),
    ]
    .iter()
    .map(|(a, b)| format!("{a}{b}"))
    .collect();
    let mut scanned = 0;
    for f in &files {
        let text = fs::read_to_string(f).unwrap();
        scanned += 1;
        for word in &banned {
            let hit = text.match_indices(word.as_str()).any(|(i, _)| {
                let before = text[..i].chars().next_back();
                !before.is_some_and(|c| c.is_alphanumeric() || c == '_')
            });
            ensure(!hit, format!("{} contains {word:?}", f.display()))?;
        }
    }
    Ok(format!(
        "{scanned} source files free of floating-point types and fuzzy-comparison tokens"
    ))
}

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion {
            name: "example31-laws",
            limit: Duration::from_secs(1),
            run: laws_example31,
        },
        Criterion {
            name: "example31-classify",
            limit: Duration::from_secs(1),
            run: classify_example31,
        },
        Criterion {
            name: "example32-classify",
            limit: Duration::from_secs(1),
            run: classify_example32,
        },
        Criterion {
            name: "theorem-suite",
            limit: Duration::from_secs(300),
            run: theorem_suite,
        },
        Criterion {
            name: "characterization",
            limit: Duration::from_secs(300),
            run: characterization,
        },
        Criterion {
            name: "characteristic-bridge",
            limit: Duration::from_secs(60),
            run: bridge,
        },
        Criterion {
            name: "enumeration-oracle",
            limit: Duration::from_secs(10),
            run: enumeration_oracle,
        },
        Criterion {
            name: "separation-search",
            limit: Duration::from_secs(60),
            run: separation_search,
        },
        Criterion {
            name: "exactness",
            limit: Duration::from_secs(60),
            run: exactness,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit {:?}", c.limit)),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} {:<22} {:>9.3}s  {}",
            if ok { "PASS" } else { "FAIL" },
            c.name,
            elapsed.as_secs_f64(),
            detail
        );
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
