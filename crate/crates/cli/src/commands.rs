use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use bvfla_core::theorems::{render_table, FixtureBundle, RunConfig, Status};
use bvfla_core::{
    check_law, classify_with, enumerate, gamma, parse_table, run_all, search, BvfSubset,
    EnumerationTask, IdealClass, Law, LawReport, Magma, SearchSpec, Target,
};
use serde_json::{json, Value};

use crate::render::{ideal_witness, ideal_witness_json, to_json_text, tuple};
use crate::{exit, ClassifyArgs, EnumerateArgs, FixturesArgs, LawsArgs, SearchArgs, VerifyArgs};

/// Exit code on success paths; `Err` carries a message for exit code 2.
pub type CmdResult = Result<i32, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_table(path: &Path) -> Result<Magma, String> {
    parse_table(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_subset(path: &Path, order: usize) -> Result<BvfSubset, String> {
    let b = BvfSubset::from_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    if b.order() != order {
        return Err(format!(
            "{}: subset has {} entries but the table has order {order}",
            path.display(),
            b.order()
        ));
    }
    Ok(b)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), String> {
    out.write_all(text.as_bytes())
        .map_err(|e| format!("write failed: {e}"))
}

fn law_json(m: &Magma, r: &LawReport, all: bool) -> Value {
    let names = |t: &Vec<usize>| t.iter().map(|&x| m.label(x)).collect::<Vec<_>>();
    let mut v = json!({
        "law": r.law.name(),
        "holds": r.holds,
        "checked": r.checked,
        "violation_count": r.violations.len(),
        "witness": r.witness,
        "witness_names": r.witness.as_ref().map(names),
        "sides": r.sides.map(|(l, r)| [l, r]),
        "sides_names": r.sides.map(|(l, r)| [m.label(l), m.label(r)]),
    });
    if all {
        v["violations"] = json!(r.violations);
    }
    v
}

pub fn cmd_laws(args: &LawsArgs, out: &mut dyn Write) -> CmdResult {
    let m = load_table(&args.table)?;
    let reports: Vec<LawReport> = Law::ALL.iter().map(|&l| check_law(&m, l)).collect();
    let identity = m.left_identity();
    let left_invertive = reports[0].holds;

    if args.json {
        let doc = json!({
            "table": args.table.display().to_string(),
            "order": m.order(),
            "fingerprint": m.fingerprint(),
            "left_identity": identity,
            "left_identity_name": identity.map(|e| m.label(e)),
            "laws": reports.iter().map(|r| law_json(&m, r, args.all_witnesses)).collect::<Vec<_>>(),
        });
        emit(out, &to_json_text(doc))?;
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "order {}, fingerprint {}", m.order(), m.fingerprint());
        let _ = writeln!(
            s,
            "left identity: {}",
            identity.map_or("none".to_string(), |e| m.label(e))
        );
        for r in &reports {
            match (&r.witness, r.sides) {
                (Some(w), Some((lhs, rhs))) => {
                    let _ = writeln!(
                        s,
                        "{:<16} false  witness {}: {} != {} ({} of {} tuples fail)",
                        r.law.name(),
                        tuple(&m, w),
                        m.label(lhs),
                        m.label(rhs),
                        r.violations.len(),
                        r.checked
                    );
                    if args.all_witnesses {
                        for v in &r.violations {
                            let (l, rr) = r.law.sides(|x, y| m.op(x, y), v);
                            let _ = writeln!(
                                s,
                                "    {}: {} != {}",
                                tuple(&m, v),
                                m.label(l),
                                m.label(rr)
                            );
                        }
                    }
                }
                _ => {
                    let _ = writeln!(s, "{:<16} true   ({} tuples)", r.law.name(), r.checked);
                }
            }
        }
        emit(out, &s)?;
    }
    Ok(if left_invertive {
        exit::OK
    } else {
        exit::FAILED
    })
}

pub fn cmd_classify(args: &ClassifyArgs, out: &mut dyn Write) -> CmdResult {
    let m = load_table(&args.table)?;
    let b = match &args.bvf {
        Some(path) => load_subset(path, m.order())?,
        None => gamma(m.order()),
    };
    let c = classify_with(&m, &b, args.bi_form.into()).map_err(|e| e.to_string())?;

    if args.json {
        let mut classes = serde_json::Map::new();
        for class in IdealClass::ALL {
            let v = c.get(class);
            let mut entry = json!({
                "holds": v.holds,
                "violation_count": v.violations.len(),
                "witness": v.witness.as_ref().map(|w| ideal_witness_json(&m, w)),
            });
            if args.all_witnesses {
                entry["violations"] = json!(v
                    .violations
                    .iter()
                    .map(|w| ideal_witness_json(&m, w))
                    .collect::<Vec<_>>());
            }
            classes.insert(class.name().to_string(), entry);
        }
        let doc = json!({
            "table": args.table.display().to_string(),
            "subset": args.bvf.as_ref().map_or("gamma".to_string(), |p| p.display().to_string()),
            "magma_fingerprint": m.fingerprint(),
            "subset_fingerprint": b.fingerprint(),
            "bi_form": c.bi_form,
            "classes": classes,
        });
        emit(out, &to_json_text(doc))?;
    } else {
        let mut s = String::new();
        if args.decimal {
            let _ = writeln!(s, "degrees shown as approximate decimals (~)");
        }
        for class in IdealClass::ALL {
            let v = c.get(class);
            match &v.witness {
                None => {
                    let _ = writeln!(s, "{:<16} true", class.name());
                }
                Some(w) => {
                    let _ = writeln!(
                        s,
                        "{:<16} false  {} ({} violations)",
                        class.name(),
                        ideal_witness(&m, w, args.decimal),
                        v.violations.len()
                    );
                    if args.all_witnesses {
                        for w in &v.violations {
                            let _ = writeln!(s, "    {}", ideal_witness(&m, w, args.decimal));
                        }
                    }
                }
            }
        }
        emit(out, &s)?;
    }
    Ok(exit::OK)
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let m = load_table(&args.table)?;
    let subsets = args
        .bvf
        .iter()
        .map(|p| load_subset(p, m.order()))
        .collect::<Result<Vec<_>, _>>()?;
    let name = args
        .table
        .file_stem()
        .map_or("table".to_string(), |s| s.to_string_lossy().into_owned());
    let cfg = RunConfig {
        samples: args.samples,
        seed: args.seed,
        q: args.q,
    };
    let reports = run_all(&[FixtureBundle::new(name, m, subsets)], &cfg);
    let failed = reports.iter().any(|r| r.status == Status::Fail);
    if args.json {
        emit(
            out,
            &to_json_text(serde_json::to_value(&reports).expect("serializable")),
        )?;
    } else {
        emit(out, &render_table(&reports))?;
        for r in reports.iter().filter(|r| r.status == Status::Fail) {
            emit(
                out,
                &format!(
                    "{} witness: {}\n",
                    r.id,
                    r.witness.as_ref().expect("failures carry witnesses")
                ),
            )?;
        }
    }
    Ok(if failed { exit::FAILED } else { exit::OK })
}

pub fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> CmdResult {
    let order = usize::try_from(args.order).map_err(|_| "order too large".to_string())?;
    let task = EnumerationTask {
        order,
        require_left_identity: args.left_identity,
        up_to_isomorphism: args.iso,
        budget: (args.budget != 0).then_some(args.budget),
    };
    let census = enumerate(&task).map_err(|e| e.to_string())?;
    let summary = json!({
        "order": order,
        "count": census.count(),
        "up_to_isomorphism": args.iso,
        "left_identity": args.left_identity,
        "budget": task.budget,
        "budget_exhausted": census.budget_exhausted,
        "nodes": census.nodes,
    });

    if let Some(path) = &args.out {
        fs::write(path, census.to_text()).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if args.json {
        let mut doc = summary;
        if args.out.is_none() {
            doc["tables"] = json!(census
                .magmas
                .iter()
                .map(|m| m.elements().map(|x| m.row(x).to_vec()).collect::<Vec<_>>())
                .collect::<Vec<_>>());
        }
        emit(out, &to_json_text(doc))?;
    } else if args.out.is_some() {
        emit(
            out,
            &format!(
                "order {order}: {} tables{}{}\n",
                census.count(),
                if args.iso { " up to isomorphism" } else { "" },
                if census.budget_exhausted {
                    " (partial: budget exhausted)"
                } else {
                    ""
                }
            ),
        )?;
    } else {
        emit(out, &census.to_text())?;
    }
    if census.budget_exhausted {
        return Ok(exit::BUDGET);
    }
    Ok(exit::OK)
}

pub fn cmd_search(args: &SearchArgs, out: &mut dyn Write) -> CmdResult {
    let target = Target::parse(&args.target).map_err(|e| e.to_string())?;
    let spec = SearchSpec {
        target,
        orders: args.orders.clone(),
        q: args.q,
        seed: args.seed,
        max_trials: args.max_trials,
        bi_form: args.bi_form.into(),
    };
    let hit = search(&spec).map_err(|e| e.to_string())?;
    let Some(hit) = hit else {
        if args.json {
            emit(
                out,
                &to_json_text(json!({"target": spec.target.to_string(), "hit": null})),
            )?;
        } else {
            emit(out, "none\n")?;
        }
        return Ok(exit::NOT_FOUND);
    };
    if args.json {
        let doc = json!({
            "target": spec.target.to_string(),
            "trial": hit.trial,
            "table": hit.magma.to_table_text(),
            "subset": serde_json::to_value(&hit.subset).expect("serializable"),
            "flags": IdealClass::ALL
                .iter()
                .map(|&c| (c.name().to_string(), Value::Bool(hit.classification.flag(c))))
                .collect::<serde_json::Map<_, _>>(),
        });
        emit(out, &to_json_text(doc))?;
    } else {
        let mut s = format!("hit at trial {} for {}\n", hit.trial, spec.target);
        s.push_str(&hit.magma.to_table_text());
        s.push_str(&hit.subset.to_json());
        for class in IdealClass::ALL {
            let _ = writeln!(s, "{:<16} {}", class.name(), hit.classification.flag(class));
        }
        emit(out, &s)?;
    }
    Ok(exit::OK)
}

pub fn cmd_fixtures(args: &FixturesArgs, out: &mut dyn Write) -> CmdResult {
    fs::create_dir_all(&args.out).map_err(|e| format!("{}: {e}", args.out.display()))?;
    for (name, contents) in bvfla_core::fixtures::FILES {
        let path = args.out.join(name);
        fs::write(&path, contents).map_err(|e| format!("{}: {e}", path.display()))?;
        emit(out, &format!("wrote {}\n", path.display()))?;
    }
    Ok(exit::OK)
}
