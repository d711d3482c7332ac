use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use hspeed_core::extraction::{
    bipartite_ramsey_witness, extract_complex, extract_from_bipartite_matching, extract_from_matching,
    extract_nd_bipartite, extract_nd_general, extract_vc, find_skew_matching, Extraction,
};
use hspeed_core::families::{check_universality, generate, Builtin, ClassSpec, FamilyId};
use hspeed_core::graph::to_graph6;
use hspeed_core::parameters::ParameterReport;
use hspeed_core::speeds::{
    classify_layer, count_labelled_cached, formula_count, index_of, CountCache, FormulaCount, Layer,
};
use hspeed_core::{Bipartition, Graph};
use serde_json::{json, Value};

use crate::{input, Command};

const FAILED: u8 = 1;

pub fn run(command: Command, json: bool) -> Result<ExitCode> {
    match command {
        Command::Params { graph } => params(graph.as_deref(), json),
        Command::Generate { family, n, co } => generate_cmd(&family, n, co, json),
        Command::Extract { procedure, graph, s, t, p, n, m, a } => {
            let sizes = Sizes { s, t, p, n, m };
            extract(&procedure, &graph, &sizes, a.as_deref(), json)
        }
        Command::Count { class, n, formula, csv, cache, no_cache } => {
            let cache = if no_cache {
                None
            } else if let Some(path) = cache {
                Some(CountCache::open(path)?)
            } else {
                CountCache::from_env()?
            };
            count(&class, n, formula, csv, cache.as_ref(), json)
        }
        Command::Classify { class } => classify(&class, json),
        Command::Index { class } => index(&class, json),
        Command::Universality { family, n } => universality(&family, n, json),
    }
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("JSON values serialise"));
}

fn class_spec(text: &str) -> Result<ClassSpec> {
    text.parse::<ClassSpec>().with_context(|| format!("cannot read class {text:?}"))
}

fn family_id(text: &str) -> Result<FamilyId> {
    text.parse::<FamilyId>().with_context(|| format!("cannot read family {text:?}"))
}

fn params(arg: Option<&str>, json: bool) -> Result<ExitCode> {
    let graphs = input::graphs(arg)?;
    for (k, g) in graphs.iter().enumerate() {
        let report = serde_json::to_value(ParameterReport::compute(g)?)?;
        let Value::Object(fields) = report else { unreachable!("report is a struct") };
        if json {
            let mut out = serde_json::Map::new();
            out.insert("graph".into(), Value::String(to_graph6(g)));
            out.extend(fields);
            print_json(&Value::Object(out));
        } else {
            if k > 0 {
                println!();
            }
            println!("{:<22}{}", "graph", to_graph6(g));
            println!("{:<22}{}", "vertices", g.n());
            for (name, value) in fields {
                println!("{name:<22}{value}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn generate_cmd(family: &str, n: usize, co: bool, json: bool) -> Result<ExitCode> {
    let mut id = family_id(family)?;
    if co {
        id = id.complement();
    }
    let g = generate(id, n)?;
    if json {
        print_json(&json!({ "family": id, "n": n, "vertices": g.n(), "graph6": to_graph6(&g) }));
    } else {
        println!("{}", to_graph6(&g));
    }
    Ok(ExitCode::SUCCESS)
}

struct Sizes {
    s: Option<usize>,
    t: Option<usize>,
    p: Option<usize>,
    n: Option<usize>,
    m: Option<usize>,
}

const DEFAULT_SIZE: usize = 2;

const PROCEDURES: [&str; 8] =
    ["complex", "bipartite-ramsey", "bipartite-matching", "matching", "skew", "nd-bipartite", "nd", "vc"];

fn bipartition(g: &Graph, a: Option<&str>) -> Result<Bipartition> {
    match a {
        Some(list) => {
            let part_a = input::vertex_list(list)? & g.vertices();
            Ok(Bipartition::new(g.clone(), part_a, g.vertices() - part_a)?)
        }
        None => Bipartition::from_graph(g).context("graph is not bipartite"),
    }
}

fn extract(procedure: &str, graph: &str, sizes: &Sizes, a: Option<&str>, json: bool) -> Result<ExitCode> {
    let g = input::graph(graph)?;
    let size = |v: Option<usize>| v.unwrap_or(DEFAULT_SIZE);
    let result = match procedure {
        "complex" => extract_complex(&g, size(sizes.n)),
        "bipartite-ramsey" => bipartite_ramsey_witness(&bipartition(&g, a)?, size(sizes.s)),
        "bipartite-matching" => extract_from_bipartite_matching(&bipartition(&g, a)?, size(sizes.s), size(sizes.t)),
        "matching" => extract_from_matching(&g, size(sizes.s), size(sizes.t), size(sizes.p)),
        "nd-bipartite" => extract_nd_bipartite(&bipartition(&g, a)?, size(sizes.p)),
        "nd" => extract_nd_general(&g, size(sizes.p)),
        "vc" => extract_vc(&g, size(sizes.n))?,
        "skew" => return skew(&bipartition(&g, a)?, size(sizes.m), json),
        other => bail!("unknown procedure {other:?} (expected one of {})", PROCEDURES.join(", ")),
    };
    if json {
        print_json(&serde_json::to_value(&result)?);
    } else {
        match &result {
            Extraction::Found(w) => println!("{} of size {} on vertices {:?}", w.kind, w.size, w.embedding.map()),
            Extraction::Failure(f) => println!("failure at stage {}: {}", f.stage, f.detail),
        }
    }
    Ok(if result.is_found() { ExitCode::SUCCESS } else { ExitCode::from(FAILED) })
}

fn skew(bp: &Bipartition, m: usize, json: bool) -> Result<ExitCode> {
    match find_skew_matching(bp, m) {
        Ok(sm) => {
            if json {
                print_json(&serde_json::to_value(&sm)?);
            } else {
                let kind = if sm.complemented { "complemented skew matching" } else { "skew matching" };
                println!("{kind} {:?}", sm.pairs);
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(detail) => {
            if json {
                print_json(&json!({ "failure": detail, "stage": "skew" }));
            } else {
                println!("failure at stage skew: {detail}");
            }
            Ok(ExitCode::from(FAILED))
        }
    }
}

fn formula_of(spec: &ClassSpec, n: usize) -> Option<FormulaCount> {
    match spec {
        ClassSpec::Builtin(Builtin::Family(id)) => formula_count(*id, n).ok(),
        _ => None,
    }
}

fn describe_formula(f: &FormulaCount) -> String {
    if f.lower_bound {
        format!("lower bound {}", f.value)
    } else if f.valid_from > 1 {
        format!("formula {}, valid from n = {}", f.value, f.valid_from)
    } else {
        format!("formula {}", f.value)
    }
}

fn count(class: &str, n: usize, formula_only: bool, csv: bool, cache: Option<&CountCache>, json: bool) -> Result<ExitCode> {
    let spec = class_spec(class)?;
    if formula_only {
        let ClassSpec::Builtin(Builtin::Family(id)) = spec else {
            bail!("--formula needs a family class such as family:s");
        };
        let f = formula_count(id, n)?;
        if json {
            print_json(&json!({ "class": spec.to_string(), "n": n, "formula": f }));
        } else {
            println!("{}", describe_formula(&f));
        }
        return Ok(ExitCode::SUCCESS);
    }
    let ns: Vec<usize> = if csv { (1..=n).collect() } else { vec![n] };
    if csv && !json {
        println!("n,count");
    }
    for k in ns {
        let value = count_labelled_cached(&spec, k, cache)?;
        let formula = formula_of(&spec, k);
        if json {
            print_json(&json!({ "class": spec.to_string(), "n": k, "count": value.to_string(), "formula": formula }));
        } else if csv {
            println!("{k},{value}");
        } else {
            match formula {
                Some(f) => println!("{value} ({})", describe_formula(&f)),
                None => println!("{value}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn classify(class: &str, json: bool) -> Result<ExitCode> {
    let spec = class_spec(class)?;
    let verdict = classify_layer(&spec)?;
    if json {
        let mut value = serde_json::to_value(&verdict)?;
        value["class"] = Value::String(spec.to_string());
        print_json(&value);
        return Ok(ExitCode::SUCCESS);
    }
    match (&verdict.layer, &verdict.index) {
        (Layer::PositiveEntropy, Some(ix)) => println!("{}, k={}, entropy {}", verdict.layer, ix.k, ix.entropy),
        _ => println!("{}", verdict.layer),
    }
    if verdict.evidence_only {
        println!("evidence only: judged from generated family members");
    }
    for e in &verdict.exclusions {
        match &e.witness {
            Some(w) => println!("  excludes {:<8} witness {w}", e.class),
            None => println!("  contains {}", e.class),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn index(class: &str, json: bool) -> Result<ExitCode> {
    let spec = class_spec(class)?;
    let report = index_of(&spec)?;
    if json {
        print_json(&json!({ "class": spec.to_string(), "k": report.k, "i": report.i, "j": report.j, "entropy": report.entropy }));
    } else {
        println!("k={} (E({},{})), entropy {}", report.k, report.i, report.j, report.entropy);
    }
    Ok(ExitCode::SUCCESS)
}

fn universality(family: &str, n: usize, json: bool) -> Result<ExitCode> {
    let report = check_universality(family_id(family)?, n)?;
    if json {
        print_json(&serde_json::to_value(&report)?);
    } else if report.passed {
        println!(
            "pass: all {} {n}-vertex members of {} embed in its {}-vertex generator",
            report.members_checked, report.family, report.host_vertices
        );
    } else {
        println!(
            "fail: {} of {} {n}-vertex members of {} do not embed: {}",
            report.failures.len(),
            report.members_checked,
            report.family,
            report.failures.join(" ")
        );
    }
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(FAILED) })
}
