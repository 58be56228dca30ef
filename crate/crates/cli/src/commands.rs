use coxeter_core::cache::{load_or_compute, CachedClassTable, SCHEMA_VERSION};
use coxeter_core::characters::{macmahon_solomon_bridge, permutations, sample_permutations};
use coxeter_core::{
    ComplementResult, ComplementStatus, ConjClassRecord, CoxeterError, CoxeterSystem, CoxeterType, DoublePartition,
    ElemId, Family, Group, Result,
};
use serde_json::json;

use crate::{Cli, Command, Output, RunConfig, Status};

pub fn run(cli: &Cli) -> Result<Status> {
    let cfg = &cli.config;
    match &cli.command {
        Command::GroupInfo { group } => group_info(cfg, *group),
        Command::Classes { group } => classes(cfg, *group),
        Command::Complement { group, lambda, class } => complement(cfg, *group, lambda.as_deref(), class.as_deref()),
        Command::Solomon { group, samples, seed } => solomon(cfg, *group, *samples, *seed),
        Command::Macmahon { n, samples, seed } => macmahon(cfg, *n as usize, *samples, *seed),
        Command::LongestWitness { group } => longest_witness(cfg, *group),
    }
}

fn build(cfg: &RunConfig, ctype: CoxeterType) -> Result<Group> {
    Group::new(ctype, cfg.budget)
}

/// Prints a JSON object tagged with the output schema version.
fn print_json(v: &serde_json::Value) {
    let mut v = v.clone();
    if let Some(obj) = v.as_object_mut() {
        obj.insert("schema".into(), json!(SCHEMA_VERSION));
    }
    println!("{}", serde_json::to_string_pretty(&v).expect("JSON values serialize"));
}

fn words(w: &[usize]) -> String {
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn group_info(cfg: &RunConfig, ctype: CoxeterType) -> Result<Status> {
    let sys = CoxeterSystem::build(ctype)?;
    if sys.order() > cfg.budget {
        return Err(CoxeterError::BudgetExceeded { order: sys.order(), budget: cfg.budget });
    }
    let g = Group::from_system(sys, cfg.budget)?;
    let matrix = g.sys().coxeter_matrix();
    match cfg.output {
        Output::Json => print_json(&json!({
            "group": ctype.to_string(),
            "order": g.order(),
            "rank": g.rank(),
            "coxeter_matrix": matrix,
            "positive_roots": g.sys().positive_root_count(),
        })),
        Output::Csv => {
            println!("key,value");
            println!("group,{ctype}");
            println!("order,{}", g.order());
            println!("rank,{}", g.rank());
            println!("positive_roots,{}", g.sys().positive_root_count());
        }
        Output::Text => {
            println!("group           {ctype}");
            println!("order           {}", g.order());
            println!("rank            {}", g.rank());
            println!("positive roots  {}", g.sys().positive_root_count());
            println!("Coxeter matrix");
            for row in matrix {
                println!("  {}", row.iter().map(|m| format!("{m:>2}")).collect::<Vec<_>>().join(" "));
            }
        }
    }
    Ok(Status::Pass)
}

fn class_records(cfg: &RunConfig, ctype: CoxeterType) -> Result<Vec<ConjClassRecord>> {
    if let Some(dir) = &cfg.cache_dir {
        if let Some(t) = CachedClassTable::load(dir, ctype) {
            if t.order > cfg.budget {
                return Err(CoxeterError::BudgetExceeded { order: t.order, budget: cfg.budget });
            }
            return Ok(t.records);
        }
        let g = build(cfg, ctype)?;
        return match load_or_compute(&g, dir) {
            Ok((records, _)) => Ok(records),
            Err(e) => {
                eprintln!("warning: class table not cached: {e}");
                Ok(g.classes().records.clone())
            }
        };
    }
    Ok(build(cfg, ctype)?.classes().records.clone())
}

fn label_text(ctype: CoxeterType, r: &ConjClassRecord) -> String {
    match &r.label {
        Some(l) if ctype.family() == Family::A => {
            format!("({})", l.plus.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        }
        Some(l) => l.to_string(),
        None => String::new(),
    }
}

fn classes(cfg: &RunConfig, ctype: CoxeterType) -> Result<Status> {
    let records = class_records(cfg, ctype)?;
    match cfg.output {
        Output::Json => print_json(&json!({ "group": ctype.to_string(), "classes": records })),
        Output::Csv => {
            println!("index,rep,length,class_size,centralizer_order,J,cuspidal,label,non_compliant");
            for r in &records {
                println!(
                    "{},{},{},{},{},{},{},\"{}\",{}",
                    r.index,
                    words(&r.rep_min),
                    r.length,
                    r.class_size,
                    r.centralizer_order,
                    words(&r.j.labels()),
                    r.cuspidal,
                    label_text(ctype, r),
                    r.non_compliant
                );
            }
        }
        Output::Text => {
            println!("{:>5}  {:>6}  {:>8}  {:>6}  {:<14} {:<22} rep", "class", "length", "size", "|C(w)|", "J", "label");
            for r in &records {
                let mut flags = String::new();
                if r.cuspidal {
                    flags.push_str(" cuspidal");
                }
                if r.non_compliant {
                    flags.push_str(" non-compliant");
                }
                println!(
                    "{:>5}  {:>6}  {:>8}  {:>6}  {:<14} {:<22} [{}]{flags}",
                    r.index,
                    r.length,
                    r.class_size,
                    r.centralizer_order,
                    format!("{{{}}}", words(&r.j.labels())),
                    label_text(ctype, r),
                    words(&r.rep_min)
                );
            }
        }
    }
    Ok(Status::Pass)
}

fn select_class(g: &Group, lambda: Option<&str>, class: Option<&str>) -> Result<ElemId> {
    let classes = g.classes();
    if let Some(l) = lambda {
        let l: DoublePartition = l.parse()?;
        return Ok(classes.records[g.class_of_label(&l)?].rep_id);
    }
    let sel = class.expect("clap requires --lambda or --class").trim();
    let unknown = || CoxeterError::Parse(format!("unknown class selector '{sel}'"));
    match sel {
        "identity" | "e" => Ok(0),
        "coxeter" => {
            let labels: Vec<usize> = (1..=g.rank()).collect();
            Ok(classes.records[classes.class_index_of(g.from_labels(&labels)?)].rep_id)
        }
        _ if sel.contains(|c: char| c.is_whitespace() || c == ',') => {
            let labels = sel
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| unknown()))
                .collect::<Result<Vec<_>>>()?;
            g.from_labels(&labels)
        }
        _ => {
            let i: usize = sel.parse().map_err(|_| unknown())?;
            classes.records.get(i).map(|r| r.rep_id).ok_or_else(unknown)
        }
    }
}

fn complement(cfg: &RunConfig, ctype: CoxeterType, lambda: Option<&str>, class: Option<&str>) -> Result<Status> {
    let g = build(cfg, ctype)?;
    let w = select_class(&g, lambda, class)?;
    let r: ComplementResult = g.centralizer_complement(w);
    match cfg.output {
        Output::Json => print_json(&json!({ "group": ctype.to_string(), "result": r })),
        Output::Csv => {
            println!("key,value");
            println!("status,{}", status_name(r.status));
            println!("rep,{}", words(&r.rep));
            println!("J,{}", words(&r.j.labels()));
            println!("centralizer_order,{}", r.centralizer_order);
            println!("parabolic_centralizer_order,{}", r.parabolic_centralizer_order);
            for (i, gen) in r.generators.iter().enumerate() {
                println!("generator_{},{}", i + 1, words(gen));
            }
        }
        Output::Text => {
            println!("representative  [{}]", words(&r.rep));
            println!("J               {{{}}}", words(&r.j.labels()));
            println!("|C_W(w)|        {}", r.centralizer_order);
            println!("|C_WJ(w)|       {}", r.parabolic_centralizer_order);
            println!("status          {}", status_name(r.status));
            for gen in &r.generators {
                println!("generator       [{}]", words(gen));
            }
            if let Some(c) = &r.certificate {
                println!("certificate     {}", serde_json::to_string(c).expect("certificate serializes"));
            }
        }
    }
    Ok(if r.status == ComplementStatus::AlgorithmFailed { Status::Violation } else { Status::Pass })
}

fn status_name(s: ComplementStatus) -> &'static str {
    match s {
        ComplementStatus::Found => "found",
        ComplementStatus::NoComplement => "no complement",
        ComplementStatus::AlgorithmFailed => "algorithm failed",
    }
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Violation
    }
}

fn solomon(cfg: &RunConfig, ctype: CoxeterType, samples: usize, seed: u64) -> Result<Status> {
    let g = build(cfg, ctype)?;
    let report = g.solomon_check(samples, seed);
    match cfg.output {
        Output::Json => {
            print_json(&json!({ "group": ctype.to_string(), "holds": report.holds(), "report": report }))
        }
        Output::Csv => print!("{}", g.character_table().to_csv()),
        Output::Text => println!(
            "solomon {ctype}: {} ({} classes, {} random elements, {} violations)",
            if report.holds() { "pass" } else { "FAIL" },
            report.classes_checked,
            report.random_checked,
            report.violations.len()
        ),
    }
    Ok(verdict(report.holds()))
}

fn macmahon(cfg: &RunConfig, n: usize, samples: Option<usize>, seed: u64) -> Result<Status> {
    let perms = match samples {
        Some(k) => sample_permutations(n, k, seed),
        None => permutations(n),
    };
    let report = macmahon_solomon_bridge(n, Some(&perms))?;
    match cfg.output {
        Output::Json => print_json(&json!({ "holds": report.holds(), "report": report })),
        Output::Csv => {
            println!("n,permutations,failures");
            println!("{},{},{}", report.n, report.permutations_checked, report.failures.len());
        }
        Output::Text => println!(
            "macmahon {n}: {} ({} permutations, {} failures)",
            if report.holds() { "pass" } else { "FAIL" },
            report.permutations_checked,
            report.failures.len()
        ),
    }
    Ok(verdict(report.holds()))
}

fn longest_witness(cfg: &RunConfig, ctype: CoxeterType) -> Result<Status> {
    let g = build(cfg, ctype)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for r in &g.classes().records {
        match g.longest_parabolic_witnesses(r.rep_id) {
            Ok((d, a)) => rows.push((r.index, r.rep_min.clone(), Some((g.word(d), g.word(a))), String::new())),
            Err(e) => {
                ok = false;
                rows.push((r.index, r.rep_min.clone(), None, e.to_string()));
            }
        }
    }
    match cfg.output {
        Output::Json => {
            let classes: Vec<_> = rows
                .iter()
                .map(|(i, rep, v, err)| match v {
                    Some((d, a)) => json!({ "class": i, "rep": rep, "v_descent": d, "v_ascent": a }),
                    None => json!({ "class": i, "rep": rep, "error": err }),
                })
                .collect();
            print_json(&json!({ "group": ctype.to_string(), "holds": ok, "classes": classes }));
        }
        Output::Csv => {
            println!("class,rep,v_descent,v_ascent");
            for (i, rep, v, _) in &rows {
                let (d, a) = v.clone().unwrap_or_default();
                println!("{i},{},{},{}", words(rep), words(&d), words(&a));
            }
        }
        Output::Text => println!(
            "theorem3 {ctype}: {} ({} classes)",
            if ok { "pass" } else { "FAIL" },
            rows.len()
        ),
    }
    Ok(verdict(ok))
}
