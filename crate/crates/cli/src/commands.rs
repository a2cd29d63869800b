use std::fmt::Write;
use std::path::Path;
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use repvol::chartab::CharacterTable;
use repvol::fingroup::{FiniteGroup, GroupBuilder};
use repvol::format::{format_significant, SIGNIFICANT_DIGITS};
use repvol::homcount::{
    ac_invariance_check, class_function_strings, hom_count_brute, random_ac_sequence, surface_distribution_brute,
    surface_distribution_character, surface_hom_count, volume_distribution, HomCountReport, Method, SurfaceKind,
};
use repvol::mobius::{catalog_graph, classify_surface, evaluate_graph_direct, evaluate_graph_formula, MobiusGraph};
use repvol::words::{apply_ac_move, parse_ac_move, parse_presentation, Presentation};
use repvol::wzeta::{nonorientable_volume_ratio_su2, orientable_volume_ratio, torus_volume, LieFamily, SeriesResult};

use crate::error::{CliError, Kind};
use crate::{
    AcCommand, Cli, Command, CountMethod, GraphMethod, GroupCommand, MobiusCommand, PresentationArgs,
    PresentationSource, SurfaceArgs, TableFormat, VerifyArgs, WzetaArgs,
};

type Result<T> = std::result::Result<T, CliError>;

/// What a command prints, in both output modes.
struct Report {
    json: Value,
    text: String,
    /// a verification comparison disagreed
    mismatch: bool,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            mismatch: false,
        }
    }
}

pub fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::usage(e.to_string()))?;
    }
    let budget = cli.budget;
    let report = match cli.command {
        Command::Group(GroupCommand::Info { group, table }) => group_info(&group, table)?,
        Command::Homcount(args) => homcount(&args, budget)?,
        Command::VolumeDist(args) => volume_dist(&args, budget)?,
        Command::Surface(args) => surface(&args, budget)?,
        Command::Ac(AcCommand::Apply { source, moves, group }) => ac_apply(&source, &moves, group.as_deref(), budget)?,
        Command::Ac(AcCommand::Fuzz {
            source,
            group,
            sequences,
            length,
            max_generators,
            seed,
        }) => ac_fuzz(&source, &group, sequences, length, max_generators, seed, budget)?,
        Command::Mobius(MobiusCommand::Classify { graph }) => mobius_classify(&graph)?,
        Command::Mobius(MobiusCommand::Eval { graph, group, method }) => mobius_eval(&graph, &group, method, budget)?,
        Command::Wzeta(args) => wzeta(&args)?,
        Command::VerifyPaper(args) => verify(&args)?,
    };
    let out = if cli.json {
        serde_json::to_string_pretty(&report.json).expect("JSON values serialize") + "\n"
    } else {
        report.text
    };
    emit(&out)?;
    Ok(if report.mismatch {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

/// Writes to stdout; a closed pipe (`repvol ... | head`) is not an error.
fn emit(out: &str) -> Result<()> {
    use std::io::Write as _;
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(CliError::new(Kind::Input, format!("cannot write output: {e}")))
        }
        _ => Ok(()),
    }
}

fn load_group(spec: &str) -> Result<FiniteGroup> {
    Ok(GroupBuilder::new().build(spec)?)
}

fn load_presentation(source: &PresentationSource) -> Result<Presentation> {
    let text = match (&source.presentation, &source.file) {
        (Some(text), _) => text.clone(),
        (None, Some(path)) => {
            std::fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {path}: {e}")))?
        }
        (None, None) => return Err(CliError::usage("give --presentation or --file")),
    };
    Ok(parse_presentation(&text)?)
}

fn load_graph(arg: &str) -> Result<MobiusGraph> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| CliError::input(format!("cannot read {arg}: {e}")))?;
        return Ok(MobiusGraph::parse(&text)?);
    }
    catalog_graph(arg).ok_or_else(|| CliError::input(format!("{arg:?} is neither a graph file nor a built-in graph")))
}

fn fmt(x: f64) -> String {
    format_significant(x, SIGNIFICANT_DIGITS)
}

fn group_info(spec: &str, format: Option<TableFormat>) -> Result<Report> {
    let g = load_group(spec)?;
    let table = CharacterTable::compute(&g)?;
    let classes = table.classes();
    let json = json!({
        "group": g.name(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "classes": (0..classes.num_classes()).map(|k| json!({
            "class": k,
            "size": classes.class_size(k),
            "representative": g.label(classes.representative(k)),
        })).collect::<Vec<_>>(),
        "irreps": (0..table.num_irreps()).map(|l| json!({
            "irrep": l,
            "dim": table.dim(l),
            "indicator": table.indicators()[l],
            "values": table.character(l).iter()
                .map(|&v| repvol::format::format_complex(v, SIGNIFICANT_DIGITS))
                .collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    let text = match format {
        Some(TableFormat::Tsv) => table.to_tsv(),
        Some(TableFormat::Text) | None => table.to_structured_text(&g),
    };
    Ok(Report::ok(json, text))
}

fn count_text(r: &HomCountReport) -> String {
    let mut text = String::new();
    writeln!(text, "presentation {}", r.presentation).unwrap();
    writeln!(text, "group {} (order {})", r.group, r.group_order).unwrap();
    writeln!(text, "count {}", r.count).unwrap();
    writeln!(text, "work {}", r.work).unwrap();
    text
}

fn homcount(args: &PresentationArgs, budget: u64) -> Result<Report> {
    let g = load_group(&args.group)?;
    let p = load_presentation(&args.source)?;
    let r = hom_count_brute(&g, &p, budget)?;
    let text = count_text(&r);
    Ok(Report::ok(serde_json::to_value(&r).expect("report serializes"), text))
}

fn distribution_json(g: &FiniteGroup, table: &CharacterTable, values: &[String]) -> Vec<Value> {
    let c = table.classes();
    values
        .iter()
        .enumerate()
        .map(|(k, v)| {
            json!({
                "class": k,
                "size": c.class_size(k),
                "representative": g.label(c.representative(k)),
                "value": v,
            })
        })
        .collect()
}

fn distribution_text(g: &FiniteGroup, table: &CharacterTable, values: &[String]) -> String {
    let c = table.classes();
    let mut text = format!("{:<6} {:<6} {:<16} {}\n", "class", "size", "representative", "fiber");
    for (k, v) in values.iter().enumerate() {
        writeln!(
            text,
            "{:<6} {:<6} {:<16} {}",
            k,
            c.class_size(k),
            g.label(c.representative(k)),
            v
        )
        .unwrap();
    }
    text
}

fn volume_dist(args: &PresentationArgs, budget: u64) -> Result<Report> {
    let g = load_group(&args.group)?;
    let p = load_presentation(&args.source)?;
    let table = CharacterTable::compute(&g)?;
    let f = volume_distribution(&g, table.classes(), &p, budget)?;
    let values = class_function_strings(&f);
    let json = json!({
        "group": g.name(),
        "presentation": p.to_string(),
        "distribution": distribution_json(&g, &table, &values),
    });
    let mut text = format!("presentation {p}\ngroup {} (order {})\n", g.name(), g.order());
    text.push_str(&distribution_text(&g, &table, &values));
    Ok(Report::ok(json, text))
}

fn surface_kind(genus: Option<u32>, crosscaps: Option<u32>) -> Result<SurfaceKind> {
    match (genus, crosscaps) {
        (Some(g), None) => Ok(SurfaceKind::orientable(g)),
        (None, Some(k)) => Ok(SurfaceKind::non_orientable(k)?),
        _ => Err(CliError::usage("give exactly one of --genus and --crosscaps")),
    }
}

fn match_line(equal: bool) -> &'static str {
    if equal {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

fn surface(args: &SurfaceArgs, budget: u64) -> Result<Report> {
    let kind = surface_kind(args.genus, args.crosscaps)?;
    let g = load_group(&args.group)?;
    let table = CharacterTable::compute(&g)?;
    let methods: &[Method] = match args.method {
        CountMethod::Brute => &[Method::Brute],
        CountMethod::Character => &[Method::Character],
        CountMethod::Both => &[Method::Brute, Method::Character],
    };
    let mut text = format!("surface {kind}\ngroup {} (order {})\n", g.name(), g.order());
    let mut counts = serde_json::Map::new();
    let mut terms = Vec::new();
    let mut results = Vec::new();
    let mut work = None;
    for &m in methods {
        let r = surface_hom_count(&g, Some(&table), kind, m, budget)?;
        writeln!(text, "{:<10} {}", m.to_string(), r.count).unwrap();
        counts.insert(m.to_string(), json!(r.count.to_string()));
        if m == Method::Brute {
            work = Some(r.work.to_string());
        }
        if m == Method::Character {
            terms = r.terms.clone();
        }
        results.push(r.count);
    }
    let equal = results.windows(2).all(|w| w[0] == w[1]);
    let mut json = json!({
        "surface": kind.to_string(),
        "euler_characteristic": kind.euler_characteristic(),
        "group": g.name(),
        "group_order": g.order(),
        "counts": counts,
        "terms": terms,
        "work": work,
    });
    let mut mismatch = false;
    if results.len() > 1 {
        text.push_str(match_line(equal));
        text.push('\n');
        json["match"] = json!(equal);
        mismatch = !equal;
    }
    if args.distribution {
        let mut dists = serde_json::Map::new();
        let mut all = Vec::new();
        for &m in methods {
            let f = match m {
                Method::Brute => surface_distribution_brute(&g, table.classes(), kind, budget)?,
                Method::Character => surface_distribution_character(&table, kind)?,
            };
            let values = class_function_strings(&f);
            writeln!(text, "\ndistribution ({m})").unwrap();
            text.push_str(&distribution_text(&g, &table, &values));
            dists.insert(m.to_string(), json!(distribution_json(&g, &table, &values)));
            all.push(f);
        }
        if all.len() > 1 {
            let same = all[0] == all[1];
            writeln!(text, "distribution {}", match_line(same)).unwrap();
            json["distribution_match"] = json!(same);
            mismatch |= !same;
        }
        json["distribution"] = Value::Object(dists);
    }
    Ok(Report { json, text, mismatch })
}

fn ac_apply(source: &PresentationSource, moves: &[String], group: Option<&str>, budget: u64) -> Result<Report> {
    let mut p = load_presentation(source)?;
    let g = group.map(load_group).transpose()?;
    let count = |p: &Presentation| -> Result<Option<String>> {
        match &g {
            Some(g) => Ok(Some(hom_count_brute(g, p, budget)?.count.to_string())),
            None => Ok(None),
        }
    };
    let mut steps = vec![json!({ "move": Value::Null, "presentation": p.to_string(), "count": count(&p)? })];
    let mut text = String::new();
    let line = |text: &mut String, label: &str, p: &Presentation, c: &Option<String>| {
        match c {
            Some(c) => writeln!(text, "{label:<28} {p}  count {c}"),
            None => writeln!(text, "{label:<28} {p}"),
        }
        .unwrap()
    };
    line(&mut text, "start", &p, &count(&p)?);
    for m in moves {
        let parsed = parse_ac_move(m, &p)?;
        let label = parsed.describe(&p);
        p = apply_ac_move(&p, &parsed)?;
        let c = count(&p)?;
        line(&mut text, &label, &p, &c);
        steps.push(json!({ "move": label, "presentation": p.to_string(), "count": c }));
    }
    let mut json = json!({ "steps": steps });
    let mut mismatch = false;
    if let Some(g) = &g {
        let counts: Vec<&Value> = json["steps"].as_array().unwrap().iter().map(|s| &s["count"]).collect();
        let equal = counts.windows(2).all(|w| w[0] == w[1]);
        writeln!(text, "{} ({})", match_line(equal), g.name()).unwrap();
        json["group"] = json!(g.name());
        json["match"] = json!(equal);
        mismatch = !equal;
    }
    Ok(Report { json, text, mismatch })
}

fn ac_fuzz(
    source: &PresentationSource,
    group: &str,
    sequences: usize,
    length: usize,
    max_generators: usize,
    seed: u64,
    budget: u64,
) -> Result<Report> {
    if length == 0 {
        return Err(CliError::usage("--length must be at least 1"));
    }
    let p = load_presentation(source)?;
    let g = load_group(group)?;
    let base = hom_count_brute(&g, &p, budget)?.count;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total_moves = 0;
    let mut failures = Vec::new();
    for i in 0..sequences {
        let len = rng.random_range(1..=length);
        let (moves, _) = random_ac_sequence(&mut rng, &p, len, max_generators.max(p.num_generators()));
        total_moves += moves.len();
        let r = ac_invariance_check(&g, &p, &moves, budget);
        if let Some(why) = &r.stopped {
            return Err(CliError::new(Kind::Budget, format!("sequence {i}: {why}")));
        }
        if !r.consistent {
            failures.push(json!({
                "sequence": i,
                "presentations": r.presentations,
                "counts": r.counts.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }));
        }
    }
    let mut text = format!(
        "presentation {p}\ngroup {} (order {})\ncount {base}\nsequences {sequences}\nmoves {total_moves}\n",
        g.name(),
        g.order()
    );
    text.push_str(match_line(failures.is_empty()));
    text.push('\n');
    let json = json!({
        "presentation": p.to_string(),
        "group": g.name(),
        "count": base.to_string(),
        "sequences": sequences,
        "moves": total_moves,
        "seed": seed,
        "match": failures.is_empty(),
        "failures": failures,
    });
    Ok(Report {
        mismatch: !json["failures"].as_array().unwrap().is_empty(),
        json,
        text,
    })
}

fn mobius_classify(arg: &str) -> Result<Report> {
    let graph = load_graph(arg)?;
    let c = classify_surface(&graph);
    let text = format!(
        "vertices {}\nedges {}\nfaces {}\neuler characteristic {}\norientable {}\nsurface {}\n",
        c.vertices,
        c.edges,
        c.faces,
        c.euler_characteristic,
        if c.orientable { "yes" } else { "no" },
        c.kind
    );
    let mut json = serde_json::to_value(c).expect("classification serializes");
    json["surface"] = json!(c.kind.to_string());
    Ok(Report::ok(json, text))
}

fn mobius_eval(arg: &str, group: &str, method: GraphMethod, budget: u64) -> Result<Report> {
    let graph = load_graph(arg)?;
    let g = load_group(group)?;
    let c = classify_surface(&graph);
    let mut text = format!(
        "surface {} (faces {})\ngroup {} (order {})\n",
        c.kind,
        c.faces,
        g.name(),
        g.order()
    );
    let mut counts = serde_json::Map::new();
    let mut results = Vec::new();
    if matches!(method, GraphMethod::Direct | GraphMethod::Both) {
        let r = evaluate_graph_direct(&g, &graph, budget)?;
        writeln!(text, "{:<8} {}", "direct", r.count).unwrap();
        counts.insert("direct".into(), json!(r.count.to_string()));
        results.push(r.count);
    }
    if matches!(method, GraphMethod::Formula | GraphMethod::Both) {
        let table = CharacterTable::compute(&g)?;
        let r = evaluate_graph_formula(&g, &table, &graph)?;
        writeln!(text, "{:<8} {}", "formula", r.count).unwrap();
        counts.insert("formula".into(), json!(r.count.to_string()));
        results.push(r.count);
    }
    let mut json = json!({
        "surface": c.kind.to_string(),
        "classification": c,
        "group": g.name(),
        "counts": counts,
    });
    let mut mismatch = false;
    if results.len() > 1 {
        let equal = results[0] == results[1];
        writeln!(text, "{}", match_line(equal)).unwrap();
        json["match"] = json!(equal);
        mismatch = !equal;
    }
    Ok(Report { json, text, mismatch })
}

fn series_report(family: LieFamily, kind: SurfaceKind, r: &SeriesResult<f64>) -> Report {
    let convergence = serde_json::to_value(r.convergence).expect("enum serializes");
    let convergence = convergence.as_str().unwrap_or_default().to_string();
    let text = format!(
        "family {family}\nsurface {kind}\nvalue {}\ncutoff {}\ntail bound {}\nrounding bound {}\nconvergence {convergence}\n",
        fmt(r.value),
        r.cutoff,
        fmt(r.tail_bound),
        fmt(r.rounding_bound),
    );
    let json = json!({
        "family": family.to_string(),
        "surface": kind.to_string(),
        "value": fmt(r.value),
        "partial_sum": fmt(r.partial_sum),
        "cutoff": r.cutoff,
        "tail_bound": fmt(r.tail_bound),
        "rounding_bound": fmt(r.rounding_bound),
        "convergence": convergence,
    });
    Report::ok(json, text)
}

fn wzeta(args: &WzetaArgs) -> Result<Report> {
    let family: LieFamily = args.family.parse()?;
    let kind = surface_kind(args.genus, args.crosscaps)?;
    if args.tol.is_nan() || args.tol <= 0.0 {
        return Err(CliError::usage("--tol must be positive"));
    }
    match (family, kind) {
        (LieFamily::Torus(n), _) => {
            let v = torus_volume(n, kind);
            let text = format!("family {family}\nsurface {kind}\nvolume {v}\nh1 {}\n", v.h1);
            let mut json = serde_json::to_value(v).expect("torus volume serializes");
            json["family"] = json!(family.to_string());
            json["surface"] = json!(kind.to_string());
            json["volume"] = json!(v.to_string());
            Ok(Report::ok(json, text))
        }
        (LieFamily::Su(_), SurfaceKind::Orientable { genus }) => {
            let r = orientable_volume_ratio::<f64>(family, genus, args.tol)?;
            Ok(series_report(family, kind, &r))
        }
        (LieFamily::Su(2), SurfaceKind::NonOrientable { crosscaps }) => {
            let r = nonorientable_volume_ratio_su2::<f64>(crosscaps, args.tol)?;
            Ok(series_report(family, kind, &r))
        }
        (LieFamily::Su(_), SurfaceKind::NonOrientable { .. }) => Err(CliError::usage(
            "non-orientable sums need the real/quaternionic split of the irreps, available for SU(2) only",
        )),
    }
}

fn verify(args: &VerifyArgs) -> Result<Report> {
    let ids: Vec<u8> = if args.criterion.is_empty() {
        repvol::verify::CRITERIA.iter().map(|&(id, _)| id).collect()
    } else {
        args.criterion.clone()
    };
    let mut outcomes = Vec::new();
    for id in ids {
        let o = repvol::verify::run_criterion(id)
            .ok_or_else(|| CliError::usage(format!("no criterion {id}; they are numbered 1 to 10")))?;
        outcomes.push(o);
    }
    let mut text = String::new();
    for o in &outcomes {
        writeln!(
            text,
            "criterion {:>2} {} {} ({} checks)",
            o.id,
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.checks
        )
        .unwrap();
        for d in &o.detail {
            writeln!(text, "    {d}").unwrap();
        }
    }
    let all = outcomes.iter().all(|o| o.passed);
    writeln!(text, "{}", if all { "ALL PASS" } else { "FAILED" }).unwrap();
    let json = json!({ "passed": all, "criteria": outcomes });
    Ok(Report {
        json,
        text,
        mismatch: !all,
    })
}
