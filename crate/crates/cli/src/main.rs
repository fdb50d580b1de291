//! Command-line surface for the 0-Schur algebra engine: dimension queries,
//! orbit products, idempotents, hom tables, projective decompositions,
//! quiver export, relation verification and the acceptance checks.

use std::fmt::Write as _;
use std::process::ExitCode;
use zschur_core::acceptance::{self, Tier};
use zschur_core::algebra::{dimension_formulas, SchurAlgebra};
use zschur_core::combinatorics::{enumerate_classes, Composition, Decomposition};
use zschur_core::error::Error;
use zschur_core::modules::{
    self, cartan_matrix_with_threads, decompose_projective, ext_table, indec_hom_basis,
};
use zschur_core::orbits::{
    self, classify_idempotent, degenerates_to, idempotent_hasse, idempotent_orbit, OrbitMatrix,
};
use zschur_core::quiver::gabriel_quiver;
use zschur_core::relations::{parse_relation_file, verify_file, Verdict};

const USAGE: &str = "\
zschur — exact computations in 0-Schur algebras

USAGE:
    zschur <command> [args] [flags]

COMMANDS:
    dims <n> <r>                     dimension of the algebra, its boundary
                                     ideal and the quotient, plus the class count
    product <n> <r> <A> <B>          orbit product, or 0 when the supports mismatch
    degenerates <n> <r> <A> <B>      whether A degenerates to B
    idempotents <n> <r> [--lambda L] [--hasse]
                                     block idempotent orbits (per weight with
                                     --lambda; --hasse adds covering edges)
    homdim <n> <r> <L> <M> [--indec] hom dimension between cyclic projectives,
                                     or between indecomposables with --indec
    cartan <n> <r> [--include-trivial]
                                     hom-dimension table over the classes
    decompose <n> <r> <L>            indecomposable summands of the cyclic
                                     projective at weight L
    quiver <n> <r> [--dot PATH]      the arrow diagram of the basic algebra
    ext <n> <r>                      the table of unit extensions
    verify <n> <r> --relations FILE  check a relation file
    check <n> <r> [--full]           acceptance checks applicable to (n, r)
    acceptance [--full]              the whole acceptance suite

FLAGS:
    --format text|json|csv|dot       output format (default text)
    --output PATH                    write the result to a file
    --max-orbits N                   refuse enumerations beyond N orbits
                                     (default 5000000)

Matrices are written row by row: 0,0,1;0,0,2;1,2,0 — or as JSON row arrays.
Compositions are comma lists (2,0,3); decompositions use + (2+1).
ZSCHUR_THREADS bounds table-filling parallelism (default 1).
";

struct Options {
    format: String,
    output: Option<String>,
    max_orbits: u128,
    lambda: Option<String>,
    hasse: bool,
    indec: bool,
    include_trivial: bool,
    relations: Option<String>,
    dot: Option<String>,
    full: bool,
}

impl Options {
    fn parse(args: &[String]) -> Result<(Vec<String>, Options), String> {
        let mut positional = Vec::new();
        let mut opts = Options {
            format: "text".into(),
            output: None,
            max_orbits: 5_000_000,
            lambda: None,
            hasse: false,
            indec: false,
            include_trivial: false,
            relations: None,
            dot: None,
            full: false,
        };
        let mut it = args.iter();
        while let Some(arg) = it.next() {
            macro_rules! value {
                ($name:literal) => {
                    it.next()
                        .cloned()
                        .ok_or_else(|| format!("flag {} needs a value", $name))?
                };
            }
            match arg.as_str() {
                "--format" => opts.format = value!("--format"),
                "--output" => opts.output = Some(value!("--output")),
                "--max-orbits" => {
                    opts.max_orbits = value!("--max-orbits")
                        .parse()
                        .map_err(|_| "bad --max-orbits value".to_string())?
                }
                "--lambda" => opts.lambda = Some(value!("--lambda")),
                "--relations" => opts.relations = Some(value!("--relations")),
                "--dot" => opts.dot = Some(value!("--dot")),
                "--hasse" => opts.hasse = true,
                "--indec" => opts.indec = true,
                "--include-trivial" => opts.include_trivial = true,
                "--full" => opts.full = true,
                "--help" | "-h" => return Err(USAGE.to_string()),
                other if other.starts_with("--") => {
                    return Err(format!("unknown flag {other}\n\n{USAGE}"))
                }
                other => positional.push(other.to_string()),
            }
        }
        Ok((positional, opts))
    }
}

fn threads() -> usize {
    std::env::var("ZSCHUR_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&t| (1..=256).contains(&t))
        .unwrap_or(1)
}

fn parse_nr(positional: &[String]) -> Result<(usize, u32), String> {
    if positional.len() < 2 {
        return Err(format!("expected <n> <r>\n\n{USAGE}"));
    }
    let n: usize = positional[0]
        .parse()
        .map_err(|_| format!("bad n: {:?}", positional[0]))?;
    let r: u32 = positional[1]
        .parse()
        .map_err(|_| format!("bad r: {:?}", positional[1]))?;
    if n == 0 {
        return Err("n must be positive".into());
    }
    Ok((n, r))
}

fn guard(n: usize, r: u32, cap: u128) -> Result<(), String> {
    let size = orbits::count_orbits(n, r);
    if size > cap {
        return Err(format!(
            "problem size {size} orbits exceeds cap {cap}; raise --max-orbits to proceed"
        ));
    }
    Ok(())
}

fn parse_matrix(s: &str, n: usize, r: u32) -> Result<OrbitMatrix, String> {
    let m: OrbitMatrix = s.parse().map_err(|e: Error| e.to_string())?;
    if m.n() != n {
        return Err(format!("matrix has n = {}, expected {}", m.n(), n));
    }
    if m.r() != r {
        return Err(format!("matrix has entry sum {}, expected {}", m.r(), r));
    }
    Ok(m)
}

fn parse_weight(s: &str, n: usize, r: u32) -> Result<Composition, String> {
    let lam: Composition = s.parse().map_err(|e: Error| e.to_string())?;
    if lam.n() != n || lam.r() != r {
        return Err(format!(
            "weight {lam} does not lie in the ({n},{r}) weight set"
        ));
    }
    Ok(lam)
}

fn emit(opts: &Options, text: String) -> Result<(), String> {
    match &opts.output {
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
    }
}

fn json_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn run() -> Result<u8, String> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        return Err(USAGE.to_string());
    }
    let command = args[0].clone();
    let (positional, opts) = Options::parse(&args[1..])?;

    match command.as_str() {
        "dims" => {
            let (n, r) = parse_nr(&positional)?;
            let d = dimension_formulas(n, r);
            let classes = enumerate_classes(n, r).len();
            let text = match opts.format.as_str() {
                "json" => format!(
                    "{{\"command\":\"dims\",\"n\":{n},\"r\":{r},\"dim\":{},\"dim_I\":{},\"dim_quotient\":{},\"classes\":{classes}}}",
                    d.algebra, d.ideal, d.quotient
                ),
                _ => format!(
                    "dim={} dim_I={} dim_quotient={} classes={classes}",
                    d.algebra, d.ideal, d.quotient
                ),
            };
            emit(&opts, text)?;
            Ok(0)
        }
        "product" => {
            let (n, r) = parse_nr(&positional)?;
            if positional.len() != 4 {
                return Err("product needs <n> <r> <A> <B>".into());
            }
            guard(n, r, opts.max_orbits)?;
            let a = parse_matrix(&positional[2], n, r)?;
            let b = parse_matrix(&positional[3], n, r)?;
            let engine = SchurAlgebra::new(n, r);
            let text = match engine.product(&a, &b) {
                Some(c) => c.to_string(),
                None => "0".to_string(),
            };
            emit(&opts, text)?;
            Ok(0)
        }
        "degenerates" => {
            let (n, r) = parse_nr(&positional)?;
            if positional.len() != 4 {
                return Err("degenerates needs <n> <r> <A> <B>".into());
            }
            let a = parse_matrix(&positional[2], n, r)?;
            let b = parse_matrix(&positional[3], n, r)?;
            emit(&opts, degenerates_to(&a, &b).to_string())?;
            Ok(0)
        }
        "idempotents" => {
            let (n, r) = parse_nr(&positional)?;
            guard(n, r, opts.max_orbits)?;
            let lambdas = match &opts.lambda {
                Some(s) => vec![parse_weight(s, n, r)?],
                None => zschur_core::combinatorics::enumerate_compositions(n, r),
            };
            let mut out = String::new();
            for lam in &lambdas {
                if opts.hasse {
                    let h = idempotent_hasse(lam);
                    for (i, (m, label)) in h.vertices.iter().enumerate() {
                        let _ = writeln!(out, "lambda={lam} vertex={i} m={label} matrix={m}");
                    }
                    for (lo, hi) in &h.edges {
                        let _ = writeln!(out, "lambda={lam} edge {lo} -> {hi}");
                    }
                } else {
                    let mut seen: Vec<OrbitMatrix> = Vec::new();
                    for m in Decomposition::enumerate(n) {
                        let o = idempotent_orbit(lam, &m);
                        if seen.contains(&o) {
                            continue;
                        }
                        let coarsest = classify_idempotent(&o).expect("idempotent").1;
                        let _ = writeln!(out, "lambda={lam} m={coarsest} matrix={o}");
                        seen.push(o);
                    }
                }
            }
            emit(&opts, out)?;
            Ok(0)
        }
        "homdim" => {
            let (n, r) = parse_nr(&positional)?;
            if positional.len() != 4 {
                return Err("homdim needs <n> <r> <lambda> <mu>".into());
            }
            guard(n, r, opts.max_orbits)?;
            let lam = parse_weight(&positional[2], n, r)?;
            let mu = parse_weight(&positional[3], n, r)?;
            let basis = if opts.indec {
                indec_hom_basis(&lam, &mu)
            } else {
                let ones = Decomposition::singletons(n);
                modules::hom_basis(&lam, &ones, &mu, &ones)
                    .map_err(|e| e.to_string())?
                    .basis
            };
            let mut out = format!("dim={}\n", basis.len());
            for b in &basis {
                let _ = writeln!(out, "{b}");
            }
            emit(&opts, out)?;
            Ok(0)
        }
        "cartan" => {
            let (n, r) = parse_nr(&positional)?;
            guard(n, r, opts.max_orbits)?;
            let table = cartan_matrix_with_threads(n, r, threads());
            let trivial = zschur_core::combinatorics::ProjectiveClass::new(vec![r])
                .expect("single part class");
            let keep: Vec<usize> = (0..table.classes.len())
                .filter(|&i| opts.include_trivial || r == 0 || table.classes[i] != trivial)
                .collect();
            let text = match opts.format.as_str() {
                "csv" => {
                    let mut out = String::from("class");
                    for &i in &keep {
                        let _ = write!(out, ",{}", table.classes[i]);
                    }
                    out.push('\n');
                    for &s in &keep {
                        let _ = write!(out, "{}", table.classes[s]);
                        for &t in &keep {
                            let _ = write!(out, ",{}", table.entries[s][t]);
                        }
                        out.push('\n');
                    }
                    out
                }
                "json" => {
                    let mut out = String::from("{\"classes\":[");
                    for (k, &i) in keep.iter().enumerate() {
                        if k > 0 {
                            out.push(',');
                        }
                        let _ = write!(out, "\"{}\"", table.classes[i]);
                    }
                    out.push_str("],\"entries\":[");
                    for (k, &s) in keep.iter().enumerate() {
                        if k > 0 {
                            out.push(',');
                        }
                        out.push('[');
                        for (j, &t) in keep.iter().enumerate() {
                            if j > 0 {
                                out.push(',');
                            }
                            let _ = write!(out, "{}", table.entries[s][t]);
                        }
                        out.push(']');
                    }
                    out.push_str("]}");
                    out
                }
                _ => {
                    let mut out = String::new();
                    let mut total = 0u64;
                    for &s in &keep {
                        for &t in &keep {
                            total += table.entries[s][t];
                        }
                    }
                    let _ = writeln!(out, "classes={} total={}", keep.len(), total);
                    for &s in &keep {
                        let row: Vec<String> = keep
                            .iter()
                            .map(|&t| table.entries[s][t].to_string())
                            .collect();
                        let _ = writeln!(
                            out,
                            "{:<12} {}",
                            table.classes[s].to_string(),
                            row.join(" ")
                        );
                    }
                    out
                }
            };
            emit(&opts, text)?;
            Ok(0)
        }
        "decompose" => {
            let (n, r) = parse_nr(&positional)?;
            if positional.len() != 3 {
                return Err("decompose needs <n> <r> <lambda>".into());
            }
            guard(n, r, opts.max_orbits)?;
            let lam = parse_weight(&positional[2], n, r)?;
            let classes = decompose_projective(&lam).map_err(|e| e.to_string())?;
            let rendered: Vec<String> = classes.iter().map(|c| format!("P[{c}]")).collect();
            emit(&opts, rendered.join(" + "))?;
            Ok(0)
        }
        "quiver" => {
            let (n, r) = parse_nr(&positional)?;
            let q = gabriel_quiver(n, r);
            let dot = q.to_dot();
            if let Some(path) = &opts.dot {
                std::fs::write(path, &dot).map_err(|e| e.to_string())?;
                emit(&opts, format!("wrote {path}"))?;
                return Ok(0);
            }
            let text = match opts.format.as_str() {
                "json" => q.to_json(),
                _ => dot,
            };
            emit(&opts, text)?;
            Ok(0)
        }
        "ext" => {
            let (n, r) = parse_nr(&positional)?;
            let (classes, table) = ext_table(n, r);
            let text = match opts.format.as_str() {
                "csv" => {
                    let mut out = String::from("class");
                    for c in &classes {
                        let _ = write!(out, ",{c}");
                    }
                    out.push('\n');
                    for (i, c) in classes.iter().enumerate() {
                        let _ = write!(out, "{c}");
                        for v in &table[i] {
                            let _ = write!(out, ",{v}");
                        }
                        out.push('\n');
                    }
                    out
                }
                "json" => {
                    let mut out = String::from("{\"classes\":[");
                    for (i, c) in classes.iter().enumerate() {
                        if i > 0 {
                            out.push(',');
                        }
                        let _ = write!(out, "\"{c}\"");
                    }
                    out.push_str("],\"ext\":[");
                    for (i, row) in table.iter().enumerate() {
                        if i > 0 {
                            out.push(',');
                        }
                        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                        let _ = write!(out, "[{}]", cells.join(","));
                    }
                    out.push_str("]}");
                    out
                }
                _ => {
                    let mut out = String::new();
                    for (i, c) in classes.iter().enumerate() {
                        let row: Vec<String> = table[i].iter().map(|v| v.to_string()).collect();
                        let _ = writeln!(out, "{:<12} {}", c.to_string(), row.join(" "));
                    }
                    out
                }
            };
            emit(&opts, text)?;
            Ok(0)
        }
        "verify" => {
            let (n, r) = parse_nr(&positional)?;
            let path = opts
                .relations
                .as_ref()
                .ok_or("verify needs --relations FILE")?;
            guard(n, r, opts.max_orbits)?;
            let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
            let file = parse_relation_file(&text).map_err(|e| e.to_string())?;
            if file.n != n || file.r != r {
                return Err(format!(
                    "relation file declares ({}, {}), command says ({n}, {r})",
                    file.n, file.r
                ));
            }
            let engine = SchurAlgebra::new(n, r);
            let report = verify_file(&engine, &file).map_err(|e| e.to_string())?;
            let mut out = String::new();
            let mut failures = 0usize;
            for eq in &report.equations {
                for v in &eq.verdicts {
                    let tag = match v {
                        Verdict::Exact => "exact".to_string(),
                        Verdict::Proportional(t) => {
                            format!("proportional({})", zschur_core::algebra::format_rational(t))
                        }
                        Verdict::Failed { .. } => {
                            failures += 1;
                            "FAILED".to_string()
                        }
                    };
                    let _ = writeln!(out, "{:>20}  line {:<4} {}", tag, eq.line, eq.text);
                }
            }
            let _ = writeln!(
                out,
                "relations={} failures={failures} rescaling={}",
                report.equations.len(),
                if report.exact_after_rescaling {
                    "exact"
                } else if report.all_hold {
                    "none found"
                } else {
                    "n/a"
                }
            );
            emit(&opts, out)?;
            Ok(if failures == 0 { 0 } else { 2 })
        }
        "check" => {
            let (n, r) = parse_nr(&positional)?;
            let tier = if opts.full { Tier::Full } else { Tier::Quick };
            let results = acceptance::run_for(n, r, tier);
            let failed: Vec<&str> = results.iter().filter(|c| !c.passed).map(|c| c.id).collect();
            let text = match opts.format.as_str() {
                "json" => {
                    let mut out = format!(
                        "{{\"command\":\"check\",\"params\":{{\"n\":{n},\"r\":{r},\"tier\":\"{}\"}},\"results\":[",
                        if opts.full { "full" } else { "quick" }
                    );
                    for (i, c) in results.iter().enumerate() {
                        if i > 0 {
                            out.push(',');
                        }
                        let _ = write!(
                            out,
                            "{{\"id\":\"{}\",\"passed\":{},\"detail\":\"{}\",\"millis\":{}}}",
                            c.id,
                            c.passed,
                            json_escape(&c.detail),
                            c.millis
                        );
                    }
                    out.push_str("],\"failures\":[");
                    for (i, id) in failed.iter().enumerate() {
                        if i > 0 {
                            out.push(',');
                        }
                        let _ = write!(out, "\"{id}\"");
                    }
                    out.push_str("]}");
                    out
                }
                _ => {
                    let mut out = String::new();
                    for c in &results {
                        let _ = writeln!(out, "{}", c.line());
                    }
                    let _ = writeln!(out, "{} checks, {} failed", results.len(), failed.len());
                    out
                }
            };
            emit(&opts, text)?;
            Ok(if failed.is_empty() { 0 } else { 2 })
        }
        "acceptance" => {
            let tier = if opts.full { Tier::Full } else { Tier::Quick };
            let results = acceptance::run_all(tier);
            let mut out = String::new();
            let mut failed = 0usize;
            for c in &results {
                let _ = writeln!(out, "{}", c.line());
                if !c.passed {
                    failed += 1;
                }
            }
            let _ = writeln!(out, "{} criteria, {} failed", results.len(), failed);
            emit(&opts, out)?;
            Ok(if failed == 0 { 0 } else { 2 })
        }
        "help" => {
            println!("{USAGE}");
            Ok(0)
        }
        other => Err(format!("unknown command {other:?}\n\n{USAGE}")),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("{message}");
            ExitCode::from(1)
        }
    }
}
