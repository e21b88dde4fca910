use deodhar_core::heap::{coalesce, lattice_embed, render_ascii};
use deodhar_core::hecke::is_tight;
use deodhar_core::mask::{decorate, is_deodhar_bruteforce, kl_polynomial, kl_polynomials, Mask};
use deodhar_core::pattern::{Classifier, PatternLibrary};
use deodhar_core::search::{
    count_convex_type_d, count_deodhar, find_minimal_non_deodhar, golden_count, Method, Stratum, CONVEX_TYPE_D,
};
use deodhar_core::{CoxeterGroup, Element, Error, Family};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::input::{self, resolve};
use crate::{ElementArgs, Failure, Format};

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Core(Error::Usage(msg.into()))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn no_csv(fmt: Format) -> Outcome {
    if fmt == Format::Csv {
        return Err(usage("csv output is only available for classify and enumerate"));
    }
    Ok(())
}

fn element_json(g: &CoxeterGroup, w: &Element) -> serde_json::Value {
    json!({
        "type": g.kind().family,
        "rank": g.rank(),
        "word": g.format_word(&g.canonical_word(w)),
        "one_line": w.one_line().map(deodhar_core::coxeter::notation::format_one_line),
        "length": w.length(),
    })
}

fn parse_methods(text: &str) -> Result<Vec<Method>, Failure> {
    if text.eq_ignore_ascii_case("all") {
        return Ok(vec![Method::Patterns, Method::Masks, Method::Hecke]);
    }
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let m: Method = part.parse()?;
        if !out.contains(&m) {
            out.push(m);
        }
    }
    if out.is_empty() {
        return Err(usage("no method given"));
    }
    Ok(out)
}

struct Verdict {
    method: Method,
    deodhar: bool,
    witness: Option<String>,
}

pub fn classify(args: &ElementArgs, methods: &str, fmt: Format) -> Outcome {
    let r = resolve(args)?;
    let (g, w) = (&r.group, &r.element);
    let mut verdicts = Vec::new();
    for method in parse_methods(methods)? {
        let v = match method {
            Method::Patterns => {
                let c = Classifier::new(g).classify(w);
                Verdict { method, deodhar: c.deodhar, witness: c.pattern }
            }
            Method::Masks => {
                let (deodhar, mask) = is_deodhar_bruteforce(g, w)?;
                Verdict { method, deodhar, witness: mask.map(|m| m.to_string()) }
            }
            Method::Hecke => Verdict { method, deodhar: is_tight(g, w)?, witness: None },
        };
        verdicts.push(v);
    }
    let agree = verdicts.windows(2).all(|p| p[0].deodhar == p[1].deodhar);
    match fmt {
        Format::Text => {
            println!("{} {} length {}", g.kind(), g.format_element(w), w.length());
            if w.one_line().is_some() {
                println!("word {}", g.format_word(&g.canonical_word(w)));
            }
            for v in &verdicts {
                let witness = v.witness.as_ref().map(|x| format!(" witness={x}")).unwrap_or_default();
                println!("{}: deodhar={}{witness}", v.method, v.deodhar);
            }
        }
        Format::Json => {
            let rows: Vec<_> = verdicts
                .iter()
                .map(|v| json!({ "method": v.method, "deodhar": v.deodhar, "witness": v.witness }))
                .collect();
            print_json(&json!({ "element": element_json(g, w), "verdicts": rows, "agree": agree }));
        }
        Format::Csv => {
            println!("type,rank,element,method,deodhar,witness");
            for v in &verdicts {
                let witness = v.witness.clone().unwrap_or_default();
                println!("{},{},\"{}\",{},{},{witness}", g.kind().family, g.rank(), g.format_element(w), v.method, v.deodhar);
            }
        }
    }
    if !agree {
        return Err(Failure::Check("methods disagree".into()));
    }
    Ok(())
}

pub fn kl(args: &ElementArgs, x_one_line: Option<String>, x_word: Option<String>, all: bool, fmt: Format) -> Outcome {
    no_csv(fmt)?;
    let r = resolve(args)?;
    let (g, w) = (&r.group, &r.element);
    if all {
        let mut rows: Vec<(String, Element, String)> = kl_polynomials(g, w)?
            .into_iter()
            .map(|(x, p)| (g.format_element(&x), x, p.to_string()))
            .collect();
        rows.sort_by(|a, b| a.1.length().cmp(&b.1.length()).then_with(|| a.0.cmp(&b.0)));
        match fmt {
            Format::Json => {
                let out: Vec<_> = rows.iter().map(|(xs, _, p)| json!({ "x": xs, "poly": p })).collect();
                print_json(&json!({ "w": element_json(g, w), "polynomials": out }));
            }
            _ => {
                for (xs, _, p) in rows {
                    println!("{xs}\t{p}");
                }
            }
        }
        return Ok(());
    }
    let x = input::other(g, x_one_line.as_deref(), x_word.as_deref())?;
    let p = kl_polynomial(g, w, &x)?;
    match fmt {
        Format::Json => print_json(&json!({
            "w": element_json(g, w),
            "x": element_json(g, &x),
            "coeffs": p.coeffs(),
            "poly": p.to_string(),
        })),
        _ => println!("{p}"),
    }
    Ok(())
}

pub fn enumerate(family: &str, rank: usize, method: &str, check: bool, fmt: Format) -> Outcome {
    let g = input::group(family, rank)?;
    let method: Method = method.parse()?;
    let report = count_deodhar(&g, method);
    match fmt {
        Format::Csv => print!("{}", report.to_csv()),
        Format::Json => print_json(&report.to_json()),
        Format::Text => {
            println!(
                "{} {}: {} Deodhar of {} short-braid avoiding; group order {}",
                g.kind(),
                report.method,
                report.deodhar,
                report.sba,
                report.group_order
            );
            if let Some(c) = report.convex {
                println!("convex: {c}");
            }
            if report.undecided > 0 {
                println!("undecided: {} (over the method's caps)", report.undecided);
            }
            println!("length\tsba\tdeodhar");
            for row in &report.by_length {
                println!("{}\t{}\t{}", row.length, row.sba, row.deodhar);
            }
        }
    }
    if !check {
        return Ok(());
    }
    let mut problems = Vec::new();
    if !report.is_complete() {
        problems.push(format!("{} elements undecided", report.undecided));
    }
    match golden_count(g.kind()) {
        Some((d, s)) if (report.deodhar, report.sba) != (d, s) => {
            problems.push(format!("{}/{} expected {d}/{s}", report.deodhar, report.sba));
        }
        Some(_) => {}
        None => eprintln!("no published count for {}", g.kind()),
    }
    if g.kind().family == Family::D && rank <= CONVEX_TYPE_D.len() {
        let want = CONVEX_TYPE_D[rank - 1];
        if report.convex != Some(want) {
            problems.push(format!("convex {:?} expected {want}", report.convex));
        }
    }
    if problems.is_empty() {
        eprintln!("PASS {}/{}", report.deodhar, report.sba);
        Ok(())
    } else {
        eprintln!("FAIL {}", problems.join("; "));
        Err(Failure::Check(problems.join("; ")))
    }
}

pub fn minimal_patterns(family: &str, rank: usize, stratum: &str, max_length: Option<usize>, fmt: Format) -> Outcome {
    no_csv(fmt)?;
    let g = input::group(family, rank)?;
    let stratum: Stratum = stratum.parse()?;
    let report = find_minimal_non_deodhar(&g, stratum, max_length)?;
    match fmt {
        Format::Json => print_json(&serde_json::to_value(&report).expect("json")),
        _ => {
            let braid = if report.short_braid { " plus the short braid" } else { "" };
            let partial = if report.complete { "" } else { " (incomplete)" };
            let label = format!("{stratum:?}").to_lowercase();
            println!("{} {label}: {} minimal patterns{braid}{partial}", g.kind(), report.patterns.len());
            for p in &report.patterns {
                let name = p.library_name.as_deref().unwrap_or("-");
                let one_line = p.one_line.as_deref().unwrap_or("");
                println!("{name}\t{}\t{}\t{one_line}", p.length, p.word);
            }
        }
    }
    Ok(())
}

pub fn render_heap(args: &ElementArgs, mask: Option<&str>, gravity: bool, fmt: Format) -> Outcome {
    no_csv(fmt)?;
    let r = resolve(args)?;
    let g = &r.group;
    if !g.kind().family.is_classical() {
        return Err(Failure::Core(Error::Unsupported(format!("heaps in type {}", g.kind()))));
    }
    let heap = lattice_embed(g, &r.word)?;
    let heap = if gravity { heap } else { coalesce(&heap) };
    let decorations = match mask {
        Some(text) => {
            let m: Mask = text.parse()?;
            if m.len() != r.word.len() {
                return Err(usage(format!("mask has {} bits for a word of length {}", m.len(), r.word.len())));
            }
            Some(decorate(g, &r.word, &m)?)
        }
        None => None,
    };
    match fmt {
        Format::Json => print_json(&heap.to_json(decorations.as_deref())),
        _ => print!("{}", render_ascii(&heap, decorations.as_deref())),
    }
    Ok(())
}

pub fn dump_patterns(fmt: Format) -> Outcome {
    no_csv(fmt)?;
    match fmt {
        Format::Json => print!("{}", PatternLibrary::raw_json()),
        _ => {
            for p in &PatternLibrary::standard().patterns {
                let role = serde_json::to_value(p.role).expect("json");
                println!("{}\t{}{}\t{}\t{}", p.name, p.family, p.rank, role.as_str().unwrap_or(""), p.word);
            }
        }
    }
    Ok(())
}

fn random_element(g: &CoxeterGroup, rng: &mut ChaCha8Rng, max_len: usize) -> Element {
    let mut w = g.identity();
    for _ in 0..max_len {
        let s = rng.gen_range(0..g.rank());
        if !g.is_right_descent(&w, s) {
            w = g.mul_gen(&w, s);
        }
    }
    w
}

pub fn self_check(seed: u64, fmt: Format) -> Outcome {
    no_csv(fmt)?;
    let mut results: Vec<(&str, Result<String, String>)> = Vec::new();

    let small = [(Family::A, 4), (Family::B, 4), (Family::D, 5), (Family::E, 6), (Family::F, 4), (Family::G, 2)];
    results.push((
        "golden counts",
        small
            .iter()
            .map(|&(f, r)| {
                let g = CoxeterGroup::new(f, r).expect("group");
                let rep = count_deodhar(&g, Method::Patterns);
                match golden_count(g.kind()) {
                    Some(want) if want == (rep.deodhar, rep.sba) => Ok(format!("{}", g.kind())),
                    want => Err(format!("{}: {}/{} vs {want:?}", g.kind(), rep.deodhar, rep.sba)),
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(|v| v.join(" ")),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sample_check = || -> Result<String, String> {
        let mut n = 0;
        for (f, r) in [(Family::A, 5), (Family::B, 4), (Family::D, 5), (Family::E, 6)] {
            let g = CoxeterGroup::new(f, r).expect("group");
            let classifier = Classifier::new(&g);
            for _ in 0..40 {
                let w = random_element(&g, &mut rng, 16);
                let by_patterns = classifier.classify(&w).deodhar;
                let by_masks = is_deodhar_bruteforce(&g, &w).map_err(|e| e.to_string())?.0;
                let by_hecke = is_tight(&g, &w).map_err(|e| e.to_string())?;
                if by_patterns != by_masks || by_masks != by_hecke {
                    return Err(format!("{} {}", g.kind(), g.format_element(&w)));
                }
                n += 1;
            }
        }
        Ok(format!("{n} random elements, seed {seed}"))
    };
    results.push(("three methods agree", sample_check()));

    let witnesses = || -> Result<String, String> {
        let lib = PatternLibrary::standard();
        for p in &lib.patterns {
            let g = p.group();
            if is_deodhar_bruteforce(&g, &p.element(&g)).map_err(|e| e.to_string())?.0 {
                return Err(format!("{} is Deodhar", p.name));
            }
        }
        Ok(format!("{} library patterns non-Deodhar", lib.patterns.len()))
    };
    results.push(("pattern library", witnesses()));

    let convex = || -> Result<String, String> {
        for n in 1..=5 {
            let (a, b) = count_convex_type_d(n).map_err(|e| e.to_string())?;
            if a != CONVEX_TYPE_D[n - 1] || b != a {
                return Err(format!("D{n}: {a}, {b}"));
            }
        }
        Ok("D1..D5".into())
    };
    results.push(("convex counts", convex()));

    let failed = results.iter().filter(|r| r.1.is_err()).count();
    match fmt {
        Format::Json => {
            let rows: Vec<_> = results
                .iter()
                .map(|(name, r)| match r {
                    Ok(d) => json!({ "check": name, "pass": true, "detail": d }),
                    Err(d) => json!({ "check": name, "pass": false, "detail": d }),
                })
                .collect();
            print_json(&json!(rows));
        }
        _ => {
            for (name, r) in &results {
                match r {
                    Ok(d) => println!("PASS {name}: {d}"),
                    Err(d) => println!("FAIL {name}: {d}"),
                }
            }
        }
    }
    if failed > 0 {
        return Err(Failure::Check(format!("{failed} self-checks failed")));
    }
    Ok(())
}
