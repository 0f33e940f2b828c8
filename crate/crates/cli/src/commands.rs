use std::io::{Read, Write};
use std::sync::Mutex;

use serde_json::json;

use richwords::{
    bound_report, count_by_length, count_by_length_par, elm, enumerate_rich, factors,
    find_common_superword, find_common_superword_par, flx_pal, gamma_check, pal_closure,
    pal_complexity_profile, pal_factors, parse, rdc_wrd, read_words, rich_extensions, rpr, ruo,
    std_extj, visit_rich_par, Alphabet, Budget, EnumConfig, PalIndex, SearchStatus, Word,
};

use crate::args::{Cli, Command, Format};
use crate::output::{Failure, Out, Outcome};

/// Parses the word arguments under the declared alphabet, or under the
/// smallest alphabet holding all of them.
fn words<const N: usize>(q: Option<usize>, texts: [&str; N]) -> Result<[Word; N], Failure> {
    let alphabet = match q {
        Some(q) => Alphabet::new(q)?,
        None => Alphabet::infer(texts)?,
    };
    let parsed = texts
        .iter()
        .map(|t| Word::parse(t, alphabet))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(parsed.try_into().expect("one word per text"))
}

fn declared(q: Option<usize>, command: &str) -> Result<Alphabet, Failure> {
    let q = q.ok_or_else(|| Failure::Usage(format!("{command} needs an explicit --q")))?;
    Ok(Alphabet::new(q)?)
}

/// Words print as their display strings, with `ε` for the empty word.
fn show(w: &Word) -> String {
    format!("{w:?}")
}

pub fn run<W: Write + Send>(cli: Cli, out: &mut Out<W>) -> Outcome {
    let q = cli.q;
    let trace = cli.trace;
    match cli.command {
        Command::Check {
            words: texts,
            input,
        } => check(q, texts, input, out),
        Command::Factors { word, palindromic } => {
            let [w] = words(q, [&word])?;
            let mut all: Vec<Word> = if palindromic {
                pal_factors(&w).into_iter().collect()
            } else {
                factors(&w).into_iter().collect()
            };
            all.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
            match out.format {
                Format::Plain => all.iter().try_for_each(|f| out.line(show(f))),
                Format::Json => out.record(&json!({ "word": w, "factors": all })),
                Format::Csv => {
                    out.row(["factor", "length", "palindrome"])?;
                    all.iter().try_for_each(|f| {
                        out.row([show(f), f.len().to_string(), f.is_palindrome().to_string()])
                    })
                }
            }
        }
        Command::Flexed { word } => {
            let [w] = words(q, [&word])?;
            let flexed = flx_pal(&w)?;
            match out.format {
                Format::Plain => flexed.iter().try_for_each(|r| {
                    out.line(format!(
                        "{} {} {}",
                        show(&r.palindrome),
                        r.prefix_len,
                        show(&r.replacement)
                    ))
                }),
                Format::Json => out.record(&json!({ "word": w, "flexed": flexed })),
                Format::Csv => {
                    out.row(["palindrome", "prefix_len", "replacement"])?;
                    flexed.iter().try_for_each(|r| {
                        out.row([
                            show(&r.palindrome),
                            r.prefix_len.to_string(),
                            show(&r.replacement),
                        ])
                    })
                }
            }
        }
        Command::Closure { word } => {
            out.no_csv("closure")?;
            let [w] = words(q, [&word])?;
            let c = pal_closure(&w);
            match out.format {
                Format::Json => out.record(&json!({ "word": w, "closure": c })),
                _ => out.line(show(&c)),
            }
        }
        Command::Extend { word, steps, rich } => {
            out.no_csv("extend")?;
            let [w] = words(q, [&word])?;
            if rich {
                let letters: Vec<String> = rich_extensions(&w)?
                    .into_iter()
                    .map(|a| w.alphabet().display(a).to_string())
                    .collect();
                return match out.format {
                    Format::Json => out.record(&json!({ "word": w, "rich_letters": letters })),
                    _ => out.line(letters.join(" ")),
                };
            }
            let ext = std_extj(&w, steps)?;
            match out.format {
                Format::Json => out.record(&json!({ "word": w, "steps": steps, "extension": ext })),
                _ => out.line(show(&ext)),
            }
        }
        Command::Gamma { w, r } => {
            out.no_csv("gamma")?;
            let [w, r] = words(q, [&w, &r])?;
            match gamma_check(&w, &r) {
                Ok(pair) => {
                    let p = pair.parse();
                    match out.format {
                        Format::Json => {
                            out.record(&json!({ "accepted": true, "w": w, "r": r, "parse": p }))
                        }
                        _ => {
                            out.line("accepted")?;
                            out.line(format!(
                                "v={}\nz={}\nt={}",
                                show(&p.v),
                                show(&p.z),
                                show(&p.t)
                            ))
                        }
                    }
                }
                Err(rejection) => {
                    if out.format == Format::Json {
                        out.record(&json!({
                            "accepted": false,
                            "w": w,
                            "r": r,
                            "condition": rejection.condition(),
                            "reason": rejection.to_string(),
                        }))?;
                    }
                    Err(Failure::Domain(format!("rejected: {rejection}")))
                }
            }
        }
        Command::Parse { w, r } => {
            out.no_csv("parse")?;
            let [w, r] = words(q, [&w, &r])?;
            let p = parse(&w, &r)?;
            match out.format {
                Format::Json => out.record(&p),
                _ => out.line(format!(
                    "v={}\nz={}\nt={}",
                    show(&p.v),
                    show(&p.z),
                    show(&p.t)
                )),
            }
        }
        Command::Reduce { w, r, prefix_only } => {
            out.no_csv("reduce")?;
            let [w, r] = words(q, [&w, &r])?;
            let (answer, record) = if prefix_only {
                let t = rpr(&w, &r)?;
                (t.rpr.clone(), t)
            } else {
                rdc_wrd(&w, &r)?
            };
            match out.format {
                Format::Json if trace => out.record(&json!({ "result": answer, "trace": record })),
                Format::Json => out.record(&json!({ "w": w, "r": r, "result": answer })),
                _ => {
                    out.line(show(&answer))?;
                    if trace {
                        out.record(&record)?;
                    }
                    Ok(())
                }
            }
        }
        Command::Eliminate { w, w1, w2 } => {
            out.no_csv("eliminate")?;
            let [w, w1, w2] = words(q, [&w, &w1, &w2])?;
            let (result, record) = elm(&w, &w1, &w2)?;
            for v in record.violations() {
                eprintln!("warning: {v}");
            }
            match out.format {
                Format::Json if trace => out.record(&json!({ "result": result, "trace": record })),
                Format::Json => out.record(&json!({
                    "w": w,
                    "w1": w1,
                    "w2": w2,
                    "result": result,
                    "iterations": record.iterations(),
                })),
                _ => {
                    out.line(show(&result))?;
                    if trace {
                        out.record(&record)?;
                    }
                    Ok(())
                }
            }
        }
        Command::Ruo { w, w1, w2 } => {
            out.no_csv("ruo")?;
            let [w, w1, w2] = words(q, [&w, &w1, &w2])?;
            let t = ruo(&w, &w1, &w2)?;
            match out.format {
                Format::Json => out.record(&json!({ "w": w, "w1": w1, "w2": w2, "ruo": t })),
                _ => out.line(show(&t)),
            }
        }
        Command::Bound { m, digits } => {
            let alphabet = declared(q, "bound")?;
            if m == 0 {
                return Err(Failure::Usage("--m must be positive".into()));
            }
            let report = bound_report(m, alphabet.size() as u64, digits);
            match out.format {
                Format::Plain => {
                    out.line(format!("k={}", report.k))?;
                    out.line(format!("k_log10={:.6}", report.k_log10))?;
                    out.line(format!(
                        "prefix_bound={}",
                        report.prefix_bound.as_ref().map_or_else(
                            || format!("≈10^{:.3}", report.prefix_bound_log10),
                            |b| b.to_string()
                        )
                    ))?;
                    out.line(format!("total={}", report.total_or_estimate()))
                }
                Format::Json => out.record(&report),
                Format::Csv => {
                    out.row(["m", "q", "k", "prefix_bound", "total", "total_log10"])?;
                    out.row([
                        report.m.to_string(),
                        report.q.to_string(),
                        report.k.to_string(),
                        report
                            .prefix_bound
                            .as_ref()
                            .map(ToString::to_string)
                            .unwrap_or_default(),
                        report
                            .total
                            .as_ref()
                            .map(ToString::to_string)
                            .unwrap_or_default(),
                        format!("{:.6}", report.total_log10),
                    ])
                }
            }
        }
        Command::Enumerate {
            max_len,
            count,
            canonical,
            parallel,
        } => {
            let config = EnumConfig::new(declared(q, "enumerate")?, max_len).canonical(canonical);
            if count {
                let counts = if parallel.parallel {
                    count_by_length_par(config)
                } else {
                    count_by_length(config)
                };
                if out.format == Format::Csv {
                    out.row(["length", "count"])?;
                }
                for (n, c) in counts.iter().enumerate() {
                    match out.format {
                        Format::Json => out.record(&json!({ "length": n, "count": c }))?,
                        _ => out.row([n as u64, *c])?,
                    }
                }
                return Ok(());
            }
            if out.format == Format::Csv {
                out.row(["word"])?;
            }
            let emit = |out: &mut Out<W>, w: &Word| match out.format {
                Format::Json => out.record(&json!({ "word": w })),
                _ => out.line(show(w)),
            };
            if parallel.parallel {
                let shared = Mutex::new((out, Ok(())));
                visit_rich_par(config, |index: &PalIndex| {
                    let mut guard = shared.lock().unwrap();
                    let (out, status) = &mut *guard;
                    if status.is_ok() {
                        *status = emit(out, &index.word());
                    }
                });
                let (_, status) = shared.into_inner().unwrap();
                status
            } else {
                enumerate_rich(config).try_for_each(|w| emit(out, &w))
            }
        }
        Command::Search {
            w1,
            w2,
            max_len,
            max_nodes,
            parallel,
        } => {
            out.no_csv("search")?;
            let [w1, w2] = words(q, [&w1, &w2])?;
            let budget = Budget { max_len, max_nodes };
            let verdict = if parallel.parallel {
                find_common_superword_par(&w1, &w2, budget)?
            } else {
                find_common_superword(&w1, &w2, budget)?
            };
            match out.format {
                Format::Json => out.record(&verdict),
                _ => {
                    let status = match verdict.status {
                        SearchStatus::Witness => "witness",
                        SearchStatus::ExhaustedBudget => "exhausted-budget",
                    };
                    out.line(format!("status={status}"))?;
                    if let Some(w) = &verdict.witness {
                        out.line(format!("witness={}", show(w)))?;
                    }
                    out.line(format!("explored={}", verdict.explored))
                }
            }
        }
        Command::Profile { word } => {
            let [w] = words(q, [&word])?;
            let profile = pal_complexity_profile(&w);
            if out.format == Format::Csv {
                out.row(["length", "count"])?;
            }
            for (n, c) in profile {
                match out.format {
                    Format::Json => out.record(&json!({ "length": n, "count": c }))?,
                    _ => out.row([n, c])?,
                }
            }
            Ok(())
        }
    }
}

fn check<W: Write>(
    q: Option<usize>,
    texts: Vec<String>,
    input: Option<String>,
    out: &mut Out<W>,
) -> Outcome {
    let ws: Vec<Word> = match input {
        Some(path) => {
            if !texts.is_empty() {
                return Err(Failure::Usage(
                    "give words either as arguments or with --input".into(),
                ));
            }
            let mut text = String::new();
            if path == "-" {
                std::io::stdin().read_to_string(&mut text)?;
            } else {
                text = std::fs::read_to_string(&path)?;
            }
            let (alphabet, ws) = read_words(&text)?;
            match q {
                Some(q) if q != alphabet.size() => {
                    let declared = Alphabet::new(q)?;
                    ws.iter()
                        .map(|w| Word::parse(&show(w), declared))
                        .collect::<Result<_, _>>()?
                }
                _ => ws,
            }
        }
        None => {
            if texts.is_empty() {
                return Err(Failure::Usage("no words given".into()));
            }
            let alphabet = match q {
                Some(q) => Alphabet::new(q)?,
                None => Alphabet::infer(texts.iter().map(String::as_str))?,
            };
            texts
                .iter()
                .map(|t| Word::parse(t, alphabet))
                .collect::<Result<_, _>>()?
        }
    };
    if out.format == Format::Csv {
        out.row(["word", "rich", "palindromes"])?;
    }
    let single = ws.len() == 1;
    for w in &ws {
        let index = PalIndex::build(w);
        let verdict = if index.is_rich() { "rich" } else { "not rich" };
        let palindromes = pal_factors(w).len() - 1;
        match out.format {
            Format::Plain if single => out.line(verdict)?,
            Format::Plain => out.line(format!("{} {verdict}", show(w)))?,
            Format::Json => out.record(
                &json!({ "word": w, "rich": index.is_rich(), "palindromes": palindromes }),
            )?,
            Format::Csv => out.row([
                show(w),
                index.is_rich().to_string(),
                palindromes.to_string(),
            ])?,
        }
    }
    Ok(())
}
