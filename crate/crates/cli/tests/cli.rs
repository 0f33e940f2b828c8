use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_richwords"))
        .args(args)
        .env("RUST_BACKTRACE", "0")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn lines(args: &[&str]) -> Vec<String> {
    stdout(args).lines().map(str::to_owned).collect()
}

#[test]
fn check_verdicts() {
    assert_eq!(lines(&["check", "110101100110011"]), ["rich"]);
    assert_eq!(lines(&["check", "0120"]), ["not rich"]);
    assert_eq!(
        lines(&["check", "0110", "00101100"]),
        ["0110 rich", "00101100 not rich"]
    );
}

#[test]
fn check_json_counts_palindromes() {
    let out = stdout(&["--format", "json", "check", "0110"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["rich"], true);
    assert_eq!(v["palindromes"], 4);
}

#[test]
fn reduce_golden() {
    assert_eq!(
        lines(&["reduce", "12145656547745656545656547874", "656"]),
        ["12145656547874"]
    );
}

#[test]
fn reduce_prefix_only_accepts_non_maximal_pair() {
    let out = lines(&[
        "reduce",
        "--prefix-only",
        "12399932239993244239993225522399",
        "999",
    ]);
    assert_eq!(out, ["123999322"]);
}

#[test]
fn reduce_trace_is_json() {
    let out = lines(&["--trace", "reduce", "12145656547745656545656547874", "656"]);
    assert_eq!(out[0], "12145656547874");
    let trace: serde_json::Value = serde_json::from_str(&out[1]).unwrap();
    assert!(trace.is_object());
}

#[test]
fn bound_golden() {
    let out = lines(&["bound", "--m", "1", "--q", "2"]);
    assert!(out.contains(&"k=3".to_owned()));
    assert!(out.contains(&"total=32".to_owned()));
}

#[test]
fn bound_past_digit_cap_estimates() {
    let out = lines(&["bound", "--m", "40", "--q", "4", "--digits", "10"]);
    let total = out.iter().find(|l| l.starts_with("total=")).unwrap();
    assert!(total.starts_with("total=≈10^"), "{total}");
}

#[test]
fn flexed_golden() {
    let out = lines(&["flexed", "123999"]);
    assert!(out.contains(&"99 5 393".to_owned()), "{out:?}");
}

#[test]
fn gamma_accepts_and_parses() {
    let out = lines(&["gamma", "12399932239993244239993225522399", "999"]);
    assert_eq!(
        out,
        ["accepted", "v=1239993223999324423999", "z=322", "t=5522399"]
    );
}

#[test]
fn gamma_rejection_names_condition() {
    let out = run(&["gamma", "123999322399932442399932255223993", "999"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("condition 5"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bound", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["check", "-q", "2", "012"]).status.code(), Some(2));
    assert_eq!(
        run(&["closure", "--format", "csv", "01"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let out = lines(&["enumerate", "--q", "2", "--max-len", "6", "--count"]);
    assert_eq!(out, ["0,1", "1,2", "2,4", "3,8", "4,16", "5,32", "6,64"]);
    let par = lines(&[
        "enumerate",
        "--q",
        "3",
        "--max-len",
        "6",
        "--count",
        "--parallel",
    ]);
    let seq = lines(&["enumerate", "--q", "3", "--max-len", "6", "--count"]);
    assert_eq!(par, seq);
}

#[test]
fn enumerate_words_round_trip_through_check() {
    let words = lines(&["enumerate", "--q", "3", "--max-len", "5"]);
    let mut par = lines(&["enumerate", "--q", "3", "--max-len", "5", "--parallel"]);
    let mut seq = words.clone();
    par.sort();
    seq.sort();
    assert_eq!(par, seq);
    let args: Vec<&str> = ["check", "-q", "3"]
        .into_iter()
        .chain(words.iter().filter(|w| *w != "ε").map(String::as_str))
        .collect();
    assert!(lines(&args).iter().all(|l| l.ends_with(" rich")));
}

#[test]
fn search_finds_witness() {
    let out = lines(&["search", "0110", "1001"]);
    assert_eq!(out[0], "status=witness");
    let witness = out[1].strip_prefix("witness=").unwrap();
    assert!(witness.contains("0110") && witness.contains("1001"));
    assert_eq!(lines(&["check", witness]), ["rich"]);
    assert_eq!(
        lines(&["search", "--parallel", "0110", "1001"])[..2],
        out[..2]
    );
}

#[test]
fn search_budget_is_reported_not_failed() {
    let out = lines(&["search", "0110", "1001", "--max-len", "4"]);
    assert_eq!(out[0], "status=exhausted-budget");
}

#[test]
fn closure_extend_profile() {
    assert_eq!(lines(&["closure", "011"]), ["0110"]);
    assert_eq!(lines(&["extend", "0110", "--rich"]), ["0 1"]);
    assert_eq!(
        lines(&["--format", "csv", "profile", "0110"]),
        ["length,count", "1,2", "2,1", "4,1"]
    );
}

#[test]
fn eliminate_and_ruo() {
    let w = "12145656547745656545656547874";
    assert_eq!(lines(&["ruo", w, "12", "74"]), ["2145656547"]);
    let out = run(&["eliminate", w, "12", "74"]);
    assert!(out.status.success());
    assert!(out.stderr.is_empty());
}

#[test]
fn worked_examples() {
    let cases: &[(&[&str], &[&str])] = &[
        (&["closure", "12399"], &["12399321"]),
        (&["closure", "01"], &["010"]),
        (&["extend", "110101100110"], &["1101011001101"]),
        (&["extend", "12399"], &["123993"]),
        (&["extend", "12399", "--steps", "3"], &["12399321"]),
        (
            &["factors", "--palindromic", "0101"],
            &["ε", "0", "1", "010", "101"],
        ),
        (&["factors", "01"], &["ε", "0", "1", "01"]),
        (&["profile", "0101"], &["1,2", "3,2"]),
        (&["profile", "ε"], &[]),
        (
            &["parse", "123999322399932442399932255223993", "999"],
            &["v=1239993223999324423999", "z=322", "t=55223993"],
        ),
        (
            &["parse", "123999599932239949", "999"],
            &["v=1239995999", "z=32", "t=239949"],
        ),
        (
            &[
                "reduce",
                "--prefix-only",
                "123999322399932442399932255223993",
                "999",
            ],
            &["123999322"],
        ),
        (
            &["reduce", "--prefix-only", "123999599932239949", "999"],
            &["1239932"],
        ),
        (&["reduce", "12145656547874", "656"], &["121456547874"]),
    ];
    for (args, expected) in cases {
        assert_eq!(lines(args), *expected, "{args:?}");
    }
    assert!(lines(&["flexed", "110101100110011"]).contains(&"001100 13 1011001101".to_owned()));
    for (m, q, k) in [
        ("1", "2", "k=3"),
        ("2", "2", "k=98304"),
        ("4", "2", "k=12884901888"),
        ("1", "1", "k=2"),
    ] {
        assert_eq!(lines(&["bound", "--m", m, "--q", q])[0], k);
    }
    assert!(lines(&["bound", "--m", "1", "--q", "1"]).contains(&"total=16".to_owned()));
}

#[test]
fn printed_words_reparse() {
    for word in ["ε", "0", "12399321", "123999322"] {
        let json = stdout(&["-q", "10", "--format", "json", "check", word]);
        let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
        let display = if word == "ε" { "" } else { word };
        assert_eq!(v["word"], display);
    }
    let closure = lines(&["-q", "10", "closure", "12399"]).remove(0);
    assert_eq!(lines(&["-q", "10", "closure", &closure]), [closure]);
}
