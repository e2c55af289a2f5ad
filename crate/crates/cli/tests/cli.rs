use std::process::Command;

use rigged_cli::{run, Outcome};
use rigged_core::json::EnumDoc;
use rigged_core::riggedsets::enumerate_total;
use rigged_core::{LaurentPoly, Params};

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data");

fn rigged(args: &str) -> Outcome {
    run(std::iter::once("rigged").chain(args.split_whitespace()))
}

fn golden(name: &str) -> Vec<(String, String)> {
    std::fs::read_to_string(format!("{DATA}/{name}"))
        .unwrap()
        .lines()
        .map(|l| {
            let (cmd, value) = l.split_once('\t').unwrap();
            (cmd.to_string(), value.to_string())
        })
        .collect()
}

#[test]
fn enum_examples() {
    let out = rigged("enum --k 1 --l1 1 --l2 1 --l3 1 --M 1 --N 1");
    assert_eq!(out.code, 0);
    let doc = EnumDoc::parse(&out.stdout).unwrap();
    let counts: Vec<_> = doc.pieces.iter().map(|p| (p.m, p.n, p.count)).collect();
    assert_eq!(counts, vec![(0, 0, 1), (1, 1, 1)]);

    let out = rigged("enum --k 2 --l1 2 --l2 2 --l3 0 --M 0 --N 0");
    let doc = EnumDoc::parse(&out.stdout).unwrap();
    assert_eq!(doc.pieces.len(), 1);
    assert_eq!((doc.pieces[0].m, doc.pieces[0].n, doc.pieces[0].count), (0, 0, 1));

    let out = rigged("enum --k 1 --l1 0 --l2 0 --l3 0 --M 0 --N 0");
    assert_eq!(out.code, 0);
    assert!(EnumDoc::parse(&out.stdout).unwrap().pieces.is_empty());
}

#[test]
fn enum_single_piece_and_text() {
    let out = rigged("enum --k 2 --l1 2 --l2 1 --l3 1 --M 1 --N 1 --m 1 --n 1");
    let doc = EnumDoc::parse(&out.stdout).unwrap();
    assert_eq!(doc.pieces.len(), 1);
    let text = rigged("--format text enum --k 1 --l1 1 --l2 1 --l3 1 --M 1 --N 1");
    assert_eq!(
        text.stdout,
        "m=0 n=0 count=1\n  mu=[0] r=[[]] nu=[0] s=[[]] degree=0\nm=1 n=1 count=1\n  mu=[1] r=[[0]] nu=[1] s=[[0]] degree=1\n"
    );
}

#[test]
fn enum_documents_round_trip_and_match_golden() {
    for (file, args) in [
        (
            "enum_k1_1_1_1_M1_N1.json",
            "enum --k 1 --l1 1 --l2 1 --l3 1 --M 1 --N 1",
        ),
        (
            "enum_k2_2_1_1_M1_N1.json",
            "enum --k 2 --l1 2 --l2 1 --l3 1 --M 1 --N 1",
        ),
    ] {
        let expected = std::fs::read_to_string(format!("{DATA}/{file}")).unwrap();
        let out = rigged(args);
        assert_eq!(out.stdout, expected, "{args}");
        let doc = EnumDoc::parse(&out.stdout).unwrap();
        assert_eq!(doc.to_json() + "\n", out.stdout);
    }
    for k in 1..=2 {
        for (l1, l2, l3) in Params::legal_labels(k) {
            let p = Params::new(k, l1, l2, l3, 1, 1).unwrap();
            let out = rigged(&format!("enum --k {k} --l1 {l1} --l2 {l2} --l3 {l3} --M 1 --N 1"));
            let doc = EnumDoc::parse(&out.stdout).unwrap();
            assert_eq!(doc, EnumDoc::from_total(&p, &enumerate_total(&p)));
        }
    }
}

#[test]
fn char_examples() {
    assert_eq!(
        rigged("--format text char --k 1 --l1 1 --l2 1 --M 1 --N 1").stdout,
        "1 + z1*z2*q\n"
    );
    let json = rigged("char --k 1 --l1 1 --l2 1 --M 1 --N 1").stdout;
    assert_eq!(
        json,
        "[{\"z1\":0,\"z2\":0,\"q\":0,\"coeff\":\"1\"},{\"z1\":1,\"z2\":1,\"q\":1,\"coeff\":\"1\"}]\n"
    );
    assert_eq!(rigged("char --k 1 --l1 1 --l2 1 --l3 1 --M 1 --N 1").code, 2);
}

#[test]
fn fermionic_matches_bruteforce_golden() {
    for (cmd, value) in golden("characters.tsv") {
        let fermionic = cmd.replace("char-bruteforce", "char");
        assert_eq!(
            rigged(&format!("--format text {fermionic}")).stdout,
            format!("{value}\n"),
            "{cmd}"
        );
        assert_eq!(
            rigged(&format!("--format text {cmd}")).stdout,
            format!("{value}\n"),
            "{cmd}"
        );
        value.parse::<LaurentPoly>().unwrap();
    }
}

#[test]
fn bruteforce_accepts_any_l3() {
    let low = rigged("--format text char-bruteforce --k 2 --l1 2 --l2 2 --l3 0 --M 1 --N 1");
    let full = rigged("--format text char-bruteforce --k 2 --l1 2 --l2 2 --l3 2 --M 1 --N 1");
    assert_eq!(low.code, 0);
    assert_ne!(low.stdout, full.stdout);
}

#[test]
fn sl2_golden() {
    let rows = golden("sl2.tsv");
    for (cmd, value) in &rows {
        assert_eq!(
            rigged(&format!("--format text {cmd}")).stdout,
            format!("{value}\n"),
            "{cmd}"
        );
    }
    let (_, base) = &rows[0];
    assert_eq!(base, "1");
}

#[test]
fn verify_commands_pass_on_small_grids() {
    for args in [
        "verify recursion --max-k 2 --max-weight 4 --max-M 2 --max-N 2",
        "verify lower-decomp --max-k 2 --max-weight 4 --max-M 2 --max-N 2",
        "verify upper-decomp --max-k 2 --max-weight 4 --max-M 2 --max-N 1",
        "verify bijection --max-k 2 --max-weight 4 --max-M 2 --max-N 2",
        "verify grading --max-k 2 --max-weight 4 --max-M 2 --max-N 2",
        "verify fermionic --max-k 2 --max-M 2 --max-N 2",
        "verify char-recursion --max-k 2 --max-M 1 --max-N 2",
    ] {
        let out = rigged(args);
        assert_eq!(out.code, 0, "{args}: {}", out.stdout);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["passed"], true);
        assert!(v["points"].as_u64().unwrap() > 0);
    }
}

#[test]
fn corrupted_tau_gives_a_counterexample() {
    let out = rigged("verify recursion --max-k 1 --max-weight 2 --max-M 1 --max-N 1 --inject-tau-fault 1");
    assert_eq!(out.code, 1);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let cx = &v["counterexample"];
    assert_eq!(cx["failure"]["kind"], "cardinality");
    assert_eq!(cx["point"]["params"]["k"], 1);
    assert!(cx["point"]["m"].is_i64());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        "",
        "enum --k 1 --l1 2 --l2 0 --l3 0 --M 0 --N 0",
        "enum --k 0 --l1 0 --l2 0 --l3 0 --M 0 --N 0",
        "enum --k 2 --l1 1 --l2 1 --l3 2 --M 0 --N 0",
        "enum --k 1 --l1 1 --l2 1 --l3 1 --M -1 --N 0",
        "enum --k 1 --l1 1 --l2 1 --l3 1 --M 0 --N 0 --m 1",
        "char --k 1 --l1 1 --l2 1 --M 1",
        "sl2-char --k 1 --l 2 --M 0 --N 0",
        "verify recursion --max-k 2",
        "verify nonsense --max-k 2 --max-weight 1 --max-M 1 --max-N 1",
        "--format yaml char --k 1 --l1 1 --l2 1 --M 1 --N 1",
    ] {
        assert_eq!(rigged(args).code, 2, "{args}");
    }
    assert_eq!(rigged("--help").code, 0);
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("rigged-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chi.txt");
    let out = rigged(&format!(
        "--format text --output {} char --k 1 --l1 1 --l2 1 --M 1 --N 1",
        path.display()
    ));
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1 + z1*z2*q\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_independent_of_jobs() {
    for args in [
        "verify recursion --max-k 2 --max-weight 4 --max-M 2 --max-N 2",
        "verify bijection --max-k 2 --max-weight 3 --max-M 1 --max-N 2",
        "verify recursion --max-k 2 --max-weight 3 --max-M 1 --max-N 1 --inject-tau-fault 1",
        "enum --k 3 --l1 3 --l2 2 --l3 1 --M 2 --N 1",
    ] {
        let one = rigged(&format!("--jobs 1 {args}"));
        let many = rigged(&format!("--jobs 8 {args}"));
        assert_eq!(one, many, "{args}");
    }
}

#[test]
fn binary_honours_jobs_env() {
    let run_with = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_rigged"))
            .env("RIGGED_JOBS", jobs)
            .args([
                "enum", "--k", "2", "--l1", "2", "--l2", "2", "--l3", "2", "--M", "1", "--N", "1",
            ])
            .output()
            .unwrap()
    };
    let one = run_with("1");
    let four = run_with("4");
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let bad = run_with("many");
    assert_eq!(bad.status.code(), Some(2));
}
