//! End-to-end tests of the command-line surface: the exit-code contract
//! (0 = holds, 1 = fails with witness on stdout, 2 = usage/parse errors on
//! stderr), file outputs, and byte-level determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_perfcode"))
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin()
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn analyze_reports_the_expected_matrix_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(
        dir.path(),
        &["gen", "ds-hamming", "--m", "4", "--out", "c1.code"],
    );
    assert_eq!(code(&gen), 0, "{}", stderr(&gen));

    let first = run(dir.path(), &["analyze", "c1.code"]);
    assert_eq!(code(&first), 0, "{}", stderr(&first));
    let text = stdout(&first);
    assert!(text.contains("code: n=13 M=512 d=3"), "{text}");
    assert!(text.contains("parts: 512 512 6144 1024"), "{text}");
    assert!(
        text.contains("0 1 12 0\n1 0 12 0\n1 1 9 2\n0 0 12 1"),
        "{text}"
    );
    assert!(
        text.contains("abar 1 1: 1 0 0 22 55 72 96 116 87 40 16 6 1 0"),
        "{text}"
    );
    assert!(text.trim_end().ends_with("VERDICT: OK"), "{text}");

    let second = run(dir.path(), &["analyze", "c1.code"]);
    assert_eq!(
        first.stdout, second.stdout,
        "analyze must be byte-deterministic"
    );
}

#[test]
fn analyze_rejects_wrong_parameters_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(
        dir.path(),
        &["gen", "hamming", "--m", "3", "--out", "h7.code"],
    );
    assert_eq!(code(&gen), 0);
    let out = run(dir.path(), &["analyze", "h7.code"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("2^m - 3"), "{}", stderr(&out));
}

#[test]
fn malformed_files_report_the_line_number() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.code"), "01110\n0x110\n").unwrap();
    let out = run(dir.path(), &["verify", "bad.code"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    std::fs::write(dir.path().join("empty.code"), "# nothing\n").unwrap();
    let out = run(dir.path(), &["verify", "empty.code"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no codewords"), "{}", stderr(&out));

    let out = run(dir.path(), &["verify", "missing.code"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_passes_perfect_codes_and_prints_witnesses_otherwise() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(
        dir.path(),
        &["gen", "hamming", "--m", "3", "--out", "h7.code"],
    );
    assert_eq!(code(&gen), 0);
    let ok = run(dir.path(), &["verify", "h7.code"]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("1PERFECT: OK"));

    // drop one codeword: exit 1 and a replayable witness word on stdout
    let text = std::fs::read_to_string(dir.path().join("h7.code")).unwrap();
    let mut kept = 0;
    let broken: Vec<&str> = text
        .lines()
        .filter(|l| {
            if l.starts_with('#') || l.is_empty() {
                return false;
            }
            kept += 1;
            kept != 3
        })
        .collect();
    std::fs::write(dir.path().join("broken.code"), broken.join("\n")).unwrap();
    let fail = run(dir.path(), &["verify", "broken.code"]);
    assert_eq!(code(&fail), 1);
    let out = stdout(&fail);
    assert!(out.contains("1PERFECT: FAIL"), "{out}");
    let witness = out.lines().last().unwrap();
    assert_eq!(witness.len(), 7);
    assert!(witness.chars().all(|c| c == '0' || c == '1'), "{out}");
}

#[test]
fn split_writes_parts_and_lengthen_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(
        dir.path(),
        &["gen", "ds-hamming", "--m", "3", "--out", "c1.code"],
    );
    assert_eq!(code(&gen), 0);
    let analyze = run(
        dir.path(),
        &[
            "analyze",
            "c1.code",
            "--parts-prefix",
            "p",
            "--write-partition",
            "partition.txt",
        ],
    );
    assert_eq!(code(&analyze), 0);
    assert!(dir.path().join("p.c4.code").exists());
    assert!(std::fs::read_to_string(dir.path().join("partition.txt"))
        .unwrap()
        .contains("## part 4"));

    let split = run(dir.path(), &["split", "p.c4.code"]);
    assert_eq!(code(&split), 0, "{}", stderr(&split));
    let out = stdout(&split);
    assert!(out.contains("nu 1"), "{out}");
    assert!(dir.path().join("p.c4.code.partA").exists());
    assert!(dir.path().join("p.c4.code.partB").exists());

    let lengthen = run(dir.path(), &["lengthen", "c1.code", "--out", "len.code"]);
    assert_eq!(code(&lengthen), 0, "{}", stderr(&lengthen));
    let verify = run(dir.path(), &["verify", "len.code"]);
    assert_eq!(code(&verify), 0);

    let all = run(
        dir.path(),
        &["lengthen", "c1.code", "--all", "--cap", "8", "--out", "len"],
    );
    assert_eq!(code(&all), 0);
    assert!(stdout(&all).contains("total 2"), "{}", stdout(&all));
    assert!(dir.path().join("len.0.code").exists());
    assert!(dir.path().join("len.1.code").exists());
}

#[test]
fn split_reports_odd_cycles_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    // three pairwise-conflicting words form a triangle under distances {1,2}
    std::fs::write(dir.path().join("tri.code"), "0000\n0001\n0011\n").unwrap();
    let out = run(dir.path(), &["split", "tri.code"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("ODD_CYCLE 3"), "{}", stdout(&out));
}

#[test]
fn twofold_covers_build_verify_and_split() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(
        dir.path(),
        &["gen", "ds-hamming", "--m", "3", "--out", "c1.code"],
    );
    assert_eq!(code(&gen), 0);
    for variant in ["b", "d"] {
        let out_name = format!("{variant}.code");
        let out = run(
            dir.path(),
            &[
                "twofold",
                "c1.code",
                "--variant",
                variant,
                "--split",
                "--out",
                &out_name,
            ],
        );
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        let text = stdout(&out);
        assert!(text.contains("TWOFOLD: OK"), "{text}");
        assert!(text.contains("ANTIPODAL: OK"), "{text}");
        assert!(text.contains("SPLITTABLE: YES"), "{text}");
        let verify = run(dir.path(), &["verify", "--twofold", &out_name]);
        assert_eq!(code(&verify), 0, "{}", stderr(&verify));
        for suffix in ["partA", "partB"] {
            let half = format!("{out_name}.{suffix}");
            let verify = run(dir.path(), &["verify", &half]);
            assert_eq!(code(&verify), 0, "{half}: {}", stderr(&verify));
        }
    }
}

#[test]
fn sts_paper_example_reports_the_five_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["sts", "--paper-example"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.contains("blocks: 47 distinct, 70 with multiplicity"),
        "{text}"
    );
    assert!(text.contains("TWOFOLD_STS: OK"), "{text}");
    assert!(text.contains("PROPERTY a: OK"), "{text}");
    assert!(text.contains("PROPERTY b: OK"), "{text}");
    assert!(text.contains("SPLITTABLE: NO"), "{text}");
    assert!(text.contains("ODD_CYCLE 5"), "{text}");
}

#[test]
fn mds_commands_cover_check_split_search_and_latin() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(
        dir.path(),
        &["gen", "linear-mds", "--m", "3", "--out", "mds.code"],
    );
    assert_eq!(code(&gen), 0);
    let check = run(dir.path(), &["mds", "check", "mds.code"]);
    assert_eq!(code(&check), 0);
    assert!(stdout(&check).contains("MDS: OK"));

    let gen = run(
        dir.path(),
        &[
            "gen",
            "permuted-mds",
            "--m",
            "3",
            "--seed",
            "9",
            "--out",
            "p.code",
        ],
    );
    assert_eq!(code(&gen), 0);
    let check = run(dir.path(), &["mds", "check", "p.code"]);
    assert_eq!(code(&check), 0);

    let search = run(
        dir.path(),
        &["mds", "search", "--m", "2", "--log", "hits.jsonl"],
    );
    assert_eq!(code(&search), 0, "{}", stderr(&search));
    let text = stdout(&search);
    assert!(text.contains("enumerated 90"), "{text}");
    assert!(text.contains("complete yes"), "{text}");
    assert!(text.contains("hits 0"), "{text}");
    assert_eq!(
        std::fs::read_to_string(dir.path().join("hits.jsonl")).unwrap(),
        ""
    );

    // a splittable double-MDS: the union of two cosets of the linear code
    let mds = std::fs::read_to_string(dir.path().join("mds.code")).unwrap();
    let mut doubled: Vec<String> = Vec::new();
    for line in mds.lines().filter(|l| !l.starts_with('#') && !l.is_empty()) {
        let digits: Vec<u8> = line.bytes().map(|b| b - b'0').collect();
        doubled.push(line.to_string());
        doubled.push(format!("{}{}{}", digits[0], digits[1], (digits[2] + 1) % 4));
    }
    doubled.sort();
    std::fs::write(dir.path().join("double.code"), doubled.join("\n")).unwrap();
    let check = run(dir.path(), &["mds", "check", "--double", "double.code"]);
    assert_eq!(code(&check), 0, "{}", stdout(&check));
    let split = run(dir.path(), &["mds", "split", "double.code"]);
    assert_eq!(code(&split), 0, "{}", stderr(&split));
    assert!(dir.path().join("double.code.partA").exists());
    let latin = run(dir.path(), &["mds", "latin", "double.code", "--complete"]);
    assert_eq!(code(&latin), 0, "{}", stderr(&latin));
    assert!(
        stdout(&latin).contains("COMPLETABLE: YES"),
        "{}",
        stdout(&latin)
    );
}

#[test]
fn relations_and_budget_override() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(
        dir.path(),
        &["gen", "ds-hamming", "--m", "3", "--out", "c1.code"],
    );
    assert_eq!(code(&gen), 0);
    let out = run(dir.path(), &["relations", "c1.code"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).trim_end().ends_with("VERDICT: OK"));

    // a tiny sweep budget turns verification into an explicit budget error
    let gen = run(
        dir.path(),
        &["gen", "hamming", "--m", "3", "--out", "h7.code"],
    );
    assert_eq!(code(&gen), 0);
    let out = bin()
        .current_dir(dir.path())
        .env("PERFCODE_BUDGET", "16")
        .args(["verify", "h7.code"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("budget"), "{}", stderr(&out));
}
