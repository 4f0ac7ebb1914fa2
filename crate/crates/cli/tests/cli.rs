use std::process::{Command, Output};

fn empress(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_empress")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = empress(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    empress(args).status.code()
}

/// `n,a,b` rows without the header.
fn rows(text: &str) -> Vec<(u64, u64, u64)> {
    text.lines()
        .skip(1)
        .map(|l| {
            let f: Vec<u64> = l.split(',').map(|v| v.parse().unwrap()).collect();
            (f[0], f[1], f[2])
        })
        .collect()
}

const TABLE2_CSV: &str = "n,a,b\n1,1,3\n2,2,8\n3,4,12\n4,5,17\n5,6,20\n6,7,25\n7,9,29\n8,10,34\n9,11,39\n\
10,13,43\n11,14,48\n12,15,51\n13,16,56\n14,18,60\n15,19,65\n";

#[test]
fn solve_queen_bee() {
    assert_eq!(
        stdout(&["solve", "--queen", "queen-bee", "--count", "5"]),
        "n,a,b\n1,1,2\n2,3,6\n3,4,8\n4,5,10\n5,7,14\n"
    );
}

#[test]
fn solve_formats() {
    let args = ["solve", "--queen", "2-queen-dee", "--count", "2"];
    assert_eq!(stdout(&args), "n,a,b\n1,1,3\n2,2,8\n");
    assert_eq!(stdout(&[&args[..], &["--format", "tsv"]].concat()), "n\ta\tb\n1\t1\t3\n2\t2\t8\n");
    assert_eq!(stdout(&[&args[..], &["--format", "json", "--fast"]].concat()), "[[1,1,3],[2,2,8]]\n");
}

#[test]
fn default_count_is_fifteen() {
    assert_eq!(stdout(&["solve", "--queen", "2-queen-dee", "--fast"]), TABLE2_CSV);
    assert_eq!(stdout(&["formula", "--name", "2-queen-dee"]), TABLE2_CSV);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&["solve", "--queen", "standard", "--count", "0"]), Some(2));
    assert_eq!(code(&["solve", "--queen", "nonsense"]), Some(2));
    assert_eq!(code(&["solve", "--queen", "k-queen:0"]), Some(2));
    assert_eq!(code(&["formula", "--name", "holladay"]), Some(2));
    assert_eq!(code(&["verify", "--check", "equiv", "--left", "formula:queen-bee"]), Some(2));
    assert_eq!(code(&["scan", "--max-n", "0"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
}

#[test]
fn resource_limit_exits_three() {
    let out = empress(&["solve", "--queen", "standard", "--count", "50", "--max-level", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert_eq!(code(&["solve", "--queen", "standard", "--count", "2", "--max-level", "10"]), Some(0));
}

#[test]
fn formulas() {
    assert_eq!(stdout(&["formula", "--name", "holladay:1", "--count", "3"]), "n,a,b\n1,1,2\n2,3,5\n3,4,7\n");
    for (n, a, b) in rows(&stdout(&["formula", "--name", "restricted:3,1", "--count", "5"])) {
        assert_eq!(b + 1, a + 3 * n);
    }
}

#[test]
fn morphic_words_and_tables() {
    assert_eq!(stdout(&["morphic", "--name", "tribonacci", "--prefix", "26"]), "abacabaabacababacabaabacab\n");
    assert_eq!(
        stdout(&["morphic", "--name", "tribonacci", "--erase", "b", "--table", "a,c", "--count", "15"]),
        TABLE2_CSV
    );
    let two_one = rows(&stdout(&["morphic", "--name", "two-one", "--table", "a,b", "--count", "15"]));
    assert_eq!(two_one[..3], [(1, 1, 3), (2, 2, 6), (3, 4, 11)]);
    assert!(two_one.iter().all(|&(n, a, b)| b == 2 * a + n));
    assert_eq!(
        stdout(&["morphic", "--rules", "a:ab,b:aaa", "--table", "a,b", "--count", "3"]),
        "n,a,b\n1,1,2\n2,3,7\n3,4,9\n"
    );
    assert_eq!(
        stdout(&["morphic", "--name", "tribonacci", "--code", "a:a,b:ac,c:a", "--prefix", "12"]),
        stdout(&["morphic", "--name", "tribonacci", "--erase", "b", "--prefix", "12"])
    );
}

#[test]
fn verify_passes_and_fails() {
    let pass = stdout(&[
        "verify",
        "--check",
        "equiv",
        "--left",
        "solve:2-queen-dee",
        "--right",
        "morphic:tribonacci-erase-b",
        "--count",
        "200",
    ]);
    assert!(pass.starts_with("PASS"));
    assert!(stdout(&["verify", "--check", "eq1", "--target", "queen-dee", "--count", "10000"]).starts_with("PASS"));

    let fail = empress(&["verify", "--check", "eq1", "--target", "queen-bee", "--count", "1000"]);
    assert_eq!(fail.status.code(), Some(1));
    let text = String::from_utf8(fail.stdout).unwrap();
    assert!(text.starts_with("FAIL") && text.contains("first n=20 r=-2"), "{text}");

    let mismatch =
        empress(&["verify", "--check", "equiv", "--left", "formula:queen-bee", "--right", "formula:2-queen-dee"]);
    assert_eq!(mismatch.status.code(), Some(1));
    assert!(String::from_utf8(mismatch.stdout).unwrap().contains("mismatch at n=1"));
}

#[test]
fn verify_other_checks() {
    for args in [
        &["verify", "--check", "lemma3", "--count", "500"][..],
        &["verify", "--check", "good-triples", "--count", "50"],
        &["verify", "--check", "relation", "--left", "solve:queen-bee", "--relation", "b=2a"],
        &["verify", "--check", "relation", "--left", "morphic:two-one", "--relation", "b=2a+n"],
        &["verify", "--check", "relation", "--left", "formula:holladay:1", "--relation", "b=a+n"],
        &["verify", "--check", "complementary", "--left", "formula:queen-bee"],
    ] {
        assert!(stdout(args).starts_with("PASS"), "{args:?}");
    }
    assert_eq!(code(&["verify", "--check", "relation", "--left", "formula:queen-bee", "--relation", "b=a+n"]), Some(1));
}

#[test]
fn scan_rows_and_summary() {
    let out = empress(&["scan", "--max-n", "10"]);
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.starts_with("n,r\n"));
    assert_eq!(csv.lines().count(), 11);
    assert_eq!(stdout(&["scan", "--max-n", "1"]), "n,r\n1,0\n");

    let path = std::env::temp_dir().join(format!("empress-scan-{}.csv", std::process::id()));
    let summary = stdout(&["scan", "--max-n", "310691", "--emit", path.to_str().unwrap()]);
    assert!(summary.lines().any(|l| l == "first |r|=5 at n=310691"), "{summary}");
    assert!(summary.lines().any(|l| l == "first r=-5 at n=310691"));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written.lines().count(), 310_692);
    assert!(!written.contains('\r'));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["solve", "--queen", "widened:2,1", "--count", "40", "--format", "json"][..],
        &["morphic", "--name", "fraenkel:2,1", "--table", "a,b", "--count", "100"],
        &["scan", "--max-n", "2000"],
    ] {
        assert_eq!(empress(args).stdout, empress(args).stdout, "{args:?}");
    }
}

#[test]
fn help_documents_the_grammar() {
    let help = stdout(&["--help"]);
    for needle in ["k-queen:k", "widened:j,m", "restricted:k,j", "holladay:k", "tribonacci-erase-b", "Exit codes"] {
        assert!(help.contains(needle), "missing {needle}");
    }
}
