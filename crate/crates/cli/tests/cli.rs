use std::fs;
use std::process::{Command, Output};

fn ingleton(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ingleton"))
        .args(args)
        .env_remove("INGLETON_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_prints_size() {
    let out = ingleton(&["count", "--n", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "205\n");
}

#[test]
fn gen_writes_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("delta4.txt");
    let out = ingleton(&["gen", "--n", "4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n=4 count=34");
    assert_eq!(lines.len(), 35);
}

#[test]
fn minimality_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = ingleton(&[
        "check-minimality",
        "--n",
        "4",
        "--emit-certificates",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# ingleton "));
    assert!(text.contains("# n 4\n# delta 34\n"));
    assert_eq!(text.matches("\tnon-redundant\t").count(), 34);
    assert!(text.ends_with("PASS\n"));
    let witnesses = fs::read_to_string(dir.path().join("minimality-n4.witness")).unwrap();
    assert_eq!(witnesses.lines().count(), 34);
}

#[test]
fn reports_are_independent_of_worker_count() {
    let args = [
        "check-completeness",
        "--n",
        "4",
        "--samples",
        "40",
        "--seed",
        "5",
    ];
    let one = ingleton(&[&args[..], &["--workers", "1"]].concat());
    let three = ingleton(&[&args[..], &["--workers", "3"]].concat());
    assert!(one.status.success() && three.status.success());
    assert_eq!(one.stdout, three.stdout);
    assert!(stdout(&one).contains("certified 40/40"));
}

#[test]
fn theorem1_small_scan_passes() {
    let out = ingleton(&["check-theorem1", "--n", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("counterexamples 0\n"));
}

#[test]
fn implies_and_membership() {
    let out = ingleton(&[
        "implies",
        "--n",
        "4",
        "--cone",
        "gamma",
        "h{1} + h{2} - h{1,2}",
    ]);
    assert!(stdout(&out).contains("\nimplied\ntarget\t"));
    let j =
        "h{1,2} + h{1,3} + h{1,4} + h{2,3} + h{2,4} - h{1} - h{2} - h{3,4} - h{1,2,3} - h{1,2,4}";
    let out = ingleton(&["implies", "--n", "4", j]);
    assert!(stdout(&out).contains("\nnot-implied\ntarget\t"));
    let out = ingleton(&["implies", "--n", "4", "--cone", "gamma-in", j]);
    assert!(stdout(&out).contains("\nimplied\n"));

    let v = stdout(&ingleton(&["witness", "--n", "4", "--kind", "violator"]));
    let gamma = stdout(&ingleton(&[
        "membership",
        "--n",
        "4",
        "--cone",
        "gamma",
        v.trim(),
    ]));
    let gamma_in = stdout(&ingleton(&["membership", "--n", "4", v.trim()]));
    assert!(gamma.contains("member true"));
    assert!(gamma_in.contains("member false\nviolated DELTA0"));
}

#[test]
fn bound_problem_and_network() {
    let dir = tempfile::tempdir().unwrap();
    let problem = dir.path().join("p.txt");
    fs::write(&problem, "n 2\ncone gamma\nmaximize h{1}\nst h{1,2} <= 1\n").unwrap();
    let out = ingleton(&["bound", "--problem", problem.to_str().unwrap()]);
    assert!(stdout(&out).contains("status optimal\nvalue 1\n"));

    let net = dir.path().join("net.txt");
    fs::write(
        &net,
        "source s1\nedge e1 from s1 cap 1\nsink t1 wants s1 sees e1\n",
    )
    .unwrap();
    for cone in ["gamma", "gamma-in"] {
        let out = ingleton(&["bound", "--network", net.to_str().unwrap(), "--cone", cone]);
        assert!(stdout(&out).contains("value 1\n"), "{cone}");
    }
}

#[test]
fn errors_exit_with_status_two() {
    let out = ingleton(&["classify", "--n", "3", "{1};{2};{3};{4}"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ingleton(&["check-minimality", "--n", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ingleton(&["bound", "--problem", "/nonexistent/problem.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ingleton"))
        .args(["gen", "--n", "5"])
        .env("INGLETON_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}
