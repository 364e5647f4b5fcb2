use std::process::{Command, Output};

fn coxpop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxpop")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn table_text_and_verify() {
    let o = coxpop(&["table", "A", "4", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "A4: 1 41 56 21 1 | inf 0");

    let o = coxpop(&["table", "--type", "F", "--rank", "4"]);
    assert!(stdout(&o).contains("| inf 24 (2 periodic orbits, sizes [12, 12])"));
}

#[test]
fn d4_reference_row_is_reported() {
    let o = coxpop(&["table", "D", "4", "--verify"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sums to 191"));
}

#[test]
fn table_formats() {
    let o = coxpop(&["table", "B", "2", "--format", "tsv"]);
    assert_eq!(stdout(&o), "depth\tcount\n0\t1\n1\t5\n2\t1\n3\t1\ninf\t0\n");
    let o = coxpop(&["table", "H", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["group"], "H3");
    assert_eq!(v["table"]["counts"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).sum::<u64>(), 120);
}

#[test]
fn orbit_and_normal_form() {
    let o = coxpop(&["orbit", "A", "5", "-e", "(135642)"]);
    let text = stdout(&o);
    assert!(text.contains("orbit size 4, transient 3, cycle length 1, reaches_identity"), "{text}");
    let o = coxpop(&["nf", "A", "5", "-e", "(135642)"]);
    assert_eq!(stdout(&o).trim(), "(246)·(12346)·(123456)");
    let o = coxpop(&["orbit", "E", "6", "--in", "O5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cycle_length"], 12);
    assert_eq!(v["terminal"], "periodic_nonidentity");
}

#[test]
fn nf_refuses_periodic_elements() {
    let o = coxpop(&["orbit", "F", "4", "--in", "O5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let start = v["trajectory"][0]["element"].as_str().unwrap().to_string();
    let o = coxpop(&["nf", "F", "4", "-e", &format!("w:{start}")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("periodic"));
}

#[test]
fn sif_counts() {
    let o = coxpop(&["sif", "B", "4", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "B4: 179");
    let o = coxpop(&["sif", "I", "9"]);
    assert_eq!(stdout(&o).trim(), "I2(9): 8");
}

#[test]
fn conjecture_d_reports_mismatch() {
    let o = coxpop(&["conjecture", "d", "--max-rank", "5"]);
    let text = stdout(&o);
    assert!(text.contains("D4 n=4 depth 5: observed 7 formula 25 MISMATCH; shifted formula 7 MATCH"), "{text}");
    assert!(text.contains("D5 n=5 depth 7: observed 25 formula 71 MISMATCH"), "{text}");
}

#[test]
fn coxeter_element_choice_does_not_change_tables() {
    let a = stdout(&coxpop(&["table", "B", "3"]));
    let b = stdout(&coxpop(&["table", "B", "3", "--cox", "bipartite"]));
    let c = stdout(&coxpop(&["table", "B", "3", "--cox", "w:1 2 3"]));
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn tree_is_dot() {
    let o = coxpop(&["tree", "A", "2"]);
    let text = stdout(&o);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("->").count(), 5);
}

#[test]
fn verify_suite_and_cache() {
    let dir = std::env::temp_dir().join(format!("coxpop-cli-cache-{}", std::process::id()));
    let o = coxpop(&["verify", "folding", "--cache-dir", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
    let o = coxpop(&["table", "A", "3", "--cache-dir", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_dir(&dir).unwrap().count() > 0);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(coxpop(&["table", "X", "3"]).status.code(), Some(2));
    assert_eq!(coxpop(&["table", "E", "8"]).status.code(), Some(2));
    assert_eq!(coxpop(&["orbit", "A", "3", "-e", "(1 -2)"]).status.code(), Some(2));
    assert_eq!(coxpop(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(coxpop(&["table", "A", "3", "--cox", "w:1 1 2"]).status.code(), Some(2));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("coxpop-out-{}.txt", std::process::id()));
    let o = coxpop(&["sif", "A", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "A3: 7");
    std::fs::remove_file(path).ok();
}
