use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const TWO_LINES: &str = r#"{"n":6,"cyclic_flats":[{"set":[],"rank":0},{"set":[1,2,3],"rank":2},{"set":[4,5,6],"rank":2},{"set":[1,2,3,4,5,6],"rank":3}]}"#;

fn cflats(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cflats"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn swap_turns_skew_lines_into_meeting_lines() {
    let input = file(TWO_LINES);
    let out = cflats(&["twofilters", "--in", input.path().to_str().unwrap(), "--x", "1", "--y", "4"], "");
    assert_eq!(out.status.code(), Some(0));
    let flats: Vec<Vec<usize>> = json(&out)["cyclic_flats"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| serde_json::from_value(f["set"].clone()).unwrap())
        .collect();
    assert_eq!(flats, vec![vec![], vec![1, 2, 3], vec![1, 5, 6], vec![1, 2, 3, 4, 5, 6]]);
}

#[test]
fn emitted_matroids_parse_back() {
    let out = cflats(&["dual"], TWO_LINES);
    let dual = String::from_utf8(out.stdout).unwrap();
    let back = cflats(&["dual"], &dual);
    let a: Value = serde_json::from_str(TWO_LINES).unwrap();
    assert_eq!(json(&back), a);
    for args in [&["lpm", "--upper", "NNENNENEE", "--lower", "EENENNENN"][..], &["witness", "--upper", "NNENNENEE", "--lower", "EENENNENN"], &["rook", "--word", "SRC"], &["tipless"]] {
        let out = cflats(args, "");
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v = json(&out);
        let m = if v.get("m").is_some() { v["m"].clone() } else { v };
        let again = cflats(&["dual"], &m.to_string());
        assert_eq!(again.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn isomorphism_of_a_shuffled_copy() {
    let shuffled = r#"{"n":6,"cyclic_flats":[{"set":[],"rank":0},{"set":[1,4,6],"rank":2},{"set":[2,3,5],"rank":2},{"set":[1,2,3,4,5,6],"rank":3}]}"#;
    let (a, b) = (file(TWO_LINES), file(shuffled));
    let out = cflats(
        &["iso", "--a", a.path().to_str().unwrap(), "--b", b.path().to_str().unwrap()],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let perm: Vec<usize> = serde_json::from_value(json(&out)["isomorphism"].clone()).unwrap();
    assert_eq!(perm.len(), 6);
}

#[test]
fn census_matches_the_nonmixed_totals() {
    let out = cflats(&["census", "--max", "8", "--by-rank"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("m\tr\tclass\tbrute\tclosed"));
    let totals: Vec<&str> = text
        .lines()
        .filter_map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            (f[1] == "-" && f[2] == "nonmixed").then(|| f[3])
        })
        .collect();
    assert_eq!(totals, ["1", "2", "5", "14", "41", "122", "365", "1094"]);
}

#[test]
fn domain_errors_exit_with_one() {
    let out = cflats(&["twofilters", "--x", "1", "--y", "2"], TWO_LINES);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert!(v["error"].as_str().unwrap().contains("nonempty differences"));
    assert!(v.get("witness").is_some());

    let out = cflats(&["validate"], r#"{"n":1,"cyclic_flats":[{"set":[],"rank":0},{"set":[1],"rank":1}]}"#);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["witness"], serde_json::json!([[], [1]]));

    let out = cflats(&["rank"], "{not json");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(cflats(&["no-such-command"], "").status.code(), Some(2));
    assert_eq!(cflats(&["twofilters", "--x", "1"], TWO_LINES).status.code(), Some(2));
    assert_eq!(cflats(&["dual", "--tsv"], TWO_LINES).status.code(), Some(2));
}

#[test]
fn rank_and_transversality() {
    let out = cflats(&["rank", "--set", "1,2,3,4"], TWO_LINES);
    assert_eq!(json(&out)["rank"], 3);
    let out = cflats(&["transversal"], TWO_LINES);
    assert_eq!(json(&out)["transversal"], true);
    let out = cflats(&["transversal", "--sets"], r#"{"n":3,"sets":[[1,2],[2,3]]}"#);
    assert_eq!(json(&out)["n"], 3);
}

#[test]
fn lattice_pair() {
    let diamond = r#"{"elements":["0","a","b","1"],"covers":[["0","a"],["0","b"],["a","1"],["b","1"]]}"#;
    let out = cflats(&["pair71"], diamond);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_ne!(v["m"], v["m_prime"]);
    let chain = r#"{"elements":["0","1"],"covers":[["0","1"]]}"#;
    assert_eq!(cflats(&["pair71"], chain).status.code(), Some(1));
    let out = cflats(&["lattice", "--drop-loop"], diamond);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn single_criterion() {
    let out = cflats(&["verify-all", "--only", "2", "--seed", "7"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("PASS [ 2]"));
}
