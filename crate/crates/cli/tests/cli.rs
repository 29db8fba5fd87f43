//! End-to-end tests of the modlink binary: outputs, JSON shapes, and the
//! documented exit codes.

use std::process::{Command, Output};

fn modlink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modlink"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn word_reports_canonical_word_and_power() {
    let out = modlink(&["word", "3,5;7,12"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("word: LLRLRR"));
    assert!(text.contains("k: 1"));

    let out = modlink(&["word", "2,1;1,1", "--json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("well-formed json");
    assert_eq!(json["word"], "LR");
    assert_eq!(json["k"], 1);
    assert_eq!(json["primitive"], true);
}

#[test]
fn word_detects_proper_powers() {
    // square of [[2,1],[1,1]]
    let out = modlink(&["word", "5,3;3,2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("word: LR"));
    assert!(text.contains("k: 2"));
    assert!(text.contains("primitive: false"));
}

#[test]
fn word_exit_codes() {
    assert_eq!(code(&modlink(&["word", "not-a-matrix"])), 2);
    assert_eq!(code(&modlink(&["word", "1,1;1,1"])), 2); // det 0
    assert_eq!(code(&modlink(&["word", "1,1;0,1"])), 3); // parabolic
    assert_eq!(code(&modlink(&["word", "0,-1;1,0"])), 3); // elliptic
}

#[test]
fn river_reports_word_and_continued_fraction() {
    let out = modlink(&["river", "7,9,-5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("river word: RRLLRL"));
    assert!(text.contains("cf: [0; (2, 2, 1, 1)]"));
    assert!(text.contains("canonical: LLRLRR"));

    let out = modlink(&["river", "7,9,-5", "--json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("well-formed json");
    assert_eq!(json["river_word"], "RRLLRL");
    assert_eq!(json["discriminant"], "221");
    assert_eq!(json["cf_period"][0], "2");
}

#[test]
fn river_exit_codes() {
    assert_eq!(code(&modlink(&["river", "1,0,1"])), 3); // definite
    assert_eq!(code(&modlink(&["river", "1,3,-4"])), 3); // square discriminant
    assert_eq!(code(&modlink(&["river", "2,2,-2"])), 3); // imprimitive
    assert_eq!(code(&modlink(&["river", "1,0"])), 2);
}

#[test]
fn link_computes_all_methods() {
    let out = modlink(&["link", "RRLLRL", "LR", "--method", "all"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("rs_link: -3"));
    assert!(text.contains("oracle_link: -3"));
    assert!(text.contains("kennedy: -3"));
    assert!(text.contains("triples: (3,2,4) (4,2,0) (6,2,0)"));
}

#[test]
fn link_accepts_matrices_and_forms() {
    let out = modlink(&["link", "3,5;7,12", "2,1;1,1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("rs_link: -3"));

    let out = modlink(&["link", "7,9,-5", "2,1;1,1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("rs_link: -3"));
}

#[test]
fn link_json_has_the_fixed_field_layout() {
    let out = modlink(&["link", "RRLLRL", "LR", "--json"]);
    let text = stdout(&out);
    assert_eq!(
        text.trim(),
        "{\"word_a\":\"RRLLRL\",\"word_b\":\"LR\",\"canonical_a\":\"LLRLRR\",\"canonical_b\":\"LR\",\
         \"triples\":[{\"i\":3,\"j\":2,\"x\":4},{\"i\":4,\"j\":2,\"x\":0},{\"i\":6,\"j\":2,\"x\":0}],\
         \"rs_link\":-3,\"oracle_link\":-3,\
         \"kennedy\":{\"c1\":14,\"c2\":0,\"c3\":26,\"value_num\":-3,\"value_den\":1},\
         \"symmetrized\":-12}"
    );
}

#[test]
fn link_method_rs_leaves_kennedy_null() {
    let out = modlink(&["link", "RRLLRL", "LR", "--method", "rs", "--json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("well-formed json");
    assert_eq!(json["rs_link"], -3);
    assert!(json["kennedy"].is_null());
}

#[test]
fn link_exit_codes() {
    assert_eq!(code(&modlink(&["link", "LR", "RL"])), 3); // equivalent
    assert_eq!(code(&modlink(&["link", "5,3;3,2", "LLR"])), 3); // non-primitive
    assert_eq!(code(&modlink(&["link", "LRX", "LR"])), 2);
    assert_eq!(code(&modlink(&["link", "LL", "LR"])), 2); // periodic word
    assert_eq!(code(&modlink(&["link", "LR"])), 2); // missing argument
}

#[test]
fn link_batch_reads_pairs_per_line() {
    let dir = std::env::temp_dir().join("modlink-batch-test");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("pairs.txt");
    std::fs::write(&path, "RRLLRL LR\n\n3,2;1,1 2,1;1,1\n").expect("write batch");
    let out = modlink(&["link", "--batch", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("well-formed json");
    let rows = json.as_array().expect("array");
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["rs_link"], -3);
    assert_eq!(rows[1]["word_a"], "LLR");
    assert_eq!(rows[1]["rs_link"], -1);
}

#[test]
fn table3_matches_published_magnitudes_and_is_deterministic() {
    let first = modlink(&["table3"]);
    assert_eq!(code(&first), 0);
    let second = modlink(&["table3"]);
    assert_eq!(stdout(&first), stdout(&second));
    assert!(!stdout(&first).contains("NO"));

    let out = modlink(&["table3", "--json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("well-formed json");
    let rows = json.as_array().expect("array");
    assert_eq!(rows.len(), 6);
    for row in rows {
        assert_eq!(row["matches"], true);
        assert!(row["link"].as_i64().unwrap() < 0);
    }
    assert_eq!(rows[0]["link"], -4);
    assert_eq!(rows[3]["symmetrized"], -28);
}

#[test]
fn fuzz_small_sweep_is_clean() {
    let out = modlink(&["fuzz", "--max-len", "6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("rs/oracle mismatches: 0"));
    assert!(text.contains("sign violations: 0"));

    let out = modlink(&["fuzz", "--max-len", "2", "--json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("well-formed json");
    assert_eq!(json["words"], 1);
    assert_eq!(json["pairs"], 0);
}

#[test]
fn fuzz_kennedy_tally_flags_the_known_disagreement() {
    let out = modlink(&["fuzz", "--max-len", "4", "--kennedy", "--json"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("well-formed json");
    let cases = json["kennedy_disagreements"].as_array().expect("cases");
    let flagged = cases.iter().any(|c| {
        c["word_a"] == "LLR" && c["word_b"] == "LR" && c["value_num"] == -3 && c["value_den"] == 2
    });
    assert!(flagged, "expected the LLR/LR case in {:?}", cases);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&modlink(&["no-such-command"])), 2);
    assert_eq!(code(&modlink(&["fuzz"])), 2); // missing --max-len
    assert_eq!(
        code(&modlink(&["link", "LR", "LLR", "--method", "nope"])),
        2
    );
}

#[test]
fn help_prints_usage() {
    let out = modlink(&["help"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("usage:"));
    let out = modlink(&[]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("usage:"));
}
