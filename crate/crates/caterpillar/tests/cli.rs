//! End-to-end tests of the binary: golden stdout bytes, exit codes, and
//! byte-for-byte determinism across repeated runs.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_caterpillar"))
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary spawns")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = binary()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin is piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary exits")
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stderr).expect("stderr is UTF-8")
}

fn assert_exit(output: &Output, code: i32) {
    assert_eq!(
        output.status.code(),
        Some(code),
        "stdout: {:?}, stderr: {:?}",
        stdout_of(output),
        stderr_of(output)
    );
}

#[test]
fn count_prints_single_number() {
    let output = run(&["count", "8"]);
    assert_exit(&output, 0);
    assert_eq!(stdout_of(&output), "20\n");
}

#[test]
fn count_range_prints_one_row_per_n() {
    let output = run(&["count", "3", "--to", "10"]);
    assert_exit(&output, 0);
    assert_eq!(
        stdout_of(&output),
        "3\t1\n4\t2\n5\t3\n6\t6\n7\t10\n8\t20\n9\t36\n10\t72\n"
    );
}

#[test]
fn count_breakdown_prints_full_table() {
    let output = run(&["count", "7", "--breakdown"]);
    assert_exit(&output, 0);
    assert_eq!(
        stdout_of(&output),
        "n\t7\n\
         k\tclass_order\tsymmetric\torbits\n\
         1\t1\t1\t1\n\
         2\t4\t0\t2\n\
         3\t6\t2\t4\n\
         4\t4\t0\t2\n\
         5\t1\t1\t1\n\
         total\t10\n\
         closed_form\t10\n"
    );
}

#[test]
fn count_machine_prints_key_value_pairs() {
    let output = run(&["count", "8", "--machine"]);
    assert_exit(&output, 0);
    assert_eq!(stdout_of(&output), "n\t8\nclosed_form\t20\n");
}

#[test]
fn count_large_n_is_exact() {
    let output = run(&["count", "100"]);
    assert_exit(&output, 0);
    assert_eq!(stdout_of(&output), "79228162514264619068520660992\n");
}

#[test]
fn count_below_three_is_a_usage_error() {
    let output = run(&["count", "2"]);
    assert_exit(&output, 2);
    assert!(stderr_of(&output).contains("at least 3 vertices"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let output = run(&["count", "8", "--frobnicate"]);
    assert_exit(&output, 2);
}

#[test]
fn enumerate_streams_spines_in_order() {
    let output = run(&["enumerate", "6"]);
    assert_exit(&output, 0);
    assert_eq!(stdout_of(&output), "3\n0,2\n1,1\n0,0,1\n0,1,0\n0,0,0,0\n");
}

#[test]
fn enumerate_line_count_matches_closed_form() {
    let output = run(&["enumerate", "20"]);
    assert_exit(&output, 0);
    assert_eq!(stdout_of(&output).lines().count(), 65_792);
}

#[test]
fn enumerate_smallest_graph6_is_the_three_vertex_path() {
    let output = run(&["enumerate", "3", "--format", "graph6"]);
    assert_exit(&output, 0);
    assert_eq!(stdout_of(&output), "Bg\n");
}

#[test]
fn enumerate_edge_list_blocks_match_the_count() {
    let output = run(&["enumerate", "7", "--format", "edgelist"]);
    assert_exit(&output, 0);
    let blocks = stdout_of(&output).trim_end().split("\n\n").count();
    assert_eq!(blocks, 10);
}

#[test]
fn enumerate_graph6_matches_library_codec() {
    let output = run(&["enumerate", "5", "--format", "graph6"]);
    assert_exit(&output, 0);
    let expected: Vec<String> = caterpillar::enumeration::enumerate_caterpillars(5)
        .unwrap()
        .map(|(_, tree)| caterpillar::formats::to_graph6(&tree).unwrap())
        .collect();
    assert_eq!(stdout_of(&output), format!("{}\n", expected.join("\n")));
}

#[test]
fn enumerate_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spines.txt");
    let output = run(&["enumerate", "6", "--out", path.to_str().unwrap()]);
    assert_exit(&output, 0);
    assert_eq!(stdout_of(&output), "");
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "3\n0,2\n1,1\n0,0,1\n0,1,0\n0,0,0,0\n"
    );
}

#[test]
fn unwritable_destination_fails_with_io_exit() {
    let missing = Path::new("/nonexistent-dir/spines.txt");
    let output = run(&["enumerate", "6", "--out", missing.to_str().unwrap()]);
    assert_exit(&output, 1);
    assert!(stderr_of(&output).contains("cannot write"));
}

#[test]
fn decode_prints_edge_list_by_default() {
    let output = run(&["decode", "2,1,3"]);
    assert_exit(&output, 0);
    assert_eq!(
        stdout_of(&output),
        "11\n0 1\n1 2\n1 5\n1 6\n2 3\n2 7\n3 4\n3 8\n3 9\n3 10\n"
    );
}

#[test]
fn decode_then_encode_round_trips_through_a_pipe() {
    let decoded = run(&["decode", "2,1,1"]);
    assert_exit(&decoded, 0);
    let encoded = run_with_stdin(&["encode"], stdout_of(&decoded));
    assert_exit(&encoded, 0);
    assert_eq!(stdout_of(&encoded), "1,1,2\n");

    let decoded = run(&["decode", "2,1,3", "--format", "edgelist"]);
    assert_exit(&decoded, 0);
    let encoded = run_with_stdin(&["encode"], stdout_of(&decoded));
    assert_exit(&encoded, 0);
    assert_eq!(stdout_of(&encoded), "2,1,3\n");
}

#[test]
fn decode_rejects_bad_literals() {
    let output = run(&["decode", "2,x,1"]);
    assert_exit(&output, 2);
    assert!(stderr_of(&output).contains("not a non-negative integer"));
}

#[test]
fn encode_handles_graph6_streams() {
    let graph6 = run(&["enumerate", "6", "--format", "graph6"]);
    assert_exit(&graph6, 0);
    let encoded = run_with_stdin(&["encode", "--format", "graph6"], stdout_of(&graph6));
    assert_exit(&encoded, 0);
    assert_eq!(stdout_of(&encoded), "3\n0,2\n1,1\n0,0,1\n0,1,0\n0,0,0,0\n");
}

#[test]
fn encode_rejects_non_caterpillars_as_domain_errors() {
    let spider = "7\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n";
    let output = run_with_stdin(&["encode"], spider);
    assert_exit(&output, 1);
    assert!(stderr_of(&output).contains("not a caterpillar"));
}

#[test]
fn encode_rejects_malformed_input_as_parse_errors() {
    let output = run_with_stdin(&["encode"], "4\n0 9\n");
    assert_exit(&output, 2);
    assert!(stderr_of(&output).contains("outside 0..4"));
}

#[test]
fn recognize_classifies_every_graph_in_a_stream() {
    let stream = "4\n0 1\n1 2\n2 3\n\n4\n0 1\n0 2\n1 2\n3 0\n\n5\n0 1\n2 3\n";
    let output = run_with_stdin(&["recognize"], stream);
    assert_exit(&output, 1);
    assert_eq!(
        stdout_of(&output),
        "caterpillar 0,0\nnot_a_tree wrong_edge_count\nnot_a_tree wrong_edge_count\n"
    );
}

#[test]
fn recognize_exits_zero_when_all_are_caterpillars() {
    let output = run_with_stdin(&["recognize"], "3\n0 1\n1 2\n");
    assert_exit(&output, 0);
    assert_eq!(stdout_of(&output), "caterpillar 0\n");
}

#[test]
fn recognize_flags_trees_that_are_not_caterpillars() {
    let spider = "7\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n";
    let output = run_with_stdin(&["recognize"], spider);
    assert_exit(&output, 1);
    assert_eq!(stdout_of(&output), "tree_not_caterpillar\n");
}

#[test]
fn bijection_examples_match_documented_output() {
    let cases = [
        (["bijection", "g", "0,2,2,0"], "0,4,0 (N=9, k=3)\n"),
        (["bijection", "f", "1,0,0,1"], "1,0 (N=5, k=2)\n"),
        (["bijection", "f-inv", "1,0"], "1,0,0,1 (N=8, k=4)\n"),
        (["bijection", "g-inv", "0,4,0"], "0,2,2,0 (N=10, k=4)\n"),
        (["bijection", "h", "1,0,1"], "1,1,1 (N=8, k=3)\n"),
        (["bijection", "h", "0,4,0"], "0,5,0 (N=10, k=3)\n"),
        (["bijection", "h-inv", "1,1,1"], "1,0,1 (N=7, k=3)\n"),
    ];
    for (args, want) in cases {
        let output = run(&args);
        assert_exit(&output, 0);
        assert_eq!(stdout_of(&output), want, "args: {args:?}");
    }
}

#[test]
fn bijection_domain_violations_exit_one() {
    let output = run(&["bijection", "f", "1,2,3"]);
    assert_exit(&output, 1);
    assert!(stderr_of(&output).contains("wrong_parity"));
}

#[test]
fn symmetric_prints_count_or_listing() {
    let count = run(&["symmetric", "10", "4"]);
    assert_exit(&count, 0);
    assert_eq!(stdout_of(&count), "3\n");

    let listing = run(&["symmetric", "10", "4", "--list"]);
    assert_exit(&listing, 0);
    assert_eq!(stdout_of(&listing), "0,2,2,0\n1,1,1,1\n2,0,0,2\n");

    let empty = run(&["symmetric", "9", "4"]);
    assert_exit(&empty, 0);
    assert_eq!(stdout_of(&empty), "0\n");
}

#[test]
fn symmetric_rejects_out_of_range_spine_lengths() {
    let output = run(&["symmetric", "10", "9"]);
    assert_exit(&output, 2);
    assert!(stderr_of(&output).contains("outside 1..=8"));
}

#[test]
fn verify_passes_and_prints_census_rows() {
    let output = run(&["verify", "12", "--oracle-max", "8"]);
    assert_exit(&output, 0);
    assert_eq!(
        stdout_of(&output),
        "PASS closed_form_vs_burnside_sum N=3..=12\n\
         PASS stream_counts_vs_class_formulas N=3..=12\n\
         PASS bijection_round_trips N<=12\n\
         3\t1\t1\n\
         4\t2\t2\n\
         5\t3\t3\n\
         6\t6\t6\n\
         7\t11\t10\n\
         8\t23\t20\n\
         PASS census_vs_enumeration N=3..=8\n"
    );
}

#[test]
fn verify_rejects_bad_bounds() {
    let low = run(&["verify", "2"]);
    assert_exit(&low, 2);
    let high = run(&["verify", "8", "--oracle-max", "11"]);
    assert_exit(&high, 2);
    assert!(stderr_of(&high).contains("3..=10"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["count", "3", "--to", "12", "--breakdown"],
        vec!["enumerate", "9"],
        vec!["enumerate", "7", "--format", "graph6"],
        vec!["enumerate", "5", "--format", "dot"],
        vec!["verify", "8", "--oracle-max", "7", "--jobs", "2"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_exit(&first, 0);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
        assert!(
            !first.stdout.contains(&b'\r'),
            "carriage return in output of {args:?}"
        );
    }
}
