//! End-to-end tests of the latcode binary: exact stdout bytes, exit codes,
//! and error routing to stderr. Exit code 2 (internal invariant breach) has
//! no test because reaching it requires a library bug by construction.

use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> String {
    format!(
        "{}/../core/fixtures/{name}",
        env!("CARGO_MANIFEST_DIR")
    )
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

struct Output {
    status: i32,
    stdout: String,
    stderr: String,
}

fn latcode(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_latcode"))
        .args(args)
        .output()
        .expect("binary runs");
    Output {
        status: out.status.code().expect("no signal"),
        stdout: String::from_utf8(out.stdout).expect("utf8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf8 stderr"),
    }
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("latcode-cli-test-{}-{name}", std::process::id()))
}

#[test]
fn validate_accepts_the_well_formed_fixtures() {
    for f in ["order4.wal", "order8.wal"] {
        let out = latcode(&["validate", &fixture(f)]);
        assert_eq!(out.status, 0, "{f}: {}", out.stderr);
        assert_eq!(out.stdout, "ok\n");
        assert!(out.stderr.is_empty());
    }
}

#[test]
fn validate_lists_order9_axiom_failures_and_exits_nonzero() {
    let out = latcode(&["validate", &fixture("order9.wal")]);
    assert_eq!(out.status, 1);
    assert_eq!(
        out.stdout,
        "join-symmetry violated at (a, f)\n\
         contraposition violated at (a, f)\n\
         implication-chain violated at (f, 0, a)\n"
    );
}

#[test]
fn validate_reports_unreadable_files_on_stderr() {
    let out = latcode(&["validate", "/nonexistent/nowhere.wal"]);
    assert_eq!(out.status, 1);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("cannot read"), "{}", out.stderr);
}

#[test]
fn ideals_lists_canonical_order_and_filters() {
    let all = latcode(&["ideals", &fixture("order4.wal")]);
    assert_eq!(all.status, 0);
    assert_eq!(all.stdout, "{0}\n{0,a}\n{0,b}\n{0,a,b,1}\n");

    let proper = latcode(&["ideals", &fixture("order9.wal"), "--proper"]);
    assert_eq!(proper.status, 0);
    assert_eq!(proper.stdout, "{0,a,b}\n{0,c,f}\n");

    let prime = latcode(&["ideals", &fixture("order8.wal"), "--proper", "--prime"]);
    assert_eq!(prime.status, 0);
    assert_eq!(
        prime.stdout,
        "{0,a}\n{0,b}\n{0,d}\n{0,a,b,c}\n{0,a,d,e}\n{0,b,d,f}\n"
    );

    let bits = latcode(&["ideals", &fixture("order4.wal"), "--proper", "--bits"]);
    assert_eq!(bits.stdout, "1100\n1010\n");
}

#[test]
fn fuzzy_check_prints_four_agreeing_verdicts() {
    let yes = latcode(&[
        "fuzzy",
        "check",
        &fixture("order4.wal"),
        &data("chi_0a.fz"),
    ]);
    assert_eq!(yes.status, 0);
    assert_eq!(
        yes.stdout,
        "uplus: yes\nresidual: yes\nboxplus: yes\nbound: yes\n"
    );

    let no = latcode(&[
        "fuzzy",
        "check",
        &fixture("order4.wal"),
        &data("not_ideal.fz"),
    ]);
    assert_eq!(no.status, 0);
    assert_eq!(no.stdout, "uplus: no\nresidual: no\nboxplus: no\nbound: no\n");
}

#[test]
fn fuzzy_close_prints_the_least_fuzzy_ideal_above_the_input() {
    let out = latcode(&["fuzzy", "close", &fixture("order4.wal"), &data("rough.fz")]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout, "0 = 1\na = 1\nb = 1/3\n1 = 1/3\n");
}

#[test]
fn fuzzy_arrow_defaults_to_the_spanning_grid() {
    let out = latcode(&[
        "fuzzy",
        "arrow",
        &fixture("order4.wal"),
        &data("chi_0a.fz"),
        &data("chi_0b.fz"),
    ]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "0 = 1\na = 0\nb = 1\n1 = 0\n");

    let with_grid = latcode(&[
        "fuzzy",
        "arrow",
        &fixture("order4.wal"),
        &data("chi_0a.fz"),
        &data("chi_0b.fz"),
        "--grid",
        "0,1/2,1",
    ]);
    assert_eq!(with_grid.stdout, out.stdout);
}

#[test]
fn fuzzy_laws_reports_every_axiom_as_passing_on_the_square() {
    let out = latcode(&[
        "fuzzy",
        "laws",
        &fixture("order4.wal"),
        "--grid",
        "0,1/2,1",
        "--tsv",
    ]);
    assert_eq!(out.status, 0);
    assert!(!out.stdout.is_empty());
    for line in out.stdout.lines() {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 3, "line: {line}");
        assert_eq!(cols[1], "PASS", "line: {line}");
        assert_eq!(cols[2], "-", "line: {line}");
    }
}

#[test]
fn fuzzy_arrow_respects_the_enumeration_budget() {
    let out = latcode(&[
        "fuzzy",
        "laws",
        &fixture("order9.wal"),
        "--grid",
        "0,1/4,1/2,3/4,1",
    ]);
    assert_eq!(out.status, 1);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("exceeds the budget"), "{}", out.stderr);
}

#[test]
fn code_from_ideals_defaults_to_proper_ideals() {
    let out = latcode(&["code", "from-ideals", &fixture("order4.wal")]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout, "1100\n1010\n[4,2,2]_2 rate=1/2\n");
}

#[test]
fn code_from_ideals_accepts_an_explicit_ideal_list() {
    let out = latcode(&[
        "code",
        "from-ideals",
        &fixture("order8.wal"),
        "--ideals",
        "0,a,b,c;0,a,d,e;0,b,d,f",
    ]);
    assert_eq!(out.status, 0);
    assert_eq!(
        out.stdout,
        "11110000\n11001100\n10101010\n[8,3,4]_2 rate=3/8\n"
    );

    let bad = latcode(&[
        "code",
        "from-ideals",
        &fixture("order4.wal"),
        "--ideals",
        "0,1",
    ]);
    assert_eq!(bad.status, 1);
    assert!(bad.stderr.contains("not an ideal"), "{}", bad.stderr);

    let unknown = latcode(&[
        "code",
        "from-ideals",
        &fixture("order4.wal"),
        "--ideals",
        "0,z",
    ]);
    assert_eq!(unknown.status, 1);
    assert!(unknown.stderr.contains("unknown element"), "{}", unknown.stderr);
}

#[test]
fn code_hadamard_prints_ideals_matrix_and_params() {
    let out = latcode(&["code", "hadamard", "--order", "2"]);
    assert_eq!(out.status, 0);
    assert_eq!(
        out.stdout,
        "# ideal {00,01}\n# ideal {00,10}\n1100\n1010\n[4,2,2]_2 rate=1/2\n"
    );
}

#[test]
fn code_boolean_form_emits_a_plain_matrix_file() {
    let out = latcode(&["code", "boolean-form", "--order", "2"]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout, "1100\n1010\n");
}

#[test]
fn code_construct_output_parses_back_as_a_valid_algebra() {
    let m = latcode(&["code", "boolean-form", "--order", "3"]);
    assert_eq!(m.status, 0);
    let matrix_file = temp_path("mb3.mat");
    std::fs::write(&matrix_file, &m.stdout).unwrap();

    let built = latcode(&["code", "construct", "--matrix", matrix_file.to_str().unwrap()]);
    assert_eq!(built.status, 0, "{}", built.stderr);
    assert!(built.stdout.contains("kind: wajsberg"));
    assert!(built
        .stdout
        .contains("# ideal {000,001,010,011} codeword 11110000"));

    // the construct output is itself a readable algebra file
    let algebra_file = temp_path("rebuilt.wal");
    std::fs::write(&algebra_file, &built.stdout).unwrap();
    let check = latcode(&["validate", algebra_file.to_str().unwrap()]);
    assert_eq!(check.status, 0, "{}", check.stderr);
    assert_eq!(check.stdout, "ok\n");

    std::fs::remove_file(matrix_file).ok();
    std::fs::remove_file(algebra_file).ok();
}

#[test]
fn code_construct_rejects_non_block_matrices() {
    let out = latcode(&["code", "construct", "--matrix", &data("notblock.mat")]);
    assert_eq!(out.status, 1);
    assert!(
        out.stderr.contains("row 1 does not follow"),
        "{}",
        out.stderr
    );
}

#[test]
fn code_params_and_roweq_answer_matrix_queries() {
    let params = latcode(&["code", "params", "--matrix", &data("mb2.mat")]);
    assert_eq!(params.status, 0);
    assert_eq!(params.stdout, "[4,2,2]_2 rate=1/2\n");

    let same = latcode(&["code", "roweq", &data("mb2.mat"), &data("mb2_swapped.mat")]);
    assert_eq!(same.status, 0);
    assert_eq!(same.stdout, "row-equivalent: yes\n");

    let diff = latcode(&["code", "roweq", &data("mb2.mat"), &data("noneq.mat")]);
    assert_eq!(diff.status, 0);
    assert_eq!(diff.stdout, "row-equivalent: no\n");
}

#[test]
fn code_even_ideals_reports_params_and_distance_flag() {
    let out = latcode(&["code", "even-ideals", &fixture("order8.wal")]);
    assert_eq!(out.status, 0);
    assert_eq!(
        out.stdout,
        "# ideal {0,a,b,c}\n# ideal {0,a,d,e}\n# ideal {0,b,d,f}\n\
         # ideal {0,a}\n# ideal {0,b}\n# ideal {0,d}\n\
         11110000\n11001100\n10101010\n11000000\n10100000\n10001000\n\
         [8,6,2]_2 rate=3/4\ndistance>=3: no\n"
    );

    let nine = latcode(&["code", "even-ideals", &fixture("order9.wal")]);
    assert_eq!(nine.status, 0);
    assert!(nine.stdout.ends_with("[9,2,3]_2 rate=2/9\ndistance>=3: yes\n"));
}

#[test]
fn simulate_is_deterministic_and_exact_at_probability_zero() {
    let args = [
        "simulate",
        "--matrix",
        &data("mb2.mat"),
        "--p",
        "1/10",
        "--trials",
        "200",
        "--seed",
        "7",
    ];
    let first = latcode(&args);
    let second = latcode(&args);
    assert_eq!(first.status, 0, "{}", first.stderr);
    assert_eq!(first.stdout, second.stdout, "same seed, same bytes");
    assert!(first.stdout.starts_with("# rng=chacha8\n"));

    let clean = latcode(&[
        "simulate",
        "--matrix",
        &data("mb2.mat"),
        "--p",
        "0",
        "--trials",
        "100",
        "--seed",
        "7",
    ]);
    assert_eq!(clean.status, 0);
    let last = clean.stdout.lines().last().unwrap();
    assert_eq!(last, "100\t100\t0\t0\t7\t0");
}

#[test]
fn simulate_rejects_probability_one_or_more() {
    let out = latcode(&[
        "simulate",
        "--matrix",
        &data("mb2.mat"),
        "--p",
        "3/2",
        "--trials",
        "10",
        "--seed",
        "1",
    ]);
    assert_eq!(out.status, 1);
    assert!(out.stderr.contains("probability"), "{}", out.stderr);
}
