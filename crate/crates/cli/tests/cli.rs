use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn mull(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mull"))
        .env("MULLINEUX_CACHE_DIR", cache)
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = mull(dir.path(), &["compute", "-e", "3", "3,1,1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3,1,1\n");

    let o = mull(dir.path(), &["fold-cartan", "-e", "5"]);
    assert_eq!(stdout(&o), "2 -2 0\n-1 2 -2\n0 -1 2\n");

    let o = mull(
        dir.path(),
        &["verify", "--kind", "odd", "--ell", "1", "--max-deg", "2"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with("ok")));
}

#[test]
fn command_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str]| stdout(&mull(dir.path(), args));
    assert_eq!(run(&["compute", "-e", "3", "2"]), "1,1\n");
    assert_eq!(run(&["compute", "-e", "3", "-"]), "-\n");
    assert_eq!(
        run(&["fixed", "-e", "3", "-n", "5", "--profile"]),
        "3,1,1 1,2,2\n"
    );
    assert_eq!(
        run(&["fixed", "-e", "3", "-n", "5", "--json"]),
        "{\"partition\":[3,1,1],\"n\":5,\"residue_profile\":[1,2,2]}\n"
    );
    assert_eq!(
        run(&["twisted", "path", "--kind", "odd", "--ell", "1", "2"]),
        "0,1\n"
    );
    assert_eq!(run(&["eta", "--kind", "odd", "--ell", "1", "2"]), "3,1,1\n");
    assert_eq!(run(&["bijection", "dp2sp", "4,2,1"]), "4,3,3,1\n");
    assert_eq!(run(&["bijection", "sp2dp", "2,2"]), "2,1\n");
    assert_eq!(run(&["alt-count", "-e", "3", "-n", "5"]), "4\n");
    let report: serde_json::Value = serde_json::from_str(&run(&[
        "eta", "--kind", "odd", "--ell", "1", "2", "--report",
    ]))
    .unwrap();
    assert_eq!(report["image"], serde_json::json!([3, 1, 1]));
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["frobnicate"][..],
        &["compute", "-e", "3", "1,2"],
        &["compute", "-e", "3", "1,1,1"],
        &["compute", "-e", "1", "1"],
        &["bijection", "dp2sp", "2,2"],
        &["bijection", "sp2dp", "2"],
        &["eta", "--kind", "odd", "--ell", "1", "3"],
        &[
            "crystal", "export", "--kind", "typea", "--bound", "3", "--format", "dot",
        ],
        &["verify", "--kind", "odd", "--ell", "0", "--max-deg", "2"],
    ] {
        let o = mull(dir.path(), args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn crystal_export_to_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("graph.dot");
    let args = [
        "crystal", "export", "--kind", "even", "--ell", "1", "--bound", "5", "--format", "dot",
    ];
    let printed = stdout(&mull(dir.path(), &args));
    let mut with_file = args.to_vec();
    with_file.extend(["-o", file.to_str().unwrap()]);
    let o = mull(dir.path(), &with_file);
    assert!(o.status.success() && o.stdout.is_empty());
    assert_eq!(fs::read_to_string(&file).unwrap(), printed);
    assert!(printed.starts_with("digraph even_ell1 {"));
}

#[test]
fn corrupted_cache_entries_are_regenerated() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["fixed", "-e", "3", "-n", "11", "--json"];
    let clean = stdout(&mull(dir.path(), &args));
    let entry = dir.path().join("fixed-e3-n11.cache");
    let text = fs::read_to_string(&entry).unwrap();
    let (sum, payload) = text.split_once('\n').unwrap();
    assert_eq!(sum.len(), 64);
    assert!(!payload.is_empty());

    fs::write(&entry, text.replace("11", "12")).unwrap();
    assert_eq!(stdout(&mull(dir.path(), &args)), clean);
    assert_eq!(fs::read_to_string(&entry).unwrap(), text);

    fs::write(&entry, "garbage").unwrap();
    assert_eq!(stdout(&mull(dir.path(), &args)), clean);
}

#[test]
fn no_cache_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let o = mull(dir.path(), &["--no-cache", "fixed", "-e", "3", "-n", "8"]);
    assert!(o.status.success());
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}
