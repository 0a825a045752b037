use std::process::{Command, Output};

fn wreath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreath"))
        .args(args)
        .output()
        .expect("spawn wreath")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn stats_of_worked_example() {
    let o = wreath(&[
        "stats",
        "--N",
        "3",
        "--perm",
        "1^2,4^0,8^1,6^0,5^2,3^2,7^0,2^1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["des_set"], serde_json::json!([2, 4, 5, 7]));
    assert_eq!(v["des"], 4);
    assert_eq!(v["des_star"], 5);
    assert_eq!(v["exc"], 2);
    assert_eq!(v["fix"], serde_json::json!([1, 0, 2]));
    assert_eq!(v["col"], serde_json::json!([2, 3]));
}

#[test]
fn signed_carlitz_check_passes() {
    let o = wreath(&["verify", "cor1-10", "--nmax", "3", "--pmax", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "ok");
    assert!(v["elapsed_ms"].is_null());
}

#[test]
fn qsym_of_empty_permutation_is_one() {
    let o = wreath(&[
        "qsym", "--N", "2", "--n", "0", "--j", "0", "--alpha", "0,0", "--beta", "0", "--vars", "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn qsym_json_roundtrips_through_text() {
    let o = wreath(&[
        "qsym", "--N", "1", "--n", "2", "--j", "1", "--alpha", "0", "--vars", "2", "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let p = wreath_eulerian::Poly::from_json(&v).unwrap();
    assert_eq!(p.to_string(), "x2^2 + x1*x2 + x1^2");
}

#[test]
fn enumerate_csv_has_one_row_per_element() {
    let o = wreath(&["enumerate", "--N", "2", "--n", "3", "--stats", "maj,fix"]);
    assert_eq!(o.status.code(), Some(0));
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(
        r.headers().unwrap().iter().collect::<Vec<_>>(),
        ["word", "maj", "fix_0", "fix_1"]
    );
    assert_eq!(r.records().count(), 48);
}

#[test]
fn validation_errors_exit_two() {
    for args in [
        &["stats", "--N", "2", "--perm", "1,1"][..],
        &["verify", "no-such-identity"],
        &["enumerate", "--N", "2", "--n", "2", "--stats", "inv"],
        &[
            "qsym", "--N", "2", "--n", "2", "--j", "0", "--alpha", "0", "--vars", "2",
        ],
        &["frobnicate"],
    ] {
        assert_eq!(wreath(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn resource_guard_exits_three() {
    let o = Command::new(env!("CARGO_BIN_EXE_wreath"))
        .args(["enumerate", "--N", "2", "--n", "4"])
        .env("WREATH_RESOURCE_BOUND", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["distribution", "--N", "2", "--n", "3", "--with-p"][..],
        &["verify", "lemma-2", "--N", "2", "--nmax", "3"],
        &[
            "enumerate",
            "--N",
            "3",
            "--n",
            "2",
            "--format",
            "json",
            "--jobs",
            "2",
        ],
    ] {
        let a = wreath(args);
        let b = wreath(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
