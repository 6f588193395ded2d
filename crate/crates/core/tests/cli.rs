use std::process::{Command, Output};

use macforge::report::Report;

fn macforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_formulas_quaternion_passes() {
    let o = macforge(&[
        "verify-formulas",
        "--family",
        "J",
        "--m",
        "1",
        "--exhaustive",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("group_order"));
    assert!(out.contains("unique_involution"));
}

#[test]
fn verify_formulas_h_fixture_in_json() {
    let o = macforge(&[
        "verify-formulas",
        "--family",
        "H",
        "--m",
        "2",
        "--exhaustive",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert!(r.pass);
    let c = r
        .checks
        .iter()
        .find(|c| c.name == "fixture_ab_pow5")
        .unwrap();
    assert_eq!(c.actual, "A^5 B^5 C^2");
}

#[test]
fn sampled_k_at_m3() {
    let o = macforge(&[
        "verify-formulas",
        "--family",
        "K",
        "--m",
        "3",
        "--samples",
        "100000",
        "--seed",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn same_seed_same_json() {
    let args = [
        "verify-formulas",
        "--family",
        "J",
        "--m",
        "2",
        "--samples",
        "3000",
        "--seed",
        "11",
        "--json",
    ];
    let a = Report::from_json(&stdout(&macforge(&args))).unwrap();
    let b = Report::from_json(&stdout(&macforge(&args))).unwrap();
    assert_eq!(a.to_json_untimed(), b.to_json_untimed());
}

#[test]
fn invalid_params_exit_2() {
    for args in [
        &["verify-formulas", "--family", "J", "--m", "0"][..],
        &["verify-formulas", "--family", "J", "--m", "2", "--ell", "2"],
        &["oddp", "--p", "3", "--m", "1", "--ell", "2"],
        &["oddp", "--p", "4"],
        &["aut", "--family", "J", "--m", "3"],
        &["oracle", "--builtin", "Z[1,1]"],
        &["nonsense"],
    ] {
        assert_eq!(macforge(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn cap_exceeded_exit_2() {
    let o = macforge(&["oracle", "--family", "H", "--m", "2", "--max-cosets", "100"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn aut_orders() {
    let o = macforge(&["aut", "--family", "K", "--m", "2", "--filtration", "--json"]);
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(
        r.checks.iter().find(|c| c.name == "aut").unwrap().actual,
        "6144"
    );
    let o = macforge(&["aut", "--family", "J", "--m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(" 32 "));
}

#[test]
fn oddp_examples() {
    let o = macforge(&[
        "oddp", "--p", "3", "--m", "1", "--ell", "1", "--range", "20",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = macforge(&[
        "oddp", "--p", "5", "--m", "1", "--ell", "2", "--range", "10",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn oracle_file_and_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q16.txt");
    std::fs::write(&path, "A^4 = B^2\nb A B A\nA^8\n").unwrap();
    let o = macforge(&["oracle", "--file", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.checks[0].actual, "16");
    let o = macforge(&["oracle", "--builtin", "K[2,1]", "--strategy", "felsch"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn report_writes_and_rerenders() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let empty = Report::new(Default::default());
    std::fs::write(&json, empty.to_json()).unwrap();
    let txt = dir.path().join("r.txt");
    let o = macforge(&[
        "report",
        "--input",
        json.to_str().unwrap(),
        "--out",
        txt.to_str().unwrap(),
        "--text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let body = std::fs::read_to_string(&txt).unwrap();
    assert!(body.contains("PASS: 0 checks"));

    let out = dir.path().join("again.json");
    macforge(&[
        "report",
        "--input",
        json.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(
        Report::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap(),
        empty
    );
}

#[test]
fn failing_report_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("bad.json");
    let mut r = Report::new(Default::default());
    r.check_eq("made_to_fail", 1, 2, 0);
    std::fs::write(&json, r.to_json()).unwrap();
    let out = dir.path().join("o.txt");
    let o = macforge(&[
        "report",
        "--input",
        json.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--text",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(std::fs::read_to_string(out).unwrap().contains('\u{2717}'));
}
