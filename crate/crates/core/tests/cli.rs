use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use theta_core::orbits::AdmissibleTableau;
use theta_core::theta::DescentResult;

const SP4: &str = r#"{"base":"C","division":"C","epsilon":-1,"dim":4}"#;
const O2: &str = r#"{"base":"C","division":"C","epsilon":1,"dim":2}"#;

fn theta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_theta")).args(args).output().unwrap()
}

fn theta_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_theta"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn error(o: &Output) -> Value {
    serde_json::from_slice(&o.stderr).unwrap()
}

fn partition(space: &str, p: &str) -> String {
    format!(r#"{{"space":{space},"partition":{p}}}"#)
}

#[test]
fn orbits_of_sp4() {
    let o = theta(&["orbits", "--space", SP4, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let list: Vec<AdmissibleTableau> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(list.len(), 4);
    let text = theta(&["orbits", "--space", SP4]);
    assert!(stdout(&text).starts_with("4 orbits"));
}

#[test]
fn descend_json_round_trips() {
    let op = partition(SP4, "[2,2]");
    let o = theta(&["descend", "--orbit-prime", &op, "--target-space", O2, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let dr: DescentResult = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((dr.a, dr.b), (2, 0));
    assert_eq!(serde_json::to_value(&dr).unwrap(), serde_json::from_slice::<Value>(&o.stdout).unwrap());
    let text = stdout(&theta(&["descend", "--orbit-prime", &op, "--target-space", O2]));
    assert!(text.contains("[2^2]") && text.contains("->") && text.contains("a = 2, b = 0"));
}

#[test]
fn stdin_payloads() {
    let o = theta_stdin(&["orbits", "--space", "-", "--json"], SP4);
    assert_eq!(o.status.code(), Some(0));
    let list: Vec<Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(list.len(), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(theta(&["--help"]).status.code(), Some(0));
    assert_eq!(theta(&["--version"]).status.code(), Some(0));
    assert_eq!(theta(&["orbits"]).status.code(), Some(1));
    assert_eq!(theta(&["orbits", "--space", SP4, "--bogus"]).status.code(), Some(1));

    let o = theta(&["orbits", "--space", "{"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(error(&o)["code"], "Parse");

    let o = theta(&["orbits", "--space", r#"{"base":"C","division":"C","epsilon":-1,"dim":3}"#]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(error(&o)["code"], "InvalidSpace");

    // [4] in sp(4) is not in the image from o(2)
    let o = theta(&["descend", "--orbit-prime", &partition(SP4, "[4]"), "--target-space", O2]);
    assert_eq!(o.status.code(), Some(2));
    let e = error(&o);
    assert_eq!(e["code"], "NotInImage");
    assert!(e.get("message").is_some() && e.get("context").is_some());
}

#[test]
fn malformed_tableau_is_input_error() {
    let bad = r#"{"space":{"base":"C","division":"C","epsilon":-1,"dim":4},
        "rows":[{"t":2,"mult":{"base":"C","division":"C","epsilon":-1,"dim":2}}]}"#;
    let o = theta(&["stabilizer", "--orbit", bad]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(error(&o)["code"], "BadSign");
}

#[test]
fn lift_stabilizer_whittaker_pair_factor() {
    let zero_o2 = partition(O2, "[1,1]");
    let o = theta(&["lift", "--orbit", &zero_o2, "--target-space", SP4, "--json"]);
    let l: AdmissibleTableau = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(l.diagram(), vec![2, 2]);

    let o = theta(&["stabilizer", "--orbit", &partition(SP4, "[2,2]"), "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lie_dim"], 1);

    let o = theta(&["whittaker", "--orbit", &partition(SP4, "[2,1,1]"), "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["heisenberg_case"], true);

    let o = theta(&["pair-factor", "--orbit-prime", &partition(SP4, "[2,2]"), "--target-space", O2, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["factorization"].get("M_XXp").is_some());
}

#[test]
fn cycle_lift_and_range() {
    let sp2 = r#"{"base":"R","division":"R","epsilon":-1,"dim":2}"#;
    let o21 = r#"{"base":"R","division":"R","epsilon":1,"signature":[2,1]}"#;
    let orbits: Vec<AdmissibleTableau> =
        serde_json::from_slice(&theta(&["orbits", "--space", sp2, "--json"]).stdout).unwrap();
    let regular: Vec<&AdmissibleTableau> = orbits.iter().filter(|t| t.diagram() == vec![2]).collect();
    assert_eq!(regular.len(), 2);
    let complex3 = partition(r#"{"base":"C","division":"C","epsilon":1,"dim":3}"#, "[3]");
    let cycle = serde_json::json!({
        "complex_orbit": theta_core::orbits::complex_orbit(theta_core::Epsilon::Minus, &[2]).unwrap(),
        "real_space": serde_json::from_str::<Value>(sp2).unwrap(),
        "terms": [{"orbit": regular[0], "mult": 3}, {"orbit": regular[1], "mult": 5}],
    });
    let o = theta(&["cycle-lift", "--orbit-prime", &complex3, "--cycle", &cycle.to_string(), "--target-space", o21, "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let total: u64 = v["terms"].as_array().unwrap().iter().map(|t| t["mult"].as_u64().unwrap()).sum();
    assert!(total <= 8);

    let sp4r = r#"{"base":"R","division":"R","epsilon":-1,"dim":4}"#;
    let o5 = r#"{"base":"R","division":"R","epsilon":1,"signature":[5,0]}"#;
    let o = theta(&["range", "--space", sp4r, "--target-space", o5, "--nu", "1", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["in_range"], true);
    assert_eq!(v["threshold"], "3/4");
}

#[test]
fn verify_is_deterministic() {
    let run = |seed: &str| stdout(&theta(&["verify", "--suite", "lift", "--max-dims", "3,4", "--seed", seed, "--json"]));
    let strip = |s: String| {
        let mut v: Value = serde_json::from_str(&s).unwrap();
        for r in v["reports"].as_array_mut().unwrap() {
            r["millis"] = Value::Null;
        }
        v
    };
    assert_eq!(strip(run("5")), strip(run("5")));
    let o = theta(&["verify", "--suite", "dim-identity", "--max-dims", "4,6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all pairs pass"));
    assert_eq!(theta(&["verify", "--suite", "nope"]).status.code(), Some(1));
    assert_eq!(theta(&["verify", "--max-dims", "4"]).status.code(), Some(1));
}
