use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use theta_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    theta_string_free(s);
    out
}

unsafe fn space(json: &str) -> *mut ThetaSpace {
    let mut v = ptr::null_mut();
    assert_eq!(theta_space_from_json(cstr(json).as_ptr(), &mut v), ThetaStatus::Ok);
    v
}

const SP4: &str = r#"{"base":"C","division":"C","epsilon":-1,"dim":4}"#;
const O2: &str = r#"{"base":"C","division":"C","epsilon":1,"dim":2}"#;

#[test]
fn enumerate_and_render() {
    unsafe {
        let v = space(SP4);
        let mut n = 0;
        assert_eq!(theta_space_dim(v, &mut n), ThetaStatus::Ok);
        assert_eq!(n, 4);
        let mut list = ptr::null_mut();
        assert_eq!(theta_enumerate_orbits(v, &mut list), ThetaStatus::Ok);
        assert_eq!(theta_list_len(list), 4);
        let mut t = ptr::null_mut();
        assert_eq!(theta_list_get(list, 0, &mut t), ThetaStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(theta_tableau_render(t, &mut s), ThetaStatus::Ok);
        assert!(take(s).starts_with("[4]"));
        let mut dim = 0;
        assert_eq!(theta_tableau_stabilizer_dim(t, &mut dim), ThetaStatus::Ok);
        // the reductive stabilizer of the regular orbit is O(1,C)
        assert_eq!(dim, 0);
        let mut bad = ptr::null_mut();
        assert_eq!(theta_list_get(list, 4, &mut bad), ThetaStatus::IndexOutOfRange);
        theta_tableau_free(t);
        theta_list_free(list);
        theta_space_free(v);
    }
}

#[test]
fn descend_lift_round_trip() {
    unsafe {
        let v = space(O2);
        let vp = space(SP4);
        let mut list = ptr::null_mut();
        assert_eq!(theta_enumerate_orbits(vp, &mut list), ThetaStatus::Ok);
        // [2,2]
        let mut op = ptr::null_mut();
        assert_eq!(theta_list_get(list, 1, &mut op), ThetaStatus::Ok);
        let mut dr = ptr::null_mut();
        assert_eq!(theta_descend(op, v, &mut dr), ThetaStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(theta_descent_to_json(dr, &mut json), ThetaStatus::Ok);
        let value: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!((value["a"].as_u64(), value["b"].as_u64()), (Some(2), Some(0)));
        let mut strict = false;
        assert_eq!(theta_descent_is_strict(dr, &mut strict), ThetaStatus::Ok);
        assert!(strict);
        let mut target = ptr::null_mut();
        assert_eq!(theta_descent_target(dr, &mut target), ThetaStatus::Ok);
        let mut lifted = ptr::null_mut();
        assert_eq!(theta_lift(target, vp, &mut lifted), ThetaStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        theta_tableau_to_json(lifted, &mut a);
        theta_tableau_to_json(op, &mut b);
        assert_eq!(take(a), take(b));
        let mut pf = ptr::null_mut();
        assert_eq!(theta_descent_factorization(dr, &mut pf), ThetaStatus::Ok);
        assert!(take(pf).contains("M_XXp"));
        for t in [op, target, lifted] {
            theta_tableau_free(t);
        }
        theta_descent_free(dr);
        theta_list_free(list);
        theta_space_free(v);
        theta_space_free(vp);
    }
}

#[test]
fn errors_are_structured() {
    unsafe {
        theta_clear_error();
        assert!(theta_last_error().is_null());
        let mut v = ptr::null_mut();
        let st = theta_space_from_json(cstr("{not json").as_ptr(), &mut v);
        assert_eq!(st, ThetaStatus::Parse);
        assert!(v.is_null());
        let e: serde_json::Value = serde_json::from_str(&take(theta_last_error())).unwrap();
        assert_eq!(e["code"], "Parse");
        assert!(e.get("message").is_some() && e.get("context").is_some());

        let st = theta_space_from_json(ptr::null(), &mut v);
        assert_eq!(st, ThetaStatus::NullPointer);

        // the complex [4] in sp(4) is not in the image from o(2)
        let vp = space(SP4);
        let o2 = space(O2);
        let mut list = ptr::null_mut();
        theta_enumerate_orbits(vp, &mut list);
        let mut top = ptr::null_mut();
        theta_list_get(list, 0, &mut top);
        let mut dr = ptr::null_mut();
        assert_eq!(theta_descend(top, o2, &mut dr), ThetaStatus::NotInImage);
        let e: serde_json::Value = serde_json::from_str(&take(theta_last_error())).unwrap();
        assert_eq!(e["code"], "NotInImage");
        theta_tableau_free(top);
        theta_list_free(list);
        theta_space_free(vp);
        theta_space_free(o2);
    }
}

#[test]
fn convergent_range() {
    unsafe {
        let sp4 = space(r#"{"base":"R","division":"R","epsilon":-1,"dim":4}"#);
        let o5 = space(r#"{"base":"R","division":"R","epsilon":1,"signature":[5,0]}"#);
        let o4 = space(r#"{"base":"R","division":"R","epsilon":1,"signature":[4,0]}"#);
        let one = cstr("1");
        let mut r = false;
        assert_eq!(theta_in_range(one.as_ptr(), sp4, o5, &mut r), ThetaStatus::Ok);
        assert!(r);
        assert_eq!(theta_in_range(one.as_ptr(), sp4, o4, &mut r), ThetaStatus::Ok);
        assert!(!r);
        for s in [sp4, o5, o4] {
            theta_space_free(s);
        }
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(theta_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// Compile and run a small C program against the generated header and the
/// static library.
#[test]
fn c_program_links_against_header() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = root.join("include/theta.h");
    assert!(header.exists(), "header not generated");
    // the test binary lives in target/<profile>/deps
    let deps = std::env::current_exe().unwrap().parent().unwrap().to_path_buf();
    let profile = deps.parent().unwrap();
    let lib = profile.join("libtheta_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let dir = std::env::temp_dir().join(format!("theta-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include "theta.h"
int main(void) {
    ThetaSpace *v = NULL;
    ThetaTableauList *list = NULL;
    if (theta_space_from_json("{\"base\":\"C\",\"division\":\"C\",\"epsilon\":1,\"dim\":4}", &v) != THETA_STATUS_OK) return 10;
    if (theta_enumerate_orbits(v, &list) != THETA_STATUS_OK) return 11;
    printf("%zu\n", theta_list_len(list));
    theta_list_free(list);
    theta_space_free(v);
    if (theta_space_from_json("[]", &v) != THETA_STATUS_PARSE) return 12;
    char *err = theta_last_error();
    printf("%s\n", err);
    theta_string_free(err);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.join("main");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{:?}", out);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    // o(4,C) has the diagrams [3,1], [2,2], [1^4]
    assert_eq!(lines.next(), Some("3"));
    assert!(lines.next().unwrap().contains("\"code\":\"Parse\""));
    let _ = std::fs::remove_dir_all(&dir);
}
