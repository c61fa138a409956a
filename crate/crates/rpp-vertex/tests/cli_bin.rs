use std::io::Write;
use std::process::{Command, Output, Stdio};

fn rppv(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rppv"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SHIFTED_PAIR: &str = r#"{"shape":[4,4,3,3,1],
 "blue":{"shape":[4,4,3,3,1],"rows":[[0,0,0,0],[0,0,0,1],[0,0,2],[0,1,4],[0]]},
 "red":{"shape":[4,4,3,3,1],"rows":[[0,0,0,3],[0,0,2,4],[0,1,4],[2,4,4],[3]]}}"#;

#[test]
fn hook_exit_codes() {
    let o = rppv(&["hook", "--shape", "[4,3,1]"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n4 2 1\n6 4 3 1\n");
    assert_eq!(rppv(&["hook", "--shape", "[]"], None).status.code(), Some(0));
    assert_eq!(rppv(&["hook", "--shape", "oops"], None).status.code(), Some(2));
    assert_eq!(rppv(&["hook"], None).status.code(), Some(2));
}

#[test]
fn slide_then_unslide_through_pipes() {
    let o = rppv(&["--format", "json", "slide", "--input", "-"], Some(SHIFTED_PAIR));
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let rpp = stdout(&o);
    assert_eq!(rpp.trim(), r#"{"shape":[4,4,3,3,1],"rows":[[0,0,1,3],[1,2,2,4],[1,4,4],[2,4,4],[3]]}"#);
    let back = rppv(&["--format", "json", "unslide", "--input", "-"], Some(&rpp));
    assert_eq!(back.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
    let want: serde_json::Value = serde_json::from_str(SHIFTED_PAIR).unwrap();
    assert_eq!(v, want);
}

#[test]
fn slide_rejects_interacting_pair() {
    let pair = r#"{"shape":[1],"blue":{"shape":[1],"rows":[[1]]},"red":{"shape":[1],"rows":[[0]]}}"#;
    let o = rppv(&["slide", "--input", "-"], Some(pair));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("t = 0"));
}

#[test]
fn genfun_reports() {
    let o = rppv(&["--format", "json", "genfun", "--shape", "[]", "--max-volume", "4"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["details"]["differences"], serde_json::json!([]));
}

#[test]
fn renders_are_byte_identical() {
    let pair = r#"{"shape":[3,2,1],
      "blue":{"shape":[3,2,1],"rows":[[0,1,1],[1,3],[2]]},
      "red":{"shape":[3,2,1],"rows":[[1,2,3],[1,2],[2]]}}"#;
    let a = rppv(&["--format", "svg", "render", "--object", "pair", "--input", "-"], Some(pair));
    let b = rppv(&["--format", "svg", "render", "--object", "pair", "--input", "-"], Some(pair));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).matches("class=\"coupled\"").count(), 6);
    let m = rppv(&["render", "--object", "maya", "--shape", "[4,3,2,2,1]", "--half-width", "7"], None);
    assert_eq!(stdout(&m), "●●○●○●●|○●○●○○○\n");
    let bad = rppv(&["--format", "svg", "render", "--object", "hooks", "--shape", "[1]"], None);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn two_colour_ybe_reports_failure_honestly() {
    let o = rppv(&["--format", "json", "ybe", "--mode", "two-color", "--samples", "1/2,1/3,2/5"], None);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["details"]["WhiteGray"]["violations"], 135);
    assert_eq!(v["details"]["WhiteGrayShifted"]["violations"], 0);
    assert_eq!(v["details"]["WhiteWhite"]["violations"], 0);
}
