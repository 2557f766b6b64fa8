use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gc"))
        .args(args)
        .output()
        .expect("run gc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_json_shape() {
    let o = gc(&["eval", "card(ap(2,2))", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["input"], "card(ap(2,2))");
    assert_eq!(v["value"], "G/2");
    assert_eq!(v["type"], "number");
}

#[test]
fn exit_codes() {
    assert_eq!(gc(&["eval", "1 + 1"]).status.code(), Some(0));
    assert_eq!(gc(&["eval", "G/0"]).status.code(), Some(1));
    assert_eq!(gc(&["eval", "(1 +"]).status.code(), Some(2));
}

#[test]
fn errors_as_json() {
    let o = gc(&["--json", "eval", "2^(G + G^(-G)) < 2^G"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["error"]["kind"], "Undetermined");
    assert!(v["error"]["detail"].is_string());
    let o = gc(&["--json", "eval", "card("]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["error"]["kind"], "SyntaxError");
}

#[test]
fn oracle_flag() {
    let o = gc(&["--oracle", "L=27720", "eval", "card({3,4,5,69} | (ap(4,5) & ap(3,11)))"]);
    let out = stdout(&o);
    assert!(out.starts_with("G/55 + 3\n"), "{out}");
    assert!(out.contains("symbolic 507 = brute 507: match"), "{out}");
    let o = gc(&["--json", "--oracle", "L=100", "eval", "2*G + 1"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["oracle"]["subst"], "201");
    assert_eq!(gc(&["--oracle", "L=x", "eval", "1"]).status.code(), Some(2));
}

#[test]
fn run_script_with_bindings() {
    let dir = std::env::temp_dir().join(format!("gc-script-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b.gc");
    std::fs::write(
        &path,
        "# the set B\nlet B1 = ap(4,5)\nlet B2 = ap(3,11)\n\ncard({3,4,5,69} | (B1 & B2))\n",
    )
    .unwrap();
    let o = gc(&["run", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ap(4, 5)\nap(3, 11)\nG/55 + 3\n");
    std::fs::write(&path, "1 + 1\nG/0\n").unwrap();
    assert_eq!(gc(&["run", path.to_str().unwrap()]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn repl_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gc"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"let x = G/2\nx + x\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "G/2\nG\n");
}

#[test]
fn check_command() {
    let o = gc(&["check", "--seed", "5", "--cases", "25"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("25/25 passed"));
}
