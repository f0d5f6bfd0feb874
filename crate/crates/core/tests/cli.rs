use conewalk::cli::dispatch;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("conewalk").chain(args.iter().copied());
    let code = dispatch(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn tildel_of_central_generator() {
    let (code, out, _) = run(&["heis", "tildel", "1", "0", "0"]);
    assert_eq!((code, out.trim()), (0, "2"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["balls", "--group", "heisenberg", "--depth", "-1"]).0, 2);
    assert_eq!(run(&["verify"]).0, 2);
    assert_eq!(run(&["verify", "--suite", ""]).0, 2);
    assert_eq!(run(&["heis", "bogus"]).0, 2);
    assert_eq!(run(&["trace", "eval", "--spec", "lower:1,0", "--node", "0,0,0,0"]).0, 2);
}

#[test]
fn resource_cap_exits_three() {
    assert_eq!(run(&["balls", "--group", "heisenberg", "--depth", "8", "--cap", "100"]).0, 3);
}

#[test]
fn partitions_suite_passes() {
    let (code, out, _) = run(&["verify", "--suite", "partitions"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 2);
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["verify", "--suite", "bratteli", "--format", "json"]);
    let b = run(&["verify", "--suite", "bratteli", "--format", "json"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let v: serde_json::Value = serde_json::from_str(&a.1).unwrap();
    for key in ["check_id", "paper_ref", "status", "measured", "expected", "tolerance"] {
        assert!(v[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn small_commands() {
    assert_eq!(run(&["heis", "interval", "0", "0", "4"]).1.trim(), "[-1, 1]");
    assert_eq!(run(&["partitions", "p3", "5", "3", "4"]).1.trim(), "4");
    assert_eq!(run(&["trace", "eval", "--spec", "upper:2,3", "--node", "3,2,3,5"]).1.trim(), "1/2");
    let (code, out, _) = run(&["balls", "--group", "z2", "--depth", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("2,8,13"));
    let (code, out, _) = run(&["bratteli", "build", "--depth", "3", "--filter", "quadrant"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["levels"][3].as_array().unwrap().len(), 8);
}
