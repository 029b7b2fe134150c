use std::process::Command;

fn n2sl2(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_n2sl2")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn relaxed_norm() {
    let (code, out, _) = n2sl2(&["norms", "--j", "1/2", "--Lambda", "3", "--n", "-1"]);
    assert_eq!((code, out.trim()), (0, "4"));
}

#[test]
fn identity_flow() {
    let (code, out, _) = n2sl2(&["flow", "--algebra", "n2", "--theta", "0", "--mode", "H0"]);
    assert_eq!((code, out.trim()), (0, "H0"));
}

#[test]
fn singular_report_json() {
    let args = [
        "singular", "--module", "topological", "--h", "sym:h-minus:1:1", "--t", "symbolic", "--max-level", "1",
        "--format", "json",
    ];
    let (code, out, _) = n2sl2(&args);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "n2sl2.singular/1");
    let vecs = v["vectors"].as_array().unwrap();
    assert_eq!(vecs.len(), 1);
    assert_eq!(vecs[0]["theta"], 1);
    assert_eq!(vecs[0]["verified"], true);
    assert_eq!(vecs[0]["state"][0]["monomial"], "Q-1 v");
    // byte-identical on a second run
    assert_eq!(n2sl2(&args).1, out);
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = n2sl2(&["norms", "--j", "1/x", "--Lambda", "3", "--n", "1"]);
    assert_eq!(code, 2);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("malformed rational"));
    assert_eq!(n2sl2(&["basis", "--module", "nope", "--charge", "0", "--level", "1"]).0, 2);
    assert_eq!(n2sl2(&["norms", "--j", "1/0", "--Lambda", "3", "--n", "1"]).0, 2);
    assert_eq!(n2sl2(&["basis", "--module", "topological", "--h", "1", "--t", "0", "--charge", "0", "--level", "1"]).0, 2);
}

#[test]
fn every_json_output_has_a_schema() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["algebra-check", "--samples", "20"],
        vec!["basis", "--module", "massive", "--h", "1/3", "--l", "2", "--charge", "0", "--level", "1"],
        vec!["gram", "--module", "sl2-verma", "--j", "symbolic", "--k", "3/4", "--charge", "0", "--level", "1"],
        vec!["norms", "--j", "1/2", "--Lambda", "sym:lambda-ch:2", "--n", "3"],
        vec!["flow", "--algebra", "sl2", "--theta", "2", "--mode", "J+0"],
        vec!["diagram", "--module", "relaxed", "--j", "1/3", "--Lambda", "2", "--k", "1"],
        vec!["diagram", "--pictures", "--h", "1/3"],
        vec!["char", "--module", "fock", "--momentum", "0"],
        vec!["equiv", "--theorem", "verma", "--h", "2/7", "--t", "5/3", "--max-level", "1", "--charge-window", "1"],
        vec!["string-verify", "--h", "2/3", "--max-level", "1"],
        vec!["suite", "--only", "11"],
    ];
    for mut args in runs {
        args.extend(["--format", "json"]);
        let (code, out, err) = n2sl2(&args);
        assert_eq!(code, 0, "{args:?}: {err}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v["schema"].as_str().unwrap().starts_with("n2sl2."), "{args:?}");
    }
}

#[test]
fn dot_and_csv() {
    let (_, dot, _) = n2sl2(&["diagram", "--module", "topological", "--h", "1/5", "--format", "dot"]);
    assert!(dot.starts_with("digraph") && dot.contains("\"0,0,Topological(0)\""));
    let (_, csv, _) = n2sl2(&["char", "--module", "fock", "--momentum", "0", "--max-level", "4", "--charge-window", "0", "--format", "csv"]);
    assert_eq!(csv, "charge,level,dim\n0,0,1\n0,1,1\n0,2,2\n0,3,3\n0,4,5\n");
}

#[test]
fn verification_failure_exits_one() {
    // a generic matter dimension cannot give a topological state, but the
    // massive conditions still hold, so this passes
    let (code, out, _) = n2sl2(&["string-verify", "--h", "2/3", "--delta", "1/5", "--max-level", "0"]);
    assert_eq!(code, 0, "{out}");
    let (code, _, _) = n2sl2(&["suite", "--only", "12"]);
    assert_eq!(code, 2);
}
