use std::io::Write;
use std::process::{Command, Output};

fn superleib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superleib"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> (serde_json::Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = superleib(&all);
    (
        serde_json::from_slice(&o.stdout).expect("one JSON document"),
        o.status.code().unwrap(),
    )
}

fn alg_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".alg").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn check_osp12_passes() {
    let (r, code) = json(&["check", "osp12"]);
    assert_eq!(code, 0);
    assert_eq!(r["passed"], true);
    assert_eq!(r["properties"]["lie superalgebra"], true);
    let names: Vec<&str> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        [
            "leibniz",
            "grading",
            "form supersymmetric",
            "form invariant"
        ]
    );
}

#[test]
fn check_corrupted_file_lists_counterexample() {
    let f = alg_file(
        "format 1\nkind leibniz\nbasis e:0 h:0 f:0\n\
         bracket h e = 2 e\nbracket e h = -2 e\nbracket h f = -2 f\nbracket f h = 2 f\n\
         bracket e f = 1 h\nbracket f e = -1 h\n\
         # corrupted entry\nbracket e e = 1 f\n",
    );
    let (r, code) = json(&["check", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    let leibniz = &r["checks"][0];
    assert_eq!(leibniz["passed"], false);
    let first = &leibniz["counterexamples"][0];
    assert_eq!(first["indices"], serde_json::json!(["e", "e", "e"]));
    assert_eq!(first["residual"], "-1 h");
}

#[test]
fn check_trunc_poly_dialgebra() {
    let (r, code) = json(&["check", "trunc_poly:3"]);
    assert_eq!(code, 0);
    assert_eq!(r["properties"]["commutative"], true);
    assert_eq!(r["checks"][0]["name"], "dialgebra");
}

#[test]
fn check_free_uses_max_degree() {
    let (r, code) = json(&["check", "free_leibniz:01", "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert_eq!(r["dimensions"]["truncation"], 30);
    assert!(r["checks"][0]["skipped"].as_u64().unwrap() > 0);
}

#[test]
fn parse_error_exits_2_with_position() {
    let f = alg_file("format 1\nkind leibniz\nbasis a:0\nbracket a a = 0.5 a\n");
    let o = superleib(&["check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("line 4, column 15"));
    assert_eq!(
        superleib(&["check", "no_such_entry"]).status.code(),
        Some(2)
    );
}

#[test]
fn cohomology_examples() {
    let (r, code) = json(&["cohomology", "sl2xPoly:3", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["dimensions"]["HL2"], 2);
    assert_eq!(r["dimensions"]["HL2 even"], 2);

    let (r, _) = json(&[
        "cohomology",
        "osp12",
        "--n",
        "1",
        "--coefficients",
        "adjoint",
    ]);
    assert_eq!(r["dimensions"]["HL1"], 0);

    let (r, _) = json(&["cohomology", "abelian:2", "--n", "2"]);
    assert_eq!(r["dimensions"]["Z2"], 4);
    assert_eq!(r["dimensions"]["B2"], 0);
    assert_eq!(r["dimensions"]["HL2"], 4);

    assert_eq!(
        superleib(&["cohomology", "osp12", "--n", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn uce_examples() {
    let o = superleib(&["uce", "sl2xPoly:3", "--compare-omega"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("dim kernel: 2"));
    assert!(text.contains("dim omega: 2"));
    assert!(text.contains("MATCH"));

    let o = superleib(&["uce", "abelian:2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("not perfect"));

    let (r, code) = json(&["uce", "osp12"]);
    assert_eq!(code, 0);
    assert_eq!(r["dimensions"]["kernel"], 0);
}

#[test]
fn omega_examples() {
    let (r, _) = json(&["omega", "trunc_poly:4"]);
    assert_eq!(r["dimensions"]["omega"], 3);
    assert_eq!(r["dimensions"]["omega mod dD"], 0);

    let (r, _) = json(&["omega", "trunc_poly:1"]);
    assert_eq!(r["dimensions"]["omega"], 0);

    let (r, code) = json(&["omega", "tensor:trunc_poly:2,trunc_poly:2"]);
    assert_eq!(code, 0);
    let up = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "universal property")
        .unwrap();
    assert_eq!(up["passed"], true);
}

#[test]
fn omega_rejects_non_commutative() {
    let f = alg_file(
        "format 1\nkind dialgebra\nbasis 1:0 x:0\n\
         left 1 1 = 1 1\nright 1 1 = 1 1\nleft 1 x = 1 x\nright 1 x = 1 x\n\
         left x 1 = 1 x\nright x 1 = 1 x\nleft x x = 1 x\nright x x = 1 x\n",
    );
    let o = superleib(&["omega", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let f = alg_file(
        "format 1\nkind dialgebra\nbasis a:0 b:0\n\
         left a a = 1 a\nright a a = 1 a\nleft a b = 1 b\nright a b = 1 b\n",
    );
    let o = superleib(&["omega", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("not commutative"));
}

#[test]
fn catalog_lists_entries() {
    let o = superleib(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for name in ["osp12", "sl_mn:m:n", "trunc_poly:N", "tensor:A,B"] {
        assert!(text.contains(name), "{name}");
    }
}

#[test]
fn reports_are_deterministic() {
    for args in [
        ["check", "osp12"],
        ["uce", "sl2xPoly:2"],
        ["omega", "trunc_poly:3"],
    ] {
        let a = superleib(&[args[0], args[1], "--json"]);
        let b = superleib(&[args[0], args[1], "--json"]);
        assert_eq!(a.stdout, b.stdout);
        assert!(!String::from_utf8_lossy(&a.stdout).contains("wall_time_ms"));
    }
    let (r, _) = json(&["check", "osp12", "--timing"]);
    assert!(r["wall_time_ms"].is_u64());
}
