use tzeta::cli::{run, EXIT_PASS, EXIT_USAGE};
use tzeta::FormalSum;

fn tz(args: &str) -> (u8, String) {
    run(std::iter::once("tzeta").chain(args.split_whitespace()))
}

#[test]
fn st_prints_display_form() {
    let (code, out) = tz("st --word 2,1");
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out.trim(), "z2z1 + t·z3");
}

#[test]
fn printed_sums_reparse() {
    for args in [
        "st --word 2,1,1",
        "st --word 1,1,1,1",
        "expand --index 3,1,2",
        "product --mode t --left 1 --right 1,1",
        "product --mode star --left 2,1 --right 1,2",
        "product --mode harmonic --left 3 --right 2",
    ] {
        let (code, out) = tz(args);
        assert_eq!(code, EXIT_PASS, "{args}");
        let parsed: FormalSum = out.trim().parse().unwrap();
        assert_eq!(parsed.to_string(), out.trim(), "{args}");

        let (_, json) = tz(&format!("--json {args}"));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let record: FormalSum = v["result"].as_str().unwrap().parse().unwrap();
        assert_eq!(record, parsed, "{args}");
    }
}

#[test]
fn product_modes() {
    assert_eq!(
        tz("product --mode t --left 1 --right 1").1.trim(),
        "2·z1z1 + (1 - 2t)·z2"
    );
    assert_eq!(
        tz("product --mode star --left 1 --right 1").1.trim(),
        "2·z1z1 - z2"
    );
    assert_eq!(
        tz("product --mode harmonic --left 1 --right 1").1.trim(),
        "2·z1z1 + z2"
    );
    assert_eq!(tz("product --mode bogus --left 1 --right 1").0, EXIT_USAGE);
}

#[test]
fn eval_prints_value_and_error() {
    let (code, out) = tz("eval --index 3 --t 0 --M 100000");
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("value=1.20205690"), "{out}");
    assert!(out.contains("err="), "{out}");

    let (code, out) = tz("--json eval --index 2,1 --t 1/2 --M 10000");
    assert_eq!(code, EXIT_PASS);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["t"], "1/2");
    assert_eq!(v["M"], 10000);
    assert!(v["err"].as_f64().unwrap() > 0.0);

    let (code, _) = tz("eval --index 2 --t -1/3");
    assert_eq!(code, EXIT_PASS);
}

#[test]
fn usage_errors_exit_2() {
    let (code, out) = tz("eval --index 1,2 --t 0");
    assert_eq!(code, EXIT_USAGE);
    assert!(out.contains("divergent"), "{out}");
    for args in [
        "st --word 2,x",
        "st --word 0,1",
        "expand --index ,",
        "eval --index 3 --t 0.5",
        "eval --index 3 --M 2",
        "verify sum-formula --k 1",
        "verify two-one --j 0,1",
        "verify cyclic",
        "frobnicate",
        "",
    ] {
        assert_eq!(tz(args).0, EXIT_USAGE, "{args}");
    }
    assert_eq!(tz("--help").0, EXIT_PASS);
}

#[test]
fn verify_suites_pass() {
    let (code, out) = tz("verify sum-formula --k 4");
    assert_eq!(code, EXIT_PASS, "{out}");
    assert!(
        out.lines().filter(|l| l.starts_with("PASS")).count() == 6,
        "{out}"
    );
    assert!(out.contains("certificate ["), "{out}");

    let (code, out) = tz("verify sum-formula --k 5 --numeric --t 1/2,-1 --M 100000");
    assert_eq!(code, EXIT_PASS, "{out}");
    assert!(out.contains("numeric sum-formula k=5 n=3 t=-1"), "{out}");

    assert_eq!(tz("verify cyclic --k 5").0, EXIT_PASS);
    assert_eq!(tz("verify cyclic --k 4 --numeric").0, EXIT_PASS);
    assert_eq!(tz("verify alt-sum --word 1,2,1").0, EXIT_PASS);
    assert_eq!(tz("verify two-one --j 1,1 --M 100000").0, EXIT_PASS);

    let (code, out) = tz("--json verify cyclic --k 3");
    assert_eq!(code, EXIT_PASS);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["checks"][0]["certificate"]["coefficients"].is_array());
}
