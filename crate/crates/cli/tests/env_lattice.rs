use std::path::PathBuf;

use fuzzbis_cli::run_args;

fn eval(extra: &[&str]) -> String {
    let model = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../models/fan_left.json");
    let mut args = vec!["fuzzbis"];
    args.extend_from_slice(extra);
    let model = model.to_string_lossy().into_owned();
    args.extend(["eval", "--model", &model, "--formula", "[r]p", "--at", "u"]);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(run_args(args, &mut out, &mut err), 0, "{}", String::from_utf8_lossy(&err));
    String::from_utf8(out).unwrap()
}

// The only test in this binary, so setting the variable races with nothing.
#[test]
fn environment_supplies_the_fallback_lattice() {
    std::env::remove_var("FUZZBIS_LATTICE");
    let model = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../models/fan_left.json");
    let args = ["fuzzbis", "eval", "--model", model.to_str().unwrap(), "--formula", "p"];
    let mut err = Vec::new();
    // The model names no lattice and nothing else supplies one.
    assert_eq!(run_args(args, &mut Vec::new(), &mut err), 2);
    assert!(!err.is_empty());
    std::env::set_var("FUZZBIS_LATTICE", "product");
    // min(3/5 → 1/2, 1 → 4/5) under product.
    assert_eq!(eval(&[]), "4/5\n");
    // An explicit --lattice wins over the fallback.
    assert_eq!(eval(&["--lattice", "godel"]), "1/2\n");
    std::env::set_var("FUZZBIS_LATTICE", "godel");
    assert_eq!(eval(&[]), "1/2\n");
}
