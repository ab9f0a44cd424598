#![allow(dead_code)]

/// Runs the CLI in-process and returns `(exit code, stdout, stderr)`.
pub fn drg(args: &[&str]) -> (i32, String, String) {
    drg_with_precision(args, None)
}

pub fn drg_with_precision(args: &[&str], bits: Option<&str>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("drg").chain(args.iter().copied());
    let code = drg::run(argv, bits, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

pub fn json(args: &[&str]) -> serde_json::Value {
    let mut with_flag = args.to_vec();
    with_flag.push("--json");
    let (_, out, err) = drg(&with_flag);
    serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{err}"))
}
