use zetafib_cli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zetafib").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn zeta_three() {
    let (code, out, _) = call(&["zeta", "3", "--digits", "10"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "1.202056903");
}

#[test]
fn digamma_one_is_minus_gamma() {
    let (code, out, _) = call(&["digamma", "1", "--digits", "12"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "-0.577215664902");
    let (code, _, err) = call(&["digamma", "-2", "--digits", "12"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("error"));
}

#[test]
fn verify_scaled_odd() {
    let (code, out, _) = call(&["verify", "SCALED-ODD-F", "--digits", "50"]);
    assert_eq!(code, EXIT_OK);
    let half = format!("0.5{}", "0".repeat(49));
    assert_eq!(out.matches(&half).count(), 2);
    assert!(out.contains("PASS"));
}

#[test]
fn verify_printed_discrepancy_keeps_exit_zero() {
    let (code, out, _) = call(&["verify", "THM6-F-PRINTED", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("DISCREPANCY"));
}

#[test]
fn main_failure_exits_one() {
    // a one-term budget cannot close the tail, which fails the MAIN check
    let (code, out, _) = call(&["verify-all", "--filter", "THM1-F", "--m-range", "0..0", "--max-terms", "1"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("ERROR"));
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["verify", "NOPE"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "THM1-F"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "THM1-F", "--m", "-1"]).0, EXIT_USAGE);
    assert_eq!(call(&["zeta", "3", "--digits", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["zeta", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["list", "--bogus"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify-all", "--m-range", "5..2"]).0, EXIT_USAGE);
    assert_eq!(call(&["sum", "LEMMA1", "--terms", "0"]).0, EXIT_USAGE);
}

#[test]
fn json_sweep_has_one_record_per_check() {
    let (code, out, _) = call(&["verify-all", "--filter", "THM1-*", "--m-range", "0..10", "--digits", "40", "--json"]);
    assert_eq!(code, EXIT_OK);
    let records: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 22);
    for r in &records {
        assert_eq!(r["pass"], true);
        assert!(r["lhs"].is_string() && r["abs_diff"].is_string() && r["tail_bound"].is_string());
        assert!(r["params"]["m"].is_i64());
        assert_eq!(r["digits"], 40);
    }
}

#[test]
fn json_and_table_report_the_same_values() {
    let (_, table, _) = call(&["verify", "THM2-L", "--m", "3", "--digits", "35"]);
    let (_, json, _) = call(&["verify", "THM2-L", "--m", "3", "--digits", "35", "--json"]);
    let r: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    for key in ["lhs", "rhs", "abs_diff", "tail_bound"] {
        assert!(table.contains(r[key].as_str().unwrap()), "{key}");
    }
}

#[test]
fn list_and_sum() {
    let (code, out, _) = call(&["list", "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 31);
    let (code, out, _) = call(&["sum", "LEMMA1", "--terms", "2", "--digits", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "1.2000");
    let (_, out, _) = call(&["sum", "THM1-F", "--m", "0", "--terms", "1", "--digits", "6"]);
    assert_eq!(out.trim(), "0.644934");
}

#[test]
fn verify_with_oracle() {
    let (code, out, _) = call(&["verify", "THM1-F", "--m", "0", "--digits", "20", "--oracle", "9"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("oracle   1.0347"));
}
