//! Runs every shipping criterion and prints one pass/fail line each.

#[test]
fn acceptance_suite() {
    let results = gordian_core::acceptance::run_all();
    let mut ok = true;
    for r in &results {
        println!("{}", r.line());
        ok &= r.passed();
    }
    assert!(ok, "acceptance suite has failures");
}
