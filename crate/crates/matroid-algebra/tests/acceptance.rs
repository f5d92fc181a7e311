//! Every published value and law in one pass, printed one line per check.
//! Set MATROID_ALGEBRA_EXTENDED=1 to raise the size caps where a criterion
//! has an extended variant.

use matroid_algebra::verify::run_all;

#[test]
fn acceptance() {
    let extended = std::env::var("MATROID_ALGEBRA_EXTENDED").is_ok_and(|v| v == "1");
    let results = run_all(extended);
    for r in &results {
        println!("{}", r.line());
    }
    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("criterion {:02}: {}", r.id, r.detail))
        .collect();
    assert!(failed.is_empty(), "{}", failed.join("\n"));
}
