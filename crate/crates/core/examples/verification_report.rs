//! Runs one verification report (default: lemma2) and prints it as JSON.
use realchar::transition::EvalConfig;
use realchar::verify::run_named;

fn main() -> realchar::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "lemma2".to_string());
    let report = run_named(&name, false, &EvalConfig::default())?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    eprintln!(
        "{}: pass = {} in {:.2}s",
        report.name, report.pass, report.runtime_seconds
    );
    Ok(())
}
