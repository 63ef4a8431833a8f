//! Writes C and C' on the default grid to a CSV file.
use realchar::cli::{emit_plot, PlotSpec, Quantity};
use realchar::transition::EvalConfig;

fn main() -> realchar::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "transition.csv".to_string());
    let spec = PlotSpec {
        quantities: vec![Quantity::C, Quantity::Cprime],
        range_start: 0.02,
        range_end: 5.0,
        step: 0.02,
        output_path: path.clone().into(),
    };
    let summary = emit_plot(&spec, &EvalConfig::with_tolerance(1e-6))?;
    println!("wrote {} rows to {path}", summary.rows);
    for (name, range) in &summary.columns {
        println!("  {name}: [{:.6}, {:.6}]", range.min, range.max);
    }
    Ok(())
}
