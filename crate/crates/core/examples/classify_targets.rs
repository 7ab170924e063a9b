//! Which closed-form statement covers each catalog target, with the bounds
//! it gives for n up to 12.

use rainbow::formulas::classify;
use rainbow::graphs::{cyclomatic, degree_sequence};
use rainbow::Target;

fn main() -> rainbow::Result<()> {
    for name in ["C3", "C5", "C4+", "C5+", "bull", "Z2", "diamond", "house", "K2,3", "W5", "TC5", "K4", "P5", "K1,4", "6:0-1,1-2,2-3,0-3,0-4,1-5"] {
        let target: Target = name.parse()?;
        let c = classify(&target.graph);
        println!("{:<8} degrees {:?} cyclomatic {} -> {:?}", target.label, degree_sequence(&target.graph), cyclomatic(&target.graph), c.kind);
        let rows: Vec<String> = (c.order..=12)
            .filter_map(|n| c.bounds(n as u64).map(|(lo, hi)| if lo == hi { format!("{n}:{lo}") } else { format!("{n}:{lo}..{hi}") }))
            .collect();
        if !rows.is_empty() {
            println!("         rb bounds {}", rows.join(" "));
        }
    }
    Ok(())
}
