//! Three-valued decisions: a search that runs out of budget answers
//! `Unknown`, never `Infeasible`.

use std::time::Duration;

use rainbow::{decide_colorable, f_exact, Decision, SearchConfig, Target};

fn main() -> rainbow::Result<()> {
    let diamond: Target = "diamond".parse()?;
    let full = SearchConfig::default();
    let starved = SearchConfig { node_limit: Some(50), ..SearchConfig::default() };
    for k in [9, 10] {
        let show = |d: &Decision| match d {
            Decision::Feasible(c) => format!("feasible ({} colours)", c.color_count()),
            Decision::Infeasible => "infeasible".into(),
            Decision::Unknown => "unknown".into(),
        };
        println!("K_7, {k} colours, no rainbow diamond: {} | with 50 nodes: {}", show(&decide_colorable(7, &diamond.graph, k, &full)?), show(&decide_colorable(7, &diamond.graph, k, &starved)?));
    }
    let quick = SearchConfig { timeout: Some(Duration::from_millis(1)), ..SearchConfig::default() };
    let out = f_exact(8, &"bull".parse::<Target>()?.graph, &quick)?;
    println!("f(8, bull) with 1 ms: {} [{:?}] (the certificate value, not a proof)", out.value, out.status);
    Ok(())
}
