//! Exact rainbow numbers rb(n, H) for the catalog targets, next to the
//! published values.
//!
//! cargo run --release --example rainbow_numbers [-- <target> <n-max>]

use rainbow::formulas::reference_tables;
use rainbow::{rb_exact, SearchConfig, Target};

fn main() -> rainbow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let targets: Vec<String> = match args.first() {
        Some(t) => vec![t.clone()],
        None => ["bull", "diamond", "house", "K2,3"].map(String::from).to_vec(),
    };
    let n_max: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let cfg = SearchConfig::default();
    for name in targets {
        let target: Target = name.parse()?;
        for n in target.graph.order().max(4)..=n_max {
            let out = rb_exact(n, &target.graph, &cfg)?;
            let published = reference_tables::rb(&target.graph, n as u64).map_or("-".into(), |v| v.to_string());
            println!("rb({n}, {:<7}) = {:>3}  published {:>3}  {:?}  {} nodes  {:.1?}", target.label, out.value, published, out.status, out.nodes_explored, out.elapsed);
        }
    }
    Ok(())
}
