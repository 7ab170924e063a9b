//! H - e families and the Turán sandwich ext(n, H - e) + 2 <= rb(n, H) <=
//! ext(n, H) + 1, compared with the exact value.

use rainbow::formulas::sandwich_bounds;
use rainbow::{minus_edge_family, rb_exact, turan_exact, ForbiddenFamily, SearchConfig, Target};

fn main() -> rainbow::Result<()> {
    let cfg = SearchConfig::default();
    for name in ["diamond", "house", "bull", "K2,3", "C4"] {
        let target: Target = name.parse()?;
        let family = minus_edge_family(&target.graph)?;
        println!("{name} minus an edge: {:?}", family.members());
        for n in target.graph.order()..=7 {
            let low = turan_exact(n, &family, &cfg)?.value;
            let high = turan_exact(n, &ForbiddenFamily::new([target.graph]), &cfg)?.value;
            let (lo, hi) = sandwich_bounds(low, high)?;
            let exact = rb_exact(n, &target.graph, &cfg)?.value;
            println!("  n = {n}: {lo} <= rb = {exact} <= {hi}");
        }
    }
    Ok(())
}
