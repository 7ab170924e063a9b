//! ext(n, {C3, C4}) for n = 4..16 by exhaustive generation, with the
//! n sqrt(n-1) / 2 upper bound alongside.

use rainbow::formulas::{girth5_bound_holds, reference_tables};
use rainbow::{turan_exact, ForbiddenFamily, SearchConfig, Target};

fn main() -> rainbow::Result<()> {
    let family = ForbiddenFamily::new(["C3".parse::<Target>()?.graph, "C4".parse::<Target>()?.graph]);
    let cfg = SearchConfig::default();
    println!("{:>3} {:>4} {:>9} {:>7}  witness", "n", "ext", "published", "bound");
    for (n, published) in reference_tables::EXT_C3_C4 {
        let out = turan_exact(n as usize, &family, &cfg)?;
        let bound = 0.5 * n as f64 * ((n - 1) as f64).sqrt();
        assert!(girth5_bound_holds(n, out.value));
        println!("{n:>3} {:>4} {published:>9} {bound:>7.2}  {}", out.value, out.graph().unwrap());
    }
    Ok(())
}
