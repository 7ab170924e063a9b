//! Colour classes, unique colours S(v), C* and rainbow copies on the
//! two-triangle colouring of K_6.

use rainbow::coloring::{color_classes, colors_within, unique_colors_at};
use rainbow::constructions::bull_cycle_partition;
use rainbow::{enumerate_copies, find_rainbow_copy, EdgeColoring, Target};

fn bits(set: u128) -> Vec<u32> {
    (0..128).filter(|i| set >> i & 1 == 1).collect()
}

fn main() -> rainbow::Result<()> {
    let cert = bull_cycle_partition(6)?;
    let c = &cert.coloring;
    println!("K_6 coloured with {} colours: {:?}", c.color_count(), c.colors());
    let view = color_classes(c);
    for (v, s) in view.unique.iter().enumerate() {
        println!("S({v}) = {:?}", bits(*s));
    }
    println!("C* = {:?}, {:?}", bits(view.c_star), view.stats());

    // removing a vertex loses exactly its unique colours
    let all = (1u16 << 6) - 1;
    for w in 0..6 {
        let lost = unique_colors_at(c, all, w)?.count_ones();
        let left = colors_within(c, all & !(1 << w)).count_ones();
        println!("without vertex {w}: {left} colours = {} - {lost}", c.color_count());
    }

    for name in ["bull", "C3", "P4", "K1,3"] {
        let target: Target = name.parse()?;
        let table = enumerate_copies(6, &target.graph)?;
        match find_rainbow_copy(c, &table) {
            Some(copy) => println!("{name}: rainbow copy on vertices {:?} ({} copies scanned at most)", copy.vertex_list(), table.len()),
            None => println!("{name}: none of the {} copies is rainbow", table.len()),
        }
    }
    let distinct = EdgeColoring::from_fn(5, rainbow::graphs::edge_index);
    let table = enumerate_copies(5, &"bull".parse::<Target>()?.graph)?;
    println!("all-distinct K_5 has a rainbow bull: {}", find_rainbow_copy(&distinct, &table).is_some());
    Ok(())
}
