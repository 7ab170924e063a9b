//! Builds every explicit lower-bound colouring, verifies it, and writes it
//! in the rbcert-v1 text format.
//!
//! cargo run --release --example certificates [-- <output-dir>]

use std::path::PathBuf;

use rainbow::cli::{read_certificate, write_certificate};
use rainbow::constructions::{bull_cycle_partition, disjoint_cliques_plus_one, extremal_plus_one, k23_special, Certificate};
use rainbow::{ForbiddenFamily, SearchConfig, Target};

fn main() -> rainbow::Result<()> {
    let dir = std::env::args().nth(1).map_or_else(|| std::env::temp_dir().join("rbn-certificates"), PathBuf::from);
    std::fs::create_dir_all(&dir)?;
    let t = |s: &str| s.parse::<Target>();
    let c3c4 = ForbiddenFamily::new([t("C3")?.graph, t("C4")?.graph]);
    let cfg = SearchConfig::default();

    let mut certs: Vec<Certificate> = vec![disjoint_cliques_plus_one(5, &[3, 2], t("bull")?)?];
    for n in 6..=10 {
        certs.push(bull_cycle_partition(n)?);
    }
    certs.push(disjoint_cliques_plus_one(5, &[4, 1], t("K2,3")?)?);
    certs.push(k23_special(6)?);
    certs.push(k23_special(7)?);
    certs.push(disjoint_cliques_plus_one(8, &[4, 4], t("K2,3")?)?);
    for n in 5..=8 {
        certs.push(disjoint_cliques_plus_one(n, &[4, n - 4], t("house")?)?);
    }
    for n in 4..=10 {
        certs.push(extremal_plus_one(n, &c3c4, t("diamond")?, &cfg)?);
    }

    for cert in certs {
        let path = dir.join(format!("{}-n{}.rbcert", cert.target.label.replace(',', ""), cert.n));
        write_certificate(&path, &cert)?;
        let back = read_certificate(&path)?;
        back.verify()?;
        println!("rb({}, {}) >= {:>2}  via {:<18} {}", back.n, back.target.label, back.claimed_colors + 1, back.construction_tag, path.display());
    }
    Ok(())
}
