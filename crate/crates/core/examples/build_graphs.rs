//! Build one member of each family, look at a few labels, and round-trip
//! a graph through both file formats.

use zfgraph::config::Caps;
use zfgraph::graphs::{build, io, FamilySpec};

fn main() -> zfgraph::Result<()> {
    let caps = Caps::from_env();
    for spec in [
        FamilySpec::johnson(5, 2, &[0]),
        FamilySpec::grassmann(4, 2, 2, &[1]),
        FamilySpec::hamming(3, 2),
    ] {
        let g = build(&spec, &caps)?;
        let first: Vec<String> = (0..3).map(|v| g.label(v).display()).collect();
        println!(
            "{spec}: {} vertices, {} edges, regular {}, first labels {first:?}",
            g.v_count(),
            g.edge_count(),
            g.is_regular()
        );
    }

    let petersen = build(&FamilySpec::johnson(5, 2, &[0]), &caps)?;
    let dir = std::env::temp_dir();
    let bin = dir.join("petersen.zfg");
    let txt = dir.join("petersen.edges");
    io::save(&petersen, &bin)?;
    io::export_edge_list(&petersen, &txt)?;
    assert_eq!(io::load(&bin)?, petersen);
    assert_eq!(io::import_edge_list(&txt)?, petersen);
    println!("round trip through {} and {} ok", bin.display(), txt.display());
    Ok(())
}
