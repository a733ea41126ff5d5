//! Closure, exact zero forcing numbers and the total/connected variants.

use zfgraph::bitset::VertexSet;
use zfgraph::config::Caps;
use zfgraph::forcing::{
    closure, enumerate_white_sets, variant_number_exact, zero_forcing_number_exact, SearchOptions, ZfVariant,
};
use zfgraph::graphs::{build, FamilySpec, Graph};

fn main() -> zfgraph::Result<()> {
    let caps = Caps::from_env();

    let path = Graph::path(6);
    let (black, trace) = closure(&path, &VertexSet::from_ids(6, [0]));
    println!("P6 from an end: {} black after {} forces", black.count(), trace.steps.len());

    let opts = SearchOptions::default();
    for spec in [FamilySpec::johnson(5, 2, &[0]), FamilySpec::hamming(2, 4), FamilySpec::johnson(6, 3, &[2])] {
        let g = build(&spec, &caps)?;
        let r = zero_forcing_number_exact(&g, &opts)?;
        let leader = r.certificate.as_ref().unwrap();
        let labels: Vec<String> = leader.iter().map(|v| g.label(v).display()).collect();
        println!("Z({spec}) = {:?} after {} closures, e.g. {}", r.value(), r.closures, labels.join(" "));
        for v in [ZfVariant::Total, ZfVariant::Connected] {
            let found = variant_number_exact(&g, v, &opts)?.map(|x| x.0);
            println!("  {v:?}: {found:?}");
        }
    }

    // a lower bound by plain enumeration: no 7 white vertices can be forced
    let k72 = build(&FamilySpec::johnson(7, 2, &[0]), &caps)?;
    let e = enumerate_white_sets(&k72, 7)?;
    println!("K(7,2): {} of {} white 7-sets forceable", e.forceable, e.examined);
    Ok(())
}
