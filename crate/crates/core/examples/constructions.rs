//! Explicit leader sets checked by closure against the predicted values.

use zfgraph::config::Caps;
use zfgraph::constructions::{
    grassmann_zfs, hamming_trace, hamming_zfs, johnson_zfs, kneser_zfs, predicted_zf, ConstructionResult,
};
use zfgraph::graphs::{build, IntersectionSet};

fn show(c: &ConstructionResult, caps: &Caps) -> zfgraph::Result<()> {
    let g = build(&c.spec, caps)?;
    let v = c.verify(&g)?;
    let p = predicted_zf(&c.spec);
    println!(
        "{}: leader {} of {}, zero forcing {}, claims confirmed {}, prediction {:?} from {:?}",
        c.spec,
        c.leader_size(),
        g.v_count(),
        v.zero_forcing,
        v.confirms(&c.claims),
        p.value,
        p.upper_from
    );
    Ok(())
}

fn main() -> zfgraph::Result<()> {
    let caps = Caps::from_env();
    show(&johnson_zfs(6, 2, &IntersectionSet::new(vec![1]), &caps)?, &caps)?;
    show(&kneser_zfs(7, 2, 0, &caps)?, &caps)?;
    show(&kneser_zfs(9, 3, 1, &caps)?, &caps)?;
    show(&grassmann_zfs(6, 2, 2, 0, &caps)?, &caps)?;

    let h = hamming_zfs(3, 4, &caps)?;
    show(&h, &caps)?;
    let g = build(&h.spec, &caps)?;
    let trace = hamming_trace(&g, &h)?;
    println!("H(3,4) closes in {} forces without core pivots", trace.steps.len());
    Ok(())
}
