//! Grundy domination sequences, the identity `Z = |V| - γ^Z_gr`, and the
//! cross-intersecting pairs read off a maximum sequence.

use zfgraph::config::Caps;
use zfgraph::forcing::{bollobas_check, bollobas_from_sequence, grundy_exact, zf_from_grundy, GrundyVariant};
use zfgraph::graphs::{build, FamilySpec, Graph};

fn main() -> zfgraph::Result<()> {
    let caps = Caps::from_env();
    let c4 = Graph::cycle(4);
    let seq = grundy_exact(&c4, GrundyVariant::ZGrundy, caps.search_vertices)?;
    println!("C4: Z-Grundy {} via {:?}, so Z = {}", seq.len(), seq.sequence, zf_from_grundy(&c4, caps.search_vertices)?);

    let kneser = build(&FamilySpec::johnson(6, 2, &[0]), &caps)?;
    let seq = grundy_exact(&kneser, GrundyVariant::ZGrundy, caps.search_vertices)?;
    let pairs = bollobas_from_sequence(&kneser, &seq, 6, 0, false)?;
    let v = bollobas_check(&pairs)?;
    println!(
        "K(6,2): sequence of {} (valid {}), pairs satisfy the conditions {} with m = {} <= {}",
        seq.len(),
        seq.validate(&kneser),
        v.conditions_hold,
        v.m,
        v.bound
    );

    // closed neighborhoods in J(5,2) pair X_i with complements of footprints
    let johnson = build(&FamilySpec::johnson(5, 2, &[1]), &caps)?;
    let seq = grundy_exact(&johnson, GrundyVariant::Grundy, caps.search_vertices)?;
    let v = bollobas_check(&bollobas_from_sequence(&johnson, &seq, 5, 1, true)?)?;
    println!("J(5,2): Grundy {}, bound {} holds {}", seq.len(), v.bound, v.within_bound);
    Ok(())
}
