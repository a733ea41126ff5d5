//! Diameter and girth by BFS next to the closed-form diameter, plus an
//! explicit shortest walk in a Grassmann graph.

use zfgraph::config::Caps;
use zfgraph::graphs::{build, FamilySpec};
use zfgraph::metrics::{bfs_distances, build_distance_walk, diameter, girth, grassmann_diameter_formula};

fn main() -> zfgraph::Result<()> {
    let caps = Caps::from_env();
    for (n, k, s) in [(4, 2, vec![0]), (6, 3, vec![2]), (6, 3, vec![1, 2]), (3, 2, vec![1])] {
        let spec = FamilySpec::grassmann(n, k, 2, &s);
        let g = build(&spec, &caps)?;
        println!(
            "{spec}: bfs diameter {:?}, formula {:?}, girth {:?}",
            diameter(&g),
            grassmann_diameter_formula(&spec).ok(),
            girth(&g)
        );
    }

    // two 3-spaces of GF(2)^6 at distance 3 in J_{2,{2}}(6,3)
    let g = build(&FamilySpec::grassmann(6, 3, 2, &[2]), &caps)?;
    let dist = bfs_distances(&g, 0);
    let far = (0..g.v_count()).max_by_key(|&v| dist[v]).unwrap();
    let walk = build_distance_walk(&g, 0, far)?;
    let labels: Vec<String> = walk.vertices.iter().map(|&v| g.label(v).display()).collect();
    println!("walk of length {} (valid {}): {}", walk.length(), walk.validate(&g), labels.join(" -> "));
    Ok(())
}
