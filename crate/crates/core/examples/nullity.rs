//! GF(2) nullity of the Hamming matrices and their explicit kernels.

use zfgraph::config::Caps;
use zfgraph::constructions::z_hamming;
use zfgraph::f2::{build_bn, build_bn_recursive, even_terms_identity, f2_nullity, kernel_basis};

fn main() -> zfgraph::Result<()> {
    let caps = Caps::from_env();
    println!("{:>3} {:>3} {:>6} {:>8} {:>6}  basis", "n", "q", "order", "nullity", "z");
    for (n, q) in [(1, 5), (2, 2), (2, 5), (3, 3), (3, 4), (4, 3), (5, 2)] {
        let b = build_bn(n, q, &caps)?;
        assert_eq!(b, build_bn_recursive(n, q, &caps)?);
        let check = kernel_basis(n, q, &caps)?.verify(&b)?;
        println!(
            "{n:>3} {q:>3} {:>6} {:>8} {:>6}  {}",
            b.rows(),
            f2_nullity(&b),
            z_hamming(n, q)?,
            if check.ok() { "verified" } else { "FAILED" }
        );
    }
    let id = even_terms_identity(12, 7)?;
    println!("even terms for (12,7): {} = {}", id.lhs, id.rhs);
    Ok(())
}
