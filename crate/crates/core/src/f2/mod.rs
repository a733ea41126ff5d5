//! Linear algebra over GF(2) for the Hamming lower bound: the matrix
//! `B_n = Σ_p I ⊗ .. ⊗ J ⊗ .. ⊗ I` has the Hamming graph as off-diagonal
//! support, so its nullity bounds `Z(H(n,q))` from below.
//!
//! Tensor factors are ordered with the first factor most significant. Since
//! Hamming ids put the last coordinate highest, factor `p` of a tensor
//! corresponds to coordinate `n - p` of a tuple. `B_n` is symmetric under
//! coordinate permutations, so its rows match the graph ids directly.

mod matrix;

pub use matrix::{f2_add, f2_mul, f2_nullity, f2_tensor, F2Matrix, F2Vector};

use crate::combin::{binomial, checked_pow};
use crate::config::Caps;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

fn order(n: usize, q: usize, caps: &Caps) -> Result<usize> {
    if n < 1 || q < 2 {
        return Err(Error::Invalid(format!("need n >= 1, q >= 2, got n={n} q={q}")));
    }
    let v = checked_pow(q as u64, n as u32)?;
    if v > caps.matrix as u64 {
        return Err(Error::sizing("matrix order q^n", v, caps.matrix));
    }
    Ok(v as usize)
}

/// `B_n` as a `q^n x q^n` matrix: entry `(a,b)` is the number of positions
/// where `a` and `b` may differ with all others equal, mod 2. So the
/// diagonal is `n mod 2` and the off-diagonal ones are Hamming neighbors.
pub fn build_bn(n: usize, q: usize, caps: &Caps) -> Result<F2Matrix> {
    let v = order(n, q, caps)?;
    let mut m = F2Matrix::zeros(v, v);
    let odd = n % 2 == 1;
    for a in 0..v {
        if odd {
            m.set(a, a, true);
        }
        let mut place = 1;
        for _ in 0..n {
            let digit = a / place % q;
            for d in (0..q).filter(|&d| d != digit) {
                m.set(a, a + d * place - digit * place, true);
            }
            place *= q;
        }
    }
    Ok(m)
}

/// `B_n` from its recursion `B_1 = J`, `B_n = J ⊗ I + I ⊗ B_{n-1}`.
pub fn build_bn_recursive(n: usize, q: usize, caps: &Caps) -> Result<F2Matrix> {
    order(n, q, caps)?;
    let j = F2Matrix::all_ones(q, q);
    let mut b = j.clone();
    for m in 1..n {
        let rest = F2Matrix::identity(q.pow(m as u32));
        b = f2_add(&f2_tensor(&j, &rest), &f2_tensor(&F2Matrix::identity(q), &b))?;
    }
    Ok(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelConstruction {
    /// Tensors of `1` and `x_i = e_i + e_{i+1}` with evenly many `1`s.
    OddQ,
    /// Recursive: `x_i ⊗ v` and `1 ⊗ w + e_1 ⊗ B_{n-1} w`.
    EvenQ,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelBasis {
    pub q: usize,
    pub n: usize,
    pub vectors: Vec<F2Vector>,
    pub construction: KernelConstruction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelCheck {
    pub all_nonzero: bool,
    pub in_kernel: bool,
    /// Rank of the stacked vectors.
    pub rank: usize,
    pub independent: bool,
    pub count: usize,
    pub expected: u64,
}

impl KernelCheck {
    pub fn ok(&self) -> bool {
        self.all_nonzero && self.in_kernel && self.independent && self.count as u64 == self.expected
    }
}

/// `z_{n,q} = (q^n + (q-2)^n) / 2`, widened for the identity checks.
fn z128(n: usize, q: usize) -> u128 {
    ((q as u128).pow(n as u32) + (q as u128 - 2).pow(n as u32)) / 2
}

impl KernelBasis {
    /// Checks membership, independence and the count against `b`.
    pub fn verify(&self, b: &F2Matrix) -> Result<KernelCheck> {
        let mut in_kernel = true;
        for v in &self.vectors {
            in_kernel &= b.mul_vec(v)?.is_zero();
        }
        let count = self.vectors.len();
        let rank = if count == 0 { 0 } else { F2Matrix::from_rows(self.vectors.clone())?.rank() };
        Ok(KernelCheck {
            all_nonzero: self.vectors.iter().all(|v| !v.is_zero()),
            in_kernel,
            rank,
            independent: rank == count,
            count,
            expected: z128(self.n, self.q) as u64,
        })
    }
}

/// `e_i + e_{i+1}` in `GF(2)^q`, `i` 0-based.
fn adjacent_pair(q: usize, i: usize) -> F2Vector {
    let mut v = F2Vector::unit(q, i);
    v.set(i + 1, true);
    v
}

fn odd_basis(n: usize, q: usize) -> Vec<F2Vector> {
    // factor choice 0 is the all-ones vector, c >= 1 is x_c
    let factors: Vec<F2Vector> = std::iter::once(F2Vector::ones(q))
        .chain((0..q - 1).map(|i| adjacent_pair(q, i)))
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        if choice.iter().filter(|&&c| c == 0).count() % 2 == 0 {
            let v = choice[1..]
                .iter()
                .fold(factors[choice[0]].clone(), |acc, &c| acc.tensor(&factors[c]));
            out.push(v);
        }
        let Some(p) = (0..n).rev().find(|&p| choice[p] + 1 < q) else {
            break;
        };
        choice[p] += 1;
        for c in &mut choice[p + 1..] {
            *c = 0;
        }
    }
    out
}

fn even_basis(n: usize, q: usize, caps: &Caps) -> Result<Vec<F2Vector>> {
    // x_1 = 1, x_i = e_{i-1} + e_i for i = 2..q-1
    let xs: Vec<F2Vector> = (0..q - 2).map(|i| adjacent_pair(q, i)).collect();
    let ones = F2Vector::ones(q);
    let mut basis: Vec<F2Vector> = std::iter::once(ones.clone()).chain(xs.iter().cloned()).collect();
    for m in 1..n {
        let b = build_bn(m, q, caps)?;
        let low = b.rows();
        let mut next: Vec<F2Vector> = xs.iter().flat_map(|x| basis.iter().map(|v| x.tensor(v))).collect();
        for w in 0..low {
            let mut v = ones.tensor(&F2Vector::unit(low, w));
            // e_1 ⊗ (B w): B is symmetric, so B w is row w
            let col = b.row(w);
            for i in (0..low).filter(|&i| col.get(i)) {
                let cur = v.get(i);
                v.set(i, !cur);
            }
            next.push(v);
        }
        basis = next;
    }
    Ok(basis)
}

/// `z_{n,q}` explicit independent vectors in the kernel of `B_n`.
pub fn kernel_basis(n: usize, q: usize, caps: &Caps) -> Result<KernelBasis> {
    order(n, q, caps)?;
    let (vectors, construction) = if q % 2 == 1 {
        (odd_basis(n, q), KernelConstruction::OddQ)
    } else {
        (even_basis(n, q, caps)?, KernelConstruction::EvenQ)
    };
    Ok(KernelBasis { q, n, vectors, construction })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenTermsIdentity {
    pub lhs: u128,
    pub rhs: u128,
    pub equal: bool,
}

/// `Σ_{j even} C(n,j) (q-1)^(n-j)` against `(q^n + (q-2)^n) / 2`.
pub fn even_terms_identity(n: usize, q: usize) -> Result<EvenTermsIdentity> {
    if n < 1 || q < 2 {
        return Err(Error::Invalid(format!("need n >= 1, q >= 2, got n={n} q={q}")));
    }
    let overflow = || Error::Overflow(format!("even terms for n={n} q={q}"));
    let mut lhs: u128 = 0;
    for j in (0..=n).step_by(2) {
        let c = binomial(n as u64, j as i64)? as u128;
        let p = (q as u128 - 1).checked_pow((n - j) as u32).ok_or_else(overflow)?;
        lhs = c.checked_mul(p).and_then(|t| lhs.checked_add(t)).ok_or_else(overflow)?;
    }
    let a = (q as u128).checked_pow(n as u32).ok_or_else(overflow)?;
    let b = (q as u128 - 2).pow(n as u32);
    let rhs = (a + b) / 2;
    Ok(EvenTermsIdentity { lhs, rhs, equal: lhs == rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build_hamming;

    #[test]
    fn bn_support_is_hamming_adjacency() {
        let caps = Caps::default();
        for n in 1..=4 {
            for q in 2..=4 {
                let b = build_bn(n, q, &caps).unwrap();
                let g = build_hamming(n, q, &caps).unwrap();
                assert!(b.is_symmetric());
                for a in 0..g.v_count() {
                    assert_eq!(b.get(a, a), n % 2 == 1);
                    for c in (0..g.v_count()).filter(|&c| c != a) {
                        assert_eq!(b.get(a, c), g.is_adjacent(a, c), "n={n} q={q} ({a},{c})");
                    }
                }
                assert_eq!(b, build_bn_recursive(n, q, &caps).unwrap());
            }
        }
    }

    #[test]
    fn small_bn() {
        let caps = Caps::default();
        assert_eq!(build_bn(1, 3, &caps).unwrap(), F2Matrix::all_ones(3, 3));
        for q in [2, 4] {
            let b = build_bn(2, q, &caps).unwrap();
            assert!(f2_mul(&b, &b).unwrap().is_zero());
        }
        assert!(matches!(build_bn(5, 7, &caps), Err(Error::Sizing { .. })));
    }

    #[test]
    fn nullity_equals_z_and_bases_verify() {
        let caps = Caps::default();
        for q in 2..=10usize {
            for n in 1.. {
                if (q as u64).pow(n as u32) > 256 {
                    break;
                }
                let b = build_bn(n, q, &caps).unwrap();
                let z = z128(n, q) as usize;
                assert_eq!(f2_nullity(&b), z, "n={n} q={q}");
                let kb = kernel_basis(n, q, &caps).unwrap();
                let check = kb.verify(&b).unwrap();
                assert!(check.ok(), "n={n} q={q} {check:?}");
            }
        }
    }

    #[test]
    fn basis_examples() {
        let caps = Caps::default();
        assert_eq!(kernel_basis(1, 3, &caps).unwrap().vectors.len(), 2);
        assert_eq!(kernel_basis(2, 2, &caps).unwrap().vectors.len(), 2);
        let kb = kernel_basis(2, 3, &caps).unwrap();
        assert_eq!(kb.vectors.len(), 5);
        assert_eq!(kb.construction, KernelConstruction::OddQ);
    }

    #[test]
    fn count_checks() {
        for n in 1..=8 {
            for q in 2..=9usize {
                if q.pow(n as u32) <= 100_000 {
                    assert_eq!(odd_count(n, q), even_terms_identity(n, q).unwrap().lhs);
                }
                if q % 2 == 0 && n >= 2 {
                    let lhs = (q as u128 - 2) * z128(n - 1, q) + (q as u128).pow(n as u32 - 1);
                    assert_eq!(lhs, z128(n, q));
                }
            }
        }
    }

    /// Tensors with an even number of ones-factors, counted by brute force.
    fn odd_count(n: usize, q: usize) -> u128 {
        let total = q.pow(n as u32);
        (0..total)
            .filter(|&code| {
                let ones = (0..n).filter(|&p| code / q.pow(p as u32) % q == 0).count();
                ones % 2 == 0
            })
            .count() as u128
    }

    #[test]
    fn identity_examples() {
        let e = even_terms_identity(2, 3).unwrap();
        assert_eq!((e.lhs, e.rhs), (5, 5));
        let e = even_terms_identity(3, 2).unwrap();
        assert_eq!((e.lhs, e.rhs), (4, 4));
        for q in 2..=10 {
            assert_eq!(even_terms_identity(1, q).unwrap().lhs, q as u128 - 1);
        }
        for n in 1..=20 {
            for q in 2..=10 {
                assert!(even_terms_identity(n, q).unwrap().equal);
            }
        }
    }
}
