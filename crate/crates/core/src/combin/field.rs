use super::prime_power;
use crate::config::Caps;
use crate::error::{Error, Result};

/// Table-driven arithmetic in `GF(q)`.
///
/// Elements are the integers `0..q`. For `q = p^e` with `e > 1` an element
/// encodes the polynomial whose base-`p` digits are its coefficients, lowest
/// degree in the least significant digit, reduced modulo [`Self::modulus`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    q: usize,
    p: usize,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

fn default_modulus(q: u64) -> Option<Vec<u8>> {
    Some(match q {
        4 => vec![1, 1, 1],       // x^2 + x + 1
        8 => vec![1, 1, 0, 1],    // x^3 + x + 1
        9 => vec![1, 0, 1],       // x^2 + 1 over GF(3)
        16 => vec![1, 1, 0, 0, 1], // x^4 + x + 1
        _ => return None,
    })
}

impl FieldTable {
    /// Field of order `q` with the default cap and built-in modulus.
    pub fn new(q: u64) -> Result<Self> {
        Self::with_modulus(q, None, &Caps::default())
    }

    /// Field of order `q`. `modulus` (coefficients lowest degree first, monic)
    /// is required when `q` is a proper prime power without a built-in default.
    pub fn with_modulus(q: u64, modulus: Option<&[u8]>, caps: &Caps) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > caps.field_order {
            return Err(Error::sizing("field order", q, caps.field_order));
        }
        let modulus = match modulus {
            Some(m) => m.to_vec(),
            None if e == 1 => vec![0, 1],
            None => default_modulus(q).ok_or_else(|| {
                Error::Invalid(format!("q = {q} needs an explicit irreducible modulus"))
            })?,
        };
        if modulus.len() != e as usize + 1
            || *modulus.last().unwrap() != 1
            || modulus.iter().any(|&c| c as u64 >= p)
        {
            return Err(Error::Invalid(format!(
                "modulus {modulus:?} must be monic of degree {e} with coefficients < {p}"
            )));
        }
        let (q, p) = (q as usize, p as usize);
        let digits = |mut x: usize| -> Vec<usize> {
            (0..e)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let encode = |ds: &[usize]| ds.iter().rev().fold(0, |acc, &d| acc * p + d);

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum) as u8;

                // schoolbook product, then reduce by the monic modulus
                let mut prod = vec![0usize; 2 * e as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for deg in (e as usize..prod.len()).rev() {
                    let c = prod[deg];
                    if c != 0 {
                        for (i, &m) in modulus.iter().enumerate() {
                            let idx = deg - e as usize + i;
                            prod[idx] = (prod[idx] + p * p - c * m as usize) % p;
                        }
                    }
                }
                mul[a * q + b] = encode(&prod[..e as usize]) as u8;
            }
        }
        let neg: Vec<u8> = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8)
            .collect();
        let mut inv = vec![0u8; q];
        for a in 1..q {
            match (1..q).find(|&b| mul[a * q + b] == 1) {
                Some(b) => inv[a] = b as u8,
                None => return Err(Error::ReducibleModulus(modulus)),
            }
        }
        Ok(FieldTable {
            q,
            p,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    /// Exhaustively checks the field axioms. Used as a test oracle.
    pub fn check_axioms(&self) -> bool {
        let q = self.q as u8;
        let els = 0..q;
        for a in els.clone() {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return false;
            }
            if a != 0 && self.mul(a, self.inv(a)) != 1 {
                return false;
            }
            let mut acc = 0;
            for _ in 0..self.p {
                acc = self.add(acc, a);
            }
            if acc != 0 {
                return false;
            }
            for b in els.clone() {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
                for c in els.clone() {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_is_xor_and() {
        let f = FieldTable::new(2).unwrap();
        for a in 0..2u8 {
            for b in 0..2u8 {
                assert_eq!(f.add(a, b), a ^ b);
                assert_eq!(f.mul(a, b), a & b);
            }
        }
    }

    #[test]
    fn gf3_is_mod_3() {
        let f = FieldTable::new(3).unwrap();
        for a in 0..3u8 {
            for b in 0..3u8 {
                assert_eq!(f.add(a, b), (a + b) % 3);
                assert_eq!(f.mul(a, b), (a * b) % 3);
            }
        }
    }

    #[test]
    fn gf4_x_squared_is_x_plus_one() {
        let f = FieldTable::with_modulus(4, Some(&[1, 1, 1]), &Caps::default()).unwrap();
        // x is encoded as 2, x + 1 as 3
        assert_eq!(f.mul(2, 2), 3);
        assert!(f.check_axioms());
    }

    #[test]
    fn every_supported_order_satisfies_axioms() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FieldTable::new(q).unwrap();
            assert!(f.check_axioms(), "q = {q}");
            assert_eq!(f.order(), q as usize);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(FieldTable::new(6), Err(Error::NotPrimePower(6))));
        assert!(matches!(FieldTable::new(32), Err(Error::Sizing { .. })));
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(matches!(
            FieldTable::with_modulus(4, Some(&[1, 0, 1]), &Caps::default()),
            Err(Error::ReducibleModulus(_))
        ));
        let caps = Caps {
            field_order: 32,
            ..Caps::default()
        };
        assert!(FieldTable::with_modulus(25, None, &caps).is_err());
        // x^2 + 2 is irreducible over GF(5)
        let f = FieldTable::with_modulus(25, Some(&[2, 0, 1]), &caps).unwrap();
        assert!(f.check_axioms());
    }
}
