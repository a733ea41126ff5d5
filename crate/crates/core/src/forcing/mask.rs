//! Word-sized vertex sets for graphs with at most 128 vertices, used by the
//! exhaustive searches where closures run millions of times.

use crate::bitset::VertexSet;
use crate::graphs::Graph;
use std::hash::Hash;
use std::ops::{BitAnd, BitOr, BitXor, Not};

pub trait Mask:
    Copy
    + Eq
    + Ord
    + Hash
    + Send
    + Sync
    + std::fmt::Debug
    + BitAnd<Output = Self>
    + BitOr<Output = Self>
    + BitXor<Output = Self>
    + Not<Output = Self>
{
    const BITS: usize;
    const ZERO: Self;
    fn bit(i: usize) -> Self;
    fn ones(self) -> u32;
    fn lowest(self) -> usize;
    /// Bits `0..n` set.
    fn low(n: usize) -> Self;

    #[inline]
    fn has(self, i: usize) -> bool {
        self & Self::bit(i) != Self::ZERO
    }

    #[inline]
    fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

macro_rules! impl_mask {
    ($t:ty) => {
        impl Mask for $t {
            const BITS: usize = <$t>::BITS as usize;
            const ZERO: Self = 0;
            #[inline]
            fn bit(i: usize) -> Self {
                1 << i
            }
            #[inline]
            fn ones(self) -> u32 {
                self.count_ones()
            }
            #[inline]
            fn lowest(self) -> usize {
                self.trailing_zeros() as usize
            }
            #[inline]
            fn low(n: usize) -> Self {
                if n >= <Self as Mask>::BITS {
                    !0
                } else {
                    (1 << n) - 1
                }
            }
        }
    };
}

impl_mask!(u64);
impl_mask!(u128);

/// Iterator over set bits, lowest first.
pub struct Bits<M>(M);

impl<M: Mask> Iterator for Bits<M> {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0.is_zero() {
            return None;
        }
        let i = self.0.lowest();
        self.0 = self.0 ^ M::bit(i);
        Some(i)
    }
}

#[inline]
pub fn bits<M: Mask>(m: M) -> Bits<M> {
    Bits(m)
}

/// Adjacency rows as masks.
#[derive(Debug, Clone)]
pub struct MaskGraph<M> {
    pub rows: Vec<M>,
    pub full: M,
}

impl<M: Mask> MaskGraph<M> {
    pub fn new(g: &Graph) -> Option<Self> {
        let n = g.v_count();
        if n > M::BITS {
            return None;
        }
        let rows = (0..n)
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .fold(M::ZERO, |m, u| m | M::bit(u))
            })
            .collect();
        Some(MaskGraph {
            rows,
            full: M::low(n),
        })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn from_set(&self, s: &VertexSet) -> M {
        s.iter().fold(M::ZERO, |m, v| m | M::bit(v))
    }

    pub fn to_set(&self, m: M) -> VertexSet {
        VertexSet::from_ids(self.len(), bits(m))
    }

    /// Closure of `black` under the color rule.
    pub fn closure(&self, mut black: M) -> M {
        // black vertices that may still force
        let mut live = black;
        loop {
            let mut changed = false;
            for v in bits(live) {
                let white = self.rows[v] & !black;
                match white.ones() {
                    0 => live = live ^ M::bit(v),
                    1 => {
                        black = black | white;
                        live = (live ^ M::bit(v)) | white;
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return black;
            }
        }
    }

    /// True when `V \ white` is a zero forcing set.
    #[inline]
    pub fn white_is_forceable(&self, white: M) -> bool {
        self.closure(self.full & !white) == self.full
    }

    /// `G[set]` connected.
    pub fn induces_connected(&self, set: M) -> bool {
        if set.is_zero() {
            return true;
        }
        let mut seen = M::bit(set.lowest());
        let mut frontier = seen;
        while !frontier.is_zero() {
            let mut next = M::ZERO;
            for v in bits(frontier) {
                next = next | self.rows[v];
            }
            next = next & set & !seen;
            seen = seen | next;
            frontier = next;
        }
        seen == set
    }

    /// `G[set]` has no isolated vertex.
    pub fn induces_no_isolated(&self, set: M) -> bool {
        bits(set).all(|v| !(self.rows[v] & set).is_zero())
    }

    pub fn min_degree(&self) -> usize {
        self.rows.iter().map(|r| r.ones() as usize).min().unwrap_or(0)
    }
}
