//! Finite strict partial orders and exact linear-extension counting.
//!
//! Elements are `0..n` with `n <= 64`; the order is stored transitively
//! closed, one bitmask of strict predecessors per element.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{CheckedAdd, One, Zero};
use thiserror::Error;

pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("poset has {0} elements, at most {MAX_ELEMENTS} are supported")]
    TooLarge(usize),
    #[error("element index {index} out of range for a poset of {len} elements")]
    OutOfRange { index: usize, len: usize },
    #[error("relation is not a strict partial order: {0}")]
    NotPartialOrder(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    below: Vec<u64>,
}

impl Poset {
    /// The order generated by `a < b` for every pair, transitively closed.
    /// Fails if the generated relation has a cycle.
    pub fn from_relations(
        len: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, PosetError> {
        if len > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(len));
        }
        let mut below = vec![0u64; len];
        for (a, b) in pairs {
            for index in [a, b] {
                if index >= len {
                    return Err(PosetError::OutOfRange { index, len });
                }
            }
            below[b] |= 1 << a;
        }
        for k in 0..len {
            for i in 0..len {
                if below[i] >> k & 1 == 1 {
                    below[i] |= below[k];
                }
            }
        }
        if let Some(i) = (0..len).find(|&i| below[i] >> i & 1 == 1) {
            return Err(PosetError::NotPartialOrder(format!(
                "element {i} lies on a cycle"
            )));
        }
        Ok(Self { below })
    }

    /// Accepts an explicit relation as-is, checking that it is irreflexive
    /// and transitive (hence a strict partial order).
    pub fn from_strict_order(
        len: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, PosetError> {
        if len > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(len));
        }
        let mut below = vec![0u64; len];
        for (a, b) in pairs {
            for index in [a, b] {
                if index >= len {
                    return Err(PosetError::OutOfRange { index, len });
                }
            }
            if a == b {
                return Err(PosetError::NotPartialOrder(format!("{a} < {a}")));
            }
            below[b] |= 1 << a;
        }
        for b in 0..len {
            for a in bits(below[b]) {
                if below[a] & !below[b] != 0 {
                    let c = bits(below[a] & !below[b]).next().unwrap_or_default();
                    return Err(PosetError::NotPartialOrder(format!(
                        "{c} < {a} < {b} but not {c} < {b}"
                    )));
                }
            }
        }
        Ok(Self { below })
    }

    pub fn chain(len: usize) -> Result<Self, PosetError> {
        Self::from_relations(len, (1..len).map(|i| (i - 1, i)))
    }

    pub fn antichain(len: usize) -> Result<Self, PosetError> {
        Self::from_relations(len, std::iter::empty())
    }

    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    pub fn is_less(&self, a: usize, b: usize) -> bool {
        self.below[b] >> a & 1 == 1
    }

    /// Strict predecessors of `b` as a bitmask.
    pub fn predecessors(&self, b: usize) -> u64 {
        self.below[b]
    }

    /// All comparable pairs `(a, b)` with `a < b`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.below
            .iter()
            .enumerate()
            .flat_map(|(b, &mask)| bits(mask).map(move |a| (a, b)))
    }

    /// Whether `order` (a permutation of the elements, listed from the
    /// first position to the last) respects the partial order.
    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        if order.len() != self.len() {
            return false;
        }
        let mut seen = 0u64;
        for &x in order {
            if x >= self.len() || seen >> x & 1 == 1 || self.below[x] & !seen != 0 {
                return false;
            }
            seen |= 1 << x;
        }
        true
    }

    /// Number of linear extensions, by dynamic programming over down-sets.
    pub fn count_linear_extensions(&self) -> BigUint {
        match self.downset_dp::<u128>() {
            Some(count) => BigUint::from(count),
            None => self
                .downset_dp::<BigUint>()
                .expect("arbitrary-precision addition cannot overflow"),
        }
    }

    // f(S) = number of ways to list the down-set S; extend S by any minimal
    // element of its complement. Returns None on overflow of T.
    fn downset_dp<T>(&self) -> Option<T>
    where
        T: Clone + Zero + One + CheckedAdd,
    {
        let n = self.len();
        let mut layer: HashMap<u64, T> = HashMap::from([(0, T::one())]);
        for _ in 0..n {
            let mut next: HashMap<u64, T> = HashMap::with_capacity(layer.len() * 2);
            for (mask, count) in layer {
                for x in 0..n {
                    if mask >> x & 1 == 0 && self.below[x] & !mask == 0 {
                        let slot = next.entry(mask | 1 << x).or_insert_with(T::zero);
                        *slot = slot.checked_add(&count)?;
                    }
                }
            }
            layer = next;
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        layer.remove(&full)
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
