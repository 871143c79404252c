use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/t_1 + ... + Z/t_k with 2 <= t_1 | t_2 | ... | t_k.
///
/// The representation is canonical, so structural equality decides group
/// isomorphism. Unit factors are dropped at construction and a cyclic group
/// of order 0 is the infinite cyclic group Z.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    /// Builds the canonical form. `torsion` entries equal to 1 are dropped,
    /// entries equal to 0 are converted to free summands; the remaining
    /// entries must already form a divisibility chain.
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        let mut free = free_rank;
        let mut cleaned: Vec<BigInt> = Vec::with_capacity(torsion.len());
        for t in torsion {
            if t.is_zero() {
                free += 1;
            } else if !t.is_one() {
                debug_assert!(t > BigInt::one());
                cleaned.push(t);
            }
        }
        cleaned.sort();
        for w in cleaned.windows(2) {
            debug_assert!(
                (&w[1] % &w[0]).is_zero(),
                "torsion coefficients must form a divisibility chain: {cleaned:?}"
            );
        }
        AbelianGroup {
            free_rank: free,
            torsion: cleaned,
        }
    }

    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Z/k, with the conventions Z/0 = Z and Z/1 = 0.
    pub fn cyclic(order: &BigInt) -> Self {
        AbelianGroup::new(0, vec![order.clone()])
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Generated by a single element: 0, Z, or Z/k.
    pub fn is_cyclic(&self) -> bool {
        (self.free_rank + self.torsion.len()) <= 1
    }

    /// Order of the group when finite.
    pub fn order(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        Some(self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroup {
    /// Canonical rendering: torsion factors in divisor order, then the free
    /// part, e.g. "Z/2 + Z^2"; the trivial group prints as "0".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("Z/{t}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
