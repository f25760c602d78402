//! One-hot packing for bulk order comparisons.
//!
//! Every order used on graphs is a conjunction of per-edge conditions, so an
//! element can be stored as one state index per edge and `x ≤ y` reduces to
//! `(up(x) & onehot(y)) == onehot(y)` over a few machine words.

/// A per-edge relation on a finite state alphabet, lifted to tuples of states.
#[derive(Debug, Clone)]
pub struct PackedOrder {
    edges: usize,
    alphabet: usize,
    /// `up[s]` = bitmask of states `t` with `s ≤ t`.
    up: Vec<u128>,
    per_word: usize,
}

/// Packed tuple of per-edge states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packed {
    up: Vec<u128>,
    onehot: Vec<u128>,
}

impl Packed {
    /// `(up, onehot)` when the tuple fits in one word.
    pub fn single_word(&self) -> Option<(u128, u128)> {
        (self.up.len() == 1).then(|| (self.up[0], self.onehot[0]))
    }
}

impl PackedOrder {
    pub fn new(edges: usize, alphabet: usize, rel: impl Fn(usize, usize) -> bool) -> Self {
        assert!((1..=128).contains(&alphabet));
        let up = (0..alphabet)
            .map(|s| (0..alphabet).filter(|&t| rel(s, t)).fold(0u128, |m, t| m | (1u128 << t)))
            .collect();
        PackedOrder { edges, alphabet, up, per_word: 128 / alphabet }
    }

    pub fn pack(&self, states: &[usize]) -> Packed {
        assert_eq!(states.len(), self.edges);
        let words = self.edges.div_ceil(self.per_word).max(1);
        let mut up = vec![0u128; words];
        let mut onehot = vec![0u128; words];
        for (e, &s) in states.iter().enumerate() {
            assert!(s < self.alphabet);
            let (w, slot) = (e / self.per_word, (e % self.per_word) * self.alphabet);
            up[w] |= self.up[s] << slot;
            onehot[w] |= 1u128 << (slot + s);
        }
        Packed { up, onehot }
    }

    #[inline]
    pub fn leq(x: &Packed, y: &Packed) -> bool {
        x.up.iter().zip(&y.onehot).all(|(&u, &o)| u & o == o)
    }
}
