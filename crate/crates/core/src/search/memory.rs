//! Fingerprints and the bounded FIFO memories used by tabu search and
//! iterated local search.

use std::collections::VecDeque;

use crate::graph::Color;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// FNV-1a over the colors as little-endian `u32` bytes, in vertex order.
pub fn fingerprint(colors: &[Color]) -> u64 {
    fingerprint_iter(colors.iter().copied())
}

pub(crate) fn fingerprint_iter(colors: impl IntoIterator<Item = Color>) -> u64 {
    let mut hash = FNV_OFFSET;
    for color in colors {
        for byte in color.to_le_bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(FNV_PRIME);
        }
    }
    hash
}

/// FIFO of at most `capacity` fingerprints; pushing onto a full queue evicts
/// the oldest entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedFifo {
    capacity: usize,
    entries: VecDeque<u64>,
}

impl BoundedFifo {
    /// # Panics
    /// If `capacity` is zero.
    pub fn new(capacity: usize) -> Self {
        assert!(capacity > 0, "capacity must be positive");
        Self {
            capacity,
            entries: VecDeque::with_capacity(capacity),
        }
    }

    /// Appends `entry`, returning the evicted entry if the queue was full.
    pub fn push(&mut self, entry: u64) -> Option<u64> {
        let evicted = if self.entries.len() == self.capacity {
            self.entries.pop_front()
        } else {
            None
        };
        self.entries.push_back(entry);
        evicted
    }

    pub fn contains(&self, entry: u64) -> bool {
        self.entries.contains(&entry)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Oldest first.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().copied()
    }
}

macro_rules! fingerprint_queue {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq)]
        pub struct $name(BoundedFifo);

        impl $name {
            pub fn new(capacity: usize) -> Self {
                Self(BoundedFifo::new(capacity))
            }

            pub fn push(&mut self, fingerprint: u64) -> Option<u64> {
                self.0.push(fingerprint)
            }

            pub fn contains(&self, fingerprint: u64) -> bool {
                self.0.contains(fingerprint)
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn capacity(&self) -> usize {
                self.0.capacity()
            }

            pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
                self.0.iter()
            }
        }
    };
}

fingerprint_queue!(
    /// Recently visited solutions barred from being revisited.
    TabuList
);
fingerprint_queue!(
    /// Fingerprints of recently accepted home bases.
    HomeBaseQueue
);
