//! Memory budgets of the two sweeps, in bytes.
//!
//! The lean maximal sweep keeps the text, three index arrays and the bit
//! tree (about two bits per symbol) resident; the supermaximal sweep keeps
//! the text, two index arrays and a symbol set of `|A|` entries.

use crate::Idx;

/// Bits per stored index.
pub const WORD_BITS: usize = 8 * std::mem::size_of::<Idx>();
/// Bits per text symbol.
pub const SYMBOL_BITS: usize = 8;
pub const ALPHABET: usize = 256;

/// `n (3 w + log|A| + 2)` bits: 13.25 bytes per symbol with 32-bit indices.
pub fn maximal_lean_bytes(n: usize) -> f64 {
    n as f64 * (3 * WORD_BITS + SYMBOL_BITS + 2) as f64 / 8.0
}

/// `n (2 w + log|A| + 2) + |A|` bits: 9.25 bytes per symbol.
pub fn supermaximal_bytes(n: usize) -> f64 {
    (n as f64 * (2 * WORD_BITS + SYMBOL_BITS + 2) as f64 + ALPHABET as f64) / 8.0
}

/// Standard maximal sweep: the lean budget plus the resident LCP array.
pub fn maximal_standard_bytes(n: usize) -> f64 {
    maximal_lean_bytes(n) + (n * WORD_BITS) as f64 / 8.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn per_symbol_figures() {
        assert_eq!(maximal_lean_bytes(1000), 13_250.0);
        assert_eq!(supermaximal_bytes(1000), 9_250.0 + 32.0);
        assert_eq!(maximal_standard_bytes(4), 69.0);
    }
}
