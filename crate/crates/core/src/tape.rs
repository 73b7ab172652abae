//! Metered sources of uniform random bits.
//!
//! A tape is either a ChaCha20 stream keyed by a 64-bit seed or an explicit
//! finite bit string. Bits are consumed least significant first, and every
//! read is counted, so the sampler's randomness cost is measured rather than
//! asserted.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{BaseField, ExtField, FieldElem};

/// Odd multiplier used to derive per-trial seeds.
pub const SPLIT_MULTIPLIER: u64 = 0x9E37_79B9_7F4A_7C15;

/// Seed for trial `index` of an experiment keyed by `seed`.
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    seed ^ index.wrapping_mul(SPLIT_MULTIPLIER)
}

/// Where a tape's bits came from, as recorded in code provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TapeOrigin {
    /// Seed of the pseudorandom stream, as `0x`-prefixed hex.
    Seed(String),
    /// The explicit bit string, first-consumed bit first.
    Bits(String),
}

enum Source {
    Stream {
        rng: Box<ChaCha20Rng>,
        word: u64,
        left: u32,
    },
    Explicit {
        bits: Vec<bool>,
        pos: usize,
    },
}

pub struct RandomnessTape {
    source: Source,
    origin: TapeOrigin,
    consumed: u64,
}

impl std::fmt::Debug for RandomnessTape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RandomnessTape")
            .field("origin", &self.origin)
            .field("consumed", &self.consumed)
            .finish()
    }
}

impl RandomnessTape {
    pub fn seeded(seed: u64) -> Self {
        RandomnessTape {
            source: Source::Stream {
                rng: Box::new(ChaCha20Rng::seed_from_u64(seed)),
                word: 0,
                left: 0,
            },
            origin: TapeOrigin::Seed(format!("{seed:#x}")),
            consumed: 0,
        }
    }

    /// Tape for trial `index` under the splitting rule of [`trial_seed`].
    pub fn for_trial(seed: u64, index: u64) -> Self {
        Self::seeded(trial_seed(seed, index))
    }

    pub fn explicit(bits: Vec<bool>) -> Self {
        let text = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        RandomnessTape {
            source: Source::Explicit { bits, pos: 0 },
            origin: TapeOrigin::Bits(text),
            consumed: 0,
        }
    }

    /// Parses a string of `0`/`1` characters.
    pub fn from_bit_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("tape character {other:?} is not a bit"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::explicit(bits))
    }

    /// The explicit tape that makes the samplers draw exactly `symbols`: each
    /// symbol becomes one `⌈log2 q⌉`-bit block, least significant bit first.
    pub fn from_symbols(base: &BaseField, symbols: &[u8]) -> Self {
        let w = base.symbol_width();
        let mut bits = Vec::with_capacity(symbols.len() * w as usize);
        for &s in symbols {
            for i in 0..w {
                bits.push((s >> i) & 1 == 1);
            }
        }
        Self::explicit(bits)
    }

    /// The `index`-th tape in the exhaustive enumeration of `count` symbols
    /// (index digits base `q`, least significant first).
    pub fn enumerated(base: &BaseField, count: usize, mut index: u128) -> Self {
        let q = base.q() as u128;
        let symbols: Vec<u8> = (0..count)
            .map(|_| {
                let d = (index % q) as u8;
                index /= q;
                d
            })
            .collect();
        Self::from_symbols(base, &symbols)
    }

    pub fn origin(&self) -> &TapeOrigin {
        &self.origin
    }

    /// Exact number of bits read so far.
    pub fn consumed_bits(&self) -> u64 {
        self.consumed
    }

    pub fn read_bit(&mut self) -> Result<bool> {
        let bit = match &mut self.source {
            Source::Stream { rng, word, left } => {
                if *left == 0 {
                    *word = rng.next_u64();
                    *left = 64;
                }
                let b = *word & 1 == 1;
                *word >>= 1;
                *left -= 1;
                b
            }
            Source::Explicit { bits, pos } => {
                let b = *bits.get(*pos).ok_or(Error::TapeExhausted { consumed: self.consumed })?;
                *pos += 1;
                b
            }
        };
        self.consumed += 1;
        Ok(bit)
    }

    /// Reads `w <= 64` bits into an integer, first bit least significant.
    pub fn read_bits(&mut self, w: u32) -> Result<u64> {
        debug_assert!(w <= 64);
        let mut v = 0u64;
        for i in 0..w {
            if self.read_bit()? {
                v |= 1 << i;
            }
        }
        Ok(v)
    }

    /// A uniform symbol of `F_q`: `⌈log2 q⌉`-bit blocks with rejection of
    /// values `>= q` (never rejects when `q` is a power of two).
    pub fn draw_symbol(&mut self, base: &BaseField) -> Result<u8> {
        let w = base.symbol_width();
        loop {
            let v = self.read_bits(w)?;
            if v < base.q() as u64 {
                return Ok(v as u8);
            }
        }
    }

    pub fn draw_symbols(&mut self, base: &BaseField, count: usize) -> Result<Vec<u8>> {
        (0..count).map(|_| self.draw_symbol(base)).collect()
    }

    /// A uniform element of `F_{q^n}`, coordinates drawn constant term first.
    pub fn draw_elem(&mut self, field: &ExtField) -> Result<FieldElem> {
        let v = self.draw_symbols(field.base(), field.degree())?;
        field.elem(v)
    }

    pub fn draw_elems(&mut self, field: &ExtField, count: usize) -> Result<Vec<FieldElem>> {
        (0..count).map(|_| self.draw_elem(field)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_tapes_count_and_exhaust() {
        let mut t = RandomnessTape::from_bit_str("1011").unwrap();
        assert_eq!(t.read_bits(3).unwrap(), 0b101);
        assert_eq!(t.consumed_bits(), 3);
        assert!(t.read_bit().unwrap());
        assert_eq!(t.read_bit(), Err(Error::TapeExhausted { consumed: 4 }));
        assert!(RandomnessTape::from_bit_str("10x").is_err());
    }

    #[test]
    fn seeded_streams_are_reproducible() {
        let f = BaseField::get(3).unwrap();
        let a = RandomnessTape::seeded(42).draw_symbols(&f, 100).unwrap();
        let b = RandomnessTape::seeded(42).draw_symbols(&f, 100).unwrap();
        let c = RandomnessTape::seeded(43).draw_symbols(&f, 100).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.iter().all(|&s| s < 3));
    }

    #[test]
    fn power_of_two_symbols_cost_exact_bits() {
        for q in [2u64, 4, 8, 16, 256] {
            let f = BaseField::get(q).unwrap();
            let mut t = RandomnessTape::seeded(1);
            t.draw_symbols(&f, 37).unwrap();
            assert_eq!(t.consumed_bits(), 37 * u64::from(f.log2_exact().unwrap()));
        }
    }

    #[test]
    fn rejection_sampling_is_uniform_and_metered() {
        let f = BaseField::get(3).unwrap();
        let mut t = RandomnessTape::seeded(9);
        let mut counts = [0u32; 3];
        for _ in 0..30_000 {
            counts[t.draw_symbol(&f).unwrap() as usize] += 1;
        }
        for c in counts {
            assert!((9_500..10_500).contains(&c), "{counts:?}");
        }
        // Two-bit blocks, accepted with probability 3/4.
        let expected = 30_000.0 * 2.0 * 4.0 / 3.0;
        assert!((t.consumed_bits() as f64 - expected).abs() < 0.02 * expected);
    }

    #[test]
    fn symbol_tapes_round_trip() {
        for q in [2u64, 3, 5, 8, 9] {
            let f = BaseField::get(q).unwrap();
            let symbols: Vec<u8> = (0..20).map(|i| (i * 7 % q) as u8).collect();
            let mut t = RandomnessTape::from_symbols(&f, &symbols);
            assert_eq!(t.draw_symbols(&f, 20).unwrap(), symbols);
            assert!(matches!(t.draw_symbol(&f), Err(Error::TapeExhausted { .. })));
        }
        let f2 = BaseField::get(2).unwrap();
        let mut t = RandomnessTape::enumerated(&f2, 4, 0b0110);
        assert_eq!(t.read_bits(4).unwrap(), 0b0110);
    }

    #[test]
    fn trial_seeds_differ() {
        assert_eq!(trial_seed(5, 0), 5);
        assert_ne!(trial_seed(5, 1), trial_seed(5, 2));
    }
}
