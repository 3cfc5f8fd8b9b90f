//! Bit-packed binary blocks and the GF(2) Plotkin butterfly.
//!
//! Codewords and information blocks are stored at machine-word granularity so
//! that XOR, Hamming weight and the recursive `(u, u+v)` transform run on
//! whole limbs in the Monte Carlo hot path.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Result};

const LIMB_BITS: usize = 64;

/// A fixed-length sequence of bits packed into `u64` limbs (LSB first).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitBlock {
    limbs: Vec<u64>,
    len: usize,
}

impl BitBlock {
    /// All-zero block of `len` bits.
    pub fn zeros(len: usize) -> Self {
        BitBlock {
            limbs: vec![0; len.div_ceil(LIMB_BITS)],
            len,
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut b = BitBlock::zeros(bits.len());
        for (i, &bit) in bits.iter().enumerate() {
            if bit {
                b.set(i, true);
            }
        }
        b
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.limbs[i / LIMB_BITS] >> (i % LIMB_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let limb = &mut self.limbs[i / LIMB_BITS];
        let mask = 1u64 << (i % LIMB_BITS);
        if value {
            *limb |= mask;
        } else {
            *limb &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.limbs[i / LIMB_BITS] ^= 1u64 << (i % LIMB_BITS);
    }

    /// In-place XOR with another block of the same length.
    pub fn xor_with(&mut self, other: &BitBlock) {
        assert_eq!(self.len, other.len, "xor of unequal blocks");
        for (a, b) in self.limbs.iter_mut().zip(other.limbs.iter()) {
            *a ^= b;
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    /// Number of positions in which `self` and `other` differ.
    pub fn distance(&self, other: &BitBlock) -> usize {
        assert_eq!(self.len, other.len);
        self.limbs
            .iter()
            .zip(other.limbs.iter())
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        self.iter().collect()
    }

    /// Renders as a 0/1 string, position 0 first.
    pub fn to_bit_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// Parses a 0/1 string, position 0 first.
    pub fn from_bit_string(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_whitespace() => {}
                c => invalid!("unexpected character {c:?} in bit string"),
            }
        }
        Ok(BitBlock::from_bools(&bits))
    }

    /// Hex rendering, one nibble per four positions (position 0 = LSB of the
    /// first nibble), uppercase.
    pub fn to_hex_string(&self) -> String {
        let mut s = String::with_capacity(self.len.div_ceil(4));
        for nib in 0..self.len.div_ceil(4) {
            let mut v = 0u8;
            for b in 0..4 {
                let i = nib * 4 + b;
                if i < self.len && self.get(i) {
                    v |= 1 << b;
                }
            }
            s.push(char::from_digit(v as u32, 16).unwrap().to_ascii_uppercase());
        }
        s
    }

    /// Parses the [`to_hex_string`](Self::to_hex_string) format into `len` bits.
    pub fn from_hex_string(s: &str, len: usize) -> Result<Self> {
        let digits: Vec<u8> = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                c.to_digit(16)
                    .map(|d| d as u8)
                    .ok_or(())
                    .map_err(|_| crate::Error::InvalidParameter(alloc::format!("bad hex digit {c:?}")))
            })
            .collect::<Result<_>>()?;
        if digits.len() != len.div_ceil(4) {
            invalid!("hex string holds {} nibbles, need {}", digits.len(), len.div_ceil(4));
        }
        let mut b = BitBlock::zeros(len);
        for i in 0..len {
            if (digits[i / 4] >> (i % 4)) & 1 == 1 {
                b.set(i, true);
            }
        }
        Ok(b)
    }
}

impl fmt::Debug for BitBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitBlock({})", self.to_bit_string())
    }
}

/// In-place Plotkin butterfly over GF(2).
///
/// For stride h = 1, 2, 4, ..., n/2 and every block of 2h positions, the
/// upper half is replaced by the XOR of the two halves. The map is an
/// involution, and applying it to a vector holding information bits at their
/// binary-path positions (zeros elsewhere) produces the corresponding
/// codeword.
pub fn plotkin_transform(block: &mut BitBlock) {
    let n = block.len;
    assert!(n.is_power_of_two(), "transform needs a power-of-two length");
    let mut h = 1usize;
    while h < n {
        if h < LIMB_BITS {
            // Lower-half mask replicated across the limb: h ones, h zeros, ...
            let ones = if h == LIMB_BITS { u64::MAX } else { (1u64 << h) - 1 };
            let mut mask = ones;
            let mut span = 2 * h;
            while span < LIMB_BITS {
                mask |= mask << span;
                span <<= 1;
            }
            for limb in block.limbs.iter_mut() {
                *limb ^= (*limb & mask) << h;
            }
        } else {
            let hw = h / LIMB_BITS;
            let mut base = 0;
            while base + 2 * hw <= block.limbs.len() {
                for i in 0..hw {
                    block.limbs[base + hw + i] ^= block.limbs[base + i];
                }
                base += 2 * hw;
            }
        }
        h <<= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn transform_ref(bits: &[bool]) -> Vec<bool> {
        // Direct recursive (u, u+v) oracle: first half u, second half v,
        // output (u, u + v).
        fn rec(x: &[bool]) -> Vec<bool> {
            if x.len() == 1 {
                return x.to_vec();
            }
            let half = x.len() / 2;
            let u = rec(&x[..half]);
            let v = rec(&x[half..]);
            let mut out = u.clone();
            out.extend(u.iter().zip(v.iter()).map(|(a, b)| a ^ b));
            out
        }
        rec(bits)
    }

    #[test]
    fn get_set_weight() {
        let mut b = BitBlock::zeros(130);
        b.set(0, true);
        b.set(64, true);
        b.set(129, true);
        assert_eq!(b.weight(), 3);
        assert!(b.get(64));
        b.flip(64);
        assert_eq!(b.weight(), 2);
        assert!(!b.get(64));
    }

    #[test]
    fn transform_matches_recursive_oracle() {
        for n in [1usize, 2, 4, 8, 16, 64, 128, 256] {
            // a few deterministic pseudorandom patterns per size
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..8 {
                let bits: Vec<bool> = (0..n)
                    .map(|_| {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        (state >> 33) & 1 == 1
                    })
                    .collect();
                let mut b = BitBlock::from_bools(&bits);
                plotkin_transform(&mut b);
                assert_eq!(b.to_bools(), transform_ref(&bits), "n={n}");
            }
        }
    }

    #[test]
    fn transform_is_involution() {
        let bits: Vec<bool> = (0..256).map(|i| (i * 7 + 3) % 5 == 0).collect();
        let orig = BitBlock::from_bools(&bits);
        let mut b = orig.clone();
        plotkin_transform(&mut b);
        plotkin_transform(&mut b);
        assert_eq!(b, orig);
    }

    #[test]
    fn string_round_trips() {
        let b = BitBlock::from_bit_string("1011001110001").unwrap();
        assert_eq!(b.len(), 13);
        assert_eq!(b.to_bit_string(), "1011001110001");
        let h = b.to_hex_string();
        assert_eq!(BitBlock::from_hex_string(&h, 13).unwrap(), b);
    }
}
