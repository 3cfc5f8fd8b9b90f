//! Recursive soft-decision decoding of Reed-Muller codes and their subcodes.
//!
//! A Reed-Muller code `{m, r}` has length `n = 2^m`, dimension
//! `k = sum_{i<=r} C(m, i)` and minimum distance `d = 2^(m-r)`. The crate is
//! built around the Plotkin `(u, u+v)` decomposition of these codes:
//!
//! * [`code`] — code parameters, the decomposition tree, the mapping of
//!   information bits onto binary paths through that tree, and subcode
//!   freeze masks;
//! * [`codec`] — recursive encoder, generator matrices and exact information
//!   recovery from valid codewords;
//! * [`channel`] — BPSK over AWGN/BSC and conversion of channel output into
//!   soft evidence ([`soft::SoftVector`]);
//! * [`decoder`] — the recursive two-step decoder with exact or approximate
//!   evidence recalculation and ML decoding at the terminal nodes;
//! * [`list`] — breadth-limited list decoding over the same recursion;
//! * [`perm`] — coordinate-bit permutations from the code symmetry group and
//!   pooled permutation decoding;
//! * [`analysis`] — closed-form noise-propagation estimates of per-bit error
//!   rates and asymptotic decoding thresholds.
//!
//! The crate is `no_std` (with `alloc`); all I/O, CLI and simulation live in
//! the companion `rmsim` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod bits;
pub mod channel;
pub mod code;
pub mod codec;
pub mod decoder;
mod error;
pub mod list;
pub mod perm;
pub mod soft;

pub use bits::BitBlock;
pub use channel::ChannelModel;
pub use code::{BitPath, CodeId, DecompositionNode, FrozenMask, NodeKind, TerminationPolicy};
pub use codec::{Codeword, InfoBlock};
pub use decoder::{DecodeResult, Decoder, RecalcMode};
pub use error::{Error, Result};
pub use list::{CandidatePath, ListDecoder, PathList};
pub use perm::{BitPermutation, PermutationSet};
pub use soft::{Representation, SoftVector};
