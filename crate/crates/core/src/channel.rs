//! Binary symmetric channel simulation with minimum-distance decoding.
//!
//! Messages are encoded as GF(2) combinations of generator rows, each bit is
//! flipped independently with an exact rational probability, and the received
//! word is decoded by exhaustive minimum distance. Ties are never broken:
//! a received word equidistant from two codewords decodes to `Ambiguous`.
//! All randomness comes from a ChaCha8 stream reseeded per trial from the
//! base seed plus the trial index, so every report is reproducible from the
//! seed alone.

use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::bits::BitVec;
use crate::codes::{rank, BinaryCode};
use crate::fuzzy::Grade;

/// Largest generator rank for which exhaustive decoding runs.
pub const MAX_DECODE_RANK: usize = 20;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ChannelError {
    #[error("flip probability must lie in [0, 1], got {got}")]
    ProbabilityOutOfRange { got: String },
    #[error("message {message} does not fit in {k} bits")]
    MessageTooWide { message: u64, k: usize },
    #[error("received word has {got} bits, the code has length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("decoding requires a full-rank generator: rank {rank} over {k} rows")]
    NotFullRank { rank: usize, k: usize },
    #[error("exhaustive decoding supports at most {cap} rows, got {got}")]
    TooManyRows { got: usize, cap: usize },
}

/// Encodes a k-bit message: row i of the generator is included when message
/// bit k-1-i is set, so the leftmost written bit drives the first row.
pub fn encode(code: &BinaryCode, message: u64) -> Result<BitVec, ChannelError> {
    let k = code.k();
    if k < 64 && message >> k != 0 {
        return Err(ChannelError::MessageTooWide { message, k });
    }
    let mut word = BitVec::zeros(code.n());
    for i in 0..k {
        if message >> (k - 1 - i) & 1 == 1 {
            word.xor_assign(code.row(i));
        }
    }
    Ok(word)
}

/// Decoding verdict. `Ambiguous` means at least two codewords sit at the
/// minimum distance; no tie is ever broken silently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeOutcome {
    Unique { message: u64, distance: usize },
    Ambiguous { distance: usize },
}

/// Exhaustive minimum-distance decoding over all 2^k messages. The generator
/// must have full row rank so messages and codewords are in bijection.
pub fn decode_min_distance(
    code: &BinaryCode,
    received: &BitVec,
) -> Result<DecodeOutcome, ChannelError> {
    let k = code.k();
    if k > MAX_DECODE_RANK {
        return Err(ChannelError::TooManyRows {
            got: k,
            cap: MAX_DECODE_RANK,
        });
    }
    if received.len() != code.n() {
        return Err(ChannelError::LengthMismatch {
            expected: code.n(),
            got: received.len(),
        });
    }
    let r = rank(code);
    if r != k {
        return Err(ChannelError::NotFullRank { rank: r, k });
    }
    // Walk row combinations in Gray-code order; one XOR per step.
    let mut word = BitVec::zeros(code.n());
    let mut best_distance = received.distance(&word);
    let mut best_message = 0u64;
    let mut tied = false;
    for m in 1u64..(1u64 << k) {
        let row = m.trailing_zeros() as usize;
        word.xor_assign(code.row(row));
        let d = received.distance(&word);
        if d < best_distance {
            best_distance = d;
            tied = false;
            // Combination bit i selects row i; message bit k-1-i does.
            let gray = m ^ (m >> 1);
            best_message = (0..k)
                .filter(|&i| gray >> i & 1 == 1)
                .fold(0u64, |acc, i| acc | 1 << (k - 1 - i));
        } else if d == best_distance {
            tied = true;
        }
    }
    if tied {
        Ok(DecodeOutcome::Ambiguous {
            distance: best_distance,
        })
    } else {
        Ok(DecodeOutcome::Unique {
            message: best_message,
            distance: best_distance,
        })
    }
}

/// Simulation parameters: exact flip probability, trial count, base seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChannelConfig {
    pub flip_probability: Grade,
    pub trials: u64,
    pub seed: u64,
}

/// Aggregated outcome of a simulation run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChannelReport {
    pub config: ChannelConfig,
    pub code_length: usize,
    pub code_rank: usize,
    pub successes: u64,
    pub ambiguous: u64,
    pub residual_errors: u64,
}

impl std::fmt::Display for ChannelReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "# rng=chacha8")?;
        writeln!(f, "# trials\tsuccesses\tambiguous\tresidual_errors\tseed\tp")?;
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.config.trials,
            self.successes,
            self.ambiguous,
            self.residual_errors,
            self.config.seed,
            self.config.flip_probability
        )
    }
}

/// Uniform draw in [0, bound) by rejection, so no modulo bias enters the
/// flip decisions.
fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let limit = u64::MAX / bound * bound;
    loop {
        let x = rng.next_u64();
        if x < limit {
            return x % bound;
        }
    }
}

/// Runs the binary symmetric channel: each trial draws a uniform message,
/// encodes it, flips each bit with probability `num/den` decided by an exact
/// integer comparison, and decodes. Trial t uses its own ChaCha8 stream
/// seeded with `seed + t`, making the run order-independent and reproducible.
pub fn run_channel(code: &BinaryCode, config: &ChannelConfig) -> Result<ChannelReport, ChannelError> {
    let p = config.flip_probability;
    if p < Grade::zero() || p > Grade::one() {
        return Err(ChannelError::ProbabilityOutOfRange { got: p.to_string() });
    }
    let k = code.k();
    if k > MAX_DECODE_RANK {
        return Err(ChannelError::TooManyRows {
            got: k,
            cap: MAX_DECODE_RANK,
        });
    }
    let r = rank(code);
    if r != k {
        return Err(ChannelError::NotFullRank { rank: r, k });
    }
    // Grades are normalized rationals in [0, 1], so both parts are nonnegative.
    let num = *p.numer() as u64;
    let den = *p.denom() as u64;
    let mask = (1u64 << k) - 1;
    let mut successes = 0;
    let mut ambiguous = 0;
    let mut residual_errors = 0;
    for t in 0..config.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(t));
        let message = rng.next_u64() & mask;
        let mut word = encode(code, message)?;
        for j in 0..word.len() {
            if uniform_below(&mut rng, den) < num {
                let flipped = !word.get(j);
                word.set(j, flipped);
            }
        }
        match decode_min_distance(code, &word)? {
            DecodeOutcome::Unique { message: decoded, .. } if decoded == message => {
                successes += 1;
            }
            DecodeOutcome::Unique { .. } => residual_errors += 1,
            DecodeOutcome::Ambiguous { .. } => ambiguous += 1,
        }
    }
    Ok(ChannelReport {
        config: config.clone(),
        code_length: code.n(),
        code_rank: k,
        successes,
        ambiguous,
        residual_errors,
    })
}
