//! Concrete number theory: primality, membership in
//! 𝔑 = {α even : α ≥ 16, α/2 and α − 3 not prime}, and Goldbach partitions.
//!
//! [`scan`] sieves once and then counts partitions for every member of 𝔑 up
//! to a limit. The work splits into independent contiguous ranges of α
//! ([`split_range`] / [`scan_range`]) whose results [`FrakNReport::merge`]
//! combines; the merged report does not depend on how the range was split.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    if m <= u32::MAX as u64 {
        a * b % m
    } else {
        ((a as u128 * b as u128) % m as u128) as u64
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller–Rabin. Below 2^32 the witnesses 2, 7, 61 suffice;
/// the first twelve primes suffice for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    // no factor up to 37 and below 41²
    if n < 41 * 41 {
        return true;
    }
    let witnesses: &[u64] = if n <= u32::MAX as u64 { &[2, 7, 61] } else { &SMALL_PRIMES };
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in witnesses {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest member of 𝔑.
pub const FRAK_N_MIN: u64 = 16;

#[allow(non_snake_case)]
pub fn in_frakN(alpha: u64) -> bool {
    alpha.is_multiple_of(2) && alpha >= FRAK_N_MIN && !is_prime(alpha / 2) && !is_prime(alpha - 3)
}

/// Members of 𝔑 that are at most `limit`, ascending.
#[allow(non_snake_case)]
pub fn enumerate_frakN(limit: u64) -> Vec<u64> {
    (0..=limit).filter(|a| in_frakN(*a)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionError {
    Odd(u64),
    TooSmall(u64),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::Odd(n) => write!(f, "{n} is odd"),
            PartitionError::TooSmall(n) => write!(f, "{n} is smaller than 4"),
        }
    }
}

impl core::error::Error for PartitionError {}

/// All `(p, q)` with `p ≤ q`, both prime and `p + q = alpha`, ascending in `p`.
pub fn partitions(alpha: u64) -> Result<Vec<(u64, u64)>, PartitionError> {
    if alpha % 2 == 1 {
        return Err(PartitionError::Odd(alpha));
    }
    if alpha < 4 {
        return Err(PartitionError::TooSmall(alpha));
    }
    Ok((2..=alpha / 2).filter(|p| is_prime(*p) && is_prime(alpha - p)).map(|p| (p, alpha - p)).collect())
}

/// Primality of every integer in `0..=limit`, packed one bit per integer.
#[derive(Clone, Debug)]
pub struct PrimeTable {
    limit: u64,
    bits: Vec<u64>,
    /// Bit `i` is set iff `limit - i` is prime.
    reversed: Vec<u64>,
}

const SEGMENT: u64 = 1 << 16;

fn get_bit(bits: &[u64], i: u64) -> bool {
    bits[(i / 64) as usize] >> (i % 64) & 1 == 1
}

fn set_bit(bits: &mut [u64], i: u64) {
    bits[(i / 64) as usize] |= 1 << (i % 64);
}

/// 64 bits of `bits` starting at bit `start`; bits past the end read as 0.
fn window(bits: &[u64], start: u64) -> u64 {
    let w = (start / 64) as usize;
    let b = start % 64;
    let lo = bits.get(w).copied().unwrap_or(0);
    if b == 0 {
        lo
    } else {
        let hi = bits.get(w + 1).copied().unwrap_or(0);
        (lo >> b) | (hi << (64 - b))
    }
}

fn isqrt(n: u64) -> u64 {
    let mut r = 0u64;
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

impl PrimeTable {
    /// Segmented sieve of Eratosthenes over `0..=limit`.
    pub fn new(limit: u64) -> PrimeTable {
        let words = (limit / 64 + 1) as usize;
        let mut bits = vec![0u64; words];
        let root = isqrt(limit);
        let mut small = vec![true; root as usize + 1];
        let mut base = Vec::new();
        for i in 2..=root {
            if small[i as usize] {
                base.push(i);
                let mut j = i * i;
                while j <= root {
                    small[j as usize] = false;
                    j += i;
                }
            }
        }
        let mut segment = vec![true; SEGMENT as usize];
        let mut lo = 0;
        while lo <= limit {
            let hi = (lo + SEGMENT - 1).min(limit);
            let seg = &mut segment[..(hi - lo + 1) as usize];
            seg.fill(true);
            for &p in &base {
                let first = (p * p).max(lo.div_ceil(p) * p);
                let mut m = first;
                while m <= hi {
                    seg[(m - lo) as usize] = false;
                    m += p;
                }
            }
            for (off, prime) in seg.iter().enumerate() {
                let n = lo + off as u64;
                if *prime && n >= 2 {
                    set_bit(&mut bits, n);
                }
            }
            lo = hi + 1;
        }
        let mut reversed = vec![0u64; words];
        for n in 0..=limit {
            if get_bit(&bits, n) {
                set_bit(&mut reversed, limit - n);
            }
        }
        PrimeTable { limit, bits, reversed }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Panics if `n` exceeds the table limit.
    pub fn is_prime(&self, n: u64) -> bool {
        assert!(n <= self.limit, "{n} is beyond the sieve limit {}", self.limit);
        get_bit(&self.bits, n)
    }

    pub fn in_frak_n(&self, alpha: u64) -> bool {
        alpha.is_multiple_of(2) && alpha >= FRAK_N_MIN && !self.is_prime(alpha / 2) && !self.is_prime(alpha - 3)
    }

    /// Number of partitions of an even `alpha ≤ limit`, counted a word at a
    /// time: bit `p` of the table against bit `limit - alpha + p` of the
    /// reversed table.
    pub fn partition_count(&self, alpha: u64) -> u64 {
        assert!(alpha <= self.limit);
        let half = alpha / 2;
        let shift = self.limit - alpha;
        let mut count = 0u64;
        let mut p = 0;
        while p <= half {
            let mut word = self.bits[(p / 64) as usize] & window(&self.reversed, p + shift);
            let remaining = half - p + 1;
            if remaining < 64 {
                word &= (1u64 << remaining) - 1;
            }
            count += word.count_ones() as u64;
            p += 64;
        }
        count
    }
}

/// Scan result for one contiguous range of α.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanChunk {
    pub members: Vec<u64>,
    pub counts: Vec<u64>,
}

/// Members of 𝔑 in `lo..=hi` with their partition counts.
pub fn scan_range(table: &PrimeTable, lo: u64, hi: u64) -> ScanChunk {
    let mut chunk = ScanChunk::default();
    let start = lo.max(FRAK_N_MIN).next_multiple_of(2);
    let mut alpha = start;
    while alpha <= hi {
        if table.in_frak_n(alpha) {
            chunk.members.push(alpha);
            chunk.counts.push(table.partition_count(alpha));
        }
        alpha += 2;
    }
    chunk
}

/// Splits `0..=limit` into at most `chunks` contiguous nonempty ranges.
pub fn split_range(limit: u64, chunks: usize) -> Vec<(u64, u64)> {
    let chunks = (chunks.max(1) as u64).min(limit + 1);
    let len = (limit + 1).div_ceil(chunks);
    (0..chunks).map(|i| (i * len, ((i + 1) * len - 1).min(limit))).filter(|(lo, hi)| lo <= hi).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrakNReport {
    pub limit: u64,
    pub members: Vec<u64>,
    /// Every member has at least one partition.
    pub verified: bool,
    pub first_failure: Option<u64>,
    pub partition_counts: BTreeMap<u64, u64>,
}

impl FrakNReport {
    /// Combines chunk results given in ascending range order.
    pub fn merge(limit: u64, chunks: impl IntoIterator<Item = ScanChunk>) -> FrakNReport {
        let mut members = Vec::new();
        let mut partition_counts = BTreeMap::new();
        for chunk in chunks {
            for (m, c) in chunk.members.into_iter().zip(chunk.counts) {
                members.push(m);
                partition_counts.insert(m, c);
            }
        }
        members.sort_unstable();
        let first_failure = members.iter().copied().find(|m| partition_counts[m] == 0);
        FrakNReport { limit, members, verified: first_failure.is_none(), first_failure, partition_counts }
    }
}

/// Sequential scan split into `chunks` ranges.
pub fn scan_chunked(limit: u64, chunks: usize) -> FrakNReport {
    let table = PrimeTable::new(limit);
    let parts = split_range(limit, chunks).into_iter().map(|(lo, hi)| scan_range(&table, lo, hi));
    FrakNReport::merge(limit, parts)
}

/// Checks every member of 𝔑 up to `limit` for a Goldbach partition.
pub fn scan(limit: u64) -> FrakNReport {
    scan_chunked(limit, 1)
}
