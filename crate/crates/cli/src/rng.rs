//! SplitMix64, the generator behind `--f random`.
//!
//! The stream is fixed so that any implementation seeded with the same value
//! draws the same polynomials.

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Coefficients of a random degree-`m` polynomial over a field of size `q`,
    /// low-to-high: `next % q` for the lower ones, `1 + next % (q - 1)` for the leading one.
    pub fn polynomial(&mut self, q: u64, m: u32) -> Vec<u64> {
        let mut out: Vec<u64> = (0..m).map(|_| self.next_u64() % q).collect();
        out.push(1 + self.next_u64() % (q - 1));
        out
    }
}
