//! Fixed 64-bit xorshift generator.
//!
//! Every randomized operation in the crate draws from this exact recurrence
//! so that a seed fully determines output across platforms and versions:
//!
//! ```text
//! x ^= x << 13;  x ^= x >> 7;  x ^= x << 17;
//! ```
//!
//! A zero seed is remapped to a fixed nonzero constant (the xorshift state
//! must never be zero).

#[derive(Clone, Debug)]
pub struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        XorShift64 {
            state: if seed == 0 { 0x9e3779b97f4a7c15 } else { seed },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }

    /// Uniform-enough draw in `0..bound` for desk-scale bounds; `bound` must
    /// be nonzero.
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_fixed_seed() {
        let mut a = XorShift64::new(42);
        let mut b = XorShift64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn zero_seed_is_remapped() {
        let mut z = XorShift64::new(0);
        assert_ne!(z.next_u64(), 0);
    }

    #[test]
    fn frozen_first_draws() {
        // Pin the recurrence itself: these values must never change.
        let mut r = XorShift64::new(1);
        assert_eq!(r.next_u64(), 1082269761);
        assert_eq!(r.next_u64(), 1152992998833853505);
        let mut r2 = XorShift64::new(42);
        assert_eq!(r2.next_u64(), 45454805674);
        assert_eq!(r2.next_u64(), 11532217803599905471);
    }
}
