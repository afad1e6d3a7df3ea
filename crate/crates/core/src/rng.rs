//! Named, splittable seeded streams. All randomness in the crate goes
//! through here; nothing reads ambient entropy.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn name_hash(name: &str) -> u64 {
    // FNV-1a.
    name.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// The stream `name` under `seed`.
pub fn stream(seed: u64, name: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(name_hash(name));
    rng
}

/// A child seed, independent per `(name, index)`.
pub fn split(seed: u64, name: &str, index: u64) -> u64 {
    use rand::RngCore;
    let mut rng = stream(seed, name);
    rng.set_word_pos(index as u128 * 2);
    rng.next_u64()
}
