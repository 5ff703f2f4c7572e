//! Header framing and keyed keystream masking of the payload bits.
//!
//! Layout before masking: a 32-bit big-endian count of message bits, the
//! message bits (MSB first per byte), then zero fill up to capacity. The
//! whole frame is XORed with a ChaCha20 keystream keyed by a hash of the
//! shared key and selected by the nonce.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

use super::bits::{bits_to_bytes, bytes_to_bits};
use super::Key;

pub const HEADER_BITS: usize = 32;

fn keystream(key: &Key, nonce: u64, len: usize) -> Vec<bool> {
    let seed: [u8; 32] = Sha256::new()
        .chain_update(b"pab2g:keystream")
        .chain_update(key.as_bytes())
        .finalize()
        .into();
    let mut rng = ChaCha20Rng::from_seed(seed);
    rng.set_stream(nonce);
    let mut bytes = vec![0u8; len.div_ceil(8)];
    rng.fill_bytes(&mut bytes);
    let mut bits = bytes_to_bits(&bytes);
    bits.truncate(len);
    bits
}

/// XORs `bits` with the keystream for `(key, nonce)`. An involution.
pub fn apply_keystream(bits: &[bool], key: &Key, nonce: u64) -> Vec<bool> {
    bits.iter()
        .zip(keystream(key, nonce, bits.len()))
        .map(|(&b, k)| b ^ k)
        .collect()
}

/// Frames `message` to exactly `capacity_bits` and masks it.
pub fn pad_and_encrypt(message: &[u8], capacity_bits: usize, key: &Key, nonce: u64) -> Result<Vec<bool>> {
    let needed = HEADER_BITS + 8 * message.len();
    if needed > capacity_bits {
        return Err(Error::Capacity { needed, capacity: capacity_bits });
    }
    let declared = u32::try_from(8 * message.len())
        .map_err(|_| Error::Argument("message longer than 2^32 bits".into()))?;
    let mut frame = Vec::with_capacity(capacity_bits);
    frame.extend(bytes_to_bits(&declared.to_be_bytes()));
    frame.extend(bytes_to_bits(message));
    frame.resize(capacity_bits, false);
    Ok(apply_keystream(&frame, key, nonce))
}

/// Reads the header of an already unmasked frame and returns the message.
pub fn unframe(frame: &[bool]) -> Result<Vec<u8>> {
    if frame.len() < HEADER_BITS {
        return Err(Error::Corruption(format!("{} bits cannot hold a header", frame.len())));
    }
    let header = bits_to_bytes(&frame[..HEADER_BITS]);
    let declared = u32::from_be_bytes([header[0], header[1], header[2], header[3]]) as usize;
    if declared % 8 != 0 || HEADER_BITS + declared > frame.len() {
        return Err(Error::Corruption(format!(
            "header declares {declared} bits in a {}-bit frame",
            frame.len()
        )));
    }
    Ok(bits_to_bytes(&frame[HEADER_BITS..HEADER_BITS + declared]))
}

/// Inverse of [`pad_and_encrypt`].
pub fn decrypt_and_unpad(bits: &[bool], key: &Key, nonce: u64) -> Result<Vec<u8>> {
    unframe(&apply_keystream(bits, key, nonce))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn key(byte: u8) -> Key {
        Key::from_bytes([byte; 32])
    }

    #[test]
    fn empty_message_header_reads_zero() {
        let bits = pad_and_encrypt(&[], 64, &key(1), 9).unwrap();
        assert_eq!(bits.len(), 64);
        let frame = apply_keystream(&bits, &key(1), 9);
        assert!(frame[..32].iter().all(|&b| !b));
        assert_eq!(decrypt_and_unpad(&bits, &key(1), 9).unwrap(), Vec::<u8>::new());
    }

    #[test]
    fn capacity_is_enforced() {
        let err = pad_and_encrypt(&[0u8; 5], 71, &key(0), 0).unwrap_err();
        assert_eq!(err, Error::Capacity { needed: 72, capacity: 71 });
        assert!(pad_and_encrypt(&[0u8; 5], 72, &key(0), 0).is_ok());
    }

    #[test]
    fn oversized_header_is_corruption() {
        let mut frame = bytes_to_bits(&1024u32.to_be_bytes());
        frame.resize(64, false);
        assert!(matches!(unframe(&frame), Err(Error::Corruption(_))));
        assert!(matches!(unframe(&frame[..10]), Err(Error::Corruption(_))));
    }

    #[test]
    fn nonces_give_unrelated_ciphertexts() {
        let message = vec![0u8; 12_500];
        let a = pad_and_encrypt(&message, 100_032, &key(7), 1).unwrap();
        let b = pad_and_encrypt(&message, 100_032, &key(7), 2).unwrap();
        let differing = a.iter().zip(&b).filter(|(x, y)| x != y).count() as f64;
        let ones = a.iter().filter(|&&x| x).count() as f64;
        let n = a.len() as f64;
        assert!((differing / n - 0.5).abs() <= 0.01, "{}", differing / n);
        assert!((ones / n - 0.5).abs() <= 0.01, "{}", ones / n);
    }

    proptest! {
        #[test]
        fn round_trip(message in proptest::collection::vec(any::<u8>(), 0..40),
                      extra in 0usize..50, k in any::<u8>(), nonce in any::<u64>()) {
            let capacity = HEADER_BITS + 8 * message.len() + extra;
            let bits = pad_and_encrypt(&message, capacity, &key(k), nonce).unwrap();
            prop_assert_eq!(bits.len(), capacity);
            prop_assert_eq!(decrypt_and_unpad(&bits, &key(k), nonce).unwrap(), message);
        }
    }
}
