use crate::error::{Error, Result};

use super::SymbolStream;

/// Groups `l` consecutive bits into one symbol, first bit most significant.
pub fn pack_bits(bits: &[bool], l: u32) -> Result<SymbolStream> {
    if l == 0 || l > super::MAX_BITS_PER_SYMBOL {
        return Err(Error::Argument(format!("bits per symbol {l} out of range")));
    }
    let l = l as usize;
    if bits.len() % l != 0 {
        return Err(Error::Argument(format!(
            "{} bits do not divide into {l}-bit symbols",
            bits.len()
        )));
    }
    let symbols = bits
        .chunks_exact(l)
        .map(|chunk| chunk.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32))
        .collect();
    SymbolStream::new(symbols, l as u32)
}

/// Inverse of [`pack_bits`].
pub fn unpack_symbols(symbols: &SymbolStream) -> Vec<bool> {
    let l = symbols.bits_per_symbol();
    let mut bits = Vec::with_capacity(symbols.len() * l as usize);
    for &m in symbols.as_slice() {
        for shift in (0..l).rev() {
            bits.push((m >> shift) & 1 == 1);
        }
    }
    bits
}

/// Bytes to bits, most significant bit of each byte first.
pub fn bytes_to_bits(bytes: &[u8]) -> Vec<bool> {
    bytes
        .iter()
        .flat_map(|&b| (0..8).rev().map(move |s| (b >> s) & 1 == 1))
        .collect()
}

/// Bits to bytes; a trailing partial byte is zero-filled on the right.
pub fn bits_to_bytes(bits: &[bool]) -> Vec<u8> {
    bits.chunks(8)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | ((b as u8) << (7 - i)))
        })
        .collect()
}
