//! Dense f64 tensors and their binary file format.
//!
//! Layout, all little-endian: magic `PAHT`, `u16` version (1), `u16` dtype
//! (1 = f64), `u32` rank, `rank` x `u32` dims, then the payload in row-major order.

use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"PAHT";
const VERSION: u16 = 1;
const DTYPE_F64: u16 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
}

impl Tensor {
    pub fn new(shape: Vec<usize>, data: Vec<f64>) -> Result<Self> {
        let expected: usize = shape.iter().product();
        if shape.is_empty() || expected != data.len() {
            return Err(Error::Argument(format!(
                "shape {shape:?} does not hold {} values",
                data.len()
            )));
        }
        Ok(Self { shape, data })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(12 + 4 * self.shape.len() + 8 * self.data.len());
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&DTYPE_F64.to_le_bytes());
        out.extend_from_slice(&(self.shape.len() as u32).to_le_bytes());
        for &d in &self.shape {
            out.extend_from_slice(&(d as u32).to_le_bytes());
        }
        for v in &self.data {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut cur = bytes;
        let magic = take(&mut cur, 4)?;
        if magic != MAGIC {
            return Err(Error::Corruption("not a tensor file".into()));
        }
        let version = u16::from_le_bytes(take(&mut cur, 2)?.try_into().unwrap());
        let dtype = u16::from_le_bytes(take(&mut cur, 2)?.try_into().unwrap());
        if version != VERSION || dtype != DTYPE_F64 {
            return Err(Error::Corruption(format!(
                "unsupported tensor version {version} / dtype {dtype}"
            )));
        }
        let rank = read_u32(&mut cur)? as usize;
        if rank == 0 || rank > 16 {
            return Err(Error::Corruption(format!("bad tensor rank {rank}")));
        }
        let shape = (0..rank)
            .map(|_| read_u32(&mut cur).map(|d| d as usize))
            .collect::<Result<Vec<_>>>()?;
        let count = shape
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::Corruption("tensor too large".into()))?;
        if cur.len() != count * 8 {
            return Err(Error::Corruption(format!(
                "payload is {} bytes, shape {shape:?} needs {}",
                cur.len(),
                count * 8
            )));
        }
        let data = cur
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Tensor::new(shape, data).map_err(|e| Error::Corruption(e.to_string()))
    }

    pub fn write_to(&self, mut w: impl Write) -> Result<()> {
        w.write_all(&self.to_bytes())?;
        Ok(())
    }

    pub fn read_from(mut r: impl Read) -> Result<Self> {
        let mut buf = Vec::new();
        r.read_to_end(&mut buf)?;
        Self::from_bytes(&buf)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_bytes()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_bytes(&bytes)
    }
}

fn take<'a>(cur: &mut &'a [u8], n: usize) -> Result<&'a [u8]> {
    if cur.len() < n {
        return Err(Error::Corruption("truncated tensor header".into()));
    }
    let (head, tail) = cur.split_at(n);
    *cur = tail;
    Ok(head)
}

fn read_u32(cur: &mut &[u8]) -> Result<u32> {
    Ok(u32::from_le_bytes(take(cur, 4)?.try_into().unwrap()))
}
