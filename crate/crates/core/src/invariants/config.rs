use std::fmt;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::matroid::CyclicFlatMatroid;

/// Canonical encoding of the lattice of cyclic flats with each node labelled
/// by (size, rank), plus the ground-set size.
///
/// Layout: `n: u16 | k: u16 | k × (size: u16, rank: u16) | k×k order bits`,
/// all big-endian, with the order bits packed row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    bytes: Vec<u8>,
}

impl Configuration {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn to_hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Parses a hex encoding and checks that it decodes.
    pub fn from_hex(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.len() % 2 != 0 {
            return Err(Error::Malformed("odd-length hex string".into()));
        }
        let bytes = (0..text.len())
            .step_by(2)
            .map(|i| {
                u8::from_str_radix(&text[i..i + 2], 16)
                    .map_err(|_| Error::Malformed(format!("bad hex digits {:?}", &text[i..i + 2])))
            })
            .collect::<Result<Vec<u8>>>()?;
        let c = Configuration { bytes };
        c.decode()?;
        Ok(c)
    }

    /// Ground-set size, node labels and order matrix in canonical order.
    pub fn decode(&self) -> Result<DecodedConfiguration> {
        let b = &self.bytes;
        let word = |i: usize| -> Result<usize> {
            b.get(i..i + 2)
                .map(|w| u16::from_be_bytes([w[0], w[1]]) as usize)
                .ok_or_else(|| Error::Malformed("configuration encoding is truncated".into()))
        };
        let n = word(0)?;
        let k = word(2)?;
        let mut labels = Vec::with_capacity(k);
        for i in 0..k {
            labels.push((word(4 + 4 * i)?, word(6 + 4 * i)?));
        }
        let start = 4 + 4 * k;
        if b.len() != start + (k * k).div_ceil(8) {
            return Err(Error::Malformed("configuration encoding has the wrong length".into()));
        }
        let bit = |p: usize| b[start + p / 8] & (0x80 >> (p % 8)) != 0;
        let leq: Vec<Vec<bool>> = (0..k).map(|i| (0..k).map(|j| bit(i * k + j)).collect()).collect();
        if (0..k).any(|i| !leq[i][i]) {
            return Err(Error::Malformed("order relation is not reflexive".into()));
        }
        if k == 0 {
            return Err(Error::Malformed("configuration has no nodes".into()));
        }
        Ok(DecodedConfiguration { n, labels, leq })
    }

    fn from_parts(n: usize, labels: &[(usize, usize)], leq: impl Fn(usize, usize) -> bool) -> Self {
        let labels: Vec<(u16, u16)> = labels.iter().map(|&(s, r)| (s as u16, r as u16)).collect();
        Configuration {
            bytes: canonical_form(n, &labels, leq).encoding,
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodedConfiguration {
    pub n: usize,
    pub labels: Vec<(usize, usize)>,
    pub leq: Vec<Vec<bool>>,
}

pub fn configuration(m: &CyclicFlatMatroid) -> Configuration {
    let flats = m.flats();
    let labels: Vec<(usize, usize)> = flats.iter().map(|f| (f.set.len(), f.rank)).collect();
    Configuration::from_parts(m.n(), &labels, |a, b| flats[a].set.is_subset(flats[b].set))
}

pub fn same_configuration(a: &CyclicFlatMatroid, b: &CyclicFlatMatroid) -> bool {
    configuration(a) == configuration(b)
}

/// Configuration of the dual, computed from the configuration alone.
pub fn configuration_dual(c: &Configuration) -> Result<Configuration> {
    let d = c.decode()?;
    let k = d.labels.len();
    let top = (0..k)
        .find(|&t| (0..k).all(|i| d.leq[i][t]))
        .ok_or_else(|| Error::Malformed("configuration has no greatest node".into()))?;
    let (st, rt) = d.labels[top];
    if st > d.n {
        return Err(Error::Malformed("top flat larger than the ground set".into()));
    }
    let rm = rt + d.n - st;
    let mut labels = Vec::with_capacity(k);
    for &(s, r) in &d.labels {
        let size = d.n.checked_sub(s);
        let rank = size.and_then(|c| (c + r).checked_sub(rm));
        match (size, rank) {
            (Some(size), Some(rank)) => labels.push((size, rank)),
            _ => return Err(Error::Malformed("node label inconsistent with ground set".into())),
        }
    }
    Ok(Configuration::from_parts(d.n, &labels, |a, b| d.leq[b][a]))
}
