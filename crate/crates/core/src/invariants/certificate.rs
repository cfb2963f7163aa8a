use serde::{Deserialize, Serialize};

use crate::matroid::CyclicFlatMatroid;
use crate::subset::Subset;

/// Sufficient conditions for configuration uniqueness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Certificate {
    /// Every pair of cyclic flats is modular and their intersection is a
    /// cyclic flat.
    IntersectionClosedModular,
    /// Every pair of cyclic flats is modular and their union is a cyclic flat.
    UnionClosedModular,
    /// Neither condition holds; nothing follows.
    NoCertificate,
}

pub fn uniqueness_certificate(m: &CyclicFlatMatroid) -> Certificate {
    let flats = m.flat_sets();
    let modular = flats
        .iter()
        .all(|&a| flats.iter().all(|&b| m.is_modular_pair(a, b)));
    if !modular {
        return Certificate::NoCertificate;
    }
    let closed = |op: fn(Subset, Subset) -> Subset| {
        flats
            .iter()
            .all(|&a| flats.iter().all(|&b| m.is_cyclic_flat(op(a, b))))
    };
    if closed(|a, b| a & b) {
        Certificate::IntersectionClosedModular
    } else if closed(|a, b| a | b) {
        Certificate::UnionClosedModular
    } else {
        Certificate::NoCertificate
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_cases() {
        let u23 = CyclicFlatMatroid::uniform(2, 3).unwrap();
        assert_eq!(uniqueness_certificate(&u23), Certificate::IntersectionClosedModular);
        let lines = CyclicFlatMatroid::from_pairs(
            6,
            [(vec![], 0), (vec![1, 2, 3], 2), (vec![4, 5, 6], 2), ((1..=6).collect(), 3)],
        )
        .unwrap();
        assert_eq!(uniqueness_certificate(&lines), Certificate::NoCertificate);
    }
}
