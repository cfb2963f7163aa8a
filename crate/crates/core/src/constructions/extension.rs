use crate::error::{Error, Result};
use crate::matroid::{CyclicFlatMatroid, RankedSet, ORACLE_LIMIT};
use crate::subset::{Subset, MAX_GROUND};

/// Adds `n + 1` freely to `x`: it lies in the closure of `Y` exactly when
/// `x ⊆ cl(Y)`.
pub fn principal_extension(m: &CyclicFlatMatroid, x: Subset) -> Result<CyclicFlatMatroid> {
    let n = m.n();
    if !x.within(n) {
        return Err(Error::OutOfRange { set: x, n });
    }
    if n + 1 > ORACLE_LIMIT {
        return Err(Error::Budget(format!(
            "principal extension is built from the rank oracle; needs n + 1 <= {ORACLE_LIMIT}"
        )));
    }
    let base = m.rank_table()?;
    let xb = x.bits() as usize;
    let high = 1usize << n;
    let table: Vec<u8> = (0..high << 1)
        .map(|b| {
            if b < high {
                return base[b];
            }
            let rest = b - high;
            let r = base[rest];
            if base[rest | xb] == r {
                r
            } else {
                r + 1
            }
        })
        .collect();
    CyclicFlatMatroid::from_rank_table(n + 1, &table)
}

/// `M + n+1` as a coloop; the cyclic flats do not change.
pub fn add_coloop(m: &CyclicFlatMatroid) -> Result<CyclicFlatMatroid> {
    if m.n() + 1 > MAX_GROUND {
        return Err(Error::GroundSetTooLarge(m.n() + 1));
    }
    CyclicFlatMatroid::new(m.n() + 1, m.flats().to_vec())
}

/// Free extension by `n + 1`, read off the cyclic flats: every proper
/// cyclic flat survives and the whole ground set becomes cyclic.
pub fn free_extension(m: &CyclicFlatMatroid) -> Result<CyclicFlatMatroid> {
    let n = m.n() + 1;
    if n > MAX_GROUND {
        return Err(Error::GroundSetTooLarge(n));
    }
    let r = m.rank_of_matroid();
    let mut flats: Vec<RankedSet> = m
        .flats()
        .iter()
        .copied()
        .filter(|f| f.rank < r)
        .collect();
    flats.push(RankedSet::new(Subset::full(n), r));
    CyclicFlatMatroid::new(n, flats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_extension_of_a_triangle_is_uniform() {
        let u23 = CyclicFlatMatroid::uniform(2, 3).unwrap();
        let ext = principal_extension(&u23, Subset::full(3)).unwrap();
        assert_eq!(ext, CyclicFlatMatroid::uniform(2, 4).unwrap());
        assert_eq!(free_extension(&u23).unwrap(), ext);
    }

    #[test]
    fn extending_a_basis_makes_a_circuit() {
        let u23 = CyclicFlatMatroid::uniform(2, 3).unwrap();
        let ext = principal_extension(&u23, Subset::from_elems([1, 2])).unwrap();
        assert_eq!(ext.rank(Subset::from_elems([1, 2, 4])), 2);
        let free = CyclicFlatMatroid::free(2);
        let ext = principal_extension(&free, Subset::full(2)).unwrap();
        assert!(ext.is_cyclic(Subset::full(3)));
    }

    #[test]
    fn coloop_and_free_point_on_a_triangle() {
        let u23 = CyclicFlatMatroid::uniform(2, 3).unwrap();
        let m = free_extension(&add_coloop(&u23).unwrap()).unwrap();
        let oracle =
            principal_extension(&add_coloop(&u23).unwrap(), Subset::full(4)).unwrap();
        assert_eq!(m, oracle);
        assert_eq!(m.rank_of_matroid(), 3);
    }
}
