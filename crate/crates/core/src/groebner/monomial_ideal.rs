use std::sync::Arc;

use serde::Serialize;

use crate::poly::{Monomial, Polynomial, Ring};

/// A monomial ideal stored by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalises `gens`; the result is sorted by degree, then exponent vector descending.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        let mut gens = gens;
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal { nvars, gens: minimal }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    /// Dimension of the quotient ring: the number of variables minus the
    /// smallest set of variables meeting the support of every generator.
    pub fn krull_dim(&self) -> usize {
        if self.gens.iter().any(Monomial::is_one) {
            // the unit ideal; report 0 rather than -1
            return 0;
        }
        assert!(self.nvars <= 128, "krull_dim supports at most 128 variables");
        let supports: Vec<u128> = self
            .gens
            .iter()
            .map(|g| g.support().into_iter().fold(0u128, |acc, v| acc | 1 << v))
            .collect();
        let mut best = self.nvars;
        min_cover(&supports, 0, 0, &mut best);
        self.nvars - best
    }

    pub fn to_strings(&self, ring: &Arc<Ring>) -> Vec<String> {
        self.gens.iter().map(|g| Polynomial::monomial(ring, g.clone()).to_string()).collect()
    }
}

/// Branch and bound for a minimum hitting set of `supports`.
fn min_cover(supports: &[u128], chosen: u128, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    // the unhit support with the fewest variables gives the smallest branching
    let open = supports.iter().filter(|&&s| s & chosen == 0).min_by_key(|s| s.count_ones());
    match open {
        None => *best = size,
        Some(&s) => {
            let mut bits = s;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                min_cover(supports, chosen | 1 << v, size + 1, best);
            }
        }
    }
}

/// Dimension of the quotient by the monomial ideal generated by `gens`.
pub fn krull_dim(m: &MonomialIdeal, nvars: usize) -> usize {
    if nvars == m.nvars() {
        m.krull_dim()
    } else {
        MonomialIdeal::new(nvars, m.generators().to_vec()).krull_dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec())).collect())
    }

    /// Largest subset of variables supporting no generator, by brute force.
    fn dim_oracle(m: &MonomialIdeal) -> usize {
        let n = m.nvars();
        (0u32..1 << n)
            .filter(|s| m.generators().iter().all(|g| g.support().iter().any(|&v| s & (1 << v) == 0)))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn minimal_generators() {
        let m = mi(2, &[&[2, 0], &[1, 0], &[1, 1], &[0, 3]]);
        assert_eq!(m.generators(), &[Monomial::new(vec![1, 0]), Monomial::new(vec![0, 3])]);
        assert!(!m.is_squarefree());
        assert!(m.contains(&Monomial::new(vec![0, 4])));
    }

    #[test]
    fn dimensions() {
        assert_eq!(MonomialIdeal::zero(4).krull_dim(), 4);
        assert_eq!(mi(2, &[&[1, 1]]).krull_dim(), 1);
        assert_eq!(mi(3, &[&[0, 0, 0]]).krull_dim(), 0);
        assert_eq!(mi(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).krull_dim(), 0);
    }

    #[test]
    fn dimension_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=8);
            let k = rng.gen_range(0..6);
            let gens = (0..k)
                .map(|_| Monomial::new((0..n).map(|_| if rng.gen_bool(0.3) { rng.gen_range(1..3) } else { 0 }).collect()))
                .collect();
            let m = MonomialIdeal::new(n, gens);
            if m.generators().iter().any(Monomial::is_one) {
                continue;
            }
            assert_eq!(m.krull_dim(), dim_oracle(&m), "{m:?}");
        }
    }
}
