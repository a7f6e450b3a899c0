use serde::Serialize;

use super::Lattice;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SublatticeKind {
    Pentagon,
    Diamond,
}

/// A five-element sublattice isomorphic to N5 or M3.
///
/// For a pentagon the middles are `[low, high, side]` with `low < high`;
/// for a diamond they are the three pairwise incomparable atoms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SublatticeWitness {
    pub kind: SublatticeKind,
    pub min: String,
    pub max: String,
    pub middles: [String; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributivityReport {
    pub distributive: bool,
    /// A triple `(x, y, z)` with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
    pub witness: Option<(String, String, String)>,
    /// The M3 or N5 the witness was taken from.
    pub sublattice: Option<SublatticeWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModularityReport {
    pub modular: bool,
    pub witness: Option<SublatticeWitness>,
}

/// A length-two interval `[bottom, top]` with at least three atoms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rank2Interval {
    pub bottom: String,
    pub top: String,
    pub atoms: Vec<String>,
}

fn distributes(l: &Lattice, x: usize, y: usize, z: usize) -> bool {
    l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))
}

pub fn is_distributive(l: &Lattice) -> DistributivityReport {
    let n = l.len();
    let failing = (0..n)
        .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
        .find(|&(x, y, z)| !distributes(l, x, y, z));
    let Some(first) = failing else {
        return DistributivityReport { distributive: true, witness: None, sublattice: None };
    };
    // Prefer a triple read off an M3 or N5; both exist by Birkhoff's theorem.
    let sub = find_sublattice(l, None);
    let triple = match &sub {
        Some(w) => {
            let m: Vec<usize> = w.middles.iter().map(|s| l.index_of(s).unwrap()).collect();
            match w.kind {
                SublatticeKind::Diamond => (m[0], m[1], m[2]),
                SublatticeKind::Pentagon => (m[1], m[0], m[2]),
            }
        }
        None => first,
    };
    debug_assert!(!distributes(l, triple.0, triple.1, triple.2));
    DistributivityReport {
        distributive: false,
        witness: Some((
            l.name(triple.0).to_string(),
            l.name(triple.1).to_string(),
            l.name(triple.2).to_string(),
        )),
        sublattice: sub,
    }
}

pub fn is_modular(l: &Lattice) -> ModularityReport {
    let n = l.len();
    let modular = (0..n).all(|x| {
        (0..n).all(|z| !l.leq(x, z) || (0..n).all(|y| l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), z)))
    });
    ModularityReport {
        modular,
        witness: if modular { None } else { find_sublattice(l, Some(SublatticeKind::Pentagon)) },
    }
}

/// Exhaustive search over 5-subsets in lexicographic order of element
/// indices for a sublattice of the given kind (either kind when `None`).
pub fn find_sublattice(l: &Lattice, kind: Option<SublatticeKind>) -> Option<SublatticeWitness> {
    let n = l.len();
    if n < 5 {
        return None;
    }
    let mut idx = [0usize, 1, 2, 3, 4];
    loop {
        if let Some(w) = classify_five(l, &idx) {
            if kind.is_none_or(|k| k == w.kind) {
                return Some(w);
            }
        }
        // next combination
        let mut i = 5;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - 5 + i {
                idx[i] += 1;
                for j in i + 1..5 {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn classify_five(l: &Lattice, s: &[usize; 5]) -> Option<SublatticeWitness> {
    for &a in s {
        for &b in s {
            if !s.contains(&l.join(a, b)) || !s.contains(&l.meet(a, b)) {
                return None;
            }
        }
    }
    let min = *s.iter().find(|&&x| s.iter().all(|&y| l.leq(x, y)))?;
    let max = *s.iter().find(|&&x| s.iter().all(|&y| l.leq(y, x)))?;
    let mid: Vec<usize> = s.iter().copied().filter(|&x| x != min && x != max).collect();
    let comparable: Vec<(usize, usize)> = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .filter(|&(i, j)| l.comparable(mid[i], mid[j]))
        .collect();
    let name = |x: usize| l.name(x).to_string();
    let (kind, middles) = match comparable.as_slice() {
        [] => (SublatticeKind::Diamond, [name(mid[0]), name(mid[1]), name(mid[2])]),
        [(i, j)] => {
            let (lo, hi) = if l.leq(mid[*i], mid[*j]) { (mid[*i], mid[*j]) } else { (mid[*j], mid[*i]) };
            let side = mid[3 - i - j];
            (SublatticeKind::Pentagon, [name(lo), name(hi), name(side)])
        }
        _ => return None,
    };
    Some(SublatticeWitness { kind, min: name(min), max: name(max), middles })
}

/// First interval `[a, e]` (by index of `a`, then of `e`) with
/// `rank e - rank a = 2` holding at least three pairwise complementary atoms.
pub fn find_rank2_diamond(l: &Lattice) -> Result<Rank2Interval> {
    if !l.is_graded() {
        return Err(Error::PreconditionViolated("lattice is not graded".into()));
    }
    if is_distributive(l).distributive {
        return Err(Error::PreconditionViolated("lattice is distributive".into()));
    }
    if !is_modular(l).modular {
        return Err(Error::PreconditionViolated("lattice is not modular".into()));
    }
    let n = l.len();
    for a in 0..n {
        for e in 0..n {
            if !l.lt(a, e) || l.rank(e).unwrap() != l.rank(a).unwrap() + 2 {
                continue;
            }
            let atoms: Vec<usize> = (0..n).filter(|&x| l.lt(a, x) && l.lt(x, e)).collect();
            if atoms.len() < 3 {
                continue;
            }
            let pairwise = atoms.iter().enumerate().all(|(i, &x)| {
                atoms[i + 1..].iter().all(|&y| l.join(x, y) == e && l.meet(x, y) == a)
            });
            if pairwise {
                return Ok(Rank2Interval {
                    bottom: l.name(a).to_string(),
                    top: l.name(e).to_string(),
                    atoms: atoms.iter().map(|&x| l.name(x).to_string()).collect(),
                });
            }
        }
    }
    Err(Error::PreconditionViolated("no rank-2 diamond found".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_fixture, Fixture};

    #[test]
    fn chains_are_distributive() {
        let l = build_fixture(&Fixture::Chain(4)).unwrap();
        assert!(is_distributive(&l).distributive);
        assert!(is_modular(&l).modular);
    }

    #[test]
    fn pentagon_is_not_modular() {
        let l = build_fixture(&Fixture::N5).unwrap();
        let r = is_modular(&l);
        assert!(!r.modular);
        let w = r.witness.unwrap();
        assert_eq!(w.kind, SublatticeKind::Pentagon);
        assert_eq!(w.min, "a");
        assert_eq!(w.max, "e");
    }

    #[test]
    fn lattice_n_witness_sits_in_the_diamond() {
        let l = build_fixture(&Fixture::N).unwrap();
        let r = is_distributive(&l);
        assert!(!r.distributive);
        let (x, y, z) = r.witness.unwrap();
        for s in [x, y, z] {
            assert!(["c", "d", "e", "f", "h"].contains(&s.as_str()));
        }
        assert!(is_modular(&l).modular);
    }

    #[test]
    fn rank2_diamond_of_n() {
        let l = build_fixture(&Fixture::N).unwrap();
        let d = find_rank2_diamond(&l).unwrap();
        assert_eq!(d.bottom, "c");
        assert_eq!(d.top, "h");
        assert_eq!(d.atoms, ["d", "e", "f"]);
    }

    #[test]
    fn rank2_diamond_of_l1() {
        let l = build_fixture(&Fixture::Lk { n: 2, k: 1 }).unwrap();
        let d = find_rank2_diamond(&l).unwrap();
        assert_eq!(d.bottom, "x1");
        assert_eq!(d.top, "y2");
        assert_eq!(d.atoms, ["x2", "y1", "z"]);
    }

    #[test]
    fn rank2_diamond_rejects_bad_input() {
        for f in [Fixture::Q, Fixture::N5] {
            let l = build_fixture(&f).unwrap();
            assert!(matches!(find_rank2_diamond(&l), Err(Error::PreconditionViolated(_))));
        }
    }
}
