//! Named lattices used throughout the test corpus and by the CLI.

use std::fmt;
use std::str::FromStr;

use super::{build_lattice, Lattice};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// Modular, non-distributive, rank 4; one diamond glued into a distributive lattice.
    N,
    /// Seven elements; not graded, and {b, d, f, g, e} is a pentagon.
    Q,
    /// `N` with one more element `i` satisfying `b < i < g`.
    R,
    /// The ladder `D(n)` with a diamond inserted at rung `k` through the extra element `z`.
    Lk { n: usize, k: usize },
    /// The ladder `x1 < ... < xn`, `y1 < ... < yn`, `xi < yi`.
    DivisorLadder(usize),
    Chain(usize),
    M3,
    N5,
}

impl Fixture {
    pub fn catalogue() -> Vec<&'static str> {
        vec!["N", "Q", "R", "Lk:<n>:<k>", "DivisorLadder:<n>", "Chain:<m>", "M3", "N5"]
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixture::N => write!(f, "N"),
            Fixture::Q => write!(f, "Q"),
            Fixture::R => write!(f, "R"),
            Fixture::Lk { n, k } => write!(f, "Lk:{n}:{k}"),
            Fixture::DivisorLadder(n) => write!(f, "DivisorLadder:{n}"),
            Fixture::Chain(m) => write!(f, "Chain:{m}"),
            Fixture::M3 => write!(f, "M3"),
            Fixture::N5 => write!(f, "N5"),
        }
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |p: &str| {
            p.parse::<usize>()
                .map_err(|_| Error::BadParameters(format!("`{p}` is not a non-negative integer")))
        };
        match parts.as_slice() {
            ["N"] => Ok(Fixture::N),
            ["Q"] => Ok(Fixture::Q),
            ["R"] => Ok(Fixture::R),
            ["M3"] => Ok(Fixture::M3),
            ["N5"] => Ok(Fixture::N5),
            ["Lk" | "L", n, k] => Ok(Fixture::Lk { n: num(n)?, k: num(k)? }),
            ["DivisorLadder" | "D", n] => Ok(Fixture::DivisorLadder(num(n)?)),
            ["Chain", m] => Ok(Fixture::Chain(num(m)?)),
            _ => Err(Error::BadParameters(format!("unknown fixture `{s}`"))),
        }
    }
}

const N_COVERS: [(&str, &str); 12] = [
    ("a", "b"),
    ("a", "c"),
    ("b", "d"),
    ("c", "d"),
    ("c", "e"),
    ("c", "f"),
    ("d", "g"),
    ("d", "h"),
    ("e", "h"),
    ("f", "h"),
    ("g", "l"),
    ("h", "l"),
];

pub fn build_fixture(fixture: &Fixture) -> Result<Lattice> {
    match *fixture {
        Fixture::N => build_lattice(&["a", "b", "c", "d", "e", "f", "g", "h", "l"], &N_COVERS),
        Fixture::R => {
            let mut covers = N_COVERS.to_vec();
            covers.extend([("b", "i"), ("i", "g")]);
            build_lattice(&["a", "b", "c", "d", "e", "f", "g", "h", "i", "l"], &covers)
        }
        Fixture::Q => build_lattice(
            &["a", "b", "c", "d", "e", "f", "g"],
            &[
                ("a", "b"),
                ("a", "c"),
                ("b", "d"),
                ("b", "e"),
                ("c", "e"),
                ("d", "f"),
                ("e", "g"),
                ("f", "g"),
            ],
        ),
        Fixture::Lk { n, k } => {
            if n < 2 || k < 1 || k >= n {
                return Err(Error::BadParameters(format!("Lk needs 1 <= k <= n-1, got n={n}, k={k}")));
            }
            let (mut elements, mut covers) = ladder(n);
            elements.push("z".into());
            covers.push((format!("x{k}"), "z".into()));
            covers.push(("z".into(), format!("y{}", k + 1)));
            Lattice::new(elements, &covers)
        }
        Fixture::DivisorLadder(n) => {
            if n < 1 {
                return Err(Error::BadParameters("DivisorLadder needs n >= 1".into()));
            }
            let (elements, covers) = ladder(n);
            Lattice::new(elements, &covers)
        }
        Fixture::Chain(m) => {
            if m < 1 {
                return Err(Error::BadParameters("Chain needs m >= 1".into()));
            }
            let elements: Vec<String> = (1..=m).map(|i| format!("c{i}")).collect();
            let covers: Vec<(String, String)> =
                elements.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
            Lattice::new(elements, &covers)
        }
        Fixture::M3 => build_lattice(
            &["a", "b1", "b2", "b3", "e"],
            &[("a", "b1"), ("a", "b2"), ("a", "b3"), ("b1", "e"), ("b2", "e"), ("b3", "e")],
        ),
        Fixture::N5 => build_lattice(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "e"), ("a", "d"), ("d", "e")],
        ),
    }
}

fn ladder(n: usize) -> (Vec<String>, Vec<(String, String)>) {
    let mut elements: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    elements.extend((1..=n).map(|i| format!("y{i}")));
    let mut covers = Vec::new();
    for i in 1..=n {
        covers.push((format!("x{i}"), format!("y{i}")));
        if i < n {
            covers.push((format!("x{i}"), format!("x{}", i + 1)));
            covers.push((format!("y{i}"), format!("y{}", i + 1)));
        }
    }
    (elements, covers)
}

/// Cartesian product with componentwise order; elements are named `a_b`.
pub fn product(left: &Lattice, right: &Lattice) -> Result<Lattice> {
    let name = |i: usize, j: usize| format!("{}_{}", left.name(i), right.name(j));
    let mut elements = Vec::new();
    for i in 0..left.len() {
        for j in 0..right.len() {
            elements.push(name(i, j));
        }
    }
    let mut covers = Vec::new();
    for &(a, b) in left.covers() {
        for j in 0..right.len() {
            covers.push((name(a, j), name(b, j)));
        }
    }
    for &(a, b) in right.covers() {
        for i in 0..left.len() {
            covers.push((name(i, a), name(i, b)));
        }
    }
    Lattice::new(elements, &covers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_names() {
        assert_eq!("Lk:4:2".parse::<Fixture>().unwrap(), Fixture::Lk { n: 4, k: 2 });
        assert_eq!("Chain:5".parse::<Fixture>().unwrap(), Fixture::Chain(5));
        assert_eq!("D:3".parse::<Fixture>().unwrap(), Fixture::DivisorLadder(3));
        assert!("Lk:4".parse::<Fixture>().is_err());
        for f in [Fixture::N, Fixture::Lk { n: 3, k: 1 }, Fixture::DivisorLadder(2)] {
            assert_eq!(f.to_string().parse::<Fixture>().unwrap(), f);
        }
    }

    #[test]
    fn l1_of_rank_two() {
        let l = build_fixture(&Fixture::Lk { n: 2, k: 1 }).unwrap();
        assert_eq!(l.elements(), ["x1", "x2", "y1", "y2", "z"]);
        let i = |s: &str| l.index_of(s).unwrap();
        assert_eq!(l.meet(i("z"), i("y1")), i("x1"));
        assert_eq!(l.join(i("z"), i("y1")), i("y2"));
    }

    #[test]
    fn ladder_sizes() {
        // two rungs: the divisors of 6
        let l = build_fixture(&Fixture::DivisorLadder(2)).unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(l.incomparable_pairs().len(), 1);
        let l = build_fixture(&Fixture::DivisorLadder(4)).unwrap();
        let ji: Vec<&str> = l.join_irreducibles().into_iter().map(|x| l.name(x)).collect();
        assert_eq!(ji, ["x2", "x3", "x4", "y1"]);
    }

    #[test]
    fn n_and_r_shapes() {
        let n = build_fixture(&Fixture::N).unwrap();
        assert_eq!(n.len(), 9);
        assert_eq!(n.rank(n.top()), Some(4));
        let r = build_fixture(&Fixture::R).unwrap();
        assert_eq!(r.len(), 10);
        assert!(r.is_graded());
    }

    #[test]
    fn bad_parameters() {
        assert!(build_fixture(&Fixture::Lk { n: 3, k: 3 }).is_err());
        assert!(build_fixture(&Fixture::Chain(0)).is_err());
    }

    #[test]
    fn product_of_chains_is_a_grid() {
        let c = build_fixture(&Fixture::Chain(2)).unwrap();
        let g = product(&c, &c).unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g.incomparable_pairs().len(), 1);
    }
}
