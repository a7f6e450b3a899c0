//! Finite lattices given by their cover relations.
//!
//! A [`Lattice`] is built once from a list of element names and cover pairs;
//! the order relation, join and meet tables, bounds and (when it exists) the
//! rank function are computed up front, so every query afterwards is a table
//! lookup. Values are immutable and can be shared freely between threads.

mod admissible;
mod fixtures;
mod properties;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use admissible::{enumerate_admissible_sets, is_admissible, restrict_to_complement, AdmissibleSet};
pub use fixtures::{build_fixture, product, Fixture};
pub use properties::{
    find_rank2_diamond, find_sublattice, is_distributive, is_modular, DistributivityReport,
    ModularityReport, Rank2Interval, SublatticeKind, SublatticeWitness,
};

/// A finite lattice with precomputed order, join and meet tables.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    rank: Option<Vec<usize>>,
}

/// On-disk form of a lattice: `{"elements": [...], "covers": [["a","b"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDoc {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

/// Builds a lattice from element names and `(lower, upper)` cover pairs.
///
/// The pairs only need to generate the order; redundant comparabilities are
/// accepted and dropped from the stored Hasse diagram.
pub fn build_lattice<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Lattice> {
    let elements: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
    let covers: Vec<(String, String)> = covers
        .iter()
        .map(|(a, b)| (a.as_ref().to_string(), b.as_ref().to_string()))
        .collect();
    Lattice::new(elements, &covers)
}

impl Lattice {
    pub fn new(elements: Vec<String>, covers: &[(String, String)]) -> Result<Self> {
        let n = elements.len();
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::DuplicateElement(e.clone()));
            }
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownElement(name.to_string()))
        };
        let mut succ = vec![Vec::new(); n];
        for (lo, hi) in covers {
            let (lo, hi) = (lookup(lo)?, lookup(hi)?);
            if lo == hi {
                return Err(Error::NotAPoset(elements[lo].clone()));
            }
            if !succ[lo].contains(&hi) {
                succ[lo].push(hi);
            }
        }

        // Kahn's algorithm; anything left over sits on a cycle.
        let mut indegree = vec![0usize; n];
        for s in &succ {
            for &t in s {
                indegree[t] += 1;
            }
        }
        let mut topo = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).rev().collect();
        while let Some(v) = ready.pop() {
            topo.push(v);
            for &t in &succ[v] {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    ready.push(t);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).unwrap_or(0);
            return Err(Error::NotAPoset(elements[stuck].clone()));
        }

        let mut leq = vec![vec![false; n]; n];
        for &v in topo.iter().rev() {
            leq[v][v] = true;
            for &t in &succ[v] {
                for w in 0..n {
                    if leq[t][w] {
                        leq[v][w] = true;
                    }
                }
            }
        }

        let (join, meet) = pair_tables(&elements, &leq)?;
        if n == 0 {
            return Err(Error::NoBounds);
        }
        let bottom = (0..n).find(|&b| (0..n).all(|x| leq[b][x])).ok_or(Error::NoBounds)?;
        let top = (0..n).find(|&t| (0..n).all(|x| leq[x][t])).ok_or(Error::NoBounds)?;

        let mut hasse = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && leq[x][y] && !(0..n).any(|z| z != x && z != y && leq[x][z] && leq[z][y]) {
                    hasse.push((x, y));
                }
            }
        }

        let mut longest = vec![0usize; n];
        for &v in &topo {
            for &(x, y) in hasse.iter().filter(|&&(x, _)| x == v) {
                longest[y] = longest[y].max(longest[x] + 1);
            }
        }
        let graded = hasse.iter().all(|&(x, y)| longest[y] == longest[x] + 1);

        Ok(Lattice {
            elements,
            index,
            leq,
            covers: hasse,
            join,
            meet,
            bottom,
            top,
            rank: graded.then_some(longest),
        })
    }

    pub fn from_doc(doc: &LatticeDoc) -> Result<Self> {
        let covers: Vec<(String, String)> =
            doc.covers.iter().map(|[a, b]| (a.clone(), b.clone())).collect();
        Lattice::new(doc.elements.clone(), &covers)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: LatticeDoc = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Lattice::from_doc(&doc)
    }

    pub fn to_doc(&self) -> LatticeDoc {
        LatticeDoc {
            elements: self.elements.clone(),
            covers: self
                .covers
                .iter()
                .map(|&(x, y)| [self.elements[x].clone(), self.elements[y].clone()])
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("lattice documents always serialize")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq[x][y]
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq[x][y] || self.leq[y][x]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x][y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x][y]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Hasse diagram edges `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_graded(&self) -> bool {
        self.rank.is_some()
    }

    pub fn rank(&self, x: usize) -> Option<usize> {
        self.rank.as_ref().map(|r| r[x])
    }

    /// Length of the longest chain; equals `rank(top)` for graded lattices.
    pub fn height(&self) -> usize {
        match &self.rank {
            Some(r) => r[self.top],
            None => {
                let mut longest = vec![0usize; self.len()];
                let mut order: Vec<usize> = (0..self.len()).collect();
                order.sort_by_key(|&x| (0..self.len()).filter(|&y| self.leq[y][x]).count());
                for &v in &order {
                    for &(x, y) in self.covers.iter().filter(|&&(x, _)| x == v) {
                        longest[y] = longest[y].max(longest[x] + 1);
                    }
                }
                longest[self.top]
            }
        }
    }

    /// Unordered incomparable pairs `(a, b)` with `a < b` as indices.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !self.comparable(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }

    /// Non-minimum elements covering exactly one element.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| x != self.bottom && self.covers.iter().filter(|&&(_, y)| y == x).count() == 1)
            .collect()
    }

    /// The same elements with the order reversed.
    pub fn dual(&self) -> Lattice {
        let covers: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(x, y)| (self.elements[y].clone(), self.elements[x].clone()))
            .collect();
        Lattice::new(self.elements.clone(), &covers).expect("the dual of a lattice is a lattice")
    }
}

/// Join and meet tables. A pair with no common bound at all is only reported
/// (as `NoBounds`) after every other pair has been checked, so a broken pair
/// inside a connected piece is the preferred witness.
fn pair_tables(elements: &[String], leq: &[Vec<bool>]) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>)> {
    let n = elements.len();
    let mut join = vec![vec![0; n]; n];
    let mut meet = vec![vec![0; n]; n];
    let mut disconnected = false;
    for x in 0..n {
        for y in x..n {
            let uppers: Vec<usize> = (0..n).filter(|&z| leq[x][z] && leq[y][z]).collect();
            let lowers: Vec<usize> = (0..n).filter(|&z| leq[z][x] && leq[z][y]).collect();
            if uppers.is_empty() && lowers.is_empty() {
                disconnected = true;
                continue;
            }
            let least = uppers.iter().copied().find(|&u| uppers.iter().all(|&w| leq[u][w]));
            let greatest = lowers.iter().copied().find(|&l| lowers.iter().all(|&w| leq[w][l]));
            match (least, greatest) {
                (Some(j), Some(m)) => {
                    join[x][y] = j;
                    join[y][x] = j;
                    meet[x][y] = m;
                    meet[y][x] = m;
                }
                _ => return Err(Error::NotALattice(elements[x].clone(), elements[y].clone())),
            }
        }
    }
    if disconnected {
        return Err(Error::NoBounds);
    }
    Ok((join, meet))
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers
            .iter()
            .map(|&(x, y)| format!("{}<{}", self.elements[x], self.elements[y]))
            .collect();
        f.debug_struct("Lattice")
            .field("elements", &self.elements)
            .field("covers", &covers)
            .finish()
    }
}
