use serde::Serialize;

use super::Lattice;
use crate::error::{Error, Result};

/// Largest lattice for which all subsets are enumerated.
const MAX_ENUMERATION: usize = 30;

/// A subset `A` such that for every basic binomial `ab - cd` the set meets
/// `{a, b}` exactly when it meets `{c, d}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AdmissibleSet {
    members: Vec<usize>,
}

impl AdmissibleSet {
    pub fn empty() -> Self {
        AdmissibleSet { members: Vec::new() }
    }

    /// Validates `members` against the lattice.
    pub fn new(l: &Lattice, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&m| m >= l.len()) || !is_admissible(l, &members) {
            return Err(Error::NotAdmissible(members.iter().map(|&m| name_or_index(l, m)).collect()));
        }
        Ok(AdmissibleSet { members })
    }

    pub fn from_names<S: AsRef<str>>(l: &Lattice, names: &[S]) -> Result<Self> {
        let members = names.iter().map(|s| l.index_of(s.as_ref())).collect::<Result<Vec<_>>>()?;
        AdmissibleSet::new(l, members)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn names(&self, l: &Lattice) -> Vec<String> {
        self.members.iter().map(|&m| l.name(m).to_string()).collect()
    }

    pub fn is_subset_of(&self, other: &AdmissibleSet) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }
}

fn name_or_index(l: &Lattice, m: usize) -> String {
    if m < l.len() {
        l.name(m).to_string()
    } else {
        format!("#{m}")
    }
}

/// The two-sided cover condition over all basic binomials.
pub fn is_admissible(l: &Lattice, members: &[usize]) -> bool {
    let mut inside = vec![false; l.len()];
    for &m in members {
        if m < inside.len() {
            inside[m] = true;
        }
    }
    l.incomparable_pairs().into_iter().all(|(a, b)| {
        let hits_product = inside[a] || inside[b];
        let hits_meet_join = inside[l.meet(a, b)] || inside[l.join(a, b)];
        hits_product == hits_meet_join
    })
}

/// All admissible sets, ordered by size and then lexicographically by index.
pub fn enumerate_admissible_sets(l: &Lattice) -> Result<Vec<AdmissibleSet>> {
    let n = l.len();
    if n > MAX_ENUMERATION {
        return Err(Error::BadParameters(format!(
            "admissible-set enumeration is limited to {MAX_ENUMERATION} elements, lattice has {n}"
        )));
    }
    let masks: Vec<(u64, u64)> = l
        .incomparable_pairs()
        .into_iter()
        .map(|(a, b)| ((1u64 << a) | (1 << b), (1u64 << l.meet(a, b)) | (1 << l.join(a, b))))
        .collect();
    let mut out = Vec::new();
    for size in 0..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let set: u64 = idx.iter().fold(0, |acc, &i| acc | (1 << i));
            if masks.iter().all(|&(p, q)| (set & p != 0) == (set & q != 0)) {
                out.push(AdmissibleSet { members: idx.clone() });
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Ok(out)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The sublattice on `L \ A`.
pub fn restrict_to_complement(l: &Lattice, a: &AdmissibleSet) -> Result<Lattice> {
    if a.members.iter().any(|&m| m >= l.len()) || !is_admissible(l, &a.members) {
        return Err(Error::NotAdmissible(a.members.iter().map(|&m| name_or_index(l, m)).collect()));
    }
    let keep: Vec<usize> = (0..l.len()).filter(|&x| !a.contains(x)).collect();
    let mut covers = Vec::new();
    for &x in &keep {
        for &y in &keep {
            if l.lt(x, y) && !keep.iter().any(|&z| l.lt(x, z) && l.lt(z, y)) {
                covers.push((l.name(x).to_string(), l.name(y).to_string()));
            }
        }
    }
    Lattice::new(keep.iter().map(|&x| l.name(x).to_string()).collect(), &covers)
}
