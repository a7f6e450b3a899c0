use std::collections::HashMap;

use serde::Serialize;

use super::components::{decompose, PrimeComponent};
use super::joinmeet::join_meet_ideal;
use super::scan::{squarefree_order_scan, ScanFamily};
use crate::error::Result;
use crate::groebner::{radical_member, Ideal, ReducedGB};
use crate::lattice::Lattice;
use crate::poly::{Monomial, Polynomial};

/// How radicality was established.
#[derive(Debug, Clone)]
pub enum RadicalRoute {
    /// Some scanned order has a squarefree initial ideal.
    SquarefreeInitial { order: String },
    /// Every `P_A` is prime and the minimal ones intersect to `I_L`.
    PrimeIntersection { components: Vec<PrimeComponent> },
}

#[derive(Debug, Clone)]
pub enum RadicalVerdict {
    Radical(RadicalRoute),
    /// `witness` lies in the radical but not in the ideal.
    NotRadical { witness: Polynomial },
    Inconclusive { reason: String },
}

impl RadicalVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            RadicalVerdict::Radical(_) => "radical",
            RadicalVerdict::NotRadical { .. } => "not-radical",
            RadicalVerdict::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn is_radical(&self) -> bool {
        matches!(self, RadicalVerdict::Radical(_))
    }
}

#[derive(Debug, Clone)]
pub struct RadicalOptions {
    pub scan: ScanFamily,
    /// Largest witness degree; `None` means `height(L) + 2`.
    pub degree_bound: Option<usize>,
}

impl Default for RadicalOptions {
    fn default() -> Self {
        RadicalOptions { scan: ScanFamily { stop_at_first: true, ..Default::default() }, degree_bound: None }
    }
}

/// Machine-readable summary of a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalSummary {
    pub verdict: String,
    pub stage: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl RadicalVerdict {
    pub fn summary(&self) -> RadicalSummary {
        let mut s = RadicalSummary { verdict: self.label().into(), stage: 0, order: None, witness: None, reason: None };
        match self {
            RadicalVerdict::Radical(RadicalRoute::SquarefreeInitial { order }) => {
                s.stage = 1;
                s.order = Some(order.clone());
            }
            RadicalVerdict::Radical(RadicalRoute::PrimeIntersection { .. }) => s.stage = 2,
            RadicalVerdict::NotRadical { witness } => {
                s.stage = 3;
                s.witness = Some(witness.to_string());
            }
            RadicalVerdict::Inconclusive { reason } => {
                s.stage = 3;
                s.reason = Some(reason.clone());
            }
        }
        s
    }
}

pub fn radical_certificate(l: &Lattice) -> Result<RadicalVerdict> {
    radical_certificate_with(l, &RadicalOptions::default())
}

pub fn radical_certificate_with(l: &Lattice, opts: &RadicalOptions) -> Result<RadicalVerdict> {
    let scan = squarefree_order_scan(l, &opts.scan)?;
    if let Some(order) = scan.witness {
        return Ok(RadicalVerdict::Radical(RadicalRoute::SquarefreeInitial { order }));
    }
    let d = match decompose(l) {
        Ok(d) => d,
        Err(e) => return Ok(RadicalVerdict::Inconclusive { reason: format!("no decomposition: {e}") }),
    };
    if d.all_prime() && d.intersection_matches {
        return Ok(RadicalVerdict::Radical(RadicalRoute::PrimeIntersection { components: d.minimal }));
    }
    let primes: Vec<&PrimeComponent> = d.minimal.iter().filter(|c| c.certified_prime).collect();
    let bound = opts.degree_bound.unwrap_or(l.height() + 2);
    match search_witness(l, &primes, bound)? {
        Some(witness) => Ok(RadicalVerdict::NotRadical { witness }),
        None => Ok(RadicalVerdict::Inconclusive { reason: format!("no witness up to degree {bound}") }),
    }
}

/// All exponent vectors of total degree `d` in `n` variables, descending lexicographically.
fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, d, &mut Vec::new(), &mut out);
    }
    out
}

/// Normal form of a monomial modulo a basis of pure differences and
/// monomials: another monomial, or `None` for zero.
fn monomial_nf(m: &Monomial, gb: &ReducedGB) -> Result<Option<Monomial>> {
    let f = gb.normal_form(&Polynomial::monomial(gb.ring(), m.clone()))?;
    Ok(f.terms().first().map(|(_, m)| m.clone()))
}

/// Searches same-degree differences `m1 - m2` outside `I_L` that every
/// prime in `primes` contains, and confirms candidates with a
/// radical-membership test. Candidates go by degree, then by the degree of
/// `m1 / gcd(m1, m2)`, then smallest `m1` and smallest `m2`.
fn search_witness(l: &Lattice, primes: &[&PrimeComponent], bound: usize) -> Result<Option<Polynomial>> {
    let jm = join_meet_ideal(l)?;
    let ring = &jm.ring;
    let order = ring.native_order();
    let gb = jm.ideal.native_gb()?;
    let prime_gbs = primes.iter().map(|c| c.ideal.native_gb()).collect::<Result<Vec<_>>>()?;
    for degree in 1..=bound as u32 {
        let mut monomials = monomials_of_degree(ring.nvars(), degree);
        monomials.sort_by(|a, b| order.cmp(a, b));
        // m1 - m2 lies in a prime P exactly when both have the same normal form mod P
        let mut classes: HashMap<Vec<Option<Monomial>>, Vec<usize>> = HashMap::new();
        let mut residues = Vec::with_capacity(monomials.len());
        for (i, m) in monomials.iter().enumerate() {
            let key = prime_gbs.iter().map(|p| monomial_nf(m, p)).collect::<Result<Vec<_>>>()?;
            classes.entry(key).or_default().push(i);
            residues.push(monomial_nf(m, &gb)?);
        }
        let mut candidates = Vec::new();
        for class in classes.values() {
            for (x, &i) in class.iter().enumerate() {
                for &j in &class[..x] {
                    // equal residues mod I_L would put m1 - m2 in I_L
                    if residues[i] != residues[j] {
                        let reduced = monomials[i].degree() - monomials[i].gcd(&monomials[j]).degree();
                        candidates.push((reduced, i, j));
                    }
                }
            }
        }
        candidates.sort_unstable();
        for (_, i, j) in candidates {
            let b = Polynomial::binomial(ring, monomials[i].clone(), monomials[j].clone());
            if radical_member(&b, &jm.ideal)? {
                return Ok(Some(b));
            }
        }
    }
    Ok(None)
}

/// `f` is in the radical of `ideal` but not in `ideal`.
pub fn is_nilpotent_witness(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    Ok(!ideal.contains(f)? && radical_member(f, ideal)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_enumeration() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0].exponents(), &[2, 0, 0]);
        assert_eq!(ms[5].exponents(), &[0, 0, 2]);
    }
}
