use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::joinmeet::{complement_binomials, join_meet_ideal, lattice_ring};
use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, intersect, saturate, Ideal, ReducedGB};
use crate::lattice::{enumerate_admissible_sets, is_admissible, AdmissibleSet, Lattice};
use crate::poly::{Field, Monomial, Polynomial};
use crate::snf::IntegerLattice;

/// `P_A(L) = (I_{L \ A} : (∏ of L \ A)^∞) + (A)`.
#[derive(Debug, Clone)]
pub struct PrimeComponent {
    pub admissible: AdmissibleSet,
    pub ideal: Ideal,
    pub certified_prime: bool,
    pub dim: usize,
}

/// JSON form of a component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub admissible: Vec<String>,
    pub generators: Vec<String>,
    pub prime: bool,
    pub dim: usize,
}

impl PrimeComponent {
    pub fn report(&self, l: &Lattice) -> Result<ComponentReport> {
        Ok(ComponentReport {
            admissible: self.admissible.names(l),
            generators: self.ideal.canonical_strings()?,
            prime: self.certified_prime,
            dim: self.dim,
        })
    }
}

/// Splits a reduced basis into variables and pure differences.
fn split_shape(gb: &ReducedGB) -> Result<Option<(Vec<usize>, Vec<&Polynomial>)>> {
    let mut vars = Vec::new();
    let mut diffs = Vec::new();
    for g in gb.basis() {
        if let Some(v) = g.as_variable() {
            vars.push(v);
        } else if g.is_pure_difference() {
            diffs.push(g);
        } else if g.nterms() == 1 {
            // a non-variable monomial (or 1): the binomial part is not saturated
            return Ok(None);
        } else {
            return Err(Error::NotPureDifference(g.to_string()));
        }
    }
    Ok(Some((vars, diffs)))
}

fn check_generators(ideal: &Ideal) -> Result<()> {
    for g in ideal.generators() {
        let ok = g.as_variable().is_some() || g.is_pure_difference() || g.as_pure_difference().is_some();
        if !ok {
            return Err(Error::NotPureDifference(g.to_string()));
        }
    }
    Ok(())
}

/// The exponent-difference vectors of `diffs`, restricted to `surviving`.
fn exponent_lattice(diffs: &[&Polynomial], surviving: &[usize]) -> IntegerLattice {
    let rows = diffs
        .iter()
        .map(|g| {
            let (u, v) = g.as_pure_difference().expect("pure difference");
            surviving.iter().map(|&i| i64::from(u.exponents()[i]) - i64::from(v.exponents()[i])).collect()
        })
        .collect();
    IntegerLattice::new(rows)
}

/// Primality of `(pure differences) + (variables)` when the binomial part is
/// saturated with respect to the remaining variables.
pub fn certify_prime_component(ideal: &Ideal) -> Result<bool> {
    certify(ideal, true)
}

fn certify(ideal: &Ideal, check_saturation: bool) -> Result<bool> {
    check_generators(ideal)?;
    let ring = ideal.ring();
    let gb = ideal.native_gb()?;
    if gb.is_unit() {
        return Ok(false);
    }
    let Some((vars, diffs)) = split_shape(&gb)? else {
        return Err(Error::NotSaturatedInput);
    };
    let surviving: Vec<usize> = (0..ring.nvars()).filter(|v| !vars.contains(v)).collect();
    if check_saturation && !diffs.is_empty() {
        let part = Ideal::new(ring, diffs.iter().map(|&g| g.clone()).collect())?;
        let product = Polynomial::monomial(ring, Monomial::squarefree(ring.nvars(), &surviving));
        if !ideal_equal(&saturate(&part, &product)?, &part)? {
            return Err(Error::NotSaturatedInput);
        }
    }
    Ok(exponent_lattice(&diffs, &surviving).saturated)
}

/// The integer lattice behind a component's binomial part.
pub fn component_lattice(ideal: &Ideal) -> Result<IntegerLattice> {
    check_generators(ideal)?;
    let gb = ideal.native_gb()?;
    let Some((vars, diffs)) = split_shape(&gb)? else {
        return Err(Error::NotSaturatedInput);
    };
    let surviving: Vec<usize> = (0..ideal.ring().nvars()).filter(|v| !vars.contains(v)).collect();
    Ok(exponent_lattice(&diffs, &surviving))
}

pub fn component_prime(l: &Lattice, admissible: &AdmissibleSet) -> Result<PrimeComponent> {
    component_prime_over(l, admissible, Field::Rationals)
}

pub fn component_prime_over(l: &Lattice, admissible: &AdmissibleSet, field: Field) -> Result<PrimeComponent> {
    if !is_admissible(l, admissible.members()) {
        return Err(Error::NotAdmissible(admissible.names(l)));
    }
    let ring = lattice_ring(l, field)?;
    let surviving: Vec<usize> = (0..l.len()).filter(|&x| !admissible.contains(x)).collect();
    // L \ A is closed under meets and joins of its incomparable pairs, so
    // its basic binomials are those of L avoiding A.
    let binomials = Ideal::new(&ring, complement_binomials(l, &ring, admissible))?;
    let saturated = if binomials.generators().is_empty() {
        binomials
    } else {
        let product = Polynomial::monomial(&ring, Monomial::squarefree(ring.nvars(), &surviving));
        saturate(&binomials, &product)?
    };
    let vars: Vec<Polynomial> = admissible.members().iter().map(|&v| Polynomial::variable(&ring, v)).collect();
    let ideal = saturated.with_generators(&vars)?;
    let certified_prime = match certify(&ideal, false) {
        Ok(p) => p,
        Err(Error::NotPureDifference(_) | Error::NotSaturatedInput) => false,
        Err(e) => return Err(e),
    };
    let dim = ideal.dim()?;
    Ok(PrimeComponent { admissible: admissible.clone(), ideal, certified_prime, dim })
}

/// Every `P_A`, with equal ideals merged onto the first admissible set.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// One entry per distinct ideal, in admissible-set order.
    pub all: Vec<PrimeComponent>,
    /// The inclusion-minimal members of `all`, by decreasing dimension.
    pub minimal: Vec<PrimeComponent>,
    pub intersection: Ideal,
    /// Whether `intersection` equals the join-meet ideal.
    pub intersection_matches: bool,
}

impl Decomposition {
    pub fn all_prime(&self) -> bool {
        self.all.iter().all(|c| c.certified_prime)
    }
}

pub fn decompose(l: &Lattice) -> Result<Decomposition> {
    let sets = enumerate_admissible_sets(l)?;
    let computed: Vec<PrimeComponent> = sets.par_iter().map(|a| component_prime(l, a)).collect::<Result<_>>()?;
    let mut seen: HashMap<Vec<String>, usize> = HashMap::new();
    let mut all = Vec::new();
    for c in computed {
        let key = c.ideal.canonical_strings()?;
        // admissible sets arrive ordered, so the first is the smallest
        if seen.insert(key, all.len()).is_none() {
            all.push(c);
        }
    }
    let minimal = minimal_members(&all)?;
    let jm = join_meet_ideal(l)?;
    let intersection = intersect_all(&jm.ideal, &minimal)?;
    let intersection_matches = ideal_equal(&intersection, &jm.ideal)?;
    Ok(Decomposition { all, minimal, intersection, intersection_matches })
}

/// `P` contains `Q` and differs from it.
fn strictly_contains(p: &Ideal, q: &Ideal) -> Result<bool> {
    Ok(p.contains_ideal(q)? && !q.contains_ideal(p)?)
}

fn minimal_members(all: &[PrimeComponent]) -> Result<Vec<PrimeComponent>> {
    // A strictly smaller prime has strictly larger dimension, so scanning by
    // decreasing dimension meets every minimal prime before what it lies in.
    let mut order: Vec<&PrimeComponent> = all.iter().collect();
    order.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.admissible.len().cmp(&b.admissible.len())).then_with(|| a.admissible.cmp(&b.admissible)));
    let mut kept: Vec<&PrimeComponent> = Vec::new();
    for c in order {
        let mut covered = false;
        for k in &kept {
            if strictly_contains(&c.ideal, &k.ideal)? {
                covered = true;
                break;
            }
        }
        if !covered {
            kept.push(c);
        }
    }
    // non-prime components can break the dimension argument
    let mut out = Vec::new();
    for (i, c) in kept.iter().enumerate() {
        let mut covered = false;
        for (j, k) in kept.iter().enumerate() {
            if i != j && strictly_contains(&c.ideal, &k.ideal)? {
                covered = true;
                break;
            }
        }
        if !covered {
            out.push((*c).clone());
        }
    }
    Ok(out)
}

fn intersect_all(base: &Ideal, parts: &[PrimeComponent]) -> Result<Ideal> {
    let mut iter = parts.iter();
    let Some(first) = iter.next() else {
        return Ideal::new(base.ring(), vec![Polynomial::one(base.ring())]);
    };
    let mut acc = first.ideal.clone();
    for p in iter {
        acc = intersect(&acc, &p.ideal)?;
    }
    Ok(acc)
}

/// The minimal primes of a radical join-meet ideal with the checked identity
/// `∩ minimal = I_L`.
#[derive(Debug, Clone)]
pub struct MinimalPrimes {
    pub components: Vec<PrimeComponent>,
    pub intersection: Ideal,
}

pub fn minimal_primes(l: &Lattice) -> Result<MinimalPrimes> {
    let d = decompose(l)?;
    if !d.intersection_matches {
        return Err(Error::IntersectionMismatch);
    }
    Ok(MinimalPrimes { components: d.minimal, intersection: d.intersection })
}
