//! Groebner bases and the ideal operations built on them.
//!
//! [`buchberger`] sends ideals generated by monomials and pure differences
//! to a coefficient-free kernel and everything else to the general engine;
//! both produce the same reduced basis. [`Ideal`] caches one reduced basis
//! per order.

mod general;
mod kernel;
mod monomial_ideal;
mod ops;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::Serialize;

pub use monomial_ideal::{krull_dim, MonomialIdeal};
pub use ops::{colon, eliminate, ideal_equal, intersect, radical_member, saturate};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use general::Terms;

/// Which implementation of Buchberger's algorithm to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EngineChoice {
    /// The binomial kernel when the input allows it, otherwise the general engine.
    #[default]
    Auto,
    General,
    /// Fails with `BadParameters` on input outside the kernel's class.
    Binomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GbOptions {
    /// Also skip pairs by Buchberger's chain criterion.
    pub chain_criterion: bool,
    pub engine: EngineChoice,
}

/// A reduced Groebner basis: monic, inter-reduced, sorted by descending
/// leading monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct ReducedGB {
    ring: Arc<Ring>,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    leads: Vec<Monomial>,
}

/// Serialisable form of a basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    pub order: String,
    pub basis: Vec<String>,
}

impl ReducedGB {
    fn from_terms(ring: &Arc<Ring>, order: &MonomialOrder, basis: Vec<Terms>) -> Self {
        let leads = basis.iter().map(|t| t[0].1.clone()).collect();
        let basis = basis.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect();
        ReducedGB { ring: ring.clone(), order: order.clone(), basis, leads }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(Monomial::is_one)
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.nvars(), self.leads.clone())
    }

    fn elements(&self) -> Vec<general::Element> {
        general::elements(self.basis.iter().map(|g| g.sorted_terms(&self.order)).collect())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        check_ring(&self.ring, f)?;
        let terms = general::full_reduce(&self.order, &self.elements(), f.sorted_terms(&self.order));
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Basis elements written leading term first.
    pub fn to_strings(&self) -> Vec<String> {
        self.basis.iter().map(|g| g.fmt_with(&self.order)).collect()
    }

    pub fn report(&self) -> BasisReport {
        BasisReport { order: self.order.descriptor(&self.ring), basis: self.to_strings() }
    }

    /// Checks from scratch, without any criterion, that every S-polynomial
    /// reduces to zero and that the basis is reduced.
    pub fn verify(&self) -> bool {
        let elems = self.elements();
        for (i, g) in self.basis.iter().enumerate() {
            let (c, m) = g.leading_term(&self.order).expect("nonzero");
            if !c.is_one() {
                return false;
            }
            let others: Vec<&Monomial> = self.leads.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, l)| l).collect();
            if g.terms().iter().any(|(_, t)| others.iter().any(|l| l.divides(t))) {
                return false;
            }
            for h in &self.basis[i + 1..] {
                let n = h.leading_monomial(&self.order).expect("nonzero");
                let l = m.lcm(&n);
                let s = g
                    .mul_monomial(&l.div(&m).expect("lcm"))
                    .sub(&h.mul_monomial(&l.div(&n).expect("lcm")))
                    .expect("same ring");
                if !general::full_reduce(&self.order, &elems, s.sorted_terms(&self.order)).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for ReducedGB {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ReducedGB[{}]({:?})", self.order.descriptor(&self.ring), self.to_strings())
    }
}

fn check_ring(ring: &Arc<Ring>, f: &Polynomial) -> Result<()> {
    if Arc::ptr_eq(ring, f.ring()) || **ring == **f.ring() {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Kernel form of a generator: `(m, None)` for `c*m`, `(m1, Some(m2))` for `c*(m1 - m2)`.
fn as_raw(f: &Polynomial) -> Option<kernel::RawBinomial> {
    match f.terms() {
        [(_, m)] => Some((m.clone(), None)),
        _ => f.as_pure_difference().map(|(a, b)| (a.clone(), Some(b.clone()))),
    }
}

pub fn buchberger(gens: &[Polynomial], ring: &Arc<Ring>, order: &MonomialOrder) -> Result<ReducedGB> {
    buchberger_with(gens, ring, order, &GbOptions::default())
}

pub fn buchberger_with(gens: &[Polynomial], ring: &Arc<Ring>, order: &MonomialOrder, opts: &GbOptions) -> Result<ReducedGB> {
    if order.nvars() != ring.nvars() {
        return Err(Error::RingMismatch);
    }
    for g in gens {
        check_ring(ring, g)?;
    }
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    if opts.engine != EngineChoice::General {
        let raw: Option<Vec<_>> = gens.iter().map(|g| as_raw(g)).collect();
        let result = raw.and_then(|raw| kernel::reduced_basis(&raw, order, opts));
        match (result, opts.engine) {
            (Some(basis), _) => {
                let one = ring.field().one();
                let minus = ring.field().from_i64(-1);
                let terms = basis
                    .into_iter()
                    .map(|(a, b)| match b {
                        None => vec![(one.clone(), a)],
                        Some(b) => vec![(one.clone(), a), (minus.clone(), b)],
                    })
                    .collect();
                return Ok(ReducedGB::from_terms(ring, order, terms));
            }
            (None, EngineChoice::Binomial) => {
                return Err(Error::BadParameters("input is not monomials and pure differences".into()))
            }
            (None, _) => {}
        }
    }
    let input = gens.iter().map(|g| g.sorted_terms(order)).collect();
    Ok(ReducedGB::from_terms(ring, order, general::reduced_basis(input, order, opts)))
}

pub fn normal_form(f: &Polynomial, basis: &ReducedGB) -> Result<Polynomial> {
    basis.normal_form(f)
}

/// An ideal given by generators, with a cache of reduced bases.
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    cache: RwLock<HashMap<MonomialOrder, Arc<ReducedGB>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.read().expect("cache lock").clone();
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache: RwLock::new(cache) }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "Ideal({gens:?})")
    }
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            check_ring(ring, g)?;
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, cache: RwLock::new(HashMap::new()) })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), cache: RwLock::new(HashMap::new()) }
    }

    /// Generators parsed from text.
    pub fn parse<S: AsRef<str>>(ring: &Arc<Ring>, gens: &[S]) -> Result<Self> {
        let gens = gens.iter().map(|s| Polynomial::parse(ring, s.as_ref())).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    /// The ideal generated by the given variables.
    pub fn variables(ring: &Arc<Ring>, vars: &[usize]) -> Self {
        Ideal::new(ring, vars.iter().map(|&v| Polynomial::variable(ring, v)).collect()).expect("same ring")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// `self + (extra)`.
    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(extra);
        Ideal::new(&self.ring, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.with_generators(&other.gens)
    }

    pub fn gb(&self, order: &MonomialOrder) -> Result<Arc<ReducedGB>> {
        self.gb_with(order, &GbOptions::default())
    }

    pub fn gb_with(&self, order: &MonomialOrder, opts: &GbOptions) -> Result<Arc<ReducedGB>> {
        if let Some(b) = self.cache.read().expect("cache lock").get(order) {
            return Ok(b.clone());
        }
        let b = Arc::new(buchberger_with(&self.gens, &self.ring, order, opts)?);
        // Another thread may have raced us; either value is the same basis.
        let mut cache = self.cache.write().expect("cache lock");
        Ok(cache.entry(order.clone()).or_insert(b).clone())
    }

    pub fn native_gb(&self) -> Result<Arc<ReducedGB>> {
        self.gb(&self.ring.native_order())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.native_gb()?.contains(f)
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        let gb = self.native_gb()?;
        for g in &other.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.native_gb()?.is_unit())
    }

    /// Krull dimension of the quotient ring.
    pub fn dim(&self) -> Result<usize> {
        Ok(self.native_gb()?.initial_ideal().krull_dim())
    }

    /// Generators of the reduced basis under the native order, as text.
    pub fn canonical_strings(&self) -> Result<Vec<String>> {
        Ok(self.native_gb()?.to_strings())
    }
}

pub fn initial_ideal(ideal: &Ideal, order: &MonomialOrder) -> Result<MonomialIdeal> {
    Ok(ideal.gb(order)?.initial_ideal())
}

pub fn is_squarefree(m: &MonomialIdeal) -> bool {
    m.is_squarefree()
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal, order: &MonomialOrder) -> Result<bool> {
    check_ring(ideal.ring(), f)?;
    ideal.gb(order)?.contains(f)
}
