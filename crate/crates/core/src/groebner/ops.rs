//! Elimination, intersection, quotients and radical membership.

use std::sync::Arc;

use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Ring};

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// `ideal ∩ K[remaining variables]`, kept in the same ring.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    if drop.iter().any(|&v| v >= ring.nvars()) {
        return Err(Error::BadParameters("eliminated variable out of range".into()));
    }
    if drop.is_empty() {
        return Ok(ideal.clone());
    }
    let order = MonomialOrder::elimination(ring.nvars(), drop)?;
    let gb = ideal.gb(&order)?;
    let kept = gb
        .basis()
        .iter()
        .filter(|g| g.support().iter().all(|v| !drop.contains(v)))
        .cloned()
        .collect();
    Ideal::new(ring, kept)
}

/// Moves `ideal` into `ring + t`, with `t` the last variable.
fn lift(ideal: &Ideal, big: &Arc<Ring>) -> Result<Vec<Polynomial>> {
    ideal.generators().iter().map(|g| g.extend_to(big)).collect()
}

/// Brings polynomials that avoid the last variable back to `ring`.
fn lower(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<Ideal> {
    let mapping: Vec<usize> = (0..ring.nvars()).collect();
    let out = gens
        .iter()
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(c, m)| {
                    debug_assert_eq!(m.exponents()[ring.nvars()], 0);
                    (c.clone(), crate::poly::Monomial::new(m.exponents()[..mapping.len()].to_vec()))
                })
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    Ideal::new(ring, out)
}

/// `a ∩ b`, by eliminating `t` from `t·a + (1 - t)·b`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a.ring(), b.ring())?;
    let ring = a.ring();
    let big = ring.with_extra_var("t");
    let t = Polynomial::variable(&big, ring.nvars());
    let one_minus_t = Polynomial::one(&big).sub(&t)?;
    let mut gens = Vec::new();
    for g in lift(a, &big)? {
        gens.push(t.mul(&g)?);
    }
    for g in lift(b, &big)? {
        gens.push(one_minus_t.mul(&g)?);
    }
    let e = eliminate(&Ideal::new(&big, gens)?, &[ring.nvars()])?;
    lower(ring, e.generators())
}

/// `ideal : f`.
pub fn colon(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    same_ring(ideal.ring(), f.ring())?;
    let principal = Ideal::new(ideal.ring(), vec![f.clone()])?;
    let meet = intersect(ideal, &principal)?;
    let quotients = meet
        .generators()
        .iter()
        .map(|g| exact_quotient(g, f).ok_or_else(|| Error::PreconditionViolated("generator of I ∩ (f) not divisible by f".into())))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), quotients)
}

/// `g / f` when the division is exact.
fn exact_quotient(g: &Polynomial, f: &Polynomial) -> Option<Polynomial> {
    if let [(c, m)] = f.terms() {
        return g.div_monomial(m)?.scale(&c.inverse().ok()?).ok();
    }
    let order = f.ring().native_order();
    let (lc, lm) = f.leading_term(&order).ok()?;
    let inv = lc.inverse().ok()?;
    let mut rest = g.clone();
    let mut q = Polynomial::zero(g.ring());
    while !rest.is_zero() {
        let (c, m) = rest.leading_term(&order).ok()?;
        let step = Polynomial::monomial(g.ring(), m.div(&lm)?).scale(&c.mul(&inv)).ok()?;
        rest = rest.sub(&step.mul(f).ok()?).ok()?;
        q = q.add(&step).ok()?;
    }
    Some(q)
}

/// `ideal : f^∞`, by eliminating `t` from `(ideal, 1 - t·f)`.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    same_ring(ideal.ring(), f.ring())?;
    let ring = ideal.ring();
    let big = ring.with_extra_var("t");
    let t = Polynomial::variable(&big, ring.nvars());
    let mut gens = lift(ideal, &big)?;
    gens.push(Polynomial::one(&big).sub(&t.mul(&f.extend_to(&big)?)?)?);
    let e = eliminate(&Ideal::new(&big, gens)?, &[ring.nvars()])?;
    lower(ring, e.generators())
}

/// Whether `f` lies in the radical: `(ideal, 1 - t·f)` is the unit ideal.
pub fn radical_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    same_ring(ideal.ring(), f.ring())?;
    if f.is_zero() {
        return Ok(true);
    }
    let ring = ideal.ring();
    let big = ring.with_extra_var("t");
    let t = Polynomial::variable(&big, ring.nvars());
    let mut gens = lift(ideal, &big)?;
    gens.push(Polynomial::one(&big).sub(&t.mul(&f.extend_to(&big)?)?)?);
    Ideal::new(&big, gens)?.is_unit()
}

/// Equality of ideals, by comparing reduced bases under the native order.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    same_ring(a.ring(), b.ring())?;
    Ok(a.native_gb()?.basis() == b.native_gb()?.basis())
}
