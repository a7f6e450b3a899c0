//! Exact multivariate polynomials.
//!
//! Polynomials carry a shared handle to their [`Ring`] and keep their terms
//! sorted descending under the ring's native order (`degrevlex` on the
//! variable list). Other orders are applied on demand by
//! [`Polynomial::leading_term`] and [`Polynomial::fmt_with`].

mod coeff;
mod monomial;
mod order;
mod parse;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub use coeff::{Coefficient, Field};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderBlock, OrderKind};

use crate::error::{Error, Result};

/// Variable names and coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    field: Field,
}

impl Ring {
    pub fn new(vars: Vec<String>, field: Field) -> Result<Arc<Ring>> {
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || !v.chars().all(|c| c.is_alphanumeric() || c == '_') || v.starts_with(|c: char| c.is_ascii_digit()) {
                return Err(Error::Parse(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Parse(format!("variable `{v}` is declared twice")));
            }
        }
        Ok(Arc::new(Ring { vars, field }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))
    }

    /// The same ring with one more variable appended; the name starts from
    /// `base` and gets underscores until it is fresh.
    pub fn with_extra_var(&self, base: &str) -> Arc<Ring> {
        let mut name = base.to_string();
        while self.vars.contains(&name) {
            name.push('_');
        }
        let mut vars = self.vars.clone();
        vars.push(name);
        Arc::new(Ring { vars, field: self.field })
    }

    pub fn native_order(&self) -> MonomialOrder {
        MonomialOrder::native(self.nvars())
    }
}

/// `degrevlex` with variable `0` highest; the storage order of terms.
fn native_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        a.exponents()
            .iter()
            .zip(b.exponents())
            .rev()
            .map(|(x, y)| y.cmp(x))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Coefficient, Monomial)>,
}

/// Operation selector for [`poly_arith`].
#[derive(Debug, Clone)]
pub enum ArithOp<'a> {
    Add(&'a Polynomial),
    Sub(&'a Polynomial),
    Mul(&'a Polynomial),
    Scale(&'a Coefficient),
}

pub fn poly_arith(f: &Polynomial, op: ArithOp<'_>) -> Result<Polynomial> {
    match op {
        ArithOp::Add(g) => f.add(g),
        ArithOp::Sub(g) => f.sub(g),
        ArithOp::Mul(g) => f.mul(g),
        ArithOp::Scale(c) => f.scale(c),
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Coefficient) -> Self {
        Polynomial::from_terms(ring, vec![(c, Monomial::one(ring.nvars()))])
    }

    pub fn variable(ring: &Arc<Ring>, i: usize) -> Self {
        Polynomial::monomial(ring, Monomial::var(ring.nvars(), i))
    }

    pub fn var(ring: &Arc<Ring>, name: &str) -> Result<Self> {
        Ok(Polynomial::variable(ring, ring.var_index(name)?))
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(ring.field().one(), m)] }
    }

    /// `m1 - m2`.
    pub fn binomial(ring: &Arc<Ring>, m1: Monomial, m2: Monomial) -> Self {
        let f = ring.field();
        Polynomial::from_terms(ring, vec![(f.one(), m1), (f.from_i64(-1), m2)])
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(Coefficient, Monomial)>) -> Self {
        let mut acc: HashMap<Monomial, Coefficient> = HashMap::with_capacity(terms.len());
        for (c, m) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial length differs from the ring");
            match acc.get_mut(&m) {
                Some(old) => *old = old.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)).collect();
        terms.sort_by(|a, b| native_cmp(&b.1, &a.1));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<Self> {
        parse::parse_polynomial(ring, text)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Terms in descending native order.
    pub fn terms(&self) -> &[(Coefficient, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Coefficient, Monomial)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match native_cmp(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].0.add(&b[j].0);
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(c, m)| (c.neg(), m.clone())).collect() }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c1, m1) in &self.terms {
            for (c2, m2) in &other.terms {
                terms.push((c1.mul(c2), m1.mul(m2)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn scale(&self, c: &Coefficient) -> Result<Polynomial> {
        if c.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(d, m)| (d.mul(c), m.clone())).collect() })
    }

    /// Multiplies by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(c, t)| (c.clone(), t.mul(m))).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Coefficient, Monomial)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.1, &a.1));
        t
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Coefficient, Monomial)> {
        if order.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.1, &b.1))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<Monomial> {
        Ok(self.leading_term(order)?.1)
    }

    /// Scaled so the leading coefficient under `order` is one; zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Result<Polynomial> {
        match self.leading_term(order) {
            Err(Error::ZeroPolynomial) => Ok(self.clone()),
            Err(e) => Err(e),
            Ok((c, _)) => self.scale(&c.inverse()?),
        }
    }

    /// The two monomials of `c·(m1 - m2)`, in storage order, if this is such a binomial.
    pub fn as_pure_difference(&self) -> Option<(&Monomial, &Monomial)> {
        match self.terms.as_slice() {
            [(c1, m1), (c2, m2)] if c1.add(c2).is_zero() => Some((m1, m2)),
            _ => None,
        }
    }

    pub fn is_pure_difference(&self) -> bool {
        self.as_pure_difference().is_some()
    }

    /// A single variable with coefficient one, if this is one.
    pub fn as_variable(&self) -> Option<usize> {
        match self.terms.as_slice() {
            [(c, m)] if c.is_one() && m.degree() == 1 => m.support().first().copied(),
            _ => None,
        }
    }

    /// Re-embeds into `target`, sending variable `i` to `mapping[i]`.
    pub fn map_to_ring(&self, target: &Arc<Ring>, mapping: &[usize]) -> Result<Polynomial> {
        if mapping.len() != self.ring.nvars() || mapping.iter().any(|&j| j >= target.nvars()) || target.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut e = vec![0; target.nvars()];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[mapping[i]] += x;
                }
                (c.clone(), Monomial::new(e))
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Embeds into a ring that extends this one by trailing variables.
    pub fn extend_to(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        let mapping: Vec<usize> = (0..self.ring.nvars()).collect();
        if target.vars()[..self.ring.nvars().min(target.nvars())] != self.ring.vars()[..] {
            return Err(Error::RingMismatch);
        }
        self.map_to_ring(target, &mapping)
    }

    /// Substitutes zero for the given variables.
    pub fn set_zero(&self, vars: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(_, m)| vars.iter().all(|&v| m.exponents()[v] == 0))
            .cloned()
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Exact division by a monomial, if every term is divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(c, t)| t.div(m).map(|q| (c.clone(), q)))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&v| self.terms.iter().any(|(_, m)| m.exponents()[v] > 0)).collect()
    }

    /// Canonical text with terms listed descending under `order`.
    pub fn fmt_with(&self, order: &MonomialOrder) -> String {
        write_terms(&self.ring, &self.sorted_terms(order))
    }
}

fn write_monomial(ring: &Ring, m: &Monomial, out: &mut String) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(ring.var_name(i));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

fn write_terms(ring: &Ring, terms: &[(Coefficient, Monomial)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (c, m)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push('*');
            }
            write_monomial(ring, m, &mut out);
        }
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_terms(&self.ring, &self.terms))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
