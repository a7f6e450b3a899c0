use std::sync::Arc;

use crate::error::Result;
use crate::groebner::Ideal;
use crate::lattice::{AdmissibleSet, Lattice};
use crate::poly::{Field, Monomial, Polynomial, Ring};

/// The ideal generated by `ab - (a∧b)(a∨b)` over all incomparable pairs.
#[derive(Debug, Clone)]
pub struct JoinMeetIdeal {
    pub lattice: Lattice,
    pub ring: Arc<Ring>,
    pub ideal: Ideal,
    /// `((a, b), ab - (a∧b)(a∨b))` with `a < b` as indices.
    pub basic_binomials: Vec<((usize, usize), Polynomial)>,
}

/// `K[L]`: one variable per element, in element order.
pub fn lattice_ring(l: &Lattice, field: Field) -> Result<Arc<Ring>> {
    Ring::new(l.elements().to_vec(), field)
}

/// `ab - (a∧b)(a∨b)` as a polynomial in `ring`, where `var(x)` is the ring index of element `x`.
pub(crate) fn basic_binomial(l: &Lattice, ring: &Arc<Ring>, var: impl Fn(usize) -> usize, a: usize, b: usize) -> Polynomial {
    let n = ring.nvars();
    let lead = Monomial::squarefree(n, &[var(a), var(b)]);
    let tail = Monomial::squarefree(n, &[var(l.meet(a, b)), var(l.join(a, b))]);
    Polynomial::binomial(ring, lead, tail)
}

pub fn join_meet_ideal(l: &Lattice) -> Result<JoinMeetIdeal> {
    join_meet_ideal_over(l, Field::Rationals)
}

pub fn join_meet_ideal_over(l: &Lattice, field: Field) -> Result<JoinMeetIdeal> {
    let ring = lattice_ring(l, field)?;
    let basic_binomials: Vec<_> = l
        .incomparable_pairs()
        .into_iter()
        .map(|(a, b)| ((a, b), basic_binomial(l, &ring, |x| x, a, b)))
        .collect();
    let ideal = Ideal::new(&ring, basic_binomials.iter().map(|(_, f)| f.clone()).collect())?;
    Ok(JoinMeetIdeal { lattice: l.clone(), ring, ideal, basic_binomials })
}

impl JoinMeetIdeal {
    /// Basic binomials written `ab - cd`, lead first as constructed.
    pub fn binomial_strings(&self) -> Vec<String> {
        self.basic_binomials
            .iter()
            .map(|((a, b), _)| {
                let l = &self.lattice;
                let (m, j) = (l.meet(*a, *b), l.join(*a, *b));
                let word = |x: usize, y: usize| {
                    let (x, y) = if x <= y { (x, y) } else { (y, x) };
                    if x == y {
                        format!("{}^2", l.name(x))
                    } else {
                        format!("{}*{}", l.name(x), l.name(y))
                    }
                };
                format!("{} - {}", word(*a, *b), word(m, j))
            })
            .collect()
    }
}

/// Basic binomials of `L \ A`, in the ring of `L`.
pub(crate) fn complement_binomials(l: &Lattice, ring: &Arc<Ring>, a: &AdmissibleSet) -> Vec<Polynomial> {
    l.incomparable_pairs()
        .into_iter()
        .filter(|&(x, y)| !a.contains(x) && !a.contains(y))
        .map(|(x, y)| basic_binomial(l, ring, |v| v, x, y))
        .collect()
}
