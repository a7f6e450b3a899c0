mod common;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::One;
use proptest::prelude::*;

use lattice_lab::groebner::{ideal_equal, intersect, krull_dim};
use lattice_lab::lattice::{enumerate_admissible_sets, is_distributive, restrict_to_complement};
use lattice_lab::workflows::{
    certify_prime_component, component_lattice, join_meet_ideal, minimal_primes, radical_certificate,
};
use lattice_lab::{build_fixture, Fixture, Ideal, Lattice, Monomial, MonomialOrder, Polynomial, Ring};

use common::*;

const NVARS: usize = 4;

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, NVARS).prop_map(Monomial::new)
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    (Just((0..NVARS).collect::<Vec<_>>()).prop_shuffle(), any::<bool>()).prop_map(|(p, lex)| {
        if lex {
            MonomialOrder::lex(p).unwrap()
        } else {
            MonomialOrder::degrevlex(p).unwrap()
        }
    })
}

fn polynomial(r: Arc<Ring>) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, monomial()), 0..5).prop_map(move |terms| {
        let terms = terms.into_iter().map(|(c, m)| (r.field().from_i64(c), m)).collect();
        Polynomial::from_terms(&r, terms)
    })
}

fn corpus_lattice() -> impl Strategy<Value = (String, Lattice)> {
    let corpus = small_corpus();
    (0..corpus.len()).prop_map(move |i| corpus[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn monomial_orders_are_total_multiplicative_well_orders(o in order(), a in monomial(), b in monomial(), c in monomial()) {
        prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
        prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
        if o.cmp(&a, &b) == Ordering::Less && o.cmp(&b, &c) == Ordering::Less {
            prop_assert_eq!(o.cmp(&a, &c), Ordering::Less);
        }
        prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), o.cmp(&a, &b));
        prop_assert_ne!(o.cmp(&Monomial::one(NVARS), &a), Ordering::Greater);
    }

    #[test]
    fn polynomial_ring_axioms(
        (f, g, h) in (polynomial(ring(NVARS)), polynomial(ring(NVARS)), polynomial(ring(NVARS)))
    ) {
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(f.add(&g).unwrap().add(&h).unwrap(), f.add(&g.add(&h).unwrap()).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
        prop_assert!(f.sub(&f).unwrap().is_zero());
        prop_assert_eq!(f.mul(&Polynomial::one(f.ring())).unwrap(), f.clone());
    }

    #[test]
    fn display_parse_round_trip(f in polynomial(ring(NVARS))) {
        let back = Polynomial::parse(f.ring(), &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn lattice_laws((_, l) in corpus_lattice(), x in 0usize..64, y in 0usize..64, z in 0usize..64) {
        let (x, y, z) = (x % l.len(), y % l.len(), z % l.len());
        prop_assert_eq!(l.join(x, y), l.join(y, x));
        prop_assert_eq!(l.meet(x, y), l.meet(y, x));
        prop_assert_eq!(l.join(l.join(x, y), z), l.join(x, l.join(y, z)));
        prop_assert_eq!(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
        prop_assert_eq!(l.join(x, l.meet(x, y)), x);
        prop_assert_eq!(l.meet(x, l.join(x, y)), x);
        prop_assert_eq!(l.leq(x, y), l.meet(x, y) == x);
        prop_assert!(l.leq(l.bottom(), x) && l.leq(x, l.top()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn one_generator_per_incomparable_pair((_, l) in corpus_lattice()) {
        let jm = join_meet_ideal(&l).unwrap();
        prop_assert_eq!(jm.basic_binomials.len(), l.incomparable_pairs().len());
        prop_assert_eq!(jm.ideal.generators().len(), l.incomparable_pairs().len());
    }

    #[test]
    fn restriction_is_setting_a_to_zero((_, l) in corpus_lattice(), pick in any::<prop::sample::Index>()) {
        let sets = enumerate_admissible_sets(&l).unwrap();
        let a = &sets[pick.index(sets.len())];
        prop_assume!(a.len() < l.len());
        let jm = join_meet_ideal(&l).unwrap();
        let vars: Vec<usize> = a.members().iter().map(|&x| jm.ring.var_index(l.name(x)).unwrap()).collect();
        let image: BTreeSet<String> = jm
            .ideal
            .generators()
            .iter()
            .map(|g| g.set_zero(&vars))
            .filter(|g| !g.is_zero())
            .map(|g| g.to_string())
            .collect();
        let sub = restrict_to_complement(&l, a).unwrap();
        let restricted: BTreeSet<String> = join_meet_ideal(&sub)
            .unwrap()
            .ideal
            .generators()
            .iter()
            .map(|g| Polynomial::parse(&jm.ring, &g.to_string()).unwrap().to_string())
            .collect();
        prop_assert_eq!(image, restricted);
    }

    #[test]
    fn dimension_does_not_depend_on_the_order((_, l) in corpus_lattice(), seed in any::<u64>()) {
        let jm = join_meet_ideal(&l).unwrap();
        let n = jm.ring.nvars();
        let mut p: Vec<usize> = (0..n).collect();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(p.as_mut_slice(), &mut rng);
        let o = if seed % 2 == 0 { MonomialOrder::lex(p).unwrap() } else { MonomialOrder::degrevlex(p).unwrap() };
        let gb = jm.ideal.gb(&o).unwrap();
        prop_assert!(gb.verify());
        prop_assert_eq!(krull_dim(&gb.initial_ideal(), n), jm.ideal.dim().unwrap());
    }
}

#[test]
fn dual_lattices_share_minimal_prime_shapes() {
    for (name, l) in small_corpus() {
        if name == "N" {
            continue;
        }
        let shape = |l: &Lattice| {
            let mut s: Vec<(usize, BTreeSet<String>)> = minimal_primes(l)
                .unwrap()
                .components
                .iter()
                .map(|c| (c.dim, c.admissible.names(l).into_iter().collect()))
                .collect();
            s.sort();
            s
        };
        assert_eq!(shape(&l), shape(&l.dual()), "{name}");
    }
}

#[test]
fn distributive_dimension_is_join_irreducibles_plus_one() {
    for (name, l) in distributive_corpus() {
        assert!(is_distributive(&l).distributive, "{name}");
        let jm = join_meet_ideal(&l).unwrap();
        assert_eq!(jm.ideal.dim().unwrap(), l.join_irreducibles().len() + 1, "{name}");
    }
}

#[test]
fn distributive_join_meet_ideals_are_prime() {
    for (name, l) in distributive_corpus() {
        let jm = join_meet_ideal(&l).unwrap();
        assert!(certify_prime_component(&jm.ideal).unwrap(), "{name}");
    }
}

#[test]
fn minimal_primes_postcondition() {
    for (name, l) in small_corpus() {
        if !radical_certificate(&l).unwrap().is_radical() {
            assert!(minimal_primes(&l).is_err(), "{name}");
            continue;
        }
        let jm = join_meet_ideal(&l).unwrap();
        let mp = minimal_primes(&l).unwrap();
        let mut meet: Option<Ideal> = None;
        for (i, c) in mp.components.iter().enumerate() {
            assert!(c.certified_prime, "{name}");
            assert!(c.ideal.contains_ideal(&jm.ideal).unwrap(), "{name}");
            for (j, d) in mp.components.iter().enumerate() {
                if i != j {
                    assert!(!c.ideal.contains_ideal(&d.ideal).unwrap(), "{name}: nested components");
                }
            }
            meet = Some(match meet {
                None => c.ideal.clone(),
                Some(m) => intersect(&m, &c.ideal).unwrap(),
            });
        }
        assert!(ideal_equal(&meet.unwrap(), &jm.ideal).unwrap(), "{name}");
    }
}

#[test]
fn q_component_lattice_is_saturated() {
    let l = build_fixture(&Fixture::Q).unwrap();
    let r = join_meet_ideal(&l).unwrap().ring;
    let j = Ideal::parse(&r, &["a*e - b*c", "a*g - c*f", "b*g - e*f", "d - f"]).unwrap();
    let lat = component_lattice(&j).unwrap();
    assert!(lat.saturated);
    // the three minors of a generic 2x3 matrix span rank 2, plus d - f
    assert_eq!(lat.rank(), 3);
    assert!(lat.smith_invariants.iter().all(|d| d == "1" || d == "0"));

    // cross-check against the oracle's determinantal divisors
    let m: IntMatrix = lat.basis.iter().map(|row| row.iter().map(|&x| x.into()).collect()).collect();
    assert!(determinantal_divisor(&m, lat.rank()).is_one());
}
