//! Workflows on join-meet ideals: prime components, radicality, order
//! scans and the `L_k` suite.

mod components;
mod joinmeet;
mod lk;
mod radical;
mod report;
mod scan;

pub use components::{
    certify_prime_component, component_lattice, component_prime, component_prime_over, decompose, minimal_primes,
    ComponentReport, Decomposition, MinimalPrimes, PrimeComponent,
};
pub use joinmeet::{join_meet_ideal, join_meet_ideal_over, lattice_ring, JoinMeetIdeal};
pub use lk::{lk_component_dims, lk_suite};
pub use radical::{
    is_nilpotent_witness, radical_certificate, radical_certificate_with, RadicalOptions, RadicalRoute, RadicalSummary,
    RadicalVerdict,
};
pub use report::{Check, Report};
pub use scan::{
    squarefree_order_scan, OrderVerdict, Permutations, ScanFamily, ScanReport, DEFAULT_SAMPLES, DEFAULT_SEED,
    FULL_ENUMERATION_LIMIT,
};
