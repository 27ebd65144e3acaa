//! Exact local invariants of isolated complete intersection singularities:
//! Milnor numbers, the GSV index and the local Euler obstruction of a
//! function, together with the identities relating them.

pub mod invariants;
pub mod morsify;
pub mod parser;
pub mod polyring;
pub mod stdbasis;
pub mod strata;
pub mod unipoly;

pub use invariants::{
    euler_obstruction, milnor_hypersurface, milnor_icis, milnor_of_function, mu_g, pick_generic,
    validate_icis, GenericityConfig, GermSpec, InvariantError, InvariantReport, LinearForm,
};
pub use morsify::{
    morse_count, pullback, verify_morsification, MonomialCurve, MorseCount, MorsificationReport,
    MorsifyError, OracleConfig,
};
pub use parser::{parse, ParseError, VarTable};
pub use polyring::{Coeff, LocalOrder, Monomial, PolyError, Polynomial};
pub use stdbasis::{colength, colength_oracle, standard_basis, Colength, IdealSpec, StandardBasis};
pub use strata::{StrataError, StrataTable, StratumDatum};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The deterministic generator used for every seeded computation.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
