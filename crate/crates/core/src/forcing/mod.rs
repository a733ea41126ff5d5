//! Zero forcing: the color rule, verification of leader sets, exact
//! searches for `Z`, `Z_t`, `Z_c` and the Grundy domination numbers, and the
//! cross-intersecting pair checker used in the lower-bound arguments.

mod bollobas;
mod closure;
mod grundy;
pub mod mask;
mod search;
mod variants;

pub use bollobas::{bollobas_check, bollobas_from_sequence, BollobasInstance, BollobasVerdict};
pub use closure::{
    closure, closure_naive, closure_with, is_connected_zfs, is_total_zfs, is_zero_forcing,
    Coloring, ForcingTrace, Schedule,
};
pub use grundy::{
    footprint_pairs, grundy_exact, grundy_exact_with_budget, zf_from_grundy, DominationSequence,
    GrundyVariant, GRUNDY_STATE_BUDGET,
};
pub use search::{
    enumerate_white_sets, heuristic_white_search, zero_forcing_number_exact, EnumerationReport,
    HeuristicResult, SearchOptions, ZfSearchResult,
};
pub use variants::{variant_number_exact, ZfVariant};
