//! LC orbits of graphs and the classification of self-dual additive codes
//! over GF(4) up to equivalence.

mod classify;
mod counts;
mod error;
mod orbit;
mod record;
mod store;

pub use classify::{
    auto_cutoff, bucket_by_pwd, classify, classify_seeds, classify_up_to, classify_with, extension_set, seed_graphs,
    sort_records, Classification, ClassifyOptions, Seed, Strategy, MAX_AUTO_CUTOFF,
};
pub use counts::{
    big_lambda, decomposable_counts, min_lambda, orbit_count, ramsey_lower_bound, DecomposableCounts,
    PartitionCount, ORBIT_COUNTS,
};
pub use error::OrbitError;
pub use orbit::{lambda, lc_canonise, lc_orbit, lc_orbit_limited};
pub use record::{
    distance_histogram, read_census, summary_table, type_ii_histogram, type_label, write_census,
    OrbitRecord,
};
pub use store::GraphStore;
