//! Poincaré series of the residue field: series arithmetic, the resolution
//! oracle, reduction formulas and hypothesis classifiers.

mod classify;
mod enumerate;
mod formulas;
mod resolution;
mod series;

pub use classify::{
    classify_hilbert, classify_polynomial, three_stretched_check, three_stretched_inequality, ColumnInequality,
    TheoremVerdict,
};
pub use enumerate::{
    enumerate_decompositions, least_dim_with_a1, stretched_row_exceptions, uncovered_tables, DecompositionTable,
};
pub use formulas::{
    chain_through_socle_quotient, closed_form, predict, quotient_formula, quotient_formula_inverse, reduce_quadrics,
    socle_formula, socle_formula_inverse, stretched_series, ClosedFormSource, Prediction, QuadricReduction,
};
pub use resolution::{betti_counts, betti_numbers};
pub use series::{RationalFunction, SeriesLike, TruncatedSeries};
