//! Named verification suites: seeded randomized checks of every identity the
//! crate relies on, each trial independent and reproducible from the seed.

use std::fmt;

use rand::Rng;

use crate::apolar::{
    annihilator, annihilator_of_tdf, derivative_module, hilbert_function, perp, split_annihilator, split_quadrics,
};
use crate::artin::{algebra_from_inverse_system, symmetric_decomposition};
use crate::growth::is_o_sequence;
use crate::poincare::{
    betti_numbers, enumerate_decompositions, least_dim_with_a1, quotient_formula, socle_formula,
    stretched_row_exceptions, three_stretched_check, uncovered_tables, TruncatedSeries,
};
use crate::random::InstanceGenerator;
use crate::{Error, Polynomial, Rational, Result, Subspace};

/// Truncation order for series comparisons.
pub const SERIES_ORDER: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    MacaulayCorrespondence,
    LdfTdf,
    SplitSum,
    QuadricSplit,
    DecompositionSymmetry,
    DecompositionSum,
    GorensteinQuotient,
    SocleFormula,
    QuotientFormula,
    QuadricRelation,
    ThreeStretched,
    BoundedLengthDichotomy,
    OSequence,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::MacaulayCorrespondence,
        Suite::LdfTdf,
        Suite::SplitSum,
        Suite::QuadricSplit,
        Suite::DecompositionSymmetry,
        Suite::DecompositionSum,
        Suite::GorensteinQuotient,
        Suite::SocleFormula,
        Suite::QuotientFormula,
        Suite::QuadricRelation,
        Suite::ThreeStretched,
        Suite::BoundedLengthDichotomy,
        Suite::OSequence,
    ];

    /// The command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Suite::MacaulayCorrespondence => "macaulay-corr",
            Suite::LdfTdf => "ldf-tdf",
            Suite::SplitSum => "lemma31",
            Suite::QuadricSplit => "cor32",
            Suite::DecompositionSymmetry => "decomp-sym",
            Suite::DecompositionSum => "gordec-sum",
            Suite::GorensteinQuotient => "gorquot",
            Suite::SocleFormula => "poinc-soc",
            Suite::QuotientFormula => "poinc-quot",
            Suite::QuadricRelation => "prop41",
            Suite::ThreeStretched => "lemma51",
            Suite::BoundedLengthDichotomy => "enum-54",
            Suite::OSequence => "o-seq",
        }
    }

    /// A descriptive alternative to [`name`](Self::name).
    pub fn alias(self) -> &'static str {
        match self {
            Suite::MacaulayCorrespondence => "perp-round-trip",
            Suite::LdfTdf => "graded-annihilator",
            Suite::SplitSum => "split-sum",
            Suite::QuadricSplit => "quadric-split",
            Suite::DecompositionSymmetry => "row-symmetry",
            Suite::DecompositionSum => "row-sum",
            Suite::GorensteinQuotient => "first-row",
            Suite::SocleFormula => "socle-formula",
            Suite::QuotientFormula => "quotient-formula",
            Suite::QuadricRelation => "quadric-relation",
            Suite::ThreeStretched => "three-stretched",
            Suite::BoundedLengthDichotomy => "dichotomy",
            Suite::OSequence => "macaulay-bound",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s || x.alias() == s)
    }

    /// What a passing trial establishes, for the summary line.
    pub fn claim(self) -> &'static str {
        match self {
            Suite::MacaulayCorrespondence => "inverse systems recovered from their annihilators",
            Suite::LdfTdf => "graded annihilators match top degree forms",
            Suite::SplitSum => "split decompositions equal annihilator",
            Suite::QuadricSplit => "quadric-tail decompositions equal annihilator",
            Suite::DecompositionSymmetry => "decompositions symmetric with vanishing ends",
            Suite::DecompositionSum => "decompositions sum to the Hilbert function",
            Suite::GorensteinQuotient => "first rows equal the Hilbert function of the top form",
            Suite::SocleFormula => "socle formula identities",
            Suite::QuotientFormula => "socle-quotient formula identities",
            Suite::QuadricRelation => "quadric relations match the oracle",
            Suite::ThreeStretched => "3-stretched inequalities hold",
            Suite::BoundedLengthDichotomy => "socle degrees satisfy the f_3 / cdeg dichotomy",
            Suite::OSequence => "computed Hilbert functions are O-sequences",
        }
    }

    /// Suites whose trials do not depend on the seed.
    pub fn is_exhaustive(self) -> bool {
        matches!(self, Suite::BoundedLengthDichotomy)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trial {
    pub index: usize,
    pub input: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: Vec<Trial>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.trials.iter().filter(|t| t.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.trials.len()
    }

    pub fn summary(&self) -> String {
        format!("{}/{} {}", self.passed(), self.trials.len(), self.suite.claim())
    }
}

/// Seed of trial `index`, so trials can run in any order.
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Runs `trials` trials (ignored for exhaustive suites), concurrently, and
/// assembles them in trial order.
pub fn run_suite(suite: Suite, trials: usize, seed: u64) -> SuiteReport {
    let count = if suite.is_exhaustive() { ENUMERATION_DEGREES.len() } else { trials };
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(count.max(1));
    let mut results: Vec<Option<Trial>> = vec![None; count];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (w..count)
                        .step_by(workers)
                        .map(|i| (i, run_trial(suite, i, trial_seed(seed, i))))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, t) in h.join().expect("trial thread panicked") {
                results[i] = Some(t);
            }
        }
    });
    SuiteReport { suite, seed, trials: results.into_iter().map(|t| t.expect("every trial ran")).collect() }
}

const ENUMERATION_DEGREES: [usize; 6] = [4, 5, 6, 7, 8, 9];

fn run_trial(suite: Suite, index: usize, seed: u64) -> Trial {
    let mut gen = InstanceGenerator::new(seed);
    let (input, outcome) = match suite {
        Suite::MacaulayCorrespondence => small_polynomial(&mut gen, round_trip),
        Suite::LdfTdf => small_polynomial(&mut gen, ldf_tdf),
        Suite::SplitSum => split_sum(&mut gen),
        Suite::QuadricSplit => quadric_split(&mut gen),
        Suite::DecompositionSymmetry => small_gorenstein(&mut gen, row_symmetry),
        Suite::DecompositionSum => small_gorenstein(&mut gen, row_sum),
        Suite::GorensteinQuotient => small_gorenstein(&mut gen, first_row),
        Suite::SocleFormula => socle_identity(&mut gen),
        Suite::QuotientFormula => quotient_identity(&mut gen),
        Suite::QuadricRelation => quadric_relation(&mut gen),
        Suite::ThreeStretched => three_stretched(&mut gen),
        Suite::BoundedLengthDichotomy => {
            let s = ENUMERATION_DEGREES[index];
            (format!("s = {s}"), dichotomy(s))
        }
        Suite::OSequence => small_gorenstein(&mut gen, o_sequences),
    };
    match outcome {
        Ok(o) => Trial { index, input, passed: o.passed, detail: o.detail },
        Err(e) => Trial { index, input, passed: false, detail: format!("error: {e}") },
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { passed, detail: detail.into() })
}

type Drawn = (String, Result<Outcome>);

/// Any `F` with `n <= 4`, `s <= 5`.
fn small_polynomial(gen: &mut InstanceGenerator, check: fn(&Polynomial) -> Result<Outcome>) -> Drawn {
    let n = gen.rng().gen_range(1..=4);
    let s = gen.rng().gen_range(2..=5);
    let f = gen.polynomial(n, s);
    (f.to_string(), check(&f))
}

/// Non-degenerate `F` with `n <= 4`, `s <= 5`.
fn small_gorenstein(gen: &mut InstanceGenerator, check: fn(&Polynomial) -> Result<Outcome>) -> Drawn {
    let n = gen.rng().gen_range(1..=4);
    let s = gen.rng().gen_range(2..=5);
    let f = gen.gorenstein(n, s);
    (f.to_string(), check(&f))
}

fn round_trip(f: &Polynomial) -> Result<Outcome> {
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    let ann = annihilator(f)?;
    let sys = derivative_module(f)?;
    let j = perp(f.nvars(), ann.minimal_generators(), s)?;
    let bad: Vec<u32> = (0..=s).filter(|&q| j.level(q) != &sys.filtered(q)).collect();
    let detail =
        if bad.is_empty() { format!("equal in degrees 0..={s}") } else { format!("differ in degrees {bad:?}") };
    outcome(bad.is_empty(), detail)
}

fn ldf_tdf(f: &Polynomial) -> Result<Outcome> {
    let ann = annihilator(f)?;
    let sys = derivative_module(f)?;
    let h_graded = ann.graded_quotient_hilbert();
    let h_tdf = sys.hilbert();
    let ldf = ann.ldf_ideal();
    let ann_tdf = annihilator_of_tdf(&sys);
    let bad: Vec<usize> = (0..ldf.len()).filter(|&q| ldf[q] != ann_tdf[q]).collect();
    let ok = h_graded == h_tdf && bad.is_empty();
    outcome(ok, format!("H = {h_tdf:?}, S/ldf = {h_graded:?}, ldf != Ann(tdf) in degrees {bad:?}"))
}

fn split_sum(gen: &mut InstanceGenerator) -> Drawn {
    let n = gen.rng().gen_range(2..=4);
    let (g, h) = gen.disjoint_pair(n, 4);
    let input = format!("G = {g}; H = {h}");
    let out = split_annihilator(&g, &h).and_then(|r| certificate_outcome(&r.certificate));
    (input, out)
}

fn quadric_split(gen: &mut InstanceGenerator) -> Drawn {
    let m = gen.rng().gen_range(1..=3);
    let n = gen.rng().gen_range(m..=m + 2);
    let s = gen.rng().gen_range(2..=4);
    let g = gen.gorenstein(m, s);
    let input = format!("G = {g}; n = {n}");
    let out = split_quadrics(&g, n).and_then(|r| certificate_outcome(&r.certificate));
    (input, out)
}

fn certificate_outcome(c: &crate::apolar::Certificate) -> Result<Outcome> {
    let bad: Vec<u32> = c.checks.iter().filter(|d| !d.equal).map(|d| d.degree).collect();
    let detail = format!(
        "{} degrees compared, mismatches {bad:?}, generators annihilate: {}",
        c.checks.len(),
        c.generators_annihilate
    );
    outcome(c.holds(), detail)
}

fn row_symmetry(f: &Polynomial) -> Result<Outcome> {
    let dec = symmetric_decomposition(&algebra_from_inverse_system(f)?)?;
    match dec.check() {
        Ok(()) => outcome(true, format!("rows {:?}", dec.rows)),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn row_sum(f: &Polynomial) -> Result<Outcome> {
    let dec = symmetric_decomposition(&algebra_from_inverse_system(f)?)?;
    let h = hilbert_function(f)?;
    let sums: Vec<usize> = (0..h.len()).map(|i| (0..dec.rows.len()).map(|a| dec.entry(a, i)).sum()).collect();
    let f2 = dec.f_h(2).unwrap_or(h[1]);
    outcome(sums == h && f2 == h[1], format!("H = {h:?}, row sums {sums:?}, f_2 = {f2}"))
}

fn first_row(f: &Polynomial) -> Result<Outcome> {
    let dec = symmetric_decomposition(&algebra_from_inverse_system(f)?)?;
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    let top = hilbert_function(&f.homogeneous_component(s))?;
    outcome(dec.rows[0] == top, format!("Q(0) = {:?}, S/Ann(F_s) = {top:?}", dec.rows[0]))
}

fn o_sequences(f: &Polynomial) -> Result<Outcome> {
    let dec = symmetric_decomposition(&algebra_from_inverse_system(f)?)?;
    let mut seqs = vec![hilbert_function(f)?];
    let mut partial = vec![0; dec.total.len()];
    for row in &dec.rows {
        for (i, x) in row.iter().enumerate() {
            partial[i] += x;
        }
        seqs.push(partial.clone());
    }
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    seqs.push(hilbert_function(&f.homogeneous_component(s))?);
    let bad: Vec<&Vec<usize>> = seqs.iter().filter(|h| !is_o_sequence(h)).collect();
    outcome(bad.is_empty(), format!("{} sequences checked, violations {bad:?}", seqs.len()))
}

fn series_outcome(lhs: &TruncatedSeries, rhs: &TruncatedSeries, what: &str) -> Result<Outcome> {
    outcome(lhs == rhs, format!("{what}: oracle {lhs}, formula {rhs}"))
}

fn socle_identity(gen: &mut InstanceGenerator) -> Drawn {
    let f = gen.gorenstein_bounded(2..=4, 2..=4, 12);
    let run = || -> Result<Outcome> {
        let a = algebra_from_inverse_system(&f)?;
        let c = a.modulo_socle()?;
        let lhs = betti_numbers(&a, SERIES_ORDER)?;
        let rhs = socle_formula(&betti_numbers(&c, SERIES_ORDER)?)?;
        series_outcome(&lhs, &rhs, &format!("dim {}", a.dim()))
    };
    (f.to_string(), run())
}

/// `C = A/Soc(A)` for `F = G + sum_{j>m} y_j^2`; the images of `x_j`, `j > m`,
/// are independent socle elements of `C` outside `N^2`.
fn quotient_identity(gen: &mut InstanceGenerator) -> Drawn {
    let m = gen.rng().gen_range(1..=3);
    let h = gen.rng().gen_range(1..=2);
    let s = gen.rng().gen_range(2..=4);
    let g = gen.gorenstein(m, s);
    let n = m + h;
    let f = with_quadrics(&g, n);
    let run = || -> Result<Outcome> {
        let c = algebra_from_inverse_system(&f)?.modulo_socle()?;
        let elems: Vec<Vec<Rational>> = c.variable_images()[m..].to_vec();
        let span = Subspace::from_vectors(c.dim(), elems.clone());
        let n2 = c.ideal_power(2);
        let independent = span.dim() == h && span.intersect(&n2).map(|x| x.dim() == 0).unwrap_or(false);
        if !independent || !c.socle().contains_subspace(&span) {
            return Err(Error::Invariant("split variables are not independent socle elements outside N^2".into()));
        }
        let quotient = c.quotient_algebra(&elems)?;
        let lhs = betti_numbers(&c, SERIES_ORDER)?;
        let rhs = quotient_formula(&betti_numbers(&quotient, SERIES_ORDER)?, h)?;
        series_outcome(&lhs, &rhs, &format!("h = {h}"))
    };
    (f.to_string(), run())
}

fn with_quadrics(g: &Polynomial, n: usize) -> Polynomial {
    let mut f = g.extend_vars(n);
    for j in g.nvars()..n {
        f = &f + &(&Polynomial::var(n, j) * &Polynomial::var(n, j));
    }
    f
}

/// `P_A = P_B / (1 - (n - m) z P_B)` for `G` in `m = 2, 3` variables.
fn quadric_relation(gen: &mut InstanceGenerator) -> Drawn {
    let m = gen.rng().gen_range(2..=3);
    let n = gen.rng().gen_range(m..=5);
    let s = gen.rng().gen_range(2..=if m == 3 { 3 } else { 4 });
    let g = gen.gorenstein(m, s);
    let f = with_quadrics(&g, n);
    let run = || -> Result<Outcome> {
        let a = algebra_from_inverse_system(&f)?;
        let b = algebra_from_inverse_system(&g)?;
        let lhs = betti_numbers(&a, SERIES_ORDER)?;
        let rhs = quotient_formula(&betti_numbers(&b, SERIES_ORDER)?, n - m)?;
        let h = hilbert_function(&f)?;
        let drop = h[1] as i64 - h.get(2).copied().unwrap_or(0) as i64;
        series_outcome(&lhs, &rhs, &format!("m = {m}, n - m = {}, H(1) - H(2) = {drop}", n - m))
    };
    (f.to_string(), run())
}

fn three_stretched(gen: &mut InstanceGenerator) -> Drawn {
    let f = gen.three_stretched(2..=5, 4..=6);
    let out = three_stretched_check(&f).and_then(|c| outcome(c.holds(), format!("{} >= {}", c.lhs, c.rhs)));
    (f.to_string(), out)
}

fn dichotomy(s: usize) -> Result<Outcome> {
    let tables = enumerate_decompositions(s, 16, 4)?;
    let uncovered = uncovered_tables(s, 16, 4)?;
    let mut ok = !tables.is_empty() && uncovered.is_empty();
    let mut detail = format!("{} tables, {} uncovered", tables.len(), uncovered.len());
    if s == 6 {
        let least = least_dim_with_a1(6, 3, 4, 20)?;
        ok &= least.is_some_and(|d| d > 16);
        detail += &format!("; a_1 >= 3 needs dim {least:?}");
    }
    if s >= 7 {
        let ex = stretched_row_exceptions(s, 16)?;
        ok &= ex.iter().all(|d| d.hilbert[2] >= 5);
        detail += &format!("; {} tables with a_1 = 1 and f_3 >= 5, all with H(2) >= 5", ex.len());
    }
    outcome(ok, detail)
}
