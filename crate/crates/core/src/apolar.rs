//! Macaulay correspondence: contraction, inverse systems and apolar ideals.
//!
//! `S = Q[[x_1..x_n]]` acts on `P = Q[y_1..y_n]` by
//! `x^a ∘ y^b = a! * C(b, a) * y^(b-a)` when `b >= a` componentwise, else 0.
//! All ideal computations here are degree-bounded linear algebra: since
//! `S_+^(s+1) ∘ F = 0` for `deg F = s`, truncating at degree `s + 1` loses
//! nothing.

use crate::artin;
use crate::exact::sparse::to_sparse;
use crate::exact::{kernel, Echelon, Insertion, Matrix, Rational, Subspace};
use crate::poly::{Monomial, MonomialBasis, Polynomial};
use crate::{Error, HilbertVector, Result};

/// `x^alpha ∘ y^beta` as `(coefficient, y^(beta - alpha))`.
pub fn contract_monomial(alpha: &Monomial, beta: &Monomial) -> Option<(Rational, Monomial)> {
    let rest = beta.checked_div(alpha)?;
    // alpha! * C(beta, alpha) = beta! / (beta - alpha)!
    let mut num: i64 = 1;
    let mut c = Rational::ONE;
    for (&b, &r) in beta.exponents().iter().zip(rest.exponents()) {
        for k in (r + 1)..=b {
            match num.checked_mul(k as i64) {
                Some(v) => num = v,
                None => {
                    c = c * Rational::from_int(num);
                    num = k as i64;
                }
            }
        }
    }
    Some((c * Rational::from_int(num), rest))
}

/// The contraction `g ∘ F`.
pub fn contract(g: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    if g.nvars() != f.nvars() {
        return Err(Error::VariableCountMismatch { left: g.nvars(), right: f.nvars() });
    }
    let mut out = Polynomial::zero(f.nvars());
    for (a, ca) in g.terms() {
        for (b, cb) in f.terms() {
            if let Some((k, m)) = contract_monomial(a, b) {
                out.add_term(m, &(&k * &(ca * cb)));
            }
        }
    }
    Ok(out)
}

fn to_coords(p: &Polynomial, basis: &MonomialBasis) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; basis.len()];
    for (m, c) in p.terms() {
        let i = basis.index_of(m).expect("monomial outside coordinate range");
        v[i] = c.clone();
    }
    v
}

fn from_coords(v: &[Rational], basis: &MonomialBasis) -> Polynomial {
    Polynomial::from_terms(
        basis.nvars(),
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (basis.monomial(i).clone(), c.clone())),
    )
}

/// Rejects inputs with a constant or linear part (unless `deg F <= 1`).
pub fn check_normalized(f: &Polynomial) -> Result<()> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d >= 2 && f.order()? < 2 {
        return Err(Error::NotNormalized(format!("F = {f} has terms of degree < 2; expected F = F_(>=2)")));
    }
    Ok(())
}

/// The S-submodule `<F>` of P generated by contraction, with its top degree forms.
#[derive(Clone, Debug)]
pub struct InverseSystem {
    nvars: usize,
    socle_degree: u32,
    /// P-side coordinates, degrees `s..=0`.
    coords: MonomialBasis,
    module: Subspace,
    tdf: Vec<Subspace>,
}

impl InverseSystem {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn socle_degree(&self) -> u32 {
        self.socle_degree
    }

    pub fn coords(&self) -> &MonomialBasis {
        &self.coords
    }

    /// The whole module `<F>` in the coordinates of [`Self::coords`].
    pub fn module(&self) -> &Subspace {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// A basis of `<F>` as polynomials.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.module.basis_vectors().iter().map(|v| from_coords(v, &self.coords)).collect()
    }

    /// `tdf(<F>)_q` as a subspace of `P_q` (coordinates `monomials_of_degree(n, q)`).
    pub fn tdf(&self, q: u32) -> Subspace {
        self.tdf
            .get(q as usize)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(crate::poly::monomials_of_degree(self.nvars, q).len()))
    }

    /// `<F> ∩ P_{<=q}` in the coordinates of [`Self::coords`].
    pub fn filtered(&self, q: u32) -> Subspace {
        let start = self.coords.len() - crate::poly::MonomialBasis::ascending(self.nvars, q).len();
        let rows = (0..self.module.dim())
            .filter(|&i| self.module.pivots()[i] >= start)
            .map(|i| self.module.basis().row(i).to_vec())
            .collect();
        Subspace::from_vectors(self.coords.len(), rows)
    }

    /// `H(q) = dim tdf(<F>)_q` for `q = 0..=s`.
    pub fn hilbert(&self) -> HilbertVector {
        self.tdf.iter().map(Subspace::dim).collect()
    }
}

/// Closes `{F}` under contraction by the variables.
pub fn derivative_module(f: &Polynomial) -> Result<InverseSystem> {
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    let n = f.nvars();
    let coords = MonomialBasis::descending(n, s);
    let mut ech = Echelon::new(coords.len());
    let mut found = Vec::new();
    let mut queue = vec![f.clone()];
    ech.insert(to_sparse(&to_coords(f, &coords)));
    found.push(to_coords(f, &coords));
    while let Some(g) = queue.pop() {
        for i in 0..n {
            let h = contract(&Polynomial::var(n, i), &g)?;
            if h.is_zero() {
                continue;
            }
            let v = to_coords(&h, &coords);
            if let Insertion::Independent = ech.insert(to_sparse(&v)) {
                found.push(v);
                queue.push(h);
            }
        }
    }
    let module = Subspace::from_vectors(coords.len(), found);
    let tdf = (0..=s)
        .map(|q| {
            let block = coords.block(q);
            let rows = (0..module.dim())
                .filter(|&i| block.contains(&module.pivots()[i]))
                .map(|i| module.basis().row(i)[block.clone()].to_vec())
                .collect();
            Subspace::from_vectors(block.len(), rows)
        })
        .collect();
    Ok(InverseSystem { nvars: n, socle_degree: s, coords, module, tdf })
}

/// `H_{S/Ann(F)}(q) = dim tdf(<F>)_q`.
pub fn hilbert_function(f: &Polynomial) -> Result<HilbertVector> {
    Ok(derivative_module(f)?.hilbert())
}

pub fn socle_degree(f: &Polynomial) -> Result<u32> {
    f.degree().ok_or(Error::ZeroPolynomial)
}

/// Largest `i` with `H(i) > 1`, or 0.
pub fn capital_degree_of(h: &[usize]) -> usize {
    h.iter().rposition(|&x| x > 1).unwrap_or(0)
}

pub fn capital_degree(f: &Polynomial) -> Result<usize> {
    let h = hilbert_function(f)?;
    let c = capital_degree_of(&h);
    let s = h.len() - 1;
    if s >= 1 && c >= s {
        return Err(Error::Invariant(format!("capital degree {c} not below socle degree {s}")));
    }
    Ok(c)
}

pub fn is_stretched(f: &Polynomial) -> Result<bool> {
    Ok(capital_degree(f)? <= 1)
}

/// True iff `dim tdf(<F>)_1` equals the number of variables.
pub fn is_nondegenerate(f: &Polynomial) -> Result<bool> {
    let h = hilbert_function(f)?;
    Ok(h.get(1).copied().unwrap_or(0) == f.nvars())
}

/// An ideal of S modulo `S_+^(T+1)`, as a subspace of `S_{<=T}` in
/// increasing-degree coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedIdeal {
    pub nvars: usize,
    pub truncation: u32,
    pub span: Subspace,
}

impl TruncatedIdeal {
    pub fn coords(&self) -> MonomialBasis {
        MonomialBasis::ascending(self.nvars, self.truncation)
    }

    /// The ideal generated by `gens`, modulo `S_+^(T+1)`.
    pub fn generated_by(nvars: usize, truncation: u32, gens: &[Polynomial]) -> Self {
        let coords = MonomialBasis::ascending(nvars, truncation);
        let mut rows = Vec::new();
        for g in gens {
            let Ok(ord) = g.order() else { continue };
            if ord > truncation {
                continue;
            }
            let g = g.truncate_above(truncation);
            for d in 0..=(truncation - ord) {
                for u in crate::poly::monomials_of_degree(nvars, d) {
                    let ug = (&Polynomial::monomial(nvars, u, Rational::ONE) * &g).truncate_above(truncation);
                    rows.push(to_coords(&ug, &coords));
                }
            }
        }
        TruncatedIdeal { nvars, truncation, span: Subspace::from_vectors(coords.len(), rows) }
    }

    /// The image modulo `S_+^(q+1)`, in the coordinates of `S_{<=q}`.
    pub fn modulo(&self, q: u32) -> Subspace {
        let len = MonomialBasis::ascending(self.nvars, q.min(self.truncation)).len();
        self.span.project(&(0..len).collect::<Vec<_>>())
    }
}

/// One line of an equality certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    pub degree: u32,
    pub assembled_dim: usize,
    pub annihilator_dim: usize,
    pub equal: bool,
}

/// Degree-by-degree comparison of two ideals modulo `S_+^(q+1)`, `q = 0..=T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub checks: Vec<DegreeCheck>,
    /// Every assembled generator annihilates F.
    pub generators_annihilate: bool,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.generators_annihilate && self.checks.iter().all(|c| c.equal)
    }

    fn compare(a: &TruncatedIdeal, b: &TruncatedIdeal, gens_ok: bool) -> Self {
        let checks = (0..=a.truncation)
            .map(|q| {
                let (x, y) = (a.modulo(q), b.modulo(q));
                DegreeCheck { degree: q, assembled_dim: x.dim(), annihilator_dim: y.dim(), equal: x == y }
            })
            .collect();
        Certificate { checks, generators_annihilate: gens_ok }
    }
}

/// `Ann(F)` with per-degree levels and minimal generators.
#[derive(Clone, Debug)]
pub struct ApolarIdeal {
    nvars: usize,
    truncation: u32,
    coords: MonomialBasis,
    /// `levels[q] = I_{<=q}`, embedded in `S_{<=T}` coordinates.
    levels: Vec<Subspace>,
    generators: Vec<Polynomial>,
}

impl ApolarIdeal {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `T = s + 1`.
    pub fn truncation_degree(&self) -> u32 {
        self.truncation
    }

    pub fn coords(&self) -> &MonomialBasis {
        &self.coords
    }

    /// All elements of degree at most `q`.
    pub fn level(&self, q: u32) -> &Subspace {
        &self.levels[(q.min(self.truncation)) as usize]
    }

    pub fn minimal_generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The ideal modulo `S_+^(T+1)`.
    pub fn truncated(&self) -> TruncatedIdeal {
        TruncatedIdeal { nvars: self.nvars, truncation: self.truncation, span: self.level(self.truncation).clone() }
    }

    /// `ldf(I)_q` for `q = 0..=T` as subspaces of `S_q`.
    pub fn ldf_ideal(&self) -> Vec<Subspace> {
        let top = self.level(self.truncation);
        (0..=self.truncation)
            .map(|q| {
                let block = self.coords.block(q);
                let rows = (0..top.dim())
                    .filter(|&i| block.contains(&top.pivots()[i]))
                    .map(|i| top.basis().row(i)[block.clone()].to_vec())
                    .collect();
                Subspace::from_vectors(block.len(), rows)
            })
            .collect()
    }

    /// Hilbert function of `S / ldf(I)`, trailing zeros dropped.
    pub fn graded_quotient_hilbert(&self) -> HilbertVector {
        let mut h: Vec<usize> = self.ldf_ideal().iter().map(|sp| sp.ambient_dim() - sp.dim()).collect();
        while h.last() == Some(&0) {
            h.pop();
        }
        h
    }
}

/// Pairing `<x^g, y^b> = g!` if `g == b`, else 0, as a row over a monomial list.
fn pairing_row(p: &Polynomial, monos: &[Monomial]) -> Vec<Rational> {
    monos.iter().map(|m| &p.coeff(m) * &m.factorial()).collect()
}

/// `Ann(F)`: the kernel of `g ↦ g ∘ F` on `S_{<=q}` for every `q <= s + 1`.
pub fn annihilator(f: &Polynomial) -> Result<ApolarIdeal> {
    let s = f.degree().ok_or(Error::ZeroPolynomial)?;
    let n = f.nvars();
    let t = s + 1;
    let s_coords = MonomialBasis::ascending(n, t);
    let p_coords = MonomialBasis::descending(n, s);
    let mut map = Matrix::zeros(p_coords.len(), s_coords.len());
    for (j, a) in s_coords.monomials().iter().enumerate() {
        for (b, c) in f.terms() {
            if let Some((k, m)) = contract_monomial(a, b) {
                let i = p_coords.index_of(&m).expect("in range");
                map[(i, j)] += &(&k * c);
            }
        }
    }
    let mut levels = Vec::with_capacity(t as usize + 1);
    for q in 0..=t {
        let len = MonomialBasis::ascending(n, q).len();
        let sub = Matrix::from_rows(len, (0..map.rows()).map(|i| map.row(i)[..len].to_vec()).collect());
        let ker = kernel(&sub);
        let map_idx: Vec<usize> = (0..len).collect();
        levels.push(ker.embed(s_coords.len(), &map_idx));
    }
    let generators = minimal_generators(n, t, &s_coords, &levels);
    Ok(ApolarIdeal { nvars: n, truncation: t, coords: s_coords, levels, generators })
}

/// Minimal generators: degree by degree, basis elements of `I_{<=q}` that are
/// independent modulo `S_+ * I + I_{<=q-1}`.
fn minimal_generators(n: usize, t: u32, coords: &MonomialBasis, levels: &[Subspace]) -> Vec<Polynomial> {
    let top = &levels[t as usize];
    let mut ech = Echelon::new(coords.len());
    for v in top.basis_vectors() {
        let g = from_coords(&v, coords);
        for i in 0..n {
            let xg = (&Polynomial::var(n, i) * &g).truncate_above(t);
            if !xg.is_zero() {
                ech.insert(to_sparse(&to_coords(&xg, coords)));
            }
        }
    }
    let mut gens = Vec::new();
    for level in levels.iter().take(t as usize + 1) {
        for v in level.basis_vectors() {
            if let Insertion::Independent = ech.insert(to_sparse(&v)) {
                gens.push(from_coords(&v, coords).primitive());
            }
        }
    }
    gens
}

/// Result of [`perp`]: `J^⊥ ∩ P_{<=q}` for each `q <= bound`.
#[derive(Clone, Debug)]
pub struct PerpSystem {
    /// P-side coordinates, degrees `bound..=0`.
    pub coords: MonomialBasis,
    pub levels: Vec<Subspace>,
}

impl PerpSystem {
    pub fn level(&self, q: u32) -> &Subspace {
        &self.levels[q as usize]
    }

    pub fn basis(&self, q: u32) -> Vec<Polynomial> {
        self.level(q).basis_vectors().iter().map(|v| from_coords(v, &self.coords)).collect()
    }
}

/// `J^⊥ = {F : g ∘ F = 0 for all g in J}` for the ideal generated by `generators`,
/// restricted to `P_{<=bound}`.
pub fn perp(nvars: usize, generators: &[Polynomial], bound: u32) -> Result<PerpSystem> {
    for g in generators {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if g.nvars() != nvars {
            return Err(Error::VariableCountMismatch { left: g.nvars(), right: nvars });
        }
    }
    let coords = MonomialBasis::descending(nvars, bound);
    let ideal = TruncatedIdeal::generated_by(nvars, bound, generators);
    let s_coords = ideal.coords();
    let rows: Vec<Vec<Rational>> = ideal
        .span
        .basis_vectors()
        .iter()
        .map(|v| pairing_row(&from_coords(v, &s_coords), coords.monomials()))
        .collect();
    let all =
        if rows.is_empty() { Subspace::full(coords.len()) } else { kernel(&Matrix::from_rows(coords.len(), rows)) };
    let levels = (0..=bound)
        .map(|q| {
            let start = coords.len() - MonomialBasis::ascending(nvars, q).len();
            all.intersect(&Subspace::coordinate(coords.len(), start..coords.len())).expect("same ambient")
        })
        .collect();
    Ok(PerpSystem { coords, levels })
}

/// `Ann(tdf(<F>))` degree by degree, computed from the graded pairing `S_q × P_q`.
pub fn annihilator_of_tdf(sys: &InverseSystem) -> Vec<Subspace> {
    let n = sys.nvars();
    (0..=sys.socle_degree() + 1)
        .map(|q| {
            let monos = crate::poly::monomials_of_degree(n, q);
            let tdf = sys.tdf(q);
            if tdf.dim() == 0 {
                return Subspace::full(monos.len());
            }
            let rows = tdf
                .basis_vectors()
                .iter()
                .map(|v| v.iter().zip(&monos).map(|(c, m)| c * &m.factorial()).collect())
                .collect();
            kernel(&Matrix::from_rows(monos.len(), rows))
        })
        .collect()
}

/// `σ` with `σ ∘ G = 1`, homogeneous of degree `deg G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaWitness {
    pub sigma: Polynomial,
    pub target: Polynomial,
}

impl SigmaWitness {
    /// Takes the leading monomial `y^b` (degree-lex) of `G_top` with coefficient
    /// `c` and sets `σ = x^b / (b! c)`.
    pub fn for_polynomial(g: &Polynomial) -> Result<Self> {
        let (m, c) = g.terms().next_back().ok_or(Error::ZeroPolynomial)?;
        let sigma = Polynomial::monomial(g.nvars(), m.clone(), (&m.factorial() * c).recip());
        Ok(SigmaWitness { sigma, target: g.clone() })
    }

    pub fn verify(&self) -> bool {
        contract(&self.sigma, &self.target)
            .map(|p| p == Polynomial::constant(p.nvars(), Rational::ONE))
            .unwrap_or(false)
            && self.sigma.order().ok() == self.target.degree()
    }
}

/// Output of the splitting constructions.
#[derive(Clone, Debug)]
pub struct SplitIdeal {
    /// `F = G + H` (or `G + sum y_j^2`).
    pub f: Polynomial,
    pub generators: Vec<Polynomial>,
    pub sigmas: Vec<SigmaWitness>,
    pub assembled: TruncatedIdeal,
    pub certificate: Certificate,
}

/// Generators of `Ann` of a polynomial in the given subset of variables,
/// computed in the subring and mapped back.
fn sub_annihilator(p: &Polynomial, vars: &[usize]) -> Result<Vec<Polynomial>> {
    let n = p.nvars();
    let mut to_sub = vec![None; n];
    for (k, &v) in vars.iter().enumerate() {
        to_sub[v] = Some(k);
    }
    let local = p.remap(vars.len(), &to_sub)?;
    let back: Vec<Option<usize>> = vars.iter().map(|&v| Some(v)).collect();
    annihilator(&local)?.minimal_generators().iter().map(|g| g.remap(n, &back)).collect()
}

fn certify(f: &Polynomial, generators: &[Polynomial]) -> Result<(TruncatedIdeal, Certificate)> {
    let ann = annihilator(f)?;
    let assembled = TruncatedIdeal::generated_by(f.nvars(), ann.truncation_degree(), generators);
    let gens_ok = generators.iter().all(|g| contract(g, f).map(|r| r.is_zero()).unwrap_or(false));
    let cert = Certificate::compare(&assembled, &ann.truncated(), gens_ok);
    Ok((assembled, cert))
}

/// `Ann(G + H) = Ann(G)S + Ann(H)S + (σ_G - σ_H, x_i x_j)` for `G`, `H` in
/// disjoint variables; `G`'s variables are its support, `H` gets the rest.
pub fn split_annihilator(g: &Polynomial, h: &Polynomial) -> Result<SplitIdeal> {
    if g.nvars() != h.nvars() {
        return Err(Error::VariableCountMismatch { left: g.nvars(), right: h.nvars() });
    }
    let n = g.nvars();
    if g.degree().unwrap_or(0) < 1 || h.degree().unwrap_or(0) < 1 {
        return Err(Error::Precondition {
            statement: "the splitting lemma",
            detail: "deg G >= 1 and deg H >= 1 required".into(),
        });
    }
    let g_vars = g.support_vars();
    let h_vars: Vec<usize> = (0..n).filter(|i| !g_vars.contains(i)).collect();
    if h.support_vars().iter().any(|v| g_vars.contains(v)) {
        return Err(Error::NonDisjoint);
    }
    let sg = SigmaWitness::for_polynomial(g)?;
    let sh = SigmaWitness::for_polynomial(h)?;
    let mut generators = sub_annihilator(g, &g_vars)?;
    generators.extend(sub_annihilator(h, &h_vars)?);
    generators.push(&sg.sigma - &sh.sigma);
    for &i in &g_vars {
        for &j in &h_vars {
            let mut e = vec![0; n];
            e[i] += 1;
            e[j] += 1;
            generators.push(Polynomial::monomial(n, Monomial::new(e), Rational::ONE));
        }
    }
    let f = g + h;
    let (assembled, certificate) = certify(&f, &generators)?;
    Ok(SplitIdeal { f, generators, sigmas: vec![sg, sh], assembled, certificate })
}

/// `Ann(G + sum_{j>m} y_j^2) = Ann(G)S + (x_j^2 - 2σ, x_i x_j)` for `G`
/// non-degenerate in its `m` variables.
pub fn split_quadrics(g: &Polynomial, n: usize) -> Result<SplitIdeal> {
    let m = g.nvars();
    if n < m {
        return Err(Error::Precondition { statement: "quadric splitting", detail: format!("n = {n} < m = {m}") });
    }
    if g.degree().unwrap_or(0) < 2 {
        return Err(Error::Precondition { statement: "quadric splitting", detail: "deg G >= 2 required".into() });
    }
    let h1 = hilbert_function(g)?.get(1).copied().unwrap_or(0);
    if h1 != m {
        return Err(Error::Degenerate { h1, nvars: m });
    }
    let sg = SigmaWitness::for_polynomial(g)?;
    let sigma = sg.sigma.extend_vars(n);
    let back: Vec<Option<usize>> = (0..m).map(Some).collect();
    let mut generators: Vec<Polynomial> =
        annihilator(g)?.minimal_generators().iter().map(|p| p.remap(n, &back)).collect::<Result<_>>()?;
    for j in m..n {
        let xj2 = Polynomial::monomial(
            n,
            Monomial::new({
                let mut e = vec![0; n];
                e[j] = 2;
                e
            }),
            Rational::ONE,
        );
        generators.push(&xj2 - &sigma.scale(&Rational::from_int(2)));
        for i in 0..j {
            generators.push(&Polynomial::var(n, i) * &Polynomial::var(n, j));
        }
    }
    let mut f = g.extend_vars(n);
    for j in m..n {
        f = &f + &(&Polynomial::var(n, j) * &Polynomial::var(n, j));
    }
    let (assembled, certificate) = certify(&f, &generators)?;
    Ok(SplitIdeal { f, generators, sigmas: vec![sg], assembled, certificate })
}

/// `f_h = sum_{a=0}^{s-h} H_{Q(a)}(1)` for `h = 2..=s`.
pub fn f_invariants(f: &Polynomial) -> Result<Vec<usize>> {
    let a = artin::algebra_from_inverse_system(f)?;
    Ok(artin::symmetric_decomposition(&a)?.f)
}

/// Reads the degree-q block coordinates back as a polynomial.
pub fn block_polynomial(nvars: usize, q: u32, v: &[Rational]) -> Polynomial {
    let monos = crate::poly::monomials_of_degree(nvars, q);
    Polynomial::from_terms(nvars, monos.into_iter().zip(v.iter().cloned()))
}

/// Dense vector of the given polynomial in the given coordinates (exposed for tests).
pub fn coordinates(p: &Polynomial, basis: &MonomialBasis) -> Vec<Rational> {
    to_coords(p, basis)
}

/// Sparse helper used by the algebra construction.
pub(crate) fn sparse_coords(p: &Polynomial, basis: &MonomialBasis) -> crate::exact::SparseVec {
    to_sparse(&to_coords(p, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn p(s: &str, n: usize) -> Polynomial {
        parse(s, n).unwrap()
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(contract(&p("x1^2", 1), &p("y1^3", 1)).unwrap(), p("6*y1", 1));
        assert!(contract(&p("x1*x2", 2), &p("y1^2 + y2^2", 2)).unwrap().is_zero());
        assert!(contract(&p("x1^3 - 3*x2^2", 2), &p("y1^3 + y2^2", 2)).unwrap().is_zero());
        assert!(matches!(contract(&p("x1", 1), &p("y1", 2)), Err(Error::VariableCountMismatch { .. })));
    }

    #[test]
    fn derivative_module_examples() {
        let m = derivative_module(&p("y1^3 + y2^2", 2)).unwrap();
        assert_eq!(m.dim(), 5);
        for g in ["y1^3 + y2^2", "y1^2", "y2", "y1", "1"] {
            assert!(m.module().contains(&coordinates(&p(g, 2), m.coords())), "{g}");
        }
        assert_eq!(derivative_module(&p("y1^5", 1)).unwrap().hilbert(), vec![1; 6]);
        assert_eq!(derivative_module(&p("y1^2 + y2^2", 2)).unwrap().hilbert(), vec![1, 2, 1]);
        assert_eq!(derivative_module(&Polynomial::zero(2)).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn annihilator_examples() {
        let a = annihilator(&p("y1^4", 1)).unwrap();
        assert_eq!(a.minimal_generators(), &[p("x1^5", 1)]);
        let b = annihilator(&p("y1^2 + y2^2", 2)).unwrap();
        assert_eq!(b.minimal_generators(), &[p("x1^2 - x2^2", 2), p("x1*x2", 2)]);
        let c = annihilator(&p("y1^3 + y2^2", 2)).unwrap();
        assert_eq!(c.minimal_generators(), &[p("x1*x2", 2), p("x1^3 - 3*x2^2", 2)]);
        for g in c.minimal_generators() {
            assert!(contract(g, &p("y1^3 + y2^2", 2)).unwrap().is_zero());
        }
    }

    #[test]
    fn levels_are_nested() {
        let a = annihilator(&p("y1^3 + y1*y2^2 + y3^2", 3)).unwrap();
        for q in 0..a.truncation_degree() {
            assert!(a.level(q + 1).contains_subspace(a.level(q)));
        }
        // S_+^(s+1) lies in the ideal.
        let top = a.level(a.truncation_degree());
        for i in a.coords().block(a.truncation_degree()) {
            let mut v = vec![Rational::ZERO; a.coords().len()];
            v[i] = Rational::ONE;
            assert!(top.contains(&v));
        }
    }

    #[test]
    fn perp_examples() {
        let j = perp(2, &[p("x1^2", 2), p("x2", 2)], 3).unwrap();
        let basis = j.level(3);
        assert_eq!(basis.dim(), 2);
        assert!(basis.contains(&coordinates(&p("1", 2), &j.coords)));
        assert!(basis.contains(&coordinates(&p("y1", 2), &j.coords)));

        let j = perp(2, &[p("x1*x2", 2), p("x1^2 - x2^2", 2)], 2).unwrap();
        let expect = Subspace::from_vectors(
            j.coords.len(),
            ["1", "y1", "y2", "y1^2 + y2^2"].iter().map(|s| coordinates(&p(s, 2), &j.coords)).collect(),
        );
        assert_eq!(j.level(2), &expect);
    }

    #[test]
    fn perp_round_trip() {
        let f = p("y1^3 + y2^2", 2);
        let ann = annihilator(&f).unwrap();
        let sys = derivative_module(&f).unwrap();
        let j = perp(2, ann.minimal_generators(), 3).unwrap();
        for q in 0..=3 {
            assert_eq!(j.level(q), &sys.filtered(q), "degree {q}");
        }
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_function(&p("y1^3 + y2^2 + y3^2", 3)).unwrap(), vec![1, 3, 1, 1]);
        assert_eq!(hilbert_function(&p("y1^4 + y2^2", 2)).unwrap(), vec![1, 2, 1, 1, 1]);
        assert_eq!(hilbert_function(&p("y1^3 + y2^3", 2)).unwrap(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn degrees_and_stretched() {
        let f = p("y1^4 + y2^2", 2);
        assert_eq!(socle_degree(&f).unwrap(), 4);
        assert_eq!(capital_degree(&f).unwrap(), 1);
        assert!(is_stretched(&f).unwrap());
        let g = p("y1^3 + y2^3", 2);
        assert_eq!(capital_degree(&g).unwrap(), 2);
        assert!(!is_stretched(&g).unwrap());
        let h = p("y1^2", 1);
        // H = (1, 1, 1) never exceeds 1, so the capital degree is 0.
        assert_eq!((socle_degree(&h).unwrap(), capital_degree(&h).unwrap()), (2, 0));
        assert!(is_stretched(&h).unwrap());
    }

    #[test]
    fn nondegeneracy() {
        assert!(is_nondegenerate(&p("y1^3 + y2^2", 2)).unwrap());
        assert!(!is_nondegenerate(&p("y1^3", 2)).unwrap());
        assert!(is_nondegenerate(&p("y1^2 + y1*y2", 2)).unwrap());
    }

    #[test]
    fn ldf_examples() {
        let a = annihilator(&p("y1^3 + y2^2", 2)).unwrap();
        let ldf = a.ldf_ideal();
        let deg2 = Subspace::from_vectors(
            3,
            vec![
                coordinates(&p("x1*x2", 2), &MonomialBasis::new(2, [2])),
                coordinates(&p("x2^2", 2), &MonomialBasis::new(2, [2])),
            ],
        );
        assert_eq!(ldf[2], deg2);
        // Degree 3: everything except x1^3.
        assert_eq!(ldf[3].dim(), 3);
        assert!(!ldf[3].contains(&coordinates(&p("x1^3", 2), &MonomialBasis::new(2, [3]))));
        assert_eq!(a.graded_quotient_hilbert(), vec![1, 2, 1, 1]);

        // Homogeneous F: ldf(Ann F) has the same per-degree dimensions as Ann(F).
        let b = annihilator(&p("y1^3 + y2^3", 2)).unwrap();
        let ldf = b.ldf_ideal();
        for q in 0..=b.truncation_degree() {
            let graded = b.level(q).dim() - if q == 0 { 0 } else { b.level(q - 1).dim() };
            assert_eq!(ldf[q as usize].dim(), graded);
        }
    }

    #[test]
    fn split_examples() {
        let r = split_annihilator(&p("y1^3", 2), &p("y2^2", 2)).unwrap();
        assert_eq!(r.sigmas[0].sigma, p("1/6*x1^3", 2));
        assert_eq!(r.sigmas[1].sigma, p("1/2*x2^2", 2));
        assert!(r.certificate.holds());
        assert!(split_annihilator(&p("y1^2", 2), &p("y2^2", 2)).unwrap().certificate.holds());
        assert!(split_annihilator(&p("y1^3 + y1^2", 2), &p("y2^2", 2)).unwrap().certificate.holds());
        assert_eq!(split_annihilator(&p("y1^3 + y2", 2), &p("y2^2", 2)).unwrap_err(), Error::NonDisjoint);
    }

    #[test]
    fn quadric_split_examples() {
        let r = split_quadrics(&p("y1^3", 1), 2).unwrap();
        assert!(r.generators.contains(&p("x2^2 - 1/3*x1^3", 2)));
        assert!(r.generators.contains(&p("x1*x2", 2)));
        assert!(r.certificate.holds());
        let r = split_quadrics(&p("y1^2 + y2^2", 2), 2).unwrap();
        assert_eq!(r.generators, annihilator(&p("y1^2 + y2^2", 2)).unwrap().minimal_generators());
        assert!(split_quadrics(&p("y1^3 + y2^3", 2), 4).unwrap().certificate.holds());
        assert!(matches!(split_quadrics(&p("y1^3", 2), 3), Err(Error::Degenerate { .. })));
        assert!(matches!(split_quadrics(&p("y1^3 + y2^3", 2), 1), Err(Error::Precondition { .. })));
    }

    #[test]
    fn f_invariant_examples() {
        assert_eq!(f_invariants(&p("y1^4 + y2^2", 2)).unwrap(), vec![2, 1, 1]);
        assert_eq!(f_invariants(&p("y1^5", 1)).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(f_invariants(&p("y1^3 + y2^3 + y3^2", 3)).unwrap()[..2], [3, 2]);
    }

    #[test]
    fn sigma_witness() {
        let w = SigmaWitness::for_polynomial(&p("2*y1^2*y2 + y2^3 + y1^2", 2)).unwrap();
        assert!(w.verify());
        assert_eq!(w.sigma, p("1/4*x1^2*x2", 2));
    }

    #[test]
    fn normalization_check() {
        assert!(check_normalized(&p("y1^3 + y2^2", 2)).is_ok());
        assert!(check_normalized(&p("y1", 1)).is_ok());
        assert!(matches!(check_normalized(&p("y1^3 + y2", 2)), Err(Error::NotNormalized(_))));
    }
}
