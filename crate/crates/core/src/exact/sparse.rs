use super::Rational;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::ZERO; len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a - f * b`, merging sorted supports.
pub fn sub_scaled(a: &SparseVec, f: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ia = a.get(i).map_or(usize::MAX, |t| t.0);
        let ib = b.get(j).map_or(usize::MAX, |t| t.0);
        if ia < ib {
            out.push(a[i].clone());
            i += 1;
        } else if ib < ia {
            out.push((ib, -(f * &b[j].1)));
            j += 1;
        } else {
            let x = a[i].1.sub_mul(f, &b[j].1);
            if !x.is_zero() {
                out.push((ia, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(v: &mut SparseVec, f: &Rational) {
    for (_, x) in v.iter_mut() {
        *x *= f;
    }
}

/// Incremental semi-echelon basis over sparse vectors.
///
/// Every stored row has a distinct leading index with coefficient 1. When
/// tracking is enabled each row also records its expression in terms of the
/// vectors passed to [`Echelon::insert`], so dependent insertions yield
/// linear relations among the inputs.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    rows: Vec<SparseVec>,
    combos: Vec<SparseVec>,
    pivot_row: Vec<Option<u32>>,
    tracking: bool,
    inserted: usize,
}

/// Outcome of inserting a vector.
#[derive(Clone, Debug)]
pub enum Insertion {
    /// The vector was independent and became a new row.
    Independent,
    /// The vector was dependent. With tracking enabled this carries the
    /// relation `sum c_i * input_i = 0` (including the new input with coefficient 1).
    Dependent(Option<SparseVec>),
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon {
            ambient,
            rows: Vec::new(),
            combos: Vec::new(),
            pivot_row: vec![None; ambient],
            tracking: false,
            inserted: 0,
        }
    }

    pub fn with_tracking(ambient: usize) -> Self {
        Echelon { tracking: true, ..Self::new(ambient) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    fn leading_reduce(&self, mut v: SparseVec, mut combo: Option<SparseVec>) -> (SparseVec, Option<SparseVec>) {
        while let Some((lead, f)) = v.first().cloned() {
            let Some(r) = self.pivot_row[lead] else { break };
            let r = r as usize;
            v = sub_scaled(&v, &f, &self.rows[r]);
            if let Some(c) = combo.as_mut() {
                *c = sub_scaled(c, &f, &self.combos[r]);
            }
        }
        (v, combo)
    }

    /// Reduces `v` until its leading index is not a pivot; zero iff `v` is in the span.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.leading_reduce(v, None).0
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn insert(&mut self, v: SparseVec) -> Insertion {
        debug_assert!(v.iter().all(|(i, _)| *i < self.ambient));
        let idx = self.inserted;
        self.inserted += 1;
        let combo = self.tracking.then(|| vec![(idx, Rational::ONE)]);
        let (mut v, combo) = self.leading_reduce(v, combo);
        if v.is_empty() {
            return Insertion::Dependent(combo);
        }
        let inv = v[0].1.recip();
        scale(&mut v, &inv);
        self.pivot_row[v[0].0] = Some(self.rows.len() as u32);
        self.rows.push(v);
        if let Some(mut c) = combo {
            scale(&mut c, &inv);
            self.combos.push(c);
        }
        Insertion::Independent
    }

    /// Expresses `v` as a combination of the inserted vectors (tracking only).
    pub fn express(&self, v: SparseVec) -> Option<SparseVec> {
        assert!(self.tracking, "express requires tracking");
        let mut acc: SparseVec = Vec::new();
        let mut v = v;
        while let Some((lead, f)) = v.first().cloned() {
            let r = self.pivot_row[lead]? as usize;
            v = sub_scaled(&v, &f, &self.rows[r]);
            acc = sub_scaled(&acc, &(-&f), &self.combos[r]);
        }
        Some(acc)
    }
}
