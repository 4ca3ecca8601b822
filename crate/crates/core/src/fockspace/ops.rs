use num_complex::Complex64;

/// Local ladder operators of the two modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    A,
    ADag,
    B,
    BDag,
}

#[inline]
pub(crate) fn index(n_max: usize, na: usize, nb: usize) -> usize {
    na * (n_max + 1) + nb
}

/// Applies a ladder operator to an amplitude vector on the truncated space
/// `0 ≤ n_A, n_B ≤ n_max`. Raising out of the space drops the component.
pub(crate) fn apply_ladder(op: Ladder, amps: &[Complex64], n_max: usize) -> Vec<Complex64> {
    let side = n_max + 1;
    let mut out = vec![Complex64::new(0.0, 0.0); amps.len()];
    for na in 0..side {
        for nb in 0..side {
            let c = amps[index(n_max, na, nb)];
            if c.re == 0.0 && c.im == 0.0 {
                continue;
            }
            match op {
                Ladder::A if na > 0 => out[index(n_max, na - 1, nb)] += c * (na as f64).sqrt(),
                Ladder::ADag if na < n_max => out[index(n_max, na + 1, nb)] += c * ((na + 1) as f64).sqrt(),
                Ladder::B if nb > 0 => out[index(n_max, na, nb - 1)] += c * (nb as f64).sqrt(),
                Ladder::BDag if nb < n_max => out[index(n_max, na, nb + 1)] += c * ((nb + 1) as f64).sqrt(),
                _ => {}
            }
        }
    }
    out
}

/// Pair creation `a†b†` or pair annihilation `ab`, applied in one pass.
pub(crate) fn apply_pair(raise: bool, amps: &[Complex64], n_max: usize) -> Vec<Complex64> {
    let side = n_max + 1;
    let mut out = vec![Complex64::new(0.0, 0.0); amps.len()];
    for na in 0..side {
        for nb in 0..side {
            let c = amps[index(n_max, na, nb)];
            if c.re == 0.0 && c.im == 0.0 {
                continue;
            }
            if raise {
                if na < n_max && nb < n_max {
                    out[index(n_max, na + 1, nb + 1)] += c * (((na + 1) * (nb + 1)) as f64).sqrt();
                }
            } else if na > 0 && nb > 0 {
                out[index(n_max, na - 1, nb - 1)] += c * ((na * nb) as f64).sqrt();
            }
        }
    }
    out
}

/// Real sparse matrix in row-compressed form.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseOp {
    dim: usize,
    rows: Vec<Vec<(usize, f64)>>,
}

impl SparseOp {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            rows: (0..dim).map(|i| vec![(i, 1.0)]).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix element `⟨row| op |col⟩`.
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.rows[row].iter().filter(|e| e.0 == col).map(|e| e.1).sum()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&(c, v)| x[c] * v).sum())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.dim];
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                rows[c].push((r, v));
            }
        }
        Self { dim: self.dim, rows }
    }

    /// Matrix product `self · rhs`.
    pub fn compose(&self, rhs: &SparseOp) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: std::collections::BTreeMap<usize, f64> = Default::default();
                for &(mid, a) in row {
                    for &(col, b) in &rhs.rows[mid] {
                        *acc.entry(col).or_default() += a * b;
                    }
                }
                acc.into_iter().filter(|e| e.1 != 0.0).collect()
            })
            .collect();
        Self { dim: self.dim, rows }
    }

    pub fn scaled_sum(&self, alpha: f64, other: &SparseOp, beta: f64) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(x, y)| {
                let mut acc: std::collections::BTreeMap<usize, f64> = Default::default();
                for &(c, v) in x {
                    *acc.entry(c).or_default() += alpha * v;
                }
                for &(c, v) in y {
                    *acc.entry(c).or_default() += beta * v;
                }
                acc.into_iter().filter(|e| e.1 != 0.0).collect()
            })
            .collect();
        Self { dim: self.dim, rows }
    }

    /// Commutator `[self, other]`.
    pub fn commutator(&self, other: &SparseOp) -> Self {
        self.compose(other).scaled_sum(1.0, &other.compose(self), -1.0)
    }
}

/// Matrix representations of the local mode operators on the truncated
/// two-mode space of dimension `(n_max+1)²`.
#[derive(Debug, Clone)]
pub struct ModeOperators {
    pub n_max: usize,
    pub a: SparseOp,
    pub a_dag: SparseOp,
    pub b: SparseOp,
    pub b_dag: SparseOp,
    pub num_a: SparseOp,
    pub num_b: SparseOp,
}

impl ModeOperators {
    pub fn new(n_max: usize) -> Self {
        let a = ladder_matrix(Ladder::A, n_max);
        let a_dag = ladder_matrix(Ladder::ADag, n_max);
        let b = ladder_matrix(Ladder::B, n_max);
        let b_dag = ladder_matrix(Ladder::BDag, n_max);
        let num_a = a_dag.compose(&a);
        let num_b = b_dag.compose(&b);
        Self {
            n_max,
            a,
            a_dag,
            b,
            b_dag,
            num_a,
            num_b,
        }
    }

    pub fn dim(&self) -> usize {
        (self.n_max + 1) * (self.n_max + 1)
    }

    pub fn index(&self, na: usize, nb: usize) -> usize {
        index(self.n_max, na, nb)
    }
}

fn ladder_matrix(op: Ladder, n_max: usize) -> SparseOp {
    let dim = (n_max + 1) * (n_max + 1);
    let mut m = SparseOp::zeros(dim);
    let mut basis = vec![Complex64::new(0.0, 0.0); dim];
    for col in 0..dim {
        basis[col] = Complex64::new(1.0, 0.0);
        for (row, v) in apply_ladder(op, &basis, n_max).into_iter().enumerate() {
            if v.re != 0.0 {
                m.rows[row].push((col, v.re));
            }
        }
        basis[col] = Complex64::new(0.0, 0.0);
    }
    m
}
