//! Exact linear programming.
//!
//! A dense two-phase tableau simplex over [`Rational`] with Bland's rule, so
//! it always terminates. Variables are free; internally each is split into a
//! difference of two nonnegative variables.

use num_traits::{One, Signed, Zero};

use crate::rational::{QVector, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    /// `⟨normal, x⟩ ≥ offset`
    Ge,
    /// `⟨normal, x⟩ ≤ offset`
    Le,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub normal: QVector,
    pub offset: Rational,
    pub sense: Sense,
}

impl Constraint {
    pub fn ge(normal: QVector, offset: Rational) -> Self {
        Constraint {
            normal,
            offset,
            sense: Sense::Ge,
        }
    }

    pub fn le(normal: QVector, offset: Rational) -> Self {
        Constraint {
            normal,
            offset,
            sense: Sense::Le,
        }
    }

    /// An equality, as the pair `≥`/`≤`.
    pub fn eq(normal: QVector, offset: Rational) -> [Self; 2] {
        [
            Constraint::ge(normal.clone(), offset.clone()),
            Constraint::le(normal, offset),
        ]
    }

    pub fn is_satisfied(&self, x: &QVector) -> bool {
        let lhs = self.normal.dot(x);
        match self.sense {
            Sense::Ge => lhs >= self.offset,
            Sense::Le => lhs <= self.offset,
        }
    }
}

/// `maximize ⟨objective, x⟩` subject to `constraints`, `x` free.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub objective: QVector,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: QVector },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn optimal(self) -> Option<(Rational, QVector)> {
        match self {
            LpOutcome::Optimal { value, point } => Some((value, point)),
            _ => None,
        }
    }
}

struct Tableau {
    /// Constraint rows; the last column is the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced profits; the last entry is minus the objective value.
    obj: Vec<Rational>,
    basis: Vec<usize>,
}

enum Run {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.obj.len() - 1
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (x, p) in self.obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule: lowest-index improving column, lowest-index leaving variable on ties.
    fn run(&mut self, allowed: usize) -> Run {
        let rhs = self.rhs();
        loop {
            let Some(c) = (0..allowed).find(|&j| self.obj[j].is_positive()) else {
                return Run::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[rhs] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => {
                            ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                        }
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return Run::Unbounded,
            }
        }
    }
}

/// Solves a linear program exactly.
pub fn lp_solve(lp: &LinearProgram) -> LpOutcome {
    let n = lp.objective.dim();
    let m = lp.constraints.len();
    let n_slack = m;
    // Columns: x+ (n), x- (n), slacks (m), artificials (m), rhs.
    let n_struct = 2 * n + n_slack;
    let width = n_struct + m + 1;
    let mut rows = Vec::with_capacity(m);
    for (i, c) in lp.constraints.iter().enumerate() {
        debug_assert_eq!(c.normal.dim(), n, "constraint dimension");
        let mut row = vec![Rational::zero(); width];
        for (j, a) in c.normal.entries().iter().enumerate() {
            row[j] = a.clone();
            row[n + j] = -a;
        }
        row[2 * n + i] = match c.sense {
            Sense::Le => Rational::one(),
            Sense::Ge => -Rational::one(),
        };
        row[width - 1] = c.offset.clone();
        if c.offset.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
        row[n_struct + i] = Rational::one();
        rows.push(row);
    }

    // Phase 1: maximize -(sum of artificials).
    let mut obj = vec![Rational::zero(); width];
    for row in &rows {
        for j in 0..n_struct {
            obj[j] += &row[j];
        }
        obj[width - 1] += &row[width - 1];
    }
    let mut t = Tableau {
        rows,
        obj,
        basis: (n_struct..n_struct + m).collect(),
    };
    t.run(n_struct);
    if !t.obj[width - 1].is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive remaining (zero-valued) artificials out of the basis.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n_struct {
            match (0..n_struct).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => {
                    t.pivot(i, j);
                    i += 1;
                }
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }

    // Phase 2.
    let cost = |j: usize| -> Rational {
        if j < n {
            lp.objective[j].clone()
        } else if j < 2 * n {
            -&lp.objective[j - n]
        } else {
            Rational::zero()
        }
    };
    let mut obj = vec![Rational::zero(); width];
    for (j, o) in obj.iter_mut().enumerate().take(n_struct) {
        *o = cost(j);
    }
    for (row, &b) in t.rows.iter().zip(&t.basis) {
        let cb = cost(b);
        if !cb.is_zero() {
            for j in 0..n_struct {
                obj[j] -= &cb * &row[j];
            }
            obj[width - 1] -= &cb * &row[width - 1];
        }
    }
    t.obj = obj;
    if let Run::Unbounded = t.run(n_struct) {
        return LpOutcome::Unbounded;
    }

    let mut y = vec![Rational::zero(); 2 * n];
    for (row, &b) in t.rows.iter().zip(&t.basis) {
        if b < 2 * n {
            y[b] = row[width - 1].clone();
        }
    }
    let point = QVector::new((0..n).map(|j| &y[j] - &y[n + j]).collect());
    let value = lp.objective.dot(&point);
    LpOutcome::Optimal { value, point }
}

/// A half-space for [`lp_strict_interior`].
#[derive(Clone, Debug, PartialEq)]
pub struct HalfSpace {
    pub constraint: Constraint,
    pub strict: bool,
}

impl HalfSpace {
    pub fn closed(constraint: Constraint) -> Self {
        HalfSpace {
            constraint,
            strict: false,
        }
    }

    pub fn open(constraint: Constraint) -> Self {
        HalfSpace {
            constraint,
            strict: true,
        }
    }

    pub fn is_satisfied(&self, x: &QVector) -> bool {
        let c = &self.constraint;
        let lhs = c.normal.dot(x);
        match (c.sense, self.strict) {
            (Sense::Ge, false) => lhs >= c.offset,
            (Sense::Ge, true) => lhs > c.offset,
            (Sense::Le, false) => lhs <= c.offset,
            (Sense::Le, true) => lhs < c.offset,
        }
    }
}

/// Finds a point satisfying all half-spaces, strict ones strictly.
///
/// Each strict `⟨a,x⟩ > b` becomes `⟨a,x⟩ ≥ b + s` and `s ≤ 1` is maximized;
/// the region is empty iff the optimal slack is not positive.
pub fn lp_strict_interior(dim: usize, halfspaces: &[HalfSpace]) -> Option<QVector> {
    let lift = |v: &QVector, last: Rational| {
        let mut e = v.entries().to_vec();
        e.push(last);
        QVector::new(e)
    };
    let any_strict = halfspaces.iter().any(|h| h.strict);
    let mut constraints = Vec::with_capacity(halfspaces.len() + 1);
    for h in halfspaces {
        let c = &h.constraint;
        debug_assert_eq!(c.normal.dim(), dim);
        let coeff = match (h.strict, c.sense) {
            (false, _) => Rational::zero(),
            (true, Sense::Ge) => -Rational::one(),
            (true, Sense::Le) => Rational::one(),
        };
        constraints.push(Constraint {
            normal: lift(&c.normal, coeff),
            offset: c.offset.clone(),
            sense: c.sense,
        });
    }
    let mut slack_axis = vec![Rational::zero(); dim + 1];
    slack_axis[dim] = Rational::one();
    let slack_axis = QVector::new(slack_axis);
    let cap = if any_strict { Rational::one() } else { Rational::zero() };
    constraints.push(Constraint::le(slack_axis.clone(), cap));
    let lp = LinearProgram {
        objective: slack_axis,
        constraints,
    };
    match lp_solve(&lp) {
        LpOutcome::Optimal { value, point } => {
            if any_strict && !value.is_positive() {
                return None;
            }
            let mut e = point.into_entries();
            e.pop();
            Some(QVector::new(e))
        }
        _ => None,
    }
}
