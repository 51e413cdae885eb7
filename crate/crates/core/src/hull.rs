//! Exact convex-hull membership by phase-1 simplex.
//!
//! Decides whether `target = Σ λᵢ pointsᵢ` has a solution with `λ ≥ 0` and
//! `Σ λᵢ = 1`. The tableau is dense and exact; Bland's rule (lowest index
//! enters, ties in the ratio test go to the lowest basic index) rules out
//! cycling on the heavily degenerate instances produced by coincident images.

use crate::scalar::Scalar;

/// Convex weights expressing `target` over `points`, or `None` if it lies
/// outside their hull. Every point must have the dimension of `target`.
pub fn convex_weights<T: Scalar>(points: &[Vec<T>], target: &[T]) -> Option<Vec<T>> {
    if points.is_empty() {
        return None;
    }
    let dim = target.len();
    assert!(
        points.iter().all(|p| p.len() == dim),
        "points and target must share a dimension"
    );

    let mut rows: Vec<(Vec<T>, T)> = Vec::with_capacity(dim + 1);
    for c in 0..dim {
        let coeffs: Vec<T> = points.iter().map(|p| p[c].clone()).collect();
        let all_zero = coeffs.iter().all(|v| v.is_zero());
        match (all_zero, target[c].is_zero()) {
            (true, true) => continue,
            (true, false) => return None,
            _ => rows.push(normalized_row(coeffs, target[c].clone())),
        }
    }
    rows.push((vec![T::one(); points.len()], T::one()));

    Tableau::new(points.len(), rows).solve_feasibility()
}

pub fn in_hull<T: Scalar>(points: &[Vec<T>], target: &[T]) -> bool {
    convex_weights(points, target).is_some()
}

fn normalized_row<T: Scalar>(coeffs: Vec<T>, rhs: T) -> (Vec<T>, T) {
    if rhs.is_negative() {
        (coeffs.into_iter().map(|v| -v).collect(), -rhs)
    } else {
        (coeffs, rhs)
    }
}

struct Tableau<T> {
    structural: usize,
    /// rows × (structural + artificial + 1); the last column is the rhs
    cells: Vec<Vec<T>>,
    /// reduced costs of the phase-1 objective, same layout
    cost: Vec<T>,
    basis: Vec<usize>,
}

impl<T: Scalar> Tableau<T> {
    fn new(structural: usize, rows: Vec<(Vec<T>, T)>) -> Self {
        let m = rows.len();
        let width = structural + m + 1;
        let mut cells = Vec::with_capacity(m);
        let mut cost = vec![T::zero(); width];
        for (i, (coeffs, rhs)) in rows.into_iter().enumerate() {
            let mut row = coeffs;
            row.resize(structural + m, T::zero());
            row[structural + i] = T::one();
            row.push(rhs);
            for j in 0..structural {
                cost[j] = cost[j].clone() - row[j].clone();
            }
            cost[width - 1] = cost[width - 1].clone() - row[width - 1].clone();
            cells.push(row);
        }
        Self {
            structural,
            cells,
            cost,
            basis: (structural..structural + m).collect(),
        }
    }

    fn width(&self) -> usize {
        self.cost.len()
    }

    fn solve_feasibility(mut self) -> Option<Vec<T>> {
        let rhs = self.width() - 1;
        while let Some(col) = (0..rhs).find(|&j| self.cost[j].is_negative()) {
            let row = self.leaving_row(col)?;
            self.pivot(row, col);
        }
        if !self.cost[rhs].is_zero() {
            return None;
        }
        let mut weights = vec![T::zero(); self.structural];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.structural {
                weights[b] = self.cells[i][rhs].clone();
            }
        }
        Some(weights)
    }

    fn leaving_row(&self, col: usize) -> Option<usize> {
        let rhs = self.width() - 1;
        let mut best: Option<(usize, T)> = None;
        for (i, row) in self.cells.iter().enumerate() {
            if !row[col].is_positive() {
                continue;
            }
            let ratio = row[rhs].clone() / row[col].clone();
            let better = match &best {
                None => true,
                Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        // phase 1 is bounded below by zero, so an entering column always has a pivot
        best.map(|(i, _)| i)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.cells[row][col].clone();
        for v in self.cells[row].iter_mut() {
            *v = v.clone() / p.clone();
        }
        let pivot_row = self.cells[row].clone();
        for (i, r) in self.cells.iter_mut().enumerate() {
            if i != row {
                eliminate(r, &pivot_row, col);
            }
        }
        eliminate(&mut self.cost, &pivot_row, col);
        self.basis[row] = col;
    }
}

fn eliminate<T: Scalar>(target: &mut [T], pivot_row: &[T], col: usize) {
    let factor = target[col].clone();
    if factor.is_zero() {
        return;
    }
    for (t, p) in target.iter_mut().zip(pivot_row) {
        if !p.is_zero() {
            *t = t.clone() - factor.clone() * p.clone();
        }
    }
}
