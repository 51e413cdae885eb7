//! Conditional distributions `P(Y|X)` and the product-of-columns section of `Γ`.

use std::collections::BTreeMap;
use std::fmt;

use crate::distribution::FunctionDistribution;
use crate::error::{Error, Result};
use crate::function::FiniteFunction;
use crate::scalar::{sum, Scalar};

/// Column-stochastic matrix, `entries[y][x] = P(y|x)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StochasticMap<T> {
    input: usize,
    output: usize,
    entries: Vec<Vec<T>>,
}

impl<T: Scalar> StochasticMap<T> {
    pub fn new(input: usize, output: usize, entries: Vec<Vec<T>>) -> Result<Self> {
        if input == 0 || output == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if entries.len() != output || entries.iter().any(|row| row.len() != input) {
            return Err(Error::size(format!(
                "stochastic map must have {output} rows of {input} entries"
            )));
        }
        if let Some(w) = entries.iter().flatten().find(|w| w.is_negative()) {
            return Err(Error::NegativeWeight(w.to_string()));
        }
        for x in 0..input {
            let total: T = sum(entries.iter().map(|row| &row[x]));
            if !total.is_one() {
                return Err(Error::NonNormalized(total.to_string()));
            }
        }
        Ok(Self {
            input,
            output,
            entries,
        })
    }

    /// Builds from columns, `columns[x][y] = P(y|x)`.
    pub fn from_columns(columns: Vec<Vec<T>>) -> Result<Self> {
        let input = columns.len();
        let output = columns.first().map_or(0, Vec::len);
        let entries = (0..output)
            .map(|y| {
                columns
                    .iter()
                    .map(|col| col.get(y).cloned().unwrap_or_else(T::zero))
                    .collect()
            })
            .collect();
        if columns.iter().any(|c| c.len() != output) {
            return Err(Error::size("columns of unequal length"));
        }
        Self::new(input, output, entries)
    }

    pub(crate) fn from_validated(input: usize, output: usize, entries: Vec<Vec<T>>) -> Self {
        Self {
            input,
            output,
            entries,
        }
    }

    pub fn identity(size: usize) -> Self {
        let entries = (0..size)
            .map(|y| {
                (0..size)
                    .map(|x| if x == y { T::one() } else { T::zero() })
                    .collect()
            })
            .collect();
        Self::from_validated(size, size, entries)
    }

    pub fn input_size(&self) -> usize {
        self.input
    }

    pub fn output_size(&self) -> usize {
        self.output
    }

    /// `P(y|x)`.
    pub fn get(&self, y: usize, x: usize) -> &T {
        &self.entries[y][x]
    }

    pub fn column(&self, x: usize) -> Vec<T> {
        self.entries.iter().map(|row| row[x].clone()).collect()
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.entries
    }

    /// Matrix product `self · inner`, i.e. run `inner` first.
    pub fn after(&self, inner: &StochasticMap<T>) -> Result<StochasticMap<T>> {
        if inner.output != self.input {
            return Err(Error::size("stochastic maps do not chain"));
        }
        let entries = (0..self.output)
            .map(|z| {
                (0..inner.input)
                    .map(|x| {
                        (0..self.input).fold(T::zero(), |acc, y| {
                            acc + self.entries[z][y].clone() * inner.entries[y][x].clone()
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(Self::from_validated(inner.input, self.output, entries))
    }

    /// The product distribution `P(f) = Π_x S(f(x)|x)`, a preimage under `Γ`.
    pub fn canonical_preimage(&self) -> FunctionDistribution<T> {
        let mut partial: Vec<(Vec<usize>, T)> = vec![(Vec::new(), T::one())];
        for x in 0..self.input {
            let mut extended = Vec::new();
            for (table, w) in &partial {
                for y in 0..self.output {
                    let p = &self.entries[y][x];
                    if p.is_zero() {
                        continue;
                    }
                    let mut t = table.clone();
                    t.push(y);
                    extended.push((t, w.clone() * p.clone()));
                }
            }
            partial = extended;
        }
        let weights: BTreeMap<_, _> = partial
            .into_iter()
            .map(|(table, w)| {
                (
                    FiniteFunction::new(self.output, table).expect("table within codomain"),
                    w,
                )
            })
            .collect();
        FunctionDistribution::from_normalized(self.input, self.output, weights)
    }
}

pub fn canonical_preimage<T: Scalar>(s: &StochasticMap<T>) -> FunctionDistribution<T> {
    s.canonical_preimage()
}

impl<T: Scalar> fmt::Debug for StochasticMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (y, row) in self.entries.iter().enumerate() {
            if y > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        f.write_str("]")
    }
}
