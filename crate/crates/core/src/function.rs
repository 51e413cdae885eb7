//! Total functions between finite index sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A total function `{0..domain} -> {0..codomain}` stored as its output table.
///
/// Ordering is lexicographic on `(domain, codomain, table)`, which is the
/// canonical order used for distribution supports and comb enumeration.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteFunction {
    domain: usize,
    codomain: usize,
    table: Vec<usize>,
}

impl FiniteFunction {
    /// Builds a function from its output table; `table[x] = f(x)`.
    pub fn new(codomain: usize, table: Vec<usize>) -> Result<Self> {
        if codomain == 0 || table.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if let Some((position, &value)) = table.iter().enumerate().find(|(_, &y)| y >= codomain) {
            return Err(Error::TableOutOfRange {
                position,
                value,
                codomain,
            });
        }
        Ok(Self {
            domain: table.len(),
            codomain,
            table,
        })
    }

    pub fn identity(size: usize) -> Self {
        assert!(size > 0, "identity on an empty alphabet");
        Self {
            domain: size,
            codomain: size,
            table: (0..size).collect(),
        }
    }

    /// The "reset to `value`" function.
    pub fn constant(domain: usize, codomain: usize, value: usize) -> Result<Self> {
        if domain == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Self::new(codomain, vec![value; domain])
    }

    pub fn domain_size(&self) -> usize {
        self.domain
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// Image, ascending.
    pub fn image(&self) -> Vec<usize> {
        self.table
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn image_size(&self) -> usize {
        let mut seen = vec![false; self.codomain];
        self.table
            .iter()
            .filter(|&&y| !std::mem::replace(&mut seen[y], true))
            .count()
    }

    pub fn is_constant(&self) -> bool {
        self.table.iter().all(|&y| y == self.table[0])
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    pub fn after(&self, inner: &FiniteFunction) -> Result<FiniteFunction> {
        compose_functions(self, inner)
    }

    /// Every function between the given alphabets, in lexicographic table order.
    pub fn all(domain: usize, codomain: usize) -> AllFunctions {
        AllFunctions {
            codomain,
            next: if domain == 0 || codomain == 0 {
                None
            } else {
                Some(vec![0; domain])
            },
        }
    }

    /// `codomain^domain`, or `None` on overflow.
    pub fn count(domain: usize, codomain: usize) -> Option<u128> {
        (codomain as u128).checked_pow(u32::try_from(domain).ok()?)
    }
}

/// `outer ∘ inner`.
pub fn compose_functions(outer: &FiniteFunction, inner: &FiniteFunction) -> Result<FiniteFunction> {
    if inner.codomain != outer.domain {
        return Err(Error::size(format!(
            "cannot compose: inner codomain {} != outer domain {}",
            inner.codomain, outer.domain
        )));
    }
    Ok(FiniteFunction {
        domain: inner.domain,
        codomain: outer.codomain,
        table: inner.table.iter().map(|&y| outer.table[y]).collect(),
    })
}

pub fn image_size(f: &FiniteFunction) -> usize {
    f.image_size()
}

impl fmt::Debug for FiniteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}{:?}", self.domain, self.codomain, self.table)
    }
}

impl fmt::Display for FiniteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.domain == 2 && self.codomain == 2 {
            if let Some(b) = BitFunction::from_function(self) {
                return write!(f, "{b}");
            }
        }
        write!(f, "{:?}", self.table)
    }
}

/// Odometer over output tables.
#[derive(Debug, Clone)]
pub struct AllFunctions {
    codomain: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for AllFunctions {
    type Item = FiniteFunction;

    fn next(&mut self) -> Option<FiniteFunction> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for slot in succ.iter_mut().rev() {
            *slot += 1;
            if *slot < self.codomain {
                carried = false;
                break;
            }
            *slot = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(FiniteFunction {
            domain: current.len(),
            codomain: self.codomain,
            table: current,
        })
    }
}

/// The four functions from a bit to a bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BitFunction {
    /// `I = [0, 1]`
    Identity,
    /// `F = [1, 0]`
    Flip,
    /// `R₀ = [0, 0]`
    Reset0,
    /// `R₁ = [1, 1]`
    Reset1,
}

impl BitFunction {
    pub const ALL: [BitFunction; 4] = [
        BitFunction::Identity,
        BitFunction::Flip,
        BitFunction::Reset0,
        BitFunction::Reset1,
    ];

    pub fn table(self) -> [usize; 2] {
        match self {
            BitFunction::Identity => [0, 1],
            BitFunction::Flip => [1, 0],
            BitFunction::Reset0 => [0, 0],
            BitFunction::Reset1 => [1, 1],
        }
    }

    pub fn function(self) -> FiniteFunction {
        FiniteFunction {
            domain: 2,
            codomain: 2,
            table: self.table().to_vec(),
        }
    }

    pub fn from_function(f: &FiniteFunction) -> Option<Self> {
        if f.domain != 2 || f.codomain != 2 {
            return None;
        }
        Self::ALL.into_iter().find(|b| b.table() == f.table[..])
    }

    pub fn is_connected(self) -> bool {
        matches!(self, BitFunction::Identity | BitFunction::Flip)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BitFunction::Identity => "I",
            BitFunction::Flip => "F",
            BitFunction::Reset0 => "R0",
            BitFunction::Reset1 => "R1",
        }
    }
}

impl fmt::Display for BitFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl From<BitFunction> for FiniteFunction {
    fn from(b: BitFunction) -> Self {
        b.function()
    }
}
