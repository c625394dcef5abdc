//! Finite windows `0 <= x <= xmax, 0 <= y <= ymax` of a double sequence.

use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{rational, Rational};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    xmax: usize,
    ymax: usize,
    /// One row per `y`, each of length `xmax + 1`.
    #[serde(with = "rational::matrix")]
    values: Vec<Vec<Rational>>,
}

impl Grid {
    pub fn zeros(xmax: usize, ymax: usize) -> Self {
        Grid {
            xmax,
            ymax,
            values: vec![vec![Rational::zero(); xmax + 1]; ymax + 1],
        }
    }

    /// Builds a grid from rows indexed by `y`; every row must have the same length.
    pub fn from_rows(values: Vec<Vec<Rational>>) -> Self {
        assert!(!values.is_empty() && !values[0].is_empty());
        let xmax = values[0].len() - 1;
        assert!(values.iter().all(|r| r.len() == xmax + 1), "ragged grid");
        Grid {
            xmax,
            ymax: values.len() - 1,
            values,
        }
    }

    pub fn xmax(&self) -> usize {
        self.xmax
    }

    pub fn ymax(&self) -> usize {
        self.ymax
    }

    pub fn get(&self, x: usize, y: usize) -> &Rational {
        &self.values[y][x]
    }

    pub fn set(&mut self, x: usize, y: usize, v: Rational) {
        self.values[y][x] = v;
    }

    pub fn row(&self, y: usize) -> &[Rational] {
        &self.values[y]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.values
    }

    /// Sub-window starting at the origin.
    pub fn clip(&self, xmax: usize, ymax: usize) -> Grid {
        assert!(xmax <= self.xmax && ymax <= self.ymax);
        Grid {
            xmax,
            ymax,
            values: self.values[..=ymax]
                .iter()
                .map(|r| r[..=xmax].to_vec())
                .collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Grid {
        Grid {
            xmax: self.xmax,
            ymax: self.ymax,
            values: self
                .values
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    /// Lexicographically smallest `(x, y)` where the windows disagree.
    pub fn first_mismatch(&self, other: &Grid) -> Option<(usize, usize)> {
        let xmax = self.xmax.min(other.xmax);
        let ymax = self.ymax.min(other.ymax);
        (0..=xmax)
            .flat_map(|x| (0..=ymax).map(move |y| (x, y)))
            .find(|&(x, y)| self.get(x, y) != other.get(x, y))
    }

    /// `x,y,value` rows, `y` outer, values as exact rational strings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,value\n");
        for (y, row) in self.values.iter().enumerate() {
            for (x, v) in row.iter().enumerate() {
                let _ = writeln!(out, "{x},{y},{}", rational::format(v));
            }
        }
        out
    }
}

impl std::fmt::Debug for Grid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Grid {}x{}", self.xmax + 1, self.ymax + 1)?;
        for row in &self.values {
            let text: Vec<String> = row.iter().map(rational::format).collect();
            writeln!(f, "  {}", text.join(" "))?;
        }
        Ok(())
    }
}
