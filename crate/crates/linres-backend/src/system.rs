//! Homogeneous exact-rational linear relations over circuit ports and
//! states.
//!
//! Every wire carries a current/voltage port pair. The canonical form has
//! no latent variables and holds its rows in reduced row echelon form under
//! the fixed variable order: in-ports, out-ports, derivative variables,
//! state variables. Canonical comparison is therefore exact equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::LinresError;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Quantity {
    Current,
    Voltage,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    In,
    Out,
}

/// One boundary variable, for display and JSON.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PortVar {
    pub side: Side,
    pub wire: usize,
    pub quantity: Quantity,
}

/// A linear relation between boundary ports with first-order state.
///
/// Column layout: `[i_in1, v_in1, .., i_out1, v_out1, .., q1', .., q1, ..]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearSystem {
    in_wires: usize,
    out_wires: usize,
    states: usize,
    rows: Vec<Vec<Rat>>,
}

impl LinearSystem {
    pub fn columns(in_wires: usize, out_wires: usize, states: usize) -> usize {
        2 * (in_wires + out_wires) + 2 * states
    }

    /// Builds and canonicalizes. Rows must already be over the canonical
    /// column layout.
    pub fn new(in_wires: usize, out_wires: usize, states: usize, rows: Vec<Vec<Rat>>) -> LinearSystem {
        let ncols = Self::columns(in_wires, out_wires, states);
        for r in &rows {
            assert_eq!(r.len(), ncols, "row width must match the column layout");
        }
        let mut sys = LinearSystem { in_wires, out_wires, states, rows };
        sys.reduce();
        sys
    }

    /// Builds from rows carrying extra latent columns at the end,
    /// existentially eliminating them first.
    pub fn from_rows_with_latents(
        in_wires: usize,
        out_wires: usize,
        states: usize,
        nlatents: usize,
        rows: Vec<Vec<Rat>>,
    ) -> LinearSystem {
        let kept = Self::columns(in_wires, out_wires, states);
        for r in &rows {
            assert_eq!(r.len(), kept + nlatents);
        }
        // Reorder each row to [latents | kept] and eliminate the prefix.
        let reordered: Vec<Vec<Rat>> = rows
            .into_iter()
            .map(|r| {
                let mut row = r[kept..].to_vec();
                row.extend_from_slice(&r[..kept]);
                row
            })
            .collect();
        let projected = eliminate_prefix(reordered, nlatents);
        LinearSystem::new(in_wires, out_wires, states, projected)
    }

    pub fn in_wires(&self) -> usize {
        self.in_wires
    }

    pub fn out_wires(&self) -> usize {
        self.out_wires
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Dimension of the solution space.
    pub fn solution_dim(&self) -> usize {
        Self::columns(self.in_wires, self.out_wires, self.states) - self.rows.len()
    }

    /// In-place reduced row echelon form with unit pivots, no zero rows,
    /// rows ordered by pivot column. Idempotent and independent of the
    /// input row order.
    fn reduce(&mut self) {
        self.rows = rref(std::mem::take(&mut self.rows));
    }

    /// Port variables in column order.
    pub fn port_vars(&self) -> Vec<PortVar> {
        let mut out = Vec::new();
        for w in 0..self.in_wires {
            out.push(PortVar { side: Side::In, wire: w, quantity: Quantity::Current });
            out.push(PortVar { side: Side::In, wire: w, quantity: Quantity::Voltage });
        }
        for w in 0..self.out_wires {
            out.push(PortVar { side: Side::Out, wire: w, quantity: Quantity::Current });
            out.push(PortVar { side: Side::Out, wire: w, quantity: Quantity::Voltage });
        }
        out
    }

    /// Display names in column order: ports, then `q1'..`, then `q1..`.
    pub fn column_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .port_vars()
            .iter()
            .map(|p| {
                let q = match p.quantity {
                    Quantity::Current => "i",
                    Quantity::Voltage => "v",
                };
                let s = match p.side {
                    Side::In => "in",
                    Side::Out => "out",
                };
                format!("{}_{}{}", q, s, p.wire + 1)
            })
            .collect();
        for k in 0..self.states {
            names.push(format!("q{}'", k + 1));
        }
        for k in 0..self.states {
            names.push(format!("q{}", k + 1));
        }
        names
    }

    /// One equation per line, `= 0` form, coefficients as `p/q`.
    pub fn render(&self) -> String {
        let names = self.column_names();
        let mut out = String::new();
        for row in &self.rows {
            let mut line = String::new();
            for (c, coeff) in row.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let mag = coeff.abs();
                if line.is_empty() {
                    if coeff.is_negative() {
                        line.push('-');
                    }
                } else if coeff.is_negative() {
                    line.push_str(" - ");
                } else {
                    line.push_str(" + ");
                }
                if mag.is_one() {
                    line.push_str(&names[c]);
                } else {
                    line.push_str(&format!("{}*{}", mag, names[c]));
                }
            }
            if line.is_empty() {
                line.push('0');
            }
            line.push_str(" = 0\n");
            out.push_str(&line);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect();
        serde_json::json!({
            "in_wires": self.in_wires,
            "out_wires": self.out_wires,
            "states": self.states,
            "columns": self.column_names(),
            "rows": rows,
        })
    }

    /// Composition: identify this system's out-ports with the other's
    /// in-ports, stack rows, eliminate the identified ports, concatenate
    /// states.
    pub fn compose(&self, other: &LinearSystem) -> Result<LinearSystem, LinresError> {
        if self.out_wires != other.in_wires {
            return Err(LinresError::InterfaceMismatch {
                expected: self.out_wires,
                found: other.in_wires,
            });
        }
        let mid = 2 * self.out_wires;
        let in_wires = self.in_wires;
        let out_wires = other.out_wires;
        let states = self.states + other.states;
        let kept = Self::columns(in_wires, out_wires, states);
        let total = kept + mid;
        let mut rows = Vec::with_capacity(self.rows.len() + other.rows.len());
        // Column maps into [kept | latent-middle].
        let a_cols = |c: usize| -> usize {
            let a_in = 2 * self.in_wires;
            if c < a_in {
                c
            } else if c < a_in + mid {
                kept + (c - a_in)
            } else {
                // a's derivs then states.
                let local = c - a_in - mid;
                if local < self.states {
                    2 * (in_wires + out_wires) + local
                } else {
                    2 * (in_wires + out_wires) + states + (local - self.states)
                }
            }
        };
        let b_cols = |c: usize| -> usize {
            let b_in = 2 * other.in_wires;
            let b_out = 2 * other.out_wires;
            if c < b_in {
                kept + c
            } else if c < b_in + b_out {
                2 * self.in_wires + (c - b_in)
            } else {
                let local = c - b_in - b_out;
                if local < other.states {
                    2 * (in_wires + out_wires) + self.states + local
                } else {
                    2 * (in_wires + out_wires) + states + self.states + (local - other.states)
                }
            }
        };
        for r in &self.rows {
            let mut row = vec![Rat::zero(); total];
            for (c, coeff) in r.iter().enumerate() {
                if !coeff.is_zero() {
                    row[a_cols(c)] = coeff.clone();
                }
            }
            rows.push(row);
        }
        for r in &other.rows {
            let mut row = vec![Rat::zero(); total];
            for (c, coeff) in r.iter().enumerate() {
                if !coeff.is_zero() {
                    row[b_cols(c)] = coeff.clone();
                }
            }
            rows.push(row);
        }
        Ok(LinearSystem::from_rows_with_latents(in_wires, out_wires, states, mid, rows))
    }

    /// Disjoint union with port and state reindexing.
    pub fn tensor(&self, other: &LinearSystem) -> LinearSystem {
        let in_wires = self.in_wires + other.in_wires;
        let out_wires = self.out_wires + other.out_wires;
        let states = self.states + other.states;
        let ncols = Self::columns(in_wires, out_wires, states);
        let ports = 2 * (in_wires + out_wires);
        let a_map = |c: usize| -> usize {
            let a_in = 2 * self.in_wires;
            let a_out = 2 * self.out_wires;
            if c < a_in {
                c
            } else if c < a_in + a_out {
                2 * in_wires + (c - a_in)
            } else {
                let local = c - a_in - a_out;
                if local < self.states {
                    ports + local
                } else {
                    ports + states + (local - self.states)
                }
            }
        };
        let b_map = |c: usize| -> usize {
            let b_in = 2 * other.in_wires;
            let b_out = 2 * other.out_wires;
            if c < b_in {
                2 * self.in_wires + c
            } else if c < b_in + b_out {
                2 * in_wires + 2 * self.out_wires + (c - b_in)
            } else {
                let local = c - b_in - b_out;
                if local < other.states {
                    ports + self.states + local
                } else {
                    ports + states + self.states + (local - other.states)
                }
            }
        };
        let mut rows = Vec::with_capacity(self.rows.len() + other.rows.len());
        for r in &self.rows {
            let mut row = vec![Rat::zero(); ncols];
            for (c, coeff) in r.iter().enumerate() {
                if !coeff.is_zero() {
                    row[a_map(c)] = coeff.clone();
                }
            }
            rows.push(row);
        }
        for r in &other.rows {
            let mut row = vec![Rat::zero(); ncols];
            for (c, coeff) in r.iter().enumerate() {
                if !coeff.is_zero() {
                    row[b_map(c)] = coeff.clone();
                }
            }
            rows.push(row);
        }
        LinearSystem::new(in_wires, out_wires, states, rows)
    }
}

/// Reduced row echelon form with unit pivots, zero rows dropped.
pub fn rref(mut rows: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let scale = rows[pivot_row][col].clone();
        for c in col..ncols {
            let v = rows[pivot_row][c].clone() / scale.clone();
            rows[pivot_row][c] = v;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let v = rows[r][c].clone() - factor.clone() * rows[pivot_row][c].clone();
                    rows[r][c] = v;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Eliminates the first `prefix` columns existentially: rows pivoting in
/// the prefix are consumed; the rest are returned with the prefix stripped.
fn eliminate_prefix(rows: Vec<Vec<Rat>>, prefix: usize) -> Vec<Vec<Rat>> {
    let reduced = rref(rows);
    reduced
        .into_iter()
        .filter(|r| r[..prefix].iter().all(Rat::is_zero))
        .map(|r| r[prefix..].to_vec())
        .collect()
}
