//! The generating systems: circuit elements, Kirchhoff forks and joins,
//! open ends, turnarounds, and the (trivial) braiding.
//!
//! Sign convention, used uniformly: traversing an element from its in-port
//! to its out-port, the voltage drops by the impedance term,
//! `v_in - v_out = Z`. Forks split current with equal voltages; units and
//! counits are open ends carrying no current; cups and caps reverse wire
//! direction, so their two currents cancel.

use num_traits::Zero;

use crate::system::{rat, LinearSystem, Rat};
use crate::LinresError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Resistor(Rat),
    Capacitor(Rat),
    Inductor(Rat),
}

/// Builds the linear system of one component. Parameters must be positive.
pub fn component_system(kind: &ComponentKind) -> Result<LinearSystem, LinresError> {
    let positive = |r: &Rat, what: &str| -> Result<(), LinresError> {
        if *r <= Rat::zero() {
            Err(LinresError::BadParam(format!("{} must be positive, got {}", what, r)))
        } else {
            Ok(())
        }
    };
    match kind {
        ComponentKind::Resistor(r) => {
            positive(r, "resistance")?;
            // Columns: i_in1 v_in1 i_out1 v_out1.
            let n = LinearSystem::columns(1, 1, 0);
            let mut current = vec![Rat::zero(); n];
            current[0] = rat(1);
            current[2] = rat(-1);
            let mut drop = vec![Rat::zero(); n];
            drop[1] = rat(1);
            drop[3] = rat(-1);
            drop[0] = -r.clone();
            Ok(LinearSystem::new(1, 1, 0, vec![current, drop]))
        }
        ComponentKind::Capacitor(c) => {
            positive(c, "capacitance")?;
            // Columns: i_in1 v_in1 i_out1 v_out1 q1' q1.
            let n = LinearSystem::columns(1, 1, 1);
            let mut current = vec![Rat::zero(); n];
            current[0] = rat(1);
            current[2] = rat(-1);
            let mut drop = vec![Rat::zero(); n];
            drop[1] = rat(1);
            drop[3] = rat(-1);
            drop[5] = -(rat(1) / c.clone());
            let mut charge = vec![Rat::zero(); n];
            charge[4] = rat(1);
            charge[0] = rat(-1);
            Ok(LinearSystem::new(1, 1, 1, vec![current, drop, charge]))
        }
        ComponentKind::Inductor(l) => {
            positive(l, "inductance")?;
            // State is the inductor current; its derivative carries the
            // voltage drop.
            let n = LinearSystem::columns(1, 1, 1);
            let mut current = vec![Rat::zero(); n];
            current[0] = rat(1);
            current[2] = rat(-1);
            let mut drop = vec![Rat::zero(); n];
            drop[1] = rat(1);
            drop[3] = rat(-1);
            drop[4] = -l.clone();
            let mut tie = vec![Rat::zero(); n];
            tie[5] = rat(1);
            tie[0] = rat(-1);
            Ok(LinearSystem::new(1, 1, 1, vec![current, drop, tie]))
        }
    }
}

/// Identity wiring on `wires` parallel wires.
pub fn identity_system(wires: usize) -> LinearSystem {
    let n = LinearSystem::columns(wires, wires, 0);
    let mut rows = Vec::new();
    for p in 0..2 * wires {
        let mut row = vec![Rat::zero(); n];
        row[p] = rat(1);
        row[2 * wires + p] = rat(-1);
        rows.push(row);
    }
    LinearSystem::new(wires, wires, 0, rows)
}

/// The fork `1 -> 2`: current splits, voltages agree.
pub fn fork_system() -> LinearSystem {
    let n = LinearSystem::columns(1, 2, 0);
    // Columns: i_in1 v_in1 i_out1 v_out1 i_out2 v_out2.
    let mut kirchhoff = vec![Rat::zero(); n];
    kirchhoff[0] = rat(1);
    kirchhoff[2] = rat(-1);
    kirchhoff[4] = rat(-1);
    let mut v1 = vec![Rat::zero(); n];
    v1[1] = rat(1);
    v1[3] = rat(-1);
    let mut v2 = vec![Rat::zero(); n];
    v2[1] = rat(1);
    v2[5] = rat(-1);
    LinearSystem::new(1, 2, 0, vec![kirchhoff, v1, v2])
}

/// The join `2 -> 1`: currents add, voltages agree.
pub fn join_system() -> LinearSystem {
    let n = LinearSystem::columns(2, 1, 0);
    // Columns: i_in1 v_in1 i_in2 v_in2 i_out1 v_out1.
    let mut kirchhoff = vec![Rat::zero(); n];
    kirchhoff[0] = rat(1);
    kirchhoff[2] = rat(1);
    kirchhoff[4] = rat(-1);
    let mut v1 = vec![Rat::zero(); n];
    v1[1] = rat(1);
    v1[5] = rat(-1);
    let mut v2 = vec![Rat::zero(); n];
    v2[3] = rat(1);
    v2[5] = rat(-1);
    LinearSystem::new(2, 1, 0, vec![kirchhoff, v1, v2])
}

/// Open end producing a wire: no current flows.
pub fn unit_system() -> LinearSystem {
    let n = LinearSystem::columns(0, 1, 0);
    let mut row = vec![Rat::zero(); n];
    row[0] = rat(1);
    LinearSystem::new(0, 1, 0, vec![row])
}

/// Open end consuming a wire: no current flows.
pub fn counit_system() -> LinearSystem {
    let n = LinearSystem::columns(1, 0, 0);
    let mut row = vec![Rat::zero(); n];
    row[0] = rat(1);
    LinearSystem::new(1, 0, 0, vec![row])
}

/// Turnaround creating two wire ends: equal voltage, cancelling currents.
pub fn cup_system() -> LinearSystem {
    let n = LinearSystem::columns(0, 2, 0);
    // Columns: i_out1 v_out1 i_out2 v_out2.
    let mut current = vec![Rat::zero(); n];
    current[0] = rat(1);
    current[2] = rat(1);
    let mut voltage = vec![Rat::zero(); n];
    voltage[1] = rat(1);
    voltage[3] = rat(-1);
    LinearSystem::new(0, 2, 0, vec![current, voltage])
}

/// Turnaround joining two wire ends.
pub fn cap_system() -> LinearSystem {
    let n = LinearSystem::columns(2, 0, 0);
    let mut current = vec![Rat::zero(); n];
    current[0] = rat(1);
    current[2] = rat(1);
    let mut voltage = vec![Rat::zero(); n];
    voltage[1] = rat(1);
    voltage[3] = rat(-1);
    LinearSystem::new(2, 0, 0, vec![current, voltage])
}

/// Crossing a block of `m` wires past a block of `n`: a pure port
/// permutation, since the group here is abelian.
pub fn braid_system(m: usize, n: usize) -> LinearSystem {
    let wires = m + n;
    let ncols = LinearSystem::columns(wires, wires, 0);
    let mut rows = Vec::new();
    for w in 0..wires {
        // Input wire w lands at output position: first block shifts past
        // the second.
        let target = if w < m { n + w } else { w - m };
        for q in 0..2 {
            let mut row = vec![Rat::zero(); ncols];
            row[2 * w + q] = rat(1);
            row[2 * wires + 2 * target + q] = rat(-1);
            rows.push(row);
        }
    }
    LinearSystem::new(wires, wires, 0, rows)
}


#[cfg(test)]
mod block_braid_tests {
    use super::*;

    #[test]
    fn block_braids_invert_each_other() {
        for (m, n) in [(1usize, 2usize), (2, 1), (2, 2), (0, 3)] {
            let forward = braid_system(m, n);
            let backward = braid_system(n, m);
            assert_eq!(forward.compose(&backward).unwrap(), identity_system(m + n));
        }
    }
}
