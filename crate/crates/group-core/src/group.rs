//! Multiplication-table groups with the derived data the relational
//! semantics needs: inverses, center, conjugation.

use std::collections::HashMap;

use crate::perm::Permutation;
use crate::GroupError;

/// Safety cap on breadth-first closure of permutation generators.
pub const DEFAULT_CLOSURE_CAP: usize = 10080;

/// A finite group given by its multiplication table. Element 0 is the
/// identity; elements are dense indices with display names.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    names: Vec<String>,
    mult: Vec<Vec<usize>>,
    inv: Vec<usize>,
    center: Vec<usize>,
}

/// Group construction input, mirroring the binding-file forms.
#[derive(Clone, Debug)]
pub enum GroupSpec {
    Builtin(String),
    Permutations { degree: usize, generators: Vec<Permutation> },
    Table(Vec<Vec<usize>>),
}

pub fn make_group(spec: GroupSpec) -> Result<FiniteGroup, GroupError> {
    match spec {
        GroupSpec::Builtin(name) => FiniteGroup::builtin(&name),
        GroupSpec::Permutations { degree, generators } => {
            FiniteGroup::from_permutations(degree, &generators, DEFAULT_CLOSURE_CAP)
        }
        GroupSpec::Table(table) => FiniteGroup::from_table(table, None),
    }
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `x` conjugated by `h`, with the convention `x^h = h x h^{-1}`.
    pub fn conj(&self, x: usize, h: usize) -> usize {
        self.mult[self.mult[h][x]][self.inv[h]]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Sorted indices of elements commuting with everything.
    pub fn center(&self) -> &[usize] {
        &self.center
    }

    pub fn is_central(&self, a: usize) -> bool {
        self.center.binary_search(&a).is_ok()
    }

    /// Product of a sequence of elements, left to right; empty product is
    /// the identity.
    pub fn product(&self, elems: impl IntoIterator<Item = usize>) -> usize {
        elems.into_iter().fold(0, |acc, e| self.mult[acc][e])
    }

    pub fn multiplication_table(&self) -> Vec<Vec<usize>> {
        self.mult.clone()
    }

    /// Builtin groups: C2..C12 cyclic, S2..S5 symmetric, D3 and D4 dihedral.
    /// D3 presents the same table as S3; the two names are interchangeable
    /// for coloring counts.
    pub fn builtin(name: &str) -> Result<FiniteGroup, GroupError> {
        let perm_group = |degree: usize, gens: &[&str]| -> Result<FiniteGroup, GroupError> {
            let parsed = gens
                .iter()
                .map(|g| Permutation::parse(g, degree, false))
                .collect::<Result<Vec<_>, _>>()?;
            FiniteGroup::from_permutations(degree, &parsed, DEFAULT_CLOSURE_CAP)
        };
        if let Some(rest) = name.strip_prefix('C') {
            if let Ok(n) = rest.parse::<usize>() {
                if (2..=12).contains(&n) {
                    let cycle: Vec<usize> = (1..=n).collect();
                    let gen = Permutation::from_cycles(&[cycle], n)?;
                    return FiniteGroup::from_permutations(n, &[gen], DEFAULT_CLOSURE_CAP);
                }
            }
        }
        if let Some(rest) = name.strip_prefix('S') {
            if let Ok(n) = rest.parse::<usize>() {
                if (2..=5).contains(&n) {
                    let gens: Vec<Permutation> = (1..n)
                        .map(|i| Permutation::from_cycles(&[vec![i, i + 1]], n))
                        .collect::<Result<_, _>>()?;
                    return FiniteGroup::from_permutations(n, &gens, DEFAULT_CLOSURE_CAP);
                }
            }
        }
        match name {
            "D3" => perm_group(3, &["(1 2 3)", "(1 2)"]),
            "D4" => perm_group(4, &["(1 2 3 4)", "(1 3)"]),
            _ => Err(GroupError::UnknownBuiltin(name.to_string())),
        }
    }

    /// Breadth-first closure of permutation generators into a multiplication
    /// table. Element names are cycle notation; the identity sits at index 0.
    pub fn from_permutations(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<FiniteGroup, GroupError> {
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::BadPermutation(format!(
                    "generator degree {} does not match declared degree {}",
                    g.degree(),
                    degree
                )));
            }
        }
        let mut elems: Vec<Permutation> = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        let mut frontier = 0;
        while frontier < elems.len() {
            let current = elems[frontier].clone();
            for g in generators {
                for prod in [g.product(&current), current.product(g)] {
                    if !index.contains_key(&prod) {
                        if elems.len() >= cap {
                            return Err(GroupError::ClosureTooLarge(cap));
                        }
                        index.insert(prod.clone(), elems.len());
                        elems.push(prod);
                    }
                }
            }
            frontier += 1;
        }
        let n = elems.len();
        let mut mult = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let prod = elems[a].product(&elems[b]);
                mult[a][b] = index[&prod];
            }
        }
        let names = elems.iter().map(|p| p.cycle_notation()).collect();
        FiniteGroup::from_validated_table(mult, names)
    }

    /// Builds from an explicit table, checking all four group laws
    /// exhaustively. The identity must be element 0.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
    ) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty table".to_string()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotAGroup(format!(
                    "row {} has length {}, expected {}",
                    i,
                    row.len(),
                    n
                )));
            }
            for &entry in row {
                if entry >= n {
                    return Err(GroupError::NotAGroup(format!(
                        "entry {} out of range in row {}",
                        entry, i
                    )));
                }
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(GroupError::NotAGroup(format!(
                    "element 0 is not a two-sided identity at {}",
                    a
                )));
            }
        }
        for a in 0..n {
            if !table[a].iter().any(|&p| p == 0) {
                return Err(GroupError::NotAGroup(format!("element {} has no inverse", a)));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            a, b, c
                        )));
                    }
                }
            }
        }
        let names =
            names.unwrap_or_else(|| (0..n).map(|i| format!("g{}", i)).collect::<Vec<_>>());
        FiniteGroup::from_validated_table(table, names)
    }

    fn from_validated_table(
        mult: Vec<Vec<usize>>,
        names: Vec<String>,
    ) -> Result<FiniteGroup, GroupError> {
        let n = mult.len();
        let mut inv = vec![0usize; n];
        for a in 0..n {
            match (0..n).find(|&b| mult[a][b] == 0 && mult[b][a] == 0) {
                Some(b) => inv[a] = b,
                None => {
                    return Err(GroupError::NotAGroup(format!(
                        "element {} has no two-sided inverse",
                        a
                    )))
                }
            }
        }
        let center: Vec<usize> = (0..n)
            .filter(|&z| (0..n).all(|g| mult[z][g] == mult[g][z]))
            .collect();
        Ok(FiniteGroup { names, mult, inv, center })
    }
}


#[cfg(test)]
mod more_center_tests {
    use super::*;

    #[test]
    fn larger_symmetric_groups_have_trivial_center() {
        for name in ["S4", "S5"] {
            let g = FiniteGroup::builtin(name).unwrap();
            assert_eq!(g.center(), &[0][..], "{}", name);
        }
    }
}
