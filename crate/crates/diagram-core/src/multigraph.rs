//! Wire types, words of wire types, and multigraphs of components.

use std::collections::BTreeMap;
use std::fmt;

/// A word of wire-type names; the empty word is the unit object `I`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<String>);

impl Word {
    pub fn unit() -> Word {
        Word(Vec::new())
    }

    pub fn single(name: impl Into<String>) -> Word {
        Word(vec![name.into()])
    }

    pub fn of(names: &[&str]) -> Word {
        Word(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut entries = self.0.clone();
        entries.extend(other.0.iter().cloned());
        Word(entries)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        for (i, name) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(name)?;
        }
        Ok(())
    }
}

/// A multigraph: wire types plus components typed by domain and codomain
/// words.
#[derive(Clone, Debug, Default)]
pub struct Multigraph {
    wires: Vec<String>,
    components: BTreeMap<String, (Word, Word)>,
}

impl Multigraph {
    pub fn new() -> Multigraph {
        Multigraph::default()
    }

    pub fn add_wire(&mut self, name: impl Into<String>) -> bool {
        let name = name.into();
        if self.wires.contains(&name) {
            return false;
        }
        self.wires.push(name);
        true
    }

    pub fn add_component(&mut self, name: impl Into<String>, dom: Word, cod: Word) -> bool {
        let name = name.into();
        if self.components.contains_key(&name) {
            return false;
        }
        self.components.insert(name, (dom, cod));
        true
    }

    pub fn has_wire(&self, name: &str) -> bool {
        self.wires.iter().any(|w| w == name)
    }

    pub fn wires(&self) -> &[String] {
        &self.wires
    }

    pub fn component(&self, name: &str) -> Option<(&Word, &Word)> {
        self.components.get(name).map(|(d, c)| (d, c))
    }

    pub fn components(&self) -> impl Iterator<Item = (&String, &(Word, Word))> {
        self.components.iter()
    }

    /// Checks every entry of a word is a declared wire type; returns the
    /// first unknown name.
    pub fn check_word<'w>(&self, word: &'w Word) -> Result<(), &'w str> {
        for name in &word.0 {
            if !self.has_wire(name) {
                return Err(name);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_word_displays_as_i() {
        assert_eq!(Word::unit().to_string(), "I");
        assert_eq!(Word::of(&["X", "Y"]).to_string(), "X,Y");
    }

    #[test]
    fn duplicate_names_rejected() {
        let mut mg = Multigraph::new();
        assert!(mg.add_wire("X"));
        assert!(!mg.add_wire("X"));
        assert!(mg.add_component("R", Word::of(&["X"]), Word::unit()));
        assert!(!mg.add_component("R", Word::unit(), Word::unit()));
    }
}
