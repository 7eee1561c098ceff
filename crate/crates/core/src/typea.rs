//! Kleshchev's e-good lattice.
//!
//! Vertices are the e-regular partitions. For a residue `x` the addable and
//! removable `x`-nodes are read from the top row down, adjacent `AR` pairs
//! are cancelled, and the surviving `R`s (resp. `A`s) are the normal (resp.
//! conormal) nodes. The good node is the lowest normal node and the cogood
//! node the highest conormal node; removing the good node and adding the
//! cogood node are mutually inverse crystal operators.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::export::{CrystalEdge, CrystalGraph, GraphKind};
use crate::partition::{check_modulus, regular_partitions, Node, Partition, Residue, ResidueWord};
use crate::signature::{self, Letter};

/// How to pick a residue when several have a good node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PathStrategy {
    #[default]
    SmallestResidue,
    LargestResidue,
}

impl PathStrategy {
    pub const ALL: [PathStrategy; 2] =
        [PathStrategy::SmallestResidue, PathStrategy::LargestResidue];

    pub(crate) fn order(self, modulus: usize) -> Box<dyn Iterator<Item = usize>> {
        match self {
            PathStrategy::SmallestResidue => Box::new(0..modulus),
            PathStrategy::LargestResidue => Box::new((0..modulus).rev()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureReport {
    pub residue: Residue,
    /// Addable and removable `residue`-nodes in reading order.
    pub raw: Vec<(Node, Letter)>,
    pub normal: Vec<Node>,
    pub conormal: Vec<Node>,
    pub good: Option<Node>,
    pub cogood: Option<Node>,
}

impl SignatureReport {
    pub fn epsilon(&self) -> usize {
        self.normal.len()
    }

    pub fn phi(&self) -> usize {
        self.conormal.len()
    }

    /// The raw letters as a string such as `AARRRR`.
    pub fn word(&self) -> String {
        signature::word(self.raw.iter().map(|&(_, l)| l))
    }

    pub(crate) fn from_raw(residue: Residue, raw: Vec<(Node, Letter)>) -> Self {
        let letters: Vec<Letter> = raw.iter().map(|&(_, l)| l).collect();
        let mut normal = Vec::new();
        let mut conormal = Vec::new();
        for i in signature::surviving(&letters) {
            match raw[i].1 {
                Letter::R => normal.push(raw[i].0),
                Letter::A => conormal.push(raw[i].0),
            }
        }
        SignatureReport {
            residue,
            good: normal.last().copied(),
            cogood: conormal.first().copied(),
            raw,
            normal,
            conormal,
        }
    }
}

/// Kleshchev's e-good lattice for a fixed `e >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KleshchevCrystal {
    e: usize,
}

impl KleshchevCrystal {
    pub fn new(e: usize) -> Result<Self> {
        check_modulus(e)?;
        Ok(KleshchevCrystal { e })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    fn ensure_regular(&self, p: &Partition) -> Result<()> {
        if p.is_e_regular_unchecked(self.e) {
            Ok(())
        } else {
            Err(Error::NotRegular {
                partition: p.clone(),
                e: self.e,
            })
        }
    }

    // Each row has at most one addable and one removable node and their
    // residues differ by one, so a row contributes at most one letter.
    fn raw_signature(&self, p: &Partition, x: usize) -> Vec<(Node, Letter)> {
        let mut raw = Vec::new();
        for row in 1..=p.len() + 1 {
            let here = p.part(row);
            if here > 0 && p.part(row + 1) < here {
                let node = Node::new(row, here);
                if node.residue_type_a(self.e).value() == x {
                    raw.push((node, Letter::R));
                }
            }
            if row == 1 || p.part(row - 1) > here {
                let node = Node::new(row, here + 1);
                if node.residue_type_a(self.e).value() == x {
                    raw.push((node, Letter::A));
                }
            }
        }
        raw
    }

    fn signature(&self, p: &Partition, x: usize) -> SignatureReport {
        let x = x % self.e;
        SignatureReport::from_raw(Residue::new(x as i64, self.e), self.raw_signature(p, x))
    }

    /// The `x`-signature of an e-regular partition.
    pub fn signature_report(&self, p: &Partition, x: Residue) -> Result<SignatureReport> {
        if x.modulus() != self.e {
            return Err(Error::ModulusMismatch {
                expected: self.e,
                found: x.modulus(),
            });
        }
        self.ensure_regular(p)?;
        Ok(self.signature(p, x.value()))
    }

    pub fn epsilon(&self, p: &Partition, x: usize) -> usize {
        self.signature(p, x).epsilon()
    }

    pub fn phi(&self, p: &Partition, x: usize) -> usize {
        self.signature(p, x).phi()
    }

    /// Removes the good `x`-node (`x` is taken modulo `e`); `None` if there is
    /// none.
    pub fn remove_good(&self, p: &Partition, x: usize) -> Option<Partition> {
        let good = self.signature(p, x).good?;
        p.with_box_removed(good.row)
    }

    /// Adds the cogood `x`-node (`x` is taken modulo `e`); `None` if there is
    /// none.
    pub fn add_cogood(&self, p: &Partition, x: usize) -> Option<Partition> {
        let cogood = self.signature(p, x).cogood?;
        p.with_box_added(cogood.row)
    }

    /// Applies `add_cogood` letter by letter from the empty partition.
    pub fn replay(&self, word: &[usize]) -> Option<Partition> {
        word.iter()
            .try_fold(Partition::empty(), |p, &x| self.add_cogood(&p, x))
    }

    /// A residue word whose replay from the empty partition gives `p`, found
    /// by repeatedly removing a good node of the smallest possible residue.
    pub fn canonical_path(&self, p: &Partition) -> Result<ResidueWord> {
        self.path_with(p, PathStrategy::SmallestResidue)
    }

    pub fn path_with(&self, p: &Partition, strategy: PathStrategy) -> Result<ResidueWord> {
        self.ensure_regular(p)?;
        let mut word = Vec::with_capacity(p.size());
        let mut current = p.clone();
        while !current.is_empty() {
            let step = strategy
                .order(self.e)
                .find_map(|x| self.remove_good(&current, x).map(|q| (x, q)));
            let (x, q) = step
                .ok_or_else(|| Error::InternalConsistency(format!("{current} has no good node")))?;
            word.push(x);
            current = q;
        }
        word.reverse();
        Ok(word)
    }

    /// The lattice up to size `max_n`, grown level by level with `add_cogood`.
    pub fn enumerate(&self, max_n: usize) -> CrystalGraph {
        let mut levels = vec![vec![Partition::empty()]];
        let mut edges = Vec::new();
        for n in 0..max_n {
            let mut next = BTreeSet::new();
            for p in &levels[n] {
                for x in 0..self.e {
                    if let Some(q) = self.add_cogood(p, x) {
                        edges.push(CrystalEdge {
                            from: p.clone(),
                            to: q.clone(),
                            residue: x,
                        });
                        next.insert(q);
                    }
                }
            }
            levels.push(next.into_iter().rev().collect());
        }
        CrystalGraph {
            kind: GraphKind::TypeA { e: self.e },
            levels,
            edges,
        }
    }
}

/// Levels `0..=max_n` of Kleshchev's e-good lattice with labelled edges.
pub fn enumerate_kleshchev(e: usize, max_n: usize) -> Result<CrystalGraph> {
    Ok(KleshchevCrystal::new(e)?.enumerate(max_n))
}

/// The same levels built by filtering all partitions.
pub fn kleshchev_levels_by_filter(e: usize, max_n: usize) -> Result<Vec<Vec<Partition>>> {
    (0..=max_n).map(|n| regular_partitions(n, e)).collect()
}
