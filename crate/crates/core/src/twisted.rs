//! Crystals of the twisted types on strict partitions.
//!
//! For `CrystalKind::Odd(l)` the vertices are the restricted `(2l+1)`-strict
//! partitions (type `A_{2l}^{(2)}`); for `CrystalKind::Even(l)` they are the
//! double restricted `(l+1)`-strict partitions (type `D_{l+1}^{(2)}`).
//! Residues depend only on the column and live in `Z/(l+1)Z`.
//!
//! A removable node is either a row end whose removal keeps the partition
//! strict (R1), or the node left of a same-residue row end such that removing
//! the end, and then both, keeps it strict (R2). Addable nodes A1/A2 mirror
//! this. Every such node is one signature letter. The signature is read from
//! the bottom-left to the top-right of the boundary.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::export::{CrystalEdge, CrystalGraph, GraphKind};
use crate::partition::{CrystalKind, Node, Partition, Residue, ResidueWord, StrictClass};
use crate::signature::{self, Letter};
use crate::typea::PathStrategy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NodeTag {
    R1,
    R2,
    A1,
    A2,
}

impl NodeTag {
    pub fn letter(self) -> Letter {
        match self {
            NodeTag::R1 | NodeTag::R2 => Letter::R,
            NodeTag::A1 | NodeTag::A2 => Letter::A,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwistedNode {
    pub node: Node,
    pub tag: NodeTag,
    pub residue: Residue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistedSignatureReport {
    pub residue: Residue,
    pub raw: Vec<TwistedNode>,
    pub normal: Vec<TwistedNode>,
    pub conormal: Vec<TwistedNode>,
    pub good: Option<TwistedNode>,
    pub cogood: Option<TwistedNode>,
}

impl TwistedSignatureReport {
    pub fn epsilon(&self) -> usize {
        self.normal.len()
    }

    pub fn phi(&self) -> usize {
        self.conormal.len()
    }

    pub fn word(&self) -> String {
        signature::word(self.raw.iter().map(|n| n.tag.letter()))
    }

    fn from_raw(residue: Residue, raw: Vec<TwistedNode>) -> Self {
        let letters: Vec<Letter> = raw.iter().map(|n| n.tag.letter()).collect();
        let (mut normal, mut conormal) = (Vec::new(), Vec::new());
        for i in signature::surviving(&letters) {
            match letters[i] {
                Letter::R => normal.push(raw[i]),
                Letter::A => conormal.push(raw[i]),
            }
        }
        TwistedSignatureReport {
            residue,
            good: normal.last().copied(),
            cogood: conormal.first().copied(),
            raw,
            normal,
            conormal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistedCrystal {
    kind: CrystalKind,
}

impl TwistedCrystal {
    pub fn new(kind: CrystalKind) -> Result<Self> {
        if kind.ell() == 0 {
            return Err(Error::InvalidRank(0));
        }
        Ok(TwistedCrystal { kind })
    }

    pub fn kind(&self) -> CrystalKind {
        self.kind
    }

    fn strict(&self, p: &Partition) -> bool {
        p.is_strict_class_unchecked(self.kind.strictness(), StrictClass::Strict)
    }

    fn strict_opt(&self, p: Option<Partition>) -> bool {
        p.is_some_and(|q| self.strict(&q))
    }

    fn ensure_strict(&self, p: &Partition) -> Result<()> {
        if self.strict(p) {
            Ok(())
        } else {
            Err(Error::NotStrict {
                partition: p.clone(),
                f: self.kind.strictness(),
            })
        }
    }

    fn ensure_member(&self, p: &Partition) -> Result<()> {
        if self.kind.contains(p) {
            Ok(())
        } else {
            Err(Error::OutsideClass {
                partition: p.clone(),
                kind: self.kind,
            })
        }
    }

    fn res(&self, col: usize) -> Residue {
        self.kind.residue(col)
    }

    fn scan(&self, p: &Partition) -> Vec<TwistedNode> {
        let mut out = Vec::new();
        let mut push = |row, col, tag| {
            out.push(TwistedNode {
                node: Node::new(row, col),
                tag,
                residue: self.res(col),
            })
        };
        for row in (1..=p.len() + 1).rev() {
            let len = p.part(row);
            if len >= 2
                && self.res(len - 1) == self.res(len)
                && self.strict_opt(p.with_row_len(row, len - 1))
                && self.strict_opt(p.with_row_len(row, len - 2))
            {
                push(row, len - 1, NodeTag::R2);
            }
            if len >= 1 && self.strict_opt(p.with_row_len(row, len - 1)) {
                push(row, len, NodeTag::R1);
            }
            let single = self.strict_opt(p.with_row_len(row, len + 1));
            if single {
                push(row, len + 1, NodeTag::A1);
            }
            if single
                && self.res(len + 1) == self.res(len + 2)
                && self.strict_opt(p.with_row_len(row, len + 2))
            {
                push(row, len + 2, NodeTag::A2);
            }
        }
        out
    }

    /// All removable and addable nodes, bottom-left to top-right.
    pub fn node_scan(&self, p: &Partition) -> Result<Vec<TwistedNode>> {
        self.ensure_strict(p)?;
        Ok(self.scan(p))
    }

    fn signature(&self, p: &Partition, i: usize) -> TwistedSignatureReport {
        let residue = Residue::new(i as i64, self.kind.modulus());
        let raw = self
            .scan(p)
            .into_iter()
            .filter(|n| n.residue == residue)
            .collect();
        TwistedSignatureReport::from_raw(residue, raw)
    }

    pub fn signature_report(&self, p: &Partition, i: Residue) -> Result<TwistedSignatureReport> {
        if i.modulus() != self.kind.modulus() {
            return Err(Error::ModulusMismatch {
                expected: self.kind.modulus(),
                found: i.modulus(),
            });
        }
        self.ensure_strict(p)?;
        Ok(self.signature(p, i.value()))
    }

    pub fn epsilon(&self, p: &Partition, i: usize) -> usize {
        self.signature(p, i).epsilon()
    }

    pub fn phi(&self, p: &Partition, i: usize) -> usize {
        self.signature(p, i).phi()
    }

    pub(crate) fn lower(&self, p: &Partition, i: usize) -> Result<Option<Partition>> {
        let Some(cogood) = self.signature(p, i).cogood else {
            return Ok(None);
        };
        if cogood.tag != NodeTag::A1 {
            return Err(Error::InternalConsistency(format!(
                "cogood {i}-node {} of {p} has tag {:?}",
                cogood.node, cogood.tag
            )));
        }
        Ok(p.with_box_added(cogood.node.row))
    }

    pub(crate) fn raise(&self, p: &Partition, i: usize) -> Result<Option<Partition>> {
        let Some(good) = self.signature(p, i).good else {
            return Ok(None);
        };
        if good.tag != NodeTag::R1 {
            return Err(Error::InternalConsistency(format!(
                "good {i}-node {} of {p} has tag {:?}",
                good.node, good.tag
            )));
        }
        Ok(p.with_box_removed(good.node.row))
    }

    fn check_residue(&self, i: usize) -> Result<()> {
        if i > self.kind.ell() {
            Err(Error::ResidueOutOfRange {
                residue: i,
                max: self.kind.ell(),
            })
        } else {
            Ok(())
        }
    }

    /// Adds the cogood `i`-node; `Ok(None)` when `phi_i = 0`.
    pub fn f(&self, p: &Partition, i: usize) -> Result<Option<Partition>> {
        self.check_residue(i)?;
        self.ensure_member(p)?;
        self.lower(p, i)
    }

    /// Removes the good `i`-node; `Ok(None)` when `epsilon_i = 0`.
    pub fn e(&self, p: &Partition, i: usize) -> Result<Option<Partition>> {
        self.check_residue(i)?;
        self.ensure_member(p)?;
        self.raise(p, i)
    }

    pub fn replay(&self, word: &[usize]) -> Result<Option<Partition>> {
        let mut p = Partition::empty();
        for &i in word {
            self.check_residue(i)?;
            match self.lower(&p, i)? {
                Some(q) => p = q,
                None => return Ok(None),
            }
        }
        Ok(Some(p))
    }

    pub fn canonical_path(&self, p: &Partition) -> Result<ResidueWord> {
        self.path_with(p, PathStrategy::SmallestResidue)
    }

    pub fn path_with(&self, p: &Partition, strategy: PathStrategy) -> Result<ResidueWord> {
        self.ensure_member(p)?;
        let mut word = Vec::with_capacity(p.size());
        let mut current = p.clone();
        while !current.is_empty() {
            let mut step = None;
            for i in strategy.order(self.kind.modulus()) {
                if let Some(q) = self.raise(&current, i)? {
                    step = Some((i, q));
                    break;
                }
            }
            let (i, q) = step
                .ok_or_else(|| Error::InternalConsistency(format!("{current} has no good node")))?;
            word.push(i);
            current = q;
        }
        word.reverse();
        Ok(word)
    }

    /// Breadth-first enumeration from the empty partition up to `max_depth`.
    /// Depth equals size since every arrow adds one box.
    pub fn enumerate(&self, max_depth: usize) -> Result<CrystalGraph> {
        let mut levels = vec![vec![Partition::empty()]];
        let mut edges = Vec::new();
        for depth in 0..max_depth {
            let mut next = BTreeSet::new();
            for p in &levels[depth] {
                for i in 0..self.kind.modulus() {
                    if let Some(q) = self.lower(p, i)? {
                        edges.push(CrystalEdge {
                            from: p.clone(),
                            to: q.clone(),
                            residue: i,
                        });
                        next.insert(q);
                    }
                }
            }
            levels.push(next.into_iter().rev().collect());
        }
        Ok(CrystalGraph {
            kind: GraphKind::Twisted(self.kind),
            levels,
            edges,
        })
    }
}

pub fn enumerate_twisted(kind: CrystalKind, max_depth: usize) -> Result<CrystalGraph> {
    TwistedCrystal::new(kind)?.enumerate(max_depth)
}
