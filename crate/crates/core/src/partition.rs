//! Partitions, nodes and residues.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sequence of residues read along a path in a crystal graph.
pub type ResidueWord = Vec<usize>;

/// An integer partition stored as its weakly decreasing positive parts.
///
/// The derived ordering is lexicographic on the parts; enumerations in this
/// crate list partitions in *descending* lexicographic order, so `(2)` comes
/// before `(1,1)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Fails if the parts increase anywhere or a zero is followed by a
    /// positive part.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(
                parts
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `row`-th part (1-based), zero past the last row.
    pub fn part(&self, row: usize) -> usize {
        assert!(row >= 1, "rows are 1-based");
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.part(node.row)
    }

    /// All nodes of the Young diagram, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |col| Node::new(i + 1, col)))
    }

    /// The conjugate partition: `result[j] = #{i : parts[i] >= j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// True iff no part value occurs `e` or more times.
    pub fn is_e_regular(&self, e: usize) -> Result<bool> {
        check_modulus(e)?;
        Ok(self.is_e_regular_unchecked(e))
    }

    pub(crate) fn is_e_regular_unchecked(&self, e: usize) -> bool {
        let mut run = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            if i > 0 && self.parts[i - 1] == p {
                run += 1;
            } else {
                run = 1;
            }
            if run >= e {
                return false;
            }
        }
        true
    }

    /// Membership in one of the strict partition classes for parameter `f`.
    ///
    /// The gap bounds include the trailing gap `parts[last] - 0`.
    pub fn is_strict_class(&self, f: usize, class: StrictClass) -> Result<bool> {
        check_modulus(f)?;
        Ok(self.is_strict_class_unchecked(f, class))
    }

    pub(crate) fn is_strict_class_unchecked(&self, f: usize, class: StrictClass) -> bool {
        let strict = self.parts.windows(2).all(|w| w[0] != w[1] || w[0] % f == 0);
        if !strict {
            return false;
        }
        let bound = match class {
            StrictClass::Strict => return true,
            StrictClass::Restricted => f,
            StrictClass::DoubleRestricted => 2 * f,
        };
        (1..=self.len()).all(|row| {
            let here = self.part(row);
            let gap = here - self.part(row + 1);
            if here.is_multiple_of(f) {
                gap < bound
            } else {
                gap <= bound
            }
        })
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// Number of nodes of each type-A residue `0..e`.
    pub fn residue_counts(&self, e: usize) -> Result<Vec<usize>> {
        check_modulus(e)?;
        let mut counts = vec![0; e];
        for node in self.nodes() {
            counts[node.residue_type_a(e).value()] += 1;
        }
        Ok(counts)
    }

    /// Type-A residues of every node, one row per part.
    pub fn residue_rows_type_a(&self, e: usize) -> Result<Vec<Vec<usize>>> {
        check_modulus(e)?;
        Ok(self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                (1..=p)
                    .map(|col| Node::new(i + 1, col).residue_type_a(e).value())
                    .collect()
            })
            .collect())
    }

    /// Column residues of every node for a twisted kind, one row per part.
    pub fn residue_rows_twisted(&self, kind: CrystalKind) -> Vec<Vec<usize>> {
        self.parts
            .iter()
            .map(|&p| (1..=p).map(|col| kind.residue(col).value()).collect())
            .collect()
    }

    /// The partition with one box appended to `row`, if that is a partition.
    pub(crate) fn with_box_added(&self, row: usize) -> Option<Partition> {
        let len = self.len();
        if row == 0 || row > len + 1 {
            return None;
        }
        if row > 1 && self.part(row - 1) <= self.part(row) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == len + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// The partition with the last box of `row` removed, if that is a partition.
    pub(crate) fn with_box_removed(&self, row: usize) -> Option<Partition> {
        if row == 0 {
            return None;
        }
        let here = self.part(row);
        if here == 0 || self.part(row + 1) >= here {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// Sets the length of `row`, if the result is still a partition.
    pub(crate) fn with_row_len(&self, row: usize, new_len: usize) -> Option<Partition> {
        let mut parts = self.parts.clone();
        if row == 0 || row > parts.len() + 1 {
            return None;
        }
        if row == parts.len() + 1 {
            if new_len == 0 {
                return Some(self.clone());
            }
            parts.push(new_len);
        } else {
            parts[row - 1] = new_len;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return None;
        }
        Some(Partition { parts })
    }
}

pub(crate) fn check_modulus(e: usize) -> Result<()> {
    if e < 2 {
        Err(Error::InvalidModulus(e))
    } else {
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Canonical text form: comma-separated parts, `-` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(s.to_string()))?;
        if parts.contains(&0) {
            return Err(Error::Parse(s.to_string()));
        }
        Partition::new(parts).map_err(|_| Error::Parse(s.to_string()))
    }
}

/// A cell `(row, col)` of a Young diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "nodes are 1-based");
        Node { row, col }
    }

    /// `col - row` modulo `e`.
    pub fn residue_type_a(self, e: usize) -> Residue {
        Residue::new(self.col as i64 - self.row as i64, e)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An element of `Z/mZ`, always stored reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Residue {
    value: usize,
    modulus: usize,
}

impl Residue {
    pub fn new(value: i64, modulus: usize) -> Self {
        assert!(modulus >= 2, "residue modulus must be at least 2");
        let m = modulus as i64;
        Residue {
            value: value.rem_euclid(m) as usize,
            modulus,
        }
    }

    pub fn value(self) -> usize {
        self.value
    }

    pub fn modulus(self) -> usize {
        self.modulus
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Which strictness condition a partition must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StrictClass {
    /// Equal parts only when divisible by `f`.
    Strict,
    /// Strict, with gaps at most `f` (below `f` at multiples of `f`).
    Restricted,
    /// Strict, with gaps at most `2f` (below `2f` at multiples of `f`).
    DoubleRestricted,
}

/// The two twisted affine types reached by folding `A_{e-1}^{(1)}`.
///
/// `Odd(l)` is `e = 2l+1` and type `A_{2l}^{(2)}`, `Even(l)` is `e = 2l` and
/// type `D_{l+1}^{(2)}`. Residues of the twisted crystal live in `Z/(l+1)Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "ell", rename_all = "lowercase")]
pub enum CrystalKind {
    Odd(usize),
    Even(usize),
}

impl CrystalKind {
    pub fn odd(ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidRank(ell));
        }
        Ok(CrystalKind::Odd(ell))
    }

    pub fn even(ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidRank(ell));
        }
        Ok(CrystalKind::Even(ell))
    }

    /// The kind whose folding comes from `A_{e-1}^{(1)}`.
    pub fn from_e(e: usize) -> Result<Self> {
        check_modulus(e)?;
        if e % 2 == 1 {
            Ok(CrystalKind::Odd(e / 2))
        } else {
            Ok(CrystalKind::Even(e / 2))
        }
    }

    pub fn ell(self) -> usize {
        match self {
            CrystalKind::Odd(l) | CrystalKind::Even(l) => l,
        }
    }

    pub fn e(self) -> usize {
        match self {
            CrystalKind::Odd(l) => 2 * l + 1,
            CrystalKind::Even(l) => 2 * l,
        }
    }

    /// Strictness parameter of the vertex partitions: `e` for the odd kind,
    /// `l+1` for the even kind.
    pub fn strictness(self) -> usize {
        match self {
            CrystalKind::Odd(l) => 2 * l + 1,
            CrystalKind::Even(l) => l + 1,
        }
    }

    pub fn class(self) -> StrictClass {
        match self {
            CrystalKind::Odd(_) => StrictClass::Restricted,
            CrystalKind::Even(_) => StrictClass::DoubleRestricted,
        }
    }

    /// Modulus of twisted residues, `l+1`.
    pub fn modulus(self) -> usize {
        self.ell() + 1
    }

    /// Whether `p` is a vertex of this kind's crystal.
    pub fn contains(self, p: &Partition) -> bool {
        p.is_strict_class_unchecked(self.strictness(), self.class())
    }

    fn period(self) -> usize {
        match self {
            CrystalKind::Odd(l) => 2 * l + 1,
            CrystalKind::Even(l) => 2 * l + 2,
        }
    }

    /// Column residue `0,1,..,l,..,1,0` (odd) or `0,1,..,l,l,..,1,0` (even),
    /// repeated from column 1.
    pub fn residue(self, col: usize) -> Residue {
        assert!(col >= 1, "columns are 1-based");
        let period = self.period();
        let k = (col - 1) % period;
        let value = if k <= self.ell() { k } else { period - 1 - k };
        Residue::new(value as i64, self.modulus())
    }

    pub fn name(self) -> &'static str {
        match self {
            CrystalKind::Odd(_) => "odd",
            CrystalKind::Even(_) => "even",
        }
    }
}

impl fmt::Display for CrystalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrystalKind::Odd(l) => write!(f, "Odd({l})"),
            CrystalKind::Even(l) => write!(f, "Even({l})"),
        }
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The `e`-regular partitions of `n` in descending lexicographic order.
pub fn regular_partitions(n: usize, e: usize) -> Result<Vec<Partition>> {
    check_modulus(e)?;
    Ok(partitions_of(n)
        .into_iter()
        .filter(|p| p.is_e_regular_unchecked(e))
        .collect())
}

/// Vertices of a twisted crystal of size `n`, filtered by the class predicate.
pub fn class_members(n: usize, kind: CrystalKind) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| kind.contains(p))
        .collect()
}
