//! Folding `A_{e-1}^{(1)}` by the diagram involution `i -> -i mod e`.
//!
//! The folded Cartan matrix is the twisted affine matrix of the orbit Lie
//! algebra. A path in the twisted crystal expands residue by residue into a
//! path in the e-good lattice, and the endpoint of that path is a
//! Mullineux-fixed partition. [`eta`] computes this map.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{check_modulus, CrystalKind, Partition, ResidueWord};
use crate::twisted::TwistedCrystal;
use crate::typea::{KleshchevCrystal, PathStrategy};

/// The affine Cartan matrix of `A_{e-1}^{(1)}`. For `e = 2` the two nodes are
/// joined twice, giving off-diagonal `-2`.
pub fn cartan_type_a(e: usize) -> Result<Vec<Vec<i64>>> {
    check_modulus(e)?;
    Ok((0..e)
        .map(|i| {
            (0..e)
                .map(|j| {
                    let mut a = if i == j { 2 } else { 0 };
                    if j == (i + 1) % e {
                        a -= 1;
                    }
                    if j == (i + e - 1) % e {
                        a -= 1;
                    }
                    a
                })
                .collect()
        })
        .collect())
}

/// The diagram involution: `0 -> 0`, `i -> e - i`.
pub fn omega(i: usize, e: usize) -> usize {
    (e - i % e) % e
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldedCartan {
    pub e: usize,
    pub ell: usize,
    /// Rows and columns indexed by the orbit representatives `0..=ell`.
    pub matrix: Vec<Vec<i64>>,
    /// Orbit size of each representative.
    pub orbit_sizes: Vec<usize>,
    /// The diagonal of the orbit sums `c_{i,i}`.
    pub c_diag: Vec<i64>,
}

impl FoldedCartan {
    /// `a_{ij} = 0` exactly when `a_{ji} = 0`, unit diagonal 2, nonpositive
    /// off-diagonal.
    pub fn is_generalized_cartan(&self) -> bool {
        let n = self.matrix.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let a = self.matrix[i][j];
                if i == j {
                    a == 2
                } else {
                    a <= 0 && (a == 0) == (self.matrix[j][i] == 0)
                }
            })
        })
    }
}

pub fn fold_cartan(e: usize) -> Result<FoldedCartan> {
    let a = cartan_type_a(e)?;
    for i in 0..e {
        for j in 0..e {
            if a[omega(i, e)][omega(j, e)] != a[i][j] {
                return Err(Error::InternalConsistency(format!(
                    "omega is not a diagram automorphism at ({i},{j})"
                )));
            }
        }
    }
    let ell = e / 2;
    let orbit = |j: usize| -> Vec<usize> {
        let mut out = vec![j];
        let mut k = omega(j, e);
        while k != j {
            out.push(k);
            k = omega(k, e);
        }
        out
    };
    let reps: Vec<usize> = (0..=ell).collect();
    let c = |i: usize, j: usize| -> i64 { orbit(j).into_iter().map(|k| a[i][k]).sum() };
    let c_diag: Vec<i64> = reps.iter().map(|&i| c(i, i)).collect();
    let c_norm: Vec<i64> = c_diag.iter().map(|&d| if d > 0 { d } else { 2 }).collect();
    let mut matrix = vec![vec![0; reps.len()]; reps.len()];
    for (x, &i) in reps.iter().enumerate() {
        for (y, &j) in reps.iter().enumerate() {
            let num = 2 * c(i, j);
            if num % c_norm[y] != 0 {
                return Err(Error::InternalConsistency(format!(
                    "folded entry ({i},{j}) is not integral"
                )));
            }
            matrix[x][y] = num / c_norm[y];
        }
    }
    Ok(FoldedCartan {
        e,
        ell,
        matrix,
        orbit_sizes: reps.iter().map(|&j| orbit(j).len()).collect(),
        c_diag,
    })
}

/// The block of e-good-lattice residues that one twisted arrow `r` becomes.
pub fn expand_residue(r: usize, kind: CrystalKind) -> Result<ResidueWord> {
    let ell = kind.ell();
    if r > ell {
        return Err(Error::ResidueOutOfRange {
            residue: r,
            max: ell,
        });
    }
    Ok(match kind {
        CrystalKind::Odd(_) if r == 0 => vec![0],
        CrystalKind::Odd(_) if r == ell => vec![ell + 1, ell, ell, ell + 1],
        CrystalKind::Odd(_) => vec![r, 2 * ell + 1 - r],
        CrystalKind::Even(_) if r == 0 || r == ell => vec![r],
        CrystalKind::Even(_) => vec![r, 2 * ell - r],
    })
}

pub fn expand_word(word: &[usize], kind: CrystalKind) -> Result<ResidueWord> {
    let mut out = Vec::with_capacity(4 * word.len());
    for &r in word {
        out.extend(expand_residue(r, kind)?);
    }
    Ok(out)
}

/// The Mullineux-fixed partition attached to a twisted crystal vertex.
pub fn eta(twisted: &Partition, kind: CrystalKind) -> Result<Partition> {
    eta_with(twisted, kind, PathStrategy::SmallestResidue)
}

pub fn eta_with(
    twisted: &Partition,
    kind: CrystalKind,
    strategy: PathStrategy,
) -> Result<Partition> {
    let word = TwistedCrystal::new(kind)?.path_with(twisted, strategy)?;
    eta_of_word(&word, kind)
}

/// Expands a twisted path and replays it in the e-good lattice. Every letter
/// must find a cogood node.
pub fn eta_of_word(word: &[usize], kind: CrystalKind) -> Result<Partition> {
    let crystal = KleshchevCrystal::new(kind.e())?;
    let expanded = expand_word(word, kind)?;
    let mut p = Partition::empty();
    for (t, &x) in expanded.iter().enumerate() {
        p = crystal.add_cogood(&p, x).ok_or_else(|| {
            Error::InternalConsistency(format!(
                "step {t} of expanded word {expanded:?}: {p} has no cogood {x}-node"
            ))
        })?;
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub expected: i64,
    pub actual: i64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldReport {
    #[serde(flatten)]
    pub kind: CrystalKind,
    pub twisted: Partition,
    pub image: Partition,
    pub word: ResidueWord,
    /// `letter_counts[r]` is the number of `r`s in `word`.
    pub letter_counts: Vec<usize>,
    pub residue_counts: Vec<usize>,
    pub checks: Vec<RelationCheck>,
}

impl FoldReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Checks the residue-count relations that an image of [`eta`] must satisfy.
///
/// With `a_r` the number of letters `r` in the twisted path and `n` its length:
/// the odd kind has `N_i = a_i` for `i < l`, `N_l = N_{l+1} = 2 a_l`,
/// `N_i = a_{e-i}` for `i > l+1`, and `|image| = 2n - a_0 + 2 a_l`; the even
/// kind has `N_i = a_i` for `i <= l`, `N_i = a_{e-i}` above, and
/// `|image| = 2n - a_0 - a_l`. Besides these, the image is Mullineux-fixed and
/// the parity statements for fixed points hold.
pub fn check_fold_relations(twisted: &Partition, kind: CrystalKind) -> Result<FoldReport> {
    let word = TwistedCrystal::new(kind)?.canonical_path(twisted)?;
    let image = eta_of_word(&word, kind)?;
    let e = kind.e();
    let ell = kind.ell();
    let n = word.len() as i64;
    let mut a = vec![0usize; ell + 1];
    for &r in &word {
        a[r] += 1;
    }
    let counts = image.residue_counts(e)?;
    let size = image.size() as i64;
    let mut checks = Vec::new();
    let mut check = |name: String, expected: i64, actual: i64| {
        checks.push(RelationCheck {
            name,
            expected,
            actual,
            passed: expected == actual,
        })
    };
    for (i, &count) in counts.iter().enumerate() {
        let expected = match kind {
            CrystalKind::Odd(_) if i < ell => a[i],
            CrystalKind::Odd(_) if i == ell || i == ell + 1 => 2 * a[ell],
            CrystalKind::Odd(_) => a[e - i],
            CrystalKind::Even(_) if i <= ell => a[i],
            CrystalKind::Even(_) => a[e - i],
        };
        check(format!("N_{i}"), expected as i64, count as i64);
    }
    let a0 = a[0] as i64;
    let al = a[ell] as i64;
    match kind {
        CrystalKind::Odd(_) => {
            check("size".into(), 2 * n - a0 + 2 * al, size);
            check(
                "N_l - N_(l+1)".into(),
                0,
                counts[ell] as i64 - counts[ell + 1] as i64,
            );
            check("N_l mod 2".into(), 0, counts[ell] as i64 % 2);
            check(
                "(size - N_0) mod 2".into(),
                0,
                (size - counts[0] as i64) % 2,
            );
        }
        CrystalKind::Even(_) => {
            check("size".into(), 2 * n - a0 - al, size);
            check(
                "(size - N_0 - N_l) mod 2".into(),
                0,
                (size - counts[0] as i64 - counts[ell] as i64).rem_euclid(2),
            );
        }
    }
    let fixed = crate::mullineux::mullineux(&image, e)? == image;
    check("mullineux-fixed".into(), 1, fixed as i64);
    Ok(FoldReport {
        kind,
        twisted: twisted.clone(),
        image,
        word,
        letter_counts: a,
        residue_counts: counts,
        checks,
    })
}
