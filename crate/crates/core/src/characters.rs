//! Principal specialized characters of the twisted basic representations and
//! the counting identities they satisfy against Mullineux-fixed partitions.
//!
//! For the odd kind (`e = 2l+1`) the character is `prod 1/(1-t^i)` over odd
//! `i` not divisible by `e`, and its degree-`n` coefficient equals
//! `sum_{m+m'<=n} N(2n-m+2m', m, 2m')`. For the even kind it is the product
//! over all odd `i`, and the coefficient equals `sum_{m+m'<=n} N(2n-m-m', m, m')`.
//! Here `N(s, m, m')` counts Mullineux-fixed `e`-regular partitions of `s`
//! with `m` nodes of residue 0 and `m'` nodes of residue `l`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mullineux::{fixed_set, FixedPointRecord};
use crate::partition::{check_modulus, CrystalKind};
use crate::twisted::enumerate_twisted;

/// Coefficients of a power series in `t`, truncated after degree `trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCoeffs {
    coeffs: Vec<BigUint>,
}

impl SeriesCoeffs {
    /// `prod_{i in factors} 1/(1 - t^i)` up to degree `trunc`.
    pub fn inverse_product(factors: impl IntoIterator<Item = usize>, trunc: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); trunc + 1];
        coeffs[0] = BigUint::one();
        for i in factors {
            assert!(i >= 1, "factor exponents are positive");
            for k in i..=trunc {
                let lower = coeffs[k - i].clone();
                coeffs[k] += lower;
            }
        }
        SeriesCoeffs { coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigUint {
        &self.coeffs[n]
    }
}

/// Exponents `i <= trunc` appearing in the product for `kind`.
pub fn character_exponents(kind: CrystalKind, trunc: usize) -> Vec<usize> {
    (1..=trunc)
        .step_by(2)
        .filter(|&i| match kind {
            CrystalKind::Odd(_) => i % kind.e() != 0,
            CrystalKind::Even(_) => true,
        })
        .collect()
}

pub fn character_series(kind: CrystalKind, trunc: usize) -> SeriesCoeffs {
    SeriesCoeffs::inverse_product(character_exponents(kind, trunc), trunc)
}

/// `N(n, m, m')` for all fixed partitions of size at most `max_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountsTable {
    pub e: usize,
    pub ell: usize,
    pub max_size: usize,
    entries: BTreeMap<(usize, usize, usize), u64>,
}

impl CountsTable {
    /// Groups fixed-point records by size, `N_0` and `N_l`.
    pub fn from_records<'a>(
        e: usize,
        max_size: usize,
        records: impl IntoIterator<Item = &'a FixedPointRecord>,
    ) -> Result<Self> {
        check_modulus(e)?;
        let ell = e / 2;
        let mut entries = BTreeMap::new();
        for r in records {
            if r.residue_profile.len() != e || r.n > max_size {
                return Err(Error::InternalConsistency(format!(
                    "record {} does not fit a table for e={e}, max size {max_size}",
                    r.partition
                )));
            }
            let key = (r.n, r.residue_profile[0], r.residue_profile[ell]);
            *entries.entry(key).or_insert(0) += 1;
        }
        Ok(CountsTable {
            e,
            ell,
            max_size,
            entries,
        })
    }

    /// Zero outside the table's support. Panics if `n` exceeds `max_size`.
    pub fn get(&self, n: usize, m: usize, m_prime: usize) -> u64 {
        assert!(
            n <= self.max_size,
            "size {n} beyond table bound {}",
            self.max_size
        );
        self.entries.get(&(n, m, m_prime)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Entries that break the parity constraints on fixed points: for odd `e`,
    /// `N_l` and `n - N_0` are even; for even `e`, `n - N_0 - N_l` is even.
    pub fn parity_violations(&self) -> Vec<(usize, usize, usize)> {
        self.entries
            .keys()
            .copied()
            .filter(|&(n, m, mp)| {
                if self.e % 2 == 1 {
                    mp % 2 != 0 || (n - m) % 2 != 0
                } else {
                    (n as i64 - m as i64 - mp as i64).rem_euclid(2) != 0
                }
            })
            .collect()
    }
}

pub fn counts_table(e: usize, max_size: usize) -> Result<CountsTable> {
    let mut records = Vec::new();
    for n in 0..=max_size {
        records.extend(fixed_set(e, n)?);
    }
    CountsTable::from_records(e, max_size, &records)
}

/// Largest fixed-partition size the identity needs up to degree `max_deg`.
pub fn required_size(kind: CrystalKind, max_deg: usize) -> usize {
    match kind {
        CrystalKind::Odd(_) => 4 * max_deg,
        CrystalKind::Even(_) => 2 * max_deg,
    }
}

/// Right-hand side of the identity at degree `n`.
pub fn fixed_point_sum(kind: CrystalKind, table: &CountsTable, n: usize) -> BigUint {
    let mut total = BigUint::zero();
    for m in 0..=n {
        for mp in 0..=n - m {
            let count = match kind {
                CrystalKind::Odd(_) => table.get(2 * n - m + 2 * mp, m, 2 * mp),
                CrystalKind::Even(_) => table.get(2 * n - m - mp, m, mp),
            };
            total += count;
        }
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub degree: usize,
    #[serde(serialize_with = "as_decimal")]
    pub lhs: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub rhs_counts: BigUint,
    pub rhs_crystal: u64,
    pub ok: bool,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    #[serde(flatten)]
    pub kind: CrystalKind,
    pub max_deg: usize,
    pub rows: Vec<IdentityRow>,
    pub first_failure: Option<usize>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Compares, degree by degree, the character coefficient, the number of
/// twisted crystal vertices of that size, and the fixed-point sum.
pub fn verify_identity(kind: CrystalKind, max_deg: usize) -> Result<IdentityReport> {
    let table = counts_table(kind.e(), required_size(kind, max_deg))?;
    verify_identity_with(kind, max_deg, &table)
}

/// As [`verify_identity`], with a precomputed table covering
/// [`required_size`].
pub fn verify_identity_with(
    kind: CrystalKind,
    max_deg: usize,
    table: &CountsTable,
) -> Result<IdentityReport> {
    if table.e != kind.e() || table.max_size < required_size(kind, max_deg) {
        return Err(Error::InternalConsistency(format!(
            "counts table (e={}, max size {}) does not cover {kind} up to degree {max_deg}",
            table.e, table.max_size
        )));
    }
    let series = character_series(kind, max_deg);
    let census = enumerate_twisted(kind, max_deg)?.level_sizes();
    let rows: Vec<IdentityRow> = (0..=max_deg)
        .map(|n| {
            let lhs = series.coeff(n).clone();
            let rhs_counts = fixed_point_sum(kind, table, n);
            let rhs_crystal = census[n] as u64;
            let ok = lhs == rhs_counts && lhs == BigUint::from(rhs_crystal);
            IdentityRow {
                degree: n,
                lhs,
                rhs_counts,
                rhs_crystal,
                ok,
            }
        })
        .collect();
    let first_failure = rows.iter().find(|r| !r.ok).map(|r| r.degree);
    Ok(IdentityReport {
        kind,
        max_deg,
        rows,
        first_failure,
    })
}
