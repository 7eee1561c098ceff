//! A bijection between partitions into distinct parts and self-conjugate
//! partitions.
//!
//! **The map does not preserve size.** `(2,1)` (size 3) goes to `(2,2)`
//! (size 4). It is a bijection between the two infinite sets, not between
//! the sets of partitions of a fixed `n`.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// The largest `r` with `parts[r] >= r`, i.e. the side of the Durfee square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DurfeeDatum {
    pub r: usize,
}

pub fn durfee(p: &Partition) -> DurfeeDatum {
    let r = p
        .parts()
        .iter()
        .enumerate()
        .take_while(|&(i, &part)| part > i)
        .count();
    DurfeeDatum { r }
}

/// `(l_1, l_2 + 1, .., l_s + s - 1, t_{s+1}, .., t_{l_1})` for a distinct-part
/// `l` of length `s`. The tail `t` is read off the columns of the first `s`
/// rows: `t_j = #{i <= s : l_i + i - 1 >= j}`, which makes the result
/// self-conjugate with Durfee length `s`.
///
/// Taking the tail from the conjugate of `l` itself instead would send
/// `(3,2)` to `(3,3,1)`, which is not symmetric.
pub fn eta_tilde(p: &Partition) -> Result<Partition> {
    if !p.has_distinct_parts() {
        return Err(Error::NotDistinct(p.clone()));
    }
    let s = p.len();
    let head: Vec<usize> = p.parts().iter().enumerate().map(|(i, &x)| x + i).collect();
    let tail = (s + 1..=p.part(1)).map(|j| head.iter().filter(|&&h| h >= j).count());
    let parts: Vec<usize> = head.iter().copied().chain(tail).collect();
    let out = Partition::new(parts).map_err(|_| {
        Error::InternalConsistency(format!("eta_tilde({p}) is not weakly decreasing"))
    })?;
    if !out.is_symmetric() {
        return Err(Error::InternalConsistency(format!(
            "eta_tilde({p}) = {out} is not symmetric"
        )));
    }
    Ok(out)
}

/// `(m_1, m_2 - 1, .., m_r - r + 1)` for a self-conjugate `m` with Durfee
/// length `r`.
pub fn eta_tilde_inv(m: &Partition) -> Result<Partition> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric(m.clone()));
    }
    let DurfeeDatum { r } = durfee(m);
    let parts = m.parts()[..r]
        .iter()
        .enumerate()
        .map(|(i, &x)| x - i)
        .collect();
    Partition::new(parts)
        .map_err(|_| Error::InternalConsistency(format!("eta_tilde_inv({m}) is not a partition")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn forward() {
        assert_eq!(eta_tilde(&p("1")).unwrap(), p("1"));
        assert_eq!(eta_tilde(&p("2,1")).unwrap(), p("2,2"));
        assert_eq!(eta_tilde(&p("4,2,1")).unwrap(), p("4,3,3,1"));
        assert_eq!(eta_tilde(&p("3,2")).unwrap(), p("3,3,2"));
        assert_eq!(eta_tilde(&Partition::empty()).unwrap(), Partition::empty());
        assert_eq!(eta_tilde(&p("2,2")), Err(Error::NotDistinct(p("2,2"))));
    }

    #[test]
    fn backward() {
        assert_eq!(eta_tilde_inv(&p("1")).unwrap(), p("1"));
        assert_eq!(eta_tilde_inv(&p("2,2")).unwrap(), p("2,1"));
        assert_eq!(eta_tilde_inv(&p("3,2,1")).unwrap(), p("3,1"));
        assert_eq!(
            eta_tilde_inv(&Partition::empty()).unwrap(),
            Partition::empty()
        );
        assert_eq!(eta_tilde_inv(&p("2")), Err(Error::NotSymmetric(p("2"))));
    }

    #[test]
    fn durfee_lengths() {
        assert_eq!(durfee(&p("3,2,1")).r, 2);
        assert_eq!(durfee(&p("4,3,3,1")).r, 3);
        assert_eq!(durfee(&Partition::empty()).r, 0);
    }
}
