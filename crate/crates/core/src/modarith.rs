//! Residue bookkeeping for parallelized torus knots.
//!
//! For a coprime pair `(p0, q0)` the two arcs of `T(p0, q0)` cut at the
//! rightmost adjacent slots pass through the braid `a` and `b` times, and
//! meet the meridional direction `c` and `d` times. The four numbers are the
//! unique positive solution of
//!
//! ```text
//! a + b = p0,  a*q0 = -1 (mod p0),  b*q0 = 1 (mod p0)
//! c + d = q0,  c*p0 =  1 (mod q0),  d*p0 = -1 (mod q0)
//! ```
//!
//! and always satisfy `a*d - b*c = -1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Inverse of `x` modulo `m` via the extended Euclidean algorithm.
/// Returns a representative in `0..m`, or `None` when `gcd(x, m) != 1`.
pub fn mod_inverse(x: i64, m: i64) -> Option<i64> {
    if m <= 0 {
        return None;
    }
    let (mut r0, mut r1) = (x.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (s0, s1) = (s1, s0 - k * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoeffQuadruple {
    pub p0: i64,
    pub q0: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl CoeffQuadruple {
    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    /// `(p, q) = (a x1 + b x2, c x1 + d x2)`.
    pub fn apply(&self, x1: i64, x2: i64) -> (i64, i64) {
        (self.a * x1 + self.b * x2, self.c * x1 + self.d * x2)
    }
}

fn check_pair(p0: i64, q0: i64) -> Result<()> {
    if p0 < 2 || q0 < 2 {
        return Err(Error::Degenerate(format!(
            "coefficient system needs p0, q0 >= 2 (got p0 = {p0}, q0 = {q0})"
        )));
    }
    if gcd(p0, q0) != 1 {
        return Err(Error::NotCoprime(p0, q0));
    }
    Ok(())
}

/// Solves the coefficient system for a coprime pair via modular inverses.
pub fn coeff_quadruple(p0: i64, q0: i64) -> Result<CoeffQuadruple> {
    check_pair(p0, q0)?;
    // p0, q0 >= 2 and coprime, so both inverses exist and are nonzero.
    let q_inv = mod_inverse(q0, p0).expect("coprime");
    let p_inv = mod_inverse(p0, q0).expect("coprime");
    let a = (p0 - q_inv) % p0;
    let c = p_inv;
    let quad = CoeffQuadruple {
        p0,
        q0,
        a,
        b: p0 - a,
        c,
        d: q0 - c,
    };
    debug_assert!(verify_quadruple(&quad));
    Ok(quad)
}

/// Exhaustive residue scan over `1..p0` and `1..q0`, collecting every
/// solution. Kept beside the closed-form solver as its verification oracle;
/// the result has exactly one element for every valid pair.
pub fn coeff_quadruple_scan(p0: i64, q0: i64) -> Result<Vec<CoeffQuadruple>> {
    check_pair(p0, q0)?;
    let ab: Vec<(i64, i64)> = (1..p0)
        .filter(|&a| (a * q0 + 1) % p0 == 0)
        .map(|a| (a, p0 - a))
        .filter(|&(_, b)| (b * q0 - 1).rem_euclid(p0) == 0)
        .collect();
    let cd: Vec<(i64, i64)> = (1..q0)
        .filter(|&c| (c * p0 - 1).rem_euclid(q0) == 0)
        .map(|c| (c, q0 - c))
        .filter(|&(_, d)| (d * p0 + 1) % q0 == 0)
        .collect();
    let mut out = Vec::new();
    for &(a, b) in &ab {
        for &(c, d) in &cd {
            out.push(CoeffQuadruple { p0, q0, a, b, c, d });
        }
    }
    Ok(out)
}

/// True iff every invariant of the coefficient system holds.
pub fn verify_quadruple(quad: &CoeffQuadruple) -> bool {
    let CoeffQuadruple { p0, q0, a, b, c, d } = *quad;
    if p0 < 2 || q0 < 2 || gcd(p0, q0) != 1 {
        return false;
    }
    let in_range = 0 < a && a < p0 && 0 < b && b < p0 && 0 < c && c < q0 && 0 < d && d < q0;
    in_range
        && a + b == p0
        && c + d == q0
        && (a * q0).rem_euclid(p0) == p0 - 1
        && (b * q0).rem_euclid(p0) == 1 % p0
        && (c * p0).rem_euclid(q0) == 1 % q0
        && (d * p0).rem_euclid(q0) == q0 - 1
        && a * d - b * c == -1
}

/// `(p, q)` of the parallelization with `x1` strings along arc A and `x2`
/// along arc B.
pub fn parallel_pq(quad: &CoeffQuadruple, x1: i64, x2: i64) -> Result<(i64, i64)> {
    if x1 < 1 || x2 < 1 {
        return Err(Error::OutOfRange(format!(
            "string counts must be positive (got x1 = {x1}, x2 = {x2})"
        )));
    }
    if !verify_quadruple(quad) {
        return Err(Error::OutOfRange(format!("invalid coefficient quadruple {quad:?}")));
    }
    Ok(quad.apply(x1, x2))
}

/// Closed forms for the pair `p0 = (e+1)(k1+k2)+1`, `q0 = e(k1+k2)+1`.
pub fn family_quadruple(e: i64, k1: i64, k2: i64) -> Result<CoeffQuadruple> {
    if e < 1 || k1 < 2 || k2 < 2 {
        return Err(Error::OutOfRange(format!(
            "need e > 0, k1 > 1, k2 > 1 (got e = {e}, k1 = {k1}, k2 = {k2})"
        )));
    }
    let k = k1 + k2;
    Ok(CoeffQuadruple {
        p0: (e + 1) * k + 1,
        q0: e * k + 1,
        a: (e + 1) * (k - 1) + 1,
        b: e + 1,
        c: e * (k - 1) + 1,
        d: e,
    })
}

/// The two arcs of `T(p0, q0)` cut at slots `p0 - 1` and `p0 - 2`, as the
/// ordered lists of top slots each arc enters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotPartition {
    pub p0: i64,
    pub q0: i64,
    /// Arc A, starting at slot `p0 - 1`.
    pub arc_a: Vec<i64>,
    /// Arc B, starting at slot `p0 - 2`.
    pub arc_b: Vec<i64>,
}

impl SlotPartition {
    /// Slot -> arc label (0 for A, 1 for B).
    pub fn labels(&self) -> Vec<u8> {
        let mut out = vec![u8::MAX; self.p0 as usize];
        for &s in &self.arc_a {
            out[s as usize] = 0;
        }
        for &s in &self.arc_b {
            out[s as usize] = 1;
        }
        out
    }
}

/// Steps each arc through the torus braid (top slot `i` exits at bottom slot
/// `i + q0 mod p0`) until it reaches the other arc's starting slot.
pub fn trace_arc_slots(p0: i64, q0: i64) -> Result<SlotPartition> {
    if p0 <= 2 {
        return Err(Error::Degenerate(format!("tracing needs p0 > 2 (got {p0})")));
    }
    if q0 < 1 {
        return Err(Error::OutOfRange(format!("tracing needs q0 > 0 (got {q0})")));
    }
    if gcd(p0, q0) != 1 {
        return Err(Error::NotCoprime(p0, q0));
    }
    let walk = |start: i64, stop: i64| {
        let mut slots = vec![start];
        let mut cur = (start + q0).rem_euclid(p0);
        while cur != stop {
            slots.push(cur);
            cur = (cur + q0).rem_euclid(p0);
        }
        slots
    };
    Ok(SlotPartition {
        p0,
        q0,
        arc_a: walk(p0 - 1, p0 - 2),
        arc_b: walk(p0 - 2, p0 - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(p0: i64, q0: i64, a: i64, b: i64, c: i64, d: i64) -> CoeffQuadruple {
        CoeffQuadruple { p0, q0, a, b, c, d }
    }

    #[test]
    fn solver_examples() {
        assert_eq!(coeff_quadruple(11, 6).unwrap(), quad(11, 6, 9, 2, 5, 1));
        assert_eq!(coeff_quadruple(5, 3).unwrap(), quad(5, 3, 3, 2, 2, 1));
        assert_eq!(coeff_quadruple(3, 2).unwrap(), quad(3, 2, 1, 2, 1, 1));
    }

    #[test]
    fn solver_rejects_degenerate_input() {
        assert!(matches!(coeff_quadruple(6, 4), Err(Error::NotCoprime(6, 4))));
        assert!(matches!(coeff_quadruple(5, 1), Err(Error::Degenerate(_))));
        assert!(matches!(coeff_quadruple(1, 5), Err(Error::Degenerate(_))));
    }

    #[test]
    fn solver_matches_scan_when_q0_exceeds_p0() {
        for (p0, q0) in [(2, 3), (3, 7), (4, 9), (7, 30)] {
            let scan = coeff_quadruple_scan(p0, q0).unwrap();
            assert_eq!(scan, vec![coeff_quadruple(p0, q0).unwrap()]);
        }
    }

    #[test]
    fn parallel_pq_examples() {
        let q95 = coeff_quadruple(9, 5).unwrap();
        assert_eq!((q95.a, q95.b, q95.c, q95.d), (7, 2, 4, 1));
        assert_eq!(parallel_pq(&q95, 2, 3).unwrap(), (20, 11));
        assert_eq!(parallel_pq(&coeff_quadruple(3, 2).unwrap(), 1, 1).unwrap(), (3, 2));
        let (p, q) = parallel_pq(&coeff_quadruple(11, 6).unwrap(), 2, 3).unwrap();
        assert_eq!((p, q), (24, 13));
        assert_eq!(gcd(p, q), 1);
        assert!(parallel_pq(&q95, 0, 3).is_err());
        assert!(parallel_pq(&q95, 2, -1).is_err());
    }

    #[test]
    fn trace_examples() {
        let t = trace_arc_slots(11, 6).unwrap();
        assert_eq!(t.arc_a, vec![10, 5, 0, 6, 1, 7, 2, 8, 3]);
        assert_eq!(t.arc_b, vec![9, 4]);
        let t = trace_arc_slots(3, 2).unwrap();
        assert_eq!(t.arc_a, vec![2]);
        assert_eq!(t.arc_b, vec![1, 0]);
        assert!(trace_arc_slots(2, 3).is_err());
    }

    #[test]
    fn family_quadruple_examples() {
        assert_eq!(family_quadruple(1, 3, 2).unwrap(), quad(11, 6, 9, 2, 5, 1));
        assert_eq!(family_quadruple(1, 2, 2).unwrap(), quad(9, 5, 7, 2, 4, 1));
        assert_eq!(family_quadruple(2, 2, 3).unwrap(), quad(16, 11, 13, 3, 9, 2));
        assert_eq!(coeff_quadruple(16, 11).unwrap(), quad(16, 11, 13, 3, 9, 2));
        assert!(family_quadruple(0, 2, 2).is_err());
        assert!(family_quadruple(1, 1, 2).is_err());
    }

    #[test]
    fn verify_rejects_swapped_entries() {
        assert!(verify_quadruple(&quad(11, 6, 9, 2, 5, 1)));
        assert!(!verify_quadruple(&quad(11, 6, 2, 9, 5, 1)));
        assert!(!verify_quadruple(&quad(11, 6, 9, 2, 1, 5)));
    }

    #[test]
    fn mod_inverse_basics() {
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(-3, 7), Some(2));
        assert_eq!(mod_inverse(4, 8), None);
    }
}
