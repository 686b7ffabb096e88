//! Alexander polynomials of braid closures through the reduced Burau
//! representation.
//!
//! Convention: the reduced Burau image of `σ_i` on `n` strands is the
//! identity except on rows and columns `i - 2, i - 1, i` (0-based, clipped to
//! `0..n-1`), where it is
//!
//! ```text
//! | 1  t  0 |              | 1    1     0 |
//! | 0 -t  0 |   inverse    | 0  -1/t    0 |
//! | 0  1  1 |              | 0   1/t    1 |
//! ```
//!
//! so for `n = 2` the image of `σ_1` is `(-t)`. For a braid `β` whose closure
//! is a knot, `det(ψ(β) - I) = ± t^k Δ(t) (1 + t + … + t^{n-1})`.
//!
//! The production path never multiplies polynomial matrices. It evaluates
//! `det(ψ(β) - I)` at the `N`-th roots of unity of two primes close to
//! `2^62` (with `N` a power of two at least twice the degree-span bound
//! `letters + n`), interpolates with an inverse DFT, removes the cyclic wrap
//! by locating the unique long run of zero coefficients, and lifts
//! symmetrically to the integers. Both primes must agree.

use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::modarith::gcd;

/// Square matrix of Laurent polynomials.
pub type LaurentMatrix = Vec<Vec<LaurentPoly>>;

/// The 3x3 block of a generator image (or of its inverse), indexed relative
/// to the block start `i - 2`; `None` marks a structural zero.
fn block_entries<T: Clone>(inverse: bool, one: T, t: T, neg_t: T, t_inv: T, neg_t_inv: T) -> [[Option<T>; 3]; 3] {
    if !inverse {
        [
            [Some(one.clone()), Some(t), None],
            [None, Some(neg_t), None],
            [None, Some(one.clone()), Some(one)],
        ]
    } else {
        [
            [Some(one.clone()), Some(one.clone()), None],
            [None, Some(neg_t_inv), None],
            [None, Some(t_inv), Some(one)],
        ]
    }
}

/// Indices of the 3x3 block for letter index `i` that fall inside the
/// `(n-1)`-dimensional matrix, paired with their position in the block.
fn block_support(n: usize, i: usize) -> impl Iterator<Item = (usize, usize)> {
    let dim = n as isize - 1;
    (0..3).filter_map(move |k| {
        let idx = i as isize - 2 + k as isize;
        (0 <= idx && idx < dim).then_some((k, idx as usize))
    })
}

/// Dense reduced Burau image of one letter.
pub fn generator_image(n: usize, letter: i32) -> LaurentMatrix {
    let dim = n - 1;
    let mut m = identity_matrix(dim);
    let i = letter.unsigned_abs() as usize;
    let block = symbolic_block(letter < 0);
    for (bi, row) in block_support(n, i) {
        for (bj, col) in block_support(n, i) {
            m[row][col] = block[bi][bj].clone().unwrap_or_else(LaurentPoly::zero);
        }
    }
    m
}

fn symbolic_block(inverse: bool) -> [[Option<LaurentPoly>; 3]; 3] {
    block_entries(
        inverse,
        LaurentPoly::one(),
        LaurentPoly::t(),
        LaurentPoly::monomial(-1, 1),
        LaurentPoly::monomial(1, -1),
        LaurentPoly::monomial(-1, -1),
    )
}

pub fn identity_matrix(dim: usize) -> LaurentMatrix {
    (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| if r == c { LaurentPoly::one() } else { LaurentPoly::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &LaurentMatrix, b: &LaurentMatrix) -> LaurentMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![LaurentPoly::zero(); m]; n];
    for (i, row) in a.iter().enumerate() {
        for (k, aik) in row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(aik * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Reduced Burau matrix of a braid with at least two strands, computed
/// symbolically by right-multiplying generator images.
pub fn burau_reduced(w: &BraidWord) -> Result<LaurentMatrix> {
    let n = w.strands();
    if n < 2 {
        return Err(Error::OutOfRange("reduced Burau needs at least 2 strands".into()));
    }
    let mut acc = identity_matrix(n - 1);
    for &g in w.letters() {
        let i = g.unsigned_abs() as usize;
        let block = symbolic_block(g < 0);
        let support: Vec<(usize, usize)> = block_support(n, i).collect();
        for row in acc.iter_mut() {
            let old: Vec<LaurentPoly> = support.iter().map(|&(_, c)| row[c].clone()).collect();
            for &(bj, col) in &support {
                let mut v = LaurentPoly::zero();
                for (idx, &(bk, _)) in support.iter().enumerate() {
                    if let Some(e) = &block[bk][bj] {
                        v = &v + &(&old[idx] * e);
                    }
                }
                row[col] = v;
            }
        }
    }
    Ok(acc)
}

/// Fraction-free (Bareiss) determinant over `Z[t, 1/t]`.
pub fn det_bareiss(m: &LaurentMatrix) -> Result<LaurentPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a = m.clone();
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(&a[n - 1][n - 1] * &LaurentPoly::constant(sign))
}

fn strand_factor(n: usize) -> LaurentPoly {
    LaurentPoly::new(0, vec![1; n])
}

fn check_knot(w: &BraidWord) -> Result<()> {
    let comps = w.component_count();
    if comps != 1 {
        return Err(Error::NotAKnot(comps));
    }
    Ok(())
}

/// Alexander polynomial by symbolic Burau products and a Bareiss
/// determinant. Exact but slow; the reference route for small braids.
pub fn alexander_symbolic(w: &BraidWord) -> Result<LaurentPoly> {
    check_knot(w)?;
    if w.strands() == 1 {
        return Ok(LaurentPoly::one());
    }
    let mut m = burau_reduced(w)?;
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = &row[i] - &LaurentPoly::one();
    }
    let det = det_bareiss(&m)?;
    Ok(det.div_exact(&strand_factor(w.strands()))?.canonical())
}

/// A prime `p` with `2^24 | p - 1` and a primitive root modulo `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NttPrime {
    pub modulus: u64,
    pub generator: u64,
    pub two_adicity: u32,
}

/// `274877906938 * 2^24 + 1` and `274877906937 * 2^24 + 1`, the two largest
/// primes below `2^62` of the form `c * 2^24 + 1`.
pub const PRIMES: [NttPrime; 2] = [
    NttPrime { modulus: 4_611_686_018_326_724_609, generator: 3, two_adicity: 24 },
    NttPrime { modulus: 4_611_686_018_309_947_393, generator: 5, two_adicity: 24 },
];

#[derive(Clone, Copy, Debug)]
struct Fp(u64);

impl Fp {
    #[inline]
    fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 { s - self.0 } else { s }
    }

    #[inline]
    fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + self.0 - b }
    }

    #[inline]
    fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    fn pow(self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    fn inv(self, a: u64) -> u64 {
        self.pow(a, self.0 - 2)
    }

    fn neg(self, a: u64) -> u64 {
        if a == 0 { 0 } else { self.0 - a }
    }
}

/// `det(ψ(w)(t) - I)` modulo `prime.modulus` at a nonzero point `t`.
fn det_at(w: &BraidWord, f: Fp, t: u64) -> u64 {
    let n = w.strands();
    let dim = n - 1;
    let t_inv = f.inv(t);
    let one = 1u64;
    let pos = block_entries(false, one, t, f.neg(t), t_inv, f.neg(t_inv));
    let neg = block_entries(true, one, t, f.neg(t), t_inv, f.neg(t_inv));
    let mut a = vec![0u64; dim * dim];
    for i in 0..dim {
        a[i * dim + i] = 1;
    }
    let mut old = [0u64; 3];
    for &g in w.letters() {
        let i = g.unsigned_abs() as usize;
        let block = if g > 0 { &pos } else { &neg };
        let lo = i.saturating_sub(2);
        let hi = (i + 1).min(dim);
        let base = i as isize - 2;
        for r in 0..dim {
            let row = &mut a[r * dim..(r + 1) * dim];
            old[..hi - lo].copy_from_slice(&row[lo..hi]);
            for (col, out) in row.iter_mut().enumerate().take(hi).skip(lo) {
                let bj = (col as isize - base) as usize;
                let mut v = 0u64;
                for k in lo..hi {
                    let bk = (k as isize - base) as usize;
                    if let Some(e) = block[bk][bj] {
                        v = f.add(v, f.mul(old[k - lo], e));
                    }
                }
                *out = v;
            }
        }
    }
    for i in 0..dim {
        a[i * dim + i] = f.sub(a[i * dim + i], 1);
    }
    det_mod(&mut a, dim, f)
}

fn det_mod(a: &mut [u64], n: usize, f: Fp) -> u64 {
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| a[r * n + k] != 0) else {
            return 0;
        };
        if piv != k {
            for c in 0..n {
                a.swap(k * n + c, piv * n + c);
            }
            det = f.neg(det);
        }
        let pk = a[k * n + k];
        det = f.mul(det, pk);
        let inv = f.inv(pk);
        for r in k + 1..n {
            let factor = f.mul(a[r * n + k], inv);
            if factor == 0 {
                continue;
            }
            for c in k..n {
                let v = f.mul(factor, a[k * n + c]);
                a[r * n + c] = f.sub(a[r * n + c], v);
            }
        }
    }
    det
}

/// Integer coefficients of `det(ψ(w) - I)` up to a power of `t`, recovered
/// modulo one prime. Index 0 is the lowest nonzero coefficient.
fn det_coefficients_mod(w: &BraidWord, prime: NttPrime) -> Result<Vec<i64>> {
    let f = Fp(prime.modulus);
    let bound = w.len() + w.strands();
    let size = (2 * (bound + 1)).next_power_of_two();
    let log = size.trailing_zeros();
    if log > prime.two_adicity {
        return Err(Error::Reconstruction(format!(
            "braid too long: {size} sample points exceed 2^{}",
            prime.two_adicity
        )));
    }
    let omega = f.pow(prime.generator, (prime.modulus - 1) >> log);
    let points: Vec<u64> = {
        let mut pts = Vec::with_capacity(size);
        let mut x = 1u64;
        for _ in 0..size {
            pts.push(x);
            x = f.mul(x, omega);
        }
        pts
    };
    let values: Vec<u64> = points.par_iter().map(|&t| det_at(w, f, t)).collect();

    // inverse DFT: c_k = (1/N) Σ_j v_j ω^{-jk}
    let omega_inv = f.inv(omega);
    let n_inv = f.inv(size as u64 % prime.modulus);
    let cyclic: Vec<u64> = (0..size)
        .into_par_iter()
        .map(|k| {
            let step = f.pow(omega_inv, k as u64);
            let mut x = 1u64;
            let mut acc = 0u64;
            for &v in &values {
                acc = f.add(acc, f.mul(v, x));
                x = f.mul(x, step);
            }
            f.mul(acc, n_inv)
        })
        .collect();

    let Some(start) = start_after_longest_zero_run(&cyclic) else {
        return Err(Error::Reconstruction("determinant vanishes identically".into()));
    };
    let mut coeffs: Vec<i64> = (0..size)
        .map(|k| lift(cyclic[(start + k) % size], prime.modulus))
        .collect();
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    if coeffs.len() > bound + 1 {
        return Err(Error::Reconstruction(format!(
            "recovered span {} exceeds bound {bound}",
            coeffs.len() - 1
        )));
    }
    Ok(coeffs)
}

/// Index just past the longest cyclic run of zeros, or `None` if all zero.
fn start_after_longest_zero_run(c: &[u64]) -> Option<usize> {
    let n = c.len();
    let first_nz = c.iter().position(|&x| x != 0)?;
    let (mut best_len, mut best_end) = (0usize, first_nz);
    let mut run = 0usize;
    for k in 1..=n {
        let idx = (first_nz + k) % n;
        if c[idx] == 0 {
            run += 1;
        } else {
            if run > best_len {
                best_len = run;
                best_end = idx;
            }
            run = 0;
        }
    }
    Some(best_end)
}

fn lift(x: u64, p: u64) -> i64 {
    if x > p / 2 {
        -((p - x) as i64)
    } else {
        x as i64
    }
}

/// `det(ψ(w) - I)` up to a unit, by evaluation and interpolation over both
/// primes. Fails if the primes disagree.
pub fn burau_determinant_modular(w: &BraidWord) -> Result<LaurentPoly> {
    if w.strands() < 2 {
        return Err(Error::OutOfRange("reduced Burau needs at least 2 strands".into()));
    }
    let first = det_coefficients_mod(w, PRIMES[0])?;
    let second = det_coefficients_mod(w, PRIMES[1])?;
    if first != second {
        return Err(Error::Reconstruction("the two primes disagree".into()));
    }
    Ok(LaurentPoly::new(0, first))
}

/// Canonical Alexander polynomial of a knot braid closure.
pub fn alexander_from_braid(w: &BraidWord) -> Result<LaurentPoly> {
    check_knot(w)?;
    if w.strands() == 1 {
        return Ok(LaurentPoly::one());
    }
    let det = burau_determinant_modular(w)?;
    Ok(det.div_exact(&strand_factor(w.strands()))?.canonical())
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))` for coprime `|p|, |q|`.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly> {
    let (p, q) = (p.unsigned_abs(), q.unsigned_abs());
    if p == 0 || q == 0 {
        return Err(Error::OutOfRange("torus parameters must be nonzero".into()));
    }
    if gcd(p as i64, q as i64) != 1 {
        return Err(Error::NotCoprime(p as i64, q as i64));
    }
    if p == 1 || q == 1 {
        return Ok(LaurentPoly::one());
    }
    let num = &LaurentPoly::t_pow_minus_one(p * q) * &LaurentPoly::t_pow_minus_one(1);
    let den = &LaurentPoly::t_pow_minus_one(p) * &LaurentPoly::t_pow_minus_one(q);
    Ok(num.div_exact(&den)?.canonical())
}

/// Alexander polynomial of the `(m, n)`-cable of a knot with polynomial
/// `companion`: `Δ_C(t^m) · Δ_{T(m, n)}(t)`.
pub fn cable_alexander(companion: &LaurentPoly, m: i64, n: i64) -> Result<LaurentPoly> {
    let pattern = torus_alexander(m, n)?;
    let lifted = companion.substitute_power(m.unsigned_abs() as u32);
    Ok(lifted.product(&pattern))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{connected_sum, torus_braid};

    fn poly(c: &[i64]) -> LaurentPoly {
        LaurentPoly::new(0, c.to_vec())
    }

    fn word(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn two_strand_generator_is_minus_t() {
        let m = burau_reduced(&word(2, &[1])).unwrap();
        assert_eq!(m, vec![vec![LaurentPoly::monomial(-1, 1)]]);
    }

    #[test]
    fn letter_and_inverse_cancel() {
        for n in 2..6 {
            for i in 1..n as i32 {
                let m = burau_reduced(&word(n, &[i, -i])).unwrap();
                assert_eq!(m, identity_matrix(n - 1));
                let m = burau_reduced(&word(n, &[-i, i])).unwrap();
                assert_eq!(m, identity_matrix(n - 1));
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        for n in 3..6 {
            for i in 1..n as i32 - 1 {
                let lhs = burau_reduced(&word(n, &[i, i + 1, i])).unwrap();
                let rhs = burau_reduced(&word(n, &[i + 1, i, i + 1])).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        let lhs = burau_reduced(&word(5, &[1, 3])).unwrap();
        let rhs = burau_reduced(&word(5, &[3, 1])).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn trefoil() {
        let w = torus_braid(2, 3).unwrap();
        assert_eq!(alexander_from_braid(&w).unwrap(), poly(&[1, -1, 1]));
        assert_eq!(alexander_symbolic(&w).unwrap(), poly(&[1, -1, 1]));
    }

    #[test]
    fn unknot_and_links() {
        assert_eq!(alexander_from_braid(&BraidWord::identity(1)).unwrap(), LaurentPoly::one());
        assert_eq!(alexander_from_braid(&word(3, &[1, 2])).unwrap(), LaurentPoly::one());
        assert!(matches!(
            alexander_from_braid(&torus_braid(2, 2).unwrap()),
            Err(Error::NotAKnot(2))
        ));
    }

    #[test]
    fn torus_closed_forms() {
        assert_eq!(torus_alexander(3, 4).unwrap(), poly(&[1, -1, 0, 1, 0, -1, 1]));
        assert_eq!(torus_alexander(2, 5).unwrap(), poly(&[1, -1, 1, -1, 1]));
        assert_eq!(torus_alexander(1, 7).unwrap(), LaurentPoly::one());
        assert_eq!(torus_alexander(2, -5).unwrap(), torus_alexander(2, 5).unwrap());
        assert!(torus_alexander(4, 6).is_err());
    }

    #[test]
    fn modular_matches_symbolic_on_small_braids() {
        let cases = [
            word(3, &[1, -2, 1, -2]),               // figure eight
            word(4, &[1, 2, 3, -1, 2, -3, 2]),
            word(3, &[1, 1, 1, 2, -1, 2]),
            torus_braid(5, 3).unwrap(),
        ];
        for w in cases {
            if !w.is_knot() {
                continue;
            }
            assert_eq!(
                alexander_from_braid(&w).unwrap(),
                alexander_symbolic(&w).unwrap(),
                "{w}"
            );
        }
        assert_eq!(
            alexander_from_braid(&word(3, &[1, -2, 1, -2])).unwrap(),
            poly(&[1, -3, 1])
        );
    }

    #[test]
    fn paper_connected_sum_instance() {
        let w = crate::braid::twisted_torus_braid(11, 6, 8, -1).unwrap();
        let expected = torus_alexander(3, 4).unwrap().product(&torus_alexander(2, 5).unwrap());
        assert_eq!(expected.span(), 10);
        assert_eq!(alexander_from_braid(&w).unwrap(), expected);
    }

    #[test]
    fn granny_knot_is_square_of_trefoil() {
        let t = torus_braid(2, 3).unwrap();
        let g = connected_sum(&t, &t).unwrap();
        let tre = alexander_from_braid(&t).unwrap();
        assert_eq!(alexander_from_braid(&g).unwrap(), tre.product(&tre));
    }

    #[test]
    fn zero_run_detection() {
        assert_eq!(start_after_longest_zero_run(&[0, 0, 0, 0]), None);
        assert_eq!(start_after_longest_zero_run(&[5, 0, 0, 0, 0, 7, 0, 1]), Some(5));
        assert_eq!(start_after_longest_zero_run(&[1, 2, 0, 0, 0, 0, 0, 3]), Some(7));
    }
}
