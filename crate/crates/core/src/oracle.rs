//! Brute-force checks that do not go through the Gröbner engine.
//!
//! Kernel vectors are enumerated from the defining condition `u^T A = 0`
//! using a separate rational elimination; the only engine call is the final
//! normal-form test in [`check_completeness`].

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::groebner::{normal_form, IdealPresentation};
use crate::lattice::ModelMatrix;
use crate::models::linear_binomial_pairs;

pub const DEFAULT_BOUND: u32 = 3;
pub const DEFAULT_MAX_K: usize = 12;

/// Enumeration box and feasibility guard.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum absolute entry of enumerated exponent vectors.
    pub bound: u32,
    /// Largest number of variables accepted.
    pub max_k: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            bound: DEFAULT_BOUND,
            max_k: DEFAULT_MAX_K,
        }
    }
}

impl OracleConfig {
    pub fn with_bound(bound: u32) -> Self {
        Self {
            bound,
            ..Self::default()
        }
    }
}

/// Solution space of `u^T A = 0` over the rationals, as pivot coordinates
/// written in terms of free ones: `den_p * u_p = -sum_f num_pf * u_f`.
struct RationalKernel {
    free: Vec<usize>,
    pivots: Vec<(usize, Vec<i128>, i128)>,
}

fn rational_kernel(m: &ModelMatrix) -> Result<RationalKernel> {
    let k = m.nrows();
    let n = m.ncols();
    // rows of A^T: one equation per column of A
    let mut eqs: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            (0..k)
                .map(|i| BigRational::from_integer(BigInt::from(m.entry(i, j))))
                .collect()
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&p| !eqs[p][c].is_zero()) else {
            continue;
        };
        eqs.swap(r, p);
        let inv = eqs[r][c].recip();
        for x in eqs[r].iter_mut() {
            *x *= &inv;
        }
        for q in 0..n {
            if q != r && !eqs[q][c].is_zero() {
                let f = eqs[q][c].clone();
                let row = eqs[r].clone();
                for (x, y) in eqs[q].iter_mut().zip(&row) {
                    *x -= &f * y;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    let free: Vec<usize> = (0..k).filter(|c| !pivot_cols.contains(c)).collect();
    let mut pivots = Vec::new();
    for (row, &p) in pivot_cols.iter().enumerate() {
        let coeffs: Vec<&BigRational> = free.iter().map(|&f| &eqs[row][f]).collect();
        let den = coeffs.iter().fold(BigInt::one(), |acc, q| {
            num_integer::Integer::lcm(&acc, q.denom())
        });
        let nums = coeffs
            .iter()
            .map(|q| {
                (q.numer() * (&den / q.denom()))
                    .to_i128()
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        pivots.push((p, nums, den.to_i128().ok_or(Error::Overflow)?));
    }
    Ok(RationalKernel { free, pivots })
}

/// Every nonzero `u` with `|u_i| <= bound` and `u^T A = 0`, one per sign
/// pair (first nonzero entry positive), sorted.
pub fn enumerate_kernel_vectors(m: &ModelMatrix, config: &OracleConfig) -> Result<Vec<Vec<i64>>> {
    let k = m.nrows();
    if k > config.max_k {
        return Err(Error::GuardExceeded {
            k,
            max: config.max_k,
        });
    }
    let kernel = rational_kernel(m)?;
    let bound = i64::from(config.bound);
    let mut found = BTreeSet::new();
    let mut free_vals = vec![-bound; kernel.free.len()];
    if kernel.free.is_empty() {
        return Ok(Vec::new());
    }
    loop {
        let mut u = vec![0i64; k];
        for (&f, &x) in kernel.free.iter().zip(&free_vals) {
            u[f] = x;
        }
        let mut ok = true;
        for (p, nums, den) in &kernel.pivots {
            let s: i128 = nums
                .iter()
                .zip(&free_vals)
                .map(|(a, &x)| a * i128::from(x))
                .sum();
            if s % den != 0 || (s / den).abs() > i128::from(bound) {
                ok = false;
                break;
            }
            u[*p] = -(s / den) as i64;
        }
        if ok {
            if let Some(first) = u.iter().find(|&&x| x != 0) {
                if *first > 0 && annihilates(&u, m) {
                    found.insert(u);
                }
            }
        }
        // odometer over the free coordinates
        let mut pos = 0;
        loop {
            if pos == free_vals.len() {
                return Ok(found.into_iter().collect());
            }
            if free_vals[pos] < bound {
                free_vals[pos] += 1;
                break;
            }
            free_vals[pos] = -bound;
            pos += 1;
        }
    }
}

fn annihilates(u: &[i64], m: &ModelMatrix) -> bool {
    (0..m.ncols()).all(|j| {
        u.iter()
            .zip(m.rows())
            .map(|(&x, r)| i128::from(x) * i128::from(r[j]))
            .sum::<i128>()
            == 0
    })
}

/// Binomials of [`enumerate_kernel_vectors`].
pub fn enumerate_kernel_binomials(m: &ModelMatrix, config: &OracleConfig) -> Result<Vec<Binomial>> {
    Ok(enumerate_kernel_vectors(m, config)?
        .iter()
        .map(|u| Binomial::from_difference(u))
        .collect())
}

/// Every bounded kernel binomial reduces to zero modulo the ideal, and every
/// Gröbner basis element lies in the kernel.
pub fn check_completeness(
    ideal: &IdealPresentation,
    m: &ModelMatrix,
    config: &OracleConfig,
) -> Result<bool> {
    if ideal.ambient_dim() != m.nrows() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: ideal.ambient_dim(),
        });
    }
    if !ideal
        .groebner()
        .iter()
        .all(|g| annihilates(&g.difference(), m))
    {
        return Ok(false);
    }
    for b in enumerate_kernel_binomials(m, config)? {
        if !normal_form(&b, ideal.groebner(), ideal.order())?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compares the closed-form linear criterion with a direct scan of row
/// pairs under the merged parametrization.
pub fn check_linear_criterion(m: &ModelMatrix, a: usize, b: usize) -> Result<bool> {
    let criterion = linear_binomial_pairs(m, a, b)?;
    let images: Vec<Vec<u64>> = m
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != b)
                .map(|(j, &x)| if j == a { x + r[b] } else { x })
                .collect()
        })
        .collect();
    let mut scanned = Vec::new();
    for h in 0..images.len() {
        for k in h + 1..images.len() {
            if images[h] == images[k] {
                scanned.push((h, k));
            }
        }
    }
    Ok(criterion == scanned)
}
