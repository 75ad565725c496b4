//! From a kernel lattice to its toric ideal.
//!
//! The lattice basis binomials generate an ideal `I_L` whose saturation
//! `I_L : (p_1 ... p_k)^inf` is the toric ideal. Saturation is done one
//! variable at a time: for a homogeneous ideal and a reverse lexicographic
//! order with `p_v` smallest, dividing every element of the reduced Gröbner
//! basis by its largest power of `p_v` yields generators of `I : p_v^inf`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, IdealPresentation};
use crate::lattice::LatticeBasis;
use crate::order::TermOrder;

/// The toric ideal of the lattice, presented by its reduced Gröbner basis
/// under `order`.
///
/// A lattice without an attached grading must be homogeneous in the
/// standard grading. Coordinates of weight zero must carry unit lattice
/// vectors; they contribute the generators `p_i - 1`.
pub fn lattice_to_toric(lattice: &LatticeBasis, order: &TermOrder) -> Result<IdealPresentation> {
    let dim = lattice.ambient_dim();
    if order.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: order.dim(),
        });
    }
    let vectors = lattice.vectors_i64()?;
    let grading: Vec<u64> = match lattice.grading() {
        Some(w) => w.to_vec(),
        None if vectors.iter().all(|v| v.iter().sum::<i64>() == 0) => vec![1; dim],
        None => return Err(Error::Ungraded),
    };

    let mut units = Vec::new();
    let mut active = Vec::new();
    for (i, &w) in grading.iter().enumerate() {
        if w == 0 {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            if !lattice.contains(&e) {
                return Err(Error::Ungraded);
            }
            units.push(i);
        } else {
            active.push(i);
        }
    }

    let weights: Vec<u64> = active.iter().map(|&i| grading[i]).collect();
    let mut gens: Vec<Binomial> = Vec::new();
    for v in &vectors {
        let projected: Vec<i64> = active.iter().map(|&i| v[i]).collect();
        let b = Binomial::from_difference(&projected);
        if !b.is_zero() && !gens.contains(&b) {
            gens.push(b);
        }
    }

    for var in 0..active.len() {
        if gens.is_empty() {
            break;
        }
        let round = TermOrder::weighted_revlex_last(weights.clone(), var);
        let basis = buchberger(&gens, &round)?;
        gens.clear();
        for g in basis {
            let g = g.cancel_common();
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
    }

    let mut lifted: Vec<Binomial> = gens
        .iter()
        .map(|g| {
            let mut plus = vec![0u64; dim];
            let mut minus = vec![0u64; dim];
            for (pos, &i) in active.iter().enumerate() {
                plus[i] = g.plus()[pos];
                minus[i] = g.minus()[pos];
            }
            Binomial::from_parts(plus, minus)
        })
        .collect();
    for &i in &units {
        let mut plus = vec![0u64; dim];
        plus[i] = 1;
        lifted.push(Binomial::from_parts(plus, vec![0; dim]));
    }
    let groebner = buchberger(&lifted, order)?;
    Ok(IdealPresentation::from_groebner(groebner, order.clone()))
}
