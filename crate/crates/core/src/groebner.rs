//! Buchberger completion and normal forms for pure binomial ideals.
//!
//! All binomials have unit coefficients, so an S-polynomial or a reduction
//! step of two binomials is again a difference of two monomials. A binomial
//! is reduced by rewriting each of its two monomials to normal form; it lies
//! in the ideal iff both normal forms coincide.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::order::TermOrder;

#[derive(Debug, Clone)]
struct Rule {
    head: Vec<u64>,
    tail: Vec<u64>,
    mask: u64,
}

fn support_mask(m: &[u64]) -> u64 {
    m.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (i, _)| acc | 1 << (i % 64))
}

fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn coprime(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

impl Rule {
    /// Leading monomial first; `None` for the zero binomial.
    fn oriented(plus: Vec<u64>, minus: Vec<u64>, order: &TermOrder) -> Option<Rule> {
        let (head, tail) = match order.cmp(&plus, &minus) {
            Ordering::Equal => return None,
            Ordering::Greater => (plus, minus),
            Ordering::Less => (minus, plus),
        };
        Some(Rule {
            mask: support_mask(&head),
            head,
            tail,
        })
    }

    fn into_binomial(self) -> Binomial {
        Binomial::from_parts(self.head, self.tail)
    }
}

/// Rewrites `m` to its normal form: whenever a rule head divides it, the
/// head factor is replaced by the tail. Each step lowers `m` in the order.
fn reduce_monomial(m: &mut [u64], rules: &[Rule]) {
    'outer: loop {
        let mask = support_mask(m);
        for r in rules {
            if r.mask & !mask == 0 && divides(&r.head, m) {
                for ((e, h), t) in m.iter_mut().zip(&r.head).zip(&r.tail) {
                    *e = *e - h + t;
                }
                continue 'outer;
            }
        }
        return;
    }
}

fn check_dim(b: &Binomial, dim: usize) -> Result<()> {
    if b.dim() == dim {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: dim,
            found: b.dim(),
        })
    }
}

fn rules_of(gens: &[Binomial], order: &TermOrder) -> Result<Vec<Rule>> {
    let mut rules = Vec::with_capacity(gens.len());
    for g in gens {
        check_dim(g, order.dim())?;
        if let Some(r) = Rule::oriented(g.plus().to_vec(), g.minus().to_vec(), order) {
            rules.push(r);
        }
    }
    Ok(rules)
}

/// Remainder of `f` on division by `basis`, sign-normalized under `order`.
///
/// Unique, and zero exactly for ideal members, when `basis` is a Gröbner
/// basis for `order`.
pub fn normal_form(f: &Binomial, basis: &[Binomial], order: &TermOrder) -> Result<Binomial> {
    check_dim(f, order.dim())?;
    let rules = rules_of(basis, order)?;
    let mut plus = f.plus().to_vec();
    let mut minus = f.minus().to_vec();
    reduce_monomial(&mut plus, &rules);
    reduce_monomial(&mut minus, &rules);
    Ok(Binomial::from_parts(plus, minus).normalized(order))
}

struct Completion<'o> {
    order: &'o TermOrder,
    rules: Vec<Rule>,
    queue: BTreeSet<(u64, usize, usize)>,
    pending: BTreeSet<(usize, usize)>,
}

impl<'o> Completion<'o> {
    fn new(order: &'o TermOrder) -> Self {
        Self {
            order,
            rules: Vec::new(),
            queue: BTreeSet::new(),
            pending: BTreeSet::new(),
        }
    }

    /// Reduces `plus - minus` against the current rules and, if nonzero,
    /// appends it and queues its S-pairs.
    fn insert(&mut self, mut plus: Vec<u64>, mut minus: Vec<u64>) {
        reduce_monomial(&mut plus, &self.rules);
        reduce_monomial(&mut minus, &self.rules);
        let Some(rule) = Rule::oriented(plus, minus, self.order) else {
            return;
        };
        let j = self.rules.len();
        for (i, other) in self.rules.iter().enumerate() {
            // Buchberger's first criterion: coprime leading terms
            if coprime(&other.head, &rule.head) {
                continue;
            }
            let deg = self.order.degree(&lcm(&other.head, &rule.head));
            self.queue.insert((deg, j, i));
            self.pending.insert((i, j));
        }
        self.rules.push(rule);
    }

    /// Buchberger's chain criterion.
    fn chain_skips(&self, i: usize, j: usize, l_ij: &[u64]) -> bool {
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        self.rules.iter().enumerate().any(|(l, r)| {
            l != i
                && l != j
                && divides(&r.head, l_ij)
                && !self.pending.contains(&key(i, l))
                && !self.pending.contains(&key(j, l))
        })
    }

    fn run(&mut self) {
        while let Some((_, j, i)) = self.queue.pop_first() {
            self.pending.remove(&(i, j));
            let l_ij = lcm(&self.rules[i].head, &self.rules[j].head);
            if self.chain_skips(i, j, &l_ij) {
                continue;
            }
            let spoly = |r: &Rule| -> Vec<u64> {
                l_ij.iter()
                    .zip(&r.head)
                    .zip(&r.tail)
                    .map(|((l, h), t)| l - h + t)
                    .collect()
            };
            let a = spoly(&self.rules[i]);
            let b = spoly(&self.rules[j]);
            self.insert(a, b);
        }
    }

    /// Minimal, tail-reduced basis sorted by ascending leading monomial.
    fn into_reduced(self) -> Vec<Binomial> {
        let order = self.order;
        let rules = self.rules;
        let keep: Vec<bool> = (0..rules.len())
            .map(|i| {
                !rules.iter().enumerate().any(|(j, r)| {
                    j != i && divides(&r.head, &rules[i].head) && (r.head != rules[i].head || j < i)
                })
            })
            .collect();
        let minimal: Vec<Rule> = rules
            .into_iter()
            .zip(keep)
            .filter_map(|(r, k)| k.then_some(r))
            .collect();
        let mut out: Vec<Rule> = minimal
            .iter()
            .map(|r| {
                let mut tail = r.tail.clone();
                reduce_monomial(&mut tail, &minimal);
                Rule {
                    head: r.head.clone(),
                    tail,
                    mask: r.mask,
                }
            })
            .collect();
        out.sort_by(|a, b| order.cmp(&a.head, &b.head));
        out.into_iter().map(Rule::into_binomial).collect()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Binomial], order: &TermOrder) -> Result<Vec<Binomial>> {
    for g in gens {
        check_dim(g, order.dim())?;
    }
    let mut c = Completion::new(order);
    for g in gens {
        c.insert(g.plus().to_vec(), g.minus().to_vec());
    }
    c.run();
    Ok(c.into_reduced())
}

/// An ideal given by generators together with its reduced Gröbner basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    generators: Vec<Binomial>,
    groebner: Vec<Binomial>,
    order: TermOrder,
}

impl IdealPresentation {
    pub fn from_generators(gens: Vec<Binomial>, order: TermOrder) -> Result<Self> {
        let groebner = buchberger(&gens, &order)?;
        let generators = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.normalized(&order))
            .collect();
        Ok(Self {
            generators,
            groebner,
            order,
        })
    }

    /// Presentation whose generators are given by an already reduced basis.
    pub(crate) fn from_groebner(groebner: Vec<Binomial>, order: TermOrder) -> Self {
        Self {
            generators: groebner.clone(),
            groebner,
            order,
        }
    }

    pub fn zero(order: TermOrder) -> Self {
        Self::from_groebner(Vec::new(), order)
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.generators
    }

    pub fn groebner(&self) -> &[Binomial] {
        &self.groebner
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn ambient_dim(&self) -> usize {
        self.order.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.groebner.is_empty()
    }

    /// Same ideal, Gröbner basis recomputed under `order`.
    pub fn in_order(&self, order: &TermOrder) -> Result<Self> {
        if *order == self.order {
            return Ok(self.clone());
        }
        if order.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: order.dim(),
            });
        }
        let groebner = buchberger(&self.groebner, order)?;
        Ok(Self {
            generators: self
                .generators
                .iter()
                .map(|g| g.normalized(order))
                .collect(),
            groebner,
            order: order.clone(),
        })
    }

    pub fn contains(&self, f: &Binomial) -> Result<bool> {
        Ok(normal_form(f, &self.groebner, &self.order)?.is_zero())
    }

    pub fn contains_all(&self, fs: &[Binomial]) -> Result<bool> {
        for f in fs {
            if !self.contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Degree-one elements `p_h - p_k` of the reduced Gröbner basis.
    pub fn linear_part(&self) -> Vec<Binomial> {
        self.groebner
            .iter()
            .filter(|g| g.is_linear())
            .cloned()
            .collect()
    }
}

pub fn ideal_membership(f: &Binomial, ideal: &IdealPresentation) -> Result<bool> {
    ideal.contains(f)
}

/// Equality of ideals via their reduced Gröbner bases under the first
/// ideal's order.
pub fn ideals_equal(a: &IdealPresentation, b: &IdealPresentation) -> Result<bool> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim(),
            found: b.ambient_dim(),
        });
    }
    let b = b.in_order(a.order())?;
    Ok(a.groebner == b.groebner)
}

/// `I + <gens>`.
pub fn ideal_sum(ideal: &IdealPresentation, gens: &[Binomial]) -> Result<IdealPresentation> {
    for g in gens {
        check_dim(g, ideal.ambient_dim())?;
    }
    let mut all = ideal.groebner.clone();
    all.extend_from_slice(gens);
    let groebner = buchberger(&all, &ideal.order)?;
    let mut generators = ideal.generators.clone();
    generators.extend(
        gens.iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.normalized(&ideal.order)),
    );
    Ok(IdealPresentation {
        generators,
        groebner,
        order: ideal.order.clone(),
    })
}

pub fn linear_part(ideal: &IdealPresentation) -> Vec<Binomial> {
    ideal.linear_part()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn b(u: &[i64]) -> Binomial {
        Binomial::from_difference(u)
    }

    /// 2x2 minors of a 3x3 table, cells row-major.
    fn minors3() -> Vec<Binomial> {
        let mut out = Vec::new();
        for i in 0..3 {
            for h in i + 1..3 {
                for j in 0..3 {
                    for k in j + 1..3 {
                        let mut u = vec![0i64; 9];
                        u[i * 3 + j] += 1;
                        u[h * 3 + k] += 1;
                        u[i * 3 + k] -= 1;
                        u[h * 3 + j] -= 1;
                        out.push(b(&u));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn self_reduction_is_zero() {
        let f = b(&[1, -1, -1, 1]);
        let nf = normal_form(&f, core::slice::from_ref(&f), &TermOrder::degrevlex(4)).unwrap();
        assert!(nf.is_zero());
    }

    #[test]
    fn minor_reduces_modulo_the_minors() {
        let o = TermOrder::degrevlex(9);
        let gb = buchberger(&minors3(), &o).unwrap();
        // p_{1,2} p_{2,1} - p_{1,1} p_{2,2}
        let mut u = vec![0i64; 9];
        u[1] = 1;
        u[3] = 1;
        u[0] = -1;
        u[4] = -1;
        assert!(normal_form(&b(&u), &gb, &o).unwrap().is_zero());
        assert!(normal_form(&b(&u), &minors3(), &o).unwrap().is_zero());
    }

    #[test]
    fn hand_division_example() {
        // p1^2 - p2 p3 divided by p1 - p2 under lex
        let o = TermOrder::lex(3);
        let f = Binomial::new(vec![2, 0, 0], vec![0, 1, 1]).unwrap();
        let nf = normal_form(&f, &[b(&[1, -1, 0])], &o).unwrap();
        assert_eq!(nf, Binomial::new(vec![0, 2, 0], vec![0, 1, 1]).unwrap());
    }

    #[test]
    fn linear_chain_lex() {
        let o = TermOrder::lex(3);
        let gb = buchberger(&[b(&[1, -1, 0]), b(&[0, 1, -1])], &o).unwrap();
        assert_eq!(gb, vec![b(&[0, 1, -1]), b(&[1, 0, -1])]);
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let g = b(&[1, -2, 1]);
        let gb = buchberger(core::slice::from_ref(&g), &TermOrder::degrevlex(3)).unwrap();
        assert_eq!(gb, vec![g.normalized(&TermOrder::degrevlex(3))]);
    }

    #[test]
    fn minors_basis_generates_same_ideal() {
        let o = TermOrder::degrevlex(9);
        let gb = buchberger(&minors3(), &o).unwrap();
        for m in minors3() {
            assert!(normal_form(&m, &gb, &o).unwrap().is_zero());
        }
        let via_minors = IdealPresentation::from_generators(minors3(), o.clone()).unwrap();
        for g in &gb {
            assert!(via_minors.contains(g).unwrap());
        }
        // reduced basis is unique under permutation of the input
        let mut rev = minors3();
        rev.reverse();
        assert_eq!(buchberger(&rev, &o).unwrap(), gb);
    }

    #[test]
    fn sum_and_equality() {
        let o = TermOrder::degrevlex(4);
        let zero = IdealPresentation::zero(o.clone());
        let g = b(&[1, 1, -1, -1]);
        let sum = ideal_sum(&zero, core::slice::from_ref(&g)).unwrap();
        let direct = IdealPresentation::from_generators(vec![g], o.clone()).unwrap();
        assert!(ideals_equal(&sum, &direct).unwrap());
        assert!(ideals_equal(&ideal_sum(&sum, &[]).unwrap(), &sum).unwrap());
        assert!(!ideals_equal(&sum, &zero).unwrap());
        assert!(sum.contains(&Binomial::zero(4)).unwrap());
    }

    #[test]
    fn equality_across_orders() {
        let gens = minors3();
        let a = IdealPresentation::from_generators(gens.clone(), TermOrder::degrevlex(9)).unwrap();
        let c = IdealPresentation::from_generators(gens, TermOrder::lex(9)).unwrap();
        assert!(ideals_equal(&a, &c).unwrap());
        assert!(ideals_equal(&c, &a).unwrap());
    }

    #[test]
    fn dimension_errors() {
        let o = TermOrder::degrevlex(3);
        assert!(matches!(
            normal_form(&b(&[1, -1]), &[], &o),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(buchberger(&[b(&[1, -1])], &o).is_err());
    }
}
