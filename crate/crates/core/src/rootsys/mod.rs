//! Exact root-system primitives for type B_n: positive roots, rho, the
//! signed-permutation action, inversion lengths, Levi data for the maximal
//! parabolic indexed by k, and restriction of weights to the split component
//! and its complement.

mod halfint;
mod perm;
mod weight;

pub use halfint::HalfInt;
pub use perm::SignedPermutation;
pub use weight::Weight;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rank n together with the index 1 <= k <= n of a maximal parabolic; the
/// Levi factor is GL_k x SO_{2l+1} with l = n - k.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct RankContext {
    n: usize,
    k: usize,
}

impl RankContext {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(0));
        }
        if k == 0 || k > n {
            return Err(Error::InvalidParabolic { n, k });
        }
        Ok(RankContext { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// l = n - k, the rank of the orthogonal Levi block.
    pub fn l(&self) -> usize {
        self.n - self.k
    }

    pub fn is_siegel(&self) -> bool {
        self.k == self.n
    }
}

/// The n^2 positive roots of B_n: eps_i - eps_j and eps_i + eps_j for i < j,
/// and the short roots eps_i.
pub fn positive_roots(n: usize) -> Result<Vec<Weight>> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    let mut roots = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in (i + 1)..=n {
            let mut r = Weight::zero(n);
            r.set_coord(i, Rational64::from_integer(1));
            r.set_coord(j, Rational64::from_integer(-1));
            roots.push(r);
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            let mut r = Weight::zero(n);
            r.set_coord(i, Rational64::from_integer(1));
            r.set_coord(j, Rational64::from_integer(1));
            roots.push(r);
        }
    }
    for i in 1..=n {
        roots.push(Weight::epsilon(i, n));
    }
    Ok(roots)
}

/// Half the sum of the positive roots: (n - 1/2, n - 3/2, ..., 1/2).
pub fn rho(n: usize) -> Result<Weight> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    Ok(Weight::from_half_ints(
        &(1..=n)
            .map(|i| HalfInt::from_twice(2 * (n as i64 - i as i64) + 1))
            .collect::<Vec<_>>(),
    ))
}

/// The simple root alpha_i: eps_i - eps_{i+1} for i < n, eps_n for i = n.
pub fn simple_root(i: usize, n: usize) -> Weight {
    debug_assert!(1 <= i && i <= n);
    if i < n {
        let mut r = Weight::zero(n);
        r.set_coord(i, Rational64::from_integer(1));
        r.set_coord(i + 1, Rational64::from_integer(-1));
        r
    } else {
        Weight::epsilon(n, n)
    }
}

/// Simple roots of the semisimple Levi part M_k: the GL-block roots
/// alpha_1..alpha_{k-1} and the SO-block roots alpha_{k+1}..alpha_n
/// (the short root alpha_n only when l >= 1).
pub fn levi_simple_roots(ctx: RankContext) -> Vec<Weight> {
    let (n, k) = (ctx.n(), ctx.k());
    let mut roots = Vec::new();
    for i in 1..k {
        roots.push(simple_root(i, n));
    }
    for i in (k + 1)..=n {
        roots.push(simple_root(i, n));
    }
    roots
}

/// Deterministic set of positive roots, memoized per rank: the membership
/// tests below run inside tight enumeration loops.
fn positive_root_set(n: usize) -> Result<Arc<BTreeSet<Weight>>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<BTreeSet<Weight>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut guard = cache.lock().expect("positive-root cache poisoned");
    if let Some(set) = guard.get(&n) {
        return Ok(Arc::clone(set));
    }
    let set: Arc<BTreeSet<Weight>> = Arc::new(positive_roots(n)?.into_iter().collect());
    guard.insert(n, Arc::clone(&set));
    Ok(set)
}

/// A weight is a negative root iff its negation is a positive root.
pub fn is_negative_root(beta: &Weight, n: usize) -> Result<bool> {
    beta.check_len(n)?;
    Ok(positive_root_set(n)?.contains(&-beta))
}

pub fn is_positive_root(beta: &Weight, n: usize) -> Result<bool> {
    beta.check_len(n)?;
    Ok(positive_root_set(n)?.contains(beta))
}

/// Coxeter length as an inversion count: the number of positive roots sent
/// to negative roots.
pub fn inv_length(w: &SignedPermutation) -> Result<usize> {
    let n = w.rank();
    let positives = positive_root_set(n)?;
    let mut count = 0;
    for gamma in positives.iter() {
        let image = w.act(gamma)?;
        if positives.contains(&-&image) {
            count += 1;
        }
    }
    Ok(count)
}

/// Longest element of the Weyl group of the Levi L_k: the order reversal on
/// the GL_k block and -1 on the SO_{2l+1} block.
pub fn longest_levi(ctx: RankContext) -> SignedPermutation {
    let (n, k) = (ctx.n(), ctx.k());
    let mut targets = Vec::with_capacity(n);
    let mut signs = Vec::with_capacity(n);
    for i in 1..=n {
        if i <= k {
            targets.push(k - i); // 0-based: eps_i -> eps_{k+1-i}
            signs.push(1);
        } else {
            targets.push(i - 1);
            signs.push(-1);
        }
    }
    SignedPermutation::from_parts_unchecked(targets, signs)
}

/// Membership test for the set of Kostant representatives W^{P_k}:
/// w^{-1}(alpha) must be a positive root for every simple root alpha of the
/// Levi block M_k.
pub fn is_kostant(w: &SignedPermutation, ctx: RankContext) -> Result<bool> {
    if w.rank() != ctx.n() {
        return Err(Error::DimensionMismatch {
            expected: ctx.n(),
            got: w.rank(),
        });
    }
    let winv = w.inverse();
    let positives = positive_root_set(ctx.n())?;
    for alpha in levi_simple_roots(ctx) {
        if !positives.contains(&winv.act(&alpha)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The alpha_k-coefficient of the restriction of `beta` to the split
/// component a_k; since alpha_k restricts to (1/k) sum_{i<=k} eps_i this is
/// just the sum of the first k coordinates.
pub fn restrict_a(beta: &Weight, ctx: RankContext) -> Result<Rational64> {
    beta.check_len(ctx.n())?;
    Ok(beta.coords()[..ctx.k()]
        .iter()
        .fold(Rational64::zero(), |a, c| a + c))
}

/// The complement of the a_k-part: subtracts the average of the first k
/// coordinates from each of them and leaves coordinates k+1..n untouched.
/// The first k coordinates of the result sum to zero; denominators divide 2k.
pub fn restrict_b(beta: &Weight, ctx: RankContext) -> Result<Weight> {
    beta.check_len(ctx.n())?;
    let avg = restrict_a(beta, ctx)? / Rational64::from_integer(ctx.k() as i64);
    let coords = beta
        .coords()
        .iter()
        .enumerate()
        .map(|(idx, c)| if idx < ctx.k() { c - avg } else { *c })
        .collect();
    Ok(Weight::new(coords))
}

/// The alpha_k-coefficient of rho_{P_k}: k(2n - k)/2.
pub fn rho_parabolic(ctx: RankContext) -> HalfInt {
    let (n, k) = (ctx.n() as i64, ctx.k() as i64);
    HalfInt::from_twice(k * (2 * n - k))
}

/// dim N_k = k(2n - k) - k(k - 1)/2, the number of positive roots outside
/// the Levi subsystem.
pub fn dim_nilradical(ctx: RankContext) -> usize {
    let (n, k) = (ctx.n(), ctx.k());
    k * (2 * n - k) - k * (k - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(positive_roots(1).unwrap(), vec![Weight::epsilon(1, 1)]);
        assert_eq!(positive_roots(2).unwrap().len(), 4);
        assert_eq!(positive_roots(3).unwrap().len(), 9);
        for n in 1..=6 {
            let roots = positive_roots(n).unwrap();
            assert_eq!(roots.len(), n * n);
            let distinct: BTreeSet<_> = roots.iter().cloned().collect();
            assert_eq!(distinct.len(), n * n, "duplicate root at n={n}");
        }
        assert!(positive_roots(0).is_err());
    }

    #[test]
    fn rho_is_half_sum() {
        assert_eq!(rho(1).unwrap(), Weight::from_half_ints(&[half(1)]));
        assert_eq!(rho(2).unwrap(), Weight::from_half_ints(&[half(3), half(1)]));
        assert_eq!(
            rho(3).unwrap(),
            Weight::from_half_ints(&[half(5), half(3), half(1)])
        );
        for n in 1..=6 {
            let mut sum = Weight::zero(n);
            for r in positive_roots(n).unwrap() {
                sum = &sum + &r;
            }
            let halved = Weight::new(sum.coords().iter().map(|c| c / 2).collect());
            assert_eq!(halved, rho(n).unwrap());
        }
    }

    #[test]
    fn inv_length_examples() {
        assert_eq!(inv_length(&SignedPermutation::identity(4)).unwrap(), 0);
        // flipping only eps_1 inverts the 5 positive roots involving eps_1
        let flip1 = SignedPermutation::new(&[1, 2, 3], &[-1, 1, 1]).unwrap();
        assert_eq!(inv_length(&flip1).unwrap(), 5);
        for n in 1..=5 {
            assert_eq!(
                inv_length(&SignedPermutation::minus_identity(n)).unwrap(),
                n * n
            );
        }
    }

    #[test]
    fn longest_levi_examples() {
        let w = longest_levi(RankContext::new(3, 1).unwrap());
        assert_eq!(w.targets_1based(), vec![1, 2, 3]);
        assert_eq!(w.signs(), &[1, -1, -1]);

        let w = longest_levi(RankContext::new(3, 3).unwrap());
        assert_eq!(w.targets_1based(), vec![3, 2, 1]);
        assert_eq!(w.signs(), &[1, 1, 1]);

        let w = longest_levi(RankContext::new(2, 2).unwrap());
        assert_eq!(w.targets_1based(), vec![2, 1]);
    }

    #[test]
    fn longest_levi_inverts_exactly_the_levi_positives() {
        for n in 1..=5 {
            for k in 1..=n {
                let ctx = RankContext::new(n, k).unwrap();
                let wl = longest_levi(ctx);
                let mut levi_count = 0;
                for gamma in positive_roots(n).unwrap() {
                    // Levi roots are exactly the roots vanishing on a_k.
                    let in_levi = restrict_a(&gamma, ctx).unwrap().is_zero();
                    if in_levi {
                        levi_count += 1;
                        assert!(is_negative_root(&wl.act(&gamma).unwrap(), n).unwrap());
                    }
                }
                let l = ctx.l();
                assert_eq!(inv_length(&wl).unwrap(), k * (k - 1) / 2 + l * l);
                assert_eq!(levi_count, k * (k - 1) / 2 + l * l);
            }
        }
    }

    #[test]
    fn kostant_membership_examples() {
        let ctx = RankContext::new(3, 1).unwrap();
        assert!(is_kostant(&SignedPermutation::identity(3), ctx).unwrap());
        let flip1 = SignedPermutation::new(&[1, 2, 3], &[-1, 1, 1]).unwrap();
        assert!(is_kostant(&flip1, ctx).unwrap());
        let flip3 = SignedPermutation::new(&[1, 2, 3], &[1, 1, -1]).unwrap();
        assert!(!is_kostant(&flip3, ctx).unwrap());
    }

    #[test]
    fn restriction_examples() {
        let ctx31 = RankContext::new(3, 1).unwrap();
        let ctx32 = RankContext::new(3, 2).unwrap();

        assert!(restrict_a(&Weight::zero(3), ctx31).unwrap().is_zero());
        let beta = Weight::from_half_ints(&[half(5), half(-3), half(-1)]);
        assert_eq!(restrict_a(&beta, ctx31).unwrap(), Rational64::new(5, 2));
        assert_eq!(
            restrict_a(&Weight::from_ints(&[1, 1, 0]), ctx32).unwrap(),
            Rational64::from_integer(2)
        );

        assert_eq!(
            restrict_b(&Weight::from_ints(&[-3, 1, 1]), ctx31).unwrap(),
            Weight::from_ints(&[0, 1, 1])
        );
        assert_eq!(
            restrict_b(&Weight::from_ints(&[1, 1, 0]), ctx32).unwrap(),
            Weight::zero(3)
        );
    }

    #[test]
    fn restriction_reconstructs_and_fixes_tail() {
        let ctx = RankContext::new(4, 3).unwrap();
        let beta = Weight::new(vec![
            Rational64::new(7, 2),
            Rational64::new(-1, 3),
            Rational64::from_integer(2),
            Rational64::new(5, 6),
        ]);
        let a = restrict_a(&beta, ctx).unwrap();
        let b = restrict_b(&beta, ctx).unwrap();
        let b_head: Rational64 = b.coords()[..3].iter().sum();
        assert!(b_head.is_zero());
        let total: Rational64 = beta.coords()[..3].iter().sum();
        assert_eq!(a + b_head, total);
        assert_eq!(b.coord(4), beta.coord(4));
    }

    #[test]
    fn parabolic_constants() {
        let rp = |n, k| rho_parabolic(RankContext::new(n, k).unwrap());
        assert_eq!(rp(3, 1), half(5));
        assert_eq!(rp(3, 3), half(9));
        assert_eq!(rp(1, 1), half(1));
        assert_eq!(
            Rational64::from(rp(1, 1)),
            restrict_a(&rho(1).unwrap(), RankContext::new(1, 1).unwrap()).unwrap()
        );

        let dn = |n, k| dim_nilradical(RankContext::new(n, k).unwrap());
        assert_eq!(dn(3, 1), 5);
        assert_eq!(dn(3, 2), 7);
        assert_eq!(dn(3, 3), 6);
    }

    #[test]
    fn context_validation() {
        assert!(RankContext::new(0, 1).is_err());
        assert!(RankContext::new(3, 0).is_err());
        assert!(RankContext::new(3, 4).is_err());
        assert_eq!(RankContext::new(5, 2).unwrap().l(), 3);
    }
}
