//! The (I,J) parametrization of the Kostant representatives W^{P_k}, with
//! closed forms for their lengths, the evaluation coefficients t_{(I,J)},
//! and the restricted highest weights mu_w, plus the self-duality test.
//!
//! A pair of disjoint subsets I, J of {1..n} with |I| + |J| = k names the
//! signed permutation sending eps_{i_l} to -eps_{k+1-l}, eps_{j_l} to eps_l
//! and the remaining eps_{r_l} to eps_{k+l} (all index lists sorted
//! ascending). These are exactly the minimal-length coset representatives
//! for the parabolic of index k.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{
    longest_levi, simple_root, HalfInt, RankContext, SignedPermutation, Weight,
};

/// Ordered pair of disjoint subsets of {1..n} with |I| + |J| = k.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct KostantPair {
    i_set: Vec<usize>,
    j_set: Vec<usize>,
    ctx: RankContext,
}

impl KostantPair {
    pub fn new(i_set: Vec<usize>, j_set: Vec<usize>, ctx: RankContext) -> Result<Self> {
        let n = ctx.n();
        for set in [&i_set, &j_set] {
            if !set.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidPair(format!(
                    "index list {set:?} is not strictly increasing"
                )));
            }
            if set.iter().any(|&v| v < 1 || v > n) {
                return Err(Error::InvalidPair(format!(
                    "index list {set:?} leaves 1..={n}"
                )));
            }
        }
        if i_set.iter().any(|v| j_set.binary_search(v).is_ok()) {
            return Err(Error::InvalidPair(format!(
                "I = {i_set:?} and J = {j_set:?} intersect"
            )));
        }
        if i_set.len() + j_set.len() != ctx.k() {
            return Err(Error::InvalidPair(format!(
                "|I| + |J| = {} but k = {}",
                i_set.len() + j_set.len(),
                ctx.k()
            )));
        }
        Ok(KostantPair { i_set, j_set, ctx })
    }

    pub fn ctx(&self) -> RankContext {
        self.ctx
    }

    pub fn i_set(&self) -> &[usize] {
        &self.i_set
    }

    pub fn j_set(&self) -> &[usize] {
        &self.j_set
    }

    /// |I|, written `i` in the closed formulas.
    pub fn i_count(&self) -> usize {
        self.i_set.len()
    }

    /// |J|.
    pub fn j_count(&self) -> usize {
        self.j_set.len()
    }

    /// The complement R = {1..n} \ (I u J), sorted ascending.
    pub fn r_set(&self) -> Vec<usize> {
        (1..=self.ctx.n())
            .filter(|v| {
                self.i_set.binary_search(v).is_err() && self.j_set.binary_search(v).is_err()
            })
            .collect()
    }
}

impl fmt::Display for KostantPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_set = |set: &[usize]| {
            let inner = set
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("{{{inner}}}")
        };
        write!(f, "({}, {})", fmt_set(&self.i_set), fmt_set(&self.j_set))
    }
}

/// Dominant integral highest weight of SO(2n+1): a weakly decreasing tuple
/// of nonnegative integers. Half-integral (spin) weights are rejected.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct HighestWeight {
    lambda: Vec<i64>,
}

impl HighestWeight {
    pub fn new(lambda: Vec<i64>) -> Result<Self> {
        if let Some(&v) = lambda.iter().find(|&&v| v < 0) {
            return Err(Error::NonDominantWeight(format!("entry {v} is negative")));
        }
        if let Some(w) = lambda.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::NonDominantWeight(format!(
                "entries {} < {} violate weak decrease",
                w[0], w[1]
            )));
        }
        Ok(HighestWeight { lambda })
    }

    pub fn zero(n: usize) -> Self {
        HighestWeight {
            lambda: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.lambda
    }

    /// 1-based entry access.
    pub fn entry(&self, label: usize) -> i64 {
        self.lambda[label - 1]
    }

    pub fn to_weight(&self) -> Weight {
        Weight::from_ints(&self.lambda)
    }
}

impl TryFrom<Vec<i64>> for HighestWeight {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        HighestWeight::new(v)
    }
}

impl From<HighestWeight> for Vec<i64> {
    fn from(h: HighestWeight) -> Vec<i64> {
        h.lambda
    }
}

impl FromStr for HighestWeight {
    type Err = Error;

    /// Parses a comma-separated list such as "2,1,0". Fractional entries are
    /// rejected as spin weights, everything else malformed as non-dominant.
    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.contains('/') || part.contains('.') {
                return Err(Error::SpinWeight(format!(
                    "entry {part:?} is not an integer"
                )));
            }
            let v: i64 = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad weight entry {part:?}")))?;
            entries.push(v);
        }
        HighestWeight::new(entries)
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = self
            .lambda
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "({inner})")
    }
}

/// A Kostant representative with its signed permutation and length cached at
/// construction; downstream modules read the cache.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct KostantRep {
    pair: KostantPair,
    w: SignedPermutation,
    length: usize,
}

impl KostantRep {
    pub fn new(pair: KostantPair) -> Self {
        let w = to_signed_perm(&pair);
        let length = length_formula(&pair);
        KostantRep { pair, w, length }
    }

    pub fn pair(&self) -> &KostantPair {
        &self.pair
    }

    pub fn w(&self) -> &SignedPermutation {
        &self.w
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn ctx(&self) -> RankContext {
        self.pair.ctx()
    }
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    #[serde(rename = "I")]
    i_set: Vec<usize>,
    #[serde(rename = "J")]
    j_set: Vec<usize>,
    n: usize,
    k: usize,
    length: usize,
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl Serialize for KostantRep {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RepJson {
            i_set: self.pair.i_set.clone(),
            j_set: self.pair.j_set.clone(),
            n: self.ctx().n(),
            k: self.ctx().k(),
            length: self.length,
            perm: self.w.targets_1based(),
            signs: self.w.signs().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for KostantRep {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RepJson::deserialize(deserializer)?;
        let ctx = RankContext::new(raw.n, raw.k).map_err(D::Error::custom)?;
        let pair = KostantPair::new(raw.i_set, raw.j_set, ctx).map_err(D::Error::custom)?;
        let rep = KostantRep::new(pair);
        if rep.length != raw.length {
            return Err(D::Error::custom(format!(
                "cached length {} disagrees with recomputed {}",
                raw.length, rep.length
            )));
        }
        let w = SignedPermutation::new(&raw.perm, &raw.signs).map_err(D::Error::custom)?;
        if w != rep.w {
            return Err(D::Error::custom("permutation disagrees with (I,J) data"));
        }
        Ok(rep)
    }
}

/// The signed permutation named by (I,J): eps_{i_l} -> -eps_{k+1-l},
/// eps_{j_l} -> eps_l, eps_{r_l} -> eps_{k+l}.
pub fn to_signed_perm(pair: &KostantPair) -> SignedPermutation {
    let n = pair.ctx().n();
    let k = pair.ctx().k();
    let mut targets = vec![0usize; n];
    let mut signs = vec![1i8; n];
    for (l, &i) in pair.i_set().iter().enumerate() {
        targets[i - 1] = k - (l + 1); // 0-based image of eps_i is eps_{k+1-(l+1)}
        signs[i - 1] = -1;
    }
    for (l, &j) in pair.j_set().iter().enumerate() {
        targets[j - 1] = l;
    }
    for (l, r) in pair.r_set().into_iter().enumerate() {
        targets[r - 1] = k + l;
    }
    SignedPermutation::from_parts_unchecked(targets, signs)
}

/// All 2^k * C(n,k) representatives for the context, ordered
/// lexicographically on (I, J).
pub fn enumerate_kostant(ctx: RankContext) -> Vec<KostantRep> {
    let mut pairs = Vec::new();
    let mut i_set = Vec::new();
    collect_pairs(ctx, 1, &mut i_set, &mut pairs);
    pairs.sort_by(|a, b| (a.i_set(), a.j_set()).cmp(&(b.i_set(), b.j_set())));
    pairs.into_iter().map(KostantRep::new).collect()
}

fn collect_pairs(
    ctx: RankContext,
    next: usize,
    i_set: &mut Vec<usize>,
    out: &mut Vec<KostantPair>,
) {
    if i_set.len() <= ctx.k() {
        let need = ctx.k() - i_set.len();
        let mut j_set = Vec::new();
        collect_j(ctx, 1, need, i_set, &mut j_set, out);
    }
    if i_set.len() == ctx.k() {
        return;
    }
    for v in next..=ctx.n() {
        i_set.push(v);
        collect_pairs(ctx, v + 1, i_set, out);
        i_set.pop();
    }
}

fn collect_j(
    ctx: RankContext,
    next: usize,
    need: usize,
    i_set: &[usize],
    j_set: &mut Vec<usize>,
    out: &mut Vec<KostantPair>,
) {
    if need == 0 {
        out.push(
            KostantPair::new(i_set.to_vec(), j_set.clone(), ctx)
                .expect("generated pair is valid by construction"),
        );
        return;
    }
    for v in next..=ctx.n() {
        if i_set.binary_search(&v).is_ok() {
            continue;
        }
        j_set.push(v);
        collect_j(ctx, v + 1, need - 1, i_set, j_set, out);
        j_set.pop();
    }
}

/// Closed-form Coxeter length of w_{(I,J)}:
///
/// ```text
/// sum_{l<=|I|} (2n - k - i_l + 1) + sum_{l<=|J|} (j_l - l)
///     - sum_{l=m+1}^{|J|} |{i in I : i < j_l}|
/// ```
///
/// where m counts the leading j's below every element of I (m = |J| when I
/// is empty).
pub fn length_formula(pair: &KostantPair) -> usize {
    let n = pair.ctx().n() as i64;
    let k = pair.ctx().k() as i64;
    let first: i64 = pair
        .i_set()
        .iter()
        .map(|&i| 2 * n - k - i as i64 + 1)
        .sum();
    let second: i64 = pair
        .j_set()
        .iter()
        .enumerate()
        .map(|(idx, &j)| j as i64 - (idx as i64 + 1))
        .sum();
    let m = pair
        .j_set()
        .iter()
        .enumerate()
        .filter(|(_, &j)| pair.i_set().iter().all(|&i| j < i))
        .map(|(idx, _)| idx + 1)
        .max()
        .unwrap_or(0);
    let third: i64 = pair.j_set()[m..]
        .iter()
        .map(|&j| pair.i_set().iter().filter(|&&i| i < j).count() as i64)
        .sum();
    let total = first + second - third;
    debug_assert!(total >= 0);
    total as usize
}

/// Evaluation coefficient t_{(I,J)} of the point -w(lambda+rho) restricted
/// to a_k:
///
/// ```text
/// t = sum_{l<=|I|} (lambda_{i_l} - i_l) - sum_{l<=|J|} (lambda_{j_l} - j_l)
///     + (|I| - |J|)(n + 1/2)
/// ```
pub fn eval_t(pair: &KostantPair, lam: &HighestWeight) -> Result<HalfInt> {
    let ctx = pair.ctx();
    if lam.n() != ctx.n() {
        return Err(Error::DimensionMismatch {
            expected: ctx.n(),
            got: lam.n(),
        });
    }
    let n = ctx.n() as i64;
    let isum: i64 = pair
        .i_set()
        .iter()
        .map(|&i| lam.entry(i) - i as i64)
        .sum();
    let jsum: i64 = pair
        .j_set()
        .iter()
        .map(|&j| lam.entry(j) - j as i64)
        .sum();
    let diff = pair.i_count() as i64 - pair.j_count() as i64;
    Ok(HalfInt::from_twice(2 * (isum - jsum) + diff * (2 * n + 1)))
}

/// Highest weight mu_w of the coefficient module on the semisimple Levi
/// part, via the three-block closed form (J block, reversed-negated I block,
/// untouched R block shifted into the SO positions).
pub fn mu_w(pair: &KostantPair, lam: &HighestWeight) -> Result<Weight> {
    let ctx = pair.ctx();
    if lam.n() != ctx.n() {
        return Err(Error::DimensionMismatch {
            expected: ctx.n(),
            got: lam.n(),
        });
    }
    let n = ctx.n() as i64;
    let k = ctx.k() as i64;
    let t = eval_t(pair, lam)?;
    let t_over_k = Rational64::new(t.twice(), 2 * k);
    let k_half = Rational64::new(k, 2);

    let mut mu = Weight::zero(ctx.n());
    let jj = pair.j_count();
    let ii = pair.i_count();
    for (idx, &j) in pair.j_set().iter().enumerate() {
        let l = idx as i64 + 1;
        let base = Rational64::from_integer(lam.entry(j) - j as i64 + l + n);
        mu.set_coord(idx + 1, base + t_over_k - k_half);
    }
    for l in 1..=ii {
        let i = pair.i_set()[ii - l]; // i_{|I| - l + 1}
        let base =
            Rational64::from_integer(lam.entry(i) - i as i64 - jj as i64 - l as i64 + n + 1);
        mu.set_coord(jj + l, -(base - t_over_k + k_half));
    }
    for (idx, r) in pair.r_set().into_iter().enumerate() {
        let l = idx as i64 + 1;
        mu.set_coord(
            ctx.k() + idx + 1,
            Rational64::from_integer(lam.entry(r) - r as i64 + k + l),
        );
    }
    Ok(mu)
}

/// Self-duality of the coefficient module: -w_L(mu) = mu for the longest
/// Levi element w_L. On the SO block this holds automatically; on the GL
/// block it amounts to mu_l = -mu_{k-l+1}.
pub fn is_self_dual(mu: &Weight, ctx: RankContext) -> Result<bool> {
    mu.check_len(ctx.n())?;
    let wl = longest_levi(ctx);
    Ok(-&wl.act(mu)? == *mu)
}

/// Images w^{-1}(alpha_l) of the Levi simple roots, computed directly from
/// the signed permutation. Every returned weight is a positive root; this is
/// exactly the membership condition for W^{P_k}.
pub fn inverse_simple_images(pair: &KostantPair) -> BTreeMap<usize, Weight> {
    let ctx = pair.ctx();
    let winv = to_signed_perm(pair).inverse();
    let mut out = BTreeMap::new();
    for l in (1..=ctx.n()).filter(|&l| l != ctx.k()) {
        let alpha = simple_root(l, ctx.n());
        let img = winv
            .act(&alpha)
            .expect("simple root has the right length");
        out.insert(l, img);
    }
    out
}

/// The five-row closed-form case table for w^{-1}(alpha_l). Case l = |J|
/// reads eps_{j_|J|} - eps_{i_|I|}, which is not always the actual image;
/// see [`inverse_simple_images_discrepancies`].
pub fn inverse_simple_images_closed_form(pair: &KostantPair) -> BTreeMap<usize, Weight> {
    let ctx = pair.ctx();
    let n = ctx.n();
    let k = ctx.k();
    let jj = pair.j_count();
    let ii = pair.i_count();
    let r_set = pair.r_set();
    let diff = |a: usize, b: usize| -> Weight {
        &Weight::epsilon(a, n) - &Weight::epsilon(b, n)
    };
    let mut out = BTreeMap::new();
    for l in (1..=n).filter(|&l| l != k) {
        let img = if l < jj {
            // 1 <= l <= |J| - 1
            diff(pair.j_set()[l - 1], pair.j_set()[l])
        } else if l == jj && ii >= 1 {
            diff(pair.j_set()[jj - 1], pair.i_set()[ii - 1])
        } else if l < k {
            // |J| + 1 <= l <= k - 1
            diff(pair.i_set()[k - l - 1], pair.i_set()[k - l])
        } else if l < n {
            // k + 1 <= l <= n - 1
            diff(r_set[l - k - 1], r_set[l - k])
        } else {
            Weight::epsilon(r_set[n - k - 1], n)
        };
        out.insert(l, img);
    }
    out
}

/// Indices where the closed-form table and the direct computation disagree,
/// as (index, direct image, table image) triples.
pub fn inverse_simple_images_discrepancies(
    pair: &KostantPair,
) -> Vec<(usize, Weight, Weight)> {
    let direct = inverse_simple_images(pair);
    let table = inverse_simple_images_closed_form(pair);
    direct
        .into_iter()
        .filter_map(|(l, d)| {
            let t = table[&l].clone();
            (d != t).then_some((l, d, t))
        })
        .collect()
}
