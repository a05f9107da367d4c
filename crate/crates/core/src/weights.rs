//! Exact half-integer scalars, weight vectors in the orthogonal basis and the
//! B/D root systems of so(n, C), split into compact and non-compact roots
//! relative to the maximal parabolic whose Levi factor contains so(n-2, C).
//!
//! Roots are written in the orthogonal basis `e_1, ..., e_r`. A root is
//! non-compact exactly when it involves `e_1`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest rank accepted by [`weyl_orbit`].
pub const MAX_ORBIT_RANK: usize = 10;

/// An element of (1/2)Z, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt { twice: 2 * value }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The integer value, if this is an integer.
    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    pub const fn abs(self) -> Self {
        HalfInt {
            twice: self.twice.abs(),
        }
    }

    pub const fn double(self) -> Self {
        HalfInt {
            twice: 2 * self.twice,
        }
    }

    /// `k * self` for an integer `k`.
    pub const fn scale(self, k: i64) -> Self {
        HalfInt {
            twice: k * self.twice,
        }
    }

    pub const fn is_positive(self) -> bool {
        self.twice > 0
    }

    /// Whether `self` and `other` differ by an integer.
    pub const fn same_class(self, other: HalfInt) -> bool {
        (self.twice - other.twice) % 2 == 0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl From<i64> for HalfInt {
    fn from(value: i64) -> Self {
        HalfInt::from_int(value)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a canonical half-integer: {0:?} (expected forms like \"3/2\", \"-1\", \"0\")")]
pub struct ParseHalfIntError(String);

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts canonical fraction strings only: integers, or odd numerators over 2.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseHalfIntError(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            None => t.parse::<i64>().map(HalfInt::from_int).map_err(|_| err()),
            Some((num, "2")) => {
                let num: i64 = num.parse().map_err(|_| err())?;
                if num % 2 == 0 {
                    return Err(err());
                }
                Ok(HalfInt::from_twice(num))
            }
            Some(_) => Err(err()),
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weight in the orthogonal basis, one component per rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<HalfInt>);

impl WeightVector {
    pub fn new(components: Vec<HalfInt>) -> Self {
        WeightVector(components)
    }

    pub fn from_twice(twice: &[i64]) -> Self {
        WeightVector(twice.iter().copied().map(HalfInt::from_twice).collect())
    }

    pub fn components(&self) -> &[HalfInt] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// 1-based component access.
    pub fn get(&self, index: usize) -> Option<HalfInt> {
        index.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    pub fn into_inner(self) -> Vec<HalfInt> {
        self.0
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Series {
    B,
    D,
}

impl Series {
    pub fn for_total(n_total: u32) -> Self {
        if n_total.is_multiple_of(2) {
            Series::D
        } else {
            Series::B
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Series::B => f.write_str("B"),
            Series::D => f.write_str("D"),
        }
    }
}

/// A positive root of a B or D system. Indices are 1-based with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    /// `e_i - e_j`
    Diff(usize, usize),
    /// `e_i + e_j`
    Sum(usize, usize),
    /// `e_i`, B series only
    Short(usize),
}

impl Root {
    pub fn is_noncompact(self) -> bool {
        match self {
            Root::Diff(i, _) | Root::Sum(i, _) | Root::Short(i) => i == 1,
        }
    }

    fn max_index(self) -> usize {
        match self {
            Root::Diff(i, j) | Root::Sum(i, j) => i.max(j),
            Root::Short(i) => i,
        }
    }

    fn check(self, v: &WeightVector) -> Result<()> {
        let ok = match self {
            Root::Diff(i, j) | Root::Sum(i, j) => i >= 1 && i < j,
            Root::Short(i) => i >= 1,
        };
        if !ok || self.max_index() > v.rank() {
            return Err(Error::Internal(format!(
                "root {self} does not fit rank {}",
                v.rank()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Diff(i, j) => write!(f, "e{i}-e{j}"),
            Root::Sum(i, j) => write!(f, "e{i}+e{j}"),
            Root::Short(i) => write!(f, "e{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a root: {0:?}")]
pub struct ParseRootError(String);

impl FromStr for Root {
    type Err = ParseRootError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseRootError(s.to_string());
        let index = |t: &str| -> std::result::Result<usize, ParseRootError> {
            t.strip_prefix('e')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(err)
        };
        let root = if let Some((a, b)) = s.split_once('-') {
            Root::Diff(index(a)?, index(b)?)
        } else if let Some((a, b)) = s.split_once('+') {
            Root::Sum(index(a)?, index(b)?)
        } else {
            Root::Short(index(s)?)
        };
        match root {
            Root::Diff(i, j) | Root::Sum(i, j) if i >= j => Err(err()),
            r => Ok(r),
        }
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Root {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub series: Series,
    pub rank: usize,
    pub positive_roots: Vec<Root>,
    pub noncompact_positive: Vec<Root>,
    pub rho: WeightVector,
}

impl RootSystem {
    /// Simple roots in the standard ordering: `e_i - e_{i+1}`, then `e_r` (B)
    /// or `e_{r-1} + e_r` (D).
    pub fn simple_roots(&self) -> Vec<Root> {
        simple_roots(self.series, self.rank)
    }
}

fn simple_roots(series: Series, rank: usize) -> Vec<Root> {
    let mut out: Vec<Root> = (1..rank).map(|i| Root::Diff(i, i + 1)).collect();
    match series {
        Series::B => out.push(Root::Short(rank)),
        Series::D if rank >= 2 => out.push(Root::Sum(rank - 1, rank)),
        Series::D => {}
    }
    out
}

/// Root system of so(n_total, C) with the non-compact positive roots singled out.
pub fn root_system(n_total: u32) -> Result<RootSystem> {
    if n_total < 5 {
        return Err(Error::Domain(n_total));
    }
    let series = Series::for_total(n_total);
    let rank = (n_total / 2) as usize;

    let mut positive_roots = Vec::new();
    for i in 1..=rank {
        for j in i + 1..=rank {
            positive_roots.push(Root::Diff(i, j));
            positive_roots.push(Root::Sum(i, j));
        }
        if series == Series::B {
            positive_roots.push(Root::Short(i));
        }
    }
    let noncompact_positive = positive_roots
        .iter()
        .copied()
        .filter(|r| r.is_noncompact())
        .collect();

    // rho = (r-1, ..., 0) for D, (r-1/2, ..., 1/2) for B
    let offset = if series == Series::B { 1 } else { 0 };
    let rho = WeightVector(
        (0..rank)
            .map(|k| HalfInt::from_twice(2 * (rank - 1 - k) as i64 + offset))
            .collect(),
    );

    Ok(RootSystem {
        series,
        rank,
        positive_roots,
        noncompact_positive,
        rho,
    })
}

/// `(v, beta^vee)`. Long roots are normalized so that `beta^vee = beta`; the
/// short root `e_i` has coroot `2 e_i`.
pub fn pairing(v: &WeightVector, beta: Root) -> Result<HalfInt> {
    beta.check(v)?;
    let c = |i: usize| v.0[i - 1];
    Ok(match beta {
        Root::Diff(i, j) => c(i) - c(j),
        Root::Sum(i, j) => c(i) + c(j),
        Root::Short(i) => c(i).double(),
    })
}

/// The reflection `s_beta(v) = v - (v, beta^vee) beta`.
pub fn reflect(v: &WeightVector, beta: Root) -> Result<WeightVector> {
    beta.check(v)?;
    let mut out = v.0.clone();
    match beta {
        Root::Diff(i, j) => out.swap(i - 1, j - 1),
        Root::Sum(i, j) => {
            let (a, b) = (out[i - 1], out[j - 1]);
            out[i - 1] = -b;
            out[j - 1] = -a;
        }
        Root::Short(i) => out[i - 1] = -out[i - 1],
    }
    Ok(WeightVector(out))
}

/// The Weyl group orbit of `v`: all signed permutations for B, signed
/// permutations with an even number of sign changes for D.
///
/// Enumerated breadth-first from the simple reflections, so vectors with a
/// nontrivial stabilizer cost only their orbit size.
pub fn weyl_orbit(v: &WeightVector, series: Series) -> Result<BTreeSet<WeightVector>> {
    if v.rank() > MAX_ORBIT_RANK {
        return Err(Error::Limit(format!(
            "weyl orbit of rank {} exceeds the rank limit {MAX_ORBIT_RANK}",
            v.rank()
        )));
    }
    let generators = simple_roots(series, v.rank());
    let mut seen: HashSet<WeightVector> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(v.clone());
    queue.push_back(v.clone());
    while let Some(w) = queue.pop_front() {
        for &g in &generators {
            let next = reflect(&w, g)?;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hi(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn wv(ints: &[i64]) -> WeightVector {
        WeightVector::new(ints.iter().map(|&x| HalfInt::from_int(x)).collect())
    }

    #[test]
    fn halfint_from_twice() {
        assert_eq!(hi(3).to_string(), "3/2");
        assert_eq!(hi(0).to_string(), "0");
        assert_eq!(hi(-2).to_string(), "-1");
        assert_eq!(hi(-2), HalfInt::from_int(-1));
        assert!(hi(-2).is_integer());
        assert!(!hi(3).is_integer());
        assert_eq!(hi(-3).to_string(), "-3/2");
    }

    #[test]
    fn halfint_parse() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), hi(3));
        assert_eq!("-1".parse::<HalfInt>().unwrap(), hi(-2));
        assert_eq!("0".parse::<HalfInt>().unwrap(), HalfInt::ZERO);
        assert_eq!("-9/2".parse::<HalfInt>().unwrap(), hi(-9));
        for bad in ["4/2", "1/3", "x", "", "1.5", "3/"] {
            assert!(bad.parse::<HalfInt>().is_err(), "{bad}");
        }
    }

    #[test]
    fn halfint_arithmetic_is_exact() {
        assert_eq!(hi(3) + hi(1), HalfInt::from_int(2));
        assert_eq!(hi(3) - hi(5), HalfInt::from_int(-1));
        assert_eq!(-hi(3), hi(-3));
        assert!(hi(-1) < HalfInt::ZERO);
        assert_eq!(hi(3).to_integer(), None);
        assert_eq!(hi(6).to_integer(), Some(3));
    }

    #[test]
    fn root_system_d3() {
        let rs = root_system(6).unwrap();
        assert_eq!(rs.series, Series::D);
        assert_eq!(rs.rank, 3);
        assert_eq!(
            rs.noncompact_positive,
            vec![
                Root::Diff(1, 2),
                Root::Sum(1, 2),
                Root::Diff(1, 3),
                Root::Sum(1, 3)
            ]
        );
        assert_eq!(rs.positive_roots.len(), 6);
        assert_eq!(rs.rho, wv(&[2, 1, 0]));
    }

    #[test]
    fn root_system_b2() {
        let rs = root_system(5).unwrap();
        assert_eq!(rs.series, Series::B);
        assert_eq!(rs.rank, 2);
        let mut nc = rs.noncompact_positive.clone();
        nc.sort();
        assert_eq!(nc, vec![Root::Diff(1, 2), Root::Sum(1, 2), Root::Short(1)]);
        assert_eq!(rs.positive_roots.len(), 4);
        assert_eq!(rs.rho, WeightVector::from_twice(&[3, 1]));
    }

    #[test]
    fn root_system_rejects_small() {
        assert_eq!(root_system(4), Err(Error::Domain(4)));
    }

    #[test]
    fn root_counts() {
        for n in 5..=20u32 {
            let rs = root_system(n).unwrap();
            let r = rs.rank;
            assert_eq!(rs.noncompact_positive.len(), n as usize - 2);
            let expected = if n % 2 == 0 { r * (r - 1) } else { r * r };
            assert_eq!(rs.positive_roots.len(), expected);
            for a in rs.simple_roots() {
                assert_eq!(pairing(&rs.rho, a).unwrap(), HalfInt::ONE, "n={n} {a}");
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let v = wv(&[3, 2, -1]);
        assert_eq!(pairing(&v, Root::Diff(1, 2)).unwrap(), HalfInt::ONE);
        assert_eq!(pairing(&v, Root::Sum(1, 3)).unwrap(), HalfInt::from_int(2));
        let w = WeightVector::from_twice(&[3, 1]);
        assert_eq!(pairing(&w, Root::Short(1)).unwrap(), HalfInt::from_int(3));
        assert!(matches!(
            pairing(&w, Root::Diff(1, 3)),
            Err(Error::Internal(_))
        ));
    }

    #[test]
    fn reflect_examples() {
        let v = wv(&[3, 2, -1]);
        assert_eq!(reflect(&v, Root::Diff(1, 2)).unwrap(), wv(&[2, 3, -1]));
        let w = WeightVector::from_twice(&[1, 3]);
        assert_eq!(
            reflect(&w, Root::Short(1)).unwrap(),
            WeightVector::from_twice(&[-1, 3])
        );
        let once = reflect(&v, Root::Sum(1, 3)).unwrap();
        assert_eq!(once, wv(&[1, 2, -3]));
        assert_eq!(reflect(&once, Root::Sum(1, 3)).unwrap(), v);
        assert!(reflect(&v, Root::Short(4)).is_err());
    }

    #[test]
    fn orbit_sizes() {
        let b = weyl_orbit(&WeightVector::from_twice(&[3, 1]), Series::B).unwrap();
        assert_eq!(b.len(), 8);
        let d = weyl_orbit(&wv(&[3, 2, -1]), Series::D).unwrap();
        assert_eq!(d.len(), 24);
        let z = weyl_orbit(&wv(&[1, 0]), Series::D).unwrap();
        let expected: BTreeSet<_> = [wv(&[1, 0]), wv(&[0, 1]), wv(&[-1, 0]), wv(&[0, -1])]
            .into_iter()
            .collect();
        assert_eq!(z, expected);
    }

    #[test]
    fn orbit_rank_guard() {
        let v = wv(&[1; 11]);
        assert!(matches!(weyl_orbit(&v, Series::B), Err(Error::Limit(_))));
    }

    #[test]
    fn root_parse_roundtrip() {
        for r in [Root::Diff(1, 2), Root::Sum(1, 10), Root::Short(1)] {
            assert_eq!(r.to_string().parse::<Root>().unwrap(), r);
        }
        assert!("e2-e1".parse::<Root>().is_err());
        assert!("e0".parse::<Root>().is_err());
    }
}
