//! Elementary-representation signatures `{m_1, ..., m_h; c}` and their
//! Harish-Chandra parameters.
//!
//! The Harish-Chandra vector of a signature is fixed as
//! `v = (-c, m_h, m_{h-1}, ..., m_1)` in the orthogonal basis. With this
//! convention `e_1 - e_2` on the first vertex of a main multiplet pairs to
//! `n_{h+1} - n_h` and the short root `e_1` pairs to `2 n_1`, which are the
//! operator degrees of the corresponding arrows.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result, ValidationError};
use crate::weights::{root_system, HalfInt, RootSystem, Series, WeightVector};

/// `so(p,q)` with the derived data of its maximal parabolic
/// `M = so(p-1,q-1)`, `dim A = 1`, `dim N = p+q-2`.
///
/// Everything downstream depends only on `n = p+q`; `p` and `q` are kept for
/// reporting and are absent when the algebra is given by `n` alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Algebra {
    pub p: Option<u32>,
    pub q: Option<u32>,
    pub n: u32,
    pub series: Series,
    pub rank: usize,
    pub h: usize,
    #[serde(skip)]
    pub dim_n: u32,
}

impl Algebra {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p < q {
            return Err(Error::Order { p, q });
        }
        let mut alg = Algebra::from_total(p + q)?;
        alg.p = Some(p);
        alg.q = Some(q);
        Ok(alg)
    }

    /// The classification context for all `so(p,q)` with `p+q = n`.
    pub fn from_total(n: u32) -> Result<Self> {
        if n <= 4 {
            return Err(Error::Domain(n));
        }
        let rank = (n / 2) as usize;
        Ok(Algebra {
            p: None,
            q: None,
            n,
            series: Series::for_total(n),
            rank,
            h: rank - 1,
            dim_n: n - 2,
        })
    }

    pub fn is_even(&self) -> bool {
        self.n.is_multiple_of(2)
    }

    /// The same algebra with the `p,q` split forgotten.
    pub fn complexified(&self) -> Algebra {
        Algebra {
            p: None,
            q: None,
            ..*self
        }
    }

    pub fn root_system(&self) -> RootSystem {
        root_system(self.n).expect("algebra has n > 4")
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.q) {
            (Some(p), Some(q)) => write!(f, "so({p},{q})"),
            _ => write!(f, "so(p,q), p+q={}", self.n),
        }
    }
}

fn list(xs: &[HalfInt]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Checks the ordering constraint for the parity of `n` on an increasing
/// label list, with the first entry allowed to be signed for even `n`.
pub(crate) fn check_ordering(
    labels: &[HalfInt],
    even: bool,
) -> std::result::Result<(), ValidationError> {
    let increasing = labels.windows(2).all(|w| w[0] < w[1]);
    let ok = match labels.first() {
        None => true,
        Some(&first) if even => {
            increasing && labels.get(1).is_none_or(|&second| first.abs() < second)
        }
        Some(&first) => increasing && first.is_positive(),
    };
    if ok {
        Ok(())
    } else if even {
        Err(ValidationError::EvenOrdering(list(labels)))
    } else {
        Err(ValidationError::OddOrdering(list(labels)))
    }
}

pub(crate) fn check_congruence(values: &[HalfInt]) -> std::result::Result<(), ValidationError> {
    match values.first() {
        Some(&first) if !values.iter().all(|x| x.same_class(first)) => {
            Err(ValidationError::MixedCongruence(list(values)))
        }
        _ => Ok(()),
    }
}

/// Checks arity, ordering and congruence of `{mu; c}` over `so(p,q)`, `p+q = n`.
pub fn validate_signature(
    mu: &[HalfInt],
    c: HalfInt,
    algebra: &Algebra,
) -> std::result::Result<(), ValidationError> {
    if mu.len() != algebra.h {
        return Err(ValidationError::Arity {
            expected: algebra.h,
            found: mu.len(),
        });
    }
    check_ordering(mu, algebra.is_even())?;
    let mut all = mu.to_vec();
    all.push(c);
    check_congruence(&all)
}

/// A valid elementary-representation signature.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    mu: Vec<HalfInt>,
    c: HalfInt,
    n: u32,
}

impl Signature {
    pub fn new(mu: Vec<HalfInt>, c: HalfInt, algebra: &Algebra) -> Result<Self> {
        validate_signature(&mu, c, algebra)?;
        Ok(Signature {
            mu,
            c,
            n: algebra.n,
        })
    }

    pub fn mu(&self) -> &[HalfInt] {
        &self.mu
    }

    pub fn c(&self) -> HalfInt {
        self.c
    }

    /// `p+q` of the algebra this signature lives over.
    pub fn n_total(&self) -> u32 {
        self.n
    }

    pub fn algebra(&self) -> Algebra {
        Algebra::from_total(self.n).expect("validated signature")
    }

    /// The Harish-Chandra vector `(-c, m_h, ..., m_1)`.
    pub fn hc(&self) -> WeightVector {
        signature_to_hc(self)
    }

    pub fn conformal_weight(&self) -> HalfInt {
        conformal_weight(self)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{};{}}}", list(&self.mu), self.c)
    }
}

#[derive(Serialize, Deserialize)]
struct SignatureRepr {
    mu: Vec<HalfInt>,
    c: HalfInt,
    d: HalfInt,
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SignatureRepr {
            mu: self.mu.clone(),
            c: self.c,
            d: self.conformal_weight(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Signature {
    /// `n` is recovered from `d - c = (n-2)/2`.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SignatureRepr::deserialize(deserializer)?;
        let shift = (repr.d - repr.c).twice();
        let n = u32::try_from(shift + 2)
            .map_err(|_| D::Error::custom("d - c does not determine p+q"))?;
        let algebra = Algebra::from_total(n).map_err(D::Error::custom)?;
        Signature::new(repr.mu, repr.c, &algebra).map_err(D::Error::custom)
    }
}

pub fn signature_to_hc(sig: &Signature) -> WeightVector {
    let mut v = Vec::with_capacity(sig.mu.len() + 1);
    v.push(-sig.c);
    v.extend(sig.mu.iter().rev().copied());
    WeightVector::new(v)
}

/// Whether `v` is the Harish-Chandra vector of some signature: its tail
/// `(v_2, ..., v_r)` is strictly decreasing, with `v_r > 0` (odd `n`) or
/// `v_{r-1} > |v_r|` (even `n`).
pub fn is_mu_dominant(v: &WeightVector, algebra: &Algebra) -> bool {
    let c = v.components();
    if c.len() != algebra.rank {
        return false;
    }
    let tail = &c[1..];
    if !tail.windows(2).all(|w| w[0] > w[1]) {
        return false;
    }
    match tail {
        [] => true,
        [.., last] if !algebra.is_even() => last.is_positive(),
        [.., second, last] => *second > last.abs(),
        [_] => true,
    }
}

pub fn hc_to_signature(v: &WeightVector, algebra: &Algebra) -> Result<Signature> {
    if !is_mu_dominant(v, algebra) {
        return Err(Error::Dominance(v.to_string()));
    }
    let c = v.components();
    let mu = c[1..].iter().rev().copied().collect();
    Signature::new(mu, -c[0], algebra)
}

/// Knapp–Stein shadow partner: `c -> -c`, and for even `p+q` also `m_1 -> -m_1`.
pub fn ks_partner(sig: &Signature) -> Signature {
    let mut mu = sig.mu.clone();
    if sig.n.is_multiple_of(2) {
        if let Some(first) = mu.first_mut() {
            *first = -*first;
        }
    }
    Signature {
        mu,
        c: -sig.c,
        n: sig.n,
    }
}

/// The conformal weight `d = c + (p+q-2)/2`.
pub fn conformal_weight(sig: &Signature) -> HalfInt {
    sig.c + HalfInt::from_twice(i64::from(sig.n) - 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn i(x: i64) -> HalfInt {
        HalfInt::from_int(x)
    }

    fn alg(p: u32, q: u32) -> Algebra {
        Algebra::new(p, q).unwrap()
    }

    #[test]
    fn make_algebra() {
        let a = alg(4, 2);
        assert_eq!(
            (a.n, a.series, a.rank, a.h, a.dim_n),
            (6, Series::D, 3, 2, 4)
        );
        let b = alg(3, 2);
        assert_eq!(
            (b.n, b.series, b.rank, b.h, b.dim_n),
            (5, Series::B, 2, 1, 3)
        );
        assert_eq!(Algebra::new(2, 3), Err(Error::Order { p: 2, q: 3 }));
        assert_eq!(Algebra::new(2, 2), Err(Error::Domain(4)));
    }

    #[test]
    fn validation() {
        assert!(validate_signature(&[i(-1), i(2)], i(-3), &alg(4, 2)).is_ok());
        assert_eq!(
            validate_signature(&[i(-1)], i(-3), &alg(3, 2)),
            Err(ValidationError::OddOrdering("-1".into()))
        );
        assert!(matches!(
            validate_signature(&[h(1), i(2)], i(1), &alg(4, 2)),
            Err(ValidationError::MixedCongruence(_))
        ));
        assert!(matches!(
            validate_signature(&[i(1), i(2)], h(1), &alg(4, 2)),
            Err(ValidationError::MixedCongruence(_))
        ));
        assert_eq!(
            validate_signature(&[i(1)], i(0), &alg(4, 2)),
            Err(ValidationError::Arity {
                expected: 2,
                found: 1
            })
        );
        assert!(validate_signature(&[i(2), i(2)], i(0), &alg(4, 2)).is_err());
        assert!(validate_signature(&[i(-2), i(2)], i(0), &alg(4, 2)).is_err());
        // m_1 = 0 is fine for even n
        assert!(validate_signature(&[i(0), i(2)], i(0), &alg(4, 2)).is_ok());
        assert!(validate_signature(&[i(0)], i(0), &alg(3, 2)).is_err());
    }

    #[test]
    fn hc_convention() {
        let a = alg(4, 2);
        let s = Signature::new(vec![i(-1), i(2)], i(-3), &a).unwrap();
        assert_eq!(s.hc(), WeightVector::new(vec![i(3), i(2), i(-1)]));
        let s = Signature::new(vec![i(2), i(3)], i(1), &a).unwrap();
        assert_eq!(s.hc(), WeightVector::new(vec![i(-1), i(3), i(2)]));
        let b = alg(3, 2);
        let s = Signature::new(vec![h(1)], h(-3), &b).unwrap();
        assert_eq!(s.hc(), WeightVector::from_twice(&[3, 1]));
    }

    #[test]
    fn hc_inverse() {
        let a = alg(4, 2);
        let s = hc_to_signature(&WeightVector::new(vec![i(2), i(3), i(-1)]), &a).unwrap();
        assert_eq!(s.to_string(), "{-1,3;-2}");
        let b = alg(3, 2);
        let s = hc_to_signature(&WeightVector::from_twice(&[-1, 3]), &b).unwrap();
        assert_eq!(s.to_string(), "{3/2;1/2}");
        assert!(matches!(
            hc_to_signature(&WeightVector::new(vec![i(3), i(1), i(2)]), &a),
            Err(Error::Dominance(_))
        ));
        // wrong rank is not dominant
        assert!(hc_to_signature(&WeightVector::new(vec![i(3), i(1)]), &a).is_err());
    }

    #[test]
    fn shadow_partner() {
        let a = alg(4, 2);
        let s = Signature::new(vec![i(-1), i(2)], i(-3), &a).unwrap();
        let t = ks_partner(&s);
        assert_eq!(t.to_string(), "{1,2;3}");
        assert_eq!(ks_partner(&t), s);
        let b = alg(3, 2);
        let s = Signature::new(vec![h(1)], h(-3), &b).unwrap();
        assert_eq!(ks_partner(&s).to_string(), "{1/2;3/2}");
    }

    #[test]
    fn conformal_weights() {
        let a = alg(4, 2);
        let s = Signature::new(vec![i(-1), i(2)], i(-3), &a).unwrap();
        assert_eq!(s.conformal_weight(), i(-1));
        let s = Signature::new(vec![i(1), i(2)], i(0), &a).unwrap();
        assert_eq!(s.conformal_weight(), i(2));
        let b = alg(3, 2);
        let s = Signature::new(vec![h(1)], h(-3), &b).unwrap();
        assert_eq!(s.conformal_weight(), HalfInt::ZERO);
    }

    #[test]
    fn json_shape() {
        let a = alg(4, 2);
        let s = Signature::new(vec![i(-1), i(2)], i(-3), &a).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"mu":["-1","2"],"c":"-3","d":"-1"}"#);
        let back: Signature = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        let s = Signature::new(vec![h(1)], h(-3), &alg(3, 2)).unwrap();
        let back: Signature = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }
}
