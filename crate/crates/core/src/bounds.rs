//! Exact values of the catalogued extremal bounds at given `(n, k, s)`.
//!
//! Every entry is an arbitrary-precision integer. An entry whose formula is
//! undefined at the requested parameters is `None` rather than an error for
//! the whole report.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::binomial::binomial;
use crate::error::{domain, Error, Result};
use crate::families::{count_a, count_b, count_e0, count_e1};

/// Which of `E0` and `E1` is larger.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Winner {
    E0,
    E1,
    Tie,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Winner::E0 => "e0",
            Winner::E1 => "e1",
            Winner::Tie => "tie",
        })
    }
}

/// The threshold rule: `E0` when `k > l + 3`, `E1` otherwise.
pub fn predicted_winner(k: u64, ell: i128) -> Winner {
    if k as i128 > ell + 3 {
        Winner::E0
    } else {
        Winner::E1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u64,
    pub k: u64,
    pub s: u64,
    /// `n - k(s+1)`.
    pub ell: i128,
    pub epsilon: BigRational,
    /// `|A_1(n,k,s)|`.
    pub a1: Option<BigUint>,
    /// `|A_k(n,k,s)|`.
    pub ak: Option<BigUint>,
    /// `max(|A_1|, |A_k|)`, the conjectured maximum for `nu <= s`.
    pub emc: Option<BigUint>,
    /// `C(n,k) - C(n-s,k) - C(n-s-k,k-1) + 1`, the bound for `nu <= s < tau`.
    pub bde: Option<BigUint>,
    /// `C(n-1,k-1) - C(n-k-1,k-1) + 1`, only for `s = 1`, `n > 2k`.
    pub hm: Option<BigUint>,
    /// `max(|A_2|, .., |A_k|, |B|)`.
    pub fk: Option<BigUint>,
    pub e0: Option<BigUint>,
    pub e1: Option<BigUint>,
    /// `max(|E0|, |E1|)`, the bound for non-trivial families.
    pub stability: Option<BigUint>,
    /// `floor(C(ks+k-1,k) - 3.98 C(floor((1-eps)ks), k-1) + (2 + 8 eps k^4) C(n,k-1))`.
    pub big_clique: Option<BigInt>,
    /// Whether `n(1/k - 1/(2k^2)) - 1 < s <= (n-k+1)/k` holds.
    pub big_clique_window: Option<bool>,
    pub winner: Option<Winner>,
    pub predicted: Option<Winner>,
}

impl BoundReport {
    /// `(name, value)` rows in display order; absent entries have `None`.
    pub fn rows(&self) -> Vec<(&'static str, Option<String>)> {
        let u = |v: &Option<BigUint>| v.as_ref().map(|x| x.to_string());
        vec![
            ("a1", u(&self.a1)),
            ("ak", u(&self.ak)),
            ("emc", u(&self.emc)),
            ("bde", u(&self.bde)),
            ("hm", u(&self.hm)),
            ("fk", u(&self.fk)),
            ("e0", u(&self.e0)),
            ("e1", u(&self.e1)),
            ("stability", u(&self.stability)),
            ("big_clique", self.big_clique.as_ref().map(|x| x.to_string())),
            ("big_clique_window", self.big_clique_window.map(|b| b.to_string())),
            ("winner", self.winner.map(|w| w.to_string())),
            ("predicted", self.predicted.map(|w| w.to_string())),
        ]
    }

    /// Looks up an entry by its row name.
    pub fn get(&self, name: &str) -> Option<&BigUint> {
        match name {
            "a1" => self.a1.as_ref(),
            "ak" => self.ak.as_ref(),
            "emc" => self.emc.as_ref(),
            "bde" => self.bde.as_ref(),
            "hm" => self.hm.as_ref(),
            "fk" => self.fk.as_ref(),
            "e0" => self.e0.as_ref(),
            "e1" => self.e1.as_ref(),
            "stability" => self.stability.as_ref(),
            _ => None,
        }
    }
}

/// The catalogued bounds at `(n, k, s)` with the rational `epsilon` used by
/// the large-clique bound.
pub fn bounds_report(n: u64, k: u64, s: u64, epsilon: &BigRational) -> Result<BoundReport> {
    if k < 2 || n < k || s < 1 {
        return Err(domain(format!(
            "bounds need k >= 2, n >= k, s >= 1 (got n = {n}, k = {k}, s = {s})"
        )));
    }
    if !epsilon.is_positive() || epsilon >= &BigRational::one() {
        return Err(domain(format!("epsilon = {epsilon} must lie strictly between 0 and 1")));
    }
    let ell = n as i128 - (k as i128) * (s as i128 + 1);
    let a_ok = |i: u64| n >= (s + 1) * i - 1;

    let a1 = a_ok(1).then(|| count_a(n, k, s, 1));
    let ak = a_ok(k).then(|| count_a(n, k, s, k));
    let emc = match (&a1, &ak) {
        (Some(a), Some(b)) => Some(a.max(b).clone()),
        _ => None,
    };
    let b_ok = n >= s + k;
    let bde = b_ok.then(|| count_b(n, k, s));
    let hm = (s == 1 && n > 2 * k)
        .then(|| binomial(n - 1, k - 1) + 1u32 - binomial(n - k - 1, k - 1));
    let fk = (a_ok(k) && b_ok).then(|| {
        (2..=k)
            .map(|i| count_a(n, k, s, i))
            .chain(std::iter::once(count_b(n, k, s)))
            .max()
            .expect("at least |B|")
    });
    let e_ok = n >= k * s + k - 1;
    let e0 = e_ok.then(|| count_e0(n, k, s));
    let e1 = e_ok.then(|| count_e1(n, k, s));
    let (stability, winner) = match (&e0, &e1) {
        (Some(a), Some(b)) => {
            let w = match a.cmp(b) {
                Ordering::Greater => Winner::E0,
                Ordering::Less => Winner::E1,
                Ordering::Equal => Winner::Tie,
            };
            (Some(a.max(b).clone()), Some(w))
        }
        _ => (None, None),
    };
    let predicted = e_ok.then(|| predicted_winner(k, ell));

    Ok(BoundReport {
        n,
        k,
        s,
        ell,
        epsilon: epsilon.clone(),
        a1,
        ak,
        emc,
        bde,
        hm,
        fk,
        e0,
        e1,
        stability,
        big_clique: Some(big_clique_bound(n, k, s, epsilon)),
        big_clique_window: Some(big_clique_window(n, k, s)),
        winner,
        predicted,
    })
}

/// The large-clique bound evaluated exactly and rounded down.
///
/// `3.98` is the rational `398/100`, and the clique-size argument
/// `(1 - eps) k s` is rounded down before taking the binomial.
pub fn big_clique_bound(n: u64, k: u64, s: u64, epsilon: &BigRational) -> BigInt {
    let ks = BigRational::from_integer(BigInt::from(k * s));
    let m = ((BigRational::one() - epsilon) * ks).floor().to_integer();
    let m: u64 = m.try_into().unwrap_or(0);
    let int = |x: BigUint| BigRational::from_integer(BigInt::from(x));
    let k4 = BigRational::from_integer(BigInt::from(k.pow(4)));
    let value = int(binomial(k * s + k - 1, k))
        - BigRational::new(BigInt::from(398), BigInt::from(100)) * int(binomial(m, k - 1))
        + (BigRational::from_integer(BigInt::from(2)) + BigRational::from_integer(BigInt::from(8)) * epsilon * k4)
            * int(binomial(n, k - 1));
    value.floor().to_integer()
}

/// `n(1/k - 1/(2k^2)) - 1 < s <= (n-k+1)/k`, compared exactly.
pub fn big_clique_window(n: u64, k: u64, s: u64) -> bool {
    let (n, k, s) = (n as i128, k as i128, s as i128);
    let lower = n * (2 * k - 1) - 2 * k * k < 2 * k * k * s;
    let upper = k * s <= n - k + 1;
    lower && upper
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E0E1Comparison {
    pub e0: BigUint,
    pub e1: BigUint,
    /// `|E1|` compared with `|E0|`.
    pub order: Ordering,
    pub predicted: Winner,
    /// True when `k <= l + 3`, where `|E1| >= |E0|` holds for every `s >= 1`.
    pub asserted: bool,
}

/// Exact comparison of `|E0|` and `|E1|` at `n = k(s+1) + l`.
///
/// For `k <= l + 3` a result with `|E1| < |E0|` is an [`Error::Invariant`].
/// For `k > l + 3` the sign is only reported.
pub fn e0_e1_compare(k: u64, s: u64, ell: u64) -> Result<E0E1Comparison> {
    if k < 3 || s < 1 {
        return Err(domain(format!("comparison needs k >= 3 and s >= 1 (got k = {k}, s = {s})")));
    }
    let n = k * (s + 1) + ell;
    let e0 = count_e0(n, k, s);
    let e1 = count_e1(n, k, s);
    let order = e1.cmp(&e0);
    let predicted = predicted_winner(k, ell as i128);
    let asserted = k <= ell + 3;
    if asserted && order == Ordering::Less {
        return Err(Error::Invariant(format!(
            "|E1| = {e1} < |E0| = {e0} at k = {k}, s = {s}, l = {ell}"
        )));
    }
    Ok(E0E1Comparison {
        e0,
        e1,
        order,
        predicted,
        asserted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps() -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(100))
    }

    fn big(v: u64) -> Option<BigUint> {
        Some(BigUint::from(v))
    }

    #[test]
    fn report_7_3_1() {
        let r = bounds_report(7, 3, 1, &eps()).unwrap();
        assert_eq!(r.a1, big(15));
        assert_eq!(r.ak, big(10));
        assert_eq!(r.emc, big(15));
        assert_eq!(r.e0, big(11));
        assert_eq!(r.e1, big(13));
        assert_eq!(r.stability, big(13));
        assert_eq!(r.bde, big(13));
        assert_eq!(r.hm, big(13));
        assert_eq!(r.winner, Some(Winner::E1));
        assert_eq!(r.predicted, Some(Winner::E1));
    }

    #[test]
    fn boundary_ties() {
        let r = bounds_report(6, 3, 1, &eps()).unwrap();
        assert_eq!((r.e0.clone(), r.e1.clone()), (big(10), big(10)));
        assert_eq!(r.winner, Some(Winner::Tie));
        assert_eq!(r.hm, None);
        let r = bounds_report(9, 3, 2, &eps()).unwrap();
        assert_eq!((r.e0, r.e1), (big(47), big(47)));
    }

    #[test]
    fn absent_entries() {
        let r = bounds_report(5, 3, 2, &eps()).unwrap();
        assert_eq!(r.e0, None);
        assert_eq!(r.emc, None);
        assert_eq!(r.bde, big(10));
        assert!(bounds_report(5, 3, 0, &eps()).is_err());
        assert!(bounds_report(5, 3, 1, &BigRational::one()).is_err());
    }

    #[test]
    fn comparisons() {
        let c = e0_e1_compare(3, 2, 1).unwrap();
        assert_eq!((c.e0, c.e1), (BigUint::from(48u32), BigUint::from(53u32)));
        assert_eq!(c.order, Ordering::Greater);
        assert!(c.asserted);

        let c = e0_e1_compare(7, 10_000, 1).unwrap();
        assert_eq!(c.order, Ordering::Less);
        assert_eq!(c.predicted, Winner::E0);
        assert!(!c.asserted);
        assert!(e0_e1_compare(2, 1, 0).is_err());
    }

    #[test]
    fn window() {
        // k = 3, n = 3s + 3 + l: the upper condition is 3s <= n - 2.
        assert!(big_clique_window(30, 3, 9));
        assert!(!big_clique_window(30, 3, 10));
        assert!(!big_clique_window(30, 3, 7));
    }

    #[test]
    fn big_clique_exact() {
        // k = 3, s = 1, n = 6, eps = 1/100: m = floor(2.97) = 2.
        // C(5,3) - 3.98 C(2,2) + (2 + 0.08 * 81) C(6,2) = 10 - 3.98 + 8.48 * 15 = 133.22
        assert_eq!(big_clique_bound(6, 3, 1, &eps()), BigInt::from(133));
    }
}
