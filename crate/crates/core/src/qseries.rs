//! Exact genus-1 q-expansions: eta powers, Eisenstein series, the
//! discriminant cusp form. A [`QSeries`] is a truncated expansion
//! `q^shift * sum_{e < bound} c_e q^e` with rational coefficients and an
//! optional fractional leading shift (denominator dividing 24).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{bernoulli, rat, rat_int, sigma, Rat};

/// Truncated one-variable q-expansion with exact rational coefficients.
///
/// All exponents `e` with `0 <= e < bound` are either stored or provably zero;
/// the `shift` is a global fractional q-power multiplying the whole series.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries {
    shift: Rat,
    coeffs: BTreeMap<i64, Rat>,
    bound: i64,
}

impl QSeries {
    pub fn new(shift: Rat, bound: i64) -> Self {
        assert!(bound >= 1, "bound must be >= 1");
        assert!(
            (BigInt::from(24i64) % shift.denom()).is_zero(),
            "shift denominator must divide 24"
        );
        QSeries {
            shift,
            coeffs: BTreeMap::new(),
            bound,
        }
    }

    pub fn one(bound: i64) -> Self {
        let mut s = QSeries::new(Rat::zero(), bound);
        s.set(0, Rat::one());
        s
    }

    pub fn shift(&self) -> &Rat {
        &self.shift
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Coefficient at relative exponent `e` (post-shift); zero when absent.
    pub fn coeff(&self, e: i64) -> Rat {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn set(&mut self, e: i64, v: Rat) {
        assert!((0..self.bound).contains(&e), "exponent out of range");
        if v.is_zero() {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest stored exponent, if any.
    pub fn leading_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        let mut out = QSeries::new(&self.shift + &other.shift, bound);
        for (ea, ca) in &self.coeffs {
            if *ea >= bound {
                break;
            }
            for (eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e >= bound {
                    break;
                }
                let term = ca * cb;
                let entry = out.coeffs.entry(e).or_insert_with(Rat::zero);
                *entry += term;
            }
        }
        out.coeffs.retain(|_, v| !v.is_zero());
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shift != other.shift {
            return Err(Error::Hypothesis(format!(
                "q-series shift mismatch: {} vs {}",
                self.shift, other.shift
            )));
        }
        let bound = self.bound.min(other.bound);
        let mut out = QSeries::new(self.shift.clone(), bound);
        for (e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if *e >= bound {
                continue;
            }
            let entry = out.coeffs.entry(*e).or_insert_with(Rat::zero);
            *entry += c;
        }
        out.coeffs.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            out.coeffs.clear();
            return out;
        }
        for v in out.coeffs.values_mut() {
            *v *= c;
        }
        out
    }

    /// Reciprocal of a series whose lowest stored coefficient sits at
    /// relative exponent 0 and is nonzero. The shift negates.
    pub fn recip(&self) -> Result<Self> {
        if self.leading_exponent() != Some(0) {
            return Err(Error::NonUnitLeading);
        }
        let dense = self.to_dense();
        let inv = recip_dense(&dense)?;
        let mut out = QSeries::new(-&self.shift, self.bound);
        for (e, v) in inv.into_iter().enumerate() {
            if !v.is_zero() {
                out.coeffs.insert(e as i64, v);
            }
        }
        Ok(out)
    }

    /// Strip the leading power of q: returns (series with lowest exponent 0
    /// and shift 0, total extracted q-power). Errors on the zero series.
    pub fn normalize_unit(&self) -> Result<(Self, Rat)> {
        let lead = self.leading_exponent().ok_or(Error::NonUnitLeading)?;
        let mut out = QSeries::new(Rat::zero(), self.bound - lead);
        for (e, v) in &self.coeffs {
            out.coeffs.insert(e - lead, v.clone());
        }
        Ok((out, &self.shift + rat_int(lead)))
    }

    fn to_dense(&self) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.bound as usize];
        for (e, c) in &self.coeffs {
            v[*e as usize] = c.clone();
        }
        v
    }
}

pub(crate) fn recip_dense(a: &[Rat]) -> Result<Vec<Rat>> {
    if a.is_empty() || a[0].is_zero() {
        return Err(Error::NonUnitLeading);
    }
    let lead_inv = Rat::one() / &a[0];
    let mut out = vec![Rat::zero(); a.len()];
    out[0] = lead_inv.clone();
    for e in 1..a.len() {
        let mut acc = Rat::zero();
        for j in 1..=e {
            if !a[j].is_zero() && !out[e - j].is_zero() {
                acc += &a[j] * &out[e - j];
            }
        }
        out[e] = -(acc * &lead_inv);
    }
    Ok(out)
}

/// eta(tau)^6 with shift 1/4, computed as the sixth power of the Euler
/// product Prod (1 - q^n).
pub fn eta_pow6(bound: i64) -> QSeries {
    let unit = euler_product(bound);
    let sq = unit.mul(&unit);
    let cube = sq.mul(&unit);
    let mut out = cube.mul(&cube);
    out.shift = rat(1, 4);
    out
}

fn euler_product(bound: i64) -> QSeries {
    let mut acc = QSeries::one(bound);
    for n in 1..bound {
        let mut factor = QSeries::one(bound);
        factor.set(n, -Rat::one());
        acc = acc.mul(&factor);
    }
    acc
}

/// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n
/// for even k >= 4.
pub fn eisenstein_q(k: u32, bound: i64) -> Result<QSeries> {
    if k < 4 || k % 2 != 0 {
        return Err(Error::BadArgument(
            k as i64,
            "eisenstein_q requires even k >= 4",
        ));
    }
    let factor = rat_int(-2 * k as i64) / bernoulli(k)?;
    let mut out = QSeries::new(Rat::zero(), bound);
    out.set(0, Rat::one());
    for n in 1..bound {
        out.set(n, &factor * Rat::from_integer(sigma(k - 1, n)));
    }
    Ok(out)
}

/// Discriminant cusp form Delta = (E4^3 - E6^2) / 1728, leading term q.
pub fn delta_q(bound: i64) -> QSeries {
    let e4 = eisenstein_q(4, bound).expect("k=4 valid");
    let e6 = eisenstein_q(6, bound).expect("k=6 valid");
    let e4cube = e4.mul(&e4).mul(&e4);
    let e6sq = e6.mul(&e6);
    let diff = e4cube.add(&e6sq.scale(&rat_int(-1))).expect("shifts match");
    diff.scale(&rat(1, 1728))
}
