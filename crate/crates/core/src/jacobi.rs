//! Two-variable Jacobi-form slices: the container for Fourier-Jacobi
//! coefficients phi_m(tau, z) and the index-1 building blocks used by the
//! lift (the weak forms of weight -2 and 0, and the Jacobi Eisenstein series
//! of weights 4 and 6).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qseries::{self, QSeries};
use crate::scalars::{rat_int, Coeff, Rat};

/// One Fourier-Jacobi slice: coefficients c(n, r) of weight `weight` and
/// index `index`, complete for all q-exponents `n < q_bound`.
///
/// Holomorphic slices (`weak == false`) satisfy c(n, r) = 0 whenever
/// 4 n m - r^2 < 0. Weak slices satisfy the envelope
/// r^2 - 4 n m <= m^2 + m instead.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiSlice<C> {
    weight: i64,
    index: i64,
    q_bound: i64,
    weak: bool,
    coeffs: BTreeMap<(i64, i64), C>,
}

impl<C: Coeff> JacobiSlice<C> {
    pub fn empty(weight: i64, index: i64, q_bound: i64, weak: bool) -> Self {
        JacobiSlice {
            weight,
            index,
            q_bound,
            weak,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs(
        weight: i64,
        index: i64,
        q_bound: i64,
        weak: bool,
        coeffs: BTreeMap<(i64, i64), C>,
    ) -> Result<Self> {
        let mut s = JacobiSlice {
            weight,
            index,
            q_bound,
            weak,
            coeffs,
        };
        s.coeffs.retain(|_, v| !v.is_zero_ref());
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        for &(n, r) in self.coeffs.keys() {
            if n < 0 || n >= self.q_bound {
                return Err(Error::ConstructionIntegrity(format!(
                    "slice exponent n={n} outside [0, {})",
                    self.q_bound
                )));
            }
            let disc = r * r - 4 * n * self.index;
            if self.weak {
                if disc > self.index * self.index + self.index {
                    return Err(Error::ConstructionIntegrity(format!(
                        "weak envelope violated at (n={n}, r={r}): r^2-4nm = {disc}"
                    )));
                }
            } else if disc > 0 {
                return Err(Error::ConstructionIntegrity(format!(
                    "holomorphic envelope violated at (n={n}, r={r})"
                )));
            }
        }
        Ok(())
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    pub fn q_bound(&self) -> i64 {
        self.q_bound
    }

    pub fn is_weak(&self) -> bool {
        self.weak
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff_ref(&self, n: i64, r: i64) -> Option<&C> {
        self.coeffs.get(&(n, r))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &C)> {
        self.coeffs.iter()
    }

    pub(crate) fn insert(&mut self, n: i64, r: i64, v: C) {
        if v.is_zero_ref() {
            self.coeffs.remove(&(n, r));
        } else {
            self.coeffs.insert((n, r), v);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.weight != other.weight || self.index != other.index {
            return Err(Error::SliceMismatch {
                wl: self.weight,
                il: self.index,
                wr: other.weight,
                ir: other.index,
            });
        }
        let mut out: JacobiSlice<C> = JacobiSlice::empty(
            self.weight,
            self.index,
            self.q_bound.min(other.q_bound),
            self.weak || other.weak,
        );
        for (&(n, r), c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if n >= out.q_bound {
                continue;
            }
            match out.coeffs.get_mut(&(n, r)) {
                Some(e) => *e = e.add_ref(c),
                None => {
                    out.coeffs.insert((n, r), c.clone());
                }
            }
        }
        out.coeffs.retain(|_, v| !v.is_zero_ref());
        Ok(out)
    }

    /// Exact convolution; weights and indices add, q-precision is the min of
    /// the operands'.
    pub fn mul(&self, other: &Self) -> Self {
        let q_bound = self.q_bound.min(other.q_bound);
        let mut out: JacobiSlice<C> = JacobiSlice::empty(
            self.weight + other.weight,
            self.index + other.index,
            q_bound,
            self.weak || other.weak,
        );
        for (&(na, ra), ca) in &self.coeffs {
            if na >= q_bound {
                continue;
            }
            for (&(nb, rb), cb) in &other.coeffs {
                let n = na + nb;
                if n >= q_bound {
                    continue;
                }
                let key = (n, ra + rb);
                let term = ca.mul_ref(cb);
                match out.coeffs.get_mut(&key) {
                    Some(e) => *e = e.add_ref(&term),
                    None => {
                        out.coeffs.insert(key, term);
                    }
                }
            }
        }
        out.coeffs.retain(|_, v| !v.is_zero_ref());
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = self.clone();
        if c.is_zero_ref() {
            out.coeffs.clear();
            return out;
        }
        for v in out.coeffs.values_mut() {
            *v = v.mul_ref(c);
        }
        out.coeffs.retain(|_, v| !v.is_zero_ref());
        out
    }

    /// True when every coefficient satisfies the holomorphic support
    /// condition 4 n m - r^2 >= 0.
    pub fn is_holomorphic_supported(&self) -> bool {
        self.coeffs
            .keys()
            .all(|&(n, r)| 4 * n * self.index - r * r >= 0)
    }

    /// Reinterpret a slice whose support already satisfies the holomorphic
    /// condition as a holomorphic (non-weak) slice.
    pub fn into_holomorphic(mut self) -> Result<Self> {
        if !self.is_holomorphic_supported() {
            return Err(Error::ConstructionIntegrity(
                "slice support violates the holomorphic condition".into(),
            ));
        }
        self.weak = false;
        Ok(self)
    }

    /// True iff c(n, r) == c(n, -r) everywhere.
    pub fn is_r_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&(n, r), c)| self.coeffs.get(&(n, -r)).is_some_and(|d| d == c))
    }
}

impl JacobiSlice<Rat> {
    /// Multiply by a shift-0 one-variable q-series carrying weight
    /// `qs_weight`.
    pub fn mul_qseries(&self, qs: &QSeries, qs_weight: i64) -> Self {
        assert!(qs.shift().is_zero(), "series with nonzero shift");
        let q_bound = self.q_bound.min(qs.bound());
        let mut out = JacobiSlice::empty(
            self.weight + qs_weight,
            self.index,
            q_bound,
            self.weak,
        );
        for (&(na, r), ca) in &self.coeffs {
            if na >= q_bound {
                continue;
            }
            for (eb, cb) in qs.iter() {
                let n = na + eb;
                if n >= q_bound {
                    break;
                }
                let term = ca * cb;
                match out.coeffs.get_mut(&(n, r)) {
                    Some(e) => *e += term,
                    None => {
                        out.coeffs.insert((n, r), term);
                    }
                }
            }
        }
        out.coeffs.retain(|_, v| !v.is_zero_ref());
        out
    }
}

// ---------------------------------------------------------------------------
// Theta building blocks.
//
// Intermediate two-variable tables are kept on a scaled exponent grid: the
// key is (s, r) where the true q-exponent is s / scale. theta_11^2 and
// theta_2^2 drop a global q^{1/4} which cancels against eta^6 resp.
// theta_2(tau,0)^2, so those live on the integer grid directly; the
// theta_3/theta_4 quotients live on the half-integer grid (scale 2) and
// their half-exponent parts cancel in the sum.
// ---------------------------------------------------------------------------

type Table = BTreeMap<(i64, i64), Rat>;

fn table_add_term(t: &mut Table, key: (i64, i64), v: Rat) {
    let e = t.entry(key).or_insert_with(Rat::zero);
    *e += v;
}

fn table_mul_series(t: &Table, series: &[Rat], cap: i64) -> Table {
    let mut out = Table::new();
    for (&(s, r), c) in t {
        if c.is_zero() {
            continue;
        }
        for (e, v) in series.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let s2 = s + e as i64;
            if s2 >= cap {
                break;
            }
            table_add_term(&mut out, (s2, r), c * v);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// theta_11(tau, z)^2 without its global q^{1/4}: the square of the real sum
/// sum_n (-1)^n q^{(2n+1)^2/8} xi^{(n+1/2)}, tabulated on integer exponents.
fn theta11_sq(bound: i64) -> Table {
    let mut out = Table::new();
    let reach = half_odd_reach(bound);
    for n1 in -reach..=reach {
        for n2 in -reach..=reach {
            let a = 2 * n1 + 1;
            let b = 2 * n2 + 1;
            let num = a * a + b * b - 2;
            debug_assert_eq!(num % 8, 0);
            let s = num / 8;
            if s >= bound {
                continue;
            }
            let sign = if (n1 + n2) % 2 == 0 { 1 } else { -1 };
            table_add_term(&mut out, (s, n1 + n2 + 1), rat_int(sign));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn half_odd_reach(bound: i64) -> i64 {
    // (2n+1)^2/8 < bound + 1  =>  |n| <= ceil(sqrt(2 bound)) + 2 is ample
    (2.0 * (bound as f64)).sqrt().ceil() as i64 + 2
}

/// Dense one-variable series on the integer grid for eta^6 / q^{1/4}.
fn eta6_unit_dense(bound: i64) -> Vec<Rat> {
    let eta6 = qseries::eta_pow6(bound);
    let mut v = vec![Rat::zero(); bound as usize];
    for (e, c) in eta6.iter() {
        v[*e as usize] = c.clone();
    }
    v
}

/// The weak Jacobi form of weight -2 and index 1: theta_11^2 / eta^6 with
/// the sign fixed so that the q^0 row is xi - 2 + xi^{-1}.
pub fn weak_jacobi_m2(bound: i64) -> JacobiSlice<Rat> {
    assert!(bound >= 1);
    let numer = theta11_sq(bound);
    let denom_inv = qseries::recip_dense(&eta6_unit_dense(bound)).expect("eta6 unit");
    let coeffs = table_mul_series(&numer, &denom_inv, bound);
    let mut out = JacobiSlice::empty(-2, 1, bound, true);
    out.coeffs = coeffs;
    out.validate().expect("weak envelope for phi_{-2,1}");
    debug_assert!(out.is_r_symmetric());
    out
}

/// theta_2(tau, z)^2 without its global q^{1/4} (z-dependent numerator) and
/// theta_2(tau, 0)^2 likewise (denominator), on the integer grid.
fn theta2_sq(bound: i64) -> (Table, Vec<Rat>) {
    let reach = half_odd_reach(bound);
    let mut table = Table::new();
    let mut dense = vec![Rat::zero(); bound as usize];
    for n1 in -reach..=reach {
        for n2 in -reach..=reach {
            let a = 2 * n1 + 1;
            let b = 2 * n2 + 1;
            let num = a * a + b * b - 2;
            debug_assert_eq!(num % 8, 0);
            let s = num / 8;
            if s >= bound {
                continue;
            }
            table_add_term(&mut table, (s, n1 + n2 + 1), Rat::one());
            dense[s as usize] += Rat::one();
        }
    }
    table.retain(|_, v| !v.is_zero());
    (table, dense)
}

/// theta_3 / theta_4 squares on the half-integer grid (scale 2): the key's
/// first component is twice the q-exponent. `signed` selects theta_4.
fn theta34_sq(bound: i64, signed: bool) -> (Table, Vec<Rat>) {
    let cap = 2 * bound;
    let reach = (2.0 * (bound as f64)).sqrt().ceil() as i64 + 2;
    let mut table = Table::new();
    let mut dense = vec![Rat::zero(); cap as usize];
    for n1 in -reach..=reach {
        for n2 in -reach..=reach {
            let s = n1 * n1 + n2 * n2; // doubled exponent
            if s >= cap {
                continue;
            }
            let sign = if signed && (n1 + n2) % 2 != 0 { -1 } else { 1 };
            table_add_term(&mut table, (s, n1 + n2), rat_int(sign));
            dense[s as usize] += rat_int(sign);
        }
    }
    table.retain(|_, v| !v.is_zero());
    (table, dense)
}

/// The weak Jacobi form of weight 0 and index 1:
/// 4 (theta_2(z)^2/theta_2^2 + theta_3(z)^2/theta_3^2 + theta_4(z)^2/theta_4^2),
/// with q^0 row xi + 10 + xi^{-1}.
pub fn weak_jacobi_0(bound: i64) -> JacobiSlice<Rat> {
    assert!(bound >= 1);
    // theta_2 quotient on the integer grid
    let (p2, u2) = theta2_sq(bound);
    let q2 = table_mul_series(&p2, &qseries::recip_dense(&u2).expect("theta2 unit"), bound);

    // theta_3 and theta_4 quotients on the half grid
    let (p3, u3) = theta34_sq(bound, false);
    let q3 = table_mul_series(&p3, &qseries::recip_dense(&u3).expect("theta3 unit"), 2 * bound);
    let (p4, u4) = theta34_sq(bound, true);
    let q4 = table_mul_series(&p4, &qseries::recip_dense(&u4).expect("theta4 unit"), 2 * bound);

    // q3 + q4: half-exponent terms must cancel exactly
    let mut sum34 = q3;
    for (key, v) in q4 {
        table_add_term(&mut sum34, key, v);
    }
    sum34.retain(|_, v| !v.is_zero());

    let mut coeffs = Table::new();
    for (&(s, r), c) in &sum34 {
        assert!(
            s % 2 == 0,
            "half-integer exponent {s}/2 survived in theta_3^2/theta_3^2 + theta_4^2/theta_4^2"
        );
        table_add_term(&mut coeffs, (s / 2, r), c.clone());
    }
    for (&(s, r), c) in &q2 {
        table_add_term(&mut coeffs, (s, r), c.clone());
    }
    for v in coeffs.values_mut() {
        *v *= rat_int(4);
    }
    coeffs.retain(|_, v| !v.is_zero());

    let mut out = JacobiSlice::empty(0, 1, bound, true);
    out.coeffs = coeffs;
    out.validate().expect("weak envelope for phi_{0,1}");
    debug_assert!(out.is_r_symmetric());
    out
}

/// The Jacobi Eisenstein series of weight k in {4, 6} and index 1, pinned as
/// the unique combination alpha E_k phi_{0,1} + beta E_{k+2} phi_{-2,1}
/// (with E_8 = E_4^2) satisfying c(0,0) = 1 and c(0,1) = 0. The result is
/// holomorphic, which is asserted.
pub fn jacobi_eisenstein(k: u32, bound: i64) -> Result<JacobiSlice<Rat>> {
    if k != 4 && k != 6 {
        return Err(Error::BadArgument(
            k as i64,
            "jacobi_eisenstein requires k in {4, 6}",
        ));
    }
    let phi0 = weak_jacobi_0(bound);
    let phim2 = weak_jacobi_m2(bound);
    let ek = qseries::eisenstein_q(k, bound)?;
    let ek2 = if k == 4 {
        qseries::eisenstein_q(6, bound)?
    } else {
        let e4 = qseries::eisenstein_q(4, bound)?;
        e4.mul(&e4)
    };
    let a_side = phi0.mul_qseries(&ek, k as i64);
    let b_side = phim2.mul_qseries(&ek2, (k + 2) as i64);

    let get = |s: &JacobiSlice<Rat>, n: i64, r: i64| {
        s.coeff_ref(n, r).cloned().unwrap_or_else(Rat::zero)
    };
    // [a11 a12; a21 a22] [alpha; beta] = [1; 0]
    let (a11, a12) = (get(&a_side, 0, 0), get(&b_side, 0, 0));
    let (a21, a22) = (get(&a_side, 0, 1), get(&b_side, 0, 1));
    let det = &a11 * &a22 - &a12 * &a21;
    if det.is_zero() {
        return Err(Error::SingularSystem(k as i64));
    }
    let alpha = &a22 / &det;
    let beta = -&a21 / &det;

    let combined = a_side.scale(&alpha).add(&b_side.scale(&beta))?;
    if get(&combined, 0, 0) != Rat::one() || !get(&combined, 0, 1).is_zero() {
        return Err(Error::ConstructionIntegrity(format!(
            "Jacobi Eisenstein normalization failed for k={k}"
        )));
    }
    combined.into_holomorphic().map_err(|_| {
        Error::ConstructionIntegrity(format!(
            "Jacobi Eisenstein series of weight {k} is not holomorphic"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent brute-force expansion of theta_11^2/eta^6 used as the
    /// oracle for the weak weight -2 form: eta via the pentagonal-number
    /// series, division by school long division. Integer arithmetic only.
    mod oracle {
        use std::collections::BTreeMap;

        /// Coefficients of Prod (1 - q^n) via Euler's pentagonal theorem.
        pub fn euler_pentagonal(bound: i64) -> Vec<i64> {
            let mut v = vec![0i64; bound as usize];
            let mut k = 0i64;
            loop {
                let advanced = [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2];
                if advanced[0] >= bound && advanced[1] >= bound && k > 0 {
                    break;
                }
                let sign = if k % 2 == 0 { 1 } else { -1 };
                for (i, &e) in advanced.iter().enumerate() {
                    if e < bound && !(k == 0 && i == 1) {
                        v[e as usize] += sign;
                    }
                }
                k += 1;
            }
            v
        }

        pub fn series_pow(a: &[i64], e: u32) -> Vec<i64> {
            let mut acc = vec![0i64; a.len()];
            acc[0] = 1;
            for _ in 0..e {
                acc = series_mul(&acc, a);
            }
            acc
        }

        pub fn series_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
            let n = a.len().min(b.len());
            let mut out = vec![0i64; n];
            for i in 0..n {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..n - i {
                    out[i + j] += a[i] * b[j];
                }
            }
            out
        }

        /// Long division of a (q, xi)-table by a unit q-series.
        pub fn table_div(
            numer: &BTreeMap<(i64, i64), i64>,
            den: &[i64],
            bound: i64,
        ) -> BTreeMap<(i64, i64), i64> {
            assert_eq!(den[0].abs(), 1);
            let mut rem = numer.clone();
            let mut out = BTreeMap::new();
            for n in 0..bound {
                let row: Vec<(i64, i64)> = rem
                    .iter()
                    .filter(|(&(nn, _), _)| nn == n)
                    .map(|(&(_, r), &c)| (r, c))
                    .collect();
                for (r, c) in row {
                    let q = c / den[0];
                    if q == 0 {
                        continue;
                    }
                    out.insert((n, r), q);
                    for (e, &d) in den.iter().enumerate() {
                        if d == 0 {
                            continue;
                        }
                        let key = (n + e as i64, r);
                        if key.0 >= bound {
                            break;
                        }
                        *rem.entry(key).or_insert(0) -= q * d;
                    }
                }
            }
            assert!(
                rem.iter().all(|(&(n, _), &c)| n >= bound || c == 0),
                "nonzero remainder below bound"
            );
            out
        }

        pub fn phi_m2(bound: i64) -> BTreeMap<(i64, i64), i64> {
            // numerator: square of sum (-1)^n q^{((2n+1)^2-1)/8} xi^{n+...}
            let mut numer: BTreeMap<(i64, i64), i64> = BTreeMap::new();
            let reach = 2 * bound + 4;
            for n1 in -reach..=reach {
                for n2 in -reach..=reach {
                    let (a, b) = (2 * n1 + 1, 2 * n2 + 1);
                    let s = (a * a + b * b - 2) / 8;
                    if !(0..bound).contains(&s) {
                        continue;
                    }
                    let sign = if (n1 + n2).rem_euclid(2) == 0 { 1 } else { -1 };
                    *numer.entry((s, n1 + n2 + 1)).or_insert(0) += sign;
                }
            }
            numer.retain(|_, v| *v != 0);
            let eta6 = series_pow(&euler_pentagonal(bound), 6);
            table_div(&numer, &eta6, bound)
        }
    }

    #[test]
    fn phi_m2_leading_row() {
        let phi = weak_jacobi_m2(6);
        assert_eq!(phi.weight(), -2);
        assert_eq!(phi.index(), 1);
        assert!(phi.is_weak());
        assert_eq!(phi.coeff_ref(0, 1), Some(&rat_int(1)));
        assert_eq!(phi.coeff_ref(0, -1), Some(&rat_int(1)));
        assert_eq!(phi.coeff_ref(0, 0), Some(&rat_int(-2)));
        assert_eq!(phi.coeff_ref(0, 2), None);
    }

    #[test]
    fn phi_m2_matches_brute_force_oracle() {
        let bound = 8;
        let phi = weak_jacobi_m2(bound);
        let want = oracle::phi_m2(bound);
        for (&(n, r), &c) in &want {
            assert_eq!(
                phi.coeff_ref(n, r).cloned().unwrap_or_else(Rat::zero),
                rat_int(c),
                "mismatch at (n={n}, r={r})"
            );
        }
        for (&(n, r), c) in phi.iter() {
            assert_eq!(
                rat_int(*want.get(&(n, r)).unwrap_or(&0)),
                c.clone(),
                "extra coefficient at (n={n}, r={r})"
            );
        }
    }

    #[test]
    fn phi_m2_integer_exponents_and_symmetry() {
        let phi = weak_jacobi_m2(10);
        assert!(phi.is_r_symmetric());
        for (_, c) in phi.iter() {
            assert!(c.is_integer(), "non-integer coefficient {c}");
        }
    }

    #[test]
    fn phi_0_leading_row() {
        let phi = weak_jacobi_0(6);
        assert_eq!(phi.weight(), 0);
        assert_eq!(phi.index(), 1);
        assert_eq!(phi.coeff_ref(0, 0), Some(&rat_int(10)));
        assert_eq!(phi.coeff_ref(0, 1), Some(&rat_int(1)));
        assert_eq!(phi.coeff_ref(0, -1), Some(&rat_int(1)));
        for r in 2..6 {
            assert_eq!(phi.coeff_ref(0, r), None);
            assert_eq!(phi.coeff_ref(0, -r), None);
        }
        assert!(phi.is_r_symmetric());
    }

    #[test]
    fn jacobi_eisenstein_normalization() {
        for k in [4u32, 6] {
            let e = jacobi_eisenstein(k, 6).unwrap();
            assert!(!e.is_weak());
            assert_eq!(e.coeff_ref(0, 0), Some(&rat_int(1)));
            assert_eq!(e.coeff_ref(0, 1), None);
            assert!(e.is_holomorphic_supported());
            assert!(e.is_r_symmetric());
            // envelope checked exhaustively to the bound
            for (&(n, r), _) in e.iter() {
                assert!(4 * n - r * r >= 0, "envelope at ({n},{r})");
            }
        }
    }

    #[test]
    fn slice_mul_phi_times_delta() {
        let phi = weak_jacobi_m2(8);
        let delta = qseries::delta_q(8);
        let cusp = phi.mul_qseries(&delta, 12);
        assert_eq!(cusp.weight(), 10);
        assert_eq!(cusp.index(), 1);
        assert_eq!(cusp.coeff_ref(1, 1), Some(&rat_int(1)));
        assert_eq!(cusp.coeff_ref(1, 0), Some(&rat_int(-2)));
        assert!(cusp.clone().into_holomorphic().is_ok());
    }

    #[test]
    fn slice_scale_zero() {
        let phi = weak_jacobi_m2(4);
        assert!(phi.scale(&Rat::zero()).is_zero());
    }

    #[test]
    fn slice_add_mismatch() {
        let a = weak_jacobi_m2(4);
        let b = weak_jacobi_0(4);
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn denominators_divide_twelve() {
        // before final normalization every building block has denominator
        // dividing 12
        let twelve = num_bigint::BigInt::from(12);
        for slice in [weak_jacobi_m2(6), weak_jacobi_0(6)] {
            for (_, c) in slice.iter() {
                assert!((&twelve % c.denom()).is_zero());
            }
        }
        for k in [4u32, 6] {
            let e = jacobi_eisenstein(k, 6).unwrap();
            for (_, c) in e.iter() {
                assert!((&twelve % c.denom()).is_zero());
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn slice_ring_distributivity(
            entries_a in proptest::collection::vec((0i64..4, -2i64..3, -5i64..6), 0..6),
            entries_b in proptest::collection::vec((0i64..4, -2i64..3, -5i64..6), 0..6),
            entries_c in proptest::collection::vec((0i64..4, -2i64..3, -5i64..6), 0..6),
        ) {
            let build = |entries: &[(i64, i64, i64)]| {
                let mut m = BTreeMap::new();
                for &(n, r, v) in entries {
                    if r * r <= 4 * n {
                        *m.entry((n, r)).or_insert_with(Rat::zero) += rat_int(v);
                    }
                }
                JacobiSlice::from_coeffs(0, 1, 8, false, m).unwrap()
            };
            let (a, b, c) = (build(&entries_a), build(&entries_b), build(&entries_c));
            let lhs = a.add(&b).unwrap().mul(&c);
            let rhs = a.mul(&c).add(&b.mul(&c)).unwrap();
            proptest::prop_assert_eq!(lhs, rhs);
        }
    }
}
