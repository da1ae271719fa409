//! The genus-2 expansion container and the operators acting on it: ring
//! arithmetic, Fourier-Jacobi slicing, the Witt restriction, the determinant
//! operator, U(p), slice orders and reduction mod p.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::jacobi::JacobiSlice;
use crate::scalars::{reduce_rat, v_p, Coeff, Fp, Prime, Rat, Valuation};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Index triple (n, r, m) of a Fourier coefficient A(n, r, m), corresponding
/// to the even matrix T = [[2n, r], [r, 2m]].
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Index {
    pub n: i64,
    pub r: i64,
    pub m: i64,
}

impl Index {
    pub fn new(n: i64, r: i64, m: i64) -> Self {
        Index { n, r, m }
    }

    /// det T = 4nm - r^2.
    pub fn det(self) -> i64 {
        4 * self.n * self.m - self.r * self.r
    }

    /// tr T = 2n + 2m (trace of the even matrix).
    pub fn trace(self) -> i64 {
        2 * (self.n + self.m)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.r, self.m)
    }
}

/// Level tag: full modular group or a genus-2 Gamma_0(N).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Level {
    One,
    Gamma0(u32),
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::One => write!(f, "1"),
            Level::Gamma0(n) => write!(f, "Gamma0({n}) genus 2"),
        }
    }
}

/// Truncated genus-2 Fourier expansion. Coefficients are complete for all
/// `n <= box_bound` and `m <= box_bound` (every admissible r); an absent key
/// is an exact zero inside that box. The support always satisfies n, m >= 0
/// and 4nm - r^2 >= 0.
///
/// The `modulus` field is the ring marker: `None` for exact rational
/// coefficients, `Some(p)` for residues mod p.
#[derive(Clone, Debug)]
pub struct Expansion<C> {
    weight: i64,
    level: Level,
    box_bound: i64,
    modulus: Option<Prime>,
    coeffs: BTreeMap<Index, C>,
    note: String,
    d_applied: u32,
}

pub type ExactExpansion = Expansion<Rat>;
pub type ModExpansion = Expansion<Fp>;

impl<C: Coeff> PartialEq for Expansion<C> {
    /// Equality of mathematical content; the free-text note and the formal
    /// determinant-operator counter are not compared.
    fn eq(&self, other: &Self) -> bool {
        self.weight == other.weight
            && self.level == other.level
            && self.box_bound == other.box_bound
            && self.modulus == other.modulus
            && self.coeffs == other.coeffs
    }
}

impl<C: Coeff> Expansion<C> {
    pub fn zero(weight: i64, level: Level, box_bound: i64, modulus: Option<Prime>) -> Self {
        assert!(box_bound >= 0);
        Expansion {
            weight,
            level,
            box_bound,
            modulus,
            coeffs: BTreeMap::new(),
            note: String::new(),
            d_applied: 0,
        }
    }

    pub fn from_coeffs(
        weight: i64,
        level: Level,
        box_bound: i64,
        modulus: Option<Prime>,
        coeffs: BTreeMap<Index, C>,
    ) -> Result<Self> {
        for idx in coeffs.keys() {
            if idx.n < 0 || idx.m < 0 || idx.n > box_bound || idx.m > box_bound {
                return Err(Error::Format(format!(
                    "index {idx} outside box {box_bound}"
                )));
            }
            if idx.det() < 0 {
                return Err(Error::Format(format!(
                    "index {idx} violates 4nm - r^2 >= 0"
                )));
            }
        }
        let mut coeffs = coeffs;
        coeffs.retain(|_, v| !v.is_zero_ref());
        Ok(Expansion {
            weight,
            level,
            box_bound,
            modulus,
            coeffs,
            note: String::new(),
            d_applied: 0,
        })
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn box_bound(&self) -> i64 {
        self.box_bound
    }

    pub fn modulus(&self) -> Option<Prime> {
        self.modulus
    }

    pub fn note(&self) -> &str {
        &self.note
    }

    pub fn set_note(&mut self, note: impl Into<String>) {
        self.note = note.into();
    }

    /// Number of applications of the determinant operator recorded on this
    /// expansion (formal weight bookkeeping: +2 per application).
    pub fn d_applied(&self) -> u32 {
        self.d_applied
    }

    pub fn coeff_ref(&self, idx: Index) -> Option<&C> {
        self.coeffs.get(&idx)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Index, &C)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn insert(&mut self, idx: Index, v: C) {
        if v.is_zero_ref() {
            self.coeffs.remove(&idx);
        } else {
            self.coeffs.insert(idx, v);
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::RingMismatch {
                left: self.modulus.map(Prime::get),
                right: other.modulus.map(Prime::get),
            });
        }
        if self.level != other.level {
            return Err(Error::LevelMismatch {
                left: self.level.to_string(),
                right: other.level.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.weight != other.weight {
            return Err(Error::WeightMismatch {
                left: self.weight,
                right: other.weight,
            });
        }
        let box_bound = self.box_bound.min(other.box_bound);
        let mut out: Expansion<C> = Expansion::zero(self.weight, self.level, box_bound, self.modulus);
        for (idx, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if idx.n > box_bound || idx.m > box_bound {
                continue;
            }
            match out.coeffs.get_mut(idx) {
                Some(e) => *e = e.add_ref(c),
                None => {
                    out.coeffs.insert(*idx, c.clone());
                }
            }
        }
        out.coeffs.retain(|_, v| !v.is_zero_ref());
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = self.clone();
        out.note = String::new();
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

    pub fn scale_int(&self, n: i64) -> Self {
        let mut out = self.clone();
        out.note = String::new();
        for v in out.coeffs.values_mut() {
            *v = v.scale_int(n);
        }
        out.coeffs.retain(|_, v| !v.is_zero_ref());
        out
    }

    pub fn neg(&self) -> Self {
        self.scale_int(-1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Exact convolution. Box-closure holds because index components add and
    /// are nonnegative: the product is complete to min of the operand boxes.
    /// Weights add under multiplication.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        #[cfg(feature = "parallel")]
        {
            self.mul_dispatch(other, true)
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.mul_dispatch(other, false)
        }
    }

    /// Sequential reference path for [`Expansion::mul`]; results are
    /// bit-identical to the parallel path.
    pub fn mul_seq(&self, other: &Self) -> Result<Self> {
        self.mul_dispatch(other, false)
    }

    fn mul_dispatch(&self, other: &Self, parallel: bool) -> Result<Self> {
        self.check_ring(other)?;
        let box_bound = self.box_bound.min(other.box_bound);
        let cells_a = group_cells(&self.coeffs);
        let cells_b = group_cells(&other.coeffs);
        let targets: Vec<(i64, i64)> = (0..=box_bound)
            .flat_map(|n| (0..=box_bound).map(move |m| (n, m)))
            .collect();

        let compute = |&(n, m): &(i64, i64)| -> ((i64, i64), Vec<(i64, C)>) {
            let mut row: BTreeMap<i64, C> = BTreeMap::new();
            for (&(na, ma), row_a) in cells_a.range((0, 0)..=(n, m)) {
                if na > n || ma > m {
                    continue;
                }
                if let Some(row_b) = cells_b.get(&(n - na, m - ma)) {
                    for (ra, ca) in row_a {
                        for (rb, cb) in row_b {
                            let term = ca.mul_ref(cb);
                            match row.get_mut(&(ra + rb)) {
                                Some(e) => *e = e.add_ref(&term),
                                None => {
                                    row.insert(ra + rb, term);
                                }
                            }
                        }
                    }
                }
            }
            let row: Vec<(i64, C)> = row
                .into_iter()
                .filter(|(_, v)| !v.is_zero_ref())
                .collect();
            ((n, m), row)
        };

        let rows: Vec<((i64, i64), Vec<(i64, C)>)> = if parallel {
            #[cfg(feature = "parallel")]
            {
                targets.par_iter().map(compute).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                targets.iter().map(compute).collect()
            }
        } else {
            targets.iter().map(compute).collect()
        };

        let mut out = Expansion::zero(
            self.weight + other.weight,
            self.level,
            box_bound,
            self.modulus,
        );
        for ((n, m), row) in rows {
            for (r, v) in row {
                out.coeffs.insert(Index::new(n, r, m), v);
            }
        }
        Ok(out)
    }

    /// Restrict to a smaller box.
    pub fn restrict_box(&self, new_box: i64) -> Self {
        assert!(new_box <= self.box_bound);
        let mut out = self.clone();
        out.box_bound = new_box;
        out.coeffs.retain(|idx, _| idx.n <= new_box && idx.m <= new_box);
        out
    }

    /// The m-th Fourier-Jacobi slice phi_m, complete for q-exponents
    /// n <= box_bound.
    pub fn fj_slice(&self, m: i64) -> Result<JacobiSlice<C>> {
        if m < 0 || m > self.box_bound {
            return Err(Error::SliceNotComplete {
                m,
                box_bound: self.box_bound,
            });
        }
        let mut coeffs = BTreeMap::new();
        for (idx, c) in &self.coeffs {
            if idx.m == m {
                coeffs.insert((idx.n, idx.r), c.clone());
            }
        }
        JacobiSlice::from_coeffs(self.weight, m, self.box_bound + 1, false, coeffs)
    }

    /// Witt restriction z = 0: W(F)(n, m) = sum_r A(n, r, m).
    pub fn witt(&self) -> WittPair<C> {
        let mut entries: BTreeMap<(i64, i64), C> = BTreeMap::new();
        for (idx, c) in &self.coeffs {
            match entries.get_mut(&(idx.n, idx.m)) {
                Some(e) => *e = e.add_ref(c),
                None => {
                    entries.insert((idx.n, idx.m), c.clone());
                }
            }
        }
        entries.retain(|_, v| !v.is_zero_ref());
        WittPair {
            box_bound: self.box_bound,
            modulus: self.modulus,
            entries,
        }
    }

    /// Determinant operator: multiplies each coefficient by det T = 4nm - r^2.
    /// Coefficients with det T = 0 are killed. The weight is formal after
    /// this ("+2 per application"); the `d_applied` counter records it.
    pub fn d_op(&self) -> Self {
        let mut out = self.clone();
        out.coeffs = self
            .coeffs
            .iter()
            .map(|(idx, c)| (*idx, c.scale_int(idx.det())))
            .filter(|(_, v)| !v.is_zero_ref())
            .collect();
        out.d_applied = self.d_applied + 1;
        out.note = format!("D^{} applied (formal weight +2 each)", out.d_applied);
        out
    }

    /// Atkin-style U(p): keeps exactly the coefficients with p | det T
    /// (det T = 0 counts as divisible).
    pub fn u_p(&self, p: Prime) -> Self {
        let mut out = self.clone();
        let pm = p.get() as i64;
        out.coeffs.retain(|idx, _| idx.det() % pm == 0);
        out.note = format!("U({}) applied", p.get());
        out
    }

    /// Verify the level-1 unimodular symmetries A(n,r,m) = A(m,r,n) =
    /// A(n,-r,m) and A(n,r,m) = A(n, r+2n, n+r+m) wherever both indices lie
    /// inside the box. Report-only.
    pub fn gl2_orbit_check(&self) -> Result<OrbitReport> {
        if self.level != Level::One {
            return Err(Error::Hypothesis(
                "gl2_orbit_check requires level 1".into(),
            ));
        }
        let mut violations = Vec::new();
        let b = self.box_bound;
        let mut check = |src: Index, dst: Index, tag: &'static str| {
            if dst.n < 0 || dst.m < 0 || dst.n > b || dst.m > b {
                return;
            }
            let a = self.coeffs.get(&src);
            let c = self.coeffs.get(&dst);
            let equal = match (a, c) {
                (Some(x), Some(y)) => x == y,
                (None, None) => true,
                _ => false,
            };
            if !equal {
                violations.push(OrbitViolation { src, dst, tag });
            }
        };
        for idx in self.coeffs.keys() {
            check(*idx, Index::new(idx.m, idx.r, idx.n), "swap");
            check(*idx, Index::new(idx.n, -idx.r, idx.m), "negate");
            check(
                *idx,
                Index::new(idx.n, idx.r + 2 * idx.n, idx.n + idx.r + idx.m),
                "shear",
            );
            // inverse shear, so a stored target with an absent source is
            // also caught from the stored side
            check(
                *idx,
                Index::new(idx.n, idx.r - 2 * idx.n, idx.n - idx.r + idx.m),
                "shear-inv",
            );
        }
        Ok(OrbitReport {
            box_bound: b,
            checked: self.coeffs.len(),
            violations,
        })
    }
}

fn group_cells<C: Coeff>(coeffs: &BTreeMap<Index, C>) -> BTreeMap<(i64, i64), Vec<(i64, C)>> {
    let mut cells: BTreeMap<(i64, i64), Vec<(i64, C)>> = BTreeMap::new();
    for (idx, c) in coeffs {
        cells
            .entry((idx.n, idx.m))
            .or_default()
            .push((idx.r, c.clone()));
    }
    cells
}

impl Expansion<Rat> {
    /// Coefficient-wise reduction mod p; every stored coefficient must be
    /// p-integral, otherwise the offending index is reported.
    pub fn reduce(&self, p: Prime) -> Result<Expansion<Fp>> {
        let mut out = Expansion::zero(self.weight, self.level, self.box_bound, Some(p));
        out.note = self.note.clone();
        out.d_applied = self.d_applied;
        for (idx, c) in &self.coeffs {
            let r = reduce_rat(c, p).map_err(|_| Error::NotPIntegralAt {
                n: idx.n,
                r: idx.r,
                m: idx.m,
                num: c.numer().clone(),
                den: c.denom().clone(),
                p: p.get(),
            })?;
            if !r.is_zero() {
                out.coeffs.insert(*idx, r);
            }
        }
        Ok(out)
    }

    /// Minimal p-valuation over the stored box (+inf for the zero expansion).
    pub fn v_p_form(&self, p: Prime) -> Valuation {
        self.coeffs
            .values()
            .fold(Valuation::Infinite, |acc, c| acc.min(v_p(c, p)))
    }

    /// Index of the first Fourier-Jacobi slice not vanishing mod p, or the
    /// box-limited statement that all computed slices vanish.
    ///
    /// Requires v_p(F) >= 0 over the box.
    pub fn ord_p(&self, p: Prime) -> Result<OrdResult> {
        if let Valuation::Finite(v) = self.v_p_form(p) {
            if v < 0 {
                return Err(Error::Hypothesis(format!(
                    "ord_p requires a {p}-integral expansion (v_p = {v})"
                )));
            }
        }
        for m in 0..=self.box_bound {
            let nonzero = self
                .coeffs
                .iter()
                .any(|(idx, c)| idx.m == m && matches!(v_p(c, p), Valuation::Finite(0)));
            if nonzero {
                return Ok(OrdResult::Slice(m));
            }
        }
        Ok(OrdResult::BeyondBox {
            box_bound: self.box_bound,
        })
    }
}

impl Expansion<Fp> {
    /// The least m <= box with slice phi_m nonzero, if any.
    pub fn first_nonzero_slice(&self) -> OrdResult {
        match self.coeffs.keys().map(|idx| idx.m).min() {
            Some(m) => OrdResult::Slice(m),
            None => OrdResult::BeyondBox {
                box_bound: self.box_bound,
            },
        }
    }
}

/// Outcome of a slice-order computation on finite data. The artifact never
/// claims an infinite statement from a finite box: when every computed slice
/// vanishes the result is reported as ">= B+1: box-limited".
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum OrdResult {
    Slice(i64),
    BeyondBox { box_bound: i64 },
}

impl fmt::Display for OrdResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdResult::Slice(m) => write!(f, "{m}"),
            OrdResult::BeyondBox { box_bound } => {
                write!(f, ">= {}: box-limited", box_bound + 1)
            }
        }
    }
}

/// Image of the Witt restriction: a two-variable table (n, m) -> scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct WittPair<C> {
    box_bound: i64,
    modulus: Option<Prime>,
    entries: BTreeMap<(i64, i64), C>,
}

impl<C: Coeff> WittPair<C> {
    pub fn box_bound(&self) -> i64 {
        self.box_bound
    }

    pub fn entry(&self, n: i64, m: i64) -> Option<&C> {
        self.entries.get(&(n, m))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &C)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn modulus(&self) -> Option<Prime> {
        self.modulus
    }

    /// Product as two-variable series (used to check that the Witt
    /// restriction is a ring map).
    pub fn mul(&self, other: &Self) -> Self {
        let box_bound = self.box_bound.min(other.box_bound);
        let mut entries: BTreeMap<(i64, i64), C> = BTreeMap::new();
        for (&(na, ma), ca) in &self.entries {
            for (&(nb, mb), cb) in &other.entries {
                let key = (na + nb, ma + mb);
                if key.0 > box_bound || key.1 > box_bound {
                    continue;
                }
                let term = ca.mul_ref(cb);
                match entries.get_mut(&key) {
                    Some(e) => *e = e.add_ref(&term),
                    None => {
                        entries.insert(key, term);
                    }
                }
            }
        }
        entries.retain(|_, v| !v.is_zero_ref());
        WittPair {
            box_bound,
            modulus: self.modulus,
            entries,
        }
    }
}

/// Report of [`Expansion::gl2_orbit_check`].
#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub box_bound: i64,
    pub checked: usize,
    pub violations: Vec<OrbitViolation>,
}

impl OrbitReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct OrbitViolation {
    pub src: Index,
    pub dst: Index,
    pub tag: &'static str,
}

impl fmt::Display for OrbitViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} [{}]", self.src, self.dst, self.tag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat_int;

    fn p(x: u64) -> Prime {
        Prime::new(x).unwrap()
    }

    /// Small expansion that genuinely satisfies the unimodular symmetries
    /// inside its box: the det-0 orbit {(1,0,0), (0,0,1), (1,+-2,1)} carries
    /// one value, the det-3 orbit {(1,+-1,1)} another.
    fn simple_expansion() -> ExactExpansion {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Index::new(0, 0, 0), rat_int(1));
        coeffs.insert(Index::new(1, 0, 0), rat_int(7));
        coeffs.insert(Index::new(0, 0, 1), rat_int(7));
        coeffs.insert(Index::new(1, 2, 1), rat_int(7));
        coeffs.insert(Index::new(1, -2, 1), rat_int(7));
        coeffs.insert(Index::new(1, 1, 1), rat_int(3));
        coeffs.insert(Index::new(1, -1, 1), rat_int(3));
        coeffs.insert(Index::new(1, 0, 1), rat_int(5));
        Expansion::from_coeffs(4, Level::One, 1, None, coeffs).unwrap()
    }

    #[test]
    fn index_matrix_correspondence() {
        let idx = Index::new(1, 1, 1);
        assert_eq!(idx.det(), 3);
        assert_eq!(idx.trace(), 4);
        assert_eq!(Index::new(1, 0, 0).det(), 0);
    }

    #[test]
    fn from_coeffs_rejects_bad_support() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Index::new(0, 1, 0), rat_int(1)); // det = -1
        assert!(Expansion::from_coeffs(4, Level::One, 2, None, coeffs).is_err());
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Index::new(3, 0, 0), rat_int(1)); // outside box
        assert!(Expansion::from_coeffs(4, Level::One, 2, None, coeffs).is_err());
    }

    #[test]
    fn scale_identity_and_zero() {
        let f = simple_expansion();
        assert_eq!(f.scale(&rat_int(1)), f);
        assert!(f.scale(&rat_int(0)).is_zero());
    }

    #[test]
    fn add_weight_mismatch() {
        let f = simple_expansion();
        let mut g = simple_expansion();
        g.weight = 6;
        assert!(matches!(
            f.add(&g),
            Err(Error::WeightMismatch { left: 4, right: 6 })
        ));
    }

    #[test]
    fn ring_mismatch_reported() {
        let f = simple_expansion();
        let g = simple_expansion().reduce(p(7)).unwrap();
        let h = simple_expansion().reduce(p(5)).unwrap();
        assert!(matches!(g.add(&h), Err(Error::RingMismatch { .. })));
        assert!(f.add(&simple_expansion()).is_ok());
    }

    #[test]
    fn mul_parallel_matches_sequential() {
        let f = simple_expansion();
        let g = f.mul(&f).unwrap();
        let h = f.mul_seq(&f).unwrap();
        assert_eq!(g, h);
        assert_eq!(g.weight(), 8);
    }

    #[test]
    fn witt_sums_rows() {
        let f = simple_expansion();
        let w = f.witt();
        assert_eq!(w.entry(1, 1), Some(&rat_int(25)));
        assert_eq!(w.entry(0, 0), Some(&rat_int(1)));
        assert_eq!(w.entry(0, 1), Some(&rat_int(7)));
        assert_eq!(w.entry(1, 0), Some(&rat_int(7)));
    }

    #[test]
    fn witt_of_zero() {
        let z = ExactExpansion::zero(10, Level::One, 3, None);
        assert!(z.witt().is_zero());
    }

    #[test]
    fn d_op_multiplies_by_det() {
        let f = simple_expansion();
        let d = f.d_op();
        assert_eq!(d.coeff_ref(Index::new(1, 1, 1)), Some(&rat_int(9)));
        assert_eq!(d.coeff_ref(Index::new(1, 0, 1)), Some(&rat_int(20)));
        // det = 0 entries are killed
        assert_eq!(d.coeff_ref(Index::new(0, 0, 0)), None);
        assert_eq!(d.coeff_ref(Index::new(1, 0, 0)), None);
        assert_eq!(d.coeff_ref(Index::new(1, 2, 1)), None);
        assert_eq!(d.d_applied(), 1);
        // commutes with scale
        assert_eq!(f.scale_int(3).d_op(), d.scale_int(3));
    }

    #[test]
    fn u_p_filters_and_is_projection() {
        let f = simple_expansion();
        let u = f.u_p(p(5));
        // det = 0 counts as divisible; det 3 and det 4 are dropped
        assert!(u.coeff_ref(Index::new(0, 0, 0)).is_some());
        assert!(u.coeff_ref(Index::new(1, 2, 1)).is_some());
        assert!(u.coeff_ref(Index::new(1, 1, 1)).is_none());
        assert!(u.coeff_ref(Index::new(1, 0, 1)).is_none());
        assert_eq!(u.u_p(p(5)), u);
    }

    #[test]
    fn fj_slice_partition() {
        let f = simple_expansion();
        let mut total = 0;
        for m in 0..=f.box_bound() {
            let slice = f.fj_slice(m).unwrap();
            total += slice.support_len();
            for (&(n, r), c) in slice.iter() {
                assert_eq!(f.coeff_ref(Index::new(n, r, m)), Some(c));
            }
        }
        assert_eq!(total, f.support_len());
        assert!(f.fj_slice(2).is_err());
    }

    #[test]
    fn reduce_and_valuations() {
        let f = simple_expansion();
        let g = f.reduce(p(5)).unwrap();
        assert_eq!(g.coeff_ref(Index::new(1, 0, 1)), None); // 5 = 0 mod 5
        assert_eq!(
            g.coeff_ref(Index::new(1, 1, 1)).map(|c| c.residue()),
            Some(3)
        );
        assert_eq!(f.v_p_form(p(5)), Valuation::Finite(0));
        assert_eq!(f.scale_int(5).v_p_form(p(5)), Valuation::Finite(1));
        let z = ExactExpansion::zero(4, Level::One, 2, None);
        assert_eq!(z.v_p_form(p(5)), Valuation::Infinite);
    }

    #[test]
    fn reduce_error_carries_index() {
        let mut f = simple_expansion();
        f.insert(Index::new(1, 1, 1), crate::scalars::rat(1, 5));
        match f.reduce(p(5)).unwrap_err() {
            Error::NotPIntegralAt {
                n: 1,
                r: 1,
                m: 1,
                p: 5,
                ..
            } => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ord_p_basics() {
        let f = simple_expansion();
        assert_eq!(f.ord_p(p(7)).unwrap(), OrdResult::Slice(0));
        assert_eq!(
            f.scale_int(7).ord_p(p(7)).unwrap(),
            OrdResult::BeyondBox { box_bound: 1 }
        );
        let mut g = simple_expansion();
        g.insert(Index::new(0, 0, 0), crate::scalars::rat(1, 7));
        assert!(g.ord_p(p(7)).is_err());
    }

    #[test]
    fn orbit_check_flags_corruption() {
        let f = simple_expansion();
        let rep = f.gl2_orbit_check().unwrap();
        assert!(rep.passed());
        let mut g = f.clone();
        g.insert(Index::new(1, -1, 1), rat_int(99));
        let rep = g.gl2_orbit_check().unwrap();
        assert!(!rep.passed());
        let z = ExactExpansion::zero(4, Level::One, 4, None);
        assert!(z.gl2_orbit_check().unwrap().passed());
    }
}
