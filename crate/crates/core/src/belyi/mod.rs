//! Numerical checks that a rational map `N/D` is a Belyi map and that its
//! ramification matches a given dessin.
//!
//! The fiber over `c ∈ {0, 1}` is read from the roots of `N − c·D`, the
//! fiber over `∞` from the roots of `D`, and the point `z = ∞` contributes
//! `deg f − deg(·)` to whichever fiber it lies in.

mod expr;
mod poly;
mod roots;

use std::fmt;

use num_complex::Complex64;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::dessins::{Hypermap, HypermapError, Passport};

pub use expr::fano_constant;
pub use poly::Polynomial;
pub use roots::{multiplicity_partition, polynomial_roots, roots_of, Root, RootOptions, MAX_POLY_DEGREE};

/// Values this close to 0 or 1, or this large in modulus relative to
/// `1/SNAP`, are snapped to 0, 1 or ∞.
pub const SNAP: f64 = 1e-6;
const TRIM: f64 = 1e-13;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BelyiError {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("degree {0} exceeds the cap of 32")]
    DegreeCap(usize),
    #[error("root iteration did not converge")]
    NoConvergence,
    #[error("numerator and denominator share a root (distance {0:e})")]
    CommonRoot(f64),
    #[error("cannot parse map: {0}")]
    Parse(String),
    #[error("not a Belyi map: critical values {0:?} outside {{0, 1, ∞}}")]
    NotBelyi(Vec<String>),
    #[error(transparent)]
    Hypermap(#[from] HypermapError),
}

/// A point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpherePoint {
    Finite(Complex64),
    Infinity,
}

impl SpherePoint {
    /// Snaps to `0`, `1` or `∞` within [`SNAP`].
    pub fn snapped(self) -> Self {
        match self {
            SpherePoint::Finite(v) if v.norm() > 1.0 / SNAP => SpherePoint::Infinity,
            SpherePoint::Finite(v) if v.norm() < SNAP => SpherePoint::Finite(Complex64::new(0.0, 0.0)),
            SpherePoint::Finite(v) if (v - 1.0).norm() < SNAP => SpherePoint::Finite(Complex64::new(1.0, 0.0)),
            p => p,
        }
    }

    pub fn is_special(self) -> bool {
        match self.snapped() {
            SpherePoint::Infinity => true,
            SpherePoint::Finite(v) => v == Complex64::new(0.0, 0.0) || v == Complex64::new(1.0, 0.0),
        }
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpherePoint::Infinity => write!(f, "inf"),
            SpherePoint::Finite(v) if v.im == 0.0 => write!(f, "{}", v.re),
            SpherePoint::Finite(v) => write!(f, "{}{:+}i", v.re, v.im),
        }
    }
}

impl Serialize for SpherePoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `N(z)/D(z)` with complex coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexRationalMap {
    num: Polynomial,
    den: Polynomial,
    mirror: bool,
}

impl ComplexRationalMap {
    /// Rejects a zero denominator and numerically common roots.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, BelyiError> {
        if den.is_zero() {
            return Err(BelyiError::ZeroPolynomial);
        }
        let m = ComplexRationalMap { num, den, mirror: false };
        if m.num.degree() > MAX_POLY_DEGREE || m.den.degree() > MAX_POLY_DEGREE {
            return Err(BelyiError::DegreeCap(m.num.degree().max(m.den.degree())));
        }
        if !m.num.is_zero() && m.num.degree() > 0 && m.den.degree() > 0 {
            let opts = RootOptions::default();
            let rn = roots_of(&m.num, opts)?;
            let rd = roots_of(&m.den, opts)?;
            let closest = rn
                .iter()
                .flat_map(|a| rd.iter().map(move |b| (a.value - b.value).norm()))
                .fold(f64::INFINITY, f64::min);
            if closest <= 1e-6 {
                return Err(BelyiError::CommonRoot(closest));
            }
        }
        Ok(m)
    }

    /// Parses an expression such as `z^4*(z-1)^2*(z-a)`.
    pub fn parse(text: &str) -> Result<Self, BelyiError> {
        let (r, mirror) = expr::parse_rational(text)?;
        let mut m = Self::new(r.num, r.den)?;
        m.mirror = mirror;
        Ok(m)
    }

    /// `z⁴(z−1)²(z−a)` with `a = (−1−i√7)/4`.
    pub fn fano() -> Self {
        Self::parse("z^4*(z-1)^2*(z-a)").expect("literal parses")
    }

    /// Complex conjugate of [`ComplexRationalMap::fano`].
    pub fn fano_mirror() -> Self {
        Self::parse("z^4*(z-1)^2*(z-abar)").expect("literal parses")
    }

    /// When the critical values other than `0` and `∞` all equal one value
    /// `K`, the map `f/K` with its third critical value moved to `1`.
    pub fn normalized(&self) -> Result<Option<(Self, Complex64)>, BelyiError> {
        let others: Vec<Complex64> = critical_values(self)?
            .into_iter()
            .filter_map(|v| match v.snapped() {
                SpherePoint::Finite(c) if c != Complex64::new(0.0, 0.0) => Some(c),
                _ => None,
            })
            .collect();
        let Some(&k) = others.first() else {
            return Ok(None);
        };
        if others.iter().any(|c| (c - k).norm() > SNAP * k.norm().max(1.0)) {
            return Ok(None);
        }
        let mut m = Self::new(self.num.clone(), self.den.scale(k))?;
        m.mirror = self.mirror;
        Ok(Some((m, k)))
    }

    /// `(z⁴−1)²/(−4z⁴)`.
    pub fn klein() -> Self {
        Self::parse("(z^4-1)^2/(-4*z^4)").expect("literal parses")
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// Built with the conjugate constant `abar`.
    pub fn is_mirror(&self) -> bool {
        self.mirror
    }

    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }

    /// Same map with numerator and denominator multiplied by `s`.
    pub fn rescaled(&self, s: Complex64) -> Result<Self, BelyiError> {
        let mut m = Self::new(self.num.scale(s), self.den.scale(s))?;
        m.mirror = self.mirror;
        Ok(m)
    }

    pub fn eval(&self, z: SpherePoint) -> SpherePoint {
        match z {
            SpherePoint::Finite(z) => {
                let d = self.den.eval(z);
                if d == Complex64::new(0.0, 0.0) {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::Finite(self.num.eval(z) / d)
                }
            }
            SpherePoint::Infinity => {
                let (n, d) = (self.num.degree(), self.den.degree());
                if self.num.is_zero() || n < d {
                    SpherePoint::Finite(Complex64::new(0.0, 0.0))
                } else if n > d {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::Finite(self.num.leading() / self.den.leading())
                }
            }
        }
    }

    /// Numerator of `f'`: `N'D − ND'`.
    fn derivative_numerator(&self) -> Polynomial {
        &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative())
    }

    /// Fiber partition of `N − c·D` (or of `D` when `c` is `None`), the
    /// point at infinity included.
    fn fiber(&self, c: Option<f64>, opts: RootOptions) -> Result<Vec<usize>, BelyiError> {
        let p = match c {
            Some(c) => (&self.num - &self.den.scale(Complex64::new(c, 0.0))).trimmed(TRIM),
            None => self.den.clone(),
        };
        let roots = roots_of(&p, opts)?;
        let mut part = multiplicity_partition(&roots);
        let at_infinity = self.degree() - p.degree();
        if at_infinity > 0 {
            part.push(at_infinity);
            part.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(part)
    }
}

/// A critical point and its (snapped) critical value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalPoint {
    pub point: SpherePoint,
    pub value: SpherePoint,
    /// Local degree minus one.
    pub order: usize,
}

/// Critical points in `C` come from the roots of `N'D − ND'`; `z = ∞` is
/// critical when the local degree there exceeds one.
pub fn critical_points(f: &ComplexRationalMap, opts: RootOptions) -> Result<Vec<CriticalPoint>, BelyiError> {
    let w = f.derivative_numerator().trimmed(TRIM);
    let mut out = Vec::new();
    if f.degree() == 0 {
        return Ok(out);
    }
    let poles = if f.den.degree() > 0 { roots_of(&f.den, opts)? } else { Vec::new() };
    if !w.is_zero() && w.degree() > 0 {
        for r in roots_of(&w, opts)? {
            let at_pole = poles.iter().any(|p| (p.value - r.value).norm() < SNAP);
            let value = if at_pole {
                SpherePoint::Infinity
            } else {
                f.eval(SpherePoint::Finite(r.value)).snapped()
            };
            out.push(CriticalPoint {
                point: SpherePoint::Finite(r.value),
                value,
                order: r.multiplicity,
            });
        }
    }
    let d = f.degree();
    let value = f.eval(SpherePoint::Infinity);
    let local = match value {
        SpherePoint::Infinity => f.num.degree() - f.den.degree(),
        SpherePoint::Finite(c) => {
            let p = (&f.num - &f.den.scale(c)).trimmed(TRIM);
            if p.is_zero() {
                d
            } else {
                d - p.degree()
            }
        }
    };
    if local > 1 {
        out.push(CriticalPoint {
            point: SpherePoint::Infinity,
            value: value.snapped(),
            order: local - 1,
        });
    }
    Ok(out)
}

/// Distinct critical values after snapping.
pub fn critical_values(f: &ComplexRationalMap) -> Result<Vec<SpherePoint>, BelyiError> {
    let mut out: Vec<SpherePoint> = Vec::new();
    for c in critical_points(f, RootOptions::default())? {
        let dup = out.iter().any(|v| match (v, c.value) {
            (SpherePoint::Infinity, SpherePoint::Infinity) => true,
            (SpherePoint::Finite(a), SpherePoint::Finite(b)) => (a - b).norm() < SNAP,
            _ => false,
        });
        if !dup {
            out.push(c.value);
        }
    }
    Ok(out)
}

/// Multiplicity partitions over `0`, `1` and `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamificationPassport {
    pub zero: Vec<usize>,
    pub one: Vec<usize>,
    pub infinity: Vec<usize>,
}

impl RamificationPassport {
    /// `Σ (deg − |fiber|)` over the three fibers.
    pub fn ramification_total(&self) -> usize {
        let d: usize = self.zero.iter().sum();
        [&self.zero, &self.one, &self.infinity].iter().map(|p| d - p.len()).sum()
    }

    pub fn as_passport(&self) -> Passport {
        Passport {
            black: self.zero.clone(),
            white: self.one.clone(),
            faces: self.infinity.clone(),
        }
    }
}

pub fn ramification_passport(f: &ComplexRationalMap) -> Result<RamificationPassport, BelyiError> {
    ramification_passport_with(f, RootOptions::default())
}

pub fn ramification_passport_with(f: &ComplexRationalMap, opts: RootOptions) -> Result<RamificationPassport, BelyiError> {
    let bad: Vec<String> = critical_values(f)?
        .into_iter()
        .filter(|v| !v.is_special())
        .map(|v| v.to_string())
        .collect();
    if !bad.is_empty() {
        return Err(BelyiError::NotBelyi(bad));
    }
    Ok(RamificationPassport {
        zero: f.fiber(Some(0.0), opts)?,
        one: f.fiber(Some(1.0), opts)?,
        infinity: f.fiber(None, opts)?,
    })
}

/// Passport of `f` equals the passport of `m`, fiber by fiber.
pub fn matches_dessin(f: &ComplexRationalMap, m: &Hypermap) -> Result<bool, BelyiError> {
    if f.degree() != m.half_edges() {
        return Ok(false);
    }
    Ok(ramification_passport(f)?.as_passport() == m.passport()?)
}

#[derive(Debug, Clone, Serialize)]
pub struct BelyiReport {
    pub map: String,
    pub degree: usize,
    pub critical_values: Vec<SpherePoint>,
    pub unramified_outside_01inf: bool,
    pub passport: Option<RamificationPassport>,
    pub dessin: Option<String>,
    pub dessin_passport: Option<Passport>,
    pub matches: Option<bool>,
    pub genus: Option<usize>,
    pub riemann_hurwitz_total: Option<usize>,
    /// `2·deg − 2 + 2g`.
    pub riemann_hurwitz_expected: Option<usize>,
    pub mirror: bool,
}

impl BelyiReport {
    pub fn riemann_hurwitz_balanced(&self) -> bool {
        matches!((self.riemann_hurwitz_total, self.riemann_hurwitz_expected), (Some(a), Some(b)) if a == b)
    }
}

/// Full check of `f`, optionally against a named dessin.
pub fn verify(name: &str, f: &ComplexRationalMap, dessin: Option<(&str, &Hypermap)>) -> Result<BelyiReport, BelyiError> {
    let critical_values = critical_values(f)?;
    let belyi = critical_values.iter().all(|v| v.is_special());
    let passport = if belyi { Some(ramification_passport(f)?) } else { None };
    let (dessin_name, dessin_passport, matches, genus) = match dessin {
        Some((id, m)) => {
            let p = m.passport()?;
            let matches = passport.as_ref().map(|q| q.as_passport() == p);
            (Some(id.to_string()), Some(p), matches, Some(m.genus()?))
        }
        None => (None, None, None, None),
    };
    let d = f.degree();
    Ok(BelyiReport {
        map: name.to_string(),
        degree: d,
        unramified_outside_01inf: belyi,
        riemann_hurwitz_total: passport.as_ref().map(|p| p.ramification_total()),
        riemann_hurwitz_expected: Some(2 * d + 2 * genus.unwrap_or(0)).map(|x| x.saturating_sub(2)),
        critical_values,
        passport,
        dessin: dessin_name,
        dessin_passport,
        matches,
        genus,
        mirror: f.is_mirror(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dessins::known;

    /// `(49 + 13i√7)/2401`, the value of the literal Fano polynomial at its
    /// two simple critical points.
    fn fano_k(mirror: bool) -> Complex64 {
        let im = 13.0 * 7f64.sqrt() / 2401.0;
        Complex64::new(49.0 / 2401.0, if mirror { -im } else { im })
    }

    #[test]
    fn literal_fano_polynomial_needs_a_constant() {
        let f = ComplexRationalMap::fano();
        assert_eq!(f.degree(), 7);
        let stray: Vec<SpherePoint> = critical_values(&f).unwrap().into_iter().filter(|v| !v.is_special()).collect();
        assert_eq!(stray.len(), 1);
        let SpherePoint::Finite(k) = stray[0] else { panic!() };
        assert!((k - fano_k(false)).norm() < 1e-12);
        assert!(matches!(ramification_passport(&f), Err(BelyiError::NotBelyi(_))));
    }

    #[test]
    fn normalized_fano_map_is_belyi() {
        let (f, k) = ComplexRationalMap::fano().normalized().unwrap().unwrap();
        assert!((k - fano_k(false)).norm() < 1e-12);
        assert!(critical_values(&f).unwrap().iter().all(|v| v.is_special()));
        let p = ramification_passport(&f).unwrap();
        assert_eq!(p.zero, [4, 2, 1]);
        assert_eq!(p.one, [2, 2, 1, 1, 1]);
        assert_eq!(p.infinity, [7]);
        assert_eq!(p.ramification_total(), 12);
        assert!(matches_dessin(&f, &known::fano_dessin()).unwrap());
    }

    #[test]
    fn mirror_is_flagged_and_matches() {
        let f = ComplexRationalMap::fano_mirror();
        assert!(f.is_mirror());
        let (g, k) = f.normalized().unwrap().unwrap();
        assert!((k - fano_k(true)).norm() < 1e-12);
        assert!(g.is_mirror());
        assert!(matches_dessin(&g, &known::fano_dessin()).unwrap());
    }

    #[test]
    fn belyi_maps_are_already_normalized() {
        let (g, k) = ComplexRationalMap::klein().normalized().unwrap().unwrap();
        assert!((k - 1.0).norm() < 1e-12);
        assert!(matches_dessin(&g, &known::chsh_dessin()).unwrap());
        assert!(ComplexRationalMap::parse("z^3").unwrap().normalized().unwrap().is_none());
    }

    #[test]
    fn klein_map_is_belyi() {
        let f = ComplexRationalMap::klein();
        let p = ramification_passport(&f).unwrap();
        assert_eq!(p.zero, [2, 2, 2, 2]);
        assert_eq!(p.one, [2, 2, 2, 2]);
        assert_eq!(p.infinity, [4, 4]);
        assert!(matches_dessin(&f, &known::chsh_dessin()).unwrap());
        assert!(!matches_dessin(&f, &known::fano_dessin()).unwrap());
    }

    #[test]
    fn powers_of_z() {
        for n in 1..=8 {
            let f = ComplexRationalMap::parse(&format!("z^{n}")).unwrap();
            let p = ramification_passport(&f).unwrap();
            assert_eq!(p.zero, [n]);
            assert_eq!(p.one, vec![1; n]);
            assert_eq!(p.infinity, [n]);
        }
        let vals = critical_values(&ComplexRationalMap::parse("z^2").unwrap()).unwrap();
        assert_eq!(vals.len(), 2);
    }

    #[test]
    fn non_belyi_map_is_refused() {
        // z^3 - 3z has critical values ±2
        let f = ComplexRationalMap::parse("z^3 - 3*z").unwrap();
        assert!(matches!(ramification_passport(&f), Err(BelyiError::NotBelyi(_))));
        let r = verify("cubic", &f, None).unwrap();
        assert!(!r.unramified_outside_01inf && r.passport.is_none());
    }

    #[test]
    fn common_roots_are_rejected() {
        assert!(matches!(ComplexRationalMap::parse("(z-1)*(z+2)/((z-1)*z)"), Err(BelyiError::CommonRoot(_))));
    }

    #[test]
    fn report_balances() {
        let r = verify("klein", &ComplexRationalMap::klein(), Some(("fig2", &known::chsh_dessin()))).unwrap();
        assert_eq!(r.matches, Some(true));
        assert!(r.riemann_hurwitz_balanced());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["passport"]["infinity"], serde_json::json!([4, 4]));
    }
}
