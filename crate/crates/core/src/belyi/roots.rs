//! Simultaneous root iteration with multiplicity clustering.

use num_complex::Complex64;

use super::poly::Polynomial;
use super::BelyiError;

pub const MAX_POLY_DEGREE: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions {
    /// Final Newton step size accepted as converged.
    pub tol: f64,
    /// Approximations closer than this are one root.
    pub cluster_radius: f64,
    pub max_iterations: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions {
            tol: 1e-10,
            cluster_radius: 1e-4,
            max_iterations: 2000,
        }
    }
}

impl RootOptions {
    pub fn with_tol(tol: f64) -> Self {
        RootOptions {
            tol,
            ..Self::default()
        }
    }
}

/// A root with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: usize,
}

/// Aberth–Ehrlich iteration from a fixed circle of starting points.
fn aberth(p: &Polynomial, max_iterations: usize) -> Vec<Complex64> {
    let n = p.degree();
    let dp = p.derivative();
    let lead = p.leading();
    let radius = 1.0
        + p.coeffs()[..n]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0, f64::max);
    let r0 = radius.min(1e6) * 0.5 + 0.1;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(r0, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..max_iterations {
        let mut biggest: f64 = 0.0;
        for k in 0..n {
            let pz = p.eval(z[k]);
            if pz == Complex64::new(0.0, 0.0) {
                continue;
            }
            let w = pz / dp.eval(z[k]);
            let s: Complex64 = (0..n).filter(|&j| j != k).map(|j| 1.0 / (z[k] - z[j])).sum();
            let step = w / (1.0 - w * s);
            if step.is_finite() {
                z[k] -= step;
                biggest = biggest.max(step.norm() / (1.0 + z[k].norm()));
            } else {
                // coincident iterates: nudge apart deterministically
                z[k] += Complex64::new(1e-7, 1e-7 * (k as f64 + 1.0));
                biggest = 1.0;
            }
        }
        if biggest < 1e-15 {
            break;
        }
    }
    z
}

/// Single-linkage clusters of `pts`: two approximations join when closer
/// than `radius` or when their inclusion disks `n·|p/p'|` overlap. Centroids
/// are merged again under `radius` until stable.
fn cluster(p: &Polynomial, pts: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    let n = p.degree() as f64;
    let dp = p.derivative();
    let disk: Vec<f64> = pts
        .iter()
        .map(|&z| {
            let r = n * (p.eval(z) / dp.eval(z)).norm();
            if r.is_finite() { r } else { 0.0 }
        })
        .collect();
    let mut owner: Vec<usize> = (0..pts.len()).collect();
    fn find(owner: &mut [usize], mut x: usize) -> usize {
        while owner[x] != x {
            owner[x] = owner[owner[x]];
            x = owner[x];
        }
        x
    }
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let d = (pts[i] - pts[j]).norm();
            if d < radius || d < disk[i] + disk[j] {
                let (a, b) = (find(&mut owner, i), find(&mut owner, j));
                owner[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<(Complex64, usize)> = Vec::new();
    let mut slot = vec![usize::MAX; pts.len()];
    for (i, &z) in pts.iter().enumerate() {
        let r = find(&mut owner, i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push((Complex64::new(0.0, 0.0), 0));
        }
        let g = &mut groups[slot[r]];
        g.0 += z;
        g.1 += 1;
    }
    for g in &mut groups {
        g.0 /= g.1 as f64;
    }
    loop {
        let mut merged = false;
        'scan: for i in 0..groups.len() {
            for j in i + 1..groups.len() {
                if (groups[i].0 - groups[j].0).norm() < radius {
                    let (a, m) = groups[i];
                    let (b, k) = groups.remove(j);
                    groups[i] = ((a * m as f64 + b * k as f64) / (m + k) as f64, m + k);
                    merged = true;
                    break 'scan;
                }
            }
        }
        if !merged {
            return groups;
        }
    }
}

/// Newton on the `(m−1)`-th derivative, where a root of multiplicity `m`
/// is simple.
fn polish(p: &Polynomial, start: Complex64, m: usize, tol: f64) -> Option<Complex64> {
    let q = p.nth_derivative(m - 1);
    let dq = q.derivative();
    let mut z = start;
    for _ in 0..100 {
        let v = q.eval(z);
        if v == Complex64::new(0.0, 0.0) {
            return Some(z);
        }
        let step = v / dq.eval(z);
        if !step.is_finite() {
            return None;
        }
        z -= step;
        if step.norm() <= tol * z.norm().max(1.0) {
            return Some(z);
        }
    }
    None
}

/// All roots of the polynomial with coefficients `coeffs` (constant term
/// first), grouped by multiplicity and sorted by (re, im) rounded to 1e-6.
pub fn polynomial_roots(coeffs: &[Complex64], opts: RootOptions) -> Result<Vec<Root>, BelyiError> {
    let p = Polynomial::new(coeffs.to_vec());
    roots_of(&p, opts)
}

pub fn roots_of(p: &Polynomial, opts: RootOptions) -> Result<Vec<Root>, BelyiError> {
    if p.is_zero() {
        return Err(BelyiError::ZeroPolynomial);
    }
    if p.degree() > MAX_POLY_DEGREE {
        return Err(BelyiError::DegreeCap(p.degree()));
    }
    let zeros = p.zero_root_order();
    let q = p.shift_down(zeros);
    let mut out = Vec::new();
    if zeros > 0 {
        out.push(Root {
            value: Complex64::new(0.0, 0.0),
            multiplicity: zeros,
        });
    }
    if q.degree() > 0 {
        let approx = aberth(&q, opts.max_iterations);
        for (centre, m) in cluster(&q, &approx, opts.cluster_radius) {
            let value = polish(&q, centre, m, opts.tol).ok_or(BelyiError::NoConvergence)?;
            out.push(Root { value, multiplicity: m });
        }
    }
    // polishing must not have collapsed distinct clusters
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            if (out[i].value - out[j].value).norm() < opts.cluster_radius {
                return Err(BelyiError::NoConvergence);
            }
        }
    }
    // keys rounded to 1e-6
    out.sort_by_key(|r| ((r.value.re * 1e6).round() as i64, (r.value.im * 1e6).round() as i64));
    Ok(out)
}

/// Multiplicities, descending.
pub fn multiplicity_partition(roots: &[Root]) -> Vec<usize> {
    let mut v: Vec<usize> = roots.iter().map(|r| r.multiplicity).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}
