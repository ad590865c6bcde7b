//! One function per reproduction. Each returns its reports plus optional
//! detail rows and DOT figures.

use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use serde_json::json;

use qudessin_core::belyi::{self, ComplexRationalMap};
use qudessin_core::capacity::{self, SmallGraph};
use qudessin_core::cartography::{
    coset_group, dessin_search, filter_by_target, grid_group, is_isomorphic, low_index_subgroups, CosetTable,
    FinitelyPresentedGroup, Incidence, PermutationGroup, TargetGroup,
};
use qudessin_core::contextuality::{
    bell_census, canonical_mermin_square, chsh_matrix, gq22, ks_colorable, pentagram_census, verify_gq22,
    BellQuadruple, PointLineGeometry,
};
use qudessin_core::dessins::{known, Hypermap};
use qudessin_core::pauli::{DenseMatrix, PauliObservable};
use qudessin_core::Perm;

use crate::report::{timed, ReproductionReport};

#[derive(Debug, Default)]
pub struct Outcome {
    pub reports: Vec<ReproductionReport>,
    pub details: Vec<String>,
    /// `(file stem, DOT source)`.
    pub dots: Vec<(String, String)>,
}

impl Outcome {
    fn push(&mut self, r: ReproductionReport) {
        self.reports.push(r);
    }

    pub fn extend(&mut self, other: Outcome) {
        self.reports.extend(other.reports);
        self.details.extend(other.details);
        self.dots.extend(other.dots);
    }
}

pub fn bell(qubits: usize) -> Result<Outcome> {
    let (count, secs) = timed(|| bell_census(qubits));
    let count = count?;
    let claim = format!("bell-census/qubits={qubits}");
    let r = match qubits {
        2 => ReproductionReport::exact(claim, 90, count, secs),
        3 => ReproductionReport::exact(claim, 30240, count, secs),
        _ => ReproductionReport::untargeted(claim, count, secs),
    };
    Ok(Outcome {
        reports: vec![r],
        ..Outcome::default()
    })
}

pub fn chsh() -> Result<Outcome> {
    let (res, secs) = timed(|| {
        let c = chsh_matrix(BellQuadruple::standard().sigmas());
        let c2 = &c * &c;
        (c2.hermitian_eigenvalues(), c.operator_norm(), c2)
    });
    let (eig, norm, c2) = (res.0?, res.1?, res.2);
    let entries: Vec<Vec<f64>> = (0..4)
        .map(|i| (0..4).map(|j| c2.get(i, j)).map(|z| if z.im == 0.0 { z.re } else { f64::NAN }).collect())
        .collect();
    let want = [[4, 0, 0, 4], [0, 4, -4, 0], [0, -4, 4, 0], [4, 0, 0, 4]];
    let computed: Vec<Vec<serde_json::Value>> = entries
        .iter()
        .map(|row| row.iter().map(|&x| if x.fract() == 0.0 { json!(x as i64) } else { json!(x) }).collect())
        .collect();
    let mut out = Outcome::default();
    out.push(ReproductionReport::exact("chsh/square", want, computed, secs));
    out.push(ReproductionReport::approx("chsh/eigenvalues", &[0.0, 0.0, 8.0, 8.0], &eig, 1e-9, secs));
    out.push(ReproductionReport::approx("chsh/norm", &[2.0 * 2f64.sqrt()], &[norm], 1e-9, secs));
    let expected = DenseMatrix::from_real_rows(&want.map(|r| r.map(f64::from).to_vec()))?;
    out.details
        .push(format!("C^2 max deviation from the integer matrix: {}", c2.max_abs_diff(&expected)));
    Ok(out)
}

pub fn pentagrams(limit: usize) -> Result<Outcome> {
    let (census, secs) = timed(pentagram_census);
    let (colourable, ks_secs) = timed(|| census.pentagrams.iter().filter(|p| matches!(ks_colorable(p), Ok(Some(_)))).count());
    let mut out = Outcome::default();
    out.push(
        ReproductionReport::exact("pentagram-census/count", 12096, census.count(), secs)
            .with_note(format!("{} good lines, {} shapes", census.good_lines, census.shapes)),
    );
    out.push(ReproductionReport::exact("pentagram-census/ks-colourable", 0, colourable, ks_secs));
    let hist: BTreeMap<String, usize> = census
        .negative_line_histogram
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(k, &c)| (format!("{k} negative"), c))
        .collect();
    out.push(ReproductionReport::untargeted("pentagram-census/negative-lines", hist, secs));
    for (i, p) in census.pentagrams.iter().take(limit).enumerate() {
        let lines: Vec<String> = (0..p.lines().len())
            .map(|l| {
                let obs: Vec<String> = p.line_observables(l).iter().map(|o| o.to_string()).collect();
                format!("{}{}", if p.signs()[l] < 0 { "-" } else { "+" }, obs.join("."))
            })
            .collect();
        out.details.push(format!("pentagram {i}: {}", lines.join(" ")));
    }
    if let Some(p) = census.pentagrams.first() {
        out.dots.push(("pentagram_incidence".into(), p.to_dot_incidence("pentagram")));
        out.dots.push(("pentagram_commutation".into(), p.to_dot_commutation("pentagram")));
    }
    Ok(out)
}

pub fn generalized_quadrangle() -> Result<Outcome> {
    let (r, secs) = timed(verify_gq22);
    let uniform = |v: &[usize]| v.iter().all(|&d| d == v[0]).then(|| v[0]);
    let computed = json!({
        "points": r.points,
        "lines": r.lines,
        "lines_per_point": uniform(&r.lines_per_point),
        "points_per_line": uniform(&r.points_per_line),
        "axiom_violations": r.axiom_violations,
    });
    let target = json!({"points": 15, "lines": 15, "lines_per_point": 3, "points_per_line": 3, "axiom_violations": 0});
    Ok(Outcome {
        reports: vec![ReproductionReport::exact("gq22", target, computed, secs)],
        dots: vec![("gq22".into(), gq22().to_dot_incidence("gq22"))],
        ..Outcome::default()
    })
}

/// `mermin-square`, `pentagram` (the all-negative example of the census), or
/// a path to geometry JSON.
pub fn ks_check(config: &str) -> Result<Outcome> {
    let (geometry, targeted) = match config {
        "mermin-square" => (canonical_mermin_square(), true),
        "pentagram" => (
            pentagram_census()
                .pentagrams
                .into_iter()
                .find(|p| p.negative_line_count() == 5)
                .context("census has no all-negative pentagram")?,
            true,
        ),
        path => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            let v: serde_json::Value = serde_json::from_str(&text)?;
            (PointLineGeometry::from_json(&v)?, false)
        }
    };
    let (res, secs) = timed(|| ks_colorable(&geometry));
    let res = res?;
    let computed = if res.is_some() { "colourable" } else { "not colourable" };
    let claim = format!("ks-check/{config}");
    let mut out = Outcome::default();
    let mut r = if targeted {
        ReproductionReport::exact(claim, "not colourable", computed, secs)
    } else {
        ReproductionReport::untargeted(claim, computed, secs)
    };
    r = r.with_note(format!(
        "{} points, {} lines, {} negative",
        geometry.points().len(),
        geometry.lines().len(),
        geometry.negative_line_count()
    ));
    out.push(r);
    if config == "mermin-square" {
        let negative: Vec<String> = (0..geometry.lines().len())
            .filter(|&l| geometry.signs()[l] < 0)
            .map(|l| {
                let mut obs: Vec<String> = geometry.line_observables(l).iter().map(|o| o.to_string()).collect();
                obs.sort();
                obs.join(".")
            })
            .collect();
        out.push(ReproductionReport::exact("ks-check/mermin-square/negative-lines", ["XX.YY.ZZ"], negative, 0.0));
    }
    if let Some(a) = res {
        out.details.push(format!("assignment: {:?}", a.values));
    }
    out.dots.push((format!("ks_{}", stem(config)), geometry.to_dot_incidence("configuration")));
    Ok(out)
}

fn stem(name: &str) -> String {
    std::path::Path::new(name)
        .file_stem()
        .map(|s| s.to_string_lossy().replace(|c: char| !c.is_ascii_alphanumeric(), "_"))
        .unwrap_or_else(|| "input".into())
}

pub fn lowindex_target(index: usize) -> Option<usize> {
    match index {
        7 => Some(131),
        9 => Some(1551),
        10 => Some(5916),
        _ => None,
    }
}

pub fn lowindex(index: usize, limit: usize) -> Result<(Outcome, Vec<CosetTable>)> {
    let g = FinitelyPresentedGroup::cartographic();
    let (tables, secs) = timed(|| low_index_subgroups(&g, index));
    let tables = tables?;
    let claim = format!("lowindex/index={index}");
    let r = match lowindex_target(index) {
        Some(t) => ReproductionReport::exact(claim, t, tables.len(), secs),
        None => ReproductionReport::untargeted(claim, tables.len(), secs),
    };
    let mut out = Outcome {
        reports: vec![r],
        ..Outcome::default()
    };
    for (i, t) in tables.iter().take(limit).enumerate() {
        let m = Hypermap::from_coset_action(t)?;
        let p = m.passport()?;
        out.details.push(format!(
            "{i}: rho0 {:?} rho1 {:?} passport {:?} {:?} {:?} genus {} group order {}",
            t.actions()[0].cycles(),
            t.actions()[1].cycles(),
            p.black,
            p.white,
            p.faces,
            m.genus()?,
            coset_group(t).order()
        ));
    }
    Ok((out, tables))
}

/// Default index and geometry for each target.
pub fn search_defaults(target: &TargetGroup) -> Option<(usize, &'static str)> {
    match target {
        TargetGroup::Psl27 => Some((7, "fano")),
        TargetGroup::Square72 => Some((9, "grid")),
        TargetGroup::S5 => Some((10, "pentagram")),
        TargetGroup::Isomorphic(_) => None,
    }
}

pub fn incidence(name: &str) -> Result<Incidence> {
    Ok(match name {
        "fano" => Incidence::fano_plane(),
        "grid" => Incidence::grid(),
        "pentagram" => Incidence::pentagram(),
        other => bail!("unknown geometry {other:?} (fano, grid, pentagram)"),
    })
}

pub fn search(target: &TargetGroup, index: usize, geometry: &str, limit: usize) -> Result<Outcome> {
    let inc = incidence(geometry)?;
    let (s, secs) = timed(|| dessin_search(index, target, &inc));
    let s = s?;
    let base = format!("dessin-search/{}/index={index}/{geometry}", target.name());
    let mut out = Outcome::default();
    let defaults = search_defaults(target) == Some((index, geometry));
    let hits = s.hits.len();
    let full = s.hits.iter().filter(|h| h.stabilization.all_lines_preserved).count();
    let transitive = s
        .hits
        .iter()
        .any(|h| h.stabilization.all_lines_preserved && h.stabilization.transitive_on_lines);
    let per_class: Vec<usize> = s.hits.iter().map(|h| h.stabilization.max_stabilized).collect();
    if defaults {
        let (want_hits, claim) = match target {
            TargetGroup::Psl27 => (
                10,
                ReproductionReport::exact(format!("{base}/full-transitive-hit"), true, transitive, secs),
            ),
            TargetGroup::Square72 => (
                2,
                ReproductionReport::exact(format!("{base}/hits-preserving-all-lines"), 1, full, secs),
            ),
            _ => (
                14,
                ReproductionReport::exact(format!("{base}/max-lines"), 3, s.max_stabilized, secs)
                    .with_note(format!("per class {per_class:?}")),
            ),
        };
        out.push(ReproductionReport::exact(format!("{base}/hits"), want_hits, hits, secs));
        out.push(claim);
    } else {
        out.push(ReproductionReport::untargeted(format!("{base}/hits"), hits, secs));
        out.push(
            ReproductionReport::untargeted(format!("{base}/max-lines"), s.max_stabilized, secs)
                .with_note(format!("per class {per_class:?}")),
        );
    }
    out.details.push(format!(
        "{} classes at index {index}, {hits} with target {}, best {} of {} lines",
        s.classes,
        target.name(),
        s.max_stabilized,
        s.lines_total
    ));
    for h in s.hits.iter().take(limit) {
        out.details.push(format!(
            "class {}: order {}, passport {:?} {:?} {:?}, genus {}, lines {}/{} {:?}, witness {:?}",
            h.position,
            h.group_order,
            h.passport.black,
            h.passport.white,
            h.passport.faces,
            h.genus,
            h.stabilization.max_stabilized,
            h.stabilization.lines_total,
            h.stabilization.stabilized_lines,
            h.stabilization.witness
        ));
        let map = Hypermap::from_coset_action(&h.table)?;
        out.dots.push((format!("{}_{}", target.name(), h.position), map.to_dot(&format!("class{}", h.position))));
    }
    Ok(out)
}

/// Target counts from criterion-style filtering of precomputed tables.
pub fn target_filtering(tables: &BTreeMap<usize, Vec<CosetTable>>) -> Result<Outcome> {
    let mut out = Outcome::default();
    for (target, index, want) in [(TargetGroup::Psl27, 7, 10), (TargetGroup::Square72, 9, 2), (TargetGroup::S5, 10, 14)] {
        let ts = tables.get(&index).context("tables not computed")?;
        let (hits, secs) = timed(|| filter_by_target(ts, &target));
        let hits = hits?;
        let mut r = ReproductionReport::exact(format!("targets/{}/index={index}", target.name()), want, hits.len(), secs);
        if matches!(target, TargetGroup::Psl27) {
            let simple = hits.iter().all(|(_, t)| {
                let g = coset_group(t);
                g.order() == 168 && g.is_simple().unwrap_or(false)
            });
            r = r.with_note(format!("all order 168 and simple: {simple}"));
            out.push(r);
            out.push(ReproductionReport::exact("targets/psl27/order-168-simple", true, simple, secs));
        } else {
            out.push(r);
        }
    }
    let grid = grid_group();
    out.push(ReproductionReport::exact("targets/square72/grid-group-order", 72, grid.order(), 0.0).with_note(format!(
        "element orders {:?}, centre {}",
        grid.element_order_histogram()?,
        grid.center_order()?
    )));
    Ok(out)
}

pub fn dessin_arithmetic() -> Result<Outcome> {
    let mut out = Outcome::default();
    for (name, m, want) in [
        ("fig1", known::fano_dessin(), (3, 5, 1)),
        ("fig3b", known::mermin_square_dessin(), (2, 6, 3)),
    ] {
        let ((counts, genus), secs) = timed(|| (m.vertex_face_counts(), m.genus()));
        let (b, w, f) = counts?;
        out.push(ReproductionReport::exact(
            format!("dessins/{name}"),
            json!({"B": want.0, "W": want.1, "F": want.2, "genus": 0}),
            json!({"B": b, "W": w, "F": f, "genus": genus?}),
            secs,
        ));
        out.dots.push((format!("dessin_{name}"), m.to_dot(name)));
    }
    let m = known::chsh_dessin();
    let (res, secs) = timed(|| -> Result<(u64, bool)> {
        let g = PermutationGroup::new(m.half_edges(), vec![m.alpha().clone(), m.beta().clone()])?;
        let dihedral = is_isomorphic(&g, &PermutationGroup::dihedral(4)?)?;
        Ok((g.order(), dihedral))
    });
    let (order, dihedral) = res?;
    out.push(ReproductionReport::exact(
        "dessins/fig2/group",
        json!({"order": 8, "dihedral": true}),
        json!({"order": order, "dihedral": dihedral}),
        secs,
    ));
    out.dots.push(("dessin_fig2".into(), m.to_dot("fig2")));
    Ok(out)
}

pub fn map_by_name(name: &str) -> Result<ComplexRationalMap> {
    Ok(match name {
        "fano" => ComplexRationalMap::fano(),
        "fano-mirror" => ComplexRationalMap::fano_mirror(),
        "klein" => ComplexRationalMap::klein(),
        expr => ComplexRationalMap::parse(expr)?,
    })
}

pub fn dessin_by_name(name: &str) -> Result<Option<Hypermap>> {
    Ok(match name {
        "fig1" => Some(known::fano_dessin()),
        "fig2" => Some(known::chsh_dessin()),
        "fig3" => Some(known::mermin_square_dessin()),
        "none" => None,
        other => bail!("unknown dessin {other:?} (fig1, fig2, fig3, none)"),
    })
}

fn belyi_summary(r: &belyi::BelyiReport) -> serde_json::Value {
    json!({
        "unramified_outside_01inf": r.unramified_outside_01inf,
        "passport_matches": r.matches,
        "riemann_hurwitz": r.riemann_hurwitz_balanced(),
    })
}

pub fn belyi_check(map: &str, dessin: &str, normalize: bool) -> Result<Outcome> {
    let f = map_by_name(map)?;
    let d = dessin_by_name(dessin)?;
    let (report, secs) = timed(|| belyi::verify(map, &f, d.as_ref().map(|m| (dessin, m))));
    let report = report?;
    let mut out = Outcome::default();
    let values: Vec<String> = report.critical_values.iter().map(|v| v.to_string()).collect();
    let note = format!(
        "critical values {values:?}, passport {:?}",
        report.passport.as_ref().map(|p| (&p.zero, &p.one, &p.infinity))
    );
    let claim = format!("belyi-check/{map}/{dessin}");
    let computed = belyi_summary(&report);
    let r = if d.is_some() {
        let target = json!({"unramified_outside_01inf": true, "passport_matches": true, "riemann_hurwitz": true});
        ReproductionReport::exact(claim, target, computed, secs)
    } else {
        ReproductionReport::untargeted(claim, computed, secs)
    };
    out.push(r.with_note(note));
    if normalize && !report.unramified_outside_01inf {
        match f.normalized()? {
            Some((g, k)) => {
                let (r2, secs) = timed(|| belyi::verify(map, &g, d.as_ref().map(|m| (dessin, m))));
                let r2 = r2?;
                let values: Vec<String> = r2.critical_values.iter().map(|v| v.to_string()).collect();
                out.push(
                    ReproductionReport::untargeted(format!("belyi-check/{map}-normalized/{dessin}"), belyi_summary(&r2), secs)
                        .with_note(format!("divided by {k:.12}; critical values {values:?}")),
                );
            }
            None => out.details.push("no single stray critical value to normalize".into()),
        }
    }
    for p in belyi::critical_points(&f, belyi::RootOptions::default())? {
        out.details.push(format!("critical point {} -> {} (order {})", p.point, p.value, p.order));
    }
    if let Some(m) = d {
        out.dots.push((format!("dessin_{dessin}"), m.to_dot(dessin)));
    }
    Ok(out)
}

pub fn graph_by_name(name: &str) -> Result<SmallGraph> {
    Ok(match name {
        "c5" => SmallGraph::cycle(5)?,
        "petersen" => SmallGraph::petersen(),
        "pentagram" => SmallGraph::pentagram_graph(),
        path => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            SmallGraph::from_json(&serde_json::from_str(&text)?)?
        }
    })
}

pub fn capacity_claims(graph: &str, power: usize) -> Result<Outcome> {
    let g = graph_by_name(graph)?;
    let (report, secs) = timed(|| capacity::capacity_report(&g, power));
    let report = report?;
    let mut out = Outcome::default();
    let base = format!("capacity/{graph}");
    let theta_target = match graph {
        "c5" => Some(5f64.sqrt()),
        "petersen" => Some(4.0),
        "pentagram" => Some(2.5),
        _ => None,
    };
    match (report.theta, theta_target) {
        (Some(t), Some(want)) => out.push(ReproductionReport::approx(format!("{base}/theta"), &[want], &[t], 1e-9, secs)),
        (t, _) => out.push(
            ReproductionReport::untargeted(format!("{base}/theta"), t, secs)
                .with_note(report.theta_refusal.clone().unwrap_or_default()),
        ),
    }
    if graph == "pentagram" {
        let t = report.theta.unwrap_or(f64::NAN);
        out.push(ReproductionReport::exact(format!("{base}/theta-in-2-3"), true, (2.0..=3.0).contains(&t), secs));
        if let Some((k, a, witness)) = report.power_alphas.iter().find(|(k, _, _)| *k == 2) {
            let square = capacity::strong_product(&g, &g)?;
            let valid = witness.len() == *a && square.is_independent(witness);
            out.push(
                ReproductionReport::exact(format!("{base}/alpha-square-at-least-5"), true, *a >= 5 && valid, secs)
                    .with_note(format!("alpha of power {k} = {a}, witness {witness:?}")),
            );
            out.push(ReproductionReport::exact(
                format!("{base}/shannon-lower-at-least-sqrt5"),
                true,
                report.shannon_lower >= 5f64.sqrt() - 1e-12,
                secs,
            ));
        }
    }
    let mut bracket = ReproductionReport::untargeted(format!("{base}/shannon-bracket"), [report.shannon_lower, report.shannon_upper], secs);
    if graph == "petersen" {
        bracket = bracket.with_note("stated bracket [2, 4]; computed bracket closes at alpha = theta = 4");
    }
    out.push(bracket);
    out.details.push(format!(
        "n = {}, alpha = {}, omega = {}, chi = {}, theta = {:?}, power alphas {:?}",
        report.vertices,
        report.alpha,
        report.omega,
        report.chi,
        report.theta,
        report.power_alphas.iter().map(|(k, a, _)| (k, a)).collect::<Vec<_>>()
    ));
    out.dots.push((format!("graph_{}", stem(graph)), g.to_dot(&stem(graph))));
    Ok(out)
}

/// Deterministic sweeps of the property suites.
pub fn properties(tables: &BTreeMap<usize, Vec<CosetTable>>) -> Result<Outcome> {
    let mut out = Outcome::default();

    let (mismatches, secs) = timed(|| -> Result<(usize, usize)> {
        let mut bad = 0;
        let mut pairs = 0;
        for n in 1..=3 {
            let obs = PauliObservable::nonidentity(n)?;
            let mats: Vec<DenseMatrix> = obs.iter().map(|o| o.to_matrix()).collect();
            for (a, ma) in obs.iter().zip(&mats) {
                for (b, mb) in obs.iter().zip(&mats) {
                    pairs += 1;
                    if a.commutes(b)? != ma.commutator(mb).is_zero(1e-12) {
                        bad += 1;
                    }
                }
            }
        }
        Ok((bad, pairs))
    });
    let (bad, pairs) = mismatches?;
    out.push(ReproductionReport::exact("properties/commutation-oracle", 0, bad, secs).with_note(format!("{pairs} pairs, n = 1..3")));

    let (bad, secs) = timed(|| -> Result<usize> {
        let mut bad = 0;
        for m in [known::fano_dessin(), known::chsh_dessin(), known::mermin_square_dessin()] {
            let n = m.half_edges();
            let (b, w, f) = m.vertex_face_counts()?;
            if (b + w + f + n) % 2 != 0 {
                bad += 1;
            }
            let (g, p) = (m.genus()?, m.passport()?);
            for a in (1..n).filter(|a| gcd(*a, n) == 1) {
                for s in 0..n {
                    let r = Perm::from_images((0..n).map(|i| (a * i + s) % n).collect())?;
                    let moved = m.relabeled(&r);
                    if moved.genus()? != g || moved.passport()? != p {
                        bad += 1;
                    }
                }
            }
        }
        Ok(bad)
    });
    out.push(ReproductionReport::exact("properties/hypermap-relabeling", 0, bad?, secs));

    let (bad, secs) = timed(|| {
        let g = FinitelyPresentedGroup::cartographic();
        let mut bad = 0;
        let mut total = 0;
        for ts in tables.values() {
            let mut seen = std::collections::HashSet::new();
            for t in ts {
                total += 1;
                if !t.satisfies(&g) || !coset_group(t).is_transitive() || !seen.insert(t.canonical_form()) {
                    bad += 1;
                }
            }
        }
        (bad, total)
    });
    out.push(ReproductionReport::exact("properties/low-index-relators", 0, bad.0, secs).with_note(format!("{} tables", bad.1)));

    let (bad, secs) = timed(|| {
        let census = pentagram_census();
        let complement = SmallGraph::petersen().complement();
        let step = (census.count() / 100).max(1);
        census
            .pentagrams
            .iter()
            .step_by(step)
            .take(100)
            .filter(|p| !capacity::is_isomorphic(&p.commutation_graph(), &complement))
            .count()
    });
    out.push(ReproductionReport::exact("properties/census-commutation-graphs", 0, bad, secs).with_note("100 sampled pentagrams"));
    Ok(out)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Figures written by `reproduce-all`.
pub fn figure_dots() -> Vec<(String, String)> {
    let mut v = vec![
        ("dessin_fig1".to_string(), known::fano_dessin().to_dot("fig1")),
        ("dessin_fig2".to_string(), known::chsh_dessin().to_dot("fig2")),
        ("dessin_fig3".to_string(), known::mermin_square_dessin().to_dot("fig3")),
        ("mermin_square".to_string(), canonical_mermin_square().to_dot_incidence("square")),
        ("gq22".to_string(), gq22().to_dot_incidence("gq22")),
        ("petersen".to_string(), SmallGraph::petersen().to_dot("petersen")),
    ];
    if let Some(p) = pentagram_census().pentagrams.iter().find(|p| p.negative_line_count() == 5) {
        v.push(("pentagram".to_string(), p.to_dot_incidence("pentagram")));
    }
    v
}
