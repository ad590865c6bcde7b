use serde::Serialize;

use super::{ContextError, PointLineGeometry};

pub const MAX_KS_POINTS: usize = 24;

/// A `±1` value for every point of a geometry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KsAssignment {
    pub values: Vec<i8>,
}

impl KsAssignment {
    /// Valid iff every line's values multiply to the line sign.
    pub fn is_valid_for(&self, g: &PointLineGeometry) -> bool {
        self.values.len() == g.points().len()
            && g
                .lines()
                .iter()
                .zip(g.signs())
                .all(|(line, &s)| line.iter().map(|&p| self.values[p]).product::<i8>() == s)
    }
}

/// Exhaustive search over all `2^points` sign assignments. `None` certifies
/// that the geometry admits no noncontextual value assignment.
pub fn ks_colorable(g: &PointLineGeometry) -> Result<Option<KsAssignment>, ContextError> {
    let p = g.points().len();
    if p > MAX_KS_POINTS {
        return Err(ContextError::TooManyPoints(p));
    }
    let lines: Vec<(u32, u32)> = g
        .lines()
        .iter()
        .zip(g.signs())
        .map(|(line, &s)| {
            let mask = line.iter().fold(0u32, |m, &i| m | 1 << i);
            (mask, u32::from(s < 0))
        })
        .collect();
    // bit set = value -1
    let hit = (0u32..1 << p).find(|&assign| {
        lines
            .iter()
            .all(|&(mask, odd)| (assign & mask).count_ones() & 1 == odd)
    });
    Ok(hit.map(|assign| KsAssignment {
        values: (0..p)
            .map(|i| if assign >> i & 1 == 1 { -1 } else { 1 })
            .collect(),
    }))
}

/// The parity argument: if every point lies on an even number of lines, the
/// product of all assigned values over all lines is `+1`, so a sign product
/// of `-1` rules out any assignment. Returns `None` when some point has odd
/// degree and the argument does not apply.
pub fn parity_obstruction(g: &PointLineGeometry) -> Option<bool> {
    if g.point_degrees().iter().all(|d| d % 2 == 0) {
        Some(g.sign_product() < 0)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contextuality::geometry::hermitian;

    #[test]
    fn single_positive_line_is_colorable() {
        let g = PointLineGeometry::new(
            vec![hermitian("XI"), hermitian("IX"), hermitian("XX")],
            vec![vec![0, 1, 2]],
        )
        .unwrap();
        let a = ks_colorable(&g).unwrap().unwrap();
        assert_eq!(a.values, vec![1, 1, 1]);
        assert!(a.is_valid_for(&g));
        assert_eq!(parity_obstruction(&g), None);
    }

    #[test]
    fn single_negative_line_is_colorable() {
        let g = PointLineGeometry::new(
            vec![hermitian("XX"), hermitian("YY"), hermitian("ZZ")],
            vec![vec![0, 1, 2]],
        )
        .unwrap();
        let a = ks_colorable(&g).unwrap().unwrap();
        assert!(a.is_valid_for(&g));
        assert_eq!(a.values.iter().product::<i8>(), -1);
    }
}
