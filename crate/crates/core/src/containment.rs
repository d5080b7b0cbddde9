//! Segment and polygon containment in a convex polygon.
//!
//! A convex region contains a segment iff it contains both endpoints, and a
//! polygon iff it contains every vertex. Containment is closed: points on
//! the boundary count as contained.

use crate::classify::classify_extra_vertex_best_edge;
use crate::error::{Error, Result};
use crate::geom::{triangle_signed2, Point, Polygon, Tolerance};

// p is collinear with ab here; checks it falls within ab's box.
fn within_box(a: Point, b: Point, p: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Whether closed segments `ab` and `cd` share a point, including touching
/// endpoints and collinear overlap.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> Result<bool> {
    if a == b || c == d {
        return Err(Error::DegenerateInput("zero-length segment".into()));
    }
    let d1 = triangle_signed2(c, d, a);
    let d2 = triangle_signed2(c, d, b);
    let d3 = triangle_signed2(a, b, c);
    let d4 = triangle_signed2(a, b, d);

    if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
        return Ok(true);
    }
    Ok((d1 == 0.0 && within_box(c, d, a))
        || (d2 == 0.0 && within_box(c, d, b))
        || (d3 == 0.0 && within_box(a, b, c))
        || (d4 == 0.0 && within_box(a, b, d)))
}

/// Whether segment `ab` lies in the closed region of a convex polygon.
pub fn segment_inside(poly: &Polygon, a: Point, b: Point, tol: &Tolerance) -> Result<bool> {
    Ok(
        classify_extra_vertex_best_edge(poly, a, tol)?.is_closed_inside()
            && classify_extra_vertex_best_edge(poly, b, tol)?.is_closed_inside(),
    )
}

/// Whether every vertex of `inner` lies in the closed region of the convex
/// polygon `outer`. `inner` may be any valid polygon.
pub fn polygon_inside(outer: &Polygon, inner: &Polygon, tol: &Tolerance) -> Result<bool> {
    if !outer.is_convex() {
        return Err(Error::NotConvex);
    }
    for &v in inner.vertices() {
        if !classify_extra_vertex_best_edge(outer, v, tol)?.is_closed_inside() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::validate;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn square() -> Polygon {
        validate(vec![p(0.0, 0.0), p(0.0, 1.0), p(1.0, 1.0), p(1.0, 0.0)]).unwrap()
    }

    #[test]
    fn intersect_examples() {
        let si = |a, b, c, d| segments_intersect(a, b, c, d).unwrap();
        assert!(si(p(0.0, 0.0), p(2.0, 2.0), p(0.0, 2.0), p(2.0, 0.0)));
        assert!(!si(p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0), p(1.0, 1.0)));
        assert!(si(p(0.0, 0.0), p(2.0, 0.0), p(1.0, 0.0), p(3.0, 0.0)));
        // endpoint touch, T-junction, collinear but disjoint
        assert!(si(p(0.0, 0.0), p(1.0, 0.0), p(1.0, 0.0), p(1.0, 5.0)));
        assert!(si(p(0.0, 0.0), p(2.0, 0.0), p(1.0, 0.0), p(1.0, 5.0)));
        assert!(!si(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0), p(3.0, 0.0)));
        assert!(!si(p(0.0, 0.0), p(1.0, 1.0), p(3.0, 0.0), p(2.0, 1.0)));
    }

    #[test]
    fn zero_length_rejected() {
        assert!(matches!(
            segments_intersect(p(1.0, 1.0), p(1.0, 1.0), p(0.0, 0.0), p(2.0, 0.0)),
            Err(Error::DegenerateInput(_))
        ));
        assert!(segments_intersect(p(0.0, 0.0), p(2.0, 0.0), p(3.0, 3.0), p(3.0, 3.0)).is_err());
    }

    #[test]
    fn segment_examples() {
        let sq = square();
        let t = Tolerance::default();
        assert!(segment_inside(&sq, p(0.2, 0.2), p(0.8, 0.8), &t).unwrap());
        assert!(!segment_inside(&sq, p(0.5, 0.5), p(2.0, 0.5), &t).unwrap());
        assert!(segment_inside(&sq, p(0.0, 0.0), p(1.0, 1.0), &t).unwrap());
        let dart = validate(vec![p(0.0, 0.0), p(4.0, 0.0), p(2.0, 1.0), p(2.0, 3.0)]).unwrap();
        assert_eq!(
            segment_inside(&dart, p(1.0, 0.5), p(2.0, 0.5), &t),
            Err(Error::NotConvex)
        );
    }

    #[test]
    fn polygon_examples() {
        let sq = square();
        let t = Tolerance::default();
        let quarter = validate(vec![
            p(0.25, 0.25),
            p(0.25, 0.75),
            p(0.75, 0.75),
            p(0.75, 0.25),
        ])
        .unwrap();
        assert!(polygon_inside(&sq, &quarter, &t).unwrap());
        let poking = validate(vec![p(0.5, 0.5), p(2.0, 2.0), p(0.9, 0.1)]).unwrap();
        assert!(!polygon_inside(&sq, &poking, &t).unwrap());
        assert!(polygon_inside(&sq, &sq, &t).unwrap());
        // concave inner is fine
        let dart = validate(vec![p(0.1, 0.1), p(0.9, 0.1), p(0.5, 0.3), p(0.5, 0.9)]).unwrap();
        assert!(polygon_inside(&sq, &dart, &t).unwrap());
        assert_eq!(polygon_inside(&dart, &sq, &t), Err(Error::NotConvex));
    }
}
