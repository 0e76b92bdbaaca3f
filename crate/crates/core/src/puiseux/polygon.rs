use num_integer::Integer;

use crate::poly::Poly;

/// Kind of a Newton polygon piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentKind {
    Compact,
    /// Unbounded in the t-exponent direction: the first variable divides f.
    VerticalRay,
    /// Unbounded in the s-exponent direction: the second variable divides f.
    HorizontalRay,
}

/// A piece of the Newton polygon in (s-exponent, t-exponent) coordinates.
///
/// For compact segments `start` is the endpoint with the larger s-exponent.
/// Rays are degenerate, with `start == end` at their base vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub kind: SegmentKind,
    pub start: (u32, u32),
    pub end: (u32, u32),
}

impl Segment {
    /// `(u, v)` in lowest terms with `t ~ s^(u/v)` along the segment.
    pub fn slope(&self) -> Option<(u32, u32)> {
        if self.kind != SegmentKind::Compact {
            return None;
        }
        let di = self.start.0 - self.end.0;
        let dj = self.end.1 - self.start.1;
        let g = di.gcd(&dj);
        Some((di / g, dj / g))
    }
}

fn support(f: &Poly) -> Vec<(u32, u32)> {
    f.terms().map(|(m, _)| (m.get(0), m.get(1))).collect()
}

/// Compact edges of the lower hull, from the vertex nearest the t-exponent axis outward.
pub(crate) fn compact_edges(pts: &[(u32, u32)]) -> Vec<Segment> {
    let Some(&first) = pts.iter().min_by_key(|&&(i, j)| (i, j)) else {
        return vec![];
    };
    let jmin = pts.iter().map(|p| p.1).min().unwrap();
    let mut cur = first;
    let mut out = Vec::new();
    while cur.1 > jmin {
        // next vertex: minimal slope di/dj, farthest point on ties
        let mut best: Option<(u32, u32)> = None;
        for &p in pts.iter().filter(|p| p.1 < cur.1) {
            let di = p.0 as i64 - cur.0 as i64;
            let dj = (cur.1 - p.1) as i64;
            let better = match best {
                None => true,
                Some(b) => {
                    let bdi = b.0 as i64 - cur.0 as i64;
                    let bdj = (cur.1 - b.1) as i64;
                    let lhs = di * bdj;
                    let rhs = bdi * dj;
                    lhs < rhs || (lhs == rhs && p.1 < b.1)
                }
            };
            if better {
                best = Some(p);
            }
        }
        let next = best.expect("a lower point exists");
        out.push(Segment { kind: SegmentKind::Compact, start: next, end: cur });
        cur = next;
    }
    out
}

/// Newton polygon of a two-variable polynomial with no constant term.
///
/// Pieces are listed from the t-exponent axis side: vertical ray (if `s | f`),
/// compact segments in order of increasing slope, horizontal ray (if `t | f`).
pub fn newton_polygon(f: &Poly) -> Vec<Segment> {
    assert_eq!(f.nvars(), 2, "Newton polygons are for plane curves");
    let pts = support(f);
    if pts.is_empty() {
        return vec![];
    }
    let mut out = Vec::new();
    let top = *pts.iter().min_by_key(|&&(i, j)| (i, j)).unwrap();
    if top.0 > 0 {
        out.push(Segment { kind: SegmentKind::VerticalRay, start: top, end: top });
    }
    let edges = compact_edges(&pts);
    let bottom = edges.last().map(|e| e.start).unwrap_or(top);
    out.extend(edges);
    if bottom.1 > 0 {
        out.push(Segment { kind: SegmentKind::HorizontalRay, start: bottom, end: bottom });
    }
    out
}
