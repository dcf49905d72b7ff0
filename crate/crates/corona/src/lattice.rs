//! Triangular-lattice coordinates, region construction, and the geometric
//! sets that define a corona search problem.
//!
//! A lattice point `(x, y)` sits at `x * (1, 0) + y * (1/2, sqrt(3)/2)` in
//! the plane. The up triangle `U(x, y)` has corners `(x, y), (x+1, y),
//! (x, y+1)`; the down triangle `D(x, y)` has corners `(x+1, y), (x, y+1),
//! (x+1, y+1)`. Adjacency and polygon membership are then pure integer
//! arithmetic.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("side length must be at least 1, got {0}")]
    InvalidSideLength(u32),
    #[error("triangles {0} and {1} are not edge-adjacent")]
    NotEdgeAdjacent(TriangleId, TriangleId),
}

/// A vertex of the triangular lattice, in lattice basis coordinates.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: i32,
    pub y: i32,
}

impl LatticePoint {
    pub fn new(x: i32, y: i32) -> Self {
        LatticePoint { x, y }
    }

    /// Euclidean position: `(x + y/2, y * sqrt(3)/2)`.
    pub fn to_plane(self) -> (f64, f64) {
        (
            f64::from(self.x) + f64::from(self.y) / 2.0,
            f64::from(self.y) * 3f64.sqrt() / 2.0,
        )
    }

    pub fn translate(self, dx: i32, dy: i32) -> Self {
        LatticePoint::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// One unit triangle of the lattice. Ordering is lexicographic by
/// `(x, y, points_up)`, which fixes the canonical order used everywhere.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriangleId {
    pub x: i32,
    pub y: i32,
    pub points_up: bool,
}

impl TriangleId {
    pub fn up(x: i32, y: i32) -> Self {
        TriangleId {
            x,
            y,
            points_up: true,
        }
    }

    pub fn down(x: i32, y: i32) -> Self {
        TriangleId {
            x,
            y,
            points_up: false,
        }
    }

    /// The three corner vertices.
    pub fn vertices(self) -> [LatticePoint; 3] {
        let TriangleId { x, y, points_up } = self;
        if points_up {
            [
                LatticePoint::new(x, y),
                LatticePoint::new(x + 1, y),
                LatticePoint::new(x, y + 1),
            ]
        } else {
            [
                LatticePoint::new(x + 1, y),
                LatticePoint::new(x, y + 1),
                LatticePoint::new(x + 1, y + 1),
            ]
        }
    }

    /// The three edge-adjacent triangles, in canonical order: the mate
    /// across the slanted shared edge first, then the mates across the two
    /// axis-aligned edges. Every neighbor of an up triangle points down and
    /// vice versa.
    pub fn adjacent(self) -> [TriangleId; 3] {
        let TriangleId { x, y, points_up } = self;
        if points_up {
            [
                TriangleId::down(x, y),
                TriangleId::down(x - 1, y),
                TriangleId::down(x, y - 1),
            ]
        } else {
            [
                TriangleId::up(x, y),
                TriangleId::up(x + 1, y),
                TriangleId::up(x, y + 1),
            ]
        }
    }

    pub fn translate(self, dx: i32, dy: i32) -> Self {
        TriangleId {
            x: self.x + dx,
            y: self.y + dy,
            points_up: self.points_up,
        }
    }

    /// True when the two triangles share exactly two vertices.
    pub fn is_edge_adjacent(self, other: TriangleId) -> bool {
        self != other && self.adjacent().contains(&other)
    }
}

impl fmt::Debug for TriangleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}, {})",
            if self.points_up { "U" } else { "D" },
            self.x,
            self.y
        )
    }
}

impl fmt::Display for TriangleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The six triangles incident to a lattice vertex.
pub fn triangles_around(v: LatticePoint) -> [TriangleId; 6] {
    let LatticePoint { x, y } = v;
    [
        TriangleId::up(x, y),
        TriangleId::up(x - 1, y),
        TriangleId::up(x, y - 1),
        TriangleId::down(x - 1, y),
        TriangleId::down(x, y - 1),
        TriangleId::down(x - 1, y - 1),
    ]
}

/// The three lozenge orientations.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Orientation {
    LeftTilted,
    RightTilted,
    Vertical,
}

/// Two edge-adjacent unit triangles, stored in canonical `(first < second)`
/// order.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lozenge {
    first: TriangleId,
    second: TriangleId,
}

impl Lozenge {
    pub fn new(a: TriangleId, b: TriangleId) -> Result<Self, LatticeError> {
        if !a.is_edge_adjacent(b) {
            return Err(LatticeError::NotEdgeAdjacent(a, b));
        }
        let (first, second) = if a < b { (a, b) } else { (b, a) };
        Ok(Lozenge { first, second })
    }

    pub fn first(self) -> TriangleId {
        self.first
    }

    pub fn second(self) -> TriangleId {
        self.second
    }

    pub fn triangles(self) -> [TriangleId; 2] {
        [self.first, self.second]
    }

    pub fn contains(self, t: TriangleId) -> bool {
        self.first == t || self.second == t
    }

    fn up_down(self) -> (TriangleId, TriangleId) {
        if self.first.points_up {
            (self.first, self.second)
        } else {
            (self.second, self.first)
        }
    }

    /// Orientation, derived from which shared edge direction joins the pair.
    pub fn orientation(self) -> Orientation {
        let (up, down) = self.up_down();
        if down == TriangleId::down(up.x, up.y) {
            Orientation::RightTilted
        } else if down == TriangleId::down(up.x - 1, up.y) {
            Orientation::LeftTilted
        } else {
            debug_assert_eq!(down, TriangleId::down(up.x, up.y - 1));
            Orientation::Vertical
        }
    }

    /// The four corners of the rhombus, in cyclic polygon order.
    pub fn vertices(self) -> [LatticePoint; 4] {
        let (up, _) = self.up_down();
        let (x, y) = (up.x, up.y);
        match self.orientation() {
            Orientation::RightTilted => [
                LatticePoint::new(x, y),
                LatticePoint::new(x + 1, y),
                LatticePoint::new(x + 1, y + 1),
                LatticePoint::new(x, y + 1),
            ],
            Orientation::LeftTilted => [
                LatticePoint::new(x, y),
                LatticePoint::new(x + 1, y),
                LatticePoint::new(x, y + 1),
                LatticePoint::new(x - 1, y + 1),
            ],
            Orientation::Vertical => [
                LatticePoint::new(x, y + 1),
                LatticePoint::new(x, y),
                LatticePoint::new(x + 1, y - 1),
                LatticePoint::new(x + 1, y),
            ],
        }
    }

    pub fn translate(self, dx: i32, dy: i32) -> Self {
        Lozenge {
            first: self.first.translate(dx, dy),
            second: self.second.translate(dx, dy),
        }
    }
}

impl fmt::Debug for Lozenge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}|{:?}]", self.first, self.second)
    }
}

/// The four supported region families. `Hexagon(n)` and `Diamond(n)` are
/// the equal-sided specializations of the general forms.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Shape {
    Hexagon(u32),
    Diamond(u32),
    GenHexagon(u32, u32, u32),
    GenDiamond(u32, u32),
}

impl Shape {
    /// The defining side lengths: one for the regular shapes, two for the
    /// general diamond, three for the general hexagon.
    pub fn side_lengths(&self) -> Vec<u32> {
        match *self {
            Shape::Hexagon(n) | Shape::Diamond(n) => vec![n],
            Shape::GenHexagon(a, b, c) => vec![a, b, c],
            Shape::GenDiamond(a, b) => vec![a, b],
        }
    }

    /// Total boundary length in unit edges.
    pub fn perimeter(&self) -> u64 {
        match *self {
            Shape::Hexagon(n) => 6 * u64::from(n),
            Shape::Diamond(n) => 4 * u64::from(n),
            Shape::GenHexagon(a, b, c) => 2 * (u64::from(a) + u64::from(b) + u64::from(c)),
            Shape::GenDiamond(a, b) => 2 * (u64::from(a) + u64::from(b)),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Shape::Hexagon(_) => "hexagon",
            Shape::Diamond(_) => "diamond",
            Shape::GenHexagon(..) => "gen-hexagon",
            Shape::GenDiamond(..) => "gen-diamond",
        }
    }

    // Every shape is either a hexagon (three side parameters) or a diamond
    // (two side parameters).
    fn resolved(&self) -> ResolvedShape {
        match *self {
            Shape::Hexagon(n) => ResolvedShape::Hexagon(n, n, n),
            Shape::GenHexagon(a, b, c) => ResolvedShape::Hexagon(a, b, c),
            Shape::Diamond(n) => ResolvedShape::Diamond(n, n),
            Shape::GenDiamond(a, b) => ResolvedShape::Diamond(a, b),
        }
    }
}

enum ResolvedShape {
    Hexagon(u32, u32, u32),
    Diamond(u32, u32),
}

/// A finite triangle set together with its shape metadata and boundary
/// cycle. Construct with [`build_region`].
#[derive(Clone, Debug)]
pub struct Region {
    shape: Shape,
    triangles: BTreeSet<TriangleId>,
    boundary: Vec<LatticePoint>,
}

impl Region {
    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn triangles(&self) -> &BTreeSet<TriangleId> {
        &self.triangles
    }

    /// Boundary vertices as a counterclockwise cycle, starting at the
    /// bottom-left corner.
    pub fn boundary_vertices(&self) -> &[LatticePoint] {
        &self.boundary
    }

    pub fn boundary_vertex_set(&self) -> BTreeSet<LatticePoint> {
        self.boundary.iter().copied().collect()
    }

    pub fn contains(&self, t: TriangleId) -> bool {
        self.triangles.contains(&t)
    }

    pub fn translate(&self, dx: i32, dy: i32) -> Region {
        Region {
            shape: self.shape,
            triangles: self.triangles.iter().map(|t| t.translate(dx, dy)).collect(),
            boundary: self.boundary.iter().map(|v| v.translate(dx, dy)).collect(),
        }
    }

    /// Every triangle outside the region that shares at least one vertex
    /// with the region boundary. These are exactly the triangles a corona
    /// must cover for the region plus corona to contain a neighborhood of
    /// the region.
    pub fn external_ring_triangles(&self) -> BTreeSet<TriangleId> {
        let mut ring = BTreeSet::new();
        for &v in &self.boundary {
            for t in triangles_around(v) {
                if !self.contains(t) {
                    ring.insert(t);
                }
            }
        }
        ring
    }

    /// Every lozenge whose two triangles both lie outside the region and
    /// which has at least one vertex on the region boundary. A corona may
    /// only use these: anything farther out would be detached.
    ///
    /// Each candidate contains at least one ring triangle (a lozenge vertex
    /// on the boundary belongs to one of its triangles, and that triangle is
    /// then in the ring), so candidates are exactly the pairs of a ring
    /// triangle with an exterior neighbor.
    pub fn candidate_lozenges(&self) -> BTreeSet<Lozenge> {
        let mut out = BTreeSet::new();
        for &t in &self.external_ring_triangles() {
            for u in t.adjacent() {
                if !self.contains(u) {
                    out.insert(Lozenge::new(t, u).expect("neighbors are edge-adjacent"));
                }
            }
        }
        out
    }
}

/// Builds the region for a shape. All side lengths must be at least 1.
///
/// The region is anchored with its bottom-left corner at the origin. The
/// boundary cycle runs counterclockwise from there.
pub fn build_region(shape: Shape) -> Result<Region, LatticeError> {
    for side in shape.side_lengths() {
        if side < 1 {
            return Err(LatticeError::InvalidSideLength(side));
        }
    }

    let corners: Vec<LatticePoint> = match shape.resolved() {
        ResolvedShape::Hexagon(n1, n2, n3) => {
            let (n1, n2, n3) = (n1 as i32, n2 as i32, n3 as i32);
            vec![
                LatticePoint::new(0, 0),
                LatticePoint::new(n1, 0),
                LatticePoint::new(n1, n2),
                LatticePoint::new(n1 - n3, n2 + n3),
                LatticePoint::new(-n3, n2 + n3),
                LatticePoint::new(-n3, n3),
            ]
        }
        ResolvedShape::Diamond(n1, n2) => {
            let (n1, n2) = (n1 as i32, n2 as i32);
            vec![
                LatticePoint::new(0, 0),
                LatticePoint::new(n1, 0),
                LatticePoint::new(n1, n2),
                LatticePoint::new(0, n2),
            ]
        }
    };

    let boundary = walk_boundary(&corners);
    let triangles = collect_triangles(&shape, &corners);

    Ok(Region {
        shape,
        triangles,
        boundary,
    })
}

/// Expands polygon corners into the full vertex cycle, one lattice step at
/// a time.
fn walk_boundary(corners: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut cycle = Vec::new();
    for (i, &a) in corners.iter().enumerate() {
        let b = corners[(i + 1) % corners.len()];
        let steps = (b.x - a.x).abs().max((b.y - a.y).abs());
        let dir = ((b.x - a.x) / steps, (b.y - a.y) / steps);
        for k in 0..steps {
            cycle.push(LatticePoint::new(a.x + dir.0 * k, a.y + dir.1 * k));
        }
    }
    cycle
}

fn collect_triangles(shape: &Shape, corners: &[LatticePoint]) -> BTreeSet<TriangleId> {
    // Closed half-plane membership per shape family; a unit triangle lies
    // inside the convex polygon iff all three of its corners do.
    let inside: Box<dyn Fn(LatticePoint) -> bool> = match shape.resolved() {
        ResolvedShape::Hexagon(n1, n2, n3) => {
            let (n1, n2, n3) = (n1 as i32, n2 as i32, n3 as i32);
            Box::new(move |v: LatticePoint| {
                v.y >= 0
                    && v.y <= n2 + n3
                    && v.x >= -n3
                    && v.x <= n1
                    && v.x + v.y >= 0
                    && v.x + v.y <= n1 + n2
            })
        }
        ResolvedShape::Diamond(n1, n2) => {
            let (n1, n2) = (n1 as i32, n2 as i32);
            Box::new(move |v: LatticePoint| v.x >= 0 && v.x <= n1 && v.y >= 0 && v.y <= n2)
        }
    };

    let min_x = corners.iter().map(|c| c.x).min().unwrap() - 1;
    let max_x = corners.iter().map(|c| c.x).max().unwrap() + 1;
    let min_y = corners.iter().map(|c| c.y).min().unwrap() - 1;
    let max_y = corners.iter().map(|c| c.y).max().unwrap() + 1;

    let mut triangles = BTreeSet::new();
    for x in min_x..=max_x {
        for y in min_y..=max_y {
            for t in [TriangleId::up(x, y), TriangleId::down(x, y)] {
                if t.vertices().into_iter().all(&inside) {
                    triangles.insert(t);
                }
            }
        }
    }
    triangles
}
