//! Continuous diagrams as east-north directed paths.
//!
//! A path with `n` blocks from (0,0) to (x,y) is stored in Cartesian
//! coordinates: the interior corner abscissas `xs` and ordinates `ys`
//! (n−1 each, weakly increasing, bounded by the endpoint). The bounded
//! staircase region carries area, a stair form, a duality that mirrors
//! partition conjugation, a concatenation monoid with unit ⋄, and the
//! inclusion partial order.
//!
//! The coordinate type is generic so the same code runs on `f64` for
//! numerics and on `BigRational` when exactness matters (duality is an
//! exact involution on rational paths, concatenation adds areas exactly,
//! and integer partitions embed without rounding).

use crate::error::{Error, Result};
use crate::rational::rat_to_f64;
use num::{BigInt, BigRational, One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::ops::{Mul, Sub};

/// Coordinate scalar for paths: ordered semiring with subtraction.
pub trait Coord:
    Clone + PartialOrd + Zero + Sub<Output = Self> + Mul<Output = Self>
{
}

impl<T> Coord for T where T: Clone + PartialOrd + Zero + Sub<Output = T> + Mul<Output = T> {}

/// An east-north directed path with `n = xs.len() + 1` blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectedPath<T = f64> {
    x: T,
    y: T,
    xs: Vec<T>,
    ys: Vec<T>,
}

/// A planar point list; produced by [`DirectedPath::points`] (east-north)
/// and [`DirectedPath::stair_points`] (east-south).
#[derive(Debug, Clone, PartialEq)]
pub struct PointList<T = f64>(pub Vec<(T, T)>);

impl<T: Coord> PointList<T> {
    pub fn points(&self) -> &[(T, T)] {
        &self.0
    }

    /// Reflection t ↦ height − t of every ordinate; applying it twice with
    /// the same height returns the original list.
    pub fn reflect_y(&self, height: T) -> PointList<T> {
        PointList(
            self.0
                .iter()
                .map(|(px, py)| (px.clone(), height.clone() - py.clone()))
                .collect(),
        )
    }
}

impl<T: Coord> DirectedPath<T> {
    /// Validates the Cartesian data of a path in P_n(x, y). Zero-length
    /// steps are allowed, so all inequalities are weak.
    pub fn new(x: T, y: T, xs: Vec<T>, ys: Vec<T>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::domain(format!(
                "coordinate lists must have equal length, got {} and {}",
                xs.len(),
                ys.len()
            )));
        }
        Self::check_monotone(&xs, &x, "xs", "width")?;
        Self::check_monotone(&ys, &y, "ys", "height")?;
        Ok(DirectedPath { x, y, xs, ys })
    }

    fn check_monotone(vals: &[T], limit: &T, name: &str, limit_name: &str) -> Result<()> {
        let mut prev = T::zero();
        for (i, v) in vals.iter().enumerate() {
            if !(*v >= prev) {
                return Err(Error::domain(format!(
                    "{name}[{i}] breaks monotonicity (or is not a number)"
                )));
            }
            prev = v.clone();
        }
        if !(*limit >= prev) {
            return Err(Error::domain(format!("{limit_name} is below the last {name} entry")));
        }
        Ok(())
    }

    /// The single-block path (0,0) → (x,0) → (x,y).
    pub fn one_block(x: T, y: T) -> Result<Self> {
        Self::new(x, y, Vec::new(), Vec::new())
    }

    /// Skips validation. Finite-difference probes evaluate the area form a
    /// step outside the ordered region; nothing else should use this.
    pub fn unchecked(x: T, y: T, xs: Vec<T>, ys: Vec<T>) -> Self {
        DirectedPath { x, y, xs, ys }
    }

    /// Number of blocks n.
    pub fn blocks(&self) -> usize {
        self.xs.len() + 1
    }

    pub fn width(&self) -> &T {
        &self.x
    }

    pub fn height(&self) -> &T {
        &self.y
    }

    pub fn xs(&self) -> &[T] {
        &self.xs
    }

    pub fn ys(&self) -> &[T] {
        &self.ys
    }

    /// i-th block width x_i for i in 1..=n (x_n = x).
    fn x_at(&self, i: usize) -> T {
        if i <= self.xs.len() {
            self.xs[i - 1].clone()
        } else {
            self.x.clone()
        }
    }

    /// i-th corner height y_i for i in 0..=n (y_0 = 0, y_n = y).
    fn y_at(&self, i: usize) -> T {
        if i == 0 {
            T::zero()
        } else if i <= self.ys.len() {
            self.ys[i - 1].clone()
        } else {
            self.y.clone()
        }
    }

    /// The 2n+1 vertices: p₀ = (0,0), p_{2i−1} = (x_i, y_{i−1}),
    /// p_{2i} = (x_i, y_i).
    pub fn points(&self) -> PointList<T> {
        let n = self.blocks();
        let mut pts = Vec::with_capacity(2 * n + 1);
        pts.push((T::zero(), T::zero()));
        for i in 1..=n {
            pts.push((self.x_at(i), self.y_at(i - 1)));
            pts.push((self.x_at(i), self.y_at(i)));
        }
        PointList(pts)
    }

    /// Inverse of [`points`](Self::points): rebuilds the path from an
    /// alternating east/north vertex list.
    pub fn from_points(pts: &PointList<T>) -> Result<Self> {
        let p = &pts.0;
        if p.len() < 3 || p.len().is_multiple_of(2) {
            return Err(Error::domain(format!(
                "a directed path needs an odd number (>= 3) of points, got {}",
                p.len()
            )));
        }
        if !(p[0].0 == T::zero() && p[0].1 == T::zero()) {
            return Err(Error::domain("path must start at the origin"));
        }
        for (i, w) in p.windows(2).enumerate() {
            let east = i.is_multiple_of(2);
            let (dx_ok, dy_ok) = if east {
                (w[1].0 >= w[0].0, w[1].1 == w[0].1)
            } else {
                (w[1].0 == w[0].0, w[1].1 >= w[0].1)
            };
            if !(dx_ok && dy_ok) {
                return Err(Error::domain(format!(
                    "step {i} is not a forward {} step",
                    if east { "east" } else { "north" }
                )));
            }
        }
        let n = (p.len() - 1) / 2;
        let xs = (1..n).map(|i| p[2 * i - 1].0.clone()).collect();
        let ys = (1..n).map(|i| p[2 * i].1.clone()).collect();
        Self::new(p[2 * n].0.clone(), p[2 * n].1.clone(), xs, ys)
    }

    /// Area via the horizontal tessellation: Σ x_i (y_i − y_{i−1}).
    pub fn area(&self) -> T {
        let n = self.blocks();
        let mut acc = T::zero();
        for i in 1..=n {
            acc = acc + self.x_at(i) * (self.y_at(i) - self.y_at(i - 1));
        }
        acc
    }

    /// Area via the vertical tessellation: Σ (x_i − x_{i−1}) (y − y_{i−1});
    /// agrees with [`area`](Self::area) (exactly on rationals, to a few ulps
    /// on floats).
    pub fn area_vertical(&self) -> T {
        let n = self.blocks();
        let mut acc = T::zero();
        let mut prev_x = T::zero();
        for i in 1..=n {
            let xi = self.x_at(i);
            acc = acc + (xi.clone() - prev_x) * (self.y.clone() - self.y_at(i - 1));
            prev_x = xi;
        }
        acc
    }

    /// Stair form: the same region built as a left-justified stair, bounded
    /// by the east-south path q_i = (π_x(p_i), y − π_y(p_i)).
    pub fn stair_points(&self) -> PointList<T> {
        self.points().reflect_y(self.y.clone())
    }

    /// Dual path in P_n(y, x): x_iᵗ = y − y_{n−i}, y_iᵗ = x − x_{n−i}.
    /// The continuous analogue of conjugating a partition; an exact
    /// involution on rational coordinates.
    pub fn dual(&self) -> DirectedPath<T> {
        let n = self.blocks();
        let xs_t: Vec<T> = (1..n).map(|i| self.y.clone() - self.y_at(n - i)).collect();
        let ys_t: Vec<T> = (1..n).map(|i| self.x.clone() - self.x_at(n - i)).collect();
        DirectedPath { x: self.y.clone(), y: self.x.clone(), xs: xs_t, ys: ys_t }
    }

    /// Concatenation: translate `other` so it starts at this path's corner.
    /// Lands in P_{n+m}(x+w, y+z).
    pub fn concat(&self, other: &DirectedPath<T>) -> DirectedPath<T> {
        let mut xs = self.xs.clone();
        xs.push(self.x.clone());
        xs.extend(other.xs.iter().map(|w| self.x.clone() + w.clone()));
        let mut ys = self.ys.clone();
        ys.push(self.y.clone());
        ys.extend(other.ys.iter().map(|z| self.y.clone() + z.clone()));
        DirectedPath {
            x: self.x.clone() + other.x.clone(),
            y: self.y.clone() + other.y.clone(),
            xs,
            ys,
        }
    }

    /// Inclusion order: true iff this diagram, translated upward so its
    /// upper-left corner meets `other`'s, fits inside `other`. Checked on
    /// the corner points: for each i there must be a block j of `other`
    /// with z_{j−1} ≤ y_{i−1} + z − y ≤ z_j and x_i ≤ w_j.
    pub fn leq(&self, other: &DirectedPath<T>) -> bool {
        if !(other.y >= self.y) {
            return false;
        }
        let shift = other.y.clone() - self.y.clone();
        let n = self.blocks();
        for i in 1..=n {
            let t = self.y_at(i - 1) + shift.clone();
            // Largest j with z_{j−1} ≤ t; widths are nondecreasing in j, so
            // this is the most permissive block containing height t.
            let j = other.ys.partition_point(|v| *v <= t) + 1;
            if !(self.x_at(i) <= other.x_at(j)) {
                return false;
            }
        }
        true
    }

    /// Canonical representative of the underlying region: merges interior
    /// zero-height blocks and zero-length east steps. Region and area are
    /// unchanged; region-equal paths canonicalize to equal coordinates.
    pub fn canonicalize(&self) -> DirectedPath<T> {
        let mut xs = self.xs.clone();
        let mut ys = self.ys.clone();
        loop {
            let mut removed = false;
            for j in 0..xs.len() {
                let prev_y = if j == 0 { T::zero() } else { ys[j - 1].clone() };
                let next_x = if j + 1 < xs.len() { xs[j + 1].clone() } else { self.x.clone() };
                if ys[j] == prev_y || xs[j] == next_x {
                    xs.remove(j);
                    ys.remove(j);
                    removed = true;
                    break;
                }
            }
            if !removed {
                return DirectedPath { x: self.x.clone(), y: self.y.clone(), xs, ys };
            }
        }
    }

    /// Gradient of the area map on P_n(x,y): the 2(n−1) partials
    /// (∂/∂x_i = y_i − y_{i−1}, then ∂/∂y_i = x_i − x_{i+1}).
    /// Empty for a single block.
    pub fn area_gradient(&self) -> Vec<T> {
        let n = self.blocks();
        let mut grad = Vec::with_capacity(2 * (n - 1));
        for i in 1..n {
            grad.push(self.y_at(i) - self.y_at(i - 1));
        }
        for i in 1..n {
            grad.push(self.x_at(i) - self.x_at(i + 1));
        }
        grad
    }
}

impl<T: Coord + One> DirectedPath<T> {
    /// Coordinate-wise affine combination t·p + (1−t)·q of paths with equal
    /// block counts (endpoints are combined too). Concatenation is an affine
    /// map with respect to this operation.
    pub fn convex_combine(&self, other: &DirectedPath<T>, t: T) -> Result<DirectedPath<T>> {
        if self.blocks() != other.blocks() {
            return Err(Error::domain(format!(
                "convex combination needs equal block counts, got {} and {}",
                self.blocks(),
                other.blocks()
            )));
        }
        if !(t >= T::zero() && t <= T::one()) {
            return Err(Error::domain("combination parameter must lie in [0, 1]"));
        }
        let s = T::one() - t.clone();
        let mix = |a: &T, b: &T| t.clone() * a.clone() + s.clone() * b.clone();
        DirectedPath::new(
            mix(&self.x, &other.x),
            mix(&self.y, &other.y),
            self.xs.iter().zip(&other.xs).map(|(a, b)| mix(a, b)).collect(),
            self.ys.iter().zip(&other.ys).map(|(a, b)| mix(a, b)).collect(),
        )
    }
}

impl DirectedPath<BigRational> {
    /// Numeric image of an exact path.
    pub fn to_f64(&self) -> DirectedPath<f64> {
        DirectedPath {
            x: rat_to_f64(&self.x),
            y: rat_to_f64(&self.y),
            xs: self.xs.iter().map(rat_to_f64).collect(),
            ys: self.ys.iter().map(rat_to_f64).collect(),
        }
    }
}

/// Monoid element: either the zero-length path ⋄ or a genuine path.
/// ⋄ is kept distinct from every P_n so path invariants stay uniform.
#[derive(Debug, Clone, PartialEq)]
pub enum Diagram<T = f64> {
    Diamond,
    Path(DirectedPath<T>),
}

impl<T: Coord> Diagram<T> {
    pub fn blocks(&self) -> usize {
        match self {
            Diagram::Diamond => 0,
            Diagram::Path(p) => p.blocks(),
        }
    }

    pub fn area(&self) -> T {
        match self {
            Diagram::Diamond => T::zero(),
            Diagram::Path(p) => p.area(),
        }
    }

    /// Concatenation with unit ⋄.
    pub fn concat(&self, other: &Diagram<T>) -> Diagram<T> {
        match (self, other) {
            (Diagram::Diamond, q) => q.clone(),
            (p, Diagram::Diamond) => p.clone(),
            (Diagram::Path(p), Diagram::Path(q)) => Diagram::Path(p.concat(q)),
        }
    }

    /// Partial order with minimum ⋄.
    pub fn leq(&self, other: &Diagram<T>) -> bool {
        match (self, other) {
            (Diagram::Diamond, _) => true,
            (Diagram::Path(p), Diagram::Diamond) => {
                *p.width() == T::zero() && *p.height() == T::zero()
            }
            (Diagram::Path(p), Diagram::Path(q)) => p.leq(q),
        }
    }
}

/// Exact sign data for the dual map: determinant of the linear part of
/// ( )ᵗ on P_n, computed over the integers. Equals +1 iff n is odd.
pub fn dual_orientation_det(n: usize) -> BigInt {
    assert!(n >= 1);
    let d = n - 1;
    if d == 0 {
        return BigInt::one();
    }
    // Variables (xs_1..xs_d, ys_1..ys_d); the dual sends
    // xsᵗ_i = y − ys_{n−i} and ysᵗ_i = x − xs_{n−i}.
    let dim = 2 * d;
    let mut m = vec![vec![0i64; dim]; dim];
    for i in 0..d {
        m[i][d + (d - 1 - i)] = -1;
        m[d + i][d - 1 - i] = -1;
    }
    det_bareiss(m)
}

/// Fraction-free Gaussian elimination (Bareiss) for small integer matrices.
fn det_bareiss(mut m: Vec<Vec<i64>>) -> BigInt {
    let n = m.len();
    let mut mat: Vec<Vec<i128>> =
        m.drain(..).map(|row| row.into_iter().map(i128::from).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if mat[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| mat[r][k] != 0) else {
                return BigInt::zero();
            };
            mat.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
            }
            mat[i][k] = 0;
        }
        prev = mat[k][k];
    }
    BigInt::from(sign * mat[n - 1][n - 1])
}

/// A numerical partition λ_1 ≥ λ_2 ≥ … ≥ λ_k > 0 (largest part first).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition(Vec<u64>);

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::domain("a partition needs at least one part"));
        }
        for w in parts.windows(2) {
            if w[1] > w[0] {
                return Err(Error::domain("partition parts must be nonincreasing"));
            }
        }
        if *parts.last().unwrap() == 0 {
            return Err(Error::domain("partition parts must be positive"));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// Total number of boxes.
    pub fn area(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Number of parts (blocks of the stair).
    pub fn height(&self) -> usize {
        self.0.len()
    }

    /// Largest part.
    pub fn width(&self) -> u64 {
        self.0[0]
    }

    /// Conjugate partition: λᵗ_j = #{i : λ_i ≥ j}.
    pub fn conjugate(&self) -> Partition {
        let w = self.width();
        let parts = (1..=w).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u64).collect();
        Partition(parts)
    }
}

/// The directed path bounding a partition's stair, with equal consecutive
/// parts merged into single blocks (the fewest-block representation).
/// Its diagram has area Σλ_i, height = number of parts, width = largest
/// part, and one block per distinct part value.
pub fn young_path(partition: &Partition) -> DirectedPath<BigRational> {
    let mut widths = Vec::new();
    let mut mults = Vec::new();
    for &part in partition.parts().iter().rev() {
        if widths.last() == Some(&part) {
            *mults.last_mut().unwrap() += 1u64;
        } else {
            widths.push(part);
            mults.push(1u64);
        }
    }
    let b = widths.len();
    let int = |v: u64| BigRational::from_integer(BigInt::from(v));
    let xs: Vec<BigRational> = widths[..b - 1].iter().map(|&v| int(v)).collect();
    let mut ys = Vec::with_capacity(b - 1);
    let mut acc = 0u64;
    for &m in &mults[..b - 1] {
        acc += m;
        ys.push(int(acc));
    }
    DirectedPath::new(int(widths[b - 1]), int(partition.height() as u64), xs, ys)
        .expect("partition stairs are monotone by construction")
}

/// All partitions with exactly `n` parts and largest part exactly `m`,
/// i.e. the set Y(m, n).
pub fn enumerate_young(m: u64, n: u64) -> Result<Vec<Partition>> {
    if m == 0 || n == 0 {
        return Err(Error::domain("Y(m,n) needs m >= 1 and n >= 1"));
    }
    let mut out = Vec::new();
    let mut current = vec![m];
    fn rec(current: &mut Vec<u64>, max: u64, left: u64, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for v in 1..=max {
            current.push(v);
            rec(current, v, left - 1, out);
            current.pop();
        }
    }
    rec(&mut current, m, n - 1, &mut out);
    Ok(out)
}

/// Histogram a ↦ |Y(m, n, a)| of the areas occurring in Y(m, n).
pub fn young_area_histogram(m: u64, n: u64) -> Result<BTreeMap<u64, u64>> {
    let mut hist = BTreeMap::new();
    for p in enumerate_young(m, n)? {
        *hist.entry(p.area()).or_insert(0) += 1;
    }
    Ok(hist)
}

#[derive(Serialize, Deserialize)]
struct PathRepr {
    n: usize,
    x: f64,
    y: f64,
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl Serialize for DirectedPath<f64> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PathRepr {
            n: self.blocks(),
            x: self.x,
            y: self.y,
            xs: self.xs.clone(),
            ys: self.ys.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DirectedPath<f64> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PathRepr::deserialize(deserializer)?;
        let path = DirectedPath::new(repr.x, repr.y, repr.xs, repr.ys)
            .map_err(|e| D::Error::custom(e.to_string()))?;
        if path.blocks() != repr.n {
            return Err(D::Error::custom(format!(
                "block count {} does not match coordinates ({} blocks)",
                repr.n,
                path.blocks()
            )));
        }
        Ok(path)
    }
}

impl Serialize for PointList<f64> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.0.iter().map(|&(a, b)| [a, b]).collect();
        pairs.serialize(serializer)
    }
}
