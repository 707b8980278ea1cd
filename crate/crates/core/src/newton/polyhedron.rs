use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::exponent::ExponentVector;
use crate::algebra::polynomial::Polynomial;
use crate::algebra::rational::Rational;
use crate::algebra::weight::{PrimitiveWeight, Weight};
use crate::error::{Error, Result};

/// Supporting hyperplane `<normal, nu> = rhs` of a facet of the Newton
/// polyhedron; `normal >= 0` is primitive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub rhs: i64,
    /// Indices into the minimal support lying on the facet.
    pub points: Vec<usize>,
}

impl Facet {
    pub fn value(&self, e: &ExponentVector) -> i64 {
        self.normal
            .iter()
            .enumerate()
            .map(|(i, &n)| n * e.get(i) as i64)
            .sum()
    }
}

/// A compact face of the Newton polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// All support points lying on the face.
    pub points: Vec<ExponentVector>,
    pub vertices: Vec<ExponentVector>,
    /// Strictly positive weight with `<alpha, nu> = 1` exactly on the face.
    pub weight: Weight,
    pub dimension: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceJson {
    pub vertices: Vec<Vec<u32>>,
    pub weight: PrimitiveWeight,
    pub dimension: usize,
}

impl Face {
    pub fn to_json(&self, nvars: usize) -> FaceJson {
        FaceJson {
            vertices: self.vertices.iter().map(|v| v.to_vec(nvars)).collect(),
            weight: self.weight.primitive(),
            dimension: self.dimension,
        }
    }

    /// Restriction `f_Delta` of `f` to this face.
    pub fn restrict(&self, f: &Polynomial) -> Polynomial {
        f.filter_terms(|e, _| self.points.contains(e))
    }
}

#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    pub nvars: usize,
    /// Support points not dominated by another support point.
    pub minimal_support: Vec<ExponentVector>,
    pub facets: Vec<Facet>,
    /// Compact faces of every dimension, ordered by dimension then points.
    pub compact_faces: Vec<Face>,
}

/// Where the all-ones point sits relative to the Newton polyhedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "position", rename_all = "kebab-case")]
pub enum OnesPosition {
    /// Outside the polyhedron: some facet inequality fails.
    Below,
    /// In the interior: the singularity is not purely elliptic.
    Above,
    /// In the relative interior of a non-compact face.
    NonCompactFace,
    /// In the relative interior of a compact face of the given dimension.
    CompactFace { dimension: usize },
}

#[derive(Clone, Debug)]
pub struct SimpleK3Report {
    pub is_simple_k3: bool,
    pub position: OnesPosition,
    pub face: Option<Face>,
    pub weight: Option<Weight>,
}

pub fn newton_polyhedron(f: &Polynomial) -> Result<NewtonPolyhedron> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(NewtonPolyhedron::from_support(&f.support(), f.nvars()))
}

impl NewtonPolyhedron {
    pub fn from_support(support: &[ExponentVector], nvars: usize) -> Self {
        let minimal = minimal_points(support);
        let facets = enumerate_facets(&minimal, nvars);
        let compact_faces = compact_faces(&minimal, &facets, nvars);
        NewtonPolyhedron {
            nvars,
            minimal_support: minimal,
            facets,
            compact_faces,
        }
    }

    pub fn faces_of_dimension(&self, d: usize) -> impl Iterator<Item = &Face> {
        self.compact_faces.iter().filter(move |f| f.dimension == d)
    }

    /// Locates `(1, ..., 1)`.
    pub fn locate_ones(&self) -> (OnesPosition, Option<Face>) {
        let ones = vec![1i64; self.nvars];
        let mut tight = Vec::new();
        for (i, fc) in self.facets.iter().enumerate() {
            let v: i64 = fc.normal.iter().zip(&ones).map(|(a, b)| a * b).sum();
            if v < fc.rhs {
                return (OnesPosition::Below, None);
            }
            if v == fc.rhs {
                tight.push(i);
            }
        }
        if tight.is_empty() {
            return (OnesPosition::Above, None);
        }
        let mut normal_sum = vec![0i64; self.nvars];
        let mut pts: Option<BTreeSet<usize>> = None;
        for &i in &tight {
            for (s, n) in normal_sum.iter_mut().zip(&self.facets[i].normal) {
                *s += n;
            }
            let p: BTreeSet<usize> = self.facets[i].points.iter().copied().collect();
            pts = Some(match pts {
                None => p,
                Some(q) => q.intersection(&p).copied().collect(),
            });
        }
        if normal_sum.contains(&0) {
            return (OnesPosition::NonCompactFace, None);
        }
        let pts: Vec<ExponentVector> = pts
            .unwrap_or_default()
            .into_iter()
            .map(|i| self.minimal_support[i])
            .collect();
        let face = self
            .compact_faces
            .iter()
            .find(|f| f.points == pts)
            .cloned()
            .expect("tight compact face present in the face list");
        (
            OnesPosition::CompactFace {
                dimension: face.dimension,
            },
            Some(face),
        )
    }
}

/// Checks whether `f` defines a simple K3 singularity: the all-ones point
/// lies in the relative interior of a compact three-dimensional face.
pub fn simple_k3_check(f: &Polynomial) -> Result<SimpleK3Report> {
    if f.nvars() != 4 {
        return Err(Error::InvalidInput(
            "simple K3 test needs four variables".into(),
        ));
    }
    if f.terms().any(|(e, _)| e.total_degree() <= 1) {
        return Err(Error::InvalidInput(
            "polynomial must vanish to order two at the origin".into(),
        ));
    }
    let np = newton_polyhedron(f)?;
    let (position, face) = np.locate_ones();
    let is_simple = matches!(position, OnesPosition::CompactFace { dimension: 3 });
    let weight = face.as_ref().map(|f| f.weight.clone());
    if is_simple {
        debug_assert!(weight.as_ref().unwrap().sum().is_one());
    }
    Ok(SimpleK3Report {
        is_simple_k3: is_simple,
        position,
        face,
        weight,
    })
}

pub fn minimal_points(support: &[ExponentVector]) -> Vec<ExponentVector> {
    let set: BTreeSet<ExponentVector> = support.iter().copied().collect();
    set.iter()
        .filter(|e| !set.iter().any(|o| o != *e && o.divides(e)))
        .copied()
        .collect()
}

fn enumerate_facets(pts: &[ExponentVector], d: usize) -> Vec<Facet> {
    let mut found: BTreeMap<(Vec<i64>, i64), ()> = BTreeMap::new();
    let coords: Vec<Vec<i64>> = pts
        .iter()
        .map(|e| (0..d).map(|i| e.get(i) as i64).collect())
        .collect();
    for k in 1..=d.min(pts.len()) {
        let ndirs = d - k;
        for subset in combinations(pts.len(), k) {
            for dirs in combinations(d, ndirs) {
                let base = &coords[subset[0]];
                let mut vecs: Vec<Vec<i64>> = subset[1..]
                    .iter()
                    .map(|&j| coords[j].iter().zip(base).map(|(a, b)| a - b).collect())
                    .collect();
                for &dd in &dirs {
                    let mut v = vec![0; d];
                    v[dd] = 1;
                    vecs.push(v);
                }
                let Some(n) = normal_vector(&vecs, d) else {
                    continue;
                };
                let n = if n.iter().all(|&v| v <= 0) {
                    n.iter().map(|v| -v).collect()
                } else {
                    n
                };
                if n.iter().any(|&v| v < 0) {
                    continue;
                }
                let c: i64 = n.iter().zip(base).map(|(a, b)| a * b).sum();
                if coords
                    .iter()
                    .all(|p| n.iter().zip(p).map(|(a, b)| a * b).sum::<i64>() >= c)
                {
                    found.insert((n, c), ());
                }
            }
        }
    }
    found
        .into_keys()
        .map(|(normal, rhs)| {
            let points = coords
                .iter()
                .enumerate()
                .filter(|(_, p)| {
                    normal.iter().zip(p.iter()).map(|(a, b)| a * b).sum::<i64>() == rhs
                })
                .map(|(i, _)| i)
                .collect();
            Facet {
                normal,
                rhs,
                points,
            }
        })
        .collect()
}

/// Primitive generator of the orthogonal complement of `d - 1` vectors in
/// `Z^d`, or `None` when they are dependent.
fn normal_vector(vecs: &[Vec<i64>], d: usize) -> Option<Vec<i64>> {
    debug_assert_eq!(vecs.len(), d - 1);
    let mut n = Vec::with_capacity(d);
    for j in 0..d {
        let minor: Vec<Vec<i128>> = vecs
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, &x)| x as i128)
                    .collect()
            })
            .collect();
        let det = det_i128(&minor);
        n.push(if j % 2 == 0 { det } else { -det });
    }
    let g = n.iter().fold(0i128, |g, &v| g.gcd(&v));
    if g == 0 {
        return None;
    }
    Some(n.iter().map(|&v| (v / g) as i64).collect())
}

fn det_i128(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        n => {
            let mut acc = 0i128;
            for c in 0..n {
                if m[0][c] == 0 {
                    continue;
                }
                let sub: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != c)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                acc += s * m[0][c] * det_i128(&sub);
            }
            acc
        }
    }
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Affine dimension of a point set.
pub fn affine_dimension(pts: &[ExponentVector], d: usize) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = pts[1..]
        .iter()
        .map(|p| {
            (0..d)
                .map(|i| {
                    Rational::from_integer(BigInt::from(p.get(i) as i64 - pts[0].get(i) as i64))
                })
                .collect()
        })
        .collect();
    rank(rows)
}

pub(crate) fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &pivot;
            for j in c..ncols {
                let v = &f * &rows[r][j];
                rows[i][j] -= v;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

fn compact_faces(pts: &[ExponentVector], facets: &[Facet], d: usize) -> Vec<Face> {
    let mut sets: BTreeSet<Vec<usize>> = facets
        .iter()
        .map(|f| f.points.clone())
        .filter(|p| !p.is_empty())
        .collect();
    loop {
        let mut added = Vec::new();
        for s in &sets {
            for f in facets {
                let inter: Vec<usize> =
                    s.iter().copied().filter(|i| f.points.contains(i)).collect();
                if !inter.is_empty() && !sets.contains(&inter) {
                    added.push(inter);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        sets.extend(added);
    }
    let mut faces = Vec::new();
    let mut vertex_set = BTreeSet::new();
    let mut candidates = Vec::new();
    for s in &sets {
        let containing: Vec<&Facet> = facets
            .iter()
            .filter(|f| s.iter().all(|i| f.points.contains(i)))
            .collect();
        let mut nsum = vec![Rational::zero(); d];
        let mut csum = Rational::zero();
        for f in &containing {
            // scale so a positive right-hand side becomes one
            let scale = if f.rhs > 0 {
                Rational::new(BigInt::one(), BigInt::from(f.rhs))
            } else {
                Rational::one()
            };
            for (a, &n) in nsum.iter_mut().zip(&f.normal) {
                *a += &scale * Rational::from_integer(BigInt::from(n));
            }
            if f.rhs > 0 {
                csum += Rational::one();
            }
        }
        if nsum.iter().any(|a| !a.is_positive()) || !csum.is_positive() {
            continue;
        }
        let weight = Weight::new(nsum.iter().map(|a| a / &csum).collect()).expect("positive");
        let points: Vec<ExponentVector> = s.iter().map(|&i| pts[i]).collect();
        let dim = affine_dimension(&points, d);
        if dim == 0 {
            vertex_set.insert(points[0]);
        }
        candidates.push((dim, points, weight));
    }
    for (dim, points, weight) in candidates {
        let vertices = points
            .iter()
            .copied()
            .filter(|p| vertex_set.contains(p))
            .collect();
        faces.push(Face {
            points,
            vertices,
            weight,
            dimension: dim,
        });
    }
    faces.sort_by(|a, b| {
        a.dimension
            .cmp(&b.dimension)
            .then_with(|| a.points.cmp(&b.points))
    });
    faces
}

/// `true` when every positive-weight minimum of `support` is attained on a
/// single compact face (exhaustive re-check of a face weight).
pub fn verify_face_weight(face: &Face, support: &[ExponentVector]) -> bool {
    use crate::algebra::polynomial::weighted_degree;
    let one = Rational::one();
    face.points
        .iter()
        .all(|p| weighted_degree(p, &face.weight) == one)
        && support
            .iter()
            .all(|p| weighted_degree(p, &face.weight) >= one)
        && support
            .iter()
            .filter(|p| weighted_degree(p, &face.weight) == one)
            .all(|p| face.points.contains(p) || !minimal_points(support).contains(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(4, s).unwrap()
    }

    fn w(v: &[(i64, i64)]) -> Weight {
        Weight::from_ratios(v).unwrap()
    }

    #[test]
    fn brieskorn_has_one_three_face() {
        let np = newton_polyhedron(&p("x^2 + y^3 + z^9 + w^18")).unwrap();
        let threes: Vec<_> = np.faces_of_dimension(3).collect();
        assert_eq!(threes.len(), 1);
        assert_eq!(threes[0].weight, w(&[(1, 2), (1, 3), (1, 9), (1, 18)]));
        assert_eq!(threes[0].vertices.len(), 4);
        // 4 vertices, 6 edges, 4 triangles, 1 tetrahedron
        assert_eq!(np.compact_faces.len(), 15);
    }

    #[test]
    fn single_monomial_has_only_a_vertex() {
        let np = newton_polyhedron(&p("x^2")).unwrap();
        assert_eq!(np.compact_faces.len(), 1);
        assert_eq!(np.compact_faces[0].dimension, 0);
    }

    #[test]
    fn entry_eleven_weight() {
        let np = newton_polyhedron(&p("x^2 + y^3 + z^10 + w^15")).unwrap();
        let threes: Vec<_> = np.faces_of_dimension(3).collect();
        assert_eq!(threes.len(), 1);
        assert_eq!(threes[0].weight, w(&[(1, 2), (1, 3), (1, 10), (1, 15)]));
    }

    #[test]
    fn simple_k3_examples() {
        let r = simple_k3_check(&p("x^2 + y^3 + z^12 + w^12")).unwrap();
        assert!(r.is_simple_k3);
        assert_eq!(r.weight.unwrap(), w(&[(1, 2), (1, 3), (1, 12), (1, 12)]));
        let r = simple_k3_check(&p("x^4 + y^4 + z^4 + w^4")).unwrap();
        assert!(r.is_simple_k3);
        assert_eq!(r.weight.unwrap().sum(), rat(1, 1));
        let r = simple_k3_check(&p("x^2 + y^2 + z^2 + w^2")).unwrap();
        assert!(!r.is_simple_k3);
        assert_eq!(r.position, OnesPosition::Above);
        let r = simple_k3_check(&p("x^2 + y^3 + z^7 + w^43")).unwrap();
        assert_eq!(r.position, OnesPosition::Below);
    }

    #[test]
    fn non_brieskorn_entry() {
        let r = simple_k3_check(&p("x^2 + y^3 + y*w^9 + z^10*w + z^2*w^11")).unwrap();
        assert!(r.is_simple_k3);
        assert_eq!(r.weight.unwrap(), w(&[(1, 2), (1, 3), (5, 54), (2, 27)]));
    }

    #[test]
    fn coordinate_facets_keep_lower_faces_compact() {
        let np = newton_polyhedron(&p("x^2 + y^2")).unwrap();
        let edges: Vec<_> = np.faces_of_dimension(1).collect();
        assert_eq!(edges.len(), 1);
        assert!(verify_face_weight(edges[0], &np.minimal_support));
    }
}
