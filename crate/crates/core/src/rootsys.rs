//! Root data for the equal-rank, real-rank-one simple Lie algebras.
//!
//! Roots and weights live in an orthogonal "ε-coordinate" basis of `it*` and are
//! stored as exact rationals. The bilinear form is the coordinate dot product
//! rescaled so that the shortest root has squared length 2.
//!
//! | family     | complexification | coordinates | compact roots                  |
//! |------------|------------------|-------------|--------------------------------|
//! | `su(n,1)`  | `A_n`            | `n + 1`     | `e_i - e_j`, `i, j ≤ n`        |
//! | `so(2n,1)` | `B_n`            | `n`         | `±e_i ± e_j`                   |
//! | `sp(n,1)`  | `C_{n+1}`        | `n + 1`     | `C_n` on the first `n`, `±2e_{n+1}` |
//!
//! For `su(n,1)` the torus is the sum-zero hyperplane; weights are only defined
//! modulo `(1, …, 1)`, which every root is orthogonal to.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Exact rational scalar used throughout the combinatorial layers.
pub type Q = Rational64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "su")]
    Su,
    #[serde(rename = "so")]
    So,
    #[serde(rename = "sp")]
    Sp,
}

/// One of `su(n,1)`, `so(2n,1)`, `sp(n,1)`.
///
/// For `so` the stored `n` is the rank, so `so(4,1)` has `n = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    family: Family,
    n: u32,
}

impl GroupDescriptor {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedGroup(format!("{family:?} with n = 0")));
        }
        Ok(Self { family, n })
    }

    /// `SL(2,ℝ)`, realized as `su(1,1)`.
    pub fn sl2r() -> Self {
        Self {
            family: Family::Su,
            n: 1,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of ε-coordinates.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::Su | Family::Sp => self.n as usize + 1,
            Family::So => self.n as usize,
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Su => write!(f, "su({},1)", self.n),
            Family::So => write!(f, "so({},1)", 2 * self.n),
            Family::Sp => write!(f, "sp({},1)", self.n),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_lowercase();
        if t == "sl2r" || t == "sl(2,r)" || t == "sl2" {
            return Ok(Self::sl2r());
        }
        let bad = || Error::UnsupportedGroup(s.to_string());
        let open = t.find('(').ok_or_else(bad)?;
        let (name, rest) = t.split_at(open);
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(",1)"))
            .ok_or_else(bad)?;
        let m: u32 = inner.parse().map_err(|_| bad())?;
        match name {
            "su" => Self::new(Family::Su, m),
            "sp" => Self::new(Family::Sp, m),
            "so" => {
                if m % 2 == 1 {
                    Err(Error::UnsupportedGroup(format!(
                        "{s}: so(2n+1,1) has unequal rank and no discrete series"
                    )))
                } else {
                    Self::new(Family::So, m / 2)
                }
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for GroupDescriptor {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupDescriptor {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A vector of `it*` in ε-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![Q::zero(); dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| Q::from_integer(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    /// Plain coordinate dot product (not rescaled).
    pub fn dot(&self, other: &Weight) -> Q {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: Q) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(q_to_f64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(|q| q.to_string()).collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<serde_json::Value> = Vec::deserialize(de)?;
        v.iter()
            .map(parse_rational_value)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(serde::de::Error::custom)
    }
}

/// Parses `"3/2"`, `"-1"`, or an integer JSON number as a rational.
pub fn parse_rational(s: &str) -> std::result::Result<Q, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n
                .trim()
                .parse()
                .map_err(|_| format!("bad rational {s:?}"))?;
            let d: i64 = d
                .trim()
                .parse()
                .map_err(|_| format!("bad rational {s:?}"))?;
            if d == 0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Q::new(n, d))
        }
        None => s
            .parse::<i64>()
            .map(Q::from_integer)
            .map_err(|_| format!("bad rational {s:?}")),
    }
}

pub(crate) fn parse_rational_value(v: &serde_json::Value) -> std::result::Result<Q, String> {
    match v {
        serde_json::Value::String(s) => parse_rational(s),
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(Q::from_integer)
            .ok_or_else(|| format!("non-integer number {n}; write rationals as \"p/q\"")),
        other => Err(format!("expected rational, got {other}")),
    }
}

pub fn q_to_f64(q: &Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootKind {
    Compact,
    Noncompact,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    pub coords: Weight,
    pub kind: RootKind,
}

impl Root {
    pub fn is_compact(&self) -> bool {
        self.kind == RootKind::Compact
    }
}

/// Compact or full Weyl group selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeylSubgroup {
    Full,
    Compact,
}

/// An element of a Weyl group acting on ε-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: Vec<Vec<Q>>,
    sign: i8,
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        let matrix = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { Q::one() } else { Q::zero() })
                    .collect()
            })
            .collect();
        Self { matrix, sign: 1 }
    }

    /// Orthogonal reflection in the hyperplane perpendicular to `alpha`.
    pub fn reflection(alpha: &Weight) -> Self {
        let n = alpha.dim();
        let norm = alpha.dot(alpha);
        let two = Q::from_integer(2);
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let delta = if i == j { Q::one() } else { Q::zero() };
                        delta - two * alpha.0[i] * alpha.0[j] / norm
                    })
                    .collect()
            })
            .collect();
        Self { matrix, sign: -1 }
    }

    pub fn matrix(&self) -> &[Vec<Q>] {
        &self.matrix
    }

    /// `det(w) = ±1`.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn apply(&self, v: &Weight) -> Weight {
        Weight(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&v.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.matrix.len();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .filter(|&k| {
                                !self.matrix[i][k].is_zero() && !other.matrix[k][j].is_zero()
                            })
                            .map(|k| self.matrix[i][k] * other.matrix[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        WeylElement {
            matrix,
            sign: self.sign * other.sign,
        }
    }
}

/// Determinant by exact Gaussian elimination.
pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
        }
    }
    det
}

/// Regular / singular classification of `μ + ρ_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightClass {
    Regular,
    /// Carries one noncompact root orthogonal to `μ + ρ_k`.
    Singular(Root),
}

/// Full root datum of an equal-rank real-rank-one group.
#[derive(Clone, Debug)]
pub struct RootSystem {
    descriptor: GroupDescriptor,
    roots: Vec<Root>,
    positive: Vec<bool>,
    simple: Vec<usize>,
    scale: Q,
    rho_g: Weight,
    rho_k: Weight,
    rho_p: Weight,
    cayley_root: usize,
    dim_p: usize,
    dim_n1: usize,
    dim_n2: usize,
    weyl_full: OnceLock<Vec<WeylElement>>,
    weyl_compact: OnceLock<Vec<WeylElement>>,
}

/// Builds the root datum of `desc`.
pub fn build_root_system(desc: GroupDescriptor) -> Result<RootSystem> {
    RootSystem::new(desc)
}

impl RootSystem {
    pub fn new(desc: GroupDescriptor) -> Result<Self> {
        if desc.n == 0 {
            return Err(Error::UnsupportedGroup(desc.to_string()));
        }
        let dim = desc.ambient_dim();
        let e = |i: usize| {
            let mut v = vec![0i64; dim];
            v[i] = 1;
            v
        };
        let comb = |i: usize, si: i64, j: usize, sj: i64| {
            let mut v = vec![0i64; dim];
            v[i] += si;
            v[j] += sj;
            v
        };
        let mut raw: Vec<(Vec<i64>, RootKind)> = Vec::new();
        match desc.family {
            Family::Su => {
                let n = desc.n as usize;
                for i in 0..=n {
                    for j in 0..=n {
                        if i != j {
                            let kind = if i < n && j < n {
                                RootKind::Compact
                            } else {
                                RootKind::Noncompact
                            };
                            raw.push((comb(i, 1, j, -1), kind));
                        }
                    }
                }
            }
            Family::So => {
                let n = desc.n as usize;
                for i in 0..n {
                    for j in i + 1..n {
                        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            raw.push((comb(i, si, j, sj), RootKind::Compact));
                        }
                    }
                    raw.push((e(i), RootKind::Noncompact));
                    raw.push((e(i).iter().map(|x| -x).collect(), RootKind::Noncompact));
                }
            }
            Family::Sp => {
                let n = desc.n as usize;
                for i in 0..=n {
                    for j in i + 1..=n {
                        let kind = if j < n {
                            RootKind::Compact
                        } else {
                            RootKind::Noncompact
                        };
                        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            raw.push((comb(i, si, j, sj), kind));
                        }
                    }
                    let two: Vec<i64> = e(i).iter().map(|x| 2 * x).collect();
                    raw.push((two.clone(), RootKind::Compact));
                    raw.push((two.iter().map(|x| -x).collect(), RootKind::Compact));
                }
            }
        }
        let roots: Vec<Root> = raw
            .into_iter()
            .map(|(v, kind)| Root {
                coords: Weight::from_ints(&v),
                kind,
            })
            .collect();

        // Positive system cut out by the generic vector (dim, dim-1, …, 1).
        let generic = Weight::from_ints(&(0..dim).map(|i| (dim - i) as i64).collect::<Vec<_>>());
        let positive: Vec<bool> = roots
            .iter()
            .map(|r| r.coords.dot(&generic) > Q::zero())
            .collect();

        let min_len = roots
            .iter()
            .map(|r| r.coords.dot(&r.coords))
            .min()
            .expect("nonempty root set");
        let scale = Q::from_integer(2) / min_len;

        let half = Q::new(1, 2);
        let sum_of = |pred: &dyn Fn(&Root) -> bool| {
            let mut acc = Weight::zero(dim);
            for (r, &p) in roots.iter().zip(&positive) {
                if p && pred(r) {
                    acc = &acc + &r.coords;
                }
            }
            acc.scale(half)
        };
        let rho_g = sum_of(&|_| true);
        let rho_k = sum_of(&|r| r.is_compact());
        let rho_p = sum_of(&|r| !r.is_compact());

        let pos_idx: Vec<usize> = (0..roots.len()).filter(|&i| positive[i]).collect();
        let simple: Vec<usize> = pos_idx
            .iter()
            .copied()
            .filter(|&i| {
                !pos_idx.iter().any(|&a| {
                    pos_idx
                        .iter()
                        .any(|&b| (&roots[a].coords + &roots[b].coords) == roots[i].coords)
                })
            })
            .collect();
        let noncompact_simple: Vec<usize> = simple
            .iter()
            .copied()
            .filter(|&i| !roots[i].is_compact())
            .collect();
        debug_assert_eq!(noncompact_simple.len(), 1);
        let cayley_root = noncompact_simple[0];

        let dim_p = roots.iter().filter(|r| !r.is_compact()).count();

        // Restricted roots on the positive side of the Cayley root: ⟨β, β₀^∨⟩ = 1 gives λ,
        // ⟨β, β₀^∨⟩ = 2 gives 2λ. For so(2n,1) the nilradical is abelian and the
        // pairings are all even, so the single restricted root is λ.
        let b0 = &roots[cayley_root].coords;
        let b0n = b0.dot(b0);
        let pairing = |r: &Root| Q::from_integer(2) * r.coords.dot(b0) / b0n;
        let count = |v: i64| {
            roots
                .iter()
                .filter(|r| pairing(r) == Q::from_integer(v))
                .count()
        };
        let (dim_n1, dim_n2) = match desc.family {
            Family::So => (count(2), 0),
            Family::Su | Family::Sp => (count(1), count(2)),
        };

        Ok(Self {
            descriptor: desc,
            roots,
            positive,
            simple,
            scale,
            rho_g,
            rho_k,
            rho_p,
            cayley_root,
            dim_p,
            dim_n1,
            dim_n2,
            weyl_full: OnceLock::new(),
            weyl_compact: OnceLock::new(),
        })
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    pub fn ambient_dim(&self) -> usize {
        self.descriptor.ambient_dim()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        self.positive[idx]
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots
            .iter()
            .zip(&self.positive)
            .filter(|(_, &p)| p)
            .map(|(r, _)| r)
    }

    pub fn positive_compact(&self) -> impl Iterator<Item = &Root> {
        self.positive_roots().filter(|r| r.is_compact())
    }

    pub fn positive_noncompact(&self) -> impl Iterator<Item = &Root> {
        self.positive_roots().filter(|r| !r.is_compact())
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = &Root> {
        self.simple.iter().map(|&i| &self.roots[i])
    }

    /// The noncompact simple root used for the Cayley transform.
    pub fn cayley_root(&self) -> &Root {
        &self.roots[self.cayley_root]
    }

    pub fn rho_g(&self) -> &Weight {
        &self.rho_g
    }

    pub fn rho_k(&self) -> &Weight {
        &self.rho_k
    }

    pub fn rho_p(&self) -> &Weight {
        &self.rho_p
    }

    pub fn dim_p(&self) -> usize {
        self.dim_p
    }

    pub fn dim_n1(&self) -> usize {
        self.dim_n1
    }

    pub fn dim_n2(&self) -> usize {
        self.dim_n2
    }

    /// `(-1)^{dim p / 2}`.
    pub fn parity_sign(&self) -> f64 {
        if (self.dim_p / 2).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    /// Factor converting coordinate dot products to the normalized form.
    pub fn form_scale(&self) -> Q {
        self.scale
    }

    /// For `su(n,1)`, the direction `(1, …, 1)` that torus angles must be orthogonal to.
    pub fn trace_direction(&self) -> Option<Weight> {
        (self.descriptor.family == Family::Su).then(|| Weight(vec![Q::one(); self.ambient_dim()]))
    }

    fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: w.dim(),
            });
        }
        Ok(())
    }

    /// The invariant form, normalized so the short roots have `⟨α, α⟩ = 2`.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Result<Q> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self.scale * a.dot(b))
    }

    /// `2⟨μ, α⟩ / ⟨α, α⟩`.
    pub fn coroot_pairing(&self, mu: &Weight, alpha: &Weight) -> Q {
        Q::from_integer(2) * mu.dot(alpha) / alpha.dot(alpha)
    }

    /// Membership in the weight lattice `Λ_t*`.
    pub fn is_integral(&self, mu: &Weight) -> bool {
        self.roots
            .iter()
            .all(|r| self.coroot_pairing(mu, &r.coords).is_integer())
    }

    /// `⟨λ, α⟩ > 0` for every compact positive root.
    pub fn is_compact_dominant(&self, lambda: &Weight) -> bool {
        self.positive_compact()
            .all(|r| lambda.dot(&r.coords) > Q::zero())
    }

    /// `λ` pairs nontrivially with every root.
    pub fn is_regular(&self, lambda: &Weight) -> bool {
        self.roots.iter().all(|r| !lambda.dot(&r.coords).is_zero())
    }

    /// Classifies `μ` through `λ = μ + ρ_k` against the fixed positive system.
    pub fn classify_weight(&self, mu: &Weight) -> Result<WeightClass> {
        self.check_dim(mu)?;
        let lambda = mu + &self.rho_k;
        if !self.is_compact_dominant(&lambda) {
            return Err(Error::NotCompactDominant(lambda.to_string()));
        }
        if let Some(r) = self
            .positive_noncompact()
            .find(|r| lambda.dot(&r.coords).is_zero())
        {
            return Ok(WeightClass::Singular(r.clone()));
        }
        if self
            .positive_roots()
            .all(|r| lambda.dot(&r.coords) > Q::zero())
        {
            Ok(WeightClass::Regular)
        } else {
            Err(Error::OutsideChamber(lambda.to_string()))
        }
    }

    /// Dimensions of the half-spin modules `S_p^±`.
    pub fn spinor_dims(&self) -> (u64, u64) {
        debug_assert!(self.dim_p.is_multiple_of(2));
        let d = 1u64 << (self.dim_p / 2 - 1);
        (d, d)
    }

    /// Enumerates a Weyl group by closure under its generating reflections.
    /// The full group is generated by the simple reflections, the compact one by
    /// reflections in compact roots. Both are computed once and cached.
    pub fn weyl_group(&self, sub: WeylSubgroup) -> &[WeylElement] {
        match sub {
            WeylSubgroup::Full => self.weyl_full.get_or_init(|| {
                let gens: Vec<_> = self
                    .simple_roots()
                    .map(|r| WeylElement::reflection(&r.coords))
                    .collect();
                weyl_closure(self.ambient_dim(), &gens)
            }),
            WeylSubgroup::Compact => self.weyl_compact.get_or_init(|| {
                let gens: Vec<_> = self
                    .positive_compact()
                    .map(|r| WeylElement::reflection(&r.coords))
                    .collect();
                weyl_closure(self.ambient_dim(), &gens)
            }),
        }
    }

    /// Weyl group generated by reflections in the given roots.
    pub fn reflection_group(&self, roots: &[Weight]) -> Vec<WeylElement> {
        let gens: Vec<WeylElement> = roots.iter().map(WeylElement::reflection).collect();
        weyl_closure(self.ambient_dim(), &gens)
    }

    /// Index of `w·β` in the root list, if `w` maps `β` to a root.
    pub fn root_index(&self, v: &Weight) -> Option<usize> {
        self.roots.iter().position(|r| &r.coords == v)
    }
}

/// Breadth-first closure of `gens` starting from the identity.
pub fn weyl_closure(dim: usize, gens: &[WeylElement]) -> Vec<WeylElement> {
    let id = WeylElement::identity(dim);
    let mut seen: HashMap<Vec<Vec<Q>>, usize> = HashMap::new();
    let mut out = vec![id.clone()];
    seen.insert(id.matrix.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let w = g.compose(&out[i]);
            if !seen.contains_key(&w.matrix) {
                seen.insert(w.matrix.clone(), out.len());
                queue.push_back(out.len());
                out.push(w);
            }
        }
    }
    out
}

/// Absolute value helper kept here so callers avoid importing `Signed`.
pub fn q_abs(q: &Q) -> Q {
    q.abs()
}

impl Mul<&Weight> for Q {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scale(self)
    }
}
