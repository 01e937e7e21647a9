//! Discrete-series characters on the compact and noncompact Cartan subgroups.
//!
//! A torus element is written `t = exp(2πi q)` with `q` in *turns*, so that
//! `e^β(t) = exp(2πi ⟨β, q⟩)` where `⟨·,·⟩` is the plain coordinate dot
//! product. Rational angles are reduced modulo 1 exactly before the single
//! conversion to floating point.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rootsys::{q_to_f64, Root, RootSystem, Weight, WeightClass, WeylSubgroup, Q};
use crate::{Error, Result};

const REAL_TOL: f64 = 1e-10;

/// Angles of a torus element, in turns.
#[derive(Clone, Debug, PartialEq)]
pub enum Angles {
    Exact(Vec<Q>),
    Real(Vec<f64>),
}

/// Phase `⟨β, q⟩` in turns.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Phase {
    Exact(Q),
    Real(f64),
}

impl Phase {
    /// Distance from the phase to the nearest integer is zero.
    pub fn is_integral(self) -> bool {
        match self {
            Phase::Exact(q) => q.is_integer(),
            Phase::Real(x) => (x - x.round()).abs() < REAL_TOL,
        }
    }

    /// `exp(2πi · phase)`.
    pub fn cis(self) -> Complex64 {
        match self {
            Phase::Exact(q) => cis_turns(q),
            Phase::Real(x) => Complex64::from_polar(1.0, 2.0 * PI * (x - x.floor())),
        }
    }
}

/// `exp(2πi x)` with exact values at quarter turns.
pub fn cis_turns(x: Q) -> Complex64 {
    let f = x - x.floor();
    match (*f.numer(), *f.denom()) {
        (0, _) => Complex64::new(1.0, 0.0),
        (1, 4) => Complex64::new(0.0, 1.0),
        (1, 2) => Complex64::new(-1.0, 0.0),
        (3, 4) => Complex64::new(0.0, -1.0),
        _ => Complex64::from_polar(1.0, 2.0 * PI * q_to_f64(&f)),
    }
}

/// An element `exp(2πi q)` of the compact Cartan subgroup `T`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusElement {
    angles: Angles,
}

impl TorusElement {
    pub fn new(angles: Vec<Q>) -> Self {
        TorusElement {
            angles: Angles::Exact(angles),
        }
    }

    /// Irrational angles, e.g. for elliptic elements of `SL(2, ℤ)` with `n > 1`.
    pub fn from_real(angles: Vec<f64>) -> Self {
        TorusElement {
            angles: Angles::Real(angles),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(vec![Q::zero(); dim])
    }

    pub fn angles(&self) -> &Angles {
        &self.angles
    }

    pub fn dim(&self) -> usize {
        match &self.angles {
            Angles::Exact(v) => v.len(),
            Angles::Real(v) => v.len(),
        }
    }

    pub fn exact_angles(&self) -> Option<&[Q]> {
        match &self.angles {
            Angles::Exact(v) => Some(v),
            Angles::Real(_) => None,
        }
    }

    pub fn real_angles(&self) -> Vec<f64> {
        match &self.angles {
            Angles::Exact(v) => v.iter().map(q_to_f64).collect(),
            Angles::Real(v) => v.clone(),
        }
    }

    pub fn inverse(&self) -> Self {
        match &self.angles {
            Angles::Exact(v) => Self::new(v.iter().map(|x| -x).collect()),
            Angles::Real(v) => Self::from_real(v.iter().map(|x| -x).collect()),
        }
    }

    /// Componentwise product `self · other`.
    pub fn mul(&self, other: &TorusElement) -> Self {
        match (&self.angles, &other.angles) {
            (Angles::Exact(a), Angles::Exact(b)) => {
                Self::new(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => Self::from_real(
                self.real_angles()
                    .iter()
                    .zip(other.real_angles())
                    .map(|(x, y)| x + y)
                    .collect(),
            ),
        }
    }

    pub fn phase(&self, w: &Weight) -> Phase {
        match &self.angles {
            Angles::Exact(v) => Phase::Exact(v.iter().zip(w.coords()).map(|(a, b)| a * b).sum()),
            Angles::Real(v) => {
                Phase::Real(v.iter().zip(w.coords()).map(|(a, b)| a * q_to_f64(b)).sum())
            }
        }
    }

    /// `e^w(t)`.
    pub fn eval(&self, w: &Weight) -> Complex64 {
        self.phase(w).cis()
    }

    /// Checks the coordinate count and, for `su(n,1)`, that the angles sum to zero.
    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        if self.dim() != rs.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: rs.ambient_dim(),
                got: self.dim(),
            });
        }
        if let Some(tr) = rs.trace_direction() {
            let ok = match self.phase(&tr) {
                Phase::Exact(q) => q.is_zero(),
                Phase::Real(x) => x.abs() < REAL_TOL,
            };
            if !ok {
                return Err(Error::InvalidTorusElement(format!(
                    "angles of a {} torus element must sum to zero",
                    rs.descriptor()
                )));
            }
        }
        Ok(())
    }

    /// Roots `β` with `e^β(t) = 1`.
    pub fn centralizer_roots<'a>(&self, rs: &'a RootSystem) -> Vec<&'a Root> {
        rs.roots()
            .iter()
            .filter(|r| self.phase(&r.coords).is_integral())
            .collect()
    }

    pub fn is_regular(&self, rs: &RootSystem) -> bool {
        rs.roots()
            .iter()
            .all(|r| !self.phase(&r.coords).is_integral())
    }

    pub fn is_central(&self, rs: &RootSystem) -> bool {
        rs.roots()
            .iter()
            .all(|r| self.phase(&r.coords).is_integral())
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.angles {
            Angles::Exact(v) => write!(f, "{}", Weight(v.clone())),
            Angles::Real(v) => write!(f, "{v:?}"),
        }
    }
}

impl Serialize for TorusElement {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match &self.angles {
            Angles::Exact(v) => Weight(v.clone()).serialize(ser),
            Angles::Real(v) => v.serialize(ser),
        }
    }
}

/// Accepts `"p/q"` strings and integers (exact) or floats (real).
impl<'de> Deserialize<'de> for TorusElement {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<serde_json::Value> = Vec::deserialize(de)?;
        let exact: std::result::Result<Vec<Q>, String> =
            v.iter().map(crate::rootsys::parse_rational_value).collect();
        if let Ok(q) = exact {
            return Ok(TorusElement::new(q));
        }
        v.iter()
            .map(|x| match x {
                serde_json::Value::Number(n) => n.as_f64().ok_or_else(|| format!("bad angle {n}")),
                serde_json::Value::String(s) => {
                    crate::rootsys::parse_rational(s).map(|q| q_to_f64(&q))
                }
                other => Err(format!("expected angle, got {other}")),
            })
            .collect::<std::result::Result<Vec<f64>, String>>()
            .map(TorusElement::from_real)
            .map_err(serde::de::Error::custom)
    }
}

/// Which half of the noncompact Cartan an element lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chamber {
    HPlus,
    HMinus,
    /// `a = 1`; treated as the limit from `H⁺`.
    AEqualsOne,
}

impl Chamber {
    pub fn of(log_a: f64) -> Self {
        if log_a > 0.0 {
            Chamber::HPlus
        } else if log_a < 0.0 {
            Chamber::HMinus
        } else {
            Chamber::AEqualsOne
        }
    }
}

/// An element `h = m · a_t` of the noncompact Cartan `H = H_K A`.
///
/// `m` is a torus element with `e^{β₀}(m) = 1` for the Cayley root `β₀`, and `a_t` is
/// normalized so that `e^{β₀}(𝐜(a_t)) = e^{2t}`; for `SL(2, ℝ)` this is
/// `diag(e^t, e^{-t})`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NoncompactCartanElement {
    pub compact_part: TorusElement,
    pub log_a: f64,
    pub chamber: Chamber,
}

impl NoncompactCartanElement {
    pub fn new(compact_part: TorusElement, log_a: f64) -> Self {
        NoncompactCartanElement {
            compact_part,
            log_a,
            chamber: Chamber::of(log_a),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(TorusElement::identity(dim), 0.0)
    }

    /// Checks dimension, `e^{β₀}(m) = 1`, and the chamber tag.
    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        self.compact_part.validate(rs)?;
        let b0 = &rs.cayley_root().coords;
        if !self.compact_part.phase(b0).is_integral() {
            return Err(Error::InvalidTorusElement(format!(
                "compact part {} does not centralize the split torus",
                self.compact_part
            )));
        }
        let consistent = match self.chamber {
            Chamber::HPlus => self.log_a >= 0.0,
            Chamber::HMinus => self.log_a <= 0.0,
            Chamber::AEqualsOne => self.log_a == 0.0,
        };
        if !consistent {
            return Err(Error::InvalidTorusElement(format!(
                "chamber {:?} inconsistent with log_a = {}",
                self.chamber, self.log_a
            )));
        }
        Ok(())
    }
}

/// Harish-Chandra parameter `λ = μ + ρ_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct HCParameter {
    pub lambda: Weight,
    pub regularity: WeightClass,
}

impl HCParameter {
    /// Requires `λ` dominant for the compact positive roots. `λ` need not lie
    /// in the fixed positive chamber; it is singular when some noncompact root
    /// is orthogonal to it.
    pub fn new(rs: &RootSystem, lambda: Weight) -> Result<Self> {
        if lambda.dim() != rs.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: rs.ambient_dim(),
                got: lambda.dim(),
            });
        }
        if !rs.is_compact_dominant(&lambda) {
            return Err(Error::NotCompactDominant(lambda.to_string()));
        }
        let regularity = match rs
            .positive_noncompact()
            .find(|r| lambda.dot(&r.coords).is_zero())
        {
            Some(r) => WeightClass::Singular(r.clone()),
            None => WeightClass::Regular,
        };
        Ok(HCParameter { lambda, regularity })
    }

    pub fn from_mu(rs: &RootSystem, mu: &Weight) -> Result<Self> {
        if mu.dim() != rs.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: rs.ambient_dim(),
                got: mu.dim(),
            });
        }
        Self::new(rs, mu + rs.rho_k())
    }

    pub fn is_regular(&self) -> bool {
        self.regularity == WeightClass::Regular
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CharacterValue {
    pub value: Complex64,
    pub is_regular_point: bool,
}

/// `Δ_T(t) = ∏_{β ∈ R⁺} (e^{β/2}(t) − e^{−β/2}(t))`.
pub fn weyl_denominator_t(rs: &RootSystem, t: &TorusElement) -> Complex64 {
    let half = Q::new(1, 2);
    rs.positive_roots()
        .map(|r| {
            let p = t.eval(&r.coords.scale(half));
            p - p.conj()
        })
        .product()
}

/// `Σ_{w ∈ W_k} det(w) e^{wλ}(t)`.
pub fn compact_numerator(rs: &RootSystem, lambda: &Weight, t: &TorusElement) -> Complex64 {
    rs.weyl_group(WeylSubgroup::Compact)
        .iter()
        .map(|w| w.sign() as f64 * t.eval(&w.apply(lambda)))
        .sum()
}

/// `Θ_λ(t)` on `T^reg`.
pub fn ds_character_treg(
    rs: &RootSystem,
    lam: &HCParameter,
    t: &TorusElement,
) -> Result<CharacterValue> {
    t.validate(rs)?;
    if !t.is_regular(rs) {
        return Err(Error::SingularTorusElement);
    }
    let value = compact_numerator(rs, &lam.lambda, t) / weyl_denominator_t(rs, t);
    Ok(CharacterValue {
        value,
        is_regular_point: true,
    })
}

/// The `d_ξ`-free elliptic orbital term
///
/// `(−1)^{dim p/2} Σ_{W_k/W_{k_ξ}} det(w) ∏_{R⁺(ξ)} ⟨wλ, α⟩ e^{wλ}(ξ) / (e^{ρ_g}(ξ) ∏_{R⁺∖R⁺(ξ)} (1 − e^{−β}(ξ)))`.
///
/// The coset sum is taken as `|W_{k_ξ}|⁻¹` times the sum over `W_k`.
pub fn elliptic_orbital_term(
    rs: &RootSystem,
    lam: &HCParameter,
    xi: &TorusElement,
) -> Result<Complex64> {
    xi.validate(rs)?;
    let (fixed, moving): (Vec<&Root>, Vec<&Root>) = rs
        .positive_roots()
        .partition(|r| xi.phase(&r.coords).is_integral());
    let compact_fixed: Vec<Weight> = xi
        .centralizer_roots(rs)
        .into_iter()
        .filter(|r| r.is_compact())
        .map(|r| r.coords.clone())
        .collect();
    let stab = rs.reflection_group(&compact_fixed).len() as f64;

    let one = Complex64::one();
    let denom = xi.eval(rs.rho_g())
        * moving
            .iter()
            .map(|b| one - xi.eval(&-&b.coords))
            .product::<Complex64>();
    let scale = rs.form_scale();
    let sum: Complex64 = rs
        .weyl_group(WeylSubgroup::Compact)
        .iter()
        .map(|w| {
            let wl = w.apply(&lam.lambda);
            let poly: f64 = fixed
                .iter()
                .map(|a| q_to_f64(&(scale * wl.dot(&a.coords))))
                .product();
            w.sign() as f64 * poly * xi.eval(&wl)
        })
        .sum();
    Ok(rs.parity_sign() * sum / (stab * denom))
}

/// Formal degree `d(λ) = ∏_{R⁺} |⟨λ, α⟩| / ((2π)^h 2^{(h−1)/2} ∏_{R⁺_k} ⟨ρ_k, α⟩)`, `h = dim p / 2`.
pub fn formal_degree(rs: &RootSystem, lam: &HCParameter) -> Result<f64> {
    if !lam.is_regular() {
        return Err(Error::SingularWeight(lam.lambda.to_string()));
    }
    let scale = rs.form_scale();
    let num: Q = rs
        .positive_roots()
        .map(|a| (scale * lam.lambda.dot(&a.coords)).abs())
        .product();
    let den: Q = rs
        .positive_compact()
        .map(|a| scale * rs.rho_k().dot(&a.coords))
        .product();
    let h = (rs.dim_p() / 2) as f64;
    let pre = (2.0 * PI).powf(h) * 2f64.powf((h - 1.0) / 2.0);
    Ok(q_to_f64(&(num / den)) / pre)
}

/// `c(μ, H^±)`, from the sign of the pairing of `μ` with the Cayley root.
/// `a = 1` uses the `H⁺` convention.
pub fn c_sign(rs: &RootSystem, mu: &Weight, chamber: Chamber) -> i8 {
    let x = mu.dot(&rs.cayley_root().coords);
    let s: i8 = if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    };
    match chamber {
        Chamber::HPlus | Chamber::AEqualsOne => -s,
        Chamber::HMinus => s,
    }
}

/// `Ω_λ(h) = Δ_H(h) Θ_λ(h)`.
///
/// The Cayley transform sends `a_t` to the one-parameter subgroup of the Cayley
/// root `β₀`, so a weight `ν` contributes `e^ν(m) · e^{−x t}` with
/// `x = ⟨ν, β₀^∨⟩`. Only the summands that stay bounded on the given chamber
/// appear (`x > 0` on `H⁺`, `x < 0` on `H⁻`); at `a = 1` this is the limit
/// from `H⁺`. With these conventions `Ω` is odd under `(m, t, H⁺) ↦ (m, −t, H⁻)`.
pub fn omega(rs: &RootSystem, lam: &HCParameter, h: &NoncompactCartanElement) -> Result<Complex64> {
    h.validate(rs)?;
    let b0 = &rs.cayley_root().coords;
    let t = h.log_a;
    Ok(rs
        .weyl_group(WeylSubgroup::Full)
        .iter()
        .filter_map(|w| {
            let wl = w.apply(&lam.lambda);
            let x = rs.coroot_pairing(&wl, b0);
            let keep = match h.chamber {
                Chamber::HPlus | Chamber::AEqualsOne => x.is_positive(),
                Chamber::HMinus => x.is_negative(),
            };
            keep.then(|| {
                let c = c_sign(rs, &wl, h.chamber) as f64;
                w.sign() as f64 * c * h.compact_part.eval(&wl) * (-q_to_f64(&x) * t).exp()
            })
        })
        .sum())
}

/// Conjugation-invariant normalization of `Ω` used in the cusp term:
/// `sign(t) · e^{−ρ_g}(m) · Ω_λ(h)`, with `sign(0) = +1`.
pub fn omega_invariant(
    rs: &RootSystem,
    lam: &HCParameter,
    h: &NoncompactCartanElement,
) -> Result<Complex64> {
    let s = if h.chamber == Chamber::HMinus {
        -1.0
    } else {
        1.0
    };
    Ok(s * h.compact_part.eval(&-rs.rho_g()) * omega(rs, lam, h)?)
}

/// Central character `ζ_λ(z) = e^{λ − ρ_g}(z)`.
pub fn central_character(
    rs: &RootSystem,
    lam: &HCParameter,
    z: &TorusElement,
) -> Result<Complex64> {
    z.validate(rs)?;
    if !z.is_central(rs) {
        return Err(Error::NotCentral(z.to_string()));
    }
    Ok(z.eval(&(&lam.lambda - rs.rho_g())))
}
