//! Assembly of the Lefschetz number from its geometric contributions.
//!
//! For regular `μ` the number is `central + elliptic + parabolic I + parabolic II`.
//! For singular `μ` the central and second parabolic terms vanish and a residue
//! term, supplied as a scalar, takes their place. Hyperbolic classes never
//! contribute, and [`GeometricData`] has no slot for them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::chars::{
    central_character, elliptic_orbital_term, formal_degree, omega_invariant, HCParameter,
    NoncompactCartanElement, TorusElement,
};
use crate::rootsys::{q_to_f64, RootSystem, Weight, WeightClass, WeylSubgroup};
use crate::{Error, Result};

/// A central element of `Ξ`, given as a torus element.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentralClass {
    pub z: TorusElement,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// A `Γ`-conjugacy class of elliptic elements of `Ξ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EllipticClass {
    pub rep: TorusElement,
    /// `vol(Γ_ξ \ G_ξ)`.
    pub vol_quotient: f64,
    pub d_xi: f64,
}

/// Coordinates `z_i` of `Z₀`, so that `⟨ν, Z₀⟩ = Σ ν_i z_i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Z0Pairing(pub Vec<Complex64>);

impl Z0Pairing {
    pub fn pair(&self, nu: &Weight) -> Complex64 {
        self.0
            .iter()
            .zip(nu.coords())
            .map(|(z, x)| z * q_to_f64(x))
            .sum()
    }
}

/// Data of one `(P, η)` entering the unipotent contribution.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParabolicIEntry {
    /// Whether `g_η ≅ su(n, 1)`.
    pub delta_flag: bool,
    pub c_eta_plus: f64,
    pub c_eta_minus: f64,
    #[serde(rename = "C_eta_plus")]
    pub big_c_eta_plus: f64,
    #[serde(rename = "C_eta_minus")]
    pub big_c_eta_minus: f64,
    pub dim_n_eta1: u32,
    pub eta_torus: TorusElement,
    #[serde(rename = "Rplus_xi0", default)]
    pub rplus_xi0: Vec<Weight>,
    #[serde(rename = "Z0_pairing")]
    pub z0_pairing: Z0Pairing,
}

/// Data of one `(P, η)` entering the weighted (cusp) contribution.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParabolicIIEntry {
    /// `vol(M_η / (Γ_M)_η)`.
    #[serde(rename = "vol_M")]
    pub vol_m: f64,
    /// `|det Ad_n(η)|`.
    #[serde(rename = "det_Ad_n")]
    pub det_ad_n: f64,
    /// `#[Ξ ∩ ηN : Γ ∩ N]`.
    pub coset_index: u64,
    #[serde(rename = "eta_H")]
    pub eta_h: NoncompactCartanElement,
}

/// Every `Γ`- and `Ξ`-dependent constant consumed by [`assemble`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeometricData {
    /// `vol(Γ \ G)`.
    pub total_vol: f64,
    #[serde(default)]
    pub central_classes: Vec<CentralClass>,
    #[serde(default)]
    pub elliptic_classes: Vec<EllipticClass>,
    #[serde(rename = "parabolic_I", default)]
    pub parabolic_i: Vec<ParabolicIEntry>,
    #[serde(rename = "parabolic_II", default)]
    pub parabolic_ii: Vec<ParabolicIIEntry>,
    #[serde(default)]
    pub residue_scalar: Option<Complex64>,
    /// Global measure normalization applied to the central term.
    pub calibration: f64,
}

impl GeometricData {
    /// No classes at all: every term is zero.
    pub fn empty(total_vol: f64) -> Self {
        GeometricData {
            total_vol,
            central_classes: vec![],
            elliptic_classes: vec![],
            parabolic_i: vec![],
            parabolic_ii: vec![],
            residue_scalar: None,
            calibration: 1.0,
        }
    }

    /// Disjoint union of the class lists. Volumes and calibration must agree;
    /// residue scalars add.
    pub fn concat(&self, other: &GeometricData) -> Result<GeometricData> {
        if self.total_vol != other.total_vol || self.calibration != other.calibration {
            return Err(Error::InvalidGeometry(
                "concatenated data must share total_vol and calibration".into(),
            ));
        }
        Ok(GeometricData {
            total_vol: self.total_vol,
            central_classes: cat(&self.central_classes, &other.central_classes),
            elliptic_classes: cat(&self.elliptic_classes, &other.elliptic_classes),
            parabolic_i: cat(&self.parabolic_i, &other.parabolic_i),
            parabolic_ii: cat(&self.parabolic_ii, &other.parabolic_ii),
            residue_scalar: match (self.residue_scalar, other.residue_scalar) {
                (None, None) => None,
                (a, b) => Some(a.unwrap_or_default() + b.unwrap_or_default()),
            },
            calibration: self.calibration,
        })
    }

    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidGeometry(m));
        if !(self.total_vol > 0.0) {
            return bad(format!(
                "total_vol must be positive, got {}",
                self.total_vol
            ));
        }
        if !(self.calibration > 0.0) {
            return bad(format!(
                "calibration must be positive, got {}",
                self.calibration
            ));
        }
        for c in &self.central_classes {
            c.z.validate(rs)?;
        }
        for e in &self.elliptic_classes {
            e.rep.validate(rs)?;
            if !(e.vol_quotient > 0.0 && e.d_xi > 0.0) {
                return bad(format!(
                    "elliptic class {} needs positive vol_quotient and d_xi",
                    e.rep
                ));
            }
        }
        for p in &self.parabolic_i {
            if p.dim_n_eta1 % 2 != 0 {
                return bad(format!("dim_n_eta1 must be even, got {}", p.dim_n_eta1));
            }
            p.eta_torus.validate(rs)?;
            if p.z0_pairing.0.len() != rs.ambient_dim() {
                return Err(Error::DimensionMismatch {
                    expected: rs.ambient_dim(),
                    got: p.z0_pairing.0.len(),
                });
            }
            if let Some(w) = p.rplus_xi0.iter().find(|w| w.dim() != rs.ambient_dim()) {
                return Err(Error::DimensionMismatch {
                    expected: rs.ambient_dim(),
                    got: w.dim(),
                });
            }
        }
        for p in &self.parabolic_ii {
            p.eta_h.validate(rs)?;
            if !(p.vol_m > 0.0 && p.det_ad_n > 0.0 && p.coset_index > 0) {
                return bad(
                    "parabolic_II entries need positive vol_M, det_Ad_n and coset_index".into(),
                );
            }
        }
        Ok(())
    }
}

fn cat<T: Clone>(a: &[T], b: &[T]) -> Vec<T> {
    [a, b].concat()
}

/// Reading of the overline on `⟨w(μ + ρ_k), Z₀⟩` in the unipotent term.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairingInterpretation {
    #[default]
    Conjugate,
    Identity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Regular,
    Singular,
}

/// Per-term values of the Lefschetz number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LefschetzBreakdown {
    pub group: String,
    pub mu: Weight,
    pub lambda: Weight,
    pub branch: Branch,
    pub interpretation: PairingInterpretation,
    pub central: Complex64,
    pub elliptic: Complex64,
    pub parabolic_i: Complex64,
    pub parabolic_ii: Complex64,
    pub residue: Complex64,
    pub total: Complex64,
    pub rounded: i64,
    pub rounding_defect: f64,
}

/// `δ(μ, Ξ) · vol(Γ \ G) · d(λ) · calibration`, with `δ = #Ξ_C` when the
/// central character is trivial on `Ξ_C` and `0` otherwise.
pub fn central_term(rs: &RootSystem, lam: &HCParameter, geom: &GeometricData) -> Result<Complex64> {
    let mut trivial = true;
    for c in &geom.central_classes {
        trivial &= (central_character(rs, lam, &c.z)? - 1.0).norm() < 1e-9;
    }
    if !trivial || geom.central_classes.is_empty() {
        return Ok(Complex64::default());
    }
    let delta = geom.central_classes.len() as f64;
    Ok((delta * geom.total_vol * formal_degree(rs, lam)? * geom.calibration).into())
}

/// `Σ vol(Γ_ξ \ G_ξ) d_ξ⁻¹ · (orbital term at ξ)`.
pub fn elliptic_term(
    rs: &RootSystem,
    lam: &HCParameter,
    geom: &GeometricData,
) -> Result<Complex64> {
    geom.elliptic_classes
        .iter()
        .map(|e| Ok(e.vol_quotient / e.d_xi * elliptic_orbital_term(rs, lam, &e.rep)?))
        .sum()
}

/// `(−1)^{dim p/2} δ(η) (c⁺C⁺ + c⁻C⁻) Σ_{W_k} ⟨wλ, Z₀⟩^{dim n_{η,1}/2} ∏_{R⁺(ξ₀)} ⟨wλ, β⟩ e^{wλ}(η)`,
/// summed over the entries, with `⟨wλ, Z₀⟩` conjugated or not according to `interp`.
pub fn parabolic_i_term(
    rs: &RootSystem,
    lam: &HCParameter,
    geom: &GeometricData,
    interp: PairingInterpretation,
) -> Result<Complex64> {
    let scale = rs.form_scale();
    let mut total = Complex64::default();
    for p in geom.parabolic_i.iter().filter(|p| p.delta_flag) {
        if p.dim_n_eta1 % 2 != 0 {
            return Err(Error::InvalidGeometry(format!(
                "dim_n_eta1 must be even, got {}",
                p.dim_n_eta1
            )));
        }
        let pre = p.c_eta_plus * p.big_c_eta_plus + p.c_eta_minus * p.big_c_eta_minus;
        if pre == 0.0 {
            continue;
        }
        let sum: Complex64 = rs
            .weyl_group(WeylSubgroup::Compact)
            .iter()
            .map(|w| {
                let wl = w.apply(&lam.lambda);
                let z = p.z0_pairing.pair(&wl);
                let z = match interp {
                    PairingInterpretation::Conjugate => z.conj(),
                    PairingInterpretation::Identity => z,
                };
                let poly: f64 = p
                    .rplus_xi0
                    .iter()
                    .map(|b| q_to_f64(&(scale * wl.dot(b))))
                    .product();
                z.powu(p.dim_n_eta1 / 2) * poly * p.eta_torus.eval(&wl)
            })
            .sum();
        total += rs.parity_sign() * pre * sum;
    }
    Ok(total)
}

/// `(−1)^{dim p/2 + 1}/2 Σ vol(M_η/(Γ_M)_η) |det Ad_n(η)|^{−1/2} #[Ξ∩ηN : Γ∩N] Ω_λ(η)`.
pub fn parabolic_ii_term(
    rs: &RootSystem,
    lam: &HCParameter,
    geom: &GeometricData,
) -> Result<Complex64> {
    let sum: Complex64 = geom
        .parabolic_ii
        .iter()
        .map(|p| {
            Ok(p.vol_m / p.det_ad_n.sqrt()
                * p.coset_index as f64
                * omega_invariant(rs, lam, &p.eta_h)?)
        })
        .sum::<Result<Complex64>>()?;
    Ok(-rs.parity_sign() / 2.0 * sum)
}

/// `−½ Tr(T_{Ξ,π_{σ,0}} ∘ U^{Γ,+}(σ, 0))`, from the supplied trace.
pub fn residue_term(geom: &GeometricData) -> Result<Complex64> {
    geom.residue_scalar
        .map(|r| -0.5 * r)
        .ok_or(Error::MissingResidue)
}

/// Evaluates every contribution for `μ` and sums them according to the branch.
pub fn assemble(
    rs: &RootSystem,
    mu: &Weight,
    geom: &GeometricData,
    interp: PairingInterpretation,
) -> Result<LefschetzBreakdown> {
    geom.validate(rs)?;
    let class = rs.classify_weight(mu)?;
    let lam = HCParameter::from_mu(rs, mu)?;
    let zero = Complex64::default();
    let elliptic = elliptic_term(rs, &lam, geom)?;
    let parabolic_i = parabolic_i_term(rs, &lam, geom, interp)?;
    let (branch, central, parabolic_ii, residue) = match class {
        WeightClass::Regular => {
            if geom.residue_scalar.is_some() {
                return Err(Error::InvalidGeometry(
                    "residue data supplied for a regular weight".into(),
                ));
            }
            (
                Branch::Regular,
                central_term(rs, &lam, geom)?,
                parabolic_ii_term(rs, &lam, geom)?,
                zero,
            )
        }
        WeightClass::Singular(_) => (Branch::Singular, zero, zero, residue_term(geom)?),
    };
    let total = central + elliptic + parabolic_i + parabolic_ii + residue;
    let rounded = total.re.round();
    Ok(LefschetzBreakdown {
        group: rs.descriptor().to_string(),
        mu: mu.clone(),
        lambda: lam.lambda,
        branch,
        interpretation: interp,
        central,
        elliptic,
        parabolic_i,
        parabolic_ii,
        residue,
        total,
        rounded: rounded as i64,
        rounding_defect: (total - rounded).norm(),
    })
}
