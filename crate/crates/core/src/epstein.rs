//! Constant terms of cusp zeta functions.
//!
//! In real rank one the norms `‖log ξ‖` of the unipotent classes attached to a
//! cusp run through finitely many arithmetic progressions `c·(m + a)`, so each
//! zeta function is a finite combination of Hurwitz zeta values at `z + dim n`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// `B_2, B_4, …, B_24`.
const BERNOULLI: [f64; 12] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
];

fn real_pow(x: f64, s: Complex64) -> Complex64 {
    (s * x.ln()).exp()
}

/// Hurwitz zeta `ζ(s, a) = Σ_{m ≥ 0} (m + a)^{−s}`, continued to `s ≠ 1`.
///
/// Euler–Maclaurin summation for `Re s ≥ −3`. Further left the summands cancel
/// catastrophically in double precision, so Hurwitz's formula is used instead.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    if !(a > 0.0) {
        return Err(Error::InvalidZetaSpec(format!(
            "Hurwitz offset must be positive, got {a}"
        )));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::HurwitzPole);
    }
    Ok(if s.re >= 0.0 {
        euler_maclaurin(s, a, 10 + s.norm().ceil() as usize)
    } else if s.re >= -3.0 {
        euler_maclaurin(s, a, 7)
    } else {
        hurwitz_reflected(s, a)
    })
}

/// `ζ(1 − s', a) = Γ(s') (2π)^{−s'} (e^{−iπs'/2} F(a) + e^{iπs'/2} F(−a))` with
/// `F(x) = Σ_{m ≥ 1} e^{2πimx} m^{−s'}`, valid for `0 < a ≤ 1`, `Re s' > 1`.
/// Larger offsets are reduced by peeling off leading terms.
fn hurwitz_reflected(s: Complex64, a: f64) -> Complex64 {
    let shift = (a.ceil() - 1.0).max(0.0);
    let base = a - shift;
    let peeled: Complex64 = (0..shift as usize)
        .map(|j| real_pow(base + j as f64, -s))
        .sum();
    let sp = Complex64::new(1.0, 0.0) - s;
    let sigma = sp.re;
    // Tail of Σ m^{−σ} below 1e−15.
    let terms = (1e15 / (sigma - 1.0)).powf(1.0 / (sigma - 1.0)).ceil() as usize;
    let (mut fp, mut fm) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for m in (1..=terms).rev() {
        let p = real_pow(m as f64, -sp);
        let th = 2.0 * PI * (m as f64 * base).fract();
        fp += p * Complex64::from_polar(1.0, th);
        fm += p * Complex64::from_polar(1.0, -th);
    }
    let i_half = Complex64::new(0.0, PI / 2.0) * sp;
    let pre = (ln_gamma(sp) - sp * (2.0 * PI).ln()).exp();
    pre * ((-i_half).exp() * fp + i_half.exp() * fm) - peeled
}

/// Lanczos approximation (g = 7) of `ln Γ(z)` for `Re z > 1/2`.
fn ln_gamma(z: Complex64) -> Complex64 {
    const G: f64 = 7.0;
    const C: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    let z = z - 1.0;
    let mut x = Complex64::new(C[0], 0.0);
    for (i, c) in C.iter().enumerate().skip(1) {
        x += *c / (z + i as f64);
    }
    let t = z + G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

fn euler_maclaurin(s: Complex64, a: f64, n: usize) -> Complex64 {
    let mut sum: Complex64 = (0..n).map(|m| real_pow(m as f64 + a, -s)).sum();
    let x = n as f64 + a;
    sum += real_pow(x, Complex64::new(1.0, 0.0) - s) / (s - 1.0);
    sum += 0.5 * real_pow(x, -s);
    // B_{2j}/(2j)! · s(s+1)…(s+2j−2) · x^{−s−2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut xp = real_pow(x, -s - 1.0);
    for (j, b) in BERNOULLI.iter().enumerate() {
        sum += *b / fact * rising * xp;
        let k = 2.0 * (j as f64 + 1.0);
        rising *= (s + k - 1.0) * (s + k);
        fact *= (k + 1.0) * (k + 2.0);
        xp /= x * x;
    }
    sum
}

/// Digamma `ψ(a)` for `a > 0`.
pub fn digamma(mut a: f64) -> f64 {
    let mut acc = 0.0;
    while a < 10.0 {
        acc -= 1.0 / a;
        a += 1.0;
    }
    let inv2 = 1.0 / (a * a);
    let mut pow = inv2;
    let mut tail = 0.0;
    for (j, b) in BERNOULLI.iter().take(8).enumerate() {
        tail += b / (2.0 * (j as f64 + 1.0)) * pow;
        pow *= inv2;
    }
    acc + a.ln() - 0.5 / a - tail
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZetaSign {
    Plus,
    Minus,
}

/// Norms `scale · (m + offset)`, `m = 0, 1, 2, …`, each class weighted by `weight`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Progression {
    pub weight: f64,
    pub scale: f64,
    pub offset: f64,
}

/// A single class with its centralizer volume and norm.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZetaClass {
    pub weight: f64,
    pub norm: f64,
}

/// `ζ(z) = lattice_vol · Σ weight / norm^{exponent_base + z}` over finitely
/// many explicit classes and arithmetic progressions of classes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EpsteinSpec {
    pub lattice_vol: f64,
    pub exponent_base: u32,
    pub sign: ZetaSign,
    #[serde(default)]
    pub progressions: Vec<Progression>,
    #[serde(default)]
    pub classes: Vec<ZetaClass>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaurentConstant {
    pub constant_term: f64,
    pub pole_order_at_0: u8,
}

impl EpsteinSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidZetaSpec(m));
        if !(self.lattice_vol > 0.0) {
            return bad(format!(
                "lattice_vol must be positive, got {}",
                self.lattice_vol
            ));
        }
        if self.exponent_base == 0 {
            return bad("exponent_base must be positive".into());
        }
        for p in &self.progressions {
            if !(p.weight > 0.0 && p.scale > 0.0 && p.offset > 0.0) {
                return bad(format!(
                    "progression needs positive weight, scale and offset: {p:?}"
                ));
            }
        }
        for c in &self.classes {
            if !(c.weight > 0.0 && c.norm > 0.0) {
                return bad(format!("class needs positive weight and norm: {c:?}"));
            }
        }
        Ok(())
    }
}

/// Constant term at `z = 0` of the continued zeta function.
///
/// A progression contributes `w c^{−e−z} ζ(e + z, a)`. For `e = 1` this has a
/// simple pole with constant term `w c^{−1} (−ψ(a) − ln c)`; otherwise it is
/// regular with value `w c^{−e} ζ(e, a)`.
pub fn zeta_constant_terms(spec: &EpsteinSpec) -> Result<LaurentConstant> {
    spec.validate()?;
    let e = spec.exponent_base as i32;
    let mut constant = 0.0;
    let mut pole = 0u8;
    for p in &spec.progressions {
        let c = p.scale;
        if e == 1 {
            constant += p.weight / c * (-digamma(p.offset) - c.ln());
            pole = 1;
        } else {
            constant +=
                p.weight * c.powi(-e) * hurwitz_zeta(Complex64::new(e as f64, 0.0), p.offset)?.re;
        }
    }
    for cl in &spec.classes {
        constant += cl.weight * cl.norm.powi(-e);
    }
    debug_assert!(pole <= 1);
    Ok(LaurentConstant {
        constant_term: spec.lattice_vol * constant,
        pole_order_at_0: pole,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn re(s: f64) -> Complex64 {
        Complex64::new(s, 0.0)
    }

    /// γ from harmonic sums: `H_N − ln(N + 1/2)` has error `O(N^{−2})`.
    fn euler_gamma_oracle() -> f64 {
        let n = 1_000_000;
        let h: f64 = (1..=n).rev().map(|k| 1.0 / k as f64).sum();
        h - (n as f64 + 0.5).ln()
    }

    /// Partial sums with the midpoint tail estimate, for real `s > 1`.
    fn hurwitz_oracle(s: f64, a: f64) -> f64 {
        let n = 200_000;
        let head: f64 = (0..n).rev().map(|m| (m as f64 + a).powf(-s)).sum();
        head + (n as f64 + a - 0.5).powf(1.0 - s) / (s - 1.0)
    }

    #[test]
    fn hurwitz_special_values() {
        assert_abs_diff_eq!(
            hurwitz_zeta(re(0.0), 1.0).unwrap().re,
            -0.5,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(hurwitz_zeta(re(0.0), 0.5).unwrap().re, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            hurwitz_zeta(re(2.0), 1.0).unwrap().re,
            PI * PI / 6.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            hurwitz_zeta(re(-1.0), 1.0).unwrap().re,
            -1.0 / 12.0,
            epsilon = 1e-12
        );
        for a in [1.0, 0.5, 1.0 / 3.0, 2.75] {
            assert_abs_diff_eq!(
                hurwitz_zeta(re(0.0), a).unwrap().re,
                0.5 - a,
                epsilon = 1e-12
            );
        }
        assert_eq!(hurwitz_zeta(re(1.0), 1.0), Err(Error::HurwitzPole));
    }

    #[test]
    fn hurwitz_matches_partial_sums() {
        for (s, a) in [(2.0, 1.0), (3.0, 1.0 / 3.0), (1.5, 0.25), (7.5, 2.0)] {
            let got = hurwitz_zeta(re(s), a).unwrap();
            let want = hurwitz_oracle(s, a);
            assert!(
                (got.re - want).abs() < 1e-10 * want.abs().max(1.0),
                "{s} {a}: {got} vs {want}"
            );
            assert_abs_diff_eq!(got.im, 0.0, epsilon = 1e-14);
        }
    }

    /// `(Re s, Im s, a, ζ(s, a))`, evaluated independently at 30 significant digits.
    const REFERENCE: [(f64, f64, f64, (f64, f64)); 180] = [
        (-9.5, 0.0, 0.25, (-0.006662833535694789, 0.0)),
        (-9.5, 0.0, 1.0, (-0.006672172296466641, 0.0)),
        (-9.5, 0.0, 0.3333333333333333, (-0.0024342507892973183, 0.0)),
        (-9.5, 0.0, 2.5, (-47.07802534395375, 0.0)),
        (-9.5, -3.0, 0.25, (0.20492124322984337, -0.2677291398723583)),
        (-9.5, -3.0, 1.0, (-0.2674935053433456, -0.20469729072257495)),
        (
            -9.5,
            -3.0,
            0.3333333333333333,
            (0.3113868665424956, -0.1292780663095473),
        ),
        (-9.5, -3.0, 2.5, (-16.071157707270537, -43.950928949845604)),
        (-8.0, 0.0, 0.25, (0.005283355712890625, 0.0)),
        (-8.0, 0.0, 0.3333333333333333, (0.004566828679006701, 0.0)),
        (-8.0, 0.0, 2.5, (-25.6328125, 0.0)),
        (-8.0, -3.0, 0.25, (0.09957631763627214, 0.14444324173186238)),
        (-8.0, -3.0, 1.0, (0.14394820866644903, -0.09939256357612147)),
        (
            -8.0,
            -3.0,
            0.3333333333333333,
            (0.013849231905114974, 0.1749248549929027),
        ),
        (-8.0, -3.0, 2.5, (-9.036623688589456, -23.933683467152765)),
        (-8.0, 6.0, 0.25, (-2.87563784178652, -3.5473132176731457)),
        (-8.0, 6.0, 1.0, (3.5422672189178424, -2.887170416704483)),
        (
            -8.0,
            6.0,
            0.3333333333333333,
            (-4.2660119122404305, -1.638666343762669),
        ),
        (-8.0, 6.0, 2.5, (15.89890333243895, 19.567141429447616)),
        (-6.0, 0.0, 0.25, (-0.00372314453125, 0.0)),
        (-6.0, 0.0, 0.3333333333333333, (-0.0032007315957933245, 0.0)),
        (-6.0, 0.0, 2.5, (-11.40625, 0.0)),
        (
            -6.0,
            -3.0,
            0.25,
            (-0.10488517023932108, -0.02134046019931957),
        ),
        (
            -6.0,
            -3.0,
            1.0,
            (-0.020789354126634255, 0.10372250116231824),
        ),
        (
            -6.0,
            -3.0,
            0.3333333333333333,
            (-0.0799155125381951, -0.07131204483643644),
        ),
        (-6.0, -3.0, 2.5, (-3.9229009428198025, -10.773330304118856)),
        (-6.0, 6.0, 0.25, (-1.2135667710460876, 1.5196325914564686)),
        (-6.0, 6.0, 1.0, (-1.5375661482844347, -1.2017853977363218)),
        (
            -6.0,
            6.0,
            0.3333333333333333,
            (-0.29846854177182547, 1.927870207986997),
        ),
        (-6.0, 6.0, 2.5, (10.1895391001428, 8.659825893084486)),
        (-5.0, 0.0, 0.25, (6.006634424603174e-05, 0.0)),
        (-5.0, 0.0, 1.0, (-0.003968253968253968, 0.0)),
        (-5.0, 0.0, 0.3333333333333333, (0.001975961852505062, 0.0)),
        (-5.0, 0.0, 2.5, (-7.621155753968254, 0.0)),
        (
            -5.0,
            -3.0,
            0.25,
            (-0.02661761149961652, -0.09745237551619729),
        ),
        (
            -5.0,
            -3.0,
            1.0,
            (-0.09499388074788837, 0.026534735139453047),
        ),
        (
            -5.0,
            -3.0,
            0.3333333333333333,
            (0.0265846648165549, -0.09757749212858066),
        ),
        (-5.0, -3.0, 2.5, (-2.5228664842638233, -7.118884702465113)),
        (-5.0, 6.0, 0.25, (0.1535590732694557, 1.4205598589257682)),
        (-5.0, 6.0, 1.0, (-1.428433893460086, 0.1842386415944653)),
        (
            -5.0,
            6.0,
            0.3333333333333333,
            (0.8403523260557122, 1.1672214414489275),
        ),
        (-5.0, 6.0, 2.5, (7.237960516518024, 4.820252336446048)),
        (-4.0, 0.0, 0.25, (0.0048828125, 0.0)),
        (-4.0, 0.0, 0.3333333333333333, (0.00411522633744856, 0.0)),
        (-4.0, 0.0, 2.5, (-5.125, 0.0)),
        (-4.0, -3.0, 0.25, (0.0759971866262621, -0.08048412121522788)),
        (
            -4.0,
            -3.0,
            1.0,
            (-0.07727846068664943, -0.07132277470132091),
        ),
        (
            -4.0,
            -3.0,
            0.3333333333333333,
            (0.10671942485653788, -0.0297481602746677),
        ),
        (-4.0, -3.0, 2.5, (-1.650658172465096, -4.615588622816856)),
        (-4.0, 6.0, 0.25, (0.8065051832030697, 0.7912230208903048)),
        (-4.0, 6.0, 1.0, (-0.7728444745753914, 0.8539806258437352)),
        (
            -4.0,
            6.0,
            0.3333333333333333,
            (1.1051141626737198, 0.30464580240749545),
        ),
        (-4.0, 6.0, 2.5, (4.719652383280079, 2.5075274308697804)),
        (-3.0, 0.0, 0.25, (-0.0004557291666666667, 0.0)),
        (-3.0, 0.0, 1.0, (0.008333333333333333, 0.0)),
        (-3.0, 0.0, 0.3333333333333333, (-0.004012345679012345, 0.0)),
        (-3.0, 0.0, 2.5, (-3.5072916666666667, 0.0)),
        (
            -3.0,
            -3.0,
            0.25,
            (0.14341972684246762, 0.014538132708795556),
        ),
        (-3.0, -3.0, 1.0, (0.01010752257126138, -0.12870573704818938)),
        (
            -3.0,
            -3.0,
            0.3333333333333333,
            (0.11331132111996998, 0.0885615876470783),
        ),
        (-3.0, -3.0, 2.5, (-1.135121749871209, -2.9206462774682973)),
        (-3.0, 6.0, 0.25, (0.9258369012359782, 0.18999956706086765)),
        (-3.0, 6.0, 1.0, (-0.12316324737244494, 0.9857310865465206)),
        (
            -3.0,
            6.0,
            0.3333333333333333,
            (0.9410540520846981, -0.2707901417066404),
        ),
        (-3.0, 6.0, 2.5, (2.8638888668827023, 1.265801085525867)),
        (-2.0, 0.0, 0.25, (-0.015625, 0.0)),
        (-2.0, 0.0, 0.3333333333333333, (-0.01234567901234568, 0.0)),
        (-2.0, 0.0, 2.5, (-2.5, 0.0)),
        (-2.0, -3.0, 0.25, (0.1488380685568526, 0.17630767137998266)),
        (-2.0, -3.0, 1.0, (0.13297115587929864, -0.12305330040458777)),
        (
            -2.0,
            -3.0,
            0.3333333333333333,
            (0.02269482734034545, 0.2256410534546747),
        ),
        (-2.0, -3.0, 2.5, (-0.8350949222379254, -1.7828209666872763)),
        (-2.0, 6.0, 0.25, (0.7729182083237391, -0.18111466014282088)),
        (-2.0, 6.0, 1.0, (0.34164348923212406, 0.8495047226513192)),
        (
            -2.0,
            6.0,
            0.3333333333333333,
            (0.7041485887535789, -0.531368006743596),
        ),
        (-2.0, 6.0, 2.5, (1.6336121705952469, 0.643449455151113)),
        (-2.0, 9.7, 0.25, (0.755318570253172, -3.0627367080671846)),
        (-2.0, 9.7, 1.0, (3.178741396715799, 1.0897050142166913)),
        (
            -2.0,
            9.7,
            0.3333333333333333,
            (-0.9845710635770347, -3.042820685361663),
        ),
        (-2.0, 9.7, 2.5, (-1.2207547870101287, -2.211635254906576)),
        (-1.0, 0.0, 0.25, (0.010416666666666666, 0.0)),
        (-1.0, 0.0, 1.0, (-0.08333333333333333, 0.0)),
        (-1.0, 0.0, 0.3333333333333333, (0.027777777777777776, 0.0)),
        (-1.0, 0.0, 2.5, (-1.9583333333333333, 0.0)),
        (-1.0, -3.0, 0.25, (0.05652386539008885, 0.4689716264941852)),
        (-1.0, -3.0, 1.0, (0.2741240846757193, -0.058777533260970814)),
        (
            -1.0,
            -3.0,
            0.3333333333333333,
            (-0.2294563681736248, 0.37882908640452084),
        ),
        (-1.0, -3.0, 2.5, (-0.6435866058208635, -1.0167002343941722)),
        (-1.0, 6.0, 0.25, (0.4873215455397109, -0.2323573863118286)),
        (-1.0, 6.0, 1.0, (0.6257417552790705, 0.6319225007940462)),
        (
            -1.0,
            6.0,
            0.3333333333333333,
            (0.6461129332304083, -0.5440377764329867),
        ),
        (-1.0, 6.0, 2.5, (0.8801243507727072, 0.3375606993574899)),
        (-1.0, 9.7, 0.25, (0.08649104733313291, -1.9113733087462303)),
        (-1.0, 9.7, 1.0, (2.302137162034358, 0.30900620013785524)),
        (
            -1.0,
            9.7,
            0.3333333333333333,
            (-1.2078113995693247, -1.982854994488545),
        ),
        (-1.0, 9.7, 2.5, (-0.724778535574546, -0.9587512137909932)),
        (-0.5, 0.0, 0.25, (0.09032225876124625, 0.0)),
        (-0.5, 0.0, 1.0, (-0.20788622497735457, 0.0)),
        (-0.5, 0.0, 0.3333333333333333, (0.09244628286986895, 0.0)),
        (-0.5, 0.0, 2.5, (-1.8709631869975416, 0.0)),
        (-0.5, -3.0, 0.25, (-0.0691645807341873, 0.7451850709293709)),
        (
            -0.5,
            -3.0,
            1.0,
            (0.35291387981928724, -0.012124954416036981),
        ),
        (
            -0.5,
            -3.0,
            0.3333333333333333,
            (-0.4792021310217932, 0.46916499014631496),
        ),
        (-0.5, -3.0, 2.5, (-0.5625950328870596, -0.7326979117803978)),
        (-0.5, 6.0, 0.25, (0.2794766374272177, -0.06328856756327009)),
        (-0.5, 6.0, 1.0, (0.7177341886329418, 0.5245643009509626)),
        (
            -0.5,
            6.0,
            0.3333333333333333,
            (0.7750782121175559, -0.4647329143967791),
        ),
        (-0.5, 6.0, 2.5, (0.6324807727471263, 0.24745868955824113)),
        (-0.5, 9.7, 0.25, (0.07798803782044887, -1.3328775109747633)),
        (-0.5, 9.7, 1.0, (1.9789544065715547, 0.13515250742559765)),
        (
            -0.5,
            9.7,
            0.3333333333333333,
            (-1.2283492664812987, -1.796304186464957),
        ),
        (-0.5, 9.7, 2.5, (-0.5327032223557948, -0.6248651340932804)),
        (0.0, 0.0, 0.25, (0.25, 0.0)),
        (0.0, 0.0, 1.0, (-0.5, 0.0)),
        (0.0, 0.0, 0.3333333333333333, (0.16666666666666669, 0.0)),
        (0.0, 0.0, 2.5, (-2.0, 0.0)),
        (0.0, -3.0, 0.25, (-0.318478120350781, 1.2260743318611331)),
        (0.0, -3.0, 1.0, (0.43928267542694616, 0.0364719147729957)),
        (
            0.0,
            -3.0,
            0.3333333333333333,
            (-0.8941476660525719, 0.5779478624775467),
        ),
        (0.0, -3.0, 2.5, (-0.4813903675799311, -0.5023546993227832)),
        (0.0, 6.0, 0.25, (-0.029612425904624377, 0.3559402427064393)),
        (0.0, 6.0, 1.0, (0.786208050782766, 0.4264323282494757)),
        (
            0.0,
            6.0,
            0.3333333333333333,
            (1.096063275103226, -0.313380391099236),
        ),
        (0.0, 6.0, 2.5, (0.44807915505190515, 0.18219854291791962)),
        (0.0, 9.7, 0.25, (0.3108958750305031, -0.63514155479051)),
        (0.0, 9.7, 1.0, (1.726663034698105, 0.03856729235493336)),
        (
            0.0,
            9.7,
            0.3333333333333333,
            (-1.275433770005153, -1.8844799977681843),
        ),
        (0.0, 9.7, 2.5, (-0.38292203035881794, -0.40529081572931186)),
        (0.5, 0.0, 0.25, (0.23996352449563096, 0.0)),
        (0.5, 0.0, 1.0, (-1.4603545088095868, 0.0)),
        (0.5, 0.0, 0.3333333333333333, (-0.11808332793422165, 0.0)),
        (0.5, 0.0, 2.5, (-2.8356087867224513, 0.0)),
        (0.5, -3.0, 0.25, (-0.8213159956117979, 2.117913546901069)),
        (0.5, -3.0, 1.0, (0.5327366709742328, 0.07889651342583338)),
        (
            0.5,
            -3.0,
            0.3333333333333333,
            (-1.6021892581985597, 0.7196895966742355),
        ),
        (0.5, -3.0, 2.5, (-0.3968220341711319, -0.3218337378517925)),
        (0.5, 6.0, 0.25, (-0.5499476182761897, 1.2425156846634997)),
        (0.5, 6.0, 1.0, (0.8372238080668796, 0.34021839694376643)),
        (
            0.5,
            6.0,
            0.3333333333333333,
            (1.7317544990337295, -0.05680707003249993),
        ),
        (0.5, 6.0, 2.5, (0.3129239734943607, 0.13416480332282305)),
        (0.5, 9.7, 0.25, (0.9129971880757715, 0.3853526936493357)),
        (0.5, 9.7, 1.0, (1.5341241518714615, -0.010968326076169132)),
        (
            0.5,
            9.7,
            0.3333333333333333,
            (-1.4144493048088371, -2.3453775197433724),
        ),
        (0.5, 9.7, 2.5, (-0.2703404944355289, -0.2619053984948666)),
        (2.0, 0.0, 0.25, (17.19732915450711, 0.0)),
        (2.0, 0.0, 1.0, (1.6449340668482264, 0.0)),
        (2.0, 0.0, 0.3333333333333333, (10.095597125427096, 0.0)),
        (2.0, 0.0, 2.5, (0.49035775610023485, 0.0)),
        (2.0, -3.0, 0.25, (-8.102875927192239, 14.02607786883794)),
        (2.0, -3.0, 1.0, (0.7980219851462758, 0.1137443080529385)),
        (
            2.0,
            -3.0,
            0.3333333333333333,
            (-8.712294637113544, 1.803293076633495),
        ),
        (2.0, -3.0, 2.5, (-0.1614288530679544, -0.04650541606102417)),
        (2.0, 6.0, 0.25, (-6.961678220606413, 13.813601885827488)),
        (2.0, 6.0, 1.0, (0.9268634317042446, 0.15686710631129328)),
        (
            2.0,
            6.0,
            0.3333333333333333,
            (8.561004389886458, 2.279941356029635),
        ),
        (2.0, 6.0, 2.5, (0.09809585905377483, 0.05145492260693598)),
        (2.0, 9.7, 0.25, (9.856216933100214, 11.662118791968448)),
        (2.0, 9.7, 1.0, (1.2039300945454225, -0.03866547301711367)),
        (
            2.0,
            9.7,
            0.3333333333333333,
            (-3.545909713558598, -8.81364137922327),
        ),
        (2.0, 9.7, 2.5, (-0.08772834886723363, -0.06969853734659429)),
        (5.0, 0.0, 0.25, (1024.3489745265806, 0.0)),
        (5.0, 0.0, 1.0, (1.03692775514337, 0.0)),
        (5.0, 0.0, 0.3333333333333333, (243.25528996441895, 0.0)),
        (5.0, 0.0, 2.5, (0.013073166646113807, 0.0)),
        (5.0, -3.0, 0.25, (-538.0478031106269, 871.3158713431052)),
        (5.0, -3.0, 1.0, (0.9804286705057874, 0.02541190138063748)),
        (
            5.0,
            -3.0,
            0.3333333333333333,
            (-239.97487916038497, 37.51937174097895),
        ),
        (5.0, -3.0, 2.5, (-0.01089553263597175, 0.002068446378699267)),
        (5.0, 6.0, 0.25, (-457.992894851989, 915.5267547667348)),
        (5.0, 6.0, 1.0, (0.9867894825043865, 0.024682658608411817)),
        (
            5.0,
            6.0,
            0.3333333333333333,
            (231.49817292994885, 73.55626887656686),
        ),
        (5.0, 6.0, 2.5, (0.007311785159792453, 0.005452112468118707)),
        (9.5, 0.0, 0.25, (524288.1205140442, 0.0)),
        (9.5, 0.0, 1.0, (1.0014125906121736, 0.0)),
        (9.5, 0.0, 0.3333333333333333, (34092.02140176944, 0.0)),
        (9.5, 0.0, 2.5, (0.00017331809158242515, 0.0)),
        (9.5, -3.0, 0.25, (-275603.8858443616, 446004.9552005928)),
        (9.5, -3.0, 1.0, (0.9992975044595085, 0.0011998398836580303)),
        (
            9.5,
            -3.0,
            0.3333333333333333,
            (-33687.171858164664, 5237.710261885712),
        ),
        (
            9.5,
            -3.0,
            2.5,
            (-0.0001587713183540864, 5.881984744743207e-05),
        ),
    ];

    #[test]
    fn hurwitz_matches_reference_grid() {
        for (sr, si, a, want) in REFERENCE {
            let want = Complex64::new(want.0, want.1);
            let got = hurwitz_zeta(Complex64::new(sr, si), a).unwrap();
            assert!(
                (got - want).norm() < 1e-10 * want.norm(),
                "ζ({sr}+{si}i, {a}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn hurwitz_complex() {
        // First nontrivial zero of the Riemann zeta function.
        let z = hurwitz_zeta(Complex64::new(0.5, 14.134725141734693), 1.0).unwrap();
        assert!(z.norm() < 1e-9, "{z}");
        // ζ(s, 1/2) = (2^s − 1) ζ(s).
        let s = Complex64::new(-3.5, 6.0);
        let lhs = hurwitz_zeta(s, 0.5).unwrap();
        let rhs = ((s * 2f64.ln()).exp() - 1.0) * hurwitz_zeta(s, 1.0).unwrap();
        assert!((lhs - rhs).norm() < 1e-10 * rhs.norm(), "{lhs} vs {rhs}");
    }

    #[test]
    fn digamma_values() {
        let g = euler_gamma_oracle();
        assert_abs_diff_eq!(digamma(1.0), -g, epsilon = 1e-12);
        assert_abs_diff_eq!(digamma(0.5), -g - 2.0 * 2f64.ln(), epsilon = 1e-12);
        for a in [0.3, 1.7, 12.5] {
            assert_abs_diff_eq!(digamma(a + 1.0) - digamma(a), 1.0 / a, epsilon = 1e-12);
        }
    }

    fn unit(e: u32) -> EpsteinSpec {
        EpsteinSpec {
            lattice_vol: 1.0,
            exponent_base: e,
            sign: ZetaSign::Plus,
            progressions: vec![Progression {
                weight: 1.0,
                scale: 1.0,
                offset: 1.0,
            }],
            classes: vec![],
        }
    }

    #[test]
    fn constant_terms() {
        let c = zeta_constant_terms(&unit(1)).unwrap();
        assert_abs_diff_eq!(c.constant_term, euler_gamma_oracle(), epsilon = 1e-8);
        assert_eq!(c.pole_order_at_0, 1);
        let c = zeta_constant_terms(&unit(2)).unwrap();
        assert_abs_diff_eq!(c.constant_term, PI * PI / 6.0, epsilon = 1e-12);
        assert_eq!(c.pole_order_at_0, 0);
        let empty = EpsteinSpec {
            progressions: vec![],
            ..unit(1)
        };
        assert_eq!(
            zeta_constant_terms(&empty).unwrap(),
            LaurentConstant {
                constant_term: 0.0,
                pole_order_at_0: 0
            }
        );
    }

    #[test]
    fn convergent_specs_match_direct_sums() {
        let spec = EpsteinSpec {
            lattice_vol: 0.5,
            exponent_base: 3,
            sign: ZetaSign::Minus,
            progressions: vec![Progression {
                weight: 2.0,
                scale: 1.5,
                offset: 1.0,
            }],
            classes: vec![ZetaClass {
                weight: 1.0,
                norm: 2.0,
            }],
        };
        let direct = 0.5 * (2.0 * 1.5f64.powi(-3) * hurwitz_oracle(3.0, 1.0) + 1.0 / 8.0);
        assert_abs_diff_eq!(
            zeta_constant_terms(&spec).unwrap().constant_term,
            direct,
            epsilon = 1e-8
        );
    }

    #[test]
    fn scaling_covariance() {
        let base = zeta_constant_terms(&unit(1)).unwrap().constant_term;
        for c in [2.0, 0.5] {
            let mut s = unit(1);
            s.progressions[0].scale = c;
            let got = zeta_constant_terms(&s).unwrap().constant_term;
            // residue of ζ(1 + z) is 1
            assert_abs_diff_eq!(got, base / c - c.ln() / c, epsilon = 1e-12);
            let mut s = unit(2);
            s.progressions[0].scale = c;
            let got = zeta_constant_terms(&s).unwrap().constant_term;
            assert_abs_diff_eq!(got, PI * PI / 6.0 / (c * c), epsilon = 1e-12);
        }
    }

    #[test]
    fn rejects_bad_specs() {
        let mut s = unit(1);
        s.progressions[0].offset = 0.0;
        assert!(matches!(
            zeta_constant_terms(&s),
            Err(Error::InvalidZetaSpec(_))
        ));
        let s = EpsteinSpec {
            exponent_base: 0,
            ..unit(1)
        };
        assert!(matches!(
            zeta_constant_terms(&s),
            Err(Error::InvalidZetaSpec(_))
        ));
    }

    #[test]
    fn spec_json() {
        let s: EpsteinSpec = serde_json::from_str(
            r#"{"lattice_vol":1,"exponent_base":1,"sign":"plus","progressions":[{"weight":1,"scale":1,"offset":1}]}"#,
        )
        .unwrap();
        assert_eq!(s, unit(1));
    }
}
