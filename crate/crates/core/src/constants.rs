//! Physical constants and unit conversions, collected in one place.
//!
//! All values are CODATA 2018. External interfaces use h-based frequency
//! units (GHz/MHz), Gauss, mV/cm and micrometers; radial integrals are in
//! atomic units (Bohr radii) internally.

/// Rydberg constant times c for infinite nuclear mass, in GHz.
pub const RYDBERG_INF_GHZ: f64 = 3.2898419602508e6;

/// Hartree energy over h, in MHz.
pub const HARTREE_MHZ: f64 = 6.579683920502e9;

/// Bohr magneton over h, in MHz per Gauss.
pub const BOHR_MAGNETON_MHZ_PER_GAUSS: f64 = 1.39962449361;

/// Electron mass in unified atomic mass units.
pub const ELECTRON_MASS_U: f64 = 5.48579909065e-4;

/// Bohr radius in micrometers.
pub const BOHR_RADIUS_UM: f64 = 5.29177210903e-5;

/// Micrometers expressed in Bohr radii.
pub const UM_IN_BOHR: f64 = 1.0 / BOHR_RADIUS_UM;

/// Atomic unit of electric field, in mV/cm (5.14220674763e11 V/m).
pub const EFIELD_AU_MVCM: f64 = 5.14220674763e12;

/// One mV/cm in atomic units of electric field.
pub const EFIELD_AU_PER_MVCM: f64 = 1.0 / EFIELD_AU_MVCM;

/// Electron spin g-factor. The Lande g-factors used for the linear Zeeman
/// term take the integer value 2 (not the anomalous 2.0023...), which is the
/// convention behind quoted factors such as g_j = 4/5 for D_{3/2}.
pub const G_S: f64 = 2.0;

/// Orbital g-factor.
pub const G_L: f64 = 1.0;

/// Mass-corrected Rydberg constant (times c) in GHz for a species of the
/// given mass in u.
pub fn rydberg_ghz(mass_u: f64) -> f64 {
    RYDBERG_INF_GHZ / (1.0 + ELECTRON_MASS_U / mass_u)
}

/// Lande g-factor for a (l, s=1/2, j) level with g_s = 2, g_l = 1.
pub fn lande_g(l: u32, j2: i32) -> f64 {
    let l = l as f64;
    let j = j2 as f64 / 2.0;
    let s = 0.5;
    let jj = j * (j + 1.0);
    let ll = l * (l + 1.0);
    let ss = s * (s + 1.0);
    G_L * (jj - ss + ll) / (2.0 * jj) + G_S * (jj + ss - ll) / (2.0 * jj)
}
