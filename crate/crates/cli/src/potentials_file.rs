//! JSON description of a potential pair:
//!
//! ```json
//! { "phi": { "n_min": -1, "coeffs": [[0.5, 0.0], [0.25, 0.0]] },
//!   "psi": { "n_min": -3, "coeffs": [[1.0, 0.0]], "log": [0.0, 0.0] } }
//! ```
//!
//! `coeffs[k]` multiplies `z^(n_min + k)`; `log` multiplies `ln z`.

use std::path::Path;

use asym_plane::{Complex64, LaurentPotential, PotentialPair};
use serde::Deserialize;

use crate::Failure;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Series {
    #[serde(default)]
    n_min: i32,
    coeffs: Vec<[f64; 2]>,
    #[serde(default)]
    log: [f64; 2],
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairFile {
    phi: Series,
    psi: Series,
}

impl Series {
    fn into_potential(self) -> LaurentPotential {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        let series = LaurentPotential::new(self.n_min, coeffs);
        match self.log {
            [0.0, 0.0] => series,
            [re, im] => series.with_log(Complex64::new(re, im)),
        }
    }
}

pub fn load(path: &Path) -> Result<PotentialPair, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let file: PairFile = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let all = file.phi.coeffs.iter().chain(&file.psi.coeffs).flatten();
    if all
        .chain(&file.phi.log)
        .chain(&file.psi.log)
        .any(|c| !c.is_finite())
    {
        return Err(Failure::Input(
            "potential coefficients must be finite".into(),
        ));
    }
    Ok(PotentialPair::new(
        file.phi.into_potential(),
        file.psi.into_potential(),
    )?)
}
