//! InputSpec parsing and validation. All rationals are "num/den" strings;
//! indices into the simple system are 1-based in the file format.

use std::path::Path;

use anyhow::{bail, Context, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use serde::Deserialize;

use endoscopy_core::cohomology::GammaLattice;
use endoscopy_core::endoscopy::TorsionDualElement;
use endoscopy_core::matrix::IntMatrix;
use endoscopy_core::root_datum::{
    based_automorphism_from_permutation, build_named, weyl_from_word, BasedAutomorphism,
    RootDatum, WeylElement,
};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    version: u32,
    datum: RawDatum,
    #[serde(default)]
    theta: Option<RawTheta>,
    #[serde(default)]
    omega: Option<Vec<usize>>,
    #[serde(default)]
    q: Option<Vec<String>>,
    #[serde(default)]
    m_override: Option<usize>,
    #[serde(default)]
    lattice_jobs: Option<Vec<RawLatticeJob>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawDatum {
    Named(String),
    Explicit { rank: usize, simple_roots: Vec<Vec<i64>>, simple_coroots: Vec<Vec<i64>> },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawTheta {
    Permutation(Vec<usize>),
    Matrix { matrix: Vec<Vec<i64>> },
}

#[derive(Deserialize)]
struct RawLatticeJob {
    sigma: Vec<Vec<i64>>,
    m: usize,
}

pub struct AnalyzeJob {
    pub datum_name: String,
    pub datum: RootDatum,
    pub theta: BasedAutomorphism,
    pub omega: WeylElement,
    pub q: TorsionDualElement,
    pub m_override: Option<usize>,
    pub lattice_jobs: Vec<GammaLattice>,
    /// The parsed file, echoed verbatim into reports.
    pub echo: serde_json::Value,
}

pub fn load(path: &Path) -> Result<AnalyzeJob> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let echo: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let raw: RawInput =
        serde_json::from_value(echo.clone()).with_context(|| format!("parsing {}", path.display()))?;
    if raw.version != 1 {
        bail!("version: expected 1, got {}", raw.version);
    }
    let (datum_name, datum) = match &raw.datum {
        RawDatum::Named(name) => (name.clone(), build_named(name).context("datum")?),
        RawDatum::Explicit { rank, simple_roots, simple_coroots } => {
            let to_big = |rows: &Vec<Vec<i64>>, at: &str| -> Result<Vec<Vec<BigInt>>> {
                for (i, r) in rows.iter().enumerate() {
                    if r.len() != *rank {
                        bail!("{at}[{i}]: length {} does not match rank {rank}", r.len());
                    }
                }
                Ok(rows
                    .iter()
                    .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                    .collect())
            };
            let roots = to_big(simple_roots, "datum.simple_roots")?;
            let coroots = to_big(simple_coroots, "datum.simple_coroots")?;
            ("explicit".to_string(), RootDatum::from_simples(roots, coroots).context("datum")?)
        }
    };
    let theta = match &raw.theta {
        None => BasedAutomorphism::identity(&datum),
        Some(RawTheta::Permutation(perm)) => {
            let mut zero_based = Vec::with_capacity(perm.len());
            for (i, &p) in perm.iter().enumerate() {
                if p == 0 || p > datum.num_simple() {
                    bail!(
                        "theta[{i}]: index {p} out of range 1..={}",
                        datum.num_simple()
                    );
                }
                zero_based.push(p - 1);
            }
            based_automorphism_from_permutation(&datum, &zero_based).context("theta")?
        }
        Some(RawTheta::Matrix { matrix }) => {
            let n = datum.rank();
            if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
                bail!("theta.matrix: expected a {n}x{n} matrix");
            }
            let flat: Vec<i64> = matrix.iter().flatten().copied().collect();
            BasedAutomorphism::new(&datum, IntMatrix::from_i64(n, n, &flat)).context("theta")?
        }
    };
    let omega = match &raw.omega {
        None => WeylElement::identity(&datum),
        Some(word) => {
            let mut zero_based = Vec::with_capacity(word.len());
            for (i, &w) in word.iter().enumerate() {
                if w == 0 || w > datum.num_simple() {
                    bail!("omega[{i}]: index {w} out of range 1..={}", datum.num_simple());
                }
                zero_based.push(w - 1);
            }
            weyl_from_word(&datum, &zero_based).context("omega")?
        }
    };
    let q = match &raw.q {
        None => TorsionDualElement::zero(datum.rank()),
        Some(coords) => {
            if coords.len() != datum.rank() {
                bail!("q: expected {} coordinates, got {}", datum.rank(), coords.len());
            }
            let mut parsed = Vec::with_capacity(coords.len());
            for (i, s) in coords.iter().enumerate() {
                parsed.push(parse_rational(s, &format!("q[{i}]"))?);
            }
            TorsionDualElement::new(parsed)
        }
    };
    if let Some(m) = raw.m_override {
        if m == 0 {
            bail!("m_override: must be at least 1");
        }
    }
    let mut lattice_jobs = Vec::new();
    for (i, job) in raw.lattice_jobs.iter().flatten().enumerate() {
        let n = job.sigma.len();
        if job.sigma.iter().any(|r| r.len() != n) {
            bail!("lattice_jobs[{i}].sigma: not a square matrix");
        }
        let flat: Vec<i64> = job.sigma.iter().flatten().copied().collect();
        let sigma = IntMatrix::from_i64(n, n, &flat);
        let lat = GammaLattice::new(sigma, job.m)
            .with_context(|| format!("lattice_jobs[{i}]"))?;
        lattice_jobs.push(lat);
    }
    Ok(AnalyzeJob {
        datum_name,
        datum,
        theta,
        omega,
        q,
        m_override: raw.m_override,
        lattice_jobs,
        echo,
    })
}

/// Parses "num/den" or "num" into an exact rational, with the field path in
/// any diagnostic.
pub fn parse_rational(s: &str, at: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        None => (s.trim(), "1"),
        Some((n, d)) => (n.trim(), d.trim()),
    };
    let n: BigInt = num
        .parse()
        .with_context(|| format!("{at}: invalid rational '{s}'"))?;
    let d: BigInt = den
        .parse()
        .with_context(|| format!("{at}: invalid rational '{s}'"))?;
    if d.is_zero() {
        bail!("{at}: invalid rational '{s}': zero denominator");
    }
    Ok(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("1/2", "q[0]").unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_rational("-3", "q[0]").unwrap(), BigRational::from_integer((-3).into()));
        let err = parse_rational("1/0", "q[0]").unwrap_err();
        assert!(format!("{err:#}").contains("q[0]"));
        assert!(parse_rational("x/2", "q[1]").is_err());
    }
}
