//! Branching-vector arithmetic and the table of branching vectors behind
//! the running-time analysis.

use serde::Serialize;

use crate::error::{Error, Result};

/// Base of the real-cycle branching bound.
pub const REAL_CYCLE_BASE: f64 = 1.15855;
/// Base after interleaving with the kernel.
pub const INTERLEAVED_BASE: f64 = 1.1504;
/// Kernel growth factor used for the interleaving bound.
pub const KERNEL_GROWTH: f64 = 16.0;

const TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Units {
    ExtraDegree,
    Tau,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchingVector {
    pub components: Vec<u32>,
    pub units: Units,
}

impl BranchingVector {
    pub fn new(components: Vec<u32>, units: Units) -> Result<Self> {
        if components.is_empty() || components.contains(&0) {
            return Err(Error::Contract(format!(
                "branching vector needs positive components, got {components:?}"
            )));
        }
        Ok(BranchingVector { components, units })
    }

    pub fn tau(components: &[u32]) -> Result<Self> {
        Self::new(components.to_vec(), Units::Tau)
    }

    pub fn extra_degree(components: &[u32]) -> Result<Self> {
        Self::new(components.to_vec(), Units::ExtraDegree)
    }

    /// Two extra-degrees are worth one real cycle.
    pub fn to_tau_units(&self) -> Result<Self> {
        match self.units {
            Units::Tau => Ok(self.clone()),
            Units::ExtraDegree => {
                if let Some(odd) = self.components.iter().find(|&&a| a % 2 == 1) {
                    return Err(Error::Contract(format!(
                        "component {odd} of {:?} is odd and cannot be halved",
                        self.components
                    )));
                }
                Self::new(self.components.iter().map(|a| a / 2).collect(), Units::Tau)
            }
        }
    }

    pub fn branching_number(&self) -> Result<f64> {
        branching_number(&self.components)
    }
}

/// Σ x^(−a_i); strictly decreasing in x for x > 1.
pub fn characteristic(components: &[u32], x: f64) -> f64 {
    components.iter().map(|&a| x.powi(-(a as i32))).sum()
}

/// The unique root x > 1 of Σ x^(−a_i) = 1, by bisection.
pub fn branching_number(components: &[u32]) -> Result<f64> {
    if components.len() < 2 {
        return Err(Error::Contract(format!(
            "branching vector needs at least two components, got {components:?}"
        )));
    }
    if components.contains(&0) {
        return Err(Error::Contract(format!(
            "branching vector needs positive components, got {components:?}"
        )));
    }
    let mut lo = 1.0 + TOLERANCE;
    // The root never exceeds the number of branches.
    let mut hi = (components.len() as f64).max(2.0);
    while hi - lo > TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if characteristic(components, mid) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Exponent share alpha balancing search against kernel blow-up, and the
/// resulting base `base^(1 − alpha)`.
pub fn interleave_base(base: f64, kernel_growth: f64) -> Result<(f64, f64)> {
    if !(base > 1.0 && kernel_growth > 1.0 && base.is_finite() && kernel_growth.is_finite()) {
        return Err(Error::Contract(format!(
            "interleave_base needs base > 1 and growth > 1, got {base}, {kernel_growth}"
        )));
    }
    let alpha = base.ln() / (kernel_growth.ln() + 2.0 * base.ln());
    Ok((alpha, base.powf(1.0 - alpha)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SubgraphClass {
    G3,
    G4,
    G6,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimedVector {
    pub components: Vec<u32>,
    /// Class of the child subgraph in each branch, when stated.
    pub classes: Vec<SubgraphClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub case_id: &'static str,
    pub description: &'static str,
    pub units: Units,
    pub vectors: Vec<ClaimedVector>,
}

fn v(components: &[u32], classes: &[SubgraphClass]) -> ClaimedVector {
    ClaimedVector {
        components: components.to_vec(),
        classes: classes.to_vec(),
    }
}

/// Every branching vector of the case analysis, in extra-degree units,
/// followed by the combined vectors stated in real-cycle units.
pub fn case_catalog() -> Vec<CatalogEntry> {
    use SubgraphClass::*;
    let ed = |case_id, description, vectors| CatalogEntry {
        case_id,
        description,
        units: Units::ExtraDegree,
        vectors,
    };
    let tau = |case_id, description, vectors| CatalogEntry {
        case_id,
        description,
        units: Units::Tau,
        vectors,
    };
    vec![
        ed(
            "b.1",
            "degree-4 vertex, first subcase",
            vec![v(&[10, 14], &[G4, G3]), v(&[12, 12], &[G4, G3])],
        ),
        ed(
            "b.2",
            "degree-4 vertex, second subcase",
            vec![v(&[10, 16], &[G3, G3]), v(&[12, 14], &[G3, G3])],
        ),
        ed(
            "d",
            "degree-4 vertex next to degree-3 vertices",
            vec![
                v(&[14, 12], &[G4, G3]),
                v(&[10, 16], &[G4, G3]),
                v(&[12, 14], &[G4, G3]),
                v(&[14, 14], &[G3, G3]),
                v(&[10, 18], &[G3, G3]),
                v(&[12, 16], &[G3, G3]),
            ],
        ),
        ed(
            "e.1a",
            "3-regular, triangle-free neighborhood",
            vec![v(&[6, 18], &[G4, G3])],
        ),
        ed(
            "e.1b",
            "3-regular, one inner edge",
            vec![v(&[6, 14], &[G6, G3])],
        ),
        ed(
            "e.1c.i",
            "3-regular, shared neighbor, first option",
            vec![v(&[6, 18], &[G4, G3])],
        ),
        ed(
            "e.1c.ii",
            "3-regular, shared neighbor, second option",
            vec![v(&[6, 24], &[G3, G3])],
        ),
        ed(
            "g",
            "3-regular with four-cycles",
            vec![
                v(&[6, 14], &[G4, G4]),
                v(&[12, 34], &[G4, G3]),
                v(&[34, 12, 10], &[G3, G4, G4]),
            ],
        ),
        ed(
            "j",
            "mirror pair, worst branch",
            vec![v(&[4, 10], &[G4, G4])],
        ),
        ed(
            "j.alt",
            "mirror pair, alternative branch",
            vec![v(&[6, 14], &[G3, G3])],
        ),
        ed(
            "j.1",
            "mirror pair, first refinement",
            vec![v(&[4, 12], &[G4, G4])],
        ),
        ed(
            "j.1a",
            "mirror pair, refinement a",
            vec![v(&[8, 14], &[G3, G3])],
        ),
        ed(
            "j.1b",
            "mirror pair, refinement b",
            vec![v(&[4, 14], &[G4, G4])],
        ),
        ed(
            "j.2",
            "mirror pair, second refinement",
            vec![
                v(&[16, 10], &[]),
                v(&[14, 10], &[]),
                v(&[24, 20, 20, 14], &[]),
            ],
        ),
        tau(
            "combined.worst",
            "worst combined two-way branch",
            vec![v(&[3, 7], &[])],
        ),
        tau(
            "combined.three",
            "combined three-way branch",
            vec![v(&[5, 9, 12], &[])],
        ),
        tau(
            "combined.four",
            "combined four-way branch",
            vec![v(&[22, 19, 6, 5], &[])],
        ),
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalyzedVector {
    pub case_id: &'static str,
    pub units: Units,
    pub vector: Vec<u32>,
    pub classes: Vec<SubgraphClass>,
    pub number: f64,
    /// Root of the vector expressed in real-cycle units.
    pub tau_vector: Vec<u32>,
    pub tau_number: f64,
}

/// Branching numbers for every catalog vector, in both units.
pub fn analyze_catalog() -> Result<Vec<AnalyzedVector>> {
    let mut out = Vec::new();
    for entry in case_catalog() {
        for cv in &entry.vectors {
            let bv = BranchingVector::new(cv.components.clone(), entry.units)?;
            let tv = bv.to_tau_units()?;
            out.push(AnalyzedVector {
                case_id: entry.case_id,
                units: entry.units,
                vector: cv.components.clone(),
                classes: cv.classes.clone(),
                number: bv.branching_number()?,
                tau_number: tv.branching_number()?,
                tau_vector: tv.components,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_roots() {
        assert!((branching_number(&[1, 2]).unwrap() - 1.618_033_988_75).abs() < 1e-9);
        assert!((branching_number(&[1, 1]).unwrap() - 2.0).abs() < 1e-9);
        assert!((branching_number(&[3, 7]).unwrap() - 1.15855).abs() < 1e-4);
        assert!((branching_number(&[5, 9, 12]).unwrap() - 1.1451).abs() < 1e-3);
        assert!((branching_number(&[22, 19, 6, 5]).unwrap() - 1.1574).abs() < 1e-3);
    }

    #[test]
    fn rejects_bad_vectors() {
        assert!(branching_number(&[3]).is_err());
        assert!(branching_number(&[]).is_err());
        assert!(branching_number(&[0, 3]).is_err());
        assert!(BranchingVector::extra_degree(&[3, 4])
            .unwrap()
            .to_tau_units()
            .is_err());
        assert_eq!(
            BranchingVector::extra_degree(&[6, 14])
                .unwrap()
                .to_tau_units()
                .unwrap()
                .components,
            vec![3, 7]
        );
    }

    #[test]
    fn interleave() {
        let (alpha, eff) = interleave_base(1.15855, 16.0).unwrap();
        assert!((alpha - 0.04799).abs() < 1e-4);
        assert!((eff - 1.1504).abs() < 1e-3);
        let (alpha, eff) = interleave_base(2.0, 16.0).unwrap();
        assert!((alpha - 1.0 / 6.0).abs() < 1e-12);
        assert!((eff - 2f64.powf(5.0 / 6.0)).abs() < 1e-12);
        let (alpha, eff) = interleave_base(1.0 + 1e-9, 16.0).unwrap();
        assert!(alpha < 1e-9 && (eff - 1.0).abs() < 1e-8);
        assert!(interleave_base(1.0, 16.0).is_err());
        assert!(interleave_base(1.5, 0.5).is_err());
    }

    #[test]
    fn catalog_entries() {
        let cat = case_catalog();
        let find = |id: &str| cat.iter().find(|e| e.case_id == id).unwrap();
        assert_eq!(find("e.1a").vectors[0].components, vec![6, 18]);
        assert_eq!(find("g").vectors[0].components, vec![6, 14]);
        assert!(find("j.2")
            .vectors
            .iter()
            .any(|v| v.components == vec![24, 20, 20, 14]));
        for a in analyze_catalog().unwrap() {
            assert!(a.number.is_finite() && a.number > 1.0);
            assert!((characteristic(&a.vector, a.number) - 1.0).abs() <= 1e-8);
            assert!((characteristic(&a.tau_vector, a.tau_number) - 1.0).abs() <= 1e-8);
        }
    }

    proptest! {
        #[test]
        fn decreasing_in_each_component(
            comps in prop::collection::vec(1u32..40, 2..6),
            idx in 0usize..6,
            bump in 1u32..10,
        ) {
            let i = idx % comps.len();
            let mut bigger = comps.clone();
            bigger[i] += bump;
            let a = branching_number(&comps).unwrap();
            let b = branching_number(&bigger).unwrap();
            prop_assert!(b < a);
            prop_assert!((characteristic(&comps, a) - 1.0).abs() <= 1e-8);
        }
    }
}
