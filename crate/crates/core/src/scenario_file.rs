//! JSON scenario files: one optional section per module plus expected values.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::disk_model::{DiskError, DiskPattern};
use crate::reductions::{CanState, IntersectionInventory, InventoryCurve, ReductionError};
use crate::scenarios::GluingGraph;
use crate::shift_calculus::{EulerData, ShiftError, Side, SideSystem};
use crate::surface_complex::{ComplexError, PatchComplex};
use crate::Provenance;

pub const SCENARIO_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("cannot parse scenario: {0}")]
    Parse(serde_json::Error),
    #[error("unsupported scenario version {found}; expected {expected}")]
    Version { found: u32, expected: u32 },
    #[error("scenario `{name}` has no `{section}` section")]
    MissingSection { name: String, section: &'static str },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Disk(#[from] DiskError),
    #[error(transparent)]
    Shift(#[from] ShiftError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

impl From<serde_json::Error> for ScenarioError {
    fn from(e: serde_json::Error) -> Self {
        ScenarioError::Parse(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected<T> {
    pub value: T,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// `genus = constant + slope * copies`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenusLaw {
    pub constant: i64,
    pub slope: i64,
}

impl GenusLaw {
    pub fn at(&self, copies: u64) -> i64 {
        self.constant + self.slope * copies as i64
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<Expected<GenusLaw>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connected: Option<Expected<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arc_count: Option<Expected<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_count: Option<Expected<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub big_n: Option<Expected<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub removed: Option<Expected<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Expected<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_prime: Option<Expected<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Expected<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub handlebody_genus: Option<Expected<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SideSpec {
    pub alpha_count: u64,
    /// Crossing words, `+1`/`-1` per α-arc crossed.
    pub betas: Vec<Vec<i8>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SidesSection {
    /// Boundary stack count `h` of the disk pattern these sides go with.
    pub h: u64,
    pub prime: SideSpec,
    pub dblprime: SideSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<EulerData>,
}

impl SidesSection {
    pub fn systems(&self) -> Result<(SideSystem, SideSystem), ShiftError> {
        Ok((
            SideSystem::from_words(Side::Prime, self.prime.betas.clone(), self.prime.alpha_count)?,
            SideSystem::from_words(Side::DoublePrime, self.dblprime.betas.clone(), self.dblprime.alpha_count)?,
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InventorySection {
    pub curves: Vec<InventoryCurve>,
    pub n: u64,
    /// Attach the file's patch complex so rewrites are checked against it.
    #[serde(default)]
    pub attach_complex: bool,
    /// `χ(H)` for the solid-torus sweep.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler_h: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cans: Option<CanState>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub patch_complex: Option<PatchComplex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disk_pattern: Option<DiskPattern>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sides: Option<SidesSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inventory: Option<InventorySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gluing_graph: Option<GluingGraph>,
    #[serde(default)]
    pub expectations: Expectations,
}

impl ScenarioFile {
    pub fn from_json(text: &str) -> Result<Self, ScenarioError> {
        let file: Self = serde_json::from_str(text)?;
        if file.version != SCENARIO_VERSION {
            return Err(ScenarioError::Version {
                found: file.version,
                expected: SCENARIO_VERSION,
            });
        }
        if let Some(pc) = &file.patch_complex {
            pc.validate()?;
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario files always serialize")
    }

    fn missing(&self, section: &'static str) -> ScenarioError {
        ScenarioError::MissingSection {
            name: self.name.clone(),
            section,
        }
    }

    pub fn patch_complex(&self) -> Result<&PatchComplex, ScenarioError> {
        self.patch_complex.as_ref().ok_or_else(|| self.missing("patch_complex"))
    }

    pub fn disk_pattern(&self) -> Result<&DiskPattern, ScenarioError> {
        self.disk_pattern.as_ref().ok_or_else(|| self.missing("disk_pattern"))
    }

    pub fn sides(&self) -> Result<&SidesSection, ScenarioError> {
        self.sides.as_ref().ok_or_else(|| self.missing("sides"))
    }

    pub fn inventory_section(&self) -> Result<&InventorySection, ScenarioError> {
        self.inventory.as_ref().ok_or_else(|| self.missing("inventory"))
    }

    pub fn gluing_graph(&self) -> Result<&GluingGraph, ScenarioError> {
        self.gluing_graph.as_ref().ok_or_else(|| self.missing("gluing_graph"))
    }

    /// The inventory, with the patch complex attached when requested.
    pub fn inventory(&self) -> Result<IntersectionInventory, ScenarioError> {
        let sec = self.inventory_section()?;
        let mut inv = IntersectionInventory::new(sec.curves.clone(), sec.n);
        if sec.attach_complex {
            inv = inv.with_complex(self.patch_complex()?.clone());
        }
        inv.validate()?;
        Ok(inv)
    }
}

/// Scenario files shipped with the crate.
pub mod shipped {
    pub const CASSON_GORDON_M5: &str = include_str!("../scenarios/casson_gordon_m5.json");
    pub const DOUBLED_HANDLEBODY: &str = include_str!("../scenarios/doubled_handlebody.json");
    pub const TORUS_M3: &str = include_str!("../scenarios/torus_m3.json");
    pub const DISK_SHIFTS: &str = include_str!("../scenarios/disk_shifts.json");
    pub const TUNA_CANS: &str = include_str!("../scenarios/tuna_cans.json");

    pub const ALL: [(&str, &str); 5] = [
        ("casson_gordon_m5", CASSON_GORDON_M5),
        ("doubled_handlebody", DOUBLED_HANDLEBODY),
        ("torus_m3", TORUS_M3),
        ("disk_shifts", DISK_SHIFTS),
        ("tuna_cans", TUNA_CANS),
    ];
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_files_load() {
        for (name, text) in shipped::ALL {
            let f = ScenarioFile::from_json(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(f.name, name);
            let again = ScenarioFile::from_json(&f.to_json()).unwrap();
            assert_eq!(again, f);
        }
    }

    #[test]
    fn rejects_unknown_sections_and_versions() {
        let bad = r#"{"version": 1, "name": "x", "mystery": {}}"#;
        assert!(matches!(ScenarioFile::from_json(bad), Err(ScenarioError::Parse(_))));
        let old = r#"{"version": 7, "name": "x"}"#;
        assert!(matches!(ScenarioFile::from_json(old), Err(ScenarioError::Version { found: 7, .. })));
        let empty = ScenarioFile::from_json(r#"{"version": 1, "name": "x"}"#).unwrap();
        assert!(matches!(empty.patch_complex(), Err(ScenarioError::MissingSection { .. })));
    }
}
