//! Scenario files: a product-quotient surface, optionally with the building
//! data of its cover of the quadric and the hand-supplied parts of the
//! obstruction model.
//!
//! ```json
//! {"name": "example1", "n": 4,
//!  "curves": [{"monodromy": [1,1,1,1]}, {"monodromy": [1,1,1,1]}],
//!  "twist": 3, "subgroup_order": 4,
//!  "building_data": {"components": {"1": [4,4]}},
//!  "ob_model": {"z": 0}}
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::curvecover::CoverSpec;
use crate::error::{Error, Result};
use crate::exactnum::residue;
use crate::pardini::{solve_building_data, BiDegree, BuildingData};
use crate::pqsurface::PQSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Curve {
    pub monodromy: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildingDataSpec {
    pub components: BTreeMap<i64, BiDegree>,
}

/// Parts of the obstruction model that come from hand computations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObSupplement {
    pub z: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k1: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k2: Option<i64>,
}

impl ObSupplement {
    pub fn kernels(&self) -> Option<(i64, i64)> {
        match (self.k1, self.k2) {
            (Some(a), Some(b)) => Some((a, b)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub n: i64,
    pub curves: [Curve; 2],
    pub twist: i64,
    pub subgroup_order: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub building_data: Option<BuildingDataSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ob_model: Option<ObSupplement>,
}

pub const BUILTIN_NAMES: [&str; 4] = ["example1", "example2", "example3", "Y"];

fn builtin_raw(name: &str) -> Option<Scenario> {
    let simple = || Curve { monodromy: vec![1, 1, 1, 1] };
    let components = |c: &[(i64, (i64, i64))]| {
        Some(BuildingDataSpec {
            components: c.iter().map(|&(m, (a, b))| (m, BiDegree::new(a, b))).collect(),
        })
    };
    let (curve2, twist, d, bd, ob) = match name {
        "example1" => (simple(), 3, 4, components(&[(1, (4, 4))]), Some(0)),
        "example2" => (simple(), 1, 4, components(&[(1, (4, 0)), (3, (0, 4))]), None),
        "example3" => (
            Curve { monodromy: vec![1, 1, 3, 3] },
            1,
            4,
            components(&[(1, (2, 2)), (3, (2, 2))]),
            None,
        ),
        "Y" => (simple(), 3, 2, None, Some(8)),
        _ => return None,
    };
    Some(Scenario {
        name: name.to_string(),
        n: 4,
        curves: [simple(), curve2],
        twist,
        subgroup_order: d,
        building_data: bd,
        ob_model: ob.map(|z| ObSupplement { z, k1: None, k2: None }),
    })
}

/// One of the built-in scenarios, by name.
pub fn builtin(name: &str) -> Option<Scenario> {
    builtin_raw(name).map(|s| s.validated().expect("built-in scenarios are valid"))
}

impl Scenario {
    pub fn from_json(src: &str) -> Result<Scenario> {
        let raw: Scenario = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
        raw.validated()
    }

    /// Reduces residues and checks every constraint, naming the violated one.
    pub fn validated(mut self) -> Result<Scenario> {
        let n = self.n;
        if n < 2 {
            return Err(Error::Validation(format!("n: must be >= 2, got {n}")));
        }
        for (i, c) in self.curves.iter_mut().enumerate() {
            let cover = CoverSpec::new(n, c.monodromy.clone())
                .map_err(|e| Error::Validation(format!("curves[{i}].monodromy: {e}")))?;
            c.monodromy = cover.monodromy().to_vec();
        }
        self.twist = residue(self.twist, n);
        if let Some(bd) = &mut self.building_data {
            bd.components = bd.components.iter().map(|(&m, &d)| (residue(m, n), d)).collect();
        }
        self.spec().map_err(|e| Error::Validation(format!("twist/subgroup_order: {e}")))?;
        self.building_data()
            .map_err(|e| Error::Validation(format!("building_data: {e}")))?;
        if let Some(ob) = &self.ob_model {
            if ob.z < 0 || ob.k1.is_some_and(|k| k < 0) || ob.k2.is_some_and(|k| k < 0) {
                return Err(Error::Validation("ob_model: entries must be non-negative".into()));
            }
            if ob.k1.is_some() != ob.k2.is_some() {
                return Err(Error::Validation("ob_model: give both k1 and k2 or neither".into()));
            }
        }
        Ok(self)
    }

    pub fn spec(&self) -> Result<PQSpec> {
        PQSpec::new(
            CoverSpec::new(self.n, self.curves[0].monodromy.clone())?,
            CoverSpec::new(self.n, self.curves[1].monodromy.clone())?,
            self.twist,
            self.subgroup_order,
        )
    }

    pub fn building_data(&self) -> Result<Option<BuildingData>> {
        self.building_data
            .as_ref()
            .map(|b| solve_building_data(self.n, &b.components))
            .transpose()
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("scenario serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}

/// Loads a built-in scenario by name, or a JSON scenario file by path.
pub fn load_scenario(name_or_path: &str) -> Result<Scenario> {
    if let Some(s) = builtin(name_or_path) {
        return Ok(s);
    }
    let path = Path::new(name_or_path);
    if !path.exists() {
        return Err(Error::Io(format!(
            "{name_or_path}: no such file and not a built-in scenario (one of {})",
            BUILTIN_NAMES.join(", ")
        )));
    }
    let src = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{name_or_path}: {e}")))?;
    Scenario::from_json(&src)
}
