//! JSON catalog format for Lie algebras, and the fixtures shipped with the
//! crate.
//!
//! ```json
//! {"name": "heis3", "dim": 3, "basis": ["X", "Y", "Z"], "real": true,
//!  "brackets": [{"i": 0, "j": 1, "coeffs": {"Z": {"re": "-1", "im": "0"}}}]}
//! ```
//!
//! Only `i < j` nonzero brackets are listed; the loader fills in the rest by
//! antisymmetry. An optional `cr_structures` list holds named CR structures,
//! either as `{"k": [complex vectors]}` or as `{"D": [vectors], "J": matrix}`
//! where column `a` of `J` holds the coordinates of `J d_a` in the `D` basis,
//! each with an optional contact form `phi` given by its values on the basis.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::liealg::{LieAlgebra, LieError};
use crate::scalar::GaussRational;

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed catalog JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("unknown builtin catalog {0:?}")]
    UnknownBuiltin(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, GaussRational>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CrSpecBody {
    Pair {
        #[serde(rename = "D")]
        d: Vec<Vec<GaussRational>>,
        #[serde(rename = "J")]
        j: Vec<Vec<GaussRational>>,
    },
    Sub { k: Vec<Vec<GaussRational>> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrSpec {
    pub name: String,
    #[serde(flatten)]
    pub body: CrSpecBody,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<GaussRational>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub real: bool,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cr_structures: Vec<CrSpec>,
}

impl CatalogFile {
    pub fn parse(json: &str) -> Result<Self, CatalogError> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn load(path: &Path) -> Result<Self, CatalogError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CatalogError::Io { path: path.display().to_string(), source })?;
        CatalogFile::parse(&text)
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra, CatalogError> {
        if self.dim != self.basis.len() {
            return Err(CatalogError::Schema(format!(
                "dim {} but {} basis names",
                self.dim,
                self.basis.len()
            )));
        }
        let index = |name: &str| {
            self.basis
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| CatalogError::Schema(format!("unknown basis name {name:?}")))
        };
        let mut brackets = Vec::new();
        for e in &self.brackets {
            if e.i >= e.j || e.j >= self.dim {
                return Err(CatalogError::Schema(format!(
                    "bracket entry ({}, {}) must satisfy i < j < dim",
                    e.i, e.j
                )));
            }
            let mut terms = Vec::new();
            for (name, c) in &e.coeffs {
                terms.push((index(name)?, c.clone()));
            }
            brackets.push((e.i, e.j, terms));
        }
        let names: Vec<&str> = self.basis.iter().map(String::as_str).collect();
        Ok(LieAlgebra::from_brackets(self.name.clone(), &names, self.real, &brackets)?)
    }

    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms = g.bracket_terms(i, j);
                if terms.is_empty() {
                    continue;
                }
                let coeffs = terms.iter().map(|(k, c)| (g.basis_names()[*k].clone(), c.clone())).collect();
                brackets.push(BracketEntry { i, j, coeffs });
            }
        }
        CatalogFile {
            name: g.name().to_string(),
            dim: n,
            basis: g.basis_names().to_vec(),
            real: g.is_real(),
            brackets,
            cr_structures: Vec::new(),
        }
    }

    pub fn cr_structure(&self, name: &str) -> Option<&CrSpec> {
        self.cr_structures.iter().find(|c| c.name == name)
    }
}

macro_rules! builtin_table {
    ($($name:literal),* $(,)?) => {
        /// Names of the fixtures compiled into the crate.
        pub const BUILTIN_NAMES: &[&str] = &[$($name),*];

        fn builtin_source(name: &str) -> Option<&'static str> {
            match name {
                $($name => Some(include_str!(concat!("../catalog/", $name, ".json"))),)*
                _ => None,
            }
        }
    };
}

builtin_table!(
    "su2",
    "sl2R",
    "u2",
    "gl2R",
    "heis3",
    "heis5",
    "heis7",
    "R_plus_heis3",
    "R_plus_heis5",
    "R_plus_heis7",
    "aff_plus_R",
    "l0",
    "l1",
    "l2",
    "r2_equal",
    "r4_equal",
    "abelian3",
    "broken_heis3",
);

/// Fixtures that are expected to satisfy Jacobi.
pub fn valid_builtin_names() -> impl Iterator<Item = &'static str> {
    BUILTIN_NAMES.iter().copied().filter(|n| *n != "broken_heis3")
}

pub fn builtin_file(name: &str) -> Result<CatalogFile, CatalogError> {
    let src = builtin_source(name).ok_or_else(|| CatalogError::UnknownBuiltin(name.to_string()))?;
    CatalogFile::parse(src)
}

pub fn builtin(name: &str) -> Result<LieAlgebra, CatalogError> {
    builtin_file(name)?.to_algebra()
}

/// Loads a catalog by builtin name or file path.
pub fn resolve(spec: &str) -> Result<CatalogFile, CatalogError> {
    if let Some(stem) = spec.strip_prefix("builtin:") {
        return builtin_file(stem);
    }
    let path = Path::new(spec);
    if path.exists() {
        return CatalogFile::load(path);
    }
    builtin_file(spec.trim_end_matches(".json"))
}
