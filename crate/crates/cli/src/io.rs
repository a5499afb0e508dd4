//! JSON instance and witness formats.

use std::fs;
use std::path::Path;

use dichro_core::{AcyclicCover, Digraph, ExtensionFamily, QuasiOrder};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

/// Order or digraph instance, distinguished by the `kind` field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Instance {
    /// Reflexive pairs are implied; with `closure` the pairs are closed
    /// transitively, otherwise they must already be transitive.
    #[serde(rename = "quasi")]
    Quasi {
        n: usize,
        pairs: Vec<[usize; 2]>,
        #[serde(default)]
        closure: bool,
    },
    #[serde(rename = "digraph")]
    Digraph { n: usize, edges: Vec<[usize; 2]> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverFile {
    pub classes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFile {
    pub extensions: Vec<Vec<[usize; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaFile {
    pub sigma: Vec<usize>,
}

pub fn tuples(pairs: &[[usize; 2]]) -> Vec<(usize, usize)> {
    pairs.iter().map(|p| (p[0], p[1])).collect()
}

pub fn arrays(pairs: &[(usize, usize)]) -> Vec<[usize; 2]> {
    pairs.iter().map(|&(a, b)| [a, b]).collect()
}

impl Instance {
    pub fn from_order(q: &QuasiOrder) -> Self {
        Instance::Quasi { n: q.n(), pairs: arrays(&q.off_diagonal_pairs()), closure: false }
    }

    pub fn from_digraph(d: &Digraph) -> Self {
        Instance::Digraph { n: d.n(), edges: arrays(&d.edges()) }
    }

    pub fn to_order(&self) -> Result<QuasiOrder, CliError> {
        match self {
            Instance::Quasi { n, pairs, closure } => Ok(QuasiOrder::make(*n, &tuples(pairs), *closure)?),
            Instance::Digraph { .. } => Err(CliError::Usage("expected an order, found a digraph".into())),
        }
    }

    pub fn to_digraph(&self) -> Result<Digraph, CliError> {
        match self {
            Instance::Digraph { n, edges } => Ok(Digraph::new(*n, &tuples(edges))?),
            Instance::Quasi { .. } => Err(CliError::Usage("expected a digraph, found an order".into())),
        }
    }
}

pub fn family_file(fam: &ExtensionFamily) -> FamilyFile {
    FamilyFile { extensions: fam.exts.iter().map(|e| arrays(&e.off_diagonal_pairs())).collect() }
}

pub fn family_from_file(base: &QuasiOrder, f: &FamilyFile) -> Result<ExtensionFamily, CliError> {
    let exts = f
        .extensions
        .iter()
        .map(|pairs| QuasiOrder::make(base.n(), &tuples(pairs), false))
        .collect::<dichro_core::Result<Vec<_>>>()?;
    Ok(ExtensionFamily { base: base.clone(), exts })
}

pub fn cover_file(c: &AcyclicCover) -> CoverFile {
    CoverFile { classes: c.classes.clone() }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn read_order(path: &Path) -> Result<QuasiOrder, CliError> {
    read_json::<Instance>(path)?.to_order()
}

pub fn read_digraph(path: &Path) -> Result<Digraph, CliError> {
    read_json::<Instance>(path)?.to_digraph()
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

/// Parses `2,3,4` (spaces allowed).
pub fn parse_list(s: &str) -> Result<Vec<usize>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("not a number: {t:?}"))))
        .collect()
}
