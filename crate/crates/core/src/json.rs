//! JSON shapes for blocks and indexed modules.
//!
//! Blocks: `{"cartan": "A3", "lambda": [3], "mu": [1]}`; `cartan` is a type
//! string or a JSON-encoded Cartan matrix. Modules:
//! `{"kind": "Standard", "index": [2,3], "shift": 0, "hshift": 0, "block": {...}}`,
//! with an extra `"mult"` inside multisets.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::blocks::BlockDescriptor;
use crate::coxeter::{CartanDatum, ParabolicSubset};
use crate::error::{Error, Result};
use crate::functor_calculus::{GradedMultiset, IndexedModule, ModuleKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub cartan: String,
    #[serde(default)]
    pub lambda: Vec<usize>,
    #[serde(default)]
    pub mu: Vec<usize>,
}

impl BlockJson {
    pub fn from_block(b: &BlockDescriptor) -> Self {
        BlockJson { cartan: b.cartan().label().to_string(), lambda: b.lambda().to_vec(), mu: b.mu().to_vec() }
    }

    /// Build the block, reusing `cartan` when its label matches.
    pub fn to_block(&self, cartan: Option<&Arc<CartanDatum>>) -> Result<BlockDescriptor> {
        let c = match cartan {
            Some(c) if c.label() == self.cartan => c.clone(),
            _ => Arc::new(CartanDatum::parse(&self.cartan)?),
        };
        BlockDescriptor::new(c, ParabolicSubset::new(self.lambda.iter().copied()), ParabolicSubset::new(self.mu.iter().copied()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub kind: ModuleKind,
    pub index: Vec<usize>,
    #[serde(default)]
    pub shift: i64,
    #[serde(default)]
    pub hshift: i64,
    pub block: BlockJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<u64>,
}

impl ModuleJson {
    pub fn from_module(m: &IndexedModule) -> Self {
        ModuleJson {
            kind: m.kind,
            index: m.word(),
            shift: m.shift,
            hshift: m.hshift,
            block: BlockJson::from_block(&m.block),
            mult: None,
        }
    }

    pub fn to_module(&self, cartan: Option<&Arc<CartanDatum>>) -> Result<IndexedModule> {
        let block = self.block.to_block(cartan)?;
        let index = block.cartan().from_word(&self.index)?;
        Ok(IndexedModule::new(block, self.kind, index)?.grade(self.shift).hom_shift(self.hshift))
    }
}

pub fn multiset_to_json(ms: &GradedMultiset<IndexedModule>) -> Vec<ModuleJson> {
    ms.entries()
        .iter()
        .map(|(m, k)| ModuleJson { mult: Some(*k), ..ModuleJson::from_module(m) })
        .collect()
}

pub fn multiset_from_json(v: &[ModuleJson], cartan: Option<&Arc<CartanDatum>>) -> Result<GradedMultiset<IndexedModule>> {
    let mut out = GradedMultiset::zero();
    for m in v {
        let mult = m.mult.unwrap_or(1);
        if mult == 0 {
            return Err(Error::Parse("multiplicities must be positive".into()));
        }
        out.add(m.to_module(cartan)?, mult);
    }
    Ok(out)
}
