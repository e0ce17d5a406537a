use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::BabiParams;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutedOrder {
    pub order: usize,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderProgress {
    pub order: usize,
    pub frontier: usize,
    pub frontier_nodes: u64,
    /// subtree index -> nodes, for subtrees finished without a witness
    pub done: BTreeMap<usize, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub schema: u32,
    pub params: BabiParams,
    pub v_max: usize,
    pub start: usize,
    pub refuted: Vec<RefutedOrder>,
    pub current: Option<OrderProgress>,
}

impl Checkpoint {
    pub fn new(params: BabiParams, v_max: usize, start: usize) -> Self {
        Checkpoint { schema: 1, params, v_max, start, refuted: Vec::new(), current: None }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let ck: Checkpoint =
            serde_json::from_str(&text).map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
        if ck.schema != 1 {
            return Err(Error::Checkpoint(format!("unsupported schema {}", ck.schema)));
        }
        Ok(ck)
    }

    /// Writes through a sibling temporary file so a crash never leaves a
    /// truncated checkpoint.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string_pretty(self)?)?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn check_matches(&self, params: &BabiParams, v_max: usize, start: usize) -> Result<()> {
        if self.params != *params || self.v_max != v_max || self.start != start {
            return Err(Error::Checkpoint(format!(
                "checkpoint is for {} v_max {} start {}, not {params} v_max {v_max} start {start}",
                self.params, self.v_max, self.start
            )));
        }
        Ok(())
    }
}
