//! Variable tables: the ordered universe a polynomial ring lives over.
//!
//! A table lists variable descriptors in priority order (earlier entries
//! are larger in every ordering derived from the table). For jet rings
//! the entries are `(layer, row, col)` triples: the whole layer of
//! highest jet order comes first, row-major inside each layer.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

/// One variable of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarInfo {
    /// Jet layer (t-degree) the variable carries, 0 for the base layer.
    pub layer: u32,
    /// 1-based matrix row.
    pub row: u32,
    /// 1-based matrix column.
    pub col: u32,
    /// Display name, e.g. `x[1,2]`.
    pub name: String,
}

/// An ordered list of variables; position is priority (0 = largest).
#[derive(Debug, PartialEq, Eq)]
pub struct VariableTable {
    entries: Vec<VarInfo>,
}

/// Layer names for jet rings: `x`, `y`, `z` when at most three layers
/// exist, `v{s}` otherwise.
fn layer_name(layer: u32, max_layer: u32) -> String {
    if max_layer <= 2 {
        match layer {
            0 => String::from("x"),
            1 => String::from("y"),
            _ => String::from("z"),
        }
    } else {
        format!("v{layer}")
    }
}

impl VariableTable {
    /// Table for the k-th order jets of an m x n matrix: layers k down
    /// to 0, row-major within a layer. For (m, k) = (2, 2) this is
    /// `z[1,1] > ... > z[2,n] > y[1,1] > ... > y[2,n] > x[1,1] > ... > x[2,n]`.
    pub fn jet(m: u32, n: u32, k: u32) -> Arc<Self> {
        assert!(m >= 1 && n >= 1, "matrix shape must be positive");
        let mut entries = Vec::with_capacity(((k + 1) * m * n) as usize);
        for layer in (0..=k).rev() {
            for row in 1..=m {
                for col in 1..=n {
                    entries.push(VarInfo {
                        layer,
                        row,
                        col,
                        name: format!("{}[{},{}]", layer_name(layer, k), row, col),
                    });
                }
            }
        }
        Arc::new(VariableTable { entries })
    }

    /// Table from bare names, highest priority first. Used by tests and
    /// small ad-hoc rings; layer/row/col are filled with placeholders.
    pub fn named(names: &[&str]) -> Arc<Self> {
        let entries = names
            .iter()
            .enumerate()
            .map(|(i, n)| VarInfo {
                layer: 0,
                row: 1,
                col: i as u32 + 1,
                name: String::from(*n),
            })
            .collect();
        Arc::new(VariableTable { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[VarInfo] {
        &self.entries
    }

    pub fn name(&self, index: usize) -> &str {
        &self.entries[index].name
    }

    /// Index of the variable at `(layer, row, col)`, if present.
    pub fn index_of(&self, layer: u32, row: u32, col: u32) -> Option<usize> {
        self.entries
            .iter()
            .position(|v| v.layer == layer && v.row == row && v.col == col)
    }

    /// Index lookup by display name.
    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.entries.iter().position(|v| v.name == name)
    }
}
