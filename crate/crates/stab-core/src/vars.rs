//! Variable registry shared by all symbolic expressions.
//!
//! Variables are ordered; the order fixes the lexicographic term order of
//! [`crate::laurent::LaurentExpr`] and hence every serialized artifact.
//! The torus-A sublist determines the lattice into which Newton polytopes
//! are projected.

use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// What role a variable plays in the equivariant setup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VarKind {
    /// Equivariant parameter of the torus A (one per framing block).
    TorusA { block: usize },
    /// Flavour parameter (e.g. the scaling character of the out-framing).
    Flavour,
    /// Chern root of the gauge group at `node`, slot `index`.
    GaugeRoot { node: usize, index: usize },
    /// Residual Chern root surviving on a positive-dimensional fixed locus.
    Auxiliary { node: usize, index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarInfo {
    pub name: String,
    pub kind: VarKind,
}

/// Ordered list of variable descriptors. Names are unique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableRegistry {
    vars: Vec<VarInfo>,
}

impl VariableRegistry {
    pub fn new(vars: Vec<VarInfo>) -> Self {
        let mut names: Vec<&str> = vars.iter().map(|v| v.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), vars.len(), "duplicate variable names");
        VariableRegistry { vars }
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn info(&self, idx: usize) -> &VarInfo {
        &self.vars[idx]
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.vars[idx].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    /// Indices of the torus-A variables, in registry order.
    pub fn torus_a_indices(&self) -> Vec<usize> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(_, v)| matches!(v.kind, VarKind::TorusA { .. }))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn gauge_root(&self, node: usize, index: usize) -> Option<usize> {
        self.vars
            .iter()
            .position(|v| v.kind == VarKind::GaugeRoot { node, index })
    }

    pub fn auxiliary_root(&self, node: usize, index: usize) -> Option<usize> {
        self.vars
            .iter()
            .position(|v| v.kind == VarKind::Auxiliary { node, index })
    }

    pub fn is_auxiliary(&self, idx: usize) -> bool {
        matches!(self.vars[idx].kind, VarKind::Auxiliary { .. })
    }

    pub fn is_gauge(&self, idx: usize) -> bool {
        matches!(self.vars[idx].kind, VarKind::GaugeRoot { .. })
    }
}

pub type Registry = Arc<VariableRegistry>;

/// Convenience builder used by tests and the quiver layer.
pub struct RegistryBuilder {
    vars: Vec<VarInfo>,
}

impl RegistryBuilder {
    pub fn new() -> Self {
        RegistryBuilder { vars: Vec::new() }
    }

    pub fn torus_a(mut self, name: &str, block: usize) -> Self {
        self.vars.push(VarInfo {
            name: name.to_string(),
            kind: VarKind::TorusA { block },
        });
        self
    }

    pub fn flavour(mut self, name: &str) -> Self {
        self.vars.push(VarInfo {
            name: name.to_string(),
            kind: VarKind::Flavour,
        });
        self
    }

    pub fn gauge(mut self, name: &str, node: usize, index: usize) -> Self {
        self.vars.push(VarInfo {
            name: name.to_string(),
            kind: VarKind::GaugeRoot { node, index },
        });
        self
    }

    pub fn auxiliary(mut self, name: &str, node: usize, index: usize) -> Self {
        self.vars.push(VarInfo {
            name: name.to_string(),
            kind: VarKind::Auxiliary { node, index },
        });
        self
    }

    pub fn build(self) -> Registry {
        Arc::new(VariableRegistry::new(self.vars))
    }
}

impl Default for RegistryBuilder {
    fn default() -> Self {
        Self::new()
    }
}
