//! Limits for the exhaustive searches.
//!
//! Every exact routine in this crate is exponential somewhere. The caps keep
//! a misdirected call from running for hours; they can be raised per call or
//! globally through the `DICHOOSE_CAPS` environment variable, e.g.
//! `DICHOOSE_CAPS="orientation_edges=28,list_product=15"`.

use crate::error::{Error, Result};

pub const CAPS_ENV: &str = "DICHOOSE_CAPS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Edge count up to which all `2^|E|` orientations may be enumerated.
    pub orientation_edges: usize,
    /// Vertex count for the exact dichromatic / chromatic number search.
    pub dichromatic_vertices: usize,
    /// Vertex count up to which the backedge colouring uses an exact colouring.
    pub exact_backedge_vertices: usize,
    /// Search nodes allowed in one list-colouring existence search.
    pub list_search_nodes: u64,
    /// Bound on `n * r` for canonical list-assignment enumeration.
    pub list_product: usize,
    /// Number of colourings a full replay enumeration may visit.
    pub colouring_enumeration: u128,
    /// Largest list size `r` for the half-family enumeration in saturation checks.
    pub saturation_max_r: usize,
    /// Vertex count up to which max cut is solved exhaustively.
    pub maxcut_exhaustive_vertices: usize,
    /// Vertex count for the `3^n` subset recursion counting acyclic orientations.
    pub acyclic_dp_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            orientation_edges: 24,
            dichromatic_vertices: 16,
            exact_backedge_vertices: 12,
            list_search_nodes: 100_000_000,
            list_product: 12,
            colouring_enumeration: 10_000_000,
            saturation_max_r: 3,
            maxcut_exhaustive_vertices: 20,
            acyclic_dp_vertices: 16,
        }
    }
}

impl Caps {
    /// Defaults overridden by `DICHOOSE_CAPS`, if set.
    pub fn from_env() -> Result<Caps> {
        match std::env::var(CAPS_ENV) {
            Ok(spec) => Caps::default().with_overrides(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }

    /// Applies `key=value` pairs separated by commas.
    pub fn with_overrides(mut self, spec: &str) -> Result<Caps> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("cap override `{item}` is not key=value")))?;
            let bad = |_| Error::InvalidArgument(format!("cap `{key}` needs an integer, got `{value}`"));
            let value = value.trim();
            match key.trim() {
                "orientation_edges" => self.orientation_edges = value.parse().map_err(bad)?,
                "dichromatic_vertices" => self.dichromatic_vertices = value.parse().map_err(bad)?,
                "exact_backedge_vertices" => self.exact_backedge_vertices = value.parse().map_err(bad)?,
                "list_search_nodes" => self.list_search_nodes = value.parse().map_err(bad)?,
                "list_product" => self.list_product = value.parse().map_err(bad)?,
                "colouring_enumeration" => self.colouring_enumeration = value.parse().map_err(bad)?,
                "saturation_max_r" => self.saturation_max_r = value.parse().map_err(bad)?,
                "maxcut_exhaustive_vertices" => self.maxcut_exhaustive_vertices = value.parse().map_err(bad)?,
                "acyclic_dp_vertices" => self.acyclic_dp_vertices = value.parse().map_err(bad)?,
                other => return Err(Error::InvalidArgument(format!("unknown cap `{other}`"))),
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let caps = Caps::default()
            .with_overrides("orientation_edges=30, list_product=15")
            .unwrap();
        assert_eq!(caps.orientation_edges, 30);
        assert_eq!(caps.list_product, 15);
        assert_eq!(caps.dichromatic_vertices, 16);
    }

    #[test]
    fn unknown_cap_rejected() {
        assert!(Caps::default().with_overrides("bogus=1").is_err());
        assert!(Caps::default().with_overrides("list_product").is_err());
        assert!(Caps::default().with_overrides("list_product=x").is_err());
    }
}
