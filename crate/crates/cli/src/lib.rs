//! Command-line front end and local HTTP service for the workbench.

pub mod cli;
pub mod service;

use std::sync::OnceLock;

use cgw_core::catalog::{family_ground, id_ground_size, Catalog, CatalogRecord};
use cgw_core::{Error, FamilyMask, Result};

/// Catalogs for every ground size, each built on first use.
#[derive(Debug, Default)]
pub struct Catalogs {
    slots: [OnceLock<Catalog>; 5],
}

impl Catalogs {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build every catalog now (the service does this before it binds).
    pub fn preload(self) -> Result<Self> {
        for n in 1..=5 {
            self.get(n)?;
        }
        Ok(self)
    }

    pub fn get(&self, n: usize) -> Result<&Catalog> {
        let slot = n.checked_sub(1).and_then(|i| self.slots.get(i)).ok_or(Error::GroundSize(n))?;
        if let Some(c) = slot.get() {
            return Ok(c);
        }
        let built = Catalog::build(n)?;
        Ok(slot.get_or_init(|| built))
    }

    pub fn record(&self, id: &str) -> Result<&CatalogRecord> {
        let n = id_ground_size(id)?;
        self.get(n).map_err(|_| Error::UnknownId(id.to_string()))?.get(id).ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    /// The catalog record isomorphic to `mask`, with the permutation taking `mask` onto it.
    pub fn by_mask(&self, mask: u64) -> Result<(&CatalogRecord, Vec<usize>)> {
        let ground = family_ground(mask)?;
        let family = FamilyMask(mask as u32);
        cgw_core::ConvexGeometry::new(ground, family)?;
        self.get(ground.len())?
            .find_isomorphic(family)
            .ok_or(Error::NotConvexGeometry(family.0))
    }
}
