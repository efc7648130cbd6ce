//! The assembled identity catalog.
//!
//! Iterating [`registry`] yields every checkable identity exactly once;
//! ids are stable kebab-case tokens. Entries flagged `default_quarantined`
//! are printed spellings kept for demonstration and excluded from default
//! verification runs.

use super::{classics, kernel, lemma_entries, ratio_weights, u_weights, v_weights, Identity};
use std::sync::OnceLock;

static REGISTRY: OnceLock<Vec<Identity>> = OnceLock::new();

/// The complete, ordered identity catalog.
pub fn registry() -> &'static [Identity] {
    REGISTRY.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(kernel::entries());
        all.extend(lemma_entries::entries());
        all.extend(ratio_weights::entries());
        all.extend(u_weights::entries());
        all.extend(v_weights::entries());
        all.extend(classics::entries());
        all
    })
}

/// Look up an identity by its stable id.
pub fn find(id: &str) -> Option<&'static Identity> {
    registry().iter().find(|e| e.id == id)
}
