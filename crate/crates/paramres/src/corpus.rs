//! Ring specs shipped with the crate.

use crate::error::{HarnessError, Result};
use crate::spec::LoadedRing;

pub const R1: &str = include_str!("../corpus/r1.ring");
pub const R2: &str = include_str!("../corpus/r2.ring");
pub const REGULAR: &str = include_str!("../corpus/regular.ring");
pub const HYPERSURFACE: &str = include_str!("../corpus/hypersurface.ring");
pub const NON_FLC: &str = include_str!("../corpus/non_flc.ring");

pub const NAMES: [&str; 5] = ["r1", "r2", "regular", "hypersurface", "non_flc"];

pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "r1" => R1,
        "r2" => R2,
        "regular" => REGULAR,
        "hypersurface" => HYPERSURFACE,
        "non_flc" => NON_FLC,
        _ => return None,
    })
}

pub fn load(name: &str) -> Result<LoadedRing> {
    let text = source(name).ok_or_else(|| HarnessError::UnknownRing(name.to_string()))?;
    LoadedRing::parse(text).map_err(|source| HarnessError::Spec {
        path: format!("<builtin {name}>"),
        source,
    })
}

/// Every shipped ring, in [`NAMES`] order.
pub fn all() -> Vec<(&'static str, LoadedRing)> {
    NAMES.iter().map(|&n| (n, load(n).expect("shipped specs parse"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_specs_load() {
        let dims: Vec<i32> = all().iter().map(|(_, r)| r.ring.dimension()).collect();
        assert_eq!(dims, vec![2, 2, 2, 2, 3]);
        assert!(matches!(load("nope"), Err(HarnessError::UnknownRing(_))));
    }
}
