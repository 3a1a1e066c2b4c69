//! Named example brackets, shipped as bracket files under `catalog/`.

use super::{parse_bracket_file, PoissonStructure};
use crate::error::{Error, Result};

const ENTRIES: &[(&str, &str)] = &[
    ("constant-sympl-2", include_str!("../../catalog/constant-sympl-2.bracket")),
    ("constant-4", include_str!("../../catalog/constant-4.bracket")),
    ("linear-sl2", include_str!("../../catalog/linear-sl2.bracket")),
    ("affine-sl2", include_str!("../../catalog/affine-sl2.bracket")),
    ("phi-x3", include_str!("../../catalog/phi-x3.bracket")),
    ("phi-y", include_str!("../../catalog/phi-y.bracket")),
    ("phi-x3-plus-y", include_str!("../../catalog/phi-x3-plus-y.bracket")),
    ("phi-x4", include_str!("../../catalog/phi-x4.bracket")),
    ("phi-y2", include_str!("../../catalog/phi-y2.bracket")),
    ("phi-y2-plus-xy", include_str!("../../catalog/phi-y2-plus-xy.bracket")),
    ("gl2-quadratic", include_str!("../../catalog/gl2-quadratic.bracket")),
    ("gl2-cubic", include_str!("../../catalog/gl2-cubic.bracket")),
    ("aij-quadratic", include_str!("../../catalog/aij-quadratic.bracket")),
];

pub fn catalog_names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|&(n, _)| n)
}

/// Text of the bracket file behind a catalog entry.
pub fn catalog_source(name: &str) -> Option<&'static str> {
    ENTRIES.iter().find(|&&(n, _)| n == name).map(|&(_, s)| s)
}

/// The named structure, Jacobi-checked.
pub fn catalog(name: &str) -> Result<PoissonStructure> {
    let src = catalog_source(name).ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
    let p = parse_bracket_file(src)?;
    p.validate()?;
    Ok(p.with_name(name))
}
