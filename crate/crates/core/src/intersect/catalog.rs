//! Built-in descriptors. Fixed manifolds are embedded TOML; lens spaces `lens-p-q` and
//! surface products `f<g>xi` (genus g, one boundary circle, times an interval) are generated.

use num_integer::Integer;

use super::descriptor::{DescriptorError, ManifoldData};

const EMBEDDED: &[(&str, &str)] = &[
    ("s3", include_str!("../../data/catalog/s3.toml")),
    ("d3", include_str!("../../data/catalog/d3.toml")),
    ("s1xd2", include_str!("../../data/catalog/s1xd2.toml")),
    ("s2xs1", include_str!("../../data/catalog/s2xs1.toml")),
    ("t2xi", include_str!("../../data/catalog/t2xi.toml")),
    ("t3", include_str!("../../data/catalog/t3.toml")),
];

const LENSES: &[(u64, u64)] = &[(2, 1), (3, 1), (5, 1), (5, 2), (7, 2)];

/// Names listed by `catalog`; any `lens-p-q` with gcd(p, q) = 1 and any `f<g>xi` also resolve.
pub fn catalog_names() -> Vec<String> {
    let mut out: Vec<String> = EMBEDDED.iter().map(|(n, _)| n.to_string()).collect();
    out.extend(LENSES.iter().map(|(p, q)| format!("lens-{p}-{q}")));
    out.extend(["f1xi".to_string(), "f2xi".to_string()]);
    out
}

/// Descriptor source for a catalog name.
pub fn catalog_source(name: &str) -> Option<String> {
    if let Some((_, src)) = EMBEDDED.iter().find(|(n, _)| *n == name) {
        return Some(src.to_string());
    }
    if let Some(rest) = name.strip_prefix("lens-") {
        let (p, q) = rest.split_once('-')?;
        let (p, q): (u64, u64) = (p.parse().ok()?, q.parse().ok()?);
        if p < 2 || q == 0 || q >= p || p.gcd(&q) != 1 {
            return None;
        }
        return Some(lens_source(p, q));
    }
    let g: usize = name.strip_prefix('f')?.strip_suffix("xi")?.parse().ok()?;
    (g >= 1).then(|| surface_source(g))
}

fn lens_source(p: u64, q: u64) -> String {
    format!(
        "# L({p},{q}). H_1 is finite, so every pairing into Z vanishes.\n\
         name = \"lens-{p}-{q}\"\nb1 = 0\nb1_boundary = 0\nh2_rank = 0\n\n\
         [pi1]\nkind = \"cyclic\"\norder = {p}\ngenerators = [\"a\"]\n\n\
         [flags]\npi2_zero = true\natoroidal = true\n"
    )
}

fn surface_source(g: usize) -> String {
    let rank = 2 * g;
    format!(
        "# Genus {g} surface with one boundary circle, times an interval.\n\
         name = \"f{g}xi\"\nb1 = {rank}\nb1_boundary = {}\nh2_rank = 0\n\n\
         [pi1]\nkind = \"free\"\nrank = {rank}\n\n\
         [flags]\npi2_zero = true\natoroidal = true\nsurface_product = true\n",
        2 * rank
    )
}

pub fn lookup(name: &str) -> Result<ManifoldData, DescriptorError> {
    let src = catalog_source(name).ok_or_else(|| DescriptorError::UnknownCatalog(name.to_string()))?;
    ManifoldData::from_toml(&src)
}

/// Resolves `catalog:<name>`, an existing file path, or a bare catalog name, in that order.
pub fn lookup_or_load(arg: &str) -> Result<ManifoldData, DescriptorError> {
    if let Some(name) = arg.strip_prefix("catalog:") {
        return lookup(name);
    }
    let path = std::path::Path::new(arg);
    if path.is_file() {
        let src = std::fs::read_to_string(path).map_err(|e| DescriptorError::Io {
            path: arg.to_string(),
            message: e.to_string(),
        })?;
        return ManifoldData::from_toml(&src);
    }
    lookup(arg)
}
