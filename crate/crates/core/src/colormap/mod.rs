//! 256-entry color lookup tables and a name registry.

mod luts;

use crate::error::{Error, Result};

pub const LUT_SIZE: usize = 256;
pub const DEFAULT_COLORMAP: &str = "viridis";

#[derive(Clone, Debug, PartialEq)]
pub struct Colormap {
    name: String,
    lut: Vec<[f64; 3]>,
}

impl Colormap {
    pub fn new(name: impl Into<String>, lut: Vec<[f64; 3]>) -> Result<Self> {
        let name = name.into();
        if lut.len() != LUT_SIZE {
            return Err(Error::Validation(format!(
                "colormap {name}: expected {LUT_SIZE} entries, got {}",
                lut.len()
            )));
        }
        if lut.iter().flatten().any(|v| !(0.0..=1.0).contains(v)) {
            return Err(Error::Validation(format!(
                "colormap {name}: components must lie in [0, 1]"
            )));
        }
        Ok(Colormap { name, lut })
    }

    /// Builds a map from a function of the normalized position `t ∈ [0, 1]`.
    pub fn from_fn(name: impl Into<String>, f: impl Fn(f64) -> [f64; 3]) -> Result<Self> {
        let lut = (0..LUT_SIZE).map(|i| f(i as f64 / (LUT_SIZE - 1) as f64)).collect();
        Colormap::new(name, lut)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lut(&self) -> &[[f64; 3]] {
        &self.lut
    }

    /// Linear interpolation between adjacent entries; `t` is clamped to [0, 1].
    pub fn sample(&self, t: f64) -> [f64; 3] {
        let pos = t.clamp(0.0, 1.0) * (LUT_SIZE - 1) as f64;
        let i = (pos.floor() as usize).min(LUT_SIZE - 2);
        let frac = pos - i as f64;
        let (a, b) = (self.lut[i], self.lut[i + 1]);
        [
            a[0] + frac * (b[0] - a[0]),
            a[1] + frac * (b[1] - a[1]),
            a[2] + frac * (b[2] - a[2]),
        ]
    }
}

/// Ordered set of named colormaps. The built-in registry starts with Viridis.
#[derive(Clone, Debug)]
pub struct ColormapRegistry {
    maps: Vec<Colormap>,
}

impl Default for ColormapRegistry {
    fn default() -> Self {
        let builtin: [(&str, &[[f64; 3]; 256]); 18] = [
            ("viridis", &luts::VIRIDIS),
            ("plasma", &luts::PLASMA),
            ("inferno", &luts::INFERNO),
            ("magma", &luts::MAGMA),
            ("cividis", &luts::CIVIDIS),
            ("jet", &luts::JET),
            ("hsv", &luts::HSV),
            ("copper", &luts::COPPER),
            ("gray", &luts::GRAY),
            ("hot", &luts::HOT),
            ("bone", &luts::BONE),
            ("pink", &luts::PINK),
            ("cool", &luts::COOL),
            ("autumn", &luts::AUTUMN),
            ("winter", &luts::WINTER),
            ("turbo", &luts::TURBO),
            ("rainbow", &luts::RAINBOW),
            ("coolwarm", &luts::COOLWARM),
        ];
        ColormapRegistry {
            maps: builtin
                .iter()
                .map(|(name, lut)| Colormap {
                    name: (*name).to_string(),
                    lut: lut.to_vec(),
                })
                .collect(),
        }
    }
}

impl ColormapRegistry {
    pub fn empty() -> Self {
        ColormapRegistry { maps: Vec::new() }
    }

    pub fn all(&self) -> &[Colormap] {
        &self.maps
    }

    pub fn names(&self) -> Vec<&str> {
        self.maps.iter().map(|m| m.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&Colormap> {
        self.maps
            .iter()
            .find(|m| m.name.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::UnknownColormap(name.to_string()))
    }

    /// Adds a map, replacing any existing map with the same name.
    pub fn register(&mut self, map: Colormap) {
        match self.maps.iter_mut().find(|m| m.name == map.name) {
            Some(slot) => *slot = map,
            None => self.maps.push(map),
        }
    }

    pub fn default_map(&self) -> &Colormap {
        self.get(DEFAULT_COLORMAP).unwrap_or(&self.maps[0])
    }
}

/// All built-in colormaps, Viridis first.
pub fn list_colormaps() -> Vec<Colormap> {
    ColormapRegistry::default().maps
}

pub fn colormap_by_name(name: &str) -> Result<Colormap> {
    ColormapRegistry::default().get(name).cloned()
}

/// Rec. 709 relative luminance.
pub fn luminance(rgb: [f64; 3]) -> f64 {
    0.2126 * rgb[0] + 0.7152 * rgb[1] + 0.0722 * rgb[2]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_contains_highlighted_maps() {
        let reg = ColormapRegistry::default();
        for name in ["viridis", "jet", "hsv", "copper"] {
            assert!(reg.get(name).is_ok(), "{name}");
        }
        assert_eq!(reg.default_map().name(), "viridis");
        assert_eq!(list_colormaps()[0].name(), "viridis");
    }

    #[test]
    fn every_lut_is_valid() {
        for m in list_colormaps() {
            assert_eq!(m.lut().len(), LUT_SIZE);
            assert!(m.lut().iter().flatten().all(|v| (0.0..=1.0).contains(v)));
        }
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(matches!(
            colormap_by_name("nonexistent"),
            Err(Error::UnknownColormap(n)) if n == "nonexistent"
        ));
    }

    #[test]
    fn sample_hits_endpoints() {
        let m = colormap_by_name("viridis").unwrap();
        assert_eq!(m.sample(0.0), m.lut()[0]);
        assert_eq!(m.sample(1.0), m.lut()[255]);
        assert_eq!(m.sample(-3.0), m.lut()[0]);
    }

    #[test]
    fn viridis_luminance_is_monotone() {
        let m = colormap_by_name("viridis").unwrap();
        let lum: Vec<f64> = m.lut().iter().map(|&c| luminance(c)).collect();
        assert!(lum.windows(2).all(|w| w[1] >= w[0]));
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(Colormap::new("short", vec![[0.0; 3]; 10]).is_err());
        assert!(Colormap::new("bright", vec![[1.5, 0.0, 0.0]; 256]).is_err());
    }
}
