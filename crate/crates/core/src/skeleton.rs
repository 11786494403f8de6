//! Body parts and the limb topology shared by targets, losses and evaluation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub const NUM_PARTS: usize = 14;
pub const NUM_LIMBS: usize = 14;
pub const NUM_PAF_CHANNELS: usize = 2 * NUM_LIMBS;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartName {
    Head,
    Neck,
    RShoulder,
    RElbow,
    RWrist,
    LShoulder,
    LElbow,
    LWrist,
    RHip,
    RKnee,
    RAnkle,
    LHip,
    LKnee,
    LAnkle,
}

impl PartName {
    pub const ALL: [PartName; NUM_PARTS] = [
        PartName::Head,
        PartName::Neck,
        PartName::RShoulder,
        PartName::RElbow,
        PartName::RWrist,
        PartName::LShoulder,
        PartName::LElbow,
        PartName::LWrist,
        PartName::RHip,
        PartName::RKnee,
        PartName::RAnkle,
        PartName::LHip,
        PartName::LKnee,
        PartName::LAnkle,
    ];

    /// Channel index of this part in heatmap tensors.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<PartName> {
        PartName::ALL.get(i).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PartName::Head => "head",
            PartName::Neck => "neck",
            PartName::RShoulder => "r_shoulder",
            PartName::RElbow => "r_elbow",
            PartName::RWrist => "r_wrist",
            PartName::LShoulder => "l_shoulder",
            PartName::LElbow => "l_elbow",
            PartName::LWrist => "l_wrist",
            PartName::RHip => "r_hip",
            PartName::RKnee => "r_knee",
            PartName::RAnkle => "r_ankle",
            PartName::LHip => "l_hip",
            PartName::LKnee => "l_knee",
            PartName::LAnkle => "l_ankle",
        }
    }
}

impl fmt::Display for PartName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PartName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PartName::ALL
            .iter()
            .copied()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::Validation(format!("unknown part name {s:?}")))
    }
}

/// Ordered parts and limbs. Limb `l` owns PAF channels `2l` (x) and `2l+1` (y).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonTopology {
    pub parts: Vec<PartName>,
    pub limbs: Vec<(PartName, PartName)>,
}

impl Default for SkeletonTopology {
    fn default() -> Self {
        use PartName::*;
        SkeletonTopology {
            parts: PartName::ALL.to_vec(),
            limbs: vec![
                (Head, Neck),
                (Neck, RShoulder),
                (RShoulder, RElbow),
                (RElbow, RWrist),
                (Neck, LShoulder),
                (LShoulder, LElbow),
                (LElbow, LWrist),
                (Neck, RHip),
                (RHip, RKnee),
                (RKnee, RAnkle),
                (Neck, LHip),
                (LHip, LKnee),
                (LKnee, LAnkle),
                (RHip, LHip),
            ],
        }
    }
}

impl SkeletonTopology {
    pub fn validate(&self) -> Result<(), Error> {
        if self.parts.len() != NUM_PARTS || self.limbs.len() != NUM_LIMBS {
            return Err(Error::Validation(format!(
                "topology needs {NUM_PARTS} parts and {NUM_LIMBS} limbs, got {} and {}",
                self.parts.len(),
                self.limbs.len()
            )));
        }
        for (i, &(a, b)) in self.limbs.iter().enumerate() {
            if a == b {
                return Err(Error::Validation(format!("limb {i} joins {a} to itself")));
            }
            let dup = self.limbs[..i]
                .iter()
                .any(|&(c, d)| (c, d) == (a, b) || (c, d) == (b, a));
            if dup {
                return Err(Error::Validation(format!("duplicate limb {a}-{b}")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_topology_is_valid() {
        let topo = SkeletonTopology::default();
        topo.validate().unwrap();
        assert_eq!(topo.limbs.len() * 2, NUM_PAF_CHANNELS);
        // every part is touched by some limb
        for p in PartName::ALL {
            assert!(topo.limbs.iter().any(|&(a, b)| a == p || b == p), "{p}");
        }
    }

    #[test]
    fn part_names_round_trip() {
        for (i, p) in PartName::ALL.iter().enumerate() {
            assert_eq!(p.index(), i);
            assert_eq!(p.as_str().parse::<PartName>().unwrap(), *p);
        }
        assert!("left_eye".parse::<PartName>().is_err());
    }

    #[test]
    fn duplicate_limb_rejected() {
        let mut topo = SkeletonTopology::default();
        topo.limbs[13] = (PartName::Neck, PartName::Head);
        assert!(topo.validate().is_err());
    }
}
