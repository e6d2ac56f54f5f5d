//! Configs shipped with the binary.

use crate::config::ExperimentConfig;

pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub json: &'static str,
}

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "scrambler-circuit",
        description: "three-qubit scrambling circuit, angles scaled by t in [0, 1], modified OTOC reported",
        json: include_str!("../presets/scrambler-circuit.json"),
    },
    Preset {
        name: "syk-plateau",
        description: "SYK N = 10, q = 4, J^2 = 2, 300 disorder realizations, A = first qubit",
        json: include_str!("../presets/syk-plateau.json"),
    },
    Preset {
        name: "entropy-bound-syk",
        description: "entropy-production bound along one SYK N = 6, q = 4 realization on three qubits",
        json: include_str!("../presets/entropy-bound-syk.json"),
    },
];

pub fn find(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}

impl Preset {
    pub fn config(&self) -> ExperimentConfig {
        ExperimentConfig::from_json(self.json).expect("shipped presets parse")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::Path;

    #[test]
    fn presets_parse_and_validate() {
        for p in PRESETS {
            let v = p.config().validate(Path::new(".")).unwrap();
            assert_eq!(v.times[0], 0.0, "{}", p.name);
        }
    }

    #[test]
    fn names_are_unique() {
        for (i, a) in PRESETS.iter().enumerate() {
            assert!(PRESETS[i + 1..].iter().all(|b| b.name != a.name));
        }
    }
}
