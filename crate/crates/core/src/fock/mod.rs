//! Bosonic Fock states over discrete optical modes and exact amplitude
//! propagation through linear mode transforms.
//!
//! A mode is a `(port, time_bin, internal)` triple. Ports are spatial
//! channels, time bins count delays in units of the bin separation, and the
//! internal index labels an orthogonal wavepacket component used to model
//! partial distinguishability. States are sparse maps from occupation
//! patterns to complex amplitudes; transforms are column maps on creation
//! operators.

mod state;
mod transform;

pub use state::PhotonicState;
pub use transform::ModeTransform;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Spatial channel label.
///
/// Named constants cover the analyzer chain (`A`..`F`), Bob's photon, and
/// the idler of Alice's pair source; [`Port::aux`] mints extra labels for
/// scratch use (interferometer internals, test rigs).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Port(pub u8);

impl Port {
    /// Analyzer input fed by Alice's photon.
    pub const A: Port = Port(0);
    /// Analyzer input fed by the entangled pair.
    pub const B: Port = Port(1);
    /// Short arm between the analyzer's beamsplitters.
    pub const C: Port = Port(2);
    /// Long (delayed) arm between the analyzer's beamsplitters.
    pub const D: Port = Port(3);
    /// Analyzer output watched by detector D1.
    pub const E: Port = Port(4);
    /// Analyzer output watched by detector D2.
    pub const F: Port = Port(5);
    /// Bob's photon.
    pub const BOB: Port = Port(6);
    /// Idler of Alice's pair source (undetected).
    pub const IDLER: Port = Port(7);

    /// Extra port labels for scratch and test use.
    pub fn aux(k: u8) -> Port {
        Port(8 + k)
    }
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Port::A => write!(f, "a"),
            Port::B => write!(f, "b"),
            Port::C => write!(f, "c"),
            Port::D => write!(f, "d"),
            Port::E => write!(f, "e"),
            Port::F => write!(f, "f"),
            Port::BOB => write!(f, "bob"),
            Port::IDLER => write!(f, "idler"),
            Port(n) => write!(f, "p{n}"),
        }
    }
}

/// One optical mode: a port, a time bin, and an internal wavepacket index.
///
/// Modes order lexicographically on `(port, time_bin, internal)`; that
/// ordering is the canonical one used inside occupation patterns.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Mode {
    pub port: Port,
    pub time_bin: u8,
    pub internal: u8,
}

impl Mode {
    /// Mode in the reference wavepacket (internal index 0).
    pub fn new(port: Port, time_bin: u8) -> Mode {
        Mode { port, time_bin, internal: 0 }
    }

    pub fn with_internal(port: Port, time_bin: u8, internal: u8) -> Mode {
        Mode { port, time_bin, internal }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.internal == 0 {
            write!(f, "{}:{}", self.port, self.time_bin)
        } else {
            write!(f, "{}:{}#{}", self.port, self.time_bin, self.internal)
        }
    }
}

/// Time-bin window and photon budget shared by the states of one experiment.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FockSpace {
    /// Time bins run over `0..window`.
    pub window: u8,
    /// Maximum total photon number per term.
    pub n_max: u8,
}

impl FockSpace {
    pub fn new(window: u8, n_max: u8) -> FockSpace {
        FockSpace { window, n_max }
    }

    pub(crate) fn check_bin(&self, mode: Mode) -> Result<()> {
        if mode.time_bin >= self.window {
            return Err(Error::WindowExceeded {
                bin: mode.time_bin,
                window: self.window,
                context: mode.to_string(),
            });
        }
        Ok(())
    }
}

impl Default for FockSpace {
    /// Three time bins (what one delay stage produces from a qubit) and a
    /// four-photon budget (two photon pairs).
    fn default() -> FockSpace {
        FockSpace { window: 3, n_max: 4 }
    }
}

/// An occupation pattern: which modes hold how many photons.
///
/// Stored sorted by mode with strictly positive counts, so equal patterns
/// compare equal structurally.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Occupation(Vec<(Mode, u8)>);

impl Occupation {
    /// The vacuum pattern.
    pub fn vacuum() -> Occupation {
        Occupation(Vec::new())
    }

    /// Build from arbitrary `(mode, count)` pairs; merges duplicates and
    /// drops zero counts.
    pub fn from_pairs(pairs: &[(Mode, u8)]) -> Occupation {
        let mut v: Vec<(Mode, u8)> = Vec::with_capacity(pairs.len());
        for &(m, n) in pairs {
            if n == 0 {
                continue;
            }
            match v.binary_search_by_key(&m, |&(q, _)| q) {
                Ok(i) => v[i].1 += n,
                Err(i) => v.insert(i, (m, n)),
            }
        }
        Occupation(v)
    }

    pub fn single(mode: Mode) -> Occupation {
        Occupation(vec![(mode, 1)])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Mode, u8)> + '_ {
        self.0.iter().copied()
    }

    pub fn total_photons(&self) -> u32 {
        self.0.iter().map(|&(_, n)| u32::from(n)).sum()
    }

    pub fn count(&self, mode: Mode) -> u8 {
        self.0
            .binary_search_by_key(&mode, |&(q, _)| q)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    /// Pattern with one more photon in `mode`.
    pub fn with_added(&self, mode: Mode) -> Occupation {
        let mut v = self.0.clone();
        match v.binary_search_by_key(&mode, |&(q, _)| q) {
            Ok(i) => v[i].1 += 1,
            Err(i) => v.insert(i, (mode, 1)),
        }
        Occupation(v)
    }

    /// Restriction to the modes of the given ports.
    pub fn on_ports(&self, ports: &[Port]) -> Occupation {
        Occupation(
            self.0
                .iter()
                .copied()
                .filter(|(m, _)| ports.contains(&m.port))
                .collect(),
        )
    }

    /// Product of `n!` over all occupied modes, as a float.
    pub fn factorial_product(&self) -> f64 {
        self.0.iter().map(|&(_, n)| FACTORIALS[n as usize]).product()
    }

    /// Union of two patterns on disjoint or shared modes (counts add).
    pub fn merged(&self, other: &Occupation) -> Occupation {
        let mut v = self.0.clone();
        for &(m, n) in &other.0 {
            match v.binary_search_by_key(&m, |&(q, _)| q) {
                Ok(i) => v[i].1 += n,
                Err(i) => v.insert(i, (m, n)),
            }
        }
        Occupation(v)
    }
}

impl fmt::Display for Occupation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "|vac>");
        }
        write!(f, "|")?;
        for (i, (m, n)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if n == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{n}x{m}")?;
            }
        }
        write!(f, ">")
    }
}

const FACTORIALS: [f64; 9] = [1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0, 5040.0, 40320.0];
