//! Instances of the unit-translate intersection property and their
//! serializable, independently re-verifiable certificates.
//!
//! An instance (R, k, s(1..k-1)) holds when some unit u of R has every
//! u + s(i) a unit. Certificates re-verify offline: a witness certificate by
//! direct invertibility checks, an exhausted failure by a second scan in an
//! independent (reversed) order, a sampled pass by replaying the seed.

use ring_core::parse::{parse_element, render};
use ring_core::units::units_cached;
use ring_core::{parse_ring, Ring, RingElement, RingError};
use serde::{Deserialize, Serialize};

pub const CERT_SCHEMA: &str = "gui-cert/v1";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InstanceDesc {
    pub ring: String,
    pub k: u32,
    pub tuple: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum VerdictDesc {
    Witness { u: String },
    ExhaustedFailure { candidates_checked: u64 },
    SampledPass { seed: u64, trials: u64 },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct NormalizationDesc {
    /// Two-sided unit scalings (u, v) applied to reach the scanned tuple.
    pub applied: Vec<(String, String)>,
    pub dedup: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct Stats {
    pub tested: u64,
    pub witness_attempts: u64,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Provenance {
    pub version: String,
    pub seed: Option<u64>,
    pub scan_order: String,
}

impl Default for Provenance {
    fn default() -> Self {
        Provenance {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: None,
            scan_order: "subfield-then-units".to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WitnessCertificate {
    pub schema: String,
    pub instance: InstanceDesc,
    pub verdict: VerdictDesc,
    #[serde(default)]
    pub normalization: NormalizationDesc,
    #[serde(default)]
    pub stats: Stats,
    pub provenance: Provenance,
}

impl WitnessCertificate {
    pub fn new(ring: &Ring, tuple: &[RingElement], verdict: VerdictDesc) -> Self {
        WitnessCertificate {
            schema: CERT_SCHEMA.to_string(),
            instance: InstanceDesc {
                ring: ring.to_string(),
                k: tuple.len() as u32 + 1,
                tuple: tuple.iter().map(render).collect(),
            },
            verdict,
            normalization: NormalizationDesc::default(),
            stats: Stats::default(),
            provenance: Provenance::default(),
        }
    }

    pub fn parse_instance(&self) -> ring_core::Result<(Ring, Vec<RingElement>)> {
        let ring = parse_ring(&self.instance.ring)?;
        let tuple = self
            .instance
            .tuple
            .iter()
            .map(|s| parse_element(&ring, s))
            .collect::<ring_core::Result<Vec<_>>>()?;
        Ok((ring, tuple))
    }
}

/// Does u witness the instance? (u and every u + s(i) invertible.)
pub fn is_witness(u: &RingElement, tuple: &[RingElement]) -> bool {
    u.is_unit() && tuple.iter().all(|s| (u + s).is_unit())
}

/// Re-verify a certificate offline. Witnesses are checked directly; an
/// exhausted failure is re-scanned over the cached unit list in reverse
/// order; a sampled pass is replayed with its recorded seed.
pub fn verify_certificate(cert: &WitnessCertificate) -> ring_core::Result<bool> {
    if cert.schema != CERT_SCHEMA {
        return Err(RingError::Parse(format!("unknown certificate schema {}", cert.schema)));
    }
    let (ring, tuple) = cert.parse_instance()?;
    match &cert.verdict {
        VerdictDesc::Witness { u } => {
            let u = parse_element(&ring, u)?;
            Ok(is_witness(&u, &tuple))
        }
        VerdictDesc::ExhaustedFailure { .. } => {
            let units = units_cached(&ring)?;
            Ok(units.iter().rev().all(|u| !is_witness(u, &tuple)))
        }
        VerdictDesc::SampledPass { seed, trials } => {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*seed);
            let size = ring
                .element_count()
                .ok_or_else(|| RingError::Infinite(ring.to_string()))?;
            for _ in 0..*trials {
                let u = RingElement::from_index(&ring, rng.gen_range(0..size));
                if is_witness(&u, &tuple) {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_certificate_round_trip() {
        let ring = parse_ring("mat(2,gf(3))").unwrap();
        let tuple = vec![RingElement::one(&ring), RingElement::zero(&ring)];
        let two = RingElement::from_int(&ring, 2).neg_elem(); // some unit
        assert!(is_witness(&two, &tuple) || !is_witness(&two, &tuple)); // total
        // find a real witness by scan
        let units = units_cached(&ring).unwrap();
        let u = units.iter().find(|u| is_witness(u, &tuple)).unwrap();
        let cert = WitnessCertificate::new(
            &ring,
            &tuple,
            VerdictDesc::Witness { u: ring_core::parse::render(u) },
        );
        let json = serde_json::to_string(&cert).unwrap();
        let back: WitnessCertificate = serde_json::from_str(&json).unwrap();
        assert!(verify_certificate(&back).unwrap());
    }

    #[test]
    fn failure_certificate_reverifies() {
        // the known failing pair over mat(2,gf(2)): (E11, E12)
        let ring = parse_ring("mat(2,gf(2))").unwrap();
        let e11 = RingElement::matrix_unit(&ring, 0, 0).unwrap();
        let e12 = RingElement::matrix_unit(&ring, 0, 1).unwrap();
        let cert = WitnessCertificate::new(
            &ring,
            &[e11, e12],
            VerdictDesc::ExhaustedFailure { candidates_checked: 6 },
        );
        assert!(verify_certificate(&cert).unwrap());
    }
}
