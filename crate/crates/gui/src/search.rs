//! Witness searches for the unit-translate intersection property.
//!
//! Strategies: exhaustive over all (k-1)-tuples, exhaustive up to two-sided
//! unit-scaling orbits, or seeded random sampling. The witness pool is
//! scanned deterministically: the nonzero elements of a maximal subfield
//! first (for matrix rings over fields), then the cached unit list.

use crate::dense::{DenseRing, DENSE_LIMIT};
use crate::instance::{
    is_witness, NormalizationDesc, Provenance, Stats, VerdictDesc, WitnessCertificate,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::canon::maximal_subfield;
use ring_core::units::units_cached;
use ring_core::{parse::render, Ring, RingDesc, RingElement, RingError};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Every tuple, one by one.
    Exhaustive,
    /// Every tuple up to the two-sided unit-scaling bijections.
    ExhaustiveDedup,
    /// Seeded random tuples.
    Sampled { samples: u64, seed: u64 },
}

impl Strategy {
    pub fn describe(&self) -> String {
        match self {
            Strategy::Exhaustive => "exhaustive".into(),
            Strategy::ExhaustiveDedup => "exhaustive-dedup".into(),
            Strategy::Sampled { samples, seed } => format!("sampled:{samples}:{seed}"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AggregateOutcome {
    pub ring: String,
    pub k: u32,
    pub strategy: String,
    pub holds: bool,
    /// Failing tuples (up to a small cap), rendered.
    pub counterexamples: Vec<Vec<String>>,
    pub stats: Stats,
}

impl AggregateOutcome {
    /// The certificate for a failing tuple (exhaustively re-checked), if any.
    pub fn failure_certificate(&self, ring: &Ring) -> Option<WitnessCertificate> {
        let tuple: Vec<RingElement> = self
            .counterexamples
            .first()?
            .iter()
            .map(|s| ring_core::parse::parse_element(ring, s).ok())
            .collect::<Option<Vec<_>>>()?;
        let units = units_cached(ring).ok()?;
        let mut cert = WitnessCertificate::new(
            ring,
            &tuple,
            VerdictDesc::ExhaustedFailure { candidates_checked: units.len() as u64 },
        );
        cert.stats = self.stats.clone();
        Some(cert)
    }
}

/// The deterministic witness pool: maximal-subfield nonzero elements first
/// (when available), then every unit in element order, deduplicated.
pub fn witness_pool(ring: &Ring) -> ring_core::Result<Vec<RingElement>> {
    let mut pool: Vec<RingElement> = Vec::new();
    let mut seen: Vec<u128> = Vec::new();
    if let RingDesc::Matrix { inner, .. } = ring.as_ref() {
        if inner.is_field() {
            let sf = maximal_subfield(ring)?;
            for d in sf.nonzero {
                seen.push(d.index().unwrap());
                pool.push(d);
            }
        }
    }
    for u in units_cached(ring)?.iter() {
        let idx = u.index().unwrap();
        if !seen.contains(&idx) {
            pool.push(u.clone());
        }
    }
    Ok(pool)
}

/// Deterministic single-instance search over the witness pool.
pub fn find_witness(ring: &Ring, tuple: &[RingElement]) -> ring_core::Result<Option<RingElement>> {
    let pool = witness_pool(ring)?;
    Ok(pool.into_iter().find(|u| is_witness(u, tuple)))
}

/// Build a per-instance certificate with a deterministic scan.
pub fn check_instance(ring: &Ring, tuple: &[RingElement]) -> ring_core::Result<WitnessCertificate> {
    let start = std::time::Instant::now();
    let pool = witness_pool(ring)?;
    let mut attempts = 0u64;
    let mut found = None;
    for u in &pool {
        attempts += 1;
        if is_witness(u, tuple) {
            found = Some(u.clone());
            break;
        }
    }
    let verdict = match found {
        Some(u) => VerdictDesc::Witness { u: render(&u) },
        None => VerdictDesc::ExhaustedFailure { candidates_checked: pool.len() as u64 },
    };
    let mut cert = WitnessCertificate::new(ring, tuple, verdict);
    cert.stats = Stats {
        tested: 1,
        witness_attempts: attempts,
        elapsed_ms: start.elapsed().as_millis(),
    };
    Ok(cert)
}

/// Check the property for every (k-1)-tuple of the ring under the given
/// strategy.
pub fn check_gui(ring: &Ring, k: u32, strategy: Strategy) -> ring_core::Result<AggregateOutcome> {
    if k < 2 {
        return Err(RingError::NotSupported("the property needs k >= 2".into()));
    }
    let size = ring
        .element_count()
        .ok_or_else(|| RingError::Infinite(ring.to_string()))?;
    let arity = (k - 1) as usize;
    match strategy {
        Strategy::Sampled { samples, seed } => sampled_scan(ring, k, samples, seed),
        Strategy::Exhaustive | Strategy::ExhaustiveDedup => {
            let dedup = strategy == Strategy::ExhaustiveDedup;
            let tuple_count = size.checked_pow(arity as u32);
            if size as usize <= DENSE_LIMIT
                && tuple_count.map_or(false, |t| t <= 1 << 26)
            {
                dense_exhaustive(ring, k, dedup, None)
            } else if tuple_count.map_or(false, |t| t <= 1 << 16) {
                generic_exhaustive(ring, k)
            } else {
                Err(RingError::TooLarge(format!(
                    "exhaustive scan of {ring} at k={k}"
                )))
            }
        }
    }
}

/// One shard of an exhaustive scan: tuple codes are split into `shards`
/// contiguous slices and only slice `shard_id` is scanned. The union of all
/// shard verdicts equals the unsharded verdict.
pub fn check_gui_sharded(
    ring: &Ring,
    k: u32,
    shards: u64,
    shard_id: u64,
) -> ring_core::Result<AggregateOutcome> {
    if k < 2 {
        return Err(RingError::NotSupported("the property needs k >= 2".into()));
    }
    if shards == 0 || shard_id >= shards {
        return Err(RingError::NotSupported(format!(
            "shard {shard_id} of {shards} is out of range"
        )));
    }
    let size = ring
        .element_count()
        .ok_or_else(|| RingError::Infinite(ring.to_string()))?;
    let arity = (k - 1) as usize;
    let tuple_count = size
        .checked_pow(arity as u32)
        .filter(|&t| t <= 1 << 26)
        .ok_or_else(|| RingError::TooLarge(format!("sharded scan of {ring} at k={k}")))? as u64;
    if size as usize > DENSE_LIMIT {
        return Err(RingError::TooLarge(format!("dense tables for {ring}")));
    }
    let span = tuple_count / shards;
    let lo = shard_id * span;
    let hi = if shard_id + 1 == shards { tuple_count } else { lo + span };
    let mut out = dense_exhaustive(ring, k, false, Some((lo, hi)))?;
    out.strategy = format!("exhaustive-shard:{shard_id}/{shards}");
    Ok(out)
}

fn bump(idx: &mut [usize], base: usize) -> bool {
    for slot in idx.iter_mut() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

fn generic_exhaustive(ring: &Ring, k: u32) -> ring_core::Result<AggregateOutcome> {
    let start = std::time::Instant::now();
    let size = ring.element_count().unwrap() as usize;
    let pool = witness_pool(ring)?;
    let arity = (k - 1) as usize;
    let elems: Vec<RingElement> = ring_core::elements_of(ring).collect();
    let mut idx = vec![0usize; arity];
    let mut tested = 0u64;
    let mut attempts = 0u64;
    let mut counterexamples = Vec::new();
    loop {
        let tuple: Vec<RingElement> = idx.iter().map(|&i| elems[i].clone()).collect();
        tested += 1;
        let mut ok = false;
        for u in &pool {
            attempts += 1;
            if is_witness(u, &tuple) {
                ok = true;
                break;
            }
        }
        if !ok {
            if counterexamples.len() < 4 {
                counterexamples.push(tuple.iter().map(render).collect());
            } else {
                break;
            }
        }
        if !bump(&mut idx, size) {
            break;
        }
    }
    Ok(AggregateOutcome {
        ring: ring.to_string(),
        k,
        strategy: "exhaustive".into(),
        holds: counterexamples.is_empty(),
        counterexamples,
        stats: Stats { tested, witness_attempts: attempts, elapsed_ms: start.elapsed().as_millis() },
    })
}

/// Dense-table exhaustive scan, optionally deduplicated by the two-sided
/// unit-scaling action s(i) -> g s(i) h (a bijection on witnesses, so one
/// verdict per orbit suffices), optionally restricted to a code range.
fn dense_exhaustive(
    ring: &Ring,
    k: u32,
    dedup: bool,
    range: Option<(u64, u64)>,
) -> ring_core::Result<AggregateOutcome> {
    let start = std::time::Instant::now();
    let d = DenseRing::build(ring)?;
    let arity = (k - 1) as usize;
    let n_tuples = (d.size as u64).pow(arity as u32);
    let (code_lo, code_hi) = range.unwrap_or((0, n_tuples));

    // witness pool as dense indices
    let pool: Vec<u16> = witness_pool(ring)?
        .into_iter()
        .map(|u| u.index().unwrap() as u16)
        .collect();

    let encode = |tuple: &[u16]| -> u64 {
        let mut acc = 0u64;
        for &t in tuple.iter().rev() {
            acc = acc * d.size as u64 + t as u64;
        }
        acc
    };
    let decode = |mut code: u64| -> Vec<u16> {
        (0..arity)
            .map(|_| {
                let t = (code % d.size as u64) as u16;
                code /= d.size as u64;
                t
            })
            .collect()
    };

    let has_witness = |tuple: &[u16], attempts: &mut u64| -> bool {
        'pool: for &u in &pool {
            *attempts += 1;
            for &s in tuple {
                if !d.unit(d.add(u, s)) {
                    continue 'pool;
                }
            }
            return true;
        }
        false
    };

    let gens = if dedup { d.unit_group_generators() } else { Vec::new() };
    let mut visited = vec![false; if dedup { n_tuples as usize } else { 0 }];

    let mut tested = 0u64;
    let mut orbits = 0u64;
    let mut attempts = 0u64;
    let mut counterexamples: Vec<Vec<String>> = Vec::new();
    for code in code_lo..code_hi {
        if dedup {
            if visited[code as usize] {
                continue;
            }
        }
        let tuple = decode(code);
        tested += 1;
        if dedup {
            orbits += 1;
            // mark the two-sided orbit of this tuple
            let mut frontier = vec![tuple.clone()];
            visited[code as usize] = true;
            while let Some(t) = frontier.pop() {
                for &g in &gens {
                    for side in 0..2 {
                        let moved: Vec<u16> = t
                            .iter()
                            .map(|&s| if side == 0 { d.mul(g, s) } else { d.mul(s, g) })
                            .collect();
                        let mcode = encode(&moved) as usize;
                        if !visited[mcode] {
                            visited[mcode] = true;
                            frontier.push(moved);
                        }
                    }
                }
            }
        }
        if !has_witness(&tuple, &mut attempts) {
            if counterexamples.len() < 4 {
                let rendered = tuple.iter().map(|&t| render(&d.elem(t))).collect();
                counterexamples.push(rendered);
            } else {
                break;
            }
        }
    }
    Ok(AggregateOutcome {
        ring: ring.to_string(),
        k,
        strategy: if dedup {
            format!("exhaustive-dedup:orbits={orbits}")
        } else {
            "exhaustive".into()
        },
        holds: counterexamples.is_empty(),
        counterexamples,
        stats: Stats { tested, witness_attempts: attempts, elapsed_ms: start.elapsed().as_millis() },
    })
}

fn sampled_scan(ring: &Ring, k: u32, samples: u64, seed: u64) -> ring_core::Result<AggregateOutcome> {
    let start = std::time::Instant::now();
    let size = ring.element_count().unwrap();
    let pool = witness_pool(ring)?;
    let arity = (k - 1) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0u64;
    let mut counterexamples = Vec::new();
    for _ in 0..samples {
        let tuple: Vec<RingElement> = (0..arity)
            .map(|_| RingElement::from_index(ring, rng.gen_range(0..size)))
            .collect();
        let mut ok = false;
        for u in &pool {
            attempts += 1;
            if is_witness(u, &tuple) {
                ok = true;
                break;
            }
        }
        if !ok && counterexamples.len() < 4 {
            counterexamples.push(tuple.iter().map(render).collect());
        }
    }
    Ok(AggregateOutcome {
        ring: ring.to_string(),
        k,
        strategy: format!("sampled:{samples}:{seed}"),
        holds: counterexamples.is_empty(),
        counterexamples,
        stats: Stats { tested: samples, witness_attempts: attempts, elapsed_ms: start.elapsed().as_millis() },
    })
}

/// Certificate for an aggregate scan, replayable from its strategy string.
pub fn aggregate_certificate(outcome: &AggregateOutcome, seed: Option<u64>) -> AggregateCertificate {
    AggregateCertificate {
        schema: "gui-aggregate/v1".to_string(),
        ring: outcome.ring.clone(),
        k: outcome.k,
        strategy: outcome.strategy.clone(),
        holds: outcome.holds,
        counterexamples: outcome.counterexamples.clone(),
        stats: outcome.stats.clone(),
        normalization: NormalizationDesc {
            applied: Vec::new(),
            dedup: if outcome.strategy.starts_with("exhaustive-dedup") {
                "two-sided-unit-orbits".into()
            } else {
                "none".into()
            },
        },
        provenance: Provenance { seed, ..Default::default() },
    }
}

#[derive(Debug, Clone, Serialize, serde::Deserialize, PartialEq)]
pub struct AggregateCertificate {
    pub schema: String,
    pub ring: String,
    pub k: u32,
    pub strategy: String,
    pub holds: bool,
    pub counterexamples: Vec<Vec<String>>,
    pub stats: Stats,
    pub normalization: NormalizationDesc,
    pub provenance: Provenance,
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::parse_ring;

    #[test]
    fn m2f2_fails_three_translates() {
        let ring = parse_ring("mat(2,gf(2))").unwrap();
        let out = check_gui(&ring, 3, Strategy::Exhaustive).unwrap();
        assert!(!out.holds);
        // the specific pair (E11, E12) must fail
        let e11 = RingElement::matrix_unit(&ring, 0, 0).unwrap();
        let e12 = RingElement::matrix_unit(&ring, 0, 1).unwrap();
        assert!(find_witness(&ring, &[e11, e12]).unwrap().is_none());
    }

    #[test]
    fn m2f3_satisfies_three_translates() {
        let ring = parse_ring("mat(2,gf(3))").unwrap();
        let out = check_gui(&ring, 3, Strategy::ExhaustiveDedup).unwrap();
        assert!(out.holds, "{out:?}");
    }

    #[test]
    fn gf4_satisfies_three_translates() {
        let ring = parse_ring("gf(4)").unwrap();
        let out = check_gui(&ring, 3, Strategy::Exhaustive).unwrap();
        assert!(out.holds);
    }

    #[test]
    fn dedup_agrees_with_plain_scan() {
        for s in ["mat(2,gf(2))", "zmod(8)"] {
            let ring = parse_ring(s).unwrap();
            for k in [2u32, 3] {
                let plain = check_gui(&ring, k, Strategy::Exhaustive).unwrap();
                let dedup = check_gui(&ring, k, Strategy::ExhaustiveDedup).unwrap();
                assert_eq!(plain.holds, dedup.holds, "{s} k={k}");
            }
        }
    }

    #[test]
    fn sampled_pass_on_good_ring() {
        let ring = parse_ring("gf(5)").unwrap();
        let out = check_gui(&ring, 3, Strategy::Sampled { samples: 200, seed: 1 }).unwrap();
        assert!(out.holds);
    }
}
