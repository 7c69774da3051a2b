use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::packing::omega_without;

use super::{components_without, with_pool, Rational, VerifyOptions, COMPONENT_CAP, OMEGA_CAP};

/// The largest `t` for which a graph is (strongly) t-tough.
///
/// `Infinite` means no vertex set is a valid obstruction, as for complete
/// graphs. `Finite(0)` means the graph is not t-tough for any `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Toughness {
    Infinite,
    Finite(Rational),
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Infinite => write!(f, "inf"),
            Toughness::Finite(t) => write!(f, "{t}"),
        }
    }
}

impl Serialize for Toughness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Toughness by enumeration: the minimum of `|S| / ω(G∖S)` over all `S`
/// with `ω(G∖S) ≥ 2`.
pub fn toughness(g: &Multigraph, opts: &VerifyOptions) -> Result<Toughness> {
    let cap = opts.cap.unwrap_or(COMPONENT_CAP);
    check_cap(g.n(), cap)?;
    minimise(g, opts, |mask, size| {
        let (w, _) = components_without(g, mask);
        (w >= 2).then(|| Rational::new(size as i64, w as i64))
    })
}

/// m-strong toughness: the largest `t` with `Ω_m(G∖S)/m ≤ max{1, |S|/t}`,
/// i.e. the minimum of `m|S| / Ω_m(G∖S)` over all `S` with `Ω_m(G∖S) > m`.
/// For `m = 1` this coincides with [`toughness`].
pub fn strong_toughness(g: &Multigraph, m: usize, opts: &VerifyOptions) -> Result<Toughness> {
    if m == 0 {
        return Err(Error::Input("m must be positive".into()));
    }
    if m == 1 {
        return toughness(g, opts);
    }
    let cap = opts.cap.unwrap_or(OMEGA_CAP);
    check_cap(g.n(), cap)?;
    minimise(g, opts, |mask, size| {
        let om = omega_without(g, m, mask);
        (om > m).then(|| Rational::new((m * size) as i64, om as i64))
    })
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap.min(62) {
        return Err(Error::Capacity {
            what: "vertex count",
            size: n,
            cap,
        });
    }
    Ok(())
}

fn minimise(
    g: &Multigraph,
    opts: &VerifyOptions,
    ratio: impl Fn(&[bool], usize) -> Option<Rational> + Sync,
) -> Result<Toughness> {
    let n = g.n();
    let best = with_pool(opts.jobs, || {
        (0u64..1u64 << n)
            .into_par_iter()
            .filter_map(|bits| {
                let mask: Vec<bool> = (0..n).map(|v| bits >> v & 1 == 1).collect();
                ratio(&mask, bits.count_ones() as usize)
            })
            .min()
    })?;
    Ok(best.map_or(Toughness::Infinite, Toughness::Finite))
}
