//! Mobius function tables and mollifier coefficient preparation.

use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Hard ceiling on sieve size: the table is a dense i8 array, so this caps
/// memory at ~2 GiB. The CLI applies a much smaller desk-scale guardrail.
pub const SIEVE_HARD_LIMIT: u64 = 1 << 31;

const CACHE_MAGIC: &[u8; 8] = b"MUTBL\x01\0\0";

/// Dense table of mu(n) for 1 <= n <= limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    limit: u64,
    // mu[0] is a dead slot so that mu[n] indexes directly.
    mu: Vec<i8>,
}

impl MobiusTable {
    /// Linear sieve: every composite is crossed off exactly once by its
    /// smallest prime factor, and mu propagates along that factorization.
    pub fn sieve(limit: u64) -> Result<Self> {
        if limit == 0 || limit > SIEVE_HARD_LIMIT {
            return Err(Error::Sizing {
                what: "sieve limit",
                value: limit as f64,
                limit: SIEVE_HARD_LIMIT as f64,
            });
        }
        let n = limit as usize;
        let mut mu = vec![0i8; n + 1];
        mu[1] = 1;
        let mut is_comp = vec![false; n + 1];
        let mut primes: Vec<usize> = Vec::new();
        for i in 2..=n {
            if !is_comp[i] {
                primes.push(i);
                mu[i] = -1;
            }
            for &p in &primes {
                let ip = i * p;
                if ip > n {
                    break;
                }
                is_comp[ip] = true;
                if i % p == 0 {
                    mu[ip] = 0; // p^2 | ip
                    break;
                }
                mu[ip] = -mu[i];
            }
        }
        Ok(Self { limit, mu })
    }

    #[inline]
    pub fn mu(&self, n: u64) -> i8 {
        self.mu[n as usize]
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Partial sums of mu, for sanity checks (|M(N)| <= N always holds).
    pub fn mertens(&self, upto: u64) -> i64 {
        self.mu[1..=upto.min(self.limit) as usize]
            .iter()
            .map(|&v| v as i64)
            .sum()
    }

    /// Binary layout: 8-byte magic, u64 little-endian limit, then mu(1..=limit)
    /// as raw i8. Written atomically via a sibling temp file.
    pub fn write_cache(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(CACHE_MAGIC)?;
            f.write_all(&self.limit.to_le_bytes())?;
            // i8 -> u8 is a bit reinterpretation
            let bytes: &[u8] = unsafe {
                std::slice::from_raw_parts(self.mu[1..].as_ptr() as *const u8, self.limit as usize)
            };
            f.write_all(bytes)?;
        }
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn read_cache(path: &Path) -> Result<Self> {
        let mut f = std::fs::File::open(path)?;
        let mut magic = [0u8; 8];
        f.read_exact(&mut magic)?;
        if &magic != CACHE_MAGIC {
            return Err(Error::Cache(format!("bad magic in {}", path.display())));
        }
        let mut lim = [0u8; 8];
        f.read_exact(&mut lim)?;
        let limit = u64::from_le_bytes(lim);
        if limit == 0 || limit > SIEVE_HARD_LIMIT {
            return Err(Error::Cache(format!("implausible cached limit {limit}")));
        }
        let mut body = Vec::with_capacity(limit as usize + 1);
        body.push(0i8);
        let mut raw = Vec::with_capacity(limit as usize);
        f.read_to_end(&mut raw)?;
        if raw.len() != limit as usize {
            return Err(Error::Cache(format!(
                "cached body is {} bytes, expected {limit}",
                raw.len()
            )));
        }
        for b in raw {
            let v = b as i8;
            if !(-1..=1).contains(&v) {
                return Err(Error::Cache("mu value outside {-1,0,1}".into()));
            }
            body.push(v);
        }
        if body[1] != 1 {
            return Err(Error::Cache("mu(1) != 1".into()));
        }
        Ok(Self { limit, mu: body })
    }
}

/// One mollifier summand: mu(n) with its smoothing weight log(x/n).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Coefficient {
    pub n: u32,
    pub mu: i8,
    /// log(x/n), which is >= 0 for n <= x and vanishes as n enters at x.
    pub weight: f64,
}

/// Coefficient table of the length-x mollifier: the squarefree n <= x with
/// their weights. Empty for x <= 1 (the mollifier is the zero function there).
#[derive(Clone, Debug)]
pub struct CoefficientTable {
    x: f64,
    log_x: f64,
    entries: Vec<Coefficient>,
}

impl CoefficientTable {
    pub fn build(x: f64, mobius: &MobiusTable) -> Result<Self> {
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::Domain(format!("mollifier length x = {x}")));
        }
        if x <= 1.0 {
            return Ok(Self {
                x,
                log_x: 0.0,
                entries: Vec::new(),
            });
        }
        let top = x.floor() as u64;
        if top > mobius.limit() {
            return Err(Error::Sizing {
                what: "mollifier length vs sieve limit",
                value: x,
                limit: mobius.limit() as f64,
            });
        }
        let log_x = x.ln();
        let mut entries = Vec::with_capacity((top as usize * 61) / 100 + 2);
        for n in 1..=top {
            let mu = mobius.mu(n);
            if mu != 0 {
                entries.push(Coefficient {
                    n: n as u32,
                    mu,
                    weight: log_x - (n as f64).ln(),
                });
            }
        }
        Ok(Self { x, log_x, entries })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// log x; 0 for the empty (x <= 1) table.
    pub fn log_x(&self) -> f64 {
        self.log_x
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Coefficient] {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Trial-division oracle, written before the sieve and deliberately slow.
    fn mu_trial(n: u64) -> i8 {
        if n == 1 {
            return 1;
        }
        let mut m = n;
        let mut k = 0u32;
        let mut d = 2u64;
        while d * d <= m {
            if m % d == 0 {
                m /= d;
                if m % d == 0 {
                    return 0;
                }
                k += 1;
            }
            d += 1;
        }
        if m > 1 {
            k += 1;
        }
        if k % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn sieve_matches_definition_small() {
        let t = MobiusTable::sieve(60).unwrap();
        assert_eq!(t.mu(1), 1);
        assert_eq!(t.mu(2), -1);
        assert_eq!(t.mu(4), 0);
        assert_eq!(t.mu(6), 1);
        assert_eq!(t.mu(12), 0);
        assert_eq!(t.mu(30), -1);
        assert_eq!(t.mu(49), 0);
    }

    #[test]
    fn sieve_matches_trial_division_to_20000() {
        let t = MobiusTable::sieve(20_000).unwrap();
        for n in 1..=20_000u64 {
            assert_eq!(t.mu(n), mu_trial(n), "mu({n})");
        }
    }

    #[test]
    fn mertens_bound_and_spot_value() {
        let t = MobiusTable::sieve(10_000).unwrap();
        for upto in [10u64, 100, 1000, 10_000] {
            assert!(t.mertens(upto).unsigned_abs() <= upto);
        }
        let oracle: i64 = (1..=10_000u64).map(|n| mu_trial(n) as i64).sum();
        assert_eq!(t.mertens(10_000), oracle);
    }

    #[test]
    fn sieve_rejects_bad_limits() {
        assert!(matches!(
            MobiusTable::sieve(0),
            Err(Error::Sizing { .. })
        ));
        assert!(matches!(
            MobiusTable::sieve(SIEVE_HARD_LIMIT + 1),
            Err(Error::Sizing { .. })
        ));
    }

    #[test]
    fn cache_roundtrip_and_validation() {
        let dir = std::env::temp_dir().join(format!("mml-arith-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("mu.bin");
        let t = MobiusTable::sieve(5000).unwrap();
        t.write_cache(&path).unwrap();
        let back = MobiusTable::read_cache(&path).unwrap();
        assert_eq!(t, back);

        // corrupt the magic
        let mut bytes = std::fs::read(&path).unwrap();
        bytes[0] ^= 0xff;
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(MobiusTable::read_cache(&path), Err(Error::Cache(_))));

        // truncated body
        bytes[0] ^= 0xff;
        bytes.truncate(bytes.len() - 7);
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(MobiusTable::read_cache(&path), Err(Error::Cache(_))));
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn coefficients_drop_non_squarefree_and_weight_zero_at_entry() {
        let t = MobiusTable::sieve(16).unwrap();
        let c = CoefficientTable::build(10.5, &t).unwrap();
        let ns: Vec<u32> = c.entries().iter().map(|e| e.n).collect();
        assert_eq!(ns, vec![1, 2, 3, 5, 6, 7, 10]);
        for e in c.entries() {
            assert!((e.weight - (10.5f64 / e.n as f64).ln()).abs() < 1e-15);
        }

        // exactly at an integer the entering term has weight 0
        let c2 = CoefficientTable::build(2.0, &t).unwrap();
        assert_eq!(c2.entries().len(), 2);
        assert_eq!(c2.entries()[1].n, 2);
        assert_eq!(c2.entries()[1].weight, 0.0);
    }

    #[test]
    fn coefficients_empty_at_and_below_one() {
        let t = MobiusTable::sieve(4).unwrap();
        assert!(CoefficientTable::build(1.0, &t).unwrap().is_empty());
        assert!(CoefficientTable::build(0.25, &t).unwrap().is_empty());
        assert!(CoefficientTable::build(-1.0, &t).is_err());
        assert!(CoefficientTable::build(f64::NAN, &t).is_err());
    }

    #[test]
    fn coefficients_continuous_in_x() {
        let t = MobiusTable::sieve(64).unwrap();
        let a = CoefficientTable::build(37.25, &t).unwrap();
        let b = CoefficientTable::build(37.25 + 1e-9, &t).unwrap();
        assert_eq!(a.entries().len(), b.entries().len());
        let shift = ((37.25 + 1e-9) / 37.25f64).ln();
        for (ea, eb) in a.entries().iter().zip(b.entries()) {
            assert_eq!(ea.n, eb.n);
            assert!((eb.weight - ea.weight - shift).abs() < 1e-15);
        }
    }

    #[test]
    fn coefficient_table_needs_big_enough_sieve() {
        let t = MobiusTable::sieve(8).unwrap();
        assert!(matches!(
            CoefficientTable::build(9.5, &t),
            Err(Error::Sizing { .. })
        ));
    }
}
