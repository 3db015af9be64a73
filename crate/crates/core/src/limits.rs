//! Process-wide lattice size cap for exhaustive enumeration.

use std::sync::atomic::{AtomicU32, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_BIT_CAP: u32 = 16;

/// Environment variable read by front ends to override the cap.
pub const BIT_CAP_ENV: &str = "SOFTTOPO_BITCAP";

static BIT_CAP: AtomicU32 = AtomicU32::new(DEFAULT_BIT_CAP);

pub fn bit_cap() -> u32 {
    BIT_CAP.load(Ordering::Relaxed)
}

/// Values above 32 are clamped; enumerating more than 2^32 sets is not useful.
pub fn set_bit_cap(cap: u32) {
    BIT_CAP.store(cap.min(32), Ordering::Relaxed);
}

pub fn check_bits(bits: u32) -> Result<()> {
    let cap = bit_cap();
    if bits > cap {
        Err(Error::BitCapExceeded { bits, cap })
    } else {
        Ok(())
    }
}
