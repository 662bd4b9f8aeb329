use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Order used by the high-order variants unless overridden.
pub const DEFAULT_ORDER_M: u32 = 1024;
/// Number of order-1 sweeps C-11mm runs before switching to order `m`.
pub const DEFAULT_WARMUP: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// Synchronous order-2 sweeps with a shadow array, change-flag exit.
    CSyn,
    C1,
    C2,
    Cm,
    /// `warmup` order-1 sweeps, then order `m`.
    C11mm,
    /// Order 1 on odd sweeps, order `m` on even sweeps.
    C1m1m,
}

impl Variant {
    pub const ALL: [Variant; 6] = [
        Variant::CSyn,
        Variant::C1,
        Variant::C2,
        Variant::Cm,
        Variant::C11mm,
        Variant::C1m1m,
    ];

    fn uses_m(self) -> bool {
        matches!(self, Variant::Cm | Variant::C11mm | Variant::C1m1m)
    }

    /// Short lowercase name used on the command line.
    pub fn flag_name(self) -> &'static str {
        match self {
            Variant::CSyn => "csyn",
            Variant::C1 => "c1",
            Variant::C2 => "c2",
            Variant::Cm => "cm",
            Variant::C11mm => "c11mm",
            Variant::C1m1m => "c1m1m",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::CSyn => "C-Syn",
            Variant::C1 => "C-1",
            Variant::C2 => "C-2",
            Variant::Cm => "C-m",
            Variant::C11mm => "C-11mm",
            Variant::C1m1m => "C-1m1m",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    /// Accepts `C-2`, `c2`, `C-Syn`, `csyn`, ... case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .collect::<String>()
            .to_ascii_lowercase();
        Variant::ALL
            .into_iter()
            .find(|v| v.flag_name() == key)
            .ok_or_else(|| Error::param(format!("unknown contour variant `{s}`")))
    }
}

/// A Contour variant plus its execution flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Schedule {
    variant: Variant,
    m: u32,
    warmup: usize,
    sync: bool,
    atomic: bool,
    early_check: bool,
}

/// Builds the default schedule for `variant`.
///
/// C-Syn is synchronous, atomic and exits on the change flag only. The
/// other variants default to asynchronous plain-store sweeps with the early
/// convergence check enabled.
pub fn make_schedule(variant: Variant, m: u32, warmup: usize) -> Result<Schedule> {
    if variant.uses_m() && m < 2 {
        return Err(Error::param(format!("{variant} needs order m >= 2, got {m}")));
    }
    if variant == Variant::C11mm && warmup < 1 {
        return Err(Error::param("C-11mm needs at least one warmup sweep"));
    }
    let csyn = variant == Variant::CSyn;
    Ok(Schedule {
        variant,
        m,
        warmup,
        sync: csyn,
        atomic: csyn,
        early_check: !csyn,
    })
}

impl Schedule {
    pub fn new(variant: Variant) -> Self {
        make_schedule(variant, DEFAULT_ORDER_M, DEFAULT_WARMUP).expect("defaults are valid")
    }

    /// Operator order for sweep `k` (1-based).
    pub fn order_for(&self, k: usize) -> u32 {
        match self.variant {
            Variant::C1 => 1,
            Variant::C2 | Variant::CSyn => 2,
            Variant::Cm => self.m,
            Variant::C11mm if k <= self.warmup => 1,
            Variant::C11mm => self.m,
            Variant::C1m1m if k % 2 == 1 => 1,
            Variant::C1m1m => self.m,
        }
    }

    /// C-Syn cannot be made asynchronous.
    pub fn with_sync(mut self, sync: bool) -> Result<Self> {
        if self.variant == Variant::CSyn && !sync {
            return Err(Error::param("C-Syn is synchronous only"));
        }
        self.sync = sync;
        Ok(self)
    }

    pub fn with_atomic(mut self, atomic: bool) -> Self {
        self.atomic = atomic;
        self
    }

    pub fn with_early_check(mut self, early_check: bool) -> Self {
        self.early_check = early_check;
        self
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn warmup(&self) -> usize {
        self.warmup
    }

    pub fn is_sync(&self) -> bool {
        self.sync
    }

    pub fn is_atomic(&self) -> bool {
        self.atomic
    }

    pub fn early_check(&self) -> bool {
        self.early_check
    }
}
