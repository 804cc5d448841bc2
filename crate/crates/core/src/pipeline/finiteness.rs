use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

/// The cover that bounds the number of low-degree points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cover {
    /// A degree-`m` map to the projective line.
    Gonal { m: u64 },
    /// A degree-`m` map to a curve of genus `gprime`.
    Relative { m: u64, gprime: u64 },
}

impl Cover {
    pub fn degree(&self) -> u64 {
        match *self {
            Cover::Gonal { m } | Cover::Relative { m, .. } => m,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessInput {
    pub g: u64,
    pub cover: Cover,
    pub d: u64,
    pub jq_finite: bool,
    pub j_simple: bool,
}

impl FinitenessInput {
    pub fn validate(&self) -> Result<(), String> {
        match self.cover {
            Cover::Gonal { m } | Cover::Relative { m, .. } if m < 2 => Err("cover degree m must be at least 2".into()),
            Cover::Relative { gprime: 0, .. } => Err("relative cover needs gprime >= 1".into()),
            _ if self.d < 2 => Err("degree d must be at least 2".into()),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Finite {
    /// Finitely many points of degree `d`.
    Yes,
    /// Finitely many primitive points of degree `d`; nothing said about the rest.
    PrimitiveOnly,
    Unknown,
}

/// Which arithmetic hypothesis on the Jacobian was used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    /// `J(Q)` is finite.
    FiniteMordellWeil,
    /// `d <= g - 1` and `J` is simple.
    SimpleJacobian,
}

/// Trace of the checks behind a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessReason {
    /// `g > bound` must hold.
    pub bound: u64,
    pub inequality: bool,
    /// Gonal covers exclude `d = m`.
    pub d_equals_m: bool,
    pub hypothesis: Option<Hypothesis>,
    pub gcd_one: bool,
    pub d_prime: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessVerdict {
    pub degree_d_finite: Finite,
    pub reason: FinitenessReason,
}

/// `gX > m gY + n gZ + (m - 1)(n - 1)`: two maps of degrees `m` and `n` from
/// a curve of genus `gX` cannot be independent, so they factor through a
/// common map.
pub fn cs_bound(gx: u64, gy: u64, gz: u64, m: u64, n: u64) -> bool {
    gx > m * gy + n * gz + (m - 1) * (n - 1)
}

pub fn classify_finiteness(inp: &FinitenessInput) -> FinitenessVerdict {
    let d = inp.d;
    let m = inp.cover.degree();
    let gcd_one = d.gcd(&m) == 1;
    let d_prime = is_prime(d);
    let (bound, d_equals_m, hypothesis) = match inp.cover {
        Cover::Gonal { m } => {
            let hyp = if inp.jq_finite {
                Some(Hypothesis::FiniteMordellWeil)
            } else if d < inp.g && inp.j_simple {
                Some(Hypothesis::SimpleJacobian)
            } else {
                None
            };
            ((m - 1) * (d - 1), d == m, hyp)
        }
        Cover::Relative { m, gprime } => {
            let hyp = inp.jq_finite.then_some(Hypothesis::FiniteMordellWeil);
            (m * gprime + (m - 1) * (d - 1), false, hyp)
        }
    };
    let inequality = inp.g > bound;
    let degree_d_finite = if !inequality || d_equals_m || hypothesis.is_none() {
        Finite::Unknown
    } else if gcd_one || d_prime {
        Finite::Yes
    } else {
        Finite::PrimitiveOnly
    };
    FinitenessVerdict {
        degree_d_finite,
        reason: FinitenessReason { bound, inequality, d_equals_m, hypothesis, gcd_one, d_prime },
    }
}

/// One row of a finiteness table: a curve, its cover and a degree range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub label: String,
    pub g: u64,
    pub cover: Cover,
    pub jq_finite: bool,
    pub j_simple: bool,
    pub d_min: u64,
    pub d_max: u64,
}

/// Degrees in the row's range with finitely many points, and those with
/// only finitely many primitive points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableVerdict {
    pub label: String,
    pub finite: Vec<u64>,
    pub primitive_only: Vec<u64>,
}

pub fn classify_row(row: &TableRow) -> TableVerdict {
    let mut finite = Vec::new();
    let mut primitive_only = Vec::new();
    for d in row.d_min.max(2)..=row.d_max {
        let v = classify_finiteness(&FinitenessInput {
            g: row.g,
            cover: row.cover,
            d,
            jq_finite: row.jq_finite,
            j_simple: row.j_simple,
        });
        match v.degree_d_finite {
            Finite::Yes => finite.push(d),
            Finite::PrimitiveOnly => primitive_only.push(d),
            Finite::Unknown => {}
        }
    }
    TableVerdict { label: row.label.clone(), finite, primitive_only }
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}
