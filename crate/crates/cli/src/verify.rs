//! Verification suite: recomputes published values and cross-checks the
//! independent methods, bypassing the cache.

use std::time::{Duration, Instant};

use floorcount::enumeration::{count_complex, count_real_rational};
use floorcount::formulas::{closed_count, genus_max, kontsevich};
use num_bigint::BigUint;

/// First values of N(d, g), by degree, for genus 0, 1, 2, 3.
pub const N_TABLE: [[u64; 4]; 4] = [[1, 0, 0, 0], [1, 0, 0, 0], [12, 1, 0, 0], [620, 225, 27, 1]];
pub const N_RATIONAL: [u64; 7] = [1, 1, 12, 620, 87304, 26312976, 14616808192];
pub const W_RATIONAL: [u64; 7] = [1, 1, 8, 240, 18264, 2845440, 792731520];

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub source: &'static str,
    pub computed: String,
    pub pass: bool,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default)]
pub struct VerifySuiteResult {
    pub checks: Vec<Check>,
}

impl VerifySuiteResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Fixed-width table, without timings so the output is reproducible.
    pub fn table(&self) -> String {
        let header = ["check", "expected", "source", "computed", "result"].map(String::from);
        let rows: Vec<[String; 5]> = self
            .checks
            .iter()
            .map(|c| {
                [
                    c.name.clone(),
                    c.expected.clone(),
                    c.source.to_string(),
                    c.computed.clone(),
                    if c.pass { "pass" } else { "FAIL" }.to_string(),
                ]
            })
            .collect();
        let mut width: [usize; 5] = std::array::from_fn(|i| header[i].len());
        for r in &rows {
            for (w, cell) in width.iter_mut().zip(r) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: &[String; 5]| {
            let mut s = String::new();
            for (i, (cell, w)) in cells.iter().zip(width).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                s.push_str(&format!("{cell:<w$}"));
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(&header);
        out.push_str(&line(&width.map(|w| "-".repeat(w))));
        for r in &rows {
            out.push_str(&line(r));
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        out.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        out
    }
}

struct Suite {
    result: VerifySuiteResult,
}

impl Suite {
    fn check(
        &mut self,
        name: String,
        expected: impl ToString,
        source: &'static str,
        compute: impl FnOnce() -> Result<BigUint, String>,
    ) {
        let expected = expected.to_string();
        let start = Instant::now();
        let (computed, pass) = match compute() {
            Ok(v) => {
                let v = v.to_string();
                let pass = v == expected;
                (v, pass)
            }
            Err(e) => (format!("error: {e}"), false),
        };
        self.result.checks.push(Check {
            name,
            expected,
            source,
            computed,
            pass,
            elapsed: start.elapsed(),
        });
    }

    fn predicate(&mut self, name: String, expected: &str, source: &'static str, holds: impl FnOnce() -> Result<(bool, String), String>) {
        let start = Instant::now();
        let (computed, pass) = match holds() {
            Ok((ok, shown)) => (shown, ok),
            Err(e) => (format!("error: {e}"), false),
        };
        self.result.checks.push(Check {
            name,
            expected: expected.to_string(),
            source,
            computed,
            pass,
            elapsed: start.elapsed(),
        });
    }
}

pub fn run(max_degree: u32) -> VerifySuiteResult {
    let mut s = Suite {
        result: VerifySuiteResult::default(),
    };
    let table = "published table of N(d,g)";
    let rational = "published table of N(d,0)";
    let welschinger = "published table of W(d)";
    for d in 1..=max_degree.min(4) {
        for g in 0..=3 {
            let want = N_TABLE[d as usize - 1][g as usize];
            s.check(format!("N({d},{g}) by diagrams"), want, table, || {
                Ok(count_complex(d, g).value)
            });
        }
    }
    for d in 1..=max_degree {
        let published = N_RATIONAL.get(d as usize - 1).copied();
        match published {
            Some(want) => {
                s.check(format!("N({d},0) by recursion"), want, rational, || {
                    kontsevich(d).map_err(|e| e.to_string())
                });
                if d > 4 {
                    s.check(format!("N({d},0) by diagrams"), want, rational, || {
                        Ok(count_complex(d, 0).value)
                    });
                }
            }
            None => {
                let want = kontsevich(d).map(|v| v.to_string()).unwrap_or_default();
                s.check(format!("N({d},0) by diagrams"), want, "recursion", || {
                    Ok(count_complex(d, 0).value)
                });
            }
        }
    }
    for d in 1..=max_degree.min(W_RATIONAL.len() as u32) {
        let want = W_RATIONAL[d as usize - 1];
        s.check(format!("W({d}) by diagrams"), want, welschinger, || {
            Ok(count_real_rational(d).value)
        });
    }
    for d in 1..=max_degree {
        s.predicate(
            format!("W({d}) = N({d},0) mod 4"),
            "congruent",
            "congruence mod 4",
            || {
                let w = count_real_rational(d).value;
                let n = count_complex(d, 0).value;
                let four = BigUint::from(4u32);
                let (a, b) = (&w % &four, &n % &four);
                Ok((a == b, format!("{a} and {b}")))
            },
        );
    }
    for d in 3..=max_degree {
        let g = genus_max(d) - 1;
        let want = closed_count(d, 1).map(|v| v.to_string()).unwrap_or_default();
        s.check(format!("N({d},{g}) by diagrams"), want, "one-node formula", || {
            Ok(count_complex(d, g).value)
        });
    }
    for d in 4..=max_degree {
        let g = genus_max(d) - 2;
        let want = closed_count(d, 2).map(|v| v.to_string()).unwrap_or_default();
        s.check(format!("N({d},{g}) by diagrams"), want, "two-node formula", || {
            Ok(count_complex(d, g).value)
        });
    }
    for d in 1..=max_degree {
        let g = genus_max(d);
        s.check(format!("N({d},{g}) by diagrams"), 1, "smooth curves", || {
            Ok(count_complex(d, g).value)
        });
    }
    s.result
}
