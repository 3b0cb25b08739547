//! Generators for the benchmark families, plus a tiny spec language so
//! the CLI can name them: `chain(4)`, `cycle(6,0.7)`, `layered(3,2)`.

use crate::degree::Degree;
use crate::framework::Faf;

fn d8() -> Degree {
    Degree::ratio(4, 5).unwrap()
}

fn d9() -> Degree {
    Degree::ratio(9, 10).unwrap()
}

/// A chain of `k` mutual-attack pairs: within pair `i`, `xi` attacks `yi`
/// at 0.8 and `yi` attacks back at 0.9; `yi` attacks `x(i+1)` at 0.8.
/// All argument degrees are 0.8. Each pair is one strongly connected
/// component, so the condensation is a path of `k` nodes.
pub fn chain(k: usize) -> Faf {
    let mut args = Vec::with_capacity(2 * k);
    let mut attacks = Vec::with_capacity(3 * k);
    for i in 1..=k {
        args.push((format!("x{i}"), d8()));
        args.push((format!("y{i}"), d8()));
        attacks.push((format!("x{i}"), format!("y{i}"), d8()));
        attacks.push((format!("y{i}"), format!("x{i}"), d9()));
        if i < k {
            attacks.push((format!("y{i}"), format!("x{}", i + 1), d8()));
        }
    }
    Faf::new(args, attacks).expect("generated chain is valid")
}

/// A directed attack cycle `a1 -> a2 -> ... -> an -> a1` with attack
/// degree `d`; all argument degrees are 0.8. `n = 1` yields a single
/// self-attacker.
pub fn cycle(n: usize, d: Degree) -> Faf {
    let args: Vec<(String, Degree)> = (1..=n).map(|i| (format!("a{i}"), d8())).collect();
    let attacks: Vec<(String, String, Degree)> = (1..=n)
        .map(|i| (format!("a{i}"), format!("a{}", if i == n { 1 } else { i + 1 }), d))
        .collect();
    Faf::new(args, attacks).expect("generated cycle is valid")
}

/// `depth` layers of `w` arguments each; every argument attacks every
/// argument of the next layer at 0.9. Argument degrees are 0.8. All
/// components are singletons, so this is a pure DAG workload.
pub fn layered(w: usize, depth: usize) -> Faf {
    let mut args = Vec::with_capacity(w * depth);
    let mut attacks = Vec::new();
    for r in 1..=depth {
        for c in 1..=w {
            args.push((format!("l{r}_{c}"), d8()));
        }
    }
    for r in 1..depth {
        for c in 1..=w {
            for c2 in 1..=w {
                attacks.push((format!("l{r}_{c}"), format!("l{}_{c2}", r + 1), d9()));
            }
        }
    }
    Faf::new(args, attacks).expect("generated layers are valid")
}

/// Parses a generator spec: `chain(k)`, `cycle(n,degree)`, or
/// `layered(width,depth)`. Counts must be at least 1; the cycle degree
/// must be in (0,1].
pub fn from_spec(spec: &str) -> Result<Faf, String> {
    let spec = spec.trim();
    let open = spec.find('(').ok_or_else(|| format!("malformed generator spec `{spec}`"))?;
    let Some(inner) = spec[open..].strip_prefix('(').and_then(|r| r.strip_suffix(')')) else {
        return Err(format!("malformed generator spec `{spec}`"));
    };
    let name = &spec[..open];
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    let count = |s: &str| -> Result<usize, String> {
        let n: usize = s.parse().map_err(|_| format!("`{s}` is not a count"))?;
        if n == 0 {
            return Err(format!("count must be at least 1 in `{spec}`"));
        }
        Ok(n)
    };
    match (name, parts.as_slice()) {
        ("chain", [k]) => Ok(chain(count(k)?)),
        ("cycle", [n, d]) => {
            let d: Degree = d.parse().map_err(|e| format!("cycle degree: {e}"))?;
            if d.is_zero() {
                return Err("cycle degree must be positive".to_string());
            }
            Ok(cycle(count(n)?, d))
        }
        ("layered", [w, depth]) => Ok(layered(count(w)?, count(depth)?)),
        _ => Err(format!("unknown generator spec `{spec}`")),
    }
}
