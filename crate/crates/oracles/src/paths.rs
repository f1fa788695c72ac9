//! Independent checker for essentiality certificates: rebuilds the loop
//! level by level from the raw crossing words and inspects it.

use hakensum::shift_calculus::{Certificate, EulerData, Side};

fn oriented(word: &[i8], reversed: bool) -> Vec<i64> {
    if reversed {
        word.iter().rev().map(|&c| -(c as i64)).collect()
    } else {
        word.iter().map(|&c| c as i64).collect()
    }
}

/// Checks a certificate against the crossing words of both sides.
pub fn check(
    cert: &Certificate,
    prime: &[Vec<i8>],
    dblprime: &[Vec<i8>],
    euler: &EulerData,
) -> Result<(), String> {
    match cert {
        Certificate::ZeroSide { side, n, .. } => {
            let words = match side {
                Side::Prime => prime,
                Side::DoublePrime => dblprime,
            };
            if words.iter().any(|w| w.iter().map(|&c| c as i64).sum::<i64>() != 0) {
                return Err("ZeroSide on a side with a nonzero shift".into());
            }
            let euler_side = match side {
                Side::Prime => euler.k_prime,
                Side::DoublePrime => euler.k_dblprime,
            };
            if euler.k >= 0 || euler.k_prime + euler.k_dblprime != euler.k {
                return Err("euler data inconsistent".into());
            }
            if euler_side < euler.h + *n as i64 * euler.k {
                return Err("euler inequality fails".into());
            }
            Ok(())
        }
        Certificate::DualCurve {
            i,
            n,
            prime_index,
            dblprime_index,
            prime_reversed,
            dblprime_reversed,
            prime_starts,
            dblprime_starts,
            ..
        } => {
            let wp = oriented(prime.get(prime_index - 1).ok_or("no such beta'")?, *prime_reversed);
            let wd = oriented(dblprime.get(dblprime_index - 1).ok_or("no such beta''")?, *dblprime_reversed);
            let (n, i) = (*n as i64, *i as i64);

            // Walk δ' forwards from the first start, then δ'' backwards.
            let start = *prime_starts.first().ok_or("empty delta'")? as i64;
            let mut level = start;
            let mut marks = vec![level];
            for _ in prime_starts {
                for &c in &wp {
                    level += c;
                    if level < 1 || level > n {
                        return Err(format!("delta' leaves [1, {n}] at {level}"));
                    }
                }
                marks.push(level);
            }
            let top = level;
            // δ'' run forwards from its own first start must land on the same top.
            let mut up = *dblprime_starts.first().ok_or("empty delta''")? as i64;
            let mut dmarks = vec![up];
            for _ in dblprime_starts {
                for &c in &wd {
                    up += c;
                    if up < 1 || up > n {
                        return Err(format!("delta'' leaves [1, {n}] at {up}"));
                    }
                }
                dmarks.push(up);
            }
            if dmarks[0] != start || up != top {
                return Err(format!("loop does not close: delta' {start}->{top}, delta'' {}->{up}", dmarks[0]));
            }
            for (l, &s) in prime_starts.iter().enumerate() {
                if s as i64 != marks[l] {
                    return Err("delta' starts do not chain".into());
                }
            }
            for (l, &s) in dblprime_starts.iter().enumerate() {
                if s as i64 != dmarks[l] {
                    return Err("delta'' starts do not chain".into());
                }
            }
            // Base points on the loop: all of δ', then the interior of δ''.
            let mut points = marks;
            points.extend_from_slice(&dmarks[1..dmarks.len() - 1]);
            let mut sorted = points.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != points.len() {
                return Err("loop passes a base point twice".into());
            }
            let hits = points.iter().filter(|&&p| p == i).count();
            if hits != 1 {
                return Err(format!("loop passes level {i} {hits} times"));
            }
            Ok(())
        }
    }
}
