// Sums over pairwise-distinct tuples recovered from unrestricted sums on
// each set partition.
use primefrac::partition::{distinct_sum_by_inversion, enumerate_partitions, shape_weights};

pub fn run() -> primefrac::Result<()> {
    for p in enumerate_partitions(3)? {
        println!("{:?}  mu = {}", p.blocks, p.mu);
    }
    for (shape, w) in shape_weights(4)? {
        println!("shape {shape:?}: total weight {w}");
    }

    let domain = [2u64, 3, 5, 7];
    let f = |t: &[u64]| (t[0] * t[1] + t[2]) as i64;
    let total = distinct_sum_by_inversion(f, 3, &domain, 0i64, 1_000_000)?;
    let mut direct = 0;
    for &a in &domain {
        for &b in &domain {
            for &c in &domain {
                if a != b && b != c && a != c {
                    direct += f(&[a, b, c]);
                }
            }
        }
    }
    println!("distinct-tuple sum: {total} (direct {direct})");
    assert_eq!(total, direct);
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
