//! Literal, unoptimised transcriptions of the algorithms on plain slices.

/// Items, profits and capacity as plain data.
#[derive(Debug, Clone)]
pub struct Items {
    pub w: Vec<f64>,
    pub p: Vec<f64>,
    pub b: f64,
}

/// Greedy over `seq` (0-based item ids) with capacity `b`:
/// returns (packed, value, remaining capacity).
pub fn greedy(items: &Items, seq: &[usize], b: f64) -> (Vec<usize>, f64, f64) {
    let mut s = Vec::new();
    let mut bbar = b;
    let mut u = 0.0;
    for &i in seq {
        if items.w[i] <= bbar {
            s.push(i);
            bbar -= items.w[i];
            u += items.p[i];
        } else {
            return (s, u, bbar);
        }
    }
    (s, u, bbar)
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Consecutive rollout, one greedy call per branch per item.
pub fn consecutive(items: &Items) -> (Vec<usize>, f64) {
    let mut s = Vec::new();
    let mut ibar = identity(items.w.len());
    let mut bbar = items.b;
    let mut u = 0.0;
    for i in 0..items.w.len() {
        let u_plus = greedy(items, &ibar, bbar).1;
        let without: Vec<usize> = ibar.iter().copied().filter(|&x| x != i).collect();
        let u_minus = greedy(items, &without, bbar).1;
        if u_plus > u_minus {
            s.push(i);
            bbar -= items.w[i];
            u += items.p[i];
        }
        ibar = without;
    }
    (s, u)
}

/// Exhaustive rollout running all `n` outer iterations, with no early exit.
pub fn exhaustive(items: &Items) -> (Vec<usize>, f64) {
    let n = items.w.len();
    let mut s = Vec::new();
    let mut ibar = identity(n);
    let mut bbar = items.b;
    let mut u = 0.0;
    for _t in 0..n {
        let mut best: Option<(usize, f64)> = None;
        for &i in &ibar {
            let mut seq = vec![i];
            seq.extend(ibar.iter().copied().filter(|&x| x != i));
            let ui = greedy(items, &seq, bbar).1;
            match best {
                Some((_, bu)) if ui <= bu => {}
                _ => best = Some((i, ui)),
            }
        }
        if let Some((istar, ustar)) = best {
            if ustar > 0.0 {
                s.push(istar);
                ibar.retain(|&x| x != istar);
                bbar -= items.w[istar];
                u += items.p[istar];
            }
        }
    }
    (s, u)
}

/// (greedy gap, min over move-to-front gaps, max gain floored at 0).
pub fn first_exhaustive(items: &Items) -> (f64, f64, f64) {
    let n = items.w.len();
    let (_, gv, gg) = greedy(items, &identity(n), items.b);
    let mut min_gap = gg;
    let mut gain: f64 = 0.0;
    for j in 0..n {
        let mut seq = vec![j];
        seq.extend((0..n).filter(|&x| x != j));
        let (_, v, g) = greedy(items, &seq, items.b);
        min_gap = min_gap.min(g);
        gain = gain.max(v - gv);
    }
    (gg, min_gap, gain)
}

/// Best feasible subset by trying all 2^n masks.
pub fn brute_force(items: &Items) -> f64 {
    let n = items.w.len();
    assert!(n <= 20);
    let mut best: f64 = 0.0;
    for mask in 0u32..(1 << n) {
        let (mut w, mut p) = (0.0, 0.0);
        for i in 0..n {
            if mask >> i & 1 == 1 {
                w += items.w[i];
                p += items.p[i];
            }
        }
        if w <= items.b {
            best = best.max(p);
        }
    }
    best
}
