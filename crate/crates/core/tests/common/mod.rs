#![allow(dead_code)]

use plr_atop::generators::{derive_seed, gen_set_a, gen_set_b, RngStream};
use plr_atop::PartialLatinRectangle;

/// Every partial Latin rectangle with the given dimensions.
pub fn all_plrs(r: usize, s: usize, n: usize) -> Vec<PartialLatinRectangle> {
    let cells = r * s;
    let mut out = Vec::new();
    let mut code = vec![0usize; cells];
    loop {
        let grid = code.iter().map(|&c| c.checked_sub(1)).collect();
        if let Ok(l) = PartialLatinRectangle::from_cells(r, s, n, grid) {
            out.push(l);
        }
        let mut pos = 0;
        loop {
            if pos == cells {
                return out;
            }
            code[pos] += 1;
            if code[pos] <= n {
                break;
            }
            code[pos] = 0;
            pos += 1;
        }
    }
}

/// Set A and set B samples at `(r, s, n)`, with the entry parameter cycling
/// through its full range.
pub fn random_suite(
    r: usize,
    s: usize,
    n: usize,
    count: usize,
    seed: u64,
) -> Vec<PartialLatinRectangle> {
    let mut out = Vec::new();
    for i in 0..count as u64 {
        let x = (i as usize) % (r * s + 1);
        let mut a = RngStream::new(derive_seed(seed, &[0, i]));
        out.push(gen_set_a(r, s, n, 2 * x, &mut a));
        let mut b = RngStream::new(derive_seed(seed, &[1, i]));
        out.push(gen_set_b(r, s, n, x, &mut b).expect("valid parameters"));
    }
    out
}
