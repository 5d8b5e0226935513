//! Plain-text drawings of Young diagrams and Hasse diagrams.

use stcore::{GapPoset, Partition};

/// Hook lengths of every cell, one line per row, right-aligned in columns.
/// The empty partition draws as no lines.
pub fn young(p: &Partition) -> Vec<String> {
    let grid = p.hook_lengths();
    let width = grid.max().map_or(1, |m| m.to_string().len());
    grid.rows()
        .iter()
        .map(|row| row.iter().map(|h| format!("{h:>width$}")).collect::<Vec<_>>().join(" "))
        .collect()
}

/// Hasse diagram with the largest gap on top. Each element `a` has
/// `a - t` drawn below-left and `a - s` below-right, so the rows of `T_s`
/// are its ranks, top rank first.
pub fn hasse(poset: &GapPoset) -> Vec<String> {
    if poset.is_empty() {
        return Vec::new();
    }
    let s = poset.s();
    let label = poset.gaps().iter().map(|g| g.to_string().len()).max().unwrap_or(1);
    // element centers sit `step` columns apart in a row's lattice
    let step = label + 1;

    let placed: Vec<(u64, usize, i64)> = poset
        .gaps()
        .iter()
        .map(|&a| {
            let (i, j) = poset.grid_position(a).expect("gap");
            (a, (i + j) as usize, i as i64 - j as i64)
        })
        .collect();
    let depth = placed.iter().map(|p| p.1).max().unwrap_or(0);
    let xmin = placed.iter().map(|p| p.2).min().unwrap_or(0);
    let center = |x: i64| (x - xmin) as usize * step + label / 2;

    let mut lines = Vec::with_capacity(2 * depth + 1);
    for d in 0..=depth {
        let mut row: Vec<char> = Vec::new();
        let mut edges: Vec<char> = Vec::new();
        for &(a, _, x) in placed.iter().filter(|p| p.1 == d) {
            let text = format!("{a:>label$}");
            let start = center(x) + label / 2 + 1 - label;
            put(&mut row, start, &text);
            for b in poset.covers_down(a).expect("gap") {
                if a - b == s {
                    put(&mut edges, center(x) + step / 2, "\\");
                } else {
                    put(&mut edges, center(x) - step / 2, "/");
                }
            }
        }
        lines.push(row.into_iter().collect::<String>().trim_end().to_string());
        if d < depth {
            lines.push(edges.into_iter().collect::<String>().trim_end().to_string());
        }
    }
    lines
}

fn put(line: &mut Vec<char>, at: usize, text: &str) {
    for (k, ch) in text.chars().enumerate() {
        if line.len() <= at + k {
            line.resize(at + k + 1, ' ');
        }
        line[at + k] = ch;
    }
}
