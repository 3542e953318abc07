//! Output styles for trees and groves.

use clap::ValueEnum;

use crate::grove::Grove;
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Style {
    /// `.` and `(l r)`, groves as `{t1, t2}`.
    #[default]
    Canonical,
    /// Combs as `L<k>`/`R<k>` and total groves as `@n`.
    Shorthand,
    /// Drawings with the leaves on top and the root at the bottom.
    Ascii,
}

pub fn format_tree(t: &Tree, style: Style) -> String {
    match style {
        Style::Canonical => t.to_string(),
        Style::Shorthand => t.shorthand(),
        Style::Ascii => render_ascii(t),
    }
}

pub fn format_value(g: &Grove, style: Style) -> String {
    match style {
        Style::Canonical => g.to_string(),
        Style::Shorthand if g.is_total() && g.degree() >= 2 => format!("@{}", g.degree()),
        Style::Shorthand => match g.as_tree() {
            Some(t) => t.shorthand(),
            None => {
                let parts: Vec<String> = g.iter().map(Tree::shorthand).collect();
                format!("{{{}}}", parts.join(", "))
            }
        },
        Style::Ascii => {
            let blocks: Vec<String> = g.iter().map(render_ascii).collect();
            blocks.join("\n\n")
        }
    }
}

/// Leaf `i` sits at column `2i` of the top row; a vertex over leaves `i..=j`
/// sits at column `i + j`, `j - i` rows down.
pub fn render_ascii(t: &Tree) -> String {
    let height = t.degree() as usize;
    let width = 2 * height + 1;
    let mut grid = vec![vec![' '; width]; height + 2];
    fn draw(t: &Tree, first_leaf: usize, grid: &mut [Vec<char>]) -> usize {
        let Some((l, r)) = t.parts() else {
            return first_leaf;
        };
        let mid = draw(l, first_leaf, grid);
        let last = draw(r, mid + 1, grid);
        let (row, col) = (last - first_leaf, first_leaf + last);
        grid[row][col] = 'o';
        let left_row = mid - first_leaf;
        for s in 1..=(row - left_row) {
            if s < row - left_row || l.is_leaf() {
                grid[row - s][col - s] = '\\';
            }
        }
        let right_row = last - (mid + 1);
        for s in 1..=(row - right_row) {
            if s < row - right_row || r.is_leaf() {
                grid[row - s][col + s] = '/';
            }
        }
        last
    }
    draw(t, 0, &mut grid);
    grid[height + 1][height] = '|';
    let lines: Vec<String> = grid
        .iter()
        .skip(if t.is_leaf() { 1 } else { 0 })
        .map(|row| row.iter().collect::<String>().trim_end().to_string())
        .collect();
    lines.join("\n")
}
