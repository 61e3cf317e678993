use thiserror::Error;

use super::Color;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListColoringError {
    #[error("cycle has odd length {0}")]
    OddCycle(usize),
    #[error("edge {edge} has only {size} distinct colors available")]
    ListTooSmall { edge: usize, size: usize },
}

/// Colors the edges `e_0 .. e_{m-1}` of an even cycle, where `e_i` meets
/// `e_{i-1}` and `e_{i+1}` (indices mod `m`), each from its own list.
///
/// Every list is cut down to its two smallest colors. If all lists agree the
/// two colors simply alternate. Otherwise some `e_i` gets a color its
/// predecessor cannot take, and the rest of the cycle is filled greedily
/// starting from `e_{i+1}`; the last edge never clashes with `e_i`.
pub fn color_even_cycle_from_lists(lists: &[Vec<Color>]) -> Result<Vec<Color>, ListColoringError> {
    let m = lists.len();
    if m % 2 == 1 {
        return Err(ListColoringError::OddCycle(m));
    }
    let mut pairs = Vec::with_capacity(m);
    for (edge, l) in lists.iter().enumerate() {
        let lo = l.iter().copied().min();
        let next = l.iter().copied().filter(|&c| Some(c) != lo).min();
        match (lo, next) {
            (Some(a), Some(b)) => pairs.push([a, b]),
            _ => {
                return Err(ListColoringError::ListTooSmall {
                    edge,
                    size: lo.is_some() as usize,
                })
            }
        }
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    let Some(start) = (0..m).find(|&i| pairs[i] != pairs[(i + m - 1) % m]) else {
        return Ok((0..m).map(|i| pairs[0][i % 2]).collect());
    };
    let prev = pairs[(start + m - 1) % m];
    let mut out = vec![0; m];
    out[start] = *pairs[start]
        .iter()
        .find(|c| !prev.contains(c))
        .expect("lists differ");
    for step in 1..m {
        let i = (start + step) % m;
        let before = out[(i + m - 1) % m];
        out[i] = if pairs[i][0] != before {
            pairs[i][0]
        } else {
            pairs[i][1]
        };
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn proper(lists: &[Vec<Color>], out: &[Color]) -> bool {
        let m = lists.len();
        out.len() == m && (0..m).all(|i| lists[i].contains(&out[i]) && out[i] != out[(i + 1) % m])
    }

    #[test]
    fn equal_lists_alternate() {
        let lists = vec![vec![3, 1]; 6];
        assert_eq!(
            color_even_cycle_from_lists(&lists).unwrap(),
            vec![1, 3, 1, 3, 1, 3]
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            color_even_cycle_from_lists(&vec![vec![1, 2]; 5]),
            Err(ListColoringError::OddCycle(5))
        );
        assert_eq!(
            color_even_cycle_from_lists(&[vec![1, 2], vec![2, 2], vec![1, 3], vec![2, 3]]),
            Err(ListColoringError::ListTooSmall { edge: 1, size: 1 })
        );
    }

    #[test]
    fn larger_lists_are_trimmed() {
        let lists = vec![vec![1, 2, 3], vec![2, 3], vec![1, 3], vec![5, 4, 2]];
        let out = color_even_cycle_from_lists(&lists).unwrap();
        assert!(proper(&lists, &out));
    }

    proptest! {
        #[test]
        fn any_two_lists_on_even_cycles(
            half in 2usize..8,
            raw in prop::collection::vec((1u32..7, 1u32..7, prop::collection::vec(1u32..9, 0..3)), 16),
        ) {
            let lists: Vec<Vec<Color>> = raw
                .into_iter()
                .take(2 * half)
                .map(|(a, b, mut extra)| {
                    let b = if a == b { a % 6 + 1 } else { b };
                    extra.extend([a, b]);
                    extra
                })
                .collect();
            let out = color_even_cycle_from_lists(&lists).unwrap();
            prop_assert!(proper(&lists, &out));
        }
    }
}
